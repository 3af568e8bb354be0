#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "graphseq/types.hpp"

namespace graphseq {

// Walks every non-increasing sequence of length n with entries in
// [min_entry, max_entry], in lexicographic order:
//
//   DecreasingSequences it(3, 2);
//   do { use(it.current()); } while (it.next());
class DecreasingSequences {
public:
    DecreasingSequences(std::int64_t n, degree_t max_entry, degree_t min_entry = 1);

    std::span<const degree_t> current() const noexcept { return cur_; }
    DegreeSequence sequence() const { return normalize(cur_); }

    // Advances to the next sequence; false once the last one was current.
    bool next();

private:
    std::vector<degree_t> cur_;
    degree_t min_;
    degree_t max_;
};

// Materialized form of DecreasingSequences for small parameters.
std::vector<DegreeSequence> enumerate_decreasing_sequences(std::int64_t n, degree_t max_entry);

// Degree multisets (non-increasing, zeros included) of all 2^(n(n-1)/2)
// labeled simple graphs on n vertices. Throws error{limit_exceeded} unless
// 1 <= n <= 7.
std::set<std::vector<degree_t>> brute_force_realizable(std::int64_t n);

struct Counterexample {
    std::string kind;
    std::vector<std::int64_t> inputs;
    std::string detail;

    friend auto operator<=>(const Counterexample& x, const Counterexample& y) {
        if (auto c = x.inputs <=> y.inputs; c != 0)
            return c;
        if (auto c = x.kind <=> y.kind; c != 0)
            return c;
        return x.detail <=> y.detail;
    }
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct SweepReport {
    std::string mode;
    std::map<std::string, std::int64_t> range;
    std::map<std::string, std::uint64_t> counts;
    // Sorted by input tuple. At most max_recorded entries are kept; the
    // "counterexamples" count always has the true total.
    std::vector<Counterexample> counterexamples;
    std::int64_t duration_ms = 0;

    static constexpr std::size_t max_recorded = 1000;

    bool clean() const;
    std::uint64_t count(const std::string& key) const;
    void add_counterexample(Counterexample c);
    // Sums counts and unions counterexamples; timing is added.
    void merge(const SweepReport& other);
};

// Identical counts and counterexamples; range, mode and timing ignored.
bool same_results(const SweepReport& x, const SweepReport& y);

struct SweepOptions {
    unsigned jobs = 1;
    // Only work items with index % shard_count == shard_index are run.
    std::int64_t shard_index = 0;
    std::int64_t shard_count = 1;
};

// Erdos-Gallai, r_k and Havel-Hakimi must agree on every non-increasing
// sequence with n <= max_n and entries <= max_entry. For n <= 7 the
// Erdos-Gallai verdicts are also compared against graph enumeration.
SweepReport sweep_oracle_equivalence(std::int64_t max_n, degree_t max_entry, const SweepOptions& opt = {});

// For every n <= max_n, the positive degree multisets of all labeled graphs
// on n vertices coincide with the Erdos-Gallai accepted sequences with
// entries <= n. Limited to max_n <= 7.
SweepReport sweep_ground_truth(std::int64_t max_n, const SweepOptions& opt = {});

// Both directions of the sharp bound over b < a < n <= max_n: failing
// triples get a verified witness, passing triples admit no two-valued
// counterexample and, for n <= 10, no counterexample at all.
SweepReport sweep_sharpness(std::int64_t max_n, const SweepOptions& opt = {});

// Per-case reformulation equals the sharp bound for 1 <= a, b, n <= max_n;
// cases are disjoint and exhaustive.
SweepReport sweep_case_equivalence(std::int64_t max_n, const SweepOptions& opt = {});

// Two-valued verdict equals Erdos-Gallai on the expanded sequence for all
// b < a < n <= max_n, 0 < s < n with even sum.
SweepReport sweep_two_element(std::int64_t max_n, const SweepOptions& opt = {});

// discriminant >= 0 implies delta_k >= 0 for every k in [s, n], and the
// converse, for all b < a < n <= max_n and 0 < s < n.
SweepReport sweep_delta_lemma(std::int64_t max_n, const SweepOptions& opt = {});

}  // namespace graphseq
