#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphseq {

using degree_t = std::int64_t;

// Upper bound on any single entry and on sequence length. With both capped at
// 2^20 every quantity computed in this library ((a+b+1)^2, 4bn, prefix sums,
// r_k) stays far below 2^63.
inline constexpr degree_t max_value = degree_t{1} << 20;

enum class error_code {
    empty_input,
    nonpositive_entry,
    value_too_large,
    parse_error,
    out_of_domain,
    bound_satisfied,
    internal_guard,
    internal_nonexhaustive,
    limit_exceeded,
};

std::string_view to_string(error_code code);

class error : public std::runtime_error {
public:
    error(error_code code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    error_code code() const noexcept { return code_; }

private:
    error_code code_;
};

enum class parity { even, odd };

// A non-increasing sequence of positive integers. Only constructible through
// normalize(), so the invariants hold for every instance.
class DegreeSequence {
public:
    std::span<const degree_t> entries() const noexcept { return entries_; }
    std::int64_t n() const noexcept { return static_cast<std::int64_t>(entries_.size()); }
    degree_t a() const noexcept { return entries_.front(); }
    degree_t b() const noexcept { return entries_.back(); }
    degree_t sum() const noexcept { return sum_; }
    parity sum_parity() const noexcept { return sum_ % 2 == 0 ? parity::even : parity::odd; }
    bool even_sum() const noexcept { return sum_ % 2 == 0; }

    // 1-based access, matching the d_1 >= ... >= d_n convention.
    degree_t operator[](std::int64_t i) const { return entries_[static_cast<std::size_t>(i - 1)]; }

    friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

    friend DegreeSequence normalize(std::vector<degree_t> raw);

private:
    explicit DegreeSequence(std::vector<degree_t> entries);

    std::vector<degree_t> entries_;
    degree_t sum_ = 0;
};

// Sorts into non-increasing order and validates. Throws error{empty_input},
// error{nonpositive_entry} or error{value_too_large}.
DegreeSequence normalize(std::vector<degree_t> raw);

// (a^s, b^t, ...) helper; runs are given as (value, count) pairs.
DegreeSequence from_runs(std::span<const std::pair<degree_t, std::int64_t>> runs);

struct Triple {
    degree_t a = 1;
    degree_t b = 1;
    std::int64_t n = 1;

    // Throws error{out_of_domain} unless all three are in [1, max_value].
    static Triple make(degree_t a, degree_t b, std::int64_t n);

    // b < a < n
    bool strict() const noexcept { return b < a && a < n; }

    friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class case_label { I, II, III, IV };

std::string_view to_string(case_label c);

enum class verdict_reason {
    even_sum_ok,
    odd_sum,
    eg_fail,
    rk_fail,
    discriminant_neg,
    out_of_domain,
};

std::string_view to_string(verdict_reason r);

struct Verdict {
    bool graphic = false;
    verdict_reason reason = verdict_reason::out_of_domain;
    // Failing index for eg_fail / rk_fail.
    std::optional<std::int64_t> k;

    static Verdict ok() { return {true, verdict_reason::even_sum_ok, std::nullopt}; }
    static Verdict odd_sum() { return {false, verdict_reason::odd_sum, std::nullopt}; }
    static Verdict eg_fail(std::int64_t k) { return {false, verdict_reason::eg_fail, k}; }
    static Verdict rk_fail(std::int64_t k) { return {false, verdict_reason::rk_fail, k}; }
    static Verdict discriminant_neg() { return {false, verdict_reason::discriminant_neg, std::nullopt}; }
    static Verdict out_of_domain() { return {false, verdict_reason::out_of_domain, std::nullopt}; }

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

// Simple undirected graph on vertices 1..n. Edges are stored with u < v and
// kept lexicographically sorted.
class Graph {
public:
    using edge = std::pair<std::int64_t, std::int64_t>;

    explicit Graph(std::int64_t n) : n_(n) {}

    // Same validation as add_edge, done in one sort.
    static Graph from_edges(std::int64_t n, std::vector<edge> edges);

    // Throws error{out_of_domain} on self-loops, duplicates or endpoints
    // outside [1, n].
    void add_edge(std::int64_t u, std::int64_t v);

    std::int64_t n() const noexcept { return n_; }
    const std::vector<edge>& edges() const noexcept { return edges_; }
    bool has_edge(std::int64_t u, std::int64_t v) const;

    // Degree of every vertex, indexed 0..n-1 for vertices 1..n.
    std::vector<degree_t> degrees() const;

private:
    std::int64_t n_;
    std::vector<edge> edges_;
};

struct StrongIndexProfile {
    std::int64_t k_m = 0;
    // value j -> number of entries equal to j, for every value that occurs.
    // Only j < n ever enters r_k.
    std::map<degree_t, std::int64_t> n_j;
    // strong index k -> r_k = sum_{i=1..k} (d_i + i * n_{k-i})
    std::map<std::int64_t, std::int64_t> r_k;
};

// Sequence text: comma separated tokens, each either `v` or `v^count`,
// surrounding whitespace allowed. Throws error{parse_error} on malformed
// tokens, plus the normalize() errors.
DegreeSequence parse_sequence(std::string_view text);

// Inverse of parse_sequence for normalized input; runs of three or more equal
// entries are written as `v^count`.
std::string format_sequence(const DegreeSequence& seq);

}  // namespace graphseq
