#include "graphseq/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

#include "graphseq/bounds.hpp"
#include "graphseq/graphicality.hpp"
#include "graphseq/two_element.hpp"
#include "graphseq/witness.hpp"

namespace graphseq {

DecreasingSequences::DecreasingSequences(std::int64_t n, degree_t max_entry, degree_t min_entry)
    : min_(min_entry), max_(max_entry) {
    if (n < 1 || min_entry < 1 || max_entry < min_entry)
        throw error(error_code::out_of_domain, "enumeration needs n >= 1 and 1 <= min_entry <= max_entry");
    cur_.assign(static_cast<std::size_t>(n), min_entry);
}

bool DecreasingSequences::next() {
    // Bump the rightmost entry that can grow without exceeding its left
    // neighbour, then reset everything after it to the minimum.
    for (std::size_t i = cur_.size(); i-- > 0;) {
        const degree_t cap = i == 0 ? max_ : cur_[i - 1];
        if (cur_[i] < cap) {
            ++cur_[i];
            std::fill(cur_.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur_.end(), min_);
            return true;
        }
    }
    return false;
}

std::vector<DegreeSequence> enumerate_decreasing_sequences(std::int64_t n, degree_t max_entry) {
    std::vector<DegreeSequence> out;
    DecreasingSequences it(n, max_entry);
    do {
        out.push_back(it.sequence());
    } while (it.next());
    return out;
}

std::set<std::vector<degree_t>> brute_force_realizable(std::int64_t n) {
    if (n < 1 || n > 7)
        throw error(error_code::limit_exceeded,
                    "graph enumeration is limited to 1 <= n <= 7, got n=" + std::to_string(n));

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    const std::uint64_t graphs = std::uint64_t{1} << pairs.size();

    // Sorted degree vectors are encoded base 8 (degrees never exceed 6).
    std::vector<bool> seen(std::size_t{1} << (3 * n), false);
    std::array<int, 7> deg{};
    auto mark = [&] {
        std::array<int, 7> sorted = deg;
        std::sort(sorted.begin(), sorted.begin() + n, std::greater<>());
        std::size_t code = 0;
        for (int i = 0; i < n; ++i)
            code = code * 8 + static_cast<std::size_t>(sorted[static_cast<std::size_t>(i)]);
        seen[code] = true;
    };

    // Gray-code walk: consecutive graphs differ in exactly one edge.
    std::uint64_t present = 0;
    mark();
    for (std::uint64_t i = 1; i < graphs; ++i) {
        const int bit = __builtin_ctzll(i);
        const auto [u, v] = pairs[static_cast<std::size_t>(bit)];
        const int delta = (present >> bit) & 1 ? -1 : 1;
        present ^= std::uint64_t{1} << bit;
        deg[static_cast<std::size_t>(u)] += delta;
        deg[static_cast<std::size_t>(v)] += delta;
        mark();
    }

    std::set<std::vector<degree_t>> out;
    for (std::size_t code = 0; code < seen.size(); ++code) {
        if (!seen[code])
            continue;
        std::vector<degree_t> d(static_cast<std::size_t>(n));
        std::size_t c = code;
        for (std::int64_t i = n; i-- > 0;) {
            d[static_cast<std::size_t>(i)] = static_cast<degree_t>(c % 8);
            c /= 8;
        }
        out.insert(std::move(d));
    }
    return out;
}

bool SweepReport::clean() const {
    return count("counterexamples") == 0;
}

std::uint64_t SweepReport::count(const std::string& key) const {
    auto it = counts.find(key);
    return it == counts.end() ? 0 : it->second;
}

void SweepReport::add_counterexample(Counterexample c) {
    ++counts["counterexamples"];
    auto pos = std::lower_bound(counterexamples.begin(), counterexamples.end(), c);
    counterexamples.insert(pos, std::move(c));
    if (counterexamples.size() > max_recorded)
        counterexamples.pop_back();
}

void SweepReport::merge(const SweepReport& other) {
    for (const auto& [key, value] : other.counts)
        counts[key] += value;
    std::vector<Counterexample> all;
    all.reserve(counterexamples.size() + other.counterexamples.size());
    std::merge(counterexamples.begin(), counterexamples.end(), other.counterexamples.begin(),
               other.counterexamples.end(), std::back_inserter(all));
    if (all.size() > max_recorded)
        all.resize(max_recorded);
    counterexamples = std::move(all);
    duration_ms += other.duration_ms;
}

bool same_results(const SweepReport& x, const SweepReport& y) {
    return x.counts == y.counts && x.counterexamples == y.counterexamples;
}

namespace {

std::string describe(const Verdict& v) {
    std::string s(to_string(v.reason));
    if (v.k)
        s += "(" + std::to_string(*v.k) + ")";
    return s;
}

std::vector<std::int64_t> as_inputs(std::span<const degree_t> d) {
    return {d.begin(), d.end()};
}

// Runs fn(item, local_report) for every item in this shard on opt.jobs
// threads. Counts are summed and counterexamples kept sorted, so the merged
// report does not depend on scheduling.
template <typename Fn>
SweepReport run_items(std::string mode, std::map<std::string, std::int64_t> range, std::size_t item_count,
                      const SweepOptions& opt, Fn fn) {
    if (opt.shard_count < 1 || opt.shard_index < 0 || opt.shard_index >= opt.shard_count)
        throw error(error_code::out_of_domain, "shard index must lie in [0, shard_count)");

    const auto start = std::chrono::steady_clock::now();
    const unsigned jobs = std::max(1u, opt.jobs);
    std::vector<SweepReport> locals(jobs);
    std::atomic<std::size_t> next{0};

    auto worker = [&](unsigned w) {
        for (;;) {
            const std::size_t item = next.fetch_add(1);
            if (item >= item_count)
                return;
            if (static_cast<std::int64_t>(item % static_cast<std::size_t>(opt.shard_count)) != opt.shard_index)
                continue;
            fn(item, locals[w]);
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w)
            threads.emplace_back(worker, w);
        for (auto& t : threads)
            t.join();
    }

    SweepReport report;
    report.mode = std::move(mode);
    report.range = std::move(range);
    report.counts["counterexamples"] = 0;
    for (const auto& local : locals)
        report.merge(local);
    report.range["shard_index"] = opt.shard_index;
    report.range["shard_count"] = opt.shard_count;
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return report;
}

// (n, a) work items over 3 <= n <= max_n, 2 <= a < n; b ranges inside.
std::vector<std::pair<std::int64_t, degree_t>> strict_items(std::int64_t max_n) {
    std::vector<std::pair<std::int64_t, degree_t>> items;
    for (std::int64_t n = 3; n <= max_n; ++n)
        for (degree_t a = 2; a < n; ++a)
            items.emplace_back(n, a);
    return items;
}

void check_oracles(const DegreeSequence& seq, SweepReport& out) {
    const Verdict eg = erdos_gallai(seq);
    const Verdict rk = zz_rk_criterion(seq);
    const auto graph = havel_hakimi_realize(seq);
    ++out.counts["sequences"];
    ++out.counts[eg.graphic ? "graphic" : "nongraphic"];

    if (eg.graphic != rk.graphic || eg.graphic != graph.has_value()) {
        std::ostringstream detail;
        detail << "erdos_gallai=" << describe(eg) << " rk=" << describe(rk)
               << " havel_hakimi=" << (graph ? "realized" : "NOT_REALIZABLE");
        out.add_counterexample({"oracle_disagreement", as_inputs(seq.entries()), detail.str()});
    }
    if (graph) {
        auto deg = graph->degrees();
        std::sort(deg.begin(), deg.end(), std::greater<>());
        if (!std::equal(deg.begin(), deg.end(), seq.entries().begin(), seq.entries().end()))
            out.add_counterexample({"realization_degree_mismatch", as_inputs(seq.entries()), ""});
    }
}

void check_ground_truth(std::int64_t n, degree_t max_entry, SweepReport& out) {
    const auto realizable = brute_force_realizable(n);
    out.counts["graphs_enumerated"] += std::uint64_t{1} << (n * (n - 1) / 2);
    for (const auto& d : realizable) {
        if (d.back() >= 1 && d.front() <= max_entry)
            ++out.counts["positive_realizable_multisets"];
    }

    DecreasingSequences it(n, max_entry);
    do {
        const auto seq = it.sequence();
        const bool eg = erdos_gallai(seq).graphic;
        const std::vector<degree_t> key(seq.entries().begin(), seq.entries().end());
        const bool brute = realizable.contains(key);
        ++out.counts["ground_truth_sequences"];
        if (eg)
            ++out.counts["ground_truth_accepted"];
        if (eg != brute) {
            out.add_counterexample({"ground_truth_mismatch", key,
                                    std::string("erdos_gallai=") + (eg ? "graphic" : "nongraphic") +
                                        " enumeration=" + (brute ? "realizable" : "absent")});
        }
    } while (it.next());
}

}  // namespace

SweepReport sweep_oracle_equivalence(std::int64_t max_n, degree_t max_entry, const SweepOptions& opt) {
    if (max_n < 1 || max_entry < 1)
        throw error(error_code::out_of_domain, "oracle sweep needs max_n >= 1 and max_entry >= 1");

    // Items: (n, d_1) pairs, then one ground-truth item per n <= 7.
    std::vector<std::pair<std::int64_t, degree_t>> heads;
    for (std::int64_t n = 1; n <= max_n; ++n)
        for (degree_t d1 = 1; d1 <= max_entry; ++d1)
            heads.emplace_back(n, d1);
    const std::int64_t truth_n = std::min<std::int64_t>(max_n, 7);
    const std::size_t items = heads.size() + static_cast<std::size_t>(truth_n);

    return run_items("oracle", {{"max_n", max_n}, {"max_entry", max_entry}}, items, opt,
                     [&](std::size_t item, SweepReport& out) {
                         if (item >= heads.size()) {
                             check_ground_truth(static_cast<std::int64_t>(item - heads.size()) + 1, max_entry, out);
                             return;
                         }
                         const auto [n, d1] = heads[item];
                         if (n == 1) {
                             check_oracles(normalize({d1}), out);
                             return;
                         }
                         std::vector<degree_t> full(static_cast<std::size_t>(n));
                         full[0] = d1;
                         DecreasingSequences tail(n - 1, d1);
                         do {
                             std::copy(tail.current().begin(), tail.current().end(), full.begin() + 1);
                             check_oracles(normalize(full), out);
                         } while (tail.next());
                     });
}

SweepReport sweep_ground_truth(std::int64_t max_n, const SweepOptions& opt) {
    if (max_n < 1 || max_n > 7)
        throw error(error_code::limit_exceeded, "ground-truth sweep is limited to 1 <= max_n <= 7");
    return run_items("ground_truth", {{"max_n", max_n}}, static_cast<std::size_t>(max_n), opt,
                     [&](std::size_t item, SweepReport& out) {
                         const auto n = static_cast<std::int64_t>(item) + 1;
                         check_ground_truth(n, n, out);
                     });
}

SweepReport sweep_sharpness(std::int64_t max_n, const SweepOptions& opt) {
    if (max_n < 3)
        throw error(error_code::out_of_domain, "sharpness sweep needs max_n >= 3");
    const auto items = strict_items(max_n);

    return run_items("sharpness", {{"max_n", max_n}}, items.size(), opt, [&](std::size_t item, SweepReport& out) {
        const auto [n, a] = items[item];
        for (degree_t b = 1; b < a; ++b) {
            const Triple t{a, b, n};
            const std::vector<std::int64_t> key{a, b, n};
            ++out.counts["triples"];

            if (!sharp_sufficient(t)) {
                ++out.counts["bound_fails"];
                try {
                    const WitnessReport w = construct_witness(t);
                    const auto& seq = w.sequence;
                    ++out.counts["witness_case_" + std::string(to_string(w.label))];
                    const Verdict eg = erdos_gallai(seq);
                    if (seq.n() != n || seq.a() != a || seq.b() != b || !seq.even_sum() || eg.graphic) {
                        out.add_counterexample({"bad_witness", key, format_sequence(seq) + " " + describe(eg)});
                        continue;
                    }
                    if (w.label == case_label::IV) {
                        const auto failing = eg_failing_indices(seq);
                        if (std::find(failing.begin(), failing.end(), w.s) == failing.end())
                            out.add_counterexample({"case_iv_index", key, format_sequence(seq)});
                    } else {
                        const Verdict two = two_element_graphic(a, b, n, w.s);
                        if (two.reason != verdict_reason::discriminant_neg)
                            out.add_counterexample({"witness_two_element", key, describe(two)});
                    }
                } catch (const error& e) {
                    out.add_counterexample({"witness_error", key, std::string(to_string(e.code())) + ": " + e.what()});
                }
                continue;
            }

            ++out.counts["bound_holds"];
            for (std::int64_t s = 1; s < n; ++s) {
                const TwoElementSpec spec{a, b, n, s};
                if (spec.sum() % 2 != 0)
                    continue;
                ++out.counts["two_valued_checked"];
                if (discriminant(spec) < 0)
                    out.add_counterexample({"two_valued_counterexample", {a, b, n, s},
                                            "discriminant=" + std::to_string(discriminant(spec))});
            }

            if (n > 10)
                continue;
            std::vector<degree_t> full(static_cast<std::size_t>(n));
            full.front() = a;
            full.back() = b;
            DecreasingSequences middle(n - 2, a, b);
            do {
                std::copy(middle.current().begin(), middle.current().end(), full.begin() + 1);
                const auto seq = normalize(full);
                if (!seq.even_sum())
                    continue;
                ++out.counts["enumerated_checked"];
                const Verdict eg = erdos_gallai(seq);
                if (!eg.graphic)
                    out.add_counterexample({"sufficiency_counterexample", as_inputs(seq.entries()), describe(eg)});
            } while (middle.next());
        }
    });
}

SweepReport sweep_case_equivalence(std::int64_t max_n, const SweepOptions& opt) {
    if (max_n < 1)
        throw error(error_code::out_of_domain, "case sweep needs max_n >= 1");

    return run_items("cases", {{"max_n", max_n}}, static_cast<std::size_t>(max_n), opt,
                     [&](std::size_t item, SweepReport& out) {
                         const degree_t a = static_cast<degree_t>(item) + 1;
                         std::array<std::uint64_t, 4> per_case{};
                         std::uint64_t triples = 0, sharp = 0, zz = 0;
                         for (degree_t b = 1; b <= max_n; ++b) {
                             for (std::int64_t n = 1; n <= max_n; ++n) {
                                 const Triple t{a, b, n};
                                 ++triples;
                                 const auto p = case_predicates(t);
                                 const int hits = int(p[0]) + int(p[1]) + int(p[2]) + int(p[3]);
                                 if (hits != 1) {
                                     out.add_counterexample({hits == 0 ? "case_none" : "case_overlap", {a, b, n},
                                                             std::to_string(hits) + " predicates hold"});
                                     continue;
                                 }
                                 const auto label = classify_case(t);
                                 ++per_case[static_cast<std::size_t>(label)];

                                 const bool by_case = case_inequality_holds(t);
                                 const bool by_floor = sharp_sufficient(t);
                                 const bool classic = zz_sufficient(t);
                                 sharp += by_floor;
                                 zz += classic;
                                 if (by_case != by_floor)
                                     out.add_counterexample({"case_inequality_mismatch", {a, b, n},
                                                             std::string("case ") + std::string(to_string(label))});
                                 if (classic && !by_floor)
                                     out.add_counterexample({"refinement_violation", {a, b, n}, ""});

                                 // Equalities ruled out by parity in cases I and III with b odd.
                                 const degree_t lhs = (a + b + 1) * (a + b + 1);
                                 if (b % 2 == 1 && label == case_label::I && lhs == 4 * b * n + 4)
                                     out.add_counterexample({"case_i_equality", {a, b, n}, ""});
                                 if (b % 2 == 1 && label == case_label::III && lhs == 4 * b * n + 5)
                                     out.add_counterexample({"case_iii_equality", {a, b, n}, ""});
                             }
                         }
                         out.counts["triples"] += triples;
                         out.counts["case_I"] += per_case[0];
                         out.counts["case_II"] += per_case[1];
                         out.counts["case_III"] += per_case[2];
                         out.counts["case_IV"] += per_case[3];
                         out.counts["sharp_sufficient"] += sharp;
                         out.counts["zz_sufficient"] += zz;
                     });
}

SweepReport sweep_two_element(std::int64_t max_n, const SweepOptions& opt) {
    if (max_n < 3)
        throw error(error_code::out_of_domain, "two-element sweep needs max_n >= 3");
    const auto items = strict_items(max_n);

    return run_items("two_element", {{"max_n", max_n}}, items.size(), opt, [&](std::size_t item, SweepReport& out) {
        const auto [n, a] = items[item];
        for (degree_t b = 1; b < a; ++b) {
            for (std::int64_t s = 1; s < n; ++s) {
                const TwoElementSpec spec{a, b, n, s};
                if (spec.sum() % 2 != 0)
                    continue;
                ++out.counts["sequences"];
                const Verdict closed = two_element_graphic(spec);
                const Verdict eg = erdos_gallai(spec.expand());
                ++out.counts[closed.graphic ? "graphic" : "nongraphic"];
                if (closed.graphic != eg.graphic)
                    out.add_counterexample({"two_element_mismatch", {a, b, n, s},
                                            "closed_form=" + describe(closed) + " erdos_gallai=" + describe(eg)});
            }
        }
    });
}

SweepReport sweep_delta_lemma(std::int64_t max_n, const SweepOptions& opt) {
    if (max_n < 3)
        throw error(error_code::out_of_domain, "delta sweep needs max_n >= 3");
    const auto items = strict_items(max_n);

    return run_items("delta", {{"max_n", max_n}}, items.size(), opt, [&](std::size_t item, SweepReport& out) {
        const auto [n, a] = items[item];
        std::uint64_t specs = 0, nonneg = 0, evaluations = 0;
        for (degree_t b = 1; b < a; ++b) {
            for (std::int64_t s = 1; s < n; ++s) {
                const TwoElementSpec spec{a, b, n, s};
                ++specs;
                const bool disc_ok = discriminant(spec) >= 0;
                nonneg += disc_ok;
                bool all_ok = true;
                std::int64_t first_bad = 0;
                for (std::int64_t k = s; k <= n; ++k) {
                    ++evaluations;
                    if (delta_k(spec, k) < 0) {
                        all_ok = false;
                        first_bad = k;
                        break;
                    }
                }
                if (disc_ok != all_ok)
                    out.add_counterexample({"delta_lemma", {a, b, n, s},
                                            "discriminant=" + std::to_string(discriminant(spec)) +
                                                " first negative k=" + std::to_string(first_bad)});
            }
        }
        out.counts["specs"] += specs;
        out.counts["discriminant_nonnegative"] += nonneg;
        out.counts["delta_evaluations"] += evaluations;
    });
}

}  // namespace graphseq
