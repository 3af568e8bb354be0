#include "graphseq/json_io.hpp"

#include <sstream>

namespace graphseq {

using nlohmann::json;

json to_json(const DegreeSequence& seq) {
    return json{
        {"entries", json(std::vector<degree_t>(seq.entries().begin(), seq.entries().end()))},
        {"n", seq.n()},
        {"a", seq.a()},
        {"b", seq.b()},
        {"sum", seq.sum()},
        {"sum_parity", seq.even_sum() ? "even" : "odd"},
        {"run_length", format_sequence(seq)},
    };
}

json to_json(const Triple& t) {
    return json{{"a", t.a}, {"b", t.b}, {"n", t.n}, {"strict", t.strict()}};
}

json to_json(const Verdict& v) {
    json j{{"graphic", v.graphic}, {"reason", std::string(to_string(v.reason))}};
    if (v.k)
        j["k"] = *v.k;
    return j;
}

json to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges())
        edges.push_back(json::array({u, v}));
    return json{{"n", g.n()}, {"edges", std::move(edges)}};
}

json to_json(const StrongIndexProfile& p) {
    json nj = json::array();
    for (const auto& [j, c] : p.n_j)
        nj.push_back(json::array({j, c}));
    json rk = json::array();
    for (const auto& [k, r] : p.r_k)
        rk.push_back(json::array({k, r}));
    return json{{"k_m", p.k_m}, {"n_j", std::move(nj)}, {"r_k", std::move(rk)}};
}

json to_json(const WitnessReport& w) {
    return json{
        {"triple", to_json(w.triple)},
        {"case", std::string(to_string(w.label))},
        {"s", w.s},
        {"sequence", to_json(w.sequence)},
        {"nongraphic_certificate", w.nongraphic_certificate},
        {"first_failing_index", w.first_failing_index},
    };
}

json to_json(const Counterexample& c) {
    return json{{"type", "counterexample"}, {"kind", c.kind}, {"inputs", c.inputs}, {"detail", c.detail}};
}

json summary_json(const SweepReport& r, bool include_timing) {
    json j{
        {"type", "summary"},
        {"mode", r.mode},
        {"range", r.range},
        {"counts", r.counts},
        {"clean", r.clean()},
    };
    if (include_timing)
        j["duration_ms"] = r.duration_ms;
    return j;
}

std::string to_jsonl(const SweepReport& r, bool include_timing) {
    std::ostringstream out;
    for (const auto& c : r.counterexamples)
        out << to_json(c).dump() << '\n';
    out << summary_json(r, include_timing).dump() << '\n';
    return out.str();
}

std::string edge_list_text(const Graph& g) {
    std::ostringstream out;
    for (const auto& [u, v] : g.edges())
        out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace graphseq
