#include "graphseq/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <thread>

#include <CLI11.hpp>

#include "graphseq/bounds.hpp"
#include "graphseq/graphicality.hpp"
#include "graphseq/json_io.hpp"
#include "graphseq/sweep.hpp"
#include "graphseq/two_element.hpp"
#include "graphseq/witness.hpp"

namespace graphseq::cli {

namespace {

using nlohmann::json;

std::string verdict_text(const Verdict& v) {
    std::string s = v.graphic ? "graphic" : "nongraphic";
    s += " ";
    s += to_string(v.reason);
    if (v.k)
        s += " k=" + std::to_string(*v.k);
    return s;
}

std::string triple_text(const Triple& t) {
    return "a=" + std::to_string(t.a) + " b=" + std::to_string(t.b) + " n=" + std::to_string(t.n);
}

int cmd_check(const std::string& text, bool as_json, std::ostream& out) {
    const auto seq = parse_sequence(text);
    const auto eg = erdos_gallai(seq);
    const auto rk = zz_rk_criterion(seq);
    const auto profile = strong_index_profile(seq);
    const auto failing = eg_failing_indices(seq);

    if (as_json) {
        out << json{
                   {"sequence", to_json(seq)},
                   {"erdos_gallai", to_json(eg)},
                   {"rk_criterion", to_json(rk)},
                   {"strong_index_profile", to_json(profile)},
                   {"eg_failing_indices", failing},
               }
                   .dump()
            << '\n';
    } else {
        out << "sequence: " << format_sequence(seq) << " (n=" << seq.n() << ", a=" << seq.a() << ", b=" << seq.b()
            << ", sum=" << seq.sum() << (seq.even_sum() ? " even" : " odd") << ")\n";
        out << "erdos_gallai: " << verdict_text(eg) << '\n';
        out << "rk_criterion: " << verdict_text(rk) << '\n';
        out << "strong_indices: k_m=" << profile.k_m;
        for (const auto& [k, r] : profile.r_k)
            out << " r_" << k << "=" << r;
        out << '\n';
        if (!failing.empty()) {
            out << "eg_failing_indices:";
            for (auto k : failing)
                out << ' ' << k;
            out << '\n';
        }
    }
    return eg.graphic ? affirmative : negative;
}

int cmd_realize(const std::string& text, bool as_json, std::ostream& out) {
    const auto seq = parse_sequence(text);
    const auto graph = havel_hakimi_realize(seq);
    if (as_json) {
        if (graph)
            out << to_json(*graph).dump() << '\n';
        else
            out << json{{"n", seq.n()}, {"result", "NOT_REALIZABLE"}}.dump() << '\n';
    } else {
        if (graph)
            out << edge_list_text(*graph);
        else
            out << "NOT_REALIZABLE\n";
    }
    return graph ? affirmative : negative;
}

int cmd_bound(std::int64_t a, std::int64_t b, std::int64_t n, bool as_json, std::ostream& out) {
    const auto t = Triple::make(a, b, n);
    const bool zz = zz_sufficient(t);
    const bool sharp = sharp_sufficient(t);
    const auto label = classify_case(t);
    const degree_t threshold = sharp_threshold(a, b);
    const degree_t square = (a + b + 1) * (a + b + 1);

    if (as_json) {
        out << json{
                   {"triple", to_json(t)},
                   {"case", std::string(to_string(label))},
                   {"zz_sufficient", zz},
                   {"sharp_sufficient", sharp},
                   {"case_inequality_holds", case_inequality_holds(t)},
                   {"sharp_threshold", threshold},
                   {"nb", n * b},
                   {"four_nb", 4 * n * b},
                   {"square", square},
               }
                   .dump()
            << '\n';
    } else {
        out << "triple: " << triple_text(t) << (t.strict() ? " (b < a < n)" : "") << '\n';
        out << "case: " << to_string(label) << '\n';
        out << "zz_bound: " << (zz ? "true" : "false") << " (4nb = " << 4 * n * b
            << (zz ? " >= " : " < ") << "(a+b+1)^2 = " << square << ")\n";
        out << "sharp_threshold: " << threshold << '\n';
        out << "sharp_bound: " << (sharp ? "true" : "false") << " (nb = " << n * b << (sharp ? " >= " : " < ")
            << threshold << ")\n";
    }
    return sharp ? affirmative : negative;
}

int cmd_two_element(std::int64_t a, std::int64_t b, std::int64_t n, std::int64_t s, bool as_json,
                    std::ostream& out, std::ostream& err) {
    const auto v = two_element_graphic(a, b, n, s);
    std::optional<degree_t> disc;
    if (v.reason != verdict_reason::out_of_domain)
        disc = discriminant(TwoElementSpec{a, b, n, s});

    if (as_json) {
        json j{{"a", a}, {"b", b}, {"n", n}, {"s", s}, {"verdict", to_json(v)}};
        j["discriminant"] = disc ? json(*disc) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << "verdict: " << verdict_text(v) << '\n';
        if (disc)
            out << "discriminant: " << *disc << '\n';
    }
    if (v.reason == verdict_reason::out_of_domain) {
        err << "two-element: needs 1 <= b < a < n and 0 < s < n"
            << (a == b ? "; use `uniform` for a = b" : "") << '\n';
        return usage_error;
    }
    return v.graphic ? affirmative : negative;
}

int cmd_uniform(std::int64_t a, std::int64_t n, bool as_json, std::ostream& out) {
    Triple::make(a, a, n);
    const auto v = uniform_graphic(a, n);
    if (as_json)
        out << json{{"a", a}, {"n", n}, {"verdict", to_json(v)}}.dump() << '\n';
    else
        out << "verdict: " << verdict_text(v) << '\n';
    return v.graphic ? affirmative : negative;
}

int cmd_witness(std::int64_t a, std::int64_t b, std::int64_t n, bool as_json, std::ostream& out,
                std::ostream& err) {
    const auto t = Triple::make(a, b, n);
    try {
        const auto w = construct_witness(t);
        if (as_json) {
            out << to_json(w).dump() << '\n';
        } else {
            out << "triple: " << triple_text(t) << '\n';
            out << "case: " << to_string(w.label) << '\n';
            out << "s: " << w.s << '\n';
            out << "sequence: " << format_sequence(w.sequence) << '\n';
            out << "certificate: k=" << w.nongraphic_certificate << " (first failing k=" << w.first_failing_index
                << ")\n";
        }
        return affirmative;
    } catch (const error& e) {
        if (e.code() != error_code::bound_satisfied)
            throw;
        if (as_json)
            out << json{{"triple", to_json(t)}, {"result", "BOUND_SATISFIED"}}.dump() << '\n';
        err << "witness: " << e.what() << '\n';
        return negative;
    }
}

struct SweepArgs {
    std::string mode;
    std::int64_t max_n = 0;
    std::int64_t max_entry = 0;
    unsigned jobs = 0;
    std::int64_t shard_index = 0;
    std::int64_t shard_count = 1;
    std::string out_path;
};

unsigned default_jobs() {
    if (const char* env = std::getenv("GRAPHSEQ_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

int cmd_sweep(const SweepArgs& args, bool as_json, std::ostream& out, std::ostream& err) {
    SweepOptions opt;
    opt.jobs = args.jobs != 0 ? args.jobs : default_jobs();
    opt.shard_index = args.shard_index;
    opt.shard_count = args.shard_count;
    const std::int64_t max_entry = args.max_entry != 0 ? args.max_entry : args.max_n;

    SweepReport report;
    if (args.mode == "oracle")
        report = sweep_oracle_equivalence(args.max_n, max_entry, opt);
    else if (args.mode == "sharpness")
        report = sweep_sharpness(args.max_n, opt);
    else if (args.mode == "cases")
        report = sweep_case_equivalence(args.max_n, opt);
    else if (args.mode == "ground-truth")
        report = sweep_ground_truth(args.max_n, opt);
    else if (args.mode == "two-element")
        report = sweep_two_element(args.max_n, opt);
    else if (args.mode == "delta")
        report = sweep_delta_lemma(args.max_n, opt);

    if (!args.out_path.empty()) {
        std::ofstream file(args.out_path);
        if (!file) {
            err << "sweep: cannot write " << args.out_path << '\n';
            return usage_error;
        }
        file << to_jsonl(report);
    }

    if (as_json) {
        out << to_jsonl(report);
    } else {
        out << "mode: " << report.mode << '\n';
        for (const auto& [key, value] : report.range)
            out << "range." << key << ": " << value << '\n';
        for (const auto& [key, value] : report.counts)
            out << key << ": " << value << '\n';
        for (const auto& c : report.counterexamples) {
            out << "counterexample " << c.kind << " (";
            for (std::size_t i = 0; i < c.inputs.size(); ++i)
                out << (i ? "," : "") << c.inputs[i];
            out << ") " << c.detail << '\n';
        }
        out << "duration_ms: " << report.duration_ms << '\n';
        out << (report.clean() ? "clean" : "COUNTEREXAMPLES FOUND") << '\n';
    }
    return report.clean() ? affirmative : negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Graphicality of degree sequences and sharp (a, b, n) bounds", "graphseq"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Emit JSON instead of text");

    auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", as_json, "Emit JSON instead of text"); };

    std::string seq_text;
    auto* check = app.add_subcommand("check", "Erdos-Gallai and strong-index verdicts for a sequence");
    check->add_option("sequence", seq_text, "e.g. 3,3,1,1 or 5^3,2,1^3")->required();
    add_json(check);

    auto* realize = app.add_subcommand("realize", "Havel-Hakimi realization as an edge list");
    realize->add_option("sequence", seq_text, "e.g. 3,1,1,1")->required();
    add_json(realize);

    std::int64_t a = 0, b = 0, n = 0, s = 0;
    auto* bound = app.add_subcommand("bound", "Classical and sharp (a, b, n) sufficient bounds");
    bound->add_option("a", a, "maximal degree")->required();
    bound->add_option("b", b, "minimal degree")->required();
    bound->add_option("n", n, "sequence length")->required();
    add_json(bound);

    auto* two = app.add_subcommand("two-element", "Exact verdict for (a^s, b^(n-s))");
    two->add_option("a", a, "larger value")->required();
    two->add_option("b", b, "smaller value")->required();
    two->add_option("n", n, "sequence length")->required();
    two->add_option("s", s, "number of entries equal to a")->required();
    add_json(two);

    auto* uniform = app.add_subcommand("uniform", "Exact verdict for (a^n)");
    uniform->add_option("a", a, "value")->required();
    uniform->add_option("n", n, "sequence length")->required();
    add_json(uniform);

    auto* witness = app.add_subcommand("witness", "Nongraphic even-sum sequence for a triple failing the sharp bound");
    witness->add_option("a", a, "maximal degree")->required();
    witness->add_option("b", b, "minimal degree")->required();
    witness->add_option("n", n, "sequence length")->required();
    add_json(witness);

    SweepArgs sweep_args;
    auto* sweep = app.add_subcommand("sweep", "Exhaustive verification sweeps");
    sweep->add_option("--mode", sweep_args.mode, "Sweep to run")
        ->required()
        ->check(CLI::IsMember({"oracle", "sharpness", "cases", "ground-truth", "two-element", "delta"}));
    sweep->add_option("--max-n", sweep_args.max_n, "Largest n (or a, b, n for cases)")->required();
    sweep->add_option("--max-entry", sweep_args.max_entry, "Largest entry for the oracle sweep (default: max-n)");
    sweep->add_option("--jobs", sweep_args.jobs, "Worker threads (default: $GRAPHSEQ_JOBS or all cores)");
    sweep->add_option("--shard-index", sweep_args.shard_index, "Run only this shard");
    sweep->add_option("--shard-count", sweep_args.shard_count, "Number of shards");
    sweep->add_option("--out", sweep_args.out_path, "Write the JSON lines report here");
    add_json(sweep);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return affirmative;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return affirmative;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return usage_error;
    }

    try {
        if (*check)
            return cmd_check(seq_text, as_json, out);
        if (*realize)
            return cmd_realize(seq_text, as_json, out);
        if (*bound)
            return cmd_bound(a, b, n, as_json, out);
        if (*two)
            return cmd_two_element(a, b, n, s, as_json, out, err);
        if (*uniform)
            return cmd_uniform(a, n, as_json, out);
        if (*witness)
            return cmd_witness(a, b, n, as_json, out, err);
        if (*sweep)
            return cmd_sweep(sweep_args, as_json, out, err);
    } catch (const error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return usage_error;
    }
    err << app.help();
    return usage_error;
}

}  // namespace graphseq::cli
