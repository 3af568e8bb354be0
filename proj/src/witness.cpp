#include "graphseq/witness.hpp"

#include <algorithm>
#include <sstream>

#include "graphseq/bounds.hpp"
#include "graphseq/graphicality.hpp"

namespace graphseq {

namespace {

[[noreturn]] void guard_failure(const Triple& t, const std::string& what) {
    std::ostringstream msg;
    msg << "witness construction for (a=" << t.a << ", b=" << t.b << ", n=" << t.n << "): " << what;
    throw error(error_code::internal_guard, msg.str());
}

}  // namespace

WitnessReport construct_witness(const Triple& t) {
    if (!t.strict()) {
        std::ostringstream msg;
        msg << "witnesses exist only for b < a < n, got a=" << t.a << " b=" << t.b << " n=" << t.n;
        throw error(error_code::out_of_domain, msg.str());
    }
    if (sharp_sufficient(t)) {
        std::ostringstream msg;
        msg << "(a=" << t.a << ", b=" << t.b << ", n=" << t.n
            << ") satisfies the sharp bound; every even-sum sequence is graphic";
        throw error(error_code::bound_satisfied, msg.str());
    }

    const case_label label = classify_case(t);
    const degree_t a = t.a;
    const degree_t b = t.b;

    // Numerator of s and the parity it must have.
    degree_t twice_s = 0;
    switch (label) {
    case case_label::I: twice_s = a + b + 1; break;
    case case_label::II: twice_s = a + b + 3; break;
    case case_label::III:
    case case_label::IV: twice_s = a + b; break;
    }
    if (twice_s % 2 != 0)
        guard_failure(t, "s is not integral in case " + std::string(to_string(label)));
    const std::int64_t s = twice_s / 2;
    if (s <= 0 || s >= t.n)
        guard_failure(t, "s = " + std::to_string(s) + " outside (0, n)");

    std::vector<std::pair<degree_t, std::int64_t>> runs;
    if (label == case_label::IV) {
        const std::int64_t trailing = t.n - s - 1;
        if (trailing < 1)
            guard_failure(t, "case IV leaves no trailing b entries");
        runs = {{a, s}, {b + 1, 1}, {b, trailing}};
    } else {
        runs = {{a, s}, {b, t.n - s}};
    }
    DegreeSequence seq = from_runs(runs);

    if (seq.n() != t.n || seq.a() != a || seq.b() != b)
        guard_failure(t, "sequence shape does not match the triple");
    if (!seq.even_sum())
        guard_failure(t, "sequence sum is odd");
    const auto failing = eg_failing_indices(seq);
    if (failing.empty())
        guard_failure(t, "sequence " + format_sequence(seq) + " is graphic");
    if (!std::binary_search(failing.begin(), failing.end(), s))
        guard_failure(t, "inequality holds at k = s = " + std::to_string(s));

    return WitnessReport{t, label, s, std::move(seq), s, failing.front()};
}

}  // namespace graphseq
