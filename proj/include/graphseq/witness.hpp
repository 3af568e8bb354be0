#pragma once

#include "graphseq/types.hpp"

namespace graphseq {

struct WitnessReport {
    Triple triple;
    case_label label = case_label::I;
    std::int64_t s = 0;
    DegreeSequence sequence;
    // The Erdos-Gallai inequality fails at k = s for every construction;
    // s is reported here after being checked.
    std::int64_t nongraphic_certificate = 0;
    // Smallest failing k; can be below s (e.g. 2 for 5^3,2,1^3).
    std::int64_t first_failing_index = 0;
};

// Canonical nongraphic even-sum sequence of length n with maximum a and
// minimum b, for a triple b < a < n that fails the sharp bound:
//   I   (a^s, b^{n-s}), s = (a+b+1)/2
//   II  (a^s, b^{n-s}), s = (a+b+3)/2
//   III (a^s, b^{n-s}), s = (a+b)/2
//   IV  (a^s, b+1, b^{n-s-1}), s = (a+b)/2
//
// Throws error{out_of_domain} unless b < a < n, error{bound_satisfied} if
// the sharp bound holds, and error{internal_guard} if the construction
// breaks any structural or certificate check.
WitnessReport construct_witness(const Triple& t);

}  // namespace graphseq
