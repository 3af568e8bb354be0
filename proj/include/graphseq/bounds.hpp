#pragma once

#include <array>

#include "graphseq/types.hpp"

namespace graphseq {

// Classical sufficient condition: 4nb >= (a+b+1)^2.
bool zz_sufficient(const Triple& t);

// floor((a+b+1)^2 / 4), minus one when b is odd or a+b = 1 (mod 4).
degree_t sharp_threshold(degree_t a, degree_t b);

// nb >= sharp_threshold(a, b). Tight for every (a, b, n).
bool sharp_sufficient(const Triple& t);

// The four residue patterns, in label order:
//   I   a+b+1 = 2bn   (mod 4)
//   II  a+b+1 = 2bn+2 (mod 4)
//   III a+b even, bn even
//   IV  n, a, b all odd
std::array<bool, 4> case_predicates(const Triple& t);

// Exactly one predicate holds for every triple. Throws
// error{internal_nonexhaustive} if none does.
case_label classify_case(const Triple& t);

// Per-case form of the sharp bound:
//   I: (a+b+1)^2 <= 4bn       II: (a+b+1)^2 <= 4bn+4
//   III: (a+b+1)^2 <= 4bn+1   IV: (a+b+1)^2 <= 4bn+5
bool case_inequality_holds(const Triple& t);

// Slack added to 4bn by case_inequality_holds for the given case.
degree_t case_slack(case_label c);

}  // namespace graphseq
