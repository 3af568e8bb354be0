#include "graphseq/bounds.hpp"

#include <cassert>

namespace graphseq {

namespace {

constexpr degree_t mod4(degree_t x) { return ((x % 4) + 4) % 4; }

constexpr degree_t square(degree_t x) { return x * x; }

}  // namespace

bool zz_sufficient(const Triple& t) {
    return 4 * t.n * t.b >= square(t.a + t.b + 1);
}

degree_t sharp_threshold(degree_t a, degree_t b) {
    const degree_t base = square(a + b + 1) / 4;
    if (b % 2 == 1 || mod4(a + b) == 1)
        return base - 1;
    return base;
}

bool sharp_sufficient(const Triple& t) {
    return t.n * t.b >= sharp_threshold(t.a, t.b);
}

std::array<bool, 4> case_predicates(const Triple& t) {
    const degree_t s = t.a + t.b + 1;
    const degree_t bn = t.b * t.n;
    return {
        mod4(s - 2 * bn) == 0,
        mod4(s - 2 * bn - 2) == 0,
        (t.a + t.b) % 2 == 0 && bn % 2 == 0,
        t.n % 2 == 1 && t.a % 2 == 1 && t.b % 2 == 1,
    };
}

case_label classify_case(const Triple& t) {
    const auto p = case_predicates(t);
#ifndef NDEBUG
    assert(int(p[0]) + int(p[1]) + int(p[2]) + int(p[3]) <= 1);
#endif
    if (p[0])
        return case_label::I;
    if (p[1])
        return case_label::II;
    if (p[2])
        return case_label::III;
    if (p[3])
        return case_label::IV;
    throw error(error_code::internal_nonexhaustive,
                "no case applies to (a=" + std::to_string(t.a) + ", b=" + std::to_string(t.b) +
                    ", n=" + std::to_string(t.n) + ")");
}

degree_t case_slack(case_label c) {
    switch (c) {
    case case_label::I: return 0;
    case case_label::II: return 4;
    case case_label::III: return 1;
    case case_label::IV: return 5;
    }
    return 0;
}

bool case_inequality_holds(const Triple& t) {
    return square(t.a + t.b + 1) <= 4 * t.b * t.n + case_slack(classify_case(t));
}

}  // namespace graphseq
