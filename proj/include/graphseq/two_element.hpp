#pragma once

#include "graphseq/types.hpp"

namespace graphseq {

// The two-valued sequence (a^s, b^{n-s}) with b < a < n and 0 < s < n.
struct TwoElementSpec {
    degree_t a = 0;
    degree_t b = 0;
    std::int64_t n = 0;
    std::int64_t s = 0;

    static bool valid(degree_t a, degree_t b, std::int64_t n, std::int64_t s) noexcept;

    // Throws error{out_of_domain} unless b >= 1, b < a < n <= max_value and
    // 0 < s < n.
    static TwoElementSpec make(degree_t a, degree_t b, std::int64_t n, std::int64_t s);

    degree_t sum() const noexcept { return a * s + b * (n - s); }

    DegreeSequence expand() const;
};

// s^2 - (1+a+b)s + nb
degree_t discriminant(const TwoElementSpec& spec);

// k^2 - k(1+2b) + nb + bs - as. Equals discriminant() at k = s.
degree_t delta_k(const TwoElementSpec& spec, std::int64_t k);

// ODD_SUM for odd a*s + b*(n-s); otherwise graphic iff discriminant >= 0.
Verdict two_element_graphic(const TwoElementSpec& spec);

// Same as above but reports OUT_OF_DOMAIN instead of throwing.
Verdict two_element_graphic(degree_t a, degree_t b, std::int64_t n, std::int64_t s);

// (a^n): graphic iff a*n is even and a < n. A too-large a fails the k = 1
// Erdos-Gallai inequality, which is the reason reported.
Verdict uniform_graphic(degree_t a, std::int64_t n);

}  // namespace graphseq
