#include "graphseq/two_element.hpp"

#include <array>
#include <sstream>

namespace graphseq {

bool TwoElementSpec::valid(degree_t a, degree_t b, std::int64_t n, std::int64_t s) noexcept {
    return b >= 1 && b < a && a < n && n <= max_value && s > 0 && s < n;
}

TwoElementSpec TwoElementSpec::make(degree_t a, degree_t b, std::int64_t n, std::int64_t s) {
    if (!valid(a, b, n, s)) {
        std::ostringstream msg;
        msg << "two-element sequence needs 1 <= b < a < n and 0 < s < n, got a=" << a << " b=" << b
            << " n=" << n << " s=" << s;
        if (a == b)
            msg << " (use the uniform form for a = b)";
        throw error(error_code::out_of_domain, msg.str());
    }
    return TwoElementSpec{a, b, n, s};
}

DegreeSequence TwoElementSpec::expand() const {
    const std::array<std::pair<degree_t, std::int64_t>, 2> runs{{{a, s}, {b, n - s}}};
    return from_runs(runs);
}

degree_t discriminant(const TwoElementSpec& spec) {
    return spec.s * spec.s - (1 + spec.a + spec.b) * spec.s + spec.n * spec.b;
}

degree_t delta_k(const TwoElementSpec& spec, std::int64_t k) {
    return k * k - k * (1 + 2 * spec.b) + spec.n * spec.b + spec.b * spec.s - spec.a * spec.s;
}

Verdict two_element_graphic(const TwoElementSpec& spec) {
    if (spec.sum() % 2 != 0)
        return Verdict::odd_sum();
    return discriminant(spec) >= 0 ? Verdict::ok() : Verdict::discriminant_neg();
}

Verdict two_element_graphic(degree_t a, degree_t b, std::int64_t n, std::int64_t s) {
    if (!TwoElementSpec::valid(a, b, n, s))
        return Verdict::out_of_domain();
    return two_element_graphic(TwoElementSpec{a, b, n, s});
}

Verdict uniform_graphic(degree_t a, std::int64_t n) {
    if ((a * n) % 2 != 0)
        return Verdict::odd_sum();
    if (a >= n)
        return Verdict::eg_fail(1);
    return Verdict::ok();
}

}  // namespace graphseq
