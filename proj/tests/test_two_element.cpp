#include <doctest.h>

#include "graphseq/graphicality.hpp"
#include "graphseq/two_element.hpp"
#include "oracles.hpp"

using namespace graphseq;

TEST_CASE("discriminant examples") {
    CHECK(discriminant(TwoElementSpec::make(3, 1, 4, 2)) == -2);
    CHECK(discriminant(TwoElementSpec::make(2, 1, 4, 2)) == 0);
    CHECK(discriminant(TwoElementSpec::make(5, 2, 6, 4)) == -4);
}

TEST_CASE("delta_k examples") {
    const auto spec = TwoElementSpec::make(3, 1, 4, 2);
    CHECK(delta_k(spec, 2) == -2);
    CHECK(delta_k(spec, spec.s) == discriminant(spec));
    CHECK(delta_k(TwoElementSpec::make(5, 1, 7, 3), 3) == -5);
}

TEST_CASE("two_element_graphic examples") {
    CHECK(two_element_graphic(TwoElementSpec::make(3, 1, 4, 2)) == Verdict::discriminant_neg());
    CHECK(two_element_graphic(TwoElementSpec::make(2, 1, 4, 2)) == Verdict::ok());
    CHECK(two_element_graphic(TwoElementSpec::make(4, 1, 6, 1)) == Verdict::odd_sum());
    CHECK(oracle::realizable_multisets(4).contains({2, 2, 1, 1}));
}

TEST_CASE("two_element domain errors") {
    CHECK_THROWS_AS(TwoElementSpec::make(3, 3, 5, 2), error);
    CHECK_THROWS_AS(TwoElementSpec::make(5, 1, 5, 2), error);
    CHECK_THROWS_AS(TwoElementSpec::make(4, 1, 6, 0), error);
    CHECK_THROWS_AS(TwoElementSpec::make(4, 1, 6, 6), error);
    CHECK(two_element_graphic(3, 3, 5, 2) == Verdict::out_of_domain());
    CHECK(two_element_graphic(2, 1, 4, 2) == Verdict::ok());
    try {
        TwoElementSpec::make(2, 2, 4, 1);
    } catch (const error& e) {
        CHECK(e.code() == error_code::out_of_domain);
    }
}

TEST_CASE("uniform_graphic examples and agreement with erdos_gallai") {
    CHECK(uniform_graphic(2, 3) == Verdict::ok());
    CHECK_FALSE(uniform_graphic(3, 3).graphic);
    CHECK(uniform_graphic(3, 4) == Verdict::ok());
    CHECK(uniform_graphic(3, 5) == Verdict::odd_sum());

    for (degree_t a = 1; a < 12; ++a) {
        for (std::int64_t n = 1; n <= 12; ++n) {
            const auto seq = normalize(std::vector<degree_t>(static_cast<std::size_t>(n), a));
            REQUIRE(uniform_graphic(a, n) == erdos_gallai(seq));
        }
    }
}

TEST_CASE("closed form agrees with erdos_gallai on expanded sequences") {
    for (std::int64_t n = 3; n <= 24; ++n) {
        for (degree_t a = 2; a < n; ++a) {
            for (degree_t b = 1; b < a; ++b) {
                for (std::int64_t s = 1; s < n; ++s) {
                    const auto spec = TwoElementSpec::make(a, b, n, s);
                    const auto seq = spec.expand();
                    REQUIRE(seq.n() == n);
                    const auto closed = two_element_graphic(spec);
                    if (spec.sum() % 2 != 0) {
                        REQUIRE(closed == Verdict::odd_sum());
                        continue;
                    }
                    REQUIRE(closed.graphic == erdos_gallai(seq).graphic);
                }
            }
        }
    }
}

TEST_CASE("delta_k is minimized at k = b and k = b + 1") {
    for (std::int64_t n = 3; n <= 30; ++n) {
        for (degree_t a = 2; a < n; ++a) {
            for (degree_t b = 1; b < a; ++b) {
                const auto spec = TwoElementSpec::make(a, b, n, 1);
                const degree_t at_b = delta_k(spec, b);
                REQUIRE(delta_k(spec, b + 1) == at_b);
                for (std::int64_t k = -5; k <= n + 5; ++k)
                    REQUIRE(delta_k(spec, k) >= at_b);
            }
        }
    }
}

TEST_CASE("discriminant sign controls delta_k on [s, n]") {
    for (std::int64_t n = 3; n <= 40; ++n) {
        for (degree_t a = 2; a < n; ++a) {
            for (degree_t b = 1; b < a; ++b) {
                for (std::int64_t s = 1; s < n; ++s) {
                    const auto spec = TwoElementSpec::make(a, b, n, s);
                    bool all = true;
                    for (std::int64_t k = s; k <= n; ++k)
                        all = all && delta_k(spec, k) >= 0;
                    REQUIRE((discriminant(spec) >= 0) == all);
                }
            }
        }
    }
}

// Each of the five index regimes of the inequality family holds at every k
// whenever the closed form says graphic.
TEST_CASE("inequality regimes hold on graphic two-valued sequences") {
    std::array<std::int64_t, 5> hits{};
    for (std::int64_t n = 3; n <= 20; ++n) {
        for (degree_t a = 2; a < n; ++a) {
            for (degree_t b = 1; b < a; ++b) {
                for (std::int64_t s = 1; s < n; ++s) {
                    const auto spec = TwoElementSpec::make(a, b, n, s);
                    if (!two_element_graphic(spec).graphic)
                        continue;
                    const auto d = spec.expand();
                    for (std::int64_t k = 1; k <= n; ++k) {
                        degree_t lhs = 0, rhs = k * (k - 1);
                        for (std::int64_t i = 1; i <= n; ++i) {
                            if (i <= k)
                                lhs += d[i];
                            else
                                rhs += std::min<degree_t>(k, d[i]);
                        }
                        int regime = -1;
                        if (k > s && k <= b)
                            regime = 0;
                        else if (k <= s && k <= b)
                            regime = 1;
                        else if (k <= s && a < k)
                            regime = 2;
                        else if (k > s && k > b)
                            regime = 3;
                        else if (k <= s && b < k && k <= a)
                            regime = 4;
                        REQUIRE(regime >= 0);
                        ++hits[static_cast<std::size_t>(regime)];
                        REQUIRE(lhs <= rhs);
                        if (regime == 3)
                            REQUIRE(delta_k(spec, k) >= 0);
                    }
                }
            }
        }
    }
    for (auto h : hits)
        CHECK(h > 0);
}
