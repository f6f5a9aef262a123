#include <doctest.h>

#include "balldep/errors.hpp"
#include "balldep/exact_gaps.hpp"
#include "balldep/exact_roots.hpp"
#include "balldep/series.hpp"

using namespace balldep;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("geometric series") {
    const RationalFunctionSeries f{RationalPolynomial::constant(1), RationalPolynomial{q(1), q(-1)}};
    const auto c = series_coefficients(f, 4);
    CHECK(c == std::vector<mpq_class>{1, 1, 1, 1});
    CHECK(series_coefficients(f, 0).empty());
    const RationalFunctionSeries bad{RationalPolynomial::constant(1), RationalPolynomial{q(0), q(1)}};
    CHECK_THROWS_AS(series_coefficients(bad, 3), DomainError);
}

TEST_CASE("series obey the recurrence of the denominator") {
    const auto f = make_series(3, 2, {{1, 2, -1}}, "7", 3);
    const auto c = series_coefficients(f, 30);
    // (1-x)^3 * sum c_n x^n has no terms beyond the numerator degree
    for (std::size_t n = 8; n < 30; ++n) {
        REQUIRE(c[n] - 3 * c[n - 1] + 3 * c[n - 2] - c[n - 3] == 0);
    }
    CHECK(c[2] == q(3, 7));
}

TEST_CASE("mean series for gap length 2 is linear from x^8 on") {
    const auto ref = mean_generating_function(2);
    REQUIRE(ref.has_value());
    const auto c = series_coefficients(ref->series, 41);
    for (std::size_t K = 8; K <= 40; ++K) REQUIRE(c[K] == q(static_cast<long>(K) + 1, 9));
    for (std::size_t K = 3; K <= 40; ++K) REQUIRE(c[K] == gap_moments(2, K + 1).mean);
}

TEST_CASE("series tables against the gap recursion") {
    for (std::size_t gap = 1; gap <= 7; ++gap) {
        const auto mean = mean_generating_function(gap);
        const auto fact = factorial_generating_function(gap);
        REQUIRE(mean.has_value());
        REQUIRE(fact.has_value());
        CHECK(mean->gap == gap);
        const auto cm = series_coefficients(mean->series, 41);
        const auto cf = series_coefficients(fact->series, 41);
        const GapRecursionTable t(gap, 40);
        for (std::size_t K = std::max<std::size_t>(gap, 3); K <= 40; ++K) {
            const auto m = pgf_moments(t.distribution(K + 1));
            REQUIRE(cm[K] == m.mean);
            REQUIRE(cf[K] == m.second_factorial_moment);
        }
    }
    CHECK_FALSE(mean_generating_function(8).has_value());
    CHECK_FALSE(factorial_generating_function(0).has_value());
    CHECK_FALSE(mean_generating_function(1)->note.empty());
    CHECK_FALSE(factorial_generating_function(5)->note.empty());
}

TEST_CASE("gap length 1 mean series starts at x^3") {
    const auto c = series_coefficients(mean_generating_function(1)->series, 8);
    CHECK(c[0] == 0);
    CHECK(c[2] == 0);
    CHECK(c[3] == q(2, 3));
    CHECK(c[4] == q(2, 3));
    CHECK(c[5] == q(4, 5));
}
