#include <doctest.h>

#include <cmath>

#include "balldep/errors.hpp"
#include "balldep/exact_roots.hpp"

using namespace balldep;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("small root PGFs") {
    CHECK(aux_root_pgf(0) == RationalPolynomial::constant(1));
    CHECK(aux_root_pgf(1) == RationalPolynomial::constant(1));
    CHECK(aux_root_pgf(2) == RationalPolynomial::constant(1));
    CHECK(aux_root_pgf(3) == RationalPolynomial{q(2, 3), q(1, 3)});
    CHECK(cyclic_root_pgf(3) == RationalPolynomial::monomial(1, 1));
    CHECK(cyclic_root_pgf(4) == RationalPolynomial{q(0), q(2, 3), q(1, 3)});
    CHECK(aux_root_pgf(6).coefficient(0) == q(32, 720));
    CHECK_THROWS_AS(cyclic_root_pgf(2), ArgumentError);
    CHECK_THROWS_AS(aux_root_pgf(kMaxRootWidth + 1), ResourceError);
}

TEST_CASE("constant term is 2^(K-1)/K!") {
    mpq_class want = 1;  // L_2(0)
    for (std::size_t K = 3; K <= 40; ++K) {
        want *= q(2, static_cast<long>(K));
        REQUIRE(aux_root_pgf(K).coefficient(0) == want);
    }
}

TEST_CASE("moments") {
    const auto m7 = pgf_moments(cyclic_root_pgf(7));
    CHECK(m7.mean == q(7, 3));
    CHECK(m7.variance == q(14, 45));
    CHECK(pgf_moments(cyclic_root_pgf(5)).variance == q(2, 9));
    CHECK(pgf_moments(cyclic_root_pgf(10)).mean == q(10, 3));
    // R^[4] is 1 or 2 with P(2) = 1/3
    const auto m4 = pgf_moments(cyclic_root_pgf(4));
    CHECK(m4.mean == q(4, 3));
    CHECK(m4.variance == q(2, 9));
    const auto one = pgf_moments(RationalPolynomial::constant(1));
    CHECK(one.mean == 0);
    CHECK(one.variance == 0);
    CHECK(one.second_factorial_moment == 0);

    for (std::size_t K = 3; K <= 60; ++K) {
        const auto m = pgf_moments(cyclic_root_pgf(K));
        REQUIRE(m.variance == m.second_factorial_moment + m.mean - m.mean * m.mean);
        REQUIRE(m.mean == q(static_cast<long>(K), 3));
        if (K >= 7) REQUIRE(m.variance == q(2 * static_cast<long>(K), 45));
    }
    CHECK(pgf_moments(cyclic_root_pgf(3)).variance == 0);
    CHECK(pgf_moments(cyclic_root_pgf(6)).variance == q(4, 15));

    CHECK_THROWS_AS(pgf_moments(RationalPolynomial{q(1, 2), q(1, 3)}), ValidationError);
    CHECK_THROWS_AS(pgf_moments(RationalPolynomial{q(3, 2), q(-1, 2)}), ValidationError);
}

TEST_CASE("root PGF sanity") {
    for (std::size_t K = 0; K <= 120; ++K) {
        const auto& p = aux_root_pgf(K);
        REQUIRE(p.evaluate(q(1)) == 1);
        for (const auto& c : p.coefficients()) REQUIRE(sgn(c) >= 0);
        if (K >= 1) REQUIRE(p.degree() < K);
    }
    // regression fixture: the largest count of pairwise non-adjacent interior sites
    CHECK(aux_root_pgf(10).degree() == 4);
    CHECK(aux_root_pgf(11).degree() == 5);
}

TEST_CASE("RootPgfTable matches the shared table") {
    RootPgfTable t;
    CHECK(t.aux(25) == aux_root_pgf(25));
    CHECK(t.size() >= 26);
}

TEST_CASE("closed form of the bivariate generating function") {
    CHECK(std::abs(closed_form_L(0.5, 1.0) - 1.0) < 1e-15);
    CHECK(std::abs(closed_form_L(0.0, 1.7)) == 0.0);
    CHECK(std::abs(closed_form_L(0.0, 0.3)) == 0.0);

    // truncated series at (0.3, 1.2); the tail beyond K = 60 is below 1e-30
    for (const auto& [x, z] : {std::pair{0.3, 1.2}, std::pair{0.4, 0.6}, std::pair{0.25, 2.0}}) {
        double series = 0.0;
        for (std::size_t K = 60; K >= 1; --K) series = (series + aux_root_pgf(K).evaluate(z)) * x;
        const auto closed = closed_form_L(x, z);
        CHECK(std::abs(closed.real() - series) < 1e-9);
        CHECK(std::abs(closed.imag()) < 1e-12);
    }
    CHECK_THROWS_AS(closed_form_L(1.0, 1.0), DomainError);
    // x tan-pole: tan(x s) = s at s = 1, x = pi/4
    CHECK_THROWS_AS(closed_form_L(std::atan(1.0), 2.0, 1e-9), DomainError);
}

TEST_CASE("dominant pole asymptotics") {
    CHECK(static_cast<double>(dominant_pole(HighPrecision("1.000000001"))) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(static_cast<double>(dominant_pole(HighPrecision("0.999999999"))) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(asymptotic_root_pgf(q(1), 20), DomainError);
    CHECK_THROWS_AS(asymptotic_root_pgf(1.0, 20), DomainError);
    CHECK_THROWS_AS(asymptotic_root_pgf(q(-1, 2), 20), DomainError);

    const auto rel_error = [](const mpq_class& z, std::size_t K) {
        const HighPrecision exact = to_high_precision(aux_root_pgf(K).evaluate(z));
        return static_cast<double>(abs(exact - asymptotic_root_pgf(z, K)) / exact);
    };
    const mpq_class z11 = q(11, 10), z12 = q(6, 5);
    CHECK(rel_error(z11, 50) < 1e-3);
    CHECK(rel_error(z11, 20) / rel_error(z11, 50) >= 5.0);
    CHECK(rel_error(z12, 40) < rel_error(z12, 20));
    CHECK(rel_error(q(9, 10), 40) < rel_error(q(9, 10), 20));
    CHECK(asymptotic_root_pgf(1.1, 50) ==
          doctest::Approx(static_cast<double>(asymptotic_root_pgf(z11, 50))).epsilon(1e-12));
}

TEST_CASE("table equals the recursion evaluated directly over Q") {
    std::vector<RationalPolynomial> L(3, RationalPolynomial::constant(1));
    for (std::size_t K = 3; K <= 30; ++K) {
        RationalPolynomial sum;
        for (std::size_t j = 2; j <= K - 1; ++j) sum += L[j - 1] * L[K - j];
        L.push_back((L[K - 1] * mpq_class(2) + sum.shifted(1)) * q(1, static_cast<long>(K)));
    }
    for (std::size_t K = 0; K <= 30; ++K) REQUIRE(aux_root_pgf(K) == L[K]);
}
