#include <doctest.h>

#include <random>

#include "balldep/errors.hpp"
#include "balldep/rational_polynomial.hpp"

using namespace balldep;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

RationalPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    std::uniform_int_distribution<std::size_t> deg(0, max_degree);
    std::vector<mpq_class> c(deg(rng) + 1);
    for (auto& x : c) x = q(num(rng), den(rng));
    return RationalPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("fraction strings") {
    CHECK(fraction_string(q(6, 4)) == "3/2");
    CHECK(fraction_string(q(-2, 6)) == "-1/3");
    CHECK(fraction_string(q(5)) == "5/1");
    CHECK(fraction_string(q(0)) == "0/1");
    CHECK(parse_fraction("10/4") == q(5, 2));
    CHECK(parse_fraction("7") == q(7));
    CHECK(parse_fraction(fraction_string(q(-191, 3))) == q(-191, 3));
    CHECK_THROWS_AS(parse_fraction("1/0"), ArgumentError);
    CHECK_THROWS_AS(parse_fraction("x/2"), ArgumentError);
}

TEST_CASE("canonical form drops trailing zeros") {
    const RationalPolynomial p{q(1), q(2), q(0), q(0)};
    CHECK(p.degree() == 1);
    CHECK(p.coefficients().size() == 2);
    CHECK(RationalPolynomial{q(0), q(0)}.is_zero());
    CHECK(RationalPolynomial{}.degree() == 0);
    CHECK(p.coefficient(7) == 0);
    const auto diff = p - p;
    CHECK(diff.is_zero());
    CHECK(diff.coefficients().empty());
}

TEST_CASE("arithmetic") {
    const RationalPolynomial a{q(1), q(1)};        // 1 + x
    const RationalPolynomial b{q(1), q(-1)};       // 1 - x
    CHECK(a * b == RationalPolynomial{q(1), q(0), q(-1)});
    CHECK(a + b == RationalPolynomial::constant(q(2)));
    CHECK(a - b == RationalPolynomial::monomial(q(2), 1));
    CHECK(a * q(1, 3) == RationalPolynomial{q(1, 3), q(1, 3)});
    CHECK((a * RationalPolynomial{}).is_zero());
    CHECK(a.shifted(2) == RationalPolynomial{q(0), q(0), q(1), q(1)});
    CHECK(RationalPolynomial{q(1), q(2), q(3)}.derivative() == RationalPolynomial{q(2), q(6)});
    CHECK(RationalPolynomial::constant(q(4)).derivative().is_zero());
}

TEST_CASE("evaluation") {
    const RationalPolynomial p{q(2, 3), q(1, 3)};  // L_3
    CHECK(p.evaluate(q(1)) == 1);
    CHECK(p.evaluate(q(0)) == q(2, 3));
    CHECK(p.evaluate(q(-2)) == 0);
    CHECK(p.evaluate(0.5) == doctest::Approx(5.0 / 6));
    CHECK(p.to_string("z") == "2/3 + 1/3*z^1");
    CHECK(RationalPolynomial{}.to_string() == "0");
}

TEST_CASE("ring laws on random polynomials") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 200; ++t) {
        const auto a = random_poly(rng, 6), b = random_poly(rng, 6), c = random_poly(rng, 6);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a + b).derivative() == a.derivative() + b.derivative());
        REQUIRE((a * b).derivative() == a.derivative() * b + a * b.derivative());
        const mpq_class x = q(t - 100, 7);
        REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
    }
}
