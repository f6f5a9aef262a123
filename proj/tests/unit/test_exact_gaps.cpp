#include <doctest.h>

#include <map>

#include "balldep/errors.hpp"
#include "balldep/exact_gaps.hpp"
#include "balldep/exact_roots.hpp"

using namespace balldep;

namespace {

mpq_class q(long n, long d = 1) {
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

mpq_class big(const char* n, const char* d) {
    mpq_class r{mpz_class(n), mpz_class(d)};
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("boundary layer") {
    const GapRecursionTable t(2, 12);
    for (std::size_t k = 0; k <= 12; ++k) {
        for (std::size_t l = 0; l <= k; ++l) {
            for (std::size_t r = 0; l + r <= k; ++r) {
                if (k - l - r > 2) continue;
                const auto want = k == 2 ? RationalPolynomial::monomial(1, 1) : RationalPolynomial::constant(1);
                REQUIRE(t.pgf(l, r, k) == want);
            }
        }
    }
}

TEST_CASE("small entries for gap length 1") {
    const GapRecursionTable t(1, 8);
    CHECK(t.pgf(0, 0, 3) == RationalPolynomial{q(2, 3), q(0), q(1, 3)});
    CHECK(t.pgf(0, 0, 4) == RationalPolynomial{q(1, 3), q(2, 3)});
    CHECK(t.distribution(4) == t.pgf(0, 0, 3));
    CHECK(pgf_moments(t.distribution(4)).mean == q(2, 3));
    // counts are m!-scaled: m = 3 free sites, 3! = 6
    CHECK(t.counts(0, 0, 3) == CountPolynomial{4, 0, 2});
}

TEST_CASE("table invariants") {
    for (const std::size_t gap : {1, 2, 3, 5}) {
        const GapRecursionTable t(gap, 24);
        for (std::size_t k = 0; k <= 24; ++k) {
            for (std::size_t l = 0; l <= k; ++l) {
                for (std::size_t r = 0; l + r <= k; ++r) {
                    const auto p = t.pgf(l, r, k);
                    REQUIRE(p.evaluate(q(1)) == 1);
                    for (const auto& c : p.coefficients()) REQUIRE(sgn(c) >= 0);
                    REQUIRE(p.degree() <= k / (gap + 1) + 1);
                    REQUIRE(p == t.pgf(r, l, k));
                }
            }
        }
    }
}

TEST_CASE("folded and full storage agree") {
    GapTableOptions full;
    full.fold_symmetry = false;
    for (const std::size_t gap : {1, 3}) {
        const GapRecursionTable folded(gap, 20), unfolded(gap, 20, full);
        CHECK(folded.folded());
        CHECK_FALSE(unfolded.folded());
        CHECK(unfolded.entry_count() > folded.entry_count());
        for (std::size_t k = 0; k <= 20; ++k) {
            for (std::size_t l = 0; l <= k; ++l) {
                for (std::size_t r = 0; l + r <= k; ++r) REQUIRE(folded.counts(l, r, k) == unfolded.counts(l, r, k));
            }
        }
    }
}

TEST_CASE("gap moments against closed forms") {
    CHECK(pgf_moments(gap_distribution(2, 31)).mean == q(31, 9));
    const auto m12 = gap_moments(1, 12);
    CHECK(m12.mean == q(8, 5));
    CHECK(m12.variance == q(1772 * 12, 14175));
    CHECK(gap_moments(1, 8).variance == q(1588, 1575));
    CHECK(gap_moments(1, 5).variance == q(2, 9));
    const auto m5 = gap_moments(5, 35);
    CHECK(m5.mean == q(4 * 35, 567));
    CHECK(m5.variance == big("649555688", "97692469875") * 35);
    CHECK(gap_moments(7, 40).variance == big("191501338988", "428772250281375") * 40);
    // K = 3: D_1 + 2 D_2 = 3 - R^[3] = 2
    CHECK(gap_moments(1, 3).mean + 2 * gap_moments(2, 3).mean == 2);
}

TEST_CASE("moment identities") {
    for (std::size_t K = 3; K <= 25; ++K) {
        mpq_class total = 0, weighted = 0;
        for (std::size_t i = 1; i < K; ++i) {
            const auto m = gap_moments(i, K).mean;
            total += m;
            weighted += m * static_cast<long>(i);
        }
        REQUIRE(total == q(static_cast<long>(K), 3));
        REQUIRE(weighted == q(2 * static_cast<long>(K), 3));
    }
}

TEST_CASE("argument and resource errors") {
    CHECK_THROWS_AS(gap_distribution(0, 5), ArgumentError);
    CHECK_THROWS_AS(gap_distribution(5, 5), ArgumentError);
    CHECK_THROWS_AS(gap_distribution(1, 2), ArgumentError);
    CHECK_THROWS_AS(GapRecursionTable(0, 10), ArgumentError);
    CHECK_THROWS_AS(GapRecursionTable(1, kMaxGapWidth + 1), ResourceError);
    const GapRecursionTable t(1, 10);
    CHECK_THROWS(t.distribution(12));

    GapTableOptions tiny;
    tiny.memory_budget_bytes = 4096;
    try {
        GapRecursionTable(1, 30, tiny);
        FAIL("expected the memory budget to trip");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("exceeded at (l=") != std::string::npos);
    }
}

TEST_CASE("abc recursion") {
    const auto abc = abc_recursion(40);
    REQUIRE(abc.size() == 38);
    CHECK(abc.front().index == 3);
    const auto& k4 = abc[1];
    CHECK(k4.a.is_zero());
    CHECK(k4.b == RationalPolynomial{q(1, 3), q(-1, 3)});
    CHECK(k4.c == RationalPolynomial{q(1, 3), q(2, 3)});
    CHECK(abc[4].c == RationalPolynomial{q(98, 315), q(132, 315), q(68, 315), q(0), q(17, 315)});

    const GapRecursionTable t(1, 40);
    for (const auto& row : abc) {
        REQUIRE(row.c == t.pgf(0, 0, row.index));
        REQUIRE(row.a.evaluate(q(1)) == 0);
        REQUIRE(row.b.evaluate(q(1)) == 0);
        REQUIRE(row.c.evaluate(q(1)) == 1);
        const auto d = abc_degree(row.index);
        REQUIRE(row.b.degree() == d);
        REQUIRE(row.c.degree() == d);
        if (row.index != 4) REQUIRE(row.a.degree() == d);
    }
    CHECK(abc_degree(3) == 2);
    CHECK(abc_degree(4) == 1);
    CHECK(abc_degree(7) == 4);
    CHECK_THROWS_AS(abc_recursion(2), ArgumentError);
}
