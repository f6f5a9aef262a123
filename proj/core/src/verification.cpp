#include "balldep/verification.hpp"

#include <functional>
#include <map>
#include <memory>
#include <sstream>

#include "balldep/errors.hpp"
#include "balldep/exact_gaps.hpp"
#include "balldep/exact_roots.hpp"
#include "balldep/oracle.hpp"
#include "balldep/series.hpp"

namespace balldep {

namespace {

// Runs `holds(K)` for K in [first, last]; the check fails on the first K for
// which it returns a non-empty mismatch description.
CheckResult sweep(std::string suite, std::string formula, std::size_t first, std::size_t last,
                  const std::function<std::string(std::size_t)>& mismatch, std::string note = {}) {
    CheckResult out{std::move(suite), std::move(formula), true, {}};
    std::ostringstream detail;
    if (first > last) {
        out.detail = "skipped: empty range";
        return out;
    }
    detail << "K=" << first << ".." << last;
    for (std::size_t k = first; k <= last; ++k) {
        const auto why = mismatch(k);
        if (!why.empty()) {
            out.passed = false;
            detail << "; first mismatch at K=" << k << ": " << why;
            break;
        }
    }
    if (!note.empty()) detail << "; note: " << note;
    out.detail = detail.str();
    return out;
}

std::string expect_eq(const mpq_class& got, const mpq_class& want) {
    if (got == want) return {};
    return "got " + fraction_string(got) + ", expected " + fraction_string(want);
}

RationalPolynomial poly_over(std::initializer_list<long> numerators, long denominator) {
    std::vector<mpq_class> c;
    for (const auto n : numerators) {
        mpq_class q(n, denominator);
        q.canonicalize();
        c.push_back(q);
    }
    return RationalPolynomial(std::move(c));
}

struct AbcRow {
    RationalPolynomial a, b, c;
};

// reference a_K, b_K, c_K for K = 3..7
std::map<std::size_t, AbcRow> reference_abc() {
    return {
        {3, {poly_over({1, -2, 1}, 3), poly_over({0, 1, -1}, 3), poly_over({2, 0, 1}, 3)}},
        {4, {RationalPolynomial{}, poly_over({1, -1}, 3), poly_over({1, 2}, 3)}},
        {5, {poly_over({0, 2, -4, 2}, 15), poly_over({3, -3, 2, -2}, 15), poly_over({7, 6, 0, 2}, 15)}},
        {6, {poly_over({1, -2, 1}, 9), poly_over({4, 7, -11}, 45), poly_over({20, 8, 17}, 45)}},
        {7,
         {poly_over({18, -36, 35, -34, 17}, 315), poly_over({45, -2, -43, 17, -17}, 315),
          poly_over({98, 132, 68, 0, 17}, 315)}},
    };
}

struct GapLaw {
    std::size_t gap;
    mpq_class mean_slope;
    mpq_class variance_slope;
};

const std::vector<GapLaw>& large_width_gap_laws() {
    static const std::vector<GapLaw> laws = {
        {2, mpq_class(1, 9), mpq_class(32, 405)},
        {3, mpq_class(2, 35), mpq_class(119732, 2837835)},
        {4, mpq_class(1, 45), mpq_class(12154, 637875)},
        {5, mpq_class(4, 567), mpq_class(mpz_class("649555688"), mpz_class("97692469875"))},
        {6, mpq_class(1, 525), mpq_class(mpz_class("5967328"), mpz_class("3192564375"))},
        {7, mpq_class(2, 4455), mpq_class(mpz_class("191501338988"), mpz_class("428772250281375"))},
    };
    return laws;
}

// Builds gap tables lazily, one per gap length, up to a common k_max.
class GapTables {
public:
    explicit GapTables(std::size_t k_max) : k_max_(k_max) {}
    const GapRecursionTable& operator()(std::size_t gap) {
        auto& slot = tables_[gap];
        if (!slot) slot = std::make_unique<GapRecursionTable>(gap, k_max_);
        return *slot;
    }

private:
    std::size_t k_max_;
    std::map<std::size_t, std::unique_ptr<GapRecursionTable>> tables_;
};

void require_range(std::size_t kmax, std::size_t cap, const char* what) {
    if (kmax < 3) throw ArgumentError(std::string(what) + ": kmax must be >= 3");
    if (kmax > cap) {
        throw ResourceError(std::string(what) + ": kmax " + std::to_string(kmax) + " exceeds guard " +
                            std::to_string(cap));
    }
}

}  // namespace

VerifySuite parse_verify_suite(std::string_view text) {
    if (text == "roots") return VerifySuite::Roots;
    if (text == "gaps") return VerifySuite::Gaps;
    if (text == "tables") return VerifySuite::Tables;
    if (text == "oracle") return VerifySuite::Oracle;
    if (text == "all") return VerifySuite::All;
    throw ArgumentError("unknown suite '" + std::string(text) + "' (expected roots|gaps|tables|oracle|all)");
}

std::string_view to_string(VerifySuite suite) noexcept {
    switch (suite) {
        case VerifySuite::Roots: return "roots";
        case VerifySuite::Gaps: return "gaps";
        case VerifySuite::Tables: return "tables";
        case VerifySuite::Oracle: return "oracle";
        case VerifySuite::All: return "all";
    }
    return "?";
}

bool VerificationReport::all_passed() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return true;
}

void VerificationReport::append(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::size_t default_kmax(VerifySuite suite) noexcept {
    switch (suite) {
        case VerifySuite::Roots: return 60;
        case VerifySuite::Gaps: return 40;
        case VerifySuite::Tables: return 40;
        case VerifySuite::Oracle: return 9;
        case VerifySuite::All: return 0;
    }
    return 0;
}

VerificationReport verify(VerifySuite suite, std::size_t kmax) {
    switch (suite) {
        case VerifySuite::Roots: return verify_roots(kmax);
        case VerifySuite::Gaps: return verify_gaps(kmax);
        case VerifySuite::Tables: return verify_tables(kmax);
        case VerifySuite::Oracle: return verify_oracle(kmax);
        case VerifySuite::All: {
            // a single kmax cannot fit every guard; 0 means each suite's default
            VerificationReport all;
            for (const auto s : {VerifySuite::Roots, VerifySuite::Gaps, VerifySuite::Tables, VerifySuite::Oracle}) {
                all.append(verify(s, kmax == 0 ? default_kmax(s) : std::min(kmax, default_kmax(s))));
            }
            return all;
        }
    }
    return {};
}

VerificationReport verify_roots(std::size_t kmax) {
    require_range(kmax, kMaxRootWidth, "roots suite");
    const std::string suite = "roots";
    RootPgfTable table;
    const auto cyclic = [&](std::size_t k) { return table.aux(k - 1).shifted(1); };

    VerificationReport report;
    report.checks.push_back(sweep(suite, "L_K(1) = 1", 0, kmax, [&](std::size_t k) {
        return expect_eq(table.aux(k).evaluate(mpq_class(1)), 1);
    }));
    report.checks.push_back(sweep(
        suite, "L_K(0) = P(R_K = 0) = 2^(K-1)/K!", 3, kmax,
        [&](std::size_t k) {
            mpz_class num = 1, den = 1;
            num <<= static_cast<mp_bitcnt_t>(k - 1);
            for (std::size_t j = 2; j <= k; ++j) den *= static_cast<unsigned long>(j);
            mpq_class want(num, den);
            want.canonicalize();
            return expect_eq(table.aux(k).coefficient(0), want);
        },
        "the variant 2^(K-3)/K! disagrees with both the recursion and enumeration"));
    report.checks.push_back(sweep(suite, "E(R_K) = (K-2)/3", 3, kmax, [&](std::size_t k) {
        mpq_class want(static_cast<long>(k) - 2, 3);
        want.canonicalize();
        return expect_eq(pgf_moments(table.aux(k)).mean, want);
    }));
    report.checks.push_back(sweep(suite, "E(R^[K]) = K/3", 3, kmax, [&](std::size_t k) {
        mpq_class want(static_cast<long>(k), 3);
        want.canonicalize();
        return expect_eq(pgf_moments(cyclic(k)).mean, want);
    }));
    const std::map<std::size_t, mpq_class> small_var = {
        {3, mpq_class(0)}, {4, mpq_class(2, 9)}, {5, mpq_class(2, 9)}, {6, mpq_class(4, 15)}};
    report.checks.push_back(sweep(
        suite, "var(R^[K]) = 0, 2/9, 2/9, 4/15 for K = 3..6", 3, std::min<std::size_t>(kmax, 6),
        [&](std::size_t k) { return expect_eq(pgf_moments(cyclic(k)).variance, small_var.at(k)); },
        "R^[4] takes 1 or 2 with P(2)=1/3, so the variance is 2/9, not 1/9"));
    report.checks.push_back(sweep(suite, "var(R^[K]) = 2K/45 for K >= 7", 7, kmax, [&](std::size_t k) {
        mpq_class want(2 * static_cast<long>(k), 45);
        want.canonicalize();
        return expect_eq(pgf_moments(cyclic(k)).variance, want);
    }));
    report.checks.push_back(sweep(suite, "deg L_K < K", 1, kmax, [&](std::size_t k) -> std::string {
        if (table.aux(k).degree() < k) return {};
        return "degree " + std::to_string(table.aux(k).degree());
    }));
    return report;
}

VerificationReport verify_gaps(std::size_t kmax) {
    require_range(kmax, kMaxGapWidth + 1, "gaps suite");
    const std::string suite = "gaps";
    GapTables tables(kmax - 1);
    VerificationReport report;

    const auto moments = [&](std::size_t gap, std::size_t k) { return pgf_moments(tables(gap).distribution(k)); };

    report.checks.push_back(sweep(suite, "E(D_{1,4}) = 2/3, E(D_{1,K}) = 2K/15 for K >= 5", 4, kmax,
                                  [&](std::size_t k) {
                                      mpq_class want = k == 4 ? mpq_class(2, 3) : mpq_class(2 * long(k), 15);
                                      want.canonicalize();
                                      return expect_eq(moments(1, k).mean, want);
                                  }));
    const std::map<std::size_t, mpq_class> small_var = {{4, mpq_class(8, 9)},
                                                        {5, mpq_class(2, 9)},
                                                        {6, mpq_class(24, 25)},
                                                        {7, mpq_class(184, 225)},
                                                        {8, mpq_class(1588, 1575)}};
    report.checks.push_back(sweep(suite, "var(D_{1,K}) = 8/9, 2/9, 24/25, 184/225, 1588/1575 (K=4..8), 1772K/14175 (K>=9)",
                                  4, kmax, [&](std::size_t k) {
                                      mpq_class want =
                                          k <= 8 ? small_var.at(k) : mpq_class(1772 * long(k), 14175);
                                      want.canonicalize();
                                      return expect_eq(moments(1, k).variance, want);
                                  }));
    for (const auto& law : large_width_gap_laws()) {
        const std::string i = std::to_string(law.gap);
        report.checks.push_back(sweep(suite, "E(D_{" + i + ",K}) = " + fraction_string(law.mean_slope) + " K, K >= 31",
                                      31, kmax, [&](std::size_t k) {
                                          return expect_eq(moments(law.gap, k).mean, law.mean_slope * long(k));
                                      }));
        report.checks.push_back(sweep(suite,
                                      "var(D_{" + i + ",K}) = " + fraction_string(law.variance_slope) + " K, K >= 31",
                                      31, kmax, [&](std::size_t k) {
                                          return expect_eq(moments(law.gap, k).variance,
                                                           law.variance_slope * long(k));
                                      }));
    }

    const std::size_t identity_max = std::min<std::size_t>(kmax, 25);
    std::map<std::size_t, std::pair<mpq_class, mpq_class>> sums;  // K -> (sum E, sum i E)
    for (std::size_t k = 3; k <= identity_max; ++k) {
        mpq_class total = 0, weighted = 0;
        for (std::size_t gap = 1; gap < k; ++gap) {
            const auto m = moments(gap, k).mean;
            total += m;
            weighted += m * long(gap);
        }
        sums[k] = {total, weighted};
    }
    report.checks.push_back(sweep(suite, "sum_i i E(D_{i,K}) = 2K/3", 3, identity_max, [&](std::size_t k) {
        mpq_class want(2 * long(k), 3);
        want.canonicalize();
        return expect_eq(sums.at(k).second, want);
    }));
    report.checks.push_back(sweep(suite, "sum_i E(D_{i,K}) = K/3", 3, identity_max, [&](std::size_t k) {
        mpq_class want(long(k), 3);
        want.canonicalize();
        return expect_eq(sums.at(k).first, want);
    }));

    const auto abc = abc_recursion(kmax - 1);
    report.checks.push_back(sweep(suite, "c_K(u) = E(u^{D_{1,K+1}})", 3, kmax - 1, [&](std::size_t k) -> std::string {
        if (abc[k - 3].c == tables(1).pgf(0, 0, k)) return {};
        return "c_K differs from table entry (0,0,K)";
    }));
    report.checks.push_back(sweep(suite, "a_K(1) = 0, b_K(1) = 0, c_K(1) = 1", 3, kmax - 1,
                                  [&](std::size_t k) -> std::string {
                                      const auto& t = abc[k - 3];
                                      const mpq_class one(1);
                                      if (t.a.evaluate(one) == 0 && t.b.evaluate(one) == 0 && t.c.evaluate(one) == 1)
                                          return {};
                                      return "normalisation fails";
                                  }));
    report.checks.push_back(sweep(
        suite, "deg a_K = deg b_K = deg c_K = (2K-1-3(-1)^K)/4", 3, kmax - 1,
        [&](std::size_t k) -> std::string {
            const auto& t = abc[k - 3];
            const auto d = abc_degree(k);
            const bool a_ok = (k == 4) ? t.a.is_zero() : t.a.degree() == d;
            if (a_ok && t.b.degree() == d && t.c.degree() == d) return {};
            return "degrees " + std::to_string(t.a.degree()) + "," + std::to_string(t.b.degree()) + "," +
                   std::to_string(t.c.degree()) + " vs " + std::to_string(d);
        },
        "a_4 is the zero polynomial"));
    return report;
}

VerificationReport verify_tables(std::size_t kmax) {
    require_range(kmax, kMaxGapWidth + 1, "tables suite");
    const std::string suite = "tables";
    VerificationReport report;

    const auto abc = abc_recursion(7);
    const auto reference = reference_abc();
    report.checks.push_back(sweep(suite, "a_K, b_K, c_K rows for K = 3..7", 3, 7, [&](std::size_t k) -> std::string {
        const auto& row = reference.at(k);
        const auto& t = abc[k - 3];
        if (t.a == row.a && t.b == row.b && t.c == row.c) return {};
        return "got a=" + t.a.to_string("u") + ", b=" + t.b.to_string("u") + ", c=" + t.c.to_string("u");
    }));

    GapTables tables(std::max<std::size_t>(kmax - 1, 7));
    report.checks.push_back(sweep(suite, "c_K rows equal E(u^{D_{1,K+1}}) from the (l,r,k) recursion", 3, 7,
                                  [&](std::size_t k) -> std::string {
                                      if (reference.at(k).c == tables(1).pgf(0, 0, k)) return {};
                                      return "row differs";
                                  }));

    for (std::size_t gap = 1; gap <= 7; ++gap) {
        const auto mean_ref = *mean_generating_function(gap);
        const auto fact_ref = *factorial_generating_function(gap);
        const auto mean_coeffs = series_coefficients(mean_ref.series, kmax);
        const auto fact_coeffs = series_coefficients(fact_ref.series, kmax);
        const auto& table = tables(gap);
        const std::size_t first = std::max<std::size_t>(3, gap);
        report.checks.push_back(sweep(
            suite, mean_ref.formula + "  [x^K <-> E(D_{" + std::to_string(gap) + ",K+1})]", first, kmax - 1,
            [&](std::size_t k) { return expect_eq(pgf_moments(table.distribution(k + 1)).mean, mean_coeffs[k]); },
            mean_ref.note));
        report.checks.push_back(sweep(
            suite, fact_ref.formula + "  [x^K <-> E(D(D-1)), D = D_{" + std::to_string(gap) + ",K+1}]", first,
            kmax - 1,
            [&](std::size_t k) {
                return expect_eq(pgf_moments(table.distribution(k + 1)).second_factorial_moment, fact_coeffs[k]);
            },
            fact_ref.note));
    }
    return report;
}

VerificationReport verify_oracle(std::size_t kmax) {
    require_range(kmax, kMaxOracleWidth, "oracle suite");
    const std::string suite = "oracle";
    VerificationReport report;
    GapTables tables(kmax - 1);

    std::map<std::size_t, EnumerationTally> tallies;
    for (std::size_t k = 3; k <= kmax; ++k) tallies.emplace(k, enumerate_cyclic(k));

    const auto law = [](const std::map<long, std::uint64_t>& tally, std::uint64_t orders) {
        std::vector<mpq_class> c;
        for (const auto& [v, n] : tally) {
            if (c.size() <= static_cast<std::size_t>(v)) c.resize(static_cast<std::size_t>(v) + 1);
            mpq_class p(mpz_class(std::to_string(n)), mpz_class(std::to_string(orders)));
            p.canonicalize();
            c[static_cast<std::size_t>(v)] = p;
        }
        return RationalPolynomial(std::move(c));
    };

    report.checks.push_back(sweep(suite, "enumerated law of R^[K] = z L_{K-1}(z)", 3, kmax, [&](std::size_t k) -> std::string {
        const auto& t = tallies.at(k);
        if (law(t.roots, t.orders) == cyclic_root_pgf(k)) return {};
        return "cyclic root law differs";
    }));
    report.checks.push_back(sweep(suite, "enumerated law of R_K = L_K(z) (auxiliary strip)", 3, kmax,
                                  [&](std::size_t k) -> std::string {
                                      if (enumerate_root_distribution(k, BoundaryMode::Auxiliary).as_pgf() ==
                                          aux_root_pgf(k))
                                          return {};
                                      return "auxiliary root law differs";
                                  }));
    report.checks.push_back(sweep(suite, "enumerated law of D_{i,K} = E(u^{D_{0,0,K-1}}) for every i", 3, kmax,
                                  [&](std::size_t k) -> std::string {
                                      const auto& t = tallies.at(k);
                                      for (std::size_t gap = 1; gap < k; ++gap) {
                                          if (law(t.gaps[gap - 1], t.orders) != tables(gap).distribution(k)) {
                                              return "gap i=" + std::to_string(gap) + " differs";
                                          }
                                      }
                                      return {};
                                  }));
    report.checks.push_back(sweep(suite, "sum_i D_i = R and R + sum_i i D_i = K on every order", 3, kmax,
                                  [&](std::size_t k) -> std::string {
                                      const auto& t = tallies.at(k);
                                      if (t.identity_holds == t.orders) return {};
                                      return std::to_string(t.orders - t.identity_holds) + " orders violate";
                                  }));
    return report;
}

}  // namespace balldep
