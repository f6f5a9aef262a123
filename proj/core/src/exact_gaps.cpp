#include "balldep/exact_gaps.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "balldep/errors.hpp"

namespace balldep {

namespace {

std::string frontier(std::size_t l, std::size_t r, std::size_t k) {
    return "(l=" + std::to_string(l) + ", r=" + std::to_string(r) + ", k=" + std::to_string(k) + ")";
}

std::size_t footprint(const CountPolynomial& p) {
    std::size_t bytes = sizeof(CountPolynomial) + p.capacity() * sizeof(mpz_class);
    for (const auto& c : p) bytes += mpz_size(c.get_mpz_t()) * sizeof(mp_limb_t);
    return bytes;
}

void add_into(CountPolynomial& acc, const CountPolynomial& p) {
    if (p.size() > acc.size()) acc.resize(p.size());
    for (std::size_t n = 0; n < p.size(); ++n) acc[n] += p[n];
}

// acc += weight * (a * b)
void add_weighted_product(CountPolynomial& acc, const CountPolynomial& a, const CountPolynomial& b,
                          const mpz_class& weight, CountPolynomial& scratch) {
    const std::size_t len = a.size() + b.size() - 1;
    scratch.resize(len);
    for (auto& c : scratch) c = 0;
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (sgn(a[x]) == 0) continue;
        for (std::size_t y = 0; y < b.size(); ++y) {
            mpz_addmul(scratch[x + y].get_mpz_t(), a[x].get_mpz_t(), b[y].get_mpz_t());
        }
    }
    if (len > acc.size()) acc.resize(len);
    for (std::size_t n = 0; n < len; ++n) {
        mpz_addmul(acc[n].get_mpz_t(), scratch[n].get_mpz_t(), weight.get_mpz_t());
    }
}

}  // namespace

GapRecursionTable::GapRecursionTable(std::size_t gap, std::size_t k_max, GapTableOptions options)
    : gap_(gap), k_max_(k_max), options_(options) {
    if (gap == 0) throw ArgumentError("gap length i must be >= 1");
    if (k_max > kMaxGapWidth) {
        throw ResourceError("gap table k_max " + std::to_string(k_max) + " exceeds cap " +
                            std::to_string(kMaxGapWidth));
    }

    factorials_.resize(k_max + 1);
    factorials_[0] = 1;
    for (std::size_t n = 1; n <= k_max; ++n) factorials_[n] = factorials_[n - 1] * static_cast<unsigned long>(n);

    // binomials[m][j] = C(m, j)
    std::vector<std::vector<mpz_class>> binomials(k_max + 1);
    for (std::size_t m = 0; m <= k_max; ++m) {
        binomials[m].resize(m + 1);
        for (std::size_t j = 0; j <= m; ++j) mpz_bin_uiui(binomials[m][j].get_mpz_t(), m, j);
    }

    CountPolynomial scratch;
    table_.resize(k_max + 1);
    for (std::size_t k = 0; k <= k_max; ++k) {
        auto& layer = table_[k];
        layer.resize(k + 1);
        for (std::size_t l = 0; l <= k; ++l) {
            if (options_.fold_symmetry) {
                layer[l].resize(k >= 2 * l ? k - 2 * l + 1 : 0);
            } else {
                layer[l].resize(k - l + 1);
            }
        }

        // same-k dependencies have larger l + r, so sweep l + r downwards
        for (std::size_t s = k + 1; s-- > 0;) {
            const std::size_t m = k - s;
            for (std::size_t l = 0; l <= s; ++l) {
                const std::size_t r = s - l;
                if (options_.fold_symmetry && l > r) continue;
                CountPolynomial n;
                if (m <= 2) {
                    n.assign(k == gap ? 2 : 1, mpz_class(0));
                    n.back() = factorials_[m];
                } else {
                    n = slot(l + 1, r, k);
                    add_into(n, slot(l, r + 1, k));
                    for (std::size_t j = 2; j + 1 <= m; ++j) {
                        add_weighted_product(n, slot(l, 0, j + l - 1), slot(0, r, k - j - l),
                                             binomials[m - 1][j - 1], scratch);
                    }
                    while (!n.empty() && sgn(n.back()) == 0) n.pop_back();
                }
                check_entry(l, r, k, n);
                bytes_ += footprint(n);
                ++entries_;
                if (bytes_ > options_.memory_budget_bytes) {
                    throw ResourceError("gap table memory budget of " +
                                        std::to_string(options_.memory_budget_bytes) +
                                        " bytes exceeded at " + frontier(l, r, k));
                }
                slot(l, r, k) = std::move(n);
            }
        }
    }
}

void GapRecursionTable::check_entry(std::size_t l, std::size_t r, std::size_t k, const CountPolynomial& n) const {
    mpz_class total = 0;
    for (const auto& c : n) {
        if (sgn(c) < 0) throw std::logic_error("negative gap count at " + frontier(l, r, k));
        total += c;
    }
    if (total != factorials_[k - l - r]) {
        throw std::logic_error("gap PGF not normalised at " + frontier(l, r, k));
    }
    if (!n.empty() && n.size() - 1 > k / (gap_ + 1) + 1) {
        throw std::logic_error("gap PGF degree bound violated at " + frontier(l, r, k));
    }
}

const CountPolynomial& GapRecursionTable::slot(std::size_t l, std::size_t r, std::size_t k) const {
    if (options_.fold_symmetry) {
        if (l > r) std::swap(l, r);
        return table_[k][l][r - l];
    }
    return table_[k][l][r];
}

CountPolynomial& GapRecursionTable::slot(std::size_t l, std::size_t r, std::size_t k) {
    return const_cast<CountPolynomial&>(std::as_const(*this).slot(l, r, k));
}

const CountPolynomial& GapRecursionTable::counts(std::size_t l, std::size_t r, std::size_t k) const {
    if (k > k_max_ || l + r > k) {
        throw ArgumentError("gap table has no entry " + frontier(l, r, k));
    }
    return slot(l, r, k);
}

RationalPolynomial GapRecursionTable::pgf(std::size_t l, std::size_t r, std::size_t k) const {
    const auto& n = counts(l, r, k);
    const mpz_class& den = factorials_[k - l - r];
    std::vector<mpq_class> coeffs;
    coeffs.reserve(n.size());
    for (const auto& c : n) {
        mpq_class q(c, den);
        q.canonicalize();
        coeffs.push_back(std::move(q));
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial GapRecursionTable::distribution(std::size_t width) const {
    if (width < 3 || width - 1 > k_max_) {
        throw ArgumentError("width " + std::to_string(width) + " outside 3.." + std::to_string(k_max_ + 1));
    }
    return pgf(0, 0, width - 1);
}

GapRecursionTable gap_pgf_table(std::size_t gap, std::size_t k_max, GapTableOptions options) {
    return GapRecursionTable(gap, k_max, options);
}

RationalPolynomial gap_distribution(std::size_t gap, std::size_t width) {
    if (width < 3) throw ArgumentError("gap distribution needs K >= 3, got " + std::to_string(width));
    if (gap < 1 || gap > width - 1) {
        throw ArgumentError("gap length " + std::to_string(gap) + " outside 1.." + std::to_string(width - 1));
    }
    return GapRecursionTable(gap, width - 1).distribution(width);
}

MomentSummary gap_moments(std::size_t gap, std::size_t width) {
    return pgf_moments(gap_distribution(gap, width));
}

std::size_t abc_degree(std::size_t index) {
    const long k = static_cast<long>(index);
    return static_cast<std::size_t>((2 * k - 1 - 3 * (index % 2 == 0 ? 1 : -1)) / 4);
}

std::vector<AbcTriple> abc_recursion(std::size_t k_max) {
    if (k_max < 3) throw ArgumentError("abc recursion needs K_max >= 3");
    const RationalPolynomial one_minus_u{mpq_class(1), mpq_class(-1)};
    const RationalPolynomial u{mpq_class(0), mpq_class(1)};
    const auto indicator = [](std::size_t k, std::size_t at, const RationalPolynomial& p) {
        return k == at ? p : RationalPolynomial{};
    };

    // zero below index 3
    std::vector<RationalPolynomial> a(k_max + 1), b(k_max + 1), c(k_max + 1);
    for (std::size_t k = 2; k + 1 <= k_max; ++k) {
        RationalPolynomial bb, bc, cc;
        for (std::size_t j = 3; j + 3 <= k; ++j) {
            bb += b[j] * b[k - j];
            bc += b[j] * c[k - j];
            cc += c[j] * c[k - j];
        }
        const mpq_class scale(1, static_cast<unsigned long>(k + 1));

        auto next_a = indicator(k, 2, one_minus_u * one_minus_u) + bb + mpq_class(2) * (one_minus_u * b[k - 1]);

        auto next_b = a[k] + b[k] + bc + u * b[k - 1] + b[k - 2] + one_minus_u * c[k - 1] +
                      indicator(k, 2, u * one_minus_u) + indicator(k, 3, one_minus_u);

        auto next_c = mpq_class(2) * b[k] + mpq_class(2) * c[k] + cc + mpq_class(2) * (u * c[k - 1]) +
                      mpq_class(2) * c[k - 2] + indicator(k, 2, RationalPolynomial{2, 0, 1}) +
                      indicator(k, 3, RationalPolynomial{0, 2}) + indicator(k, 4, RationalPolynomial{1});

        a[k + 1] = next_a * scale;
        b[k + 1] = next_b * scale;
        c[k + 1] = next_c * scale;
    }

    std::vector<AbcTriple> out;
    out.reserve(k_max - 2);
    for (std::size_t k = 3; k <= k_max; ++k) out.push_back(AbcTriple{k, a[k], b[k], c[k]});
    return out;
}

}  // namespace balldep
