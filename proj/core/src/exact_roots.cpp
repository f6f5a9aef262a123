#include "balldep/exact_roots.hpp"

#include <cmath>
#include <mutex>
#include <string>

#include "balldep/errors.hpp"

namespace balldep {

MomentSummary pgf_moments(const RationalPolynomial& pgf) {
    for (const auto& c : pgf.coefficients()) {
        if (sgn(c) < 0) throw ValidationError("PGF has a negative coefficient");
    }
    if (pgf.evaluate(mpq_class(1)) != 1) {
        throw ValidationError("PGF does not evaluate to 1 at 1");
    }
    MomentSummary m;
    const auto d1 = pgf.derivative();
    m.mean = d1.evaluate(mpq_class(1));
    m.second_factorial_moment = d1.derivative().evaluate(mpq_class(1));
    m.variance = m.second_factorial_moment + m.mean - m.mean * m.mean;
    return m;
}

const RationalPolynomial& RootPgfTable::aux(std::size_t width) {
    if (width > kMaxRootWidth) {
        throw ResourceError("root PGF width " + std::to_string(width) + " exceeds cap " +
                            std::to_string(kMaxRootWidth));
    }
    extend_to(width);
    return table_[width];
}

void RootPgfTable::extend_to(std::size_t width) {
    // N_K = K! L_K has integer coefficients and obeys
    //   N_K = 2 N_{K-1} + z sum_{j=2}^{K-1} C(K-1, j-1) N_{j-1} N_{K-j},
    // which avoids rational arithmetic on K!-sized denominators.
    while (scaled_.size() < 3) {
        scaled_.push_back({mpz_class(scaled_.size() == 2 ? 2 : 1)});
    }
    for (std::size_t k = scaled_.size(); k <= width; ++k) {
        std::vector<mpz_class> next(k, 0);
        for (std::size_t n = 0; n < scaled_[k - 1].size(); ++n) next[n] = 2 * scaled_[k - 1][n];
        mpz_class binom = k - 1;  // C(k-1, 1)
        // the summand is symmetric under j -> k+1-j, so fold the pairs
        for (std::size_t a = 1, b = k - 2; a <= b; ++a, --b) {
            const mpz_class weight = a == b ? binom : 2 * binom;
            const auto& pa = scaled_[a];
            const auto& pb = scaled_[b];
            for (std::size_t x = 0; x < pa.size(); ++x) {
                if (pa[x] == 0) continue;
                const mpz_class wx = weight * pa[x];
                for (std::size_t y = 0; y < pb.size(); ++y) next[x + y + 1] += wx * pb[y];
            }
            binom = binom * (k - 1 - a) / (a + 1);
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        scaled_.push_back(std::move(next));
    }
    mpz_class factorial = 1;
    for (std::size_t k = 2; k < table_.size(); ++k) factorial *= static_cast<unsigned long>(k);
    for (std::size_t k = table_.size(); k <= width; ++k) {
        if (k >= 2) factorial *= static_cast<unsigned long>(k);
        std::vector<mpq_class> c;
        c.reserve(scaled_[k].size());
        for (const auto& n : scaled_[k]) {
            mpq_class q(n, factorial);
            q.canonicalize();
            c.push_back(std::move(q));
        }
        table_.emplace_back(std::move(c));
    }
}

RationalPolynomial aux_root_pgf(std::size_t width) {
    static std::mutex mutex;
    static RootPgfTable table;
    std::lock_guard lock(mutex);
    return table.aux(width);
}

RationalPolynomial cyclic_root_pgf(std::size_t width) {
    if (width < 3) {
        throw ArgumentError("cyclic root PGF needs K >= 3, got " + std::to_string(width));
    }
    return aux_root_pgf(width - 1).shifted(1);
}

std::complex<double> closed_form_L(std::complex<double> x, std::complex<double> z, double pole_tolerance) {
    if (x == 0.0) return 0.0;
    const auto s = std::sqrt(z - 1.0);
    if (std::abs(s) == 0.0) {
        if (std::abs(1.0 - x) < pole_tolerance) throw DomainError("closed form: pole at x = 1");
        return x / (1.0 - x);
    }
    const auto t = std::tan(x * s);
    const auto den = s - t;
    if (std::abs(den) < pole_tolerance * std::max(1.0, std::abs(s))) {
        throw DomainError("closed form: (x, z) too close to a pole");
    }
    return t / den;
}

HighPrecision to_high_precision(const mpq_class& q) {
    return HighPrecision(q.get_num().get_str()) / HighPrecision(q.get_den().get_str());
}

HighPrecision dominant_pole(const HighPrecision& z) {
    using boost::multiprecision::atan;
    using boost::multiprecision::atanh;
    using boost::multiprecision::sqrt;
    if (z == 1) return HighPrecision(1);
    if (z > 1) {
        const HighPrecision s = sqrt(z - 1);
        return atan(s) / s;
    }
    // tan(i t) = i tanh(t): the pole sits at atanh(t)/t with t = sqrt(1-z)
    const HighPrecision t = sqrt(1 - z);
    return atanh(t) / t;
}

HighPrecision asymptotic_root_pgf(const mpq_class& z, std::size_t width) {
    if (z == 1) throw DomainError("asymptotic form is not defined at z = 1; use the exact engine");
    if (sgn(z) <= 0) throw DomainError("asymptotic form needs z > 0");
    const HighPrecision zz = to_high_precision(z);
    const HighPrecision rho = dominant_pole(zz);
    return boost::multiprecision::pow(rho, -static_cast<long>(width) - 1) / zz;
}

double asymptotic_root_pgf(double z, std::size_t width) {
    if (!std::isfinite(z)) throw DomainError("asymptotic form needs finite z");
    return asymptotic_root_pgf(mpq_class(z), width).convert_to<double>();
}

}  // namespace balldep
