#pragma once

// Exact law of the root count.
//
// R_K is the eventual number of roots of the auxiliary process on K sites and
// L_K(z) = E(z^{R_K}) its PGF. The first particle splits the strip, giving
//   L_0 = L_1 = L_2 = 1,
//   K L_K(z) = 2 L_{K-1}(z) + z * sum_{j=2}^{K-1} L_{j-1}(z) L_{K-j}(z).
// The cyclic count satisfies R^{[K]} =d R_{K-1} + 1.

#include <complex>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "balldep/rational_polynomial.hpp"

namespace balldep {

/// Largest width the root-count engines accept.
inline constexpr std::size_t kMaxRootWidth = 400;

struct MomentSummary {
    mpq_class mean;
    mpq_class variance;
    mpq_class second_factorial_moment;
};

/// Mean, variance and second factorial moment of a PGF.
/// Throws ValidationError if `pgf` has a negative coefficient or p(1) != 1.
MomentSummary pgf_moments(const RationalPolynomial& pgf);

/// Memoised table of L_0..L_K, built bottom-up.
class RootPgfTable {
public:
    RootPgfTable() = default;

    /// L_K(z); extends the table as needed. Throws ResourceError past kMaxRootWidth.
    const RationalPolynomial& aux(std::size_t width);
    std::size_t size() const noexcept { return table_.size(); }

private:
    void extend_to(std::size_t width);
    std::vector<std::vector<mpz_class>> scaled_;  // K! L_K
    std::vector<RationalPolynomial> table_;
};

/// L_K(z) via a process-wide table guarded by a mutex.
RationalPolynomial aux_root_pgf(std::size_t width);

/// PGF of the cyclic count, z * L_{K-1}(z). Throws ArgumentError for K < 3.
RationalPolynomial cyclic_root_pgf(std::size_t width);

/// Closed form of L(x,z) = sum_{K>=1} L_K(z) x^K near (0,1):
///   tan(x s) / (s - tan(x s)),  s = sqrt(z-1),
/// with the removable branch x/(1-x) at z = 1. Throws DomainError when the
/// denominator is within `pole_tolerance` of zero.
std::complex<double> closed_form_L(std::complex<double> x, std::complex<double> z,
                                   double pole_tolerance = 1e-12);

using HighPrecision = boost::multiprecision::cpp_bin_float_100;

/// Dominant pole rho_0(z) = atan(sqrt(z-1)) / sqrt(z-1) for real z != 1
/// (atanh form below 1). rho_0 -> 1 as z -> 1.
HighPrecision dominant_pole(const HighPrecision& z);

/// rho_0(z)^{-K-1} / z. Throws DomainError at z = 1 or z <= 0.
HighPrecision asymptotic_root_pgf(const mpq_class& z, std::size_t width);
double asymptotic_root_pgf(double z, std::size_t width);

/// Exact rational to extended precision.
HighPrecision to_high_precision(const mpq_class& q);

}  // namespace balldep
