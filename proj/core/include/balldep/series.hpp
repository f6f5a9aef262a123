#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "balldep/rational_polynomial.hpp"

namespace balldep {

/// numerator(x) / denominator(x) expanded as a power series at 0.
struct RationalFunctionSeries {
    RationalPolynomial numerator;
    RationalPolynomial denominator;
};

/// First `count` Taylor coefficients, exact. Throws DomainError when the
/// denominator vanishes at 0.
std::vector<mpq_class> series_coefficients(const RationalFunctionSeries& f, std::size_t count);

/// Builds c * x^shift * prod(factors) / (scale * (1-x)^pole_order) from
/// integer coefficient lists (ascending powers).
RationalFunctionSeries make_series(long multiplier, std::size_t shift,
                                   const std::vector<std::vector<long long>>& factors,
                                   const std::string& scale, std::size_t pole_order);

/// Closed-form generating functions for the gap moments at y = z = 0.
///
/// mean_generating_function(i) = sum_K E(D_{i,K+1}) x^K (large-K regime) and
/// factorial_generating_function(i) = sum_K E(D_{i,K+1}(D_{i,K+1}-1)) x^K.
/// Only i = 1..7 are tabulated.
struct ReferenceSeries {
    std::size_t gap = 0;
    RationalFunctionSeries series;
    std::string formula;  // human-readable form, for reports
    std::string note;     // non-empty when the form differs from the usual statement
};

std::optional<ReferenceSeries> mean_generating_function(std::size_t gap);
std::optional<ReferenceSeries> factorial_generating_function(std::size_t gap);

}  // namespace balldep
