#pragma once

// Brute-force laws for small strips. Every one of the K! first-hit orders is
// visited once with weight 1/K!; only the order in which sites are first
// targeted decides which of them end up as roots.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "balldep/process.hpp"
#include "balldep/rational_polynomial.hpp"

namespace balldep {

/// Enumeration is K!; 10! = 3628800 orders.
inline constexpr std::size_t kMaxOracleWidth = 10;

struct DistributionContext {
    std::string statistic;  // "roots" or "gap"
    std::size_t width = 0;
    BoundaryMode mode = BoundaryMode::Cyclic;
    std::optional<std::size_t> gap;
};

struct ExactDistribution {
    DistributionContext context;
    std::map<long, mpq_class> support;

    mpq_class probability(long value) const;
    mpq_class mean() const;
    mpq_class variance() const;
    /// Same law as a PGF: coefficient n = P(X = n). Requires non-negative support.
    RationalPolynomial as_pgf() const;
};

ExactDistribution enumerate_root_distribution(std::size_t width, BoundaryMode mode);
ExactDistribution enumerate_gap_distribution(std::size_t width, std::size_t gap);

/// Raw tallies from one sweep over all orders of a cyclic strip.
struct EnumerationTally {
    std::size_t width = 0;
    std::uint64_t orders = 0;  // K!
    std::map<long, std::uint64_t> roots;
    std::vector<std::map<long, std::uint64_t>> gaps;  // gaps[i-1]
    /// Orders on which sum_i D_i = R and R + sum_i i D_i = K both held.
    std::uint64_t identity_holds = 0;
};

/// Single pass collecting the root count and every D_i at once.
EnumerationTally enumerate_cyclic(std::size_t width);

}  // namespace balldep
