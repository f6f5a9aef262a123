#pragma once

// Exact law of the gap counts D_{i,K}.
//
// Consider an interval of k sites between two roots, whose left l sites and
// right r sites are already covered by particles that do not touch the ground,
// leaving m = k - l - r free sites. Let D_{l,r,k} count the root pairs at
// distance i+1 formed inside. The first particle to land in the free region
// either extends a covered block (positions 1 and m) or becomes a new root
// that splits the interval, so for m >= 3
//
//   m E(u^{D_{l,r,k}}) = E(u^{D_{l+1,r,k}}) + E(u^{D_{l,r+1,k}})
//                      + sum_{j=2}^{m-1} E(u^{D_{l,0,j+l-1}}) E(u^{D_{0,r,k-j-l}}),
//
// and for m <= 2 no further root can appear: E(u^{D_{l,r,k}}) = u^{[k == i]}.
// The cyclic count is D_{i,K} =d D_{0,0,K-1}.
//
// Entries are stored as integer polynomials N = m! * PGF. Multiplying the
// recursion by (m-1)! turns the convolution weights into binomials
// C(m-1, j-1), so the whole table is built with integer arithmetic only.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "balldep/exact_roots.hpp"
#include "balldep/rational_polynomial.hpp"

namespace balldep {

/// Largest interval length the gap engine accepts.
inline constexpr std::size_t kMaxGapWidth = 96;

/// Integer coefficient vector, index = power of u.
using CountPolynomial = std::vector<mpz_class>;

struct GapTableOptions {
    /// Store only l <= r and answer (r, l, k) from (l, r, k).
    bool fold_symmetry = true;
    /// Hard cap on the estimated heap footprint of stored coefficients.
    std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

class GapRecursionTable {
public:
    /// Builds every entry with 0 <= l, r and l + r <= k <= k_max.
    /// Throws ArgumentError for gap == 0, ResourceError when the budget is hit.
    GapRecursionTable(std::size_t gap, std::size_t k_max, GapTableOptions options = {});

    std::size_t gap() const noexcept { return gap_; }
    std::size_t k_max() const noexcept { return k_max_; }
    bool folded() const noexcept { return options_.fold_symmetry; }

    /// m! * E(u^{D_{l,r,k}}) with m = k - l - r.
    const CountPolynomial& counts(std::size_t l, std::size_t r, std::size_t k) const;
    /// E(u^{D_{l,r,k}}).
    RationalPolynomial pgf(std::size_t l, std::size_t r, std::size_t k) const;
    /// PGF of D_{i,K} for the cyclic strip of width K (entry (0, 0, K-1)).
    RationalPolynomial distribution(std::size_t width) const;

    std::size_t entry_count() const noexcept { return entries_; }
    std::size_t memory_bytes() const noexcept { return bytes_; }

private:
    const CountPolynomial& slot(std::size_t l, std::size_t r, std::size_t k) const;
    CountPolynomial& slot(std::size_t l, std::size_t r, std::size_t k);
    void check_entry(std::size_t l, std::size_t r, std::size_t k, const CountPolynomial& n) const;

    std::size_t gap_;
    std::size_t k_max_;
    GapTableOptions options_;
    // table_[k][l][r'] where r' = r - l when folded, r otherwise
    std::vector<std::vector<std::vector<CountPolynomial>>> table_;
    std::vector<mpz_class> factorials_;
    std::size_t entries_ = 0;
    std::size_t bytes_ = 0;
};

GapRecursionTable gap_pgf_table(std::size_t gap, std::size_t k_max, GapTableOptions options = {});

/// PGF of D_{i,K}. Throws ArgumentError unless 1 <= i <= K-1 and K >= 3.
RationalPolynomial gap_distribution(std::size_t gap, std::size_t width);

MomentSummary gap_moments(std::size_t gap, std::size_t width);

/// The i = 1 generating function has the form
///   sum_K (a_K(u) y z + b_K(u)(y + z) + c_K(u)) / ((1-y)(1-z)) x^K
/// and c_K(u) = E(u^{D_{1,K+1}}).
struct AbcTriple {
    std::size_t index = 0;
    RationalPolynomial a;
    RationalPolynomial b;
    RationalPolynomial c;
};

/// Triples for K = 3..k_max from the three coupled recursions.
std::vector<AbcTriple> abc_recursion(std::size_t k_max);

/// (2K - 1 - 3(-1)^K) / 4, the common degree of a_K, b_K, c_K.
std::size_t abc_degree(std::size_t index);

}  // namespace balldep
