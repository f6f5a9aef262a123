#include "balldep/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "balldep/errors.hpp"

namespace balldep {

namespace {

void check_oracle_width(std::size_t width) {
    if (width < kMinWidth) throw ArgumentError("oracle needs K >= 3, got " + std::to_string(width));
    if (width > kMaxOracleWidth) {
        throw ResourceError("oracle enumeration is capped at K <= " + std::to_string(kMaxOracleWidth) +
                            " (kMaxOracleWidth), got " + std::to_string(width));
    }
}

std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t j = 2; j <= n; ++j) f *= j;
    return f;
}

ExactDistribution normalise(DistributionContext context, const std::map<long, std::uint64_t>& tally,
                            std::uint64_t orders) {
    ExactDistribution out{std::move(context), {}};
    const mpz_class den(std::to_string(orders));
    for (const auto& [value, hits] : tally) {
        mpq_class p(mpz_class(std::to_string(hits)), den);
        p.canonicalize();
        out.support.emplace(value, std::move(p));
    }
    return out;
}

// Lexicographic sweep over all rank vectors; calls visit(ranks) for each.
template <typename Visit>
std::uint64_t for_each_order(std::size_t width, Visit visit) {
    std::vector<std::uint32_t> ranks(width);
    std::iota(ranks.begin(), ranks.end(), std::uint32_t{1});
    std::uint64_t count = 0;
    do {
        visit(std::as_const(ranks));
        ++count;
    } while (std::next_permutation(ranks.begin(), ranks.end()));
    return count;
}

}  // namespace

mpq_class ExactDistribution::probability(long value) const {
    const auto it = support.find(value);
    return it == support.end() ? mpq_class(0) : it->second;
}

mpq_class ExactDistribution::mean() const {
    mpq_class m = 0;
    for (const auto& [v, p] : support) m += p * v;
    return m;
}

mpq_class ExactDistribution::variance() const {
    mpq_class second = 0;
    for (const auto& [v, p] : support) second += p * v * v;
    const mpq_class m = mean();
    return second - m * m;
}

RationalPolynomial ExactDistribution::as_pgf() const {
    if (support.empty()) return {};
    if (support.begin()->first < 0) throw DomainError("PGF needs a non-negative support");
    std::vector<mpq_class> coeffs(static_cast<std::size_t>(support.rbegin()->first) + 1);
    for (const auto& [v, p] : support) coeffs[static_cast<std::size_t>(v)] = p;
    return RationalPolynomial(std::move(coeffs));
}

EnumerationTally enumerate_cyclic(std::size_t width) {
    check_oracle_width(width);
    EnumerationTally tally;
    tally.width = width;
    tally.gaps.resize(width - 1);
    tally.orders = for_each_order(width, [&](const std::vector<std::uint32_t>& ranks) {
        const auto roots = roots_from_permutation(FirstHitPermutation(ranks), BoundaryMode::Cyclic);
        const auto gaps = gap_vector(roots);
        const long r = static_cast<long>(roots.size());
        ++tally.roots[r];
        long total = 0;
        long weighted = 0;
        for (std::size_t i = 1; i < width; ++i) {
            const long d = gaps.counts[i - 1];
            ++tally.gaps[i - 1][d];
            total += d;
            weighted += static_cast<long>(i) * d;
        }
        if (total == r && r + weighted == static_cast<long>(width)) ++tally.identity_holds;
    });
    return tally;
}

ExactDistribution enumerate_root_distribution(std::size_t width, BoundaryMode mode) {
    check_oracle_width(width);
    std::map<long, std::uint64_t> tally;
    const auto orders = for_each_order(width, [&](const std::vector<std::uint32_t>& ranks) {
        ++tally[static_cast<long>(roots_from_permutation(FirstHitPermutation(ranks), mode).size())];
    });
    return normalise(DistributionContext{"roots", width, mode, std::nullopt}, tally, orders);
}

ExactDistribution enumerate_gap_distribution(std::size_t width, std::size_t gap) {
    check_oracle_width(width);
    if (gap < 1 || gap > width - 1) {
        throw ArgumentError("gap length " + std::to_string(gap) + " outside 1.." + std::to_string(width - 1));
    }
    std::map<long, std::uint64_t> tally;
    const auto orders = for_each_order(width, [&](const std::vector<std::uint32_t>& ranks) {
        const auto roots = roots_from_permutation(FirstHitPermutation(ranks), BoundaryMode::Cyclic);
        ++tally[static_cast<long>(gap_vector(roots).counts[gap - 1])];
    });
    if (orders != factorial(width)) throw std::logic_error("enumeration skipped orders");
    return normalise(DistributionContext{"gap", width, BoundaryMode::Cyclic, gap}, tally, orders);
}

}  // namespace balldep
