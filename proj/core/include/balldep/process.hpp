#pragma once

// Ballistic deposition on a strip of K sites.
//
// Sites are labelled 1..K throughout the public API. In cyclic mode site K
// neighbours site 1; in auxiliary mode the strip is an interval with two
// pinned height-1 cells at the virtual labels 0 and K+1.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace balldep {

enum class BoundaryMode { Cyclic, Auxiliary };

std::string_view to_string(BoundaryMode mode) noexcept;
/// Accepts "cyclic" and "aux"/"auxiliary"; throws ArgumentError otherwise.
BoundaryMode parse_boundary_mode(std::string_view text);

/// Smallest admissible strip width.
inline constexpr std::size_t kMinWidth = 3;
/// Particle-count cap for a single height simulation.
inline constexpr std::uint64_t kMaxDepositions = std::uint64_t{1} << 40;

/// Neighbourhood I(k) in (left, self, right) order. Auxiliary mode may return
/// the boundary labels 0 and K+1.
std::array<std::size_t, 3> neighbor_set(std::size_t site, std::size_t width, BoundaryMode mode);

class HeightField {
public:
    HeightField(std::size_t width, BoundaryMode mode);

    std::size_t width() const noexcept { return heights_.size(); }
    BoundaryMode mode() const noexcept { return mode_; }
    std::uint64_t deposited() const noexcept { return deposited_; }

    /// Height at a label in 0..K+1; the auxiliary boundary cells read as 1,
    /// in cyclic mode labels 0 and K+1 wrap.
    std::uint64_t height(std::size_t label) const;
    std::span<const std::uint64_t> heights() const noexcept { return heights_; }

    /// Drops one particle on `site` and returns its new height. Heights
    /// saturate at the uint64 maximum.
    std::uint64_t deposit(std::size_t site);

    /// Builds a field from explicit heights (test fixtures, replay).
    static HeightField from_heights(std::vector<std::uint64_t> heights, BoundaryMode mode,
                                    std::uint64_t deposited = 0);

private:
    std::vector<std::uint64_t> heights_;
    BoundaryMode mode_;
    std::uint64_t deposited_ = 0;
};

/// Value-semantic form of HeightField::deposit.
HeightField deposit(HeightField field, std::size_t site);

struct HeightProfile {
    std::uint64_t max_height = 0;
    double mean_height = 0.0;
};

HeightProfile height_profile_stats(const HeightField& field);

/// ranks[k-1] is the rank (1..K) of the first time site k is targeted.
class FirstHitPermutation {
public:
    /// Throws ArgumentError unless `ranks` is a bijection onto 1..K.
    explicit FirstHitPermutation(std::vector<std::uint32_t> ranks);

    /// Ranks from a sequence of targets; only the first occurrence of each
    /// site counts. Every site 1..K must appear.
    static FirstHitPermutation from_targets(std::span<const std::size_t> targets, std::size_t width);

    /// Uniform permutation by Fisher-Yates.
    static FirstHitPermutation sample(std::size_t width, std::mt19937_64& rng);

    std::size_t width() const noexcept { return ranks_.size(); }
    std::uint32_t rank(std::size_t site) const { return ranks_.at(site - 1); }
    std::span<const std::uint32_t> ranks() const noexcept { return ranks_; }

private:
    FirstHitPermutation() = default;
    std::vector<std::uint32_t> ranks_;
};

struct RootSet {
    std::size_t width = 0;
    BoundaryMode mode = BoundaryMode::Cyclic;
    std::vector<std::size_t> roots;  // strictly increasing, labels in 1..K

    std::size_t size() const noexcept { return roots.size(); }
};

/// counts[i-1] = D_{i,K}, the number of consecutive root pairs at circular
/// distance i+1, for i = 1..K-1.
struct GapVector {
    std::size_t width = 0;
    std::vector<std::uint32_t> counts;

    std::uint32_t count(std::size_t gap) const { return counts.at(gap - 1); }
};

RootSet roots_from_permutation(const FirstHitPermutation& perm, BoundaryMode mode);

/// Roots of a uniform first-hit order without materialising the permutation
/// object; draws exactly what FirstHitPermutation::sample draws.
RootSet sample_final_roots(std::size_t width, BoundaryMode mode, std::mt19937_64& rng);

/// Throws ModeError for auxiliary root sets.
GapVector gap_vector(const RootSet& roots);

struct SimulationResult {
    RootSet roots;
    std::optional<GapVector> gaps;  // cyclic mode only
    HeightField field;
};

/// Full height simulation until every site has been targeted once.
SimulationResult simulate_final_roots(std::size_t width, BoundaryMode mode, std::mt19937_64& rng);

/// Replays a fixed target sequence; roots are the sites that reached height 1.
RootSet roots_from_targets(std::span<const std::size_t> targets, std::size_t width, BoundaryMode mode);

}  // namespace balldep
