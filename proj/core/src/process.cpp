#include "balldep/process.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "balldep/errors.hpp"

namespace balldep {

namespace {

void check_width(std::size_t width) {
    if (width < kMinWidth) {
        throw ArgumentError("strip width K must be >= 3, got " + std::to_string(width));
    }
}

void check_site(std::size_t site, std::size_t width) {
    if (site < 1 || site > width) {
        throw ArgumentError("site " + std::to_string(site) + " outside 1.." + std::to_string(width));
    }
}

// A site is a root iff it is targeted before every real neighbour; in
// auxiliary mode sites 1 and K touch a pinned boundary cell and never are.
template <typename RankAt>
std::vector<std::size_t> local_minima(std::size_t width, BoundaryMode mode, RankAt rank_at) {
    std::vector<std::size_t> roots;
    roots.reserve(width / 3 + 1);
    if (mode == BoundaryMode::Cyclic) {
        for (std::size_t k = 1; k <= width; ++k) {
            const std::size_t left = k == 1 ? width : k - 1;
            const std::size_t right = k == width ? 1 : k + 1;
            const auto r = rank_at(k);
            if (r < rank_at(left) && r < rank_at(right)) roots.push_back(k);
        }
    } else {
        for (std::size_t k = 2; k + 1 <= width; ++k) {
            const auto r = rank_at(k);
            if (r < rank_at(k - 1) && r < rank_at(k + 1)) roots.push_back(k);
        }
    }
    return roots;
}

}  // namespace

std::string_view to_string(BoundaryMode mode) noexcept {
    return mode == BoundaryMode::Cyclic ? "cyclic" : "aux";
}

BoundaryMode parse_boundary_mode(std::string_view text) {
    if (text == "cyclic") return BoundaryMode::Cyclic;
    if (text == "aux" || text == "auxiliary") return BoundaryMode::Auxiliary;
    throw ArgumentError("unknown boundary mode '" + std::string(text) + "' (expected cyclic|aux)");
}

std::array<std::size_t, 3> neighbor_set(std::size_t site, std::size_t width, BoundaryMode mode) {
    check_width(width);
    check_site(site, width);
    if (mode == BoundaryMode::Auxiliary) return {site - 1, site, site + 1};
    const std::size_t left = site == 1 ? width : site - 1;
    const std::size_t right = site == width ? 1 : site + 1;
    return {left, site, right};
}

HeightField::HeightField(std::size_t width, BoundaryMode mode) : mode_(mode) {
    check_width(width);
    heights_.assign(width, 0);
}

HeightField HeightField::from_heights(std::vector<std::uint64_t> heights, BoundaryMode mode,
                                      std::uint64_t deposited) {
    check_width(heights.size());
    HeightField field(heights.size(), mode);
    field.heights_ = std::move(heights);
    field.deposited_ = deposited;
    return field;
}

std::uint64_t HeightField::height(std::size_t label) const {
    const std::size_t width = heights_.size();
    if (label > width + 1) {
        throw ArgumentError("label " + std::to_string(label) + " outside 0.." + std::to_string(width + 1));
    }
    if (label == 0 || label == width + 1) {
        if (mode_ == BoundaryMode::Auxiliary) return 1;
        return heights_[label == 0 ? width - 1 : 0];
    }
    return heights_[label - 1];
}

std::uint64_t HeightField::deposit(std::size_t site) {
    const std::size_t width = heights_.size();
    check_site(site, width);
    if (deposited_ >= kMaxDepositions) {
        throw ResourceError("deposition count capped at 2^40 per run");
    }
    std::uint64_t top = heights_[site - 1];
    if (mode_ == BoundaryMode::Cyclic) {
        top = std::max({top, heights_[site == 1 ? width - 1 : site - 2], heights_[site == width ? 0 : site]});
    } else {
        const std::uint64_t left = site == 1 ? 1 : heights_[site - 2];
        const std::uint64_t right = site == width ? 1 : heights_[site];
        top = std::max({top, left, right});
    }
    const std::uint64_t next = top == std::numeric_limits<std::uint64_t>::max() ? top : top + 1;
    heights_[site - 1] = next;
    ++deposited_;
    return next;
}

HeightField deposit(HeightField field, std::size_t site) {
    field.deposit(site);
    return field;
}

HeightProfile height_profile_stats(const HeightField& field) {
    HeightProfile out;
    long double total = 0;
    for (const auto h : field.heights()) {
        out.max_height = std::max(out.max_height, h);
        total += static_cast<long double>(h);
    }
    out.mean_height = static_cast<double>(total / static_cast<long double>(field.width()));
    return out;
}

FirstHitPermutation::FirstHitPermutation(std::vector<std::uint32_t> ranks) : ranks_(std::move(ranks)) {
    std::vector<bool> seen(ranks_.size() + 1, false);
    for (const auto r : ranks_) {
        if (r < 1 || r > ranks_.size() || seen[r]) {
            throw ArgumentError("ranks are not a permutation of 1..K");
        }
        seen[r] = true;
    }
}

FirstHitPermutation FirstHitPermutation::from_targets(std::span<const std::size_t> targets, std::size_t width) {
    check_width(width);
    FirstHitPermutation perm;
    perm.ranks_.assign(width, 0);
    std::uint32_t next = 1;
    for (const auto t : targets) {
        check_site(t, width);
        if (perm.ranks_[t - 1] == 0) perm.ranks_[t - 1] = next++;
    }
    if (next != width + 1) {
        throw ArgumentError("target sequence does not cover every site");
    }
    return perm;
}

FirstHitPermutation FirstHitPermutation::sample(std::size_t width, std::mt19937_64& rng) {
    check_width(width);
    FirstHitPermutation perm;
    perm.ranks_.resize(width);
    std::iota(perm.ranks_.begin(), perm.ranks_.end(), std::uint32_t{1});
    for (std::size_t j = width - 1; j > 0; --j) {
        std::uniform_int_distribution<std::size_t> pick(0, j);
        std::swap(perm.ranks_[j], perm.ranks_[pick(rng)]);
    }
    return perm;
}

RootSet roots_from_permutation(const FirstHitPermutation& perm, BoundaryMode mode) {
    const auto ranks = perm.ranks();
    return RootSet{perm.width(), mode,
                   local_minima(perm.width(), mode, [&](std::size_t k) { return ranks[k - 1]; })};
}

RootSet sample_final_roots(std::size_t width, BoundaryMode mode, std::mt19937_64& rng) {
    return roots_from_permutation(FirstHitPermutation::sample(width, rng), mode);
}

GapVector gap_vector(const RootSet& roots) {
    if (roots.mode != BoundaryMode::Cyclic) {
        throw ModeError("gap counts are defined for the cyclic process only");
    }
    if (roots.roots.empty()) {
        throw ArgumentError("cyclic root set cannot be empty");
    }
    const std::size_t width = roots.width;
    GapVector out{width, std::vector<std::uint32_t>(width - 1, 0)};
    const auto& r = roots.roots;
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
        ++out.counts[r[j + 1] - r[j] - 2];
    }
    // wrap pair: circular distance K - (r_last - r_first)
    ++out.counts[width - (r.back() - r.front()) - 2];
    return out;
}

RootSet roots_from_targets(std::span<const std::size_t> targets, std::size_t width, BoundaryMode mode) {
    HeightField field(width, mode);
    std::vector<bool> is_root(width, false);
    for (const auto t : targets) {
        if (field.deposit(t) == 1) is_root[t - 1] = true;
    }
    RootSet out{width, mode, {}};
    for (std::size_t k = 1; k <= width; ++k) {
        if (is_root[k - 1]) out.roots.push_back(k);
    }
    return out;
}

SimulationResult simulate_final_roots(std::size_t width, BoundaryMode mode, std::mt19937_64& rng) {
    HeightField field(width, mode);
    std::uniform_int_distribution<std::size_t> pick(1, width);
    std::vector<bool> hit(width, false);
    std::vector<std::size_t> roots;
    std::size_t remaining = width;
    while (remaining > 0) {
        const std::size_t site = pick(rng);
        const auto h = field.deposit(site);
        if (!hit[site - 1]) {
            hit[site - 1] = true;
            --remaining;
            if (h == 1) roots.push_back(site);
        }
    }
    std::sort(roots.begin(), roots.end());
    RootSet root_set{width, mode, std::move(roots)};
    std::optional<GapVector> gaps;
    if (mode == BoundaryMode::Cyclic) gaps = gap_vector(root_set);
    return SimulationResult{std::move(root_set), std::move(gaps), std::move(field)};
}

}  // namespace balldep
