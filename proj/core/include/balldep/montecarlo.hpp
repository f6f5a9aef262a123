#pragma once

// Seeded ensemble simulation of the deposition process.
//
// Run j draws from its own std::mt19937_64 seeded by std::seed_seq over
// (base_seed, j), so every statistic depends only on (config, base_seed) and
// never on how runs are split across workers.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "balldep/process.hpp"

namespace balldep {

inline constexpr std::size_t kDefaultRuns = 200000;
inline constexpr const char* kGeneratorId = "std::mt19937_64/seed_seq(base_seed,run)/v1";

std::mt19937_64 run_stream(std::uint64_t base_seed, std::uint64_t run);

struct StatisticSet {
    bool roots = false;
    std::vector<std::size_t> gap_lengths;  // gaps(i list); cyclic only
    bool empirical_gap_average = false;    // K/R - 1; cyclic only
    std::optional<std::uint64_t> height_growth_steps;
};

struct EnsembleConfig {
    std::size_t width = 0;
    BoundaryMode mode = BoundaryMode::Cyclic;
    std::size_t runs = kDefaultRuns;
    std::uint64_t base_seed = 0;
    StatisticSet statistics;
    std::size_t workers = 1;
    /// Use the full height simulation instead of the first-hit permutation.
    bool full_simulation = false;
    /// Keep per-run samples in the returned stats (needed for KS distances).
    bool keep_samples = true;
};

/// Throws ConfigError (or ArgumentError for K < 3) on an invalid combination.
void validate(const EnsembleConfig& cfg);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

struct HistogramBin {
    double lower = 0.0;
    double upper = 0.0;  // lower == upper for unit bins of integer statistics
    std::uint64_t count = 0;
};

struct StatisticSummary {
    std::string name;
    bool integer_valued = true;
    std::uint64_t count = 0;
    double sum = 0.0;
    double sum_of_squares = 0.0;
    std::vector<HistogramBin> histogram;
    std::vector<double> samples;  // run order; empty unless keep_samples

    double mean() const noexcept;
    /// Unbiased sample variance; 0 for fewer than two samples.
    double variance() const noexcept;
};

/// Builds a summary from per-run values. Integer statistics get unit bins
/// over the observed range, real ones 200 bins over mean +/- 5 sd.
StatisticSummary summarise(std::string name, std::span<const double> values, bool integer_valued,
                           bool keep_samples);

struct EnsembleStats {
    EnsembleConfig config;
    std::map<std::string, StatisticSummary> statistics;  // "roots", "gap_<i>", "empirical_gap_average", "height_growth"
    double runtime_seconds = 0.0;

    /// Merges another shard of the same statistic family (associative, exact
    /// for integer statistics).
    void merge(const EnsembleStats& other);
};

EnsembleStats run_ensemble(const EnsembleConfig& cfg);

/// K / card(roots) - 1. Throws ModeError outside cyclic mode, DomainError if empty.
double empirical_gap_average(const RootSet& roots);

/// sup_x |F_n(x) - Phi(x)| for samples standardised by (mean, sd). With
/// `lattice_span` > 0 the samples live on a lattice of that spacing and the
/// normal CDF is compared at half-span offsets (continuity correction).
/// Throws DomainError when sd <= 0 or samples are empty.
double normalized_ks_statistic(std::span<const double> samples, double mean, double sd,
                               double lattice_span = 0.0);

double standard_normal_cdf(double x) noexcept;

/// max_k H_n(k) / n after n depositions on a cyclic strip. Throws
/// ArgumentError for n == 0.
double height_growth_estimate(std::size_t width, std::uint64_t steps, std::mt19937_64& rng);

}  // namespace balldep
