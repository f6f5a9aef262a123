#include "balldep/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>
#include <thread>

#include "balldep/errors.hpp"

namespace balldep {

std::mt19937_64 run_stream(std::uint64_t base_seed, std::uint64_t run) {
    std::seed_seq seq{static_cast<std::uint32_t>(base_seed), static_cast<std::uint32_t>(base_seed >> 32),
                      static_cast<std::uint32_t>(run), static_cast<std::uint32_t>(run >> 32)};
    return std::mt19937_64(seq);
}

void validate(const EnsembleConfig& cfg) {
    if (cfg.width < kMinWidth) {
        throw ArgumentError("strip width K must be >= 3, got " + std::to_string(cfg.width));
    }
    if (cfg.runs < 1) throw ConfigError("runs must be >= 1");
    if (cfg.workers < 1) throw ConfigError("worker count must be >= 1");
    const auto& s = cfg.statistics;
    if (!s.roots && s.gap_lengths.empty() && !s.empirical_gap_average && !s.height_growth_steps) {
        throw ConfigError("no statistic selected");
    }
    if (cfg.mode != BoundaryMode::Cyclic && (!s.gap_lengths.empty() || s.empirical_gap_average)) {
        throw ConfigError("gap statistics require cyclic mode");
    }
    for (const auto i : s.gap_lengths) {
        if (i < 1 || i > cfg.width - 1) {
            throw ConfigError("gap length " + std::to_string(i) + " outside 1.." + std::to_string(cfg.width - 1));
        }
    }
    if (s.height_growth_steps) {
        if (*s.height_growth_steps == 0) throw ConfigError("height growth needs n-steps >= 1");
        if (*s.height_growth_steps > kMaxDepositions) throw ConfigError("height growth n-steps exceeds 2^40");
        if (cfg.mode != BoundaryMode::Cyclic) throw ConfigError("height growth is defined on the cyclic strip");
    }
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

double StatisticSummary::mean() const noexcept {
    return count == 0 ? 0.0 : sum / static_cast<double>(count);
}

double StatisticSummary::variance() const noexcept {
    if (count < 2) return 0.0;
    const double n = static_cast<double>(count);
    const double m = sum / n;
    return std::max(0.0, (sum_of_squares - n * m * m) / (n - 1.0));
}

StatisticSummary summarise(std::string name, std::span<const double> values, bool integer_valued,
                           bool keep_samples) {
    StatisticSummary out;
    out.name = std::move(name);
    out.integer_valued = integer_valued;
    out.count = values.size();
    CompensatedSum sum;
    for (const double v : values) sum.add(v);
    out.sum = sum.value();
    // centre before squaring to keep the variance well conditioned
    const double centre = out.count ? out.sum / static_cast<double>(out.count) : 0.0;
    CompensatedSum dev2;
    for (const double v : values) dev2.add((v - centre) * (v - centre));
    out.sum_of_squares = dev2.value() + static_cast<double>(out.count) * centre * centre;

    if (!values.empty()) {
        if (integer_valued) {
            const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
            const long lo = std::lround(*lo_it);
            const long hi = std::lround(*hi_it);
            out.histogram.resize(static_cast<std::size_t>(hi - lo + 1));
            for (long v = lo; v <= hi; ++v) {
                out.histogram[static_cast<std::size_t>(v - lo)] = HistogramBin{double(v), double(v), 0};
            }
            for (const double v : values) ++out.histogram[static_cast<std::size_t>(std::lround(v) - lo)].count;
        } else {
            constexpr std::size_t bins = 200;
            const double sd = std::sqrt(out.variance());
            const double width = sd > 0 ? 10.0 * sd / bins : 1.0 / bins;
            const double lower = sd > 0 ? centre - 5.0 * sd : centre - 0.5;
            out.histogram.resize(bins);
            for (std::size_t b = 0; b < bins; ++b) {
                out.histogram[b] = HistogramBin{lower + width * double(b), lower + width * double(b + 1), 0};
            }
            for (const double v : values) {
                const double pos = std::floor((v - lower) / width);
                // the outer bins absorb the (rare) samples beyond 5 sd
                const auto b = static_cast<std::size_t>(std::clamp(pos, 0.0, double(bins - 1)));
                ++out.histogram[b].count;
            }
        }
    }
    if (keep_samples) out.samples.assign(values.begin(), values.end());
    return out;
}

void EnsembleStats::merge(const EnsembleStats& other) {
    for (const auto& [name, theirs] : other.statistics) {
        auto it = statistics.find(name);
        if (it == statistics.end()) {
            statistics.emplace(name, theirs);
            continue;
        }
        auto& mine = it->second;
        if (mine.samples.size() == mine.count && theirs.samples.size() == theirs.count) {
            std::vector<double> all = mine.samples;
            all.insert(all.end(), theirs.samples.begin(), theirs.samples.end());
            mine = summarise(name, all, mine.integer_valued, true);
            continue;
        }
        if (!mine.integer_valued) {
            throw ConfigError("cannot merge real-valued histograms without samples: " + name);
        }
        std::map<long, std::uint64_t> bins;
        for (const auto& b : mine.histogram) bins[std::lround(b.lower)] += b.count;
        for (const auto& b : theirs.histogram) bins[std::lround(b.lower)] += b.count;
        mine.histogram.clear();
        if (!bins.empty()) {
            for (long v = bins.begin()->first; v <= bins.rbegin()->first; ++v) {
                const auto f = bins.find(v);
                mine.histogram.push_back(HistogramBin{double(v), double(v), f == bins.end() ? 0 : f->second});
            }
        }
        mine.count += theirs.count;
        mine.sum += theirs.sum;
        mine.sum_of_squares += theirs.sum_of_squares;
        mine.samples.clear();
    }
    config.runs += other.config.runs;
    runtime_seconds += other.runtime_seconds;
}

double empirical_gap_average(const RootSet& roots) {
    if (roots.mode != BoundaryMode::Cyclic) throw ModeError("empirical gap average needs cyclic mode");
    if (roots.roots.empty()) throw DomainError("empirical gap average of an empty root set");
    return static_cast<double>(roots.width) / static_cast<double>(roots.size()) - 1.0;
}

double standard_normal_cdf(double x) noexcept {
    return 0.5 * std::erfc(-x / std::sqrt(2.0));
}

double normalized_ks_statistic(std::span<const double> samples, double mean, double sd, double lattice_span) {
    if (samples.empty()) throw DomainError("KS statistic of an empty sample");
    if (!(sd > 0.0) || !std::isfinite(sd)) throw DomainError("KS statistic needs sd > 0");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    if (lattice_span > 0.0) {
        for (std::size_t j = 0; j < sorted.size();) {
            std::size_t next = j;
            while (next < sorted.size() && sorted[next] == sorted[j]) ++next;
            const double below = static_cast<double>(j) / n;
            const double upto = static_cast<double>(next) / n;
            const double edge_lo = standard_normal_cdf((sorted[j] - 0.5 * lattice_span - mean) / sd);
            const double edge_hi = standard_normal_cdf((sorted[j] + 0.5 * lattice_span - mean) / sd);
            worst = std::max({worst, std::abs(below - edge_lo), std::abs(upto - edge_hi)});
            j = next;
        }
        return worst;
    }
    for (std::size_t j = 0; j < sorted.size(); ++j) {
        const double phi = standard_normal_cdf((sorted[j] - mean) / sd);
        worst = std::max({worst, static_cast<double>(j + 1) / n - phi, phi - static_cast<double>(j) / n});
    }
    return worst;
}

double height_growth_estimate(std::size_t width, std::uint64_t steps, std::mt19937_64& rng) {
    if (steps == 0) throw ArgumentError("height growth estimate needs n >= 1");
    HeightField field(width, BoundaryMode::Cyclic);
    std::uniform_int_distribution<std::size_t> pick(1, width);
    std::uint64_t top = 0;
    for (std::uint64_t t = 0; t < steps; ++t) top = std::max(top, field.deposit(pick(rng)));
    return static_cast<double>(top) / static_cast<double>(steps);
}

EnsembleStats run_ensemble(const EnsembleConfig& cfg) {
    validate(cfg);
    const auto started = std::chrono::steady_clock::now();
    const auto& s = cfg.statistics;
    const std::size_t runs = cfg.runs;
    const bool need_roots = s.roots || !s.gap_lengths.empty() || s.empirical_gap_average;

    std::vector<double> roots(s.roots ? runs : 0);
    std::vector<std::vector<double>> gaps(s.gap_lengths.size(), std::vector<double>(runs));
    std::vector<double> average(s.empirical_gap_average ? runs : 0);
    std::vector<double> growth(s.height_growth_steps ? runs : 0);

    const auto one_run = [&](std::size_t j) {
        auto rng = run_stream(cfg.base_seed, j);
        if (need_roots) {
            RootSet rs = cfg.full_simulation ? simulate_final_roots(cfg.width, cfg.mode, rng).roots
                                             : sample_final_roots(cfg.width, cfg.mode, rng);
            if (s.roots) roots[j] = static_cast<double>(rs.size());
            if (!s.gap_lengths.empty()) {
                const auto gv = gap_vector(rs);
#ifndef NDEBUG
                std::size_t total = 0, weighted = 0;
                for (std::size_t i = 1; i < cfg.width; ++i) {
                    total += gv.counts[i - 1];
                    weighted += i * gv.counts[i - 1];
                }
                if (total != rs.size() || rs.size() + weighted != cfg.width) {
                    throw std::logic_error("gap identity K = R + sum i D_i violated");
                }
#endif
                for (std::size_t g = 0; g < s.gap_lengths.size(); ++g) {
                    gaps[g][j] = static_cast<double>(gv.counts[s.gap_lengths[g] - 1]);
                }
            }
            if (s.empirical_gap_average) average[j] = empirical_gap_average(rs);
        }
        if (s.height_growth_steps) growth[j] = height_growth_estimate(cfg.width, *s.height_growth_steps, rng);
    };

    const std::size_t workers = std::min(cfg.workers, runs);
    if (workers <= 1) {
        for (std::size_t j = 0; j < runs; ++j) one_run(j);
    } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(workers);
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    const std::size_t begin = runs * w / workers;
                    const std::size_t end = runs * (w + 1) / workers;
                    for (std::size_t j = begin; j < end; ++j) one_run(j);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        pool.clear();
        for (const auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    EnsembleStats out;
    out.config = cfg;
    if (s.roots) out.statistics.emplace("roots", summarise("roots", roots, true, cfg.keep_samples));
    for (std::size_t g = 0; g < s.gap_lengths.size(); ++g) {
        const std::string name = "gap_" + std::to_string(s.gap_lengths[g]);
        out.statistics.emplace(name, summarise(name, gaps[g], true, cfg.keep_samples));
    }
    if (s.empirical_gap_average) {
        out.statistics.emplace("empirical_gap_average",
                               summarise("empirical_gap_average", average, false, cfg.keep_samples));
    }
    if (s.height_growth_steps) {
        out.statistics.emplace("height_growth", summarise("height_growth", growth, false, cfg.keep_samples));
    }
    out.runtime_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return out;
}

}  // namespace balldep
