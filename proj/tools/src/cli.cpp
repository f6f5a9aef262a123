#include "balldep/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "balldep/errors.hpp"
#include "balldep/exact_gaps.hpp"
#include "balldep/exact_roots.hpp"
#include "balldep/montecarlo.hpp"
#include "balldep/oracle.hpp"
#include "balldep/verification.hpp"

namespace balldep::cli {

namespace {

using nlohmann::ordered_json;

// Anything wider than this would not fit a permutation sample in memory on
// a typical machine; guarded rather than left to std::bad_alloc.
constexpr std::size_t kMaxSimulationWidth = std::size_t{1} << 26;

struct Options {
    std::string subcommand;
    std::size_t width = 0;
    std::string mode = "cyclic";
    std::size_t runs = kDefaultRuns;
    std::uint64_t seed = 0;
    std::vector<std::size_t> gaps;
    std::vector<std::string> stats;
    std::optional<std::uint64_t> n_steps;
    std::string out_path;
    std::string format = "json";
    std::size_t threads = 0;
    bool full_sim = false;
    bool timing = false;
    std::string gnuplot_prefix;
    std::string suite = "all";
    std::optional<std::size_t> kmax;
    std::size_t memory_budget_mib = 2048;
    std::string config_path;
};

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::string flag_name(const std::string& token) {
    if (token.rfind("--", 0) != 0) return {};
    return token.substr(2, token.find('=') == std::string::npos ? std::string::npos : token.find('=') - 2);
}

// key=value lines; '#' starts a comment, repeatable keys may list values
// separated by commas. Returns extra tokens for keys absent from `args`.
std::vector<std::string> config_tokens(const std::string& path, const std::vector<std::string>& args,
                                       const CLI::App& sub) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::set<std::string> given;
    for (const auto& a : args) {
        const auto name = flag_name(a);
        if (!name.empty()) given.insert(name);
    }
    std::vector<std::string> tokens;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "config" || sub.get_option_no_throw("--" + key) == nullptr) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": '" + key + "' is not an option of " +
                              sub.get_name());
        }
        if (given.count(key)) continue;  // flags win over the file
        std::stringstream parts(value);
        std::string part;
        while (std::getline(parts, part, ',')) tokens.push_back("--" + key + "=" + trim(part));
    }
    return tokens;
}

std::size_t resolved_threads(std::size_t requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

ordered_json fraction_array(const RationalPolynomial& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p.coefficients()) a.push_back(fraction_string(c));
    return a;
}

ordered_json law_json(const RationalPolynomial& pgf) {
    const auto m = pgf_moments(pgf);
    ordered_json j;
    j["pgf"] = fraction_array(pgf);
    j["mean"] = fraction_string(m.mean);
    j["variance"] = fraction_string(m.variance);
    j["second_factorial_moment"] = fraction_string(m.second_factorial_moment);
    return j;
}

ordered_json config_json(const Options& o) {
    ordered_json c;
    c["subcommand"] = o.subcommand;
    if (o.subcommand == "verify") {
        c["suite"] = o.suite;
        c["kmax"] = o.kmax ? ordered_json(*o.kmax) : ordered_json(nullptr);
    } else {
        c["K"] = o.width;
        if (o.subcommand != "exact-gaps") c["mode"] = o.mode;
        if (o.subcommand == "exact-gaps" || o.subcommand == "oracle" || o.subcommand == "simulate") c["i"] = o.gaps;
        if (o.subcommand == "oracle" || o.subcommand == "simulate") c["stat"] = o.stats;
        if (o.subcommand == "exact-gaps") c["memory_budget_mib"] = o.memory_budget_mib;
    }
    if (o.subcommand == "simulate") {
        c["runs"] = o.runs;
        c["seed"] = o.seed;
        c["n_steps"] = o.n_steps ? ordered_json(*o.n_steps) : ordered_json(nullptr);
        c["threads"] = o.threads;
        c["full_sim"] = o.full_sim;
    }
    c["format"] = o.format;
    c["config_file"] = o.config_path.empty() ? ordered_json(nullptr) : ordered_json(o.config_path);
    return c;
}

std::string csv_header(const ordered_json& config) {
    return "# config " + config.dump() + "\n";
}

void emit(const Options& o, const std::string& payload, std::ostream& out) {
    if (o.out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) throw ConfigError("cannot open --out path '" + o.out_path + "'");
    file << payload;
}

std::vector<std::size_t> default_gaps(const Options& o) {
    if (!o.gaps.empty()) return o.gaps;
    std::vector<std::size_t> all(o.width - 1);
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
    return all;
}

void require_width(std::size_t width) {
    if (width < kMinWidth) throw ArgumentError("--K must be >= 3, got " + std::to_string(width));
}

int cmd_exact_roots(Options& o, std::ostream& out) {
    require_width(o.width);
    if (o.width > kMaxRootWidth) {
        throw ResourceError("--K " + std::to_string(o.width) + " exceeds the exact-roots guard " +
                            std::to_string(kMaxRootWidth));
    }
    const auto mode = parse_boundary_mode(o.mode);
    o.mode = std::string(to_string(mode));
    const auto pgf = mode == BoundaryMode::Cyclic ? cyclic_root_pgf(o.width) : aux_root_pgf(o.width);
    const auto config = config_json(o);
    if (o.format == "csv") {
        std::string s = csv_header(config) + "value,probability\n";
        for (std::size_t n = 0; n < pgf.coefficients().size(); ++n) {
            s += std::to_string(n) + "," + fraction_string(pgf.coefficient(n)) + "\n";
        }
        emit(o, s, out);
        return kExitOk;
    }
    ordered_json j;
    j["config"] = config;
    j["statistic"] = "roots";
    j["law"] = law_json(pgf);
    emit(o, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_exact_gaps(Options& o, std::ostream& out) {
    require_width(o.width);
    if (o.width > kMaxGapWidth + 1) {
        throw ResourceError("--K " + std::to_string(o.width) + " exceeds the exact-gaps guard " +
                            std::to_string(kMaxGapWidth + 1));
    }
    o.gaps = default_gaps(o);
    GapTableOptions options;
    options.memory_budget_bytes = o.memory_budget_mib << 20;
    std::vector<std::pair<std::size_t, RationalPolynomial>> laws;
    for (const auto i : o.gaps) {
        if (i < 1 || i > o.width - 1) {
            throw ArgumentError("--i " + std::to_string(i) + " outside 1.." + std::to_string(o.width - 1));
        }
        laws.emplace_back(i, GapRecursionTable(i, o.width - 1, options).distribution(o.width));
    }
    const auto config = config_json(o);
    if (o.format == "csv") {
        std::string s = csv_header(config) + "gap,value,probability\n";
        for (const auto& [i, pgf] : laws) {
            for (std::size_t n = 0; n < pgf.coefficients().size(); ++n) {
                s += std::to_string(i) + "," + std::to_string(n) + "," + fraction_string(pgf.coefficient(n)) + "\n";
            }
        }
        emit(o, s, out);
        return kExitOk;
    }
    ordered_json j;
    j["config"] = config;
    j["statistic"] = "gaps";
    ordered_json g;
    for (const auto& [i, pgf] : laws) g[std::to_string(i)] = law_json(pgf);
    j["gaps"] = g;
    emit(o, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_oracle(Options& o, std::ostream& out) {
    require_width(o.width);
    if (o.width > kMaxOracleWidth) {
        throw ResourceError("--K " + std::to_string(o.width) + " exceeds the enumeration guard kMaxOracleWidth = " +
                            std::to_string(kMaxOracleWidth));
    }
    const auto mode = parse_boundary_mode(o.mode);
    o.mode = std::string(to_string(mode));
    if (o.stats.empty()) o.stats = {"roots"};
    std::vector<ExactDistribution> laws;
    for (const auto& stat : o.stats) {
        if (stat == "roots") {
            laws.push_back(enumerate_root_distribution(o.width, mode));
        } else if (stat == "gaps") {
            if (mode != BoundaryMode::Cyclic) throw ConfigError("gap statistics require --mode cyclic");
            o.gaps = default_gaps(o);
            for (const auto i : o.gaps) laws.push_back(enumerate_gap_distribution(o.width, i));
        } else {
            throw ConfigError("oracle --stat must be roots or gaps, got '" + stat + "'");
        }
    }
    const auto config = config_json(o);
    const auto label = [](const ExactDistribution& d) {
        return d.context.gap ? "gap_" + std::to_string(*d.context.gap) : d.context.statistic;
    };
    if (o.format == "csv") {
        std::string s = csv_header(config) + "statistic,value,probability\n";
        for (const auto& d : laws) {
            for (const auto& [v, p] : d.support) s += label(d) + "," + std::to_string(v) + "," + fraction_string(p) + "\n";
        }
        emit(o, s, out);
        return kExitOk;
    }
    ordered_json j;
    j["config"] = config;
    j["source"] = "enumeration";
    ordered_json stats;
    for (const auto& d : laws) stats[label(d)] = law_json(d.as_pgf());
    j["statistics"] = stats;
    emit(o, j.dump(2) + "\n", out);
    return kExitOk;
}

int cmd_verify(Options& o, std::ostream& out, std::ostream& err) {
    const auto suite = parse_verify_suite(o.suite);
    o.kmax = o.kmax.value_or(default_kmax(suite));
    const auto report = verify(suite, *o.kmax);
    const auto config = config_json(o);
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.passed ? 0 : 1;
    if (o.format == "json") {
        ordered_json j;
        j["config"] = config;
        j["passed"] = report.all_passed();
        ordered_json checks = ordered_json::array();
        for (const auto& c : report.checks) {
            checks.push_back({{"suite", c.suite}, {"formula", c.formula}, {"passed", c.passed}, {"detail", c.detail}});
        }
        j["checks"] = checks;
        emit(o, j.dump(2) + "\n", out);
    } else if (o.format == "csv") {
        std::string s = csv_header(config) + "suite,passed,formula,detail\n";
        const auto quote = [](const std::string& x) {
            std::string q = "\"";
            for (const char ch : x) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            return q + "\"";
        };
        for (const auto& c : report.checks) {
            s += c.suite + "," + (c.passed ? "1" : "0") + "," + quote(c.formula) + "," + quote(c.detail) + "\n";
        }
        emit(o, s, out);
    } else {
        std::string s;
        for (const auto& c : report.checks) {
            s += std::string(c.passed ? "PASS" : "FAIL") + "  [" + c.suite + "] " + c.formula + "  (" + c.detail + ")\n";
        }
        emit(o, s, out);
    }
    err << "verify: " << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
    return failed == 0 ? kExitOk : kExitVerifyFailed;
}

EnsembleConfig ensemble_config(Options& o) {
    require_width(o.width);
    if (o.width > kMaxSimulationWidth) {
        throw ResourceError("--K " + std::to_string(o.width) + " exceeds the simulation guard " +
                            std::to_string(kMaxSimulationWidth));
    }
    EnsembleConfig cfg;
    cfg.width = o.width;
    cfg.mode = parse_boundary_mode(o.mode);
    o.mode = std::string(to_string(cfg.mode));
    cfg.runs = o.runs;
    cfg.base_seed = o.seed;
    o.threads = resolved_threads(o.threads);
    cfg.workers = o.threads;
    cfg.full_simulation = o.full_sim;
    if (o.stats.empty()) o.stats = {"roots"};
    for (const auto& stat : o.stats) {
        if (stat == "roots") {
            cfg.statistics.roots = true;
        } else if (stat == "gaps") {
            if (o.gaps.empty()) throw ConfigError("--stat gaps needs at least one --i");
            cfg.statistics.gap_lengths = o.gaps;
        } else if (stat == "edavg") {
            cfg.statistics.empirical_gap_average = true;
        } else if (stat == "growth") {
            if (!o.n_steps) throw ConfigError("--stat growth needs --n-steps");
            cfg.statistics.height_growth_steps = o.n_steps;
        } else {
            throw ConfigError("unknown --stat '" + stat + "' (expected roots|gaps|edavg|growth)");
        }
    }
    if (!o.gaps.empty() && cfg.statistics.gap_lengths.empty()) throw ConfigError("--i given without --stat gaps");
    validate(cfg);
    return cfg;
}

ordered_json summary_json(const StatisticSummary& s) {
    ordered_json j;
    j["count"] = s.count;
    j["mean"] = s.mean();
    j["variance"] = s.variance();
    const double sd = std::sqrt(s.variance());
    if (!s.samples.empty() && sd > 0.0) {
        j["ks"] = normalized_ks_statistic(s.samples, s.mean(), sd);
        if (s.integer_valued) j["ks_continuity_corrected"] = normalized_ks_statistic(s.samples, s.mean(), sd, 1.0);
    } else {
        j["ks"] = nullptr;
    }
    ordered_json hist = ordered_json::array();
    for (const auto& b : s.histogram) {
        if (s.integer_valued) {
            hist.push_back({b.lower, b.count});
        } else {
            hist.push_back({b.lower, b.upper, b.count});
        }
    }
    j["histogram"] = hist;
    return j;
}

double bin_centre(const HistogramBin& b) {
    return 0.5 * (b.lower + b.upper);
}

std::string number(double v) {
    return ordered_json(v).dump();
}

int cmd_simulate(Options& o, std::ostream& out, std::ostream& err) {
    auto cfg = ensemble_config(o);
    const auto stats = run_ensemble(cfg);
    const auto config = config_json(o);
    err << "simulate: K=" << cfg.width << " runs=" << cfg.runs << " threads=" << cfg.workers << " finished in "
        << stats.runtime_seconds << " s\n";

    if (o.format == "csv") {
        std::string s = csv_header(config) + "# generator " + kGeneratorId + "\nstatistic,bin,count\n";
        for (const auto& [name, summary] : stats.statistics) {
            for (const auto& b : summary.histogram) s += name + "," + number(bin_centre(b)) + "," + std::to_string(b.count) + "\n";
        }
        emit(o, s, out);
    } else {
        ordered_json j;
        j["config"] = config;
        j["seed"] = o.seed;
        j["generator"] = kGeneratorId;
        ordered_json st;
        for (const auto& [name, summary] : stats.statistics) st[name] = summary_json(summary);
        j["statistics"] = st;
        // wall time would break byte-identical reruns, so it is opt-in
        if (o.timing) j["runtime_seconds"] = stats.runtime_seconds;
        emit(o, j.dump(2) + "\n", out);
    }

    if (!o.gnuplot_prefix.empty()) {
        for (const auto& [name, summary] : stats.statistics) {
            const std::string path = o.gnuplot_prefix + name + ".dat";
            std::ofstream file(path, std::ios::binary);
            if (!file) throw ConfigError("cannot open gnuplot output '" + path + "'");
            file << "# config " << config.dump() << "\n# generator " << kGeneratorId << "\n# " << name
                 << ": bin count\n";
            for (const auto& b : summary.histogram) file << number(bin_centre(b)) << " " << b.count << "\n";
        }
    }
    return kExitOk;
}

void add_common(CLI::App* sub, Options& o, bool with_mode) {
    sub->add_option("--K", o.width, "strip width K (>= 3)")->required();
    if (with_mode) sub->add_option("--mode", o.mode, "boundary mode")->check(CLI::IsMember({"cyclic", "aux", "auxiliary"}));
    sub->add_option("--out", o.out_path, "write data here instead of stdout");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--config", o.config_path, "key=value file; command-line flags take precedence");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact and Monte Carlo statistics of ballistic deposition roots and gaps", "balldep"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo ensemble");
    add_common(simulate, o, true);
    simulate->add_option("--runs", o.runs, "independent runs")->check(CLI::PositiveNumber);
    simulate->add_option("--seed", o.seed, "base seed");
    simulate->add_option("--stat", o.stats, "roots | gaps | edavg | growth (repeatable)");
    simulate->add_option("--i", o.gaps, "gap length (repeatable)");
    simulate->add_option("--n-steps", o.n_steps, "depositions for the growth estimate");
    simulate->add_option("--threads", o.threads, "worker threads (0 = hardware concurrency)");
    simulate->add_flag("--full-sim", o.full_sim, "deposit particle by particle instead of sampling the first-hit order");
    simulate->add_option("--gnuplot", o.gnuplot_prefix, "also write <prefix><statistic>.dat histograms");
    simulate->add_flag("--timing", o.timing, "include wall time in the JSON output");

    auto* roots = app.add_subcommand("exact-roots", "exact law of the root count");
    add_common(roots, o, true);

    auto* gaps = app.add_subcommand("exact-gaps", "exact law of D_i on the cyclic strip");
    add_common(gaps, o, false);
    gaps->add_option("--i", o.gaps, "gap length (repeatable; default all)");
    gaps->add_option("--memory-budget", o.memory_budget_mib, "table memory cap in MiB");

    auto* oracle = app.add_subcommand("oracle", "brute-force enumeration over all first-hit orders");
    add_common(oracle, o, true);
    oracle->add_option("--stat", o.stats, "roots | gaps (repeatable)");
    oracle->add_option("--i", o.gaps, "gap length (repeatable; default all)");

    auto* verify_cmd = app.add_subcommand("verify", "exact-equality suites");
    verify_cmd->add_option("--suite", o.suite, "roots | gaps | tables | oracle | all")
        ->check(CLI::IsMember({"roots", "gaps", "tables", "oracle", "all"}));
    verify_cmd->add_option("--kmax", o.kmax, "largest width checked (default per suite)");
    verify_cmd->add_option("--out", o.out_path, "write the report here instead of stdout");
    verify_cmd->add_option("--format", o.format, "text | json | csv")->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_option("--config", o.config_path, "key=value file; command-line flags take precedence");

    try {
        std::vector<std::string> argv = args;
        // resolve the config file before CLI11 sees the arguments
        std::string config_path;
        CLI::App* sub = nullptr;
        for (std::size_t j = 0; j < argv.size(); ++j) {
            if (!sub && argv[j].rfind("-", 0) != 0) sub = app.get_subcommand_no_throw(argv[j]);
            if (argv[j] == "--config" && j + 1 < argv.size()) config_path = argv[j + 1];
            if (argv[j].rfind("--config=", 0) == 0) config_path = argv[j].substr(9);
        }
        if (!config_path.empty() && sub != nullptr) {
            const auto extra = config_tokens(config_path, argv, *sub);
            argv.insert(argv.end(), extra.begin(), extra.end());
        }
        if (std::find(args.begin(), args.end(), "verify") != args.end() &&
            std::none_of(argv.begin(), argv.end(), [](const std::string& a) { return flag_name(a) == "format"; })) {
            o.format = "text";
        }
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const ConfigError& e) {
        err << "balldep: config error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        o.subcommand = app.get_subcommands().front()->get_name();
        if (o.subcommand == "simulate") return cmd_simulate(o, out, err);
        if (o.subcommand == "exact-roots") return cmd_exact_roots(o, out);
        if (o.subcommand == "exact-gaps") return cmd_exact_gaps(o, out);
        if (o.subcommand == "oracle") return cmd_oracle(o, out);
        return cmd_verify(o, out, err);
    } catch (const ResourceError& e) {
        err << "balldep: resource guard: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        // ArgumentError, ModeError, ConfigError
        err << "balldep: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "balldep: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "balldep: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace balldep::cli
