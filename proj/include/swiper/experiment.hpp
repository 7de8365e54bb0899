#pragma once

#include "swiper/problem.hpp"
#include "swiper/rational.hpp"
#include "swiper/resample.hpp"
#include "swiper/solver.hpp"
#include "swiper/weights.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace swiper {

/// Parameters of the two experiment commands. Grid: WR solved at every
/// (alpha_n, alpha_w) pair, with alpha_w placed at relative positions
/// inside (0, alpha_n). Bootstrap: resampled distributions of the given
/// sizes, `samples` draws each, metrics averaged.
struct ExperimentConfig {
    struct Grid {
        Rational alpha_n_min{1, 10};
        Rational alpha_n_max{1};
        Rational alpha_n_step{1, 20};
        std::vector<Rational> alpha_w_relative = default_relative_points();

        static std::vector<Rational> default_relative_points() {
            std::vector<Rational> points;
            for (int i = 1; i <= 9; ++i) points.emplace_back(i, 10);
            return points;
        }
    } grid;

    struct Bootstrap {
        std::uint64_t seed = 20240101;
        std::int64_t samples = 100;
        std::vector<std::size_t> sizes;
    } bootstrap;

    SolveMode mode = SolveMode::Full;
    bool timings = false;  // wall-clock columns are opt-in: they break byte-stable output
};

/// One grid solve. Parameter pairs outside the valid range are kept in the
/// output, flagged, with empty metrics.
struct MetricsRow {
    Rational alpha_w;
    Rational alpha_n;
    std::size_t parties = 0;
    std::int64_t total_tickets = 0;
    std::int64_t max_tickets = 0;
    std::int64_t holders = 0;
    SolveMode mode = SolveMode::Full;
    std::optional<double> elapsed_ms;
    bool rejected = false;
};

struct BootstrapRow {
    std::size_t size = 0;
    std::int64_t samples = 0;
    Rational avg_total;
    Rational avg_max_tickets;
    Rational avg_holders;
    SolveMode mode = SolveMode::Full;
    std::optional<double> elapsed_ms;
};

namespace detail {

inline double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

inline std::string csv_cell(const std::optional<double>& elapsed) {
    if (!elapsed) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *elapsed);
    return buf;
}

}  // namespace detail

inline std::vector<MetricsRow> run_grid(const WeightDistribution& dist,
                                        const ExperimentConfig& config) {
    std::vector<MetricsRow> rows;
    for (Rational alpha_n = config.grid.alpha_n_min; alpha_n <= config.grid.alpha_n_max;
         alpha_n += config.grid.alpha_n_step) {
        for (const Rational& rel : config.grid.alpha_w_relative) {
            const Rational alpha_w = rel * alpha_n;
            MetricsRow row;
            row.alpha_w = alpha_w;
            row.alpha_n = alpha_n;
            row.parties = dist.size();
            row.mode = config.mode;
            const auto start = std::chrono::steady_clock::now();
            try {
                const ProblemSpec spec = ProblemSpec::weight_restriction(alpha_w, alpha_n);
                const SolveReport report = solve(spec, dist, config.mode);
                row.total_tickets = report.total;
                row.max_tickets = report.stats.max_tickets;
                row.holders = report.stats.holders;
            } catch (const std::invalid_argument&) {
                row.rejected = true;
            }
            if (config.timings) row.elapsed_ms = detail::elapsed_since(start);
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline std::string grid_to_csv(const std::vector<MetricsRow>& rows) {
    std::string out = "alpha_w,alpha_n,n,total_tickets,max_tickets,holders,mode,elapsed_ms,status\n";
    for (const MetricsRow& row : rows) {
        out += to_csv_number(row.alpha_w) + ',' + to_csv_number(row.alpha_n) + ',' +
               std::to_string(row.parties) + ',';
        if (row.rejected) {
            out += ",,,";
        } else {
            out += std::to_string(row.total_tickets) + ',' + std::to_string(row.max_tickets) + ',' +
                   std::to_string(row.holders) + ',';
        }
        out += mode_name(row.mode);
        out += ',' + detail::csv_cell(row.elapsed_ms) + ',';
        out += row.rejected ? "rejected-spec" : "ok";
        out += '\n';
    }
    return out;
}

/// Bootstrap sweep: per-sample seeds come from sample_seed(seed, size, i),
/// so any execution order (or parallel schedule) yields identical rows.
inline std::vector<BootstrapRow> run_bootstrap(const WeightDistribution& dist,
                                               const ProblemSpec& problem,
                                               const ExperimentConfig& config) {
    if (config.bootstrap.samples < 1) {
        throw std::invalid_argument("bootstrap needs at least one sample");
    }
    if (config.bootstrap.sizes.empty()) {
        throw std::invalid_argument("bootstrap needs at least one target size");
    }
    std::vector<BootstrapRow> rows;
    for (std::size_t size : config.bootstrap.sizes) {
        if (size == 0) throw std::invalid_argument("bootstrap size must be positive");
        BootstrapRow row;
        row.size = size;
        row.samples = config.bootstrap.samples;
        row.mode = config.mode;
        Rational sum_total = 0;
        Rational sum_max = 0;
        Rational sum_holders = 0;
        const auto start = std::chrono::steady_clock::now();
        for (std::int64_t i = 0; i < config.bootstrap.samples; ++i) {
            const WeightDistribution sample = resample_with_replacement(
                dist, size, sample_seed(config.bootstrap.seed, size, static_cast<std::uint64_t>(i)));
            const SolveReport report = solve(problem, sample, config.mode);
            sum_total += report.total;
            sum_max += report.stats.max_tickets;
            sum_holders += report.stats.holders;
        }
        row.avg_total = sum_total / config.bootstrap.samples;
        row.avg_max_tickets = sum_max / config.bootstrap.samples;
        row.avg_holders = sum_holders / config.bootstrap.samples;
        if (config.timings) row.elapsed_ms = detail::elapsed_since(start);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string bootstrap_to_csv(const std::vector<BootstrapRow>& rows) {
    std::string out = "size,samples,avg_total_tickets,avg_max_tickets,avg_holders,mode,elapsed_ms\n";
    for (const BootstrapRow& row : rows) {
        out += std::to_string(row.size) + ',' + std::to_string(row.samples) + ',' +
               to_csv_number(row.avg_total) + ',' + to_csv_number(row.avg_max_tickets) + ',' +
               to_csv_number(row.avg_holders) + ',' + mode_name(row.mode) + ',' +
               detail::csv_cell(row.elapsed_ms) + '\n';
    }
    return out;
}

}  // namespace swiper
