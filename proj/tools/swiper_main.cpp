// swiper: deterministic solver CLI for the three weight reduction
// problems. See docs/formats.md for the exact file formats and the exit
// code contract (0 ok, 1 internal error, 2 input error, 3 invalid verdict).

#include "swiper/swiper.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitInvalid = 3;

bool log_enabled() {
    const char* v = std::getenv("SWIPERKIT_LOG");
    return v != nullptr && *v != '\0';
}

void diag(const std::string& msg) {
    if (log_enabled()) std::cerr << "[swiper] " << msg << "\n";
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

swiper::WeightDistribution load_weights(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open weights file '" + path + "'");
    diag("loading weights from " + path);
    return swiper::WeightDistribution::load(
        in, ends_with(path, ".json") ? swiper::WeightFormat::Json : swiper::WeightFormat::Csv);
}

swiper::TicketAssignment load_tickets(const std::string& path, const swiper::WeightDistribution& dist) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open tickets file '" + path + "'");
    return ends_with(path, ".json") ? swiper::tickets_from_json(in, dist)
                                    : swiper::tickets_from_csv(in, dist);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
    out << content;
}

/// Best small-denominator approximation of x by continued-fraction
/// convergents, when it differs from x and is close enough to look like an
/// intended fraction typed as a decimal.
std::optional<swiper::Rational> nearby_simple_fraction(const swiper::Rational& x) {
    using swiper::BigInt;
    using swiper::Rational;
    const BigInt max_den = 50;
    const Rational tolerance(1, 1000);
    BigInt h0 = 1, k0 = 0;
    BigInt a = swiper::rational_floor(x);
    BigInt h1 = a, k1 = 1;
    Rational rest = x - Rational(a);
    std::optional<Rational> best;
    while (true) {
        if (k1 > max_den) break;
        best = swiper::make_rational(h1, k1);
        if (rest == 0) break;
        rest = 1 / rest;
        a = swiper::rational_floor(rest);
        rest -= Rational(a);
        const BigInt h2 = a * h1 + h0;
        const BigInt k2 = a * k1 + k0;
        h0 = h1; k0 = k1; h1 = h2; k1 = k2;
    }
    if (!best || *best == x) return std::nullopt;
    const Rational diff = *best > x ? *best - x : x - *best;
    if (diff < tolerance) return best;
    return std::nullopt;
}

swiper::Rational parse_threshold(const std::string& text, const std::string& flag) {
    swiper::Rational value;
    try {
        value = swiper::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(flag + ": " + e.what());
    }
    if (text.find('/') == std::string::npos) {
        if (auto fraction = nearby_simple_fraction(value)) {
            std::cerr << "warning: " << flag << " " << text << " parsed exactly as "
                      << swiper::to_string(value) << "; did you mean "
                      << swiper::to_string(*fraction) << "?\n";
        }
    }
    return value;
}

/// The shared --problem/threshold flag block.
struct ProblemFlags {
    std::string problem;
    std::string alpha_w, alpha_n, beta_w, beta_n, alpha, beta;

    void attach(CLI::App* cmd) {
        cmd->add_option("--problem", problem, "Problem kind: wr, wq, or ws")
            ->required()
            ->check(CLI::IsMember({"wr", "wq", "ws"}));
        cmd->add_option("--alpha-w", alpha_w, "wr: weight threshold alpha_w");
        cmd->add_option("--alpha-n", alpha_n, "wr: ticket threshold alpha_n");
        cmd->add_option("--beta-w", beta_w, "wq: weight threshold beta_w");
        cmd->add_option("--beta-n", beta_n, "wq: ticket threshold beta_n");
        cmd->add_option("--alpha", alpha, "ws: light-set weight threshold");
        cmd->add_option("--beta", beta, "ws: heavy-set weight threshold");
    }

    swiper::ProblemSpec build() const {
        auto need = [](const std::string& value, const char* flag) {
            if (value.empty()) {
                throw std::runtime_error(std::string("missing ") + flag + " for this problem");
            }
        };
        auto reject = [](const std::string& value, const char* flag, const char* kind) {
            if (!value.empty()) {
                throw std::runtime_error(std::string(flag) + " is not a flag of problem " + kind);
            }
        };
        if (problem == "wr") {
            need(alpha_w, "--alpha-w"); need(alpha_n, "--alpha-n");
            reject(beta_w, "--beta-w", "wr"); reject(beta_n, "--beta-n", "wr");
            reject(alpha, "--alpha", "wr"); reject(beta, "--beta", "wr");
            return swiper::ProblemSpec::weight_restriction(parse_threshold(alpha_w, "--alpha-w"),
                                                           parse_threshold(alpha_n, "--alpha-n"));
        }
        if (problem == "wq") {
            need(beta_w, "--beta-w"); need(beta_n, "--beta-n");
            reject(alpha_w, "--alpha-w", "wq"); reject(alpha_n, "--alpha-n", "wq");
            reject(alpha, "--alpha", "wq"); reject(beta, "--beta", "wq");
            return swiper::ProblemSpec::weight_qualification(parse_threshold(beta_w, "--beta-w"),
                                                             parse_threshold(beta_n, "--beta-n"));
        }
        need(alpha, "--alpha"); need(beta, "--beta");
        reject(alpha_w, "--alpha-w", "ws"); reject(alpha_n, "--alpha-n", "ws");
        reject(beta_w, "--beta-w", "ws"); reject(beta_n, "--beta-n", "ws");
        return swiper::ProblemSpec::weight_separation(parse_threshold(alpha, "--alpha"),
                                                      parse_threshold(beta, "--beta"));
    }

    nlohmann::json to_json(const swiper::ProblemSpec& spec) const {
        nlohmann::json out;
        out["kind"] = swiper::kind_name(spec.kind());
        switch (spec.kind()) {
            case swiper::ProblemKind::WeightRestriction:
                out["alpha_w"] = swiper::to_string(spec.low());
                out["alpha_n"] = swiper::to_string(spec.high());
                break;
            case swiper::ProblemKind::WeightQualification:
                out["beta_w"] = swiper::to_string(spec.high());
                out["beta_n"] = swiper::to_string(spec.low());
                break;
            case swiper::ProblemKind::WeightSeparation:
                out["alpha"] = swiper::to_string(spec.low());
                out["beta"] = swiper::to_string(spec.high());
                break;
        }
        return out;
    }
};

std::vector<swiper::Rational> parse_rational_list(const std::vector<std::string>& texts,
                                                  const char* flag) {
    std::vector<swiper::Rational> values;
    values.reserve(texts.size());
    for (const std::string& t : texts) {
        try {
            values.push_back(swiper::parse_rational(t));
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error(std::string(flag) + ": " + e.what());
        }
    }
    return values;
}

int run_solve(const std::string& weights_path, const ProblemFlags& flags, bool linear,
              const std::string& format, const std::string& output_path) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    const swiper::ProblemSpec spec = flags.build();
    const swiper::SolveMode mode = linear ? swiper::SolveMode::Linear : swiper::SolveMode::Full;
    diag("solving " + std::string(swiper::kind_name(spec.kind())) + " over " +
         std::to_string(dist.size()) + " parties in " + swiper::mode_name(mode) + " mode");
    const swiper::SolveReport report = swiper::solve(spec, dist, mode);

    if (report.total > report.bound || !swiper::validate(spec, dist, report.assignment)) {
        std::cerr << "internal error: solver output failed its own invariants\n";
        return kExitInternal;
    }
    diag("total=" + std::to_string(report.total) + " bound=" + std::to_string(report.bound));

    if (format == "csv") {
        write_output(output_path, swiper::tickets_to_csv(dist, report.assignment));
        return kExitOk;
    }
    nlohmann::json tickets = nlohmann::json::object();
    for (std::size_t i = 0; i < dist.size(); ++i) tickets[dist.party(i).id] = report.assignment[i];
    nlohmann::json out;
    out["tickets"] = std::move(tickets);
    out["total"] = report.total;
    out["bound"] = report.bound;
    out["mode"] = swiper::mode_name(report.mode);
    out["locally_minimal"] = report.locally_minimal;
    out["stats"] = {{"holders", report.stats.holders}, {"max_tickets", report.stats.max_tickets}};
    out["problem"] = flags.to_json(spec);
    write_output(output_path, out.dump(2) + "\n");
    return kExitOk;
}

int run_validate(const std::string& weights_path, const std::string& tickets_path,
                 const ProblemFlags& flags) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    const swiper::ProblemSpec spec = flags.build();
    const swiper::TicketAssignment tickets = load_tickets(tickets_path, dist);
    const bool ok = swiper::validate(spec, dist, tickets);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? kExitOk : kExitInvalid;
}

int run_bound(const ProblemFlags& flags, std::int64_t n) {
    const swiper::ProblemSpec spec = flags.build();
    std::cout << swiper::ticket_bound(spec, n) << "\n";
    return kExitOk;
}

int run_grid(const std::string& weights_path, swiper::ExperimentConfig config,
             const std::vector<std::string>& rel_points, const std::string& alpha_n_min,
             const std::string& alpha_n_max, const std::string& alpha_n_step,
             const std::string& output_path) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    if (!alpha_n_min.empty()) config.grid.alpha_n_min = swiper::parse_rational(alpha_n_min);
    if (!alpha_n_max.empty()) config.grid.alpha_n_max = swiper::parse_rational(alpha_n_max);
    if (!alpha_n_step.empty()) {
        config.grid.alpha_n_step = swiper::parse_rational(alpha_n_step);
        if (!(config.grid.alpha_n_step > 0)) throw std::runtime_error("--alpha-n-step must be positive");
    }
    if (!rel_points.empty()) {
        config.grid.alpha_w_relative = parse_rational_list(rel_points, "--alpha-w-rel");
        for (const auto& rel : config.grid.alpha_w_relative) {
            // rel >= 1 makes alpha_w >= alpha_n; those grid points come back
            // as rejected-spec rows rather than failing the whole sweep
            if (!(rel > 0)) throw std::runtime_error("--alpha-w-rel points must be positive");
        }
    }
    const auto rows = swiper::run_grid(dist, config);
    diag("grid produced " + std::to_string(rows.size()) + " rows");
    write_output(output_path, swiper::grid_to_csv(rows));
    return kExitOk;
}

int run_bootstrap(const std::string& weights_path, const ProblemFlags& flags,
                  swiper::ExperimentConfig config, const std::string& output_path) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    const swiper::ProblemSpec spec = flags.build();
    const auto rows = swiper::run_bootstrap(dist, spec, config);
    write_output(output_path, swiper::bootstrap_to_csv(rows));
    return kExitOk;
}

int run_oracle_validate(const std::string& weights_path, const std::string& tickets_path,
                        const ProblemFlags& flags, std::size_t max_parties) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    const swiper::ProblemSpec spec = flags.build();
    const swiper::TicketAssignment tickets = load_tickets(tickets_path, dist);
    swiper::OracleBudget budget;
    budget.max_parties = max_parties;
    const bool ok = swiper::brute_validate(spec, dist, tickets, budget);
    std::cout << (ok ? "valid" : "invalid") << "\n";
    return ok ? kExitOk : kExitInvalid;
}

int run_oracle_optimum(const std::string& weights_path, const ProblemFlags& flags,
                       std::int64_t max_total) {
    const swiper::WeightDistribution dist = load_weights(weights_path);
    const swiper::ProblemSpec spec = flags.build();
    swiper::OracleBudget budget;
    budget.max_total_tickets = max_total;
    const auto best = swiper::brute_optimum(spec, dist, budget);
    if (!best) {
        std::cout << "no valid assignment with total <= " << max_total << "\n";
        return kExitInvalid;
    }
    nlohmann::json tickets = nlohmann::json::object();
    for (std::size_t i = 0; i < dist.size(); ++i) tickets[dist.party(i).id] = (*best)[i];
    nlohmann::json out;
    out["tickets"] = std::move(tickets);
    out["total"] = best->total();
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"swiper: map large real weights to small integer tickets while preserving "
                 "threshold properties (weight restriction / qualification / separation)"};
    app.require_subcommand(1);

    std::string weights_path, tickets_path, output_path;
    std::string format = "json";
    bool linear = false;
    bool timings = false;
    std::int64_t n = 0;

    auto* solve_cmd = app.add_subcommand("solve", "Compute a ticket assignment for a weights file");
    ProblemFlags solve_flags;
    solve_cmd->add_option("--weights", weights_path, "Weights file (.csv or .json)")->required();
    solve_flags.attach(solve_cmd);
    solve_cmd->add_flag("--linear", linear, "Quasilinear mode (conservative check only)");
    solve_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    solve_cmd->add_option("--output", output_path, "Write output here instead of stdout");

    auto* validate_cmd = app.add_subcommand("validate", "Check a ticket assignment exactly");
    ProblemFlags validate_flags;
    validate_cmd->add_option("--weights", weights_path, "Weights file")->required();
    validate_cmd->add_option("--tickets", tickets_path, "Tickets file (.csv or .json)")->required();
    validate_flags.attach(validate_cmd);

    auto* bound_cmd = app.add_subcommand("bound", "Print the closed-form ticket bound");
    ProblemFlags bound_flags;
    bound_flags.attach(bound_cmd);
    bound_cmd->add_option("--n", n, "Number of parties")->required()->check(CLI::PositiveNumber);

    auto* experiment_cmd = app.add_subcommand("experiment", "Parameter sweeps and bootstrap runs");
    experiment_cmd->require_subcommand(1);

    auto* grid_cmd = experiment_cmd->add_subcommand("grid", "WR sweep over (alpha_n, alpha_w)");
    std::string alpha_n_min, alpha_n_max, alpha_n_step;
    std::vector<std::string> rel_points;
    grid_cmd->add_option("--weights", weights_path, "Weights file")->required();
    grid_cmd->add_option("--alpha-n-min", alpha_n_min, "Smallest alpha_n (default 1/10)");
    grid_cmd->add_option("--alpha-n-max", alpha_n_max, "Largest alpha_n (default 1)");
    grid_cmd->add_option("--alpha-n-step", alpha_n_step, "alpha_n step (default 1/20)");
    grid_cmd->add_option("--alpha-w-rel", rel_points,
                         "Relative alpha_w positions (default 0.1..0.9)")->delimiter(',');
    grid_cmd->add_flag("--linear", linear, "Quasilinear mode");
    grid_cmd->add_flag("--timings", timings, "Include wall-clock column (breaks byte determinism)");
    grid_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

    auto* bootstrap_cmd = experiment_cmd->add_subcommand("bootstrap", "Resample-with-replacement sweep");
    ProblemFlags bootstrap_flags;
    std::vector<std::size_t> sizes;
    std::int64_t samples = 100;
    std::uint64_t seed = 20240101;
    bootstrap_cmd->add_option("--weights", weights_path, "Weights file")->required();
    bootstrap_flags.attach(bootstrap_cmd);
    bootstrap_cmd->add_option("--sizes", sizes, "Resample sizes")->required()->delimiter(',');
    bootstrap_cmd->add_option("--samples", samples, "Resamples per size (default 100)")
        ->check(CLI::PositiveNumber);
    bootstrap_cmd->add_option("--seed", seed, "64-bit experiment seed");
    bootstrap_cmd->add_flag("--linear", linear, "Quasilinear mode");
    bootstrap_cmd->add_flag("--timings", timings, "Include wall-clock column (breaks byte determinism)");
    bootstrap_cmd->add_option("--output", output_path, "Write CSV here instead of stdout");

    // Test-oriented brute-force reference; hidden from --help.
    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference (desk scale)");
    oracle_cmd->group("");
    oracle_cmd->require_subcommand(1);
    auto* oracle_validate_cmd = oracle_cmd->add_subcommand("validate", "Subset-enumeration check");
    ProblemFlags oracle_validate_flags;
    std::size_t max_parties = 18;
    oracle_validate_cmd->add_option("--weights", weights_path)->required();
    oracle_validate_cmd->add_option("--tickets", tickets_path)->required();
    oracle_validate_flags.attach(oracle_validate_cmd);
    oracle_validate_cmd->add_option("--max-parties", max_parties);
    auto* oracle_optimum_cmd = oracle_cmd->add_subcommand("optimum", "Exhaustive minimum search");
    ProblemFlags oracle_optimum_flags;
    std::int64_t max_total = 12;
    oracle_optimum_cmd->add_option("--weights", weights_path)->required();
    oracle_optimum_flags.attach(oracle_optimum_cmd);
    oracle_optimum_cmd->add_option("--max-total", max_total);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        swiper::ExperimentConfig config;
        config.mode = linear ? swiper::SolveMode::Linear : swiper::SolveMode::Full;
        config.timings = timings;
        config.bootstrap.sizes = sizes;
        config.bootstrap.samples = samples;
        config.bootstrap.seed = seed;

        if (*solve_cmd) return run_solve(weights_path, solve_flags, linear, format, output_path);
        if (*validate_cmd) return run_validate(weights_path, tickets_path, validate_flags);
        if (*bound_cmd) return run_bound(bound_flags, n);
        if (*grid_cmd) {
            return run_grid(weights_path, config, rel_points, alpha_n_min, alpha_n_max, alpha_n_step,
                            output_path);
        }
        if (*bootstrap_cmd) return run_bootstrap(weights_path, bootstrap_flags, config, output_path);
        if (*oracle_validate_cmd) {
            return run_oracle_validate(weights_path, tickets_path, oracle_validate_flags, max_parties);
        }
        if (*oracle_optimum_cmd) {
            return run_oracle_optimum(weights_path, oracle_optimum_flags, max_total);
        }
        std::cerr << "no subcommand selected\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::logic_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
