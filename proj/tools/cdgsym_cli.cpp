// Command-line driver for the symmetrized Chung-Diaconis-Graham process
// toolkit: exact evolutions, mixing-time sweeps, quenched experiments, the
// interval lower bound, binary-expansion censuses, and the exact walk laws.
//
// Exit codes: 0 success, 2 invalid arguments, 3 internal invariant violation.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdgsym/csv.hpp"
#include "cdgsym/errors.hpp"
#include "cdgsym/experiments.hpp"
#include "cdgsym/parallel.hpp"
#include "cdgsym/exponent_walk.hpp"
#include "cdgsym/fourier_bound.hpp"
#include "cdgsym/process.hpp"
#include "cdgsym/walk_laws.hpp"

namespace {

using json = nlohmann::json;

struct CommonOptions {
    std::int64_t p = 101;
    std::vector<std::int64_t> p_grid = {101, 401, 1009, 4001, 10007};
    double epsilon = 0.25;
    std::int64_t n = -1;
    std::uint64_t seed = 1;
    int threads = 0;  // 0 = hardware concurrency
    std::int64_t multiplier = 2;
    std::string increments = "trinary";
    double beta = 10.0;
    std::string out;
    std::string format = "csv";
};

cdgsym::ProcessParams make_params(const CommonOptions& opt, std::int64_t p, double q = 0.5) {
    cdgsym::Modulus mod(p);
    return opt.increments == "binary" ? cdgsym::ProcessParams::binary(mod, opt.multiplier, q)
                                      : cdgsym::ProcessParams::trinary(mod, opt.multiplier, q);
}

json table_to_json(const cdgsym::CsvTable& table) {
    json rows = json::array();
    for (const auto& row : table.rows) {
        json obj;
        for (std::size_t i = 0; i < table.header.size() && i < row.size(); ++i) {
            obj[table.header[i]] = row[i];
        }
        rows.push_back(std::move(obj));
    }
    return rows;
}

// table to --out (or stdout), metadata JSON to stdout (or stderr)
void emit(const cdgsym::CsvTable& table, const CommonOptions& opt, json metadata) {
    std::string text = opt.format == "json" ? table_to_json(table).dump(2) + "\n" : table.to_string();
    if (!opt.out.empty()) {
        cdgsym::write_file(opt.out, text);
        metadata["out"] = opt.out;
        std::cout << metadata.dump(2) << '\n';
    } else {
        std::cout << text;
        std::cerr << metadata.dump(2) << '\n';
    }
}

json params_echo(const CommonOptions& opt) {
    return {{"multiplier", opt.multiplier},
            {"increments", opt.increments},
            {"seed", opt.seed},
            {"threads", cdgsym::resolve_threads(opt.threads)},
            {"format", opt.format}};
}

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_grid = false) {
    cmd->add_option("--p", opt.p, "odd modulus");
    if (with_grid) cmd->add_option("--p-grid", opt.p_grid, "grid of odd moduli");
    cmd->add_option("--epsilon", opt.epsilon, "TV threshold in (0,1)");
    cmd->add_option("--n", opt.n, "step count");
    cmd->add_option("--seed", opt.seed, "RNG seed");
    cmd->add_option("--threads", opt.threads, "worker threads (0 = auto)");
    cmd->add_option("--multiplier", opt.multiplier, "fixed multiplier a");
    cmd->add_option("--increments", opt.increments, "increment preset")
        ->check(CLI::IsMember({"trinary", "binary"}));
    cmd->add_option("--beta", opt.beta, "census weight exponent");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
    cmd->add_option("--format", opt.format, "table format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int run(int argc, char** argv) {
    CLI::App app{"multiplicatively symmetrized Chung-Diaconis-Graham process experiments"};
    app.require_subcommand(1);
    CommonOptions opt;

    auto* evolve = app.add_subcommand("evolve", "exact TV-vs-n curve");
    add_common(evolve, opt);

    auto* mixing = app.add_subcommand("mixing-time", "smallest n with TV < epsilon");
    add_common(mixing, opt);

    auto* scaling = app.add_subcommand("scaling", "mixing time across a grid of moduli");
    add_common(scaling, opt, true);

    auto* compare = app.add_subcommand("compare-fixed", "same sweep for the fixed-a chain (P(a_n = a) = 1)");
    add_common(compare, opt, true);

    auto* conditional = app.add_subcommand("conditional", "quenched run for one multiplier sequence");
    add_common(conditional, opt);
    std::string sequence = "random";
    conditional->add_option("--sequence", sequence, "multiplier sequence")
        ->check(CLI::IsMember({"alternating", "all-forward", "random"}));

    auto* lower = app.add_subcommand("lower-bound", "interval concentration lower bound");
    add_common(lower, opt);
    std::int64_t shift = -1, half_width = -1;
    lower->add_option("--shift", shift, "power of 2 applied to X_n (default ceil(0.25 log2 p))");
    lower->add_option("--half-width", half_width, "interval half width W (default ~0.05 sqrt(p) log2(p)^2)");

    auto* census = app.add_subcommand("census", "frequency classes / alternation histogram");
    add_common(census, opt);
    std::string mode = "classes";
    std::int64_t start = 0, length = -1;
    double q_weight = 1.0 / 9.0;
    census->add_option("--mode", mode, "census kind")->check(CLI::IsMember({"classes", "alternations"}));
    census->add_option("--start", start, "window start position");
    census->add_option("--length", length, "window length (default ceil(log2 p) + 2)");
    census->add_option("--q", q_weight, "per-alternation decay in (0,1)");

    auto* walk_laws = app.add_subcommand("walk-laws", "exact maximum and return laws of the exponent walk");
    add_common(walk_laws, opt);
    std::int64_t law_j = 32, law_two_n = 32;
    walk_laws->add_option("--j", law_j, "steps for the maximum law");
    walk_laws->add_option("--two-n", law_two_n, "even steps for the returns law");

    auto* cutoff = app.add_subcommand("cutoff", "full profile down to TV < 1e-3");
    add_common(cutoff, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    Stopwatch timer;

    if (evolve->parsed()) {
        std::int64_t n = opt.n >= 0 ? opt.n : 4 * static_cast<std::int64_t>(
            cdgsym::log2_of(opt.p) * cdgsym::log2_of(opt.p));
        auto result = cdgsym::evolve_exact(make_params(opt, opt.p), n);
        json meta = {{"command", "evolve"}, {"p", opt.p}, {"n", n}, {"params", params_echo(opt)}};
        meta["final_tv"] = result.curve.final_tv();
        meta["wall_time_s"] = timer.seconds();
        emit(cdgsym::curve_to_csv(result.curve), opt, std::move(meta));
    } else if (mixing->parsed()) {
        std::int64_t n_star = cdgsym::mixing_time(make_params(opt, opt.p), opt.epsilon);
        cdgsym::CsvTable t;
        t.header = {"p", "epsilon", "n_star"};
        t.rows.push_back({cdgsym::format_int(opt.p), cdgsym::format_double(opt.epsilon),
                          cdgsym::format_int(n_star)});
        json meta = {{"command", "mixing-time"}, {"p", opt.p}, {"epsilon", opt.epsilon},
                     {"params", params_echo(opt)}, {"wall_time_s", timer.seconds()}};
        emit(t, opt, std::move(meta));
    } else if (scaling->parsed() || compare->parsed()) {
        const bool fixed = compare->parsed();
        auto rows = cdgsym::scaling_experiment(
            opt.p_grid, opt.epsilon,
            [&](const cdgsym::Modulus& mod) {
                return opt.increments == "binary"
                           ? cdgsym::ProcessParams::binary(mod, opt.multiplier, fixed ? 1.0 : 0.5)
                           : cdgsym::ProcessParams::trinary(mod, opt.multiplier, fixed ? 1.0 : 0.5);
            },
            opt.threads);
        json meta = {{"command", fixed ? "compare-fixed" : "scaling"},
                     {"p_grid", opt.p_grid}, {"epsilon", opt.epsilon},
                     {"params", params_echo(opt)}, {"wall_time_s", timer.seconds()}};
        emit(cdgsym::scaling_to_csv(rows), opt, std::move(meta));
    } else if (conditional->parsed()) {
        std::int64_t n = opt.n >= 0 ? opt.n : 100;
        cdgsym::SequenceKind kind = sequence == "alternating" ? cdgsym::SequenceKind::Alternating
                                   : sequence == "all-forward" ? cdgsym::SequenceKind::AllForward
                                                               : cdgsym::SequenceKind::Random;
        auto report = cdgsym::conditional_experiment(make_params(opt, opt.p), n, kind, opt.seed,
                                                     opt.beta, opt.threads);
        json meta = {{"command", "conditional"}, {"p", opt.p}, {"n", n}, {"sequence", sequence},
                     {"beta", opt.beta}, {"params", params_echo(opt)},
                     {"wall_time_s", timer.seconds()}};
        emit(cdgsym::conditional_to_csv(opt.p, report), opt, std::move(meta));
    } else if (lower->parsed()) {
        std::int64_t n = opt.n >= 0 ? opt.n : cdgsym::default_lower_bound_steps(opt.p);
        std::int64_t s = shift >= 0 ? shift : cdgsym::default_lower_bound_shift(opt.p);
        std::int64_t w = half_width >= 0 ? half_width : cdgsym::default_lower_bound_half_width(opt.p);
        auto result = cdgsym::lower_bound_check(make_params(opt, opt.p), n, s, w);
        json meta = {{"command", "lower-bound"}, {"p", opt.p}, {"n", n}, {"shift", s},
                     {"half_width", w}, {"params", params_echo(opt)},
                     {"wall_time_s", timer.seconds()}};
        emit(cdgsym::lower_bound_to_csv(opt.p, result), opt, std::move(meta));
    } else if (census->parsed()) {
        cdgsym::Modulus mod(opt.p);
        json meta = {{"command", "census"}, {"p", opt.p}, {"mode", mode}, {"beta", opt.beta},
                     {"params", params_echo(opt)}};
        if (mode == "alternations") {
            std::int64_t len = length >= 0 ? length
                : static_cast<std::int64_t>(std::ceil(cdgsym::log2_of(opt.p))) + 2;
            auto result = cdgsym::alternation_census(mod, start, len, q_weight, opt.beta, opt.threads);
            meta["start"] = start;
            meta["length"] = len;
            meta["q"] = q_weight;
            meta["weighted_sum"] = result.weighted_sum;
            meta["majorant"] = result.majorant;
            meta["wall_time_s"] = timer.seconds();
            emit(cdgsym::alternation_census_to_csv(result), opt, std::move(meta));
        } else {
            const double l = cdgsym::log2_of(opt.p);
            std::int64_t n = opt.n >= 0 ? opt.n : static_cast<std::int64_t>(l * l);
            auto seq = cdgsym::random_sequence(n - 1, opt.seed);
            cdgsym::MultiplierSequence reversed(seq.rbegin(), seq.rend());
            auto table = cdgsym::occupation_counts(
                cdgsym::to_exponent_path(reversed),
                std::max<std::int64_t>(static_cast<std::int64_t>(l * l), 1));
            auto result = cdgsym::frequency_census(
                table, n, cdgsym::default_thresholds(opt.p, opt.beta), mod, opt.threads);
            meta["n"] = n;
            meta["thresholds"] = {{"lower", cdgsym::default_thresholds(opt.p, opt.beta).lower},
                                  {"upper", cdgsym::default_thresholds(opt.p, opt.beta).upper}};
            meta["wall_time_s"] = timer.seconds();
            emit(cdgsym::frequency_census_to_csv(result), opt, std::move(meta));
        }
    } else if (walk_laws->parsed()) {
        if (law_two_n % 2 != 0) throw std::invalid_argument("--two-n must be even");
        cdgsym::CsvTable t;
        t.header = {"law", "index", "numerator", "denominator", "probability"};
        for (std::int64_t l = 0; l <= law_j; ++l) {
            auto v = cdgsym::max_law(law_j, l);
            t.rows.push_back({"max", cdgsym::format_int(l),
                              boost::multiprecision::numerator(v).str(),
                              boost::multiprecision::denominator(v).str(),
                              cdgsym::format_double(cdgsym::to_double(v))});
        }
        for (std::int64_t r = 0; r <= law_two_n / 2; ++r) {
            auto v = cdgsym::returns_law(r, law_two_n);
            t.rows.push_back({"returns", cdgsym::format_int(r),
                              boost::multiprecision::numerator(v).str(),
                              boost::multiprecision::denominator(v).str(),
                              cdgsym::format_double(cdgsym::to_double(v))});
        }
        json meta = {{"command", "walk-laws"}, {"j", law_j}, {"two_n", law_two_n},
                     {"wall_time_s", timer.seconds()}};
        emit(t, opt, std::move(meta));
    } else if (cutoff->parsed()) {
        auto report = cdgsym::cutoff_profile(make_params(opt, opt.p));
        json meta = {{"command", "cutoff"}, {"p", opt.p}, {"params", params_echo(opt)},
                     {"n_tv90", report.n_tv90}, {"n_tv50", report.n_tv50},
                     {"n_tv10", report.n_tv10}, {"normalized_width", report.normalized_width},
                     {"wall_time_s", timer.seconds()}};
        emit(cdgsym::cutoff_to_csv(report), opt, std::move(meta));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const cdgsym::InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid arguments: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}
