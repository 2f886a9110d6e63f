// betamom: asymptotic moments of Jacobi, Laguerre and proper-delay-time
// beta-ensembles by exact arithmetic, plus Monte Carlo validation of the
// finite-N densities.
//
// Subcommands: moment, paths, series, verify, sample. Every run emits one
// JSON envelope (or CSV rows with --format csv) on stdout; diagnostics go to
// stderr. Exit codes: 0 success, 1 usage or parameter error, 2 cross-check
// or verification failure.

#include "betamom/combinatorics.hpp"
#include "betamom/ensemble.hpp"
#include "betamom/lattice_paths.hpp"
#include "betamom/mcmc.hpp"
#include "betamom/moments.hpp"
#include "betamom/serialization.hpp"
#include "betamom/verify.hpp"
#include "betamom/version.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace betamom;

struct OutputOptions {
    std::string format = "json";
    std::string output_file;
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--output", opts.output_file, "Write output to FILE instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& text) {
    if (!opts.output_file.empty()) {
        std::ofstream out(opts.output_file, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open output file " + opts.output_file);
        out << text;
        return;
    }
    std::cout << text;
}

std::string envelope(const std::string& command, const std::optional<EnsembleSpec>& spec,
                     const Json& results) {
    Json j;
    j["command"] = command;
    if (spec) j["spec"] = to_json(*spec);
    j["results"] = results;
    j["version"] = kVersion;
    return j.dump(2) + "\n";
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw CLI::ValidationError(flag, e.what());
    }
}

/// Ensemble flags shared by moment, series and sample.
struct EnsembleFlags {
    std::string kind;
    std::string alpha, gamma, beta = "2", epsilon, tau_d;
    long big_n = 0;
    std::vector<long> transport;

    void add_to(CLI::App* cmd, bool kind_required) {
        auto* kind_opt = cmd->add_option("--kind", kind, "Ensemble kind")
                             ->check(CLI::IsMember({"jacobi", "jacobi-g1", "laguerre", "delay"}));
        cmd->add_option("--alpha", alpha, "alpha parameter (rational, e.g. 3/2)");
        cmd->add_option("--gamma", gamma, "gamma parameter (jacobi only)");
        cmd->add_option("--beta", beta, "Dyson index beta")->capture_default_str();
        cmd->add_option("--N", big_n, "matrix dimension N");
        cmd->add_option("--epsilon", epsilon, "epsilon parameter (laguerre only)");
        cmd->add_option("--tauD", tau_d, "dwell time tau_D (delay only)");
        auto* transport_opt =
            cmd->add_option("--transport", transport,
                            "channel counts N1 N2; builds the jacobi-g1 transport ensemble")
                ->expected(2);
        if (kind_required) kind_opt->excludes(transport_opt);
    }

    EnsembleSpec build() const {
        const Rational beta_r = parse_rational_flag(beta, "--beta");
        if (!transport.empty()) {
            if (!kind.empty())
                throw CLI::ValidationError("--transport", "cannot be combined with --kind");
            return transport_to_jacobi(transport[0], transport[1], beta_r);
        }
        if (kind.empty()) throw CLI::ValidationError("--kind", "an ensemble kind is required");

        auto require = [](const std::string& value, const char* flag) {
            if (value.empty())
                throw CLI::ValidationError(flag, std::string("required for this ensemble kind"));
            return value;
        };
        try {
            if (kind == "jacobi") {
                if (big_n < 1) throw CLI::ValidationError("--N", "required and must be >= 1");
                return EnsembleSpec::jacobi_general(
                    parse_rational_flag(require(alpha, "--alpha"), "--alpha"),
                    parse_rational_flag(require(gamma, "--gamma"), "--gamma"), beta_r, big_n);
            }
            if (kind == "jacobi-g1") {
                if (big_n < 1) throw CLI::ValidationError("--N", "required and must be >= 1");
                return EnsembleSpec::jacobi_gamma1(
                    parse_rational_flag(require(alpha, "--alpha"), "--alpha"), beta_r, big_n);
            }
            if (kind == "laguerre") {
                if (big_n < 1) throw CLI::ValidationError("--N", "required and must be >= 1");
                return EnsembleSpec::laguerre(
                    parse_rational_flag(require(alpha, "--alpha"), "--alpha"),
                    parse_rational_flag(require(epsilon, "--epsilon"), "--epsilon"), beta_r, big_n);
            }
            // delay: N defaults to 1 for the deterministic backends; sample
            // requires an explicit --N.
            return EnsembleSpec::delay_times(
                parse_rational_flag(require(tau_d, "--tauD"), "--tauD"), beta_r,
                big_n >= 1 ? big_n : 1);
        } catch (const CLI::Error&) {
            throw;
        } catch (const std::exception& e) {
            throw CLI::ValidationError("parameters", e.what());
        }
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

// ---- moment ----------------------------------------------------------------

int run_moment(const EnsembleFlags& flags, const OutputOptions& opts, long n, long n_max,
               const std::string& backend) {
    const EnsembleSpec spec = flags.build();
    const long lo = n_max > 0 ? 1 : n;
    const long hi = n_max > 0 ? n_max : n;
    if (hi < 1) throw CLI::ValidationError("--n", "a moment order n >= 1 is required");

    std::vector<MomentResult> results;
    BackendReport report;
    const bool all = backend == "all";
    if (all) {
        auto batch = moments_all_backends(spec, hi);
        for (auto& r : batch.results)
            if (r.n >= lo) results.push_back(std::move(r));
        report = batch.report;
    } else {
        MomentBackend b = MomentBackend::recurrence;
        if (backend == "closed") b = MomentBackend::closed_form;
        else if (backend == "series") b = MomentBackend::series;
        else if (backend == "paths") b = MomentBackend::paths;
        MomentEngine engine(spec);
        for (long k = lo; k <= hi; ++k)
            results.push_back(MomentResult{spec, k, b, engine.compute(b, k)});
    }

    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "kind,n,backend,value,value_float\n";
        for (const auto& r : results)
            csv << kind_name(r.ensemble.kind) << "," << r.n << "," << backend_name(r.backend)
                << "," << r.value.str() << "," << float_string(r.value) << "\n";
        emit(opts, csv.str());
    } else {
        Json payload;
        payload["moments"] = Json::array();
        for (const auto& r : results) payload["moments"].push_back(to_json(r));
        if (all) {
            payload["equality"] = report.all_equal;
            if (!report.all_equal) {
                payload["first_mismatch"] = {{"n", report.first_mismatch_n},
                                             {backend_name(report.lhs), report.lhs_value.str()},
                                             {backend_name(report.rhs), report.rhs_value.str()}};
            }
        }
        emit(opts, envelope("moment", spec, payload));
    }
    if (all && !report.all_equal) {
        std::cerr << "backend disagreement at n=" << report.first_mismatch_n << "\n";
        return 2;
    }
    return 0;
}

// ---- paths -----------------------------------------------------------------

int run_paths(const OutputOptions& opts, const std::string& model_name, long pairs, long length,
              long schroder_n, long rises, bool enumerate,
              const std::string& w_rise, const std::string& w_fall, const std::string& w_horiz,
              const std::string& w_vert) {
    const Rational rise = parse_rational_flag(w_rise, "--w-rise");
    const Rational fall = parse_rational_flag(w_fall, "--w-fall");
    const Rational horiz = parse_rational_flag(w_horiz, "--w-horiz");
    const Rational vert = parse_rational_flag(w_vert, "--w-vert");

    Json payload;
    std::string count_str;
    long size = 0;
    std::vector<std::string> path_strings;

    if (model_name == "schroder") {
        if (schroder_n < 0) throw CLI::ValidationError("--n", "required for the schroder model");
        size = schroder_n;
        count_str = schroder(schroder_n).str();
        if (enumerate) {
            for (const auto& p : enumerate_schroder_paths(static_cast<std::size_t>(schroder_n)))
                path_strings.push_back(p.steps);
        }
    } else {
        PathModel model;
        if (model_name == "dyck") {
            if (pairs < 0) throw CLI::ValidationError("--pairs", "required for the dyck model");
            size = pairs;
            model = dyck_model(rise, fall, static_cast<std::size_t>(pairs));
        } else if (model_name == "motzkin") {
            if (length < 0) throw CLI::ValidationError("--length", "required for the motzkin model");
            size = length;
            if (rises >= 0) {
                count_str = motzkin_count(length, rises).str();
            }
            model = motzkin_model(rise, fall, horiz, static_cast<std::size_t>(length));
        } else {  // jacobi4
            if (length < 0) throw CLI::ValidationError("--length", "required for the jacobi4 model");
            size = length;
            model = four_step_model(vert, rise, fall, horiz, static_cast<std::size_t>(length));
        }
        if (count_str.empty()) {
            const Rational count = count_weighted_paths(model);
            count_str = count.den() == 1 ? count.num().str() : count.str();
        }
        if (enumerate) {
            const std::size_t max_steps = model.horizontal_length + detail::vertical_budget(model);
            for (const auto& p : enumerate_paths(model, max_steps)) {
                if (rises >= 0 && model_name == "motzkin") {
                    long found = 0;
                    for (const auto& s : p.steps)
                        if (s.dx == 1 && s.dy == 1) ++found;
                    if (found != rises) continue;
                }
                path_strings.push_back(p.letters());
            }
        }
    }

    if (opts.format == "csv") {
        std::ostringstream csv;
        if (enumerate) {
            csv << "model,index,path\n";
            for (std::size_t i = 0; i < path_strings.size(); ++i)
                csv << model_name << "," << i << "," << path_strings[i] << "\n";
        } else {
            csv << "model,size,count\n";
            csv << model_name << "," << size << "," << csv_escape(count_str) << "\n";
        }
        emit(opts, csv.str());
    } else {
        payload["model"] = model_name;
        payload["size"] = size;
        payload["count"] = count_str;
        if (enumerate) payload["paths"] = path_strings;
        emit(opts, envelope("paths", std::nullopt, payload));
    }
    return 0;
}

// ---- series ----------------------------------------------------------------

int run_series(const EnsembleFlags& flags, const OutputOptions& opts, long order) {
    if (order < 0) throw CLI::ValidationError("--order", "must be >= 0");
    const EnsembleSpec spec = flags.build();
    const PowerSeries f = generating_function(spec, static_cast<std::size_t>(order));
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "kind,power,coefficient\n";
        for (std::size_t i = 0; i <= f.order(); ++i)
            csv << kind_name(spec.kind) << "," << i << "," << f[i].str() << "\n";
        emit(opts, csv.str());
    } else {
        Json payload;
        payload["order"] = order;
        payload["coefficients"] = to_json(f);
        emit(opts, envelope("series", spec, payload));
    }
    return 0;
}

// ---- verify ----------------------------------------------------------------

int run_verify(const OutputOptions& opts, const std::string& suite, long max_n) {
    if (max_n < 1) throw CLI::ValidationError("--max-n", "must be >= 1");
    std::vector<CheckResult> checks;
    if (suite == "cross-backend") checks = verify_cross_backend(max_n);
    else if (suite == "identities") checks = verify_identities(max_n);
    else if (suite == "paths-oracle") checks = verify_paths_oracle();
    else checks = verify_all(max_n);

    bool all_pass = true;
    for (const auto& c : checks) {
        all_pass = all_pass && c.passed;
        std::cerr << (c.passed ? "pass" : "FAIL") << "  " << c.name
                  << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }

    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "suite,check,status,detail\n";
        for (const auto& c : checks)
            csv << suite << "," << csv_escape(c.name) << "," << (c.passed ? "pass" : "fail") << ","
                << csv_escape(c.detail) << "\n";
        emit(opts, csv.str());
    } else {
        Json payload;
        payload["suite"] = suite;
        payload["checks"] = Json::array();
        for (const auto& c : checks) payload["checks"].push_back(to_json(c));
        payload["all_pass"] = all_pass;
        emit(opts, envelope("verify", std::nullopt, payload));
    }
    return all_pass ? 0 : 2;
}

// ---- sample ----------------------------------------------------------------

int run_sample(const EnsembleFlags& flags, const OutputOptions& opts, const ChainConfig& cfg,
               long n_max, bool factorization) {
    EnsembleSpec spec = flags.build();
    if (spec.kind == EnsembleKind::delay_times && flags.big_n < 1)
        throw CLI::ValidationError("--N", "sampling the delay ensemble requires an explicit N");

    try {
        cfg.validate();
    } catch (const std::exception& e) {
        throw CLI::ValidationError("chain config", e.what());
    }

    if (factorization) {
        const FactorizationReport report = factorization_test(spec, cfg);
        for (const auto& w : report.at_n.warnings) std::cerr << "warning: " << w << "\n";
        for (const auto& w : report.at_2n.warnings) std::cerr << "warning: " << w << "\n";
        if (opts.format == "csv") {
            std::ostringstream csv;
            csv << "quantity,n,mean,stderr\n";
            csv << "cov_ratio," << spec.big_n << "," << report.ratio_at_n << ",\n";
            csv << "cov_ratio," << 2 * spec.big_n << "," << report.ratio_at_2n << ",\n";
            csv << "decay_factor,," << report.decay_factor << ",\n";
            emit(opts, csv.str());
        } else {
            emit(opts, envelope("sample", spec, to_json(report)));
        }
        return 0;
    }

    const ChainStats stats = mh_sample(spec, cfg, n_max);
    for (const auto& w : stats.warnings) std::cerr << "warning: " << w << "\n";
    if (opts.format == "csv") {
        std::ostringstream csv;
        csv << "quantity,n,mean,stderr\n";
        for (const auto& e : stats.estimates)
            csv << "moment," << e.n << "," << e.mean << "," << e.stderr_ << "\n";
        csv << "pair_cov,," << stats.pair_cov.cov << "," << stats.pair_cov.stderr_ << "\n";
        csv << "acceptance,," << stats.acceptance_rate << ",\n";
        emit(opts, csv.str());
    } else {
        emit(opts, envelope("sample", spec, to_json(stats)));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Asymptotic beta-ensemble moments by exact arithmetic, with MC validation"};
    app.require_subcommand(1);

    // moment
    EnsembleFlags moment_flags;
    OutputOptions moment_opts;
    long moment_n = 0, moment_n_max = 0;
    std::string moment_backend = "all";
    auto* moment = app.add_subcommand("moment", "Compute <T_1^n> for an ensemble");
    moment_flags.add_to(moment, true);
    add_output_options(moment, moment_opts);
    moment->add_option("--n", moment_n, "moment order");
    moment->add_option("--n-max", moment_n_max, "compute n = 1..n-max");
    moment->add_option("--backend", moment_backend, "computation backend")
        ->check(CLI::IsMember({"recurrence", "closed", "series", "paths", "all"}))
        ->capture_default_str();

    // paths
    OutputOptions paths_opts;
    std::string paths_model;
    long paths_pairs = -1, paths_length = -1, paths_n = -1, paths_rises = -1;
    bool paths_enumerate = false;
    std::string w_rise = "1", w_fall = "1", w_horiz = "1", w_vert = "1";
    auto* paths = app.add_subcommand("paths", "Count or enumerate weighted lattice paths");
    paths->add_option("--model", paths_model, "path model")
        ->required()
        ->check(CLI::IsMember({"dyck", "motzkin", "schroder", "jacobi4"}));
    paths->add_option("--pairs", paths_pairs, "number of rise/fall pairs (dyck)");
    paths->add_option("--length", paths_length, "path length (motzkin, jacobi4)");
    paths->add_option("--n", paths_n, "half-width n (schroder)");
    paths->add_option("--rises", paths_rises, "count only paths with this many rises (motzkin)");
    paths->add_flag("--enumerate", paths_enumerate, "list every admissible path");
    paths->add_option("--w-rise", w_rise, "rise weight")->capture_default_str();
    paths->add_option("--w-fall", w_fall, "fall weight")->capture_default_str();
    paths->add_option("--w-horiz", w_horiz, "horizontal weight")->capture_default_str();
    paths->add_option("--w-vert", w_vert, "vertical weight")->capture_default_str();
    add_output_options(paths, paths_opts);

    // series
    EnsembleFlags series_flags;
    OutputOptions series_opts;
    long series_order = -1;
    auto* series = app.add_subcommand("series", "Generating-function coefficients");
    series_flags.add_to(series, true);
    series->add_option("--order", series_order, "truncation order")->required();
    add_output_options(series, series_opts);

    // verify
    OutputOptions verify_opts;
    std::string verify_suite = "all";
    long verify_max_n = 30;
    auto* verify = app.add_subcommand("verify", "Run the deterministic verification suites");
    verify->add_option("--suite", verify_suite, "which suite to run")
        ->check(CLI::IsMember({"cross-backend", "identities", "paths-oracle", "all"}))
        ->capture_default_str();
    verify->add_option("--max-n", verify_max_n, "largest moment order checked")
        ->capture_default_str();
    add_output_options(verify, verify_opts);

    // sample
    EnsembleFlags sample_flags;
    OutputOptions sample_opts;
    ChainConfig cfg;
    long sample_n_max = 2;
    bool factorization = false;
    double step_scale = 0.0;
    auto* sample = app.add_subcommand("sample", "Metropolis-Hastings sampling of the finite-N density");
    sample_flags.add_to(sample, true);
    sample->add_option("--sweeps", cfg.sweeps, "sweeps per chain")->capture_default_str();
    sample->add_option("--burn-in", cfg.burn_in, "discarded initial sweeps")->capture_default_str();
    sample->add_option("--chains", cfg.chains, "independent chains")->capture_default_str();
    sample->add_option("--seed", cfg.seed, "base RNG seed")->capture_default_str();
    sample->add_option("--n-max", sample_n_max, "record moments up to this order")
        ->capture_default_str();
    sample->add_option("--step-scale", step_scale, "proposal half-width (0 = auto)");
    sample->add_flag("--factorization", factorization,
                     "estimate the pair covariance at N and 2N");
    add_output_options(sample, sample_opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (moment->parsed())
            return run_moment(moment_flags, moment_opts, moment_n, moment_n_max, moment_backend);
        if (paths->parsed())
            return run_paths(paths_opts, paths_model, paths_pairs, paths_length, paths_n,
                             paths_rises, paths_enumerate, w_rise, w_fall, w_horiz, w_vert);
        if (series->parsed()) return run_series(series_flags, series_opts, series_order);
        if (verify->parsed()) return run_verify(verify_opts, verify_suite, verify_max_n);
        if (sample->parsed()) {
            cfg.step_scale = step_scale;
            return run_sample(sample_flags, sample_opts, cfg, sample_n_max, factorization);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
