#pragma once

#include "betamom/ensemble.hpp"
#include "betamom/mcmc.hpp"
#include "betamom/moments.hpp"
#include "betamom/power_series.hpp"
#include "betamom/verify.hpp"

#include <json.hpp>

#include <cstdio>
#include <string>

namespace betamom {

using Json = nlohmann::ordered_json;

/// Decimal rendition of a rational with 15 significant digits, as a string
/// so the JSON layer cannot reformat it.
inline std::string float_string(const Rational& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", r.to_double());
    return buf;
}

inline Json to_json(const EnsembleSpec& spec) {
    Json j;
    j["kind"] = kind_name(spec.kind);
    switch (spec.kind) {
        case EnsembleKind::jacobi_gamma1:
            j["alpha"] = spec.alpha.str();
            break;
        case EnsembleKind::jacobi_general:
            j["alpha"] = spec.alpha.str();
            j["gamma"] = spec.gamma.str();
            break;
        case EnsembleKind::laguerre:
            j["alpha"] = spec.alpha.str();
            j["epsilon"] = spec.epsilon.str();
            break;
        case EnsembleKind::delay_times:
            j["tauD"] = spec.tau_d.str();
            break;
    }
    j["beta"] = spec.beta.str();
    j["N"] = spec.big_n;
    return j;
}

inline Json to_json(const MomentResult& r) {
    Json j;
    j["kind"] = kind_name(r.ensemble.kind);
    j["n"] = r.n;
    j["backend"] = backend_name(r.backend);
    j["value"] = r.value.str();
    j["value_float"] = float_string(r.value);
    return j;
}

inline Json to_json(const PowerSeries& s) {
    Json j = Json::array();
    for (std::size_t i = 0; i <= s.order(); ++i) j.push_back(s[i].str());
    return j;
}

inline Json to_json(const ChainStats& stats) {
    Json j;
    j["estimates"] = Json::array();
    for (const auto& e : stats.estimates)
        j["estimates"].push_back({{"n", e.n}, {"mean", e.mean}, {"stderr", e.stderr_}});
    j["pair_cov"] = {{"cov", stats.pair_cov.cov},
                     {"stderr", stats.pair_cov.stderr_},
                     {"mean_product", stats.pair_cov.mean_product},
                     {"ratio", stats.pair_cov.ratio}};
    j["acceptance"] = stats.acceptance_rate;
    j["chain_means"] = stats.chain_means;
    j["chain_stderrs"] = stats.chain_stderrs;
    j["warnings"] = stats.warnings;
    j["generator"] = stats.generator;
    j["seed"] = stats.seed;
    return j;
}

inline Json to_json(const FactorizationReport& r) {
    Json j;
    j["at_N"] = to_json(r.at_n);
    j["at_2N"] = to_json(r.at_2n);
    j["ratio_at_N"] = r.ratio_at_n;
    j["ratio_at_2N"] = r.ratio_at_2n;
    j["decay_factor"] = r.decay_factor;
    j["consistent_with_inverse_N"] = r.consistent_with_inverse_n;
    return j;
}

inline Json to_json(const CheckResult& c) {
    Json j;
    j["check"] = c.name;
    j["status"] = c.passed ? "pass" : "fail";
    j["detail"] = c.detail;
    return j;
}

}  // namespace betamom
