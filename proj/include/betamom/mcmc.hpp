#pragma once

#include "betamom/ensemble.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace betamom {

/// Metropolis-Hastings configuration. step_scale 0 selects a default of
/// one tenth of the ensemble's natural coordinate scale.
struct ChainConfig {
    std::uint64_t sweeps = 200000;
    std::uint64_t burn_in = 20000;
    double step_scale = 0.0;
    unsigned chains = 4;
    std::uint64_t seed = 1;

    void validate() const {
        if (sweeps == 0) throw std::invalid_argument("sweeps must be positive");
        if (burn_in >= sweeps) throw std::invalid_argument("burn_in must be < sweeps");
        if (chains < 1) throw std::invalid_argument("chains must be >= 1");
        if (step_scale < 0) throw std::invalid_argument("step_scale must be >= 0");
    }
};

struct MomentEstimate {
    long n = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
};

struct PairCovariance {
    double cov = 0.0;
    double stderr_ = 0.0;
    double mean_product = 0.0;  // estimate of <T1 T2>
    double ratio = 0.0;         // |cov| / (<T1><T2>)
};

struct ChainStats {
    std::vector<MomentEstimate> estimates;
    PairCovariance pair_cov;
    double acceptance_rate = 0.0;
    // diagnostics: per-chain means of each tracked moment, and per-chain
    // standard errors, for split-chain agreement checks
    std::vector<std::vector<double>> chain_means;
    std::vector<std::vector<double>> chain_stderrs;
    std::vector<std::string> warnings;
    std::string generator;
    std::uint64_t seed = 0;
};

namespace mcmc_detail {

inline std::uint64_t derive_chain_seed(std::uint64_t base, unsigned chain) {
    std::uint64_t s = base + 0x9e3779b97f4a7c15ull * (chain + 1);
    std::uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Uniform in [0,1) from the top 53 bits; avoids the unspecified behaviour
/// of std::uniform_real_distribution so runs are reproducible everywhere.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct SingleParticleWeight {
    // log w(t) = a_log * log(t) + b_log * log(1-t) - lin * t - inv / t
    double a_log = 0.0;
    double b_log = 0.0;
    double lin = 0.0;
    double inv = 0.0;
    bool unit_interval = false;

    double operator()(double t) const {
        double v = 0.0;
        if (a_log != 0.0) v += a_log * std::log(t);
        if (b_log != 0.0) v += b_log * std::log(1.0 - t);
        if (lin != 0.0) v -= lin * t;
        if (inv != 0.0) v -= inv / t;
        return v;
    }
};

/// Finite-N single-particle log weight of each ensemble. The delay-time
/// density uses exponents a = -3 beta N/2 + beta - 2 and c = beta N tau_D/2
/// in t^a e^{-c/t}, the sign convention under which the density is
/// normalizable (checked by test against the N=1 closed form).
inline SingleParticleWeight single_particle_weight(const EnsembleSpec& spec) {
    SingleParticleWeight w;
    const double beta = spec.beta.to_double();
    const double n = static_cast<double>(spec.big_n);
    switch (spec.kind) {
        case EnsembleKind::jacobi_gamma1:
            w.a_log = spec.alpha.to_double() - 1.0;
            w.b_log = 0.0;
            w.unit_interval = true;
            break;
        case EnsembleKind::jacobi_general:
            w.a_log = spec.alpha.to_double() - 1.0;
            w.b_log = spec.gamma.to_double() - 1.0;
            w.unit_interval = true;
            break;
        case EnsembleKind::laguerre:
            w.a_log = spec.alpha.to_double();
            w.lin = spec.epsilon.to_double();
            break;
        case EnsembleKind::delay_times:
            w.a_log = -1.5 * beta * n + beta - 2.0;
            w.inv = 0.5 * beta * n * spec.tau_d.to_double();
            break;
    }
    return w;
}

inline double default_step_scale(const EnsembleSpec& spec) {
    switch (spec.kind) {
        case EnsembleKind::jacobi_gamma1:
        case EnsembleKind::jacobi_general:
            return 0.1;
        case EnsembleKind::laguerre:
        case EnsembleKind::delay_times: {
            const double scale = a_params(spec).a2.to_double();
            return 0.1 * (scale > 0 ? scale : 1.0);
        }
    }
    return 0.1;
}

/// Reflects a proposal back into the sampling domain. The fold preserves
/// proposal symmetry, so the acceptance ratio stays the plain density ratio.
inline double reflect(double t, bool unit_interval) {
    if (unit_interval) {
        t = std::fmod(t, 2.0);
        if (t < 0) t += 2.0;
        if (t > 1.0) t = 2.0 - t;
        return t;
    }
    return t < 0 ? -t : t;
}

}  // namespace mcmc_detail

/// Log of the unnormalized joint eigenvalue density at finite N:
/// beta * sum_{i<j} log|T_i - T_j| plus the per-coordinate weight. Returns
/// -infinity when any coordinate sits on the domain boundary or two
/// coordinates coincide.
inline double log_density(const EnsembleSpec& spec, std::span<const double> t) {
    constexpr double kRejected = -std::numeric_limits<double>::infinity();
    const auto w = mcmc_detail::single_particle_weight(spec);
    const double beta = spec.beta.to_double();
    double total = 0.0;
    for (double ti : t) {
        if (ti <= 0.0) return kRejected;
        if (w.unit_interval && ti >= 1.0) return kRejected;
        total += w(ti);
    }
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            const double d = t[i] - t[j];
            if (d == 0.0) return kRejected;
            total += beta * std::log(std::abs(d));
        }
    return total;
}

namespace mcmc_detail {

struct ChainAccumulators {
    // one row of batch means per tracked quantity: moments 1..n_max, then
    // the all-pairs product mean
    std::vector<std::vector<double>> batches;
    std::uint64_t accepted = 0;
    std::uint64_t proposed = 0;
};

inline void run_chain(const EnsembleSpec& spec, const ChainConfig& cfg, long n_max,
                      unsigned chain_index, std::uint64_t batch_len, std::uint64_t n_batches,
                      ChainAccumulators& acc) {
    const auto w = single_particle_weight(spec);
    const double beta = spec.beta.to_double();
    const double step =
        cfg.step_scale > 0 ? cfg.step_scale : default_step_scale(spec);
    const std::size_t n = static_cast<std::size_t>(spec.big_n);

    std::mt19937_64 rng(derive_chain_seed(cfg.seed, chain_index));

    // Deterministic start: spread over the natural scale of the ensemble.
    std::vector<double> t(n);
    const double spread = w.unit_interval ? 1.0 : 2.0 * a_params(spec).a2.to_double();
    for (std::size_t i = 0; i < n; ++i)
        t[i] = spread * (static_cast<double>(i) + 0.5) / static_cast<double>(n);

    const std::size_t n_quant = static_cast<std::size_t>(n_max) + 1;
    acc.batches.assign(n_quant, std::vector<double>(n_batches, 0.0));

    std::vector<double> sums(n_quant, 0.0);

    for (std::uint64_t sweep = 0; sweep < cfg.sweeps; ++sweep) {
        for (std::size_t i = 0; i < n; ++i) {
            const double old = t[i];
            double prop = old + step * (2.0 * uniform01(rng) - 1.0);
            prop = reflect(prop, w.unit_interval);
            const double u = uniform01(rng);
            ++acc.proposed;
            if (prop <= 0.0 || (w.unit_interval && prop >= 1.0)) continue;
            double delta = w(prop) - w(old);
            bool coincident = false;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const double dp = prop - t[j];
                if (dp == 0.0) {
                    coincident = true;
                    break;
                }
                delta += beta * (std::log(std::abs(dp)) - std::log(std::abs(old - t[j])));
            }
            if (coincident) continue;
            if (std::log(u) < delta) {
                t[i] = prop;
                ++acc.accepted;
            }
        }

        if (sweep < cfg.burn_in) continue;
        const std::uint64_t k = sweep - cfg.burn_in;
        if (k >= batch_len * n_batches) continue;  // trailing remainder not recorded
        const std::uint64_t batch = k / batch_len;

        // Exchangeability: average each power over all coordinates, and the
        // pair product over all ordered pairs.
        double s1 = 0.0, s2 = 0.0;
        for (std::size_t q = 0; q < static_cast<std::size_t>(n_max); ++q) sums[q] = 0.0;
        for (double ti : t) {
            double p = 1.0;
            for (long q = 1; q <= n_max; ++q) {
                p *= ti;
                sums[static_cast<std::size_t>(q - 1)] += p;
            }
            s1 += ti;
            s2 += ti * ti;
        }
        for (long q = 1; q <= n_max; ++q)
            acc.batches[static_cast<std::size_t>(q - 1)][batch] +=
                sums[static_cast<std::size_t>(q - 1)] / static_cast<double>(n);
        const double pair_mean =
            n > 1 ? (s1 * s1 - s2) / (static_cast<double>(n) * static_cast<double>(n - 1)) : 0.0;
        acc.batches[static_cast<std::size_t>(n_max)][batch] += pair_mean;
    }

    for (auto& row : acc.batches)
        for (auto& b : row) b /= static_cast<double>(batch_len);
}

inline std::pair<double, double> mean_and_stderr(std::span<const double> batch_means) {
    const double count = static_cast<double>(batch_means.size());
    double mean = 0.0;
    for (double b : batch_means) mean += b;
    mean /= count;
    if (batch_means.size() < 2) return {mean, 0.0};
    double var = 0.0;
    for (double b : batch_means) var += (b - mean) * (b - mean);
    var /= (count - 1.0);
    return {mean, std::sqrt(var / count)};
}

}  // namespace mcmc_detail

/// Random-walk Metropolis sampling of the finite-N joint density: one sweep
/// proposes one reflected move per coordinate. Chains run independently on
/// derived seeds (in parallel), estimates use batch means with 20 batches
/// per chain, and identical (spec, cfg, n_max) inputs reproduce identical
/// output bit for bit.
inline ChainStats mh_sample(const EnsembleSpec& spec, const ChainConfig& cfg, long n_max) {
    spec.validate();
    cfg.validate();
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");

    constexpr std::uint64_t kBatchesPerChain = 20;
    const std::uint64_t kept = cfg.sweeps - cfg.burn_in;
    const std::uint64_t batch_len = kept >= kBatchesPerChain ? kept / kBatchesPerChain : 1;
    const std::uint64_t n_batches = kept >= kBatchesPerChain ? kBatchesPerChain : kept;

    std::vector<mcmc_detail::ChainAccumulators> acc(cfg.chains);
    {
        std::vector<std::thread> workers;
        workers.reserve(cfg.chains);
        for (unsigned c = 0; c < cfg.chains; ++c)
            workers.emplace_back([&, c] {
                mcmc_detail::run_chain(spec, cfg, n_max, c, batch_len, n_batches, acc[c]);
            });
        for (auto& th : workers) th.join();
    }

    const std::size_t n_quant = static_cast<std::size_t>(n_max) + 1;
    ChainStats stats;
    stats.seed = cfg.seed;
    stats.generator = "mt19937_64/splitmix64-derived chain seeds, 53-bit uniforms";

    // Pool batch means across chains, in chain order.
    std::vector<std::vector<double>> pooled(n_quant);
    stats.chain_means.assign(cfg.chains, std::vector<double>(n_quant, 0.0));
    stats.chain_stderrs.assign(cfg.chains, std::vector<double>(n_quant, 0.0));
    for (unsigned c = 0; c < cfg.chains; ++c)
        for (std::size_t q = 0; q < n_quant; ++q) {
            const auto& row = acc[c].batches[q];
            pooled[q].insert(pooled[q].end(), row.begin(), row.end());
            if (row.size() >= 2) {
                auto [m, se] = mcmc_detail::mean_and_stderr(row);
                stats.chain_means[c][q] = m;
                stats.chain_stderrs[c][q] = se;
            } else if (!row.empty()) {
                stats.chain_means[c][q] = row[0];
            }
        }

    std::uint64_t accepted = 0, proposed = 0;
    for (const auto& a : acc) {
        accepted += a.accepted;
        proposed += a.proposed;
    }
    stats.acceptance_rate = proposed ? static_cast<double>(accepted) / static_cast<double>(proposed) : 0.0;
    if (stats.acceptance_rate < 0.05 || stats.acceptance_rate > 0.95)
        stats.warnings.push_back("acceptance rate " + std::to_string(stats.acceptance_rate) +
                                 " suggests a badly tuned step_scale");

    for (long q = 1; q <= n_max; ++q) {
        auto [m, se] = mcmc_detail::mean_and_stderr(pooled[static_cast<std::size_t>(q - 1)]);
        stats.estimates.push_back(MomentEstimate{q, m, se});
    }

    // Pair covariance via the delta method on batch means: with global means
    // (P, M), cov = P - M^2, and the batch pseudo-values P_b - 2 M M_b + M^2
    // average to exactly that while carrying the batch fluctuations.
    if (spec.big_n >= 2) {
        const auto& pair_row = pooled[static_cast<std::size_t>(n_max)];
        const auto& m1_row = pooled[0];
        auto [pbar, pse] = mcmc_detail::mean_and_stderr(pair_row);
        (void)pse;
        auto [mbar, mse] = mcmc_detail::mean_and_stderr(m1_row);
        (void)mse;
        std::vector<double> pseudo(pair_row.size());
        for (std::size_t b = 0; b < pair_row.size(); ++b)
            pseudo[b] = pair_row[b] - 2.0 * mbar * m1_row[b] + mbar * mbar;
        auto [cov, cov_se] = mcmc_detail::mean_and_stderr(pseudo);
        stats.pair_cov.cov = cov;
        stats.pair_cov.stderr_ = cov_se;
        stats.pair_cov.mean_product = pbar;
        const double denom = mbar * mbar;
        stats.pair_cov.ratio = denom != 0.0 ? std::abs(cov) / denom : 0.0;
    }

    return stats;
}

struct FactorizationReport {
    ChainStats at_n;
    ChainStats at_2n;
    double ratio_at_n = 0.0;    // |cov|/(<T1><T2>) at N
    double ratio_at_2n = 0.0;   // same at 2N
    double decay_factor = 0.0;  // ratio_at_n / ratio_at_2n; ~2 for O(1/N) decay
    bool consistent_with_inverse_n = false;
};

/// Stochastic check of asymptotic factorization: the covariance ratio
/// |cov(T1,T2)|/(<T1><T2>) should fall roughly in half when N doubles.
inline FactorizationReport factorization_test(const EnsembleSpec& spec, const ChainConfig& cfg) {
    if (spec.big_n < 2) throw std::invalid_argument("need N>=2");
    EnsembleSpec doubled = spec;
    doubled.big_n = 2 * spec.big_n;

    FactorizationReport report;
    report.at_n = mh_sample(spec, cfg, 2);
    report.at_2n = mh_sample(doubled, cfg, 2);
    report.ratio_at_n = report.at_n.pair_cov.ratio;
    report.ratio_at_2n = report.at_2n.pair_cov.ratio;
    report.decay_factor =
        report.ratio_at_2n != 0.0 ? report.ratio_at_n / report.ratio_at_2n : 0.0;
    report.consistent_with_inverse_n =
        report.decay_factor >= 1.4 && report.decay_factor <= 2.8;
    return report;
}

}  // namespace betamom
