#pragma once

#include "betamom/combinatorics.hpp"
#include "betamom/ensemble.hpp"
#include "betamom/generating_function.hpp"
#include "betamom/lattice_paths.hpp"
#include "betamom/power_series.hpp"
#include "betamom/rational.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace betamom {

enum class MomentBackend { recurrence, closed_form, series, paths };

inline const char* backend_name(MomentBackend b) {
    switch (b) {
        case MomentBackend::recurrence: return "recurrence";
        case MomentBackend::closed_form: return "closed_form";
        case MomentBackend::series: return "series";
        case MomentBackend::paths: return "paths";
    }
    return "?";
}

constexpr MomentBackend kAllBackends[] = {MomentBackend::recurrence, MomentBackend::closed_form,
                                          MomentBackend::series, MomentBackend::paths};

struct MomentResult {
    EnsembleSpec ensemble;
    long n = 0;
    MomentBackend backend = MomentBackend::recurrence;
    Rational value;
};

/// Extends the convolution D_n = sum_{a=1..n-1} <T^{n-a}> <T^a> by one step:
/// given the moments <T^0>..<T^{n-1}> returns D_n. D_1 is the empty sum.
inline Rational dseq_extend(std::span<const Rational> moments_prefix) {
    if (moments_prefix.empty()) throw std::invalid_argument("dseq_extend needs a nonempty prefix");
    const std::size_t n = moments_prefix.size();
    Rational d;
    for (std::size_t a = 1; a < n; ++a) d += moments_prefix[n - a] * moments_prefix[a];
    return d;
}

// ---- Closed-form sums -------------------------------------------------------

/// gamma=1 Jacobi closed form: A2 sum_p binom(n-1,p) (-1)^p C_p (A1 A2)^p.
inline Rational closed_form_jacobi_gamma1(const AParams& a, long n) {
    const Rational a1a2 = a.a1 * a.a2;
    Rational sum;
    for (long p = 0; p <= n - 1; ++p) {
        Rational term = Rational(binomial(n - 1, p) * catalan(p)) * a1a2.pow(static_cast<std::uint32_t>(p));
        if (p % 2 == 1) term = -term;
        sum += term;
    }
    return a.a2 * sum;
}

/// Laguerre closed form: A2 sum_m M_{n-1,m} (A1 A2)^m A3^{n-1-2m}.
inline Rational closed_form_laguerre(const AParams& a, long n) {
    const Rational a1a2 = a.a1 * a.a2;
    Rational sum;
    for (long m = 0; 2 * m <= n - 1; ++m) {
        sum += Rational(motzkin_count(n - 1, m)) * a1a2.pow(static_cast<std::uint32_t>(m)) *
               a.a3.pow(static_cast<std::uint32_t>(n - 1 - 2 * m));
    }
    return a.a2 * sum;
}

/// Delay-time closed form: <T^n> = schroder(n-1) * tau_D^n under the
/// convention R_0 = 1, R_1 = 2, ... (the recurrence-consistent indexing; at
/// tau_D = 1 the sequence is 1, 2, 6, 22, 90, ...).
inline Rational closed_form_delay_times(const AParams& a, long n) {
    return Rational(schroder(n - 1)) * a.a2.pow(static_cast<std::uint32_t>(n));
}

/// General Jacobi closed sum, signed variant:
/// A2 sum_m binom(n-1,m) (-1)^m A3^{n-1-m}
///        sum_k binom(m-k,k) C_{m-k} (A1 A2)^{m-k} (1-A3)^k.
/// The inner k limit is floor((m+1)/2); the k = (m+1)/2 term for odd m
/// vanishes through binom(m-k,k) = 0.
inline Rational closed_form_jacobi_general_signed(const AParams& a, long n, long k_limit_offset = 1) {
    const Rational a1a2 = a.a1 * a.a2;
    const Rational one_minus_a3 = Rational(1) - a.a3;
    Rational sum;
    for (long m = 0; m <= n - 1; ++m) {
        Rational inner;
        for (long k = 0; k <= (m + k_limit_offset) / 2; ++k) {
            const BigInt c = binomial(m - k, k) * catalan(m - k);
            if (c == 0) continue;
            inner += Rational(c) * a1a2.pow(static_cast<std::uint32_t>(m - k)) *
                     one_minus_a3.pow(static_cast<std::uint32_t>(k));
        }
        if (m % 2 == 1) inner = -inner;
        sum += Rational(binomial(n - 1, m)) * a.a3.pow(static_cast<std::uint32_t>(n - 1 - m)) * inner;
    }
    return a.a2 * sum;
}

/// General Jacobi closed sum, A4 variant:
/// A2 sum_m binom(n-1,m) A3^{n-1-m}
///        sum_k binom(m-k,k) C_{m-k} (-A1 A2)^{m-2k} (A4 A2)^k.
inline Rational closed_form_jacobi_general_a4(const AParams& a, long n) {
    const Rational neg_a1a2 = -(a.a1 * a.a2);
    const Rational a4a2 = a.a4 * a.a2;
    Rational sum;
    for (long m = 0; m <= n - 1; ++m) {
        Rational inner;
        for (long k = 0; k <= (m + 1) / 2; ++k) {
            const BigInt c = binomial(m - k, k) * catalan(m - k);
            if (c == 0) continue;
            inner += Rational(c) * neg_a1a2.pow(static_cast<std::uint32_t>(m - 2 * k)) *
                     a4a2.pow(static_cast<std::uint32_t>(k));
        }
        sum += Rational(binomial(n - 1, m)) * a.a3.pow(static_cast<std::uint32_t>(n - 1 - m)) * inner;
    }
    return a.a2 * sum;
}

/// Computes all four backends for one ensemble with per-spec memoization:
/// the recurrence table, the generating-function series and the path-count
/// tables are each built once and reused across n.
class MomentEngine {
public:
    explicit MomentEngine(EnsembleSpec spec) : spec_(std::move(spec)), a_(a_params(spec_)) {
        moments_.push_back(Rational(1));  // <T^0> = 1
        dvals_.push_back(Rational(0));    // D_0 = 0
    }

    const EnsembleSpec& spec() const { return spec_; }
    const AParams& params() const { return a_; }

    /// <T^n> by iterating the recurrence of the ensemble, bottom-up.
    Rational recurrence(long n) {
        require_positive(n);
        extend_recurrence(static_cast<std::size_t>(n));
        return moments_[static_cast<std::size_t>(n)];
    }

    /// <T^n> from the ensemble's closed-form sum. For the general Jacobi
    /// ensemble both printed variants are evaluated and must agree exactly.
    Rational closed_form(long n) const {
        require_positive(n);
        switch (spec_.kind) {
            case EnsembleKind::jacobi_gamma1: return closed_form_jacobi_gamma1(a_, n);
            case EnsembleKind::laguerre: return closed_form_laguerre(a_, n);
            case EnsembleKind::delay_times: return closed_form_delay_times(a_, n);
            case EnsembleKind::jacobi_general: {
                Rational signed_sum = closed_form_jacobi_general_signed(a_, n);
                Rational a4_sum = closed_form_jacobi_general_a4(a_, n);
                if (!(signed_sum == a4_sum)) throw std::logic_error("closed-form mismatch");
                return signed_sum;
            }
        }
        throw std::logic_error("unknown ensemble kind");
    }

    /// <T^n> as the x^n coefficient of the generating function.
    Rational series(long n) {
        require_positive(n);
        const auto order = static_cast<std::size_t>(n);
        if (!gf_ || gf_->order() < order) {
            const std::size_t grown = gf_ ? 2 * gf_->order() : 16;
            gf_ = generating_function(spec_, std::max(order, grown));
        }
        return (*gf_)[order];
    }

    /// <T^n> from weighted lattice-path counts. The Dyck and
    /// vertical/rise/fall walks carry an explicit binomial factor choosing
    /// the horizontal slots; the Motzkin and delay-time walks contain their
    /// horizontal steps directly.
    Rational paths(long n) {
        require_positive(n);
        const auto len = static_cast<std::size_t>(n - 1);
        switch (spec_.kind) {
            case EnsembleKind::jacobi_gamma1: {
                // Dyck excursions of 2p steps, rise -A1, fall A2; binomial
                // prefactor binom(n-1, p) for the positions of the fall-only
                // slots among the n-1 parts.
                ensure_prefix_totals(dyck_totals_, 2 * len, [this](std::size_t length) {
                    return dyck_model(-a_.a1, a_.a2, (length + 1) / 2);
                });
                Rational sum;
                for (long p = 0; p <= n - 1; ++p)
                    sum += Rational(binomial(n - 1, p)) * dyck_totals_[static_cast<std::size_t>(2 * p)];
                return a_.a2 * sum;
            }
            case EnsembleKind::laguerre: {
                ensure_prefix_totals(motzkin_totals_, len, [this](std::size_t length) {
                    return motzkin_model(a_.a1, a_.a2, a_.a3, length);
                });
                return a_.a2 * motzkin_totals_[len];
            }
            case EnsembleKind::delay_times: {
                ensure_prefix_totals(delay_totals_, len, [this](std::size_t length) {
                    return schroder_like_model(a_.a1, a_.a2, a_.a3, length);
                });
                return a_.a2 * delay_totals_[len];
            }
            case EnsembleKind::jacobi_general: {
                // Walks over vertical -A1, rise A4, fall A2 with m unit-x
                // steps; binom(n-1, m) chooses which of the n-1 x slots are
                // the A3 horizontals, which contribute A3^{n-1-m}.
                ensure_prefix_totals(reduced_totals_, len, [this](std::size_t length) {
                    return vertical_rise_fall_model(-a_.a1, a_.a4, a_.a2, length);
                });
                Rational sum;
                for (long m = 0; m <= n - 1; ++m)
                    sum += Rational(binomial(n - 1, m)) *
                           a_.a3.pow(static_cast<std::uint32_t>(n - 1 - m)) *
                           reduced_totals_[static_cast<std::size_t>(m)];
                return a_.a2 * sum;
            }
        }
        throw std::logic_error("unknown ensemble kind");
    }

    Rational compute(MomentBackend backend, long n) {
        switch (backend) {
            case MomentBackend::recurrence: return recurrence(n);
            case MomentBackend::closed_form: return closed_form(n);
            case MomentBackend::series: return series(n);
            case MomentBackend::paths: return paths(n);
        }
        throw std::logic_error("unknown backend");
    }

private:
    EnsembleSpec spec_;
    AParams a_;
    std::vector<Rational> moments_;  // <T^0>.. computed so far
    std::vector<Rational> dvals_;    // D_0.. computed so far
    std::optional<PowerSeries> gf_;
    std::vector<Rational> dyck_totals_;
    std::vector<Rational> motzkin_totals_;
    std::vector<Rational> delay_totals_;
    std::vector<Rational> reduced_totals_;

    static void require_positive(long n) {
        if (n < 1) throw std::invalid_argument("moment order n must be >= 1");
    }

    /// Grows a prefix-totals cache geometrically so a rising sequence of n
    /// values triggers only O(log n) DP runs.
    template <typename ModelFactory>
    void ensure_prefix_totals(std::vector<Rational>& cache, std::size_t needed,
                              ModelFactory&& make_model) {
        if (cache.size() > needed) return;
        const std::size_t grown = cache.empty() ? 16 : 2 * (cache.size() - 1);
        cache = count_weighted_prefix_totals(make_model(std::max(needed, grown)));
    }

    void extend_recurrence(std::size_t n) {
        while (moments_.size() <= n) {
            const std::size_t k = moments_.size();
            // D_k needs <T^1>..<T^{k-1}>, all already present.
            dvals_.push_back(dseq_extend(std::span<const Rational>(moments_.data(), k)));
            Rational value;
            if (k == 1) {
                value = a_.a2;  // <T^1> = A2 in every ensemble
            } else {
                switch (spec_.kind) {
                    case EnsembleKind::jacobi_gamma1:
                        // <T^n> = A2 - A1 D_n
                        value = a_.a2 - a_.a1 * dvals_[k];
                        break;
                    case EnsembleKind::laguerre: {
                        // <T^n> = A2 A3^{n-1} + A1 sum_{j=0..n-2} A3^j D_{n-j-1}
                        Rational acc;
                        for (std::size_t j = 0; j + 2 <= k; ++j)
                            acc += a_.a3.pow(static_cast<std::uint32_t>(j)) * dvals_[k - j - 1];
                        value = a_.a2 * a_.a3.pow(static_cast<std::uint32_t>(k - 1)) + a_.a1 * acc;
                        break;
                    }
                    case EnsembleKind::delay_times: {
                        // <T^n> = A2 A3^{n-1} + A1 sum_{j=0..n-2} A3^j D_{n-j}
                        Rational acc;
                        for (std::size_t j = 0; j + 2 <= k; ++j)
                            acc += a_.a3.pow(static_cast<std::uint32_t>(j)) * dvals_[k - j];
                        value = a_.a2 * a_.a3.pow(static_cast<std::uint32_t>(k - 1)) + a_.a1 * acc;
                        break;
                    }
                    case EnsembleKind::jacobi_general: {
                        // <T^n> = A2 A3^{n-1}
                        //         + (1-A3) A1 sum_{j=0..n-2} A3^j D_{n-j-1} - A1 D_n
                        Rational acc;
                        for (std::size_t j = 0; j + 2 <= k; ++j)
                            acc += a_.a3.pow(static_cast<std::uint32_t>(j)) * dvals_[k - j - 1];
                        value = a_.a2 * a_.a3.pow(static_cast<std::uint32_t>(k - 1)) +
                                (Rational(1) - a_.a3) * a_.a1 * acc - a_.a1 * dvals_[k];
                        break;
                    }
                }
            }
            moments_.push_back(std::move(value));
        }
    }
};

// ---- Free-function forms of the four backends -------------------------------

inline Rational moment_recurrence(const EnsembleSpec& spec, long n) {
    return MomentEngine(spec).recurrence(n);
}
inline Rational moment_closed_form(const EnsembleSpec& spec, long n) {
    return MomentEngine(spec).closed_form(n);
}
inline Rational moment_series(const EnsembleSpec& spec, long n) {
    return MomentEngine(spec).series(n);
}
inline Rational moment_paths(const EnsembleSpec& spec, long n) {
    return MomentEngine(spec).paths(n);
}

struct BackendReport {
    bool all_equal = true;
    long first_mismatch_n = 0;
    MomentBackend lhs = MomentBackend::recurrence;
    MomentBackend rhs = MomentBackend::recurrence;
    Rational lhs_value;
    Rational rhs_value;
};

struct AllBackendsResult {
    std::vector<MomentResult> results;  // 4 backends per n, n = 1..n_max
    BackendReport report;
};

/// Runs every backend for n = 1..n_max and reports the first disagreement,
/// if any. Disagreements are data for the caller, not exceptions.
inline AllBackendsResult moments_all_backends(const EnsembleSpec& spec, long n_max) {
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    MomentEngine engine(spec);
    AllBackendsResult out;
    for (long n = 1; n <= n_max; ++n) {
        const Rational reference = engine.recurrence(n);
        for (MomentBackend b : kAllBackends) {
            Rational v = b == MomentBackend::recurrence ? reference : engine.compute(b, n);
            if (out.report.all_equal && !(v == reference)) {
                out.report.all_equal = false;
                out.report.first_mismatch_n = n;
                out.report.lhs = MomentBackend::recurrence;
                out.report.rhs = b;
                out.report.lhs_value = reference;
                out.report.rhs_value = v;
            }
            out.results.push_back(MomentResult{spec, n, b, std::move(v)});
        }
    }
    return out;
}

}  // namespace betamom
