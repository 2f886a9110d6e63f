#pragma once

#include "betamom/combinatorics.hpp"
#include "betamom/ensemble.hpp"
#include "betamom/generating_function.hpp"
#include "betamom/lattice_paths.hpp"
#include "betamom/moments.hpp"

#include <map>
#include <string>
#include <vector>

namespace betamom {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;  // counterexample description on failure
};

/// Five reference parameter sets per ensemble kind, spanning integer and
/// fractional parameters and beta outside {1,2,4}.
inline std::vector<EnsembleSpec> standard_parameter_sets(EnsembleKind kind) {
    using R = Rational;
    switch (kind) {
        case EnsembleKind::jacobi_gamma1:
            return {
                EnsembleSpec::jacobi_gamma1(R(1), R(2), 100),
                EnsembleSpec::jacobi_gamma1(R(1, 2), R(1), 10),
                EnsembleSpec::jacobi_gamma1(R(5), R(4), 12),
                EnsembleSpec::jacobi_gamma1(R(3, 2), R(2), 25),
                EnsembleSpec::jacobi_gamma1(R(2), R(1, 3), 40),
            };
        case EnsembleKind::jacobi_general:
            return {
                EnsembleSpec::jacobi_general(R(1), R(1), R(2), 100),
                EnsembleSpec::jacobi_general(R(2), R(3), R(2), 50),
                EnsembleSpec::jacobi_general(R(1, 2), R(5, 2), R(1), 10),
                EnsembleSpec::jacobi_general(R(5), R(2), R(4), 12),
                EnsembleSpec::jacobi_general(R(7, 3), R(1), R(2), 9),
            };
        case EnsembleKind::laguerre:
            return {
                EnsembleSpec::laguerre(R(0), R(1), R(2), 10),
                EnsembleSpec::laguerre(R(1), R(1), R(2), 40),
                EnsembleSpec::laguerre(R(1, 2), R(2), R(1), 10),
                EnsembleSpec::laguerre(R(3), R(1, 2), R(4), 5),
                EnsembleSpec::laguerre(R(2), R(3), R(2), 25),
            };
        case EnsembleKind::delay_times:
            return {
                EnsembleSpec::delay_times(R(1)),
                EnsembleSpec::delay_times(R(3, 2)),
                EnsembleSpec::delay_times(R(2, 3)),
                EnsembleSpec::delay_times(R(5)),
                EnsembleSpec::delay_times(R(1, 7)),
            };
    }
    return {};
}

namespace verify_detail {

inline std::string describe(const EnsembleSpec& s) {
    std::string d = kind_name(s.kind);
    d += "(alpha=" + s.alpha.str() + ", gamma=" + s.gamma.str() + ", beta=" + s.beta.str() +
         ", N=" + std::to_string(s.big_n) + ", eps=" + s.epsilon.str() +
         ", tauD=" + s.tau_d.str() + ")";
    return d;
}

}  // namespace verify_detail

/// Exact agreement of all four moment backends on the reference parameter
/// sets, n = 1..max_n.
inline std::vector<CheckResult> verify_cross_backend(long max_n) {
    std::vector<CheckResult> out;
    for (EnsembleKind kind :
         {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general, EnsembleKind::laguerre,
          EnsembleKind::delay_times}) {
        CheckResult check;
        check.name = std::string("cross-backend ") + kind_name(kind);
        for (const auto& spec : standard_parameter_sets(kind)) {
            const auto all = moments_all_backends(spec, max_n);
            if (!all.report.all_equal) {
                check.passed = false;
                check.detail = verify_detail::describe(spec) + " n=" +
                               std::to_string(all.report.first_mismatch_n) + ": " +
                               backend_name(all.report.lhs) + "=" + all.report.lhs_value.str() +
                               " vs " + backend_name(all.report.rhs) + "=" +
                               all.report.rhs_value.str();
                break;
            }
        }
        out.push_back(std::move(check));
    }
    return out;
}

/// Structural identities: the gamma -> 0 reduction of the general Jacobi
/// ensemble, the Catalan limit of the Laguerre ensemble at alpha = 0, the
/// two printed forms of the general-Jacobi closed sum, and the
/// inner-sum truncation equivalence.
inline std::vector<CheckResult> verify_identities(long max_n) {
    std::vector<CheckResult> out;

    {
        CheckResult check{"gamma0 reduction jacobi_general == jacobi_gamma1", true, ""};
        const long limit = std::min<long>(max_n, 15);
        for (const auto& g1 : standard_parameter_sets(EnsembleKind::jacobi_gamma1)) {
            auto general =
                EnsembleSpec::jacobi_general(g1.alpha, Rational(0), g1.beta, g1.big_n);
            MomentEngine eng_g1(g1), eng_gen(general);
            for (long n = 1; n <= limit; ++n) {
                if (!(eng_g1.recurrence(n) == eng_gen.recurrence(n))) {
                    check.passed = false;
                    check.detail = verify_detail::describe(g1) + " n=" + std::to_string(n);
                    break;
                }
            }
            if (!check.passed) break;
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"laguerre alpha=0 gives <T^n> = C_n <T>^n", true, ""};
        const long limit = std::min<long>(max_n, 15);
        for (const Rational& eps : {Rational(1), Rational(1, 2), Rational(3)}) {
            auto spec = EnsembleSpec::laguerre(Rational(0), eps, Rational(2), 10);
            MomentEngine eng(spec);
            const Rational mean = eng.params().a2;
            for (long n = 1; n <= limit; ++n) {
                const Rational expected = Rational(catalan(n)) * mean.pow(static_cast<std::uint32_t>(n));
                if (!(eng.recurrence(n) == expected)) {
                    check.passed = false;
                    check.detail = "eps=" + eps.str() + " n=" + std::to_string(n);
                    break;
                }
            }
            if (!check.passed) break;
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"jacobi_general closed sums (signed vs A4 form) agree", true, ""};
        const long limit = std::min<long>(max_n, 20);
        for (const auto& spec : standard_parameter_sets(EnsembleKind::jacobi_general)) {
            const AParams a = a_params(spec);
            for (long n = 1; n <= limit; ++n) {
                if (!(closed_form_jacobi_general_signed(a, n) == closed_form_jacobi_general_a4(a, n))) {
                    check.passed = false;
                    check.detail = verify_detail::describe(spec) + " n=" + std::to_string(n);
                    break;
                }
            }
            if (!check.passed) break;
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"inner k-sum limits floor((m+1)/2) and floor(m/2) agree", true, ""};
        const long limit = std::min<long>(max_n, 20);
        for (const auto& spec : standard_parameter_sets(EnsembleKind::jacobi_general)) {
            const AParams a = a_params(spec);
            for (long n = 1; n <= limit; ++n) {
                if (!(closed_form_jacobi_general_signed(a, n, 1) ==
                      closed_form_jacobi_general_signed(a, n, 0))) {
                    check.passed = false;
                    check.detail = verify_detail::describe(spec) + " n=" + std::to_string(n);
                    break;
                }
            }
            if (!check.passed) break;
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"generating functions have zero residual and match recurrences", true, ""};
        const auto order = static_cast<std::size_t>(std::min<long>(max_n, 30));
        for (EnsembleKind kind :
             {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general, EnsembleKind::laguerre,
              EnsembleKind::delay_times}) {
            for (const auto& spec : standard_parameter_sets(kind)) {
                const AParams a = a_params(spec);
                const auto eq = functional_equation(a, kind, order);
                const PowerSeries f = solve_quadratic_fe(eq, order);
                if (!fe_residual(eq, f).is_zero()) {
                    check.passed = false;
                    check.detail = verify_detail::describe(spec) + " nonzero residual";
                    break;
                }
                if (kind == EnsembleKind::jacobi_gamma1 &&
                    !(gf_jacobi_gamma1_sqrt_form(a, order) == f)) {
                    check.passed = false;
                    check.detail = verify_detail::describe(spec) + " sqrt form mismatch";
                    break;
                }
            }
            if (!check.passed) break;
        }
        out.push_back(std::move(check));
    }

    return out;
}

/// Agreement between the closed-form counting sequences, the weighted-path
/// DP, and exhaustive enumeration at small sizes.
inline std::vector<CheckResult> verify_paths_oracle() {
    std::vector<CheckResult> out;

    {
        CheckResult check{"catalan(p) == enumerated Dyck paths, p <= 8", true, ""};
        for (std::size_t p = 0; p <= 8; ++p) {
            const auto model = dyck_model(Rational(1), Rational(1), p);
            const auto paths = enumerate_paths(model, 2 * p);
            const Rational dp = count_weighted_paths(model);
            const BigInt expected = catalan(static_cast<long>(p));
            if (BigInt(paths.size()) != expected || !(dp == Rational(expected))) {
                check.passed = false;
                check.detail = "p=" + std::to_string(p);
                break;
            }
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"motzkin_count(n,m) == enumerated Motzkin paths, n <= 10", true, ""};
        for (std::size_t n = 0; n <= 10 && check.passed; ++n) {
            const auto model = motzkin_model(Rational(1), Rational(1), Rational(1), n);
            const auto paths = enumerate_paths(model, n);
            std::map<long, long> by_rises;
            for (const auto& p : paths) {
                long rises = 0;
                for (const auto& s : p.steps)
                    if (s.dx == 1 && s.dy == 1) ++rises;
                ++by_rises[rises];
            }
            for (long m = 0; 2 * m <= static_cast<long>(n); ++m) {
                const BigInt expected = motzkin_count(static_cast<long>(n), m);
                const long found = by_rises.count(m) ? by_rises[m] : 0;
                if (BigInt(found) != expected) {
                    check.passed = false;
                    check.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m);
                    break;
                }
            }
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"schroder(n) == enumerated Schroeder paths, n <= 6", true, ""};
        for (std::size_t n = 0; n <= 6; ++n) {
            const auto paths = enumerate_schroder_paths(n);
            if (BigInt(paths.size()) != schroder(static_cast<long>(n))) {
                check.passed = false;
                check.detail = "n=" + std::to_string(n);
                break;
            }
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"vertical-walk bijection covers Schroeder paths, m <= 6", true, ""};
        for (std::size_t m = 0; m <= 6 && check.passed; ++m) {
            const auto model = schroder_like_model(Rational(1), Rational(1), Rational(1), m);
            const auto walks = enumerate_paths(model, 2 * m);
            std::map<std::string, int> images;
            for (const auto& w : walks) {
                const SchroderPath s = schroder_bijection(w);
                if (!s.valid() || s.width() != 2 * m) {
                    check.passed = false;
                    check.detail = "invalid image at m=" + std::to_string(m);
                    break;
                }
                ++images[s.steps];
            }
            if (!check.passed) break;
            for (const auto& [steps, count] : images)
                if (count != 1) {
                    check.passed = false;
                    check.detail = "duplicate image " + steps;
                    break;
                }
            if (BigInt(images.size()) != schroder(static_cast<long>(m))) {
                check.passed = false;
                check.detail = "image count mismatch at m=" + std::to_string(m);
            }
        }
        out.push_back(std::move(check));
    }

    {
        CheckResult check{"weighted DP equals sum over enumerated paths", true, ""};
        // Deterministic pseudo-random small rational weights.
        std::uint64_t state = 0x2545f4914f6cdd1dull;
        auto next_weight = [&state]() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            const long num = static_cast<long>(state % 9) - 4;  // -4..4
            const long den = 1 + static_cast<long>((state >> 32) % 5);
            return Rational(num == 0 ? 1 : num, den);
        };
        for (int trial = 0; trial < 50 && check.passed; ++trial) {
            const std::size_t size = 1 + static_cast<std::size_t>(trial % 4);
            const PathModel models[] = {
                dyck_model(next_weight(), next_weight(), size),
                motzkin_model(next_weight(), next_weight(), next_weight(), size),
                schroder_like_model(next_weight(), next_weight(), next_weight(), size),
                four_step_model(next_weight(), next_weight(), next_weight(), next_weight(), size),
            };
            for (const auto& model : models) {
                Rational by_enum;
                for (const auto& p : enumerate_paths(model, 3 * size)) {
                    Rational w(1);
                    for (const auto& s : p.steps) w *= s.weight;
                    by_enum += w;
                }
                if (!(by_enum == count_weighted_paths(model))) {
                    check.passed = false;
                    check.detail = "trial " + std::to_string(trial);
                    break;
                }
            }
        }
        out.push_back(std::move(check));
    }

    return out;
}

inline std::vector<CheckResult> verify_all(long max_n) {
    std::vector<CheckResult> out = verify_cross_backend(max_n);
    for (auto& c : verify_identities(max_n)) out.push_back(std::move(c));
    for (auto& c : verify_paths_oracle()) out.push_back(std::move(c));
    return out;
}

}  // namespace betamom
