#pragma once

#include "betamom/ensemble.hpp"
#include "betamom/power_series.hpp"

#include <cstddef>
#include <stdexcept>

namespace betamom {

/// The moment generating function F(x) = sum_n <T^n> x^n of every ensemble
/// satisfies a quadratic functional equation
///
///     F = p0 + p1 (F - 1) + p2 (F - 1)^2
///
/// with polynomial coefficient series p0, p1, p2 (denominators like 1/(1-x)
/// are cleared into the p's before solving). The solution with F(0) = 1 is
/// unique and is found coefficient by coefficient.
struct QuadraticFE {
    PowerSeries p0;
    PowerSeries p1;
    PowerSeries p2;
};

inline PowerSeries solve_quadratic_fe(const QuadraticFE& eq, std::size_t order) {
    if (eq.p0.order() < order || eq.p1.order() < order || eq.p2.order() < order)
        throw std::invalid_argument("coefficient series shorter than requested order");
    if (!(eq.p0[0] == Rational(1)))
        throw std::invalid_argument("functional equation requires p0(0) = 1");
    const Rational pivot = Rational(1) - eq.p1[0];
    if (pivot.is_zero()) throw std::domain_error("singular functional equation");

    // Solve for G = F - 1 from G = (p0 - 1) + p1 G + p2 G^2. With G(0) = 0
    // the x^n coefficient of the right side involves g_n only through
    // p1[0] g_n, so each g_n is determined by the lower ones.
    PowerSeries g(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational rhs = eq.p0[n];
        for (std::size_t j = 1; j < n; ++j) {
            if (g[j].is_zero() || eq.p1[n - j].is_zero()) continue;
            rhs += eq.p1[n - j] * g[j];
        }
        // [x^n] p2 * G^2; g_n enters only via 2 g_0 g_n = 0.
        for (std::size_t i = 0; i + 2 <= n; ++i) {
            if (eq.p2[i].is_zero()) continue;
            Rational sq;
            for (std::size_t a = 1; a + 1 <= n - i; ++a) sq += g[a] * g[n - i - a];
            rhs += eq.p2[i] * sq;
        }
        g.set(n, rhs / pivot);
    }

    PowerSeries f(order);
    f.set(0, Rational(1));
    for (std::size_t n = 1; n <= order; ++n) f.set(n, g[n]);
    return f;
}

/// p0 + p1 (F-1) + p2 (F-1)^2 - F; identically zero through the truncation
/// order for a valid solution.
inline PowerSeries fe_residual(const QuadraticFE& eq, const PowerSeries& f) {
    PowerSeries g = f - PowerSeries::one(f.order());
    return eq.p0 + eq.p1 * g + eq.p2 * (g * g) - f;
}

// ---- The four functional equations, denominators cleared -------------------

/// gamma=1 Jacobi: F = 1 + A2 x/(1-x) - A1 (F-1)^2 becomes
/// F = (1 + A2 x) + x (F-1) - A1 (1-x) (F-1)^2.
inline QuadraticFE fe_jacobi_gamma1(const AParams& a, std::size_t order) {
    PowerSeries p0 = PowerSeries::one(order);
    if (order >= 1) p0.set(1, a.a2);
    PowerSeries p1 = PowerSeries::x(order);
    PowerSeries p2 = PowerSeries::constant(-a.a1, order);
    if (order >= 1) p2.set(1, a.a1);
    return {p0, p1, p2};
}

/// Laguerre: F = 1 + (A2 x + A1 x (F-1)^2)/(1 - A3 x) becomes
/// F = (1 + A2 x) + A3 x (F-1) + A1 x (F-1)^2.
inline QuadraticFE fe_laguerre(const AParams& a, std::size_t order) {
    PowerSeries p0 = PowerSeries::one(order);
    if (order >= 1) p0.set(1, a.a2);
    PowerSeries p1(order);
    if (order >= 1) p1.set(1, a.a3);
    PowerSeries p2(order);
    if (order >= 1) p2.set(1, a.a1);
    return {p0, p1, p2};
}

/// Delay times: the recurrence <T^n> = A3 <T^{n-1}> + A1 D_n sums to
/// F = (1 + A2 x) + A3 x (F-1) + A1 (F-1)^2.
inline QuadraticFE fe_delay_times(const AParams& a, std::size_t order) {
    PowerSeries p0 = PowerSeries::one(order);
    if (order >= 1) p0.set(1, a.a2);
    PowerSeries p1(order);
    if (order >= 1) p1.set(1, a.a3);
    PowerSeries p2 = PowerSeries::constant(a.a1, order);
    return {p0, p1, p2};
}

/// General Jacobi: F = 1 + A2 x/(1-A3 x) - A1 (F-1)^2 (1-x)/(1-A3 x) becomes
/// F = (1 + A2 x) + A3 x (F-1) - A1 (1-x) (F-1)^2.
inline QuadraticFE fe_jacobi_general(const AParams& a, std::size_t order) {
    PowerSeries p0 = PowerSeries::one(order);
    if (order >= 1) p0.set(1, a.a2);
    PowerSeries p1(order);
    if (order >= 1) p1.set(1, a.a3);
    PowerSeries p2 = PowerSeries::constant(-a.a1, order);
    if (order >= 1) p2.set(1, a.a1);
    return {p0, p1, p2};
}

inline QuadraticFE functional_equation(const AParams& a, EnsembleKind kind, std::size_t order) {
    switch (kind) {
        case EnsembleKind::jacobi_gamma1: return fe_jacobi_gamma1(a, order);
        case EnsembleKind::jacobi_general: return fe_jacobi_general(a, order);
        case EnsembleKind::laguerre: return fe_laguerre(a, order);
        case EnsembleKind::delay_times: return fe_delay_times(a, order);
    }
    throw std::logic_error("unknown ensemble kind");
}

/// Closed form of the gamma=1 generating function,
/// F = 1 - 1/(2 A1) + sqrt(1 + 4 A1 A2 x/(1-x)) / (2 A1),
/// expanded with the exact series sqrt.
inline PowerSeries gf_jacobi_gamma1_sqrt_form(const AParams& a, std::size_t order) {
    if (a.a1.is_zero()) throw std::invalid_argument("closed form requires A1 != 0");
    PowerSeries one_minus_x = PowerSeries::one(order) - PowerSeries::x(order);
    PowerSeries geom = PowerSeries::x(order) / one_minus_x;
    PowerSeries arg = PowerSeries::one(order) + (Rational(4) * a.a1 * a.a2) * geom;
    PowerSeries root = arg.sqrt();
    const Rational half_inv = Rational(1) / (Rational(2) * a.a1);
    return PowerSeries::constant(Rational(1) - half_inv, order) + half_inv * root;
}

/// gamma=1 generating function, computed both from the closed square-root
/// expression and from the functional equation. The two must agree term by
/// term; a mismatch is a correctness bug and is surfaced loudly.
inline PowerSeries gf_jacobi_gamma1(const AParams& a, std::size_t order) {
    PowerSeries via_sqrt = gf_jacobi_gamma1_sqrt_form(a, order);
    PowerSeries via_fe = solve_quadratic_fe(fe_jacobi_gamma1(a, order), order);
    if (!(via_sqrt == via_fe)) throw std::logic_error("generating-function mismatch");
    return via_fe;
}

inline PowerSeries gf_laguerre(const AParams& a, std::size_t order) {
    return solve_quadratic_fe(fe_laguerre(a, order), order);
}

inline PowerSeries gf_jacobi_general(const AParams& a, std::size_t order) {
    return solve_quadratic_fe(fe_jacobi_general(a, order), order);
}

inline PowerSeries gf_delay_times(const AParams& a, std::size_t order) {
    return solve_quadratic_fe(fe_delay_times(a, order), order);
}

inline PowerSeries generating_function(const EnsembleSpec& spec, std::size_t order) {
    const AParams a = a_params(spec);
    switch (spec.kind) {
        case EnsembleKind::jacobi_gamma1: return gf_jacobi_gamma1(a, order);
        case EnsembleKind::jacobi_general: return gf_jacobi_general(a, order);
        case EnsembleKind::laguerre: return gf_laguerre(a, order);
        case EnsembleKind::delay_times: return gf_delay_times(a, order);
    }
    throw std::logic_error("unknown ensemble kind");
}

}  // namespace betamom
