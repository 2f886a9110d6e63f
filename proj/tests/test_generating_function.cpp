#include "betamom/generating_function.hpp"

#include "betamom/combinatorics.hpp"
#include "betamom/moments.hpp"
#include "betamom/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace betamom;

TEST_CASE("trivial functional equation has the constant solution") {
    const std::size_t order = 5;
    QuadraticFE eq{PowerSeries::one(order), PowerSeries(order), PowerSeries(order)};
    CHECK(solve_quadratic_fe(eq, order) == PowerSeries::one(order));
}

TEST_CASE("singular and ill-posed equations are rejected") {
    const std::size_t order = 3;
    QuadraticFE singular{PowerSeries::one(order), PowerSeries::one(order), PowerSeries(order)};
    CHECK_THROWS_WITH(solve_quadratic_fe(singular, order), "singular functional equation");

    QuadraticFE bad_constant{PowerSeries::constant(Rational(2), order), PowerSeries(order),
                             PowerSeries(order)};
    CHECK_THROWS_AS(solve_quadratic_fe(bad_constant, order), std::invalid_argument);
}

TEST_CASE("Laguerre equation at alpha=0 produces Catalan coefficients") {
    const auto spec = EnsembleSpec::laguerre(Rational(0), Rational(1), Rational(2), 3);
    const AParams a = a_params(spec);
    REQUIRE(a.a1 == a.a2);
    const PowerSeries f = gf_laguerre(a, 6);
    for (std::size_t n = 0; n <= 6; ++n)
        CHECK(f[n] == Rational(catalan(static_cast<long>(n))) *
                          a.a2.pow(static_cast<std::uint32_t>(n)));
}

TEST_CASE("general equation with A3=1 reduces to the gamma1 equation") {
    // gamma = 0 forces A3 = 1
    const auto general = EnsembleSpec::jacobi_general(Rational(1), Rational(0), Rational(2), 50);
    const auto g1 = EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 50);
    const AParams ag = a_params(general);
    REQUIRE(ag.a3 == Rational(1));
    const std::size_t order = 15;
    CHECK(gf_jacobi_general(ag, order) == gf_jacobi_gamma1(a_params(g1), order));
}

TEST_CASE("gamma1 square-root form at A1=A2=1/2") {
    AParams a{Rational(1, 2), Rational(1, 2), Rational(1), Rational(0)};
    const PowerSeries f = gf_jacobi_gamma1(a, 3);
    CHECK(f == PowerSeries{Rational(1), Rational(1, 2), Rational(3, 8), Rational(5, 16)});
}

TEST_CASE("first coefficients of every generating function") {
    for (EnsembleKind kind : {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general,
                              EnsembleKind::laguerre, EnsembleKind::delay_times}) {
        for (const auto& spec : standard_parameter_sets(kind)) {
            const AParams a = a_params(spec);
            const PowerSeries f = generating_function(spec, 3);
            CHECK(f[0] == Rational(1));
            CHECK(f[1] == a.a2);  // <T> = A2 in every ensemble
        }
    }

    // second coefficient A2(1 - A1 A2) for gamma1 at a transport-like point
    AParams a{Rational(50, 101), Rational(51, 101), Rational(1), Rational(0)};
    const PowerSeries f = gf_jacobi_gamma1(a, 2);
    CHECK(f[2] == a.a2 * (Rational(1) - a.a1 * a.a2));
}

TEST_CASE("Laguerre coefficient examples") {
    const auto spec = EnsembleSpec::laguerre(Rational(1), Rational(1), Rational(2), 40);
    const AParams a = a_params(spec);
    const PowerSeries f = gf_laguerre(a, 3);
    CHECK(f[1] == a.a2);
    CHECK(f[2] == a.a2 * a.a3);
    CHECK(f[3] == a.a2 * (a.a3 * a.a3 + a.a1 * a.a2));
}

TEST_CASE("delay-time equation reproduces the Schroeder sequence") {
    const auto spec = EnsembleSpec::delay_times(Rational(1));
    const PowerSeries f = gf_delay_times(a_params(spec), 5);
    CHECK(f[1] == Rational(1));
    CHECK(f[2] == Rational(2));
    CHECK(f[3] == Rational(6));
    CHECK(f[4] == Rational(22));
    CHECK(f[5] == Rational(90));
}

TEST_CASE("residuals vanish and the sqrt-argument identity holds") {
    const std::size_t order = 30;
    for (EnsembleKind kind : {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general,
                              EnsembleKind::laguerre, EnsembleKind::delay_times}) {
        for (const auto& spec : standard_parameter_sets(kind)) {
            const AParams a = a_params(spec);
            const auto eq = functional_equation(a, kind, order);
            const PowerSeries f = solve_quadratic_fe(eq, order);
            CHECK(fe_residual(eq, f).is_zero());

            if (kind == EnsembleKind::jacobi_gamma1) {
                // (2 A1 (F-1) + 1)^2 == 1 + 4 A1 A2 x / (1 - x)
                const PowerSeries one = PowerSeries::one(order);
                const PowerSeries lhs_base =
                    (Rational(2) * a.a1) * (f - one) + one;
                const PowerSeries geom = PowerSeries::x(order) / (one - PowerSeries::x(order));
                const PowerSeries rhs = one + (Rational(4) * a.a1 * a.a2) * geom;
                CHECK(lhs_base * lhs_base == rhs);
            }
        }
    }
}

TEST_CASE("series coefficients agree with the recurrence backend") {
    const std::size_t order = 30;
    for (EnsembleKind kind : {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general,
                              EnsembleKind::laguerre, EnsembleKind::delay_times}) {
        const auto spec = standard_parameter_sets(kind).front();
        const PowerSeries f = generating_function(spec, order);
        MomentEngine engine(spec);
        for (long n = 1; n <= static_cast<long>(order); ++n)
            CHECK(f[static_cast<std::size_t>(n)] == engine.recurrence(n));
    }
}
