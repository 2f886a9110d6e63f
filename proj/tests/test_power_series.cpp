#include "betamom/power_series.hpp"

#include "betamom/moments.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using betamom::EnsembleSpec;
using betamom::MomentEngine;
using betamom::PowerSeries;
using betamom::Rational;

namespace {

PowerSeries random_series(std::mt19937& rng, std::size_t order, bool unit_constant) {
    std::uniform_int_distribution<long long> num(-6, 6);
    std::uniform_int_distribution<long long> den(1, 6);
    PowerSeries s(order);
    s.set(0, unit_constant ? Rational(1) : Rational(num(rng) * 2 + 1, den(rng)));
    for (std::size_t i = 1; i <= order; ++i) s.set(i, Rational(num(rng), den(rng)));
    return s;
}

}  // namespace

TEST_CASE("multiplication examples") {
    const PowerSeries one_plus_x{Rational(1), Rational(1), Rational(0)};
    CHECK(one_plus_x * one_plus_x == PowerSeries{Rational(1), Rational(2), Rational(1)});

    const PowerSeries a{Rational(1), Rational(-1), Rational(0), Rational(0)};
    const PowerSeries b{Rational(1), Rational(1), Rational(1), Rational(1)};
    CHECK(a * b == PowerSeries::one(3));  // 1 - x^4 truncated at order 3
}

TEST_CASE("multiplication truncates to the smaller order") {
    const PowerSeries a{Rational(1), Rational(1)};
    const PowerSeries b = PowerSeries::one(5);
    CHECK((a * b).order() == 1);
}

TEST_CASE("explicit truncation never extends the order") {
    const PowerSeries a{Rational(1), Rational(2), Rational(3)};
    const PowerSeries t = a.truncated(1);
    CHECK(t.order() == 1);
    CHECK(t[0] == Rational(1));
    CHECK(t[1] == Rational(2));
    CHECK_THROWS_AS(a.truncated(5), std::invalid_argument);
}

TEST_CASE("F*F recovers the moment convolution") {
    // The square of F = 1 + sum <T^n> x^n has x^n coefficient
    // M_n = sum_{a=0..n} <T^{n-a}> <T^a>; check against the direct double sum.
    const auto spec = EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 100);
    MomentEngine engine(spec);
    const std::size_t order = 10;
    PowerSeries f(order);
    f.set(0, Rational(1));
    std::vector<Rational> mom{Rational(1)};
    for (std::size_t n = 1; n <= order; ++n) {
        mom.push_back(engine.recurrence(static_cast<long>(n)));
        f.set(n, mom.back());
    }
    const PowerSeries f2 = f * f;
    for (std::size_t n = 0; n <= order; ++n) {
        Rational direct;
        for (std::size_t a = 0; a <= n; ++a) direct += mom[n - a] * mom[a];
        CHECK(f2[n] == direct);
    }
}

TEST_CASE("division examples") {
    const std::size_t order = 3;
    const PowerSeries one = PowerSeries::one(order);
    const PowerSeries x = PowerSeries::x(order);
    const PowerSeries geom = one / (one - x);
    CHECK(geom == PowerSeries{Rational(1), Rational(1), Rational(1), Rational(1)});
    CHECK(x / (one - x) == PowerSeries{Rational(0), Rational(1), Rational(1), Rational(1)});

    // (A2 x)/(1 - A3 x) with A2 = 1/2, A3 = 201/202
    const Rational a2(1, 2), a3(201, 202);
    PowerSeries numer(2), denom(2);
    numer.set(1, a2);
    denom.set(0, Rational(1));
    denom.set(1, -a3);
    const PowerSeries q = numer / denom;
    CHECK(q == PowerSeries{Rational(0), Rational(1, 2), Rational(201, 404)});
    CHECK(q * denom == numer);
}

TEST_CASE("division requires an invertible divisor") {
    const PowerSeries x = PowerSeries::x(3);
    CHECK_THROWS_WITH(x / x, "non-invertible series");
}

TEST_CASE("square root examples") {
    CHECK(PowerSeries::one(4).sqrt() == PowerSeries::one(4));

    const PowerSeries square{Rational(1), Rational(2), Rational(1)};
    CHECK(square.sqrt() == PowerSeries{Rational(1), Rational(1), Rational(0)});

    // sqrt(1 + 4*(1/4)*x/(1-x)) = (1-x)^{-1/2}
    const std::size_t order = 3;
    const PowerSeries one = PowerSeries::one(order);
    const PowerSeries geom = PowerSeries::x(order) / (one - PowerSeries::x(order));
    const PowerSeries arg = one + geom;
    const PowerSeries root = arg.sqrt();
    CHECK(root == PowerSeries{Rational(1), Rational(1, 2), Rational(3, 8), Rational(5, 16)});
    CHECK(root * root == arg);

    const PowerSeries not_unit{Rational(2), Rational(1)};
    CHECK_THROWS_WITH(not_unit.sqrt(), "sqrt requires unit constant term");
}

TEST_CASE("algebraic properties on random series") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t order = 1 + static_cast<std::size_t>(trial % 8);
        const PowerSeries a = random_series(rng, order, false);
        const PowerSeries b = random_series(rng, order, false);
        const PowerSeries c = random_series(rng, order, false);

        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b) / b == a);  // b has nonzero constant term by construction

        const PowerSeries u = random_series(rng, order, true);
        CHECK(u.sqrt() * u.sqrt() == u);
    }
}
