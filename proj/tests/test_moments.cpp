#include "betamom/moments.hpp"

#include "betamom/combinatorics.hpp"
#include "betamom/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <vector>

using namespace betamom;

TEST_CASE("dseq_extend") {
    const Rational a2(3, 7);
    std::vector<Rational> prefix{Rational(1)};
    CHECK(dseq_extend(prefix) == Rational(0));  // D_1, empty sum

    prefix.push_back(a2);
    CHECK(dseq_extend(prefix) == a2 * a2);  // D_2 = <T>^2

    const Rational tau(5, 3);
    std::vector<Rational> delay_prefix{Rational(1), tau, Rational(2) * tau * tau};
    CHECK(dseq_extend(delay_prefix) == Rational(4) * tau.pow(3));  // D_3 = 2*(2 tau^3)

    CHECK_THROWS_AS(dseq_extend(std::vector<Rational>{}), std::invalid_argument);
}

TEST_CASE("recurrence base cases and small orders") {
    for (EnsembleKind kind : {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general,
                              EnsembleKind::laguerre, EnsembleKind::delay_times}) {
        for (const auto& spec : standard_parameter_sets(kind))
            CHECK(moment_recurrence(spec, 1) == a_params(spec).a2);
    }

    const auto lag = EnsembleSpec::laguerre(Rational(1), Rational(1), Rational(2), 40);
    const AParams a = a_params(lag);
    CHECK(moment_recurrence(lag, 2) == a.a2 * a.a3);

    MomentEngine delay(EnsembleSpec::delay_times(Rational(1)));
    const long expected[] = {1, 2, 6, 22, 90};
    for (long n = 1; n <= 5; ++n) CHECK(delay.recurrence(n) == Rational(expected[n - 1]));

    CHECK_THROWS_AS(moment_recurrence(lag, 0), std::invalid_argument);
}

TEST_CASE("closed forms at small orders") {
    const auto g1 = EnsembleSpec::jacobi_gamma1(Rational(3, 2), Rational(2), 25);
    const AParams a = a_params(g1);
    CHECK(moment_closed_form(g1, 2) == a.a2 * (Rational(1) - a.a1 * a.a2));

    const auto lag = EnsembleSpec::laguerre(Rational(2), Rational(3), Rational(2), 25);
    const AParams al = a_params(lag);
    CHECK(moment_closed_form(lag, 3) == al.a2 * (al.a3 * al.a3 + al.a1 * al.a2));

    const auto gen = EnsembleSpec::jacobi_general(Rational(1), Rational(1), Rational(2), 100);
    const AParams ag = a_params(gen);
    CHECK(moment_closed_form(gen, 2) == ag.a2 * (ag.a3 - ag.a1 * ag.a2));
    CHECK(moment_closed_form(gen, 2) == Rational(151, 404));

    const auto delay = EnsembleSpec::delay_times(Rational(3, 2));
    CHECK(moment_closed_form(delay, 3) == Rational(6) * Rational(3, 2).pow(3));
}

TEST_CASE("series backend examples") {
    const auto g1 = EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 1000000);
    // at N = 10^6 the constants are within 10^-5 of 1/2; check the exact
    // formula value instead of the rounded 3/8
    const AParams a = a_params(g1);
    CHECK(moment_series(g1, 2) == a.a2 * (Rational(1) - a.a1 * a.a2));

    const auto lag = EnsembleSpec::laguerre(Rational(0), Rational(1), Rational(2), 10);
    const AParams al = a_params(lag);
    CHECK(moment_series(lag, 3) == Rational(5) * al.a2.pow(3));
    CHECK(moment_series(lag, 3) == Rational(5000));  // A2 = 10 here

    CHECK(moment_series(EnsembleSpec::delay_times(Rational(1)), 4) == Rational(22));
}

TEST_CASE("paths backend examples") {
    const auto g1 = EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 100);
    const AParams a = a_params(g1);
    const Rational a1a2 = a.a1 * a.a2;
    CHECK(moment_paths(g1, 3) ==
          a.a2 * (Rational(1) - Rational(2) * a1a2 + Rational(2) * a1a2 * a1a2));

    const auto lag = EnsembleSpec::laguerre(Rational(1), Rational(1), Rational(2), 40);
    const AParams al = a_params(lag);
    CHECK(moment_paths(lag, 2) == al.a2 * al.a3);

    const auto gen = EnsembleSpec::jacobi_general(Rational(1), Rational(1), Rational(2), 100);
    const AParams ag = a_params(gen);
    CHECK(moment_paths(gen, 2) == ag.a2 * (ag.a3 - ag.a1 * ag.a2));

    MomentEngine delay(EnsembleSpec::delay_times(Rational(1)));
    const long expected[] = {1, 2, 6, 22, 90};
    for (long n = 1; n <= 5; ++n) CHECK(delay.paths(n) == Rational(expected[n - 1]));
}

TEST_CASE("all backends agree on every reference parameter set") {
    for (EnsembleKind kind : {EnsembleKind::jacobi_gamma1, EnsembleKind::jacobi_general,
                              EnsembleKind::laguerre, EnsembleKind::delay_times}) {
        for (const auto& spec : standard_parameter_sets(kind)) {
            const auto all = moments_all_backends(spec, 12);
            INFO(kind_name(kind) << " first mismatch at n=" << all.report.first_mismatch_n);
            CHECK(all.report.all_equal);
            CHECK(all.results.size() == 4 * 12);
        }
    }
}

TEST_CASE("gamma=0 general Jacobi equals gamma1 moment by moment") {
    const auto g1 = EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 100);
    const auto gen = EnsembleSpec::jacobi_general(Rational(1), Rational(0), Rational(2), 100);
    MomentEngine e1(g1), e2(gen);
    for (long n = 1; n <= 10; ++n) CHECK(e1.recurrence(n) == e2.recurrence(n));
}

TEST_CASE("Laguerre with alpha=0 gives Catalan multiples of <T>^n") {
    const auto spec = EnsembleSpec::laguerre(Rational(0), Rational(1), Rational(2), 10);
    MomentEngine engine(spec);
    const Rational mean = engine.params().a2;
    for (long n = 1; n <= 8; ++n)
        CHECK(engine.recurrence(n) ==
              Rational(catalan(n)) * mean.pow(static_cast<std::uint32_t>(n)));
}

TEST_CASE("both printed forms of the general closed sum agree") {
    for (const auto& spec : standard_parameter_sets(EnsembleKind::jacobi_general)) {
        const AParams a = a_params(spec);
        for (long n = 1; n <= 20; ++n) {
            CHECK(closed_form_jacobi_general_signed(a, n) == closed_form_jacobi_general_a4(a, n));
            // inner k limit: floor((m+1)/2) and floor(m/2) give the same sum
            CHECK(closed_form_jacobi_general_signed(a, n, 1) ==
                  closed_form_jacobi_general_signed(a, n, 0));
        }
    }
}

TEST_CASE("Jacobi moments decrease monotonically within [0,1]") {
    const EnsembleSpec specs[] = {
        EnsembleSpec::jacobi_general(Rational(1), Rational(1), Rational(2), 100),
        EnsembleSpec::jacobi_general(Rational(2), Rational(3), Rational(2), 50),
        EnsembleSpec::jacobi_general(Rational(5), Rational(2), Rational(4), 12),
        EnsembleSpec::jacobi_general(Rational(1), Rational(1), Rational(1), 10),
        EnsembleSpec::jacobi_gamma1(Rational(1), Rational(2), 100),
        EnsembleSpec::jacobi_gamma1(Rational(5), Rational(4), 12),
    };
    for (const auto& spec : specs) {
        MomentEngine engine(spec);
        Rational previous(1);
        for (long n = 1; n <= 20; ++n) {
            const Rational current = engine.recurrence(n);
            CHECK(current <= previous);
            CHECK(!current.is_negative());
            previous = current;
        }
    }
}

TEST_CASE("Laguerre moments are positive") {
    for (const auto& spec : standard_parameter_sets(EnsembleKind::laguerre)) {
        MomentEngine engine(spec);
        for (long n = 1; n <= 20; ++n) CHECK(engine.recurrence(n).is_positive());
    }
}

TEST_CASE("four-step walk with rise weight A1 also reproduces the moments") {
    // The general-Jacobi functional equation factors as a free walk over
    // vertical -A1, rise +A1, horizontal A3, fall A2 when the horizontal
    // binomial is left inside the path count; this is an independent route
    // to the same numbers.
    for (const auto& spec : standard_parameter_sets(EnsembleKind::jacobi_general)) {
        const AParams a = a_params(spec);
        MomentEngine engine(spec);
        for (long n = 1; n <= 8; ++n) {
            const auto model =
                four_step_model(-a.a1, a.a1, a.a2, a.a3, static_cast<std::size_t>(n - 1));
            CHECK(a.a2 * count_weighted_paths(model) == engine.recurrence(n));
        }
    }
}

TEST_CASE("all-backends result shape") {
    const auto spec = EnsembleSpec::delay_times(Rational(1));
    const auto all = moments_all_backends(spec, 10);
    CHECK(all.results.size() == 40);  // 4 backends per order
    CHECK(all.report.all_equal);
    CHECK(all.report.first_mismatch_n == 0);
    for (const auto& r : all.results) {
        CHECK(r.n >= 1);
        CHECK(r.n <= 10);
    }
    CHECK_THROWS_AS(moments_all_backends(spec, 0), std::invalid_argument);
}
