#pragma once

#include "betamom/rational.hpp"

#include <stdexcept>
#include <string>

namespace betamom {

/// The four eigenvalue ensembles whose asymptotic moments this library
/// computes. jacobi_gamma1 is the quantum-transport case (exponent pair
/// (alpha-1, 0) on [0,1]); jacobi_general allows both exponents to grow with
/// N; laguerre lives on [0,inf) with weight T^alpha e^{-eps T}; delay_times
/// is the proper-delay-time ensemble, parameterized by the dwell time tau_D.
enum class EnsembleKind { jacobi_gamma1, jacobi_general, laguerre, delay_times };

inline const char* kind_name(EnsembleKind k) {
    switch (k) {
        case EnsembleKind::jacobi_gamma1: return "jacobi_gamma1";
        case EnsembleKind::jacobi_general: return "jacobi_general";
        case EnsembleKind::laguerre: return "laguerre";
        case EnsembleKind::delay_times: return "delay_times";
    }
    return "?";
}

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::jacobi_gamma1;
    Rational alpha;    // jacobi kinds, laguerre
    Rational gamma;    // jacobi_general only
    Rational beta = Rational(2);
    long big_n = 1;
    Rational epsilon;  // laguerre only
    Rational tau_d;    // delay_times only

    static EnsembleSpec jacobi_gamma1(Rational alpha, Rational beta, long n) {
        EnsembleSpec s;
        s.kind = EnsembleKind::jacobi_gamma1;
        s.alpha = std::move(alpha);
        s.beta = std::move(beta);
        s.big_n = n;
        s.validate();
        return s;
    }

    static EnsembleSpec jacobi_general(Rational alpha, Rational gamma, Rational beta, long n) {
        EnsembleSpec s;
        s.kind = EnsembleKind::jacobi_general;
        s.alpha = std::move(alpha);
        s.gamma = std::move(gamma);
        s.beta = std::move(beta);
        s.big_n = n;
        s.validate();
        return s;
    }

    static EnsembleSpec laguerre(Rational alpha, Rational epsilon, Rational beta, long n) {
        EnsembleSpec s;
        s.kind = EnsembleKind::laguerre;
        s.alpha = std::move(alpha);
        s.epsilon = std::move(epsilon);
        s.beta = std::move(beta);
        s.big_n = n;
        s.validate();
        return s;
    }

    static EnsembleSpec delay_times(Rational tau_d, Rational beta = Rational(2), long n = 1) {
        EnsembleSpec s;
        s.kind = EnsembleKind::delay_times;
        s.tau_d = std::move(tau_d);
        s.beta = std::move(beta);
        s.big_n = n;
        s.validate();
        return s;
    }

    void validate() const {
        if (big_n < 1) throw std::invalid_argument("N must be a positive integer");
        if (!beta.is_positive()) throw std::invalid_argument("beta must be positive");
        switch (kind) {
            case EnsembleKind::jacobi_gamma1:
                if ((alpha + beta * Rational(big_n)).is_zero())
                    throw std::invalid_argument("alpha: alpha + beta*N must be nonzero");
                break;
            case EnsembleKind::jacobi_general:
                if ((alpha + gamma + beta * Rational(big_n)).is_zero())
                    throw std::invalid_argument("alpha: alpha + gamma + beta*N must be nonzero");
                break;
            case EnsembleKind::laguerre:
                if (!epsilon.is_positive())
                    throw std::invalid_argument("epsilon must be positive");
                break;
            case EnsembleKind::delay_times:
                if (!tau_d.is_positive())
                    throw std::invalid_argument("tauD must be positive");
                break;
        }
    }
};

/// The asymptotic constants the moment formulas are written in. a4 is the
/// derived combination a1*(1-a3), used by the general-Jacobi closed sum and
/// its path model.
struct AParams {
    Rational a1;
    Rational a2;
    Rational a3;
    Rational a4;
};

/// Maps raw ensemble parameters to the constants A1..A4.
///
///   jacobi_gamma1:  A1 = beta*N / (2(alpha+beta*N)),
///                   A2 = (2*alpha+beta*N) / (2(alpha+beta*N)), A3 = A1+A2 = 1
///   jacobi_general: same with alpha+gamma+beta*N in the denominator,
///                   A3 = A1+A2
///   laguerre:       A1 = beta*N/(2*eps), A2 = alpha/eps + A1, A3 = A1+A2
///   delay_times:    A1 = 1, A2 = A3 = tau_D
///
/// Note the delay-time case sets A3 = A2, not A1 + A2; its recurrence absorbs
/// the extra A1 differently (see moments.hpp).
inline AParams a_params(const EnsembleSpec& spec) {
    spec.validate();
    AParams a;
    const Rational bn = spec.beta * Rational(spec.big_n);
    switch (spec.kind) {
        case EnsembleKind::jacobi_gamma1: {
            const Rational den = Rational(2) * (spec.alpha + bn);
            a.a1 = bn / den;
            a.a2 = (Rational(2) * spec.alpha + bn) / den;
            a.a3 = a.a1 + a.a2;  // equals 1 identically
            break;
        }
        case EnsembleKind::jacobi_general: {
            const Rational den = Rational(2) * (spec.alpha + spec.gamma + bn);
            a.a1 = bn / den;
            a.a2 = (Rational(2) * spec.alpha + bn) / den;
            a.a3 = a.a1 + a.a2;
            break;
        }
        case EnsembleKind::laguerre: {
            a.a1 = bn / (Rational(2) * spec.epsilon);
            a.a2 = spec.alpha / spec.epsilon + a.a1;
            a.a3 = a.a1 + a.a2;
            break;
        }
        case EnsembleKind::delay_times: {
            a.a1 = Rational(1);
            a.a2 = spec.tau_d;
            a.a3 = spec.tau_d;
            break;
        }
    }
    a.a4 = a.a1 * (Rational(1) - a.a3);
    return a;
}

/// Quantum-transport convenience: a chaotic cavity with n1 and n2 open
/// channels maps onto the gamma=1 Jacobi ensemble with
/// alpha = (beta/2)(|n2-n1|+1) and N = min(n1,n2).
inline EnsembleSpec transport_to_jacobi(long n1, long n2, const Rational& beta) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("channel counts must be >= 1");
    if (!beta.is_positive()) throw std::invalid_argument("beta must be positive");
    const long diff = n1 > n2 ? n1 - n2 : n2 - n1;
    Rational alpha = beta * Rational(diff + 1) / Rational(2);
    return EnsembleSpec::jacobi_gamma1(std::move(alpha), beta, n1 < n2 ? n1 : n2);
}

}  // namespace betamom
