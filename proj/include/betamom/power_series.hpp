#pragma once

#include "betamom/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace betamom {

/// Truncated formal power series in one variable over Rational.
///
/// A series of order k stores coefficients of x^0..x^k. Binary operations
/// truncate to the smaller order of the two operands; nothing ever extends
/// the order implicitly, so a coefficient you can read is always one that
/// was actually computed.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order) : coeffs_(order + 1) {}

    PowerSeries(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
        if (coeffs_.empty()) throw std::invalid_argument("series needs a constant term");
    }

    static PowerSeries constant(const Rational& c, std::size_t order) {
        PowerSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }

    static PowerSeries one(std::size_t order) { return constant(Rational(1), order); }

    /// The monomial x (zero if order is 0).
    static PowerSeries x(std::size_t order) {
        PowerSeries s(order);
        if (order >= 1) s.coeffs_[1] = Rational(1);
        return s;
    }

    std::size_t order() const { return coeffs_.size() - 1; }

    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    void set(std::size_t i, Rational value) { coeffs_.at(i) = std::move(value); }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }

    PowerSeries truncated(std::size_t new_order) const {
        if (new_order > order())
            throw std::invalid_argument("truncation cannot extend series order");
        PowerSeries s(new_order);
        for (std::size_t i = 0; i <= new_order; ++i) s.coeffs_[i] = coeffs_[i];
        return s;
    }

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries s(n);
        for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return s;
    }

    friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries s(n);
        for (std::size_t i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return s;
    }

    /// Cauchy product, truncated to min(a.order, b.order).
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries s(n);
        for (std::size_t i = 0; i <= n; ++i) {
            Rational acc;
            for (std::size_t j = 0; j <= i; ++j) {
                if (a.coeffs_[j].is_zero() || b.coeffs_[i - j].is_zero()) continue;
                acc += a.coeffs_[j] * b.coeffs_[i - j];
            }
            s.coeffs_[i] = std::move(acc);
        }
        return s;
    }

    friend PowerSeries operator*(const Rational& c, const PowerSeries& a) {
        PowerSeries s(a.order());
        for (std::size_t i = 0; i <= a.order(); ++i) s.coeffs_[i] = c * a.coeffs_[i];
        return s;
    }

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Quotient q with q*b == a through the common truncation order.
    /// Requires b to have a nonzero constant term.
    friend PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
        if (b.coeffs_[0].is_zero()) throw std::domain_error("non-invertible series");
        const std::size_t n = std::min(a.order(), b.order());
        PowerSeries q(n);
        for (std::size_t i = 0; i <= n; ++i) {
            Rational acc = a.coeffs_[i];
            for (std::size_t j = 1; j <= i; ++j) {
                if (b.coeffs_[j].is_zero()) continue;
                acc -= b.coeffs_[j] * q.coeffs_[i - j];
            }
            q.coeffs_[i] = acc / b.coeffs_[0];
        }
        return q;
    }

    /// Square root of a series with unit constant term, by the coefficient
    /// recursion s_0 = 1, s_n = (a_n - sum_{k=1..n-1} s_k s_{n-k}) / 2.
    PowerSeries sqrt() const {
        if (!(coeffs_[0] == Rational(1)))
            throw std::domain_error("sqrt requires unit constant term");
        const std::size_t n = order();
        PowerSeries s(n);
        s.coeffs_[0] = Rational(1);
        const Rational half(1, 2);
        for (std::size_t i = 1; i <= n; ++i) {
            Rational acc = coeffs_[i];
            for (std::size_t k = 1; k < i; ++k) acc -= s.coeffs_[k] * s.coeffs_[i - k];
            s.coeffs_[i] = half * acc;
        }
        return s;
    }

private:
    std::vector<Rational> coeffs_;  // size order+1
};

}  // namespace betamom
