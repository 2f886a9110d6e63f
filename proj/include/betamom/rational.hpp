#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace betamom {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Zero is represented as 0/1. All arithmetic is exact; every
/// deterministic result in this library is a Rational, floating point only
/// appears at output-formatting time.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }

    /// Parses "p/q" or a bare integer, both with an optional leading sign.
    static Rational parse(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(text, text));
        BigInt p = parse_int(text.substr(0, slash), text);
        BigInt q = parse_int(text.substr(slash + 1), text);
        return Rational(std::move(p), std::move(q));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }

    Rational operator-() const {
        Rational r(*this);
        r.num_ = -r.num_;
        return r;
    }

    Rational& operator+=(const Rational& o) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += -o; }
    Rational& operator*=(const Rational& o) {
        num_ *= o.num_;
        den_ *= o.den_;
        normalize();
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::domain_error("division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        // Denominators are positive, so cross multiplication preserves order.
        const BigInt lhs = a.num_ * b.den_;
        const BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational pow(std::uint32_t e) const {
        Rational result(1), base(*this);
        while (e != 0) {
            if (e & 1u) result *= base;
            base *= base;
            e >>= 1u;
        }
        return result;
    }

    /// Serialized form "p/q" in lowest terms, e.g. "-3/7", "0/1".
    std::string str() const {
        return num_.str() + "/" + den_.str();
    }

    double to_double() const {
        namespace mp = boost::multiprecision;
        return mp::cpp_rational(num_, den_).convert_to<double>();
    }

private:
    BigInt num_;
    BigInt den_;

    void normalize() {
        if (den_ == 0) throw std::domain_error("division by zero");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    static BigInt parse_int(std::string_view part, std::string_view whole) {
        bool negative = false;
        std::size_t i = 0;
        if (i < part.size() && (part[i] == '+' || part[i] == '-')) {
            negative = part[i] == '-';
            ++i;
        }
        if (i == part.size())
            throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
        for (std::size_t j = i; j < part.size(); ++j)
            if (part[j] < '0' || part[j] > '9')
                throw std::invalid_argument("malformed rational \"" + std::string(whole) + "\"");
        BigInt value(std::string(part.substr(i)));
        return negative ? BigInt(-value) : value;
    }
};

}  // namespace betamom
