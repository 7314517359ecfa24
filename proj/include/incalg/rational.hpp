// Licensed under the Apache License 2.0 (see LICENSE file).

#ifndef INCALG_RATIONAL_HPP
#define INCALG_RATIONAL_HPP

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace incalg {

using BigInt = mpz_class;

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral T>
    Rational(T v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)

    template <std::unsigned_integral T>
    Rational(T v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT(google-explicit-constructor)

    explicit Rational(const BigInt& v) : q_(v) {}

    /// Reduces num/den; throws incalg::Error("division by zero") when den == 0.
    static Rational normalize(const BigInt& num, const BigInt& den);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(std::string_view text);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational inverse() const;

    /// "p/q", or "p" when the denominator is one.
    std::string str() const;

    const mpq_class& raw() const { return q_; }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        Rational r;
        r.q_ = -a.q_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

/// Free-function form of Rational::normalize.
inline Rational rational_normalize(const BigInt& num, const BigInt& den) {
    return Rational::normalize(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact rational.
Rational factorial(unsigned n);

/// Binomial coefficient C(n, k); zero when k > n.
Rational binomial(unsigned n, unsigned k);

}  // namespace incalg

#endif
