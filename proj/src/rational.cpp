// Licensed under the Apache License 2.0 (see LICENSE file).

#include "incalg/rational.hpp"

#include <ostream>

#include "incalg/error.hpp"

namespace incalg {

Rational Rational::normalize(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("division by zero");
    Rational r;
    r.q_.get_num() = num;
    r.q_.get_den() = den;
    r.q_.canonicalize();
    return r;
}

Rational Rational::parse(std::string_view text) {
    auto slash = text.find('/');
    BigInt num, den = 1;
    auto read = [](std::string_view s, BigInt& out) {
        if (s.empty()) throw ParseError("malformed rational");
        std::string buf(s);
        if (buf.front() == '+') buf.erase(0, 1);
        if (out.set_str(buf, 10) != 0) throw ParseError("malformed rational '" + buf + "'");
    };
    if (slash == std::string_view::npos) {
        read(text, num);
    } else {
        read(text.substr(0, slash), num);
        read(text.substr(slash + 1), den);
    }
    return normalize(num, den);
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("division by zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
    if (k > n) return Rational(0);
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

}  // namespace incalg
