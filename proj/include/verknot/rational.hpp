#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace verknot {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; every operation is exact (no rounding anywhere).
///
/// Backed by GMP's mpq type, which maintains the canonical form through
/// arithmetic; the constructors below canonicalize explicitly so the
/// invariant holds from birth.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // implicit, so integer literals participate in arithmetic
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    /// Parses "num" or "num/den" in base 10.
    static Rational from_string(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    double to_double() const { return v_.get_d(); }

    /// "num/den", the denominator omitted when it is 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend Rational abs(const Rational& a) { return Rational(mpq_class(abs(a.v_))); }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

/// a^e with integer e; negative exponents invert (a must be nonzero then).
inline Rational pow(const Rational& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw std::domain_error("Rational: 0 to a negative power");
        return pow(Rational(1) / a, -e);
    }
    Rational result(1);
    Rational base = a;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

/// 2^e as an exact rational (e may be negative).
inline Rational pow2(long e) { return pow(Rational(2), e); }

}  // namespace verknot
