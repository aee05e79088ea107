#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verknot/rational.hpp"

namespace verknot {

/// Dense univariate polynomial with exact rational coefficients, stored in
/// ascending degree. The trailing coefficient is nonzero unless the
/// polynomial is zero (empty coefficient vector).
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> ascending) : c_(ascending) { trim(); }
    explicit Polynomial(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }
    static Polynomial monomial(int deg, Rational coeff) {
        std::vector<Rational> c(static_cast<std::size_t>(deg) + 1, Rational(0));
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    /// Degree, with deg(0) = -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }

    /// Coefficient of x^i (zero beyond the degree).
    Rational coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return Rational(0);
        return c_[static_cast<std::size_t>(i)];
    }

    Rational leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial: zero polynomial has no leading coefficient");
        return c_.back();
    }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rational& s, Polynomial p) {
        for (auto& c : p.c_) c *= s;
        p.trim();
        return p;
    }
    friend Polynomial operator*(Polynomial p, const Rational& s) { return s * std::move(p); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Formal derivative.
    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> d(c_.size() - 1, Rational(0));
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return Polynomial(std::move(d));
    }

    /// Quotient and remainder of *this by a nonzero divisor, over Q.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
        if (divisor.is_zero()) throw std::domain_error("Polynomial: division by zero polynomial");
        Polynomial rem = *this;
        if (rem.degree() < divisor.degree()) return {Polynomial(), rem};
        std::vector<Rational> q(static_cast<std::size_t>(rem.degree() - divisor.degree()) + 1, Rational(0));
        const Rational lead = divisor.leading();
        while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
            const int shift = rem.degree() - divisor.degree();
            const Rational factor = rem.leading() / lead;
            q[static_cast<std::size_t>(shift)] = factor;
            // rem -= factor * x^shift * divisor
            for (int i = 0; i <= divisor.degree(); ++i)
                rem.c_[static_cast<std::size_t>(i + shift)] -= factor * divisor.c_[static_cast<std::size_t>(i)];
            rem.trim();
        }
        return {Polynomial(std::move(q)), rem};
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.sign() > 0 ? " + " : " - ";
            else if (c.sign() < 0) out += "-";
            const Rational a = abs(c);
            if (i == 0 || a != Rational(1)) out += a.str();
            if (i > 0) {
                if (a != Rational(1)) out += "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

// eval() promotes rational coefficients into whatever scalar kind it is
// handed; scalar_like/zero_like are the customization points (Cyclotomic
// adds its own overloads).
inline double scalar_like(double, const Rational& r) { return r.to_double(); }
inline double zero_like(double) { return 0.0; }
inline std::complex<double> scalar_like(const std::complex<double>&, const Rational& r) {
    return {r.to_double(), 0.0};
}
inline std::complex<double> zero_like(const std::complex<double>&) { return {0.0, 0.0}; }
inline Rational scalar_like(const Rational&, const Rational& r) { return r; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Polynomial scalar_like(const Polynomial&, const Rational& r) { return Polynomial::constant(r); }
inline Polynomial zero_like(const Polynomial&) { return Polynomial(); }

/// Horner evaluation in the arithmetic of the argument (double, complex,
/// Rational, Cyclotomic, or Polynomial for composition).
template <class T>
T eval(const Polynomial& p, const T& z) {
    T acc = zero_like(z);
    for (int i = p.degree(); i >= 0; --i) acc = acc * z + scalar_like(z, p.coeff(i));
    return acc;
}

/// Composition p(q(x)) as an exact polynomial.
inline Polynomial compose(const Polynomial& p, const Polynomial& q) { return eval(p, q); }

}  // namespace verknot
