#pragma once

#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "verknot/polynomial.hpp"
#include "verknot/rational.hpp"

namespace verknot {

/// Euler's totient by trial-division factorization.
inline int euler_phi(int n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    int result = n;
    int m = n;
    for (int p = 2; static_cast<long>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

/// N-th cyclotomic polynomial Phi_N: the minimal polynomial of a primitive
/// N-th root of unity, monic of degree phi(N). Computed by exact division of
/// x^N - 1 by the product of Phi_d over proper divisors d of N (all integer
/// arithmetic), and cached process-wide.
inline Polynomial cyclotomic_polynomial(int N) {
    if (N < 1) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
    static std::mutex mu;
    static std::map<int, Polynomial> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(N); it != cache.end()) return it->second;

    std::vector<int> divisors;
    for (int d = 1; d <= N; ++d)
        if (N % d == 0) divisors.push_back(d);
    for (int d : divisors) {
        if (cache.contains(d)) continue;
        Polynomial numerator = Polynomial::monomial(d, Rational(1)) - Polynomial::constant(Rational(1));
        Polynomial denominator = Polynomial::constant(Rational(1));
        for (int e : divisors) {
            if (e < d && d % e == 0) denominator = denominator * cache.at(e);
        }
        auto [quot, rem] = numerator.divmod(denominator);
        if (!rem.is_zero()) throw std::logic_error("cyclotomic_polynomial: inexact division");
        cache.emplace(d, std::move(quot));
    }
    return cache.at(N);
}

/// Immutable per-order data for Q(zeta_N): Phi_N and the reduction rows
/// x^m mod Phi_N for every exponent that multiplication or root_of_unity can
/// produce. Shared between all values of the same order.
class CycField {
public:
    static std::shared_ptr<const CycField> get(int N) {
        static std::mutex mu;
        static std::map<int, std::shared_ptr<const CycField>> cache;
        std::lock_guard<std::mutex> lock(mu);
        auto& slot = cache[N];
        if (!slot) slot = std::shared_ptr<const CycField>(new CycField(N));
        return slot;
    }

    int order() const { return n_; }
    int degree() const { return phi_; }
    const Polynomial& min_poly() const { return min_poly_; }

    /// Coefficient vector of x^m mod Phi_N, m in [0, max_exponent].
    const std::vector<Rational>& power(int m) const { return rows_[static_cast<std::size_t>(m)]; }
    int max_exponent() const { return static_cast<int>(rows_.size()) - 1; }

private:
    explicit CycField(int N)
        : n_(N), phi_(euler_phi(N)), min_poly_(cyclotomic_polynomial(N)) {
        const int top = std::max(N - 1, 2 * phi_ - 2);
        rows_.reserve(static_cast<std::size_t>(top) + 1);
        for (int m = 0; m <= top && m < phi_; ++m) {
            std::vector<Rational> row(static_cast<std::size_t>(phi_), Rational(0));
            row[static_cast<std::size_t>(m)] = Rational(1);
            rows_.push_back(std::move(row));
        }
        if (top >= phi_) {
            // x^phi = -(lower part of Phi), then shift-and-reduce upward.
            std::vector<Rational> base(static_cast<std::size_t>(phi_), Rational(0));
            for (int i = 0; i < phi_; ++i) base[static_cast<std::size_t>(i)] = -min_poly_.coeff(i);
            rows_.push_back(base);
            for (int m = phi_ + 1; m <= top; ++m) {
                const auto& prev = rows_.back();
                std::vector<Rational> row(static_cast<std::size_t>(phi_), Rational(0));
                const Rational overflow = prev[static_cast<std::size_t>(phi_ - 1)];
                for (int i = 1; i < phi_; ++i) row[static_cast<std::size_t>(i)] = prev[static_cast<std::size_t>(i - 1)];
                if (!overflow.is_zero())
                    for (int i = 0; i < phi_; ++i) row[static_cast<std::size_t>(i)] += overflow * base[static_cast<std::size_t>(i)];
                rows_.push_back(std::move(row));
            }
        }
    }

    int n_;
    int phi_;
    Polynomial min_poly_;
    std::vector<std::vector<Rational>> rows_;
};

/// Exact element of the cyclotomic field Q(zeta_N), held in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1} modulo Phi_N. The representation is
/// canonical: two elements are equal iff their coefficient vectors are.
/// Immutable in spirit: all operations return new values.
class Cyclotomic {
public:
    static Cyclotomic zero(int N) { return Cyclotomic(CycField::get(N)); }
    static Cyclotomic one(int N) { return constant(N, Rational(1)); }
    static Cyclotomic constant(int N, const Rational& r) {
        Cyclotomic u(CycField::get(N));
        u.c_[0] = r;
        return u;
    }
    /// zeta_N^k, k taken modulo N.
    static Cyclotomic root_of_unity(int N, long k) {
        auto field = CycField::get(N);
        long m = k % N;
        if (m < 0) m += N;
        Cyclotomic u(field);
        u.c_ = field->power(static_cast<int>(m));
        return u;
    }

    int order() const { return field_->order(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    const CycField& field() const { return *field_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }

    /// The rational value iff all non-constant coefficients vanish.
    std::optional<Rational> to_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return std::nullopt;
        return c_[0];
    }

    /// Numerical embedding at zeta_N = e^{2 pi i / N}, for cross-checks and
    /// display only.
    std::complex<double> embed_float() const {
        const double theta = 2.0 * std::numbers::pi / static_cast<double>(order());
        const std::complex<double> zeta{std::cos(theta), std::sin(theta)};
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * zeta + std::complex<double>(c_[i].to_double(), 0.0);
        return acc;
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    Cyclotomic operator-() const {
        Cyclotomic r = *this;
        for (auto& c : r.c_) c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        require_same_field(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Cyclotomic& operator-=(const Cyclotomic& o) {
        require_same_field(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }

    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        const int phi = a.field_->degree();
        // Scalar fast path keeps root-of-unity-heavy code O(phi).
        if (auto r = b.to_rational()) return a * *r;
        if (auto r = a.to_rational()) return b * *r;
        std::vector<Rational> prod(static_cast<std::size_t>(2 * phi - 1), Rational(0));
        for (int i = 0; i < phi; ++i) {
            const Rational& ai = a.c_[static_cast<std::size_t>(i)];
            if (ai.is_zero()) continue;
            for (int j = 0; j < phi; ++j) {
                const Rational& bj = b.c_[static_cast<std::size_t>(j)];
                if (bj.is_zero()) continue;
                prod[static_cast<std::size_t>(i + j)] += ai * bj;
            }
        }
        Cyclotomic out(a.field_);
        for (int m = 0; m < phi; ++m) out.c_[static_cast<std::size_t>(m)] = std::move(prod[static_cast<std::size_t>(m)]);
        for (int m = phi; m <= 2 * phi - 2; ++m) {
            const Rational& t = prod[static_cast<std::size_t>(m)];
            if (t.is_zero()) continue;
            const auto& row = a.field_->power(m);
            for (int i = 0; i < phi; ++i) {
                if (!row[static_cast<std::size_t>(i)].is_zero())
                    out.c_[static_cast<std::size_t>(i)] += t * row[static_cast<std::size_t>(i)];
            }
        }
        return out;
    }

    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    friend Cyclotomic operator*(Cyclotomic a, const Rational& s) {
        for (auto& c : a.c_) c *= s;
        return a;
    }
    friend Cyclotomic operator*(const Rational& s, Cyclotomic a) { return std::move(a) * s; }
    friend Cyclotomic operator+(Cyclotomic a, const Rational& s) {
        a.c_[0] += s;
        return a;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Rational& s) {
        a.c_[0] -= s;
        return a;
    }

    /// Multiplicative inverse via the extended Euclidean algorithm on the
    /// representative polynomial and Phi_N over Q. Remainders are kept as
    /// primitive integer polynomials (pseudo-division + content removal) so
    /// intermediate coefficients stay small; the cofactor carries the scale.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        if (auto r = to_rational()) return constant(order(), Rational(1) / *r);

        const int phi = field_->degree();
        // A = Phi_N, B = primitive integer multiple of *this, with
        // B = lambda * this; invariants A == sA*this, B == sB*this (mod Phi).
        std::vector<mpz_class> A(static_cast<std::size_t>(phi) + 1);
        for (int i = 0; i <= phi; ++i) A[static_cast<std::size_t>(i)] = field_->min_poly().coeff(i).num();

        mpz_class denom_lcm = 1;
        for (const auto& c : c_) denom_lcm = lcm(denom_lcm, c.den());
        std::vector<mpz_class> B(static_cast<std::size_t>(phi));
        for (int i = 0; i < phi; ++i) {
            mpz_class scaled = c_[static_cast<std::size_t>(i)].num() * (denom_lcm / c_[static_cast<std::size_t>(i)].den());
            B[static_cast<std::size_t>(i)] = std::move(scaled);
        }
        mpz_class content = int_content(B);
        for (auto& b : B) b /= content;
        shrink(B);
        // lambda = denom_lcm / content
        Rational lambda(mpq_class(denom_lcm) / mpq_class(content));

        std::vector<Rational> sA;           // cofactor of A (zero)
        std::vector<Rational> sB{lambda};   // cofactor of B

        while (static_cast<int>(B.size()) - 1 > 0) {
            auto [Q, R, scale] = pseudo_divmod(A, B);
            // sR = scale*sA - Q*sB
            std::vector<Rational> sR = scale_cof(sA, Rational(mpq_class(scale)));
            sub_mul(sR, Q, sB);
            if (R.empty()) throw std::logic_error("Cyclotomic: Phi_N not coprime to representative");
            mpz_class g = int_content(R);
            for (auto& r : R) r /= g;
            Rational inv_g(mpq_class(1) / mpq_class(g));
            for (auto& s : sR) s *= inv_g;
            A = std::move(B);
            sA = std::move(sB);
            B = std::move(R);
            sB = std::move(sR);
        }
        // B is a nonzero integer constant c with c == sB * this (mod Phi).
        const Rational c{mpq_class(B[0])};
        Cyclotomic out(field_);
        for (std::size_t i = 0; i < sB.size() && i < out.c_.size(); ++i) out.c_[i] = sB[i] / c;
        return out;
    }

    /// this^e, with negative exponents through inverse().
    Cyclotomic pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        Cyclotomic result = one(order());
        Cyclotomic base = *this;
        unsigned long n = static_cast<unsigned long>(e);
        while (n > 0) {
            if (n & 1) result *= base;
            if ((n >>= 1) != 0) base *= base;
        }
        return result;
    }

    std::string str() const {
        std::string out;
        bool any = false;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (any) out += " + ";
            out += c_[i].str();
            if (i > 0) out += "*z^" + std::to_string(i);
            any = true;
        }
        return any ? out : "0";
    }

private:
    explicit Cyclotomic(std::shared_ptr<const CycField> f)
        : field_(std::move(f)), c_(static_cast<std::size_t>(field_->degree()), Rational(0)) {}

    void require_same_field(const Cyclotomic& o) const {
        if (field_->order() != o.field_->order())
            throw std::invalid_argument("Cyclotomic: mixed field orders " + std::to_string(order()) + " and " +
                                        std::to_string(o.order()));
    }

    static void shrink(std::vector<mpz_class>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    }
    static mpz_class int_content(const std::vector<mpz_class>& v) {
        mpz_class g = 0;
        for (const auto& x : v) g = gcd(g, x);
        if (g == 0) g = 1;
        if (!v.empty() && v.back() < 0) g = -g;  // keep the leading coefficient positive
        return g;
    }
    static std::vector<Rational> scale_cof(const std::vector<Rational>& v, const Rational& s) {
        std::vector<Rational> out(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * s;
        return out;
    }
    // acc -= Q * s (polynomial multiply-accumulate; Q integer, s rational)
    static void sub_mul(std::vector<Rational>& acc, const std::vector<mpz_class>& Q, const std::vector<Rational>& s) {
        if (Q.empty() || s.empty()) return;
        if (acc.size() < Q.size() + s.size() - 1) acc.resize(Q.size() + s.size() - 1, Rational(0));
        for (std::size_t i = 0; i < Q.size(); ++i) {
            if (Q[i] == 0) continue;
            const Rational qi(mpq_class(Q[i]));
            for (std::size_t j = 0; j < s.size(); ++j) {
                if (s[j].is_zero()) continue;
                acc[i + j] -= qi * s[j];
            }
        }
        while (!acc.empty() && acc.back().is_zero()) acc.pop_back();
    }

    /// Pseudo-division over Z: returns (Q, R, d) with d*A = Q*B + R and
    /// deg R < deg B. d is a power of the leading coefficient of B.
    static std::tuple<std::vector<mpz_class>, std::vector<mpz_class>, mpz_class> pseudo_divmod(
        const std::vector<mpz_class>& A, const std::vector<mpz_class>& B) {
        const int degA = static_cast<int>(A.size()) - 1;
        const int degB = static_cast<int>(B.size()) - 1;
        const mpz_class& lead = B.back();
        std::vector<mpz_class> R = A;
        std::vector<mpz_class> Q(static_cast<std::size_t>(degA - degB) + 1, mpz_class(0));
        mpz_class d = 1;
        int steps_left = degA - degB + 1;
        while (static_cast<int>(R.size()) - 1 >= degB && !R.empty()) {
            const int shift = static_cast<int>(R.size()) - 1 - degB;
            const mpz_class top = R.back();
            // R = lead*R - top*x^shift*B ; Q = lead*Q + top*x^shift
            for (auto& r : R) r *= lead;
            for (auto& q : Q) q *= lead;
            Q[static_cast<std::size_t>(shift)] += top;
            for (int i = 0; i <= degB; ++i)
                R[static_cast<std::size_t>(i + shift)] -= top * B[static_cast<std::size_t>(i)];
            d *= lead;
            --steps_left;
            shrink(R);
        }
        // Bring Q, R up to the full d = lead^(degA-degB+1) normalization.
        while (steps_left-- > 0) {
            for (auto& q : Q) q *= lead;
            for (auto& r : R) r *= lead;
            d *= lead;
        }
        return {std::move(Q), std::move(R), std::move(d)};
    }

    std::shared_ptr<const CycField> field_;
    std::vector<Rational> c_;
};

inline Cyclotomic scalar_like(const Cyclotomic& like, const Rational& r) {
    return Cyclotomic::constant(like.order(), r);
}
inline Cyclotomic zero_like(const Cyclotomic& like) { return Cyclotomic::zero(like.order()); }

/// cos(a*pi/n) = (zeta_{2n}^a + zeta_{2n}^{-a})/2, embedded in Q(zeta_N).
/// Requires 2n | N.
inline Cyclotomic cos_pi_frac(long a, int n, int N) {
    if (n < 1 || N < 1 || N % (2 * n) != 0)
        throw std::invalid_argument("cos_pi_frac: ambient order must be divisible by 2n");
    const long step = N / (2 * n);
    Cyclotomic u = Cyclotomic::root_of_unity(N, step * a) + Cyclotomic::root_of_unity(N, -step * a);
    return u * Rational(1, 2);
}

/// sin^2(a*pi/n) = (1 - cos(2a*pi/n))/2, exact in Q(zeta_N). Requires 2n | N.
inline Cyclotomic sin_sq_pi_frac(long a, int n, int N) {
    if (n < 1 || N < 1 || N % (2 * n) != 0)
        throw std::invalid_argument("sin_sq_pi_frac: ambient order must be divisible by 2n");
    const long step = N / n;
    Cyclotomic two_cos = Cyclotomic::root_of_unity(N, step * a) + Cyclotomic::root_of_unity(N, -step * a);
    return (Cyclotomic::constant(N, Rational(2)) - two_cos) * Rational(1, 4);
}

}  // namespace verknot
