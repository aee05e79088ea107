#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "verknot/chebyshev.hpp"
#include "verknot/cyclotomic.hpp"
#include "verknot/grid.hpp"
#include "verknot/polynomial.hpp"

namespace verknot {

/// Dense bivariate polynomial with rational coefficients, c[i][j] X^i Y^j.
/// Enough machinery for the Chebyshev curve and its partials; not a general
/// multivariate engine.
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly from_x(const Polynomial& p) {
        BivariatePoly out;
        for (int i = 0; i <= p.degree(); ++i) out.set(i, 0, p.coeff(i));
        return out;
    }
    static BivariatePoly from_y(const Polynomial& p) {
        BivariatePoly out;
        for (int j = 0; j <= p.degree(); ++j) out.set(0, j, p.coeff(j));
        return out;
    }

    void set(int i, int j, const Rational& v) {
        if (v.is_zero() && (static_cast<std::size_t>(i) >= c_.size() || static_cast<std::size_t>(j) >= c_[static_cast<std::size_t>(i)].size()))
            return;
        if (static_cast<std::size_t>(i) >= c_.size()) c_.resize(static_cast<std::size_t>(i) + 1);
        auto& row = c_[static_cast<std::size_t>(i)];
        if (static_cast<std::size_t>(j) >= row.size()) row.resize(static_cast<std::size_t>(j) + 1, Rational(0));
        row[static_cast<std::size_t>(j)] = v;
    }
    Rational coeff(int i, int j) const {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= c_.size()) return Rational(0);
        const auto& row = c_[static_cast<std::size_t>(i)];
        if (static_cast<std::size_t>(j) >= row.size()) return Rational(0);
        return row[static_cast<std::size_t>(j)];
    }

    int degree_x() const {
        for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
            for (const auto& v : c_[static_cast<std::size_t>(i)])
                if (!v.is_zero()) return i;
        return -1;
    }
    int degree_y() const {
        int best = -1;
        for (const auto& row : c_)
            for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
                if (!row[static_cast<std::size_t>(j)].is_zero()) {
                    if (j > best) best = j;
                    break;
                }
        return best;
    }
    bool is_zero() const { return degree_x() < 0 && degree_y() < 0; }

    friend BivariatePoly operator-(const BivariatePoly& a, const BivariatePoly& b) {
        BivariatePoly out = a;
        for (std::size_t i = 0; i < b.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_[i].size(); ++j)
                out.set(static_cast<int>(i), static_cast<int>(j), out.coeff(static_cast<int>(i), static_cast<int>(j)) - b.c_[i][j]);
        return out;
    }

    BivariatePoly dx() const {
        BivariatePoly out;
        for (std::size_t i = 1; i < c_.size(); ++i)
            for (std::size_t j = 0; j < c_[i].size(); ++j)
                out.set(static_cast<int>(i) - 1, static_cast<int>(j), Rational(static_cast<long>(i)) * c_[i][j]);
        return out;
    }
    BivariatePoly dy() const {
        BivariatePoly out;
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 1; j < c_[i].size(); ++j)
                out.set(static_cast<int>(i), static_cast<int>(j) - 1, Rational(static_cast<long>(j)) * c_[i][j]);
        return out;
    }

    template <class T>
    T operator()(const T& x, const T& y) const {
        T acc = zero_like(x);
        for (std::size_t i = c_.size(); i-- > 0;) {
            T row_val = zero_like(x);
            const auto& row = c_[i];
            for (std::size_t j = row.size(); j-- > 0;) row_val = row_val * y + scalar_like(x, row[j]);
            acc = acc * x + row_val;
        }
        return acc;
    }

private:
    std::vector<std::vector<Rational>> c_;
};

/// The Chebyshev curve F(X,Y) = C_p(X) - C_q(Y) together with its first and
/// second partial derivatives. F_XY is identically zero (F is additively
/// separable); it is kept anyway so Hessians are honest 2x2 determinants.
struct CurvePolynomials {
    int p = 0;
    int q = 0;
    BivariatePoly F, FX, FY, FXX, FYY, FXY;
};

inline void check_knot_params(int p, int q) {
    if (p < 2 || q < 2) throw std::invalid_argument("torus knot parameters need p, q >= 2");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("torus knot parameters must be coprime");
}

inline CurvePolynomials curve_polynomials(int p, int q) {
    check_knot_params(p, q);
    CurvePolynomials cp;
    cp.p = p;
    cp.q = q;
    cp.F = BivariatePoly::from_x(chebyshev_first(p)) - BivariatePoly::from_y(chebyshev_first(q));
    cp.FX = cp.F.dx();
    cp.FY = cp.F.dy();
    cp.FXX = cp.FX.dx();
    cp.FYY = cp.FY.dy();
    cp.FXY = cp.FX.dy();
    return cp;
}

/// A blow-up center (2cos(a pi/p), 2cos(b pi/q)) with exact and float forms.
struct CurvePoint {
    GridIndex idx;
    Cyclotomic X, Y;
    std::complex<double> x_float, y_float;
};

/// All (p-1)(q-1) common zeros of F_X and F_Y, the blow-up centers.
inline std::vector<CurvePoint> critical_points(int p, int q) {
    check_knot_params(p, q);
    const int N = 2 * p * q;
    std::vector<CurvePoint> out;
    out.reserve(static_cast<std::size_t>((p - 1) * (q - 1)));
    for (int a = 1; a < p; ++a) {
        const Cyclotomic x = cos_pi_frac(a, p, N) * Rational(2);
        for (int b = 1; b < q; ++b) {
            const Cyclotomic y = cos_pi_frac(b, q, N) * Rational(2);
            out.push_back({{a, b}, x, y, x.embed_float(), y.embed_float()});
        }
    }
    return out;
}

/// The (p-1)(q-1)/2 nodes of the Chebyshev curve: critical points with
/// a == b (mod 2), which additionally satisfy F = 0.
inline std::vector<CurvePoint> singular_points(int p, int q) {
    std::vector<CurvePoint> out;
    for (auto& pt : critical_points(p, q))
        if ((pt.idx.a - pt.idx.b) % 2 == 0) out.push_back(std::move(pt));
    return out;
}

}  // namespace verknot
