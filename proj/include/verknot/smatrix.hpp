#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "verknot/cyclotomic.hpp"
#include "verknot/grid.hpp"
#include "verknot/knot.hpp"

namespace verknot {

/// Modular S-matrix of the torus knot:
/// S_{(i,j),(a,b)} = sqrt(8/pq) sin(ia pi/p) sin(jb pi/q).
/// Entries are floats; squared entries are available exactly in Q(zeta_2pq)
/// (the square kills the square root and the bare sines).
class SMatrix {
public:
    explicit SMatrix(TorusKnot k) : k_(k) {
        const double pi = std::numbers::pi;
        sin_p_.resize(static_cast<std::size_t>(k.p()) * static_cast<std::size_t>(k.p()), 0.0);
        for (int i = 1; i < k.p(); ++i)
            for (int a = 1; a < k.p(); ++a)
                sin_p_[static_cast<std::size_t>(i * k.p() + a)] = std::sin(pi * i * a / k.p());
        sin_q_.resize(static_cast<std::size_t>(k.q()) * static_cast<std::size_t>(k.q()), 0.0);
        for (int j = 1; j < k.q(); ++j)
            for (int b = 1; b < k.q(); ++b)
                sin_q_[static_cast<std::size_t>(j * k.q() + b)] = std::sin(pi * j * b / k.q());
    }

    const TorusKnot& knot() const { return k_; }
    int dim() const { return k_.grid_size(); }

    double entry(const GridIndex& x, const GridIndex& y) const {
        check_grid_index(k_.p(), k_.q(), x);
        check_grid_index(k_.p(), k_.q(), y);
        const double norm = std::sqrt(8.0 / (k_.p() * k_.q()));
        return norm * sin_p_[static_cast<std::size_t>(x.a * k_.p() + y.a)] *
               sin_q_[static_cast<std::size_t>(x.b * k_.q() + y.b)];
    }

    /// S_{x,y}^2 = (8/pq) sin^2(x.a y.a pi/p) sin^2(x.b y.b pi/q), exact.
    Cyclotomic entry_sq_exact(const GridIndex& x, const GridIndex& y) const {
        check_grid_index(k_.p(), k_.q(), x);
        check_grid_index(k_.p(), k_.q(), y);
        const int N = k_.field_order();
        return Rational(8, static_cast<long>(k_.p()) * k_.q()) *
               (sin_sq_pi_frac(static_cast<long>(x.a) * y.a, k_.p(), N) *
                sin_sq_pi_frac(static_cast<long>(x.b) * y.b, k_.q(), N));
    }

private:
    TorusKnot k_;
    std::vector<double> sin_p_;
    std::vector<double> sin_q_;
};

inline SMatrix s_matrix(const TorusKnot& k) { return SMatrix(k); }

}  // namespace verknot
