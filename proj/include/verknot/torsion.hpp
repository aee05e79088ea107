#pragma once

#include <cmath>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "verknot/charvar.hpp"
#include "verknot/curve.hpp"
#include "verknot/cyclotomic.hpp"
#include "verknot/knot.hpp"
#include "verknot/smatrix.hpp"

namespace verknot {

/// Adjoint Reidemeister torsion on one component: real, strictly positive,
/// constant along the component.
struct TorsionValue {
    ComponentIndex component;
    Cyclotomic exact;
    double value = 0.0;
};

namespace detail {
/// sin^2(a pi/p) sin^2(b pi/q) in Q(zeta_2pq).
inline Cyclotomic sin_sq_product(const TorusKnot& k, const ComponentIndex& c) {
    const int N = k.field_order();
    return sin_sq_pi_frac(c.a, k.p(), N) * sin_sq_pi_frac(c.b, k.q(), N);
}
}  // namespace detail

/// Direct formula: tau = pq / (16 sin^2(a pi/p) sin^2(b pi/q)).
inline TorsionValue adjoint_torsion(const TorusKnot& k, const ComponentIndex& c) {
    check_component_index(k.p(), k.q(), c);
    const Cyclotomic tau =
        Rational(static_cast<long>(k.p()) * k.q(), 16) * detail::sin_sq_product(k, c).inverse();
    return {c, tau, tau.embed_float().real()};
}

/// Jacobian determinant of (F_X, F_Y) at the blow-up center of the
/// component, by direct evaluation of the second partials of the Chebyshev
/// curve polynomial. Independent of any closed form.
inline Cyclotomic hessian_at(const TorusKnot& k, const ComponentIndex& c) {
    check_component_index(k.p(), k.q(), c);
    const int N = k.field_order();
    const CurvePolynomials cp = curve_polynomials(k.p(), k.q());
    const Cyclotomic x = cos_pi_frac(c.a, k.p(), N) * Rational(2);
    const Cyclotomic y = cos_pi_frac(c.b, k.q(), N) * Rational(2);
    return cp.FXX(x, y) * cp.FYY(x, y) - cp.FXY(x, y) * cp.FXY(x, y);
}

/// Torsion recovered from the Hessian: tau = -Hess(F)/(4pq). Must agree
/// exactly with adjoint_torsion; the agreement is the executable form of the
/// Hessian theorem.
inline TorsionValue torsion_from_hessian(const TorusKnot& k, const ComponentIndex& c) {
    const Cyclotomic tau = Rational(-1, 4 * static_cast<long>(k.p()) * k.q()) * hessian_at(k, c);
    return {c, tau, tau.embed_float().real()};
}

/// Sum over components of (2 tau)^(g-1) with a rationality verdict. The sum
/// is taken over one generic level set of tr_mu; since the summand is
/// constant per component the level c never enters, and the sum is exact in
/// Q(zeta_2pq). g = 0 goes through honest field inversion.
struct PowerSum {
    int g = 0;
    Cyclotomic exact;
    std::optional<Rational> rational;
};

namespace detail {
/// (2 tau)^(g-1) for every g in 0..g_max at one inversion per distinct
/// torsion value: terms[class] starts at the g = 0 inverse and multiplies up.
inline std::vector<PowerSum> power_sum_table_impl(const TorusKnot& k, int g_max) {
    const int N = k.field_order();
    const auto comps = components(k);
    // tau depends on (a,b) only through sin^2 classes {a, p-a} x {b, q-b}.
    std::map<std::pair<int, int>, Cyclotomic> two_tau;
    std::map<std::pair<int, int>, Cyclotomic> term;
    for (const auto& c : comps) {
        const auto key = std::make_pair(std::min(c.a, k.p() - c.a), std::min(c.b, k.q() - c.b));
        if (!two_tau.contains(key)) {
            const Cyclotomic t =
                Rational(static_cast<long>(k.p()) * k.q(), 8) * detail::sin_sq_product(k, c).inverse();
            two_tau.emplace(key, t);
            term.emplace(key, t.inverse());  // g = 0 term (2 tau)^(-1)
        }
    }
    std::vector<PowerSum> out;
    out.reserve(static_cast<std::size_t>(g_max) + 1);
    for (int g = 0; g <= g_max; ++g) {
        Cyclotomic total = Cyclotomic::zero(N);
        for (const auto& c : comps) {
            const auto key = std::make_pair(std::min(c.a, k.p() - c.a), std::min(c.b, k.q() - c.b));
            total += term.at(key);
        }
        out.push_back({g, total, total.to_rational()});
        if (g < g_max)
            for (auto& [key, t] : term) t *= two_tau.at(key);
    }
    return out;
}
}  // namespace detail

inline PowerSum torsion_power_sum(const TorusKnot& k, int g) {
    if (g < 0) throw std::invalid_argument("torsion_power_sum: g must be >= 0");
    return detail::power_sum_table_impl(k, g).back();
}

/// All power sums for 0 <= g <= g_max, sharing the per-component inversions.
inline std::vector<PowerSum> torsion_power_sums(const TorusKnot& k, int g_max) {
    if (g_max < 0) throw std::invalid_argument("torsion_power_sums: g_max must be >= 0");
    return detail::power_sum_table_impl(k, g_max);
}

/// Float check of 2 tau = S_{(a,b),(1,1)}^(-2), i.e. 2 tau S^2 = 1.
inline bool torsion_s_matrix_relation_check(const TorusKnot& k, const ComponentIndex& c, double tol = 1e-9) {
    const double tau = adjoint_torsion(k, c).value;
    const double s = s_matrix(k).entry({c.a, c.b}, {1, 1});
    return std::abs(2.0 * tau * s * s - 1.0) < tol;
}

}  // namespace verknot
