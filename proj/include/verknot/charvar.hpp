#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "verknot/chebyshev.hpp"
#include "verknot/curve.hpp"
#include "verknot/cyclotomic.hpp"
#include "verknot/knot.hpp"

namespace verknot {

/// A point of the blow-up surface B: (X, Y, [Z0 : Z1]) subject to
/// F_X(X,Y) Z0 = -F_Y(X,Y) Z1. The projective pair is identified as
/// [Z0 : Z1] = [C'_q(t) : C'_p(t)] along the resolved curve; that choice is
/// what makes the incidence relation F_X C'_q + F_Y C'_p = 0 match the
/// surface equation (the sign convention is fixed here once and for all).
template <class T>
struct BlowupPoint {
    T X, Y, Z0, Z1;
};

namespace detail {
inline bool scalar_is_zero(double v) { return v == 0.0; }
inline bool scalar_is_zero(const std::complex<double>& v) { return v == std::complex<double>{}; }
inline bool scalar_is_zero(const Rational& v) { return v.is_zero(); }
inline bool scalar_is_zero(const Cyclotomic& v) { return v.is_zero(); }
}  // namespace detail

/// Parametrization of the resolved Chebyshev curve:
/// t -> (C_q(t), C_p(t), [C'_q(t) : C'_p(t)]).
///
/// S_{p-1} and S_{q-1} have no common root for coprime p, q, so the
/// projective pair cannot degenerate for any t.
template <class T>
BlowupPoint<T> curve_param(const TorusKnot& k, const T& t) {
    const Polynomial cq = chebyshev_first(k.q());
    const Polynomial cp = chebyshev_first(k.p());
    BlowupPoint<T> out{eval(cq, t), eval(cp, t), eval(cq.derivative(), t), eval(cp.derivative(), t)};
    if (detail::scalar_is_zero(out.Z0) && detail::scalar_is_zero(out.Z1))
        throw std::domain_error("curve_param: degenerate projective coordinate [0:0]");
    return out;
}

/// Pair of exact values with float shadows, as produced by the excluded-trace
/// and trace-solution operations. `minus` carries the (ar/p - bs/q) angle,
/// `plus` the (ar/p + bs/q) one.
struct TracePair {
    Cyclotomic plus;
    Cyclotomic minus;
    std::complex<double> plus_float;
    std::complex<double> minus_float;
};

namespace detail {
inline TracePair two_cos_pair(const TorusKnot& k, const ComponentIndex& c) {
    check_component_index(k.p(), k.q(), c);
    const int N = k.field_order();
    // 2cos((ar/p +- bs/q) pi) = zeta_2pq^(arq +- bsp) + conjugate
    const long m_plus = static_cast<long>(c.a) * k.r() * k.q() + static_cast<long>(c.b) * k.s() * k.p();
    const long m_minus = static_cast<long>(c.a) * k.r() * k.q() - static_cast<long>(c.b) * k.s() * k.p();
    TracePair out{Cyclotomic::root_of_unity(N, m_plus) + Cyclotomic::root_of_unity(N, -m_plus),
                  Cyclotomic::root_of_unity(N, m_minus) + Cyclotomic::root_of_unity(N, -m_minus),
                  {},
                  {}};
    out.plus_float = out.plus.embed_float();
    out.minus_float = out.minus.embed_float();
    return out;
}
}  // namespace detail

/// The two trace values 2cos((ar/p +- bs/q) pi) removed from the component
/// C_{a,b}: tr_mu maps the component onto C minus these two points.
inline TracePair excluded_traces(const TorusKnot& k, const ComponentIndex& c) { return detail::two_cos_pair(k, c); }

/// The two solutions t of C_q(t) = 2cos(a pi/p), C_p(t) = 2cos(b pi/q),
/// verified exactly by substitution before returning. They coincide with
/// excluded_traces as a set; the coincidence is one of the verified
/// identities.
inline TracePair solve_trace_param(const TorusKnot& k, const ComponentIndex& c) {
    TracePair t = detail::two_cos_pair(k, c);
    const int N = k.field_order();
    const Cyclotomic target_x = cos_pi_frac(c.a, k.p(), N) * Rational(2);
    const Cyclotomic target_y = cos_pi_frac(c.b, k.q(), N) * Rational(2);
    const Polynomial cq = chebyshev_first(k.q());
    const Polynomial cp = chebyshev_first(k.p());
    for (const Cyclotomic* t_val : {&t.plus, &t.minus}) {
        if (eval(cq, *t_val) != target_x || eval(cp, *t_val) != target_y)
            throw std::logic_error("solve_trace_param: substitution check failed");
    }
    return t;
}

/// Where the resolved curve meets the exceptional line over the blow-up
/// center of component (a,b): [q sin(a pi/p) : +- p sin(b pi/q)].
///
/// Projective coordinates are only defined up to scale; the exact pair is
/// returned scaled by sin(b pi/q), which lands both entries in Q(zeta_2pq)
/// (individual sines need i, their products and squares do not).
struct ExceptionalIntersections {
    // exact representatives: [q sin(a pi/p) sin(b pi/q) : +- p sin^2(b pi/q)]
    Cyclotomic z0_exact;
    Cyclotomic z1_plus_exact;
    Cyclotomic z1_minus_exact;
    std::array<std::complex<double>, 2> plus;   // [q sin(a pi/p) : +p sin(b pi/q)]
    std::array<std::complex<double>, 2> minus;  // [q sin(a pi/p) : -p sin(b pi/q)]
};

inline ExceptionalIntersections exceptional_intersections(const TorusKnot& k, const ComponentIndex& c) {
    check_component_index(k.p(), k.q(), c);
    const int N = k.field_order();
    // sin(a pi/p) sin(b pi/q) = (cos((aq-bp)pi/(pq)) - cos((aq+bp)pi/(pq)))/2
    const long diff = static_cast<long>(c.a) * k.q() - static_cast<long>(c.b) * k.p();
    const long sum = static_cast<long>(c.a) * k.q() + static_cast<long>(c.b) * k.p();
    const Cyclotomic sin_prod = (cos_pi_frac(diff, k.p() * k.q(), N) - cos_pi_frac(sum, k.p() * k.q(), N)) * Rational(1, 2);
    const Cyclotomic sin_sq_b = sin_sq_pi_frac(c.b, k.q(), N);

    ExceptionalIntersections out{Rational(k.q()) * sin_prod, Rational(k.p()) * sin_sq_b,
                                 Rational(-k.p()) * sin_sq_b,
                                 {},
                                 {}};
    const double sa = std::sin(std::numbers::pi * c.a / k.p());
    const double sb = std::sin(std::numbers::pi * c.b / k.q());
    out.plus = {std::complex<double>(k.q() * sa, 0.0), std::complex<double>(k.p() * sb, 0.0)};
    out.minus = {std::complex<double>(k.q() * sa, 0.0), std::complex<double>(-(k.p() * sb), 0.0)};
    return out;
}

/// Result of the Moebius map Phi_{a,b} on a projective point. The three
/// exceptional inputs are reported as tagged boundary values, never NaN:
/// the two intersection points land on the excluded traces, [1:0] on
/// infinity.
struct PhiValue {
    enum class Kind { regular, excluded_minus, excluded_plus, infinite };
    Kind kind = Kind::regular;
    std::complex<double> value{};  // meaningless when kind == infinite

    bool is_boundary() const { return kind != Kind::regular; }
};

/// Phi_{a,b}: [Z0:Z1] -> w -> trace, the isomorphism from the exceptional
/// line L_{a,b} onto the component C_{a,b}. Float arithmetic (tolerance
/// 1e-9 on boundary detection); the exact side of the theory never consumes
/// these values.
inline PhiValue moebius_phi(const TorusKnot& k, const ComponentIndex& c, std::complex<double> z0,
                            std::complex<double> z1) {
    check_component_index(k.p(), k.q(), c);
    constexpr double tol = 1e-9;
    const double pi = std::numbers::pi;
    const double psb = k.p() * std::sin(pi * c.b / k.q());
    const double qsa = k.q() * std::sin(pi * c.a / k.p());
    const double angle_minus = pi * (static_cast<double>(c.a) * k.r() / k.p() - static_cast<double>(c.b) * k.s() / k.q());
    const double angle_plus = pi * (static_cast<double>(c.a) * k.r() / k.p() + static_cast<double>(c.b) * k.s() / k.q());

    const double scale = std::max(std::abs(z0), std::abs(z1));
    if (scale == 0.0) throw std::invalid_argument("moebius_phi: [0:0] is not a projective point");
    z0 /= scale;
    z1 /= scale;

    const std::complex<double> num = psb * z0 + qsa * z1;
    const std::complex<double> den = psb * z0 - qsa * z1;
    if (std::abs(z1) < tol) return {PhiValue::Kind::infinite, {}};  // [1:0] -> w = 1 -> infinity
    if (std::abs(num) < tol * std::abs(den))
        return {PhiValue::Kind::excluded_minus, {2.0 * std::cos(angle_minus), 0.0}};  // w = 0
    if (std::abs(den) < tol * std::abs(num))
        return {PhiValue::Kind::excluded_plus, {2.0 * std::cos(angle_plus), 0.0}};  // w = infinity
    const std::complex<double> w = num / den;
    if (std::abs(w - 1.0) < tol) return {PhiValue::Kind::infinite, {}};
    const std::complex<double> value =
        2.0 * std::cos(angle_minus) - 4.0 * std::sin(pi * c.a * k.r() / k.p()) * std::sin(pi * c.b * k.s() / k.q()) * w / (w - 1.0);
    return {PhiValue::Kind::regular, value};
}

/// Trace of any group element with homology class mu^kk on the reducible
/// part: C_|kk| composed with the meridian trace. kk = q gives tr_alpha,
/// kk = p gives tr_beta.
template <class T>
T reducible_trace(const TorusKnot&, long kk, const T& t) {
    return eval(chebyshev_first(kk), t);
}

}  // namespace verknot
