#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "verknot/charvar.hpp"
#include "verknot/chebyshev.hpp"
#include "verknot/curve.hpp"
#include "verknot/knot.hpp"
#include "verknot/report.hpp"
#include "verknot/smatrix.hpp"
#include "verknot/torsion.hpp"
#include "verknot/verlinde.hpp"

namespace verknot {

struct CheckResult {
    std::string name;
    bool pass = true;
    int checks = 0;
    std::string detail;  // first failure, empty when passing

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

inline bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace detail {
template <class T>
std::vector<T> subsample(const std::vector<T>& v, std::size_t cap) {
    if (v.size() <= cap) return v;
    std::vector<T> out;
    out.reserve(cap);
    for (std::size_t i = 0; i < cap; ++i) out.push_back(v[i * v.size() / cap]);
    return out;
}
}  // namespace detail

/// Component structure, curve incidence, excluded traces, exceptional-line
/// data and the Moebius endpoint mappings.
inline CheckResult check_geometry(const TorusKnot& k) {
    CheckResult res{"geometry"};
    const auto comps = components(k);
    res.expect(static_cast<int>(comps.size()) == k.component_count(), "component count");

    const auto cp = curve_polynomials(k.p(), k.q());
    res.expect(cp.FXY.is_zero(), "F_XY should vanish identically");
    res.expect(cp.F.degree_x() == k.p() && cp.F.degree_y() == k.q(), "curve degrees");

    const auto sing = singular_points(k.p(), k.q());
    res.expect(static_cast<int>(sing.size()) == k.component_count(), "singular point count");
    for (const auto& pt : sing)
        res.expect(cp.F(pt.X, pt.Y).is_zero() && cp.FX(pt.X, pt.Y).is_zero() && cp.FY(pt.X, pt.Y).is_zero(),
                   "singular incidence at " + pt.idx.str());

    const auto crit = critical_points(k.p(), k.q());
    res.expect(static_cast<int>(crit.size()) == k.grid_size(), "critical point count");
    for (const auto& pt : crit)
        res.expect(cp.FX(pt.X, pt.Y).is_zero() && cp.FY(pt.X, pt.Y).is_zero(), "critical incidence at " + pt.idx.str());

    const Polynomial cq = chebyshev_first(k.q());
    const Polynomial cpl = chebyshev_first(k.p());
    const Polynomial incidence = cp.FX(cq, cpl) * cq.derivative() + cp.FY(cq, cpl) * cpl.derivative();
    res.expect(incidence.is_zero(), "curve incidence polynomial identity");

    for (long t : {2L, 0L, -1L, 5L}) {
        const auto pt = curve_param(k, Rational(t));
        res.expect(cp.F(pt.X, pt.Y).is_zero(), "parametrized point off the curve at t=" + std::to_string(t));
        res.expect((cp.FX(pt.X, pt.Y) * pt.Z0 + cp.FY(pt.X, pt.Y) * pt.Z1).is_zero(),
                   "surface equation at t=" + std::to_string(t));
    }

    for (const auto& c : comps) {
        const auto excl = excluded_traces(k, c);
        const auto sols = solve_trace_param(k, c);
        const bool set_eq = (excl.plus == sols.plus && excl.minus == sols.minus) ||
                            (excl.plus == sols.minus && excl.minus == sols.plus);
        res.expect(set_eq, "solve_trace_param != excluded_traces at " + c.str());
        res.expect(excl.plus != excl.minus, "excluded traces coincide at " + c.str());
        res.expect(std::abs(excl.plus_float.real()) <= 2.0 + 1e-12 && std::abs(excl.minus_float.real()) <= 2.0 + 1e-12,
                   "excluded trace outside [-2,2] at " + c.str());

        const auto ex = exceptional_intersections(k, c);
        res.expect(std::abs(ex.plus[1]) > 0 && std::abs(ex.minus[1]) > 0, "exceptional point equals [1:0]");
        // exact projective match with the curve parametrization at the two
        // trace solutions: t_minus meets the + point, t_plus the - point
        const auto at_minus = curve_param(k, sols.minus);
        const auto at_plus = curve_param(k, sols.plus);
        res.expect((at_minus.Z0 * ex.z1_plus_exact - at_minus.Z1 * ex.z0_exact).is_zero(),
                   "exceptional intersection (t-) at " + c.str());
        res.expect((at_plus.Z0 * ex.z1_minus_exact - at_plus.Z1 * ex.z0_exact).is_zero(),
                   "exceptional intersection (t+) at " + c.str());
        // the parametrized point sits on the blow-up center
        const int N = k.field_order();
        res.expect(at_minus.X == cos_pi_frac(c.a, k.p(), N) * Rational(2) &&
                       at_minus.Y == cos_pi_frac(c.b, k.q(), N) * Rational(2),
                   "blow-up center at " + c.str());
        // float proportionality, tolerance 1e-9
        const auto fm = curve_param(k, std::complex<double>(sols.minus_float));
        const double scale = std::abs(fm.Z0) + std::abs(fm.Z1) + 1.0;
        res.expect(std::abs(fm.Z0 * ex.plus[1] - fm.Z1 * ex.plus[0]) < 1e-9 * scale * (1.0 + std::abs(ex.plus[0])),
                   "float proportionality at " + c.str());

        // the three Moebius endpoint mappings
        const auto v_minus = moebius_phi(k, c, ex.minus[0], ex.minus[1]);
        res.expect(v_minus.kind == PhiValue::Kind::excluded_minus &&
                       std::abs(v_minus.value - excl.minus_float) < 1e-9,
                   "Phi endpoint (-) at " + c.str());
        const auto v_plus = moebius_phi(k, c, ex.plus[0], ex.plus[1]);
        res.expect(v_plus.kind == PhiValue::Kind::excluded_plus && std::abs(v_plus.value - excl.plus_float) < 1e-9,
                   "Phi endpoint (+) at " + c.str());
        const auto v_inf = moebius_phi(k, c, 1.0, 0.0);
        res.expect(v_inf.kind == PhiValue::Kind::infinite, "Phi endpoint [1:0] at " + c.str());
    }
    return res;
}

/// Chebyshev polynomial identities used throughout: derivative, second-kind
/// derivative relation, composition, and the root-of-unity evaluation rule.
inline CheckResult check_chebyshev_identities(int k_max = 30, long compose_cap = 64) {
    CheckResult res{"chebyshev_identities"};
    const Polynomial z = Polynomial::x();
    const Polynomial z2m4 = z * z - Polynomial::constant(Rational(4));
    for (int k = 1; k <= k_max; ++k) {
        res.expect(chebyshev_first(k).derivative() == Rational(k) * chebyshev_second(k - 1),
                   "C'_k = k S_{k-1} at k=" + std::to_string(k));
        const Polynomial lhs = z2m4 * chebyshev_second(k - 1).derivative();
        const Polynomial rhs = Rational(k) * chebyshev_first(k) - z * chebyshev_second(k - 1);
        res.expect(lhs == rhs, "(z^2-4) S'_{k-1} identity at k=" + std::to_string(k));
    }
    for (int a = 2; a <= 8; ++a)
        for (int b = 2; b <= 8; ++b) {
            if (static_cast<long>(a) * b > compose_cap) continue;
            res.expect(compose(chebyshev_first(a), chebyshev_first(b)) == chebyshev_first(static_cast<long>(a) * b),
                       "composition C_a(C_b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    // C_k(zeta + 1/zeta) = zeta^k + zeta^-k and the S_k analogue
    for (int N : {5, 8, 12}) {
        for (int k = 0; k <= 7; ++k) {
            const Cyclotomic z1 = Cyclotomic::root_of_unity(N, 1) + Cyclotomic::root_of_unity(N, -1);
            res.expect(eval(chebyshev_first(k), z1) ==
                           Cyclotomic::root_of_unity(N, k) + Cyclotomic::root_of_unity(N, -k),
                       "C_k at zeta+1/zeta, N=" + std::to_string(N));
        }
    }
    return res;
}

/// Torsion two ways: closed formula versus Hessian of the curve polynomial.
inline CheckResult check_hessian_torsion(const TorusKnot& k) {
    CheckResult res{"hessian_torsion"};
    for (const auto& c : components(k)) {
        const TorsionValue direct = adjoint_torsion(k, c);
        const TorsionValue via_hessian = torsion_from_hessian(k, c);
        res.expect(direct.exact == via_hessian.exact, "torsion routes differ at " + c.str());
        const Cyclotomic hess = hessian_at(k, c);
        const Cyclotomic closed =
            Rational(-static_cast<long>(k.p()) * k.p() * k.q() * k.q(), 4) * detail::sin_sq_product(k, c).inverse();
        res.expect(hess == closed, "Hessian closed form at " + c.str());
        res.expect(hess.embed_float().real() < 0, "Hessian sign at " + c.str());
        res.expect(direct.value > 0, "torsion positivity at " + c.str());
        res.expect(std::abs(direct.exact.embed_float().real() - direct.value) < 1e-10, "torsion float consistency");
        res.expect(std::abs(direct.exact.embed_float().imag()) < 1e-12, "torsion should be real");
    }
    return res;
}

/// Closed-form initial values against the defining trigonometric sums.
inline CheckResult check_initial_values(const TorusKnot& k, TrigEvaluator& trig, const FusionTensor& tensor) {
    CheckResult res{"initial_values"};
    const auto grid = grid_indices(k);

    for (const auto& x : grid) {
        const auto got = trig.d(0, MultiIndex::unit(x)).to_rational();
        res.expect(got.has_value() && *got == d0_one(k, x), "d(0, l_x) at " + x.str());
        const auto got1 = trig.d(1, MultiIndex::unit(x)).to_rational();
        res.expect(got1.has_value() && *got1 == d1_single(k, x), "d(1, l_x) at " + x.str());
        // contraction route for d(1, l_x)
        Rational contr(0);
        for (const auto& z : grid)
            if (tensor.nonzero(x, z, z)) contr += Rational(1, 2);
        res.expect(contr == d1_single(k, x), "d(1, l_x) contraction at " + x.str());
    }

    const auto pair_sample = detail::subsample(grid, 12);
    const bool full_pairs = grid.size() * grid.size() <= 2000;
    const auto& pair_set = full_pairs ? grid : pair_sample;
    for (const auto& x : pair_set)
        for (const auto& y : pair_set) {
            const auto got = trig.d(0, MultiIndex::unit(x) + MultiIndex::unit(y)).to_rational();
            res.expect(got.has_value() && *got == d0_two(k, x, y), "d(0, l_x + l_y) at " + x.str() + y.str());
        }

    const bool full_triples = grid.size() * grid.size() * grid.size() <= 2000;
    const auto& triple_set = full_triples ? grid : detail::subsample(grid, 6);
    for (const auto& x : triple_set)
        for (const auto& y : triple_set)
            for (const auto& z : triple_set) {
                const auto got =
                    trig.d(0, MultiIndex::unit(x) + MultiIndex::unit(y) + MultiIndex::unit(z)).to_rational();
                res.expect(got.has_value() && *got == tensor.value(x, y, z),
                           "fusion tensor at " + x.str() + y.str() + z.str());
            }

    // D1 against the trig route d(1, l_x + l_y)
    const FusionMatrix d1 = fusion_matrix_from(tensor);
    for (const auto& x : pair_set)
        for (const auto& y : pair_set) {
            const auto got = trig.d(1, MultiIndex::unit(x) + MultiIndex::unit(y)).to_rational();
            res.expect(got.has_value() && *got == d1.at(x, y), "D1 vs trig at " + x.str() + y.str());
        }
    return res;
}

/// Both fusion-rule recurrences, on the trig route and the rational route.
inline CheckResult check_fusion_rules(const TorusKnot& k, TrigEvaluator& trig, RationalEvaluator& rat, int g_cap = 2,
                                      std::size_t n_cap = 64) {
    CheckResult res{"fusion_rules"};
    const auto grid = grid_indices(k);

    std::vector<MultiIndex> ns;
    ns.emplace_back();
    for (const auto& x : grid) ns.push_back(MultiIndex::unit(x));
    for (std::size_t i = 0; i < grid.size(); ++i)
        for (std::size_t j = i; j < grid.size(); ++j)
            ns.push_back(MultiIndex::unit(grid[i]) + MultiIndex::unit(grid[j]));
    ns = detail::subsample(ns, n_cap);

    const int N = k.field_order();
    for (const auto& n : ns)
        for (int g = 0; g <= g_cap; ++g) {
            Cyclotomic lhs = Cyclotomic::zero(N);
            Rational lhs_rat(0);
            for (const auto& x : grid) {
                MultiIndex shifted = n;
                shifted.add(x, 2);
                lhs += trig.d(g, shifted);
                lhs_rat += rat.d(g, shifted);
            }
            res.expect(lhs == trig.d(g + 1, n), "rule (1) trig at g=" + std::to_string(g) + ", n=" + n.str());
            res.expect(lhs_rat == rat.d(g + 1, n), "rule (1) rational at g=" + std::to_string(g) + ", n=" + n.str());
        }

    const auto pair_ns = detail::subsample(ns, 24);
    for (const auto& n : pair_ns)
        for (const auto& n2 : pair_ns)
            for (int g = 0; g <= g_cap; ++g)
                for (int g2 = 0; g2 <= g_cap; ++g2) {
                    Cyclotomic lhs = Cyclotomic::zero(N);
                    Rational lhs_rat(0);
                    for (const auto& x : grid) {
                        MultiIndex na = n;
                        na.add(x);
                        MultiIndex nb = n2;
                        nb.add(x);
                        lhs += trig.d(g, na) * trig.d(g2, nb);
                        lhs_rat += rat.d(g, na) * rat.d(g2, nb);
                    }
                    res.expect(lhs == trig.d(g + g2, n + n2),
                               "rule (2) trig at g=" + std::to_string(g) + "," + std::to_string(g2));
                    res.expect(lhs_rat == rat.d(g + g2, n + n2),
                               "rule (2) rational at g=" + std::to_string(g) + "," + std::to_string(g2));
                }
    return res;
}

/// d_rational == to_rational(verlinde_knot_trig) wherever both run; the trig
/// sum being rational at all (a Galois-stable sum) is part of the check.
inline CheckResult check_dual_route(const TorusKnot& k, TrigEvaluator& trig, RationalEvaluator& rat, int g_max) {
    CheckResult res{"dual_route"};
    const auto grid = grid_indices(k);
    for (int g = 0; g <= g_max; ++g) {
        const auto got = trig.d(g, MultiIndex()).to_rational();
        res.expect(got.has_value(), "trig d(g,0) irrational at g=" + std::to_string(g));
        res.expect(got.has_value() && *got == rat.d(g, MultiIndex()), "routes differ at g=" + std::to_string(g));
    }
    const auto singles = detail::subsample(grid, 36);
    for (const auto& x : singles)
        for (int g = 0; g <= std::min(g_max, 3); ++g) {
            const auto got = trig.d(g, MultiIndex::unit(x)).to_rational();
            res.expect(got.has_value() && *got == rat.d(g, MultiIndex::unit(x)),
                       "routes differ at g=" + std::to_string(g) + ", n=l" + x.str());
        }
    const auto doubles = detail::subsample(grid, 6);
    for (const auto& x : doubles)
        for (const auto& y : doubles)
            for (int g = 0; g <= std::min(g_max, 2); ++g) {
                const MultiIndex n = MultiIndex::unit(x) + MultiIndex::unit(y);
                const auto got = trig.d(g, n).to_rational();
                res.expect(got.has_value() && *got == rat.d(g, n), "routes differ at weight 2");
            }
    return res;
}

/// 2^(g-2) d(g,0): integer, and equal to the honest torsion power sum.
inline CheckResult check_integrality(const TorusKnot& k, RationalEvaluator& rat, int g_max) {
    CheckResult res{"integrality"};
    const auto sums = torsion_power_sums(k, g_max);
    for (int g = 0; g <= g_max; ++g) {
        const Rational value = pow2(g - 2) * rat.d(g, MultiIndex());
        res.expect(value.is_integer(), "2^(g-2) d(g,0) not integer at g=" + std::to_string(g));
        const auto& ts = sums[static_cast<std::size_t>(g)].rational;
        res.expect(ts.has_value() && *ts == value, "torsion route disagrees at g=" + std::to_string(g));
        // the denominator bound d(g,0) in (1/2)^(g-2) Z
        res.expect((rat.d(g, MultiIndex()) * pow2(std::max(0, g - 2))).is_integer(),
                   "denominator bound at g=" + std::to_string(g));
    }
    return res;
}

/// S-matrix symmetry, orthogonality, and the torsion relation 2 tau S^2 = 1.
inline CheckResult check_s_matrix(const TorusKnot& k) {
    CheckResult res{"s_matrix"};
    const SMatrix S = s_matrix(k);
    const auto grid = grid_indices(k);
    for (const auto& x : detail::subsample(grid, 16))
        for (const auto& y : detail::subsample(grid, 16))
            res.expect(std::abs(S.entry(x, y) - S.entry(y, x)) == 0.0, "symmetry at " + x.str() + y.str());
    for (const auto& x : grid)
        for (const auto& y : grid) {
            double acc = 0.0;
            for (const auto& z : grid) acc += S.entry(z, x) * S.entry(z, y);
            const double want = (x == y) ? 2.0 : 0.0;
            res.expect(std::abs(acc - want) < 1e-9, "orthogonality at " + x.str() + y.str());
        }
    for (const auto& c : components(k)) {
        res.expect(torsion_s_matrix_relation_check(k, c), "2 tau S^2 = 1 (float) at " + c.str());
        const Cyclotomic product =
            Rational(2) * adjoint_torsion(k, c).exact * S.entry_sq_exact({c.a, c.b}, {1, 1});
        res.expect(product == Cyclotomic::one(k.field_order()), "2 tau S^2 = 1 (exact) at " + c.str());
    }
    return res;
}

struct VerifyOptions {
    int g_max = 6;
    bool inject_fusion_fault = false;  // test hook: flips one N_{xyz}
};

/// The full invariant suite for one knot, one CheckResult per group.
inline std::vector<CheckResult> verify_knot(const TorusKnot& k, const VerifyOptions& opt = {}) {
    FusionTensor tensor(k);
    if (opt.inject_fusion_fault) {
        const auto grid = grid_indices(k);
        tensor.flip(grid.front(), grid.front(), grid.front());
    }
    TrigEvaluator trig(k);
    RationalEvaluator rat(tensor);

    std::vector<CheckResult> results;
    results.push_back(check_geometry(k));
    results.push_back(check_chebyshev_identities(std::max({12, k.p(), k.q()})));
    results.push_back(check_hessian_torsion(k));
    results.push_back(check_initial_values(k, trig, tensor));
    results.push_back(check_fusion_rules(k, trig, rat, std::min(2, opt.g_max)));
    results.push_back(check_dual_route(k, trig, rat, opt.g_max));
    results.push_back(check_integrality(k, rat, opt.g_max));
    results.push_back(check_s_matrix(k));
    return results;
}

}  // namespace verknot
