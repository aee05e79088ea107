#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "verknot/charvar.hpp"

using namespace verknot;

TEST_CASE("make_knot: normalization and meridian data") {
    const TorusKnot k23 = make_knot(2, 3);
    CHECK(k23.r() == 1);
    CHECK(k23.s() == 2);  // 2*2 - 3*1 = 1
    const TorusKnot k35 = make_knot(3, 5);
    CHECK(k35.r() == 1);
    CHECK(k35.s() == 2);  // 3*2 - 5*1 = 1
    CHECK(make_knot(3, 2) == k23);    // order normalized to p < q
    CHECK(make_knot(-2, 3) == k23);   // sign normalized
    CHECK(make_knot(5, -3) == k35);
    CHECK_THROWS_AS(make_knot(4, 6), std::invalid_argument);
    CHECK_THROWS_AS(make_knot(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(make_knot(0, 3), std::invalid_argument);
}

TEST_CASE("meridian identity ps - qr = 1 with 0 <= r < p, all small knots") {
    for (int q = 3; q <= 15; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const TorusKnot k = make_knot(p, q);
            CHECK(static_cast<long>(k.p()) * k.s() - static_cast<long>(k.q()) * k.r() == 1);
            CHECK(k.r() >= 0);
            CHECK(k.r() < k.p());
        }
}

TEST_CASE("components: parity-matched grid labels") {
    CHECK(components(make_knot(2, 3)) == std::vector<ComponentIndex>{{1, 1}});
    CHECK(components(make_knot(2, 5)) == std::vector<ComponentIndex>{{1, 1}, {1, 3}});
    CHECK(components(make_knot(3, 5)).size() == 4);
    for (int q = 3; q <= 15; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const TorusKnot k = make_knot(p, q);
            CHECK(static_cast<int>(components(k).size()) == (p - 1) * (q - 1) / 2);
        }
}

TEST_CASE("excluded traces of the trefoil: +-sqrt(3)") {
    const TorusKnot k = make_knot(2, 3);
    const auto excl = excluded_traces(k, {1, 1});
    // angles r/p +- s*1/q: 1/2 + 2/3 = 7/6 and 1/2 - 2/3 = -1/6
    CHECK_THAT(excl.plus_float.real(), Catch::Matchers::WithinAbs(-std::sqrt(3.0), 1e-12));
    CHECK_THAT(excl.minus_float.real(), Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
    CHECK(excl.plus != excl.minus);
}

TEST_CASE("excluded traces: always distinct, bounded by 2, imaginary-free") {
    for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {4, 9}, {5, 8}}) {
        const TorusKnot k = make_knot(p, q);
        for (const auto& c : components(k)) {
            const auto excl = excluded_traces(k, c);
            CHECK(excl.plus != excl.minus);
            CHECK(std::abs(excl.plus_float.real()) <= 2.0 + 1e-12);
            CHECK(std::abs(excl.minus_float.real()) <= 2.0 + 1e-12);
            CHECK(std::abs(excl.plus_float.imag()) < 1e-12);
            CHECK(std::abs(excl.minus_float.imag()) < 1e-12);
        }
    }
}

TEST_CASE("solve_trace_param: substitution-checked and equal to excluded traces") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 5}, {4, 5}}) {
        const TorusKnot k = make_knot(p, q);
        for (const auto& c : components(k)) {
            const auto sols = solve_trace_param(k, c);  // throws if substitution fails
            const auto excl = excluded_traces(k, c);
            const bool eq = (sols.plus == excl.plus && sols.minus == excl.minus) ||
                            (sols.plus == excl.minus && sols.minus == excl.plus);
            CHECK(eq);
        }
    }
}

TEST_CASE("curve_param anchors for the trefoil") {
    const TorusKnot k = make_knot(2, 3);
    const auto at2 = curve_param(k, Rational(2));
    CHECK(at2.X == Rational(2));   // C_3(2) = 2
    CHECK(at2.Y == Rational(2));   // C_2(2) = 2
    CHECK(at2.Z0 == Rational(9));  // C'_3(2) = 9
    CHECK(at2.Z1 == Rational(4));  // C'_2(2) = 4
    const auto at0 = curve_param(k, Rational(0));
    CHECK(at0.X == Rational(0));
    CHECK(at0.Y == Rational(-2));
    CHECK(at0.Z0 == Rational(-3));
    CHECK(at0.Z1 == Rational(0));
}

TEST_CASE("curve_param lands on the curve for random rational t") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 5);
    for (auto [p, q] : {std::pair{2, 3}, {3, 4}, {3, 5}}) {
        const TorusKnot k = make_knot(p, q);
        const auto cp = curve_polynomials(p, q);
        for (int trial = 0; trial < 10; ++trial) {
            const Rational t(num(rng), den(rng));
            const auto pt = curve_param(k, t);
            CHECK(cp.F(pt.X, pt.Y).is_zero());
            CHECK((cp.FX(pt.X, pt.Y) * pt.Z0 + cp.FY(pt.X, pt.Y) * pt.Z1).is_zero());
        }
    }
}

TEST_CASE("exceptional intersections of the trefoil: [3 : +-sqrt(3)]") {
    const TorusKnot k = make_knot(2, 3);
    const auto ex = exceptional_intersections(k, {1, 1});
    CHECK_THAT(ex.plus[0].real(), Catch::Matchers::WithinAbs(3.0, 1e-12));
    CHECK_THAT(ex.plus[1].real(), Catch::Matchers::WithinAbs(std::sqrt(3.0), 1e-12));
    CHECK_THAT(ex.minus[1].real(), Catch::Matchers::WithinAbs(-std::sqrt(3.0), 1e-12));
    CHECK(std::abs(ex.plus[1]) > 0);   // never [1:0]
    CHECK(std::abs(ex.minus[1]) > 0);
}

TEST_CASE("exceptional intersections match curve_param projectively") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 5}}) {
        const TorusKnot k = make_knot(p, q);
        for (const auto& c : components(k)) {
            const auto ex = exceptional_intersections(k, c);
            const auto sols = solve_trace_param(k, c);
            // exact: t_minus meets the + point, t_plus the - point
            const auto at_minus = curve_param(k, sols.minus);
            const auto at_plus = curve_param(k, sols.plus);
            CHECK((at_minus.Z0 * ex.z1_plus_exact - at_minus.Z1 * ex.z0_exact).is_zero());
            CHECK((at_plus.Z0 * ex.z1_minus_exact - at_plus.Z1 * ex.z0_exact).is_zero());
            // float proportionality within 1e-9
            const auto fm = curve_param(k, std::complex<double>(sols.minus_float));
            const double scale = std::abs(fm.Z0) + std::abs(fm.Z1) + std::abs(ex.plus[0]) + 1.0;
            CHECK(std::abs(fm.Z0 * ex.plus[1] - fm.Z1 * ex.plus[0]) < 1e-9 * scale);
        }
    }
}

TEST_CASE("moebius map: the three exceptional endpoint mappings") {
    for (auto [p, q] : {std::pair{2, 3}, {3, 5}, {2, 7}}) {
        const TorusKnot k = make_knot(p, q);
        for (const auto& c : components(k)) {
            const auto ex = exceptional_intersections(k, c);
            const auto excl = excluded_traces(k, c);
            const auto vm = moebius_phi(k, c, ex.minus[0], ex.minus[1]);
            REQUIRE(vm.kind == PhiValue::Kind::excluded_minus);
            CHECK(std::abs(vm.value - excl.minus_float) < 1e-9);
            const auto vp = moebius_phi(k, c, ex.plus[0], ex.plus[1]);
            REQUIRE(vp.kind == PhiValue::Kind::excluded_plus);
            CHECK(std::abs(vp.value - excl.plus_float) < 1e-9);
            const auto vi = moebius_phi(k, c, 1.0, 0.0);
            CHECK(vi.kind == PhiValue::Kind::infinite);
            CHECK(vi.is_boundary());
        }
    }
}

TEST_CASE("moebius map: regular points give finite values, [0:0] rejected") {
    const TorusKnot k = make_knot(2, 3);
    const auto v = moebius_phi(k, {1, 1}, 1.0, 1.0);
    CHECK(v.kind == PhiValue::Kind::regular);
    CHECK(std::isfinite(v.value.real()));
    CHECK_THROWS_AS(moebius_phi(k, {1, 1}, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(moebius_phi(k, {2, 1}, 1.0, 1.0), std::invalid_argument);  // bad component
}

TEST_CASE("reducible traces: C_k composed with the meridian trace") {
    const TorusKnot k = make_knot(2, 3);
    CHECK(reducible_trace(k, 1, Rational(7, 3)) == Rational(7, 3));
    CHECK(reducible_trace(k, 0, Rational(5)) == Rational(2));
    const double t = 2.0 * std::cos(0.3);
    CHECK_THAT(reducible_trace(k, 3, t), Catch::Matchers::WithinAbs(2.0 * std::cos(0.9), 1e-12));
    CHECK_THAT(reducible_trace(k, -3, t), Catch::Matchers::WithinAbs(2.0 * std::cos(0.9), 1e-12));
    // tr_alpha = C_q(tr_mu), tr_beta = C_p(tr_mu) on the reducible part
    CHECK_THAT(reducible_trace(k, k.q(), t), Catch::Matchers::WithinAbs(2.0 * std::cos(3 * 0.3), 1e-12));
    CHECK_THAT(reducible_trace(k, k.p(), t), Catch::Matchers::WithinAbs(2.0 * std::cos(2 * 0.3), 1e-12));
}
