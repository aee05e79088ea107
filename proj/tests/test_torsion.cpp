#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "verknot/torsion.hpp"

using namespace verknot;

TEST_CASE("trefoil torsion is exactly 1/2") {
    const TorusKnot k = make_knot(2, 3);
    const auto tau = adjoint_torsion(k, {1, 1});
    CHECK(tau.exact.to_rational() == Rational(1, 2));
    CHECK_THAT(tau.value, Catch::Matchers::WithinAbs(0.5, 1e-12));
}

TEST_CASE("T(2,5) torsion floats: (5 +- sqrt 5)/4") {
    const TorusKnot k = make_knot(2, 5);
    CHECK_THAT(adjoint_torsion(k, {1, 1}).value, Catch::Matchers::WithinAbs(1.8090169943749475, 1e-9));
    CHECK_THAT(adjoint_torsion(k, {1, 3}).value, Catch::Matchers::WithinAbs((5.0 - std::sqrt(5.0)) / 4.0, 1e-9));
}

TEST_CASE("torsion values: positive, real, float-consistent") {
    for (int q = 3; q <= 15; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            if (static_cast<long>(p) * q > 60) continue;  // the full sweep runs in the acceptance suite
            const TorusKnot k = make_knot(p, q);
            for (const auto& c : components(k)) {
                const auto tau = adjoint_torsion(k, c);
                CHECK(tau.value > 0.0);
                CHECK(std::abs(tau.exact.embed_float().imag()) < 1e-12);
                CHECK(std::abs(tau.exact.embed_float().real() - tau.value) < 1e-10);
            }
        }
}

TEST_CASE("trefoil Hessian is exactly -12") {
    const TorusKnot k = make_knot(2, 3);
    const Cyclotomic h = hessian_at(k, {1, 1});
    CHECK(h.to_rational() == Rational(-12));
    // closed form -p^2 q^2 / (4 sin^2 sin^2) = -36/3
    CHECK(torsion_from_hessian(k, {1, 1}).exact.to_rational() == Rational(1, 2));
}

TEST_CASE("Hessian theorem: both torsion routes agree exactly (p, q <= 9)") {
    for (int q = 3; q <= 9; ++q)
        for (int p = 2; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            const TorusKnot k = make_knot(p, q);
            for (const auto& c : components(k)) {
                CHECK(adjoint_torsion(k, c).exact == torsion_from_hessian(k, c).exact);
                CHECK(hessian_at(k, c).embed_float().real() < 0.0);
            }
        }
}

TEST_CASE("Hessian closed form -p^2 q^2/(4 sin^2(a pi/p) sin^2(b pi/q))") {
    for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}, {4, 7}}) {
        const TorusKnot k = make_knot(p, q);
        const int N = k.field_order();
        for (const auto& c : components(k)) {
            const Cyclotomic closed = Rational(-static_cast<long>(p) * p * q * q, 4) *
                                      (sin_sq_pi_frac(c.a, p, N) * sin_sq_pi_frac(c.b, q, N)).inverse();
            CHECK(hessian_at(k, c) == closed);
        }
    }
}

TEST_CASE("trefoil power sums are identically 1 for g <= 10") {
    const TorusKnot k = make_knot(2, 3);
    for (const auto& ps : torsion_power_sums(k, 10)) CHECK(ps.rational == Rational(1));
    CHECK(torsion_power_sum(k, 7).rational == Rational(1));
}

TEST_CASE("T(2,5) power sums: g=2 gives 5, g=3 gives 15") {
    const TorusKnot k = make_knot(2, 5);
    CHECK(torsion_power_sum(k, 2).rational == Rational(5));
    CHECK(torsion_power_sum(k, 3).rational == Rational(15));
    // batch equals the individual calls
    const auto table = torsion_power_sums(k, 3);
    CHECK(table[2].rational == Rational(5));
    CHECK(table[3].rational == Rational(15));
    CHECK(table[0].rational == Rational(1));
}

TEST_CASE("g = 0 power sum equals 1 (sample; full sweep in acceptance)") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 7}, {3, 5}, {4, 5}, {5, 6}}) {
        const auto ps = torsion_power_sum(make_knot(p, q), 0);
        REQUIRE(ps.rational.has_value());
        CHECK(*ps.rational == Rational(1));
    }
}

TEST_CASE("power sums are always rational (Galois-stable sums)") {
    for (auto [p, q] : {std::pair{2, 5}, {3, 4}, {3, 5}}) {
        for (const auto& ps : torsion_power_sums(make_knot(p, q), 5)) CHECK(ps.rational.has_value());
    }
}

TEST_CASE("torsion-S-matrix relation 2 tau S^2 = 1") {
    for (auto [p, q] : {std::pair{2, 3}, {2, 5}, {3, 5}, {4, 7}, {5, 8}}) {
        const TorusKnot k = make_knot(p, q);
        for (const auto& c : components(k)) CHECK(torsion_s_matrix_relation_check(k, c));
    }
}

TEST_CASE("invalid inputs") {
    const TorusKnot k = make_knot(2, 3);
    CHECK_THROWS_AS(adjoint_torsion(k, ComponentIndex{1, 2}), std::invalid_argument);  // parity
    CHECK_THROWS_AS(adjoint_torsion(k, ComponentIndex{0, 1}), std::invalid_argument);  // range
    CHECK_THROWS_AS(torsion_power_sum(k, -1), std::invalid_argument);
}
