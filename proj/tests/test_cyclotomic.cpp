#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include "verknot/cyclotomic.hpp"

using namespace verknot;

namespace {

/// Independent oracle for Phi_N: multiply (x - zeta^k) over primitive k in
/// complex arithmetic and round the (provably integer) coefficients.
std::vector<long> cyclotomic_by_roots(int N) {
    std::vector<std::complex<double>> coeffs{1.0};
    for (int k = 1; k <= N; ++k) {
        if (std::gcd(k, N) != 1) continue;
        const double theta = 2.0 * std::numbers::pi * k / N;
        const std::complex<double> root{std::cos(theta), std::sin(theta)};
        std::vector<std::complex<double>> next(coeffs.size() + 1, 0.0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * root;
        }
        coeffs = std::move(next);
    }
    std::vector<long> out;
    for (const auto& c : coeffs) out.push_back(std::lround(c.real()));
    return out;
}

Cyclotomic random_element(std::mt19937& rng, int N, int max_terms = 3) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::uniform_int_distribution<int> k(0, N - 1);
    Cyclotomic u = Cyclotomic::zero(N);
    for (int t = 0; t < max_terms; ++t)
        u += Cyclotomic::root_of_unity(N, k(rng)) * Rational(num(rng), den(rng));
    return u;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: base cases and the recursive division") {
    CHECK(cyclotomic_polynomial(1) == Polynomial({-1, 1}));  // x - 1
    CHECK(cyclotomic_polynomial(2) == Polynomial({1, 1}));   // x + 1
    CHECK(cyclotomic_polynomial(4) == Polynomial({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == Polynomial({1, -1, 1}));
    // x^4 - x^2 + 1, frozen from the root-product oracle
    CHECK(cyclotomic_polynomial(12) == Polynomial({1, 0, -1, 0, 1}));
    for (int N : {3, 8, 12, 15, 30, 36}) {
        const auto oracle = cyclotomic_by_roots(N);
        const auto got = cyclotomic_polynomial(N);
        REQUIRE(got.degree() + 1 == static_cast<int>(oracle.size()));
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(got.coeff(static_cast<int>(i)) == Rational(oracle[i]));
    }
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("degree equals Euler phi and Phi_N kills zeta_N, N <= 60") {
    for (int N = 1; N <= 60; ++N) {
        const Polynomial phi = cyclotomic_polynomial(N);
        CHECK(phi.degree() == euler_phi(N));
        CHECK(phi.leading() == Rational(1));
        const Cyclotomic zeta = Cyclotomic::root_of_unity(N, 1);
        CHECK(eval(phi, zeta).is_zero());
    }
}

TEST_CASE("basic arithmetic anchors") {
    const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(i4 * i4 == Cyclotomic::constant(4, Rational(-1)));  // zeta_4^2 = -1
    const Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
    CHECK(z6 + Cyclotomic::root_of_unity(6, -1) == Cyclotomic::one(6));  // 2cos(pi/3) = 1
    std::mt19937 rng(7);
    const Cyclotomic u = random_element(rng, 12);
    CHECK(u + Cyclotomic::zero(12) == u);
}

TEST_CASE("order mismatch is an error, never a coercion") {
    const Cyclotomic a = Cyclotomic::one(4);
    const Cyclotomic b = Cyclotomic::one(6);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a == b, std::invalid_argument);
}

TEST_CASE("inverse: anchors and the defining property") {
    CHECK(Cyclotomic::one(8).inverse() == Cyclotomic::one(8));
    const Cyclotomic i4 = Cyclotomic::root_of_unity(4, 1);
    CHECK(i4.inverse() == -i4);  // zeta_4 * (-zeta_4) = 1
    CHECK_THROWS_AS(Cyclotomic::zero(4).inverse(), std::domain_error);
    std::mt19937 rng(11);
    for (int N : {5, 8, 12, 30, 35}) {
        for (int trial = 0; trial < 8; ++trial) {
            const Cyclotomic u = random_element(rng, N);
            if (u.is_zero()) continue;
            CHECK(u * u.inverse() == Cyclotomic::one(N));
        }
    }
}

TEST_CASE("roots of unity: reduction, inverse pairs, exponent wrapping") {
    CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic::constant(4, Rational(-1)));
    for (int N : {5, 9, 12}) {
        CHECK(Cyclotomic::root_of_unity(N, 0) == Cyclotomic::one(N));
        for (int k = 1; k < N; ++k) {
            CHECK(Cyclotomic::root_of_unity(N, k) * Cyclotomic::root_of_unity(N, N - k) == Cyclotomic::one(N));
            CHECK(Cyclotomic::root_of_unity(N, k) == Cyclotomic::root_of_unity(N, k - N));
        }
    }
}

TEST_CASE("cos_pi_frac and sin_sq_pi_frac anchors") {
    CHECK(cos_pi_frac(1, 3, 12).to_rational() == Rational(1, 2));  // cos(pi/3)
    CHECK(cos_pi_frac(1, 2, 12).to_rational() == Rational(0));     // cos(pi/2)
    const Cyclotomic c5 = cos_pi_frac(1, 5, 20);
    CHECK_THAT(c5.embed_float().real(), Catch::Matchers::WithinAbs(0.8090169943749475, 1e-12));
    CHECK(sin_sq_pi_frac(1, 2, 8).to_rational() == Rational(1));
    CHECK(sin_sq_pi_frac(1, 3, 12).to_rational() == Rational(3, 4));
    // sin^2(pi/5) = (5 - sqrt 5)/8
    CHECK_THAT(sin_sq_pi_frac(1, 5, 20).embed_float().real(),
               Catch::Matchers::WithinAbs((5.0 - std::sqrt(5.0)) / 8.0, 1e-12));
    CHECK_THROWS_AS(cos_pi_frac(1, 5, 12), std::invalid_argument);  // 10 does not divide 12
    CHECK_THROWS_AS(sin_sq_pi_frac(1, 5, 12), std::invalid_argument);
}

TEST_CASE("real-subfield closure of cos and sin^2") {
    for (int n : {3, 5, 7, 12}) {
        for (int a = 1; a < n; ++a) {
            CHECK(std::abs(cos_pi_frac(a, n, 4 * n).embed_float().imag()) < 1e-12);
            CHECK(std::abs(sin_sq_pi_frac(a, n, 4 * n).embed_float().imag()) < 1e-12);
        }
    }
}

TEST_CASE("to_rational: structural rationality detection") {
    CHECK(Cyclotomic::constant(12, Rational(4)).to_rational() == Rational(4));
    CHECK_FALSE(Cyclotomic::root_of_unity(5, 1).to_rational().has_value());
    // to_rational after embedding a rational constant is the identity
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int i = 0; i < 50; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Cyclotomic::constant(30, r).to_rational() == r);
    }
}

TEST_CASE("embed_float anchors and multiplicativity") {
    CHECK_THAT(Cyclotomic::one(8).embed_float().real(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    const auto i = Cyclotomic::root_of_unity(4, 1).embed_float();
    CHECK_THAT(i.real(), Catch::Matchers::WithinAbs(0.0, 1e-12));
    CHECK_THAT(i.imag(), Catch::Matchers::WithinAbs(1.0, 1e-12));
    std::mt19937 rng(13);
    for (int N : {7, 12, 30}) {
        for (int trial = 0; trial < 12; ++trial) {
            const Cyclotomic u = random_element(rng, N);
            const Cyclotomic v = random_element(rng, N);
            const auto lhs = (u * v).embed_float();
            const auto rhs = u.embed_float() * v.embed_float();
            const double bound = 1e-9 * (1.0 + std::abs(u.embed_float()) * std::abs(v.embed_float()));
            CHECK(std::abs(lhs - rhs) < bound);
        }
    }
}

TEST_CASE("field axioms on random inputs") {
    std::mt19937 rng(101);
    for (int N : {8, 15, 30}) {
        for (int trial = 0; trial < 25; ++trial) {
            const Cyclotomic a = random_element(rng, N);
            const Cyclotomic b = random_element(rng, N);
            const Cyclotomic c = random_element(rng, N);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Cyclotomic::zero(N));
        }
    }
}

TEST_CASE("pow matches repeated multiplication, including negative exponents") {
    std::mt19937 rng(55);
    const Cyclotomic u = random_element(rng, 12) + Cyclotomic::one(12);
    Cyclotomic acc = Cyclotomic::one(12);
    for (int e = 0; e <= 6; ++e) {
        CHECK(u.pow(e) == acc);
        acc *= u;
    }
    if (!u.is_zero()) CHECK(u.pow(-3) == u.inverse().pow(3));
}
