#pragma once

#include <cstdlib>
#include <stdexcept>

#include "verknot/polynomial.hpp"

namespace verknot {

/// Chebyshev-like polynomial of the first kind in the normalization
/// C_{k+1}(z) = z*C_k(z) - C_{k-1}(z), C_0 = 2, C_1 = z, so that
/// C_k(w + 1/w) = w^k + w^{-k}. Negative k maps to |k| (C is even in k).
inline Polynomial chebyshev_first(long k) {
    k = std::labs(k);
    Polynomial prev = Polynomial::constant(Rational(2));
    if (k == 0) return prev;
    Polynomial cur = Polynomial::x();
    for (long i = 1; i < k; ++i) {
        Polynomial next = Polynomial::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Second kind: S_{k+1}(z) = z*S_k(z) - S_{k-1}(z), S_0 = 1, S_1 = z, so that
/// S_k(w + 1/w) = (w^{k+1} - w^{-(k+1)})/(w - 1/w). Defined for k >= 0 only.
inline Polynomial chebyshev_second(long k) {
    if (k < 0) throw std::invalid_argument("chebyshev_second: negative index");
    Polynomial prev = Polynomial::constant(Rational(1));
    if (k == 0) return prev;
    Polynomial cur = Polynomial::x();
    for (long i = 1; i < k; ++i) {
        Polynomial next = Polynomial::x() * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace verknot
