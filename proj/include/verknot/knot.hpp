#pragma once

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "verknot/grid.hpp"

namespace verknot {

/// A validated (p,q) torus knot with meridian data (r,s) satisfying
/// ps - qr = 1, canonicalized to 0 <= r < p.
///
/// Input pairs are normalized to positive entries with p < q; the underlying
/// formulas are symmetric in the roles of (p,a) and (q,b), so the literature
/// convention "q odd" is not required.
class TorusKnot {
public:
    static TorusKnot make(int p, int q) { return TorusKnot(p, q); }

    int p() const { return p_; }
    int q() const { return q_; }
    int r() const { return r_; }
    int s() const { return s_; }

    /// Ambient cyclotomic order 2pq shared by every exact computation for
    /// this knot (contains e^{i pi/p}, e^{i pi/q} and e^{i pi/(pq)}).
    int field_order() const { return 2 * p_ * q_; }

    int grid_size() const { return (p_ - 1) * (q_ - 1); }
    int component_count() const { return (p_ - 1) * (q_ - 1) / 2; }

    std::string name() const { return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")"; }

    friend auto operator<=>(const TorusKnot&, const TorusKnot&) = default;

private:
    TorusKnot(int p, int q) {
        p = std::abs(p);
        q = std::abs(q);
        if (p < 2 || q < 2)
            throw std::invalid_argument("torus knot requires |p|, |q| >= 2, got (" + std::to_string(p) + "," +
                                        std::to_string(q) + ")");
        if (std::gcd(p, q) != 1)
            throw std::invalid_argument("torus knot requires coprime (p,q), got gcd(" + std::to_string(p) + "," +
                                        std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
        if (p > q) std::swap(p, q);
        p_ = p;
        q_ = q;
        // Solve ps - qr = 1 by the extended Euclidean algorithm, then shift
        // (r,s) by multiples of (p,q) into 0 <= r < p. The shift does not
        // change any excluded trace (cos is 2pi-periodic in the shifted
        // argument), so this representative is canonical.
        long a = 0, b = 0;
        ext_gcd(p_, q_, a, b);  // a*p + b*q = 1
        long s = a, r = -b;
        long k = r >= 0 ? -(r / p_) : ((p_ - 1 - r) / p_);
        r += k * p_;
        s += k * q_;
        r_ = static_cast<int>(r);
        s_ = static_cast<int>(s);
    }

    static void ext_gcd(long x, long y, long& a, long& b) {
        if (y == 0) {
            a = 1;
            b = 0;
            return;
        }
        long a1 = 0, b1 = 0;
        ext_gcd(y, x % y, a1, b1);
        a = b1;
        b = a1 - (x / y) * b1;
    }

    int p_ = 0, q_ = 0, r_ = 0, s_ = 0;
};

inline TorusKnot make_knot(int p, int q) { return TorusKnot::make(p, q); }

/// All grid indices (a,b), 0<a<p, 0<b<q, in lexicographic order.
inline std::vector<GridIndex> grid_indices(const TorusKnot& k) {
    std::vector<GridIndex> out;
    out.reserve(static_cast<std::size_t>(k.grid_size()));
    for (int a = 1; a < k.p(); ++a)
        for (int b = 1; b < k.q(); ++b) out.push_back({a, b});
    return out;
}

/// The (p-1)(q-1)/2 components of the irreducible character variety,
/// labelled by parity-matched grid indices, in lexicographic order.
inline std::vector<ComponentIndex> components(const TorusKnot& k) {
    std::vector<ComponentIndex> out;
    out.reserve(static_cast<std::size_t>(k.component_count()));
    for (int a = 1; a < k.p(); ++a)
        for (int b = 1; b < k.q(); ++b)
            if ((a - b) % 2 == 0) out.push_back({a, b});
    return out;
}

}  // namespace verknot
