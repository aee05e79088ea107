#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace verknot {

/// Index into the open grid 0 < a < p, 0 < b < q attached to a (p,q) pair.
struct GridIndex {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const GridIndex&, const GridIndex&) = default;
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

/// Grid index with the component parity constraint a == b (mod 2); labels
/// one component of the irreducible character variety.
struct ComponentIndex {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const ComponentIndex&, const ComponentIndex&) = default;
    GridIndex grid() const { return {a, b}; }
    std::string str() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }
};

inline void check_grid_index(int p, int q, const GridIndex& x) {
    if (x.a <= 0 || x.a >= p || x.b <= 0 || x.b >= q)
        throw std::invalid_argument("grid index " + x.str() + " outside 0<a<" + std::to_string(p) + ", 0<b<" +
                                    std::to_string(q));
}

inline void check_component_index(int p, int q, const ComponentIndex& c) {
    check_grid_index(p, q, {c.a, c.b});
    if ((c.a - c.b) % 2 != 0)
        throw std::invalid_argument("component index " + c.str() + " violates a == b (mod 2)");
}

}  // namespace verknot
