// A short tour of the library on the trefoil knot T(2,3): its character
// variety data, torsion, and the first few Verlinde numbers.

#include <cstdio>

#include "verknot/charvar.hpp"
#include "verknot/torsion.hpp"
#include "verknot/verlinde.hpp"

using namespace verknot;

int main() {
    const TorusKnot k = make_knot(2, 3);
    std::printf("%s with meridian mu = a^-%d b^%d\n", k.name().c_str(), k.r(), k.s());

    for (const auto& c : components(k)) {
        const auto tau = adjoint_torsion(k, c);
        const auto excl = excluded_traces(k, c);
        std::printf("component (%d,%d): torsion %s, tr_mu omits %.6f and %.6f\n", c.a, c.b,
                    tau.exact.to_rational()->str().c_str(), excl.minus_float.real(), excl.plus_float.real());
    }

    std::printf("power sums of 2*torsion over the level set:\n");
    for (const auto& ps : torsion_power_sums(k, 6))
        std::printf("  g=%d  sum=%s\n", ps.g, ps.rational->str().c_str());

    std::printf("Verlinde numbers d(g, 0), fusion route vs sine sums:\n");
    RationalEvaluator rational(k);
    TrigEvaluator trig(k);
    for (int g = 0; g <= 6; ++g) {
        const Rational via_fusion = rational.d(g, MultiIndex());
        const Rational via_trig = *trig.d(g, MultiIndex()).to_rational();
        std::printf("  g=%d  %s %s\n", g, via_fusion.str().c_str(), via_fusion == via_trig ? "(agree)" : "(DISAGREE)");
    }
    return 0;
}
