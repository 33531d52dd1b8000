#pragma once

#include <vector>

#include "jlab/pertinent.hpp"
#include "jlab/unipoly.hpp"

namespace jlab {

/// Parametric branch of the asymptotic set: z -> (P(z), Q(z)).
/// D is the branch index (largest tag index the recognition depends on);
/// u0_value records the substituted value of U_0 (0 in the plain
/// r >= 2 mode, an s-th root of unity in the r = 1 extension).
struct AsymptoticCurve {
    UniPoly P;
    UniPoly Q;
    int D = 1;
    int root_of_unity_order = 1;  // the family's s
    GaussRat u0_value;
    bool extension = false;  // r = 1 branch, labeled "extension" in output
    PertinentFamily family;
};

struct CurveSet {
    std::vector<AsymptoticCurve> curves;
    /// s-th roots of unity not exactly representable in Q(i) (r = 1 only);
    /// those branches are omitted rather than approximated.
    int inexact_roots_skipped = 0;
};

/// Curve(s) for one recognition: E_f, E_g evaluated at U_i = 0 for
/// 1 <= i < D, U_D = -D z, and U_0 = 0 (r >= 2) or U_0 = zeta with
/// zeta^s = 1 (r = 1 extension, one curve per representable root).
CurveSet asymptotic_curves(const Recognition& rec);

std::pair<Complex, Complex> curve_sample(const AsymptoticCurve& curve, Complex z);

/// Branch index: the largest tag index i >= 1 on which E_f or E_g depends.
int branch_index(const Recognition& rec);

}  // namespace jlab
