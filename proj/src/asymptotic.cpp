#include "jlab/asymptotic.hpp"

#include <stdexcept>

namespace jlab {

namespace {

/// E evaluated at U_0 = u0, U_D = -D z, all other tags 0, as a poly in z.
UniPoly evaluate_branch(const TagPoly& e, const GaussRat& u0, int D) {
    std::vector<GaussRat> coeffs;
    const GaussRat minus_d(-D);
    for (const auto& t : e.terms()) {
        bool survives = true;
        for (std::size_t k = 1; k < t.mono.u.size(); ++k)
            if (static_cast<int>(k) != D && t.mono.u[k] > 0) {
                survives = false;
                break;
            }
        if (!survives) continue;
        GaussRat c = t.coeff;
        for (int e0 = 0; e0 < t.mono.u[0]; ++e0) c *= u0;
        int dz = t.mono.u[static_cast<std::size_t>(D)];
        for (int k = 0; k < dz; ++k) c *= minus_d;
        if (static_cast<std::size_t>(dz) >= coeffs.size())
            coeffs.resize(static_cast<std::size_t>(dz) + 1);
        coeffs[static_cast<std::size_t>(dz)] += c;
    }
    return UniPoly(std::move(coeffs));
}

/// s-th roots of unity that are exactly representable in Q(i).
std::vector<GaussRat> representable_roots(int s) {
    std::vector<GaussRat> roots = {GaussRat(1)};
    if (s % 2 == 0) roots.push_back(GaussRat(-1));
    if (s % 4 == 0) {
        roots.push_back(GaussRat::i());
        roots.push_back(-GaussRat::i());
    }
    return roots;
}

}  // namespace

int branch_index(const Recognition& rec) {
    int d = std::max(rec.E_f.max_used_tag(), rec.E_g.max_used_tag());
    if (d < 1) throw std::logic_error("recognition uses no tag beyond U_0");
    return d;
}

CurveSet asymptotic_curves(const Recognition& rec) {
    CurveSet out;
    const int D = branch_index(rec);
    if (rec.family.r >= 2) {
        AsymptoticCurve c;
        c.P = evaluate_branch(rec.E_f, GaussRat(0), D);
        c.Q = evaluate_branch(rec.E_g, GaussRat(0), D);
        c.D = D;
        c.root_of_unity_order = rec.family.s;
        c.u0_value = GaussRat(0);
        c.extension = false;
        c.family = rec.family;
        out.curves.push_back(std::move(c));
        return out;
    }
    const auto roots = representable_roots(rec.family.s);
    out.inexact_roots_skipped = rec.family.s - static_cast<int>(roots.size());
    for (const auto& zeta : roots) {
        AsymptoticCurve c;
        c.P = evaluate_branch(rec.E_f, zeta, D);
        c.Q = evaluate_branch(rec.E_g, zeta, D);
        c.D = D;
        c.root_of_unity_order = rec.family.s;
        c.u0_value = zeta;
        c.extension = true;
        c.family = rec.family;
        out.curves.push_back(std::move(c));
    }
    return out;
}

std::pair<Complex, Complex> curve_sample(const AsymptoticCurve& curve, Complex z) {
    return {curve.P.eval(z), curve.Q.eval(z)};
}

}  // namespace jlab
