#include "jlab/pertinent.hpp"

#include <numeric>
#include <stdexcept>

#include "jlab/elimination.hpp"
#include "jlab/groebner.hpp"

namespace jlab {

namespace {

/// u_i in X-dominant coordinates; Y-dominant callers swap afterwards.
BiPoly generator_x(int i, int r, int s) {
    if (i == 0) return BiPoly::var_y();
    BiPoly u = BiPoly::monomial(i, 0);
    u.add_term({i * r, i * s}, GaussRat(-1));
    return u;
}

int pure_degree(const BiPoly& p) {
    return p.at_y0().degrees().pure_x;
}

struct OrientedView {
    Orientation orientation;
    BiPoly f, g;  // x is the dominant variable in this view
};

}  // namespace

bool family_valid(const PertinentFamily& fam) {
    if (fam.r < 1 || fam.s < 1 || fam.N < 1) return false;
    if (fam.r >= 2 && std::gcd(fam.r - 1, fam.s) != 1) return false;
    return true;
}

std::vector<BiPoly> family_generators(const PertinentFamily& fam) {
    if (!family_valid(fam))
        throw std::invalid_argument("invalid pertinent family (need r = 1 or gcd(r-1, s) = 1, all of r, s, N >= 1)");
    std::vector<BiPoly> gens;
    gens.reserve(static_cast<std::size_t>(fam.N) + 1);
    for (int i = 0; i <= fam.N; ++i) {
        BiPoly u = generator_x(i, fam.r, fam.s);
        gens.push_back(fam.orientation == Orientation::XDominant ? u : u.swapped_xy());
    }
    return gens;
}

bool vanishing_curve_filter(const BiPoly& p, int r, int s) {
    const int d = r - 1, e = s;
    BiPoly reduced;
    for (const auto& [m, c] : p.terms()) {
        int a = m.x, b = m.y;
        if (d == 0) {
            if (b >= e) b = b % e;
        } else {
            while (a >= d && b >= e) {
                a -= d;
                b -= e;
            }
        }
        reduced.add_term({a, b}, c);
    }
    for (const auto& [m, c] : reduced.terms())
        if (m.x > 0) return false;
    return true;
}

std::string to_string(ClassLabel label) {
    switch (label) {
        case ClassLabel::NotC1: return "NOT_C1";
        case ClassLabel::C1MinusC2: return "C1_MINUS_C2";
        case ClassLabel::C2: return "C2";
        case ClassLabel::Undecided: return "UNDECIDED";
    }
    return "?";
}

ClassReport recognize(const PolyMap& F, const RecognizeBounds& bounds) {
    ClassReport report;
    report.good = check_good(F);

    const OrientedView views[2] = {
        {Orientation::XDominant, F.f, F.g},
        {Orientation::YDominant, F.f.swapped_xy(), F.g.swapped_xy()},
    };

    for (const auto& view : views) {
        const int N = std::max(pure_degree(view.f), pure_degree(view.g));
        if (N < 1) continue;

        const int r_max = bounds.r_max.value_or(
            std::max(1, std::max(view.f.degrees().in_x, view.g.degrees().in_x)));
        const int s_max = bounds.s_max.value_or(
            std::max(1, std::max(view.f.degrees().in_y, view.g.degrees().in_y)));

        for (int r = 1; r <= r_max; ++r) {
            for (int s = 1; s <= s_max; ++s) {
                PertinentFamily fam{view.orientation, r, s, N};
                if (!family_valid(fam)) continue;
                if (!vanishing_curve_filter(view.f, r, s) ||
                    !vanishing_curve_filter(view.g, r, s))
                    continue;

                const std::size_t ntags = static_cast<std::size_t>(N) + 1;
                std::vector<TagPoly> gens;
                for (int i = 0; i <= N; ++i) {
                    TagPoly t = TagPoly::tag(ntags, static_cast<std::size_t>(i)) -
                                TagPoly::from_bipoly(ntags, generator_x(i, r, s));
                    gens.push_back(std::move(t));
                }
                try {
                    std::vector<TagPoly> basis = groebner_basis(gens);
                    TagPoly ef = normal_form(TagPoly::from_bipoly(ntags, view.f), basis);
                    TagPoly eg = normal_form(TagPoly::from_bipoly(ntags, view.g), basis);
                    if (!ef.is_tag_only() || !eg.is_tag_only()) continue;

                    Recognition rec{fam, std::move(ef), std::move(eg)};
                    rec.f_uses_u0 = rec.E_f.uses_tag(0);
                    rec.f_uses_u1 = rec.E_f.uses_tag(1);
                    rec.g_uses_u0 = rec.E_g.uses_tag(0);
                    rec.g_uses_u1 = rec.E_g.uses_tag(1);
                    if (!(rec.f_uses_u0 && rec.f_uses_u1 && rec.g_uses_u0 && rec.g_uses_u1))
                        continue;

                    // Round-trip identity: the recognition must reproduce the
                    // map exactly.
                    std::vector<BiPoly> us = family_generators(fam);
                    if (rec.E_f.substitute_tags(us) != F.f || rec.E_g.substitute_tags(us) != F.g)
                        throw std::logic_error("recognition round-trip failed");
                    report.recognitions.push_back(std::move(rec));
                } catch (const ResourceCapExceeded&) {
                    report.undecided.push_back(fam);
                }
            }
        }
    }

    bool any_r1 = false;
    for (const auto& rec : report.recognitions) any_r1 = any_r1 || rec.family.r == 1;
    if (!report.good.is_good) {
        report.label = ClassLabel::NotC1;
    } else if (!report.recognitions.empty()) {
        report.label = any_r1 ? ClassLabel::C2 : ClassLabel::C1MinusC2;
    } else {
        report.label = report.undecided.empty() ? ClassLabel::NotC1 : ClassLabel::Undecided;
    }
    return report;
}

RefutationCertificate c2_refute(const PolyMap& F, const PertinentFamily& family) {
    if (family.r != 1) throw std::invalid_argument("c2_refute requires a family with r = 1");
    RefutationCertificate cert;
    const bool xdom = family.orientation == Orientation::XDominant;
    cert.divisor = BiPoly(GaussRat(1));
    cert.divisor.add_term(xdom ? Mono2{0, family.s} : Mono2{family.s, 0}, GaussRat(-1));

    const BiPoly df = xdom ? F.f.derivative_x() : F.f.derivative_y();
    const BiPoly dg = xdom ? F.g.derivative_x() : F.g.derivative_y();
    auto qf = exact_divide(df, cert.divisor);
    auto qg = exact_divide(dg, cert.divisor);
    if (!qf || !qg)
        throw std::logic_error("c2_refute: derivative not divisible; recognition is inconsistent");
    cert.q_f = std::move(*qf);
    cert.q_g = std::move(*qg);
    return cert;
}

LemmaVerdict lemma_system_check(int r, int s, int n) {
    if (r < 1 || s < 1 || n < 1)
        throw std::invalid_argument("lemma_system_check requires r, s, n >= 1");

    // Verify the w-reduction identity du_i/dx = i x^{i-1} (1 - r w^i),
    // w = x^{r-1} y^s, exactly for each equation of the system.
    BiPoly w = BiPoly::monomial(r - 1, s);
    for (int i = 1; i <= n; ++i) {
        BiPoly left = generator_x(i, r, s).derivative_x();
        BiPoly factor = BiPoly(GaussRat(1)) - GaussRat(r) * w.pow(i);
        BiPoly right = BiPoly::monomial(i - 1, 0, GaussRat(i)) * factor;
        if (left != right) throw std::logic_error("w-reduction identity failed");
    }

    LemmaVerdict v;
    v.solvable = (r == 1);
    if (v.solvable)
        v.witness = "curve {(x, z) : z^" + std::to_string(s) + " = 1}, x free";
    return v;
}

}  // namespace jlab
