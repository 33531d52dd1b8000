#include <doctest.h>

#include "helpers.hpp"
#include "jlab/classify.hpp"
#include "jlab/elimination.hpp"
#include "jlab/mapio.hpp"
#include "jlab/pertinent.hpp"
#include "jlab/unipoly.hpp"

using namespace jlab;

namespace {

/// Brute-force oracle for the lemma: the system du_1/dx = ... = du_n/dx = 0
/// vanishes on a horizontal line y = z0 iff z0 is a common root of every
/// x-degree coefficient (a univariate polynomial in y). Common roots exist
/// iff the gcd of those coefficients is nonconstant.
bool lemma_oracle(int r, int s, int n) {
    UniPoly g;  // gcd accumulator, zero = "no constraint yet"
    for (int i = 1; i <= n; ++i) {
        // u_i built directly: the lemma grid has no gcd restriction on (r, s).
        BiPoly ui = BiPoly::monomial(i, 0);
        ui.add_term({i * r, i * s}, GaussRat(-1));
        BiPoly dui = ui.derivative_x();
        int dx = dui.degrees().in_x;
        for (int a = 0; a <= std::max(dx, 0); ++a) {
            std::vector<GaussRat> coeffs;
            for (const auto& [m, c] : dui.terms())
                if (m.x == a) {
                    if (static_cast<std::size_t>(m.y) >= coeffs.size())
                        coeffs.resize(static_cast<std::size_t>(m.y) + 1);
                    coeffs[static_cast<std::size_t>(m.y)] = c;
                }
            UniPoly cy(std::move(coeffs));
            if (cy.is_zero()) continue;
            g = gcd(g, cy);
        }
    }
    return !g.is_zero() && g.degree() >= 1;
}

const PolyMap kRunningExample{
    parse_poly("x + y - x*y"),
    parse_poly("x + 2*y - x*y^2 - 3*x^6 + 6*x^6*y^3 - 3*x^6*y^6")};
const PolyMap kFStar{parse_poly("y + x - x^2*y"), parse_poly("2*y + x - x^2*y")};

TagPoly tag(std::size_t ntags, std::size_t i) { return TagPoly::tag(ntags, i); }

}  // namespace

TEST_CASE("family generators") {
    PertinentFamily fam{Orientation::XDominant, 1, 1, 3};
    auto us = family_generators(fam);
    REQUIRE(us.size() == 4);
    CHECK(us[0] == BiPoly::var_y());
    CHECK(us[1] == parse_poly("x - x*y"));
    CHECK(us[2] == parse_poly("x^2 - x^2*y^2"));
    CHECK(us[3] == parse_poly("x^3 - x^3*y^3"));

    auto us2 = family_generators({Orientation::XDominant, 2, 1, 1});
    CHECK((us2 == std::vector<BiPoly>{BiPoly::var_y(), parse_poly("x - x^2*y")}));

    auto us3 = family_generators({Orientation::YDominant, 2, 3, 2});
    CHECK((us3 == std::vector<BiPoly>{BiPoly::var_x(), parse_poly("y - y^2*x^3"),
                                      parse_poly("y^2 - y^4*x^6")}));

    CHECK_THROWS_AS(family_generators({Orientation::XDominant, 3, 2, 1}),
                    std::invalid_argument);  // gcd(r-1, s) = 2
    CHECK_THROWS_AS(family_generators({Orientation::XDominant, 0, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_generators({Orientation::XDominant, 1, 1, 0}),
                    std::invalid_argument);
}

TEST_CASE("recognize the running example as C2 with the exact rewrite") {
    ClassReport rep = recognize(kRunningExample);
    CHECK(rep.good.is_good);
    CHECK(rep.label == ClassLabel::C2);
    CHECK(rep.undecided.empty());
    REQUIRE(rep.recognitions.size() == 1);
    const Recognition& rec = rep.recognitions[0];
    CHECK((rec.family == PertinentFamily{Orientation::XDominant, 1, 1, 6}));

    CHECK(rec.E_f == tag(7, 0) + tag(7, 1));
    TagPoly expected_g = GaussRat(2) * tag(7, 0) + tag(7, 1) -
                         GaussRat(3) * (tag(7, 3) * tag(7, 3)) + tag(7, 0) * tag(7, 1);
    CHECK(rec.E_g == expected_g);

    // Round-trip identity (zero remainder).
    auto us = family_generators(rec.family);
    CHECK(rec.E_f.substitute_tags(us) == kRunningExample.f);
    CHECK(rec.E_g.substitute_tags(us) == kRunningExample.g);
    CHECK((rec.E_f.substitute_tags(us) - kRunningExample.f).is_zero());
}

TEST_CASE("recognize F* as C1 minus C2") {
    ClassReport rep = recognize(kFStar);
    CHECK(rep.label == ClassLabel::C1MinusC2);
    REQUIRE(rep.recognitions.size() == 1);
    const Recognition& rec = rep.recognitions[0];
    CHECK((rec.family == PertinentFamily{Orientation::XDominant, 2, 1, 1}));
    CHECK(rec.E_f == tag(2, 0) + tag(2, 1));
    CHECK(rec.E_g == GaussRat(2) * tag(2, 0) + tag(2, 1));
    CHECK(rec.f_uses_u0);
    CHECK(rec.f_uses_u1);
    CHECK(rec.g_uses_u0);
    CHECK(rec.g_uses_u1);
}

TEST_CASE("degree-1 maps are NOT_C1") {
    ClassReport rep = recognize({parse_poly("x + y"), parse_poly("x - y")});
    CHECK(rep.label == ClassLabel::NotC1);
    CHECK_FALSE(rep.good.is_good);
}

TEST_CASE("usage constraint: recognitions must involve U_0 and U_1 in both coordinates") {
    // g = y + y^2 is tag-only in U_0 alone; no recognition may be emitted.
    ClassReport rep = recognize({parse_poly("y + x - x^2*y"), parse_poly("y + y^2")});
    CHECK(rep.recognitions.empty());
}

TEST_CASE("c2_refute produces exact divisibility certificates") {
    ClassReport rep = recognize(kRunningExample);
    REQUIRE(!rep.recognitions.empty());
    const PertinentFamily fam = rep.recognitions[0].family;
    REQUIRE(fam.r == 1);

    RefutationCertificate cert = c2_refute(kRunningExample, fam);
    CHECK(cert.divisor == parse_poly("1 - y"));
    CHECK(cert.q_f == BiPoly(GaussRat(1)));  // df/dx = 1 - y
    CHECK(cert.q_f * cert.divisor == kRunningExample.f.derivative_x());
    CHECK(cert.q_g * cert.divisor == kRunningExample.g.derivative_x());

    // det JF vanishes on the curve y^s = 1; spot value at (2, 1).
    BiPoly det = jacobian_det(kRunningExample);
    CHECK(det.eval(GaussRat(2), GaussRat(1)).is_zero());

    // Synthetic r = 1, s = 2 instance.
    PolyMap s2{parse_poly("y + x - x*y^2"), parse_poly("2*y + x - x*y^2")};
    RefutationCertificate cs2 = c2_refute(s2, {Orientation::XDominant, 1, 2, 1});
    CHECK(cs2.divisor == parse_poly("1 - y^2"));
    CHECK(cs2.q_f == BiPoly(GaussRat(1)));
    CHECK(cs2.q_g * cs2.divisor == s2.g.derivative_x());

    CHECK_THROWS_AS(c2_refute(kFStar, {Orientation::XDominant, 2, 1, 1}),
                    std::invalid_argument);  // r != 1
    // Divisibility failure on an unrecognized map is an internal error.
    CHECK_THROWS_AS(c2_refute({BiPoly::var_x(), BiPoly::var_y()},
                              {Orientation::XDominant, 1, 1, 1}),
                    std::logic_error);
}

TEST_CASE("every C2-labeled corpus map fails the Non-Zero Condition") {
    for (const PolyMap& F : {kRunningExample,
                             PolyMap{parse_poly("y + x - x*y^2"), parse_poly("2*y + x - x*y^2")}}) {
        ClassReport rep = recognize(F);
        REQUIRE(rep.label == ClassLabel::C2);
        CHECK_FALSE(check_nzc(F).holds);
    }
}

TEST_CASE("lemma system check over the full grid agrees with the brute-force oracle") {
    for (int r = 1; r <= 6; ++r)
        for (int s = 1; s <= 6; ++s)
            for (int n = 1; n <= 6; ++n) {
                LemmaVerdict v = lemma_system_check(r, s, n);
                CHECK(v.solvable == (r == 1));
                CHECK(v.solvable == lemma_oracle(r, s, n));
            }

    CHECK(lemma_system_check(1, 1, 3).solvable);
    CHECK_FALSE(lemma_system_check(2, 1, 2).solvable);
    CHECK_FALSE(lemma_system_check(3, 2, 5).solvable);
}

TEST_CASE("r = 1 witness curve solves every equation exactly") {
    // On y^s = 1 each du_i/dx vanishes: (1 - y^s) divides du_i/dx.
    for (int s = 1; s <= 4; ++s)
        for (int n = 1; n <= 4; ++n) {
            BiPoly divisor = BiPoly(GaussRat(1)) - BiPoly::monomial(0, s);
            PertinentFamily fam{Orientation::XDominant, 1, s, n};
            auto us = family_generators(fam);
            for (int i = 1; i <= n; ++i)
                CHECK(exact_divide(us[static_cast<std::size_t>(i)].derivative_x(), divisor)
                          .has_value());
        }
}

TEST_CASE("orientation exclusivity on the corpus") {
    const std::vector<PolyMap> corpus = {
        kRunningExample,
        kFStar,
        {parse_poly("x + y - y^2*x"), parse_poly("2*x + y - y^2*x")},  // mirror
        {parse_poly("y + x - x^3*y"), parse_poly("2*y + x - x^3*y")},
        {parse_poly("y + x - x^2*y^2"), parse_poly("2*y + x - x^2*y^2")},
        {parse_poly("y + x - x*y^2"), parse_poly("2*y + x - x*y^2")},
    };
    for (const PolyMap& F : corpus) {
        ClassReport rep = recognize(F);
        bool has_x = false, has_y = false;
        for (const auto& rec : rep.recognitions) {
            has_x = has_x || rec.family.orientation == Orientation::XDominant;
            has_y = has_y || rec.family.orientation == Orientation::YDominant;
        }
        CHECK_FALSE((has_x && has_y));
        // Round-trip identity for every emitted recognition.
        for (const auto& rec : rep.recognitions) {
            auto us = family_generators(rec.family);
            CHECK(rec.E_f.substitute_tags(us) == F.f);
            CHECK(rec.E_g.substitute_tags(us) == F.g);
        }
    }
}

TEST_CASE("the Y-dominant mirror is recognized with orientation y") {
    ClassReport rep = recognize({parse_poly("x + y - y^2*x"), parse_poly("2*x + y - y^2*x")});
    CHECK(rep.label == ClassLabel::C1MinusC2);
    REQUIRE(rep.recognitions.size() == 1);
    CHECK((rep.recognitions[0].family ==
           PertinentFamily{Orientation::YDominant, 2, 1, 1}));
}

TEST_CASE("vanishing-curve filter never rejects a member") {
    // Members built directly from tag expressions must pass the filter.
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + int(rng() % 3);
        int s = 1 + int(rng() % 3);
        if (r >= 2 && std::gcd(r - 1, s) != 1) continue;
        PertinentFamily fam{Orientation::XDominant, r, s, 3};
        auto us = family_generators(fam);
        BiPoly member;
        for (int picks = 0; picks < 3; ++picks) {
            BiPoly m = us[rng() % 4] * us[rng() % 4];
            member += jlab::testing::random_gaussrat(rng) * m;
        }
        CHECK(vanishing_curve_filter(member, r, s));
    }
    // And it does reject an obvious non-member for the (1,1) family.
    CHECK_FALSE(vanishing_curve_filter(parse_poly("x + y"), 1, 1));
}
