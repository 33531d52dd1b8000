#include <doctest.h>

#include "helpers.hpp"
#include "jlab/classify.hpp"
#include "jlab/mapio.hpp"

using namespace jlab;
using jlab::testing::random_bipoly;
using jlab::testing::random_gaussrat;

namespace {

/// p(A, B): substitution of polynomials for the variables; test-side helper
/// for composing maps.
BiPoly compose(const BiPoly& p, const BiPoly& A, const BiPoly& B) {
    BiPoly acc;
    for (const auto& [m, c] : p.terms()) acc += c * (A.pow(m.x) * B.pow(m.y));
    return acc;
}

bool has_violation(const GoodMapReport& r, GoodViolation v) {
    for (GoodViolation got : r.violations)
        if (got == v) return true;
    return false;
}

}  // namespace

TEST_CASE("jacobian determinant examples") {
    CHECK(jacobian_det({parse_poly("x + y"), parse_poly("x + 2*y")}) == BiPoly(GaussRat(1)));

    PolyMap fstar{parse_poly("y + x - x^2*y"), parse_poly("2*y + x - x^2*y")};
    CHECK(jacobian_det(fstar) == parse_poly("1 - 2*x*y"));
}

TEST_CASE("the sign family (a u0 + b u1, c u0 + d u1) has det (bc - ad)(1 - 2xy)") {
    BiPoly u0 = BiPoly::var_y();
    BiPoly u1 = parse_poly("x - x^2*y");
    BiPoly base = parse_poly("1 - 2*x*y");
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                for (int d : {1, -1}) {
                    PolyMap F{GaussRat(a) * u0 + GaussRat(b) * u1,
                              GaussRat(c) * u0 + GaussRat(d) * u1};
                    CHECK(jacobian_det(F) == GaussRat(b * c - a * d) * base);
                }
}

TEST_CASE("check_nzc") {
    NzcVerdict v1 = check_nzc({parse_poly("x + y"), parse_poly("x - y")});
    CHECK(v1.holds);
    CHECK(*v1.constant_value == GaussRat(-2));

    NzcVerdict v2 = check_nzc({parse_poly("y + x - x^2*y"), parse_poly("2*y + x - x^2*y")});
    CHECK_FALSE(v2.holds);
    CHECK(v2.det == parse_poly("1 - 2*x*y"));

    NzcVerdict v3 = check_nzc({BiPoly::var_x(), BiPoly::var_x()});
    CHECK_FALSE(v3.holds);
    CHECK(v3.det.is_zero());
}

TEST_CASE("check_good") {
    GoodMapReport running = check_good(
        {parse_poly("x + y - x*y"),
         parse_poly("x + 2*y - x*y^2 - 3*x^6 + 6*x^6*y^3 - 3*x^6*y^6")});
    CHECK(running.is_good);
    CHECK(running.alpha == GaussRat(1));
    CHECK(running.beta == GaussRat(1));
    CHECK(running.alpha_prime == GaussRat(1));
    CHECK(running.beta_prime == GaussRat(2));
    CHECK(running.alpha * running.beta_prime - running.alpha_prime * running.beta ==
          GaussRat(1));

    GoodMapReport prop = check_good({parse_poly("x + y"), parse_poly("2*x + 2*y + x^2")});
    CHECK_FALSE(prop.is_good);
    CHECK(has_violation(prop, GoodViolation::DeterminantZero));

    GoodMapReport miss = check_good({parse_poly("x^2 + y^2"), parse_poly("x + y")});
    CHECK_FALSE(miss.is_good);
    CHECK(has_violation(miss, GoodViolation::MissingLinearXInF));
    CHECK(has_violation(miss, GoodViolation::MissingLinearYInF));
}

TEST_CASE("NZC forces a nonzero linear-part determinant (random automorphisms)") {
    // det JF(0,0) equals alpha beta' - alpha' beta exactly, so under the
    // Non-Zero Condition the determinant clause of goodness always holds.
    // The four individual linear coefficients can still vanish: see the
    // missing-linear-term case below.
    std::mt19937_64 rng(41);
    int all_linear = 0;
    for (int trial = 0; trial < 80; ++trial) {
        // (x, y) -> (x + p(y), y) -> (x, y + q(x)) -> linear, composed; the
        // composite satisfies the Non-Zero Condition by construction.
        auto univariate = [&rng](bool in_y) {
            BiPoly u = in_y ? BiPoly::var_y() : BiPoly::var_x();
            int top = 2 + int(rng() % 2);
            for (int k = 2; k <= top; ++k) {
                long c = long(rng() % 5) - 2;
                if (k == top && c == 0) c = 1;
                u.add_term(in_y ? Mono2{0, k} : Mono2{k, 0}, GaussRat(c));
            }
            return u;
        };
        BiPoly f = BiPoly::var_x() + univariate(true);           // x + p(y), deg p >= 2
        BiPoly g = BiPoly::var_y() + compose(univariate(false), f, BiPoly());
        // Random invertible integer linear map on top.
        long a = 1 + (long)(rng() % 3), b = (long)(rng() % 3), c = (long)(rng() % 3);
        long d = 0;
        do {
            d = 1 + (long)(rng() % 3);
        } while (a * d - b * c == 0);
        PolyMap F{GaussRat(a) * f + GaussRat(b) * g, GaussRat(c) * f + GaussRat(d) * g};
        NzcVerdict nzc = check_nzc(F);
        REQUIRE(nzc.holds);

        GoodMapReport rep = check_good(F);
        GaussRat lin_det = rep.alpha * rep.beta_prime - rep.alpha_prime * rep.beta;
        CHECK(lin_det == *nzc.constant_value);
        CHECK_FALSE(lin_det.is_zero());

        bool linear_complete = !rep.alpha.is_zero() && !rep.beta.is_zero() &&
                               !rep.alpha_prime.is_zero() && !rep.beta_prime.is_zero();
        if (F.f.total_degree() > 1 && F.g.total_degree() > 1 && linear_complete) {
            CHECK(rep.is_good);
            ++all_linear;
        }
    }
    CHECK(all_linear > 10);
}

TEST_CASE("an NZC map with a missing linear term is reported not good") {
    // (x + y^2, -x + y - y^2) has det JF = 1 but no linear y term in f.
    PolyMap F{parse_poly("x + y^2"), parse_poly("0 - x + y - y^2")};
    NzcVerdict nzc = check_nzc(F);
    CHECK(nzc.holds);
    CHECK(*nzc.constant_value == GaussRat(1));
    CHECK(F.f.total_degree() == 2);
    CHECK(F.g.total_degree() == 2);
    GoodMapReport rep = check_good(F);
    CHECK_FALSE(rep.is_good);
    CHECK(has_violation(rep, GoodViolation::MissingLinearYInF));
}

TEST_CASE("affine equivariance of the jacobian determinant") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 25; ++trial) {
        PolyMap F{random_bipoly(rng, 3, 4), random_bipoly(rng, 3, 4)};
        GaussRat a = random_gaussrat(rng), b = random_gaussrat(rng);
        GaussRat c = random_gaussrat(rng), d = random_gaussrat(rng);
        GaussRat e = random_gaussrat(rng), h = random_gaussrat(rng);
        GaussRat detA = a * d - b * c;
        BiPoly Ax = a * BiPoly::var_x() + b * BiPoly::var_y() + BiPoly(e);
        BiPoly Ay = c * BiPoly::var_x() + d * BiPoly::var_y() + BiPoly(h);
        PolyMap FA{compose(F.f, Ax, Ay), compose(F.g, Ax, Ay)};
        CHECK(jacobian_det(FA) == detA * compose(jacobian_det(F), Ax, Ay));
    }
}

TEST_CASE("check_nzc is swap-stable up to sign") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 30; ++trial) {
        PolyMap F{random_bipoly(rng, 3, 4), random_bipoly(rng, 3, 4)};
        NzcVerdict v = check_nzc(F);
        NzcVerdict w = check_nzc({F.g, F.f});
        CHECK(v.holds == w.holds);
        if (v.holds) CHECK(*v.constant_value == -*w.constant_value);
        CHECK(v.det == -GaussRat(1) * w.det);
    }
}
