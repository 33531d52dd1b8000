#include <doctest.h>

#include <random>

#include "jlab/asymptotic.hpp"
#include "jlab/elimination.hpp"
#include "jlab/fiber.hpp"
#include "jlab/mapio.hpp"

using namespace jlab;

namespace {

const PolyMap kFStar{parse_poly("y + x - x^2*y"), parse_poly("2*y + x - x^2*y")};

bool near(Complex a, Complex b, double tol = 1e-8) { return std::abs(a - b) <= tol; }

/// Independent fiber oracle: Newton polishing from a coarse 4-dimensional
/// grid of complex starts, deduplicated.
std::vector<std::pair<Complex, Complex>> fiber_bruteforce(const PolyMap& F, Complex a1,
                                                          Complex a2) {
    std::vector<std::pair<Complex, Complex>> found;
    BiPoly fx = F.f.derivative_x(), fy = F.f.derivative_y();
    BiPoly gx = F.g.derivative_x(), gy = F.g.derivative_y();
    const double grid[] = {-3.1, -1.7, -0.4, 0.6, 1.9, 3.2};
    for (double xr : grid)
        for (double xi : grid)
            for (double yr : grid)
                for (double yi : grid) {
                    Complex x(xr, xi), y(yr, yi);
                    bool ok = false;
                    for (int it = 0; it < 60; ++it) {
                        Complex rf = *F.f.eval(x, y) - a1;
                        Complex rg = *F.g.eval(x, y) - a2;
                        if (std::abs(rf) + std::abs(rg) < 1e-12) {
                            ok = true;
                            break;
                        }
                        Complex jfx = *fx.eval(x, y), jfy = *fy.eval(x, y);
                        Complex jgx = *gx.eval(x, y), jgy = *gy.eval(x, y);
                        Complex det = jfx * jgy - jfy * jgx;
                        if (std::abs(det) < 1e-14) break;
                        Complex dx = (rf * jgy - rg * jfy) / det;
                        Complex dy = (rg * jfx - rf * jgx) / det;
                        x -= dx;
                        y -= dy;
                        if (std::abs(x) + std::abs(y) > 1e6) break;
                    }
                    if (!ok) continue;
                    bool dup = false;
                    for (auto [px, py] : found)
                        if (near(px, x, 1e-6) && near(py, y, 1e-6)) dup = true;
                    if (!dup) found.push_back({x, y});
                }
    return found;
}

}  // namespace

TEST_CASE("univariate roots: fixed examples") {
    auto r1 = univariate_roots({Complex(-1), Complex(0), Complex(1)});  // z^2 - 1
    REQUIRE(r1.size() == 2);
    CHECK(near(r1[0], Complex(-1)));
    CHECK(near(r1[1], Complex(1)));

    auto r2 = univariate_roots({Complex(0), Complex(-1), Complex(1)});  // x^2 - x
    REQUIRE(r2.size() == 2);
    CHECK(near(r2[0], Complex(0)));
    CHECK(near(r2[1], Complex(1)));

    // (z - (1 + i))^2: double root within the cluster tolerance.
    auto r3 = univariate_roots({Complex(0, 2), Complex(-2, -2), Complex(1)});
    REQUIRE(r3.size() == 2);
    CHECK(near(r3[0], Complex(1, 1), 1e-6));
    CHECK(near(r3[0], r3[1], 1e-12));  // cluster centroids coincide

    CHECK_THROWS_AS(univariate_roots({Complex(1)}), std::invalid_argument);
}

TEST_CASE("univariate roots: count conservation and residual bounds on random inputs") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> coeff(-3.0, 3.0);
    for (int trial = 0; trial < 100; ++trial) {
        int deg = 1 + int(rng() % 8);
        std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1);
        for (auto& c : coeffs) c = Complex(coeff(rng), coeff(rng));
        if (std::abs(coeffs.back()) < 0.1) coeffs.back() = Complex(1, 0);
        auto roots = univariate_roots(coeffs, 1e-9);
        CHECK(roots.size() == static_cast<std::size_t>(deg));
        double max_c = 0;
        for (auto c : coeffs) max_c = std::max(max_c, std::abs(c));
        for (Complex r : roots) {
            Complex val = 0;
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) val = val * r + *it;
            CHECK(std::abs(val) <= 1e-9 * max_c * std::pow(std::max(1.0, std::abs(r)), deg));
        }
        // Sorted by (re, im).
        for (std::size_t k = 1; k < roots.size(); ++k) {
            CHECK((roots[k - 1].real() < roots[k].real() ||
                   (roots[k - 1].real() == roots[k].real() &&
                    roots[k - 1].imag() <= roots[k].imag())));
        }
    }
}

TEST_CASE("hand-derived fibers of F*") {
    Fiber f12 = fiber_solve(kFStar, {Complex(1), Complex(2)}, 1e-9);
    REQUIRE(f12.points.size() == 2);
    CHECK(near(f12.points[0].first, Complex(0)));
    CHECK(near(f12.points[0].second, Complex(1)));
    CHECK(near(f12.points[1].first, Complex(1)));
    CHECK(near(f12.points[1].second, Complex(1)));
    CHECK(f12.max_residual <= 1e-9);

    Fiber f13 = fiber_solve(kFStar, {Complex(1), Complex(3)}, 1e-9);
    REQUIRE(f13.points.size() == 2);
    CHECK(near(f13.points[0].first, Complex(-0.5)));
    CHECK(near(f13.points[0].second, Complex(2)));
    CHECK(near(f13.points[1].first, Complex(1)));
    CHECK(near(f13.points[1].second, Complex(2)));
    CHECK(f13.max_residual <= 1e-9);

    // A point on S_F that still lies in the image.
    Fiber fm = fiber_solve(kFStar, {Complex(-1), Complex(-1)}, 1e-9);
    REQUIRE(fm.points.size() == 1);
    CHECK(near(fm.points[0].first, Complex(-1)));
    CHECK(near(fm.points[0].second, Complex(0)));
}

TEST_CASE("fiber points satisfy the resultant consistency bound") {
    Complex a1(1, 0), a2(2, 0);
    BiPoly p = kFStar.f - BiPoly(gaussrat_from_complex(a1));
    BiPoly q = kFStar.g - BiPoly(gaussrat_from_complex(a2));
    BiPoly res = resultant_y(p, q);
    Fiber fiber = fiber_solve(kFStar, {a1, a2}, 1e-9);
    REQUIRE(!fiber.points.empty());
    for (auto [x, y] : fiber.points) {
        auto val = res.eval(x, Complex(0));
        REQUIRE(val.has_value());
        CHECK(std::abs(*val) <= 1e-7);
    }
}

TEST_CASE("empty and degenerate fibers") {
    // (x, x y): over (0, 1) the fiber is empty.
    PolyMap xxy{parse_poly("x"), parse_poly("x*y")};
    Fiber empty = fiber_solve(xxy, {Complex(0), Complex(1)}, 1e-9);
    CHECK(empty.points.empty());
    CHECK_FALSE(empty.degenerate);

    // Over (0, 0) the fiber contains the whole line x = 0.
    Fiber line = fiber_solve(xxy, {Complex(0), Complex(0)}, 1e-9);
    CHECK(line.degenerate);
    CHECK(line.points.empty());  // no points fabricated

    // Constant map.
    PolyMap constant{BiPoly(GaussRat(3)), BiPoly(GaussRat(4))};
    Fiber c1 = fiber_solve(constant, {Complex(3), Complex(4)}, 1e-9);
    CHECK(c1.degenerate);
    Fiber c2 = fiber_solve(constant, {Complex(0), Complex(0)}, 1e-9);
    CHECK(c2.points.empty());
    CHECK_FALSE(c2.degenerate);
}

TEST_CASE("fiber cardinality agrees with brute force on a target grid") {
    for (int ar = -2; ar <= 2; ar += 1)
        for (int br = -2; br <= 2; br += 1) {
            Complex a1(ar, 0), a2(br, 0);
            Fiber fiber = fiber_solve(kFStar, {a1, a2}, 1e-9);
            if (fiber.degenerate) continue;
            auto brute = fiber_bruteforce(kFStar, a1, a2);
            CHECK(fiber.points.size() == brute.size());
        }
}

TEST_CASE("mirrored fiber solving when the system is independent of y") {
    // Both coordinates in x only: positive-dimensional or empty.
    PolyMap xonly{parse_poly("x^2"), parse_poly("x + 1")};
    Fiber hit = fiber_solve(xonly, {Complex(4), Complex(3)}, 1e-9);
    CHECK(hit.degenerate);  // the line x = 2 maps there
    Fiber miss = fiber_solve(xonly, {Complex(4), Complex(5)}, 1e-9);
    CHECK(miss.points.empty());
    CHECK_FALSE(miss.degenerate);

    // y-only map mirrors into the x-eliminating path.
    PolyMap yonly{parse_poly("y + y^2"), parse_poly("y^3 + 2")};
    Fiber fy = fiber_solve(yonly, {Complex(2), Complex(3)}, 1e-9);
    CHECK(fy.degenerate);
}

TEST_CASE("dominance sampling on the invertible linear map") {
    PolyMap linear{parse_poly("x + y"), parse_poly("x + 2*y")};
    DominanceReport rep = dominancy_check(linear, 50, 42, 1e-9, 5.0, nullptr);
    CHECK(rep.samples == 50);
    CHECK(rep.nonempty_fibers == 50);
    CHECK(rep.empty_fibers == 0);
    CHECK(rep.skipped_near_sf == 0);
    CHECK(rep.solver_failures == 0);
    CHECK(rep.dominant_consistent);
    CHECK(rep.samples == rep.nonempty_fibers + rep.empty_fibers + rep.skipped_near_sf +
                             rep.solver_failures);
}

TEST_CASE("dominance sampling on F* is dominant-consistent") {
    ClassReport rep = recognize(kFStar);
    REQUIRE(!rep.recognitions.empty());
    CurveSet set = asymptotic_curves(rep.recognitions[0]);
    DominanceReport dom = dominancy_check(kFStar, 50, 42, 1e-9, 5.0, &set.curves);
    CHECK(dom.samples == 50);
    CHECK(dom.nonempty_fibers + dom.skipped_near_sf == 50);
    CHECK(dom.empty_fibers == 0);
    CHECK(dom.solver_failures == 0);
    CHECK(dom.dominant_consistent);
}

TEST_CASE("dominance report is deterministic and parallel-schedule independent") {
    PolyMap xxy{parse_poly("x"), parse_poly("x*y")};
    DominanceReport a = dominancy_check(xxy, 40, 7, 1e-9, 5.0, nullptr);
    DominanceReport b = dominancy_check(xxy, 40, 7, 1e-9, 5.0, nullptr);
    CHECK(a.nonempty_fibers == b.nonempty_fibers);
    CHECK(a.empty_fibers == b.empty_fibers);
    CHECK(a.empty_targets.size() == b.empty_targets.size());
    for (std::size_t k = 0; k < a.empty_targets.size(); ++k) {
        CHECK(a.empty_targets[k].first == b.empty_targets[k].first);
        CHECK(a.empty_targets[k].second == b.empty_targets[k].second);
    }
}

TEST_CASE("distance to curves over the z-grid") {
    AsymptoticCurve diag;
    diag.P = UniPoly(std::vector<GaussRat>{GaussRat(0), GaussRat(-1)});
    diag.Q = diag.P;
    std::vector<AsymptoticCurve> curves = {diag};
    // (1.25, 1.25) is the curve point at the grid sample z = -1.25.
    CHECK(distance_to_curves(curves, {Complex(1.25), Complex(1.25)}) < 1e-9);
    CHECK(distance_to_curves(curves, {Complex(3), Complex(-3)}) > 1.0);
}

TEST_CASE("dominance sampling on (x, x y) still sees 50/50 nonempty fibers") {
    // The empty-fiber locus {a1 = 0} has measure zero; random targets miss it.
    PolyMap xxy{parse_poly("x"), parse_poly("x*y")};
    DominanceReport rep = dominancy_check(xxy, 50, 42, 1e-9, 5.0, nullptr);
    CHECK(rep.nonempty_fibers == 50);
    CHECK(rep.dominant_consistent);
}

TEST_CASE("fiber cardinality respects the Bezout bound") {
    std::mt19937_64 rng(62);
    std::uniform_real_distribution<double> t(-3.0, 3.0);
    const std::size_t bound = std::size_t(kFStar.f.total_degree()) *
                              std::size_t(kFStar.g.total_degree());
    for (int trial = 0; trial < 10; ++trial) {
        Fiber fib = fiber_solve(kFStar, {Complex(t(rng), t(rng)), Complex(t(rng), t(rng))}, 1e-9);
        CHECK(fib.points.size() <= bound);
    }
}
