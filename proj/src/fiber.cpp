#include "jlab/fiber.hpp"

#include <algorithm>
#include <cmath>

#include "jlab/elimination.hpp"

namespace jlab {

namespace {

constexpr double kClusterRel = 1e-7;
constexpr int kMaxAberthIterations = 600;

Complex horner(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex horner_derivative(const std::vector<Complex>& coeffs, Complex z) {
    Complex acc = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 1;) acc = acc * z + double(k) * coeffs[k];
    return acc;
}

std::vector<Complex> cluster_roots(std::vector<Complex> roots) {
    std::vector<std::vector<Complex>> clusters;
    for (Complex r : roots) {
        bool placed = false;
        for (auto& cl : clusters) {
            Complex centroid = 0.0;
            for (Complex c : cl) centroid += c;
            centroid /= double(cl.size());
            if (std::abs(r - centroid) <= kClusterRel * std::max(1.0, std::abs(centroid))) {
                cl.push_back(r);
                placed = true;
                break;
            }
        }
        if (!placed) clusters.push_back({r});
    }
    std::vector<Complex> out;
    for (const auto& cl : clusters) {
        Complex centroid = 0.0;
        for (Complex c : cl) centroid += c;
        centroid /= double(cl.size());
        for (std::size_t k = 0; k < cl.size(); ++k) out.push_back(centroid);
    }
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return out;
}

/// Exact univariate (in x) BiPoly to complex coefficients, rationally scaled
/// so the conversion cannot overflow. Scaling does not move roots.
std::vector<Complex> complex_coeffs_scaled(const BiPoly& p) {
    int deg = p.degrees().in_x;
    if (deg < 0) return {};
    Rational max_norm(0);
    for (const auto& [m, c] : p.terms()) {
        Rational n = abs(c.re()) + abs(c.im());
        if (n > max_norm) max_norm = n;
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(deg) + 1, Complex(0.0));
    for (const auto& [m, c] : p.terms()) {
        GaussRat scaled(c.re() / max_norm, c.im() / max_norm);
        coeffs[static_cast<std::size_t>(m.x)] = scaled.to_complex();
    }
    return coeffs;
}

struct YSlice {
    std::vector<Complex> coeffs;
    bool negligible = false;  // the whole slice vanishes to working precision
};

/// Complex univariate slice p(x0, .) as coefficients in y. Coefficients are
/// trimmed against the coefficient majorant at |x0| (a slice of a polynomial
/// whose terms are O(scale) is zero when everything is far below scale);
/// candidate generation only, acceptance stays residual-based.
YSlice y_slice(const BiPoly& p, Complex x0) {
    YSlice out;
    int dy = p.degrees().in_y;
    if (dy < 0) {
        out.negligible = true;
        return out;
    }
    double scale = 1.0;
    for (const auto& [m, c] : p.terms())
        scale += std::abs(c.to_complex()) * std::pow(std::abs(x0), m.x);
    const double floor = 1e-10 * scale;

    out.coeffs.assign(static_cast<std::size_t>(dy) + 1, Complex(0.0));
    for (int b = 0; b <= dy; ++b) {
        BiPoly cb = p.coeff_of_y(b);
        if (cb.is_zero()) continue;
        auto v = cb.eval(x0, Complex(0.0));
        out.coeffs[static_cast<std::size_t>(b)] = v ? *v : Complex(0.0);
    }
    while (out.coeffs.size() > 1 && std::abs(out.coeffs.back()) <= floor) out.coeffs.pop_back();
    out.negligible = out.coeffs.size() == 1 && std::abs(out.coeffs[0]) <= floor;
    return out;
}

struct System {
    const PolyMap& F;
    Complex alpha, beta;

    std::pair<Complex, Complex> residual(Complex x, Complex y) const {
        auto fv = F.f.eval(x, y);
        auto gv = F.g.eval(x, y);
        if (!fv || !gv) return {Complex(1e300), Complex(1e300)};
        return {*fv - alpha, *gv - beta};
    }
    double residual_norm(Complex x, Complex y) const {
        auto [rf, rg] = residual(x, y);
        return std::hypot(std::abs(rf), std::abs(rg));
    }
};

/// A few Newton steps on the square system (f - alpha, g - beta).
std::pair<Complex, Complex> newton_polish(const System& sys, Complex x, Complex y) {
    for (int it = 0; it < 8; ++it) {
        auto [rf, rg] = sys.residual(x, y);
        auto fx = sys.F.f.derivative_x().eval(x, y);
        auto fy = sys.F.f.derivative_y().eval(x, y);
        auto gx = sys.F.g.derivative_x().eval(x, y);
        auto gy = sys.F.g.derivative_y().eval(x, y);
        if (!fx || !fy || !gx || !gy) break;
        Complex det = *fx * *gy - *fy * *gx;
        if (std::abs(det) < 1e-300) break;
        Complex dx = (rf * *gy - rg * *fy) / det;
        Complex dy = (rg * *fx - rf * *gx) / det;
        x -= dx;
        y -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-15 * (1.0 + std::abs(x) + std::abs(y))) break;
    }
    return {x, y};
}

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

double uniform_pm(std::uint64_t& state, double bound) {
    return (double(splitmix64(state) >> 11) / 9007199254740992.0 * 2.0 - 1.0) * bound;
}

}  // namespace

std::vector<Complex> univariate_roots(std::vector<Complex> coeffs, double tol) {
    const std::vector<Complex> original = coeffs;
    while (coeffs.size() > 1 && std::abs(coeffs.back()) == 0.0) coeffs.pop_back();
    if (coeffs.size() <= 1)
        throw std::invalid_argument("univariate_roots requires degree >= 1");

    std::vector<Complex> roots;
    while (coeffs.size() > 1 && std::abs(coeffs.front()) == 0.0) {
        roots.push_back(Complex(0.0));
        coeffs.erase(coeffs.begin());
    }

    const std::size_t n = coeffs.size() - 1;
    if (n > 0) {
        Complex lead = coeffs.back();
        for (auto& c : coeffs) c /= lead;
        double radius = 0.0;
        for (std::size_t k = 0; k < n; ++k) radius = std::max(radius, std::abs(coeffs[k]));
        radius = 1.0 + radius;

        std::vector<Complex> z(n);
        for (std::size_t j = 0; j < n; ++j) {
            double angle = 2.0 * M_PI * double(j) / double(n) + 0.4;
            z[j] = radius * Complex(std::cos(angle), std::sin(angle));
        }

        bool converged = false;
        for (int iter = 0; iter < kMaxAberthIterations && !converged; ++iter) {
            double max_step = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                Complex pv = horner(coeffs, z[j]);
                if (std::abs(pv) == 0.0) continue;
                Complex dv = horner_derivative(coeffs, z[j]);
                if (std::abs(dv) == 0.0) {
                    z[j] *= Complex(1.0 + 1e-8, 1e-8);
                    max_step = 1.0;
                    continue;
                }
                Complex w = pv / dv;
                Complex s = 0.0;
                for (std::size_t k = 0; k < n; ++k)
                    if (k != j) s += 1.0 / (z[j] - z[k]);
                Complex denom = 1.0 - w * s;
                Complex step = std::abs(denom) == 0.0 ? w : w / denom;
                z[j] -= step;
                max_step = std::max(max_step, std::abs(step) / (1.0 + std::abs(z[j])));
            }
            converged = max_step < 1e-14;
        }
        if (!converged) throw RootFindError("Aberth iteration did not converge");
        for (Complex r : z) roots.push_back(r);
    }

    // Residual contract against the original coefficients.
    double max_coeff = 0.0;
    for (Complex c : original) max_coeff = std::max(max_coeff, std::abs(c));
    const double deg = double(original.size() - 1);
    for (Complex r : roots) {
        double bound = tol * max_coeff * std::pow(std::max(1.0, std::abs(r)), deg);
        if (std::abs(horner(original, r)) > bound)
            throw RootFindError("root residual exceeds tolerance bound");
    }

    return cluster_roots(std::move(roots));
}

Fiber fiber_solve(const PolyMap& F, std::pair<Complex, Complex> a, double tol) {
    Fiber fiber;
    fiber.target = a;
    System sys{F, a.first, a.second};

    BiPoly p = F.f - BiPoly(gaussrat_from_complex(a.first));
    BiPoly q = F.g - BiPoly(gaussrat_from_complex(a.second));
    const int py = p.degrees().in_y, qy = q.degrees().in_y;

    if (py < 1 && qy < 1) {
        // Both independent of y: mirror the whole computation in x.
        if (p.degrees().in_x < 1 && q.degrees().in_x < 1) {
            bool both_zero = p.is_zero() && q.is_zero();
            fiber.degenerate = both_zero;
            fiber.note = both_zero ? "fiber is the whole plane" : "empty fiber (constant map)";
            return fiber;
        }
        PolyMap mirrored{F.f.swapped_xy(), F.g.swapped_xy()};
        Fiber m = fiber_solve(mirrored, a, tol);
        fiber.degenerate = m.degenerate;
        fiber.note = m.note;
        fiber.max_residual = m.max_residual;
        for (auto [x, y] : m.points) fiber.points.push_back({y, x});
        std::sort(fiber.points.begin(), fiber.points.end(), [](const auto& l, const auto& r) {
            if (l.first.real() != r.first.real()) return l.first.real() < r.first.real();
            if (l.first.imag() != r.first.imag()) return l.first.imag() < r.first.imag();
            if (l.second.real() != r.second.real()) return l.second.real() < r.second.real();
            return l.second.imag() < r.second.imag();
        });
        return fiber;
    }

    std::vector<Complex> x_candidates;
    if (py >= 1 && qy >= 1) {
        BiPoly res = resultant_y(p, q);
        if (res.is_zero()) {
            fiber.degenerate = true;
            fiber.note = "positive-dimensional or degenerate fiber (resultant vanishes identically)";
            return fiber;
        }
        if (res.degrees().in_x < 1) return fiber;  // nonzero constant: empty fiber
        try {
            x_candidates = univariate_roots(complex_coeffs_scaled(res), 1e-8);
        } catch (const RootFindError&) {
            throw;
        }
    } else {
        // Exactly one coordinate depends on y; the other is univariate in x
        // and pins the x-candidates directly.
        const BiPoly& xonly = py < 1 ? p : q;
        if (xonly.degrees().in_x < 1) {
            if (!xonly.is_zero()) return fiber;  // nonzero constant: empty
            fiber.degenerate = true;
            fiber.note = "positive-dimensional fiber (one equation vanishes identically)";
            return fiber;
        }
        x_candidates = univariate_roots(complex_coeffs_scaled(xonly), 1e-8);
    }

    // Deduplicate x-candidates (multiplicity clusters collapse here).
    std::vector<Complex> xs;
    for (Complex x0 : x_candidates)
        if (xs.empty() || std::abs(x0 - xs.back()) > kClusterRel * std::max(1.0, std::abs(x0)))
            xs.push_back(x0);

    const double filter_tol = std::max(1e-6, tol);
    std::vector<std::pair<Complex, Complex>> accepted;
    for (Complex x0 : xs) {
        YSlice yf = y_slice(p, x0);
        YSlice yg = y_slice(q, x0);
        const std::vector<Complex>* slice = nullptr;
        const BiPoly* other = nullptr;
        if (yf.coeffs.size() > 1) {
            slice = &yf.coeffs;
            other = &q;
        } else if (yg.coeffs.size() > 1) {
            slice = &yg.coeffs;
            other = &p;
        } else if (yf.negligible && yg.negligible) {
            // Both equations vanish along the whole line x = x0.
            fiber.degenerate = true;
            fiber.note = "positive-dimensional fiber component along a vertical line";
            continue;
        } else {
            continue;  // no y-dependence at this x0; cannot certify a point
        }
        std::vector<Complex> ys;
        try {
            ys = univariate_roots(*slice, 1e-8);
        } catch (const RootFindError&) {
            continue;
        }
        double scale = 1.0;
        for (const auto& [m, c] : other->terms()) scale = std::max(scale, std::abs(c.to_complex()));
        for (Complex y0 : ys) {
            auto ov = other->eval(x0, y0);
            double mag = std::pow(std::max({1.0, std::abs(x0), std::abs(y0)}),
                                  std::max(0, other->total_degree()));
            if (!ov || std::abs(*ov) > filter_tol * scale * mag) continue;
            auto [x1, y1] = newton_polish(sys, x0, y0);
            if (sys.residual_norm(x1, y1) <= tol) accepted.push_back({x1, y1});
        }
    }

    // Deduplicate points.
    for (auto pt : accepted) {
        bool dup = false;
        for (auto kept : fiber.points) {
            double d = std::hypot(std::abs(pt.first - kept.first), std::abs(pt.second - kept.second));
            double s = std::max({1.0, std::abs(pt.first), std::abs(pt.second)});
            if (d <= 1e-6 * s) {
                dup = true;
                break;
            }
        }
        if (!dup) fiber.points.push_back(pt);
    }
    std::sort(fiber.points.begin(), fiber.points.end(), [](const auto& l, const auto& r) {
        if (l.first.real() != r.first.real()) return l.first.real() < r.first.real();
        if (l.first.imag() != r.first.imag()) return l.first.imag() < r.first.imag();
        if (l.second.real() != r.second.real()) return l.second.real() < r.second.real();
        return l.second.imag() < r.second.imag();
    });
    for (auto [x, y] : fiber.points)
        fiber.max_residual = std::max(fiber.max_residual, sys.residual_norm(x, y));
    return fiber;
}

double distance_to_curves(const std::vector<AsymptoticCurve>& curves,
                          std::pair<Complex, Complex> a) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& curve : curves) {
        for (int m = 0; m < 8; ++m) {
            double radius = 10.0 * double(m + 1) / 8.0;
            for (int l = 0; l < 64; ++l) {
                double angle = 2.0 * M_PI * double(l) / 64.0;
                Complex z = radius * Complex(std::cos(angle), std::sin(angle));
                auto [pz, qz] = curve_sample(curve, z);
                best = std::min(best,
                                std::hypot(std::abs(pz - a.first), std::abs(qz - a.second)));
            }
        }
    }
    return best;
}

DominanceReport dominancy_check(const PolyMap& F, int sample_count, std::uint64_t seed,
                                double tol, double box,
                                const std::vector<AsymptoticCurve>* curves) {
    DominanceReport report;
    report.samples = sample_count;
    report.seed = seed;
    report.box = box;

    enum class Outcome { Nonempty, Empty, Skipped, Failure };
    std::vector<Outcome> outcomes(static_cast<std::size_t>(sample_count));
    std::vector<std::pair<Complex, Complex>> targets(static_cast<std::size_t>(sample_count));

#pragma omp parallel for schedule(dynamic)
    for (int idx = 0; idx < sample_count; ++idx) {
        std::uint64_t state = seed ^ (0xA0761D6478BD642Full * std::uint64_t(idx + 1));
        Complex a1(uniform_pm(state, box), uniform_pm(state, box));
        Complex a2(uniform_pm(state, box), uniform_pm(state, box));
        targets[static_cast<std::size_t>(idx)] = {a1, a2};

        if (curves && !curves->empty() &&
            distance_to_curves(*curves, {a1, a2}) < 1e-6) {
            outcomes[static_cast<std::size_t>(idx)] = Outcome::Skipped;
            continue;
        }
        try {
            Fiber fiber = fiber_solve(F, {a1, a2}, tol);
            if (fiber.degenerate)
                outcomes[static_cast<std::size_t>(idx)] = Outcome::Failure;
            else
                outcomes[static_cast<std::size_t>(idx)] =
                    fiber.points.empty() ? Outcome::Empty : Outcome::Nonempty;
        } catch (const RootFindError&) {
            outcomes[static_cast<std::size_t>(idx)] = Outcome::Failure;
        }
    }

    for (int idx = 0; idx < sample_count; ++idx) {
        switch (outcomes[static_cast<std::size_t>(idx)]) {
            case Outcome::Nonempty: ++report.nonempty_fibers; break;
            case Outcome::Empty:
                ++report.empty_fibers;
                report.empty_targets.push_back(targets[static_cast<std::size_t>(idx)]);
                break;
            case Outcome::Skipped: ++report.skipped_near_sf; break;
            case Outcome::Failure: ++report.solver_failures; break;
        }
    }
    report.dominant_consistent = report.empty_fibers == 0 && report.solver_failures == 0;
    return report;
}

}  // namespace jlab
