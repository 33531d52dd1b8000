#include <omp.h>

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "jlab/asymptotic.hpp"
#include "jlab/classify.hpp"
#include "jlab/fiber.hpp"
#include "jlab/groebner.hpp"
#include "jlab/mapio.hpp"
#include "jlab/pertinent.hpp"
#include "jlab/report.hpp"
#include "jlab/sweep.hpp"
#include "jlab/verify.hpp"

using namespace jlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;
constexpr int kExitResourceCap = 3;

// "a", "bi", "a+bi", "a-bi"; also bare "i" and "-i".
Complex parse_complex(std::string text) {
    std::erase(text, ' ');
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < text.size(); ++k)
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E')
            split = k;
    auto parse_part = [](std::string part) -> std::pair<double, bool> {
        bool imag = false;
        if (!part.empty() && part.back() == 'i') {
            imag = true;
            part.pop_back();
            if (part.empty() || part == "+") part = "1";
            if (part == "-") part = "-1";
        }
        std::size_t used = 0;
        double v = std::stod(part, &used);
        if (used != part.size()) throw std::invalid_argument("bad numeric literal: " + part);
        return {v, imag};
    };
    if (split == std::string::npos) {
        auto [v, imag] = parse_part(text);
        return imag ? Complex(0, v) : Complex(v, 0);
    }
    auto [re, re_imag] = parse_part(text.substr(0, split));
    auto [im, im_imag] = parse_part(text.substr(split));
    if (re_imag || !im_imag) throw std::invalid_argument("expected re +/- im i: " + text);
    return Complex(re, im);
}

std::vector<Complex> parse_complex_list(const std::string& text) {
    std::vector<Complex> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_complex(item));
    return out;
}

std::vector<GaussRat> parse_coeff_list(const std::string& text) {
    std::vector<GaussRat> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        BiPoly p = parse_poly(item);
        if (!p.is_constant()) throw std::invalid_argument("coefficient is not a constant: " + item);
        out.push_back(p.coeff(0, 0));
    }
    return out;
}

// "2" or "1..3"
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

std::string fmt_complex(Complex z) {
    std::ostringstream out;
    out.precision(12);
    out << z.real();
    if (z.imag() != 0.0) out << (z.imag() > 0 ? "+" : "-") << std::abs(z.imag()) << "i";
    return out.str();
}

struct Analysis {
    MapFile file;
    ClassReport classification;
    NzcVerdict nzc;
    std::vector<AsymptoticCurve> curves;
    std::vector<std::size_t> curve_recognition;  // index into recognitions, parallel to curves
    int inexact_roots_skipped = 0;
};

Analysis analyze(const std::string& path, const RecognizeBounds& bounds) {
    Analysis a;
    a.file = load_map_file(path);
    a.nzc = check_nzc(a.file.map);
    a.classification = recognize(a.file.map, bounds);
    for (std::size_t ri = 0; ri < a.classification.recognitions.size(); ++ri) {
        CurveSet set = asymptotic_curves(a.classification.recognitions[ri]);
        for (auto& c : set.curves) {
            a.curves.push_back(std::move(c));
            a.curve_recognition.push_back(ri);
        }
        a.inexact_roots_skipped += set.inexact_roots_skipped;
    }
    return a;
}

void print_classification(const Analysis& a) {
    const auto& good = a.classification.good;
    std::cout << "map: f = " << render(a.file.map.f) << "\n";
    std::cout << "     g = " << render(a.file.map.g) << "\n";
    std::cout << "good: " << (good.is_good ? "yes" : "no");
    if (!good.violations.empty()) {
        std::cout << " (";
        for (std::size_t k = 0; k < good.violations.size(); ++k)
            std::cout << (k ? ", " : "") << to_string(good.violations[k]);
        std::cout << ")";
    }
    std::cout << "\n";
    std::cout << "linear part: alpha = " << to_string(good.alpha)
              << ", beta = " << to_string(good.beta)
              << ", alpha' = " << to_string(good.alpha_prime)
              << ", beta' = " << to_string(good.beta_prime) << "\n";
    std::cout << "non-zero condition: " << (a.nzc.holds ? "holds" : "fails");
    if (a.nzc.holds)
        std::cout << " (det JF = " << to_string(*a.nzc.constant_value) << ")";
    else
        std::cout << " (det JF = " << render(a.nzc.det) << ")";
    std::cout << "\n";
    std::cout << "class: " << to_string(a.classification.label) << "\n";
    for (const auto& rec : a.classification.recognitions) {
        std::cout << "  recognition: orientation " << to_string(rec.family.orientation)
                  << ", r = " << rec.family.r << ", s = " << rec.family.s
                  << ", N = " << rec.family.N << "\n";
        std::cout << "    E_f = " << render(rec.E_f) << "\n";
        std::cout << "    E_g = " << render(rec.E_g) << "\n";
    }
    for (const auto& fam : a.classification.undecided)
        std::cout << "  undecided (resource cap): orientation " << to_string(fam.orientation)
                  << ", r = " << fam.r << ", s = " << fam.s << ", N = " << fam.N << "\n";
}

Report base_report(const Analysis& a) {
    Report rep;
    rep.map_name = a.file.name;
    rep.map = a.file.map;
    rep.good = a.classification.good;
    rep.nzc = a.nzc;
    rep.classification = a.classification;
    return rep;
}

int cmd_classify(const std::string& path, bool json, const RecognizeBounds& bounds,
                 bool with_curves) {
    Analysis a = analyze(path, bounds);
    if (json) {
        Report rep = base_report(a);
        rep.curves = a.curves;
        rep.inexact_roots_skipped = a.inexact_roots_skipped;
        std::cout << rep.to_json() << "\n";
    } else {
        print_classification(a);
        if (with_curves) {
            for (const auto& c : a.curves) {
                std::cout << "asymptotic curve (D = " << c.D
                          << (c.extension ? ", extension" : "")
                          << ", U0 = " << to_string(c.u0_value)
                          << "): P = " << render(c.P, "z") << ", Q = " << render(c.Q, "z")
                          << "\n";
            }
            if (a.curves.empty()) std::cout << "no asymptotic parametrization available\n";
        }
    }
    return a.classification.label == ClassLabel::Undecided ? kExitResourceCap : kExitOk;
}

int cmd_verify(const std::string& path, bool json, const std::vector<Complex>& zs, double tol,
               const std::string& csv_path) {
    Analysis a = analyze(path, {});
    if (a.curves.empty()) {
        std::cerr << "verify: no recognition, nothing to check\n";
        return a.classification.label == ClassLabel::Undecided ? kExitResourceCap : kExitFinding;
    }
    bool all_ok = true;
    std::ostringstream csv;
    for (std::size_t ci = 0; ci < a.curves.size(); ++ci) {
        const auto& curve = a.curves[ci];
        const Recognition& rec = a.classification.recognitions[a.curve_recognition[ci]];
        for (Complex z : zs) {
            SeqSpec spec;
            spec.family = curve.family;
            spec.j = curve.D;
            spec.z = z;
            LimitReport rep = limit_check(a.file.map, curve, spec, tol, &rec);
            all_ok = all_ok && rep.converged && rep.u_limits_ok;
            if (!json) {
                std::cout << "limit check: D = " << curve.D
                          << ", U0 = " << to_string(curve.u0_value)
                          << ", z = " << fmt_complex(z) << ": target ("
                          << fmt_complex(rep.target_f) << ", " << fmt_complex(rep.target_g)
                          << "), final error = " << rep.final_error
                          << (rep.slope ? ", slope = " + std::to_string(*rep.slope) : "")
                          << (rep.converged ? " [converged]" : " [NOT CONVERGED]") << "\n";
            }
            if (!csv_path.empty()) {
                csv << "# curve D=" << curve.D << " U0=" << to_string(curve.u0_value)
                    << " z=" << fmt_complex(z) << "\n"
                    << limit_report_csv(rep);
            }
        }
    }
    if (json)
        std::cout << "{\"verified\": " << (all_ok ? "true" : "false") << "}\n";
    else
        std::cout << (all_ok ? "all limit checks converged" : "non-convergence detected") << "\n";
    if (!csv_path.empty()) {
        std::ofstream out(csv_path);
        out << csv.str();
    }
    return all_ok ? kExitOk : kExitFinding;
}

int cmd_fiber(const std::string& path, bool json, Complex a1, Complex a2, double tol) {
    MapFile file = load_map_file(path);
    Fiber fiber = fiber_solve(file.map, {a1, a2}, tol);
    if (json) {
        Report rep;
        rep.map_name = file.name;
        rep.map = file.map;
        rep.fiber = fiber;
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << "fiber of (" << fmt_complex(a1) << ", " << fmt_complex(a2) << "): "
                  << fiber.points.size() << " point(s)\n";
        for (auto [x, y] : fiber.points)
            std::cout << "  (" << fmt_complex(x) << ", " << fmt_complex(y) << ")\n";
        if (fiber.degenerate) std::cout << "  degenerate: " << fiber.note << "\n";
        if (!fiber.points.empty()) std::cout << "max residual: " << fiber.max_residual << "\n";
    }
    return kExitOk;
}

int cmd_dominance(const std::string& path, bool json, int samples, std::uint64_t seed,
                  double box, double tol) {
    Analysis a = analyze(path, {});
    DominanceReport dom = dominancy_check(a.file.map, samples, seed, tol, box, &a.curves);
    if (json) {
        Report rep = base_report(a);
        rep.curves = a.curves;
        rep.inexact_roots_skipped = a.inexact_roots_skipped;
        rep.dominance = dom;
        std::cout << rep.to_json() << "\n";
    } else {
        std::cout << "dominance sampling: " << dom.nonempty_fibers << "/" << dom.samples
                  << " nonempty fibers, " << dom.empty_fibers << " empty, "
                  << dom.skipped_near_sf << " skipped near S_F, " << dom.solver_failures
                  << " solver failures (seed " << dom.seed << ", box " << dom.box << ")\n";
        for (auto [t1, t2] : dom.empty_targets)
            std::cout << "  empty fiber at (" << fmt_complex(t1) << ", " << fmt_complex(t2)
                      << ")\n";
        std::cout << "verdict: "
                  << (dom.dominant_consistent ? "dominant-consistent" : "not dominant-consistent")
                  << "\n";
    }
    return kExitOk;
}

int cmd_sweep(const SearchBounds& bounds, bool json, int jobs, const std::string& checkpoint,
              bool resume) {
    SweepReport report;
    if (checkpoint.empty())
        report = nzc_sweep(bounds, jobs);
    else
        report = nzc_sweep_checkpointed(bounds, checkpoint, resume, jobs);

    if (json) {
        std::cout << sweep_report_to_json(report) << "\n";
    } else {
        std::cout << "sweep: " << report.tested << " candidates, " << report.passed_good
                  << " good, " << report.failed_good << " not good\n";
        std::cout << report.nzc_holds() << " NZC hits\n";
        if (report.refuted + report.refute_failures > 0)
            std::cout << "r = 1 refutations: " << report.refuted << " certificates, "
                      << report.refute_failures << " failures\n";
        for (const auto& hit : report.nzc_hits) {
            std::cout << "NZC HIT (would be a counter-example model instance!):\n"
                      << "  index " << hit.index << ", orientation "
                      << to_string(hit.family.orientation) << ", r = " << hit.family.r
                      << ", s = " << hit.family.s << ", N = " << hit.family.N << "\n"
                      << "  E_f = " << render(hit.E_f) << "\n  E_g = " << render(hit.E_g) << "\n"
                      << "  f = " << render(hit.map.f) << "\n  g = " << render(hit.map.g) << "\n"
                      << "  det JF = " << render(jacobian_det(hit.map)) << "\n";
        }
    }
    return report.nzc_hits.empty() ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pertinent-variable classification toolkit for plane polynomial maps"};
    app.require_subcommand(1);
    app.fallthrough();  // --json / --jobs may follow the subcommand

    bool json = false;
    int jobs = 0;
    app.add_flag("--json", json, "emit the machine-readable JSON report");
    app.add_option("--jobs", jobs,
                   "worker threads (0 = default); output is identical for any value");

    std::string map_path;
    std::optional<int> r_max, s_max;

    auto add_map_cmd = [&](const char* name, const char* desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("map", map_path, "map file (f = ..., g = ...)")->required();
        return cmd;
    };

    CLI::App* classify = add_map_cmd("classify", "good-map check, NZC, and C1/C2 classification");
    classify->add_option("--r-max", r_max,
                         "bound on r (default: max degree in the dominant variable)");
    classify->add_option("--s-max", s_max,
                         "bound on s (default: max degree in the other variable)");

    CLI::App* rewrite = add_map_cmd("rewrite", "pertinent-variable rewrites E_f, E_g");
    rewrite->add_option("--r-max", r_max);
    rewrite->add_option("--s-max", s_max);

    CLI::App* asymptotic = add_map_cmd("asymptotic", "parametric asymptotic curves");

    CLI::App* verify = add_map_cmd("verify", "numeric diverging-sequence validation");
    std::string z_list = "1,i,2-i";
    double tol = 1e-3;
    std::string csv_path;
    verify->add_option("--z", z_list, "comma-separated z samples (default 1,i,2-i)");
    verify->add_option("--tol", tol, "convergence tolerance (default 1e-3)");
    verify->add_option("--csv", csv_path, "write the k-trace as CSV");

    CLI::App* fiber = add_map_cmd("fiber", "solve F(x, y) = a");
    std::string target;
    double fiber_tol = 1e-9;
    fiber->add_option("--target", target, "target point a1,a2 (complex, e.g. 1,2-i)")->required();
    fiber->add_option("--tol", fiber_tol, "residual tolerance (default 1e-9)");

    CLI::App* dominance = add_map_cmd("dominance", "sampling-based dominancy verdict");
    int samples = 50;
    std::uint64_t seed = 42;
    double box = 5.0;
    double dom_tol = 1e-9;
    dominance->add_option("--samples", samples, "number of sampled targets (default 50)");
    dominance->add_option("--seed", seed, "RNG seed (default 42)");
    dominance->add_option("--box", box, "sampling box half-width (default 5)");
    dominance->add_option("--tol", dom_tol, "fiber residual tolerance (default 1e-9)");

    CLI::App* sweep = app.add_subcommand("sweep", "bounded counter-example model sweep");
    std::string r_range = "2", s_range = "1", n_range = "1", coeffs = "1,-1", orient = "x";
    std::string mode, checkpoint;
    int tag_degree = 2;
    bool resume = false, no_gcd = false;
    sweep->add_option("--r", r_range, "r value or range (e.g. 2 or 1..3)");
    sweep->add_option("--s", s_range, "s value or range");
    sweep->add_option("--N", n_range, "top index value or range");
    sweep->add_option("--coeffs", coeffs, "coefficient set (default 1,-1)");
    sweep->add_option("--orientation", orient, "x, y, or both (default x)");
    sweep->add_option("--tag-degree", tag_degree, "shape monomial degree cap, 1 or 2 (default 2)");
    sweep->add_option("--mode", mode, "model (r >= 2) or c2 (r = 1); validated against --r");
    sweep->add_option("--checkpoint", checkpoint, "checkpoint file (JSON, resumable)");
    sweep->add_flag("--resume", resume, "resume from the checkpoint file");
    sweep->add_flag("--no-gcd", no_gcd, "lift the gcd(r-1, s) = 1 constraint");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (jobs > 0) omp_set_num_threads(jobs);

    try {
        RecognizeBounds bounds{r_max, s_max};
        if (classify->parsed()) return cmd_classify(map_path, json, bounds, false);
        if (rewrite->parsed()) return cmd_classify(map_path, json, bounds, false);
        if (asymptotic->parsed()) return cmd_classify(map_path, json, bounds, true);
        if (verify->parsed())
            return cmd_verify(map_path, json, parse_complex_list(z_list), tol, csv_path);
        if (fiber->parsed()) {
            auto parts = parse_complex_list(target);
            if (parts.size() != 2) throw std::invalid_argument("--target needs a1,a2");
            return cmd_fiber(map_path, json, parts[0], parts[1], fiber_tol);
        }
        if (dominance->parsed()) return cmd_dominance(map_path, json, samples, seed, box, dom_tol);
        if (sweep->parsed()) {
            SearchBounds sb;
            sb.orientations.clear();
            if (orient == "x" || orient == "both") sb.orientations.push_back(Orientation::XDominant);
            if (orient == "y" || orient == "both") sb.orientations.push_back(Orientation::YDominant);
            if (sb.orientations.empty())
                throw std::invalid_argument("--orientation must be x, y, or both");
            std::tie(sb.r_min, sb.r_max) = parse_range(r_range);
            std::tie(sb.s_min, sb.s_max) = parse_range(s_range);
            std::tie(sb.n_min, sb.n_max) = parse_range(n_range);
            sb.coefficients = parse_coeff_list(coeffs);
            sb.tag_degree = tag_degree;
            sb.enforce_gcd = !no_gcd;
            if (mode == "model" && sb.r_min < 2)
                throw std::invalid_argument("model sweep requires r >= 2");
            if (mode == "c2" && (sb.r_min != 1 || sb.r_max != 1))
                throw std::invalid_argument("c2 sweep requires r = 1");
            if (!mode.empty() && mode != "model" && mode != "c2")
                throw std::invalid_argument("--mode must be model or c2");
            return cmd_sweep(sb, json, jobs, checkpoint, resume);
        }
    } catch (const ResourceCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
