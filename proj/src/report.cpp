#include "jlab/report.hpp"

#include <json.hpp>

#include "jlab/mapio.hpp"

namespace jlab {

namespace {

using nlohmann::json;

json complex_json(Complex z) {
    return json{{"re", z.real()}, {"im", z.imag()}};
}

json family_json(const PertinentFamily& fam) {
    return json{{"orientation", to_string(fam.orientation)},
                {"r", fam.r},
                {"s", fam.s},
                {"N", fam.N}};
}

json unipoly_json(const UniPoly& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

}  // namespace

std::string Report::to_json() const {
    json j;

    if (map) {
        json m;
        if (!map_name.empty()) m["name"] = map_name;
        m["f"] = render(map->f);
        m["g"] = render(map->g);
        j["map"] = std::move(m);
    } else {
        j["map"] = nullptr;
    }

    if (good) {
        json g;
        g["is_good"] = good->is_good;
        g["alpha"] = to_string(good->alpha);
        g["beta"] = to_string(good->beta);
        g["alpha_prime"] = to_string(good->alpha_prime);
        g["beta_prime"] = to_string(good->beta_prime);
        json v = json::array();
        for (GoodViolation viol : good->violations) v.push_back(to_string(viol));
        g["violations"] = std::move(v);
        j["good"] = std::move(g);
    } else {
        j["good"] = nullptr;
    }

    if (classification || nzc) {
        json c;
        if (nzc) {
            json n;
            n["holds"] = nzc->holds;
            n["det"] = render(nzc->det);
            if (nzc->constant_value)
                n["constant"] = to_string(*nzc->constant_value);
            else
                n["constant"] = nullptr;
            c["nzc"] = std::move(n);
        }
        if (classification) {
            c["label"] = to_string(classification->label);
            json recs = json::array();
            for (const auto& rec : classification->recognitions) {
                json r;
                r["family"] = family_json(rec.family);
                r["E_f"] = render(rec.E_f);
                r["E_g"] = render(rec.E_g);
                r["uses_U0"] = json::array({rec.f_uses_u0, rec.g_uses_u0});
                r["uses_U1"] = json::array({rec.f_uses_u1, rec.g_uses_u1});
                recs.push_back(std::move(r));
            }
            c["recognitions"] = std::move(recs);
            json und = json::array();
            for (const auto& fam : classification->undecided) und.push_back(family_json(fam));
            c["undecided"] = std::move(und);
        }
        j["class"] = std::move(c);
    } else {
        j["class"] = nullptr;
    }

    if (curves) {
        json a;
        json list = json::array();
        for (const auto& curve : *curves) {
            json c;
            c["family"] = family_json(curve.family);
            c["D"] = curve.D;
            c["root_of_unity_order"] = curve.root_of_unity_order;
            c["u0"] = to_string(curve.u0_value);
            c["extension"] = curve.extension;
            c["P"] = unipoly_json(curve.P);
            c["Q"] = unipoly_json(curve.Q);
            c["P_text"] = render(curve.P, "z");
            c["Q_text"] = render(curve.Q, "z");
            list.push_back(std::move(c));
        }
        a["curves"] = std::move(list);
        a["inexact_roots_skipped"] = inexact_roots_skipped;
        j["asymptotic"] = std::move(a);
    } else {
        j["asymptotic"] = nullptr;
    }

    json dom = nullptr;
    if (dominance) {
        json d;
        d["samples"] = dominance->samples;
        d["nonempty_fibers"] = dominance->nonempty_fibers;
        d["empty_fibers"] = dominance->empty_fibers;
        d["skipped_near_sf"] = dominance->skipped_near_sf;
        d["solver_failures"] = dominance->solver_failures;
        d["seed"] = dominance->seed;
        d["box"] = dominance->box;
        d["dominant_consistent"] = dominance->dominant_consistent;
        json empties = json::array();
        for (const auto& [a1, a2] : dominance->empty_targets)
            empties.push_back(json::array({complex_json(a1), complex_json(a2)}));
        d["empty_targets"] = std::move(empties);
        dom = std::move(d);
    }
    if (fiber) {
        json f;
        f["target"] = json::array({complex_json(fiber->target.first), complex_json(fiber->target.second)});
        json pts = json::array();
        for (const auto& [x, y] : fiber->points)
            pts.push_back(json::array({complex_json(x), complex_json(y)}));
        f["points"] = std::move(pts);
        f["max_residual"] = fiber->max_residual;
        f["degenerate"] = fiber->degenerate;
        if (!fiber->note.empty()) f["note"] = fiber->note;
        if (dom.is_null()) dom = json::object();
        dom["fiber"] = std::move(f);
    }
    j["dominance"] = std::move(dom);

    return j.dump(2);
}

std::string sweep_report_to_json(const SweepReport& report) {
    json j;
    j["tested"] = report.tested;
    j["passed_good"] = report.passed_good;
    j["failed_good"] = report.failed_good;
    j["nzc_holds"] = report.nzc_holds();
    j["nzc_holds_good"] = report.nzc_holds_good;
    j["nzc_holds_not_good"] = report.nzc_holds_not_good;
    j["det_zero_good"] = report.det_zero_good;
    j["det_zero_not_good"] = report.det_zero_not_good;
    j["det_nonconstant_good"] = report.det_nonconstant_good;
    j["det_nonconstant_not_good"] = report.det_nonconstant_not_good;
    j["good_violation_counts"] = report.good_violation_counts;
    j["refuted"] = report.refuted;
    j["refute_failures"] = report.refute_failures;
    json hits = json::array();
    for (const auto& hit : report.nzc_hits) {
        json h;
        h["index"] = hit.index;
        h["family"] = family_json(hit.family);
        h["E_f"] = render(hit.E_f);
        h["E_g"] = render(hit.E_g);
        h["f"] = render(hit.map.f);
        h["g"] = render(hit.map.g);
        BiPoly det = jacobian_det(hit.map);
        h["det"] = render(det);
        hits.push_back(std::move(h));
    }
    j["nzc_hits"] = std::move(hits);
    return j.dump(2);
}

}  // namespace jlab
