#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jlab/sweep.hpp"

namespace jlab {

namespace {

using nlohmann::json;

json gaussrat_to_json(const GaussRat& c) {
    return json{{"re", c.re().get_str()}, {"im", c.im().get_str()}};
}

GaussRat gaussrat_from_json(const json& j) {
    return GaussRat(Rational(j.at("re").get<std::string>(), 10),
                    Rational(j.at("im").get<std::string>(), 10));
}

json bounds_to_json(const SearchBounds& b) {
    json coeffs = json::array();
    for (const auto& c : b.coefficients) coeffs.push_back(gaussrat_to_json(c));
    json orients = json::array();
    for (Orientation o : b.orientations) orients.push_back(to_string(o));
    return json{{"orientations", orients},
                {"r_min", b.r_min},
                {"r_max", b.r_max},
                {"s_min", b.s_min},
                {"s_max", b.s_max},
                {"n_min", b.n_min},
                {"n_max", b.n_max},
                {"coefficients", coeffs},
                {"tag_degree", b.tag_degree},
                {"enforce_gcd", b.enforce_gcd}};
}

SearchBounds bounds_from_json(const json& j) {
    SearchBounds b;
    b.orientations.clear();
    for (const auto& o : j.at("orientations"))
        b.orientations.push_back(o.get<std::string>() == "x" ? Orientation::XDominant
                                                             : Orientation::YDominant);
    b.r_min = j.at("r_min").get<int>();
    b.r_max = j.at("r_max").get<int>();
    b.s_min = j.at("s_min").get<int>();
    b.s_max = j.at("s_max").get<int>();
    b.n_min = j.at("n_min").get<int>();
    b.n_max = j.at("n_max").get<int>();
    for (const auto& c : j.at("coefficients")) b.coefficients.push_back(gaussrat_from_json(c));
    b.tag_degree = j.at("tag_degree").get<int>();
    b.enforce_gcd = j.at("enforce_gcd").get<bool>();
    return b;
}

}  // namespace

std::string checkpoint_to_json(const SearchBounds& bounds, std::uint64_t next_index,
                               const SweepReport& partial) {
    json j;
    j["bounds"] = bounds_to_json(bounds);
    j["next_index"] = next_index;
    json stats;
    stats["tested"] = partial.tested;
    stats["passed_good"] = partial.passed_good;
    stats["failed_good"] = partial.failed_good;
    stats["nzc_holds_good"] = partial.nzc_holds_good;
    stats["nzc_holds_not_good"] = partial.nzc_holds_not_good;
    stats["det_zero_good"] = partial.det_zero_good;
    stats["det_zero_not_good"] = partial.det_zero_not_good;
    stats["det_nonconstant_good"] = partial.det_nonconstant_good;
    stats["det_nonconstant_not_good"] = partial.det_nonconstant_not_good;
    stats["refuted"] = partial.refuted;
    stats["refute_failures"] = partial.refute_failures;
    stats["good_violation_counts"] = partial.good_violation_counts;
    json hits = json::array();
    for (const auto& hit : partial.nzc_hits) hits.push_back(hit.index);
    stats["nzc_hit_indices"] = hits;
    j["stats"] = std::move(stats);
    return j.dump(2);
}

CheckpointState checkpoint_from_json(const std::string& text) {
    json j = json::parse(text);
    CheckpointState st;
    st.bounds = bounds_from_json(j.at("bounds"));
    st.next_index = j.at("next_index").get<std::uint64_t>();
    const json& stats = j.at("stats");
    SweepReport& p = st.partial;
    p.bounds = st.bounds;
    p.tested = stats.at("tested").get<std::uint64_t>();
    p.passed_good = stats.at("passed_good").get<std::uint64_t>();
    p.failed_good = stats.at("failed_good").get<std::uint64_t>();
    p.nzc_holds_good = stats.at("nzc_holds_good").get<std::uint64_t>();
    p.nzc_holds_not_good = stats.at("nzc_holds_not_good").get<std::uint64_t>();
    p.det_zero_good = stats.at("det_zero_good").get<std::uint64_t>();
    p.det_zero_not_good = stats.at("det_zero_not_good").get<std::uint64_t>();
    p.det_nonconstant_good = stats.at("det_nonconstant_good").get<std::uint64_t>();
    p.det_nonconstant_not_good = stats.at("det_nonconstant_not_good").get<std::uint64_t>();
    p.refuted = stats.at("refuted").get<std::uint64_t>();
    p.refute_failures = stats.at("refute_failures").get<std::uint64_t>();
    p.good_violation_counts =
        stats.at("good_violation_counts").get<std::map<std::string, std::uint64_t>>();
    CandidateEnumeration enumeration(st.bounds);
    for (const auto& idx : stats.at("nzc_hit_indices"))
        p.nzc_hits.push_back(enumeration.get(idx.get<std::uint64_t>()));
    return st;
}

SweepReport nzc_sweep_checkpointed(const SearchBounds& bounds, const std::string& path,
                                   bool resume, int jobs, std::uint64_t chunk_size) {
    std::uint64_t start = 0;
    SweepReport carry;
    if (resume) {
        std::ifstream in(path);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            CheckpointState st = checkpoint_from_json(ss.str());
            if (!(st.bounds == bounds))
                throw std::runtime_error("checkpoint bounds do not match the requested sweep");
            start = st.next_index;
            carry = std::move(st.partial);
        }
    }

    CandidateEnumeration enumeration(bounds);
    const std::uint64_t total = enumeration.total();
    SweepReport report = std::move(carry);
    report.bounds = bounds;
    for (std::uint64_t lo = start; lo < total; lo += chunk_size) {
        const std::uint64_t hi = std::min(total, lo + chunk_size);
        report = nzc_sweep(bounds, jobs, lo, hi, std::move(report));
        const std::string tmp = path + ".tmp";
        {
            std::ofstream out(tmp);
            out << checkpoint_to_json(bounds, hi, report);
        }
        std::rename(tmp.c_str(), path.c_str());
    }
    return report;
}

}  // namespace jlab
