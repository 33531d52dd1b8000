#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "jlab/classify.hpp"
#include "jlab/mapio.hpp"
#include "jlab/sweep.hpp"

using namespace jlab;

namespace {

SearchBounds linear_16() {
    SearchBounds b;
    b.orientations = {Orientation::XDominant};
    b.r_min = b.r_max = 2;
    b.s_min = b.s_max = 1;
    b.n_min = b.n_max = 1;
    b.coefficients = {GaussRat(1), GaussRat(-1)};
    b.tag_degree = 1;  // linear shapes only
    return b;
}

SearchBounds c2_small() {
    SearchBounds b;
    b.orientations = {Orientation::XDominant};
    b.r_min = b.r_max = 1;
    b.s_min = b.s_max = 1;
    b.n_min = b.n_max = 1;
    b.coefficients = {GaussRat(1), GaussRat(-1)};
    b.tag_degree = 2;
    return b;
}

}  // namespace

TEST_CASE("the linear shape space has 16 candidates and 8 good maps") {
    SearchBounds b = linear_16();
    CandidateEnumeration e(b);
    CHECK(e.total() == 16);

    SweepReport rep = nzc_sweep_serial(b);
    CHECK(rep.tested == 16);
    CHECK(rep.passed_good == 8);
    CHECK(rep.failed_good == 8);
    CHECK(rep.nzc_holds() == 0);
    // det JF = (bc - ad)(1 - 2xy): zero for half the coefficient choices.
    CHECK(rep.det_zero_not_good == 8);
    CHECK(rep.det_nonconstant_good == 8);

    // Per-candidate closed form; coefficients read straight from the tag
    // expressions.
    BiPoly base = parse_poly("1 - 2*x*y");
    for (std::uint64_t idx = 0; idx < e.total(); ++idx) {
        Candidate cand = e.get(idx);
        GaussRat ca, cb, cc, cd;
        for (const auto& t : cand.E_f.terms()) {
            if (t.mono.u[0] == 1) ca = t.coeff;
            if (t.mono.u[1] == 1) cb = t.coeff;
        }
        for (const auto& t : cand.E_g.terms()) {
            if (t.mono.u[0] == 1) cc = t.coeff;
            if (t.mono.u[1] == 1) cd = t.coeff;
        }
        CHECK(jacobian_det(cand.map) == (cb * cc - ca * cd) * base);
    }
}

TEST_CASE("empty coefficient set gives an empty stream") {
    SearchBounds b = linear_16();
    b.coefficients.clear();
    CandidateEnumeration e(b);
    CHECK(e.total() == 0);
    SweepReport rep = nzc_sweep(b);
    CHECK(rep.tested == 0);
}

TEST_CASE("c2 sweep: every candidate fails NZC and refutes with a certificate") {
    SearchBounds b = c2_small();
    CandidateEnumeration e(b);
    // K = 2^2 (1 + 3 extras * 2 coeffs) = 28 expressions, 784 candidates.
    CHECK(e.total() == 784);

    SweepReport rep = nzc_sweep(b);
    CHECK(rep.tested == 784);
    CHECK(rep.nzc_holds() == 0);
    CHECK(rep.refuted == 784);
    CHECK(rep.refute_failures == 0);
    // Counts partition: nzc decisions split passed_good and failed_good.
    CHECK(rep.tested == rep.passed_good + rep.failed_good);
    CHECK(rep.passed_good ==
          rep.nzc_holds_good + rep.det_zero_good + rep.det_nonconstant_good);
    CHECK(rep.failed_good ==
          rep.nzc_holds_not_good + rep.det_zero_not_good + rep.det_nonconstant_not_good);
}

TEST_CASE("candidates round-trip through the text form") {
    CandidateEnumeration e(c2_small());
    for (std::uint64_t idx = 0; idx < e.total(); idx += 13) {
        Candidate cand = e.get(idx);
        CHECK(parse_poly(render(cand.map.f)) == cand.map.f);
        CHECK(parse_poly(render(cand.map.g)) == cand.map.g);
    }
}

TEST_CASE("candidate maps match the tag expressions exactly") {
    CandidateEnumeration e(c2_small());
    for (std::uint64_t idx = 0; idx < e.total(); idx += 37) {
        Candidate cand = e.get(idx);
        auto us = family_generators(cand.family);
        CHECK(cand.E_f.substitute_tags(us) == cand.map.f);
        CHECK(cand.E_g.substitute_tags(us) == cand.map.g);
        CHECK(cand.E_f.uses_tag(0));
        CHECK(cand.E_f.uses_tag(1));
    }
}

TEST_CASE("serial and parallel sweeps agree exactly") {
    SearchBounds b = c2_small();
    SweepReport serial = nzc_sweep_serial(b);
    SweepReport par2 = nzc_sweep(b, 2);
    SweepReport par4 = nzc_sweep(b, 4);
    CHECK(serial == par2);
    CHECK(serial == par4);
}

TEST_CASE("sweep ranges compose: prefix + suffix equals the whole") {
    SearchBounds b = c2_small();
    SweepReport whole = nzc_sweep(b);
    SweepReport prefix = nzc_sweep(b, 0, 0, 300);
    SweepReport combined = nzc_sweep(b, 0, 300, std::nullopt, prefix);
    CHECK(whole == combined);
}

TEST_CASE("checkpointing resumes to the same report") {
    SearchBounds b = c2_small();
    const std::string path = "test_checkpoint.json";
    std::remove(path.c_str());

    // Simulate an interrupted run: stats for the first 256 candidates.
    SweepReport partial = nzc_sweep(b, 0, 0, 256);
    {
        std::ofstream out(path);
        out << checkpoint_to_json(b, 256, partial);
    }
    SweepReport resumed = nzc_sweep_checkpointed(b, path, true, 0, 128);
    SweepReport whole = nzc_sweep(b);
    CHECK(resumed == whole);

    // The checkpoint file round-trips.
    {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        CheckpointState st = checkpoint_from_json(ss.str());
        CHECK((st.bounds == b));
        CHECK(st.next_index == CandidateEnumeration(b).total());
    }

    // Mismatched bounds are rejected.
    SearchBounds other = c2_small();
    other.s_max = 2;
    CHECK_THROWS_AS(nzc_sweep_checkpointed(other, path, true, 0, 128), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("gcd admissibility prunes blocks unless lifted") {
    SearchBounds b;
    b.orientations = {Orientation::XDominant};
    b.r_min = b.r_max = 3;
    b.s_min = b.s_max = 2;  // gcd(2, 2) = 2: inadmissible
    b.n_min = b.n_max = 1;
    b.coefficients = {GaussRat(1)};
    CHECK(CandidateEnumeration(b).total() == 0);
    b.enforce_gcd = false;
    CHECK(CandidateEnumeration(b).total() > 0);
}

TEST_CASE("model sweep over both orientations doubles the space") {
    SearchBounds b = linear_16();
    b.orientations = {Orientation::XDominant, Orientation::YDominant};
    CandidateEnumeration e(b);
    CHECK(e.total() == 32);
    SweepReport rep = nzc_sweep(b);
    CHECK(rep.tested == 32);
    CHECK(rep.nzc_holds() == 0);
}
