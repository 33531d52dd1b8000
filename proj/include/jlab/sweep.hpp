#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jlab/classify.hpp"
#include "jlab/pertinent.hpp"

namespace jlab {

/// Bounded candidate space for the counter-example model sweeps.
/// Shape set: tag expressions a U_0 + b U_1 (+ optionally one extra monomial
/// of tag degree <= tag_degree), coefficients drawn from `coefficients`;
/// U_0 and U_1 are always used, matching the alpha_0 != 0, alpha_1 != 0
/// constraint of the model.
struct SearchBounds {
    std::vector<Orientation> orientations = {Orientation::XDominant};
    int r_min = 2, r_max = 2;
    int s_min = 1, s_max = 1;
    int n_min = 1, n_max = 1;
    std::vector<GaussRat> coefficients;
    int tag_degree = 2;      // 1 = linear shapes only
    bool enforce_gcd = true;  // require gcd(r-1, s) = 1 for r >= 2

    friend bool operator==(const SearchBounds& a, const SearchBounds& b) {
        return a.orientations == b.orientations && a.r_min == b.r_min && a.r_max == b.r_max &&
               a.s_min == b.s_min && a.s_max == b.s_max && a.n_min == b.n_min &&
               a.n_max == b.n_max && a.coefficients == b.coefficients &&
               a.tag_degree == b.tag_degree && a.enforce_gcd == b.enforce_gcd;
    }
};

struct Candidate {
    std::uint64_t index = 0;
    PertinentFamily family;
    TagPoly E_f, E_g;
    PolyMap map;

    friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// One tag expression a U_0 + b U_1 (+ c * extra monomial).
struct ExprParts {
    GaussRat a, b;
    int extra_index = -1;  // -1: no extra monomial
    GaussRat c;
};

/// Deterministic, indexable enumeration of the candidate space; stream order
/// is lexicographic in (orientation, r, s, N, E_f encoding, E_g encoding).
class CandidateEnumeration {
public:
    struct FamilyBlock {
        PertinentFamily fam;
        std::uint64_t offset = 0;      // first global index of this block
        std::uint64_t count = 0;       // expr_count^2
        std::uint64_t expr_count = 0;  // encodings per tag expression
        std::vector<TagMono> extras;   // shape monomials beyond U_0, U_1
    };

    explicit CandidateEnumeration(const SearchBounds& bounds);

    std::uint64_t total() const { return total_; }
    const std::vector<FamilyBlock>& blocks() const { return blocks_; }
    const SearchBounds& bounds() const { return bounds_; }

    Candidate get(std::uint64_t index) const;
    ExprParts decode_expr(std::uint64_t code) const;

private:
    const FamilyBlock& block_for(std::uint64_t index, std::uint64_t& local) const;

    SearchBounds bounds_;
    std::vector<FamilyBlock> blocks_;
    std::uint64_t total_ = 0;
};

struct SweepReport {
    SearchBounds bounds;
    std::uint64_t tested = 0;
    std::uint64_t passed_good = 0;
    std::uint64_t failed_good = 0;
    // check_nzc runs on every candidate; counts split by goodness.
    std::uint64_t nzc_holds_good = 0;
    std::uint64_t nzc_holds_not_good = 0;
    std::uint64_t det_zero_good = 0, det_zero_not_good = 0;
    std::uint64_t det_nonconstant_good = 0, det_nonconstant_not_good = 0;
    std::map<std::string, std::uint64_t> good_violation_counts;
    // r = 1 candidates: exact divisibility certificates.
    std::uint64_t refuted = 0;
    std::uint64_t refute_failures = 0;
    /// Any candidate satisfying the Non-Zero Condition would be a
    /// counter-example model instance; surfaced verbatim.
    std::vector<Candidate> nzc_hits;

    std::uint64_t nzc_holds() const { return nzc_holds_good + nzc_holds_not_good; }

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Serial reference sweep; the parallel version must agree byte for byte.
SweepReport nzc_sweep_serial(const SearchBounds& bounds, std::uint64_t begin = 0,
                             std::optional<std::uint64_t> end = std::nullopt,
                             SweepReport carry = {});

/// OpenMP sweep over the candidate space. jobs = 0 uses the OpenMP default;
/// results are independent of the worker count.
SweepReport nzc_sweep(const SearchBounds& bounds, int jobs = 0, std::uint64_t begin = 0,
                      std::optional<std::uint64_t> end = std::nullopt, SweepReport carry = {});

/// Resumable checkpointing: JSON with bounds, next index, partial statistics.
std::string checkpoint_to_json(const SearchBounds& bounds, std::uint64_t next_index,
                               const SweepReport& partial);
struct CheckpointState {
    SearchBounds bounds;
    std::uint64_t next_index = 0;
    SweepReport partial;
};
CheckpointState checkpoint_from_json(const std::string& text);

/// Full sweep with periodic checkpoints written to `path` (atomic rename);
/// resumes from an existing checkpoint when `resume` is set.
SweepReport nzc_sweep_checkpointed(const SearchBounds& bounds, const std::string& path,
                                   bool resume, int jobs = 0,
                                   std::uint64_t chunk_size = 8192);

}  // namespace jlab
