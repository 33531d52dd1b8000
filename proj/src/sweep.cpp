#include "jlab/sweep.hpp"

#include <omp.h>

#include <algorithm>
#include <stdexcept>

namespace jlab {

namespace {

/// Extra shape monomials beyond the mandatory U_0, U_1 terms: remaining
/// degree-1 tags, then degree-2 products, lexicographic.
std::vector<TagMono> extra_monomials(int N, int tag_degree) {
    const std::size_t ntags = static_cast<std::size_t>(N) + 1;
    std::vector<TagMono> extras;
    for (int k = 2; k <= N; ++k) {
        TagMono m(ntags);
        m.u[static_cast<std::size_t>(k)] = 1;
        extras.push_back(std::move(m));
    }
    if (tag_degree >= 2) {
        for (int i = 0; i <= N; ++i)
            for (int j = i; j <= N; ++j) {
                TagMono m(ntags);
                m.u[static_cast<std::size_t>(i)] += 1;
                m.u[static_cast<std::size_t>(j)] += 1;
                extras.push_back(std::move(m));
            }
    }
    return extras;
}

}  // namespace

CandidateEnumeration::CandidateEnumeration(const SearchBounds& bounds) : bounds_(bounds) {
    const std::uint64_t C = bounds.coefficients.size();
    for (Orientation o : bounds.orientations)
        for (int r = bounds.r_min; r <= bounds.r_max; ++r)
            for (int s = bounds.s_min; s <= bounds.s_max; ++s)
                for (int N = bounds.n_min; N <= bounds.n_max; ++N) {
                    PertinentFamily fam{o, r, s, N};
                    if (r < 1 || s < 1 || N < 1) continue;
                    if (bounds.enforce_gcd && !family_valid(fam)) continue;
                    FamilyBlock blk;
                    blk.fam = fam;
                    blk.extras = extra_monomials(N, bounds.tag_degree);
                    blk.expr_count = C * C * (1 + blk.extras.size() * C);
                    blk.count = blk.expr_count * blk.expr_count;
                    if (blk.count == 0) continue;
                    blk.offset = total_;
                    total_ += blk.count;
                    blocks_.push_back(std::move(blk));
                }
}

const CandidateEnumeration::FamilyBlock& CandidateEnumeration::block_for(
    std::uint64_t index, std::uint64_t& local) const {
    for (const auto& blk : blocks_)
        if (index < blk.offset + blk.count) {
            local = index - blk.offset;
            return blk;
        }
    throw std::out_of_range("candidate index out of range");
}

ExprParts CandidateEnumeration::decode_expr(std::uint64_t code) const {
    const std::uint64_t C = bounds_.coefficients.size();
    ExprParts parts;
    parts.b = bounds_.coefficients[code % C];
    code /= C;
    parts.a = bounds_.coefficients[code % C];
    code /= C;
    if (code > 0) {
        std::uint64_t e = code - 1;
        parts.c = bounds_.coefficients[e % C];
        parts.extra_index = static_cast<int>(e / C);
    }
    return parts;
}

Candidate CandidateEnumeration::get(std::uint64_t index) const {
    std::uint64_t local = 0;
    const FamilyBlock& blk = block_for(index, local);
    const std::size_t ntags = static_cast<std::size_t>(blk.fam.N) + 1;

    auto expr_poly = [&](const ExprParts& parts) {
        TagPolyBuilder builder(ntags);
        TagMono u0(ntags), u1(ntags);
        u0.u[0] = 1;
        u1.u[1] = 1;
        builder.add(u0, parts.a);
        builder.add(u1, parts.b);
        if (parts.extra_index >= 0)
            builder.add(blk.extras[static_cast<std::size_t>(parts.extra_index)], parts.c);
        return builder.build();
    };

    Candidate cand;
    cand.index = index;
    cand.family = blk.fam;
    cand.E_f = expr_poly(decode_expr(local / blk.expr_count));
    cand.E_g = expr_poly(decode_expr(local % blk.expr_count));
    std::vector<BiPoly> us = family_generators(blk.fam);
    cand.map.f = cand.E_f.substitute_tags(us);
    cand.map.g = cand.E_g.substitute_tags(us);
    return cand;
}

namespace {

/// Per-family precomputation. Candidate maps are sparse linear combinations
/// of the substituted shape basis, and det JF is the matching bilinear
/// combination of the precomputed pairwise Wronskians.
struct FamilyContext {
    std::vector<BiPoly> sub;
    std::vector<std::vector<BiPoly>> wronskian;

    explicit FamilyContext(const CandidateEnumeration::FamilyBlock& blk) {
        const std::size_t ntags = static_cast<std::size_t>(blk.fam.N) + 1;
        std::vector<TagMono> basis;
        TagMono u0(ntags), u1(ntags);
        u0.u[0] = 1;
        u1.u[1] = 1;
        basis = {u0, u1};
        basis.insert(basis.end(), blk.extras.begin(), blk.extras.end());

        std::vector<BiPoly> us = family_generators(blk.fam);
        std::vector<BiPoly> dx, dy;
        for (const auto& m : basis) {
            BiPoly p(GaussRat(1));
            for (std::size_t k = 0; k < ntags; ++k)
                if (m.u[k] > 0) p *= us[k].pow(m.u[k]);
            sub.push_back(p);
            dx.push_back(p.derivative_x());
            dy.push_back(p.derivative_y());
        }
        const std::size_t B = basis.size();
        wronskian.assign(B, std::vector<BiPoly>(B));
        for (std::size_t p = 0; p < B; ++p)
            for (std::size_t q = 0; q < B; ++q)
                wronskian[p][q] = dx[p] * dy[q] - dy[p] * dx[q];
    }
};

using SparseExpr = std::vector<std::pair<std::size_t, GaussRat>>;

SparseExpr to_sparse(const ExprParts& parts) {
    SparseExpr e;
    e.push_back({0, parts.a});
    e.push_back({1, parts.b});
    if (parts.extra_index >= 0)
        e.push_back({static_cast<std::size_t>(parts.extra_index) + 2, parts.c});
    return e;
}

BiPoly combine(const SparseExpr& e, const std::vector<BiPoly>& basis) {
    BiPoly acc;
    for (const auto& [p, c] : e) acc += c * basis[p];
    return acc;
}

void merge_counts(SweepReport& into, const SweepReport& part) {
    into.tested += part.tested;
    into.passed_good += part.passed_good;
    into.failed_good += part.failed_good;
    into.nzc_holds_good += part.nzc_holds_good;
    into.nzc_holds_not_good += part.nzc_holds_not_good;
    into.det_zero_good += part.det_zero_good;
    into.det_zero_not_good += part.det_zero_not_good;
    into.det_nonconstant_good += part.det_nonconstant_good;
    into.det_nonconstant_not_good += part.det_nonconstant_not_good;
    for (const auto& [k, v] : part.good_violation_counts) into.good_violation_counts[k] += v;
    into.refuted += part.refuted;
    into.refute_failures += part.refute_failures;
    for (const auto& hit : part.nzc_hits) into.nzc_hits.push_back(hit);
}

}  // namespace

SweepReport nzc_sweep_serial(const SearchBounds& bounds, std::uint64_t begin,
                             std::optional<std::uint64_t> end, SweepReport carry) {
    return nzc_sweep(bounds, 1, begin, end, std::move(carry));
}

SweepReport nzc_sweep(const SearchBounds& bounds, int jobs, std::uint64_t begin,
                      std::optional<std::uint64_t> end, SweepReport carry) {
    CandidateEnumeration enumeration(bounds);
    const std::uint64_t stop = end.value_or(enumeration.total());
    if (stop > enumeration.total())
        throw std::out_of_range("sweep range exceeds candidate space");

    SweepReport report = std::move(carry);
    report.bounds = bounds;
    if (begin >= stop) return report;

    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

    for (const auto& blk : enumeration.blocks()) {
        const std::uint64_t lo = std::max(begin, blk.offset);
        const std::uint64_t hi = std::min(stop, blk.offset + blk.count);
        if (lo >= hi) continue;

        const FamilyContext ctx(blk);
        std::vector<SweepReport> partials(static_cast<std::size_t>(threads));

#pragma omp parallel for schedule(static) num_threads(threads)
        for (long long signed_idx = static_cast<long long>(lo);
             signed_idx < static_cast<long long>(hi); ++signed_idx) {
            const std::uint64_t idx = static_cast<std::uint64_t>(signed_idx);
            SweepReport& local = partials[static_cast<std::size_t>(omp_get_thread_num())];

            const std::uint64_t in_blk = idx - blk.offset;
            const SparseExpr ef = to_sparse(enumeration.decode_expr(in_blk / blk.expr_count));
            const SparseExpr eg = to_sparse(enumeration.decode_expr(in_blk % blk.expr_count));

            PolyMap map{combine(ef, ctx.sub), combine(eg, ctx.sub)};
            local.tested += 1;

            GoodMapReport good = check_good(map);
            if (good.is_good) {
                local.passed_good += 1;
            } else {
                local.failed_good += 1;
                for (GoodViolation v : good.violations)
                    local.good_violation_counts[to_string(v)] += 1;
            }

            BiPoly det;
            for (const auto& [p, cf] : ef)
                for (const auto& [q, cg] : eg) det += (cf * cg) * ctx.wronskian[p][q];
            const bool holds = det.term_count() == 1 && det.terms().begin()->first == Mono2{0, 0};
            if (holds) {
                (good.is_good ? local.nzc_holds_good : local.nzc_holds_not_good) += 1;
                local.nzc_hits.push_back(enumeration.get(idx));
            } else if (det.is_zero()) {
                (good.is_good ? local.det_zero_good : local.det_zero_not_good) += 1;
            } else {
                (good.is_good ? local.det_nonconstant_good : local.det_nonconstant_not_good) += 1;
            }

            if (blk.fam.r == 1) {
                try {
                    c2_refute(map, blk.fam);
                    local.refuted += 1;
                } catch (const std::logic_error&) {
                    local.refute_failures += 1;
                }
            }
        }

        for (auto& part : partials) merge_counts(report, part);
    }

    std::sort(report.nzc_hits.begin(), report.nzc_hits.end(),
              [](const Candidate& a, const Candidate& b) { return a.index < b.index; });
    return report;
}

}  // namespace jlab
