#include "jlab/groebner.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <utility>

namespace jlab {

namespace {

struct Budget {
    std::uint64_t cap;
    std::uint64_t used = 0;

    void charge(std::uint64_t n) {
        used += n;
        if (used > cap) throw ResourceCapExceeded(cap);
    }
};

/// Full (tail) reduction of p modulo a list of monic polynomials: the result
/// contains no monomial divisible by any leading monomial of the list.
TagPoly full_reduce(TagPoly p, const std::vector<TagPoly>& basis, Budget& budget) {
    TagPoly rem(p.ntags());
    while (!p.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.leading_mono().divides(p.leading_mono())) {
                TagMono q = g.leading_mono().quotient_of(p.leading_mono());
                p.sub_scaled(p.leading_coeff(), q, g);
                budget.charge(g.term_count());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.append_term(p.leading_term());
            p.drop_leading();
        }
    }
    return rem;
}

struct Pair {
    std::size_t i, j;
    TagMono lcm;
    int degree;
};

}  // namespace

std::uint64_t default_resource_cap() {
    if (const char* env = std::getenv("JLAB_RESOURCE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1'000'000;
}

std::vector<TagPoly> groebner_basis(const std::vector<TagPoly>& generators,
                                    std::uint64_t resource_cap) {
    Budget budget{resource_cap};

    std::vector<TagPoly> basis;
    for (const auto& g : generators)
        if (!g.is_zero()) basis.push_back(g.monic());
    if (basis.empty()) return {};
    const std::size_t ntags = basis.front().ntags();

    std::vector<Pair> pending;
    std::set<std::pair<std::size_t, std::size_t>> considered;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            // Buchberger's product criterion: coprime leading monomials.
            if (basis[i].leading_mono().coprime_with(basis[j].leading_mono())) {
                considered.insert({i, j});
                continue;
            }
            TagMono l = TagMono::lcm(basis[i].leading_mono(), basis[j].leading_mono());
            int deg = l.xy_degree() + l.tag_degree();
            pending.push_back({i, j, std::move(l), deg});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    while (!pending.empty()) {
        // Normal strategy: smallest lcm degree, then lcm order, then indices.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pending.size(); ++k) {
            const Pair &a = pending[k], &b = pending[best];
            int c = a.degree - b.degree;
            if (c == 0) c = EliminationOrder::compare(a.lcm, b.lcm);
            if (c == 0) c = a.i != b.i ? (a.i < b.i ? -1 : 1) : (a.j < b.j ? -1 : 1);
            if (c < 0) best = k;
        }
        Pair pr = std::move(pending[best]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(best));
        considered.insert({pr.i, pr.j});

        // Chain criterion: some g_k divides the lcm and both companion pairs
        // were already handled.
        bool skip = false;
        for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pr.i || k == pr.j) continue;
            if (!basis[k].leading_mono().divides(pr.lcm)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                return std::make_pair(std::min(a, b), std::max(a, b));
            };
            if (considered.count(key(pr.i, k)) && considered.count(key(pr.j, k))) skip = true;
        }
        if (skip) continue;

        const TagPoly& f = basis[pr.i];
        const TagPoly& g = basis[pr.j];
        TagPoly s(ntags);
        s.sub_scaled(GaussRat(-1), f.leading_mono().quotient_of(pr.lcm), f);
        s.sub_scaled(GaussRat(1), g.leading_mono().quotient_of(pr.lcm), g);
        budget.charge(f.term_count() + g.term_count());

        TagPoly r = full_reduce(std::move(s), basis, budget);
        if (r.is_zero()) continue;
        basis.push_back(r.monic());
        push_pairs_with(basis.size() - 1);
    }

    // Minimal basis: drop any element whose leading monomial is divisible by
    // another surviving element's leading monomial.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return EliminationOrder::compare(basis[a].leading_mono(), basis[b].leading_mono()) < 0;
    });
    std::vector<TagPoly> minimal;
    for (std::size_t k : order) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (kept.leading_mono().divides(basis[k].leading_mono())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(basis[k]);
    }

    // Reduced basis: tail-reduce each element modulo the others.
    std::vector<TagPoly> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<TagPoly> others;
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        reduced.push_back(full_reduce(minimal[k], others, budget).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const TagPoly& a, const TagPoly& b) {
        return EliminationOrder::compare(a.leading_mono(), b.leading_mono()) < 0;
    });
    return reduced;
}

TagPoly normal_form(const TagPoly& p, const std::vector<TagPoly>& basis,
                    std::uint64_t resource_cap) {
    Budget budget{resource_cap};
    return full_reduce(p, basis, budget);
}

}  // namespace jlab
