#pragma once

#include <cassert>
#include <cstdint>
#include <numeric>
#include <vector>

#include "jlab/bipoly.hpp"
#include "jlab/gaussrat.hpp"

namespace jlab {

/// Monomial in the variables (x, y, U_0, ..., U_N). The tag vector length is
/// fixed per computation context (number of tag variables = N + 1).
struct TagMono {
    int x = 0;
    int y = 0;
    std::vector<int> u;

    explicit TagMono(std::size_t ntags = 0) : u(ntags, 0) {}

    int xy_degree() const { return x + y; }
    int tag_degree() const { return std::accumulate(u.begin(), u.end(), 0); }
    bool is_tag_only() const { return x == 0 && y == 0; }

    friend bool operator==(const TagMono& a, const TagMono& b) {
        return a.x == b.x && a.y == b.y && a.u == b.u;
    }

    friend TagMono operator*(const TagMono& a, const TagMono& b) {
        TagMono r = a;
        r.x += b.x;
        r.y += b.y;
        for (std::size_t k = 0; k < r.u.size(); ++k) r.u[k] += b.u[k];
        return r;
    }

    bool divides(const TagMono& m) const {
        if (x > m.x || y > m.y) return false;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] > m.u[k]) return false;
        return true;
    }

    /// m / *this, valid only when this->divides(m).
    TagMono quotient_of(const TagMono& m) const {
        TagMono r = m;
        r.x -= x;
        r.y -= y;
        for (std::size_t k = 0; k < r.u.size(); ++k) r.u[k] -= u[k];
        return r;
    }

    static TagMono lcm(const TagMono& a, const TagMono& b) {
        TagMono r = a;
        r.x = std::max(a.x, b.x);
        r.y = std::max(a.y, b.y);
        for (std::size_t k = 0; k < r.u.size(); ++k) r.u[k] = std::max(a.u[k], b.u[k]);
        return r;
    }

    bool coprime_with(const TagMono& b) const {
        if (x > 0 && b.x > 0) return false;
        if (y > 0 && b.y > 0) return false;
        for (std::size_t k = 0; k < u.size(); ++k)
            if (u[k] > 0 && b.u[k] > 0) return false;
        return true;
    }
};

/// Block elimination order: the {x, y} block dominates the tag block
/// (so tag-only normal forms certify membership in C[u_0..u_N]);
/// graded lex within each block, x before y, U_0 before U_1 before ...
struct EliminationOrder {
    /// Returns <0, 0, >0 as a is smaller, equal, greater than b.
    static int compare(const TagMono& a, const TagMono& b) {
        if (int d = a.xy_degree() - b.xy_degree(); d != 0) return d;
        if (int d = a.x - b.x; d != 0) return d;
        if (int d = a.tag_degree() - b.tag_degree(); d != 0) return d;
        for (std::size_t k = 0; k < a.u.size(); ++k)
            if (int d = a.u[k] - b.u[k]; d != 0) return d;
        return 0;
    }
    bool operator()(const TagMono& a, const TagMono& b) const { return compare(a, b) < 0; }
};

/// Polynomial in (x, y, U_0, ..., U_N) over GaussRat, terms sorted descending
/// under the elimination order. No stored coefficient is zero.
class TagPoly {
public:
    struct Term {
        TagMono mono;
        GaussRat coeff;
    };

    explicit TagPoly(std::size_t ntags = 0) : ntags_(ntags) {}

    static TagPoly constant(std::size_t ntags, const GaussRat& c) {
        TagPoly p(ntags);
        if (!c.is_zero()) p.terms_.push_back({TagMono(ntags), c});
        return p;
    }
    static TagPoly tag(std::size_t ntags, std::size_t index, int exp = 1) {
        TagPoly p(ntags);
        TagMono m(ntags);
        m.u[index] = exp;
        p.terms_.push_back({std::move(m), GaussRat(1)});
        return p;
    }
    /// Embeds a bivariate polynomial as a tag-free TagPoly.
    static TagPoly from_bipoly(std::size_t ntags, const BiPoly& p) {
        TagPoly r(ntags);
        for (const auto& [m, c] : p.terms()) {
            TagMono tm(ntags);
            tm.x = m.x;
            tm.y = m.y;
            r.terms_.push_back({std::move(tm), c});
        }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
            return EliminationOrder::compare(a.mono, b.mono) > 0;
        });
        return r;
    }

    std::size_t ntags() const { return ntags_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const TagMono& leading_mono() const { return terms_.front().mono; }
    const GaussRat& leading_coeff() const { return terms_.front().coeff; }
    const Term& leading_term() const { return terms_.front(); }
    void drop_leading() { terms_.erase(terms_.begin()); }
    void append_term(Term t) { terms_.push_back(std::move(t)); }  // caller keeps order

    bool is_tag_only() const {
        for (const auto& t : terms_)
            if (!t.mono.is_tag_only()) return false;
        return true;
    }

    bool uses_tag(std::size_t index) const {
        for (const auto& t : terms_)
            if (t.mono.u[index] > 0) return true;
        return false;
    }

    int max_used_tag() const {  // -1 when no tag appears
        int top = -1;
        for (const auto& t : terms_)
            for (std::size_t k = 0; k < t.mono.u.size(); ++k)
                if (t.mono.u[k] > 0) top = std::max(top, static_cast<int>(k));
        return top;
    }

    int total_degree() const {
        int d = kMinusInfinity;
        for (const auto& t : terms_) d = std::max(d, t.mono.xy_degree() + t.mono.tag_degree());
        return d;
    }

    TagPoly operator-() const {
        TagPoly r = *this;
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    friend TagPoly operator+(const TagPoly& a, const TagPoly& b) { return merged(a, b, false); }
    friend TagPoly operator-(const TagPoly& a, const TagPoly& b) { return merged(a, b, true); }

    friend TagPoly operator*(const TagPoly& a, const TagPoly& b);
    friend TagPoly operator*(const GaussRat& c, const TagPoly& p) {
        TagPoly r(p.ntags_);
        if (c.is_zero()) return r;
        r.terms_ = p.terms_;
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    friend bool operator==(const TagPoly& a, const TagPoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t k = 0; k < a.terms_.size(); ++k)
            if (!(a.terms_[k].mono == b.terms_[k].mono) || a.terms_[k].coeff != b.terms_[k].coeff)
                return false;
        return true;
    }
    friend bool operator!=(const TagPoly& a, const TagPoly& b) { return !(a == b); }

    /// this -= c * m * q; the workhorse of polynomial reduction.
    void sub_scaled(const GaussRat& c, const TagMono& m, const TagPoly& q);

    TagPoly monic() const {
        if (is_zero()) return *this;
        return (GaussRat(1) / leading_coeff()) * *this;
    }

    /// Formal partial derivative with respect to tag variable U_index.
    TagPoly tag_derivative(std::size_t index) const {
        TagPoly r(ntags_);
        for (const auto& t : terms_)
            if (t.mono.u[index] > 0) {
                Term nt = t;
                nt.coeff *= GaussRat(t.mono.u[index]);
                nt.mono.u[index] -= 1;
                r.terms_.push_back(std::move(nt));
            }
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& a, const Term& b) {
            return EliminationOrder::compare(a.mono, b.mono) > 0;
        });
        return r;
    }

    /// Substitutes U_k := values[k] (and keeps x, y as themselves); the
    /// round-trip witness map back into C[x, y].
    BiPoly substitute_tags(const std::vector<BiPoly>& values) const {
        assert(values.size() == ntags_);
        BiPoly acc;
        for (const auto& t : terms_) {
            BiPoly prod = BiPoly::monomial(t.mono.x, t.mono.y, t.coeff);
            for (std::size_t k = 0; k < ntags_; ++k)
                if (t.mono.u[k] > 0) prod *= values[k].pow(t.mono.u[k]);
            acc += prod;
        }
        return acc;
    }

    /// Floating evaluation at complex tag values; x, y must not occur.
    Complex eval_tags(const std::vector<Complex>& values) const {
        assert(values.size() == ntags_);
        Complex acc = 0.0;
        for (const auto& t : terms_) {
            assert(t.mono.is_tag_only());
            Complex prod = t.coeff.to_complex();
            for (std::size_t k = 0; k < ntags_; ++k)
                for (int e = 0; e < t.mono.u[k]; ++e) prod *= values[k];
            acc += prod;
        }
        return acc;
    }

    /// Substitutes exact scalars for every tag; x, y must not occur.
    GaussRat eval_tags(const std::vector<GaussRat>& values) const {
        assert(values.size() == ntags_);
        GaussRat acc;
        for (const auto& t : terms_) {
            assert(t.mono.is_tag_only());
            GaussRat prod = t.coeff;
            for (std::size_t k = 0; k < ntags_; ++k)
                for (int e = 0; e < t.mono.u[k]; ++e) prod *= values[k];
            acc += prod;
        }
        return acc;
    }

private:
    static TagPoly merged(const TagPoly& a, const TagPoly& b, bool subtract);

    std::size_t ntags_;
    std::vector<Term> terms_;

    friend class TagPolyBuilder;
};

/// Accumulates terms in any order, then emits a normalized TagPoly.
class TagPolyBuilder {
public:
    explicit TagPolyBuilder(std::size_t ntags) : ntags_(ntags) {}

    void add(TagMono m, GaussRat c) {
        if (!c.is_zero()) terms_.push_back({std::move(m), std::move(c)});
    }

    TagPoly build() {
        std::sort(terms_.begin(), terms_.end(), [](const TagPoly::Term& a, const TagPoly::Term& b) {
            return EliminationOrder::compare(a.mono, b.mono) > 0;
        });
        TagPoly r(ntags_);
        for (auto& t : terms_) {
            if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
                r.terms_.back().coeff += t.coeff;
                if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

private:
    std::size_t ntags_;
    std::vector<TagPoly::Term> terms_;
};

}  // namespace jlab
