#include "jlab/tagpoly.hpp"

#include <algorithm>

namespace jlab {

TagPoly TagPoly::merged(const TagPoly& a, const TagPoly& b, bool subtract) {
    assert(a.ntags_ == b.ntags_);
    TagPoly r(a.ntags_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() && j < b.terms_.size()) {
        int c = EliminationOrder::compare(a.terms_[i].mono, b.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(a.terms_[i++]);
        } else if (c < 0) {
            Term t = b.terms_[j++];
            if (subtract) t.coeff = -t.coeff;
            r.terms_.push_back(std::move(t));
        } else {
            GaussRat sum = subtract ? a.terms_[i].coeff - b.terms_[j].coeff
                                    : a.terms_[i].coeff + b.terms_[j].coeff;
            if (!sum.is_zero()) r.terms_.push_back({a.terms_[i].mono, std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
    for (; j < b.terms_.size(); ++j) {
        Term t = b.terms_[j];
        if (subtract) t.coeff = -t.coeff;
        r.terms_.push_back(std::move(t));
    }
    return r;
}

void TagPoly::sub_scaled(const GaussRat& c, const TagMono& m, const TagPoly& q) {
    assert(ntags_ == q.ntags_);
    std::vector<Term> out;
    out.reserve(terms_.size() + q.terms_.size());
    std::size_t i = 0, j = 0;
    auto shifted = [&](std::size_t k) { return q.terms_[k].mono * m; };
    while (i < terms_.size() && j < q.terms_.size()) {
        TagMono qm = shifted(j);
        int cmp = EliminationOrder::compare(terms_[i].mono, qm);
        if (cmp > 0) {
            out.push_back(std::move(terms_[i++]));
        } else if (cmp < 0) {
            out.push_back({std::move(qm), -(c * q.terms_[j].coeff)});
            ++j;
        } else {
            GaussRat sum = terms_[i].coeff - c * q.terms_[j].coeff;
            if (!sum.is_zero()) out.push_back({std::move(qm), std::move(sum)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(std::move(terms_[i]));
    for (; j < q.terms_.size(); ++j) out.push_back({shifted(j), -(c * q.terms_[j].coeff)});
    terms_ = std::move(out);
}

TagPoly operator*(const TagPoly& a, const TagPoly& b) {
    assert(a.ntags_ == b.ntags_);
    TagPolyBuilder builder(a.ntags_);
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) builder.add(ta.mono * tb.mono, ta.coeff * tb.coeff);
    return builder.build();
}

}  // namespace jlab
