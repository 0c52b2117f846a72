/**
 * @file element.hpp
 * @brief Elements of a presented algebra: finite linear combinations of
 *        normal-form words with Scalar coefficients, kept canonical
 *        (no zero coefficients; equality is map equality).
 */
#pragma once

#include <qmobius/presentation.hpp>

#include <map>
#include <string>

namespace qmobius {

class Element {
private:
    const Presentation* pres_ = nullptr;
    std::map<ExpVec, Scalar> terms_;

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }

public:
    Element() = default;
    explicit Element(const Presentation& p) : pres_(&p) {}
    Element(const Presentation& p, std::map<ExpVec, Scalar> terms)
        : pres_(&p), terms_(std::move(terms)) {
        prune();
    }

    static Element unit(const Presentation& p, const Scalar& c = Scalar(1)) {
        Element e(p);
        if (!c.is_zero()) e.terms_[ExpVec{}] = c;
        return e;
    }
    static Element generator(const Presentation& p, GenId g) {
        Element e(p);
        ExpVec w{};
        w[g] = 1;
        e.terms_[w] = Scalar(1);
        return e;
    }

    const Presentation& pres() const { return *pres_; }
    const std::map<ExpVec, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    Scalar coeff(const ExpVec& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Scalar() : it->second;
    }
    void add_term(const ExpVec& w, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[w];
        slot += c;
        if (slot.is_zero()) terms_.erase(w);
    }

    friend Element operator-(const Element& a) {
        Element r = a;
        for (auto& [w, c] : r.terms_) c = -c;
        return r;
    }
    friend Element operator+(const Element& a, const Element& b) {
        Element r = a.pres_ ? a : b;
        if (!a.pres_) return r;
        for (const auto& [w, c] : b.terms_) r.add_term(w, c);
        return r;
    }
    friend Element operator-(const Element& a, const Element& b) { return a + (-b); }
    friend Element operator*(const Scalar& c, const Element& a) {
        Element r(a.pres());
        if (c.is_zero()) return r;
        for (const auto& [w, x] : a.terms_) r.terms_[w] = c * x;
        return r;
    }
    friend Element operator*(const Element& a, const Element& b);

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    /// Involution: reverse each word, star each generator, conjugate coefficients.
    Element star() const;

    /// Canonical parseable text, terms in descending word order.
    std::string str() const { return render(false); }
    /// Display text with starred generator names.
    std::string pretty() const { return render(true); }

private:
    std::string render(bool pretty) const;
};

} // namespace qmobius
