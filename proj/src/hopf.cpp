#include <qmobius/hopf.hpp>

#include <algorithm>
#include <stdexcept>

namespace qmobius {

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
    if (a.arity_ != b.arity_)
        throw std::invalid_argument("TensorElement: arity mismatch in sum");
    TensorElement r = a;
    for (const auto& [ws, c] : b.terms_) r.add_term(ws, c);
    return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
    return a + (-Scalar(1)) * b;
}

TensorElement operator*(const Scalar& c, const TensorElement& a) {
    TensorElement r(a.pres(), a.arity_);
    if (c.is_zero()) return r;
    for (const auto& [ws, x] : a.terms_) r.terms_[ws] = c * x;
    return r;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
    if (a.pres_ != b.pres_ || a.arity_ != b.arity_)
        throw std::invalid_argument("TensorElement: componentwise product mismatch");
    const Presentation& p = *a.pres_;
    TensorElement r(p, a.arity_);
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            // each slot product is an Element; distribute over its terms
            std::vector<std::pair<std::vector<ExpVec>, Scalar>> parts{{{}, ca * cb}};
            for (int i = 0; i < a.arity_; ++i) {
                Word w = p.expand(wa[static_cast<size_t>(i)]);
                Word wr = p.expand(wb[static_cast<size_t>(i)]);
                w.insert(w.end(), wr.begin(), wr.end());
                Element slot = p.normal_form(w);
                std::vector<std::pair<std::vector<ExpVec>, Scalar>> next;
                for (const auto& [prefix, c] : parts) {
                    for (const auto& [sw, sc] : slot.terms()) {
                        auto ws = prefix;
                        ws.push_back(sw);
                        next.emplace_back(std::move(ws), c * sc);
                    }
                }
                parts = std::move(next);
            }
            for (const auto& [ws, c] : parts) r.add_term(ws, c);
        }
    }
    return r;
}

TensorElement TensorElement::factor_star() const {
    const Presentation& p = *pres_;
    TensorElement r(p, arity_);
    for (const auto& [ws, c] : terms_) {
        std::vector<std::pair<std::vector<ExpVec>, Scalar>> parts{{{}, c.conjugate()}};
        for (const ExpVec& w : ws) {
            Element sw = p.normal_form(p.star_word(p.expand(w)));
            std::vector<std::pair<std::vector<ExpVec>, Scalar>> next;
            for (const auto& [prefix, pc] : parts) {
                for (const auto& [tw, tc] : sw.terms()) {
                    auto nws = prefix;
                    nws.push_back(tw);
                    next.emplace_back(std::move(nws), pc * tc);
                }
            }
            parts = std::move(next);
        }
        for (const auto& [nws, nc] : parts) r.add_term(nws, nc);
    }
    return r;
}

TensorElement TensorElement::reversed() const {
    TensorElement r(*pres_, arity_);
    for (const auto& [ws, c] : terms_) {
        std::vector<ExpVec> rev(ws.rbegin(), ws.rend());
        r.add_term(rev, c);
    }
    return r;
}

std::string TensorElement::render(bool pretty) const {
    if (terms_.empty()) return "0";
    const Presentation& p = *pres_;
    const char* otimes = pretty ? " ⊗ " : " (x) ";
    std::string out;
    bool first = true;
    for (const auto& [ws, c] : terms_) {
        std::string t;
        for (const ExpVec& w : ws) {
            if (!t.empty()) t += otimes;
            t += p.word_str(w, pretty);
        }
        std::string term;
        if (c.is_one()) term = t;
        else if ((-c).is_one()) term = "-" + t;
        else {
            bool atomic = true;
            std::string cs = c.str_atomic(atomic);
            term = (atomic ? cs : "(" + cs + ")") + (pretty ? " " : "*") + "[" + t + "]";
        }
        if (first) {
            out = term;
            first = false;
        } else if (!term.empty() && term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

namespace {

// Delta of one normal word, memoized per presentation.
const std::vector<std::tuple<Scalar, ExpVec, ExpVec>>& word_coproduct(const Presentation& p,
                                                                      const ExpVec& w) {
    auto& cache = p.hopf_cache();
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.delta.find(w);
    if (it != cache.delta.end()) return it->second;

    std::map<std::pair<ExpVec, ExpVec>, Scalar> acc;
    acc[{ExpVec{}, ExpVec{}}] = Scalar(1);
    for (GenId g : p.expand(w)) {
        std::map<std::pair<ExpVec, ExpVec>, Scalar> next;
        for (const auto& [pairw, c] : acc) {
            for (const auto& [d, g1, g2] : p.gen(g).coproduct) {
                Word left = p.expand(pairw.first);
                left.push_back(g1);
                Word right = p.expand(pairw.second);
                right.push_back(g2);
                Element e1 = p.normal_form(left);
                Element e2 = p.normal_form(right);
                for (const auto& [w1, c1] : e1.terms()) {
                    for (const auto& [w2, c2] : e2.terms()) {
                        Scalar& slot = next[{w1, w2}];
                        slot += c * d * c1 * c2;
                        if (slot.is_zero()) next.erase({w1, w2});
                    }
                }
            }
        }
        acc = std::move(next);
    }
    std::vector<std::tuple<Scalar, ExpVec, ExpVec>> out;
    out.reserve(acc.size());
    for (const auto& [pairw, c] : acc) out.emplace_back(c, pairw.first, pairw.second);
    return cache.delta.emplace(w, std::move(out)).first->second;
}

} // namespace

TensorElement coproduct(const Element& x) {
    const Presentation& p = x.pres();
    TensorElement r(p, 2);
    for (const auto& [w, c] : x.terms())
        for (const auto& [d, w1, w2] : word_coproduct(p, w))
            r.add_term({w1, w2}, c * d);
    return r;
}

TensorElement iterated_coproduct(const Element& x, int n) {
    if (n < 1) throw std::invalid_argument("iterated_coproduct: arity must be >= 1");
    const Presentation& p = x.pres();
    TensorElement r = TensorElement::of(x);
    for (int step = 1; step < n; ++step) {
        TensorElement next(p, r.arity() + 1);
        for (const auto& [ws, c] : r.terms()) {
            for (const auto& [d, w1, w2] : word_coproduct(p, ws[0])) {
                std::vector<ExpVec> nws;
                nws.reserve(ws.size() + 1);
                nws.push_back(w1);
                nws.push_back(w2);
                nws.insert(nws.end(), ws.begin() + 1, ws.end());
                next.add_term(nws, c * d);
            }
        }
        r = std::move(next);
    }
    return r;
}

Scalar counit(const Element& x) {
    const Presentation& p = x.pres();
    Scalar out;
    for (const auto& [w, c] : x.terms()) {
        Scalar value = c;
        for (GenId g : p.expand(w)) value *= p.gen(g).counit;
        out += value;
    }
    return out;
}

namespace {

Element antipode_impl(const Element& x, bool inverse) {
    const Presentation& p = x.pres();
    std::vector<std::pair<Scalar, Word>> terms;
    for (const auto& [w, c] : x.terms()) {
        Word seq = p.expand(w);
        Scalar coeff = c;
        Word image;
        for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
            const GenInfo& gi = p.gen(*it);
            coeff *= inverse ? gi.antipode_inv_coeff : gi.antipode_coeff;
            image.push_back(inverse ? gi.antipode_inv_gen : gi.antipode_gen);
        }
        terms.emplace_back(coeff, std::move(image));
    }
    return p.normal_form(terms);
}

} // namespace

Element antipode(const Element& x) { return antipode_impl(x, false); }
Element antipode_inv(const Element& x) { return antipode_impl(x, true); }

} // namespace qmobius
