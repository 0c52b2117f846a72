#include <qmobius/element.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qmobius {

Element operator*(const Element& a, const Element& b) {
    if (a.pres_ != b.pres_)
        throw std::invalid_argument("Element: product across presentations");
    const Presentation& p = *a.pres_;
    std::vector<std::pair<Scalar, Word>> terms;
    for (const auto& [wa, ca] : a.terms_) {
        Word left = p.expand(wa);
        for (const auto& [wb, cb] : b.terms_) {
            Word w = left;
            Word right = p.expand(wb);
            w.insert(w.end(), right.begin(), right.end());
            terms.emplace_back(ca * cb, std::move(w));
        }
    }
    return p.normal_form(terms);
}

Element Element::star() const {
    const Presentation& p = *pres_;
    std::vector<std::pair<Scalar, Word>> terms;
    for (const auto& [w, c] : terms_)
        terms.emplace_back(c.conjugate(), p.star_word(p.expand(w)));
    return p.normal_form(terms);
}

std::string Element::render(bool pretty) const {
    if (terms_.empty()) return "0";
    const Presentation& p = *pres_;
    std::vector<const ExpVec*> order;
    order.reserve(terms_.size());
    for (const auto& [w, c] : terms_) order.push_back(&w);
    std::sort(order.begin(), order.end(), [&](const ExpVec* x, const ExpVec* y) {
        return p.cmp_words(p.expand(*x), p.expand(*y)) > 0;
    });
    std::string out;
    bool first = true;
    for (const ExpVec* w : order) {
        const Scalar& c = terms_.at(*w);
        bool is_unit_word = std::all_of(w->begin(), w->end(), [](int n) { return n == 0; });
        std::string t;
        if (is_unit_word) {
            bool atomic = true;
            t = c.str_atomic(atomic);
            if (!first && !atomic && t.find(' ') != std::string::npos) t = "(" + t + ")";
        } else {
            std::string ws = p.word_str(*w, pretty);
            const char* sep = pretty ? " " : "*";
            if (c.is_one()) t = ws;
            else if ((-c).is_one()) t = "-" + ws;
            else {
                bool atomic = true;
                std::string cs = c.str_atomic(atomic);
                t = (atomic ? cs : "(" + cs + ")") + sep + ws;
            }
        }
        if (first) {
            out = t;
            first = false;
        } else if (!t.empty() && t[0] == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
    }
    return out;
}

} // namespace qmobius
