#include <qmobius/sphere.hpp>

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qmobius {

std::string SpherePoly::str() const {
    if (terms_.empty()) return "0";
    // descending total degree, B-powers before B*-powers within a degree
    std::vector<std::pair<int, int>> keys;
    keys.reserve(terms_.size());
    for (const auto& [key, c] : terms_) {
        (void)c;
        keys.push_back(key);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        int dx = x.first + std::abs(x.second), dy = y.first + std::abs(y.second);
        if (dx != dy) return dx > dy;
        if (x.second != y.second) return x.second > y.second;
        return x.first > y.first;
    });
    std::string out;
    bool first = true;
    for (const auto& key : keys) {
        const Scalar& c = terms_.at(key);
        std::string w;
        if (key.first > 0) {
            w = "A";
            if (key.first > 1) w += "^" + std::to_string(key.first);
        }
        if (key.second != 0) {
            if (!w.empty()) w += "*";
            w += key.second > 0 ? "B" : "Bs";
            int p = std::abs(key.second);
            if (p > 1) w += "^" + std::to_string(p);
        }
        std::string t;
        if (w.empty()) {
            bool atomic = true;
            t = c.str_atomic(atomic);
            if (!first && !atomic && t.find(' ') != std::string::npos) t = "(" + t + ")";
        } else if (c.is_one()) {
            t = w;
        } else if ((-c).is_one()) {
            t = "-" + w;
        } else {
            bool atomic = true;
            std::string cs = c.str_atomic(atomic);
            t = (atomic ? cs : "(" + cs + ")") + "*" + w;
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

Element sphere_A(const EngineContext& ctx) {
    const Presentation& p = *ctx.funq;
    return Element::generator(p, *p.gen_by_token("b")) *
           Element::generator(p, *p.gen_by_token("bs"));
}

Element sphere_B(const EngineContext& ctx) {
    const Presentation& p = *ctx.funq;
    return Element::generator(p, *p.gen_by_token("a")) *
           Element::generator(p, *p.gen_by_token("b"));
}

Element sphere_Bs(const EngineContext& ctx) {
    const Presentation& p = *ctx.funq;
    return Element::generator(p, *p.gen_by_token("bs")) *
           Element::generator(p, *p.gen_by_token("as"));
}

Element sphere_monomial_ambient(const EngineContext& ctx, int a_deg, int b_pow) {
    Element out = Element::unit(*ctx.funq);
    Element a = sphere_A(ctx);
    for (int i = 0; i < a_deg; ++i) out = out * a;
    Element b = b_pow > 0 ? sphere_B(ctx) : sphere_Bs(ctx);
    for (int i = 0; i < std::abs(b_pow); ++i) out = out * b;
    return out;
}

Element to_ambient(const EngineContext& ctx, const SpherePoly& p) {
    Element out(*ctx.funq);
    for (const auto& [key, c] : p.terms())
        out = out + c * sphere_monomial_ambient(ctx, key.first, key.second);
    return out;
}

SpherePoly express_in_sphere(const EngineContext& ctx, const Element& f) {
    SpherePoly out;
    if (f.is_zero()) return out;
    if (!is_podles(ctx, f))
        throw std::domain_error("express_in_sphere: element is not right-invariant");

    size_t max_len = 0;
    for (const auto& [w, c] : f.terms()) {
        (void)c;
        max_len = std::max(max_len, ctx.funq->expand(w).size());
    }
    int deg = static_cast<int>(max_len / 2);
    if (deg > ctx.degree_cap)
        throw std::domain_error("express_in_sphere: degree cap exceeded");

    // columns: PBW monomials of total degree <= deg, as ambient elements
    std::vector<std::pair<int, int>> monos;
    for (int d = 0; d <= deg; ++d) {
        for (int m = 0; m <= d; ++m) monos.emplace_back(d - m, m);
        for (int n = 1; n <= d; ++n) monos.emplace_back(d - n, -n);
    }
    std::vector<Element> cols;
    cols.reserve(monos.size());
    std::map<ExpVec, int> row_of;
    auto row_index = [&row_of](const ExpVec& w) {
        auto it = row_of.find(w);
        if (it == row_of.end()) it = row_of.emplace(w, static_cast<int>(row_of.size())).first;
        return it->second;
    };
    for (const auto& [adeg, bpow] : monos) {
        cols.push_back(sphere_monomial_ambient(ctx, adeg, bpow));
        for (const auto& [w, c] : cols.back().terms()) {
            (void)c;
            row_index(w);
        }
    }
    for (const auto& [w, c] : f.terms()) {
        (void)c;
        row_index(w);
    }

    const int rows = static_cast<int>(row_of.size());
    const int ncols = static_cast<int>(cols.size());
    std::vector<std::vector<Scalar>> m(static_cast<size_t>(rows),
                                       std::vector<Scalar>(static_cast<size_t>(ncols) + 1));
    for (int j = 0; j < ncols; ++j)
        for (const auto& [w, c] : cols[static_cast<size_t>(j)].terms())
            m[static_cast<size_t>(row_of.at(w))][static_cast<size_t>(j)] = c;
    for (const auto& [w, c] : f.terms())
        m[static_cast<size_t>(row_of.at(w))][static_cast<size_t>(ncols)] = c;

    // exact Gaussian elimination to reduced row echelon form
    int rank = 0;
    std::vector<int> pivot_row(static_cast<size_t>(ncols), -1);
    for (int j = 0; j < ncols && rank < rows; ++j) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (!m[static_cast<size_t>(r)][static_cast<size_t>(j)].is_zero()) { pr = r; break; }
        if (pr < 0) continue;
        std::swap(m[static_cast<size_t>(rank)], m[static_cast<size_t>(pr)]);
        Scalar inv = m[static_cast<size_t>(rank)][static_cast<size_t>(j)].inverse();
        for (int c = j; c <= ncols; ++c) m[static_cast<size_t>(rank)][static_cast<size_t>(c)] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            Scalar factor = m[static_cast<size_t>(r)][static_cast<size_t>(j)];
            if (factor.is_zero()) continue;
            for (int c = j; c <= ncols; ++c)
                m[static_cast<size_t>(r)][static_cast<size_t>(c)] -=
                    factor * m[static_cast<size_t>(rank)][static_cast<size_t>(c)];
        }
        pivot_row[static_cast<size_t>(j)] = rank;
        ++rank;
    }
    for (int r = rank; r < rows; ++r)
        if (!m[static_cast<size_t>(r)][static_cast<size_t>(ncols)].is_zero())
            throw std::domain_error("express_in_sphere: element is outside the sphere span");

    std::vector<Scalar> x(static_cast<size_t>(ncols));
    for (int j = 0; j < ncols; ++j)
        if (pivot_row[static_cast<size_t>(j)] >= 0)
            x[static_cast<size_t>(j)] =
                m[static_cast<size_t>(pivot_row[static_cast<size_t>(j)])][static_cast<size_t>(ncols)];
    for (int j = 0; j < ncols; ++j)
        out.add_term(monos[static_cast<size_t>(j)].first, monos[static_cast<size_t>(j)].second,
                     x[static_cast<size_t>(j)]);

    // the expansion must reproduce f exactly
    if (to_ambient(ctx, out) != f)
        throw std::logic_error("express_in_sphere: expansion failed to round-trip");
    return out;
}

} // namespace qmobius
