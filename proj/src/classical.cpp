#include <qmobius/classical.hpp>

#include <algorithm>
#include <stdexcept>

namespace qmobius {

ClassicalPoly operator-(const ClassicalPoly& x) {
    ClassicalPoly r = x;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ClassicalPoly operator+(const ClassicalPoly& x, const ClassicalPoly& y) {
    ClassicalPoly r = x;
    for (const auto& [k, c] : y.terms_) r.add_term(k, c);
    return r;
}

ClassicalPoly operator-(const ClassicalPoly& x, const ClassicalPoly& y) { return x + (-y); }

ClassicalPoly operator*(const ClassicalPoly& x, const ClassicalPoly& y) {
    ClassicalPoly r;
    for (const auto& [kx, cx] : x.terms_)
        for (const auto& [ky, cy] : y.terms_)
            r.add_term({kx[0] + ky[0], kx[1] + ky[1], kx[2] + ky[2]}, cx * cy);
    return r;
}

ClassicalPoly operator*(const GaussianRational& c, const ClassicalPoly& x) {
    ClassicalPoly r;
    for (const auto& [k, v] : x.terms_) r.add_term(k, c * v);
    return r;
}

ClassicalPoly ClassicalPoly::sphere_reduce() const {
    ClassicalPoly out;
    ClassicalPoly rel = monomial(1, 0, 0) - monomial(2, 0, 0);  // B B* = A - A^2
    for (const auto& [k, c] : terms_) {
        int t = std::min(k[1], k[2]);
        if (t == 0) {
            out.add_term(k, c);
            continue;
        }
        ClassicalPoly piece = monomial(k[0], k[1] - t, k[2] - t, c);
        for (int i = 0; i < t; ++i) piece = piece * rel;
        out = out + piece;
    }
    return out;
}

std::string ClassicalPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::array<int, 3>> keys;
    keys.reserve(terms_.size());
    for (const auto& [k, c] : terms_) {
        (void)c;
        keys.push_back(k);
    }
    std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
        int dx = x[0] + x[1] + x[2], dy = y[0] + y[1] + y[2];
        if (dx != dy) return dx > dy;
        return x > y;
    });
    const char* names[3] = {"A", "B", "Bs"};
    std::string out;
    bool first = true;
    for (const auto& k : keys) {
        const GaussianRational& c = terms_.at(k);
        std::string w;
        for (int g = 0; g < 3; ++g) {
            if (k[static_cast<size_t>(g)] == 0) continue;
            if (!w.empty()) w += "*";
            w += names[g];
            if (k[static_cast<size_t>(g)] > 1) w += "^" + std::to_string(k[static_cast<size_t>(g)]);
        }
        std::string t;
        if (w.empty()) {
            t = c.str();
            if (!first && !c.is_atomic()) t = "(" + t + ")";
        } else if (c.is_one()) {
            t = w;
        } else if ((-c).is_one()) {
            t = "-" + w;
        } else {
            t = (c.is_atomic() ? c.str() : "(" + c.str() + ")") + "*" + w;
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

ClassicalPoly ClassicalDerivation::apply(const ClassicalPoly& p) const {
    ClassicalPoly out;
    for (const auto& [k, c] : p.terms()) {
        for (int g = 0; g < 3; ++g) {
            int e = k[static_cast<size_t>(g)];
            if (e == 0) continue;
            std::array<int, 3> rest = k;
            rest[static_cast<size_t>(g)] -= 1;
            ClassicalPoly term =
                (c * GaussianRational(e)) *
                (ClassicalPoly::monomial(rest[0], rest[1], rest[2]) * on[static_cast<size_t>(g)]);
            out = out + term;
        }
    }
    return out;
}

namespace {

GaussianRational gi() { return GaussianRational::i(); }
ClassicalPoly cpA() { return ClassicalPoly::monomial(1, 0, 0); }
ClassicalPoly cpB() { return ClassicalPoly::monomial(0, 1, 0); }
ClassicalPoly cpBs() { return ClassicalPoly::monomial(0, 0, 1); }
ClassicalPoly cp1() { return ClassicalPoly::monomial(0, 0, 0); }

} // namespace

ClassicalDerivation cd_R3() {
    return {"R3", {ClassicalPoly(), gi() * cpB(), -gi() * cpBs()}};
}
ClassicalDerivation cd_R1_plus_iR2() {
    return {"R1+iR2",
            {-gi() * cpBs(), gi() * (GaussianRational(2) * cpA() - cp1()), ClassicalPoly()}};
}
ClassicalDerivation cd_mR1_plus_iR2() {
    return {"-R1+iR2",
            {-gi() * cpB(), ClassicalPoly(), gi() * (GaussianRational(2) * cpA() - cp1())}};
}
ClassicalDerivation cd_T0() {
    ClassicalPoly two_a_m1 = GaussianRational(2) * cpA() - cp1();
    return {"T0",
            {GaussianRational(2) * (cpA() * (cpA() - cp1())), cpB() * two_a_m1, cpBs() * two_a_m1}};
}
ClassicalDerivation cd_iT1_plus_T2() {
    return {"iT1+T2",
            {GaussianRational(2) * (cpA() * cpB()), GaussianRational(2) * (cpB() * cpB()),
             GaussianRational(-2) * (cpA() * cpA())}};
}
ClassicalDerivation cd_iT1_minus_T2() {
    return {"iT1-T2",
            {GaussianRational(-2) * (cpA() * cpBs()), GaussianRational(2) * (cpA() * cpA()),
             GaussianRational(-2) * (cpBs() * cpBs())}};
}

ClassicalDerivation lincomb(const GaussianRational& c1, const ClassicalDerivation& d1,
                            const GaussianRational& c2, const ClassicalDerivation& d2,
                            std::string name) {
    ClassicalDerivation r;
    r.name = std::move(name);
    for (size_t g = 0; g < 3; ++g) r.on[g] = c1 * d1.on[g] + c2 * d2.on[g];
    return r;
}

ClassicalDerivation bracket(const ClassicalDerivation& d1, const ClassicalDerivation& d2) {
    ClassicalDerivation r;
    r.name = "[" + d1.name + "," + d2.name + "]";
    const ClassicalPoly gens[3] = {cpA(), cpB(), cpBs()};
    for (size_t g = 0; g < 3; ++g)
        r.on[g] = d1.apply(d2.apply(gens[g])) - d2.apply(d1.apply(gens[g]));
    return r;
}

bool derivation_eq(const ClassicalDerivation& d1, const ClassicalDerivation& d2) {
    for (size_t g = 0; g < 3; ++g)
        if (d1.on[g].sphere_reduce() != d2.on[g].sphere_reduce()) return false;
    return true;
}

Prelimit su2_prelimit(const EngineContext& ctx, Su2Limit name, const Element& h) {
    const Presentation& uq = *ctx.uq;
    Prelimit pre;
    switch (name) {
        case Su2Limit::R3: {
            Element k = Element::generator(uq, *uq.gen_by_token("k"));
            pre.poly = express_in_sphere(ctx, act_u(ctx, k, h) - h);
            pre.factor = -GaussianRational::i();  // 1/i
            pre.div_lnq = true;
            break;
        }
        case Su2Limit::R1_plus_iR2: {
            Element es = Element::generator(uq, *uq.gen_by_token("es"));
            pre.poly = express_in_sphere(ctx, act_u(ctx, es, h));
            pre.factor = GaussianRational::i();
            pre.div_lnq = false;
            break;
        }
        case Su2Limit::mR1_plus_iR2: {
            Element e = Element::generator(uq, *uq.gen_by_token("e"));
            pre.poly = express_in_sphere(ctx, act_u(ctx, e, h));
            pre.factor = -GaussianRational::i();
            pre.div_lnq = false;
            break;
        }
    }
    return pre;
}

Prelimit an_prelimit(const EngineContext& ctx, AnLimit name, const Element& h) {
    const Presentation& fq = *ctx.funq;
    auto gen = [&fq](const char* t) { return Element::generator(fq, *fq.gen_by_token(t)); };
    Prelimit pre;
    pre.div_lnq = true;
    switch (name) {
        case AnLimit::T0:
            pre.poly = express_in_sphere(ctx, act_f(ctx, gen("a"), h) - act_f(ctx, gen("as"), h));
            pre.factor = GaussianRational(Rational(1, 2));
            break;
        case AnLimit::iT1_plus_T2:
            pre.poly = express_in_sphere(ctx, act_f(ctx, gen("b"), h));
            pre.factor = GaussianRational(1);
            break;
        case AnLimit::iT1_minus_T2:
            pre.poly = express_in_sphere(ctx, act_f(ctx, gen("bs"), h));
            pre.factor = GaussianRational(1);
            break;
    }
    return pre;
}

ClassicalPoly take_limit(const Prelimit& pre) {
    ClassicalPoly out;
    for (const auto& [key, c] : pre.poly.terms()) {
        GaussianRational v = pre.div_lnq ? c.limit_div_lnq() : c.eval_at_one();
        v *= pre.factor;
        if (key.second >= 0)
            out.add_term({key.first, key.second, 0}, v);
        else
            out.add_term({key.first, 0, -key.second}, v);
    }
    return out;
}

ClassicalPoly quantum_limit_su2(const EngineContext& ctx, Su2Limit name, const Element& h) {
    return take_limit(su2_prelimit(ctx, name, h));
}

ClassicalPoly quantum_limit_an(const EngineContext& ctx, AnLimit name, const Element& h) {
    return take_limit(an_prelimit(ctx, name, h));
}

ClassicalPoly classical_of_sphere(const SpherePoly& p) {
    ClassicalPoly out;
    for (const auto& [key, c] : p.terms()) {
        GaussianRational v = c.eval_at_one();
        if (key.second >= 0)
            out.add_term({key.first, key.second, 0}, v);
        else
            out.add_term({key.first, 0, -key.second}, v);
    }
    return out;
}

const char* to_string(Su2Limit name) {
    switch (name) {
        case Su2Limit::R3: return "R3";
        case Su2Limit::R1_plus_iR2: return "R1+iR2";
        case Su2Limit::mR1_plus_iR2: return "-R1+iR2";
    }
    return "?";
}

const char* to_string(AnLimit name) {
    switch (name) {
        case AnLimit::T0: return "T0";
        case AnLimit::iT1_plus_T2: return "iT1+T2";
        case AnLimit::iT1_minus_T2: return "iT1-T2";
    }
    return "?";
}

} // namespace qmobius
