#include <qmobius/action.hpp>

#include <stdexcept>

namespace qmobius {

namespace {

Element word_elem(const Presentation& p, const ExpVec& w) {
    Element e(p);
    e.add_term(w, Scalar(1));
    return e;
}

} // namespace

DoubleElement DoubleElement::tensor(const EngineContext& ctx, const Element& U, const Element& f) {
    DoubleElement r(ctx);
    for (const auto& [uw, cu] : U.terms())
        for (const auto& [fw, cf] : f.terms()) r.add_term(uw, fw, cu * cf);
    return r;
}

DoubleElement DoubleElement::from_u(const EngineContext& ctx, const Element& U) {
    return tensor(ctx, U, Element::unit(*ctx.funq));
}

DoubleElement DoubleElement::from_f(const EngineContext& ctx, const Element& f) {
    return tensor(ctx, Element::unit(*ctx.uq), f);
}

DoubleElement operator+(const DoubleElement& a, const DoubleElement& b) {
    DoubleElement r = a;
    for (const auto& [ws, c] : b.terms_) r.add_term(ws.first, ws.second, c);
    return r;
}

DoubleElement operator*(const Scalar& c, const DoubleElement& a) {
    DoubleElement r(a.ctx());
    if (c.is_zero()) return r;
    for (const auto& [ws, x] : a.terms_) r.terms_[ws] = c * x;
    return r;
}

std::string DoubleElement::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [ws, c] : terms_) {
        std::string t = ctx_->uq->word_str(ws.first, false) + " (x) " +
                        ctx_->funq->word_str(ws.second, false);
        std::string term;
        if (c.is_one()) term = t;
        else if ((-c).is_one()) term = "-" + t;
        else {
            bool atomic = true;
            std::string cs = c.str_atomic(atomic);
            term = (atomic ? cs : "(" + cs + ")") + "*[" + t + "]";
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

Element act_u(const EngineContext& ctx, const Element& U, const Element& h) {
    Element v = antipode_inv(U);
    Element out(*ctx.funq);
    TensorElement t = coproduct(h);
    for (const auto& [ws, c] : t.terms()) {
        Scalar p = ctx.duality->pair(v, word_elem(*ctx.funq, ws[0]));
        if (p.is_zero()) continue;
        out.add_term(ws[1], c * p);
    }
    return out;
}

Element act_f(const EngineContext& ctx, const Element& f, const Element& h) {
    Element out(*ctx.funq);
    TensorElement t = coproduct(f);
    for (const auto& [ws, c] : t.terms()) {
        Element part = word_elem(*ctx.funq, ws[0]) * h * antipode(word_elem(*ctx.funq, ws[1]));
        out = out + c * part;
    }
    return out;
}

Element act_double(const EngineContext& ctx, const DoubleElement& x, const Element& h) {
    Element out(*ctx.funq);
    for (const auto& [ws, c] : x.terms()) {
        Element inner = act_f(ctx, word_elem(*ctx.funq, ws.second), h);
        out = out + c * act_u(ctx, word_elem(*ctx.uq, ws.first), inner);
    }
    return out;
}

Element right_act(const EngineContext& ctx, const Element& f, const Element& kappa) {
    if (kappa.term_count() != 1)
        throw std::invalid_argument("right_act: torus element must be a single word");
    const auto& [kw, kc] = *kappa.terms().begin();
    GenId e = *ctx.uq->gen_by_token("e");
    GenId es = *ctx.uq->gen_by_token("es");
    if (!kc.is_one() || kw[e] != 0 || kw[es] != 0)
        throw std::invalid_argument("right_act: element is not a group-like power of k");
    Element out(*ctx.funq);
    TensorElement t = coproduct(f);
    for (const auto& [ws, c] : t.terms()) {
        Scalar p = ctx.duality->pair_words(kw, ws[1]);
        if (p.is_zero()) continue;
        out.add_term(ws[0], c * p);
    }
    return out;
}

bool is_podles(const EngineContext& ctx, const Element& f) {
    Element k = Element::generator(*ctx.uq, *ctx.uq->gen_by_token("k"));
    if (right_act(ctx, f, k) != f) return false;
    return right_act(ctx, f, antipode(k)) == f;
}

namespace {

// Common core of the double's antipode and star: the straightened product
// (1 (x) g)(V (x) 1), expanded through the triple Sweedler sum with both
// pairings evaluated. The convention selects how primes on the coopposite
// factor map onto iterates of Delta.
DoubleElement straighten(const EngineContext& ctx, const Element& V, const Element& g) {
    DoubleElement out(ctx);
    TensorElement tv = iterated_coproduct(V, 3);
    TensorElement tg = iterated_coproduct(g, 3);
    const bool cop = ctx.convention == SweedlerConvention::CopReversed;
    for (const auto& [vws, cv] : tv.terms()) {
        const ExpVec& v_first = cop ? vws[2] : vws[0];
        const ExpVec& v_last = cop ? vws[0] : vws[2];
        Element s_last = antipode_inv(word_elem(*ctx.uq, v_last));
        for (const auto& [gws, cg] : tg.terms()) {
            Scalar p1 = ctx.duality->pair_words(v_first, gws[0]);
            if (p1.is_zero()) continue;
            Scalar p2 = ctx.duality->pair(s_last, word_elem(*ctx.funq, gws[2]));
            if (p2.is_zero()) continue;
            out.add_term(vws[1], gws[1], cv * cg * p1 * p2);
        }
    }
    return out;
}

} // namespace

DoubleElement double_antipode(const EngineContext& ctx, const DoubleElement& x) {
    DoubleElement out(ctx);
    for (const auto& [ws, c] : x.terms()) {
        Element v = antipode_inv(word_elem(*ctx.uq, ws.first));
        Element g = antipode(word_elem(*ctx.funq, ws.second));
        out = out + c * straighten(ctx, v, g);
    }
    return out;
}

DoubleElement double_star(const EngineContext& ctx, const DoubleElement& x) {
    DoubleElement out(ctx);
    for (const auto& [ws, c] : x.terms()) {
        Element v = word_elem(*ctx.uq, ws.first).star();
        Element g = word_elem(*ctx.funq, ws.second).star();
        out = out + c.conjugate() * straighten(ctx, v, g);
    }
    return out;
}

bool check_cross_relation(const EngineContext& ctx, GenId ugen, GenId fgen, const Element& h) {
    TensorElement tu = coproduct(Element::generator(*ctx.uq, ugen));
    TensorElement tf = coproduct(Element::generator(*ctx.funq, fgen));
    const bool cop = ctx.convention == SweedlerConvention::CopReversed;
    Element lhs(*ctx.funq), rhs(*ctx.funq);
    for (const auto& [uws, cu] : tu.terms()) {
        const ExpVec& u1 = cop ? uws[1] : uws[0];
        const ExpVec& u2 = cop ? uws[0] : uws[1];
        for (const auto& [fws, cf] : tf.terms()) {
            Scalar c = cu * cf;
            Scalar pl = ctx.duality->pair_words(u1, fws[0]);
            if (!pl.is_zero()) {
                Element t = act_u(ctx, word_elem(*ctx.uq, u2),
                                  act_f(ctx, word_elem(*ctx.funq, fws[1]), h));
                lhs = lhs + (c * pl) * t;
            }
            Scalar pr = ctx.duality->pair_words(u2, fws[1]);
            if (!pr.is_zero()) {
                Element t = act_f(ctx, word_elem(*ctx.funq, fws[0]),
                                  act_u(ctx, word_elem(*ctx.uq, u1), h));
                rhs = rhs + (c * pr) * t;
            }
        }
    }
    return lhs == rhs;
}

bool check_module_algebra_u(const EngineContext& ctx, GenId ugen, const Element& f,
                            const Element& h) {
    Element lhs = act_u(ctx, Element::generator(*ctx.uq, ugen), f * h);
    TensorElement tu = coproduct(Element::generator(*ctx.uq, ugen));
    const bool cop = ctx.convention == SweedlerConvention::CopReversed;
    Element rhs(*ctx.funq);
    for (const auto& [uws, cu] : tu.terms()) {
        const ExpVec& u1 = cop ? uws[1] : uws[0];
        const ExpVec& u2 = cop ? uws[0] : uws[1];
        rhs = rhs + cu * (act_u(ctx, word_elem(*ctx.uq, u1), f) *
                          act_u(ctx, word_elem(*ctx.uq, u2), h));
    }
    return lhs == rhs;
}

bool check_module_algebra_f(const EngineContext& ctx, GenId fgen, const Element& f,
                            const Element& h) {
    Element lhs = act_f(ctx, Element::generator(*ctx.funq, fgen), f * h);
    TensorElement tf = coproduct(Element::generator(*ctx.funq, fgen));
    Element rhs(*ctx.funq);
    for (const auto& [fws, cf] : tf.terms())
        rhs = rhs + cf * (act_f(ctx, word_elem(*ctx.funq, fws[0]), f) *
                          act_f(ctx, word_elem(*ctx.funq, fws[1]), h));
    return lhs == rhs;
}

bool check_star_law(const EngineContext& ctx, const DoubleElement& x, const Element& f) {
    Element lhs = act_double(ctx, x, f).star();
    DoubleElement sx = double_star(ctx, double_antipode(ctx, x));
    Element rhs = act_double(ctx, sx, f.star());
    return lhs == rhs;
}

SweedlerConvention resolve_convention(EngineContext& ctx, bool& unique) {
    auto passes = [&ctx](SweedlerConvention conv) -> bool {
        SweedlerConvention saved = ctx.convention;
        ctx.convention = conv;
        bool ok = true;
        const Presentation& fq = *ctx.funq;
        const Presentation& uq = *ctx.uq;
        Element fa = Element::generator(fq, *fq.gen_by_token("a"));
        Element fb = Element::generator(fq, *fq.gen_by_token("b"));
        Element fas = Element::generator(fq, *fq.gen_by_token("as"));
        std::vector<Element> fs{fa, fb, fas};
        for (GenId u = 0; u < 4 && ok; ++u)
            for (const Element& f : fs)
                for (const Element& h : fs)
                    if (!check_module_algebra_u(ctx, u, f, h)) { ok = false; break; }
        for (GenId u = 0; u < 4 && ok; ++u)
            for (GenId f = 0; f < 4 && ok; ++f)
                if (!check_cross_relation(ctx, u, f, fb)) ok = false;
        Element uk = Element::generator(uq, *uq.gen_by_token("k"));
        Element ue = Element::generator(uq, *uq.gen_by_token("e"));
        std::vector<DoubleElement> xs{
            DoubleElement::from_u(ctx, uk), DoubleElement::from_u(ctx, ue),
            DoubleElement::from_f(ctx, fa), DoubleElement::from_f(ctx, fb),
            DoubleElement::tensor(ctx, ue, fa), DoubleElement::tensor(ctx, uk, fa),
            DoubleElement::tensor(ctx, ue, fb)};
        for (const DoubleElement& x : xs) {
            if (!ok) break;
            if (double_star(ctx, double_star(ctx, x)) != x) ok = false;
        }
        for (const DoubleElement& x : {xs[0], xs[1], xs[2], xs[3]}) {
            if (!ok) break;
            for (const Element& f : {fa, fb})
                if (!check_star_law(ctx, x, f)) { ok = false; break; }
        }
        if (ok) {
            // antipode collapse on pure factors
            if (double_antipode(ctx, DoubleElement::from_u(ctx, uk)) !=
                DoubleElement::from_u(ctx, antipode_inv(uk)))
                ok = false;
            if (double_antipode(ctx, DoubleElement::from_f(ctx, fb)) !=
                DoubleElement::from_f(ctx, antipode(fb)))
                ok = false;
        }
        ctx.convention = saved;
        return ok;
    };

    bool cop_ok = passes(SweedlerConvention::CopReversed);
    bool straight_ok = passes(SweedlerConvention::Straight);
    unique = cop_ok != straight_ok;
    if (cop_ok && !straight_ok) return SweedlerConvention::CopReversed;
    if (straight_ok && !cop_ok) return SweedlerConvention::Straight;
    return SweedlerConvention::CopReversed;
}

EngineContext make_context(const Presentation::Options& uq_opts,
                           const Presentation::Options& funq_opts, int degree_cap,
                           bool resolve) {
    EngineContext ctx;
    ctx.uq = Presentation::make_uq(uq_opts);
    ctx.funq = Presentation::make_funq(funq_opts);
    ctx.duality = std::make_unique<Duality>(*ctx.uq, *ctx.funq);
    ctx.degree_cap = degree_cap;
    if (resolve) ctx.convention = resolve_convention(ctx, ctx.convention_unique);
    return ctx;
}

const EngineContext& default_context() {
    static EngineContext ctx = make_context();
    return ctx;
}

} // namespace qmobius
