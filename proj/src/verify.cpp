#include <qmobius/verify.hpp>

#include <qmobius/classical.hpp>
#include <qmobius/parse.hpp>
#include <qmobius/sphere.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qmobius {

namespace {

struct Checker {
    const EngineContext& ctx;
    std::string scope;
    std::vector<CheckResult>& out;

    bool selected(const std::string& group) const {
        if (scope == "all") return group != "none";
        if (scope == "laws") return group == "structure";
        return group == scope;
    }

    void run(const std::string& group, const std::string& name, const std::string& presentation,
             const std::function<void(CheckResult&)>& fn) {
        if (!selected(group)) return;
        CheckResult r;
        r.name = name;
        r.presentation = presentation;
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.pass = false;
            r.lhs = "exception";
            r.rhs = e.what();
        }
        out.push_back(std::move(r));
    }

    Element fq(const std::string& text) const { return parse_element(ctx, text, Algebra::Funq); }
    Element uq(const std::string& text) const { return parse_element(ctx, text, Algebra::Uq); }

    // ---- relations ----

    void relation_zero(const std::string& group, const std::string& name, Algebra alg,
                       const std::string& expr) {
        run(group, name, alg == Algebra::Funq ? "funq" : "uq", [=, this](CheckResult& r) {
            Element v = parse_element(ctx, expr, alg);
            r.pass = v.is_zero();
            r.lhs = v.str();
            r.rhs = "0";
        });
    }

    void relations() {
        relation_zero("relations", "relations.funq.ba", Algebra::Funq, "b*a - q*a*b");
        relation_zero("relations", "relations.funq.bsa", Algebra::Funq, "bs*a - q*a*bs");
        relation_zero("relations", "relations.funq.bbs", Algebra::Funq, "bs*b - b*bs");
        relation_zero("relations", "relations.funq.asa", Algebra::Funq, "as*a + q^2*bs*b - 1");
        relation_zero("relations", "relations.funq.aas", Algebra::Funq, "a*as + b*bs - 1");
        relation_zero("relations", "relations.funq.asbs", Algebra::Funq, "as*bs - q*bs*as");
        relation_zero("relations", "relations.funq.asb", Algebra::Funq, "as*b - q*b*as");
        relation_zero("relations", "relations.uq.ek", Algebra::Uq, "e*k - q*k*e");
        relation_zero("relations", "relations.uq.kes", Algebra::Uq, "k*es - q*es*k");
        relation_zero("relations", "relations.uq.kkinv", Algebra::Uq, "k*kinv - 1");
        relation_zero("relations", "relations.uq.kinvk", Algebra::Uq, "kinv*k - 1");
        relation_zero("relations", "relations.uq.ekinv", Algebra::Uq, "e*kinv - q^-1*kinv*e");
        relation_zero("relations", "relations.uq.kinves", Algebra::Uq, "kinv*es - q^-1*es*kinv");
        relation_zero("relations", "relations.uq.ese", Algebra::Uq,
                      "es*e - e*es - (k^2 - kinv^2)/(q - q^-1)");

        for (const Presentation* p : {ctx.funq.get(), ctx.uq.get()}) {
            run("relations", "confluence." + p->name() + ".local", p->name(),
                [p](CheckResult& r) {
                    p->validate_or_throw();
                    r.pass = true;
                    r.lhs = "all overlaps joinable";
                    r.rhs = "all overlaps joinable";
                });
            run("relations", "confluence." + p->name() + ".random", p->name(),
                [p](CheckResult& r) {
                    std::mt19937 rng(20231006);
                    std::uniform_int_distribution<int> len_dist(0, 6), gen_dist(0, 3);
                    for (int trial = 0; trial < 500; ++trial) {
                        Word w(static_cast<size_t>(len_dist(rng)));
                        for (GenId& g : w) g = static_cast<GenId>(gen_dist(rng));
                        Element canonical = p->normal_form(w);
                        Element randomized = p->normal_form_random(w, rng);
                        if (canonical != randomized) {
                            r.pass = false;
                            r.lhs = randomized.str();
                            r.rhs = canonical.str();
                            return;
                        }
                    }
                    r.pass = true;
                    r.lhs = "500 randomized reductions agree";
                    r.rhs = "500 randomized reductions agree";
                });
        }
    }

    // ---- hopf axioms ----

    static TensorElement expand_slot(const TensorElement& t, size_t slot) {
        const Presentation& p = t.pres();
        TensorElement r(p, t.arity() + 1);
        for (const auto& [ws, c] : t.terms()) {
            Element w(p);
            w.add_term(ws[slot], Scalar(1));
            TensorElement d = coproduct(w);
            for (const auto& [dws, dc] : d.terms()) {
                std::vector<ExpVec> nws(ws.begin(), ws.begin() + static_cast<long>(slot));
                nws.push_back(dws[0]);
                nws.push_back(dws[1]);
                nws.insert(nws.end(), ws.begin() + static_cast<long>(slot) + 1, ws.end());
                r.add_term(nws, c * dc);
            }
        }
        return r;
    }

    static Element counit_slot(const TensorElement& t, size_t slot) {
        const Presentation& p = t.pres();
        Element r(p);
        for (const auto& [ws, c] : t.terms()) {
            Element w(p);
            w.add_term(ws[slot], Scalar(1));
            Scalar e = counit(w);
            if (e.is_zero()) continue;
            r.add_term(ws[1 - slot], c * e);
        }
        return r;
    }

    static Element antipode_mul(const TensorElement& t, bool s_on_first) {
        const Presentation& p = t.pres();
        Element r(p);
        for (const auto& [ws, c] : t.terms()) {
            Element w1(p), w2(p);
            w1.add_term(ws[0], Scalar(1));
            w2.add_term(ws[1], Scalar(1));
            Element prod = s_on_first ? antipode(w1) * w2 : w1 * antipode(w2);
            r = r + c * prod;
        }
        return r;
    }

    void hopf_law(const std::string& name, const Presentation& p,
                  const std::function<bool(const Element&, std::string&, std::string&)>& law) {
        run("hopf", name, p.name(), [&p, law](CheckResult& r) {
            std::vector<Word> words{{}};
            for (GenId g0 = 0; g0 < 4; ++g0) {
                words.push_back({g0});
                for (GenId g1 = 0; g1 < 4; ++g1) {
                    words.push_back({g0, g1});
                    for (GenId g2 = 0; g2 < 4; ++g2) words.push_back({g0, g1, g2});
                }
            }
            for (const Word& w : words) {
                Element x = p.normal_form(w);
                std::string lhs, rhs;
                if (!law(x, lhs, rhs)) {
                    r.pass = false;
                    r.lhs = lhs;
                    r.rhs = rhs;
                    return;
                }
            }
            r.pass = true;
            r.lhs = "holds on all words of length <= 3";
            r.rhs = r.lhs;
        });
    }

    void hopf() {
        for (const Presentation* pp : {ctx.funq.get(), ctx.uq.get()}) {
            const Presentation& p = *pp;
            hopf_law("hopf.coassoc." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         TensorElement d = coproduct(x);
                         TensorElement left = expand_slot(d, 0);
                         TensorElement right = expand_slot(d, 1);
                         l = left.str();
                         r = right.str();
                         return left == right;
                     });
            hopf_law("hopf.counit." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         TensorElement d = coproduct(x);
                         Element left = counit_slot(d, 0);
                         Element right = counit_slot(d, 1);
                         l = left.str() + " | " + right.str();
                         r = x.str();
                         return left == x && right == x;
                     });
            hopf_law("hopf.antipode." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         TensorElement d = coproduct(x);
                         Element left = antipode_mul(d, true);
                         Element right = antipode_mul(d, false);
                         Element expected = Element::unit(x.pres(), counit(x));
                         l = left.str() + " | " + right.str();
                         r = expected.str();
                         return left == expected && right == expected;
                     });
            hopf_law("hopf.starcoproduct." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         TensorElement left = coproduct(x.star());
                         TensorElement right = coproduct(x).factor_star();
                         l = left.str();
                         r = right.str();
                         return left == right;
                     });
            hopf_law("hopf.starcounit." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         Scalar left = counit(x.star());
                         Scalar right = counit(x).conjugate();
                         l = left.str();
                         r = right.str();
                         return left == right;
                     });
            hopf_law("hopf.sss." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         Element y = antipode(antipode(x.star()).star());
                         l = y.str();
                         r = x.str();
                         return y == x;
                     });
            hopf_law("hopf.antipodeinv." + p.name() + ".len3", p,
                     [](const Element& x, std::string& l, std::string& r) {
                         Element y = antipode_inv(antipode(x));
                         Element z = antipode(antipode_inv(x));
                         l = y.str() + " | " + z.str();
                         r = x.str();
                         return y == x && z == x;
                     });
        }
        run("hopf", "hopf.antipode_square.funq.b", "funq", [this](CheckResult& r) {
            Element b = fq("b");
            Element lhs = antipode(antipode(b));
            Element rhs = fq("q^2*b");
            r.pass = lhs == rhs;
            r.lhs = lhs.str();
            r.rhs = rhs.str();
        });
    }

    // ---- pairing ----

    void pairing() {
        run("pairing", "pairing.table", "pairing", [this](CheckResult& r) {
            const Duality& d = *ctx.duality;
            auto u = [&](const char* t) { return *ctx.uq->gen_by_token(t); };
            auto f = [&](const char* t) { return *ctx.funq->gen_by_token(t); };
            struct Entry { const char* ug; const char* fg; Scalar want; };
            std::vector<Entry> entries{
                {"k", "a", Scalar::q_half(1)},   {"k", "as", Scalar::q_half(-1)},
                {"k", "b", Scalar()},            {"k", "bs", Scalar()},
                {"e", "a", Scalar()},            {"e", "as", Scalar()},
                {"e", "b", Scalar()},            {"e", "bs", -Scalar::q_pow(-1)},
                {"es", "a", Scalar()},           {"es", "as", Scalar()},
                {"es", "b", Scalar(1)},          {"es", "bs", Scalar()},
            };
            for (const auto& en : entries) {
                Scalar got = d.gen_pair(u(en.ug), f(en.fg));
                if (got != en.want) {
                    r.pass = false;
                    r.lhs = std::string("<") + en.ug + "," + en.fg + "> = " + got.str();
                    r.rhs = en.want.str();
                    return;
                }
            }
            // unit rows behave as counits
            for (GenId g = 0; g < 4; ++g) {
                Element fg = Element::generator(*ctx.funq, g);
                Element ug = Element::generator(*ctx.uq, g);
                if (d.pair(Element::unit(*ctx.uq), fg) != counit(fg) ||
                    d.pair(ug, Element::unit(*ctx.funq)) != counit(ug)) {
                    r.pass = false;
                    r.lhs = "unit pairing";
                    r.rhs = "counit";
                    return;
                }
            }
            r.pass = true;
            r.lhs = "generator table matches";
            r.rhs = r.lhs;
        });
        run("pairing", "pairing.kinv_row", "pairing", [this](CheckResult& r) {
            const Duality& d = *ctx.duality;
            GenId kinv = *ctx.uq->gen_by_token("kinv");
            auto f = [&](const char* t) { return *ctx.funq->gen_by_token(t); };
            bool ok = d.gen_pair(kinv, f("a")) == Scalar::q_half(-1) &&
                      d.gen_pair(kinv, f("as")) == Scalar::q_half(1) &&
                      d.gen_pair(kinv, f("b")).is_zero() && d.gen_pair(kinv, f("bs")).is_zero();
            r.pass = ok;
            r.lhs = "<kinv,a> = " + d.gen_pair(kinv, f("a")).str() +
                    ", <kinv,as> = " + d.gen_pair(kinv, f("as")).str();
            r.rhs = "<kinv,a> = q^(-1/2), <kinv,as> = q^(1/2), others 0";
        });
        run("pairing", "pairing.eq5", "pairing", [this](CheckResult& r) {
            std::vector<std::string> us{"1", "k", "kinv", "e", "es", "k*e", "kinv*es", "e*es"};
            std::vector<std::string> fs{"a", "as", "b", "bs"};
            for (const auto& su : us) {
                for (const auto& sf : fs) {
                    Element U = uq(su), F = fq(sf);
                    if (!ctx.duality->check_star_compat(U, F)) {
                        r.pass = false;
                        r.lhs = "<star(" + su + ")," + sf + ">";
                        r.rhs = "conj(<" + su + ",star(S(" + sf + "))>)";
                        return;
                    }
                }
            }
            r.pass = true;
            r.lhs = "star compatibility holds on 8x4 pairs";
            r.rhs = r.lhs;
        });
        run("pairing", "pairing.product_compat.uside", "pairing", [this](CheckResult& r) {
            for (GenId u1 = 0; u1 < 4; ++u1)
                for (GenId u2 = 0; u2 < 4; ++u2)
                    for (GenId g = 0; g < 4; ++g) {
                        Element U = Element::generator(*ctx.uq, u1);
                        Element V = Element::generator(*ctx.uq, u2);
                        Element F = Element::generator(*ctx.funq, g);
                        Scalar lhs = ctx.duality->pair(U * V, F);
                        Scalar rhs;
                        TensorElement df = coproduct(F);
                        for (const auto& [ws, c] : df.terms()) {
                            Element f1(*ctx.funq), f2(*ctx.funq);
                            f1.add_term(ws[0], Scalar(1));
                            f2.add_term(ws[1], Scalar(1));
                            rhs += c * ctx.duality->pair(U, f1) * ctx.duality->pair(V, f2);
                        }
                        if (lhs != rhs) {
                            r.pass = false;
                            r.lhs = lhs.str();
                            r.rhs = rhs.str();
                            return;
                        }
                    }
            r.pass = true;
            r.lhs = "<UV,f> = <U,f'><V,f''> on all generator triples";
            r.rhs = r.lhs;
        });
        run("pairing", "pairing.product_compat.fside", "pairing", [this](CheckResult& r) {
            for (GenId u = 0; u < 4; ++u)
                for (GenId g1 = 0; g1 < 4; ++g1)
                    for (GenId g2 = 0; g2 < 4; ++g2) {
                        Element U = Element::generator(*ctx.uq, u);
                        Element F = Element::generator(*ctx.funq, g1);
                        Element G = Element::generator(*ctx.funq, g2);
                        Scalar lhs = ctx.duality->pair(U, F * G);
                        Scalar rhs;
                        TensorElement du = coproduct(U);
                        for (const auto& [ws, c] : du.terms()) {
                            Element v1(*ctx.uq), v2(*ctx.uq);
                            v1.add_term(ws[0], Scalar(1));
                            v2.add_term(ws[1], Scalar(1));
                            rhs += c * ctx.duality->pair(v1, F) * ctx.duality->pair(v2, G);
                        }
                        if (lhs != rhs) {
                            r.pass = false;
                            r.lhs = lhs.str();
                            r.rhs = rhs.str();
                            return;
                        }
                    }
            r.pass = true;
            r.lhs = "<U,fg> = <U',f><U'',g> on all generator triples";
            r.rhs = r.lhs;
        });
        run("pairing", "pairing.antipode", "pairing", [this](CheckResult& r) {
            for (GenId u = 0; u < 4; ++u)
                for (GenId g = 0; g < 4; ++g) {
                    Element U = Element::generator(*ctx.uq, u);
                    Element F = Element::generator(*ctx.funq, g);
                    Scalar lhs = ctx.duality->pair(antipode(U), F);
                    Scalar rhs = ctx.duality->pair(U, antipode(F));
                    if (lhs != rhs) {
                        r.pass = false;
                        r.lhs = lhs.str();
                        r.rhs = rhs.str();
                        return;
                    }
                }
            r.pass = true;
            r.lhs = "<S(U),f> = <U,S(f)> on all generator pairs";
            r.rhs = r.lhs;
        });
        run("pairing", "pairing.dual_strategy", "pairing", [this](CheckResult& r) {
            std::mt19937 rng(777);
            std::uniform_int_distribution<int> len_dist(0, 3), gen_dist(0, 3);
            for (int trial = 0; trial < 40; ++trial) {
                Word uw(static_cast<size_t>(len_dist(rng)));
                for (GenId& g : uw) g = static_cast<GenId>(gen_dist(rng));
                Word fw(static_cast<size_t>(len_dist(rng)));
                for (GenId& g : fw) g = static_cast<GenId>(gen_dist(rng));
                Element U = ctx.uq->normal_form(uw);
                Element F = ctx.funq->normal_form(fw);
                Scalar primary = ctx.duality->pair(U, F);
                Scalar dual = ctx.duality->pair_dual_strategy(U, F);
                if (primary != dual) {
                    r.pass = false;
                    r.lhs = primary.str();
                    r.rhs = dual.str();
                    return;
                }
            }
            r.pass = true;
            r.lhs = "both pairing strategies agree on 40 random word pairs";
            r.rhs = r.lhs;
        });
    }

    // ---- explicit action tables ----

    void action_tables() {
        struct Row { const char* gen; const char* target; const char* expected; };
        const std::vector<Row> table_u{
            {"k", "B", "q^-1*B"},
            {"k", "Bs", "q*Bs"},
            {"k", "A", "A"},
            {"kinv", "B", "q*B"},
            {"kinv", "Bs", "q^-1*Bs"},
            {"kinv", "A", "A"},
            {"e", "B", "0"},
            {"e", "Bs", "q^(-1/2) - (q^(3/2) + q^(-1/2))*A"},
            {"e", "A", "q^(1/2)*B"},
            {"es", "B", "-q^(-3/2) + (q^(1/2) + q^(-3/2))*A"},
            {"es", "Bs", "0"},
            {"es", "A", "-q^(-1/2)*Bs"},
        };
        for (const Row& row : table_u) {
            std::string name = std::string("13a.") + row.gen + "." + row.target;
            run("13a", name, "double", [this, row](CheckResult& r) {
                Element acted = act_u(ctx, uq(row.gen), fq(row.target));
                SpherePoly lhs = express_in_sphere(ctx, acted);
                SpherePoly rhs = express_in_sphere(ctx, fq(row.expected));
                r.pass = lhs == rhs;
                r.lhs = lhs.str();
                r.rhs = rhs.str();
            });
        }
        const std::vector<Row> table_f{
            {"a", "B", "q^-1*B + (q - q^-1)*B*A"},
            {"a", "Bs", "q^-1*Bs + (q - q^-1)*A*Bs"},
            {"a", "A", "q^-2*A + (1 - q^-2)*A^2"},
            {"as", "B", "q*B + (q - q^3)*A*B"},
            {"as", "Bs", "q*Bs + (q - q^3)*Bs*A"},
            {"as", "A", "q^2*A + (q^2 - q^4)*A^2"},
            {"b", "B", "(q^2 - 1)*B^2"},
            {"b", "Bs", "(1 - q^2)*A^2"},
            {"b", "A", "(q^3 - q)*B*A"},
            {"bs", "B", "(q - q^-1)*A^2"},
            {"bs", "Bs", "-(q - q^-1)*Bs^2"},
            {"bs", "A", "(1 - q^2)*A*Bs"},
        };
        for (const Row& row : table_f) {
            std::string name = std::string("13b.") + row.gen + "." + row.target;
            run("13b", name, "double", [this, row](CheckResult& r) {
                Element acted = act_f(ctx, fq(row.gen), fq(row.target));
                SpherePoly lhs = express_in_sphere(ctx, acted);
                SpherePoly rhs = express_in_sphere(ctx, fq(row.expected));
                r.pass = lhs == rhs;
                r.lhs = lhs.str();
                r.rhs = rhs.str();
            });
        }
    }

    // ---- structure of the double and the invariant subalgebra ----

    void structure() {
        relation_zero("structure", "structure.podles.AB", Algebra::Funq, "A*B - q^2*B*A");
        relation_zero("structure", "structure.podles.ABs", Algebra::Funq, "A*Bs - q^-2*Bs*A");
        relation_zero("structure", "structure.podles.BBs", Algebra::Funq, "B*Bs - q^-2*A*(1 - A)");
        relation_zero("structure", "structure.podles.BsB", Algebra::Funq, "Bs*B - A*(1 - q^2*A)");

        run("structure", "structure.podles.membership", "double", [this](CheckResult& r) {
            bool ok = is_podles(ctx, fq("B")) && is_podles(ctx, fq("Bs")) &&
                      is_podles(ctx, fq("A")) && is_podles(ctx, fq("1")) &&
                      !is_podles(ctx, fq("a")) && !is_podles(ctx, fq("b"));
            r.pass = ok;
            r.lhs = "B, Bs, A, 1 invariant; a, b not";
            r.rhs = r.lhs;
        });
        run("structure", "structure.right_action.a", "double", [this](CheckResult& r) {
            Element k = uq("k");
            Element lhs = right_act(ctx, fq("a"), k);
            Element rhs = fq("q^(1/2)*a");
            r.pass = lhs == rhs;
            r.lhs = lhs.str();
            r.rhs = rhs.str();
        });

        const std::vector<std::string> monomials{"1",   "A",    "B",     "Bs",  "A^2",
                                                 "A*B", "A*Bs", "B^2",   "Bs^2", "B*Bs"};
        for (GenId u = 0; u < 4; ++u) {
            std::string name = "structure.stability.u." + ctx.uq->gen(u).token;
            run("structure", name, "double", [this, u, &monomials](CheckResult& r) {
                for (const auto& m : monomials) {
                    Element acted = act_u(ctx, Element::generator(*ctx.uq, u), fq(m));
                    if (!is_podles(ctx, acted)) {
                        r.pass = false;
                        r.lhs = acted.str();
                        r.rhs = "a right-invariant element";
                        return;
                    }
                }
                r.pass = true;
                r.lhs = "sphere stable under the action";
                r.rhs = r.lhs;
            });
        }
        for (GenId g = 0; g < 4; ++g) {
            std::string name = "structure.stability.f." + ctx.funq->gen(g).token;
            run("structure", name, "double", [this, g, &monomials](CheckResult& r) {
                for (const auto& m : monomials) {
                    Element acted = act_f(ctx, Element::generator(*ctx.funq, g), fq(m));
                    if (!is_podles(ctx, acted)) {
                        r.pass = false;
                        r.lhs = acted.str();
                        r.rhs = "a right-invariant element";
                        return;
                    }
                }
                r.pass = true;
                r.lhs = "sphere stable under the action";
                r.rhs = r.lhs;
            });
        }

        const std::vector<std::string> sphere_gens{"A", "B", "Bs"};
        for (GenId u = 0; u < 4; ++u) {
            std::string name = "structure.modalg.u." + ctx.uq->gen(u).token;
            run("structure", name, "double", [this, u, &sphere_gens](CheckResult& r) {
                for (const auto& sf : sphere_gens)
                    for (const auto& sh : sphere_gens)
                        if (!check_module_algebra_u(ctx, u, fq(sf), fq(sh))) {
                            r.pass = false;
                            r.lhs = "x |> (" + sf + "*" + sh + ")";
                            r.rhs = "(x' |> " + sf + ")(x'' |> " + sh + ")";
                            return;
                        }
                r.pass = true;
                r.lhs = "module-algebra law holds";
                r.rhs = r.lhs;
            });
        }
        for (GenId g = 0; g < 4; ++g) {
            std::string name = "structure.modalg.f." + ctx.funq->gen(g).token;
            run("structure", name, "double", [this, g, &sphere_gens](CheckResult& r) {
                for (const auto& sf : sphere_gens)
                    for (const auto& sh : sphere_gens)
                        if (!check_module_algebra_f(ctx, g, fq(sf), fq(sh))) {
                            r.pass = false;
                            r.lhs = "x |> (" + sf + "*" + sh + ")";
                            r.rhs = "(x' |> " + sf + ")(x'' |> " + sh + ")";
                            return;
                        }
                r.pass = true;
                r.lhs = "module-algebra law holds";
                r.rhs = r.lhs;
            });
        }

        struct StarCase { const char* label; bool from_u; const char* gen; };
        for (StarCase sc : {StarCase{"k", true, "k"}, StarCase{"e", true, "e"},
                            StarCase{"a", false, "a"}, StarCase{"b", false, "b"}}) {
            std::string name = std::string("structure.starlaw.") + sc.label;
            run("structure", name, "double", [this, sc, &sphere_gens](CheckResult& r) {
                DoubleElement x = sc.from_u ? DoubleElement::from_u(ctx, uq(sc.gen))
                                            : DoubleElement::from_f(ctx, fq(sc.gen));
                for (const auto& sf : sphere_gens)
                    if (!check_star_law(ctx, x, fq(sf))) {
                        r.pass = false;
                        r.lhs = "star(x |> " + std::string(sf) + ")";
                        r.rhs = "(star S_D(x)) |> star(" + std::string(sf) + ")";
                        return;
                    }
                r.pass = true;
                r.lhs = "star compatibility of the action holds";
                r.rhs = r.lhs;
            });
        }

        for (GenId u = 0; u < 4; ++u)
            for (GenId g = 0; g < 4; ++g) {
                std::string name = "structure.cross." + ctx.uq->gen(u).token + "." +
                                   ctx.funq->gen(g).token;
                run("structure", name, "double", [this, u, g, &sphere_gens](CheckResult& r) {
                    for (const auto& sh : sphere_gens)
                        if (!check_cross_relation(ctx, u, g, fq(sh))) {
                            r.pass = false;
                            r.lhs = "<U',f'> U'' |> (f'' |> h)";
                            r.rhs = "<U'',f''> f' |> (U' |> h)";
                            return;
                        }
                    r.pass = true;
                    r.lhs = "cross-relation action identity holds";
                    r.rhs = r.lhs;
                });
            }

        run("structure", "structure.action.uq", "double", [this](CheckResult& r) {
            const std::vector<std::string> us{"k", "e", "es"};
            const std::vector<std::string> hs{"A", "B", "Bs"};
            for (const auto& su : us)
                for (const auto& sv : us)
                    for (const auto& sh : hs) {
                        Element lhs = act_u(ctx, uq(su) * uq(sv), fq(sh));
                        Element rhs = act_u(ctx, uq(su), act_u(ctx, uq(sv), fq(sh)));
                        if (lhs != rhs) {
                            r.pass = false;
                            r.lhs = lhs.str();
                            r.rhs = rhs.str();
                            return;
                        }
                    }
            r.pass = true;
            r.lhs = "(UV) |> h = U |> (V |> h)";
            r.rhs = r.lhs;
        });
        run("structure", "structure.action.funq", "double", [this](CheckResult& r) {
            const std::vector<std::string> gs{"a", "b"};
            const std::vector<std::string> hs{"A", "B", "Bs"};
            for (const auto& sf : gs)
                for (const auto& sg : gs)
                    for (const auto& sh : hs) {
                        Element lhs = act_f(ctx, fq(sf) * fq(sg), fq(sh));
                        Element rhs = act_f(ctx, fq(sf), act_f(ctx, fq(sg), fq(sh)));
                        if (lhs != rhs) {
                            r.pass = false;
                            r.lhs = lhs.str();
                            r.rhs = rhs.str();
                            return;
                        }
                    }
            r.pass = true;
            r.lhs = "(fg) |> h = f |> (g |> h)";
            r.rhs = r.lhs;
        });

        run("structure", "structure.expand.roundtrip", "double", [this](CheckResult& r) {
            std::vector<std::string> cases{"B*Bs", "Bs*B", "A*B*Bs", "A^2", "B^2*Bs"};
            for (const auto& s : cases) {
                Element f = fq(s);
                SpherePoly p = express_in_sphere(ctx, f);
                if (to_ambient(ctx, p) != f) {
                    r.pass = false;
                    r.lhs = p.str();
                    r.rhs = f.str();
                    return;
                }
            }
            r.pass = true;
            r.lhs = "PBW expansion round-trips";
            r.rhs = r.lhs;
        });

        run("structure", "structure.double_antipode.gen", "double", [this](CheckResult& r) {
            struct Case { DoubleElement x, want; };
            std::vector<Case> cases;
            cases.push_back({DoubleElement::from_u(ctx, uq("1")), DoubleElement::from_u(ctx, uq("1"))});
            cases.push_back({DoubleElement::from_u(ctx, uq("k")), DoubleElement::from_u(ctx, uq("kinv"))});
            cases.push_back({DoubleElement::from_u(ctx, uq("e")), DoubleElement::from_u(ctx, uq("-q*e"))});
            cases.push_back({DoubleElement::from_f(ctx, fq("b")), DoubleElement::from_f(ctx, fq("-q*b"))});
            cases.push_back({DoubleElement::from_f(ctx, fq("a")), DoubleElement::from_f(ctx, fq("as"))});
            for (const auto& c : cases) {
                DoubleElement got = double_antipode(ctx, c.x);
                if (got != c.want) {
                    r.pass = false;
                    r.lhs = got.str();
                    r.rhs = c.want.str();
                    return;
                }
            }
            r.pass = true;
            r.lhs = "antipode collapses correctly on pure factors";
            r.rhs = r.lhs;
        });
        run("structure", "structure.double_star.gen", "double", [this](CheckResult& r) {
            DoubleElement k1 = DoubleElement::from_u(ctx, uq("k"));
            DoubleElement one = DoubleElement::from_u(ctx, uq("1"));
            bool ok = double_star(ctx, k1) == k1 && double_star(ctx, one) == one;
            r.pass = ok;
            r.lhs = double_star(ctx, k1).str();
            r.rhs = k1.str();
        });
        run("structure", "structure.double_star.involution", "double", [this](CheckResult& r) {
            std::vector<DoubleElement> xs{
                DoubleElement::from_u(ctx, uq("k")), DoubleElement::from_u(ctx, uq("e")),
                DoubleElement::from_f(ctx, fq("a")), DoubleElement::from_f(ctx, fq("b")),
                DoubleElement::tensor(ctx, uq("e"), fq("a")),
                DoubleElement::tensor(ctx, uq("k"), fq("a")),
                DoubleElement::tensor(ctx, uq("es"), fq("bs")),
                DoubleElement::tensor(ctx, uq("e"), fq("b"))};
            for (const auto& x : xs) {
                DoubleElement twice = double_star(ctx, double_star(ctx, x));
                if (twice != x) {
                    r.pass = false;
                    r.lhs = twice.str();
                    r.rhs = x.str();
                    return;
                }
            }
            r.pass = true;
            r.lhs = "double star is an involution";
            r.rhs = r.lhs;
        });
        run("structure", "structure.convention", "double", [this](CheckResult& r) {
            r.pass = ctx.convention_unique;
            r.lhs = to_string(ctx.convention);
            r.rhs = "exactly one Sweedler ordering passes all laws";
        });
    }

    // ---- classical limits ----

    ClassicalPoly classical_gen(const std::string& target) const {
        if (target == "A") return ClassicalPoly::monomial(1, 0, 0);
        if (target == "B") return ClassicalPoly::monomial(0, 1, 0);
        return ClassicalPoly::monomial(0, 0, 1);
    }

    void limits() {
        struct Su2Row { Su2Limit name; ClassicalDerivation oracle; };
        const std::vector<Su2Row> su2{
            {Su2Limit::R3, cd_R3()},
            {Su2Limit::R1_plus_iR2, cd_R1_plus_iR2()},
            {Su2Limit::mR1_plus_iR2, cd_mR1_plus_iR2()},
        };
        const std::vector<std::string> targets{"B", "Bs", "A"};
        for (const auto& row : su2) {
            for (size_t t = 0; t < targets.size(); ++t) {
                std::string name = std::string("15a.") + to_string(row.name) + "." + targets[t];
                run("limits", name, "classical", [this, &row, target = targets[t]](CheckResult& r) {
                    ClassicalPoly lhs = quantum_limit_su2(ctx, row.name, fq(target));
                    ClassicalPoly rhs = row.oracle.apply(classical_gen(target));
                    r.pass = lhs.sphere_reduce() == rhs.sphere_reduce();
                    r.lhs = lhs.str();
                    r.rhs = rhs.str();
                });
            }
        }
        struct AnRow { AnLimit name; ClassicalDerivation oracle; };
        const std::vector<AnRow> an{
            {AnLimit::T0, cd_T0()},
            {AnLimit::iT1_plus_T2, cd_iT1_plus_T2()},
            {AnLimit::iT1_minus_T2, cd_iT1_minus_T2()},
        };
        for (const auto& row : an) {
            for (size_t t = 0; t < targets.size(); ++t) {
                std::string name = std::string("15b.") + to_string(row.name) + "." + targets[t];
                run("limits", name, "classical", [this, &row, target = targets[t]](CheckResult& r) {
                    ClassicalPoly lhs = quantum_limit_an(ctx, row.name, fq(target));
                    ClassicalPoly rhs = row.oracle.apply(classical_gen(target));
                    r.pass = lhs.sphere_reduce() == rhs.sphere_reduce();
                    r.lhs = lhs.str();
                    r.rhs = rhs.str();
                });
            }
        }

        run("limits-extra", "limits.degeneration", "classical", [this](CheckResult& r) {
            // the unrescaled adjoint action becomes trivial at q = 1
            for (GenId g = 0; g < 4; ++g)
                for (const char* target : {"A", "B", "Bs"}) {
                    Element x = Element::generator(*ctx.funq, g);
                    Element h = fq(target);
                    Element diff = act_f(ctx, x, h) - counit(x) * h;
                    ClassicalPoly at_one = classical_of_sphere(express_in_sphere(ctx, diff));
                    if (!at_one.is_zero()) {
                        r.pass = false;
                        r.lhs = at_one.str();
                        r.rhs = "0";
                        return;
                    }
                }
            r.pass = true;
            r.lhs = "unrescaled adjoint action degenerates at q = 1";
            r.rhs = r.lhs;
        });
        run("limits-extra", "limits.kinv_R3", "classical", [this](CheckResult& r) {
            // (k^-1 - 1)/(i ln q) acts as -R3 in the limit
            ClassicalDerivation minus_r3 =
                lincomb(GaussianRational(-1), cd_R3(), GaussianRational(0), cd_R3(), "-R3");
            for (const char* target : {"A", "B", "Bs"}) {
                Element h = fq(target);
                Element kinv = uq("kinv");
                Prelimit pre;
                pre.poly = express_in_sphere(ctx, act_u(ctx, kinv, h) - h);
                pre.factor = -GaussianRational::i();
                pre.div_lnq = true;
                ClassicalPoly lhs = take_limit(pre);
                ClassicalPoly rhs = minus_r3.apply(classical_gen(target));
                if (lhs.sphere_reduce() != rhs.sphere_reduce()) {
                    r.pass = false;
                    r.lhs = lhs.str();
                    r.rhs = rhs.str();
                    return;
                }
            }
            r.pass = true;
            r.lhs = "(kinv - 1)/(i ln q) limits to -R3";
            r.rhs = r.lhs;
        });
    }

    // ---- brackets ----

    void brackets() {
        GaussianRational half(Rational(1, 2));
        GaussianRational mhalf_i = GaussianRational(Rational(0), Rational(-1, 2));
        ClassicalDerivation rp = cd_R1_plus_iR2(), rm = cd_mR1_plus_iR2();
        ClassicalDerivation r1 = lincomb(half, rp, -half, rm, "R1");
        ClassicalDerivation r2 = lincomb(mhalf_i, rp, mhalf_i, rm, "R2");
        ClassicalDerivation r3 = cd_R3();
        ClassicalDerivation tp = cd_iT1_plus_T2(), tm = cd_iT1_minus_T2();
        ClassicalDerivation t1 = lincomb(mhalf_i, tp, mhalf_i, tm, "T1");
        ClassicalDerivation t2 = lincomb(half, tp, -half, tm, "T2");
        ClassicalDerivation t0 = cd_T0();
        ClassicalDerivation zero{"0", {}};

        struct Row { std::string name; ClassicalDerivation lhs, rhs; };
        std::vector<Row> rows;
        rows.push_back({"brackets.su2.R1R2", bracket(r1, r2), r3});
        rows.push_back({"brackets.su2.R2R3", bracket(r2, r3), r1});
        rows.push_back({"brackets.su2.R3R1", bracket(r3, r1), r2});
        rows.push_back({"brackets.an.T0T1", bracket(t0, t1),
                        lincomb(GaussianRational(-1), t1, GaussianRational(0), t1, "-T1")});
        rows.push_back({"brackets.an.T0T2", bracket(t0, t2),
                        lincomb(GaussianRational(-1), t2, GaussianRational(0), t2, "-T2")});
        rows.push_back({"brackets.an.T1T2", bracket(t1, t2), zero});
        rows.push_back({"brackets.antisym", bracket(t0, t0), zero});
        for (const auto& row : rows) {
            run("brackets", row.name, "classical", [&row](CheckResult& r) {
                r.pass = derivation_eq(row.lhs, row.rhs);
                r.lhs = row.lhs.on[1].sphere_reduce().str();  // value on B
                r.rhs = row.rhs.on[1].sphere_reduce().str();
            });
        }
    }
};

} // namespace

VerifyReport run_verification_suite(const VerifyOptions& options) {
    static const std::vector<std::string> known{"all",  "relations", "hopf",    "pairing", "13a",
                                                "13b",  "structure", "laws",    "limits",  "brackets"};
    if (std::find(known.begin(), known.end(), options.scope) == known.end())
        throw std::invalid_argument("unknown verify scope '" + options.scope + "'");

    Presentation::Options uq_opts, funq_opts;
    if (options.corrupt) {
        if (options.corrupt->first == "funq") {
            funq_opts.validate = false;
            funq_opts.corrupt_rule = options.corrupt->second;
        } else if (options.corrupt->first == "uq") {
            uq_opts.validate = false;
            uq_opts.corrupt_rule = options.corrupt->second;
        } else {
            throw std::invalid_argument("unknown presentation '" + options.corrupt->first + "'");
        }
    }
    EngineContext ctx = make_context(uq_opts, funq_opts, options.degree_cap, true);

    VerifyReport report;
    report.scope = options.scope;
    report.convention = to_string(ctx.convention);
    report.convention_unique = ctx.convention_unique;

    Checker checker{ctx, options.scope, report.checks};
    checker.relations();
    checker.hopf();
    checker.pairing();
    checker.action_tables();
    checker.structure();
    checker.limits();
    checker.brackets();

    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult& x, const CheckResult& y) { return x.name < y.name; });
    for (const CheckResult& c : report.checks) (c.pass ? report.passed : report.failed)++;
    return report;
}

std::string report_text(const VerifyReport& report) {
    std::ostringstream os;
    for (const CheckResult& c : report.checks) {
        if (c.pass) {
            os << "[PASS] " << c.name << "\n";
        } else {
            os << "[FAIL] " << c.name << " (" << c.presentation << ")\n"
               << "       lhs: " << c.lhs << "\n"
               << "       rhs: " << c.rhs << "\n";
        }
    }
    os << report.passed << " passed, " << report.failed << " failed (scope " << report.scope
       << ", sweedler order " << report.convention << ")\n";
    return os.str();
}

std::string report_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["scope"] = report.scope;
    j["convention"] = report.convention;
    j["convention_unique"] = report.convention_unique;
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckResult& c : report.checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["presentation"] = c.presentation;
        e["status"] = c.pass ? "pass" : "fail";
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        j["checks"].push_back(std::move(e));
    }
    j["total"] = report.passed + report.failed;
    j["passed"] = report.passed;
    j["failed"] = report.failed;
    return j.dump(2) + "\n";
}

} // namespace qmobius
