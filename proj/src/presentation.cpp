#include <qmobius/presentation.hpp>
#include <qmobius/element.hpp>

#include <algorithm>
#include <stdexcept>

namespace qmobius {

namespace {

Word cat(const Word& a, const Word& b) {
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

} // namespace

std::optional<GenId> Presentation::gen_by_token(const std::string& token) const {
    for (GenId g = 0; g < gens_.size(); ++g)
        if (gens_[g].token == token) return g;
    return std::nullopt;
}

int Presentation::word_weight(const Word& w) const {
    int s = 0;
    for (GenId g : w) s += gens_[g].weight;
    return s;
}

int Presentation::cmp_words(const Word& a, const Word& b) const {
    int wa = word_weight(a), wb = word_weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

Word Presentation::expand(const ExpVec& e) const {
    Word w;
    for (GenId g = 0; g < gens_.size(); ++g)
        for (int n = 0; n < e[g]; ++n) w.push_back(g);
    return w;
}

ExpVec Presentation::compress(const Word& w) const {
    ExpVec e{};
    for (size_t i = 0; i < w.size(); ++i) {
        if (i > 0 && w[i] < w[i - 1])
            throw std::logic_error("Presentation: compress of an unsorted word");
        ++e[w[i]];
    }
    return e;
}

std::string Presentation::word_str(const ExpVec& e, bool pretty) const {
    std::string out;
    for (GenId g = 0; g < gens_.size(); ++g) {
        if (e[g] == 0) continue;
        if (!out.empty()) out += pretty ? " " : "*";
        out += pretty ? gens_[g].pretty : gens_[g].token;
        if (e[g] > 1) out += "^" + std::to_string(e[g]);
    }
    return out.empty() ? "1" : out;
}

bool Presentation::is_normal(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rule_index_[w[i]][w[i + 1]] != 0) return false;
    return true;
}

Word Presentation::star_word(const Word& w) const {
    Word r(w.rbegin(), w.rend());
    for (GenId& g : r) g = gens_[g].star;
    return r;
}

Element Presentation::normal_form(const Word& w, const Scalar& coeff) const {
    return normal_form({{coeff, w}});
}

Element Presentation::normal_form(const std::vector<std::pair<Scalar, Word>>& terms) const {
    Element out(*this);
    std::vector<std::pair<Scalar, Word>> work = terms;
    while (!work.empty()) {
        auto [c, w] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        int pos = -1;
        for (size_t i = 0; i + 1 < w.size(); ++i) {
            if (rule_index_[w[i]][w[i + 1]] != 0) {
                pos = static_cast<int>(i);
                break;
            }
        }
        if (pos < 0) {
            out.add_term(compress(w), c);
            continue;
        }
        const RewriteRule& r = rules_[static_cast<size_t>(rule_index_[w[pos]][w[pos + 1]] - 1)];
        for (const auto& [rc, rw] : r.rhs) {
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            work.emplace_back(c * rc, std::move(nw));
        }
    }
    return out;
}

Element Presentation::normal_form_random(const Word& w, std::mt19937& rng) const {
    Element out(*this);
    std::vector<std::pair<Scalar, Word>> work{{Scalar(1), w}};
    while (!work.empty()) {
        size_t pick = std::uniform_int_distribution<size_t>(0, work.size() - 1)(rng);
        std::swap(work[pick], work.back());
        auto [c, word] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        std::vector<size_t> redexes;
        for (size_t i = 0; i + 1 < word.size(); ++i)
            if (rule_index_[word[i]][word[i + 1]] != 0) redexes.push_back(i);
        if (redexes.empty()) {
            out.add_term(compress(word), c);
            continue;
        }
        size_t pos = redexes[std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng)];
        const RewriteRule& r = rules_[static_cast<size_t>(rule_index_[word[pos]][word[pos + 1]] - 1)];
        for (const auto& [rc, rw] : r.rhs) {
            Word nw(word.begin(), word.begin() + static_cast<long>(pos));
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), word.begin() + static_cast<long>(pos) + 2, word.end());
            work.emplace_back(c * rc, std::move(nw));
        }
    }
    return out;
}

std::optional<ConfluenceFailure> Presentation::check_local_confluence() const {
    for (const RewriteRule& r1 : rules_) {
        for (const RewriteRule& r2 : rules_) {
            if (r1.l1 != r2.l0) continue;
            Word overlap{r1.l0, r1.l1, r2.l1};
            std::vector<std::pair<Scalar, Word>> left, right;
            for (const auto& [c, w] : r1.rhs) left.emplace_back(c, cat(w, {r2.l1}));
            for (const auto& [c, w] : r2.rhs) right.emplace_back(c, cat({r1.l0}, w));
            Element a = normal_form(left);
            Element b = normal_form(right);
            if (a != b)
                return ConfluenceFailure{overlap, a.str(), b.str()};
        }
    }
    return std::nullopt;
}

void Presentation::validate_or_throw() const {
    for (const RewriteRule& r : rules_) {
        Word lhs{r.l0, r.l1};
        for (const auto& [c, w] : r.rhs) {
            (void)c;
            if (cmp_words(w, lhs) >= 0)
                throw std::logic_error(name_ + ": rule does not decrease the word order");
            if (!is_normal(w))
                throw std::logic_error(name_ + ": rule right-hand side is not in normal form");
        }
    }
    if (auto fail = check_local_confluence()) {
        std::string w;
        for (GenId g : fail->overlap) w += gens_[g].token + std::string(" ");
        throw std::logic_error(name_ + ": unresolvable overlap on " + w + "-> " +
                               fail->reduced_left + " vs " + fail->reduced_right);
    }
}

void Presentation::orient_and_insert(const RawRelation& rel) {
    // Leading word (maximal in the word order) becomes the left-hand side.
    int lead = -1;
    for (size_t i = 0; i < rel.size(); ++i) {
        if (rel[i].first.is_zero()) continue;
        if (lead < 0 || cmp_words(rel[i].second, rel[static_cast<size_t>(lead)].second) > 0)
            lead = static_cast<int>(i);
    }
    if (lead < 0) return;
    const Word& lhs = rel[static_cast<size_t>(lead)].second;
    if (lhs.size() != 2)
        throw std::logic_error(name_ + ": relation must be led by a two-letter word");
    Scalar lc = rel[static_cast<size_t>(lead)].first;
    RewriteRule rule;
    rule.l0 = lhs[0];
    rule.l1 = lhs[1];
    for (size_t i = 0; i < rel.size(); ++i) {
        if (static_cast<int>(i) == lead || rel[i].first.is_zero()) continue;
        rule.rhs.emplace_back(-rel[i].first / lc, rel[i].second);
    }
    int& slot = rule_index_[rule.l0][rule.l1];
    if (slot != 0) return;  // starred variant of a self-adjoint relation
    rules_.push_back(std::move(rule));
    slot = static_cast<int>(rules_.size());
}

void Presentation::derive_rules(const std::vector<RawRelation>& base_relations) {
    for (const RawRelation& rel : base_relations) orient_and_insert(rel);
    for (const RawRelation& rel : base_relations) {
        RawRelation starred;
        for (const auto& [c, w] : rel) starred.emplace_back(c.conjugate(), star_word(w));
        orient_and_insert(starred);
    }
    // Bring every right-hand side into normal form with the full rule set.
    for (RewriteRule& r : rules_) {
        Element nf = normal_form(r.rhs);
        r.rhs.clear();
        for (const auto& [w, c] : nf.terms()) r.rhs.emplace_back(c, expand(w));
    }
}

void Presentation::apply_corruption(int rule_index) {
    if (rule_index < 0) return;
    if (rule_index >= static_cast<int>(rules_.size()))
        throw std::out_of_range(name_ + ": no rewrite rule with index " + std::to_string(rule_index));
    RewriteRule& r = rules_[static_cast<size_t>(rule_index)];
    if (r.rhs.empty())
        r.rhs.emplace_back(Scalar::q() - Scalar(1), Word{});
    else
        r.rhs.front().first *= Scalar::q();
}

std::unique_ptr<const Presentation> Presentation::make_funq() { return make_funq(Options()); }
std::unique_ptr<const Presentation> Presentation::make_uq() { return make_uq(Options()); }

std::unique_ptr<const Presentation> Presentation::make_funq(const Options& opts) {
    auto p = std::unique_ptr<Presentation>(new Presentation());
    p->name_ = "funq";

    // order: a < a* < b < b*; a-type letters weigh 2 so the unit relations
    // aa* -> 1 - bb* and a*a -> 1 - q^2 bb* decrease the word order.
    const GenId a = 0, as = 1, b = 2, bs = 3;
    auto& g = p->gens_;
    g.resize(4);
    g[a] = {"a", "a", 2, as, Scalar(1), Scalar(1), as, Scalar(1), as, {}};
    g[as] = {"as", "a*", 2, a, Scalar(1), Scalar(1), a, Scalar(1), a, {}};
    g[b] = {"b", "b", 1, bs, Scalar(0), -Scalar::q(), b, -Scalar::q_pow(-1), b, {}};
    g[bs] = {"bs", "b*", 1, b, Scalar(0), -Scalar::q_pow(-1), bs, -Scalar::q(), bs, {}};
    g[a].coproduct = {{Scalar(1), a, a}, {-Scalar::q(), b, bs}};
    g[as].coproduct = {{Scalar(1), as, as}, {-Scalar::q(), bs, b}};
    g[b].coproduct = {{Scalar(1), b, as}, {Scalar(1), a, b}};
    g[bs].coproduct = {{Scalar(1), bs, a}, {Scalar(1), as, bs}};

    const Scalar one(1), q = Scalar::q();
    std::vector<RawRelation> rels = {
        {{one, {b, a}}, {-q, {a, b}}},                            // ba = q ab
        {{one, {bs, a}}, {-q, {a, bs}}},                          // b*a = q ab*
        {{one, {bs, b}}, {-one, {b, bs}}},                        // bb* = b*b
        {{one, {as, a}}, {q * q, {bs, b}}, {-one, {}}},           // a*a + q^2 b*b = 1
        {{one, {a, as}}, {one, {b, bs}}, {-one, {}}},             // aa* + bb* = 1
    };
    p->derive_rules(rels);
    p->apply_corruption(opts.corrupt_rule);
    if (opts.validate) p->validate_or_throw();
    return p;
}

std::unique_ptr<const Presentation> Presentation::make_uq(const Options& opts) {
    auto p = std::unique_ptr<Presentation>(new Presentation());
    p->name_ = "uq";

    const GenId kinv = 0, k = 1, e = 2, es = 3;
    auto& g = p->gens_;
    g.resize(4);
    g[kinv] = {"kinv", "k^-1", 1, kinv, Scalar(1), Scalar(1), k, Scalar(1), k, {}};
    g[k] = {"k", "k", 1, k, Scalar(1), Scalar(1), kinv, Scalar(1), kinv, {}};
    g[e] = {"e", "e", 1, es, Scalar(0), -Scalar::q_pow(-1), e, -Scalar::q(), e, {}};
    g[es] = {"es", "e*", 1, e, Scalar(0), -Scalar::q(), es, -Scalar::q_pow(-1), es, {}};
    g[kinv].coproduct = {{Scalar(1), kinv, kinv}};
    g[k].coproduct = {{Scalar(1), k, k}};
    g[e].coproduct = {{Scalar(1), e, k}, {Scalar(1), kinv, e}};
    g[es].coproduct = {{Scalar(1), es, k}, {Scalar(1), kinv, es}};

    const Scalar one(1), q = Scalar::q(), qinv = Scalar::q_pow(-1);
    // k^2 - k^-2 = (q - q^-1)(e*e - ee*), solved for the leading word e*e
    Scalar c = one / (q - qinv);
    std::vector<RawRelation> rels = {
        {{one, {e, k}}, {-q, {k, e}}},                 // ek = q ke
        {{one, {k, kinv}}, {-one, {}}},                // k k^-1 = 1
        {{one, {kinv, k}}, {-one, {}}},                // k^-1 k = 1
        {{one, {e, kinv}}, {-qinv, {kinv, e}}},        // ek = q ke times k^-1 on both sides
        {{one, {es, e}}, {-one, {e, es}}, {-c, {k, k}}, {c, {kinv, kinv}}},
    };
    p->derive_rules(rels);
    p->apply_corruption(opts.corrupt_rule);
    if (opts.validate) p->validate_or_throw();
    return p;
}

} // namespace qmobius
