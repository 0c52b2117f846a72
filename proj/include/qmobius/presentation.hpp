/**
 * @file presentation.hpp
 * @brief Presentations of the two Hopf algebras by generators and confluent
 *        rewrite rules, with the generator tables for coproduct, counit,
 *        antipode and the involution.
 *
 * Words rewrite to a PBW-style normal form: the rule set is oriented so every
 * rule strictly decreases a weighted degree-lexicographic word order, and
 * local confluence of all two-letter overlaps is checked at construction
 * (a hard gate unless explicitly deferred for the corruption test fixture).
 */
#pragma once

#include <qmobius/scalar.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace qmobius {

using GenId = std::uint8_t;
using Word = std::vector<GenId>;              // transient, possibly reducible
using ExpVec = std::array<std::uint16_t, 4>;  // normal word as generator powers

class Element;

struct GenInfo {
    std::string token;    // parser name: a, as, b, bs, kinv, k, e, es
    std::string pretty;   // display name: a, a*, b, b*, k^-1, k, e, e*
    int weight = 1;       // word-order weight
    GenId star = 0;       // involution image
    Scalar counit;
    Scalar antipode_coeff;
    GenId antipode_gen = 0;
    Scalar antipode_inv_coeff;
    GenId antipode_inv_gen = 0;
    std::vector<std::tuple<Scalar, GenId, GenId>> coproduct;  // sum of c*(g1 (x) g2)
};

struct RewriteRule {
    GenId l0 = 0, l1 = 0;                       // two-letter left-hand side
    std::vector<std::pair<Scalar, Word>> rhs;
};

struct ConfluenceFailure {
    Word overlap;
    std::string reduced_left;
    std::string reduced_right;
};

class Presentation {
public:
    struct Options {
        bool validate = true;
        int corrupt_rule = -1;  // index of a rule whose leading RHS coefficient gets scaled by q
    };

    static std::unique_ptr<const Presentation> make_funq();
    static std::unique_ptr<const Presentation> make_funq(const Options& opts);
    static std::unique_ptr<const Presentation> make_uq();
    static std::unique_ptr<const Presentation> make_uq(const Options& opts);

    const std::string& name() const { return name_; }
    int gen_count() const { return static_cast<int>(gens_.size()); }
    const GenInfo& gen(GenId g) const { return gens_[g]; }
    std::optional<GenId> gen_by_token(const std::string& token) const;

    int rule_count() const { return static_cast<int>(rules_.size()); }
    const RewriteRule& rule(int i) const { return rules_[static_cast<size_t>(i)]; }

    int word_weight(const Word& w) const;
    /// (weight, length, lex) comparison; negative/zero/positive like strcmp.
    int cmp_words(const Word& a, const Word& b) const;

    Word expand(const ExpVec& e) const;
    ExpVec compress(const Word& sorted_word) const;
    std::string word_str(const ExpVec& e, bool pretty) const;

    bool is_normal(const Word& w) const;
    Word star_word(const Word& w) const;

    Element normal_form(const Word& w, const Scalar& coeff = Scalar(1)) const;
    Element normal_form(const std::vector<std::pair<Scalar, Word>>& terms) const;
    /// Same fixed point reached with a randomized redex-selection order.
    Element normal_form_random(const Word& w, std::mt19937& rng) const;

    /// Checks all two-letter overlaps of the rule set; nullopt on success.
    std::optional<ConfluenceFailure> check_local_confluence() const;
    /// Termination + confluence gate; throws std::logic_error on failure.
    void validate_or_throw() const;

    struct HopfCache {
        std::mutex mutex;
        std::map<ExpVec, std::vector<std::tuple<Scalar, ExpVec, ExpVec>>> delta;
    };
    HopfCache& hopf_cache() const { return cache_; }

    Presentation(const Presentation&) = delete;
    Presentation& operator=(const Presentation&) = delete;

private:
    Presentation() = default;

    using RawRelation = std::vector<std::pair<Scalar, Word>>;
    void derive_rules(const std::vector<RawRelation>& base_relations);
    void orient_and_insert(const RawRelation& rel);
    void apply_corruption(int rule_index);

    std::string name_;
    std::vector<GenInfo> gens_;
    std::vector<RewriteRule> rules_;
    int rule_index_[4][4] = {};  // 1-based rule number, 0 = no rule
    mutable HopfCache cache_;
};

} // namespace qmobius
