/**
 * @file action.hpp
 * @brief The double's action machinery: the left actions of both sub-Hopf
 *        algebras on the function algebra, the right torus action cutting out
 *        the invariant subalgebra, and the double's antipode and star.
 *
 * The double is kept at the coalgebra level: elements are (U-word, f-word)
 * pairs, and every product required by the antipode/star/cross-relation
 * formulas is evaluated through actions and pairings.
 *
 * Sweedler order on the coopposite factor is not guessed: both candidate
 * orderings are run against the independently checkable laws (module-algebra
 * compatibility, star compatibility, the cross-relation action identity and
 * involutivity of the double star) and the unique passing one is adopted.
 */
#pragma once

#include <qmobius/pairing.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>

namespace qmobius {

enum class SweedlerConvention {
    CopReversed,  // primes on the coopposite factor read Delta backwards
    Straight,     // primes read Delta in the written order
};

inline const char* to_string(SweedlerConvention c) {
    return c == SweedlerConvention::CopReversed ? "cop-reversed" : "straight";
}

struct EngineContext {
    std::unique_ptr<const Presentation> uq;
    std::unique_ptr<const Presentation> funq;
    std::unique_ptr<Duality> duality;
    SweedlerConvention convention = SweedlerConvention::CopReversed;
    bool convention_unique = false;  // exactly one ordering passed the law battery
    int degree_cap = 8;
};

/// Builds presentations, the pairing and (optionally) resolves the Sweedler
/// convention. Corrupted/unvalidated variants serve the verification fixture.
EngineContext make_context(const Presentation::Options& uq_opts = Presentation::Options(),
                           const Presentation::Options& funq_opts = Presentation::Options(),
                           int degree_cap = 8,
                           bool resolve = true);
/// Shared validated context (presentations are immutable after construction).
const EngineContext& default_context();

/// Finite sum of (U-word, f-word) pairs with Scalar coefficients.
class DoubleElement {
private:
    const EngineContext* ctx_ = nullptr;
    std::map<std::pair<ExpVec, ExpVec>, Scalar> terms_;

public:
    DoubleElement() = default;
    explicit DoubleElement(const EngineContext& ctx) : ctx_(&ctx) {}

    static DoubleElement tensor(const EngineContext& ctx, const Element& U, const Element& f);
    static DoubleElement from_u(const EngineContext& ctx, const Element& U);
    static DoubleElement from_f(const EngineContext& ctx, const Element& f);

    const EngineContext& ctx() const { return *ctx_; }
    const std::map<std::pair<ExpVec, ExpVec>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const ExpVec& uw, const ExpVec& fw, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[{uw, fw}];
        slot += c;
        if (slot.is_zero()) terms_.erase({uw, fw});
    }

    friend DoubleElement operator+(const DoubleElement& a, const DoubleElement& b);
    friend DoubleElement operator*(const Scalar& c, const DoubleElement& a);
    friend bool operator==(const DoubleElement& a, const DoubleElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const DoubleElement& a, const DoubleElement& b) { return !(a == b); }

    std::string str() const;
};

/// U acts through the inverse antipode and the coproduct of the target.
Element act_u(const EngineContext& ctx, const Element& U, const Element& h);
/// Hopf adjoint action of the function algebra on itself.
Element act_f(const EngineContext& ctx, const Element& f, const Element& h);
/// (U (x) f) acts as U after f.
Element act_double(const EngineContext& ctx, const DoubleElement& x, const Element& h);

/// Right action by a group-like torus element (a pure power of k, coefficient 1).
Element right_act(const EngineContext& ctx, const Element& f, const Element& kappa);
/// Invariance under both k and antipode(k) = k^-1.
bool is_podles(const EngineContext& ctx, const Element& f);

DoubleElement double_antipode(const EngineContext& ctx, const DoubleElement& x);
DoubleElement double_star(const EngineContext& ctx, const DoubleElement& x);

/// The action form of the cross relation, on one element h.
bool check_cross_relation(const EngineContext& ctx, GenId ugen, GenId fgen, const Element& h);
/// x |> (f h) = sum (x' |> f)(x'' |> h) for a single generator of either factor.
bool check_module_algebra_u(const EngineContext& ctx, GenId ugen, const Element& f, const Element& h);
bool check_module_algebra_f(const EngineContext& ctx, GenId fgen, const Element& f, const Element& h);
/// star(x |> f) = (star S_D(x)) |> star(f).
bool check_star_law(const EngineContext& ctx, const DoubleElement& x, const Element& f);

/// Runs the law battery under both orderings; `unique` reports whether exactly
/// one passed (the returned one; CopReversed on a tie/none for determinism).
SweedlerConvention resolve_convention(EngineContext& ctx, bool& unique);

} // namespace qmobius
