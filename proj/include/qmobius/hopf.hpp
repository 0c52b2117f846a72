/**
 * @file hopf.hpp
 * @brief Coproduct, counit, antipode and iterated (Sweedler) coproducts,
 *        plus the tensor-power algebras they live in.
 */
#pragma once

#include <qmobius/element.hpp>

#include <map>
#include <string>
#include <vector>

namespace qmobius {

/// Finite sum of n-fold pure tensors of normal-form words, Scalar coefficients.
/// Multiplication is componentwise; every factor stays in normal form.
class TensorElement {
private:
    const Presentation* pres_ = nullptr;
    int arity_ = 1;
    std::map<std::vector<ExpVec>, Scalar> terms_;

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second.is_zero()) it = terms_.erase(it);
            else ++it;
        }
    }

public:
    TensorElement() = default;
    TensorElement(const Presentation& p, int arity) : pres_(&p), arity_(arity) {}

    static TensorElement unit(const Presentation& p, int arity) {
        TensorElement t(p, arity);
        t.terms_[std::vector<ExpVec>(static_cast<size_t>(arity))] = Scalar(1);
        return t;
    }
    static TensorElement of(const Element& x) {
        TensorElement t(x.pres(), 1);
        for (const auto& [w, c] : x.terms()) t.terms_[{w}] = c;
        return t;
    }

    const Presentation& pres() const { return *pres_; }
    int arity() const { return arity_; }
    const std::map<std::vector<ExpVec>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<ExpVec>& ws, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[ws];
        slot += c;
        if (slot.is_zero()) terms_.erase(ws);
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator*(const Scalar& c, const TensorElement& a);
    /// Componentwise product; arities must match.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    /// Star applied in every factor, coefficients conjugated (no factor swap).
    TensorElement factor_star() const;
    /// Tensor factors in reverse order (realizes the coopposite coproduct).
    TensorElement reversed() const;
    /// The i-th factor of one term as an Element (single word, coefficient 1).
    Element factor(const std::vector<ExpVec>& ws, int i) const {
        Element e(*pres_);
        e.add_term(ws[static_cast<size_t>(i)], Scalar(1));
        return e;
    }

    std::string str() const { return render(false); }
    std::string pretty() const { return render(true); }

private:
    std::string render(bool pretty) const;
};

/// Delta extended from the generator tables as an algebra homomorphism.
TensorElement coproduct(const Element& x);
/// (Delta (x) id^(n-2)) o ... o Delta; n = 1 returns x unchanged.
TensorElement iterated_coproduct(const Element& x, int n);
Scalar counit(const Element& x);
Element antipode(const Element& x);
Element antipode_inv(const Element& x);

} // namespace qmobius
