/**
 * @file sphere.hpp
 * @brief The invariant subalgebra ("quantum sphere") inside the function
 *        algebra: its generators A = b b*, B = a b, B* = b* a*, and the unique
 *        expansion of invariant elements in the PBW basis
 *        { A^k B^m } union { A^k B*^n, n >= 1 }.
 */
#pragma once

#include <qmobius/action.hpp>

#include <map>
#include <string>
#include <utility>

namespace qmobius {

/// Polynomial in the sphere generators, stored on the PBW basis.
/// Key: (A-degree, signed B-power): second > 0 means B^m, < 0 means B*^(-m).
class SpherePoly {
private:
    std::map<std::pair<int, int>, Scalar> terms_;

public:
    SpherePoly() = default;

    static SpherePoly monomial(int a_deg, int b_pow, Scalar c = Scalar(1)) {
        SpherePoly p;
        p.add_term(a_deg, b_pow, std::move(c));
        return p;
    }

    const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const {
        int d = 0;
        for (const auto& [key, c] : terms_) {
            (void)c;
            d = std::max(d, key.first + std::abs(key.second));
        }
        return d;
    }

    void add_term(int a_deg, int b_pow, const Scalar& c) {
        if (c.is_zero()) return;
        Scalar& slot = terms_[{a_deg, b_pow}];
        slot += c;
        if (slot.is_zero()) terms_.erase({a_deg, b_pow});
    }

    friend SpherePoly operator+(const SpherePoly& x, const SpherePoly& y) {
        SpherePoly r = x;
        for (const auto& [key, c] : y.terms_) r.add_term(key.first, key.second, c);
        return r;
    }
    friend bool operator==(const SpherePoly& x, const SpherePoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const SpherePoly& x, const SpherePoly& y) { return !(x == y); }

    std::string str() const;
};

Element sphere_A(const EngineContext& ctx);
Element sphere_B(const EngineContext& ctx);
Element sphere_Bs(const EngineContext& ctx);

/// Ambient normal form of A^a_deg * B^b_pow (or B*^-b_pow).
Element sphere_monomial_ambient(const EngineContext& ctx, int a_deg, int b_pow);
Element to_ambient(const EngineContext& ctx, const SpherePoly& p);

/// Unique PBW expansion of a right-invariant element, solved as a linear
/// system over the ambient basis. Throws std::domain_error when f is not
/// right-invariant or needs degree beyond ctx.degree_cap.
SpherePoly express_in_sphere(const EngineContext& ctx, const Element& f);

} // namespace qmobius
