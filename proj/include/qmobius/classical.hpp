/**
 * @file classical.hpp
 * @brief The commutative sphere algebra at q = 1, the six vector-field
 *        derivations acting on it (the oracle side), and the exact symbolic
 *        limits of the quantum actions that must reproduce them.
 *
 * Limits are derivative-based (see Scalar::limit_div_lnq), never numeric;
 * floating-point cross-checks live in the test suite only.
 */
#pragma once

#include <qmobius/sphere.hpp>

#include <array>
#include <map>
#include <string>

namespace qmobius {

/// Commutative polynomial in the classical generators; key = exponents of
/// (A, B, B*). Coefficients carry no q dependence.
class ClassicalPoly {
private:
    std::map<std::array<int, 3>, GaussianRational> terms_;

public:
    ClassicalPoly() = default;

    static ClassicalPoly monomial(int a, int b, int bs, GaussianRational c = GaussianRational(1)) {
        ClassicalPoly p;
        p.add_term({a, b, bs}, std::move(c));
        return p;
    }
    static ClassicalPoly constant(GaussianRational c) { return monomial(0, 0, 0, std::move(c)); }

    const std::map<std::array<int, 3>, GaussianRational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::array<int, 3>& key, const GaussianRational& c) {
        if (c.is_zero()) return;
        GaussianRational& slot = terms_[key];
        slot += c;
        if (slot.is_zero()) terms_.erase(key);
    }

    friend ClassicalPoly operator-(const ClassicalPoly& x);
    friend ClassicalPoly operator+(const ClassicalPoly& x, const ClassicalPoly& y);
    friend ClassicalPoly operator-(const ClassicalPoly& x, const ClassicalPoly& y);
    friend ClassicalPoly operator*(const ClassicalPoly& x, const ClassicalPoly& y);
    friend ClassicalPoly operator*(const GaussianRational& c, const ClassicalPoly& x);
    friend bool operator==(const ClassicalPoly& x, const ClassicalPoly& y) {
        return x.terms_ == y.terms_;
    }
    friend bool operator!=(const ClassicalPoly& x, const ClassicalPoly& y) { return !(x == y); }

    /// Image in the sphere quotient: every mixed B B* factor rewrites to A - A^2.
    ClassicalPoly sphere_reduce() const;

    std::string str() const;
};

/// A derivation given by its values on the three generators, extended to
/// polynomials by linearity and the Leibniz rule.
struct ClassicalDerivation {
    std::string name;
    std::array<ClassicalPoly, 3> on;  // images of A, B, B*

    ClassicalPoly apply(const ClassicalPoly& p) const;
};

// Generator tables of the six vector fields.
ClassicalDerivation cd_R3();
ClassicalDerivation cd_R1_plus_iR2();
ClassicalDerivation cd_mR1_plus_iR2();
ClassicalDerivation cd_T0();
ClassicalDerivation cd_iT1_plus_T2();
ClassicalDerivation cd_iT1_minus_T2();

ClassicalDerivation lincomb(const GaussianRational& c1, const ClassicalDerivation& d1,
                            const GaussianRational& c2, const ClassicalDerivation& d2,
                            std::string name);
ClassicalDerivation bracket(const ClassicalDerivation& d1, const ClassicalDerivation& d2);
/// Equality as derivations of the sphere quotient.
bool derivation_eq(const ClassicalDerivation& d1, const ClassicalDerivation& d2);

enum class Su2Limit { R3, R1_plus_iR2, mR1_plus_iR2 };
enum class AnLimit { T0, iT1_plus_T2, iT1_minus_T2 };

/// The quantum side of a limit before the limit is taken: a sphere polynomial
/// with q-dependent coefficients and the constant in front of the limit.
struct Prelimit {
    SpherePoly poly;
    GaussianRational factor;
    bool div_lnq = false;  // take lim x/ln q instead of plain evaluation
};

Prelimit su2_prelimit(const EngineContext& ctx, Su2Limit name, const Element& h);
Prelimit an_prelimit(const EngineContext& ctx, AnLimit name, const Element& h);
ClassicalPoly take_limit(const Prelimit& pre);

ClassicalPoly quantum_limit_su2(const EngineContext& ctx, Su2Limit name, const Element& h);
ClassicalPoly quantum_limit_an(const EngineContext& ctx, AnLimit name, const Element& h);

/// q = 1 image of a sphere polynomial (coefficientwise exact evaluation).
ClassicalPoly classical_of_sphere(const SpherePoly& p);

const char* to_string(Su2Limit name);
const char* to_string(AnLimit name);

} // namespace qmobius
