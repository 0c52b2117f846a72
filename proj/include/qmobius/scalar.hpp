/**
 * @file scalar.hpp
 * @brief The coefficient field: exact rational functions in s, where s stands
 *        for q^(1/2), with Gaussian-rational coefficients.
 *
 * Invariants: the denominator is nonzero and monic, the fraction is reduced,
 * and zero is canonically 0/1. All arithmetic is exact field arithmetic.
 * ln q never appears here; division by ln q is a limit operator
 * (limit_div_lnq), not a stored value.
 */
#pragma once

#include <qmobius/polynomial.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace qmobius {

/// Thrown by eval_at_one when the reduced denominator vanishes at s = 1.
class PoleAtOne : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class Scalar {
private:
    Poly num_;
    Poly den_ = Poly(1);

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly(1);
            return;
        }
        // common power of s first; a monomial factor is the usual case
        int v = std::min(num_.valuation(), den_.valuation());
        if (v > 0) {
            num_ = num_.shift_down(v);
            den_ = den_.shift_down(v);
        }
        // after stripping, a monomial on either side shares no factor
        if (!den_.is_monomial() && !num_.is_monomial()) {
            Poly g = Poly::gcd(num_, den_);
            if (!g.is_one()) {
                num_ = Poly::divrem(num_, g).first;
                den_ = Poly::divrem(den_, g).first;
            }
        }
        GaussianRational lc = den_.leading();
        if (!lc.is_one()) {
            GaussianRational inv = GaussianRational(1) / lc;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

public:
    Scalar() = default;
    Scalar(int v) : num_(GaussianRational(v)) {}
    Scalar(long long v) : num_(GaussianRational(v)) {}
    Scalar(GaussianRational c) : num_(std::move(c)) {}
    Scalar(Poly num) : num_(std::move(num)) {}
    Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
        reduce();
    }

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar imag() { return Scalar(GaussianRational::i()); }
    /// s^n for n of either sign (s is invertible).
    static Scalar s_pow(long n) {
        if (n >= 0) return Scalar(Poly::monomial(GaussianRational(1), static_cast<int>(n)));
        return Scalar(Poly(1), Poly::monomial(GaussianRational(1), static_cast<int>(-n)));
    }
    /// q^(n/2), i.e. s^n.
    static Scalar q_half(long n) { return s_pow(n); }
    /// q^n, i.e. s^(2n).
    static Scalar q_pow(long n) { return s_pow(2 * n); }
    static Scalar q() { return q_pow(1); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    friend Scalar operator-(const Scalar& a) {
        Scalar r;
        r.num_ = -a.num_;
        r.den_ = a.den_;
        return r;
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ + b.num_);
        return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ - b.num_);
        return Scalar(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_);
        return Scalar(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
        return Scalar(a.num_ * b.den_, a.den_ * b.num_);
    }
    Scalar& operator+=(const Scalar& b) { *this = *this + b; return *this; }
    Scalar& operator-=(const Scalar& b) { *this = *this - b; return *this; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this / b; return *this; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const { return Scalar(1) / *this; }

    /// i -> -i coefficientwise; s is fixed (q real).
    Scalar conjugate() const {
        Scalar r;
        r.num_ = num_.conj();
        r.den_ = den_.conj();
        r.reduce();
        return r;
    }

    /// d/ds by the quotient rule, reduced.
    Scalar derivative() const {
        return Scalar(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    /// Exact value at s = 1; a pole there (nonremovable by the reduced-fraction
    /// invariant) raises PoleAtOne.
    GaussianRational eval_at_one() const {
        GaussianRational d = den_.eval_at_one();
        if (d.is_zero()) throw PoleAtOne("Scalar: pole at q = 1");
        return num_.eval_at_one() / d;
    }

    /// lim_{q->1} x(q)/ln q for x vanishing at q = 1. Since ln q = 2 ln s,
    /// L'Hopital gives x'(1)/2.
    GaussianRational limit_div_lnq() const {
        GaussianRational d = den_.eval_at_one();
        if (d.is_zero()) throw PoleAtOne("Scalar: pole at q = 1 in limit");
        if (!num_.eval_at_one().is_zero())
            throw std::domain_error("Scalar: limit against ln q diverges (value at q = 1 is nonzero)");
        GaussianRational half(Rational(1, 2));
        return half * (num_.derivative().eval_at_one() / d);
    }

    // ---- q-centric rendering ----

    /// "q^(n/2)" piece for s^n; empty for n = 0.
    static std::string qpow_str(int n) {
        if (n == 0) return "";
        if (n % 2 == 0) {
            int e = n / 2;
            if (e == 1) return "q";
            return "q^" + std::to_string(e);
        }
        return "q^(" + std::to_string(n) + "/2)";
    }

private:
    static std::string term_str(const GaussianRational& g, int n, bool& atomic) {
        std::string p = qpow_str(n);
        if (p.empty()) {
            atomic = g.is_atomic();
            return g.str();
        }
        atomic = true;
        if (g.is_one()) return p;
        if ((-g).is_one()) return "-" + p;
        std::string gs = g.is_atomic() ? g.str() : "(" + g.str() + ")";
        return gs + "*" + p;
    }

    /// Polynomial rendered as a Laurent sum in q^(1/2), exponents shifted by
    /// -shift, descending. Sets atomic when the result is one juxtaposable token.
    static std::string laurent_str(const Poly& p, int shift, bool& atomic) {
        if (p.is_zero()) {
            atomic = true;
            return "0";
        }
        std::string out;
        int terms = 0;
        for (int n = p.degree(); n >= 0; --n) {
            GaussianRational g = p.coeff(n);
            if (g.is_zero()) continue;
            bool term_atomic = true;
            std::string t = term_str(g, n - shift, term_atomic);
            if (terms == 0) {
                out = t;
                atomic = term_atomic;
            } else {
                if (!t.empty() && t[0] == '-')
                    out += " - " + t.substr(1);
                else
                    out += " + " + t;
            }
            ++terms;
        }
        if (terms > 1) atomic = false;
        return out;
    }

public:
    /// Canonical text, q-centric, descending powers of s. When `atomic` is
    /// true the string may be juxtaposed with "*word" without parentheses.
    std::string str_atomic(bool& atomic) const {
        if (den_.is_one()) return laurent_str(num_, 0, atomic);
        if (den_.is_monomial()) return laurent_str(num_, den_.degree(), atomic);
        bool na = true, da = true;
        std::string ns = laurent_str(num_, 0, na);
        std::string ds = laurent_str(den_, 0, da);
        if (!na) ns = "(" + ns + ")";
        if (!da || ds.find('*') != std::string::npos) ds = "(" + ds + ")";
        atomic = true;
        return ns + "/" + ds;
    }
    std::string str() const {
        bool atomic = true;
        return str_atomic(atomic);
    }
};

} // namespace qmobius
