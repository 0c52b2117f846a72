/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in the formal variable s over the
 *        Gaussian rationals. Building block for the Scalar fraction field.
 */
#pragma once

#include <qmobius/gaussian.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qmobius {

class Poly {
private:
    // coeffs_[n] is the coefficient of s^n; no trailing zeros.
    std::vector<GaussianRational> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

public:
    Poly() = default;
    Poly(GaussianRational c) {
        if (!c.is_zero()) coeffs_.push_back(std::move(c));
    }
    Poly(int c) : Poly(GaussianRational(c)) {}
    explicit Poly(std::vector<GaussianRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly monomial(GaussianRational c, int deg) {
        Poly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(static_cast<size_t>(deg) + 1, GaussianRational());
            p.coeffs_[static_cast<size_t>(deg)] = std::move(c);
        }
        return p;
    }
    static Poly s() { return monomial(GaussianRational(1), 1); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

    GaussianRational coeff(int n) const {
        if (n < 0 || n >= static_cast<int>(coeffs_.size())) return GaussianRational();
        return coeffs_[static_cast<size_t>(n)];
    }
    /// Index of the lowest nonzero coefficient (0 for the zero polynomial).
    int valuation() const {
        for (size_t n = 0; n < coeffs_.size(); ++n)
            if (!coeffs_[n].is_zero()) return static_cast<int>(n);
        return 0;
    }
    /// Exact division by s^k.
    Poly shift_down(int k) const {
        Poly r;
        if (k <= 0 || coeffs_.empty()) return k == 0 ? *this : r;
        r.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
        return r;
    }
    const GaussianRational& leading() const {
        if (coeffs_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
        return coeffs_.back();
    }
    bool is_monomial() const {
        if (coeffs_.empty()) return false;
        for (size_t n = 0; n + 1 < coeffs_.size(); ++n)
            if (!coeffs_[n].is_zero()) return false;
        return true;
    }
    int term_count() const {
        int c = 0;
        for (const auto& x : coeffs_)
            if (!x.is_zero()) ++c;
        return c;
    }

    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }
    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t n = 0; n < r.coeffs_.size(); ++n)
            r.coeffs_[n] = a.coeff(static_cast<int>(n)) + b.coeff(static_cast<int>(n));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        if (a.is_zero() || b.is_zero()) return r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, GaussianRational());
        for (size_t n = 0; n < a.coeffs_.size(); ++n) {
            if (a.coeffs_[n].is_zero()) continue;
            for (size_t m = 0; m < b.coeffs_.size(); ++m)
                r.coeffs_[n + m] += a.coeffs_[n] * b.coeffs_[m];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const GaussianRational& c, const Poly& a) {
        Poly r = a;
        for (auto& x : r.coeffs_) x = c * x;
        r.trim();
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Euclidean division; divisor must be nonzero.
    static std::pair<Poly, Poly> divrem(const Poly& a, const Poly& d) {
        if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
        Poly q, r = a;
        while (!r.is_zero() && r.degree() >= d.degree()) {
            GaussianRational c = r.leading() / d.leading();
            int shift = r.degree() - d.degree();
            Poly t = monomial(c, shift);
            q = q + t;
            r = r - t * d;
        }
        return {q, r};
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return (GaussianRational(1) / leading()) * *this;
    }

    /// Monic greatest common divisor (Euclidean algorithm).
    static Poly gcd(Poly a, Poly b) {
        while (!b.is_zero()) {
            Poly r = divrem(a, b).second.monic();
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    Poly derivative() const {
        Poly r;
        if (coeffs_.size() <= 1) return r;
        r.coeffs_.resize(coeffs_.size() - 1);
        for (size_t n = 1; n < coeffs_.size(); ++n)
            r.coeffs_[n - 1] = GaussianRational(static_cast<long long>(n)) * coeffs_[n];
        r.trim();
        return r;
    }

    GaussianRational eval(const GaussianRational& x) const {
        GaussianRational acc;
        for (size_t n = coeffs_.size(); n-- > 0;) acc = acc * x + coeffs_[n];
        return acc;
    }
    GaussianRational eval_at_one() const {
        GaussianRational acc;
        for (const auto& c : coeffs_) acc += c;
        return acc;
    }

    /// Conjugation acts coefficientwise (s itself is fixed: q is real).
    Poly conj() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = c.conj();
        return r;
    }
};

} // namespace qmobius
