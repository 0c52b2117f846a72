/**
 * @file gaussian.hpp
 * @brief Exact complex rationals: numbers of the form re + im*i with
 *        arbitrary-precision rational parts.
 *
 * Values are always stored in lowest terms (cpp_rational canonicalizes).
 * Conjugation flips the sign of the imaginary part and is an involution.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace qmobius {

using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/" + denominator(r).str();
    }
    return s;
}

class GaussianRational {
private:
    Rational re_;
    Rational im_;

public:
    GaussianRational() = default;
    GaussianRational(int v) : re_(v) {}
    GaussianRational(long v) : re_(v) {}
    GaussianRational(long long v) : re_(v) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    friend GaussianRational operator-(const GaussianRational& a) {
        return GaussianRational(-a.re_, -a.im_);
    }
    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return GaussianRational(a.re_ * b.re_ - a.im_ * b.im_,
                                a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.re_ * b.re_ + b.im_ * b.im_;
        if (n == 0) throw std::domain_error("GaussianRational: division by zero");
        return GaussianRational((a.re_ * b.re_ + a.im_ * b.im_) / n,
                                (a.im_ * b.re_ - a.re_ * b.im_) / n);
    }

    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
    GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    /// Canonical text form: "3", "-1/2", "i", "-2/3*i", "1 + i", "1/2 - 3*i".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        if (re_ != 0) out = rational_str(re_);
        if (im_ != 0) {
            std::string imag;
            if (im_ == 1) imag = "i";
            else if (im_ == -1) imag = "-i";
            else imag = rational_str(im_) + "*i";
            if (out.empty()) {
                out = imag;
            } else if (!imag.empty() && imag[0] == '-') {
                out += " - " + imag.substr(1);
            } else {
                out += " + " + imag;
            }
        }
        return out;
    }

    /// True when str() is a single token (no top-level '+'/'-' to the right).
    bool is_atomic() const { return re_ == 0 || im_ == 0; }
};

} // namespace qmobius
