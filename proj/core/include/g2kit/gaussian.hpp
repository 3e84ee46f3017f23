#pragma once

#include <string>

#include "g2kit/rational.hpp"

namespace g2kit {

/// Gaussian rational a + bi with exact rational parts.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT: reals embed
    GaussianRational(long n) : re_(n) {}                   // NOLINT
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    Rational norm_sq() const { return re_ * re_ + im_ * im_; }

    GaussianRational operator-() const { return {-re_, -im_}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        Rational n = b.norm_sq();
        GaussianRational num = a * GaussianRational(b.re_, -b.im_);
        return {num.re_ / n, num.im_ / n};
    }

    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }

    /// "2-3i", "i", "-1/2i", "0", ...
    std::string str() const {
        if (im_.is_zero()) return re_.str();
        std::string imabs = abs(im_) == Rational(1) ? "i" : abs(im_).str() + "i";
        std::string imp = (im_.sign() < 0 ? "-" : (re_.is_zero() ? "" : "+")) + imabs;
        if (re_.is_zero()) return imp;
        return re_.str() + imp;
    }

private:
    Rational re_;
    Rational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return {z.re(), -z.im()}; }

}  // namespace g2kit
