#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace g2kit {

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// Always held in canonical form: lowest terms, denominator > 0, zero is 0/1.
/// All arithmetic is exact; division by zero throws.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed in Q
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parse from decimal strings, e.g. ("-3", "4") -> -3/4.
    static Rational from_decimal_strings(const std::string& num, const std::string& den) {
        mpz_class n(num, 10), d(den, 10);
        if (d == 0) throw std::domain_error("Rational: zero denominator");
        Rational r;
        r.v_ = mpq_class(n, d);
        r.v_.canonicalize();
        return r;
    }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    /// "-3/4" or "5"; denominator suppressed when 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

    Rational operator-() const {
        Rational r;
        r.v_ = -v_;
        return r;
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

private:
    mpq_class v_;
};

/// Conjugation on the real subfield is the identity.
inline Rational conj(const Rational& r) { return r; }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace g2kit
