#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "g2kit/rational.hpp"

namespace g2kit {

/// Number of coordinates on the flat 7-dimensional model.
inline constexpr int kNumVariables = 7;

/// Coordinate names in the fixed global order x1,x2,x3,y0,y1,y2,y3.
inline const std::array<std::string, kNumVariables>& variable_names() {
    static const std::array<std::string, kNumVariables> names = {"x1", "x2", "x3", "y0",
                                                                 "y1", "y2", "y3"};
    return names;
}

/// Dense exponent vector over the 7 coordinates.
using Exponents = std::array<int, kNumVariables>;

/// Multivariate polynomial over the rationals in the 7 fixed coordinates,
/// with formal partial derivatives. Terms are kept in a canonical sorted map
/// with no zero coefficients stored.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c) {  // NOLINT: constants embed
        if (c != 0) terms_[Exponents{}] = Rational(c);
    }
    Polynomial(Rational c) {  // NOLINT
        if (!c.is_zero()) terms_[Exponents{}] = std::move(c);
    }

    static Polynomial variable(int idx) {
        check_var(idx);
        Exponents e{};
        e[idx] = 1;
        Polynomial p;
        p.terms_[e] = Rational(1);
        return p;
    }

    static Polynomial monomial(const Exponents& e, Rational c) {
        for (int k : e)
            if (k < 0) throw std::domain_error("Polynomial: negative exponent");
        Polynomial p;
        if (!c.is_zero()) p.terms_[e] = std::move(c);
        return p;
    }

    const std::map<Exponents, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
    }

    Rational constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int k : e) s += k;
            if (s > d) d = s;
        }
        return d;
    }

    /// Formal partial derivative with respect to coordinate idx.
    Polynomial derivative(int idx) const {
        check_var(idx);
        Polynomial out;
        for (const auto& [e, c] : terms_) {
            if (e[idx] == 0) continue;
            Exponents d = e;
            d[idx] -= 1;
            out.add_term(d, c * Rational(e[idx]));
        }
        return out;
    }

    Polynomial operator-() const {
        Polynomial out;
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, c);
        return out;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial out = a;
        for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
        return out;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e;
                for (int k = 0; k < kNumVariables; ++k) e[k] = ea[k] + eb[k];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational a = abs(c);
            os << (c.sign() < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
            first = false;
            bool bare = e == Exponents{};
            if (bare || a != Rational(1)) os << a.str();
            bool printed = !bare && a != Rational(1);
            for (int k = 0; k < kNumVariables; ++k) {
                if (e[k] == 0) continue;
                if (printed || a != Rational(1)) os << "*";
                os << variable_names()[k];
                if (e[k] > 1) os << "^" << e[k];
                printed = true;
            }
        }
        return os.str();
    }

private:
    static void check_var(int idx) {
        if (idx < 0 || idx >= kNumVariables)
            throw std::out_of_range("Polynomial: variable index out of range");
    }

    void add_term(const Exponents& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Exponents, Rational> terms_;
};

inline Polynomial conj(const Polynomial& p) { return p; }

}  // namespace g2kit
