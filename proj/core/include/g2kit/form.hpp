#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "g2kit/frame.hpp"
#include "g2kit/gaussian.hpp"
#include "g2kit/polynomial.hpp"
#include "g2kit/rational.hpp"

namespace g2kit {

/// A basis monomial of the exterior algebra: a strictly ascending set of
/// coordinate indices, stored as a bitmask. The empty blade is the scalar unit.
class Blade {
public:
    Blade() : mask_(0) {}
    explicit Blade(std::uint32_t mask) : mask_(mask) {}
    Blade(std::initializer_list<int> ascending) {
        mask_ = 0;
        int prev = -1;
        for (int i : ascending) {
            if (i <= prev) throw std::invalid_argument("Blade: indices must be ascending");
            mask_ |= (1u << i);
            prev = i;
        }
    }

    std::uint32_t mask() const { return mask_; }
    int degree() const { return std::popcount(mask_); }
    bool contains(int i) const { return (mask_ >> i) & 1u; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < 32; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    /// Position of index i among the blade's ascending indices.
    int position_of(int i) const { return std::popcount(mask_ & ((1u << i) - 1u)); }

    Blade with(int i) const { return Blade(mask_ | (1u << i)); }
    Blade without(int i) const { return Blade(mask_ & ~(1u << i)); }

    friend bool operator==(const Blade& a, const Blade& b) { return a.mask_ == b.mask_; }
    friend bool operator!=(const Blade& a, const Blade& b) { return a.mask_ != b.mask_; }

    /// Lexicographic order on the ascending index sequences; this is the
    /// canonical term order used for storage and printing.
    friend bool operator<(const Blade& a, const Blade& b) {
        std::uint32_t x = a.mask_, y = b.mask_;
        while (x && y) {
            int ia = std::countr_zero(x), ib = std::countr_zero(y);
            if (ia != ib) return ia < ib;
            x &= x - 1;
            y &= y - 1;
        }
        return x == 0 && y != 0;
    }

private:
    std::uint32_t mask_;
};

/// Sign of e_a ^ e_b as a multiple of the ascending merged blade;
/// 0 when the blades share an index.
inline int wedge_sign(const Blade& a, const Blade& b) {
    if (a.mask() & b.mask()) return 0;
    int inversions = 0;
    std::uint32_t x = a.mask();
    while (x) {
        int i = std::countr_zero(x);
        inversions += std::popcount(b.mask() & ((1u << i) - 1u));
        x &= x - 1;
    }
    return (inversions & 1) ? -1 : 1;
}

/// Sorts an index sequence into a blade, returning the permutation sign
/// (nullopt when an index repeats, i.e. the monomial vanishes).
inline std::optional<std::pair<Blade, int>> blade_from_sequence(const std::vector<int>& seq) {
    std::uint32_t mask = 0;
    int inversions = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (mask & (1u << seq[k])) return std::nullopt;
        for (std::size_t l = 0; l < k; ++l)
            if (seq[l] > seq[k]) ++inversions;
        mask |= (1u << seq[k]);
    }
    return std::make_pair(Blade(mask), (inversions & 1) ? -1 : 1);
}

/// A homogeneous differential form: a finite map from blades of one degree to
/// coefficients in an exact scalar ring R. Forms are immutable values in
/// practice; no zero coefficients are stored.
template <typename R>
class Form {
public:
    Form(const CoordinateFrame& frame, int degree) : frame_(&frame), degree_(degree) {
        if (degree < 0) throw std::invalid_argument("Form: bad degree");
    }

    static Form zero(const CoordinateFrame& frame, int degree) { return Form(frame, degree); }

    /// Degree-0 form with the given scalar value.
    static Form scalar(const CoordinateFrame& frame, R value) {
        Form f(frame, 0);
        f.add_term(Blade(), std::move(value));
        return f;
    }

    /// The coordinate covector e^i as a 1-form.
    static Form covector(const CoordinateFrame& frame, int i) {
        if (i < 0 || i >= frame.dimension())
            throw std::out_of_range("Form::covector: index out of range");
        Form f(frame, 1);
        f.add_term(Blade({i}), R(1));
        return f;
    }

    /// c * e^{i1} ^ ... ^ e^{ip} for an arbitrary (possibly unsorted) index
    /// sequence; vanishes when an index repeats.
    static Form monomial(const CoordinateFrame& frame, const std::vector<int>& seq, R c) {
        Form f(frame, static_cast<int>(seq.size()));
        for (int i : seq)
            if (i < 0 || i >= frame.dimension())
                throw std::out_of_range("Form::monomial: index out of range");
        auto bs = blade_from_sequence(seq);
        if (!bs) return f;
        if (bs->second < 0) c = -c;
        f.add_term(bs->first, std::move(c));
        return f;
    }

    const CoordinateFrame& frame() const { return *frame_; }
    int degree() const { return degree_; }
    const std::map<Blade, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    R coefficient(const Blade& b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? R(0) : it->second;
    }

    void add_term(const Blade& b, R c) {
        if (b.degree() != degree_) throw std::invalid_argument("Form::add_term: degree mismatch");
        auto it = terms_.find(b);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(b, std::move(c));
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    void set_term(const Blade& b, R c) {
        if (b.degree() != degree_) throw std::invalid_argument("Form::set_term: degree mismatch");
        if (c.is_zero())
            terms_.erase(b);
        else
            terms_[b] = std::move(c);
    }

    Form operator-() const {
        Form out(*frame_, degree_);
        for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
        return out;
    }

    friend Form operator+(const Form& a, const Form& b) {
        check_compatible(a, b, "Form: +");
        Form out = a;
        for (const auto& [bl, c] : b.terms_) out.add_term(bl, c);
        return out;
    }
    friend Form operator-(const Form& a, const Form& b) {
        check_compatible(a, b, "Form: -");
        Form out = a;
        for (const auto& [bl, c] : b.terms_) out.add_term(bl, -c);
        return out;
    }
    friend Form operator*(const R& s, const Form& a) {
        Form out(*a.frame_, a.degree_);
        for (const auto& [bl, c] : a.terms_) out.add_term(bl, s * c);
        return out;
    }
    friend Form operator*(const Form& a, const R& s) { return s * a; }

    Form& operator+=(const Form& o) { return *this = *this + o; }
    Form& operator-=(const Form& o) { return *this = *this - o; }

    friend bool operator==(const Form& a, const Form& b) {
        return *a.frame_ == *b.frame_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Form& a, const Form& b) { return !(a == b); }

private:
    static void check_compatible(const Form& a, const Form& b, const char* what) {
        if (*a.frame_ != *b.frame_)
            throw std::invalid_argument(std::string(what) + ": frame mismatch");
        if (a.degree_ != b.degree_)
            throw std::invalid_argument(std::string(what) + ": degree mismatch");
    }

    const CoordinateFrame* frame_;
    int degree_;
    std::map<Blade, R> terms_;
};

template <typename R>
Form<R> wedge(const Form<R>& a, const Form<R>& b) {
    if (a.frame() != b.frame()) throw std::invalid_argument("wedge: frame mismatch");
    int deg = a.degree() + b.degree();
    Form<R> out(a.frame(), deg);
    if (deg > a.frame().dimension()) return out;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) {
            int s = wedge_sign(ba, bb);
            if (s == 0) continue;
            R v = ca * cb;
            if (s < 0) v = -v;
            out.add_term(Blade(ba.mask() | bb.mask()), std::move(v));
        }
    }
    return out;
}

template <typename R, typename... Rest>
Form<R> wedge(const Form<R>& a, const Form<R>& b, const Rest&... rest) {
    return wedge(wedge(a, b), rest...);
}

/// Interior product v -| a with a tangent vector given by its components.
template <typename R>
Form<R> interior_product(const std::vector<R>& v, const Form<R>& a) {
    if (static_cast<int>(v.size()) != a.frame().dimension())
        throw std::invalid_argument("interior_product: component count mismatch");
    if (a.degree() < 1) throw std::invalid_argument("interior_product: degree-0 input");
    Form<R> out(a.frame(), a.degree() - 1);
    for (const auto& [b, c] : a.terms()) {
        for (int i : b.indices()) {
            if (v[i].is_zero()) continue;
            R val = v[i] * c;
            if (b.position_of(i) & 1) val = -val;
            out.add_term(b.without(i), std::move(val));
        }
    }
    return out;
}

/// Hodge star with respect to a diagonal +-1 metric and an orientation sign on
/// the ascending top blade. Defaults: Euclidean metric, standard orientation.
template <typename R>
Form<R> hodge_star(const Form<R>& a, int orientation = +1, const MetricData* metric = nullptr) {
    const int n = a.frame().dimension();
    if (metric) {
        if (static_cast<int>(metric->diagonal.size()) != n)
            throw std::invalid_argument("hodge_star: metric dimension mismatch");
        if (!metric->is_unit_signs())
            throw std::invalid_argument("hodge_star: metric entries must be +-1");
    }
    if (orientation != 1 && orientation != -1)
        throw std::invalid_argument("hodge_star: orientation must be +-1");
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1u);
    Form<R> out(a.frame(), n - a.degree());
    for (const auto& [b, c] : a.terms()) {
        Blade comp(full & ~b.mask());
        int s = wedge_sign(b, comp) * orientation;
        if (metric) {
            for (int i : b.indices())
                if (metric->diagonal[i] == Rational(-1)) s = -s;
        }
        R v = c;
        if (s < 0) v = -v;
        out.add_term(comp, std::move(v));
    }
    return out;
}

/// Pointwise inner product of two forms of equal degree under a diagonal
/// metric (Euclidean by default). Bilinear, symmetric; characterized by
/// a ^ *b = <a,b> vol.
template <typename R>
R form_inner_product(const Form<R>& a, const Form<R>& b, const MetricData* metric = nullptr) {
    if (a.frame() != b.frame()) throw std::invalid_argument("form_inner_product: frame mismatch");
    if (a.degree() != b.degree())
        throw std::invalid_argument("form_inner_product: degree mismatch");
    if (metric && static_cast<int>(metric->diagonal.size()) != a.frame().dimension())
        throw std::invalid_argument("form_inner_product: metric dimension mismatch");
    R acc(0);
    for (const auto& [bl, ca] : a.terms()) {
        auto it = b.terms().find(bl);
        if (it == b.terms().end()) continue;
        R v = ca * it->second;
        if (metric) {
            Rational g(1);
            for (int i : bl.indices()) g = g * metric->diagonal[i];
            v = v * R(g);
        }
        acc += v;
    }
    return acc;
}

/// Coefficient of the ascending top blade of a top-degree form.
template <typename R>
R top_coefficient(const Form<R>& a) {
    const int n = a.frame().dimension();
    if (a.degree() != n) throw std::invalid_argument("top_coefficient: not a top-degree form");
    return a.coefficient(Blade((1u << n) - 1u));
}

/// Rewrites a form over a new frame by substituting each covector e^i with the
/// given 1-form image and expanding wedge products.
template <typename R>
Form<R> substitute_covectors(const Form<R>& a, const CoordinateFrame& target,
                             const std::vector<Form<R>>& images) {
    if (static_cast<int>(images.size()) != a.frame().dimension())
        throw std::invalid_argument("substitute_covectors: need one image per covector");
    for (const auto& im : images)
        if (im.degree() != 1 || im.frame() != target)
            throw std::invalid_argument("substitute_covectors: images must be 1-forms on target");
    Form<R> out(target, a.degree());
    for (const auto& [b, c] : a.terms()) {
        Form<R> acc = Form<R>::scalar(target, c);
        for (int i : b.indices()) acc = wedge(acc, images[i]);
        for (const auto& [bl, v] : acc.terms()) out.add_term(bl, v);
    }
    return out;
}

/// Applies fn to every coefficient, producing a form over another ring.
template <typename R2, typename R, typename Fn>
Form<R2> map_coefficients(const Form<R>& a, Fn fn) {
    Form<R2> out(a.frame(), a.degree());
    for (const auto& [b, c] : a.terms()) out.add_term(b, fn(c));
    return out;
}

inline Form<GaussianRational> to_gaussian(const Form<Rational>& a) {
    return map_coefficients<GaussianRational>(a, [](const Rational& c) {
        return GaussianRational(c);
    });
}

inline Form<Polynomial> to_polynomial(const Form<Rational>& a) {
    return map_coefficients<Polynomial>(a, [](const Rational& c) { return Polynomial(c); });
}

inline Form<Rational> real_part(const Form<GaussianRational>& a) {
    return map_coefficients<Rational>(a, [](const GaussianRational& c) { return c.re(); });
}

inline Form<Rational> imag_part(const Form<GaussianRational>& a) {
    return map_coefficients<Rational>(a, [](const GaussianRational& c) { return c.im(); });
}

template <typename R>
Form<R> conj_form(const Form<R>& a) {
    return map_coefficients<R>(a, [](const R& c) { return conj(c); });
}

using FormQ = Form<Rational>;
using FormG = Form<GaussianRational>;
using FormP = Form<Polynomial>;

}  // namespace g2kit
