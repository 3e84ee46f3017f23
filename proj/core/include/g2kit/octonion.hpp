#pragma once

#include <array>
#include <stdexcept>

#include "g2kit/quaternion.hpp"
#include "g2kit/rational.hpp"

namespace g2kit {

/// Octonion built from a pair of quaternions by the Cayley-Dickson doubling,
/// representing a + b*e. Components align with the R8 coordinate order
/// (x0,x1,x2,x3,y0,y1,y2,y3): the a-part carries x0..x3 in the basis 1,i,j,k
/// and the b-part carries y0..y3 in the basis e, ie, je, ke.
template <typename R>
struct Octonion {
    Quaternion<R> a, b;

    Octonion() = default;
    Octonion(Quaternion<R> a_, Quaternion<R> b_) : a(std::move(a_)), b(std::move(b_)) {}

    static Octonion basis(int k) {
        Octonion o;
        if (k < 4)
            o.a = Quaternion<R>::basis(k);
        else
            o.b = Quaternion<R>::basis(k - 4);
        return o;
    }

    /// Basis vector of Im(O) = R7: k in 0..6 maps to i, j, k, e, ie, je, ke.
    static Octonion imaginary_basis(int k) { return basis(k + 1); }

    static Octonion from_components(const std::array<R, 8>& v) {
        Octonion o;
        for (int k = 0; k < 4; ++k) o.a.c[k] = v[k];
        for (int k = 0; k < 4; ++k) o.b.c[k] = v[k + 4];
        return o;
    }

    R component(int k) const { return k < 4 ? a.c[k] : b.c[k - 4]; }

    R real() const { return a.c[0]; }

    bool is_imaginary() const { return a.c[0].is_zero(); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    Octonion operator-() const { return {-a, -b}; }

    friend Octonion operator+(const Octonion& p, const Octonion& q) {
        return {p.a + q.a, p.b + q.b};
    }
    friend Octonion operator-(const Octonion& p, const Octonion& q) {
        return {p.a - q.a, p.b - q.b};
    }

    // Cayley-Dickson product: (a + be)(c + de) = (ac - conj(d)b) + (da + b conj(c))e.
    friend Octonion operator*(const Octonion& p, const Octonion& q) {
        return {p.a * q.a - conj(q.b) * p.b, q.b * p.a + p.b * conj(q.a)};
    }

    friend bool operator==(const Octonion& p, const Octonion& q) {
        return p.a == q.a && p.b == q.b;
    }
    friend bool operator!=(const Octonion& p, const Octonion& q) { return !(p == q); }
};

template <typename R>
Octonion<R> conj(const Octonion<R>& o) {
    return {conj(o.a), -o.b};
}

/// Standard Euclidean inner product on R8 components.
template <typename R>
R octonion_inner(const Octonion<R>& p, const Octonion<R>& q) {
    R acc(0);
    for (int k = 0; k < 8; ++k) acc += p.component(k) * q.component(k);
    return acc;
}

template <typename R>
R octonion_norm_sq(const Octonion<R>& p) {
    return octonion_inner(p, p);
}

/// Associator [x,y,z] = (xy)z - x(yz); alternating, vanishes on H.
template <typename R>
Octonion<R> associator(const Octonion<R>& x, const Octonion<R>& y, const Octonion<R>& z) {
    return (x * y) * z - x * (y * z);
}

/// Triple cross product X(x,y,z) = (x(conj(y)z) - z(conj(y)x)) / 2.
template <typename R>
Octonion<R> triple_cross(const Octonion<R>& x, const Octonion<R>& y, const Octonion<R>& z) {
    Octonion<R> twice = x * (conj(y) * z) - z * (conj(y) * x);
    Octonion<R> out;
    const R half(R(1) / R(2));
    for (int k = 0; k < 4; ++k) {
        out.a.c[k] = twice.a.c[k] * half;
        out.b.c[k] = twice.b.c[k] * half;
    }
    return out;
}

}  // namespace g2kit
