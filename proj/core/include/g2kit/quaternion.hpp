#pragma once

#include <array>

#include "g2kit/rational.hpp"

namespace g2kit {

/// Quaternion over an exact scalar ring, components in the basis 1, i, j, k.
template <typename R>
struct Quaternion {
    std::array<R, 4> c{R(0), R(0), R(0), R(0)};

    Quaternion() = default;
    Quaternion(R a0, R a1, R a2, R a3) : c{std::move(a0), std::move(a1), std::move(a2), std::move(a3)} {}

    static Quaternion basis(int k) {
        Quaternion q;
        q.c[k] = R(1);
        return q;
    }

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }

    Quaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }

    // Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        const auto& [a0, a1, a2, a3] = a.c;
        const auto& [b0, b1, b2, b3] = b.c;
        return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
                a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
                a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
                a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
    }

    friend bool operator==(const Quaternion& a, const Quaternion& b) { return a.c == b.c; }
    friend bool operator!=(const Quaternion& a, const Quaternion& b) { return !(a == b); }
};

template <typename R>
Quaternion<R> conj(const Quaternion<R>& q) {
    return {q.c[0], -q.c[1], -q.c[2], -q.c[3]};
}

}  // namespace g2kit
