#pragma once

#include <string>
#include <vector>

#include "g2kit/rational.hpp"

namespace g2kit {

/// An ordered list of coordinate labels on a flat model space.
///
/// The two public frames fix the global coordinate orders
///   R7: x1, x2, x3, y0, y1, y2, y3   (indices 0..6)
///   R8: x0, x1, x2, x3, y0, y1, y2, y3   (indices 0..7)
/// so that the ascending top blade is the standard volume form in each case.
/// The remaining frames are internal working bases (the complex slice, the
/// complexified covector basis, and the two 4-dimensional blocks).
class CoordinateFrame {
public:
    int dimension() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& id() const { return id_; }

    bool operator==(const CoordinateFrame& o) const { return id_ == o.id_; }
    bool operator!=(const CoordinateFrame& o) const { return id_ != o.id_; }

    static const CoordinateFrame& r7() {
        static const CoordinateFrame f{"R7", {"x1", "x2", "x3", "y0", "y1", "y2", "y3"}};
        return f;
    }
    static const CoordinateFrame& r8() {
        static const CoordinateFrame f{"R8", {"x0", "x1", "x2", "x3", "y0", "y1", "y2", "y3"}};
        return f;
    }
    /// The complex 3-space slice, ordered so the canonical complex volume form
    /// dx1 dy1 dx2 dy2 dx3 dy3 is the ascending top blade.
    static const CoordinateFrame& c3_slice() {
        static const CoordinateFrame f{"C3", {"x1", "y1", "x2", "y2", "x3", "y3"}};
        return f;
    }
    /// Complexified covector basis dt, dz1..dz3, dzbar1..dzbar3 over R7.
    static const CoordinateFrame& complexified() {
        static const CoordinateFrame f{"CPLX7", {"t", "z1", "z2", "z3", "zb1", "zb2", "zb3"}};
        return f;
    }
    /// The y-block y0..y3 of R7 (a copy of R^4).
    static const CoordinateFrame& y_block() {
        static const CoordinateFrame f{"Y4", {"y0", "y1", "y2", "y3"}};
        return f;
    }
    /// The x-block x0..x3 of R8 (the other copy of R^4).
    static const CoordinateFrame& x_block() {
        static const CoordinateFrame f{"X4", {"x0", "x1", "x2", "x3"}};
        return f;
    }

private:
    CoordinateFrame(std::string id, std::vector<std::string> names)
        : id_(std::move(id)), names_(std::move(names)) {}

    std::string id_;
    std::vector<std::string> names_;
};

/// Coordinate index constants for the R7 frame.
namespace r7 {
inline constexpr int X1 = 0, X2 = 1, X3 = 2, Y0 = 3, Y1 = 4, Y2 = 5, Y3 = 6;
}
/// Coordinate index constants for the R8 frame.
namespace r8 {
inline constexpr int X0 = 0, X1 = 1, X2 = 2, X3 = 3, Y0 = 4, Y1 = 5, Y2 = 6, Y3 = 7;
}

/// Diagonal bilinear form given by one sign/scale per coordinate.
struct MetricData {
    std::vector<Rational> diagonal;

    static MetricData euclidean(int dim) {
        MetricData m;
        m.diagonal.assign(dim, Rational(1));
        return m;
    }

    bool is_unit_signs() const {
        for (const auto& d : diagonal)
            if (d != Rational(1) && d != Rational(-1)) return false;
        return true;
    }
};

}  // namespace g2kit
