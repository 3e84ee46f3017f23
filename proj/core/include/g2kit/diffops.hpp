#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/polynomial.hpp"
#include "g2kit/structure.hpp"

namespace g2kit {

/// Vector field on flat R7 with polynomial components. Raising and lowering
/// indices are component-identity maps in this frame.
struct PolyVectorField {
    std::array<Polynomial, 7> c;

    PolyVectorField() = default;

    static PolyVectorField basis(int i) {
        PolyVectorField v;
        v.c[i] = Polynomial(1);
        return v;
    }

    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }

    PolyVectorField operator-() const {
        PolyVectorField out;
        for (int i = 0; i < 7; ++i) out.c[i] = -c[i];
        return out;
    }
    friend PolyVectorField operator+(const PolyVectorField& a, const PolyVectorField& b) {
        PolyVectorField out;
        for (int i = 0; i < 7; ++i) out.c[i] = a.c[i] + b.c[i];
        return out;
    }
    friend PolyVectorField operator-(const PolyVectorField& a, const PolyVectorField& b) {
        PolyVectorField out;
        for (int i = 0; i < 7; ++i) out.c[i] = a.c[i] - b.c[i];
        return out;
    }
    friend PolyVectorField operator*(const Polynomial& s, const PolyVectorField& a) {
        PolyVectorField out;
        for (int i = 0; i < 7; ++i) out.c[i] = s * a.c[i];
        return out;
    }
    friend bool operator==(const PolyVectorField& a, const PolyVectorField& b) {
        return a.c == b.c;
    }
    friend bool operator!=(const PolyVectorField& a, const PolyVectorField& b) {
        return !(a == b);
    }
};

/// Pointwise inner product sum_i X^i Y^i.
Polynomial dot(const PolyVectorField& x, const PolyVectorField& y);

/// Musical isomorphisms in the flat orthonormal frame.
FormP flat(const PolyVectorField& x);
PolyVectorField sharp(const FormP& a);

/// Section of the spinor bundle R + TM: a function paired with a vector field.
struct Spinor {
    Polynomial f;
    PolyVectorField x;

    friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.f + b.f, a.x + b.x}; }
    friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.f - b.f, a.x - b.x}; }
    friend bool operator==(const Spinor& a, const Spinor& b) { return a.f == b.f && a.x == b.x; }
    friend bool operator!=(const Spinor& a, const Spinor& b) { return !(a == b); }
    bool is_zero() const { return f.is_zero() && x.is_zero(); }
};

/// <s1,s2> = f1 f2 + <X1,X2>.
Polynomial spinor_inner(const Spinor& a, const Spinor& b);

PolyVectorField grad(const Polynomial& f);
Polynomial divergence(const PolyVectorField& x);

/// d on polynomial-coefficient forms; the exterior derivative of a top-degree
/// form is the zero form one degree up.
FormP exterior_derivative(const FormP& a);

/// Formal adjoint d* = (-1)^k * d * on k-forms over flat R7.
FormP codifferential(const FormP& a);

/// dd* + d*d on forms of degree 0 or 1.
FormP hodge_laplacian(const FormP& a);

/// Componentwise -sum_i d_i^2, the flat-space value of the Hodge Laplacian.
Polynomial flat_laplacian(const Polynomial& f);

/// Cross product of polynomial vector fields contracted from the phi table.
PolyVectorField cross(const PolyVectorField& x, const PolyVectorField& y);

/// curl X by the index formula d_i X_j phi_{ij}^k (flat space).
PolyVectorField curl(const PolyVectorField& x);

/// curl X by the invariant formula *(d X-flat ^ psi); psi defaults to the
/// CayleyDickson 4-form but may be overridden (the negative-control path).
PolyVectorField curl_via_star(const PolyVectorField& x, const FormQ& psi);

/// Clifford product of a 1-form (as a vector field) with a spinor:
/// Y . (f, Z) = (-<Y,Z>, f Y + Y x Z).
Spinor clifford_multiply(const PolyVectorField& y, const Spinor& s);

/// Octonion-product route to the same multiplication, as an oracle.
Spinor clifford_multiply_octonion(const PolyVectorField& y, const Spinor& s);

/// Dirac operator (-div X, grad f + curl X).
Spinor dirac(const Spinor& s);

/// Dirac operator as the summed Clifford contraction dx^k . (d_k f, d_k X).
Spinor dirac_via_clifford(const Spinor& s);

/// Witness field for formal self-adjointness: V^k = <e_k . s1, s2>, with
/// <Ds1,s2> - <s1,Ds2> = div V.
PolyVectorField selfadjoint_witness(const Spinor& s1, const Spinor& s2);

/// Deterministic generator of sparse random polynomials and spinors with
/// small rational coefficients.
class PolySampler {
public:
    PolySampler(std::uint64_t seed, int max_degree);

    Polynomial polynomial();
    PolyVectorField vector_field();
    Spinor spinor();
    int uniform_int(int lo, int hi);

private:
    std::uint64_t state_;
    int max_degree_;
    std::uint64_t next();
};

struct SuiteConfig {
    std::uint64_t seed = 0;
    int trials = 100;
    int max_degree = 3;
    /// Flip the sign of the n-th canonical-order blade coefficient.
    std::optional<int> corrupt_psi_blade;
    std::optional<int> corrupt_phi_blade;
};

struct IdentityResult {
    std::string name;
    bool pass = true;
    std::string counterexample;  // empty when pass
};

struct SuiteReport {
    std::vector<IdentityResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
};

/// Flips the sign of the n-th term of a form in canonical blade order.
FormQ corrupt_blade_sign(const FormQ& a, int n);

/// Runs the first-order operator identities on random polynomial data.
SuiteReport identity_suite(const SuiteConfig& cfg);

}  // namespace g2kit
