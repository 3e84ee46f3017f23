#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/structure.hpp"

namespace g2kit {

/// Complex-type pieces of a 3-form h = h3 + dt ^ h2 on the circle-times-
/// complex-threefold model (t is the y0 slot, z^j = x^j + i y^j). All pieces
/// are complex-valued forms in real R7 coordinates; the dt factor is
/// stripped from the degree-2 pieces. The (1,1) part of h2 splits into
/// f*omega plus a trace-free remainder.
struct ComplexType3 {
    FormG c30, c21, c12, c03;  ///< pieces of h3 by (p,q) type
    FormG d20, d11_0, d02;     ///< pieces of h2 (without dt); (1,1) part trace-free
    GaussianRational f;        ///< omega-trace of h2

    explicit ComplexType3(const CoordinateFrame& fr)
        : c30(fr, 3), c21(fr, 3), c12(fr, 3), c03(fr, 3), d20(fr, 2), d11_0(fr, 2), d02(fr, 2) {}

    /// Sum of all pieces; equals the decomposed input exactly.
    FormG reassemble(const FormQ& omega) const;
};

/// Complex-type pieces of a 2-form b = b2 + dt ^ b1.
struct ComplexType2 {
    FormG c20, c11_0, c02;  ///< pieces of b2; (1,1) part trace-free
    GaussianRational k;     ///< omega-trace of b2
    FormG d10, d01;         ///< pieces of b1 (without dt) by (p,q) type

    explicit ComplexType2(const CoordinateFrame& fr)
        : c20(fr, 2), c11_0(fr, 2), c02(fr, 2), d10(fr, 1), d01(fr, 1) {}

    FormG reassemble(const FormQ& omega) const;
};

ComplexType3 pq_decompose3(const FormG& h);
ComplexType2 pq_decompose2(const FormG& b);

/// Conversion between real R7 coordinates and the complexified covector
/// basis (dt, dz^j, dzbar^j). Round trips are exact.
FormG to_complex_basis(const FormG& a);
FormG from_complex_basis(const FormG& a);

/// Irreducible pieces of a 2-form: the 7- and 14-dimensional components.
struct G2Type2 {
    FormG p7, p14;
    explicit G2Type2(const CoordinateFrame& fr) : p7(fr, 2), p14(fr, 2) {}
};

/// Irreducible pieces of a 3-form: the 1-, 7- and 27-dimensional components.
struct G2Type3 {
    FormG p1, p7, p27;
    explicit G2Type3(const CoordinateFrame& fr) : p1(fr, 3), p7(fr, 3), p27(fr, 3) {}
};

/// Eigenprojections of b |-> *(phi ^ b), with eigenvalues given by the
/// package's convention (-2/+1 for CayleyDickson, +2/-1 for Opposite).
G2Type2 project_2forms(const FormG& b, const StructurePackage& pkg);

/// p1 = <h,phi>/7 phi; p7 = orthogonal projection onto {X -| psi};
/// p27 = remainder, which satisfies p27 ^ phi = 0 and p27 ^ psi = 0.
G2Type3 project_3forms(const FormG& h, const StructurePackage& pkg);

/// Result of a membership test: the boolean verdict plus the residual forms
/// of each defining equation (all zero exactly when the verdict is true).
struct Membership {
    bool member = false;
    std::vector<std::pair<std::string, FormG>> residuals;
    GaussianRational trace;  ///< the omega-trace (f or k) of the input
};

/// Tests membership in the 27-dimensional type of 3-forms via the four
/// wedge equations on complex-type pieces.
Membership membership_27(const FormG& h, const StructurePackage& pkg);

/// Tests membership in the 14-dimensional type of 2-forms: k = 0 plus the
/// two wedge equations.
Membership membership_14(const FormG& b, const StructurePackage& pkg);

struct RankReport {
    int domain_dim = 0;
    int kernel_dim = 0;
    int image_dim = 0;
};

/// Real rank data of L : (h21, h20) |-> Omega ^ conj(h20)/2 + omega ^ h21.
RankReport rank_of_L(const StructurePackage& pkg);

/// Real rank data of M : (b20, b10) |-> i conj(b20) ^ Omega - b10 ^ omega^2.
RankReport rank_of_M(const StructurePackage& pkg);

/// L restricted to the orthogonal complement of its kernel (Euclidean inner
/// product on component pairs); returns the rank of the restriction.
int rank_of_L_on_kernel_complement(const StructurePackage& pkg);

/// Canonical basis elements: eta_i = dt ^ (1/2i)(dz_i -| Omega) -
/// dz_i -| (omega^2/2) and beta_i = (dz_i -| Omega)/2 + dt ^ (dz_i -| omega),
/// where dz_i denotes the (1,0) coordinate vector field.
FormG canonical_eta(int i, const StructurePackage& pkg);
FormG canonical_beta(int i, const StructurePackage& pkg);

/// -h Im(Omega) + sum a^i eta_i + conjugates: the contraction X -| psi of the
/// vector field X with components (a^i, h).
FormG canonical_contraction_psi(const std::array<GaussianRational, 3>& a, const Rational& h,
                                const StructurePackage& pkg);

/// -h omega + sum a^i beta_i + conjugates: the contraction X -| phi.
FormG canonical_contraction_phi(const std::array<GaussianRational, 3>& a, const Rational& h,
                                const StructurePackage& pkg);

/// The real vector field with components (a^i, h) under z^j = x^j + i y^j.
std::vector<GaussianRational> model_vector_field(const std::array<GaussianRational, 3>& a,
                                                 const Rational& h);

/// Matrix of b |-> *(phi ^ b) on the 21-dimensional space of 2-forms,
/// in the canonical blade basis.
Matrix<Rational> two_form_operator_matrix(const StructurePackage& pkg);

/// Matrices of the three projectors on the 35-dimensional space of 3-forms.
struct ProjectorMatrices3 {
    Matrix<Rational> p1{35, 35}, p7{35, 35}, p27{35, 35};
};
ProjectorMatrices3 three_form_projector_matrices(const StructurePackage& pkg);

/// Matrices of the two projectors on 2-forms.
struct ProjectorMatrices2 {
    Matrix<Rational> p7{21, 21}, p14{21, 21};
};
ProjectorMatrices2 two_form_projector_matrices(const StructurePackage& pkg);

/// Dimension of the space of real trace-free (1,1) forms, by exact rank.
int real_11_traceless_dimension(const StructurePackage& pkg);

/// All degree-d blades of the frame in canonical order.
std::vector<Blade> blade_basis(const CoordinateFrame& frame, int d);

}  // namespace g2kit
