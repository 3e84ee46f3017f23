#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "g2kit/form.hpp"
#include "g2kit/linalg.hpp"
#include "g2kit/octonion.hpp"

namespace g2kit {

/// The two sign/orientation conventions. CayleyDickson is the convention in
/// which the triple form is derived directly from the Cayley-Dickson octonion
/// product and the y-block carries anti-self-dual 2-forms; Opposite is the
/// y0 -> -y0 mirror, in which the y-block carries self-dual 2-forms. All
/// downstream sign constants (the -6/+6 metric normalizer and the -2,+1 /
/// +2,-1 operator eigenvalues) are functions of this choice.
enum class Convention { CayleyDickson, Opposite };

inline const char* convention_name(Convention c) {
    return c == Convention::CayleyDickson ? "cd" : "opposite";
}

/// phi_{ijk} structure constants on R7, derived once from octonion products.
const std::array<std::array<std::array<int, 7>, 7>, 7>& phi_constants();

/// psi_{ijkl} structure constants on R7, derived once from the associator.
const std::array<std::array<std::array<std::array<int, 7>, 7>, 7>, 7>& psi_constants();

/// 7-dimensional cross product u x v over any scalar ring, contracted from
/// the phi structure constants.
template <typename R>
std::array<R, 7> cross7(const std::array<R, 7>& u, const std::array<R, 7>& v) {
    const auto& phi = phi_constants();
    std::array<R, 7> out{R(0), R(0), R(0), R(0), R(0), R(0), R(0)};
    for (int i = 0; i < 7; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < 7; ++j) {
            if (v[j].is_zero()) continue;
            for (int k = 0; k < 7; ++k) {
                int s = phi[i][j][k];
                if (s == 0) continue;
                R term = u[i] * v[j];
                out[k] += (s < 0) ? -term : term;
            }
        }
    }
    return out;
}

/// Cross product of imaginary octonions; throws when a real part is present.
Octonion<Rational> cross7(const Octonion<Rational>& u, const Octonion<Rational>& v);

/// The canonical structure forms of one convention, together with the
/// standard complex-model and four-manifold companions used throughout.
struct StructurePackage {
    Convention convention = Convention::CayleyDickson;

    FormQ phi{CoordinateFrame::r7(), 3};      ///< 3-form on R7
    FormQ psi{CoordinateFrame::r7(), 4};      ///< 4-form on R7, equal to *phi
    FormQ big_phi{CoordinateFrame::r8(), 4};  ///< self-dual 4-form on R8

    FormQ omega3{CoordinateFrame::r7(), 2};  ///< Kaehler 2-form dx1 dy1 + dx2 dy2 + dx3 dy3 on R7
    FormG Omega3{CoordinateFrame::r7(), 3};  ///< holomorphic volume form dz1 dz2 dz3 on R7
    FormQ omega4{CoordinateFrame::r8(), 2};  ///< Kaehler 2-form on R8
    FormG Omega4{CoordinateFrame::r8(), 4};  ///< holomorphic volume form dz0 dz1 dz2 dz3 on R8

    /// eta: (anti-)self-dual bases on the y-block, as forms on R7.
    /// beta: (anti-)self-dual bases on the x-block, as forms on R8.
    std::array<FormQ, 3> eta_minus{FormQ{CoordinateFrame::r7(), 2}, FormQ{CoordinateFrame::r7(), 2},
                                   FormQ{CoordinateFrame::r7(), 2}};
    std::array<FormQ, 3> eta_plus{FormQ{CoordinateFrame::r7(), 2}, FormQ{CoordinateFrame::r7(), 2},
                                  FormQ{CoordinateFrame::r7(), 2}};
    std::array<FormQ, 3> beta_minus{FormQ{CoordinateFrame::r8(), 2}, FormQ{CoordinateFrame::r8(), 2},
                                    FormQ{CoordinateFrame::r8(), 2}};
    std::array<FormQ, 3> beta_plus{FormQ{CoordinateFrame::r8(), 2}, FormQ{CoordinateFrame::r8(), 2},
                                   FormQ{CoordinateFrame::r8(), 2}};

    FormQ re_Omega3() const { return real_part(Omega3); }
    FormQ im_Omega3() const { return imag_part(Omega3); }

    /// Normalizer of (u -| phi)^(v -| phi)^phi = n <u,v> vol7.
    int metric_normalizer() const { return convention == Convention::CayleyDickson ? -6 : 6; }

    /// Eigenvalues of b |-> *(phi ^ b) on the 7- and 14-dimensional pieces.
    std::pair<int, int> two_form_eigenvalues() const {
        return convention == Convention::CayleyDickson ? std::pair<int, int>{-2, 1}
                                                       : std::pair<int, int>{2, -1};
    }
};

StructurePackage build_package(Convention c);

/// Sends y0 -> -y0: flips the sign of every term whose blade contains the
/// given coordinate index.
template <typename R>
Form<R> flip_coordinate(const Form<R>& a, int idx) {
    Form<R> out(a.frame(), a.degree());
    for (const auto& [b, c] : a.terms()) out.add_term(b, b.contains(idx) ? -c : c);
    return out;
}

enum class PresentationKind { C3PlusR, R3PlusR4, C4, R4PlusR4, ThetaBundle };

std::optional<PresentationKind> presentation_from_name(const std::string& name);

struct LabeledForm {
    std::string label;
    FormQ form;
};

/// A presentation splits phi/psi (on R7) or the R8 4-form into the labeled
/// summands of one of the standard decompositions; the parts add up to the
/// original form exactly. The theta presentation instead exhibits phi as
/// vol3 + d(theta) for the tautological polynomial 2-form theta.
struct Presentation {
    PresentationKind kind;
    std::vector<LabeledForm> phi_parts;
    std::vector<LabeledForm> psi_parts;
    std::vector<LabeledForm> big_phi_parts;
    std::optional<FormP> theta;
};

Presentation presentation(const StructurePackage& pkg, PresentationKind kind);

/// The tautological 2-form x1 eta1 + x2 eta2 + x3 eta3 with polynomial
/// coefficients (eta-minus for CayleyDickson, -eta-plus for Opposite).
FormP theta_form(Convention c);

struct MetricExtraction {
    Matrix<Rational> bilinear;        ///< B_uv = vol7-coefficient of (u-|phi)^(v-|phi)^phi
    Matrix<Rational> metric;          ///< B divided by the convention's normalizer
    std::pair<int, int> signature;    ///< (#positive, #negative) of the metric
    std::optional<MetricData> diagonal;  ///< set when the metric is diagonal
};

/// Recovers the bilinear form determined by a 3-form with rational
/// coefficients. Throws when B is degenerate.
MetricExtraction metric_from_phi(const FormQ& phi, Convention orientation);

enum class SplitVariant { MinusEtaMinus, PlusEtaPlus };

/// The two split-signature 3-forms vol3 - sum dx^k eta-_k and
/// vol3 + sum dx^k eta+_k.
FormQ build_split_phi(SplitVariant v);

/// vol3, vol4, vol6, vol7 and friends as forms on R7; volX/volY/vol8 on R8.
FormQ vol3_r7();
FormQ vol4_r7();
FormQ vol6_r7();
FormQ vol7_r7();
FormQ volX_r8();
FormQ volY_r8();
FormQ vol8_r8();

/// Lifts a form on R7 to R8 under the inclusion Im(O) in O (index shift by 1).
FormQ lift_r7_to_r8(const FormQ& a);

}  // namespace g2kit
