#include "g2kit/structure.hpp"

#include <cassert>
#include <stdexcept>

namespace g2kit {

namespace {

using OQ = Octonion<Rational>;

int rational_to_int(const Rational& r) {
    // Structure constants are small integers by construction.
    assert(r.denominator_str() == "1");
    return std::stoi(r.numerator_str());
}

std::array<std::array<std::array<int, 7>, 7>, 7> compute_phi_constants() {
    std::array<std::array<std::array<int, 7>, 7>, 7> t{};
    for (int i = 0; i < 7; ++i) {
        OQ ei = OQ::imaginary_basis(i);
        for (int j = 0; j < 7; ++j) {
            OQ ej = OQ::imaginary_basis(j);
            for (int k = 0; k < 7; ++k) {
                OQ ek = OQ::imaginary_basis(k);
                t[i][j][k] = rational_to_int(octonion_inner(ei, ej * ek));
            }
        }
    }
    return t;
}

std::array<std::array<std::array<std::array<int, 7>, 7>, 7>, 7> compute_psi_constants() {
    std::array<std::array<std::array<std::array<int, 7>, 7>, 7>, 7> t{};
    const Rational half(1, 2);
    for (int i = 0; i < 7; ++i) {
        OQ ei = OQ::imaginary_basis(i);
        for (int j = 0; j < 7; ++j)
            for (int k = 0; k < 7; ++k)
                for (int l = 0; l < 7; ++l) {
                    OQ assoc = associator(OQ::imaginary_basis(j), OQ::imaginary_basis(k),
                                          OQ::imaginary_basis(l));
                    t[i][j][k][l] = rational_to_int(half * octonion_inner(ei, assoc));
                }
    }
    return t;
}

FormQ phi_from_constants() {
    const auto& t = phi_constants();
    FormQ f(CoordinateFrame::r7(), 3);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                if (t[i][j][k] != 0) f.add_term(Blade({i, j, k}), Rational(t[i][j][k]));
    return f;
}

FormQ psi_from_constants() {
    const auto& t = psi_constants();
    FormQ f(CoordinateFrame::r7(), 4);
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                for (int l = k + 1; l < 7; ++l)
                    if (t[i][j][k][l] != 0) f.add_term(Blade({i, j, k, l}), Rational(t[i][j][k][l]));
    return f;
}

FormQ big_phi_from_triple_cross() {
    FormQ f(CoordinateFrame::r8(), 4);
    std::array<OQ, 8> basis;
    for (int k = 0; k < 8; ++k) basis[k] = OQ::basis(k);
    for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j)
            for (int k = j + 1; k < 8; ++k)
                for (int l = k + 1; l < 8; ++l) {
                    Rational v = octonion_inner(basis[i], triple_cross(basis[j], basis[k], basis[l]));
                    if (!v.is_zero()) f.add_term(Blade({i, j, k, l}), v);
                }
    return f;
}

FormG complex_volume_form(const CoordinateFrame& frame, const std::vector<std::pair<int, int>>& xy) {
    FormG acc = FormG::scalar(frame, GaussianRational(1));
    for (auto [x, y] : xy) {
        FormG dz = FormG::covector(frame, x) + GaussianRational::i() * FormG::covector(frame, y);
        acc = wedge(acc, dz);
    }
    return acc;
}

}  // namespace

const std::array<std::array<std::array<int, 7>, 7>, 7>& phi_constants() {
    static const auto t = compute_phi_constants();
    return t;
}

const std::array<std::array<std::array<std::array<int, 7>, 7>, 7>, 7>& psi_constants() {
    static const auto t = compute_psi_constants();
    return t;
}

Octonion<Rational> cross7(const Octonion<Rational>& u, const Octonion<Rational>& v) {
    if (!u.is_imaginary() || !v.is_imaginary())
        throw std::invalid_argument("cross7: arguments must be imaginary octonions");
    std::array<Rational, 7> a, b;
    for (int k = 0; k < 7; ++k) {
        a[k] = u.component(k + 1);
        b[k] = v.component(k + 1);
    }
    std::array<Rational, 7> w = cross7(a, b);
    std::array<Rational, 8> out{};
    for (int k = 0; k < 7; ++k) out[k + 1] = w[k];
    return Octonion<Rational>::from_components(out);
}

FormQ vol3_r7() { return FormQ::monomial(CoordinateFrame::r7(), {0, 1, 2}, Rational(1)); }
FormQ vol4_r7() { return FormQ::monomial(CoordinateFrame::r7(), {3, 4, 5, 6}, Rational(1)); }
FormQ vol6_r7() { return FormQ::monomial(CoordinateFrame::r7(), {0, 4, 1, 5, 2, 6}, Rational(1)); }
FormQ vol7_r7() {
    return FormQ::monomial(CoordinateFrame::r7(), {0, 1, 2, 3, 4, 5, 6}, Rational(1));
}
FormQ volX_r8() { return FormQ::monomial(CoordinateFrame::r8(), {0, 1, 2, 3}, Rational(1)); }
FormQ volY_r8() { return FormQ::monomial(CoordinateFrame::r8(), {4, 5, 6, 7}, Rational(1)); }
FormQ vol8_r8() {
    return FormQ::monomial(CoordinateFrame::r8(), {0, 1, 2, 3, 4, 5, 6, 7}, Rational(1));
}

FormQ lift_r7_to_r8(const FormQ& a) {
    if (a.frame() != CoordinateFrame::r7()) throw std::invalid_argument("lift: expected R7 form");
    std::vector<FormQ> images;
    images.reserve(7);
    for (int m = 0; m < 7; ++m) images.push_back(FormQ::covector(CoordinateFrame::r8(), m + 1));
    return substitute_covectors(a, CoordinateFrame::r8(), images);
}

namespace {

std::array<FormQ, 3> make_eta(int sign) {
    const auto& r7f = CoordinateFrame::r7();
    Rational s(sign);
    // eta_i = dy0 dy^i + sign * dy^j dy^k for (i,j,k) cyclic in (1,2,3);
    // y-block indices are 3,4,5,6.
    std::array<FormQ, 3> out = {
        FormQ::monomial(r7f, {3, 4}, Rational(1)) + FormQ::monomial(r7f, {5, 6}, s),
        FormQ::monomial(r7f, {3, 5}, Rational(1)) + FormQ::monomial(r7f, {6, 4}, s),
        FormQ::monomial(r7f, {3, 6}, Rational(1)) + FormQ::monomial(r7f, {4, 5}, s)};
    return out;
}

std::array<FormQ, 3> make_beta(int sign) {
    const auto& r8f = CoordinateFrame::r8();
    Rational s(sign);
    std::array<FormQ, 3> out = {
        FormQ::monomial(r8f, {0, 1}, Rational(1)) + FormQ::monomial(r8f, {2, 3}, s),
        FormQ::monomial(r8f, {0, 2}, Rational(1)) + FormQ::monomial(r8f, {3, 1}, s),
        FormQ::monomial(r8f, {0, 3}, Rational(1)) + FormQ::monomial(r8f, {1, 2}, s)};
    return out;
}

}  // namespace

StructurePackage build_package(Convention c) {
    const auto& r7f = CoordinateFrame::r7();
    const auto& r8f = CoordinateFrame::r8();
    StructurePackage pkg;
    pkg.convention = c;

    FormQ phi_cd = phi_from_constants();
    FormQ psi_cd = psi_from_constants();
    if (c == Convention::CayleyDickson) {
        pkg.phi = phi_cd;
        pkg.psi = psi_cd;
        pkg.big_phi = big_phi_from_triple_cross();
    } else {
        // The mirror convention: substitute y0 -> -y0 in phi and take the
        // Hodge dual anew. (The substitution alone would give -psi: the
        // orientation reversal enters the star once more.)
        pkg.phi = flip_coordinate(phi_cd, r7::Y0);
        pkg.psi = hodge_star(pkg.phi);
        pkg.big_phi = wedge(FormQ::covector(r8f, r8::X0), lift_r7_to_r8(pkg.phi)) +
                      lift_r7_to_r8(pkg.psi);
    }

    pkg.omega3 = FormQ::monomial(r7f, {0, 4}, Rational(1)) +
                 FormQ::monomial(r7f, {1, 5}, Rational(1)) +
                 FormQ::monomial(r7f, {2, 6}, Rational(1));
    pkg.Omega3 = complex_volume_form(r7f, {{r7::X1, r7::Y1}, {r7::X2, r7::Y2}, {r7::X3, r7::Y3}});

    pkg.omega4 = FormQ(r8f, 2);
    for (int j = 0; j < 4; ++j)
        pkg.omega4.add_term(Blade({j, j + 4}), Rational(1));
    pkg.Omega4 = complex_volume_form(
        r8f, {{r8::X0, r8::Y0}, {r8::X1, r8::Y1}, {r8::X2, r8::Y2}, {r8::X3, r8::Y3}});

    pkg.eta_minus = make_eta(-1);
    pkg.eta_plus = make_eta(+1);
    pkg.beta_minus = make_beta(-1);
    pkg.beta_plus = make_beta(+1);
    return pkg;
}

std::optional<PresentationKind> presentation_from_name(const std::string& name) {
    if (name == "c3+r") return PresentationKind::C3PlusR;
    if (name == "r3+r4") return PresentationKind::R3PlusR4;
    if (name == "c4") return PresentationKind::C4;
    if (name == "r4+r4") return PresentationKind::R4PlusR4;
    if (name == "theta") return PresentationKind::ThetaBundle;
    return std::nullopt;
}

FormP theta_form(Convention c) {
    const auto& r7f = CoordinateFrame::r7();
    const auto etas = (c == Convention::CayleyDickson) ? make_eta(-1) : make_eta(+1);
    Polynomial sign = (c == Convention::CayleyDickson) ? Polynomial(1) : Polynomial(-1);
    FormP theta(r7f, 2);
    for (int k = 0; k < 3; ++k) {
        FormP part = (sign * Polynomial::variable(k)) * to_polynomial(etas[k]);
        theta += part;
    }
    return theta;
}

Presentation presentation(const StructurePackage& pkg, PresentationKind kind) {
    const auto& r7f = CoordinateFrame::r7();
    const auto& r8f = CoordinateFrame::r8();
    const bool cd = pkg.convention == Convention::CayleyDickson;
    const Rational s(cd ? -1 : 1);  // sign of the dt^omega3 and omega^2/2 terms
    Presentation out;
    out.kind = kind;

    FormQ dt = FormQ::covector(r7f, r7::Y0);
    switch (kind) {
        case PresentationKind::C3PlusR: {
            out.phi_parts.push_back({"Re(Omega3)", pkg.re_Omega3()});
            out.phi_parts.push_back({cd ? "-dt^omega3" : "+dt^omega3", s * wedge(dt, pkg.omega3)});
            out.psi_parts.push_back({"-dt^Im(Omega3)", Rational(-1) * wedge(dt, pkg.im_Omega3())});
            FormQ half_omega_sq = Rational(1, 2) * wedge(pkg.omega3, pkg.omega3);
            out.psi_parts.push_back({cd ? "-omega3^2/2" : "+omega3^2/2", s * half_omega_sq});
            break;
        }
        case PresentationKind::R3PlusR4: {
            const auto& etas = cd ? pkg.eta_minus : pkg.eta_plus;
            const char* nm = cd ? "eta-" : "eta+";
            const Rational es(cd ? 1 : -1);
            out.phi_parts.push_back({"vol3", vol3_r7()});
            for (int k = 0; k < 3; ++k) {
                std::string label = (cd ? "+dx" : "-dx") + std::to_string(k + 1) + "^" + nm +
                                    std::to_string(k + 1);
                out.phi_parts.push_back({label, es * wedge(FormQ::covector(r7f, k), etas[k])});
            }
            out.psi_parts.push_back({"vol4", vol4_r7()});
            // psi = vol4 - dx1 dx2 eta_3 - dx2 dx3 eta_1 - dx3 dx1 eta_2.
            const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
            const int which[3] = {2, 0, 1};
            for (int t = 0; t < 3; ++t) {
                std::string label = "-dx" + std::to_string(pairs[t][0] + 1) + "^dx" +
                                    std::to_string(pairs[t][1] + 1) + "^" + nm +
                                    std::to_string(which[t] + 1);
                FormQ part = Rational(-1) * wedge(FormQ::covector(r7f, pairs[t][0]),
                                                  FormQ::covector(r7f, pairs[t][1]), etas[which[t]]);
                out.psi_parts.push_back({label, part});
            }
            break;
        }
        case PresentationKind::C4: {
            out.big_phi_parts.push_back({"Re(Omega4)", real_part(pkg.Omega4)});
            FormQ half_omega_sq = Rational(1, 2) * wedge(pkg.omega4, pkg.omega4);
            out.big_phi_parts.push_back({cd ? "-omega4^2/2" : "+omega4^2/2", s * half_omega_sq});
            break;
        }
        case PresentationKind::R4PlusR4: {
            const auto& betas = cd ? pkg.beta_minus : pkg.beta_plus;
            // eta bases live on R7; lift to the y-block of R8.
            const auto& etas7 = cd ? pkg.eta_minus : pkg.eta_plus;
            const Rational es(cd ? 1 : -1);
            out.big_phi_parts.push_back({"volX", volX_r8()});
            for (int k = 0; k < 3; ++k) {
                std::string label = (cd ? "+beta-" : "-beta+") + std::to_string(k + 1) + "^eta" +
                                    std::to_string(k + 1);
                out.big_phi_parts.push_back({label, es * wedge(betas[k], lift_r7_to_r8(etas7[k]))});
            }
            out.big_phi_parts.push_back({"volY", volY_r8()});
            break;
        }
        case PresentationKind::ThetaBundle: {
            out.phi_parts.push_back({"vol3", vol3_r7()});
            out.theta = theta_form(pkg.convention);
            break;
        }
    }
    return out;
}

FormQ build_split_phi(SplitVariant v) {
    const auto& r7f = CoordinateFrame::r7();
    StructurePackage pkg = build_package(Convention::CayleyDickson);
    FormQ out = vol3_r7();
    const auto& etas = (v == SplitVariant::MinusEtaMinus) ? pkg.eta_minus : pkg.eta_plus;
    const Rational s(v == SplitVariant::MinusEtaMinus ? -1 : 1);
    for (int k = 0; k < 3; ++k) out += s * wedge(FormQ::covector(r7f, k), etas[k]);
    return out;
}

MetricExtraction metric_from_phi(const FormQ& phi, Convention orientation) {
    if (phi.frame() != CoordinateFrame::r7() || phi.degree() != 3)
        throw std::invalid_argument("metric_from_phi: expected a 3-form on R7");
    MetricExtraction out{Matrix<Rational>(7, 7), Matrix<Rational>(7, 7), {0, 0}, std::nullopt};
    for (int u = 0; u < 7; ++u) {
        std::vector<Rational> eu(7, Rational(0));
        eu[u] = Rational(1);
        FormQ iu = interior_product(eu, phi);
        for (int v = u; v < 7; ++v) {
            std::vector<Rational> ev(7, Rational(0));
            ev[v] = Rational(1);
            FormQ iv = interior_product(ev, phi);
            Rational b = top_coefficient(wedge(iu, iv, phi));
            out.bilinear.at(u, v) = b;
            out.bilinear.at(v, u) = b;
        }
    }
    Rational normalizer(orientation == Convention::CayleyDickson ? -6 : 6);
    for (int u = 0; u < 7; ++u)
        for (int v = 0; v < 7; ++v) out.metric.at(u, v) = out.bilinear.at(u, v) / normalizer;
    if (rank(out.metric) < 7)
        throw std::domain_error("metric_from_phi: degenerate bilinear form");
    out.signature = symmetric_signature(out.metric);
    bool diag = true;
    for (int u = 0; u < 7 && diag; ++u)
        for (int v = 0; v < 7 && diag; ++v)
            if (u != v && !out.metric.at(u, v).is_zero()) diag = false;
    if (diag) {
        MetricData md;
        for (int u = 0; u < 7; ++u) md.diagonal.push_back(out.metric.at(u, u));
        out.diagonal = md;
    }
    return out;
}

}  // namespace g2kit
