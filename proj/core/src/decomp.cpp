#include "g2kit/decomp.hpp"

#include <stdexcept>

namespace g2kit {

namespace {

const CoordinateFrame& R7 = CoordinateFrame::r7();
const CoordinateFrame& CX = CoordinateFrame::complexified();

GaussianRational gi() { return GaussianRational::i(); }

// Kaehler form and holomorphic volume form in the complexified basis.
FormG omega_cx() {
    FormG w(CX, 2);
    for (int j = 1; j <= 3; ++j) w.add_term(Blade({j, j + 3}), gi() * GaussianRational(Rational(1, 2)));
    return w;
}

FormG Omega_cx() {
    FormG o(CX, 3);
    o.add_term(Blade({1, 2, 3}), GaussianRational(1));
    return o;
}

// Conjugation in the complexified basis: conjugate coefficients and swap
// dz^j <-> dzbar^j.
FormG conj_cx(const FormG& a) {
    std::vector<FormG> images;
    images.push_back(FormG::covector(CX, 0));
    for (int j = 1; j <= 3; ++j) images.push_back(FormG::covector(CX, j + 3));
    for (int j = 1; j <= 3; ++j) images.push_back(FormG::covector(CX, j));
    return substitute_covectors(conj_form(a), CX, images);
}

std::pair<int, int> pq_of(const Blade& b) {
    int p = 0, q = 0;
    for (int i : b.indices()) {
        if (i >= 1 && i <= 3) ++p;
        if (i >= 4) ++q;
    }
    return {p, q};
}

// Norm squared of a complexified blade under the Euclidean metric of the
// underlying real coordinates: each dz or dzbar factor contributes 2.
Rational cx_blade_norm_sq(const Blade& b) {
    Rational n(1);
    for (int i : b.indices())
        if (i >= 1) n = n * Rational(2);
    return n;
}

}  // namespace

FormG to_complex_basis(const FormG& a) {
    if (a.frame() != R7) throw std::invalid_argument("to_complex_basis: expected R7 form");
    std::vector<FormG> images;
    const GaussianRational half(Rational(1, 2));
    const GaussianRational mihalf(Rational(0), Rational(-1, 2));  // -i/2
    // dx^j -> (dz^j + dzbar^j)/2
    for (int j = 1; j <= 3; ++j)
        images.push_back(half * (FormG::covector(CX, j) + FormG::covector(CX, j + 3)));
    // dy^0 -> dt
    images.push_back(FormG::covector(CX, 0));
    // dy^j -> -i/2 (dz^j - dzbar^j)
    for (int j = 1; j <= 3; ++j)
        images.push_back(mihalf * (FormG::covector(CX, j) - FormG::covector(CX, j + 3)));
    return substitute_covectors(a, CX, images);
}

FormG from_complex_basis(const FormG& a) {
    if (a.frame() != CX) throw std::invalid_argument("from_complex_basis: expected complexified form");
    std::vector<FormG> images;
    images.push_back(FormG::covector(R7, r7::Y0));  // dt -> dy0
    for (int j = 1; j <= 3; ++j)                    // dz^j -> dx^j + i dy^j
        images.push_back(FormG::covector(R7, j - 1) + gi() * FormG::covector(R7, j + 3));
    for (int j = 1; j <= 3; ++j)                    // dzbar^j -> dx^j - i dy^j
        images.push_back(FormG::covector(R7, j - 1) - gi() * FormG::covector(R7, j + 3));
    return substitute_covectors(a, R7, images);
}

namespace {

// Splits a complexified form into (dt-free, dt-stripped) pieces keyed by
// (p,q); the dt factor costs no sign because t is the lowest index.
struct CxSplit {
    std::map<std::pair<int, int>, FormG> plain;
    std::map<std::pair<int, int>, FormG> with_dt;
};

CxSplit split_types(const FormG& cx) {
    CxSplit out;
    for (const auto& [b, c] : cx.terms()) {
        if (b.contains(0)) {
            Blade rest = b.without(0);
            auto key = pq_of(rest);
            auto it = out.with_dt.find(key);
            if (it == out.with_dt.end())
                it = out.with_dt.emplace(key, FormG(CX, rest.degree())).first;
            it->second.add_term(rest, c);
        } else {
            auto key = pq_of(b);
            auto it = out.plain.find(key);
            if (it == out.plain.end()) it = out.plain.emplace(key, FormG(CX, b.degree())).first;
            it->second.add_term(b, c);
        }
    }
    return out;
}

FormG piece(const CxSplit& s, bool dt, int p, int q, int degree) {
    const auto& m = dt ? s.with_dt : s.plain;
    auto it = m.find({p, q});
    return it == m.end() ? FormG(CX, degree) : it->second;
}

// omega-trace of a (1,1) piece: eta = f*omega + trace-free, with
// f = -(2i/3) * sum of the dz^j ^ dzbar^j coefficients.
GaussianRational omega_trace(const FormG& c11) {
    GaussianRational diag(0);
    for (int j = 1; j <= 3; ++j) diag += c11.coefficient(Blade({j, j + 3}));
    return GaussianRational(Rational(0), Rational(-2, 3)) * diag;
}

}  // namespace

ComplexType3 pq_decompose3(const FormG& h) {
    if (h.frame() != R7 || h.degree() != 3)
        throw std::invalid_argument("pq_decompose3: expected a 3-form on R7");
    CxSplit s = split_types(to_complex_basis(h));
    ComplexType3 out(R7);
    out.c30 = from_complex_basis(piece(s, false, 3, 0, 3));
    out.c21 = from_complex_basis(piece(s, false, 2, 1, 3));
    out.c12 = from_complex_basis(piece(s, false, 1, 2, 3));
    out.c03 = from_complex_basis(piece(s, false, 0, 3, 3));
    out.d20 = from_complex_basis(piece(s, true, 2, 0, 2));
    out.d02 = from_complex_basis(piece(s, true, 0, 2, 2));
    FormG c11 = piece(s, true, 1, 1, 2);
    out.f = omega_trace(c11);
    out.d11_0 = from_complex_basis(c11 - out.f * omega_cx());
    return out;
}

ComplexType2 pq_decompose2(const FormG& b) {
    if (b.frame() != R7 || b.degree() != 2)
        throw std::invalid_argument("pq_decompose2: expected a 2-form on R7");
    CxSplit s = split_types(to_complex_basis(b));
    ComplexType2 out(R7);
    out.c20 = from_complex_basis(piece(s, false, 2, 0, 2));
    out.c02 = from_complex_basis(piece(s, false, 0, 2, 2));
    FormG c11 = piece(s, false, 1, 1, 2);
    out.k = omega_trace(c11);
    out.c11_0 = from_complex_basis(c11 - out.k * omega_cx());
    out.d10 = from_complex_basis(piece(s, true, 1, 0, 1));
    out.d01 = from_complex_basis(piece(s, true, 0, 1, 1));
    return out;
}

FormG ComplexType3::reassemble(const FormQ& omega) const {
    FormG dt = FormG::covector(R7, r7::Y0);
    FormG h2 = d20 + d11_0 + f * to_gaussian(omega) + d02;
    return c30 + c21 + c12 + c03 + wedge(dt, h2);
}

FormG ComplexType2::reassemble(const FormQ& omega) const {
    FormG dt = FormG::covector(R7, r7::Y0);
    FormG b2 = c20 + c11_0 + k * to_gaussian(omega) + c02;
    return b2 + wedge(dt, d10 + d01);
}

G2Type2 project_2forms(const FormG& b, const StructurePackage& pkg) {
    if (b.frame() != R7 || b.degree() != 2)
        throw std::invalid_argument("project_2forms: expected a 2-form on R7");
    auto [l7, l14] = pkg.two_form_eigenvalues();
    FormG phi = to_gaussian(pkg.phi);
    FormG tb = hodge_star(wedge(phi, b));
    GaussianRational denom(Rational(l7 - l14));
    G2Type2 out(R7);
    out.p7 = (GaussianRational(1) / denom) * (tb - GaussianRational(Rational(l14)) * b);
    out.p14 = b - out.p7;
    return out;
}

G2Type3 project_3forms(const FormG& h, const StructurePackage& pkg) {
    if (h.frame() != R7 || h.degree() != 3)
        throw std::invalid_argument("project_3forms: expected a 3-form on R7");
    FormG phi = to_gaussian(pkg.phi);
    FormG psi = to_gaussian(pkg.psi);
    G2Type3 out(R7);
    out.p1 = (form_inner_product(h, phi) / GaussianRational(7)) * phi;

    // Orthogonal projection onto {X -| psi}: solve the Gram system of the
    // basis contractions e_i -| psi.
    std::array<FormG, 7> basis{FormG(R7, 3), FormG(R7, 3), FormG(R7, 3), FormG(R7, 3),
                               FormG(R7, 3), FormG(R7, 3), FormG(R7, 3)};
    for (int i = 0; i < 7; ++i) {
        std::vector<GaussianRational> e(7, GaussianRational(0));
        e[i] = GaussianRational(1);
        basis[i] = interior_product(e, psi);
    }
    Matrix<GaussianRational> gram(7, 7);
    std::vector<GaussianRational> rhs(7, GaussianRational(0));
    for (int i = 0; i < 7; ++i) {
        for (int j = 0; j < 7; ++j) gram.at(i, j) = form_inner_product(basis[i], basis[j]);
        rhs[i] = form_inner_product(h, basis[i]);
    }
    auto coeffs = solve(gram, rhs);
    if (!coeffs) throw std::logic_error("project_3forms: Gram system inconsistent");
    out.p7 = FormG(R7, 3);
    for (int i = 0; i < 7; ++i) out.p7 += (*coeffs)[i] * basis[i];
    out.p27 = h - out.p1 - out.p7;
    return out;
}

Membership membership_27(const FormG& h, const StructurePackage& pkg) {
    ComplexType3 d = pq_decompose3(h);
    FormG omega = to_gaussian(pkg.omega3);
    const FormG& Om = pkg.Omega3;
    FormG Omb = conj_form(Om);
    GaussianRational half(Rational(1, 2));
    GaussianRational ihalf = gi() * half;

    Membership out;
    out.trace = d.f;
    FormG omega3 = wedge(omega, omega, omega);
    out.residuals.emplace_back("omega^h21 + Omega^h02/2", wedge(omega, d.c21) + half * wedge(Om, d.d02));
    out.residuals.emplace_back("omega^h12 + conj(Omega)^h20/2",
                               wedge(omega, d.c12) + half * wedge(Omb, d.d20));
    out.residuals.emplace_back("conj(Omega)^h30/2 + Omega^h03/2",
                               half * wedge(Omb, d.c30) + half * wedge(Om, d.c03));
    out.residuals.emplace_back(
        "i/2 conj(Omega)^h30 - i/2 Omega^h03 + f/2 omega^3",
        ihalf * wedge(Omb, d.c30) - ihalf * wedge(Om, d.c03) + (d.f * half) * omega3);
    out.member = true;
    for (const auto& [name, r] : out.residuals)
        if (!r.is_zero()) out.member = false;
    return out;
}

Membership membership_14(const FormG& b, const StructurePackage& pkg) {
    ComplexType2 d = pq_decompose2(b);
    FormG omega = to_gaussian(pkg.omega3);
    const FormG& Om = pkg.Omega3;
    FormG Omb = conj_form(Om);
    FormG omega2 = wedge(omega, omega);

    Membership out;
    out.trace = d.k;
    out.residuals.emplace_back("b01^omega^2 + i b20^conj(Omega)",
                               wedge(d.d01, omega2) + gi() * wedge(d.c20, Omb));
    out.residuals.emplace_back("b10^omega^2 - i b02^Omega",
                               wedge(d.d10, omega2) - gi() * wedge(d.c02, Om));
    out.member = d.k.is_zero();
    for (const auto& [name, r] : out.residuals)
        if (!r.is_zero()) out.member = false;
    return out;
}

namespace {

// Real coordinates of a complexified form on a fixed blade basis:
// (Re c_1, Im c_1, Re c_2, Im c_2, ...).
std::vector<Rational> real_coords(const FormG& a, const std::vector<Blade>& basis) {
    std::vector<Rational> out;
    out.reserve(2 * basis.size());
    for (const Blade& b : basis) {
        GaussianRational c = a.coefficient(b);
        out.push_back(c.re());
        out.push_back(c.im());
    }
    return out;
}

std::vector<Blade> cx_blades_of_type(int p, int q, bool with_dt) {
    std::vector<Blade> out;
    for (const Blade& b : blade_basis(CX, p + q + (with_dt ? 1 : 0))) {
        if (b.contains(0) != with_dt) continue;
        Blade rest = with_dt ? b.without(0) : b;
        if (pq_of(rest) == std::pair<int, int>{p, q}) out.push_back(with_dt ? rest : b);
    }
    return out;
}

// The real-linear maps L and M act on pairs of complexified pieces; both are
// assembled column by column over the real basis (blade, i*blade).
struct RealLinearMap {
    Matrix<Rational> matrix{0, 0};
    std::vector<Rational> domain_norms;  // diagonal Gram of the domain coordinates
};

template <typename ImageFn>
RealLinearMap assemble_real_map(const std::vector<std::vector<Blade>>& domain_blocks,
                                const std::vector<Blade>& codomain, ImageFn image) {
    int domain_dim = 0;
    for (const auto& blk : domain_blocks) domain_dim += 2 * static_cast<int>(blk.size());
    RealLinearMap out;
    out.matrix = Matrix<Rational>(2 * static_cast<int>(codomain.size()), domain_dim);
    out.domain_norms.reserve(domain_dim);
    int col = 0;
    for (std::size_t blk = 0; blk < domain_blocks.size(); ++blk) {
        for (const Blade& b : domain_blocks[blk]) {
            for (int part = 0; part < 2; ++part) {
                GaussianRational c = part == 0 ? GaussianRational(1) : GaussianRational::i();
                FormG arg(CX, b.degree());
                arg.add_term(b, c);
                FormG img = image(blk, arg);
                std::vector<Rational> coords = real_coords(img, codomain);
                for (std::size_t r = 0; r < coords.size(); ++r)
                    out.matrix.at(static_cast<int>(r), col) = coords[r];
                out.domain_norms.push_back(cx_blade_norm_sq(b));
                ++col;
            }
        }
    }
    return out;
}

RealLinearMap build_L(const StructurePackage&) {
    auto b21 = cx_blades_of_type(2, 1, false);
    auto b20 = cx_blades_of_type(2, 0, false);
    auto b32 = cx_blades_of_type(3, 2, false);
    FormG om = omega_cx();
    FormG Om = Omega_cx();
    GaussianRational half(Rational(1, 2));
    return assemble_real_map({b21, b20}, b32, [&](std::size_t blk, const FormG& arg) {
        if (blk == 0) return wedge(om, arg);
        return half * wedge(Om, conj_cx(arg));
    });
}

RealLinearMap build_M(const StructurePackage&) {
    auto b20 = cx_blades_of_type(2, 0, false);
    auto b10 = cx_blades_of_type(1, 0, false);
    auto b32 = cx_blades_of_type(3, 2, false);
    FormG om = omega_cx();
    FormG om2 = wedge(om, om);
    FormG Om = Omega_cx();
    return assemble_real_map({b20, b10}, b32, [&](std::size_t blk, const FormG& arg) {
        if (blk == 0) return gi() * wedge(conj_cx(arg), Om);
        return -wedge(arg, om2);
    });
}

RankReport report_of(const RealLinearMap& m) {
    RankReport r;
    r.domain_dim = m.matrix.cols();
    r.image_dim = rank(m.matrix);
    r.kernel_dim = r.domain_dim - r.image_dim;
    return r;
}

}  // namespace

RankReport rank_of_L(const StructurePackage& pkg) { return report_of(build_L(pkg)); }

RankReport rank_of_M(const StructurePackage& pkg) { return report_of(build_M(pkg)); }

int rank_of_L_on_kernel_complement(const StructurePackage& pkg) {
    RealLinearMap L = build_L(pkg);
    auto kernel = nullspace_basis(L.matrix);
    // Orthogonal complement of the kernel under the diagonal Gram of the
    // domain coordinates: x is orthogonal to every kernel vector.
    Matrix<Rational> ortho(static_cast<int>(kernel.size()), L.matrix.cols());
    for (std::size_t r = 0; r < kernel.size(); ++r)
        for (int c = 0; c < L.matrix.cols(); ++c)
            ortho.at(static_cast<int>(r), c) = kernel[r][c] * L.domain_norms[c];
    auto complement = nullspace_basis(ortho);
    Matrix<Rational> images(L.matrix.rows(), static_cast<int>(complement.size()));
    for (std::size_t c = 0; c < complement.size(); ++c) {
        std::vector<Rational> img = L.matrix.apply(complement[c]);
        for (std::size_t r = 0; r < img.size(); ++r)
            images.at(static_cast<int>(r), static_cast<int>(c)) = img[r];
    }
    return rank(images);
}

namespace {

std::vector<GaussianRational> holomorphic_basis_vector(int i) {
    // d/dz^i = (d/dx^i - i d/dy^i) / 2 as a complex vector field on R7.
    std::vector<GaussianRational> v(7, GaussianRational(0));
    v[i] = GaussianRational(Rational(1, 2));
    v[i + 4] = GaussianRational(Rational(0), Rational(-1, 2));
    return v;
}

}  // namespace

FormG canonical_eta(int i, const StructurePackage& pkg) {
    if (i < 0 || i > 2) throw std::out_of_range("canonical_eta: index");
    FormG dt = FormG::covector(R7, r7::Y0);
    FormG omega = to_gaussian(pkg.omega3);
    FormG half_omega_sq = GaussianRational(Rational(1, 2)) * wedge(omega, omega);
    auto dz = holomorphic_basis_vector(i);
    GaussianRational inv2i(Rational(0), Rational(-1, 2));  // 1/(2i)
    return wedge(dt, inv2i * interior_product(dz, pkg.Omega3)) -
           interior_product(dz, half_omega_sq);
}

FormG canonical_beta(int i, const StructurePackage& pkg) {
    if (i < 0 || i > 2) throw std::out_of_range("canonical_beta: index");
    FormG dt = FormG::covector(R7, r7::Y0);
    FormG omega = to_gaussian(pkg.omega3);
    auto dz = holomorphic_basis_vector(i);
    return GaussianRational(Rational(1, 2)) * interior_product(dz, pkg.Omega3) +
           wedge(dt, interior_product(dz, omega));
}

FormG canonical_contraction_psi(const std::array<GaussianRational, 3>& a, const Rational& h,
                                const StructurePackage& pkg) {
    FormG out = GaussianRational(-h) * to_gaussian(pkg.im_Omega3());
    for (int i = 0; i < 3; ++i) {
        FormG eta = canonical_eta(i, pkg);
        out += a[i] * eta + conj(a[i]) * conj_form(eta);
    }
    return out;
}

FormG canonical_contraction_phi(const std::array<GaussianRational, 3>& a, const Rational& h,
                                const StructurePackage& pkg) {
    FormG out = GaussianRational(-h) * to_gaussian(pkg.omega3);
    for (int i = 0; i < 3; ++i) {
        FormG beta = canonical_beta(i, pkg);
        out += a[i] * beta + conj(a[i]) * conj_form(beta);
    }
    return out;
}

std::vector<GaussianRational> model_vector_field(const std::array<GaussianRational, 3>& a,
                                                 const Rational& h) {
    std::vector<GaussianRational> v(7, GaussianRational(0));
    for (int i = 0; i < 3; ++i) {
        GaussianRational abar = conj(a[i]);
        GaussianRational half(Rational(1, 2));
        GaussianRational mihalf(Rational(0), Rational(-1, 2));
        GaussianRational pihalf(Rational(0), Rational(1, 2));
        v[i] = half * a[i] + half * abar;              // Re(a^i)
        v[i + 4] = mihalf * a[i] + pihalf * abar;      // Im(a^i)
    }
    v[r7::Y0] = GaussianRational(h);
    return v;
}

std::vector<Blade> blade_basis(const CoordinateFrame& frame, int d) {
    std::vector<Blade> out;
    const int n = frame.dimension();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
        if (std::popcount(mask) == d) out.emplace_back(mask);
    std::sort(out.begin(), out.end());
    return out;
}

Matrix<Rational> two_form_operator_matrix(const StructurePackage& pkg) {
    auto basis = blade_basis(R7, 2);
    Matrix<Rational> t(21, 21);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        FormQ b(R7, 2);
        b.add_term(basis[j], Rational(1));
        FormQ img = hodge_star(wedge(pkg.phi, b));
        for (std::size_t i = 0; i < basis.size(); ++i)
            t.at(static_cast<int>(i), static_cast<int>(j)) = img.coefficient(basis[i]);
    }
    return t;
}

ProjectorMatrices3 three_form_projector_matrices(const StructurePackage& pkg) {
    auto basis = blade_basis(R7, 3);
    ProjectorMatrices3 out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        FormG h(R7, 3);
        h.add_term(basis[j], GaussianRational(1));
        G2Type3 split = project_3forms(h, pkg);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out.p1.at(static_cast<int>(i), static_cast<int>(j)) = split.p1.coefficient(basis[i]).re();
            out.p7.at(static_cast<int>(i), static_cast<int>(j)) = split.p7.coefficient(basis[i]).re();
            out.p27.at(static_cast<int>(i), static_cast<int>(j)) =
                split.p27.coefficient(basis[i]).re();
        }
    }
    return out;
}

ProjectorMatrices2 two_form_projector_matrices(const StructurePackage& pkg) {
    auto basis = blade_basis(R7, 2);
    ProjectorMatrices2 out;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        FormG b(R7, 2);
        b.add_term(basis[j], GaussianRational(1));
        G2Type2 split = project_2forms(b, pkg);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            out.p7.at(static_cast<int>(i), static_cast<int>(j)) = split.p7.coefficient(basis[i]).re();
            out.p14.at(static_cast<int>(i), static_cast<int>(j)) =
                split.p14.coefficient(basis[i]).re();
        }
    }
    return out;
}

int real_11_traceless_dimension(const StructurePackage& pkg) {
    auto basis = blade_basis(R7, 2);
    // Constraints: all pieces except the trace-free (1,1) part vanish.
    std::vector<std::vector<Rational>> rows;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        FormG b(R7, 2);
        b.add_term(basis[j], GaussianRational(1));
        ComplexType2 d = pq_decompose2(b);
        std::vector<Rational> col;
        auto push_form = [&col](const FormG& f, const std::vector<Blade>& bl) {
            for (const Blade& x : bl) {
                col.push_back(f.coefficient(x).re());
                col.push_back(f.coefficient(x).im());
            }
        };
        auto b2 = blade_basis(R7, 2);
        auto b1 = blade_basis(R7, 1);
        push_form(d.c20, b2);
        push_form(d.c02, b2);
        push_form(d.d10, b1);
        push_form(d.d01, b1);
        col.push_back(d.k.re());
        col.push_back(d.k.im());
        rows.push_back(std::move(col));
    }
    Matrix<Rational> m(static_cast<int>(rows[0].size()), static_cast<int>(rows.size()));
    for (std::size_t j = 0; j < rows.size(); ++j)
        for (std::size_t i = 0; i < rows[j].size(); ++i)
            m.at(static_cast<int>(i), static_cast<int>(j)) = rows[j][i];
    (void)pkg;
    return 21 - rank(m);
}

}  // namespace g2kit
