#include "g2kit/verify.hpp"

#include <functional>
#include <sstream>

#include "g2kit/decomp.hpp"
#include "g2kit/diffops.hpp"
#include "g2kit/form_io.hpp"

namespace g2kit {

namespace {

const CoordinateFrame& R7 = CoordinateFrame::r7();
const CoordinateFrame& R8 = CoordinateFrame::r8();

struct SignedSeq {
    int sign;
    std::vector<int> seq;
};

FormQ form_from_table(const CoordinateFrame& fr, int degree, const std::vector<SignedSeq>& rows) {
    FormQ f(fr, degree);
    for (const auto& r : rows) f += FormQ::monomial(fr, r.seq, Rational(r.sign));
    return f;
}

}  // namespace

FormQ reference_phi(Convention c) {
    // R7 indices: 0 x1, 1 x2, 2 x3, 3 y0, 4 y1, 5 y2, 6 y3.
    if (c == Convention::CayleyDickson) {
        // dx1dx2dx3 - dx1dy2dy3 - dy1dx2dy3 - dy1dy2dx3
        //          - dy0dx1dy1 - dy0dx2dy2 - dy0dx3dy3
        return form_from_table(R7, 3,
                               {{+1, {0, 1, 2}},
                                {-1, {0, 5, 6}},
                                {-1, {4, 1, 6}},
                                {-1, {4, 5, 2}},
                                {-1, {3, 0, 4}},
                                {-1, {3, 1, 5}},
                                {-1, {3, 2, 6}}});
    }
    // vol3 - dx1 eta+_1 - dx2 eta+_2 - dx3 eta+_3
    return form_from_table(R7, 3,
                           {{+1, {0, 1, 2}},
                            {-1, {0, 3, 4}},
                            {-1, {0, 5, 6}},
                            {-1, {1, 3, 5}},
                            {-1, {1, 6, 4}},
                            {-1, {2, 3, 6}},
                            {-1, {2, 4, 5}}});
}

FormQ reference_psi(Convention c) {
    if (c == Convention::CayleyDickson) {
        // dy0dy1dy2dy3 - dy0dy1dx2dx3 - dy0dx1dy2dx3 - dy0dx1dx2dy3
        //             - dx2dy2dx3dy3 - dx3dy3dx1dy1 - dx1dy1dx2dy2
        return form_from_table(R7, 4,
                               {{+1, {3, 4, 5, 6}},
                                {-1, {3, 4, 1, 2}},
                                {-1, {3, 0, 5, 2}},
                                {-1, {3, 0, 1, 6}},
                                {-1, {1, 5, 2, 6}},
                                {-1, {2, 6, 0, 4}},
                                {-1, {0, 4, 1, 5}}});
    }
    // vol4 - dx1dx2 eta+_3 - dx2dx3 eta+_1 - dx3dx1 eta+_2
    return form_from_table(R7, 4,
                           {{+1, {3, 4, 5, 6}},
                            {-1, {0, 1, 3, 6}},
                            {-1, {0, 1, 4, 5}},
                            {-1, {1, 2, 3, 4}},
                            {-1, {1, 2, 5, 6}},
                            {-1, {2, 0, 3, 5}},
                            {-1, {2, 0, 6, 4}}});
}

FormQ reference_big_phi() {
    // R8 indices: 0 x0, 1 x1, 2 x2, 3 x3, 4 y0, 5 y1, 6 y2, 7 y3.
    return form_from_table(R8, 4,
                           {{+1, {0, 1, 2, 3}},
                            {-1, {0, 1, 6, 7}},
                            {-1, {0, 5, 2, 7}},
                            {-1, {0, 5, 6, 3}},
                            {-1, {0, 4, 1, 5}},
                            {-1, {0, 4, 2, 6}},
                            {-1, {0, 4, 3, 7}},
                            {+1, {4, 5, 6, 7}},
                            {-1, {4, 5, 2, 3}},
                            {-1, {4, 1, 6, 3}},
                            {-1, {4, 1, 2, 7}},
                            {-1, {2, 6, 3, 7}},
                            {-1, {3, 7, 1, 5}},
                            {-1, {1, 5, 2, 6}}});
}

bool valid_suite_name(const std::string& s) {
    return s == "g2" || s == "spin7" || s == "cy3" || s == "diffops" || s == "all";
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

namespace {

class Checker {
public:
    explicit Checker(std::string suite) : suite_(std::move(suite)) {}

    void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& fn) {
        CheckResult r;
        r.suite = suite_;
        r.name = name;
        try {
            auto [ok, detail] = fn();
            r.pass = ok;
            r.detail = ok ? std::string() : detail;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results_.push_back(std::move(r));
    }

    void simple(const std::string& name, bool ok, const std::string& detail) {
        results_.push_back({suite_, name, ok, ok ? std::string() : detail});
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

std::pair<bool, std::string> ok() { return {true, {}}; }
std::pair<bool, std::string> fail(const std::string& d) { return {false, d}; }

std::pair<bool, std::string> expect_form_eq(const FormQ& got, const FormQ& want,
                                            const std::string& what) {
    if (got == want) return ok();
    return fail(what + ": got " + form_to_text(got) + " ; expected " + form_to_text(want));
}

std::pair<bool, std::string> expect_form_eq(const FormG& got, const FormG& want,
                                            const std::string& what) {
    if (got == want) return ok();
    return fail(what + ": got " + form_to_text(got) + " ; expected " + form_to_text(want));
}

StructurePackage corrupted_package(Convention c, const VerifyOptions& opt) {
    StructurePackage pkg = build_package(c);
    if (opt.corrupt_phi_blade) pkg.phi = corrupt_blade_sign(pkg.phi, *opt.corrupt_phi_blade);
    if (opt.corrupt_psi_blade) pkg.psi = corrupt_blade_sign(pkg.psi, *opt.corrupt_psi_blade);
    return pkg;
}

// Alternating tensor lookup from a stored ascending-blade form.
int tensor3(const FormQ& f, int i, int j, int k) {
    auto bs = blade_from_sequence({i, j, k});
    if (!bs) return 0;
    Rational c = f.coefficient(bs->first);
    if (c.is_zero()) return 0;
    int v = c.sign() > 0 ? 1 : -1;  // entries are +-1 here
    return bs->second * v;
}

int tensor4(const FormQ& f, int i, int j, int k, int l) {
    auto bs = blade_from_sequence({i, j, k, l});
    if (!bs) return 0;
    Rational c = f.coefficient(bs->first);
    if (c.is_zero()) return 0;
    int v = c.sign() > 0 ? 1 : -1;
    return bs->second * v;
}

std::vector<Rational> basis_vec(int i) {
    std::vector<Rational> v(7, Rational(0));
    v[i] = Rational(1);
    return v;
}

std::array<Rational, 7> random_vec7(PolySampler& gen) {
    std::array<Rational, 7> v;
    for (auto& x : v) x = Rational(gen.uniform_int(-3, 3));
    return v;
}

Rational dot7(const std::array<Rational, 7>& a, const std::array<Rational, 7>& b) {
    Rational acc(0);
    for (int i = 0; i < 7; ++i) acc += a[i] * b[i];
    return acc;
}

// Cross product contracted from an explicit 3-form (possibly corrupted).
std::array<Rational, 7> cross_from_form(const FormQ& phi, const std::array<Rational, 7>& u,
                                        const std::array<Rational, 7>& v) {
    std::array<Rational, 7> out{};
    for (auto& x : out) x = Rational(0);
    for (int i = 0; i < 7; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < 7; ++j) {
            if (v[j].is_zero()) continue;
            for (int k = 0; k < 7; ++k) {
                int s = tensor3(phi, i, j, k);
                if (s == 0) continue;
                Rational term = u[i] * v[j];
                out[k] += s < 0 ? -term : term;
            }
        }
    }
    return out;
}

FormG random_gaussian_form(PolySampler& gen, int degree) {
    FormG f(R7, degree);
    for (const Blade& b : blade_basis(R7, degree)) {
        GaussianRational c(Rational(gen.uniform_int(-3, 3)), Rational(gen.uniform_int(-3, 3)));
        f.add_term(b, c);
    }
    return f;
}

// ---------------------------------------------------------------------------
// g2 suite
// ---------------------------------------------------------------------------

void run_g2(Checker& c, const VerifyOptions& opt) {
    for (Convention conv : {Convention::CayleyDickson, Convention::Opposite}) {
        StructurePackage pkg = corrupted_package(conv, opt);
        std::string tag = std::string("[") + convention_name(conv) + "] ";

        c.check(tag + "phi-matches-printed-table",
                [&] { return expect_form_eq(pkg.phi, reference_phi(conv), "phi table"); });
        c.check(tag + "psi-matches-printed-table",
                [&] { return expect_form_eq(pkg.psi, reference_psi(conv), "psi table"); });
        c.check(tag + "psi-is-star-phi",
                [&] { return expect_form_eq(hodge_star(pkg.phi), pkg.psi, "star(phi)"); });
        c.check(tag + "phi-wedge-psi-is-7-vol7", [&] {
            return expect_form_eq(wedge(pkg.phi, pkg.psi), Rational(7) * vol7_r7(), "phi^psi");
        });
        c.check(tag + "phi-norm-squared-is-7", [&] {
            Rational n = form_inner_product(pkg.phi, pkg.phi);
            return n == Rational(7) ? ok() : fail("<phi,phi> = " + n.str());
        });
        c.check(tag + "metric-extraction", [&] {
            MetricExtraction me = metric_from_phi(pkg.phi, conv);
            Rational nz(pkg.metric_normalizer());
            for (int u = 0; u < 7; ++u)
                for (int v = u; v < 7; ++v) {
                    Rational want = (u == v) ? nz : Rational(0);
                    if (me.bilinear.at(u, v) != want)
                        return fail("pair (" + std::to_string(u) + "," + std::to_string(v) +
                                    "): B = " + me.bilinear.at(u, v).str() + ", expected " +
                                    want.str());
                }
            if (me.signature != std::pair<int, int>{7, 0}) return fail("metric not (7,0)");
            return ok();
        });
        c.check(tag + "two-form-operator-eigen-dimensions", [&] {
            Matrix<Rational> t = two_form_operator_matrix(pkg);
            auto [l7, l14] = pkg.two_form_eigenvalues();
            Matrix<Rational> a = t - Rational(l7) * Matrix<Rational>::identity(21);
            Matrix<Rational> b = t - Rational(l14) * Matrix<Rational>::identity(21);
            int d7 = 21 - rank(a);
            int d14 = 21 - rank(b);
            if (d7 != 7 || d14 != 14)
                return fail("eigenspace dims " + std::to_string(d7) + "/" + std::to_string(d14));
            return ok();
        });

        // Cross-product identities, contracted from the package's own forms.
        PolySampler gen(opt.seed + 11, 0);
        c.check(tag + "cross-antisymmetry-orthogonality-norm", [&] {
            for (int rep = 0; rep < 25; ++rep) {
                auto u = random_vec7(gen);
                auto v = random_vec7(gen);
                auto uv = cross_from_form(pkg.phi, u, v);
                auto vu = cross_from_form(pkg.phi, v, u);
                for (int i = 0; i < 7; ++i)
                    if (uv[i] != -vu[i]) return fail("antisymmetry, rep " + std::to_string(rep));
                if (!dot7(uv, u).is_zero() || !dot7(uv, v).is_zero())
                    return fail("orthogonality, rep " + std::to_string(rep));
                Rational lhs = dot7(uv, uv);
                Rational rhs = dot7(u, u) * dot7(v, v) - dot7(u, v) * dot7(u, v);
                if (lhs != rhs) return fail("norm identity, rep " + std::to_string(rep));
            }
            return ok();
        });
        c.check(tag + "cross-iterated-identity", [&] {
            // X x (Y x Z) = -<X,Y>Z + <X,Z>Y -+ (X -| Y -| Z -| psi)#
            // (minus in the CayleyDickson convention, plus in the Opposite).
            const int psign = (conv == Convention::CayleyDickson) ? -1 : 1;
            for (int x = 0; x < 7; ++x)
                for (int y = 0; y < 7; ++y)
                    for (int z = 0; z < 7; ++z) {
                        std::array<Rational, 7> ex{}, ey{}, ez{};
                        for (int i = 0; i < 7; ++i) ex[i] = ey[i] = ez[i] = Rational(0);
                        ex[x] = ey[y] = ez[z] = Rational(1);
                        auto lhs = cross_from_form(pkg.phi, ex, cross_from_form(pkg.phi, ey, ez));
                        for (int i = 0; i < 7; ++i) {
                            Rational rhs(0);
                            if (i == z && x == y) rhs -= Rational(1);
                            if (i == y && x == z) rhs += Rational(1);
                            rhs += Rational(psign * tensor4(pkg.psi, z, y, x, i));
                            if (lhs[i] != rhs)
                                return fail("basis triple (" + std::to_string(x) + "," +
                                            std::to_string(y) + "," + std::to_string(z) + ")");
                        }
                    }
            return ok();
        });
        c.check(tag + "phi-phi-contraction-identity", [&] {
            // phi_{ijk} phi_{abc} g^{kc} = g_ia g_jb - g_ib g_ja -+ psi_{ijab}.
            const int psign = (conv == Convention::CayleyDickson) ? -1 : 1;
            for (int i = 0; i < 7; ++i)
                for (int j = 0; j < 7; ++j)
                    for (int a = 0; a < 7; ++a)
                        for (int b = 0; b < 7; ++b) {
                            int lhs = 0;
                            for (int k = 0; k < 7; ++k)
                                lhs += tensor3(pkg.phi, i, j, k) * tensor3(pkg.phi, a, b, k);
                            int rhs = (i == a && j == b ? 1 : 0) - (i == b && j == a ? 1 : 0) +
                                      psign * tensor4(pkg.psi, i, j, a, b);
                            if (lhs != rhs)
                                return fail("indices (" + std::to_string(i) + "," +
                                            std::to_string(j) + "," + std::to_string(a) + "," +
                                            std::to_string(b) + ")");
                        }
            return ok();
        });

        // Presentations must recombine exactly.
        const std::pair<PresentationKind, const char*> kinds[] = {
            {PresentationKind::C3PlusR, "c3+r"},
            {PresentationKind::R3PlusR4, "r3+r4"},
            {PresentationKind::C4, "c4"},
            {PresentationKind::R4PlusR4, "r4+r4"}};
        for (const auto& [kind, kind_name] : kinds) {
            c.check(tag + "presentation-recombines-" + kind_name, [&] {
                Presentation p = presentation(pkg, kind);
                if (!p.phi_parts.empty()) {
                    FormQ sum(R7, 3);
                    for (const auto& lf : p.phi_parts) sum += lf.form;
                    if (sum != pkg.phi) return fail("phi parts do not sum to phi");
                }
                if (!p.psi_parts.empty()) {
                    FormQ sum(R7, 4);
                    for (const auto& lf : p.psi_parts) sum += lf.form;
                    if (sum != pkg.psi) return fail("psi parts do not sum to psi");
                }
                if (!p.big_phi_parts.empty()) {
                    FormQ sum(R8, 4);
                    for (const auto& lf : p.big_phi_parts) sum += lf.form;
                    if (sum != pkg.big_phi) return fail("4-form parts do not sum");
                }
                return ok();
            });
        }
        c.check(tag + "theta-presentation", [&] {
            FormP expect = to_polynomial(vol3_r7()) + exterior_derivative(theta_form(conv));
            return expect == to_polynomial(pkg.phi) ? ok() : fail("vol3 + d theta != phi");
        });
    }

    // Convention-independent pieces.
    StructurePackage pkg = corrupted_package(Convention::CayleyDickson, opt);
    c.check("eta-bases-duality", [&] {
        // Anti-self-dual vs self-dual under *_4 on the y-block / x-block.
        std::vector<FormQ> yimg, ximg;
        for (int m = 0; m < 7; ++m) {
            int to = m - 3;  // y-block of R7 -> Y4
            yimg.push_back(m >= 3 ? FormQ::covector(CoordinateFrame::y_block(), to)
                                  : FormQ(CoordinateFrame::y_block(), 1));
        }
        for (int m = 0; m < 8; ++m)
            ximg.push_back(m < 4 ? FormQ::covector(CoordinateFrame::x_block(), m)
                                 : FormQ(CoordinateFrame::x_block(), 1));
        for (int i = 0; i < 3; ++i) {
            FormQ em = substitute_covectors(pkg.eta_minus[i], CoordinateFrame::y_block(), yimg);
            FormQ ep = substitute_covectors(pkg.eta_plus[i], CoordinateFrame::y_block(), yimg);
            if (hodge_star(em) != -em) return fail("eta-: not anti-self-dual");
            if (hodge_star(ep) != ep) return fail("eta+: not self-dual");
            FormQ bm = substitute_covectors(pkg.beta_minus[i], CoordinateFrame::x_block(), ximg);
            FormQ bp = substitute_covectors(pkg.beta_plus[i], CoordinateFrame::x_block(), ximg);
            if (hodge_star(bm) != -bm) return fail("beta-: not anti-self-dual");
            if (hodge_star(bp) != bp) return fail("beta+: not self-dual");
        }
        return ok();
    });
    c.check("split-forms-signature", [&] {
        for (SplitVariant v : {SplitVariant::MinusEtaMinus, SplitVariant::PlusEtaPlus}) {
            MetricExtraction me = metric_from_phi(build_split_phi(v), Convention::CayleyDickson);
            auto sig = me.signature;
            if (!((sig.first == 3 && sig.second == 4) || (sig.first == 4 && sig.second == 3)))
                return fail("signature (" + std::to_string(sig.first) + "," +
                            std::to_string(sig.second) + ")");
        }
        return ok();
    });
}

// ---------------------------------------------------------------------------
// spin7 suite
// ---------------------------------------------------------------------------

void run_spin7(Checker& c, const VerifyOptions& opt) {
    for (Convention conv : {Convention::CayleyDickson, Convention::Opposite}) {
        StructurePackage pkg = corrupted_package(conv, opt);
        std::string tag = std::string("[") + convention_name(conv) + "] ";
        if (conv == Convention::CayleyDickson) {
            c.check(tag + "4form-matches-printed-table", [&] {
                return expect_form_eq(pkg.big_phi, reference_big_phi(), "4-form table");
            });
        }
        c.check(tag + "4form-is-dx0-phi-plus-psi", [&] {
            FormQ expect =
                wedge(FormQ::covector(R8, r8::X0), lift_r7_to_r8(pkg.phi)) + lift_r7_to_r8(pkg.psi);
            return expect_form_eq(pkg.big_phi, expect, "dx0^phi + psi");
        });
        c.check(tag + "4form-self-dual", [&] {
            return expect_form_eq(hodge_star(pkg.big_phi), pkg.big_phi, "star8");
        });
        c.check(tag + "4form-squared-is-14-vol8", [&] {
            return expect_form_eq(wedge(pkg.big_phi, pkg.big_phi), Rational(14) * vol8_r8(),
                                  "square");
        });
    }

    c.check("octonion-unit-and-e-squared", [&] {
        using OQ = Octonion<Rational>;
        OQ one = OQ::basis(0);
        OQ e = OQ::basis(4);
        PolySampler gen(opt.seed + 23, 0);
        std::array<Rational, 8> comp;
        for (auto& x : comp) x = Rational(gen.uniform_int(-3, 3));
        OQ q = OQ::from_components(comp);
        if (one * q != q || q * one != q) return fail("1 is not the unit");
        if (e * e != -one) return fail("e*e != -1");
        return ok();
    });
    c.check("octonion-norm-multiplicative", [&] {
        using OQ = Octonion<Rational>;
        PolySampler gen(opt.seed + 29, 0);
        for (int rep = 0; rep < 50; ++rep) {
            std::array<Rational, 8> pa, qa;
            for (auto& x : pa) x = Rational(gen.uniform_int(-3, 3));
            for (auto& x : qa) x = Rational(gen.uniform_int(-3, 3));
            OQ p = OQ::from_components(pa), q = OQ::from_components(qa);
            if (octonion_norm_sq(p * q) != octonion_norm_sq(p) * octonion_norm_sq(q))
                return fail("rep " + std::to_string(rep));
        }
        return ok();
    });
    c.check("associator-alternating", [&] {
        using OQ = Octonion<Rational>;
        PolySampler gen(opt.seed + 31, 0);
        for (int rep = 0; rep < 20; ++rep) {
            std::array<Rational, 8> xa, ya, za;
            for (auto& v : xa) v = Rational(gen.uniform_int(-3, 3));
            for (auto& v : ya) v = Rational(gen.uniform_int(-3, 3));
            for (auto& v : za) v = Rational(gen.uniform_int(-3, 3));
            OQ x = OQ::from_components(xa), y = OQ::from_components(ya), z = OQ::from_components(za);
            if (!associator(x, x, z).is_zero() || !associator(x, z, z).is_zero())
                return fail("repeated-argument associator nonzero");
            if (associator(x, y, z) != -associator(y, x, z)) return fail("not antisymmetric");
        }
        return ok();
    });
    c.check("triple-cross-alternating-orthogonal", [&] {
        using OQ = Octonion<Rational>;
        PolySampler gen(opt.seed + 37, 0);
        for (int rep = 0; rep < 20; ++rep) {
            std::array<Rational, 8> xa, ya, za;
            for (auto& v : xa) v = Rational(gen.uniform_int(-3, 3));
            for (auto& v : ya) v = Rational(gen.uniform_int(-3, 3));
            for (auto& v : za) v = Rational(gen.uniform_int(-3, 3));
            OQ x = OQ::from_components(xa), y = OQ::from_components(ya), z = OQ::from_components(za);
            if (!triple_cross(x, x, z).is_zero() || !triple_cross(x, z, z).is_zero())
                return fail("not alternating");
            OQ t = triple_cross(x, y, z);
            if (!octonion_inner(t, x).is_zero() || !octonion_inner(t, y).is_zero() ||
                !octonion_inner(t, z).is_zero())
                return fail("not orthogonal to arguments");
        }
        return ok();
    });
}

// ---------------------------------------------------------------------------
// cy3 suite
// ---------------------------------------------------------------------------

FormQ restrict_to_slice(const FormQ& a) {
    // R7 supported away from y0 -> C3 slice frame (x1,y1,x2,y2,x3,y3).
    static const int to_slice[7] = {0, 2, 4, -1, 1, 3, 5};
    std::vector<FormQ> images;
    for (int m = 0; m < 7; ++m) {
        if (to_slice[m] < 0) {
            images.push_back(FormQ(CoordinateFrame::c3_slice(), 1));
        } else {
            images.push_back(FormQ::covector(CoordinateFrame::c3_slice(), to_slice[m]));
        }
    }
    for (const auto& [b, coeff] : a.terms())
        if (b.contains(r7::Y0))
            throw std::invalid_argument("restrict_to_slice: form touches y0");
    return substitute_covectors(a, CoordinateFrame::c3_slice(), images);
}

void run_cy3(Checker& c, const VerifyOptions& opt) {
    StructurePackage pkg = corrupted_package(Convention::CayleyDickson, opt);
    StructurePackage opp = corrupted_package(Convention::Opposite, opt);
    FormG omega = to_gaussian(pkg.omega3);
    const FormG& Om = pkg.Omega3;
    FormG Omb = conj_form(Om);
    FormQ ReOm = pkg.re_Omega3();
    FormQ ImOm = pkg.im_Omega3();
    FormQ dt = FormQ::covector(R7, r7::Y0);

    c.check("kaehler-holomorphic-relations", [&] {
        if (!wedge(omega, Om).is_zero()) return fail("omega^Omega != 0");
        if (!wedge(omega, Omb).is_zero()) return fail("omega^conj(Omega) != 0");
        if (!wedge(pkg.omega3, ReOm).is_zero()) return fail("omega^Re != 0");
        if (!wedge(pkg.omega3, ImOm).is_zero()) return fail("omega^Im != 0");
        FormQ omega3 = wedge(pkg.omega3, pkg.omega3, pkg.omega3);
        if (Rational(1, 6) * omega3 != vol6_r7()) return fail("omega^3/6 != vol6");
        FormG i8 = GaussianRational(Rational(0), Rational(1, 8)) * wedge(Om, Omb);
        if (i8 != to_gaussian(vol6_r7())) return fail("i/8 Omega^conj != vol6");
        if (form_inner_product(ReOm, ReOm) != Rational(4)) return fail("|Re|^2 != 4");
        if (form_inner_product(ImOm, ImOm) != Rational(4)) return fail("|Im|^2 != 4");
        if (form_inner_product(pkg.omega3, pkg.omega3) != Rational(3)) return fail("<omega,omega> != 3");
        if (wedge(ReOm, ImOm) != Rational(4) * vol6_r7()) return fail("Re^Im != 4 vol6");
        if (wedge(dt, vol6_r7()) != vol7_r7()) return fail("vol7 != dt^vol6");
        return ok();
    });
    c.check("slice-hodge-star", [&] {
        FormQ re6 = restrict_to_slice(ReOm);
        FormQ im6 = restrict_to_slice(ImOm);
        if (hodge_star(re6) != im6) return fail("*6 Re != Im");
        if (hodge_star(im6) != -re6) return fail("*6 Im != -Re");
        return ok();
    });
    c.check("interior-dt-contraction-sign", [&] {
        // Direct contraction pins the sign: dt -| phi = -omega in the
        // CayleyDickson convention and +omega in the Opposite one.
        std::vector<Rational> ddt = basis_vec(r7::Y0);
        if (interior_product(ddt, pkg.phi) != -pkg.omega3) return fail("cd: dt -| phi != -omega");
        if (interior_product(ddt, opp.phi) != opp.omega3) return fail("opposite: dt -| phi != omega");
        if (interior_product(ddt, pkg.psi) != -ImOm) return fail("cd: dt -| psi != -Im(Omega)");
        return ok();
    });

    c.check("pq-decompose-known-forms", [&] {
        ComplexType3 re = pq_decompose3(to_gaussian(ReOm));
        GaussianRational half(Rational(1, 2));
        if (re.c30 != half * Om || re.c03 != half * Omb) return fail("Re(Omega) pieces wrong");
        if (!re.c21.is_zero() || !re.c12.is_zero() || !re.f.is_zero() || !re.d20.is_zero() ||
            !re.d11_0.is_zero() || !re.d02.is_zero())
            return fail("Re(Omega) has spurious pieces");

        ComplexType3 dto = pq_decompose3(to_gaussian(wedge(dt, pkg.omega3)));
        if (dto.f != GaussianRational(1)) return fail("dt^omega: f != 1");
        if (!dto.d11_0.is_zero() || !dto.c30.is_zero() || !dto.c21.is_zero() || !dto.d20.is_zero())
            return fail("dt^omega has spurious pieces");

        // dz1 ^ dzbar1 = -2i dx1 dy1: nonzero trace and trace-free parts.
        FormG dz11(R7, 2);
        dz11.add_term(Blade({0, 4}), GaussianRational(Rational(0), Rational(-2)));
        ComplexType2 d = pq_decompose2(dz11);
        if (d.k != GaussianRational(Rational(0), Rational(-2, 3))) return fail("trace of dz1^dzbar1");
        if (d.c11_0.is_zero()) return fail("trace-free part vanished");
        if (d.reassemble(pkg.omega3) != dz11) return fail("recombination failed");
        return ok();
    });

    c.check("pq-conjugate-symmetry", [&] {
        PolySampler gen(opt.seed + 41, 0);
        for (int rep = 0; rep < 10; ++rep) {
            FormQ h(R7, 3);
            for (const Blade& b : blade_basis(R7, 3))
                h.add_term(b, Rational(gen.uniform_int(-3, 3)));
            ComplexType3 d = pq_decompose3(to_gaussian(h));
            if (d.c12 != conj_form(d.c21) || d.c03 != conj_form(d.c30) ||
                d.d02 != conj_form(d.d20) || conj(d.f) != d.f)
                return fail("conjugate symmetry, rep " + std::to_string(rep));
            if (d.reassemble(pkg.omega3) != to_gaussian(h)) return fail("reassemble");
        }
        return ok();
    });

    c.check("projector-identities-random", [&] {
        PolySampler gen(opt.seed + 43, 0);
        auto [l7, l14] = pkg.two_form_eigenvalues();
        for (int rep = 0; rep < 8; ++rep) {
            FormG b = random_gaussian_form(gen, 2);
            G2Type2 s = project_2forms(b, pkg);
            if (s.p7 + s.p14 != b) return fail("2-form components do not sum");
            G2Type2 s7 = project_2forms(s.p7, pkg);
            if (s7.p7 != s.p7 || !s7.p14.is_zero()) return fail("p7 not idempotent/orthogonal");
            if (!form_inner_product(s.p7, s.p14).is_zero()) return fail("p7 not orthogonal to p14");
            FormG t7 = hodge_star(wedge(to_gaussian(pkg.phi), s.p7));
            if (t7 != GaussianRational(Rational(l7)) * s.p7) return fail("eigenvalue on p7");
            FormG t14 = hodge_star(wedge(to_gaussian(pkg.phi), s.p14));
            if (t14 != GaussianRational(Rational(l14)) * s.p14) return fail("eigenvalue on p14");

            FormG h = random_gaussian_form(gen, 3);
            G2Type3 s3 = project_3forms(h, pkg);
            if (s3.p1 + s3.p7 + s3.p27 != h) return fail("3-form components do not sum");
            if (!form_inner_product(s3.p1, s3.p7).is_zero() ||
                !form_inner_product(s3.p1, s3.p27).is_zero() ||
                !form_inner_product(s3.p7, s3.p27).is_zero())
                return fail("3-form components not orthogonal");
            G2Type3 s27 = project_3forms(s3.p27, pkg);
            if (s27.p27 != s3.p27 || !s27.p1.is_zero() || !s27.p7.is_zero())
                return fail("p27 not idempotent");
            if (!wedge(s3.p27, to_gaussian(pkg.phi)).is_zero() ||
                !wedge(s3.p27, to_gaussian(pkg.psi)).is_zero())
                return fail("p27 wedge conditions");
        }
        return ok();
    });

    c.check("eigenvalue-flip-opposite", [&] {
        PolySampler gen(opt.seed + 47, 0);
        auto [l7, l14] = opp.two_form_eigenvalues();
        if (l7 != 2 || l14 != -1) return fail("expected +2/-1");
        for (int rep = 0; rep < 5; ++rep) {
            FormG b = random_gaussian_form(gen, 2);
            G2Type2 s = project_2forms(b, opp);
            FormG t7 = hodge_star(wedge(to_gaussian(opp.phi), s.p7));
            if (t7 != GaussianRational(Rational(l7)) * s.p7) return fail("+2 eigenvalue");
            FormG t14 = hodge_star(wedge(to_gaussian(opp.phi), s.p14));
            if (t14 != GaussianRational(Rational(l14)) * s.p14) return fail("-1 eigenvalue");
        }
        return ok();
    });

    c.check("known-memberships", [&] {
        FormG omegaG = to_gaussian(pkg.omega3);
        G2Type2 sw = project_2forms(omegaG, pkg);
        if (!sw.p14.is_zero() || sw.p7 != omegaG) return fail("omega not purely in the 7-part");
        Membership m14 = membership_14(omegaG, pkg);
        if (m14.member) return fail("omega reported in the 14-part");
        if (m14.trace != GaussianRational(1)) return fail("omega trace k != 1");

        FormG im = to_gaussian(ImOm);
        G2Type3 si = project_3forms(im, pkg);
        if (!si.p1.is_zero() || !si.p27.is_zero() || si.p7 != im)
            return fail("Im(Omega) not purely in the 7-part");

        FormG r43 = to_gaussian(ReOm + Rational(4, 3) * wedge(dt, pkg.omega3));
        G2Type3 sr = project_3forms(r43, pkg);
        if (!sr.p1.is_zero() || !sr.p7.is_zero() || sr.p27 != r43)
            return fail("Re(Omega)+4/3 dt^omega not purely in the 27-part");
        if (!membership_27(r43, pkg).member) return fail("membership test rejects it");

        FormG phiG = to_gaussian(pkg.phi);
        G2Type3 sp = project_3forms(phiG, pkg);
        if (sp.p1 != phiG || !sp.p7.is_zero() || !sp.p27.is_zero())
            return fail("phi not purely in the 1-part");
        if (membership_27(phiG, pkg).member) return fail("phi accepted by the 27-membership");

        // A real trace-free (1,1) form: dx1 dy1 - dx2 dy2.
        FormQ t0(R7, 2);
        t0.add_term(Blade({0, 4}), Rational(1));
        t0.add_term(Blade({1, 5}), Rational(-1));
        FormG t0g = to_gaussian(t0);
        if (!membership_14(t0g, pkg).member) return fail("(1,1)_0 not accepted by 14-membership");
        G2Type2 st = project_2forms(t0g, pkg);
        if (!st.p7.is_zero() || st.p14 != t0g) return fail("(1,1)_0 not purely in the 14-part");
        FormG dt11 = wedge(to_gaussian(dt), t0g);
        if (!membership_27(dt11, pkg).member) return fail("dt^(1,1)_0 not in the 27-part");
        G2Type3 s11 = project_3forms(dt11, pkg);
        if (!s11.p1.is_zero() || !s11.p7.is_zero()) return fail("dt^(1,1)_0 has 1/7 parts");
        return ok();
    });

    c.check("membership-projector-equivalence-random", [&] {
        PolySampler gen(opt.seed + 53, 0);
        const int n = std::max(1, opt.trials);
        for (int rep = 0; rep < n; ++rep) {
            FormG h = random_gaussian_form(gen, 3);
            G2Type3 s = project_3forms(h, pkg);
            bool proj_in_27 = s.p1.is_zero() && s.p7.is_zero();
            if (membership_27(h, pkg).member != proj_in_27)
                return fail("3-form equivalence, rep " + std::to_string(rep));
            if (!membership_27(s.p27, pkg).member)
                return fail("p27 component rejected, rep " + std::to_string(rep));

            FormG b = random_gaussian_form(gen, 2);
            G2Type2 s2 = project_2forms(b, pkg);
            if (membership_14(b, pkg).member != s2.p7.is_zero())
                return fail("2-form equivalence, rep " + std::to_string(rep));
            if (!membership_14(s2.p14, pkg).member)
                return fail("p14 component rejected, rep " + std::to_string(rep));
        }
        return ok();
    });

    c.check("solved-2-0-piece-lands-in-14", [&] {
        // For a random (1,0) piece, solve i conj(b20)^Omega = b10^omega^2
        // for b20; the assembled real form must pass the 14-membership.
        PolySampler gen(opt.seed + 59, 0);
        FormG b10(R7, 1);
        {
            // A (1,0)-form a dz1 + b dz2 + c dz3 in real coordinates.
            for (int j = 0; j < 3; ++j) {
                GaussianRational a(Rational(gen.uniform_int(-3, 3)), Rational(gen.uniform_int(-3, 3)));
                FormG dz = FormG::covector(R7, j) + GaussianRational::i() * FormG::covector(R7, j + 4);
                b10 += a * dz;
            }
        }
        FormG om2 = wedge(omega, omega);
        FormG rhs = wedge(b10, om2);
        // Unknown b20 = sum over (2,0) blades; 3 complex unknowns.
        std::array<FormG, 3> basis20 = {FormG(R7, 2), FormG(R7, 2), FormG(R7, 2)};
        int idx = 0;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                FormG dzp = FormG::covector(R7, p) + GaussianRational::i() * FormG::covector(R7, p + 4);
                FormG dzq = FormG::covector(R7, q) + GaussianRational::i() * FormG::covector(R7, q + 4);
                basis20[idx++] = wedge(dzp, dzq);
            }
        // The map b20 |-> i conj(b20) ^ Omega is anti-linear: solve the linear
        // system in y_j = conj(x_j), then conjugate back.
        std::vector<Blade> five = blade_basis(R7, 5);
        Matrix<GaussianRational> a(static_cast<int>(five.size()), 3);
        std::vector<GaussianRational> r(five.size(), GaussianRational(0));
        for (int j = 0; j < 3; ++j) {
            FormG img = GaussianRational::i() * wedge(conj_form(basis20[j]), Om);
            for (std::size_t i = 0; i < five.size(); ++i) a.at(static_cast<int>(i), j) = img.coefficient(five[i]);
        }
        for (std::size_t i = 0; i < five.size(); ++i) r[i] = rhs.coefficient(five[i]);
        auto y = solve(a, r);
        if (!y) return fail("no solution for b20");
        FormG b20(R7, 2);
        for (int j = 0; j < 3; ++j) b20 += conj((*y)[j]) * basis20[j];
        FormG real2 = b20 + conj_form(b20) + wedge(to_gaussian(dt), b10 + conj_form(b10));
        Membership m = membership_14(real2, pkg);
        if (!m.member) return fail("solved form rejected by the 14-membership");
        return ok();
    });

    c.check("L-M-ranks-and-dimensions", [&] {
        RankReport L = rank_of_L(pkg);
        if (L.domain_dim != 24 || L.kernel_dim != 18 || L.image_dim != 6)
            return fail("L: " + std::to_string(L.domain_dim) + "/" + std::to_string(L.kernel_dim) +
                        "/" + std::to_string(L.image_dim));
        RankReport M = rank_of_M(pkg);
        if (M.domain_dim != 12 || M.kernel_dim != 6 || M.image_dim != 6)
            return fail("M: " + std::to_string(M.domain_dim) + "/" + std::to_string(M.kernel_dim) +
                        "/" + std::to_string(M.image_dim));
        if (rank_of_L_on_kernel_complement(pkg) != 6)
            return fail("L restricted to the kernel complement is not injective");

        ProjectorMatrices3 p3 = three_form_projector_matrices(pkg);
        int r1 = rank(p3.p1), r7d = rank(p3.p7), r27 = rank(p3.p27);
        if (r1 != 1 || r7d != 7 || r27 != 27)
            return fail("3-form projector ranks " + std::to_string(r1) + "/" + std::to_string(r7d) +
                        "/" + std::to_string(r27));
        ProjectorMatrices2 p2 = two_form_projector_matrices(pkg);
        int q7 = rank(p2.p7), q14 = rank(p2.p14);
        if (q7 != 7 || q14 != 14)
            return fail("2-form projector ranks " + std::to_string(q7) + "/" + std::to_string(q14));
        int d11 = real_11_traceless_dimension(pkg);
        if (d11 != 8) return fail("real (1,1)_0 dimension " + std::to_string(d11));
        // 1 + 8 + 18 = 27, 1 + 6 = 7, 8 + 6 = 14, 1 + 6 = 7.
        if (1 + d11 + L.kernel_dim != r27) return fail("27 = 1+8+18 fails");
        if (1 + L.image_dim != r7d) return fail("7 = 1+6 fails (3-forms)");
        if (d11 + M.kernel_dim != q14) return fail("14 = 8+6 fails");
        if (1 + M.image_dim != q7) return fail("7 = 1+6 fails (2-forms)");
        return ok();
    });

    c.check("canonical-bases-match-contraction", [&] {
        PolySampler gen(opt.seed + 61, 0);
        for (int rep = 0; rep < 10; ++rep) {
            std::array<GaussianRational, 3> a;
            for (auto& v : a)
                v = GaussianRational(Rational(gen.uniform_int(-3, 3)),
                                     Rational(gen.uniform_int(-3, 3)));
            Rational h(gen.uniform_int(-3, 3));
            auto X = model_vector_field(a, h);
            FormG via_psi = interior_product(X, to_gaussian(pkg.psi));
            if (via_psi != canonical_contraction_psi(a, h, pkg))
                return fail("X -| psi mismatch, rep " + std::to_string(rep));
            FormG via_phi = interior_product(X, to_gaussian(pkg.phi));
            if (via_phi != canonical_contraction_phi(a, h, pkg))
                return fail("X -| phi mismatch, rep " + std::to_string(rep));
        }
        return ok();
    });
}

// ---------------------------------------------------------------------------
// diffops suite
// ---------------------------------------------------------------------------

void run_diffops(Checker& c, const VerifyOptions& opt) {
    SuiteConfig cfg;
    cfg.seed = opt.seed;
    cfg.trials = opt.trials;
    cfg.max_degree = opt.max_degree;
    cfg.corrupt_phi_blade = opt.corrupt_phi_blade;
    cfg.corrupt_psi_blade = opt.corrupt_psi_blade;
    SuiteReport rep = identity_suite(cfg);
    for (const auto& r : rep.results) c.simple(r.name, r.pass, r.counterexample);
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& opt) {
    if (!valid_suite_name(opt.suite))
        throw std::invalid_argument("unknown suite '" + opt.suite + "'");
    std::vector<CheckResult> all;
    auto append = [&all](Checker& c) {
        auto part = c.take();
        all.insert(all.end(), part.begin(), part.end());
    };
    if (opt.suite == "g2" || opt.suite == "all") {
        Checker c("g2");
        run_g2(c, opt);
        append(c);
    }
    if (opt.suite == "spin7" || opt.suite == "all") {
        Checker c("spin7");
        run_spin7(c, opt);
        append(c);
    }
    if (opt.suite == "cy3" || opt.suite == "all") {
        Checker c("cy3");
        run_cy3(c, opt);
        append(c);
    }
    if (opt.suite == "diffops" || opt.suite == "all") {
        Checker c("diffops");
        run_diffops(c, opt);
        append(c);
    }
    return all;
}

}  // namespace g2kit
