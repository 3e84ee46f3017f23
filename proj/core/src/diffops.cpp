#include "g2kit/diffops.hpp"

#include <sstream>
#include <stdexcept>

#include "g2kit/octonion.hpp"

namespace g2kit {

namespace {

const CoordinateFrame& R7 = CoordinateFrame::r7();

const FormQ& canonical_phi() {
    static const FormQ phi = build_package(Convention::CayleyDickson).phi;
    return phi;
}

const FormQ& canonical_psi() {
    static const FormQ psi = build_package(Convention::CayleyDickson).psi;
    return psi;
}

}  // namespace

Polynomial dot(const PolyVectorField& x, const PolyVectorField& y) {
    Polynomial acc;
    for (int i = 0; i < 7; ++i) acc += x.c[i] * y.c[i];
    return acc;
}

FormP flat(const PolyVectorField& x) {
    FormP out(R7, 1);
    for (int i = 0; i < 7; ++i) out.add_term(Blade({i}), x.c[i]);
    return out;
}

PolyVectorField sharp(const FormP& a) {
    if (a.frame() != R7 || a.degree() != 1)
        throw std::invalid_argument("sharp: expected a 1-form on R7");
    PolyVectorField out;
    for (int i = 0; i < 7; ++i) out.c[i] = a.coefficient(Blade({i}));
    return out;
}

Polynomial spinor_inner(const Spinor& a, const Spinor& b) { return a.f * b.f + dot(a.x, b.x); }

PolyVectorField grad(const Polynomial& f) {
    PolyVectorField out;
    for (int i = 0; i < 7; ++i) out.c[i] = f.derivative(i);
    return out;
}

Polynomial divergence(const PolyVectorField& x) {
    Polynomial acc;
    for (int i = 0; i < 7; ++i) acc += x.c[i].derivative(i);
    return acc;
}

FormP exterior_derivative(const FormP& a) {
    FormP out(a.frame(), a.degree() + 1);
    const int n = a.frame().dimension();
    if (a.frame() != R7)
        throw std::invalid_argument("exterior_derivative: expected an R7 polynomial form");
    for (const auto& [b, c] : a.terms()) {
        for (int i = 0; i < n; ++i) {
            if (b.contains(i)) continue;
            Polynomial dc = c.derivative(i);
            if (dc.is_zero()) continue;
            int s = wedge_sign(Blade({i}), b);
            out.add_term(b.with(i), s < 0 ? -dc : dc);
        }
    }
    return out;
}

FormP codifferential(const FormP& a) {
    if (a.degree() == 0) return FormP(a.frame(), 0);
    FormP sds = hodge_star(exterior_derivative(hodge_star(a)));
    return (a.degree() % 2 == 0) ? sds : -sds;
}

FormP hodge_laplacian(const FormP& a) {
    if (a.degree() != 0 && a.degree() != 1)
        throw std::invalid_argument("hodge_laplacian: degree must be 0 or 1");
    FormP d_star_d = codifferential(exterior_derivative(a));
    if (a.degree() == 0) return d_star_d;  // d d* vanishes on functions
    FormP dd_star = exterior_derivative(codifferential(a));
    return dd_star + d_star_d;
}

Polynomial flat_laplacian(const Polynomial& f) {
    Polynomial acc;
    for (int i = 0; i < 7; ++i) acc -= f.derivative(i).derivative(i);
    return acc;
}

PolyVectorField cross(const PolyVectorField& x, const PolyVectorField& y) {
    auto w = cross7(x.c, y.c);
    PolyVectorField out;
    out.c = w;
    return out;
}

PolyVectorField curl(const PolyVectorField& x) {
    // Index route d_i X_j phi_{ij}^k and invariant route *(dX-flat ^ psi),
    // computed independently and required to agree.
    const auto& phi = phi_constants();
    PolyVectorField out;
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 7; ++j) {
            Polynomial dxj = x.c[j].derivative(i);
            if (dxj.is_zero()) continue;
            for (int k = 0; k < 7; ++k) {
                int s = phi[i][j][k];
                if (s == 0) continue;
                out.c[k] += (s < 0) ? -dxj : dxj;
            }
        }
    PolyVectorField via_star = curl_via_star(x, canonical_psi());
    if (out != via_star) throw std::logic_error("curl: index and star routes disagree");
    return out;
}

PolyVectorField curl_via_star(const PolyVectorField& x, const FormQ& psi) {
    FormP dxf = exterior_derivative(flat(x));
    return sharp(hodge_star(wedge(dxf, to_polynomial(psi))));
}

Spinor clifford_multiply(const PolyVectorField& y, const Spinor& s) {
    return {-dot(y, s.x), s.f * y + cross(y, s.x)};
}

Spinor clifford_multiply_octonion(const PolyVectorField& y, const Spinor& s) {
    std::array<Polynomial, 8> yc, sc;
    yc[0] = Polynomial(0);
    sc[0] = s.f;
    for (int i = 0; i < 7; ++i) {
        yc[i + 1] = y.c[i];
        sc[i + 1] = s.x.c[i];
    }
    auto prod = Octonion<Polynomial>::from_components(yc) * Octonion<Polynomial>::from_components(sc);
    Spinor out;
    out.f = prod.component(0);
    for (int i = 0; i < 7; ++i) out.x.c[i] = prod.component(i + 1);
    return out;
}

Spinor dirac(const Spinor& s) {
    Spinor direct{-divergence(s.x), grad(s.f) + curl(s.x)};
    Spinor clifford = dirac_via_clifford(s);
    if (direct != clifford) throw std::logic_error("dirac: the two routes disagree");
    return direct;
}

Spinor dirac_via_clifford(const Spinor& s) {
    Spinor acc{Polynomial(0), PolyVectorField{}};
    for (int k = 0; k < 7; ++k) {
        Spinor ds;
        ds.f = s.f.derivative(k);
        for (int i = 0; i < 7; ++i) ds.x.c[i] = s.x.c[i].derivative(k);
        acc = acc + clifford_multiply(PolyVectorField::basis(k), ds);
    }
    return acc;
}

PolyVectorField selfadjoint_witness(const Spinor& s1, const Spinor& s2) {
    PolyVectorField v;
    for (int k = 0; k < 7; ++k)
        v.c[k] = spinor_inner(clifford_multiply(PolyVectorField::basis(k), s1), s2);
    return v;
}

PolySampler::PolySampler(std::uint64_t seed, int max_degree)
    : state_(seed ^ 0x9E3779B97F4A7C15ull), max_degree_(max_degree) {
    if (max_degree < 0) throw std::invalid_argument("PolySampler: negative degree bound");
    next();
}

std::uint64_t PolySampler::next() {
    // splitmix64: deterministic across platforms.
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

int PolySampler::uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

Polynomial PolySampler::polynomial() {
    Polynomial p;
    int nterms = uniform_int(1, 5);
    for (int t = 0; t < nterms; ++t) {
        Exponents e{};
        int deg = uniform_int(0, max_degree_);
        for (int d = 0; d < deg; ++d) e[uniform_int(0, 6)] += 1;
        int c = 0;
        while (c == 0) c = uniform_int(-3, 3);
        p += Polynomial::monomial(e, Rational(c));
    }
    return p;
}

PolyVectorField PolySampler::vector_field() {
    PolyVectorField v;
    for (int i = 0; i < 7; ++i) v.c[i] = polynomial();
    return v;
}

Spinor PolySampler::spinor() { return {polynomial(), vector_field()}; }

FormQ corrupt_blade_sign(const FormQ& a, int n) {
    if (n < 0 || n >= static_cast<int>(a.term_count()))
        throw std::out_of_range("corrupt_blade_sign: term index out of range");
    FormQ out = a;
    int k = 0;
    for (const auto& [b, c] : a.terms()) {
        if (k++ == n) {
            out.set_term(b, -c);
            break;
        }
    }
    return out;
}

namespace {

/// Operator family driven by explicit phi/psi forms rather than the canonical
/// tables, so corrupted tables propagate into every derived operator.
struct FormDrivenOps {
    FormP phi_p;
    FormP psi_p;

    static std::vector<Polynomial> comps(const PolyVectorField& x) {
        return std::vector<Polynomial>(x.c.begin(), x.c.end());
    }

    PolyVectorField cross(const PolyVectorField& x, const PolyVectorField& y) const {
        // (X x Y)-flat = Y -| X -| phi.
        FormP one = interior_product(comps(y), interior_product(comps(x), phi_p));
        return sharp(one);
    }

    PolyVectorField curl_index(const PolyVectorField& x) const {
        PolyVectorField acc;
        for (int i = 0; i < 7; ++i) {
            PolyVectorField dx;
            for (int j = 0; j < 7; ++j) dx.c[j] = x.c[j].derivative(i);
            acc = acc + cross(PolyVectorField::basis(i), dx);
        }
        return acc;
    }

    PolyVectorField curl_star(const PolyVectorField& x) const {
        return sharp(hodge_star(wedge(exterior_derivative(flat(x)), psi_p)));
    }

    Spinor clifford(const PolyVectorField& y, const Spinor& s) const {
        return {-dot(y, s.x), s.f * y + cross(y, s.x)};
    }

    Spinor dirac_clifford(const Spinor& s) const {
        Spinor acc{Polynomial(0), PolyVectorField{}};
        for (int k = 0; k < 7; ++k) {
            Spinor ds;
            ds.f = s.f.derivative(k);
            for (int i = 0; i < 7; ++i) ds.x.c[i] = s.x.c[i].derivative(k);
            acc = acc + clifford(PolyVectorField::basis(k), ds);
        }
        return acc;
    }

    Spinor dirac_dgc(const Spinor& s) const {
        return {-divergence(s.x), grad(s.f) + curl_star(s.x)};
    }
};

class SuiteRunner {
public:
    void check(const std::string& name, bool ok, const std::string& detail) {
        for (auto& r : report_.results) {
            if (r.name == name) {
                if (r.pass && !ok) {
                    r.pass = false;
                    r.counterexample = detail;
                }
                return;
            }
        }
        report_.results.push_back({name, ok, ok ? std::string() : detail});
    }

    SuiteReport take() { return std::move(report_); }

private:
    SuiteReport report_;
};

std::string trial_tag(int t) { return "trial " + std::to_string(t); }

}  // namespace

SuiteReport identity_suite(const SuiteConfig& cfg) {
    SuiteRunner run;
    if (cfg.trials <= 0) return run.take();

    StructurePackage pkg = build_package(Convention::CayleyDickson);
    FormQ phi_used =
        cfg.corrupt_phi_blade ? corrupt_blade_sign(pkg.phi, *cfg.corrupt_phi_blade) : pkg.phi;
    FormQ psi_used =
        cfg.corrupt_psi_blade ? corrupt_blade_sign(pkg.psi, *cfg.corrupt_psi_blade) : pkg.psi;
    FormDrivenOps ops{to_polynomial(phi_used), to_polynomial(psi_used)};

    run.check("psi-is-dual-of-phi", hodge_star(phi_used) == psi_used, "star(phi) != psi");

    {
        FormP expect = to_polynomial(vol3_r7()) + exterior_derivative(theta_form(Convention::CayleyDickson));
        run.check("phi-equals-vol3-plus-dtheta", expect == ops.phi_p, "vol3 + d(theta) != phi");
    }

    PolySampler gen(cfg.seed, cfg.max_degree);
    for (int t = 0; t < cfg.trials; ++t) {
        Polynomial f = gen.polynomial();
        Polynomial g = gen.polynomial();
        PolyVectorField x = gen.vector_field();
        Spinor s = gen.spinor();
        Spinor s2 = gen.spinor();
        PolyVectorField y = gen.vector_field();

        run.check("grad-leibniz", grad(f * g) == f * grad(g) + g * grad(f), trial_tag(t));
        {
            FormP sds = hodge_star(exterior_derivative(hodge_star(flat(x))));
            Polynomial via_star = sds.coefficient(Blade());
            run.check("div-dual-path", divergence(x) == via_star, trial_tag(t));
        }
        run.check("curl-dual-path", ops.curl_index(x) == ops.curl_star(x), trial_tag(t));
        run.check("curl-grad-zero", ops.curl_star(grad(f)).is_zero(), trial_tag(t));
        run.check("div-curl-zero", divergence(ops.curl_star(x)).is_zero(), trial_tag(t));
        {
            PolyVectorField lhs = ops.curl_star(ops.curl_star(x));
            FormP lap = hodge_laplacian(flat(x));
            PolyVectorField rhs = grad(divergence(x)) + sharp(lap);
            run.check("curl-curl-relation", lhs == rhs, trial_tag(t));
        }
        {
            FormP lap_f = hodge_laplacian(FormP::scalar(R7, f));
            bool ok_f = lap_f.coefficient(Blade()) == flat_laplacian(f);
            FormP lap_x = hodge_laplacian(flat(x));
            PolyVectorField componentwise;
            for (int i = 0; i < 7; ++i) componentwise.c[i] = flat_laplacian(x.c[i]);
            run.check("laplacian-dual-path", ok_f && lap_x == flat(componentwise), trial_tag(t));
        }
        {
            bool ok = true;
            for (int i = 0; i < 7 && ok; ++i)
                for (int j = 0; j < 7 && ok; ++j) {
                    Spinor lhs = ops.clifford(PolyVectorField::basis(i),
                                              ops.clifford(PolyVectorField::basis(j), s)) +
                                 ops.clifford(PolyVectorField::basis(j),
                                              ops.clifford(PolyVectorField::basis(i), s));
                    Polynomial scale = (i == j) ? Polynomial(-2) : Polynomial(0);
                    Spinor rhs{scale * s.f, scale * s.x};
                    ok = lhs == rhs;
                }
            run.check("clifford-relation", ok, trial_tag(t));
        }
        {
            Polynomial lhs = spinor_inner(ops.clifford(y, s), s2);
            Polynomial rhs = -spinor_inner(s, ops.clifford(y, s2));
            run.check("clifford-skew-adjoint", lhs == rhs, trial_tag(t));
        }
        run.check("clifford-octonion-oracle",
                  ops.clifford(y, s) == clifford_multiply_octonion(y, s), trial_tag(t));
        run.check("dirac-definition", ops.dirac_clifford(s) == ops.dirac_dgc(s), trial_tag(t));
        {
            Spinor dd = ops.dirac_clifford(ops.dirac_clifford(s));
            PolyVectorField lap_x;
            for (int i = 0; i < 7; ++i) lap_x.c[i] = flat_laplacian(s.x.c[i]);
            Spinor expect{flat_laplacian(s.f), lap_x};
            run.check("dirac-squared-is-laplacian", dd == expect, trial_tag(t));
        }
        {
            Polynomial diff = spinor_inner(ops.dirac_clifford(s), s2) -
                              spinor_inner(s, ops.dirac_clifford(s2));
            PolyVectorField witness;
            for (int k = 0; k < 7; ++k)
                witness.c[k] = spinor_inner(ops.clifford(PolyVectorField::basis(k), s), s2);
            run.check("selfadjoint-divergence-witness", diff == divergence(witness), trial_tag(t));
        }
        {
            FormP one(R7, 1);
            FormP two(R7, 2);
            for (int reps = 0; reps < 2; ++reps) {
                one.add_term(Blade({gen.uniform_int(0, 6)}), gen.polynomial());
                int a = gen.uniform_int(0, 5);
                two.add_term(Blade({a, a + 1}), gen.polynomial());
            }
            bool ok = exterior_derivative(exterior_derivative(one)).is_zero() &&
                      exterior_derivative(exterior_derivative(two)).is_zero();
            run.check("d-squared-zero", ok, trial_tag(t));
        }
    }
    return run.take();
}

}  // namespace g2kit
