#include "g2kit/form_io.hpp"

#include <stdexcept>

namespace g2kit {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
    throw std::invalid_argument("form JSON: field '" + field + "' " + why);
}

const Json& require(const Json& j, const char* field) {
    if (!j.is_object() || !j.contains(field)) bad(field, "is missing");
    return j.at(field);
}

}  // namespace

Json to_json(const Rational& r) {
    return Json{{"num", r.numerator_str()}, {"den", r.denominator_str()}};
}

Json to_json(const GaussianRational& z) {
    return Json{{"re", to_json(z.re())}, {"im", to_json(z.im())}};
}

Json to_json(const Polynomial& p) {
    Json out = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coeff"] = to_json(c);
        out.push_back(std::move(t));
    }
    return out;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_object()) bad("coeff", "must be an object with num/den");
    const Json& num = require(j, "num");
    const Json& den = require(j, "den");
    if (!num.is_string() || !den.is_string()) bad("num/den", "must be decimal strings");
    try {
        return Rational::from_decimal_strings(num.get<std::string>(), den.get<std::string>());
    } catch (const std::exception& e) {
        bad("num/den", std::string("is not a valid rational: ") + e.what());
    }
}

GaussianRational gaussian_from_json(const Json& j) {
    return {rational_from_json(require(j, "re")), rational_from_json(require(j, "im"))};
}

Polynomial polynomial_from_json(const Json& j) {
    if (!j.is_array()) bad("coeff", "polynomial must be an array of terms");
    Polynomial p;
    for (const Json& t : j) {
        const Json& exp = require(t, "exp");
        if (!exp.is_array() || exp.size() != kNumVariables)
            bad("exp", "must be an array of 7 integers");
        Exponents e{};
        for (int k = 0; k < kNumVariables; ++k) {
            if (!exp[k].is_number_integer() || exp[k].get<int>() < 0)
                bad("exp", "entries must be non-negative integers");
            e[k] = exp[k].get<int>();
        }
        p += Polynomial::monomial(e, rational_from_json(require(t, "coeff")));
    }
    return p;
}

namespace {

const CoordinateFrame& frame_from_json(const Json& j) {
    const Json& f = require(j, "frame");
    if (!f.is_string()) bad("frame", "must be a string");
    std::string id = f.get<std::string>();
    if (id == "R7") return CoordinateFrame::r7();
    if (id == "R8") return CoordinateFrame::r8();
    bad("frame", "must be \"R7\" or \"R8\"");
}

Blade blade_from_json(const Json& j, int dim) {
    if (!j.is_array()) bad("blade", "must be an array of indices");
    std::uint32_t mask = 0;
    int prev = -1;
    for (const Json& v : j) {
        if (!v.is_number_integer()) bad("blade", "indices must be integers");
        int i = v.get<int>();
        if (i < 0 || i >= dim) bad("blade", "index out of range for frame");
        if (i <= prev) bad("blade", "indices must be strictly ascending");
        mask |= 1u << i;
        prev = i;
    }
    return Blade(mask);
}

enum class CoeffKind { Rational, Gaussian, Polynomial };

CoeffKind sniff_coeff(const Json& c) {
    if (c.is_array()) return CoeffKind::Polynomial;
    if (c.is_object() && c.contains("re")) return CoeffKind::Gaussian;
    if (c.is_object() && c.contains("num")) return CoeffKind::Rational;
    bad("coeff", "is not a recognized scalar encoding");
}

template <typename R, typename Decode>
Form<R> decode_form(const Json& j, const CoordinateFrame& frame, int degree, Decode decode) {
    Form<R> f(frame, degree);
    for (const Json& t : require(j, "terms")) {
        Blade b = blade_from_json(require(t, "blade"), frame.dimension());
        if (b.degree() != degree) bad("blade", "has the wrong degree for this form");
        f.add_term(b, decode(require(t, "coeff")));
    }
    return f;
}

}  // namespace

ParsedForm form_from_json(const Json& j) {
    const CoordinateFrame& frame = frame_from_json(j);
    const Json& deg = require(j, "degree");
    if (!deg.is_number_integer()) bad("degree", "must be an integer");
    int degree = deg.get<int>();
    if (degree < 0 || degree > frame.dimension()) bad("degree", "out of range for frame");
    const Json& terms = require(j, "terms");
    if (!terms.is_array()) bad("terms", "must be an array");

    CoeffKind kind = CoeffKind::Rational;
    if (!terms.empty()) kind = sniff_coeff(require(terms[0], "coeff"));
    switch (kind) {
        case CoeffKind::Rational:
            return decode_form<Rational>(j, frame, degree, rational_from_json);
        case CoeffKind::Gaussian:
            return decode_form<GaussianRational>(j, frame, degree, gaussian_from_json);
        case CoeffKind::Polynomial:
            return decode_form<Polynomial>(j, frame, degree, polynomial_from_json);
    }
    bad("coeff", "unreachable");
}

FormG parsed_as_gaussian(const ParsedForm& p) {
    if (std::holds_alternative<FormQ>(p)) return to_gaussian(std::get<FormQ>(p));
    if (std::holds_alternative<FormG>(p)) return std::get<FormG>(p);
    throw std::invalid_argument("form JSON: polynomial coefficients not supported here");
}

std::string scalar_text(const Rational& r) { return r.str(); }
std::string scalar_text(const GaussianRational& z) { return z.str(); }
std::string scalar_text(const Polynomial& p) { return p.str(); }

std::string scalar_latex(const Rational& r) {
    if (r.denominator_str() == "1") return r.numerator_str();
    std::string n = r.numerator_str();
    bool neg = !n.empty() && n[0] == '-';
    if (neg) n = n.substr(1);
    return (neg ? std::string("-") : std::string()) + "\\frac{" + n + "}{" + r.denominator_str() +
           "}";
}

std::string scalar_latex(const GaussianRational& z) {
    if (z.is_real()) return scalar_latex(z.re());
    std::string im = scalar_latex(abs(z.im()) == Rational(1) ? Rational(1) : abs(z.im()));
    std::string imp = (z.im().sign() < 0 ? "-" : (z.re().is_zero() ? "" : "+")) +
                      (im == "1" ? std::string() : im) + "i";
    return z.re().is_zero() ? imp : scalar_latex(z.re()) + imp;
}

std::string scalar_latex(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        Rational a = abs(c);
        out += (c.sign() < 0) ? (first ? "-" : " - ") : (first ? "" : " + ");
        first = false;
        bool bare = e == Exponents{};
        if (bare || a != Rational(1)) out += scalar_latex(a);
        for (int k = 0; k < kNumVariables; ++k) {
            if (e[k] == 0) continue;
            const std::string& nm = variable_names()[k];
            out += " " + nm.substr(0, 1) + "^" + nm.substr(1);
            if (e[k] > 1) out += "{}^{" + std::to_string(e[k]) + "}";
        }
    }
    return out;
}

namespace {

std::string blade_named(const CoordinateFrame& frame, const Blade& b, bool latex) {
    std::string out;
    bool first = true;
    for (int i : b.indices()) {
        if (!first) out += " ";
        first = false;
        const std::string& nm = frame.names()[i];
        if (latex)
            out += "d" + nm.substr(0, 1) + "^" + nm.substr(1);
        else
            out += "d" + nm;
    }
    return out;
}

}  // namespace

std::string blade_text(const CoordinateFrame& frame, const Blade& b) {
    return blade_named(frame, b, false);
}

std::string blade_latex(const CoordinateFrame& frame, const Blade& b) {
    return blade_named(frame, b, true);
}

}  // namespace g2kit
