#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "g2kit/form.hpp"

namespace g2kit {

using Json = nlohmann::ordered_json;

// JSON schema:
//   Rational          {"num": "<decimal>", "den": "<decimal>"}
//   GaussianRational  {"re": <Rational>, "im": <Rational>}
//   Polynomial        [{"exp": [7 ints], "coeff": <Rational>}, ...]
//   Form              {"frame": "R7"|"R8", "degree": d,
//                      "terms": [{"blade": [ascending indices], "coeff": <scalar>}]}

Json to_json(const Rational& r);
Json to_json(const GaussianRational& z);
Json to_json(const Polynomial& p);

Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);

template <typename R>
Json form_to_json(const Form<R>& f) {
    Json j;
    j["frame"] = f.frame().id();
    j["degree"] = f.degree();
    Json terms = Json::array();
    for (const auto& [b, c] : f.terms()) {
        Json t;
        t["blade"] = b.indices();
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

using ParsedForm = std::variant<FormQ, FormG, FormP>;

/// Parses a form in the standard schema, inferring the coefficient ring from
/// the shape of the first coefficient. Throws std::invalid_argument with the
/// offending field named on malformed input.
ParsedForm form_from_json(const Json& j);

/// The parsed form coerced to Gaussian coefficients (rational embeds;
/// polynomial input is rejected).
FormG parsed_as_gaussian(const ParsedForm& p);

// Plain-text rendering: signed monomial list in canonical blade order,
// e.g. "dx1 dx2 dx3 - dx1 dy2 dy3 - ...".
std::string scalar_text(const Rational& r);
std::string scalar_text(const GaussianRational& z);
std::string scalar_text(const Polynomial& p);

// LaTeX rendering matching the usual dx^i / dy^j notation.
std::string scalar_latex(const Rational& r);
std::string scalar_latex(const GaussianRational& z);
std::string scalar_latex(const Polynomial& p);

std::string blade_text(const CoordinateFrame& frame, const Blade& b);
std::string blade_latex(const CoordinateFrame& frame, const Blade& b);

namespace detail {

template <typename R, typename ScalarFn, typename BladeFn>
std::string render_form(const Form<R>& f, ScalarFn scalar, BladeFn blade, const char* zero) {
    if (f.is_zero()) return zero;
    std::string out;
    bool first = true;
    for (const auto& [b, c] : f.terms()) {
        std::string cs = scalar(c);
        bool negated = false;
        if (!cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        out += first ? (negated ? "-" : "") : (negated ? " - " : " + ");
        first = false;
        std::string bs = blade(f.frame(), b);
        if (cs == "1" && !bs.empty())
            out += bs;
        else if (bs.empty())
            out += cs;
        else
            out += (cs.find_first_of("+- ") != std::string::npos ? "(" + cs + ")" : cs) + " " + bs;
    }
    return out;
}

}  // namespace detail

template <typename R>
std::string form_to_text(const Form<R>& f) {
    return detail::render_form(
        f, [](const R& c) { return scalar_text(c); },
        [](const CoordinateFrame& fr, const Blade& b) { return blade_text(fr, b); }, "0");
}

template <typename R>
std::string form_to_latex(const Form<R>& f) {
    return detail::render_form(
        f, [](const R& c) { return scalar_latex(c); },
        [](const CoordinateFrame& fr, const Blade& b) { return blade_latex(fr, b); }, "0");
}

}  // namespace g2kit
