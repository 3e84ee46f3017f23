// g2kit: emit canonical structure-form tables, run the exact verification
// suites, and decompose user-supplied forms into irreducible pieces.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "g2kit/decomp.hpp"
#include "g2kit/diffops.hpp"
#include "g2kit/form_io.hpp"
#include "g2kit/structure.hpp"
#include "g2kit/verify.hpp"

namespace {

using namespace g2kit;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string pick_format(const std::string& flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("G2KIT_FORMAT")) {
        std::string v(env);
        if (v == "json" || v == "latex" || v == "text") return v;
    }
    return flag_value;
}

Convention convention_from(const std::string& s) {
    return s == "opposite" ? Convention::Opposite : Convention::CayleyDickson;
}

int cmd_emit(const std::string& object, const std::string& conv_name, const std::string& format,
             const std::string& variant) {
    Convention conv = convention_from(conv_name);
    StructurePackage pkg = build_package(conv);

    auto print_q = [&](const FormQ& f) {
        if (format == "json")
            std::cout << form_to_json(f).dump(2) << "\n";
        else if (format == "latex")
            std::cout << form_to_latex(f) << "\n";
        else
            std::cout << form_to_text(f) << "\n";
    };

    if (object == "phi") {
        print_q(pkg.phi);
    } else if (object == "psi") {
        print_q(pkg.psi);
    } else if (object == "Phi") {
        print_q(pkg.big_phi);
    } else if (object == "omega") {
        print_q(pkg.omega3);
    } else if (object == "ReOmega") {
        print_q(pkg.re_Omega3());
    } else if (object == "ImOmega") {
        print_q(pkg.im_Omega3());
    } else if (object == "split") {
        FormQ f = build_split_phi(variant == "plus" ? SplitVariant::PlusEtaPlus
                                                    : SplitVariant::MinusEtaMinus);
        print_q(f);
    } else if (object == "theta") {
        FormP theta = theta_form(conv);
        if (format == "json")
            std::cout << form_to_json(theta).dump(2) << "\n";
        else if (format == "latex")
            std::cout << form_to_latex(theta) << "\n";
        else
            std::cout << form_to_text(theta) << "\n";
    } else {
        std::cerr << "error: unknown object '" << object
                  << "' (expected phi|psi|Phi|omega|ReOmega|ImOmega|theta|split)\n";
        return kExitUsage;
    }
    return kExitPass;
}

int cmd_verify(const VerifyOptions& opt, const std::string& format) {
    std::vector<CheckResult> results = run_verification(opt);
    bool pass = all_passed(results);
    if (format == "json") {
        Json j;
        j["suite"] = opt.suite;
        j["seed"] = opt.seed;
        j["trials"] = opt.trials;
        Json arr = Json::array();
        for (const auto& r : results) {
            Json e;
            e["suite"] = r.suite;
            e["name"] = r.name;
            e["pass"] = r.pass;
            if (!r.pass) e["counterexample"] = r.detail;
            arr.push_back(std::move(e));
        }
        j["checks"] = std::move(arr);
        j["all_pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            if (r.pass)
                std::cout << "PASS [" << r.suite << "] " << r.name << "\n";
            else
                std::cout << "FAIL [" << r.suite << "] " << r.name << ": " << r.detail << "\n";
        }
        std::cout << (pass ? "all checks passed" : "FAILURES detected") << "\n";
    }
    return pass ? kExitPass : kExitFail;
}

Json form_component_json(const FormG& f) {
    if (imag_part(f).is_zero()) return form_to_json(real_part(f));
    return form_to_json(f);
}

std::string component_text(const FormG& f) {
    if (imag_part(f).is_zero()) return form_to_text(real_part(f));
    return form_to_text(f);
}

int cmd_decompose(const std::string& input, const std::string& into, const std::string& conv_name,
                  const std::string& format) {
    Json j;
    try {
        if (input == "-") {
            j = Json::parse(std::cin);
        } else {
            std::ifstream in(input);
            if (!in) {
                std::cerr << "error: cannot open input file '" << input << "'\n";
                return kExitUsage;
            }
            j = Json::parse(in);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: input is not valid JSON: " << e.what() << "\n";
        return kExitUsage;
    }

    FormG form(CoordinateFrame::r7(), 0);
    try {
        form = parsed_as_gaussian(form_from_json(j));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (form.frame() != CoordinateFrame::r7()) {
        std::cerr << "error: field 'frame' must be R7 for decomposition\n";
        return kExitUsage;
    }
    if (form.degree() != 2 && form.degree() != 3) {
        std::cerr << "error: field 'degree' must be 2 or 3 for decomposition\n";
        return kExitUsage;
    }

    StructurePackage pkg = build_package(convention_from(conv_name));
    std::vector<std::pair<std::string, FormG>> components;
    std::string verdict;
    Json extra;

    if (into == "g2") {
        if (form.degree() == 2) {
            G2Type2 s = project_2forms(form, pkg);
            components = {{"2_7", s.p7}, {"2_14", s.p14}};
            auto [l7, l14] = pkg.two_form_eigenvalues();
            if (form.is_zero())
                verdict = "zero";
            else if (s.p14.is_zero()) {
                verdict = "2_7";
                extra["eigenvalue"] = l7;
            } else if (s.p7.is_zero()) {
                verdict = "2_14";
                extra["eigenvalue"] = l14;
            } else
                verdict = "mixed";
            if (s.p7 + s.p14 != form) verdict = "internal-resum-error";
        } else {
            G2Type3 s = project_3forms(form, pkg);
            components = {{"3_1", s.p1}, {"3_7", s.p7}, {"3_27", s.p27}};
            int nonzero = (!s.p1.is_zero()) + (!s.p7.is_zero()) + (!s.p27.is_zero());
            if (form.is_zero())
                verdict = "zero";
            else if (nonzero > 1)
                verdict = "mixed";
            else if (!s.p1.is_zero())
                verdict = "3_1";
            else if (!s.p7.is_zero())
                verdict = "3_7";
            else
                verdict = "3_27";
            if (s.p1 + s.p7 + s.p27 != form) verdict = "internal-resum-error";
        }
    } else {  // pq
        if (form.degree() == 2) {
            ComplexType2 d = pq_decompose2(form);
            components = {{"(2,0)", d.c20},    {"(1,1)_0", d.c11_0}, {"(0,2)", d.c02},
                          {"dt^(1,0)", d.d10}, {"dt^(0,1)", d.d01}};
            extra["k"] = to_json(d.k);
            if (d.reassemble(pkg.omega3) != form) verdict = "internal-resum-error";
        } else {
            ComplexType3 d = pq_decompose3(form);
            components = {{"(3,0)", d.c30},    {"(2,1)", d.c21},      {"(1,2)", d.c12},
                          {"(0,3)", d.c03},    {"dt^(2,0)", d.d20},   {"dt^(1,1)_0", d.d11_0},
                          {"dt^(0,2)", d.d02}};
            extra["f"] = to_json(d.f);
            if (d.reassemble(pkg.omega3) != form) verdict = "internal-resum-error";
        }
        if (verdict.empty()) {
            for (const auto& [name, f] : components)
                if (!f.is_zero()) verdict += (verdict.empty() ? "" : " + ") + name;
            if (verdict.empty()) verdict = "zero";
        }
    }

    if (format == "json") {
        Json out;
        out["convention"] = conv_name;
        out["into"] = into;
        Json comps;
        for (const auto& [name, f] : components) comps[name] = form_component_json(f);
        out["components"] = std::move(comps);
        out["verdict"] = verdict;
        for (auto& [k, v] : extra.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& [name, f] : components)
            std::cout << name << ": " << component_text(f) << "\n";
        for (auto& [k, v] : extra.items()) std::cout << k << ": " << v.dump() << "\n";
        std::cout << "verdict: " << verdict << "\n";
    }
    return verdict == "internal-resum-error" ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure forms, decompositions and operator suites"};
    app.require_subcommand(1);

    // emit
    auto* emit = app.add_subcommand("emit", "print a canonical form table");
    std::string object;
    std::string conv_name = "cd";
    std::string format = "text";
    std::string variant = "minus";
    emit->add_option("--object", object, "phi|psi|Phi|omega|ReOmega|ImOmega|theta|split")
        ->required();
    emit->add_option("--convention", conv_name, "cd|opposite")
        ->check(CLI::IsMember({"cd", "opposite"}));
    auto* emit_fmt = emit->add_option("--format", format, "json|latex|text")
                         ->check(CLI::IsMember({"json", "latex", "text"}));
    emit->add_option("--variant", variant, "minus|plus (split forms only)")
        ->check(CLI::IsMember({"minus", "plus"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run exact identity suites");
    VerifyOptions vopt;
    std::string vformat = "text";
    int corrupt_phi = -1, corrupt_psi = -1;
    verify->add_option("--suite", vopt.suite, "g2|spin7|cy3|diffops|all")
        ->check(CLI::IsMember({"g2", "spin7", "cy3", "diffops", "all"}));
    verify->add_option("--seed", vopt.seed, "random seed");
    verify->add_option("--trials", vopt.trials, "random trials per property");
    verify->add_option("--max-degree", vopt.max_degree, "max polynomial degree");
    auto* verify_fmt = verify->add_option("--format", vformat, "json|text")
                           ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--corrupt-phi", corrupt_phi,
                       "negative control: flip the sign of phi term N (0-6)");
    verify->add_option("--corrupt-psi", corrupt_psi,
                       "negative control: flip the sign of psi term N (0-6)");

    // decompose
    auto* dec = app.add_subcommand("decompose", "split a form into irreducible pieces");
    std::string input;
    std::string into = "g2";
    std::string dconv = "cd";
    std::string dformat = "text";
    dec->add_option("--input", input, "path to a form JSON file, or - for stdin")->required();
    dec->add_option("--into", into, "g2|pq")->check(CLI::IsMember({"g2", "pq"}));
    dec->add_option("--convention", dconv, "cd|opposite")
        ->check(CLI::IsMember({"cd", "opposite"}));
    auto* dec_fmt = dec->add_option("--format", dformat, "json|text")
                        ->check(CLI::IsMember({"json", "text"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (emit->parsed())
            return cmd_emit(object, conv_name, pick_format(format, emit_fmt->count() > 0), variant);
        if (verify->parsed()) {
            if (corrupt_phi >= 0) vopt.corrupt_phi_blade = corrupt_phi;
            if (corrupt_psi >= 0) vopt.corrupt_psi_blade = corrupt_psi;
            return cmd_verify(vopt, pick_format(vformat, verify_fmt->count() > 0));
        }
        if (dec->parsed())
            return cmd_decompose(input, into, dconv, pick_format(dformat, dec_fmt->count() > 0));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
