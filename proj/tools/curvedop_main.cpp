#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "curvedop/cdga.hpp"
#include "curvedop/cooperad_checks.hpp"
#include "curvedop/json_io.hpp"
#include "curvedop/relations.hpp"

namespace {

using namespace curvedop;
using Clock = std::chrono::steady_clock;

int emit_report(Json report, const Clock::time_point& start, bool pass) {
    report["verdict"] = pass ? "pass" : "fail";
    std::cout << report.dump(2) << "\n";
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::cerr << "elapsed_ms " << ms << "\n";
    return pass ? 0 : 1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open: " + path);
    return std::string(std::istreambuf_iterator<char>(in), {});
}

int run_check_cooperad(const std::string& family, int max_arity, int max_weight, int max_k) {
    auto start = Clock::now();
    Family f = family_from_name(family);
    Json report;
    report["command"] = "check-cooperad";
    report["family"] = family;
    report["max_arity"] = max_arity;
    report["max_weight"] = max_weight;
    report["max_k"] = max_k;
    bool pass = true;
    Json checks = Json::array();
    auto record = [&](const char* name, const CheckReport& r) {
        Json c;
        c["check"] = name;
        c["pass"] = r.pass;
        if (!r.pass) {
            c["clause"] = r.clause;
            c["witness"] = r.witness;
            pass = false;
        }
        checks.push_back(std::move(c));
    };
    record("coassociativity", check_coassociativity(f, max_arity, max_weight, max_k));
    record("curved_identity", check_curved_cooperad_identity(f, max_arity, max_weight, max_k));
    record("counit", check_counit(f, max_arity, max_weight, max_k));
    record("delta1_consistency", check_delta1_consistency(f, std::min(max_arity, 4), max_k));
    record("convention_transport", convention_transport_check(std::min(max_arity, 4)));
    report["checks"] = std::move(checks);
    return emit_report(std::move(report), start, pass);
}

int run_check_algebra(const std::string& path, int max_arity, int max_weight) {
    auto start = Clock::now();
    AlgebraStructure alg = load_algebra(path);
    Json report;
    report["command"] = "check-algebra";
    report["input"] = path;
    report["inputs_digest"] = digest(algebra_to_json(alg).dump());
    report["max_arity"] = max_arity;
    report["max_weight"] = max_weight;
    CheckReport shape = check_structure(alg);
    if (!shape.pass) {
        report["counterexample"] = {{"clause", shape.clause}, {"witness", shape.witness}};
        return emit_report(std::move(report), start, false);
    }
    McReport mc = mc_check(alg, max_arity, max_weight);
    bool pass = mc.pass;
    if (!mc.pass)
        report["counterexample"] = {{"kind", "maurer_cartan"},
                                    {"key", key_to_json(*mc.first_failure)}};
    if (alg.family != Family::CCX) {
        RelationReport rel = check_structure_relations(alg, max_arity, max_weight);
        report["relations_pass"] = rel.pass;
        if (rel.pass != mc.pass) {
            pass = false;
            report["oracle_disagreement"] = true;
        }
        if (!rel.pass && !report.contains("counterexample"))
            report["counterexample"] = {{"kind", "relation"},
                                        {"key", key_to_json(*rel.first_failure)}};
    }
    return emit_report(std::move(report), start, pass);
}

int run_bar(const std::string& path, const Truncation& t) {
    auto start = Clock::now();
    AlgebraStructure alg = load_algebra(path);
    Json report;
    report["command"] = "bar";
    report["input"] = path;
    report["inputs_digest"] = digest(algebra_to_json(alg).dump());
    report["truncation"] = truncation_to_json(t);
    BarComplex cx = bar_differential(alg, t);
    report["complex"] = bar_complex_to_json(alg, cx);
    BarSquareReport sq = check_bar_square(alg, t);
    report["interior_words"] = sq.interior_count;
    report["boundary_words"] = sq.boundary_count;
    bool pass = sq.pass;
    if (!sq.pass)
        report["counterexample"] = sq.detail;
    if (alg.family == Family::CCX) {
        SymAgreementReport sym = sym_model_agreement(alg, t);
        report["sym_model_pass"] = sym.pass;
        if (!sym.pass) {
            pass = false;
            report["counterexample"] = sym.detail;
        }
    }
    return emit_report(std::move(report), start, pass);
}

int run_aq(const std::string& algebra_path, const std::string& module_path, int deg_lo,
           int deg_hi, const Truncation& t, bool stability, const std::string& format) {
    auto start = Clock::now();
    AlgebraStructure alg = load_algebra(algebra_path);
    ModuleCoefficients coeffs = module_path == "trivial-complex"
                                    ? trivial_complex_module(alg)
                                    : load_coefficients(module_path, alg);
    Json report;
    report["command"] = "aq";
    report["algebra"] = algebra_path;
    report["module"] = module_path;
    report["inputs_digest"] = digest(algebra_to_json(alg).dump());
    report["truncation"] = truncation_to_json(t);
    DtauReport sq = check_dtau_square(alg, coeffs, t);
    report["dtau_square_pass"] = sq.pass;
    report["interior_words"] = sq.interior_words;
    report["boundary_words"] = sq.boundary_words;
    Json degrees = Json::array();
    for (int n = deg_lo; n <= deg_hi; ++n) {
        CohomologyResult h = aq_cohomology(alg, coeffs, n, t, stability);
        Json e;
        e["degree"] = n;  // cohomological
        e["dim"] = h.dim;
        e["stable"] = h.stable;
        Json reps = Json::array();
        for (const auto& rep : h.representatives) {
            Json r = Json::array();
            for (const auto& [cb, c] : rep)
                r.push_back({{"word_key", key_to_json(cb.word.key)},
                             {"target", coeffs.module.element(cb.target).label},
                             {"coeff", format_rational(c)}});
            reps.push_back(std::move(r));
        }
        e["representatives"] = std::move(reps);
        degrees.push_back(std::move(e));
    }
    report["cohomology"] = std::move(degrees);
    if (format == "table") {
        std::cout << "degree  dim  stable\n";
        for (const Json& e : report["cohomology"])
            std::cout << "  " << e["degree"].get<int>() << "     " << e["dim"].get<int>()
                      << "    " << (e["stable"].get<bool>() ? "yes" : "no") << "\n";
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        std::cerr << "elapsed_ms " << ms << "\n";
        return sq.pass ? 0 : 1;
    }
    return emit_report(std::move(report), start, sq.pass);
}

int run_z0(const std::string& path, const Truncation& t) {
    auto start = Clock::now();
    AlgebraStructure alg = load_algebra(path);
    Json report;
    report["command"] = "z0";
    report["input"] = path;
    report["inputs_digest"] = digest(algebra_to_json(alg).dump());
    report["truncation"] = truncation_to_json(t);
    Z0Report z = z0_infinity_correspondence(alg, t);
    report["dim_kernel"] = z.dim_kernel;
    report["dim_mc"] = z.dim_mc;
    report["kernel_in_mc"] = z.kernel_in_mc;
    report["mc_in_kernel"] = z.mc_in_kernel;
    if (!z.pass)
        report["counterexample"] = z.detail;
    return emit_report(std::move(report), start, z.pass);
}

int run_cdga(const std::string& path, const Truncation& t) {
    auto start = Clock::now();
    AlgebraStructure alg = load_algebra(path);
    Json report;
    report["command"] = "cdga";
    report["input"] = path;
    report["inputs_digest"] = digest(algebra_to_json(alg).dump());
    report["truncation"] = truncation_to_json(t);
    CdgaReport c = check_cdga(alg, t);
    if (!c.pass)
        report["counterexample"] = {{"law", c.failed_law}, {"detail", c.detail}};
    return emit_report(std::move(report), start, c.pass);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for curved Koszul duality at desk scale"};
    app.require_subcommand(1);

    std::string family = "cuas", path, module_path = "trivial-complex", format = "json";
    int max_arity = 3, max_weight = 3, max_k = 3;
    Truncation trunc;
    int deg_lo = 0, deg_hi = 0;
    bool stability = false;

    auto add_trunc = [&](CLI::App* cmd) {
        cmd->add_option("--max-weight", trunc.max_weight, "weight truncation");
        cmd->add_option("--max-length", trunc.max_length, "word length truncation");
        cmd->add_option("--max-k", trunc.max_k, "CCX letter shift bound");
        cmd->add_option("--deg-min", trunc.deg_min, "lowest word degree kept");
        cmd->add_option("--deg-max", trunc.deg_max, "highest word degree kept");
    };

    CLI::App* coop = app.add_subcommand("check-cooperad", "verify the cooperad axioms");
    coop->add_option("--family", family, "sclie | cuas | ccx")->required();
    coop->add_option("--max-arity", max_arity, "arity bound");
    coop->add_option("--max-weight", max_weight, "weight truncation");
    coop->add_option("--max-k", max_k, "CCX shift-sum bound");

    CLI::App* alg = app.add_subcommand("check-algebra", "verify a homotopy-algebra structure");
    alg->add_option("path", path, "algebra JSON file")->required();
    alg->add_option("--max-arity", max_arity, "generator arity window");
    alg->add_option("--max-weight", max_weight, "weight window");

    CLI::App* bar = app.add_subcommand("bar", "bar construction and its square identity");
    bar->add_option("path", path, "algebra JSON file")->required();
    add_trunc(bar);

    CLI::App* aq = app.add_subcommand("aq", "Andre-Quillen cohomology");
    aq->add_option("--algebra", path, "algebra JSON file")->required();
    aq->add_option("--module", module_path, "module JSON file or 'trivial-complex'");
    std::string degrees = "0";
    aq->add_option("--degrees", degrees, "cohomological degree or range a..b");
    aq->add_flag("--stability", stability, "compare against the shrunken truncation");
    aq->add_option("--format", format, "json | table");
    add_trunc(aq);

    CLI::App* z0 = app.add_subcommand("z0", "degree-zero cocycles against infinity-morphisms");
    z0->add_option("path", path, "algebra JSON file")->required();
    add_trunc(z0);

    CLI::App* cdga = app.add_subcommand("cdga", "commutative algebra structure on the cochains");
    cdga->add_option("path", path, "algebra JSON file")->required();
    add_trunc(cdga);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (coop->parsed())
            return run_check_cooperad(family, max_arity, max_weight, max_k);
        if (alg->parsed())
            return run_check_algebra(path, max_arity, max_weight);
        if (bar->parsed())
            return run_bar(path, trunc);
        if (aq->parsed()) {
            auto dots = degrees.find("..");
            if (dots == std::string::npos) {
                deg_lo = deg_hi = std::stoi(degrees);
            } else {
                deg_lo = std::stoi(degrees.substr(0, dots));
                deg_hi = std::stoi(degrees.substr(dots + 2));
            }
            return run_aq(path, module_path, deg_lo, deg_hi, trunc, stability, format);
        }
        if (z0->parsed())
            return run_z0(path, trunc);
        if (cdga->parsed())
            return run_cdga(path, trunc);
    } catch (const UnsupportedFamily& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const TruncationTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidStructure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
