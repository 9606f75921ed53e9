#include "fracg/cli.hpp"

#include <cmath>
#include <cstdio>
#include <iomanip>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fracg/errors.hpp"
#include "fracg/gfactor.hpp"
#include "fracg/leptons.hpp"
#include "fracg/mrl.hpp"
#include "fracg/verify.hpp"

namespace fracg {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSolver = 2;
constexpr int kExitVerify = 3;

// Machine-mode numbers: 17 significant digits, lossless round trip.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<LeptonRecord> dataset_for(const std::string& data_path) {
    if (data_path.empty()) return default_leptons();
    return load_leptons(data_path);
}

const char* method_name(GFactorSolution::Method m) {
    switch (m) {
        case GFactorSolution::Method::bisection: return "bisection";
        case GFactorSolution::Method::newton: return "newton";
        case GFactorSolution::Method::hybrid: return "hybrid";
    }
    return "?";
}

struct DerivSpec {
    SampledFunction f;
    std::string label;
    bool has_closed = false;
    double closed_param = 0.0;  // exponent for pow, value for const
    bool is_const = false;
};

DerivSpec parse_function(const std::string& spec) {
    DerivSpec d;
    d.label = spec;
    if (spec == "exp") {
        d.f = SampledFunction{[](double t) { return std::exp(t); }};
        return d;
    }
    if (spec == "sin") {
        d.f = SampledFunction{[](double t) { return std::sin(t); }};
        return d;
    }
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string kind = spec.substr(0, colon);
        double param = 0.0;
        try {
            std::size_t pos = 0;
            param = std::stod(spec.substr(colon + 1), &pos);
            if (pos != spec.size() - colon - 1) throw std::invalid_argument(spec);
        } catch (const std::exception&) {
            throw DomainError("cannot parse function parameter in '" + spec + "'");
        }
        if (kind == "pow") {
            if (!(param > 0.0)) throw DomainError("pow exponent must be > 0");
            d.f = SampledFunction{[param](double t) { return std::pow(t, param); }};
            d.has_closed = true;
            d.closed_param = param;
            return d;
        }
        if (kind == "const") {
            d.f = SampledFunction{[param](double) { return param; }};
            d.has_closed = true;
            d.is_const = true;
            d.closed_param = param;
            return d;
        }
    }
    throw DomainError("unknown function '" + spec +
                      "' (catalog: pow:<g>, const:<k>, exp, sin)");
}

ordered_json row_json(const ReportRow& r) {
    ordered_json j;
    j["lepton"] = r.lepton;
    j["source"] = r.source;
    j["g"] = r.g;
    if (r.ok) {
        j["alpha"] = r.alpha;
        j["residual"] = r.residual;
        j["iterations"] = r.iterations;
    } else {
        j["error"] = r.error;
    }
    return j;
}

int cmd_eval(double alpha, const std::string& format, std::ostream& out) {
    const double g = g_frac(FractionalOrder(alpha));
    if (format == "csv") {
        out << "alpha,g_frac\n" << fmt17(alpha) << "," << fmt17(g) << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["config"] = {{"command", "gfactor eval"}, {"alpha", alpha}};
        j["rows"] = ordered_json::array({{{"alpha", alpha}, {"g_frac", g}}});
        out << j.dump(2) << "\n";
    } else {
        out << "g_frac(" << fmt17(alpha) << ") = " << fmt17(g) << "\n";
    }
    return kExitOk;
}

int cmd_invert(double g, const InvertOptions& opts, const std::string& format,
               std::ostream& out) {
    const GFactorSolution s = invert_g(g, opts);
    if (format == "csv") {
        out << "g,alpha,residual,iterations,method\n"
            << fmt17(s.g_input) << "," << fmt17(s.alpha) << "," << fmt17(s.residual)
            << "," << s.iterations << "," << method_name(s.method) << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["config"] = {{"command", "gfactor invert"},
                       {"g", g},
                       {"bracket", {opts.bracket_lo, opts.bracket_hi}},
                       {"tol", opts.tol}};
        j["rows"] = ordered_json::array({{{"g", s.g_input},
                                          {"alpha", s.alpha},
                                          {"residual", s.residual},
                                          {"iterations", s.iterations},
                                          {"method", method_name(s.method)}}});
        out << j.dump(2) << "\n";
    } else {
        out << "alpha      = " << fmt17(s.alpha) << "\n"
            << "g          = " << fmt17(s.g_input) << "\n"
            << "residual   = " << fmt17(s.residual) << "\n"
            << "iterations = " << s.iterations << "\n"
            << "method     = " << method_name(s.method) << "\n";
    }
    return kExitOk;
}

int cmd_table(const std::string& data_path, const InvertOptions& opts,
              const std::string& format, std::ostream& out) {
    const HierarchyReport rep = hierarchy_report(dataset_for(data_path), opts);
    if (format == "csv") {
        out << "lepton,source,g,alpha,residual,iterations\n";
        for (const auto& r : rep.rows) {
            out << r.lepton << "," << r.source << "," << fmt17(r.g) << ",";
            if (r.ok)
                out << fmt17(r.alpha) << "," << fmt17(r.residual) << "," << r.iterations;
            else
                out << ",,0";
            out << "\n";
        }
    } else if (format == "json") {
        ordered_json j;
        j["config"] = {{"command", "gfactor table"},
                       {"data", data_path.empty() ? "embedded" : data_path},
                       {"tol", opts.tol}};
        j["rows"] = ordered_json::array();
        for (const auto& r : rep.rows) j["rows"].push_back(row_json(r));
        j["hierarchy_holds"] = rep.hierarchy_holds;
        j["comparisons"] = ordered_json::array();
        for (const auto& c : rep.comparisons)
            j["comparisons"].push_back({{"lepton", c.lepton},
                                        {"alpha_exp", c.alpha_exp},
                                        {"alpha_qed", c.alpha_qed},
                                        {"qed_below_exp", c.qed_below_exp}});
        out << j.dump(2) << "\n";
    } else {
        out << std::left << std::setw(10) << "lepton" << std::setw(8) << "source"
            << std::setw(22) << "g" << std::setw(22) << "alpha" << std::setw(12)
            << "residual" << "iter\n";
        for (const auto& r : rep.rows) {
            out << std::left << std::setw(10) << r.lepton << std::setw(8) << r.source
                << std::setw(22) << fmt17(r.g);
            if (r.ok) {
                char res[32];
                std::snprintf(res, sizeof res, "%.3e", r.residual);
                out << std::setw(22) << fmt17(r.alpha) << std::setw(12) << res
                    << r.iterations << "\n";
            } else {
                out << "solver error: " << r.error << "\n";
            }
        }
        out << "hierarchy alpha(electron) > alpha(muon) > alpha(tau): "
            << (rep.hierarchy_holds ? "holds" : "violated") << "\n";
        for (const auto& c : rep.comparisons)
            out << "alpha(" << c.lepton << ",qed) " << (c.qed_below_exp ? "<" : ">")
                << " alpha(" << c.lepton << ",exp)\n";
    }
    return kExitOk;
}

int cmd_deriv(const std::string& fspec, double alpha, double x, int nodes, double gl_step,
              const std::string& format, std::ostream& out) {
    // validate every override before any evaluation starts
    const DerivSpec d = parse_function(fspec);
    const FractionalOrder a(alpha);
    if (nodes < 8) throw DomainError("--nodes must be >= 8");
    if (gl_step < 0.0) throw DomainError("--gl-step must be positive");
    if (!(x > 0.0)) throw DomainError("--x must be positive");
    const FracDerivResult r = frac_derivative(d.f, a, x, nodes, gl_step);

    bool have_closed = d.has_closed;
    double closed = 0.0;
    if (d.has_closed) closed = d.is_const ? 0.0 : power_rule(d.closed_param, a, x);
    const double deviation = have_closed ? std::abs(r.value - closed) : 0.0;

    if (format == "csv") {
        out << "function,alpha,x,gl,rl,error_estimate,grid_size,closed_form,deviation\n"
            << d.label << "," << fmt17(alpha) << "," << fmt17(x) << ","
            << fmt17(r.gl_value) << "," << fmt17(r.rl_value) << ","
            << fmt17(r.error_estimate) << "," << r.grid_size << ",";
        if (have_closed) out << fmt17(closed) << "," << fmt17(deviation);
        else out << ",";
        out << "\n";
    } else if (format == "json") {
        ordered_json j;
        j["config"] = {{"command", "deriv"}, {"function", d.label}, {"alpha", alpha},
                       {"x", x}, {"nodes", nodes}};
        ordered_json row{{"gl", r.gl_value},
                         {"rl", r.rl_value},
                         {"error_estimate", r.error_estimate},
                         {"grid_size", r.grid_size}};
        if (have_closed) {
            row["closed_form"] = closed;
            row["deviation"] = deviation;
        }
        j["rows"] = ordered_json::array({row});
        out << j.dump(2) << "\n";
    } else {
        out << "D^" << fmt17(alpha) << " " << d.label << " at x = " << fmt17(x) << "\n"
            << "  gl             = " << fmt17(r.gl_value) << "\n"
            << "  rl             = " << fmt17(r.rl_value) << "\n"
            << "  error_estimate = " << fmt17(r.error_estimate) << "\n"
            << "  grid_size      = " << r.grid_size << "\n";
        if (have_closed)
            out << "  closed_form    = " << fmt17(closed) << "\n"
                << "  deviation      = " << fmt17(deviation) << "\n";
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t seed, double alpha_restrict, bool have_alpha,
               const std::string& data_path, const std::string& format,
               std::ostream& out) {
    VerifyConfig cfg;
    cfg.seed = seed;
    if (have_alpha) cfg.alpha_restrict = FractionalOrder(alpha_restrict).value();
    cfg.dataset = dataset_for(data_path);

    const auto results = run_verification(cfg);
    bool all_pass = true;
    if (format == "csv") {
        out << "suite,max_residual,tol,pass\n";
        for (const auto& s : results) {
            out << s.name << "," << fmt17(s.max_residual) << "," << fmt17(s.tol) << ","
                << (s.pass ? "true" : "false") << "\n";
            all_pass = all_pass && s.pass;
        }
    } else if (format == "json") {
        ordered_json j;
        j["config"] = {{"command", "verify"},
                       {"seed", seed},
                       {"data", data_path.empty() ? "embedded" : data_path}};
        if (have_alpha) j["config"]["alpha"] = alpha_restrict;
        j["rows"] = ordered_json::array();
        for (const auto& s : results) {
            j["rows"].push_back({{"suite", s.name},
                                 {"max_residual", s.max_residual},
                                 {"tol", s.tol},
                                 {"pass", s.pass}});
            all_pass = all_pass && s.pass;
        }
        j["all_pass"] = all_pass;
        out << j.dump(2) << "\n";
    } else {
        for (const auto& s : results) {
            char line[160];
            std::snprintf(line, sizeof line, "%s %-28s max residual %-12.3e (tol %g)",
                          s.pass ? "PASS" : "FAIL", s.name.c_str(), s.max_residual,
                          s.tol);
            out << line << "\n";
            all_pass = all_pass && s.pass;
        }
        out << (all_pass ? "all suites passed" : "suite failures present") << "\n";
    }
    return all_pass ? kExitOk : kExitVerify;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"fractional coarse-grained toolkit: MRL derivatives, fractional "
                 "spin/Dirac algebra and the g-factor <-> fractionality mapping"};
    app.require_subcommand(1);

    std::string format = "human";
    app.add_option("--format", format, "output mode")
        ->check(CLI::IsMember({"human", "csv", "json"}))
        ->capture_default_str();

    // gfactor
    auto* gf = app.add_subcommand("gfactor", "evaluate or invert g_frac(alpha)");
    gf->require_subcommand(1);
    gf->fallthrough();

    double alpha = 1.0;
    auto* eval = gf->add_subcommand("eval", "print g_frac(alpha)");
    eval->fallthrough();
    eval->add_option("--alpha", alpha, "fractional order in (0,1]")->required();

    double g_target = 2.0;
    InvertOptions iopts;
    auto* inv = gf->add_subcommand("invert", "solve g_frac(alpha) = g");
    inv->fallthrough();
    inv->add_option("--g", g_target, "target g value")->required();
    inv->add_option("--tol", iopts.tol, "|g_frac(alpha)-g| tolerance")
        ->capture_default_str();
    inv->add_option("--bracket-lo", iopts.bracket_lo, "bracket lower end")
        ->capture_default_str();
    inv->add_option("--bracket-hi", iopts.bracket_hi, "bracket upper end")
        ->capture_default_str();

    std::string data_path;
    InvertOptions topts;
    auto* table = gf->add_subcommand("table", "hierarchy table over the dataset");
    table->fallthrough();
    table->add_option("--data", data_path, "lepton CSV (default: embedded dataset)")
        ->envname("FRACG_DATA");
    table->add_option("--tol", topts.tol, "solver tolerance")->capture_default_str();

    // deriv
    auto* deriv = app.add_subcommand("deriv", "evaluate an MRL fractional derivative");
    deriv->fallthrough();
    std::string fspec;
    double dx = 1.0;
    double dalpha = 0.5;
    int nodes = kDefaultRlNodes;
    double gl_step = 0.0;
    deriv->add_option("--f", fspec, "function: pow:<g>, const:<k>, exp, sin")->required();
    deriv->add_option("--alpha", dalpha, "fractional order in (0,1]")->required();
    deriv->add_option("--x", dx, "evaluation point")->required();
    deriv->add_option("--nodes", nodes, "integral-form grid nodes")->capture_default_str();
    deriv->add_option("--gl-step", gl_step, "limit-sum step (0 = 5e-5*x)");

    // verify
    auto* verify = app.add_subcommand("verify", "run all invariant suites");
    verify->fallthrough();
    std::uint64_t seed = VerifyConfig{}.seed;
    double valpha = 1.0;
    std::string vdata;
    verify->add_option("--seed", seed, "RNG seed")->capture_default_str();
    auto* valpha_opt =
        verify->add_option("--alpha", valpha, "restrict alpha grids to one value");
    verify->add_option("--data", vdata, "lepton CSV for the golden-table suite")
        ->envname("FRACG_DATA");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(alpha, format, out);
        if (inv->parsed()) return cmd_invert(g_target, iopts, format, out);
        if (table->parsed()) return cmd_table(data_path, topts, format, out);
        if (deriv->parsed())
            return cmd_deriv(fspec, dalpha, dx, nodes, gl_step, format, out);
        if (verify->parsed())
            return cmd_verify(seed, valpha, valpha_opt->count() > 0, vdata, format, out);
    } catch (const BracketError& e) {
        err << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const MaxIterError& e) {
        err << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "no subcommand selected\n";
    return kExitUsage;
}

}  // namespace fracg
