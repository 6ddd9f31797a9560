// Command-line front end: constants ledger, point evaluation, bound tables,
// root/delta reporting, and the verification suite with machine-readable
// output. Exit codes: 0 all checks pass, 1 at least one failed, 2 usage or
// configuration error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rfunc/analysis.hpp"
#include "rfunc/bounds.hpp"
#include "rfunc/polygamma.hpp"
#include "rfunc/rfunction.hpp"
#include "rfunc/verify.hpp"

namespace {

using namespace rfunc;

EvalMethod parse_method(const std::string& m) {
    if (m == "auto") return EvalMethod::automatic;
    if (m == "direct") return EvalMethod::direct;
    if (m == "origin") return EvalMethod::origin_series;
    if (m == "center") return EvalMethod::center_series;
    throw CLI::ValidationError("--method must be auto|direct|origin|center");
}

const char* method_name(EvalMethod m) {
    switch (m) {
        case EvalMethod::direct: return "direct";
        case EvalMethod::origin_series: return "origin";
        case EvalMethod::center_series: return "center";
        case EvalMethod::automatic: return "auto";
    }
    return "?";
}

int cmd_constants(const std::string& format, const std::string& out_path) {
    if (!format.empty()) {
        const TableFormat fmt = format == "json" ? TableFormat::json : TableFormat::csv;
        if (out_path.empty())
            emit_table(TableKind::constants, {}, fmt, std::cout);
        else
            emit_table(TableKind::constants, {}, fmt, out_path);
        return 0;
    }
    std::printf("%-22s %-24s %-15s %s\n", "name", "computed", "reference", "note");
    for (const auto& r : constants_ledger())
        std::printf("%-22s %-24.17g %-15s %s\n", r.name.c_str(), r.computed,
                    r.reference.c_str(), r.note.c_str());
    return 0;
}

int cmd_eval(const std::string& fn, double x, const std::string& method) {
    const EvalMethod m = parse_method(method);
    if (fn == "R") {
        const auto v = R_eval(x, m);
        std::printf("R(%.17g) = %.17g  method=%s  est_abs_err=%.3g\n", x, v.value,
                    method_name(v.method), v.est_abs_err);
        return 0;
    }
    if (fn == "f") {
        const auto v = f_eval(x, m);
        std::printf("f(%.17g) = %.17g  method=%s  est_abs_err=%.3g\n", x, v.value,
                    method_name(v.method), v.est_abs_err);
        return 0;
    }
    if (m != EvalMethod::automatic)
        throw CLI::ValidationError("--method applies to --fn R and --fn f only");
    double v = 0.0;
    if (fn == "B") v = B_fn(x);
    else if (fn == "F1") v = F_eval(1, x);
    else if (fn == "F2") v = F_eval(2, x);
    else if (fn == "F3") v = F_eval(3, x);
    else if (fn == "H") v = H_eval(x);
    else if (fn == "H3") v = H3_eval(x);
    else throw CLI::ValidationError("--fn must be one of R|B|f|F1|F2|F3|H|H3");
    std::printf("%s(%.17g) = %.17g\n", fn.c_str(), x, v);
    return 0;
}

int cmd_bounds(double x, int n, double delta) {
    const double R = R_eval(x).value;
    std::printf("x = %.17g   R(x) = %.17g\n", x, R);
    std::printf("%-20s %-24s %-24s %s\n", "method", "lower", "upper", "gap");
    auto row = [&](const char* name, const BoundPair& b) {
        std::printf("%-20s %-24.17g %-24.17g %.6g\n", name, b.lower, b.upper,
                    b.upper - b.lower);
    };
    row("sine_poly", bound_sine_poly(x));
    row("origin_poly", bound_origin_poly(n < 1 ? 1 : n, x));
    row("center_poly", bound_center_poly(n < 0 ? 0 : n, x));
    row("multiplicative", bound_multiplicative(x, delta));
    row("additive", bound_additive(x));
    row("envelope", bound_envelope(n < 1 ? 2 : n, x, delta));
    return 0;
}

int cmd_roots() {
    const double x0 = find_root(make_bracket(RootTarget::h9, 0.27, 0.28), 1e-13);
    const DeltaEstimate de = delta_estimate(1e-13);
    const double x2 = find_root(make_bracket(RootTarget::H3, 1e-6, 0.5 - 1e-9), 1e-13);
    const Crossings cr = crossings(de.delta);
    std::printf("x0  (zero of h9)            = %.17g   h9(x0) = %.3g\n", x0, h9_eval(x0));
    std::printf("x1  (argmax of F1)          = %.17g   |H(x1)| = %.3g\n", de.x1, de.residual_H);
    std::printf("delta = F1(x1)              = %.17g\n", de.delta);
    std::printf("x2  (argmax of F2)          = %.17g   H3(x2) = %.3g\n", x2, H3_eval(x2));
    std::printf("x5  (critical point of F5)  = %.17g\n", cr.x5);
    std::printf("x6, x7  (F5 = pi(delta-1))  = %.17g, %.17g\n", cr.x6, cr.x7);
    std::printf("x8  (critical point of F7)  = %.17g\n", cr.x8);
    std::printf("x9, x10 (F7 = pi(delta-1))  = %.17g, %.17g\n", cr.x9, cr.x10);
    return 0;
}

int cmd_table(const std::string& what, const GridSpec& grid, const std::string& format,
              const std::string& out_path) {
    TableKind kind;
    if (what == "constants") kind = TableKind::constants;
    else if (what == "bounds") kind = TableKind::bounds;
    else if (what == "errors") kind = TableKind::errors;
    else throw CLI::ValidationError("--what must be constants|bounds|errors");
    const TableFormat fmt = format == "json" ? TableFormat::json : TableFormat::csv;
    if (out_path.empty())
        emit_table(kind, grid, fmt, std::cout);
    else
        emit_table(kind, grid, fmt, out_path);
    return 0;
}

int cmd_verify(const VerifyConfig& cfg, const std::string& json_path) {
    const VerifyReport rep = run_verify(cfg);
    for (const auto& c : rep.checks) {
        std::printf("%s %-42s expected=%- .10g actual=%- .10g tol=%.3g%s%s\n",
                    c.pass ? "PASS" : (c.advisory ? "warn" : "FAIL"), c.name.c_str(),
                    c.expected, c.actual, c.tolerance, c.note.empty() ? "" : "  # ",
                    c.note.c_str());
    }
    std::printf("passed %d  failed %d  advisory-failed %d  runtime %.0f ms\n", rep.passed,
                rep.failed, rep.advisory_failed, rep.runtime_ms);
    if (!json_path.empty()) {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot open " + json_path);
        write_report_json(rep, cfg, out);
    }
    return rep.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical library and verification tool for the Ramanujan R-function"};
    app.require_subcommand(1);

    auto* sc_const = app.add_subcommand("constants", "print the constants ledger");
    std::string c_format, c_out;
    sc_const->add_option("--format", c_format, "csv or json (default: aligned text)");
    sc_const->add_option("--out", c_out, "output path (default: stdout)");

    auto* sc_eval = app.add_subcommand("eval", "evaluate one function at one point");
    std::string e_fn, e_method = "auto";
    double e_x = 0.25;
    sc_eval->add_option("--fn", e_fn, "R|B|f|F1|F2|F3|H|H3")->required();
    sc_eval->add_option("--x", e_x, "evaluation point")->required();
    sc_eval->add_option("--method", e_method, "auto|direct|origin|center");

    auto* sc_bounds = app.add_subcommand("bounds", "two-sided bounds for R at a point");
    double b_x = 0.25, b_delta = kDeltaSafeUpper;
    int b_n = -1;
    sc_bounds->add_option("--x", b_x, "evaluation point")->required();
    sc_bounds->add_option("--n", b_n, "polynomial family index");
    sc_bounds->add_option("--delta", b_delta, "multiplicative coefficient");

    auto* sc_roots = app.add_subcommand("roots", "roots, crossings and the delta estimate");

    auto* sc_table = app.add_subcommand("table", "emit a CSV/JSON table");
    std::string t_what, t_format = "csv", t_out;
    GridSpec t_grid;
    sc_table->add_option("--what", t_what, "constants|bounds|errors")->required();
    sc_table->add_option("--from", t_grid.from, "grid start (in (0, 1/2])");
    sc_table->add_option("--to", t_grid.to, "grid end");
    sc_table->add_option("--points", t_grid.points, "grid size");
    sc_table->add_option("--format", t_format, "csv|json");
    sc_table->add_option("--out", t_out, "output path (default: stdout)");

    auto* sc_verify = app.add_subcommand("verify", "run the full verification suite");
    VerifyConfig cfg;
    std::string v_json;
    sc_verify->add_option("--grid", cfg.grid_size, "bound-soundness grid size");
    sc_verify->add_option("--table-N", cfg.table_N, "coefficient table size");
    sc_verify->add_option("--seed", cfg.seed, "seed for random sample points");
    sc_verify->add_option("--tol-constants", cfg.tol_constants, "constants tolerance");
    sc_verify->add_option("--tol-grid", cfg.tol_grid, "grid inequality slack");
    sc_verify->add_option("--max-cm-order", cfg.max_cm_order, "deepest CM order");
    sc_verify->add_flag("--strict", cfg.strict, "count the conjecture probe as a failure");
    sc_verify->add_flag("--printed-tolerance", cfg.use_printed_tolerance,
                        "constants: 2 units in the last printed place");
    sc_verify->add_option("--json", v_json, "write the JSON report here");

    try {
        app.parse(argc, argv);
        if (sc_const->parsed()) return cmd_constants(c_format, c_out);
        if (sc_eval->parsed()) return cmd_eval(e_fn, e_x, e_method);
        if (sc_bounds->parsed()) return cmd_bounds(b_x, b_n, b_delta);
        if (sc_roots->parsed()) return cmd_roots();
        if (sc_table->parsed()) return cmd_table(t_what, t_grid, t_format, t_out);
        if (sc_verify->parsed()) return cmd_verify(cfg, v_json);
        std::fprintf(stderr, "no subcommand given\n");
        return 2;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;  // --help exits 0, usage errors exit 2
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
