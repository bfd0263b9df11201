#include "hardy/cli_app.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hardy/approx.hpp"
#include "hardy/diagnostics.hpp"
#include "hardy/energy.hpp"
#include "hardy/errors.hpp"
#include "hardy/functions.hpp"
#include "hardy/optimizer.hpp"
#include "hardy/weights.hpp"

namespace hardy::cli {

namespace {

std::string paired_function_name(const std::string& weight_name) {
    // Catalog pairing w_i <-> f_i.
    if (weight_name.size() == 2 && weight_name[0] == 'w') return std::string("f") + weight_name[1];
    return "weight-itself";
}

struct ResolvedFunction {
    std::string name;
    std::function<double(double)> f;
};

ResolvedFunction resolve_function(const RunConfig& cfg, const Weight& wt) {
    std::string name = cfg.function.empty() ? paired_function_name(cfg.weight) : cfg.function;
    if (name == "weight-itself") return {name, wt.w};
    NamedFunction nf = get_function(name);
    return {nf.name, nf.f};
}

SolverConfig solver_config(const RunConfig& cfg) {
    SolverConfig sc;
    sc.damping = !cfg.pure_newton;
    return sc;
}

EvalGrid grid_for(const RunConfig& cfg, const Weight& wt) {
    if (cfg.x1 && cfg.x_last) return make_eval_grid(*cfg.x1, *cfg.x_last, cfg.grid_count);
    if (cfg.x1) return make_eval_grid(*cfg.x1, -*cfg.x1, cfg.grid_count);
    if (cfg.x_last) return make_eval_grid(-*cfg.x_last, *cfg.x_last, cfg.grid_count);
    return make_grid(wt, 1e-20, /*symmetric=*/true, cfg.grid_count);
}

std::vector<int> resolved_n_list(const RunConfig& cfg) {
    std::vector<int> ns = cfg.n_list;
    if (ns.empty() && cfg.n > 0) ns.push_back(cfg.n);
    if (ns.empty()) throw UsageError("no point count given; use --n or --n-list");
    std::sort(ns.begin(), ns.end());
    return ns;
}

int resolved_n(const RunConfig& cfg) {
    if (cfg.n > 0) return cfg.n;
    if (cfg.n_list.size() == 1) return cfg.n_list.front();
    throw UsageError("this command needs a single --n");
}

class CsvWriter {
  public:
    void header(const std::string& line) { body_ << line << '\n'; }
    void field(const std::string& s) { sep(); body_ << s; }
    void field(double v) { sep(); body_ << format_float(v); }
    void field(int v) { sep(); body_ << v; }
    void end_row() {
        body_ << '\n';
        first_ = true;
    }
    [[nodiscard]] std::string str() const { return body_.str(); }

  private:
    void sep() {
        if (!first_) body_ << ',';
        first_ = false;
    }
    std::ostringstream body_;
    bool first_ = true;
};

void deliver(const std::string& text, const RunConfig& cfg, std::ostream& out) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) throw UsageError("cannot open output file: " + cfg.out);
    file << text;
}

std::string cmd_points(const RunConfig& cfg) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    SolveResult res = solve(wt, resolved_n(cfg), solver_config(cfg));
    CsvWriter csv;
    csv.header("index,a");
    for (int i = 0; i < res.points.size(); ++i) {
        csv.field(i + 1);
        csv.field(res.points[i]);
        csv.end_row();
    }
    return csv.str();
}

std::string cmd_approx(const RunConfig& cfg) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    ResolvedFunction fn = resolve_function(cfg, wt);
    BaryForm form;
    if (cfg.form == "I") form = BaryForm::I;
    else if (cfg.form == "II") form = BaryForm::II;
    else throw UsageError("--form must be I or II");
    SolveResult res = solve(wt, resolved_n(cfg), solver_config(cfg));
    Approximant app(wt, res.points, fn.f, form);
    EvalGrid grid = grid_for(cfg, wt);
    CsvWriter csv;
    csv.header("x,f,approx,abs_err");
    for (double x : grid.points) {
        double fv = fn.f(x);
        double av = app(x);
        csv.field(x);
        csv.field(fv);
        csv.field(av);
        csv.field(std::abs(fv - av));
        csv.end_row();
    }
    return csv.str();
}

std::string cmd_errors(const RunConfig& cfg) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    ResolvedFunction fn = resolve_function(cfg, wt);
    EvalGrid grid = grid_for(cfg, wt);
    ErrorTable table =
        error_table(wt, fn.f, resolved_n_list(cfg), grid, /*with_sinc=*/false, solver_config(cfg));
    CsvWriter csv;
    csv.header("n,err_I,err_II,certificate");
    for (const ErrorRow& row : table) {
        csv.field(row.n);
        csv.field(row.err_form_one);
        csv.field(row.err_form_two);
        csv.field(row.certificate);
        csv.end_row();
    }
    return csv.str();
}

std::string cmd_compare_sinc(const RunConfig& cfg) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    if (cfg.weight != "w4" && cfg.weight != "w5" && cfg.weight != "w6" && cfg.weight != "w7")
        throw UsageError("compare-sinc supports weights w4 w5 w6 w7");
    std::string expected = paired_function_name(cfg.weight);
    if (!cfg.function.empty() && cfg.function != expected)
        throw UsageError("compare-sinc pairs " + cfg.weight + " with " + expected);
    ResolvedFunction fn = resolve_function(cfg, wt);
    EvalGrid grid = grid_for(cfg, wt);
    ErrorTable table =
        error_table(wt, fn.f, resolved_n_list(cfg), grid, /*with_sinc=*/true, solver_config(cfg));
    CsvWriter csv;
    csv.header("n,err_I,err_II,err_sinc");
    for (const ErrorRow& row : table) {
        csv.field(row.n);
        csv.field(row.err_form_one);
        csv.field(row.err_form_two);
        csv.field(row.err_sinc);
        csv.end_row();
    }
    return csv.str();
}

std::string cmd_bound(const RunConfig& cfg) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    EvalGrid grid = grid_for(cfg, wt);
    CsvWriter csv;
    csv.header("n,energy,grad_inf_norm,f_d,certificate,min_potential,bound,pass");
    for (int n : resolved_n_list(cfg)) {
        SolveResult res = solve(wt, n, solver_config(cfg));
        LowerBoundCheck lb = check_potential_lower_bound(wt, res.points, grid);
        const EnergyReport& rep = res.energy_report;
        csv.field(n);
        csv.field(rep.energy);
        csv.field(rep.grad_inf_norm);
        csv.field(rep.f_d);
        csv.field(rep.certificate);
        csv.field(lb.min_value);
        csv.field(lb.bound);
        csv.field(lb.pass ? 1 : 0);
        csv.end_row();
    }
    return csv.str();
}

int cmd_diag(const RunConfig& cfg, std::ostream& out) {
    Weight wt = get_weight(cfg.weight, cfg.epsilon);
    SolveResult res = solve(wt, resolved_n(cfg), solver_config(cfg));
    EvalGrid grid = grid_for(cfg, wt);
    LowerBoundCheck lb = check_potential_lower_bound(wt, res.points, grid);
    AppendixReport ap = appendix_quantities(wt, res.points, cfg.quad_order);
    const EnergyReport& rep = res.energy_report;

    std::ostringstream text;
    text << "weight " << cfg.weight << ", n = " << res.points.size() << ", converged in "
         << res.iterations << " iterations (last step " << format_float(res.final_step_inf_norm)
         << ")\n";
    text << "energy            " << format_float(rep.energy) << '\n';
    text << "grad_inf_norm     " << format_float(rep.grad_inf_norm) << '\n';
    text << "f_d               " << format_float(rep.f_d) << '\n';
    text << "certificate       " << format_float(rep.certificate) << '\n';
    text << "potential bound: min U+Q = " << format_float(lb.min_value)
         << ", f_d/(n-1) = " << format_float(lb.bound) << " -> "
         << (lb.pass ? "pass" : "FAIL") << '\n';
    text << "h_sep             " << format_float(ap.h_sep) << '\n';
    text << "c_d               " << format_float(ap.c_d) << '\n';
    text << "C_n               " << format_float(ap.big_c_n) << '\n';
    text << "S quadrature      " << format_float(ap.s_quad_sum) << '\n';
    text << "T quadrature      " << format_float(ap.t_quad_sum) << '\n';
    text << "e1                " << format_float(ap.e1) << '\n';
    if (ap.applicable) {
        text << "S analytic bound  " << format_float(ap.s_bound_sum) << '\n';
        text << "T analytic bound  " << format_float(ap.t_bound_sum) << '\n';
        text << "assembled gap bound " << format_float(ap.assembled_bound)
             << "  (continuous-vs-discrete constant; equilibrium field term excluded)\n";
    } else {
        text << "analytic bounds   not applicable (max gap > 1)\n";
    }
    out << text.str();

    if (!cfg.out.empty()) {
        CsvWriter csv;
        csv.header("key,value");
        auto row = [&](const std::string& k, double v) {
            csv.field(k);
            csv.field(v);
            csv.end_row();
        };
        row("n", res.points.size());
        row("iterations", res.iterations);
        row("energy", rep.energy);
        row("grad_inf_norm", rep.grad_inf_norm);
        row("f_d", rep.f_d);
        row("certificate", rep.certificate);
        row("min_potential", lb.min_value);
        row("potential_bound", lb.bound);
        row("potential_pass", lb.pass ? 1.0 : 0.0);
        row("h_sep", ap.h_sep);
        row("c_d", ap.c_d);
        row("C_n", ap.big_c_n);
        row("s_quad_sum", ap.s_quad_sum);
        row("t_quad_sum", ap.t_quad_sum);
        row("e1", ap.e1);
        row("s_bound_sum", ap.s_bound_sum);
        row("t_bound_sum", ap.t_bound_sum);
        row("assembled_bound", ap.assembled_bound);
        row("applicable", ap.applicable ? 1.0 : 0.0);
        std::ofstream file(cfg.out, std::ios::binary);
        if (!file) throw UsageError("cannot open output file: " + cfg.out);
        file << csv.str();
    }
    return 0;
}

} // namespace

std::string format_float(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.weight.empty()) throw UsageError("--weight is required");
        if (cfg.command == "points") deliver(cmd_points(cfg), cfg, out);
        else if (cfg.command == "approx") deliver(cmd_approx(cfg), cfg, out);
        else if (cfg.command == "errors") deliver(cmd_errors(cfg), cfg, out);
        else if (cfg.command == "compare-sinc") deliver(cmd_compare_sinc(cfg), cfg, out);
        else if (cfg.command == "bound") deliver(cmd_bound(cfg), cfg, out);
        else if (cfg.command == "diag") return cmd_diag(cfg, out);
        else throw UsageError("unknown command '" + cfg.command +
                              "'; expected points, approx, errors, compare-sinc, bound or diag");
        return 0;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << "\niter,energy,step_inf_norm\n";
        for (size_t i = 0; i < e.trace.size(); ++i)
            err << i + 1 << ',' << format_float(e.trace[i].energy) << ','
                << format_float(e.trace[i].step_inf_norm) << '\n';
        return 3;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Near-optimal sampling points and interpolation formulas for weighted "
                 "analytic functions"};
    app.set_config("--config", "", "Plain key = value config file (# comments)");
    app.add_option("command", cfg.command,
                   "points | approx | errors | compare-sinc | bound | diag")
        ->required();
    app.add_option("--weight", cfg.weight, "Weight name (w1..w7)");
    app.add_option("--epsilon", cfg.epsilon, "Strip shrink parameter")->capture_default_str();
    app.add_option("--n", cfg.n, "Number of sampling points");
    app.add_option("--n-list", cfg.n_list, "Comma-separated list of n values")->delimiter(',');
    app.add_option("--form", cfg.form, "Barycentric form, I or II")->capture_default_str();
    app.add_option("--function", cfg.function, "f1..f7 or weight-itself (default: paired)");
    app.add_option("--x1", cfg.x1, "Grid left endpoint override");
    app.add_option("--xlast", cfg.x_last, "Grid right endpoint override");
    app.add_option("--grid-count", cfg.grid_count, "Grid size")->capture_default_str();
    app.add_option("--out", cfg.out, "Output CSV path (default: stdout)");
    app.add_flag("--pure-newton", cfg.pure_newton, "Disable the damped line search");
    app.add_option("--quad-order", cfg.quad_order, "Gauss order for diagnostics")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return run(cfg, out, err);
}

} // namespace hardy::cli
