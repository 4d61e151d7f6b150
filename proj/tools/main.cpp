// Command line front end. Every emitted table is byte-deterministic for a
// fixed invocation so runs can be diffed.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bgls/acceptance.hpp"
#include "bgls/criteria.hpp"
#include "bgls/dilation.hpp"
#include "bgls/errors.hpp"
#include "bgls/expr.hpp"
#include "bgls/indices.hpp"
#include "bgls/io.hpp"

namespace {

using namespace bgls;

struct Args {
    std::string interval = "2,4";
    std::string psi = "canonical";
    std::string nu = "const(1)";
    std::string blocks = "block(1,0)";
    std::string fn;
    std::vector<double> s;
    std::vector<double> matrix;
    double sigma = 0.0;
    bool sigma_set = false;
    double alpha = 0.6;
    double beta = 0.3;
    int levels = 6;
    int probe_levels = 12;
    double tol = 0.0;
    std::string out;
    std::string format = "json";
    std::size_t block_index = 0;
    std::string direction = "upper";
    std::string op = "P_alpha";
};

OutputFormat format_of(const Args& a) {
    return a.format == "csv" ? OutputFormat::csv : OutputFormat::json;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

std::string relation_text(NormRelation r) {
    return r == NormRelation::equality_expected ? "equality_expected" : "upper_bound_only";
}

std::string join_semicolon(const std::vector<double>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ';';
        out += format_g17(v[i]);
    }
    return out;
}

// The sink outlives the run; a file when --out is given, stdout otherwise.
std::ostream& open_sink(const Args& a, std::unique_ptr<std::ofstream>& holder) {
    if (a.out.empty()) return std::cout;
    holder = std::make_unique<std::ofstream>(a.out);
    if (!*holder) throw std::invalid_argument("cannot open output file " + a.out);
    return *holder;
}

TableHeader header_of(const Args& a, std::string quantity, std::string grid = "none") {
    TableHeader h;
    h.quantity = std::move(quantity);
    h.grid_kind = std::move(grid);
    h.tolerance = a.tol;
    return h;
}

int run_norm(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    GrandSpace space(dom, parse_psi(a.psi, iv, dom));
    const ProductFunction f = parse_function(a.fn, dom);
    const SupOverP r = bgls_norm(space, f);

    Table t;
    t.header = header_of(a, "bgls_norm");
    t.columns = {"norm", "log_norm", "argmax_p", "endpoint"};
    t.rows.push_back({format_g17(r.value), format_g17(r.log_value), format_g17(r.argmax_p),
                      to_string(r.tag)});
    t.notes = {{"diverged", bool_text(r.diverged)}, {"interval", iv.str()}};
    write_table(os, t, format_of(a));
    return 0;
}

int run_fundfn(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    GrandSpace space(dom, parse_psi(a.psi, iv, dom));

    std::vector<double> grid, values;
    for (int e = -6; e <= 6; ++e) {
        grid.push_back(std::pow(10.0, e));
        values.push_back(fundamental_function(space, grid.back()).value);
    }
    emit_sweep(os, header_of(a, "fundamental_function", "log10"), grid, values, format_of(a),
               "delta", "phi");
    return 0;
}

int run_dilation_norm(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    const PsiFunction psi = parse_psi(a.psi, iv, dom);
    const PsiFunction nu = parse_psi(a.nu, iv, dom);
    if (a.s.empty()) throw std::invalid_argument("dilation-norm: --s is required");

    if (a.s.size() == dom.block_count()) {
        const OperatorNormResult r = dilation_norm_empirical(psi, nu, dom, a.s);
        Table t;
        t.header = header_of(a, "dilation_norm");
        t.columns = {"s", "closed_form", "empirical_lower", "relation"};
        t.rows.push_back({join_semicolon(a.s), format_g17(r.closed_form),
                          format_g17(r.empirical_lower), relation_text(r.relation)});
        t.notes = {{"log_scale_factor", format_g17(r.log_scale_factor)}};
        write_table(os, t, format_of(a));
        return 0;
    }
    if (dom.block_count() == 1) {
        std::vector<double> values;
        for (double sv : a.s)
            values.push_back(dilation_norm_closed_form(psi, nu, dom, {sv}));
        emit_sweep(os, header_of(a, "dilation_norm_sweep", "list"), a.s, values, format_of(a),
                   "s", "norm");
        return 0;
    }
    throw std::invalid_argument("dilation-norm: --s needs one entry per block, or a sweep "
                                "list over a single block");
}

int run_matrix_dilation(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain unit;
    const PsiFunction psi = parse_psi(a.psi, iv, unit);
    const PsiFunction nu = parse_psi(a.nu, iv, unit);
    if (a.matrix.empty()) throw std::invalid_argument("matrix-dilation: --matrix is required");
    const auto n = static_cast<std::size_t>(std::lround(std::sqrt(double(a.matrix.size()))));
    if (n * n != a.matrix.size())
        throw std::invalid_argument("matrix-dilation: --matrix needs n*n row-major entries");
    const Matrix A(n, a.matrix);

    std::optional<double> sigma;
    if (a.sigma_set) sigma = a.sigma;
    const OperatorNormResult r = matrix_dilation_norm(psi, nu, A, sigma);

    Table t;
    t.header = header_of(a, "matrix_dilation_norm");
    t.columns = {"det", "log_phi_arg", "closed_form", "empirical_lower", "relation"};
    t.rows.push_back({format_g17(A.det()), format_g17(r.log_scale_factor),
                      format_g17(r.closed_form), format_g17(r.empirical_lower),
                      relation_text(r.relation)});
    if (a.sigma_set) t.notes.push_back({"sigma", format_g17(a.sigma)});
    write_table(os, t, format_of(a));
    return 0;
}

int run_boyd(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    const PsiFunction psi = parse_psi(a.psi, iv, dom);
    const PsiFunction nu = parse_psi(a.nu, iv, dom);
    const BoydDirection dir =
        a.direction == "lower" ? BoydDirection::lower : BoydDirection::upper;
    const BoydTrace trace = boyd_trace(psi, nu, dom, a.block_index, dir, a.levels);

    Table t;
    t.header = header_of(a, "boyd_trace", "log10");
    t.columns = {"log_s", "log_h", "slope"};
    for (std::size_t i = 0; i < trace.log_s.size(); ++i) {
        t.rows.push_back({format_g17(trace.log_s[i]), format_g17(trace.log_h[i]),
                          i == 0 ? std::string("") : format_g17(trace.slopes[i - 1])});
    }
    t.notes = {{"extrapolated", format_g17(trace.extrapolated)},
               {"fit_residual", format_g17(trace.fit_residual)},
               {"direction", a.direction},
               {"block", std::to_string(a.block_index)}};
    write_table(os, t, format_of(a));
    return 0;
}

int run_shimogaki(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    GrandSpace space(dom, parse_psi(a.psi, iv, dom));
    const ShimogakiReport r = shimogaki_indices(space, a.levels);

    Table t;
    t.header = header_of(a, "shimogaki_indices", "log10");
    t.columns = {"t", "M"};
    for (const auto& [tt, m] : r.M_profile)
        t.rows.push_back({format_g17(tt), format_g17(m)});
    t.notes = {{"beta_minus", format_g17(r.beta_minus)},
               {"beta_plus", format_g17(r.beta_plus)},
               {"beta_minus_sampled", format_g17(r.beta_minus_sampled)},
               {"beta_plus_sampled", format_g17(r.beta_plus_sampled)},
               {"flagged", bool_text(r.flagged)}};
    write_table(os, t, format_of(a));
    return 0;
}

int run_criteria(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    Table t;
    t.header = header_of(a, "boundedness_criteria");
    t.columns = {"operator", "parameter", "bounded"};
    const auto push = [&](OperatorTag op, const std::map<std::string, double>& params,
                          const std::string& shown) {
        const CriterionVerdict v = boundedness(op, iv, params);
        t.rows.push_back({to_string(op), shown, bool_text(v.bounded)});
        t.notes.push_back({to_string(op), v.condition_text});
    };
    push(OperatorTag::P_alpha, {{"alpha", a.alpha}}, format_g17(a.alpha));
    push(OperatorTag::Q_beta, {{"beta", a.beta}}, format_g17(a.beta));
    push(OperatorTag::maximal, {}, "");
    push(OperatorTag::hilbert, {}, "");
    push(OperatorTag::fourier, {}, "");
    write_table(os, t, format_of(a));
    return 0;
}

int run_probe(const Args& a, std::ostream& os) {
    const Interval iv = parse_interval(a.interval);
    const WeightedDomain dom = parse_blocks(a.blocks);
    GrandSpace space(dom, parse_psi(a.psi, iv, dom));
    const bool is_p = a.op != "Q_beta";
    const double param = is_p ? a.alpha : a.beta;
    const ProbeReport r = hardy_norm_probe(
        is_p ? OperatorTag::P_alpha : OperatorTag::Q_beta, space, param, a.probe_levels);

    Table t;
    t.header = header_of(a, "hardy_norm_probe");
    t.columns = {"n", "ratio"};
    for (std::size_t i = 0; i < r.ns.size(); ++i)
        t.rows.push_back({format_g17(r.ns[i]), format_g17(r.ratios[i])});
    t.notes = {{"flag", to_string(r.flag)},
               {"operator", a.op},
               {"parameter", format_g17(param)}};
    write_table(os, t, format_of(a));
    return 0;
}

int run_verify_all(const Args& a, std::ostream& os) {
    (void)a;
    const auto results = run_acceptance(os);
    return all_passed(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"grand-space norms, fundamental functions, dilation operator norms, "
                 "and growth indices on weighted product domains"};
    app.require_subcommand(1);
    app.set_config("--config");

    Args a;
    const auto add_common = [&a](CLI::App* cmd) {
        cmd->add_option("--interval", a.interval, "norming interval, e.g. 2,4 or 1,inf");
        cmd->add_option("--psi", a.psi, "psi expression");
        cmd->add_option("--blocks", a.blocks, "domain blocks, e.g. block(1,0);block(2,1)");
        cmd->add_option("--tol", a.tol, "tolerance echoed into the output header");
        cmd->add_option("--out", a.out, "write output to this file instead of stdout");
        cmd->add_option("--format", a.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* norm = app.add_subcommand("norm", "grand-space norm of a function");
    add_common(norm);
    norm->add_option("--fn", a.fn, "function expression")->required();

    CLI::App* fundfn =
        app.add_subcommand("fundfn", "fundamental function over a 13-point log sweep");
    add_common(fundfn);

    CLI::App* dil = app.add_subcommand("dilation-norm",
                                       "operator norm of a blockwise argument scaling");
    add_common(dil);
    dil->add_option("--nu", a.nu, "target-side psi multiplier expression");
    dil->add_option("--s", a.s, "scale factors, one per block, or a sweep list")
        ->delimiter(',')
        ->required();

    CLI::App* mat = app.add_subcommand("matrix-dilation",
                                       "operator norm of a matrix argument scaling");
    add_common(mat);
    mat->add_option("--nu", a.nu, "target-side psi multiplier expression");
    mat->add_option("--matrix", a.matrix, "row-major square matrix entries")
        ->delimiter(',')
        ->required();
    auto* sigma_opt = mat->add_option("--sigma", a.sigma, "radial weight exponent");

    CLI::App* boyd = app.add_subcommand("boyd", "dilation-norm growth trace and Boyd index");
    add_common(boyd);
    boyd->add_option("--nu", a.nu, "target-side psi multiplier expression");
    boyd->add_option("--levels", a.levels, "trace depth");
    boyd->add_option("--block-index", a.block_index, "zero-based block coordinate");
    boyd->add_option("--direction", a.direction, "which index")
        ->check(CLI::IsMember({"upper", "lower"}));

    CLI::App* shim = app.add_subcommand("shimogaki", "dilation function and its indices");
    add_common(shim);
    shim->add_option("--levels", a.levels, "extrapolation depth");

    CLI::App* crit = app.add_subcommand("criteria", "operator boundedness verdicts");
    add_common(crit);
    crit->add_option("--alpha", a.alpha, "downward average parameter");
    crit->add_option("--beta", a.beta, "upward average parameter");

    CLI::App* probe = app.add_subcommand("probe", "empirical growth probe for an average");
    add_common(probe);
    probe->add_option("--op", a.op, "which average")
        ->check(CLI::IsMember({"P_alpha", "Q_beta"}));
    probe->add_option("--alpha", a.alpha, "downward average parameter");
    probe->add_option("--beta", a.beta, "upward average parameter");
    probe->add_option("--levels", a.probe_levels, "probe depth");

    CLI::App* verify = app.add_subcommand("verify-all", "run the full verification suite");
    add_common(verify);

    try {
        app.parse(argc, argv);
        a.sigma_set = sigma_opt->count() > 0;

        std::unique_ptr<std::ofstream> holder;
        std::ostream& os = open_sink(a, holder);

        if (norm->parsed()) return run_norm(a, os);
        if (fundfn->parsed()) return run_fundfn(a, os);
        if (dil->parsed()) return run_dilation_norm(a, os);
        if (mat->parsed()) return run_matrix_dilation(a, os);
        if (boyd->parsed()) return run_boyd(a, os);
        if (shim->parsed()) return run_shimogaki(a, os);
        if (crit->parsed()) return run_criteria(a, os);
        if (probe->parsed()) return run_probe(a, os);
        if (verify->parsed()) return run_verify_all(a, os);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const bgls::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const DivergenceError& e) {
        std::cerr << "divergent: " << e.what() << "\n";
        return 3;
    } catch (const ToleranceError& e) {
        std::cerr << "tolerance not reached: " << e.what() << "\n";
        return 3;
    } catch (const StructureError& e) {
        std::cerr << "structure error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
