// Batch driver for series evaluation, intersection matrices, period rows,
// and identity verification, with JSON input/output.
//
// Exit codes: 0 when every pass flag is true, 1 when any check fails,
// 2 on usage or validation errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mfm/json_io.hpp"
#include "mfm/quadrature.hpp"

namespace {

using mfm::Complex;
using mfm::Json;

constexpr double kSweepDrawMargin = 0.05;

struct CommonOptions {
    std::string params;
    int m = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double x = 0.1;
    bool x_given = false;
    double tol = 1e-14;
    std::string out;
    int level = 0;
    std::string basis = "all";
};

Json load_source_json(const std::string& params) {
    // Inline JSON if it looks like an object, otherwise a file path.
    if (!params.empty() && params.front() == '{') {
        return Json::parse(params);
    }
    std::ifstream in(params);
    if (!in) {
        throw std::invalid_argument("cannot open parameter file: " + params);
    }
    return Json::parse(in);
}

// Resolves the parameter source: exactly one of --params or --m/--seed.
mfm::ParameterSet resolve_params(CommonOptions& opt) {
    const bool have_file = !opt.params.empty();
    const bool have_seed = opt.m > 0 && opt.seed_given;
    if (have_file == have_seed) {
        throw std::invalid_argument(
            "exactly one parameter source required: --params, or --m with --seed");
    }
    if (have_seed) {
        return mfm::random_generic(opt.m, opt.seed, kSweepDrawMargin);
    }
    const Json j = load_source_json(opt.params);
    mfm::ParameterSet p = mfm::parameter_set_from_json(j);
    if (!opt.x_given) {
        if (const auto fx = mfm::x_from_json(j)) {
            opt.x = *fx;
        }
    }
    return p;
}

void require_valid(const mfm::ParameterSet& p) {
    const auto violations = mfm::validate(p);
    if (violations.empty()) return;
    std::ostringstream os;
    os << "parameter set violates the non-integrality condition:";
    for (const auto& v : violations) {
        os << " " << (v.kind == mfm::ViolationKind::ab_integer ? "a" : "b") << v.i
           << "-" << "b" << v.j << " in Z;";
    }
    throw std::invalid_argument(os.str());
}

void emit(const Json& doc, const std::string& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out);
        if (!f) {
            throw std::invalid_argument("cannot open output file: " + out);
        }
        f << text;
    }
}

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_x = true) {
    cmd->add_option("--params", opt.params,
                    "parameter source: file path or inline JSON object");
    cmd->add_option("--m", opt.m, "dimension m for seeded parameter generation");
    cmd->add_option("--seed", opt.seed, "seed for parameter generation")
        ->each([&opt](const std::string&) { opt.seed_given = true; });
    if (with_x) {
        cmd->add_option("--x", opt.x, "evaluation point x")
            ->each([&opt](const std::string&) { opt.x_given = true; });
    }
    cmd->add_option("--tol", opt.tol, "series tail tolerance (default 1e-14)")
        ->check(CLI::Range(1e-300, 1e-2));
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
}

int run_eval(CommonOptions& opt) {
    if (opt.params.empty()) {
        throw std::invalid_argument("eval requires --params");
    }
    const Json j = load_source_json(opt.params);
    std::vector<Complex> upper;
    std::vector<Complex> lower;
    if (j.contains("upper") && j.contains("lower")) {
        for (const Json& v : j["upper"]) upper.push_back(mfm::complex_from_json(v));
        for (const Json& v : j["lower"]) lower.push_back(mfm::complex_from_json(v));
    } else {
        const mfm::ParameterSet p = mfm::parameter_set_from_json(j);
        const mfm::SeriesParameters sp = mfm::solution_parameters(0, p);
        upper = sp.upper;
        lower = sp.lower;
        if (!opt.x_given) {
            if (const auto fx = mfm::x_from_json(j)) opt.x = *fx;
        }
    }
    const mfm::SeriesValue sv =
        mfm::ghf(std::span<const Complex>(upper), std::span<const Complex>(lower),
                 Complex(opt.x, 0.0), opt.tol);
    emit(mfm::to_json(sv), opt.out);
    return 0;
}

int run_solutions(CommonOptions& opt) {
    const mfm::ParameterSet p = resolve_params(opt);
    require_valid(p);
    Json doc;
    doc["m"] = p.m;
    doc["x"] = opt.x;
    Json sols = Json::array();
    for (int k = 0; k <= p.m; ++k) {
        sols.push_back(mfm::to_json(
            mfm::fundamental_solution(k, p, Complex(opt.x, 0.0), opt.tol)));
    }
    doc["solutions"] = std::move(sols);
    emit(doc, opt.out);
    return 0;
}

int run_intersect(CommonOptions& opt) {
    const mfm::ParameterSet p = resolve_params(opt);
    require_valid(p);
    Json doc;
    doc["m"] = p.m;
    Json matrices = Json::array();
    auto add_matrix = [&](mfm::MatrixKind kind) {
        const mfm::IntersectionMatrix mat =
            kind == mfm::MatrixKind::homology ? mfm::homology_matrix(p)
                                              : mfm::cohomology_matrix(p, kind);
        Json jm = mfm::to_json(mat);
        jm["det"] = mfm::complex_to_json(mfm::determinant(mat));
        if (kind == mfm::MatrixKind::cohomology_phi) {
            const Complex closed = mfm::det_c_closed_form(p);
            const Complex det = mfm::determinant(mat);
            jm["det_closed_form"] = mfm::complex_to_json(closed);
            jm["det_rel_diff"] = std::abs(det - closed) / std::abs(closed);
        }
        matrices.push_back(std::move(jm));
    };
    if (opt.basis == "all") {
        add_matrix(mfm::MatrixKind::cohomology_phi);
        add_matrix(mfm::MatrixKind::cohomology_psi);
        add_matrix(mfm::MatrixKind::cohomology_mixed);
        add_matrix(mfm::MatrixKind::homology);
    } else if (opt.basis == "phi") {
        add_matrix(mfm::MatrixKind::cohomology_phi);
    } else if (opt.basis == "psi") {
        add_matrix(mfm::MatrixKind::cohomology_psi);
    } else if (opt.basis == "mixed") {
        add_matrix(mfm::MatrixKind::cohomology_mixed);
    } else if (opt.basis == "homology") {
        add_matrix(mfm::MatrixKind::homology);
    } else {
        throw std::invalid_argument("--basis must be phi|psi|mixed|homology|all");
    }
    doc["matrices"] = std::move(matrices);
    emit(doc, opt.out);
    return 0;
}

int run_periods(CommonOptions& opt) {
    const mfm::ParameterSet p = resolve_params(opt);
    require_valid(p);
    Json doc;
    doc["m"] = p.m;
    doc["primal"] = mfm::to_json(mfm::period_row(p, opt.x, false, opt.tol));
    doc["dual"] = mfm::to_json(mfm::period_row(p, opt.x, true, opt.tol));
    emit(doc, opt.out);
    return 0;
}

int run_verify(CommonOptions& opt) {
    const mfm::ParameterSet p = resolve_params(opt);
    require_valid(p);
    const mfm::VerificationReport tpr = mfm::tpr_residual_00(p, opt.x, opt.tol);
    const mfm::VerificationReport cor = mfm::corollary_residual(p, opt.x, opt.tol);
    Json doc;
    doc["reports"] = Json::array({mfm::to_json(tpr), mfm::to_json(cor)});
    emit(doc, opt.out);
    return (tpr.pass && cor.pass) ? 0 : 1;
}

int run_quad(CommonOptions& opt) {
    // Seeded draws for quad come from the real-parameter generator so the
    // Euler-integral real-part conditions hold.
    mfm::ParameterSet p;
    if (opt.params.empty() && opt.m > 0 && opt.seed_given) {
        p = mfm::random_euler_parameters(opt.m, opt.seed);
    } else {
        p = resolve_params(opt);
    }
    require_valid(p);
    Json reports = Json::array();
    bool all_pass = true;
    const mfm::VerificationReport euler =
        mfm::euler_integral_check(p, opt.x, opt.level);
    all_pass &= euler.pass;
    reports.push_back(mfm::to_json(euler));
    for (int n : {0, 1, 3}) {
        const mfm::VerificationReport beta = mfm::beta_product_check(p, n, opt.level);
        all_pass &= beta.pass;
        Json jb = mfm::to_json(beta);
        jb["n"] = n;
        reports.push_back(std::move(jb));
    }
    Json doc;
    doc["reports"] = std::move(reports);
    emit(doc, opt.out);
    return all_pass ? 0 : 1;
}

struct SweepOptions {
    std::string m_range = "1..4";
    int count = 20;
    std::uint64_t seed = 1;
    double tol = 1e-14;
    std::string out;
};

std::pair<int, int> parse_m_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const int m = std::stoi(s);
        return {m, m};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

int run_sweep(SweepOptions& opt) {
    const auto [m_lo, m_hi] = parse_m_range(opt.m_range);
    if (m_lo < 1 || m_hi < m_lo) {
        throw std::invalid_argument("sweep: bad --m range");
    }
    int runs = 0;
    double max_rel = 0.0;
    Json failures = Json::array();
    for (int m = m_lo; m <= m_hi; ++m) {
        const double xs[3] = {0.05, 0.1, std::min(0.2, mfm::x_max(m))};
        for (int i = 0; i < opt.count; ++i) {
            const std::uint64_t seed = opt.seed + 1000 * static_cast<std::uint64_t>(m) + i;
            const mfm::ParameterSet p = mfm::random_generic(m, seed, kSweepDrawMargin);
            for (double x : xs) {
                for (const bool corollary : {false, true}) {
                    mfm::VerificationReport r =
                        corollary ? mfm::corollary_residual(p, x, opt.tol)
                                  : mfm::tpr_residual_00(p, x, opt.tol);
                    r.seed = seed;
                    ++runs;
                    max_rel = std::max(max_rel, r.rel_residual);
                    if (!r.pass) {
                        Json jf;
                        jf["identity"] = mfm::identity_name(r.identity);
                        jf["m"] = m;
                        jf["seed"] = seed;
                        jf["x"] = x;
                        jf["rel_residual"] = r.rel_residual;
                        failures.push_back(std::move(jf));
                    }
                }
            }
        }
    }
    Json doc;
    doc["runs"] = runs;
    doc["max_rel_residual"] = max_rel;
    doc["failures"] = failures;
    emit(doc, opt.out);
    return failures.empty() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for the order-(m+1) hypergeometric "
                 "function, its twisted intersection matrices, and the "
                 "quadratic period identities"};
    app.require_subcommand(1);

    CommonOptions eval_opt, sol_opt, int_opt, per_opt, ver_opt, quad_opt;
    SweepOptions sweep_opt;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one hypergeometric series");
    add_common(eval, eval_opt);

    CLI::App* solutions =
        app.add_subcommand("solutions", "evaluate the fundamental solution system");
    add_common(solutions, sol_opt);

    CLI::App* intersect =
        app.add_subcommand("intersect", "compute intersection matrices");
    add_common(intersect, int_opt, /*with_x=*/false);
    intersect->add_option("--basis", int_opt.basis,
                          "phi|psi|mixed|homology|all (default all)");

    CLI::App* periods =
        app.add_subcommand("periods", "compute the primal and dual period rows");
    add_common(periods, per_opt);

    CLI::App* verify = app.add_subcommand(
        "verify", "verify the period relation and the quadratic identity");
    add_common(verify, ver_opt);

    CLI::App* quad = app.add_subcommand(
        "quad", "quadrature checks of the Euler integral and beta products");
    add_common(quad, quad_opt);
    quad->add_option("--level", quad_opt.level,
                     "tanh-sinh level (default: per-dimension)")
        ->check(CLI::Range(1, 12));

    CLI::App* sweep = app.add_subcommand(
        "sweep", "verification sweep over seeded random parameter sets");
    sweep->add_option("--m", sweep_opt.m_range, "m or range, e.g. 2 or 1..4");
    sweep->add_option("--count", sweep_opt.count, "parameter sets per m")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sweep_opt.seed, "base seed (default 1)");
    sweep->add_option("--tol", sweep_opt.tol, "series tail tolerance")
        ->check(CLI::Range(1e-300, 1e-2));
    sweep->add_option("--out", sweep_opt.out, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return run_eval(eval_opt);
        if (solutions->parsed()) return run_solutions(sol_opt);
        if (intersect->parsed()) return run_intersect(int_opt);
        if (periods->parsed()) return run_periods(per_opt);
        if (verify->parsed()) return run_verify(ver_opt);
        if (quad->parsed()) return run_quad(quad_opt);
        if (sweep->parsed()) return run_sweep(sweep_opt);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
