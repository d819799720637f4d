#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "evenparity/detector.hpp"
#include "evenparity/engineering.hpp"
#include "evenparity/metrics.hpp"
#include "evenparity/optimize.hpp"
#include "evenparity/serialize.hpp"
#include "evenparity/version.hpp"
#include "evenparity/wigner.hpp"
#include "parse.hpp"
#include "run.hpp"

namespace evenparity::cli {

namespace {

void add_common(CLI::App* sub, CommonOptions& c)
{
    sub->add_option("--trunc", c.trunc, "Fock truncation N (basis 0..N)")->capture_default_str()->check(CLI::NonNegativeNumber);
    sub->add_option("--out", c.out, "Output directory (default: $EVENPARITY_OUT_DIR or .)");
    sub->add_option("--threads", c.threads, "OpenMP threads (0 = runtime default)")->check(CLI::NonNegativeNumber);
    sub->add_flag("--quiet", c.quiet, "Suppress warnings and summaries");
}

/// Cat size and squeezing, shared by cat and four-cat.
struct SchemeFlags {
    std::string beta;
    double beta_sq = 0.0;
    double lambda = 0.0;
    double db = 0.0;
    int n = 0;
    double eta = 1.0;
    int cutoff = 0;
    int grid_cells = 281;
    double grid_range = 0.0;
    CLI::Option* beta_opt = nullptr;
    CLI::Option* beta_sq_opt = nullptr;
    CLI::Option* lambda_opt = nullptr;
    CLI::Option* db_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* eta_opt = nullptr;
    CLI::Option* cutoff_opt = nullptr;
    CLI::Option* range_opt = nullptr;
};

void add_scheme(CLI::App* sub, SchemeFlags& f)
{
    f.beta_opt = sub->add_option("--beta", f.beta, "Cat amplitude beta as RE or RE,IM");
    f.beta_sq_opt = sub->add_option("--beta-sq", f.beta_sq, "Cat size |beta|^2 (real beta)")->check(CLI::NonNegativeNumber);
    f.beta_opt->excludes(f.beta_sq_opt);
    f.lambda_opt = sub->add_option("--lambda", f.lambda, "Squeezing parameter lambda = tanh r");
    f.db_opt = sub->add_option("--db", f.db, "Squeezing in dB");
    f.lambda_opt->excludes(f.db_opt);
    f.n_opt = sub->add_option("--n", f.n, "Heralding outcome (default round(|beta|^2))");
    f.eta_opt = sub->add_option("--eta", f.eta, "Detector efficiency")->capture_default_str();
    f.cutoff_opt = sub->add_option("--cutoff", f.cutoff, "POVM x, y cutoff (default n + ceil(10(1-eta)n) + 20)");
    sub->add_option("--grid-cells", f.grid_cells, "Wigner grid cells per axis")->capture_default_str()->check(CLI::PositiveNumber);
    f.range_opt = sub->add_option("--grid-range", f.grid_range, "Wigner grid half-width (default |beta| + 5, four-cat sqrt2 |beta| + 5)")->check(CLI::PositiveNumber);
}

Complex resolve_beta(const SchemeFlags& f, Run& run)
{
    if (*f.beta_opt) {
        const Complex b = parse_complex(f.beta);
        run.param("beta", format_complex(b));
        return b;
    }
    if (*f.beta_sq_opt) {
        run.param("beta-sq", f.beta_sq);
        return {std::sqrt(f.beta_sq), 0.0};
    }
    throw UsageError("give --beta or --beta-sq");
}

void resolve_squeezing(const SchemeFlags& f, SchemeConfig& cfg, Run& run)
{
    if (*f.lambda_opt) {
        cfg.lambda = f.lambda;
        run.param("lambda", f.lambda);
    } else if (*f.db_opt) {
        cfg.squeezing_db = f.db;
        run.param("db", f.db);
    } else {
        throw UsageError("give --lambda or --db");
    }
}

/// `extent` sets the default half-width |extent| + 5.
GridSpec resolve_grid(const SchemeFlags& f, Complex extent, Run& run)
{
    GridSpec spec = default_grid(extent);
    const double r = *f.range_opt ? f.grid_range : spec.x_max;
    spec = GridSpec{-r, r, -r, r, f.grid_cells, f.grid_cells};
    run.param("grid-cells", f.grid_cells);
    run.param("grid-range", r);
    return spec;
}

Json negativity_or_null(const ComplexMatrix& rho, Complex beta, const GridSpec& spec, Run& run)
{
    try {
        return normalized_negativity(rho, beta, spec, &run.diag());
    } catch (const DomainError& e) {
        run.diag().warn("cat", std::string("normalized negativity undefined: ") + e.what());
        return nullptr;
    }
}

// ---------------------------------------------------------------- detector-dist

struct DetectorFlags {
    int n = 0;
    std::vector<double> etas{1.0};
    std::string control = "flat";
    int cutoff = 0;
    CLI::Option* cutoff_opt = nullptr;
};

void cmd_detector_dist(const DetectorFlags& f, Run& run)
{
    if (f.n < 0) throw UsageError("--n must be >= 0");
    run.param("n", f.n);
    run.param("eta", f.etas);
    run.param("control", f.control);
    if (*f.cutoff_opt) run.param("cutoff", f.cutoff);

    std::vector<int> cutoffs;
    for (double eta : f.etas) cutoffs.push_back(*f.cutoff_opt ? f.cutoff : default_povm_cutoff(f.n, eta));
    const int max_cutoff = *std::max_element(cutoffs.begin(), cutoffs.end());
    const FockVector control = parse_control(f.control, run.param_trunc(), 2 * max_cutoff, &run.diag());
    run.derived("cutoffs", cutoffs);
    run.derived("control_dimension", control.dimension());

    std::vector<std::vector<double>> columns;
    std::size_t rows = 1;
    Json tails = Json::array();
    for (std::size_t e = 0; e < f.etas.size(); ++e) {
        PovmOptions opts;
        opts.cutoff = cutoffs[e];
        const DetectorEffect effect = povm_element(control, f.n, f.etas[e], opts, &run.diag());
        tails.push_back(effect.tail_weight);
        columns.push_back(povm_diagonal(effect));
        const auto& col = columns.back();
        for (std::size_t j = col.size(); j-- > 0;) {
            if (col[j] > 0.0) {
                rows = std::max(rows, j + 1);
                break;
            }
        }
    }
    run.derived("tail_weights", tails);

    std::string csv = "j";
    for (double eta : f.etas) csv += ",pr_eta_" + short_number(eta);
    csv += '\n';
    for (std::size_t j = 0; j < rows; ++j) {
        csv += std::to_string(j);
        for (const auto& col : columns) csv += "," + format_double(j < col.size() ? col[j] : 0.0);
        csv += '\n';
    }
    run.stage("detector_dist.csv", std::move(csv));
    run.result("rows", rows);
}

// ---------------------------------------------------------------- cat

struct CatFlags {
    SchemeFlags scheme;
    std::string sweep;
    bool skip_negativity = false;
    CLI::Option* sweep_opt = nullptr;
};

struct CatPoint {
    HeraldedState state;
    double fidelity;
    Json negativity;
};

CatPoint cat_point(const SchemeConfig& cfg, Complex beta, const GridSpec& spec, bool skip_negativity, Run& run)
{
    HeraldedState state = prepare(cfg, &run.diag());
    const IdealCat ideal = IdealCat::two_component(beta, cfg.n_trunc);
    const double f = fidelity(state, ideal.state());
    Json neg = nullptr;
    if (!skip_negativity) neg = negativity_or_null(state.normalized_density(), beta, spec, run);
    return {std::move(state), f, std::move(neg)};
}

void cmd_cat(const CatFlags& f, Run& run)
{
    const Complex beta = resolve_beta(f.scheme, run);
    SchemeConfig cfg;
    cfg.beta = beta;
    cfg.n_trunc = run.param_trunc();
    resolve_squeezing(f.scheme, cfg, run);
    cfg.n = *f.scheme.n_opt ? f.scheme.n : default_outcome(std::norm(beta));
    run.param("n", *cfg.n);
    if (*f.sweep_opt) {
        if (*f.scheme.eta_opt) throw UsageError("--eta and --sweep-eta are mutually exclusive");
        run.param("sweep-eta", f.sweep);
    } else {
        cfg.eta = f.scheme.eta;
        run.param("eta", cfg.eta);
    }
    if (*f.scheme.cutoff_opt) {
        cfg.povm.cutoff = f.scheme.cutoff;
        run.param("cutoff", f.scheme.cutoff);
    }
    const GridSpec spec = resolve_grid(f.scheme, beta, run);
    run.param("skip-negativity", f.skip_negativity);

    const SchemeConfig resolved = cfg.resolved();
    run.derived("lambda", *resolved.lambda);
    run.derived("squeezing_db", lambda_to_squeezing_db(*resolved.lambda));
    run.derived("control_amplitude", complex_to_json(*resolved.control_amplitude));

    if (*f.sweep_opt) {
        const std::vector<double> etas = parse_range(f.sweep);
        std::string csv = "eta,fidelity,success_probability,normalized_negativity\n";
        for (double eta : etas) {
            SchemeConfig c = cfg;
            c.eta = eta;
            const CatPoint p = cat_point(c, beta, spec, f.skip_negativity, run);
            csv += format_double(eta) + "," + format_double(p.fidelity) + ","
                   + format_double(p.state.success_probability) + ","
                   + (p.negativity.is_number() ? format_double(p.negativity.get<double>()) : std::string("nan")) + "\n";
        }
        run.stage("cat_sweep.csv", std::move(csv));
        run.result("points", etas.size());
        return;
    }

    if (!(cfg.eta < 1.0)) run.derived("povm_cutoff", nullptr);
    else run.derived("povm_cutoff", cfg.povm.cutoff.value_or(default_povm_cutoff(*cfg.n, cfg.eta)));

    const CatPoint p = cat_point(cfg, beta, spec, f.skip_negativity, run);
    Json report = Json::object();
    report["fidelity"] = p.fidelity;
    report["success_probability"] = p.state.success_probability;
    report["normalized_negativity"] = p.negativity;
    const double b2 = std::norm(beta);
    const int nb = static_cast<int>(std::lround(b2));
    if (cfg.eta == 1.0 && nb >= 1 && std::abs(b2 - nb) < 1e-9 && *cfg.n == nb)
        report["closed_form_fidelity"] = cat_fidelity_closed_form(nb);

    run.stage("cat_state.json", Json(p.state).dump(2) + "\n");
    run.stage("cat_report.json", report.dump(2) + "\n");
    run.result("fidelity", p.fidelity);
    run.result("success_probability", p.state.success_probability);
    run.result("normalized_negativity", p.negativity);
    if (!run.quiet()) {
        run.out() << "fidelity " << format_double(p.fidelity) << ", success probability "
                  << format_double(p.state.success_probability) << '\n';
    }
}

// ---------------------------------------------------------------- four-cat

struct FourCatFlags {
    SchemeFlags scheme;
    int second_outcome = 0;
    std::string control_amplitude;
    std::string displacement;
    double eta_stage2 = 1.0;
    CLI::Option* second_opt = nullptr;
    CLI::Option* control_opt = nullptr;
    CLI::Option* displacement_opt = nullptr;
    CLI::Option* eta2_opt = nullptr;
};

void stage_grid(Run& run, const std::string& stem, const ComplexMatrix& rho, const GridSpec& spec, WignerGrid* keep)
{
    WignerGrid g = wigner(rho, spec, &run.diag());
    Json header = wigner_header(g);
    header["file_csv"] = stem + ".csv";
    header["file_binary"] = stem + ".bin";
    run.stage(stem + ".csv", wigner_csv(g));
    run.stage(stem + ".bin", wigner_binary(g));
    run.stage(stem + ".json", header.dump(2) + "\n");
    if (keep) *keep = std::move(g);
}

void cmd_four_cat(const FourCatFlags& f, Run& run)
{
    const Complex beta = resolve_beta(f.scheme, run);
    SchemeConfig cfg;
    cfg.beta = beta;
    cfg.stages = 2;
    cfg.n_trunc = run.param_trunc();
    resolve_squeezing(f.scheme, cfg, run);
    cfg.eta = f.scheme.eta;
    if (*f.scheme.n_opt) cfg.n = f.scheme.n;
    if (*f.second_opt) cfg.second_outcome = f.second_outcome;
    if (*f.control_opt) cfg.control_amplitude = parse_complex(f.control_amplitude);
    if (*f.displacement_opt) cfg.displacement = parse_complex(f.displacement);
    if (*f.eta2_opt) cfg.eta_stage2 = f.eta_stage2;
    if (*f.scheme.cutoff_opt) cfg.povm.cutoff = f.scheme.cutoff;

    const SchemeConfig r = cfg.resolved();
    run.param("n", *r.n);
    run.param("second-outcome", *r.second_outcome);
    run.param("control-amplitude", format_complex(*r.control_amplitude));
    run.param("displacement", format_complex(*r.displacement));
    run.param("eta", r.eta);
    run.param("eta-stage2", *r.eta_stage2);
    if (r.povm.cutoff) run.param("cutoff", *r.povm.cutoff);
    // Lobes sit at |alpha| = sqrt2 |beta|.
    const GridSpec spec = resolve_grid(f.scheme, beta * std::numbers::sqrt2, run);
    run.derived("lambda", *r.lambda);
    run.derived("squeezing_db", lambda_to_squeezing_db(*r.lambda));

    PipelineStages stages;
    const HeraldedState out = four_component_pipeline(r, &run.diag(), &stages);
    const IdealCat ideal = IdealCat::four_component(beta, r.n_trunc);
    const double fid = fidelity(out, ideal.state());

    stage_grid(run, "wigner_stage_i", stages.control, spec, nullptr);
    stage_grid(run, "wigner_stage_ii", stages.cat, spec, nullptr);
    stage_grid(run, "wigner_stage_iii", stages.displaced, spec, nullptr);
    WignerGrid final_grid;
    stage_grid(run, "wigner_stage_iv", stages.output, spec, &final_grid);

    Json peaks = Json::array();
    for (const auto& pk : local_maxima_abs(final_grid, 0.5))
        peaks.push_back({{"x", pk.x}, {"p", pk.p}, {"value", pk.value}});

    Json report = Json::object();
    report["fidelity"] = fid;
    report["success_probability"] = out.success_probability;
    report["stage_probabilities"] = out.stage_probabilities;
    report["output_peaks_above_half_max"] = peaks;
    run.stage("four_cat_state.json", Json(out).dump(2) + "\n");
    run.stage("four_cat_report.json", report.dump(2) + "\n");
    run.result("fidelity", fid);
    run.result("success_probability", out.success_probability);
    run.result("output_peaks", peaks.size());
    if (!run.quiet()) {
        run.out() << "fidelity " << format_double(fid) << ", success probability "
                  << format_double(out.success_probability) << '\n';
    }
}

// ---------------------------------------------------------------- scaling

struct ScalingFlags {
    std::vector<double> sizes{5, 10, 15, 20, 25, 30, 35, 40};
    int max_evaluations = 500;
};

void cmd_scaling(const ScalingFlags& f, Run& run)
{
    run.param("sizes", f.sizes);
    run.param("max-evaluations", f.max_evaluations);
    OptimizeOptions opts;
    opts.n_trunc = run.param_trunc();
    opts.max_evaluations = f.max_evaluations;
    const ScalingResult s = scaling_fit(f.sizes, opts);

    std::string csv = "beta_sq,n,lambda_star,squeezing_db,pr_star\n";
    for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        csv += format_double(s.sizes[i]) + "," + std::to_string(s.outcomes[i]) + "," + format_double(s.lambdas[i]) + ","
               + format_double(lambda_to_squeezing_db(s.lambdas[i])) + "," + format_double(s.probabilities[i]) + "\n";
    }
    run.stage("scaling.csv", std::move(csv));
    run.stage("scaling_fit.json", Json(s.fit).dump(2) + "\n");
    run.result("exponent", s.fit.exponent);
    run.result("intercept", s.fit.intercept);
    run.result("r_squared", s.fit.r_squared);
    if (!run.quiet()) {
        run.out() << "pr* ~ |beta|^" << format_double(s.fit.exponent) << " (r^2 " << format_double(s.fit.r_squared)
                  << ")\n";
    }
}

// ---------------------------------------------------------------- povm-fidelity

struct PovmFidelityFlags {
    std::vector<int> ns{5, 10, 20, 40};
    std::string eta_range = "0.8:1.0:0.01";
    int cutoff = 0;
    CLI::Option* cutoff_opt = nullptr;
};

void cmd_povm_fidelity(const PovmFidelityFlags& f, Run& run)
{
    run.param("n", f.ns);
    run.param("eta-range", f.eta_range);
    if (*f.cutoff_opt) run.param("cutoff", f.cutoff);
    const std::vector<double> etas = parse_range(f.eta_range);
    for (int n : f.ns) {
        if (n < 0) throw UsageError("--n values must be >= 0");
    }

    std::string csv = "eta,n,cutoff,fidelity\n";
    for (double eta : etas) {
        for (int n : f.ns) {
            PovmOptions opts;
            opts.cutoff = *f.cutoff_opt ? f.cutoff : default_povm_cutoff(n, eta);
            const FockVector control = flat_control(2 * *opts.cutoff);
            const DetectorEffect effect = povm_element(control, n, eta, opts, &run.diag());
            const double fid = projector_fidelity(effect, project_chi(control, n));
            csv += format_double(eta) + "," + std::to_string(n) + "," + std::to_string(*opts.cutoff) + ","
                   + format_double(fid) + "\n";
        }
    }
    run.stage("povm_fidelity.csv", std::move(csv));
    run.result("points", etas.size() * f.ns.size());
}

// ---------------------------------------------------------------- wigner

struct WignerFlags {
    std::string state;
    int cells = 281;
    double range = 0.0;
    CLI::Option* range_opt = nullptr;
};

void cmd_wigner(const WignerFlags& f, Run& run)
{
    run.param("state", f.state);
    const int n_trunc = run.param_trunc();
    const auto colon = f.state.find(':');
    if (colon == std::string::npos) throw UsageError("state spec must be kind:value");
    const std::string kind = f.state.substr(0, colon);
    const std::string arg = f.state.substr(colon + 1);

    ComplexMatrix rho;
    double scale = 0.0;
    if (kind == "coherent" || kind == "cat" || kind == "four-cat") {
        const Complex a = parse_complex(arg);
        scale = std::abs(a);
        FockVector v;
        if (kind == "coherent") v = coherent_state(a, n_trunc, &run.diag());
        else if (kind == "cat") v = IdealCat::two_component(a, n_trunc).state();
        else v = IdealCat::four_component(a, n_trunc).state();
        rho = outer_product(v);
    } else if (kind == "fock") {
        const int m = parse_int(arg);
        if (m < 0 || m > n_trunc) throw UsageError("fock state needs 0 <= m <= --trunc");
        rho = outer_product(FockVector::number_state(m, n_trunc));
        scale = std::sqrt(static_cast<double>(m));
    } else if (kind == "file") {
        auto s = load_state_file(arg);
        if (std::holds_alternative<FockVector>(s)) {
            rho = outer_product(std::get<FockVector>(s));
        } else {
            rho = std::get<ComplexMatrix>(std::move(s));
        }
        const double tr = rho.trace().real();
        if (!(tr > 0.0)) throw UsageError("state file holds a zero state");
        rho /= tr;
        double mean = 0.0;
        for (Eigen::Index k = 0; k < rho.rows(); ++k) mean += static_cast<double>(k) * rho(k, k).real();
        scale = std::sqrt(mean);
    } else {
        throw UsageError("unknown state kind '" + kind + "'");
    }

    const double r = *f.range_opt ? f.range : default_grid({scale, 0.0}).x_max;
    run.param("cells", f.cells);
    run.param("range", r);
    const GridSpec spec{-r, r, -r, r, f.cells, f.cells};
    WignerGrid g;
    stage_grid(run, "wigner", rho, spec, &g);
    run.result("integral", g.integral());
    run.result("negativity_volume", negativity_volume(g));
    run.result("max_abs", g.max_abs());
}

} // namespace

int Run::param_trunc() const { return common_.trunc; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Even-parity detector simulations: heralded cat states in the Fock basis", "evenparity"};
    app.set_version_flag("--version", version_string());
    app.require_subcommand(1);

    CommonOptions common;

    DetectorFlags det;
    auto* s_det = app.add_subcommand("detector-dist", "Photon-number distribution pr(j) of the detector");
    s_det->add_option("--n", det.n, "Detected photons per mode")->required();
    s_det->add_option("--eta", det.etas, "Detector efficiencies (repeatable)")->capture_default_str();
    s_det->add_option("--control", det.control, "flat | coherent:A | fock:M | file:PATH")->capture_default_str();
    det.cutoff_opt = s_det->add_option("--cutoff", det.cutoff, "POVM x, y cutoff");
    add_common(s_det, common);

    CatFlags cat;
    auto* s_cat = app.add_subcommand("cat", "Heralded two-component cat state and its figures of merit");
    add_scheme(s_cat, cat.scheme);
    cat.sweep_opt = s_cat->add_option("--sweep-eta", cat.sweep, "Sweep eta over a:b:step");
    s_cat->add_flag("--skip-negativity", cat.skip_negativity, "Do not compute Wigner negativity");
    add_common(s_cat, common);

    FourCatFlags four;
    auto* s_four = app.add_subcommand("four-cat", "Two-stage four-component cat with per-stage Wigner grids");
    add_scheme(s_four, four.scheme);
    four.second_opt = s_four->add_option("--second-outcome", four.second_outcome, "Second heralding outcome");
    four.control_opt = s_four->add_option("--control-amplitude", four.control_amplitude, "Stage-1 control amplitude RE[,IM]");
    four.displacement_opt = s_four->add_option("--displacement", four.displacement, "Intermediate displacement RE[,IM]");
    four.eta2_opt = s_four->add_option("--eta-stage2", four.eta_stage2, "Stage-2 detector efficiency");
    add_common(s_four, common);

    ScalingFlags scal;
    auto* s_scal = app.add_subcommand("scaling", "Optimal success probability against cat size");
    s_scal->add_option("--sizes", scal.sizes, "Cat sizes |beta|^2")->capture_default_str();
    s_scal->add_option("--max-evaluations", scal.max_evaluations, "Optimizer budget per size")->capture_default_str();
    add_common(s_scal, common);

    PovmFidelityFlags pf;
    auto* s_pf = app.add_subcommand("povm-fidelity", "Fidelity of the lossy POVM with the ideal projector");
    s_pf->add_option("--n", pf.ns, "Detected photons per mode (repeatable)")->capture_default_str();
    s_pf->add_option("--eta-range", pf.eta_range, "Efficiencies a:b:step")->capture_default_str();
    pf.cutoff_opt = s_pf->add_option("--cutoff", pf.cutoff, "POVM x, y cutoff");
    add_common(s_pf, common);

    WignerFlags wf;
    auto* s_w = app.add_subcommand("wigner", "Wigner function of a state on a grid");
    s_w->add_option("--state", wf.state, "coherent:A | cat:B | four-cat:B | fock:M | file:PATH")->required();
    s_w->add_option("--cells", wf.cells, "Cells per axis")->capture_default_str()->check(CLI::PositiveNumber);
    wf.range_opt = s_w->add_option("--range", wf.range, "Grid half-width (default sqrt(<n>) + 5)")->check(CLI::PositiveNumber);
    add_common(s_w, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitSuccess : kExitUsage;
    }

#ifdef _OPENMP
    if (common.threads > 0) omp_set_num_threads(common.threads);
#endif

    CLI::App* sub = app.get_subcommands().front();
    try {
        Run r(sub->get_name(), common, out, err);
        if (sub == s_det) cmd_detector_dist(det, r);
        else if (sub == s_cat) cmd_cat(cat, r);
        else if (sub == s_four) cmd_four_cat(four, r);
        else if (sub == s_scal) cmd_scaling(scal, r);
        else if (sub == s_pf) cmd_povm_fidelity(pf, r);
        else cmd_wigner(wf, r);
        r.finish();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TruncationError& e) {
        err << "truncation error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    }
    return kExitSuccess;
}

} // namespace evenparity::cli
