#include "cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fabry/errors.hpp"
#include "fabry/io.hpp"

namespace fabry::cli {

namespace {

using io::Json;

void require(bool condition, const std::string& message) {
    if (!condition) throw std::invalid_argument(message);
}

std::complex<double> parse_point(const std::string& text) {
    const auto comma = text.find(',');
    std::size_t used = 0;
    const double re = std::stod(text.substr(0, comma), &used);
    double im = 0.0;
    if (comma != std::string::npos) im = std::stod(text.substr(comma + 1));
    return {re, im};
}

Json parameters(const RunConfig& c) {
    Json p{{"subcommand", c.subcommand}, {"input", c.input}};
    if (c.n > 0) p["n"] = c.n;
    if (!c.deltas.empty()) p["delta"] = c.deltas;
    if (!c.r_grid.empty()) p["r_grid"] = c.r_grid;
    if (c.x_lo) p["x_lo"] = *c.x_lo;
    if (c.pade_L) p["L"] = *c.pade_L;
    if (c.pade_M) p["M"] = *c.pade_M;
    p["support_tolerance"] = c.support_tolerance;
    p["regularity_tolerance"] = c.regularity_tolerance;
    p["radius_tolerance"] = c.radius_tolerance;
    p["band"] = c.band;
    p["condition_limit"] = c.condition_limit;
    p["doublet_tolerance"] = c.doublet_tolerance;
    return p;
}

ProbeOptions probe_options(const RunConfig& c) {
    ProbeOptions o;
    o.L = c.pade_L;
    o.M = c.pade_M;
    o.pade.condition_limit = c.condition_limit;
    o.froissart.doublet_tolerance = c.doublet_tolerance;
    o.arc.band = c.band;
    return o;
}

void emit(const RunConfig& c, const Json& report, std::ostream& out) {
    Json doc{{"parameters", parameters(c)}};
    for (const auto& [key, value] : report.items()) doc[key] = value;
    const std::string text = io::dump(doc);
    if (c.output) {
        std::ofstream file(*c.output);
        if (!file) throw std::invalid_argument("cannot write " + *c.output);
        file << text;
    } else {
        out << text;
    }
}

int run_density(const RunConfig& c, std::ostream& out) {
    const IndexSet set = io::read_index_set(std::filesystem::path(c.input));
    const std::vector<double> grid = c.r_grid.empty() ? default_r_grid() : c.r_grid;
    const DensityCurve curve = density_curve(set, grid, c.x_lo.value_or(default_x_lo(set.horizon())));
    Json report = io::to_json(curve);
    report["density_variation"] = density_variation(set);
    report["variation_note"] = "spread of n(x)/x over the top decade; a diagnostic, not a measurability verdict";
    emit(c, report, out);
    return kSuccess;
}

int run_signs(const RunConfig& c, std::ostream& out) {
    const RealSequence seq = io::read_real_sequence(std::filesystem::path(c.input), c.support_tolerance);
    const IndexSet changes = sign_change_set(seq);
    Json report;
    report["n"] = seq.last_index();
    report["support_size"] = seq.support().size();
    report["sign_changes"] = io::to_json(changes)["elements"];
    report["zero_count_lower_bound"] = zero_count_lower_bound(seq);
    report["gap_profile"] = io::to_json(gap_profile(seq, c.gap_r));
    report["regularity"] = io::to_json(regularity_profile(seq, c.m_min));
    emit(c, report, out);
    return kSuccess;
}

int run_product_eval(const RunConfig& c, std::ostream& out) {
    const ProductEvaluator product(io::read_product_spec(std::filesystem::path(c.input)));
    Json re = Json::array(), im = Json::array(), value = Json::array();
    for (const std::string& text : c.z_points) {
        const std::complex<double> z = parse_point(text);
        const double v = product.log_abs(z);
        re.push_back(z.real());
        im.push_back(z.imag());
        value.push_back(std::isfinite(v) ? Json(v) : Json("-inf"));
    }
    emit(c, Json{{"re", re}, {"im", im}, {"log_abs", value}}, out);
    return kSuccess;
}

int run_product_indicator(const RunConfig& c, std::ostream& out) {
    const ProductEvaluator product(io::read_product_spec(std::filesystem::path(c.input)));
    IndicatorOptions options;
    options.grid_points = c.grid_points;
    emit(c, io::to_json(indicator_estimate(product, c.theta, c.t_max, options)), out);
    return kSuccess;
}

int run_product_zeros(const RunConfig& c, std::ostream& out) {
    const ProductSpec spec = io::read_product_spec(std::filesystem::path(c.input));
    Json report{{"c", c.c}, {"d", c.d}, {"count", zero_count_interval(spec, c.c, c.d)}};
    if (c.scale_m) {
        report["m"] = *c.scale_m;
        report["r"] = c.scale_r;
        report["scaled_measure"] = scaled_zero_measure(spec, *c.scale_m, c.scale_r);
        report["density_times_r"] = spec.tail_density * c.scale_r;
    }
    emit(c, report, out);
    return kSuccess;
}

int run_build(const RunConfig& c, std::ostream& out) {
    const IndexSet lambda_prime = io::read_index_set(std::filesystem::path(c.input));
    BuildOptions options;
    options.support_tolerance = c.support_tolerance;
    options.regularity_tolerance = c.regularity_tolerance;
    const ConstructionReport report = build_series(lambda_prime, c.n, options);
    if (c.csv_output) {
        std::ofstream csv(*c.csv_output);
        if (!csv) throw std::invalid_argument("cannot write " + *c.csv_output);
        io::write_real_sequence(csv, report.coefficients);
    }
    emit(c, io::to_json(report), out);
    for (const auto& [name, ok] : report.checks) {
        if (!ok) return kVerdictFailure;
    }
    return kSuccess;
}

int run_probe(const RunConfig& c, std::ostream& out) {
    const RealSequence seq = io::read_real_sequence(std::filesystem::path(c.input), c.support_tolerance);
    const SingularityReport report = probe(seq, c.deltas, probe_options(c));
    Json json = io::to_json(report);
    int status = kSuccess;
    if (c.expect) {
        const bool want_on_arc = *c.expect == "on-arc";
        bool met = true;
        for (const ArcClearance& arc : report.arcs) met = met && arc.on_arc == want_on_arc;
        json["expectation"] = *c.expect;
        json["expectation_met"] = met;
        if (!met) status = kVerdictFailure;
    }
    emit(c, json, out);
    return status;
}

int run_verify(const RunConfig& c, std::ostream& out) {
    const IndexSet lambda = io::read_index_set(std::filesystem::path(c.input));
    ExperimentOptions options;
    if (!c.r_grid.empty()) options.r_grid = c.r_grid;
    options.x_lo = c.x_lo;
    options.build.support_tolerance = c.support_tolerance;
    options.build.regularity_tolerance = c.regularity_tolerance;
    options.hypotheses.regularity_tolerance = c.regularity_tolerance;
    options.hypotheses.radius_tolerance = c.radius_tolerance;
    options.probe = probe_options(c);
    std::optional<RealSequence> series;
    if (c.coeffs) series = io::read_real_sequence(std::filesystem::path(*c.coeffs), c.support_tolerance);
    const ExperimentRecord record = theorem1_experiment(lambda, c.deltas.front(), c.n, options, series);
    emit(c, io::to_json(record), out);
    return record.ok() ? kSuccess : kVerdictFailure;
}

}  // namespace

void RunConfig::validate() const {
    require(!input.empty(), "an input file is required");
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    require(positive(support_tolerance) || support_tolerance == 0.0, "--support-tolerance must be >= 0");
    require(positive(regularity_tolerance), "--regularity-tolerance must be positive");
    require(positive(radius_tolerance), "--radius-tolerance must be positive");
    require(positive(band) && band < 1.0, "--band must lie in (0, 1)");
    require(positive(condition_limit) && condition_limit > 1.0, "--condition-limit must exceed 1");
    require(positive(doublet_tolerance), "--doublet-tolerance must be positive");
    for (std::size_t i = 0; i < r_grid.size(); ++i) {
        require(positive(r_grid[i]), "--r-grid entries must be positive");
        require(i == 0 || r_grid[i] < r_grid[i - 1], "--r-grid must be strictly decreasing");
    }
    if (x_lo) require(*x_lo >= 1.0, "--x-lo must be >= 1");
    for (const double d : deltas) require(d >= 0.0 && d < 1.0, "--delta must lie in [0, 1)");
    if (pade_L) require(*pade_L >= 0, "--L must be non-negative");
    if (pade_M) require(*pade_M >= 0, "--M must be non-negative");
    if (expect) require(*expect == "on-arc" || *expect == "clear", "--expect must be 'on-arc' or 'clear'");

    if (subcommand == "signs") {
        require(positive(gap_r), "--r must be positive");
        require(m_min >= 1, "--m-min must be >= 1");
    } else if (subcommand == "product-eval") {
        require(!z_points.empty(), "at least one --z point is required");
    } else if (subcommand == "product-indicator") {
        require(positive(t_max) && t_max > 1.0, "--t-max must exceed 1");
        require(grid_points >= 4, "--points must be >= 4");
    } else if (subcommand == "product-zeros") {
        require(c >= 0.0 && c <= d, "need 0 <= --c <= --d");
        if (scale_m) require(*scale_m >= 1 && positive(scale_r), "--m must be >= 1 and --r positive");
    } else if (subcommand == "build") {
        require(n >= 0, "--n must be non-negative");
    } else if (subcommand == "probe") {
        require(!deltas.empty(), "--delta is required");
    } else if (subcommand == "verify-theorem1") {
        require(deltas.size() == 1, "exactly one --delta is required");
        require(n >= 1, "--n must be positive");
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig config;
    CLI::App app{"Sign changes, Pólya densities, entire products and singularity probes for power series", "fabry"};
    app.require_subcommand(1);

    auto add_tolerances = [&config](CLI::App* sub) {
        sub->add_option("-o,--output", config.output, "Write the report here instead of stdout");
        sub->add_option("--support-tolerance", config.support_tolerance, "Relative threshold below which a_m counts as 0");
        sub->add_option("--regularity-tolerance", config.regularity_tolerance, "Allowed | |a_m|^{1/m} - 1 | in the tail");
        sub->add_option("--radius-tolerance", config.radius_tolerance, "Allowed |radius - 1|");
        sub->add_option("--band", config.band, "Unit-circle band half-width for pole clustering");
        sub->add_option("--condition-limit", config.condition_limit, "Condition gate for the Padé Toeplitz solve");
        sub->add_option("--doublet-tolerance", config.doublet_tolerance, "Froissart doublet distance factor");
    };

    auto* density = app.add_subcommand("density", "Window-density curve of an index set");
    density->add_option("set-file", config.input)->required();
    density->add_option("--r-grid", config.r_grid, "Decreasing r values")->delimiter(',');
    density->add_option("--x-lo", config.x_lo, "Start of the x scan (default horizon/3)");
    add_tolerances(density);

    auto* signs = app.add_subcommand("signs", "Sign changes, zero-count bound, gap and regularity profiles");
    signs->add_option("coeff-file", config.input)->required();
    signs->add_option("--r", config.gap_r, "Window ratio for the gap profile");
    signs->add_option("--m-min", config.m_min, "First index of the regularity profile");
    add_tolerances(signs);

    auto* product = app.add_subcommand("product", "Evaluate F(z) = prod (1 - z^2/t^2)");
    product->require_subcommand(1);
    auto* eval = product->add_subcommand("eval", "log|F(z)| at points");
    eval->add_option("spec-file", config.input)->required();
    eval->add_option("--z", config.z_points, "Point 're,im' (repeatable)")->required();
    add_tolerances(eval);
    auto* indicator = product->add_subcommand("indicator", "Growth rate along a ray");
    indicator->add_option("spec-file", config.input)->required();
    indicator->add_option("--theta", config.theta, "Ray angle")->required();
    indicator->add_option("--t-max", config.t_max, "Largest radius")->required();
    indicator->add_option("--points", config.grid_points, "Radius grid size");
    add_tolerances(indicator);
    auto* zeros = product->add_subcommand("zeros", "Zero count on [c, d]");
    zeros->add_option("spec-file", config.input)->required();
    zeros->add_option("--c", config.c, "Left end of the interval")->required();
    zeros->add_option("--d", config.d, "Right end of the interval")->required();
    zeros->add_option("--m", config.scale_m, "Also report #(S ∩ [m, (1+r)m]) / m");
    zeros->add_option("--r", config.scale_r, "Window ratio for the scaled count");
    add_tolerances(zeros);

    auto* build = app.add_subcommand("build", "Build a_m = (-1)^m F(m) from Λ'");
    build->add_option("set-file", config.input)->required();
    build->add_option("--n", config.n, "Last coefficient index")->required();
    build->add_option("--csv", config.csv_output, "Also write the coefficients as m,a_m CSV");
    add_tolerances(build);

    auto* probe_cmd = app.add_subcommand("probe", "Padé singularity probe of a coefficient file");
    probe_cmd->add_option("coeff-file", config.input)->required();
    probe_cmd->add_option("--delta", config.deltas, "Arc parameter Δ (repeatable)")->required();
    probe_cmd->add_option("--L", config.pade_L, "Numerator degree");
    probe_cmd->add_option("--M", config.pade_M, "Denominator degree");
    probe_cmd->add_option("--expect", config.expect, "Fail with status 1 unless every arc is 'on-arc' or 'clear'");
    add_tolerances(probe_cmd);

    auto* verify = app.add_subcommand("verify-theorem1", "End-to-end experiment for Λ and Δ");
    verify->add_option("set-file", config.input)->required();
    verify->add_option("--delta", config.deltas, "Arc parameter Δ")->required();
    verify->add_option("--n", config.n, "Number of coefficients minus one")->required();
    verify->add_option("--coeffs", config.coeffs, "Series to probe when a singularity is expected");
    verify->add_option("--r-grid", config.r_grid, "Decreasing r values")->delimiter(',');
    verify->add_option("--x-lo", config.x_lo, "Start of the x scan (default horizon/3)");
    verify->add_option("--L", config.pade_L, "Numerator degree");
    verify->add_option("--M", config.pade_M, "Denominator degree");
    add_tolerances(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    if (density->parsed()) config.subcommand = "density";
    if (signs->parsed()) config.subcommand = "signs";
    if (eval->parsed()) config.subcommand = "product-eval";
    if (indicator->parsed()) config.subcommand = "product-indicator";
    if (zeros->parsed()) config.subcommand = "product-zeros";
    if (build->parsed()) config.subcommand = "build";
    if (probe_cmd->parsed()) config.subcommand = "probe";
    if (verify->parsed()) config.subcommand = "verify-theorem1";

    try {
        config.validate();
        if (config.subcommand == "density") return run_density(config, out);
        if (config.subcommand == "signs") return run_signs(config, out);
        if (config.subcommand == "product-eval") return run_product_eval(config, out);
        if (config.subcommand == "product-indicator") return run_product_indicator(config, out);
        if (config.subcommand == "product-zeros") return run_product_zeros(config, out);
        if (config.subcommand == "build") return run_build(config, out);
        if (config.subcommand == "probe") return run_probe(config, out);
        if (config.subcommand == "verify-theorem1") return run_verify(config, out);
        err << "fabry: no subcommand\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "fabry " << config.subcommand << ": " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace fabry::cli
