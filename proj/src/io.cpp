#include "fabry/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "fabry/errors.hpp"

namespace fabry::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

template <class T>
std::optional<T> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
    return value;
}

std::ifstream open_input(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open file");
    return in;
}

struct SetFile {
    std::vector<Index> elements;
    std::optional<Index> horizon;
    std::optional<double> tail_density;
    std::optional<Index> truncation;
};

SetFile read_set_file(std::istream& in, const std::string& source, bool allow_product_headers) {
    SetFile file;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        if (text.front() == '#') {
            const std::string_view body = trim(text.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string_view::npos) throw ParseError(source, number, "header must be '# key=value'");
            const std::string_view key = trim(body.substr(0, eq));
            const std::string_view value = body.substr(eq + 1);
            if (key == "horizon") {
                const auto h = parse_number<Index>(value);
                if (!h || *h < 0) throw ParseError(source, number, "horizon must be a non-negative integer");
                file.horizon = *h;
            } else if (allow_product_headers && key == "tail_density") {
                const auto rho = parse_number<double>(value);
                if (!rho) throw ParseError(source, number, "tail_density must be a real number");
                file.tail_density = *rho;
            } else if (allow_product_headers && key == "truncation") {
                const auto t = parse_number<Index>(value);
                if (!t) throw ParseError(source, number, "truncation must be an integer");
                file.truncation = *t;
            } else {
                throw ParseError(source, number, "unknown header key '" + std::string(key) + "'");
            }
            continue;
        }
        if (!file.horizon) throw ParseError(source, number, "element before the '# horizon=N' header");
        const auto t = parse_number<Index>(text);
        if (!t) throw ParseError(source, number, "expected a decimal integer, got '" + std::string(text) + "'");
        if (*t < 0) throw ParseError(source, number, "negative element");
        if (*t > *file.horizon) throw ParseError(source, number, "element exceeds the horizon");
        if (!file.elements.empty() && file.elements.back() >= *t) {
            throw ParseError(source, number, "elements must be strictly increasing");
        }
        file.elements.push_back(*t);
    }
    if (!file.horizon) throw ParseError(source, number, "missing '# horizon=N' header");
    return file;
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const Pole& p) {
    return Json{{"re", p.z.real()}, {"im", p.z.imag()}, {"weight", finite_or_null(p.weight)}};
}

Json to_json(const PoleCluster& c) {
    return Json{{"angle", c.angle},
                {"nearest_abs_angle", c.nearest_abs_angle},
                {"modulus", c.modulus},
                {"weight", finite_or_null(c.weight)},
                {"count", c.count}};
}

Json verdict_map(const std::map<std::string, Verdict>& verdicts) {
    Json out = Json::object();
    for (const auto& [name, verdict] : verdicts) out[name] = to_string(verdict);
    return out;
}

}  // namespace

IndexSet read_index_set(std::istream& in, const std::string& source) {
    SetFile file = read_set_file(in, source, false);
    return IndexSet(std::move(file.elements), *file.horizon);
}

IndexSet read_index_set(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_index_set(in, path.string());
}

void write_index_set(std::ostream& out, const IndexSet& set) {
    out << "# horizon=" << set.horizon() << '\n';
    for (const Index t : set.elements()) out << t << '\n';
}

ProductSpec read_product_spec(std::istream& in, const std::string& source) {
    SetFile file = read_set_file(in, source, true);
    if (!file.tail_density) throw ParseError(source, 0, "missing '# tail_density=rho' header");
    const Index truncation = file.truncation.value_or(*file.horizon);
    try {
        return make_product_spec(IndexSet(std::move(file.elements), *file.horizon), *file.tail_density,
                                 truncation);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, 0, e.what());
    }
}

ProductSpec read_product_spec(const std::filesystem::path& path) {
    auto in = open_input(path);
    return read_product_spec(in, path.string());
}

void write_product_spec(std::ostream& out, const ProductSpec& spec) {
    out << "# horizon=" << spec.zeros.horizon() << '\n';
    out << "# tail_density=" << Json(spec.tail_density).dump() << '\n';
    out << "# truncation=" << spec.truncation << '\n';
    for (const Index t : spec.zeros.elements()) out << t << '\n';
}

RealSequence read_real_sequence(std::istream& in, const std::string& source, double support_tolerance) {
    std::vector<double> values;
    std::string line;
    std::size_t number = 0;
    bool header_allowed = true;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view text = trim(line);
        if (text.empty()) continue;
        const auto comma = text.find(',');
        if (comma == std::string_view::npos) throw ParseError(source, number, "expected 'm,a_m'");
        const std::string_view first = text.substr(0, comma);
        const std::string_view second = text.substr(comma + 1);
        if (header_allowed && trim(first) == "m") {
            header_allowed = false;
            continue;
        }
        header_allowed = false;
        const auto m = parse_number<Index>(first);
        if (!m) throw ParseError(source, number, "index is not an integer");
        if (*m != static_cast<Index>(values.size())) {
            throw ParseError(source, number,
                             "expected index " + std::to_string(values.size()) + ", got " + std::to_string(*m) +
                                 " (rows must cover 0..N in order)");
        }
        const auto a = parse_number<double>(second);
        if (!a || !std::isfinite(*a)) throw ParseError(source, number, "coefficient is not a finite real number");
        values.push_back(*a);
    }
    if (values.empty()) throw ParseError(source, number, "no coefficient rows");
    return RealSequence(std::move(values), support_tolerance);
}

RealSequence read_real_sequence(const std::filesystem::path& path, double support_tolerance) {
    auto in = open_input(path);
    return read_real_sequence(in, path.string(), support_tolerance);
}

void write_real_sequence(std::ostream& out, const RealSequence& seq) {
    out << "m,a_m\n";
    char buffer[64];
    for (std::size_t m = 0; m < seq.values().size(); ++m) {
        const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, seq.values()[m]);
        out << m << ',' << std::string_view(buffer, static_cast<std::size_t>(ptr - buffer)) << '\n';
    }
}

Json to_json(const IndexSet& set) {
    return Json{{"horizon", set.horizon()}, {"elements", std::vector<Index>(set.elements().begin(), set.elements().end())}};
}

Json to_json(const DensityCurve& curve) {
    return Json{{"r", curve.r_values},
                {"inf_window", curve.inf_window},
                {"sup_window", curve.sup_window},
                {"x_lo", curve.x_lo},
                {"x_hi", curve.x_hi},
                {"min_estimate", curve.min_estimate},
                {"max_estimate", curve.max_estimate},
                {"estimate_note", "inf/sup of window densities at the smallest r"}};
}

Json to_json(const GapProfile& profile) {
    Json m = Json::array(), count = Json::array(), ratio = Json::array(), suspect = Json::array();
    for (const GapEntry& e : profile.entries) {
        m.push_back(e.m);
        count.push_back(e.count);
        ratio.push_back(e.ratio);
        if (e.gap_suspect) suspect.push_back(e.m);
    }
    return Json{{"r", profile.r},
                {"expected_density", profile.expected_density},
                {"m", m},
                {"count", count},
                {"ratio", ratio},
                {"gap_suspect", suspect}};
}

Json to_json(const RegularityProfile& profile) {
    Json m = Json::array(), root = Json::array();
    for (const auto& [index, value] : profile.points) {
        m.push_back(index);
        root.push_back(value);
    }
    return Json{{"m", m}, {"root", root}, {"max_deviation", profile.max_deviation}, {"empty_tail", profile.empty_tail}};
}

Json to_json(const IndicatorSample& sample) {
    return Json{{"theta", sample.theta},
                {"t", sample.t},
                {"value", sample.values},
                {"estimate", sample.estimate},
                {"raw_max", sample.raw_max},
                {"reference", sample.reference}};
}

Json to_json(const ConstructionReport& report) {
    Json checks = Json::object();
    for (const auto& [name, ok] : report.checks) checks[name] = ok;
    const auto& changes = report.sign_changes.elements();
    return Json{{"n", report.n},
                {"lambda_prime_horizon", report.lambda_prime.horizon()},
                {"delta_prime", report.delta_prime},
                {"density_variation", report.density_variation},
                {"tail_density", report.product.tail_density},
                {"truncation", report.product.truncation},
                {"coefficients", report.coefficients.values()},
                {"sign_changes", std::vector<Index>(changes.begin(), changes.end())},
                {"regularity_deviation", report.regularity_deviation},
                {"predicted_clear_arc_halfangle", report.predicted_clear_arc_halfangle},
                {"checks", checks}};
}

Json to_json(const Theorem1Hypotheses& hypotheses) {
    Json out = verdict_map(hypotheses.as_map());
    out["radius"] = hypotheses.radius;
    out["delta"] = hypotheses.delta;
    return out;
}

Json to_json(const SingularityReport& report) {
    Json poles = Json::array();
    for (const Pole& p : report.poles) poles.push_back(to_json(p));
    Json clusters = Json::array();
    for (const PoleCluster& c : report.clusters) clusters.push_back(to_json(c));
    Json delta = Json::array(), on_arc = Json::array(), margin = Json::array();
    for (const ArcClearance& arc : report.arcs) {
        delta.push_back(arc.delta);
        on_arc.push_back(arc.on_arc);
        margin.push_back(finite_or_null(arc.margin));
    }
    return Json{{"radius", report.radius ? Json(*report.radius) : Json(nullptr)},
                {"pade", Json{{"L", report.approximant.L},
                              {"M", report.approximant.M},
                              {"effective_M", report.approximant.effective_M},
                              {"condition", finite_or_null(report.approximant.condition)},
                              {"degenerate", report.approximant.degenerate},
                              {"denominator", report.approximant.denominator}}},
                {"poles", poles},
                {"clusters", clusters},
                {"delta", delta},
                {"on_arc", on_arc},
                {"margin", margin},
                {"numerical_evidence_only", report.numerical_evidence_only},
                {"notes", report.notes}};
}

Json to_json(const ExperimentRecord& record) {
    Json out{{"delta", record.delta},
             {"n", record.n},
             {"branch", to_string(record.branch)},
             {"density", to_json(record.density)},
             {"lambda_density_variation", record.lambda_variation}};
    if (record.construction) out["construction"] = to_json(*record.construction);
    if (record.hypotheses) out["hypotheses"] = to_json(*record.hypotheses);
    const auto& changes = record.series_sign_changes.elements();
    out["series_sign_changes"] = std::vector<Index>(changes.begin(), changes.end());
    out["probe"] = to_json(record.probe);
    out["verdicts"] = verdict_map(record.verdicts);
    out["ok"] = record.ok();
    out["notes"] = record.notes;
    return out;
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace fabry::io
