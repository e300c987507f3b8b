#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fabry/density.hpp"
#include "fabry/entire_product.hpp"
#include "fabry/experiment.hpp"
#include "fabry/series_builder.hpp"
#include "fabry/sign_analysis.hpp"
#include "fabry/singularity.hpp"

namespace fabry::io {

using Json = nlohmann::ordered_json;

// IndexSet text: a `# horizon=N` header, then one integer per line, strictly
// increasing. Blank lines are ignored.
IndexSet read_index_set(std::istream& in, const std::string& source = "<stream>");
IndexSet read_index_set(const std::filesystem::path& path);
void write_index_set(std::ostream& out, const IndexSet& set);

// ProductSpec text: the IndexSet format of S with extra `# tail_density=rho`
// and `# truncation=T` headers (truncation defaults to the horizon).
ProductSpec read_product_spec(std::istream& in, const std::string& source = "<stream>");
ProductSpec read_product_spec(const std::filesystem::path& path);
void write_product_spec(std::ostream& out, const ProductSpec& spec);

// RealSequence CSV: rows `m,a_m` for m = 0..N in order, optional `m,a_m`
// header. Written with 17 significant digits.
RealSequence read_real_sequence(std::istream& in, const std::string& source = "<stream>",
                                double support_tolerance = kDefaultSupportTolerance);
RealSequence read_real_sequence(const std::filesystem::path& path,
                                double support_tolerance = kDefaultSupportTolerance);
void write_real_sequence(std::ostream& out, const RealSequence& seq);

Json to_json(const IndexSet& set);
Json to_json(const DensityCurve& curve);
Json to_json(const GapProfile& profile);
Json to_json(const RegularityProfile& profile);
Json to_json(const IndicatorSample& sample);
Json to_json(const ConstructionReport& report);
Json to_json(const Theorem1Hypotheses& hypotheses);
Json to_json(const SingularityReport& report);
Json to_json(const ExperimentRecord& record);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& json);

}  // namespace fabry::io
