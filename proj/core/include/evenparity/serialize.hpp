#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "evenparity/detector.hpp"
#include "evenparity/engineering.hpp"
#include "evenparity/optimize.hpp"
#include "evenparity/wigner.hpp"

namespace evenparity {

using Json = nlohmann::json;

/// %.17g, which round-trips every double.
std::string format_double(double value);

/// [re, im]
Json complex_to_json(Complex z);
/// Accepts [re, im] or a bare real number.
Complex complex_from_json(const Json& j);

Json vector_to_json(const ComplexVector& v);
Json matrix_to_json(const ComplexMatrix& m);

void to_json(Json& j, const FockVector& v);
void from_json(const Json& j, FockVector& v);
void to_json(Json& j, const PovmOptions& o);
void from_json(const Json& j, PovmOptions& o);
void to_json(Json& j, const SchemeConfig& c);
void from_json(const Json& j, SchemeConfig& c);
/// {eta, n, cutoff, tail_weight, weights, vectors}
void to_json(Json& j, const DetectorEffect& e);
/// {config, success_probability, stage_probabilities, state, normalized}
void to_json(Json& j, const HeraldedState& h);
void to_json(Json& j, const OptimizationResult& r);
void to_json(Json& j, const PowerLawFit& f);

/// {bounds, shape, convention, layout}
Json wigner_header(const WignerGrid& grid);
/// Rows are x_i, columns p_k, values with 17 significant digits.
std::string wigner_csv(const WignerGrid& grid);
/// values(i, k) as little-endian float64, i-major.
std::string wigner_binary(const WignerGrid& grid);

/// Writes through a temporary file in the same directory and renames it
/// into place, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

} // namespace evenparity
