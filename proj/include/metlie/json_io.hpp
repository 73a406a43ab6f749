#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "metlie/metric.hpp"
#include "metlie/reduction.hpp"

namespace metlie {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
/// Basis vectors as a list of coordinate lists.
Json to_json(const Subspace& s);
Json to_json(const Signature& s);

/// {"dim", "basis_names", "brackets": [{"i","j","k","c"}]}
Json to_json(const LieAlgebra& g);
/// Lie algebra fields plus "gram".
Json to_json(const MetricLieAlgebra& m);
Json to_json(const NilInvarianceReport& r);
Json to_json(const ReductionStep& s);
Json to_json(const ReductionChain& c);

/// Schema problems throw Error(ParseError); bracket problems throw
/// Error(InvalidBracket) or Error(JacobiViolation) from the constructor.
Rational rational_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
LieAlgebra lie_algebra_from_json(const Json& j);
MetricLieAlgebra metric_from_json(const Json& j);

/// Reads and parses a MetricLieAlgebra file.
MetricLieAlgebra read_metric_file(const std::filesystem::path& path);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace metlie
