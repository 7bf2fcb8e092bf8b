#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "cyclic/core.hpp"
#include "cyclic/mc.hpp"

namespace cyclic::io {

using Json = nlohmann::ordered_json;

/// {"n": n, "dists": [[{"point": "p/q", "weight": "p/q"}, ...], ...]}
Json witness_to_json(const WitnessSystem& w);

/// Inverse of witness_to_json. Throws std::invalid_argument (or one of the
/// core validation errors) on malformed input.
WitnessSystem witness_from_json(const Json& j);

Json verdict_to_json(const Verdict& v, const std::string& tuple_text);

/// {"target", "estimate", "stderr", "samples", "seed", "chunks"}
Json estimate_to_json(const MCEstimate& e);
Json result_to_json(const mc::Result& r);

/// Serializes like Json::dump(2) but writes every floating value with 17
/// significant digits in the classic locale.
std::string dump(const Json& j, int indent = 2);

/// "%.17g" in the classic locale.
std::string format_double(double v);

/// CSV on `points + 1` equally spaced abscissas of [0,1]. Header
/// "x,f1,f2,f3", or "x,<which>" when a single density is requested.
void write_density_csv(std::ostream& out, int points, std::optional<DensityKind> which = std::nullopt);

}  // namespace cyclic::io
