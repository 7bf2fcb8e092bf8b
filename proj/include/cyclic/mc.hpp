#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "cyclic/core.hpp"

namespace cyclic::mc {

enum class Target { P3, P3Star, VolC3I, VolC3II, VolC3Ordered, VolDnStar, PnBracket };

std::string_view to_string(Target t);
/// Accepts the names printed by to_string: p3, p3_star, vol_C3_I, vol_C3_II,
/// vol_C3_ordered, vol_Dn_star, pn_bracket.
Target parse_target(std::string_view name);

struct EstimatorSpec {
    Target target = Target::P3;
    int n = 3;  ///< dimension for vol_Dn_star and pn_bracket; ignored otherwise
    std::uint64_t samples = 1'000'000;
    std::uint64_t seed = 0;
    unsigned chunks = 1;
};

/// Lower = fraction decided Cyclic, upper = 1 - fraction decided NotCyclic.
struct Bracket {
    MCEstimate lower;
    MCEstimate upper;
    std::uint64_t unknown = 0;
};

using Result = std::variant<MCEstimate, Bracket>;

/// Plain Monte Carlo over uniform points of the unit cube.
///
/// Sample k always draws from the counter stream (seed, k); chunks only
/// partition the index range across worker threads, so the result depends
/// on (target, n, samples, seed) alone. Throws std::invalid_argument for
/// unsupported combinations.
Result estimate(const EstimatorSpec& spec);

/// Convenience for the single-estimate targets.
MCEstimate estimate_single(const EstimatorSpec& spec);

/// Empirical density of the i-th order statistic of a uniform cyclic
/// triple from `samples` accepted rejection samples; points are bin centres.
DensityGrid histogram(DensityKind which, std::uint64_t samples, int bins, std::uint64_t seed);

/// Number of worker threads used for a given chunk count.
unsigned worker_count(unsigned chunks);

}  // namespace cyclic::mc
