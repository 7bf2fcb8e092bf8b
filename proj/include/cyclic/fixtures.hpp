#pragma once

#include <cstdint>

#include "cyclic/core.hpp"

namespace cyclic::fixtures {

/// Efron's four dice A, B, C, D, each face with probability 1/6:
/// A = {0,0,4,4,4,4}, B = {1,1,1,5,5,5}, C = {2,2,2,2,6,6}, D = {3,3,3,3,3,3}.
WitnessSystem efron_dice();

/// Moon-Moser three-sided dice A = {1,5,9}, B = {2,6,7}, C = {3,4,8}.
WitnessSystem moon_moser_dice();

/// Random rational n-tuple (denominators up to `max_denominator`) for which
/// the up-down condition holds at a random index. Deterministic in
/// (seed, index, n).
ExactTuple random_up_down_tuple(std::uint64_t seed, std::uint64_t index, int n,
                                long long max_denominator = 1000);

}  // namespace cyclic::fixtures
