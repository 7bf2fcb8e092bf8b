#pragma once

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <numbers>
#include <vector>

#include "cyclic/core.hpp"

namespace cyclic::triple {

/// Golden-ratio conjugate (sqrt(5) - 1) / 2, the positive root of w^2 + w = 1.
template <std::floating_point T>
inline constexpr T omega_v = std::numbers::phi_v<T> - T(1);

inline constexpr double omega = omega_v<double>;

/// 1 - omega = (3 - sqrt(5)) / 2.
template <std::floating_point T>
inline constexpr T one_minus_omega_v = T(2) - std::numbers::phi_v<T>;

enum class Region { C3, C3star, C3_I, C3_II, C3_ordered };

/// Exact decision for triples via the two min-inequalities
///   min(x+yz, y+zx, z+xy) <= 1  and  the same for the complements.
/// Never returns Unknown. Throws InvalidTuple when n != 3.
template <class Scalar>
Verdict is_cyclic_triple(const BasicProbTuple<Scalar>& t);

/// Cyclic and every coordinate strictly above 1/2.
template <class Scalar>
bool is_nontransitive_triple(const BasicProbTuple<Scalar>& t);

/// Simplified test for x <= y <= z: x + yz <= 1 and (1-z) + (1-x)(1-y) <= 1.
/// Precondition (not checked): the triple is sorted.
bool is_cyclic_sorted(double x, double y, double z) noexcept;

/// Membership via the explicit inequality descriptions of each region.
bool in_region(const ProbTuple& t, Region r);

/// Region of ordered cyclic triples, tested with the chain
///   0 <= x <= w,  x <= y <= sqrt(1-x),  max(y,(1-x)(1-y)) <= z <= min(1,(1-x)/y).
bool in_ordered_region(double x, double y, double z) noexcept;

template <std::floating_point T>
struct ExactVolumes {
    T p3;
    T p3_star;
    T vol_I;
    T vol_II;
};

/// Closed-form volumes of the cyclic / nontransitive regions and of the two
/// building blocks they decompose into.
template <std::floating_point T = long double>
ExactVolumes<T> exact_volumes() {
    using std::log;
    using std::sqrt;
    const T sqrt5 = sqrt(T(5));
    const T ln2 = log(T(2));
    const T w = omega_v<T>;
    ExactVolumes<T> v{};
    v.p3 = T(11) * sqrt5 / 4 - T(17) / 4 - 6 * log(sqrt5 - 1);
    v.p3_star = T(11) * sqrt5 / 8 - T(43) / 16 - 3 * log(sqrt5 - 1) + 3 * ln2 / 8;
    v.vol_I = ln2 / 8 - log(2 * w) + T(11) * w / 12 - T(7) / 16;
    v.vol_II = T(3) / 16 - ln2 / 8;
    return v;
}

/// Order-statistic densities of a uniform random cyclic triple.
/// At a breakpoint the left piece is used. Throws std::domain_error when
/// x lies outside [0, 1].
template <std::floating_point T>
T density(DensityKind which, T x);

inline double density(DensityKind which, double x) { return density<double>(which, x); }

/// Breakpoints shared by all three densities: 1-w, 1/2, w.
template <std::floating_point T>
std::array<T, 3> density_breakpoints() {
    return {one_minus_omega_v<T>, T(1) / 2, omega_v<T>};
}

struct DensityStats {
    double mean;
    double median;
    double mode;
};

/// Mean by piecewise adaptive quadrature, median by bisection on the
/// quadrature CDF, mode by golden-section search within each smooth piece.
DensityStats density_stats(DensityKind which);

/// Integral of the density over [a, b], split at the breakpoints.
double density_integral(DensityKind which, double a, double b);

/// Baseline: smallest of three independent uniforms, density 3(1-x)^2.
struct UnrestrictedMinStats {
    double mean;
    double median;
    double mode;
};

UnrestrictedMinStats unrestricted_min_stats();
double unrestricted_min_density(double x);

struct OrderedSamples {
    std::vector<std::array<double, 3>> triples;
    std::uint64_t attempts = 0;

    double acceptance_rate() const {
        return attempts ? static_cast<double>(triples.size()) / static_cast<double>(attempts) : 0.0;
    }
};

/// Rejection sampler: draws three uniforms for attempt k from the stream
/// (seed, k), sorts them, and keeps the triple when it lies in the ordered
/// cyclic region. Deterministic in (count, seed).
OrderedSamples sample_ordered_cyclic(std::uint64_t count, std::uint64_t seed);

/// One attempt of the sampler above; returns false on rejection.
bool ordered_attempt(std::uint64_t seed, std::uint64_t attempt, std::array<double, 3>& out) noexcept;

}  // namespace cyclic::triple
