#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cyclic/core.hpp"

namespace cyclic::ntuple {

/// pi_n = 1 - 1 / (4 cos^2(pi / (n + 2))): the largest value the minimum
/// coordinate of a cyclic n-tuple can reach. Throws for n < 3.
double pi_n(int n);
long double pi_n_precise(int n);

/// Safety band around pi_n used by the necessity filter so that comparing
/// an exact input against the irrational threshold stays sound.
inline constexpr double kPiFilterMargin = 1e-12;

class HypothesisNotMet : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Necessity filter: NotCyclic reasons from min(t) > pi_n or
/// max(t) < 1 - pi_n. Empty when neither fires.
template <class Scalar>
std::optional<Reason> necessity_filter(const BasicProbTuple<Scalar>& t);

/// True when s_i >= 1 and s_{i+2} <= 1 (0-based, cyclic).
template <class Scalar>
bool up_down_holds(const BasicProbTuple<Scalar>& t, std::size_t i);

/// Smallest index at which the up-down condition holds.
template <class Scalar>
std::optional<std::size_t> find_up_down_index(const BasicProbTuple<Scalar>& t);

/// Sound three-way classifier.
///
/// n = 3 is delegated to the exact triple test. For n >= 4 the necessity
/// filter is tried first, then every index for the up-down condition;
/// anything left is Unknown. For exact tuples a Cyclic verdict carries a
/// verified witness system.
template <class Scalar>
Verdict decide_ntuple(const BasicProbTuple<Scalar>& t);

/// Explicit witness distributions for a tuple satisfying the up-down
/// condition at index i (0-based). Throws HypothesisNotMet otherwise, and
/// InvalidTuple for n < 4.
WitnessSystem build_witness(const ExactTuple& t, std::size_t i);

/// Exact check that P(U_{i+1} > U_i) = x_i for every i.
bool verify_witness(const WitnessSystem& w, const ExactTuple& t);

enum class DnRegion { D_I, D_II, D_star };

/// D_I: all s_i < 1. D_II: all s_i > 1. D_star: D_I with x_1 a (possibly
/// tied) minimum.
template <class Scalar>
bool in_Dn(const BasicProbTuple<Scalar>& t, DnRegion r);

/// D_star tested through its chain form
///   0 <= x_1 < 1/2,  x_1 <= x_k < 1 - x_{k-1}  (k = 2..n).
bool in_Dn_star_chain(std::span<const double> x) noexcept;

/// Table of up-down alternating permutation counts A_0..A_max, built once
/// with the boustrophedon (Seidel-Entringer) recurrence.
class AlternatingCounts {
  public:
    explicit AlternatingCounts(int max_n);

    int max_n() const noexcept { return static_cast<int>(table_.size()) - 1; }
    const BigInt& operator[](int n) const { return table_.at(static_cast<std::size_t>(n)); }

  private:
    std::vector<BigInt> table_;
};

/// A_n for n >= 0 (A_0 = A_1 = 1, A_2 = 1, A_3 = 2, ...).
BigInt alternating_count(int n);

BigInt factorial(int n);

/// First `terms` terms of Andre's series for A_n / n!, unaccelerated.
/// For even n the one-term value 2 (2/pi)^{n+1} is an upper bound.
double andre_partial_sum(int n, int terms);

/// Andre's series for A_n / n! evaluated from its first `terms` terms with
/// convergence acceleration (alternating case: Cohen-Villegas-Zagier;
/// positive case: Euler-Maclaurin tail).
double andre_series(int n, int terms);

struct DnStarVolume {
    Rational exact;
    double value;
};

/// vol(D_n*) = A_{n-1} / (2n (n-1)!). Throws for n < 3.
DnStarVolume vol_Dn_star(int n);

struct PnBounds {
    double lower;          ///< 1 - 3 (2/pi)^n
    double sharper_lower;  ///< 1 - A_{n-1} / (n-1)!
    double upper;          ///< 1 - 2 (1/4)^n
};

/// Throws for n < 4.
PnBounds pn_bounds(int n);

}  // namespace cyclic::ntuple
