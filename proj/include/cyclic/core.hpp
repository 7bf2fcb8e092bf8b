#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation receives a tuple it cannot act on (wrong length,
/// value outside [0,1], malformed text).
class InvalidTuple : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Ordered n-tuple of probabilities, n >= 3, indexed cyclically.
///
/// Scalar is `double` for the floating paths (volumes, Monte Carlo) and
/// `Rational` for the exact decision/witness paths.
template <class Scalar>
class BasicProbTuple {
  public:
    using scalar_type = Scalar;

    explicit BasicProbTuple(std::vector<Scalar> values) : values_(std::move(values)) {
        if (values_.size() < 3) {
            throw InvalidTuple("tuple must have at least 3 entries, got " +
                               std::to_string(values_.size()));
        }
        for (const Scalar& v : values_) {
            // NaN fails both comparisons and is rejected here as well.
            if (!(v >= Scalar(0) && v <= Scalar(1))) {
                throw InvalidTuple("tuple entries must lie in [0,1]");
            }
        }
    }

    BasicProbTuple(std::initializer_list<Scalar> values)
        : BasicProbTuple(std::vector<Scalar>(values)) {}

    std::size_t size() const noexcept { return values_.size(); }

    /// Cyclic access: index i and i + n refer to the same entry.
    const Scalar& operator[](std::ptrdiff_t i) const noexcept {
        const auto n = static_cast<std::ptrdiff_t>(values_.size());
        return values_[static_cast<std::size_t>(((i % n) + n) % n)];
    }

    std::span<const Scalar> values() const noexcept { return values_; }

    /// s_i = x_i + x_{i+1}.
    Scalar pair_sum(std::ptrdiff_t i) const { return Scalar((*this)[i] + (*this)[i + 1]); }

    const Scalar& min() const { return *std::min_element(values_.begin(), values_.end()); }
    const Scalar& max() const { return *std::max_element(values_.begin(), values_.end()); }

    friend bool operator==(const BasicProbTuple&, const BasicProbTuple&) = default;

  private:
    std::vector<Scalar> values_;
};

using ProbTuple = BasicProbTuple<double>;
using ExactTuple = BasicProbTuple<Rational>;

/// (1 - x_1, ..., 1 - x_n).
template <class Scalar>
BasicProbTuple<Scalar> complement(const BasicProbTuple<Scalar>& t) {
    std::vector<Scalar> out;
    out.reserve(t.size());
    for (const Scalar& v : t.values()) out.push_back(Scalar(Scalar(1) - v));
    return BasicProbTuple<Scalar>(std::move(out));
}

/// (x_{1+k}, ..., x_{n+k}); k may be negative or exceed n.
template <class Scalar>
BasicProbTuple<Scalar> rotate(const BasicProbTuple<Scalar>& t, std::ptrdiff_t k) {
    std::vector<Scalar> out;
    out.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(t[static_cast<std::ptrdiff_t>(i) + k]);
    return BasicProbTuple<Scalar>(std::move(out));
}

template <class Scalar>
BasicProbTuple<Scalar> reverse(const BasicProbTuple<Scalar>& t) {
    std::vector<Scalar> out(t.values().rbegin(), t.values().rend());
    return BasicProbTuple<Scalar>(std::move(out));
}

ProbTuple to_double(const ExactTuple& t);

/// Parses one number: a decimal ("0.25", "1e-3", ".5") or a rational "p/q".
/// Decimals are converted exactly (0.1 -> 1/10).
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; the denominator is always written, e.g. "3/1".
std::string format_rational(const Rational& r);

/// Parses the comma-separated textual form, e.g. "5/9,5/9,5/9".
ExactTuple parse_exact_tuple(std::string_view text);
ProbTuple parse_tuple(std::string_view text);

std::string format_tuple(const ExactTuple& t);

// ---------------------------------------------------------------------------
// Decision outcomes

enum class Status { Cyclic, NotCyclic, Unknown };

enum class Reason {
    TrybulaBothHold,
    TrybulaIneq1Fails,
    TrybulaIneq2Fails,
    UpDownConditionMet,
    MixedPairwiseSums,
    MinExceedsPiN,
    MaxBelowOneMinusPiN,
    Undecided,
};

std::string_view to_string(Status s);
std::string_view to_string(Reason r);

/// True for the reasons that certify cyclicity.
constexpr bool is_sufficiency(Reason r) {
    return r == Reason::TrybulaBothHold || r == Reason::UpDownConditionMet ||
           r == Reason::MixedPairwiseSums;
}

// ---------------------------------------------------------------------------
// Finitely supported distributions

struct Atom {
    Rational point;
    Rational weight;

    friend bool operator==(const Atom&, const Atom&) = default;
};

class InvalidDistribution : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Finitely supported distribution with exact weights summing to 1 and
/// distinct support points. Zero-weight atoms are kept.
class DiscreteDist {
  public:
    explicit DiscreteDist(std::vector<Atom> atoms);

    /// Uniform over the listed faces; repeated faces merge into one atom.
    static DiscreteDist uniform_faces(std::span<const Rational> faces);
    static DiscreteDist uniform_faces(std::initializer_list<int> faces);

    std::span<const Atom> atoms() const noexcept { return atoms_; }

    /// P(this > other) for independent draws.
    Rational prob_greater(const DiscreteDist& other) const;

    bool shares_support_with(const DiscreteDist& other) const;

    friend bool operator==(const DiscreteDist&, const DiscreteDist&) = default;

  private:
    std::vector<Atom> atoms_;
};

/// n independent distributions with pairwise disjoint supports.
class WitnessSystem {
  public:
    explicit WitnessSystem(std::vector<DiscreteDist> dists);

    std::size_t size() const noexcept { return dists_.size(); }
    const DiscreteDist& operator[](std::size_t i) const { return dists_.at(i); }
    std::span<const DiscreteDist> dists() const noexcept { return dists_; }

    /// P(U_{i+1} > U_i) for each i, cyclically.
    std::vector<Rational> cycle_probabilities() const;

    friend bool operator==(const WitnessSystem&, const WitnessSystem&) = default;

  private:
    std::vector<DiscreteDist> dists_;
};

struct Verdict {
    Status status = Status::Unknown;
    Reason reason = Reason::Undecided;
    /// Index i (0-based) at which the up-down condition fired, if any.
    std::optional<std::size_t> index;
    std::optional<WitnessSystem> witness;
};

// ---------------------------------------------------------------------------
// Numeric results

struct MCEstimate {
    std::string target;
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned chunks = 1;
    std::uint64_t hits = 0;
};

/// Bernoulli standard error sqrt(p(1-p)/samples).
double bernoulli_stderr(double p, std::uint64_t samples);

enum class DensityKind { F1, F2, F3 };

std::string_view to_string(DensityKind k);
DensityKind parse_density_kind(std::string_view s);

struct DensityPoint {
    double x;
    double density;
};

struct DensityGrid {
    DensityKind which = DensityKind::F1;
    std::vector<DensityPoint> points;
};

}  // namespace cyclic
