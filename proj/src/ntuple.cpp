#include "cyclic/ntuple.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cyclic/triple.hpp"

namespace cyclic::ntuple {

namespace {

void require_n_at_least(std::size_t n, std::size_t lo, const char* what) {
    if (n < lo) {
        throw InvalidTuple(std::string(what) + " requires n >= " + std::to_string(lo) + ", got " +
                           std::to_string(n));
    }
}

std::size_t positive_mod(std::ptrdiff_t a, std::size_t n) {
    const auto m = static_cast<std::ptrdiff_t>(n);
    return static_cast<std::size_t>(((a % m) + m) % m);
}

}  // namespace

long double pi_n_precise(int n) {
    if (n < 3) throw std::invalid_argument("pi_n requires n >= 3, got " + std::to_string(n));
    const long double c = std::cos(std::numbers::pi_v<long double> / static_cast<long double>(n + 2));
    return 1.0L - 1.0L / (4.0L * c * c);
}

double pi_n(int n) { return static_cast<double>(pi_n_precise(n)); }

template <class Scalar>
std::optional<Reason> necessity_filter(const BasicProbTuple<Scalar>& t) {
    const double pi = pi_n(static_cast<int>(t.size()));
    if (to_double(t.min()) > pi + kPiFilterMargin) return Reason::MinExceedsPiN;
    if (to_double(t.max()) < 1.0 - pi - kPiFilterMargin) return Reason::MaxBelowOneMinusPiN;
    return std::nullopt;
}

template <class Scalar>
bool up_down_holds(const BasicProbTuple<Scalar>& t, std::size_t i) {
    const auto k = static_cast<std::ptrdiff_t>(i);
    return t.pair_sum(k) >= 1 && t.pair_sum(k + 2) <= 1;
}

template <class Scalar>
std::optional<std::size_t> find_up_down_index(const BasicProbTuple<Scalar>& t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (up_down_holds(t, i)) return i;
    }
    return std::nullopt;
}

template <class Scalar>
Verdict decide_ntuple(const BasicProbTuple<Scalar>& t) {
    require_n_at_least(t.size(), 3, "decide_ntuple");
    if (t.size() == 3) return triple::is_cyclic_triple(t);

    Verdict v;
    if (auto reason = necessity_filter(t)) {
        v.status = Status::NotCyclic;
        v.reason = *reason;
        return v;
    }
    const auto index = find_up_down_index(t);
    if (!index) return v;  // Unknown / Undecided

    bool some_above = false;
    bool some_below = false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        const Scalar s = t.pair_sum(static_cast<std::ptrdiff_t>(i));
        some_above = some_above || s > 1;
        some_below = some_below || s < 1;
    }
    v.status = Status::Cyclic;
    v.reason = (some_above && some_below) ? Reason::MixedPairwiseSums : Reason::UpDownConditionMet;
    v.index = index;
    if constexpr (std::is_same_v<Scalar, Rational>) {
        v.witness = build_witness(t, *index);
    }
    return v;
}

template std::optional<Reason> necessity_filter(const ProbTuple&);
template std::optional<Reason> necessity_filter(const ExactTuple&);
template bool up_down_holds(const ProbTuple&, std::size_t);
template bool up_down_holds(const ExactTuple&, std::size_t);
template std::optional<std::size_t> find_up_down_index(const ProbTuple&);
template std::optional<std::size_t> find_up_down_index(const ExactTuple&);
template Verdict decide_ntuple(const ProbTuple&);
template Verdict decide_ntuple(const ExactTuple&);

WitnessSystem build_witness(const ExactTuple& t, std::size_t i) {
    const std::size_t n = t.size();
    require_n_at_least(n, 4, "build_witness");
    if (i >= n) throw std::out_of_range("witness index " + std::to_string(i) + " out of range");
    if (!up_down_holds(t, i)) {
        throw HypothesisNotMet("up-down condition s_i >= 1, s_{i+2} <= 1 fails at index " + std::to_string(i));
    }

    // Rotate so the condition sits at 0-based index n-3, i.e.
    // x_{n-2} + x_{n-1} >= 1 and x_n + x_1 <= 1 in 1-based terms.
    const std::ptrdiff_t shift = static_cast<std::ptrdiff_t>(i) - static_cast<std::ptrdiff_t>(n - 3);
    const ExactTuple y = rotate(t, shift);
    const auto X = [&y](std::size_t one_based) -> const Rational& {
        return y[static_cast<std::ptrdiff_t>(one_based) - 1];
    };
    const auto R = [](long long v) { return Rational(v); };
    const auto nn = static_cast<long long>(n);

    // x_n = 1 forces x_1 = 0 under the hypothesis; the ratio is then 0.
    const Rational ratio = X(n) == 1 ? Rational(0) : Rational(X(1) / (1 - X(n)));

    std::vector<std::vector<Atom>> atoms(n);
    atoms[0] = {{R(0), 1 - X(n)}, {R(nn + 1), X(n)}};
    atoms[1] = {{R(-2), 1 - ratio}, {R(2), ratio}};
    for (std::size_t k = 3; k + 2 <= n; ++k) {
        const auto kk = static_cast<long long>(k);
        atoms[k - 1] = {{R(-kk), 1 - X(k - 1)}, {R(kk), X(k - 1)}};
    }
    atoms[n - 2] = {{R(-(nn - 1)), 1 - X(n - 2)}, {R(nn - 1), X(n - 1) + X(n - 2) - 1}, {R(nn + 2), 1 - X(n - 1)}};
    atoms[n - 1] = {{R(nn), R(1)}};

    // Undo the rotation: V_m = U'_{m - shift}.
    std::vector<DiscreteDist> dists;
    dists.reserve(n);
    for (std::size_t m = 0; m < n; ++m) {
        dists.emplace_back(atoms[positive_mod(static_cast<std::ptrdiff_t>(m) - shift, n)]);
    }
    return WitnessSystem(std::move(dists));
}

bool verify_witness(const WitnessSystem& w, const ExactTuple& t) {
    if (w.size() != t.size()) return false;
    const auto probs = w.cycle_probabilities();
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (probs[i] != t.values()[i]) return false;
    }
    return true;
}

template <class Scalar>
bool in_Dn(const BasicProbTuple<Scalar>& t, DnRegion r) {
    const std::size_t n = t.size();
    const auto all_sums = [&](auto pred) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!pred(t.pair_sum(static_cast<std::ptrdiff_t>(i)))) return false;
        }
        return true;
    };
    switch (r) {
        case DnRegion::D_I: return all_sums([](const Scalar& s) { return s < 1; });
        case DnRegion::D_II: return all_sums([](const Scalar& s) { return s > 1; });
        case DnRegion::D_star: return in_Dn(t, DnRegion::D_I) && t[0] == t.min();
    }
    return false;
}

template bool in_Dn(const ProbTuple&, DnRegion);
template bool in_Dn(const ExactTuple&, DnRegion);

bool in_Dn_star_chain(std::span<const double> x) noexcept {
    if (x.size() < 3) return false;
    if (!(x[0] >= 0.0 && x[0] < 0.5)) return false;
    for (std::size_t k = 1; k < x.size(); ++k) {
        if (!(x[k] >= x[0] && x[k] < 1.0 - x[k - 1])) return false;
    }
    return true;
}

AlternatingCounts::AlternatingCounts(int max_n) {
    if (max_n < 0) throw std::invalid_argument("max_n must be nonnegative");
    table_.reserve(static_cast<std::size_t>(max_n) + 1);
    // Entringer triangle: E(0,0) = 1, E(m,0) = 0, E(m,k) = E(m,k-1) + E(m-1,m-k);
    // A_m = E(m,m).
    std::vector<BigInt> prev{1};
    table_.push_back(1);
    for (int m = 1; m <= max_n; ++m) {
        std::vector<BigInt> row(static_cast<std::size_t>(m) + 1);
        row[0] = 0;
        for (int k = 1; k <= m; ++k) {
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(m - k)];
        }
        table_.push_back(row.back());
        prev = std::move(row);
    }
}

BigInt alternating_count(int n) {
    if (n < 0) throw std::invalid_argument("alternating_count requires n >= 0");
    static const AlternatingCounts table(256);
    if (n <= table.max_n()) return table[n];
    return AlternatingCounts(n)[n];
}

BigInt factorial(int n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    BigInt r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

namespace {

void require_andre_args(int n, int terms) {
    if (n < 1) throw std::invalid_argument("Andre series requires n >= 1");
    if (terms < 1) throw std::invalid_argument("Andre series requires terms >= 1");
}

long double andre_prefactor(int n) {
    return 2.0L * std::pow(2.0L / std::numbers::pi_v<long double>, static_cast<long double>(n + 1));
}

long double odd_power_term(int k, int s) {
    return std::pow(static_cast<long double>(2 * k + 1), -static_cast<long double>(s));
}

}  // namespace

double andre_partial_sum(int n, int terms) {
    require_andre_args(n, terms);
    const int s = n + 1;
    const bool alternating = n % 2 == 0;
    long double sum = 0;
    for (int k = 0; k < terms; ++k) {
        const long double term = odd_power_term(k, s);
        sum += (alternating && k % 2 == 1) ? -term : term;
    }
    return static_cast<double>(andre_prefactor(n) * sum);
}

double andre_series(int n, int terms) {
    require_andre_args(n, terms);
    const int s = n + 1;
    long double sum = 0;
    if (n % 2 == 0) {
        // Cohen-Villegas-Zagier acceleration of sum (-1)^k a_k.
        const int N = std::min(terms, 200);
        long double d = std::pow(3.0L + std::sqrt(8.0L), static_cast<long double>(N));
        d = (d + 1.0L / d) / 2.0L;
        long double b = -1.0L;
        long double c = -d;
        for (int k = 0; k < N; ++k) {
            c = b - c;
            sum += c * odd_power_term(k, s);
            b = static_cast<long double>(k + N) * static_cast<long double>(k - N) * b /
                ((static_cast<long double>(k) + 0.5L) * static_cast<long double>(k + 1));
        }
        sum /= d;
    } else {
        for (int k = 0; k < terms; ++k) sum += odd_power_term(k, s);
        // Euler-Maclaurin tail sum_{k >= terms} (2k+1)^{-s}.
        const long double u = 2.0L * terms + 1.0L;
        const long double sd = s;
        const auto deriv = [&](int m) {
            long double rising = 1.0L;
            for (int j = 0; j < m; ++j) rising *= sd + j;
            return std::pow(-2.0L, static_cast<long double>(m)) * rising * std::pow(u, -sd - m);
        };
        sum += std::pow(u, 1.0L - sd) / (2.0L * (sd - 1.0L)) + std::pow(u, -sd) / 2.0L - deriv(1) / 12.0L +
               deriv(3) / 720.0L - deriv(5) / 30240.0L;
    }
    return static_cast<double>(andre_prefactor(n) * sum);
}

DnStarVolume vol_Dn_star(int n) {
    if (n < 3) throw std::invalid_argument("vol_Dn_star requires n >= 3, got " + std::to_string(n));
    Rational exact(alternating_count(n - 1), BigInt(2 * n) * factorial(n - 1));
    return {exact, to_double(exact)};
}

PnBounds pn_bounds(int n) {
    if (n < 4) throw std::invalid_argument("pn_bounds requires n >= 4, got " + std::to_string(n));
    const long double nl = n;
    PnBounds b{};
    b.lower = static_cast<double>(1.0L - 3.0L * std::pow(2.0L / std::numbers::pi_v<long double>, nl));
    b.upper = static_cast<double>(1.0L - 2.0L * std::pow(0.25L, nl));
    const Rational ratio(alternating_count(n - 1), factorial(n - 1));
    b.sharper_lower = to_double(Rational(1 - ratio));
    return b;
}

}  // namespace cyclic::ntuple
