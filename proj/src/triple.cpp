#include "cyclic/triple.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclic/quadrature.hpp"
#include "cyclic/random.hpp"

namespace cyclic::triple {

namespace {

template <class Scalar>
void require_triple(const BasicProbTuple<Scalar>& t) {
    if (t.size() != 3) throw InvalidTuple("expected a triple, got n = " + std::to_string(t.size()));
}

template <class Scalar>
bool min_inequality_holds(const Scalar& x, const Scalar& y, const Scalar& z) {
    const Scalar a = x + y * z;
    const Scalar b = y + z * x;
    const Scalar c = z + x * y;
    return a <= 1 || b <= 1 || c <= 1;
}

template <std::floating_point T>
T f1_closed(T x) {
    using std::log;
    const T p3 = exact_volumes<T>().p3;
    if (x <= one_minus_omega_v<T>) {
        return 3 / p3 * (x * x * x - 3 * x * x + (1 - x) / (2 - x) - (1 - x) * log(1 - x));
    }
    if (x <= T(1) / 2) return 3 / p3 * (x * x - 3 * x + 1 - (1 - x) * log(1 - x));
    if (x <= omega_v<T>) {
        return 3 / p3 * (x * x + x - 1 + (1 - x) * log(1 - x) - 2 * (1 - x) * log(x));
    }
    return T(0);
}

template <std::floating_point T>
T f2_closed(T x) {
    const T p3 = exact_volumes<T>().p3;
    if (x > T(1) / 2) x = 1 - x;
    if (x <= one_minus_omega_v<T>) return 3 / p3 * (3 * x * x - x * x * x);
    return 6 / p3 * (3 * x - x * x - 1 / (2 * (1 - x)));
}

}  // namespace

template <class Scalar>
Verdict is_cyclic_triple(const BasicProbTuple<Scalar>& t) {
    require_triple(t);
    const Scalar& x = t[0];
    const Scalar& y = t[1];
    const Scalar& z = t[2];
    const bool first = min_inequality_holds<Scalar>(x, y, z);
    const bool second = min_inequality_holds<Scalar>(Scalar(1 - x), Scalar(1 - y), Scalar(1 - z));
    Verdict v;
    if (first && second) {
        v.status = Status::Cyclic;
        v.reason = Reason::TrybulaBothHold;
    } else {
        v.status = Status::NotCyclic;
        v.reason = first ? Reason::TrybulaIneq2Fails : Reason::TrybulaIneq1Fails;
    }
    return v;
}

template <class Scalar>
bool is_nontransitive_triple(const BasicProbTuple<Scalar>& t) {
    if (is_cyclic_triple(t).status != Status::Cyclic) return false;
    const Scalar half = Scalar(1) / 2;
    return t.min() > half;
}

template Verdict is_cyclic_triple(const ProbTuple&);
template Verdict is_cyclic_triple(const ExactTuple&);
template bool is_nontransitive_triple(const ProbTuple&);
template bool is_nontransitive_triple(const ExactTuple&);

bool is_cyclic_sorted(double x, double y, double z) noexcept {
    return x + y * z <= 1.0 && (1.0 - z) + (1.0 - x) * (1.0 - y) <= 1.0;
}

bool in_ordered_region(double x, double y, double z) noexcept {
    if (!(x >= 0.0 && x <= omega)) return false;
    if (!(y >= x && y <= std::sqrt(1.0 - x))) return false;
    const double lo = std::max(y, (1.0 - x) * (1.0 - y));
    const double hi = y > 0.0 ? std::min(1.0, (1.0 - x) / y) : 1.0;
    return z >= lo && z <= hi;
}

bool in_region(const ProbTuple& t, Region r) {
    require_triple(t);
    const double x = t[0];
    const double y = t[1];
    const double z = t[2];
    switch (r) {
        case Region::C3:
            return is_cyclic_triple(t).status == Status::Cyclic;
        case Region::C3star:
            return is_nontransitive_triple(t);
        case Region::C3_I:
            if (!(x > 0.5 && x <= omega)) return false;
            if (!(y >= x && y <= (1.0 - x) / x)) return false;
            return z >= x && z <= (1.0 - x) / y;
        case Region::C3_II:
            if (!(x >= 0.0 && x < 0.5)) return false;
            if (y > 0.5 && y <= 1.0 - x) return z > 0.5 && z <= 1.0;
            if (y > 1.0 - x && y <= 1.0) return z > 0.5 && z <= (1.0 - x) / y;
            return false;
        case Region::C3_ordered:
            return in_ordered_region(x, y, z);
    }
    return false;
}

template <std::floating_point T>
T density(DensityKind which, T x) {
    if (!(x >= T(0) && x <= T(1))) throw std::domain_error("density abscissa must lie in [0,1]");
    switch (which) {
        case DensityKind::F1: return f1_closed(x);
        case DensityKind::F2: return f2_closed(x);
        case DensityKind::F3: return f1_closed(T(1) - x);
    }
    return T(0);
}

template float density(DensityKind, float);
template double density(DensityKind, double);
template long double density(DensityKind, long double);

namespace {

using Real = long double;

Real integrate_density(DensityKind which, Real a, Real b) {
    const auto bps = density_breakpoints<Real>();
    return quadrature::integrate_pieces<Real>([which](Real x) { return density<Real>(which, x); }, a, b,
                                              std::span<const Real>(bps), Real(1e-15));
}

Real integrate_moment(DensityKind which) {
    const auto bps = density_breakpoints<Real>();
    return quadrature::integrate_pieces<Real>([which](Real x) { return x * density<Real>(which, x); }, Real(0),
                                              Real(1), std::span<const Real>(bps), Real(1e-15));
}

}  // namespace

double density_integral(DensityKind which, double a, double b) {
    if (which == DensityKind::F2 && a == 0.0 && b == 1.0) {
        // f2(x) = f2(1-x): integrate one half and double.
        return static_cast<double>(2 * integrate_density(which, 0, Real(1) / 2));
    }
    return static_cast<double>(integrate_density(which, a, b));
}

DensityStats density_stats(DensityKind which) {
    DensityStats s{};
    s.mean = static_cast<double>(integrate_moment(which));

    const Real total = integrate_density(which, 0, 1);
    s.median = static_cast<double>(quadrature::bisect_increasing<Real>(
        [&](Real m) { return integrate_density(which, 0, m) - total / 2; }, Real(0), Real(1), Real(1e-10)));

    const auto bps = density_breakpoints<Real>();
    const std::array<Real, 5> edges{Real(0), bps[0], bps[1], bps[2], Real(1)};
    const auto f = [which](Real x) { return density<Real>(which, x); };
    Real best_x = 0;
    Real best_f = -1;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const Real a = edges[i];
        const Real b = edges[i + 1];
        for (Real cand : {a, quadrature::golden_maximize<Real>(f, a, b, Real(1e-12)), b}) {
            const Real fc = f(cand);
            if (fc > best_f) {
                best_f = fc;
                best_x = cand;
            }
        }
    }
    s.mode = static_cast<double>(best_x);
    return s;
}

UnrestrictedMinStats unrestricted_min_stats() {
    return {0.25, 1.0 - std::cbrt(0.5), 0.0};
}

double unrestricted_min_density(double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("density abscissa must lie in [0,1]");
    return 3.0 * (1.0 - x) * (1.0 - x);
}

bool ordered_attempt(std::uint64_t seed, std::uint64_t attempt, std::array<double, 3>& out) noexcept {
    SampleStream rng(seed, attempt);
    out = {rng.uniform(), rng.uniform(), rng.uniform()};
    std::sort(out.begin(), out.end());
    return in_ordered_region(out[0], out[1], out[2]);
}

OrderedSamples sample_ordered_cyclic(std::uint64_t count, std::uint64_t seed) {
    if (count == 0) throw std::invalid_argument("sample count must be at least 1");
    OrderedSamples s;
    s.triples.reserve(count);
    std::array<double, 3> t{};
    while (s.triples.size() < count) {
        if (ordered_attempt(seed, s.attempts++, t)) s.triples.push_back(t);
    }
    return s;
}

}  // namespace cyclic::triple
