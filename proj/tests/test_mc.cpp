#include <doctest.h>

#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "cyclic/mc.hpp"
#include "cyclic/ntuple.hpp"
#include "cyclic/triple.hpp"

using namespace cyclic;
using namespace cyclic::mc;

namespace {

double p3_exact() { return static_cast<double>(triple::exact_volumes<long double>().p3); }

}  // namespace

TEST_CASE("target names round-trip") {
    for (Target t : {Target::P3, Target::P3Star, Target::VolC3I, Target::VolC3II, Target::VolC3Ordered,
                     Target::VolDnStar, Target::PnBracket}) {
        CHECK(parse_target(to_string(t)) == t);
    }
    CHECK_THROWS_AS(parse_target("p4"), std::invalid_argument);
}

TEST_CASE("invalid specs are rejected") {
    CHECK_THROWS_AS(estimate({Target::P3, 3, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({Target::P3, 3, 10, 1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({Target::PnBracket, 2, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate({Target::VolDnStar, 2, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(estimate_single({Target::PnBracket, 5, 10, 1, 1}), std::invalid_argument);
}

TEST_CASE("estimates do not depend on the chunk count") {
    for (Target t : {Target::P3, Target::VolC3Ordered, Target::VolDnStar}) {
        const auto a = estimate_single({t, 4, 100'003, 5, 1});
        const auto b = estimate_single({t, 4, 100'003, 5, 7});
        const auto c = estimate_single({t, 4, 100'003, 5, 7});
        CHECK(a.estimate == b.estimate);
        CHECK(a.std_error == b.std_error);
        CHECK(b.estimate == c.estimate);
        CHECK(a.hits == b.hits);
    }
    const auto x = std::get<Bracket>(estimate({Target::PnBracket, 6, 50'000, 3, 1}));
    const auto y = std::get<Bracket>(estimate({Target::PnBracket, 6, 50'000, 3, 4}));
    CHECK(x.lower.estimate == y.lower.estimate);
    CHECK(x.upper.estimate == y.upper.estimate);
    CHECK(x.unknown == y.unknown);
}

TEST_CASE("different seeds give different estimates") {
    CHECK(estimate_single({Target::P3, 3, 10'000, 1, 1}).estimate != estimate_single({Target::P3, 3, 10'000, 2, 1}).estimate);
}

TEST_CASE("p3 intervals cover the closed form at the nominal rate") {
    int covered = 0;
    for (std::uint64_t seed = 1000; seed < 1100; ++seed) {
        const auto e = estimate_single({Target::P3, 3, 20'000, seed, 1});
        if (std::abs(e.estimate - p3_exact()) <= 2 * e.std_error) ++covered;
    }
    CHECK(covered >= 90);
}

TEST_CASE("region volumes are consistent with the closed forms") {
    const auto v = triple::exact_volumes<long double>();
    const std::uint64_t N = 2'000'000;
    const auto ord = estimate_single({Target::VolC3Ordered, 3, N, 17, 4});
    CHECK(std::abs(6 * ord.estimate - static_cast<double>(v.p3)) <= 4 * 6 * ord.std_error);
    const auto I = estimate_single({Target::VolC3I, 3, N, 18, 4});
    CHECK(std::abs(I.estimate - static_cast<double>(v.vol_I)) <= 4 * I.std_error);
    const auto II = estimate_single({Target::VolC3II, 3, N, 19, 4});
    CHECK(std::abs(II.estimate - static_cast<double>(v.vol_II)) <= 4 * II.std_error);
    const auto star = estimate_single({Target::P3Star, 3, N, 20, 4});
    CHECK(std::abs(star.estimate - static_cast<double>(v.p3_star)) <= 4 * star.std_error);
}

TEST_CASE("brackets are ordered and respect the bounds") {
    for (int n = 4; n <= 9; ++n) {
        const auto b = std::get<Bracket>(estimate({Target::PnBracket, n, 100'000, 8, 2}));
        CHECK(b.lower.estimate <= b.upper.estimate);
        const auto bounds = ntuple::pn_bounds(n);
        CHECK(b.lower.estimate - 4 * b.lower.std_error <= bounds.upper);
        CHECK(b.upper.estimate + 4 * b.upper.std_error >= bounds.lower);
        CHECK(b.lower.target == "pn_bracket(" + std::to_string(n) + ").lower");
    }
}

TEST_CASE("f1 histogram matches the closed form") {
    const auto g = histogram(DensityKind::F1, 300'000, 50, 4);
    REQUIRE(g.points.size() == 50);
    double sup = 0;
    double total = 0;
    for (const auto& p : g.points) {
        sup = std::max(sup, std::abs(p.density - triple::density(DensityKind::F1, p.x)));
        total += p.density / 50;
        if (p.x - 0.01 > triple::omega) CHECK(p.density == 0.0);
    }
    CHECK(sup <= 0.1);
    CHECK(total == doctest::Approx(1.0));
    CHECK_THROWS_AS(histogram(DensityKind::F1, 100, 9, 1), std::invalid_argument);
}

TEST_CASE("f2 histogram is symmetric about one half") {
    const std::uint64_t N = 300'000;
    const int bins = 50;
    const auto g = histogram(DensityKind::F2, N, bins, 6);
    double stat = 0;
    int df = 0;
    for (int b = 0; b < bins / 2; ++b) {
        const double lo = g.points[static_cast<std::size_t>(b)].density * static_cast<double>(N) / bins;
        const double hi = g.points[static_cast<std::size_t>(bins - 1 - b)].density * static_cast<double>(N) / bins;
        if (lo + hi == 0) continue;
        stat += (lo - hi) * (lo - hi) / (lo + hi);
        ++df;
    }
    const double p = boost::math::cdf(boost::math::complement(boost::math::chi_squared(df), stat));
    CHECK(p > 0.001);
}
