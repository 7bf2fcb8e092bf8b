#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cyclic/fixtures.hpp"
#include "cyclic/ntuple.hpp"
#include "cyclic/random.hpp"
#include "cyclic/triple.hpp"
#include "oracles.hpp"

using namespace cyclic;
using namespace cyclic::ntuple;

namespace {

ProbTuple random_tuple(std::uint64_t seed, std::uint64_t k, std::size_t n) {
    SampleStream rng(seed, k);
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform();
    return ProbTuple(v);
}

bool structurally_valid(const WitnessSystem& w) {
    for (const auto& d : w.dists()) {
        Rational total = 0;
        for (const auto& a : d.atoms()) {
            if (a.weight < 0 || a.weight > 1) return false;
            total += a.weight;
        }
        if (total != 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pi_n values") {
    CHECK(std::abs(pi_n(3) - triple::omega) <= 1e-12);
    CHECK(std::abs(pi_n(4) - 2.0 / 3.0) <= 1e-12);
    CHECK(pi_n(1000) > 0.7499);
    CHECK(pi_n(1000) < 0.75);
    CHECK_THROWS_AS(pi_n(2), std::invalid_argument);
}

TEST_CASE("pi_n is strictly increasing and below 3/4") {
    long double prev = pi_n_precise(3);
    for (int n = 4; n <= 10'000; ++n) {
        const long double cur = pi_n_precise(n);
        REQUIRE(cur > prev);
        REQUIRE(cur < 0.75L);
        prev = cur;
    }
}

TEST_CASE("decide_ntuple examples") {
    const auto a = decide_ntuple(parse_exact_tuple("0.6,0.5,0.3,0.4"));
    CHECK(a.status == Status::Cyclic);
    REQUIRE(a.witness.has_value());
    CHECK(verify_witness(*a.witness, parse_exact_tuple("0.6,0.5,0.3,0.4")));
    CHECK(a.index == 0u);

    CHECK(decide_ntuple(ProbTuple{0.8, 0.8, 0.8, 0.8}).status == Status::NotCyclic);
    CHECK(decide_ntuple(ProbTuple{0.8, 0.8, 0.8, 0.8}).reason == Reason::MinExceedsPiN);
    CHECK(decide_ntuple(ProbTuple{0.2, 0.2, 0.2, 0.2}).reason == Reason::MaxBelowOneMinusPiN);
    CHECK(decide_ntuple(parse_exact_tuple("2/3,2/3,2/3,2/3")).status == Status::Unknown);
    for (int n = 3; n <= 12; ++n) {
        const ExactTuple half(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1, 2)));
        CHECK(decide_ntuple(half).status == Status::Cyclic);
        CHECK(decide_ntuple(to_double(half)).status == Status::Cyclic);
    }
    // n = 3 goes to the exact triple test
    CHECK(decide_ntuple(ProbTuple{0.7, 0.7, 0.7}).reason == Reason::TrybulaIneq1Fails);
}

TEST_CASE("build_witness examples") {
    const ExactTuple t = parse_exact_tuple("0.6,0.5,0.3,0.4");
    const auto w = build_witness(t, 0);
    CHECK(verify_witness(w, t));
    CHECK(oracle::cycle_probs_by_joint_enumeration(w) == std::vector<Rational>(t.values().begin(), t.values().end()));

    const ExactTuple half = parse_exact_tuple("1/2,1/2,1/2,1/2");
    for (std::size_t i = 0; i < 4; ++i) {
        const auto wh = build_witness(half, i);
        CHECK(verify_witness(wh, half));
        CHECK(structurally_valid(wh));
    }

    // x_{i} + x_{i+1} = 1 exactly: the middle clause gets weight zero
    const ExactTuple edge = parse_exact_tuple("3/10,7/10,1/5,1/5,1/2");
    REQUIRE(up_down_holds(edge, 0));
    CHECK(verify_witness(build_witness(edge, 0), edge));

    // x_n = 1 forces the ratio convention
    const ExactTuple one = parse_exact_tuple("0,1/2,1/2,1/4,1");
    for (std::size_t i = 0; i < 5; ++i) {
        if (up_down_holds(one, i)) CHECK(verify_witness(build_witness(one, i), one));
    }

    CHECK_THROWS_AS(build_witness(parse_exact_tuple("2/3,2/3,2/3,2/3"), 0), HypothesisNotMet);
    CHECK_THROWS_AS(build_witness(parse_exact_tuple("1/2,1/2,1/2"), 0), InvalidTuple);
}

TEST_CASE("witnesses verify exactly on random hypothesis tuples") {
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const int n = 4 + static_cast<int>(k % 7);
        const ExactTuple t = fixtures::random_up_down_tuple(2024, k, n);
        const auto i = find_up_down_index(t);
        REQUIRE(i.has_value());
        for (std::size_t j = 0; j < t.size(); ++j) {
            if (!up_down_holds(t, j)) continue;
            const auto w = build_witness(t, j);
            REQUIRE(structurally_valid(w));
            REQUIRE(verify_witness(w, t));
        }
    }
}

TEST_CASE("witness agrees with joint enumeration for small n") {
    for (std::uint64_t k = 0; k < 60; ++k) {
        const int n = 4 + static_cast<int>(k % 3);
        const ExactTuple t = fixtures::random_up_down_tuple(77, k, n);
        const auto w = build_witness(t, *find_up_down_index(t));
        CHECK(oracle::cycle_probs_by_joint_enumeration(w) == w.cycle_probabilities());
        CHECK(oracle::cycle_probs_by_joint_enumeration(w) == std::vector<Rational>(t.values().begin(), t.values().end()));
    }
}

TEST_CASE("dice fixtures") {
    CHECK(verify_witness(fixtures::efron_dice(), parse_exact_tuple("2/3,2/3,2/3,2/3")));
    CHECK(verify_witness(fixtures::moon_moser_dice(), parse_exact_tuple("5/9,5/9,5/9")));
    CHECK_FALSE(verify_witness(fixtures::moon_moser_dice(), parse_exact_tuple("5/9,5/9,4/9")));
    CHECK_FALSE(verify_witness(fixtures::moon_moser_dice(), parse_exact_tuple("5/9,5/9,5/9,5/9")));
}

TEST_CASE("tuples outside both D regions satisfy the up-down condition") {
    for (int n = 4; n <= 12; ++n) {
        for (std::uint64_t k = 0; k < 100'000; ++k) {
            const ProbTuple t = random_tuple(500 + static_cast<std::uint64_t>(n), k, static_cast<std::size_t>(n));
            if (in_Dn(t, DnRegion::D_I) || in_Dn(t, DnRegion::D_II)) continue;
            REQUIRE(find_up_down_index(t).has_value());
        }
    }
}

TEST_CASE("the pi_n filter never contradicts the triple test") {
    for (std::uint64_t k = 0; k < 1'000'000; ++k) {
        const ProbTuple t = random_tuple(31, k, 3);
        if (necessity_filter(t)) REQUIRE(triple::is_cyclic_triple(t).status == Status::NotCyclic);
    }
}

TEST_CASE("decisions are invariant under rotation, reversal and complement") {
    for (std::uint64_t k = 0; k < 20'000; ++k) {
        const std::size_t n = 4 + k % 6;
        const ProbTuple t = random_tuple(41, k, n);
        const Status s = decide_ntuple(t).status;
        if (s == Status::Unknown) continue;
        for (std::ptrdiff_t r = 1; r < static_cast<std::ptrdiff_t>(n); ++r) {
            const Status sr = decide_ntuple(rotate(t, r)).status;
            REQUIRE((sr == s || sr == Status::Unknown));
        }
        const Status rev = decide_ntuple(reverse(t)).status;
        const Status com = decide_ntuple(complement(t)).status;
        REQUIRE((rev == s || rev == Status::Unknown));
        REQUIRE((com == s || com == Status::Unknown));
    }
}

TEST_CASE("D regions") {
    CHECK(in_Dn(ProbTuple{0.2, 0.3, 0.2, 0.3}, DnRegion::D_I));
    CHECK(in_Dn(ProbTuple{0.8, 0.9, 0.8, 0.9}, DnRegion::D_II));
    CHECK_FALSE(in_Dn(ProbTuple{0.5, 0.5, 0.5}, DnRegion::D_I));
    CHECK(in_Dn(ProbTuple{0.2, 0.3, 0.2, 0.3}, DnRegion::D_star));
    CHECK_FALSE(in_Dn(ProbTuple{0.3, 0.2, 0.3, 0.2}, DnRegion::D_star));

    for (std::uint64_t k = 0; k < 100'000; ++k) {
        const std::size_t n = 3 + k % 5;
        const ProbTuple t = random_tuple(61, k, n);
        REQUIRE(in_Dn(t, DnRegion::D_star) == in_Dn_star_chain(t.values()));
    }
}

TEST_CASE("alternating counts") {
    const std::uint64_t expected[] = {1, 1, 2, 5, 16, 61, 272, 1385, 7936, 50521};
    for (int n = 1; n <= 10; ++n) {
        CHECK(alternating_count(n) == BigInt(expected[n - 1]));
        CHECK(alternating_count(n) == BigInt(oracle::alternating_by_enumeration(n)));
    }
    CHECK(alternating_count(0) == 1);
    for (int n = 1; n <= 30; ++n) {
        const double ratio = static_cast<double>(Rational(alternating_count(n), factorial(n)).convert_to<double>());
        CHECK(alternating_count(n) <= factorial(n));
        CHECK(ratio <= 3 * std::pow(2 / std::numbers::pi, n + 1));
    }
    const AlternatingCounts table(40);
    CHECK(table.max_n() == 40);
    CHECK(table[40] == alternating_count(40));
}

TEST_CASE("Andre series") {
    CHECK(std::abs(andre_series(2, 50) - 0.5) <= 1e-12);
    CHECK(std::abs(andre_series(5, 50) - 16.0 / 120.0) <= 1e-12);
    for (int n = 1; n <= 20; ++n) {
        const double exact = Rational(alternating_count(n), factorial(n)).convert_to<double>();
        CHECK(andre_series(n, 50) == doctest::Approx(exact).epsilon(1e-12));
    }
    for (int n = 2; n <= 20; n += 2) {
        const double one_term = andre_partial_sum(n, 1);
        CHECK(one_term == doctest::Approx(2 * std::pow(2 / std::numbers::pi, n + 1)));
        CHECK(one_term >= Rational(alternating_count(n), factorial(n)).convert_to<double>());
    }
    // unaccelerated partial sums still approach the limit
    CHECK(std::abs(andre_partial_sum(5, 2000) - 16.0 / 120.0) <= 1e-9);
}

TEST_CASE("vol(D_n*)") {
    CHECK(vol_Dn_star(3).exact == Rational(1, 12));
    CHECK(vol_Dn_star(4).exact == Rational(1, 24));
    CHECK(vol_Dn_star(5).exact == Rational(1, 48));
    CHECK(vol_Dn_star(5).value == doctest::Approx(1.0 / 48));
    CHECK_THROWS(vol_Dn_star(2));
}

TEST_CASE("p_n bounds") {
    const auto b4 = pn_bounds(4);
    CHECK(b4.lower == doctest::Approx(1 - 3 * std::pow(2 / std::numbers::pi, 4)));
    CHECK(b4.lower == doctest::Approx(0.507233).epsilon(1e-6));
    CHECK(b4.upper == doctest::Approx(0.9921875));
    CHECK(b4.sharper_lower == doctest::Approx(2.0 / 3.0));
    double prev_gap = 1;
    for (int n = 4; n <= 40; ++n) {
        const auto b = pn_bounds(n);
        CHECK(b.lower <= b.sharper_lower);
        CHECK(b.sharper_lower <= b.upper);
        CHECK(b.upper - b.lower < prev_gap);
        prev_gap = b.upper - b.lower;
    }
    CHECK(prev_gap < 1e-6);
    CHECK_THROWS(pn_bounds(3));
}
