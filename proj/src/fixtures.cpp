#include "cyclic/fixtures.hpp"

#include <stdexcept>

#include "cyclic/random.hpp"

namespace cyclic::fixtures {

WitnessSystem efron_dice() {
    return WitnessSystem({
        DiscreteDist::uniform_faces({0, 0, 4, 4, 4, 4}),
        DiscreteDist::uniform_faces({1, 1, 1, 5, 5, 5}),
        DiscreteDist::uniform_faces({2, 2, 2, 2, 6, 6}),
        DiscreteDist::uniform_faces({3, 3, 3, 3, 3, 3}),
    });
}

WitnessSystem moon_moser_dice() {
    return WitnessSystem({
        DiscreteDist::uniform_faces({1, 5, 9}),
        DiscreteDist::uniform_faces({2, 6, 7}),
        DiscreteDist::uniform_faces({3, 4, 8}),
    });
}

namespace {

long long draw_int(SampleStream& rng, long long lo, long long hi) {
    const auto span = static_cast<double>(hi - lo + 1);
    const auto v = lo + static_cast<long long>(rng.uniform() * span);
    return v > hi ? hi : v;
}

Rational draw_rational(SampleStream& rng, long long max_den) {
    const long long q = draw_int(rng, 1, max_den);
    return Rational(draw_int(rng, 0, q), q);
}

}  // namespace

ExactTuple random_up_down_tuple(std::uint64_t seed, std::uint64_t index, int n, long long max_denominator) {
    if (n < 4) throw std::invalid_argument("up-down tuples need n >= 4");
    SampleStream rng(seed, index);
    const auto nn = static_cast<std::size_t>(n);
    std::vector<Rational> x(nn);
    for (Rational& v : x) v = draw_rational(rng, max_denominator);

    const auto i = static_cast<std::size_t>(draw_int(rng, 0, n - 1));
    // x_i + x_{i+1} >= 1: pick x_i, then x_{i+1} in [1 - x_i, 1].
    const Rational a = draw_rational(rng, max_denominator);
    const Rational u = draw_rational(rng, max_denominator);
    x[i] = a;
    x[(i + 1) % nn] = Rational(1 - a + u * a);
    // x_{i+2} + x_{i+3} <= 1: pick x_{i+2}, then x_{i+3} in [0, 1 - x_{i+2}].
    const Rational c = draw_rational(rng, max_denominator);
    const Rational v = draw_rational(rng, max_denominator);
    x[(i + 2) % nn] = c;
    x[(i + 3) % nn] = Rational(v * (1 - c));
    return ExactTuple(std::move(x));
}

}  // namespace cyclic::fixtures
