#include "cyclic/mc.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cyclic/ntuple.hpp"
#include "cyclic/random.hpp"
#include "cyclic/triple.hpp"

namespace cyclic::mc {

namespace {

struct Counts {
    std::uint64_t hits = 0;
    std::uint64_t not_cyclic = 0;  // bracket only
};

/// Runs `body(begin, end) -> Counts` over [0, samples) split into `chunks`
/// contiguous ranges and sums the per-chunk counters in chunk order.
template <class Body>
Counts run_chunked(std::uint64_t samples, unsigned chunks, const Body& body) {
    std::vector<Counts> partial(chunks);
    const auto range = [&](unsigned c) {
        const std::uint64_t begin = samples * c / chunks;
        const std::uint64_t end = samples * (c + 1) / chunks;
        partial[c] = body(begin, end);
    };
    const unsigned workers = worker_count(chunks);
    if (workers <= 1) {
        for (unsigned c = 0; c < chunks; ++c) range(c);
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (unsigned c = next++; c < chunks; c = next++) range(c);
            });
        }
    }
    Counts total;
    for (const Counts& p : partial) {
        total.hits += p.hits;
        total.not_cyclic += p.not_cyclic;
    }
    return total;
}

bool hit_triple(Target target, double x, double y, double z) {
    const ProbTuple t{x, y, z};
    switch (target) {
        case Target::P3: return triple::is_cyclic_triple(t).status == Status::Cyclic;
        case Target::P3Star: return triple::is_nontransitive_triple(t);
        case Target::VolC3I: return triple::in_region(t, triple::Region::C3_I);
        case Target::VolC3II: return triple::in_region(t, triple::Region::C3_II);
        case Target::VolC3Ordered: return triple::in_region(t, triple::Region::C3_ordered);
        default: break;
    }
    return false;
}

MCEstimate make_estimate(const EstimatorSpec& spec, std::string name, std::uint64_t hits) {
    MCEstimate e;
    e.target = std::move(name);
    e.samples = spec.samples;
    e.seed = spec.seed;
    e.chunks = spec.chunks;
    e.hits = hits;
    e.estimate = static_cast<double>(hits) / static_cast<double>(spec.samples);
    e.std_error = bernoulli_stderr(e.estimate, spec.samples);
    return e;
}

std::string target_name(const EstimatorSpec& spec) {
    std::string name(to_string(spec.target));
    if (spec.target == Target::VolDnStar || spec.target == Target::PnBracket) {
        name += "(" + std::to_string(spec.n) + ")";
    }
    return name;
}

}  // namespace

std::string_view to_string(Target t) {
    switch (t) {
        case Target::P3: return "p3";
        case Target::P3Star: return "p3_star";
        case Target::VolC3I: return "vol_C3_I";
        case Target::VolC3II: return "vol_C3_II";
        case Target::VolC3Ordered: return "vol_C3_ordered";
        case Target::VolDnStar: return "vol_Dn_star";
        case Target::PnBracket: return "pn_bracket";
    }
    return "?";
}

Target parse_target(std::string_view name) {
    for (Target t : {Target::P3, Target::P3Star, Target::VolC3I, Target::VolC3II, Target::VolC3Ordered,
                     Target::VolDnStar, Target::PnBracket}) {
        if (to_string(t) == name) return t;
    }
    throw std::invalid_argument("unknown target '" + std::string(name) + "'");
}

unsigned worker_count(unsigned chunks) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    return std::min(chunks, hw);
}

Result estimate(const EstimatorSpec& spec) {
    if (spec.samples == 0) throw std::invalid_argument("samples must be at least 1");
    if (spec.chunks == 0) throw std::invalid_argument("chunks must be at least 1");

    switch (spec.target) {
        case Target::P3:
        case Target::P3Star:
        case Target::VolC3I:
        case Target::VolC3II:
        case Target::VolC3Ordered: {
            const Target target = spec.target;
            const auto counts = run_chunked(spec.samples, spec.chunks, [&](std::uint64_t b, std::uint64_t e) {
                Counts c;
                for (std::uint64_t k = b; k < e; ++k) {
                    SampleStream rng(spec.seed, k);
                    const double x = rng.uniform();
                    const double y = rng.uniform();
                    const double z = rng.uniform();
                    if (hit_triple(target, x, y, z)) ++c.hits;
                }
                return c;
            });
            return make_estimate(spec, target_name(spec), counts.hits);
        }
        case Target::VolDnStar: {
            if (spec.n < 3) throw std::invalid_argument("vol_Dn_star requires n >= 3");
            const auto n = static_cast<std::size_t>(spec.n);
            const auto counts = run_chunked(spec.samples, spec.chunks, [&](std::uint64_t b, std::uint64_t e) {
                Counts c;
                std::vector<double> x(n);
                for (std::uint64_t k = b; k < e; ++k) {
                    SampleStream rng(spec.seed, k);
                    for (double& v : x) v = rng.uniform();
                    if (ntuple::in_Dn_star_chain(x)) ++c.hits;
                }
                return c;
            });
            return make_estimate(spec, target_name(spec), counts.hits);
        }
        case Target::PnBracket: {
            if (spec.n < 3) throw std::invalid_argument("pn_bracket requires n >= 3");
            const auto n = static_cast<std::size_t>(spec.n);
            const auto counts = run_chunked(spec.samples, spec.chunks, [&](std::uint64_t b, std::uint64_t e) {
                Counts c;
                std::vector<double> x(n);
                for (std::uint64_t k = b; k < e; ++k) {
                    SampleStream rng(spec.seed, k);
                    for (double& v : x) v = rng.uniform();
                    const Status s = ntuple::decide_ntuple(ProbTuple(x)).status;
                    if (s == Status::Cyclic) ++c.hits;
                    if (s == Status::NotCyclic) ++c.not_cyclic;
                }
                return c;
            });
            Bracket br;
            const std::string name = target_name(spec);
            br.lower = make_estimate(spec, name + ".lower", counts.hits);
            br.upper = make_estimate(spec, name + ".upper", spec.samples - counts.not_cyclic);
            br.unknown = spec.samples - counts.hits - counts.not_cyclic;
            return br;
        }
    }
    throw std::invalid_argument("unsupported target");
}

MCEstimate estimate_single(const EstimatorSpec& spec) {
    auto r = estimate(spec);
    if (auto* e = std::get_if<MCEstimate>(&r)) return *e;
    throw std::invalid_argument("target " + std::string(to_string(spec.target)) + " yields a bracket");
}

DensityGrid histogram(DensityKind which, std::uint64_t samples, int bins, std::uint64_t seed) {
    if (bins < 10) throw std::invalid_argument("histogram needs at least 10 bins");
    const auto sample = triple::sample_ordered_cyclic(samples, seed);
    const std::size_t coord = which == DensityKind::F1 ? 0 : which == DensityKind::F2 ? 1 : 2;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(bins), 0);
    for (const auto& t : sample.triples) {
        auto b = static_cast<std::size_t>(t[coord] * bins);
        counts[std::min(b, counts.size() - 1)]++;
    }
    DensityGrid grid;
    grid.which = which;
    const double width = 1.0 / bins;
    for (int b = 0; b < bins; ++b) {
        grid.points.push_back({(b + 0.5) * width, static_cast<double>(counts[static_cast<std::size_t>(b)]) /
                                                      (static_cast<double>(samples) * width)});
    }
    return grid;
}

}  // namespace cyclic::mc
