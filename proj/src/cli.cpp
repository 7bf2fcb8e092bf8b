#include "cyclic/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "cyclic/fixtures.hpp"
#include "cyclic/io.hpp"
#include "cyclic/mc.hpp"
#include "cyclic/ntuple.hpp"
#include "cyclic/triple.hpp"

namespace cyclic::cli {

using io::Json;

std::uint64_t parse_count(std::string_view text) {
    const std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty count");
    if (s.find_first_not_of("0123456789") == std::string::npos) return std::stoull(s);
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed count '" + s + "'");
    }
    if (used != s.size() || !(v >= 1) || v > 1e18 || std::floor(v) != v) {
        throw std::invalid_argument("count must be a positive integer, got '" + s + "'");
    }
    return static_cast<std::uint64_t>(v);
}

namespace {

struct Options {
    std::string tuple;
    std::string verify_path;
    long long index = -1;
    std::string which = "f1";
    bool which_given = false;
    int grid = 1000;
    int n = 0;
    std::string target = "p3";
    std::string samples = "1e7";
    std::uint64_t seed = 42;
    unsigned chunks = 1;
    int bins = 50;
    std::string hist_samples = "1e6";
    std::string report_samples = "1e7";
};

Json read_json(const std::string& path, std::istream& in) {
    if (path == "-") return Json::parse(in);
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    return Json::parse(f);
}

int cmd_check(const Options& o, std::istream& in, std::ostream& out) {
    const ExactTuple t = parse_exact_tuple(o.tuple);
    if (!o.verify_path.empty()) {
        const WitnessSystem w = io::witness_from_json(read_json(o.verify_path, in));
        const bool ok = ntuple::verify_witness(w, t);
        Json j{{"tuple", format_tuple(t)}, {"verified", ok}};
        out << io::dump(j) << '\n';
        return ok ? kOk : kNotCyclic;
    }
    const Verdict v = ntuple::decide_ntuple(t);
    Json j = io::verdict_to_json(v, format_tuple(t));
    if (t.size() == 3) j["nontransitive"] = triple::is_nontransitive_triple(t);
    out << io::dump(j) << '\n';
    switch (v.status) {
        case Status::Cyclic: return kOk;
        case Status::NotCyclic: return kNotCyclic;
        case Status::Unknown: return kUnknown;
    }
    return kUnknown;
}

int cmd_witness(const Options& o, std::ostream& out, std::ostream& err) {
    const ExactTuple t = parse_exact_tuple(o.tuple);
    if (t.size() < 4) throw InvalidTuple("witness construction needs n >= 4");
    std::size_t index = 0;
    if (o.index >= 0) {
        index = static_cast<std::size_t>(o.index);
        if (index >= t.size()) throw InvalidTuple("--index out of range");
    } else if (auto found = ntuple::find_up_down_index(t)) {
        index = *found;
    } else {
        err << "error: no index satisfies s_i >= 1 and s_{i+2} <= 1\n";
        return kNotCyclic;
    }
    try {
        out << io::dump(io::witness_to_json(ntuple::build_witness(t, index))) << '\n';
    } catch (const ntuple::HypothesisNotMet& e) {
        err << "error: " << e.what() << '\n';
        return kNotCyclic;
    }
    return kOk;
}

Json exact_json() {
    const auto v = triple::exact_volumes<long double>();
    return Json{{"p3", static_cast<double>(v.p3)},
                {"p3_star", static_cast<double>(v.p3_star)},
                {"vol_I", static_cast<double>(v.vol_I)},
                {"vol_II", static_cast<double>(v.vol_II)},
                {"omega", triple::omega}};
}

Json stats_json(DensityKind k) {
    const auto s = triple::density_stats(k);
    return Json{{"which", std::string(to_string(k))}, {"mean", s.mean}, {"median", s.median}, {"mode", s.mode}};
}

Json bounds_json(int n) {
    const auto b = ntuple::pn_bounds(n);
    const auto vol = ntuple::vol_Dn_star(n);
    return Json{{"n", n},
                {"lower", b.lower},
                {"sharper_lower", b.sharper_lower},
                {"upper", b.upper},
                {"pi_n", ntuple::pi_n(n)},
                {"alternating_count", ntuple::alternating_count(n - 1).str()},
                {"vol_Dn_star", Json{{"exact", format_rational(vol.exact)}, {"value", vol.value}}}};
}

Json report_json(std::uint64_t big, std::uint64_t seed) {
    Json r;
    const std::uint64_t small = std::max<std::uint64_t>(1, big / 10);

    const auto ev = triple::exact_volumes<long double>();
    Json exact = exact_json();
    exact["identity_p3_star_rel"] = static_cast<double>(std::abs(ev.p3_star - 3 * ev.vol_I) / ev.p3_star);
    exact["identity_p3_rel"] = static_cast<double>(std::abs(ev.p3 - 6 * ev.vol_I - 6 * ev.vol_II) / ev.p3);
    r["exact_volumes"] = exact;

    Json mc_json = Json::object();
    for (auto [target, truth] : {std::pair{mc::Target::P3, ev.p3}, std::pair{mc::Target::P3Star, ev.p3_star}}) {
        const auto e = mc::estimate_single({target, 3, big, seed, 1});
        Json j = io::estimate_to_json(e);
        j["exact"] = static_cast<double>(truth);
        j["z"] = (e.estimate - static_cast<double>(truth)) / e.std_error;
        mc_json[std::string(mc::to_string(target))] = j;
    }
    r["monte_carlo"] = mc_json;

    Json dens;
    double f2_asym = 0;
    double f3_refl = 0;
    for (int i = 0; i <= 1000; ++i) {
        const double x = i / 1000.0;
        f2_asym = std::max(f2_asym, std::abs(triple::density(DensityKind::F2, x) -
                                             triple::density(DensityKind::F2, 1.0 - x)));
        f3_refl = std::max(f3_refl, std::abs(triple::density(DensityKind::F3, x) -
                                             triple::density(DensityKind::F1, 1.0 - x)));
    }
    for (DensityKind k : {DensityKind::F1, DensityKind::F2, DensityKind::F3}) {
        dens["integral_" + std::string(to_string(k))] = triple::density_integral(k, 0.0, 1.0);
    }
    dens["f2_max_asymmetry"] = f2_asym;
    dens["f3_max_reflection_error"] = f3_refl;
    r["densities"] = dens;

    const auto base = triple::unrestricted_min_stats();
    r["table1"] = Json{{"f1", stats_json(DensityKind::F1)},
                       {"unrestricted", Json{{"mean", base.mean}, {"median", base.median}, {"mode", base.mode}}}};

    Json hist;
    for (DensityKind k : {DensityKind::F1, DensityKind::F2}) {
        const auto g = mc::histogram(k, small, 50, seed);
        double sup = 0;
        for (const auto& p : g.points) sup = std::max(sup, std::abs(p.density - triple::density(k, p.x)));
        hist[std::string(to_string(k)) + "_sup_error"] = sup;
    }
    const auto samples = triple::sample_ordered_cyclic(small, seed);
    hist["f1_samples_above_omega"] = std::count_if(samples.triples.begin(), samples.triples.end(),
                                                   [](const auto& t) { return t[0] > triple::omega; });
    r["histogram"] = hist;

    Json dn = Json::array();
    for (int n = 3; n <= 6; ++n) {
        const auto vol = ntuple::vol_Dn_star(n);
        const auto e = mc::estimate_single({mc::Target::VolDnStar, n, big, seed, 1});
        dn.push_back(Json{{"n", n},
                          {"exact", format_rational(vol.exact)},
                          {"value", vol.value},
                          {"mc", e.estimate},
                          {"stderr", e.std_error},
                          {"z", (e.estimate - vol.value) / e.std_error}});
    }
    r["vol_Dn_star"] = dn;

    Json counts = Json::array();
    for (int n = 1; n <= 10; ++n) counts.push_back(ntuple::alternating_count(n).str());
    bool andre_ok = true;
    for (int n = 1; n <= 30; ++n) {
        const Rational ratio(ntuple::alternating_count(n), ntuple::factorial(n));
        andre_ok = andre_ok && to_double(ratio) <= 3.0 * std::pow(2.0 / std::numbers::pi, n + 1);
    }
    r["alternating"] = Json{{"A_1_to_10", counts}, {"andre_bound_holds_n_le_30", andre_ok}};

    Json brackets = Json::array();
    for (int n = 4; n <= 8; ++n) {
        const auto res = mc::estimate({mc::Target::PnBracket, n, small, seed, 1});
        const auto& b = std::get<mc::Bracket>(res);
        const auto bounds = ntuple::pn_bounds(n);
        brackets.push_back(Json{{"n", n},
                                {"lower", b.lower.estimate},
                                {"upper", b.upper.estimate},
                                {"lower_stderr", b.lower.std_error},
                                {"upper_stderr", b.upper.std_error},
                                {"unknown", b.unknown},
                                {"bound_lower", bounds.lower},
                                {"bound_upper", bounds.upper}});
    }
    r["pn_brackets"] = brackets;

    std::uint64_t verified = 0;
    for (std::uint64_t k = 0; k < 1000; ++k) {
        const int n = 4 + static_cast<int>(k % 7);
        const ExactTuple t = fixtures::random_up_down_tuple(seed, k, n);
        const Verdict v = ntuple::decide_ntuple(t);
        if (v.witness && ntuple::verify_witness(*v.witness, t)) ++verified;
    }
    r["witness_soundness"] = Json{{"tuples", 1000}, {"verified", verified}};

    r["fixtures"] = Json{
        {"efron", ntuple::verify_witness(fixtures::efron_dice(), parse_exact_tuple("2/3,2/3,2/3,2/3"))},
        {"moon_moser", ntuple::verify_witness(fixtures::moon_moser_dice(), parse_exact_tuple("5/9,5/9,5/9"))}};

    const auto d1 = mc::estimate_single({mc::Target::P3, 3, small, seed, 1});
    const auto d2 = mc::estimate_single({mc::Target::P3, 3, small, seed, 1});
    const auto d8 = mc::estimate_single({mc::Target::P3, 3, small, seed, 8});
    r["determinism"] = Json{{"repeat_identical", d1.estimate == d2.estimate},
                            {"chunks_1_vs_8_identical", d1.estimate == d8.estimate},
                            {"estimate", d1.estimate}};
    return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic and nontransitive probability tuples"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Decide whether a tuple is cyclic");
    check->add_option("--tuple", o.tuple, "Comma-separated probabilities, e.g. \"5/9,5/9,5/9\"")->required();
    check->add_option("--verify-witness", o.verify_path, "Witness JSON file to verify exactly ('-' for stdin)");

    auto* witness = app.add_subcommand("witness", "Build witness distributions for an up-down tuple");
    witness->add_option("--tuple", o.tuple)->required();
    witness->add_option("--index", o.index, "0-based index i with s_i >= 1 and s_{i+2} <= 1");

    app.add_subcommand("exact", "Closed-form volumes for triples");

    auto* density = app.add_subcommand("density", "Tabulate order-statistic densities as CSV");
    density->add_option("--which", o.which, "f1, f2 or f3 (default: all three)");
    density->add_option("--grid", o.grid, "Number of steps on [0,1]")->check(CLI::PositiveNumber);

    auto* stats = app.add_subcommand("stats", "Mean, median and mode of a density");
    stats->add_option("--which", o.which);

    auto* bounds = app.add_subcommand("bounds", "Bounds on the cyclic volume p_n");
    bounds->add_option("--n", o.n)->required();

    auto* est = app.add_subcommand("estimate", "Monte Carlo estimate of a volume");
    est->add_option("--target", o.target,
                    "p3, p3_star, vol_C3_I, vol_C3_II, vol_C3_ordered, vol_Dn_star, pn_bracket");
    est->add_option("--samples", o.samples, "Sample count, e.g. 1e7");
    est->add_option("--seed", o.seed);
    est->add_option("--chunks", o.chunks)->check(CLI::PositiveNumber);
    est->add_option("--n", o.n, "Dimension for vol_Dn_star / pn_bracket");

    auto* hist = app.add_subcommand("histogram", "Empirical order-statistic density as CSV");
    hist->add_option("--which", o.which);
    hist->add_option("--samples", o.hist_samples, "Accepted samples (default 1e6)");
    hist->add_option("--bins", o.bins);
    hist->add_option("--seed", o.seed);

    auto* report = app.add_subcommand("report", "Every headline number in one JSON document");
    report->add_option("--samples", o.report_samples, "Large Monte Carlo sample count (default 1e7)");
    report->add_option("--seed", o.seed);

    std::vector<std::string> argv_store{"cyclic"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : argv_store) argv.push_back(s.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    o.which_given = density->count("--which") > 0;

    try {
        if (*check) return cmd_check(o, in, out);
        if (*witness) return cmd_witness(o, out, err);
        if (app.got_subcommand("exact")) {
            out << io::dump(exact_json()) << '\n';
            return kOk;
        }
        if (*density) {
            std::optional<DensityKind> which;
            if (o.which_given) which = parse_density_kind(o.which);
            io::write_density_csv(out, o.grid, which);
            return kOk;
        }
        if (*stats) {
            out << io::dump(stats_json(parse_density_kind(o.which))) << '\n';
            return kOk;
        }
        if (*bounds) {
            out << io::dump(bounds_json(o.n)) << '\n';
            return kOk;
        }
        if (*est) {
            mc::EstimatorSpec spec;
            spec.target = mc::parse_target(o.target);
            spec.samples = parse_count(o.samples);
            spec.seed = o.seed;
            spec.chunks = o.chunks;
            spec.n = o.n != 0 ? o.n : (spec.target == mc::Target::PnBracket ? 4 : 3);
            out << io::dump(io::result_to_json(mc::estimate(spec))) << '\n';
            return kOk;
        }
        if (*hist) {
            const DensityKind k = parse_density_kind(o.which);
            const auto grid = mc::histogram(k, parse_count(o.hist_samples), o.bins, o.seed);
            out << "x," << to_string(k) << '\n';
            for (const auto& p : grid.points) out << io::format_double(p.x) << ',' << io::format_double(p.density) << '\n';
            return kOk;
        }
        if (*report) {
            out << io::dump(report_json(parse_count(o.report_samples), o.seed)) << '\n';
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace cyclic::cli
