#include "cyclic/io.hpp"

#include <cmath>
#include <iomanip>
#include <locale>
#include <sstream>
#include <stdexcept>

#include "cyclic/triple.hpp"

namespace cyclic::io {

Json witness_to_json(const WitnessSystem& w) {
    Json dists = Json::array();
    for (const DiscreteDist& d : w.dists()) {
        Json atoms = Json::array();
        for (const Atom& a : d.atoms()) {
            atoms.push_back(Json{{"point", format_rational(a.point)}, {"weight", format_rational(a.weight)}});
        }
        dists.push_back(std::move(atoms));
    }
    return Json{{"n", w.size()}, {"dists", std::move(dists)}};
}

WitnessSystem witness_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dists") || !j.at("dists").is_array()) {
        throw std::invalid_argument("witness JSON needs a \"dists\" array");
    }
    std::vector<DiscreteDist> dists;
    for (const Json& dj : j.at("dists")) {
        if (!dj.is_array()) throw std::invalid_argument("each distribution must be an array of atoms");
        std::vector<Atom> atoms;
        for (const Json& aj : dj) {
            atoms.push_back({parse_rational(aj.at("point").get<std::string>()),
                             parse_rational(aj.at("weight").get<std::string>())});
        }
        dists.emplace_back(std::move(atoms));
    }
    if (j.contains("n") && j.at("n").get<std::size_t>() != dists.size()) {
        throw std::invalid_argument("witness \"n\" does not match the number of distributions");
    }
    return WitnessSystem(std::move(dists));
}

Json verdict_to_json(const Verdict& v, const std::string& tuple_text) {
    Json j{{"tuple", tuple_text}, {"status", std::string(to_string(v.status))}, {"reason", std::string(to_string(v.reason))}};
    if (v.index) j["index"] = *v.index;
    if (v.witness) j["witness"] = witness_to_json(*v.witness);
    return j;
}

Json estimate_to_json(const MCEstimate& e) {
    return Json{{"target", e.target},   {"estimate", e.estimate}, {"stderr", e.std_error},
                {"samples", e.samples}, {"seed", e.seed},         {"chunks", e.chunks}};
}

Json result_to_json(const mc::Result& r) {
    if (const auto* e = std::get_if<MCEstimate>(&r)) return estimate_to_json(*e);
    const auto& b = std::get<mc::Bracket>(r);
    return Json{{"lower", estimate_to_json(b.lower)}, {"upper", estimate_to_json(b.upper)}, {"unknown", b.unknown}};
}

std::string format_double(double v) {
    if (!std::isfinite(v)) return "null";
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(17) << v;
    return os.str();
}

namespace {

void dump_into(std::string& out, const Json& j, int indent, int depth) {
    const auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                out += Json(it.key()).dump();
                out += indent < 0 ? ":" : ": ";
                dump_into(out, it.value(), indent, depth + 1);
            }
            newline(depth);
            out += '}';
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += '[';
            bool first = true;
            for (const Json& e : j) {
                if (!first) out += ',';
                first = false;
                newline(depth + 1);
                dump_into(out, e, indent, depth + 1);
            }
            newline(depth);
            out += ']';
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<double>());
            return;
        default:
            out += j.dump();
            return;
    }
}

}  // namespace

std::string dump(const Json& j, int indent) {
    std::string out;
    dump_into(out, j, indent, 0);
    return out;
}

void write_density_csv(std::ostream& out, int points, std::optional<DensityKind> which) {
    if (points < 1) throw std::invalid_argument("grid needs at least one step");
    std::vector<DensityKind> kinds{DensityKind::F1, DensityKind::F2, DensityKind::F3};
    if (which) kinds = {*which};
    out << 'x';
    for (DensityKind k : kinds) out << ',' << to_string(k);
    out << '\n';
    for (int i = 0; i <= points; ++i) {
        const double x = static_cast<double>(i) / points;
        out << format_double(x);
        for (DensityKind k : kinds) out << ',' << format_double(triple::density(k, x));
        out << '\n';
    }
}

}  // namespace cyclic::io
