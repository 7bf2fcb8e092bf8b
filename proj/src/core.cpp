#include "cyclic/core.hpp"

#include <cctype>
#include <cmath>
#include <set>

namespace cyclic {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

// cpp_int reads a leading 0 as an octal prefix, so strip leading zeros first.
BigInt decimal_digits(std::string_view s) {
    const auto first = s.find_first_not_of('0');
    return first == std::string_view::npos ? BigInt(0) : BigInt(std::string(s.substr(first)));
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw InvalidTuple("malformed integer '" + std::string(s) + "'");
    const BigInt v = decimal_digits(s);
    return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned k) {
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) r *= 10;
    return r;
}

Rational parse_decimal(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw InvalidTuple("malformed exponent in '" + std::string(s) + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw InvalidTuple("empty number");
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw InvalidTuple("malformed number '" + std::string(s) + "'");
    }
    const BigInt mantissa = decimal_digits(std::string(int_part) + std::string(frac_part));
    exponent -= static_cast<long>(frac_part.size());
    Rational r = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                               : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
    return negative ? Rational(-r) : r;
}

}  // namespace

ProbTuple to_double(const ExactTuple& t) {
    std::vector<double> out;
    out.reserve(t.size());
    for (const Rational& v : t.values()) out.push_back(to_double(v));
    return ProbTuple(std::move(out));
}

Rational parse_rational(std::string_view text) {
    text = trim(text);
    if (text.empty()) throw InvalidTuple("empty number");
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(trim(text.substr(0, slash)));
        BigInt den = parse_integer(trim(text.substr(slash + 1)));
        if (den == 0) throw InvalidTuple("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return parse_decimal(text);
}

std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

ExactTuple parse_exact_tuple(std::string_view text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        values.push_back(parse_rational(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ExactTuple(std::move(values));
}

ProbTuple parse_tuple(std::string_view text) { return to_double(parse_exact_tuple(text)); }

std::string format_tuple(const ExactTuple& t) {
    std::string out;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) out += ',';
        out += format_rational(t.values()[i]);
    }
    return out;
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::Cyclic: return "Cyclic";
        case Status::NotCyclic: return "NotCyclic";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

std::string_view to_string(Reason r) {
    switch (r) {
        case Reason::TrybulaBothHold: return "TrybulaBothHold";
        case Reason::TrybulaIneq1Fails: return "TrybulaIneq1Fails";
        case Reason::TrybulaIneq2Fails: return "TrybulaIneq2Fails";
        case Reason::UpDownConditionMet: return "UpDownConditionMet";
        case Reason::MixedPairwiseSums: return "MixedPairwiseSums";
        case Reason::MinExceedsPiN: return "MinExceedsPiN";
        case Reason::MaxBelowOneMinusPiN: return "MaxBelowOneMinusPiN";
        case Reason::Undecided: return "Undecided";
    }
    return "?";
}

DiscreteDist::DiscreteDist(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw InvalidDistribution("distribution needs at least one atom");
    Rational total = 0;
    std::set<Rational> seen;
    for (const Atom& a : atoms_) {
        if (a.weight < 0) throw InvalidDistribution("negative weight " + format_rational(a.weight));
        if (!seen.insert(a.point).second) {
            throw InvalidDistribution("repeated support point " + format_rational(a.point));
        }
        total += a.weight;
    }
    if (total != 1) throw InvalidDistribution("weights sum to " + format_rational(total) + ", not 1");
}

DiscreteDist DiscreteDist::uniform_faces(std::span<const Rational> faces) {
    if (faces.empty()) throw InvalidDistribution("die needs at least one face");
    std::vector<Atom> atoms;
    const Rational w(1, static_cast<long long>(faces.size()));
    for (const Rational& f : faces) {
        auto it = std::find_if(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.point == f; });
        if (it == atoms.end()) {
            atoms.push_back({f, w});
        } else {
            it->weight += w;
        }
    }
    return DiscreteDist(std::move(atoms));
}

DiscreteDist DiscreteDist::uniform_faces(std::initializer_list<int> faces) {
    std::vector<Rational> r(faces.begin(), faces.end());
    return uniform_faces(r);
}

Rational DiscreteDist::prob_greater(const DiscreteDist& other) const {
    Rational p = 0;
    for (const Atom& a : atoms_) {
        for (const Atom& b : other.atoms_) {
            if (a.point > b.point) p += a.weight * b.weight;
        }
    }
    return p;
}

bool DiscreteDist::shares_support_with(const DiscreteDist& other) const {
    for (const Atom& a : atoms_) {
        for (const Atom& b : other.atoms_) {
            if (a.point == b.point) return true;
        }
    }
    return false;
}

WitnessSystem::WitnessSystem(std::vector<DiscreteDist> dists) : dists_(std::move(dists)) {
    if (dists_.size() < 3) throw InvalidDistribution("witness system needs at least 3 distributions");
    for (std::size_t i = 0; i < dists_.size(); ++i) {
        for (std::size_t j = i + 1; j < dists_.size(); ++j) {
            if (dists_[i].shares_support_with(dists_[j])) {
                throw InvalidDistribution("supports of U" + std::to_string(i) + " and U" + std::to_string(j) +
                                          " overlap");
            }
        }
    }
}

std::vector<Rational> WitnessSystem::cycle_probabilities() const {
    std::vector<Rational> out;
    out.reserve(dists_.size());
    for (std::size_t i = 0; i < dists_.size(); ++i) {
        out.push_back(dists_[(i + 1) % dists_.size()].prob_greater(dists_[i]));
    }
    return out;
}

double bernoulli_stderr(double p, std::uint64_t samples) {
    if (samples == 0) return 0.0;
    return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

std::string_view to_string(DensityKind k) {
    switch (k) {
        case DensityKind::F1: return "f1";
        case DensityKind::F2: return "f2";
        case DensityKind::F3: return "f3";
    }
    return "?";
}

DensityKind parse_density_kind(std::string_view s) {
    if (s == "f1") return DensityKind::F1;
    if (s == "f2") return DensityKind::F2;
    if (s == "f3") return DensityKind::F3;
    throw std::invalid_argument("unknown density '" + std::string(s) + "' (expected f1, f2 or f3)");
}

}  // namespace cyclic
