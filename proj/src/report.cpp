#include "bergman/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "bergman/error.hpp"
#include "bergman/operator.hpp"
#include "bergman/torsion.hpp"

namespace bergman {

SandwichReport sandwich(const TaylorSymbol& s, double tol, const SandwichOptions& opts) {
    if (!(tol > 0.0)) throw PreconditionError("sandwich tolerance must be positive");
    SandwichReport r;
    r.symbol = s;
    r.tolerance = tol;
    r.univalenceCertified = univalence_certificate(s);
    r.area = image_area(s);
    r.perimeter = perimeter(s, std::max(opts.perimeter_samples, 4 * (s.degree() + 1)));
    const TorsionResult torsion = torsional_rigidity_exact(s, /*allow_uncertified=*/true);
    r.rho = torsion.rho;

    const CommutatorNorm comm = commutator_norm(s, tol);
    r.commNorm = comm.value;
    r.truncationUsed = comm.N_used;

    r.lowerBound = r.area > 0.0 ? r.rho / r.area : 0.0;
    r.upperBound = r.area / (2.0 * std::numbers::pi);
    r.putnamBound = r.area / std::numbers::pi;
    r.isoDefect = r.perimeter * r.perimeter - 4.0 * std::numbers::pi * r.area;
    r.upperGap = r.upperBound - r.commNorm;
    r.lowerGap = r.commNorm - r.lowerBound;

    if (r.commNorm > r.putnamBound + tol) r.alarms.push_back("commNorm exceeds putnamBound");
    if (r.univalenceCertified) {
        if (r.lowerBound > r.commNorm + tol) r.alarms.push_back("lowerBound exceeds commNorm");
        if (r.commNorm > r.upperBound + tol) r.alarms.push_back("commNorm exceeds upperBound");
        if (r.isoDefect < -1e-8) r.alarms.push_back("isoperimetric defect is negative");
        if (sgn(st_venant_check(s).gap_over_pi) < 0) r.alarms.push_back("St. Venant gap is negative");
    }
    return r;
}

nlohmann::ordered_json report_to_json(const SandwichReport& r) {
    nlohmann::ordered_json j;
    j["symbol"] = symbol_to_json(r.symbol);
    j["area"] = r.area;
    j["perimeter"] = r.perimeter;
    j["rho"] = r.rho;
    j["commNorm"] = r.commNorm;
    j["lowerBound"] = r.lowerBound;
    j["upperBound"] = r.upperBound;
    j["putnamBound"] = r.putnamBound;
    j["isoDefect"] = r.isoDefect;
    j["upperGap"] = r.upperGap;
    j["lowerGap"] = r.lowerGap;
    j["univalenceCertified"] = r.univalenceCertified;
    j["truncationUsed"] = r.truncationUsed;
    j["tolerance"] = r.tolerance;
    j["alarms"] = r.alarms;
    return j;
}

std::string report_csv_header() {
    return "symbol,area,perimeter,rho,commNorm,lowerBound,upperBound,putnamBound,isoDefect,upperGap,lowerGap,"
           "univalenceCertified,truncationUsed,tolerance,alarms";
}

std::string report_csv_row(const SandwichReport& r) {
    std::string symbol = format_json(symbol_to_json(r.symbol), -1);
    std::string quoted = "\"";
    for (char ch : symbol) {
        if (ch == '"') quoted += '"';
        quoted += ch;
    }
    quoted += '"';
    std::string alarms;
    for (std::size_t i = 0; i < r.alarms.size(); ++i) alarms += (i ? ";" : "") + r.alarms[i];
    std::ostringstream os;
    os << quoted;
    for (double x : {r.area, r.perimeter, r.rho, r.commNorm, r.lowerBound, r.upperBound, r.putnamBound, r.isoDefect,
                     r.upperGap, r.lowerGap}) {
        os << ',' << format_double(x);
    }
    os << ',' << (r.univalenceCertified ? "true" : "false") << ',' << r.truncationUsed << ','
       << format_double(r.tolerance) << ",\"" << alarms << '"';
    return os.str();
}

std::string format_double(double x) {
    if (!std::isfinite(x)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    std::string out(buf);
    // Keep the value recognizably floating point in JSON.
    if (out.find_first_of(".eE") == std::string::npos) out += ".0";
    return out;
}

namespace {

void write(std::ostringstream& os, const nlohmann::ordered_json& j, int indent, int depth) {
    const bool pretty = indent >= 0;
    auto newline = [&](int d) {
        if (pretty) os << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
        case nlohmann::ordered_json::value_t::object: {
            if (j.empty()) {
                os << "{}";
                return;
            }
            os << '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) os << ',';
                first = false;
                newline(depth + 1);
                os << nlohmann::ordered_json(it.key()).dump() << (pretty ? ": " : ":");
                write(os, it.value(), indent, depth + 1);
            }
            newline(depth);
            os << '}';
            return;
        }
        case nlohmann::ordered_json::value_t::array: {
            if (j.empty()) {
                os << "[]";
                return;
            }
            // Short numeric tuples such as [re, im] stay on one line.
            const bool flat = std::all_of(j.begin(), j.end(), [](const auto& v) { return v.is_primitive(); }) &&
                              j.size() <= 4;
            os << '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << (flat && pretty ? ", " : ",");
                if (!flat) newline(depth + 1);
                write(os, j[i], indent, depth + 1);
            }
            if (!flat) newline(depth);
            os << ']';
            return;
        }
        case nlohmann::ordered_json::value_t::number_float:
            os << format_double(j.get<double>());
            return;
        default:
            os << j.dump();
            return;
    }
}

}  // namespace

std::string format_json(const nlohmann::ordered_json& j, int indent) {
    std::ostringstream os;
    write(os, j, indent, 0);
    return os.str();
}

}  // namespace bergman
