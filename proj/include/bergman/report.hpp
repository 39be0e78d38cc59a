#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergman/symbol.hpp"

namespace bergman {

/// Two-sided bound rho/Area <= ||[T*_z, T_z]|| <= Area/(2 pi) on phi(D),
/// with the quantities it is built from.
struct SandwichReport {
    TaylorSymbol symbol;
    double area = 0.0;
    double perimeter = 0.0;
    double rho = 0.0;
    double commNorm = 0.0;
    double lowerBound = 0.0;   // rho / area
    double upperBound = 0.0;   // area / (2 pi)
    double putnamBound = 0.0;  // area / pi
    double isoDefect = 0.0;    // perimeter^2 - 4 pi area
    double upperGap = 0.0;     // upperBound - commNorm
    double lowerGap = 0.0;     // commNorm - lowerBound
    bool univalenceCertified = false;
    int truncationUsed = 0;
    double tolerance = 0.0;
    /// Guaranteed inequalities that failed beyond tolerance. Empty on a correct build.
    std::vector<std::string> alarms;
};

struct SandwichOptions {
    int perimeter_samples = 4096;
};

/// Without a univalence certificate the geometric fields are
/// multiplicity-weighted and only the Putnam bound is asserted.
SandwichReport sandwich(const TaylorSymbol& s, double tol, const SandwichOptions& opts = {});

nlohmann::ordered_json report_to_json(const SandwichReport& r);
std::string report_csv_header();
std::string report_csv_row(const SandwichReport& r);

/// Serializes with floating-point values at 17 significant digits and keys in
/// insertion order, so equal inputs give byte-identical text.
std::string format_json(const nlohmann::ordered_json& j, int indent = 2);
std::string format_double(double x);

}  // namespace bergman
