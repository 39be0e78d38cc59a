#pragma once

#include <iosfwd>

namespace bergman {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitAlarm = 3;

/// Entry point for the `bergman` command line tool. Subcommands:
/// commutator, torsion, sandwich, extremal, or-check. Each writes one JSON
/// document to `out`; diagnostics go to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bergman
