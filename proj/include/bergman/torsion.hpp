#pragma once

// Torsional rigidity of Omega = phi(D). The Dirichlet problem
// Laplacian(nu) = -2 on Omega, nu = 0 on the boundary, pulls back to
// Laplacian(u) = -2 |phi'|^2 on D, u = 0 on |z| = 1, and
// rho = 2 * integral over D of u |phi'|^2 dA.

#include <optional>
#include <string>

#include "bergman/diskalg.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

enum class TorsionMethod { Exact, FiniteDifference };
std::string to_string(TorsionMethod m);

struct TorsionResult {
    double rho = 0.0;
    /// rho / pi as an exact rational; set by the exact method only.
    std::optional<mpq_class> rho_over_pi;
    TorsionMethod method = TorsionMethod::Exact;
    double max_boundary_value = 0.0;
    double max_laplacian_defect = 0.0;
};

/// Pulled-back torsion function u on the disk, exact.
ExactBiPoly torsion_function(const TaylorSymbol& s);

/// Requires univalence_certificate(s) unless allow_uncertified is set; for an
/// uncertified symbol the value is a multiplicity-weighted analogue of rho.
TorsionResult torsional_rigidity_exact(const TaylorSymbol& s, bool allow_uncertified = false);

/// Second-order polar finite differences on radial_nodes x angular_nodes,
/// origin closed with the neighbor-average stencil, solved by sparse LU.
/// Requires radial_nodes >= 32 and angular_nodes >= 64.
TorsionResult torsional_rigidity_fd(const TaylorSymbol& s, int radial_nodes, int angular_nodes,
                                    bool allow_uncertified = false);

struct StVenantCheck {
    double lhs = 0.0;  // rho
    double rhs = 0.0;  // area^2 / (2 pi)
    double gap = 0.0;
    /// gap / pi, exact.
    mpq_class gap_over_pi;
};

/// rho <= Area^2 / (2 pi). Requires a certified-univalent symbol.
StVenantCheck st_venant_check(const TaylorSymbol& s);

}  // namespace bergman
