#include "bergman/torsion.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "bergman/error.hpp"

namespace bergman {

std::string to_string(TorsionMethod m) { return m == TorsionMethod::Exact ? "exact" : "fd"; }

namespace {

void require_certified(const TaylorSymbol& s, bool allow_uncertified) {
    if (!allow_uncertified && !univalence_certificate(s)) {
        throw PreconditionError(
            "symbol is not certified univalent (sum k|c_k| over k >= 2 must be below |c_1|); "
            "pass the unsafe override to compute the multiplicity-weighted value");
    }
}

ExactBiPoly jacobian(const TaylorSymbol& s) { return modulus_squared(ExactBiPoly::analytic(derivative(s))); }

}  // namespace

ExactBiPoly torsion_function(const TaylorSymbol& s) {
    return poisson_solve(jacobian(s).scaled(QComplex(-2L)));
}

TorsionResult torsional_rigidity_exact(const TaylorSymbol& s, bool allow_uncertified) {
    require_certified(s, allow_uncertified);
    const ExactBiPoly jac = jacobian(s);
    const ExactBiPoly u = poisson_solve(jac.scaled(QComplex(-2L)));

    TorsionResult out;
    out.method = TorsionMethod::Exact;
    const QComplex integral = disk_integral_over_pi(multiply(u, jac));
    mpq_class rho_over_pi = 2 * integral.re;
    out.rho = std::numbers::pi * rho_over_pi.get_d();
    out.rho_over_pi = std::move(rho_over_pi);
    out.max_laplacian_defect = (laplacian(u) + jac.scaled(QComplex(2L))).max_magnitude();
    out.max_boundary_value = boundary_trace(u).max_magnitude();
    return out;
}

TorsionResult torsional_rigidity_fd(const TaylorSymbol& s, int radial_nodes, int angular_nodes,
                                    bool allow_uncertified) {
    if (radial_nodes < 32 || angular_nodes < 64) {
        throw PreconditionError("finite-difference grid must be at least 32 x 64, got " +
                                std::to_string(radial_nodes) + " x " + std::to_string(angular_nodes));
    }
    require_certified(s, allow_uncertified);

    const int Nr = radial_nodes;
    const int Nt = angular_nodes;
    const double h = 1.0 / Nr;
    const double dt = 2.0 * std::numbers::pi / Nt;
    const TaylorSymbol ds = derivative(s);

    // Unknown 0 is the origin; ring i in [1, Nr-1], angle j maps to 1 + (i-1) Nt + j.
    auto id = [&](int i, int j) { return 1 + (i - 1) * Nt + ((j % Nt) + Nt) % Nt; };
    const int n_unknowns = 1 + (Nr - 1) * Nt;
    auto jac = [&](int i, int j) { return std::norm(ds(std::polar(i * h, j * dt))); };

    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(static_cast<std::size_t>(n_unknowns) * 5 + static_cast<std::size_t>(Nt));
    Eigen::VectorXd rhs(n_unknowns);

    // Origin: 4 (mean of first ring - u_0) / h^2.
    triplets.emplace_back(0, 0, -4.0 / (h * h));
    for (int j = 0; j < Nt; ++j) triplets.emplace_back(0, id(1, j), 4.0 / (h * h * Nt));
    rhs(0) = -2.0 * jac(0, 0);

    for (int i = 1; i < Nr; ++i) {
        const double r = i * h;
        const double radial_in = 1.0 / (h * h) - 1.0 / (2.0 * r * h);
        const double radial_out = 1.0 / (h * h) + 1.0 / (2.0 * r * h);
        const double angular = 1.0 / (r * r * dt * dt);
        for (int j = 0; j < Nt; ++j) {
            const int row = id(i, j);
            triplets.emplace_back(row, row, -2.0 / (h * h) - 2.0 * angular);
            triplets.emplace_back(row, i == 1 ? 0 : id(i - 1, j), radial_in);
            if (i + 1 < Nr) triplets.emplace_back(row, id(i + 1, j), radial_out);
            triplets.emplace_back(row, id(i, j + 1), angular);
            triplets.emplace_back(row, id(i, j - 1), angular);
            rhs(row) = -2.0 * jac(i, j);
        }
    }

    Eigen::SparseMatrix<double> A(n_unknowns, n_unknowns);
    A.setFromTriplets(triplets.begin(), triplets.end());
    A.makeCompressed();
    Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
    solver.compute(A);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("finite-difference factorization failed: " + solver.lastErrorMessage());
    }
    const Eigen::VectorXd u = solver.solve(rhs);
    if (solver.info() != Eigen::Success) throw ConvergenceError("finite-difference solve failed");

    // rho = int_0^1 int_0^{2pi} 2 u |phi'|^2 r dtheta dr; trapezoid in both.
    // The r = 0 and r = 1 endpoints contribute nothing.
    double rho = 0.0;
    for (int i = 1; i < Nr; ++i) {
        double ring = 0.0;
        for (int j = 0; j < Nt; ++j) ring += 2.0 * u(id(i, j)) * jac(i, j);
        rho += ring * dt * (i * h) * h;
    }

    TorsionResult out;
    out.method = TorsionMethod::FiniteDifference;
    out.rho = rho;
    out.max_boundary_value = 0.0;
    out.max_laplacian_defect = (A * u - rhs).lpNorm<Eigen::Infinity>();
    return out;
}

StVenantCheck st_venant_check(const TaylorSymbol& s) {
    const TorsionResult t = torsional_rigidity_exact(s);
    const mpq_class area_over_pi = dirichlet_sum(s);
    // rhs / pi = (pi A)^2 / (2 pi) / pi = A^2 / 2
    const mpq_class rhs_over_pi = area_over_pi * area_over_pi / 2;

    StVenantCheck out;
    out.gap_over_pi = rhs_over_pi - *t.rho_over_pi;
    out.lhs = t.rho;
    out.rhs = std::numbers::pi * rhs_over_pi.get_d();
    out.gap = std::numbers::pi * out.gap_over_pi.get_d();
    return out;
}

}  // namespace bergman
