#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "bergman/error.hpp"
#include "bergman/operator.hpp"
#include "oracles.hpp"

using namespace bergman;
using std::numbers::pi;

namespace {

TaylorSymbol make(std::initializer_list<cdouble> c) { return TaylorSymbol(c); }

cdouble psi(int n, cdouble z) { return std::sqrt((n + 1) / pi) * std::pow(z, n); }

// <g, psi_k> by quadrature.
template <class G>
cdouble coefficient(G&& g, int k) {
    return oracle::disk_quadrature([&](cdouble z) { return g(z) * std::conj(psi(k, z)); });
}

// <[T*, T] psi_m, psi_n> = <phi psi_m, phi psi_n> - <P(conj(phi) psi_m), P(conj(phi) psi_n)>,
// every inner product by quadrature.
cdouble commutator_entry_oracle(const TaylorSymbol& s, int n, int m) {
    const cdouble tt = oracle::disk_quadrature(
        [&](cdouble z) { return s(z) * psi(m, z) * std::conj(s(z) * psi(n, z)); });
    cdouble ttstar = 0.0;
    for (int k = 0; k <= std::min(n, m); ++k) {
        const cdouble gm = coefficient([&](cdouble z) { return std::conj(s(z)) * psi(m, z); }, k);
        const cdouble gn = coefficient([&](cdouble z) { return std::conj(s(z)) * psi(n, z); }, k);
        ttstar += gm * std::conj(gn);
    }
    return tt - ttstar;
}

OperatorMatrix diag(std::initializer_list<double> d) {
    OperatorMatrix M(static_cast<int>(d.size()), 0, 0, true);
    int i = 0;
    for (double x : d) M.set(i, i, x), ++i;
    return M;
}

std::vector<cdouble> random_vector(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> g;
    std::vector<cdouble> v(static_cast<std::size_t>(n));
    for (auto& x : v) x = cdouble(g(rng), g(rng));
    return v;
}

}  // namespace

TEST_CASE("toeplitz_matrix") {
    const OperatorMatrix T = toeplitz_matrix(make({0.0, 1.0}), 3);
    CHECK(T(1, 0) == cdouble(std::sqrt(0.5)));
    CHECK(T(2, 1) == cdouble(std::sqrt(2.0 / 3.0)));
    for (int n = 0; n < 3; ++n) {
        for (int m = 0; m < 3; ++m) {
            if (n - m != 1) CHECK(T(n, m) == cdouble(0.0));
        }
    }

    const OperatorMatrix I = toeplitz_matrix(make({1.0}), 5);
    for (int n = 0; n < 5; ++n) {
        for (int m = 0; m < 5; ++m) CHECK(I(n, m) == cdouble(n == m ? 1.0 : 0.0));
    }

    const TaylorSymbol z2 = TaylorSymbol::monomial(2);
    const OperatorMatrix T2 = toeplitz_matrix(z2, 4);
    CHECK(T2(2, 0).real() == doctest::Approx(std::sqrt(1.0 / 3.0)).epsilon(1e-15));
    CHECK(T2(3, 1).real() == doctest::Approx(std::sqrt(2.0 / 4.0)).epsilon(1e-15));
    for (int n = 0; n < 4; ++n) {
        for (int m = 0; m < 4; ++m) {
            const cdouble q = oracle::disk_quadrature([&](cdouble z) { return z * z * psi(m, z) * std::conj(psi(n, z)); });
            CHECK(std::abs(T2(n, m) - q) < 1e-13);
        }
    }
}

TEST_CASE("bergman_project") {
    CHECK(bergman_project(ExactBiPoly::monomial(2, 1, QComplex(1L))) == TaylorSymbol({QComplex(0L), QComplex(mpq_class(2, 3))}));
    CHECK(bergman_project(ExactBiPoly::monomial(3, 0, QComplex(1L))) == TaylorSymbol::monomial(3));
    CHECK(bergman_project(ExactBiPoly::monomial(1, 2, QComplex(1L))).is_zero());
    // oracle: every <zbar^2 z, psi_n> vanishes
    for (int n = 0; n < 5; ++n) {
        CHECK(std::abs(coefficient([](cdouble z) { return std::conj(z) * std::conj(z) * z; }, n)) < 1e-14);
    }
}

TEST_CASE("hankel_apply") {
    const TaylorSymbol z = make({0.0, 1.0});
    CHECK(hankel_apply(z, make({1.0})) == BiPoly::monomial(0, 1, 1.0));
    CHECK(hankel_apply(z, z) == BiPoly::monomial(1, 1, 1.0) - BiPoly::constant(0.5));

    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const TaylorSymbol s = oracle::random_symbol(rng, trial % 6);
        const TaylorSymbol f = oracle::random_symbol(rng, (trial + 2) % 6);
        CHECK(bergman_project(hankel_apply_as<QComplex>(s, f)).is_zero());
        for (const auto& c : bergman_project_coeffs(hankel_apply(s, f))) CHECK(std::abs(c) < 1e-14);
    }
}

TEST_CASE("commutator_matrix for monomials is diagonal with closed-form entries") {
    for (int k = 1; k <= 5; ++k) {
        const OperatorMatrix C = commutator_matrix(TaylorSymbol::monomial(k), 40);
        for (int n = 0; n < 40; ++n) {
            const double expected = n < k ? (n + 1.0) / (n + k + 1.0) : (n + 1.0) / (n + k + 1.0) - (n - k + 1.0) / (n + 1.0);
            CHECK(C(n, n).real() == doctest::Approx(expected).epsilon(1e-14));
            for (int m = 0; m < 40; ++m) {
                if (m != n) CHECK(C(n, m) == cdouble(0.0));
            }
        }
        CHECK(C(k - 1, k - 1).real() == 0.5);
    }
}

TEST_CASE("commutator_matrix against brute-force inner products") {
    const OperatorMatrix C = commutator_matrix(make({0.0, 1.0}), 3);
    const double d[] = {1.0 / 2, 1.0 / 6, 1.0 / 12};
    for (int n = 0; n < 3; ++n) {
        CHECK(std::abs(C(n, n) - d[n]) < 1e-15);
        CHECK(std::abs(commutator_entry_oracle(make({0.0, 1.0}), n, n) - d[n]) < 1e-13);
    }

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 3; ++trial) {
        const TaylorSymbol s = oracle::random_symbol(rng, 2 + trial);
        const OperatorMatrix M = commutator_matrix(s, 6);
        CHECK(M.hermitian());
        CHECK(M.hermitian_defect() < 1e-15);
        for (int n = 0; n < 6; ++n) {
            for (int m = 0; m < 6; ++m) CHECK(std::abs(M(n, m) - commutator_entry_oracle(s, n, m)) < 1e-12);
        }
    }
}

TEST_CASE("commutator_matrix of a constant vanishes") {
    const OperatorMatrix C = commutator_matrix(make({cdouble(2.0, -1.0)}), 6);
    for (int n = 0; n < 6; ++n) {
        for (int m = 0; m < 6; ++m) CHECK(C(n, m) == cdouble(0.0));
    }
}

TEST_CASE("dominant_eigenvalue") {
    CHECK(dominant_eigenvalue(diag({0.5, 1.0 / 6, 1.0 / 12}), 1e-14) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(dominant_eigenvalue(diag({0.0, 0.0, 0.0}), 1e-12) == 0.0);
    CHECK_THROWS_AS(dominant_eigenvalue(toeplitz_matrix(make({0.0, 1.0}), 3), 1e-12), PreconditionError);

    std::mt19937_64 rng(19);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXcd B(8, 8);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) B(i, j) = cdouble(g(rng), g(rng));
        }
        const Eigen::MatrixXcd A = B.adjoint() * B;
        OperatorMatrix M = OperatorMatrix::dense(8, true);
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) M.set(i, j, A(i, j));
        }
        const double reference = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(A).eigenvalues().maxCoeff();
        const double tol = 1e-9;
        CHECK(std::abs(dominant_eigenvalue(M, tol) - reference) <= tol);
    }
}

TEST_CASE("dominant_eigenvalue reports non-convergence") {
    OperatorMatrix M = diag({1.0, 0.999999});
    EigenOptions opts;
    opts.tol = 1e-15;
    opts.max_iterations = 5;
    CHECK_THROWS_AS(dominant_eigenpair(M, opts), ConvergenceError);
}

TEST_CASE("commutator_norm examples") {
    for (int k = 1; k <= 5; ++k) {
        const CommutatorNorm r = commutator_norm(TaylorSymbol::monomial(k), 1e-10);
        CHECK(std::abs(r.value - 0.5) <= 1e-10);
        CHECK(r.N_used >= 4 * (k + 1));
    }
    for (double R : {0.5, 2.0, 3.0}) {
        CHECK(std::abs(commutator_norm(make({0.0, R}), 1e-10).value - R * R / 2) <= 1e-10 * std::max(1.0, R * R));
    }

    const CommutatorNorm r = commutator_norm(make({0.0, 1.0, 0.25}), 1e-10);
    const double lower = 161.0 / 288.0;  // rho/A = (161/256 pi) / (9/8 pi)
    CHECK(r.value > lower);
    CHECK(r.value < 9.0 / 16.0);
    // Regression constant, first converged run.
    CHECK(std::abs(r.value - 0.55982275084588) < 1e-10);
    CHECK_FALSE(r.large_truncation);

    CHECK(commutator_norm(make({3.0}), 1e-10).value == 0.0);
    CHECK_THROWS_AS(commutator_norm(make({0.0, 1.0}), 0.0), PreconditionError);
}

TEST_CASE("commutator invariants on random symbols") {
    std::mt19937_64 rng(43);
    const double tol = 1e-9;
    for (int trial = 0; trial < 20; ++trial) {
        const TaylorSymbol s = oracle::random_symbol(rng, 1 + trial % 6);
        const OperatorMatrix C = commutator_matrix(s, 32);

        // positive semidefinite
        for (int i = 0; i < 5; ++i) {
            const auto v = random_vector(rng, 32);
            double vv = 0.0;
            for (const auto& x : v) vv += std::norm(x);
            CHECK(C.form(v).real() >= -1e-12 * vv);
        }

        // nested sections: eigenvalues nondecreasing
        double previous = 0.0;
        for (int N : {8, 16, 32, 64}) {
            const double lambda = dominant_eigenvalue(commutator_matrix(s, N), 1e-14);
            CHECK(lambda - previous >= -1e-13);
            previous = lambda;
        }

        const double norm = commutator_norm(s, tol).value;
        CHECK(norm <= dirichlet_energy(s) / 2 + tol);
        CHECK(norm <= dirichlet_sum(s).get_d() / 2 + tol);
        CHECK(std::abs(commutator_norm(s.with_constant(cdouble(5.0, 2.0)), tol).value - norm) <= tol);

        const cdouble lambda(1.5, -0.5);
        const double scaled = commutator_norm(s.scaled(lambda), tol).value;
        CHECK(std::abs(scaled - std::norm(lambda) * norm) <= tol * std::max(1.0, std::norm(lambda)));
    }
}

TEST_CASE("quadratic form matches the Hankel route through diskalg") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const TaylorSymbol s = oracle::random_symbol(rng, 1 + trial % 5);
        const TaylorSymbol f = oracle::random_symbol(rng, trial % 6);
        const int N = f.degree() + 1;
        const OperatorMatrix C = commutator_matrix(s, N);
        std::vector<cdouble> g(static_cast<std::size_t>(N));
        for (int n = 0; n < N; ++n) g[static_cast<std::size_t>(n)] = f.coeff(n) * std::sqrt(pi / (n + 1));
        const double form = C.form(g).real();

        const BiPoly phi_f = multiply(BiPoly::analytic(s), BiPoly::analytic(f));
        const double mult = disk_integral(modulus_squared(phi_f)).real();
        const TaylorSymbol proj = bergman_project(multiply(conjugate(BiPoly::analytic(s)), BiPoly::analytic(f)));
        const double projected = disk_integral(modulus_squared(BiPoly::analytic(proj))).real();
        const double route = mult - projected;
        CHECK(std::abs(form - route) <= 1e-10 * std::max(std::abs(route), 1e-300) + 1e-14);
    }
}

TEST_CASE("matrix JSON dump") {
    const auto j = matrix_to_json(commutator_matrix(make({0.0, 1.0}), 2));
    CHECK(j["dim"] == 2);
    CHECK(j["entries"][0][0][0] == 0.5);
}
