#pragma once

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergman/diskalg.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

/// Finite N x N section of an operator in the Bergman basis
/// psi_n = sqrt((n+1)/pi) z^n. Stored as a band: entry (n, m) is
/// structurally zero unless -upper <= n - m <= lower.
class OperatorMatrix {
public:
    OperatorMatrix(int dim, int lower, int upper, bool hermitian);

    int dim() const { return dim_; }
    int lower_bandwidth() const { return lower_; }
    int upper_bandwidth() const { return upper_; }
    bool hermitian() const { return hermitian_; }

    cdouble operator()(int n, int m) const;
    void set(int n, int m, cdouble value);

    /// y = M x.
    void apply(std::span<const cdouble> x, std::span<cdouble> y) const;

    /// Quadratic form <M v, v>.
    cdouble form(std::span<const cdouble> v) const;

    /// max |M(n,m) - conj(M(m,n))|.
    double hermitian_defect() const;

    static OperatorMatrix dense(int dim, bool hermitian) { return OperatorMatrix(dim, dim - 1, dim - 1, hermitian); }

private:
    std::size_t slot(int n, int m) const;

    int dim_;
    int lower_;
    int upper_;
    bool hermitian_;
    std::vector<cdouble> band_;
};

nlohmann::ordered_json matrix_to_json(const OperatorMatrix& m);

/// T_phi section: entry (n, m) = c_{n-m} sqrt((m+1)/(n+1)).
OperatorMatrix toeplitz_matrix(const TaylorSymbol& s, int N);

/// Top-left N x N block of the infinite self-commutator T*T - TT*.
/// Entries use the exact banded sums, not products of truncated sections.
OperatorMatrix commutator_matrix(const TaylorSymbol& s, int N);

struct EigenOptions {
    double tol = 1e-12;
    int max_iterations = 200000;
};

struct EigenEstimate {
    double value = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Power iteration from the normalized all-ones vector. Stops once the
/// residual |M v - theta v| <= tol, which places an eigenvalue within tol of
/// the Rayleigh quotient theta. Requires a Hermitian PSD matrix.
EigenEstimate dominant_eigenpair(const OperatorMatrix& M, const EigenOptions& opts);
double dominant_eigenvalue(const OperatorMatrix& M, double tol);

struct CommutatorNorm {
    double value = 0.0;
    int N_used = 0;
    /// Dominant eigenvalue of each section visited, in order.
    std::vector<double> history;
    /// N passed 4096 before the estimate stabilized.
    bool large_truncation = false;
};

struct CommutatorOptions {
    int max_dim = 1 << 15;
    int max_iterations = 200000;
};

/// ||[T*_phi, T_phi]|| on A^2(D) by doubling N from 4(K+1) until successive
/// section eigenvalues differ by less than tol/2.
CommutatorNorm commutator_norm(const TaylorSymbol& s, double tol, const CommutatorOptions& opts = {});

/// Orthogonal Bergman projection: z^p zbar^q -> (p-q+1)/(p+1) z^{p-q} for p >= q.
template <class T>
std::vector<T> bergman_project_coeffs(const BasicBiPoly<T>& f) {
    std::vector<T> out(static_cast<std::size_t>(f.P()) + 1);
    for (int p = 0; p <= f.P(); ++p) {
        for (int q = 0; q <= std::min(p, f.Q()); ++q) {
            out[static_cast<std::size_t>(p - q)] =
                out[static_cast<std::size_t>(p - q)] + f.coeff(p, q) * ScalarOps<T>::ratio(p - q + 1, p + 1);
        }
    }
    return out;
}

TaylorSymbol bergman_project(const BiPoly& f);
TaylorSymbol bergman_project(const ExactBiPoly& f);

/// H_{conj(phi)} f = conj(phi) f - P(conj(phi) f).
template <class T>
BasicBiPoly<T> hankel_apply_as(const TaylorSymbol& s, const TaylorSymbol& f) {
    const auto phi_bar = conjugate(BasicBiPoly<T>::analytic(s));
    const auto product = multiply(phi_bar, BasicBiPoly<T>::analytic(f));
    const auto projected = bergman_project_coeffs(product);
    BasicBiPoly<T> analytic_part(static_cast<int>(projected.size()) - 1, 0);
    for (std::size_t k = 0; k < projected.size(); ++k) analytic_part.at(static_cast<int>(k), 0) = projected[k];
    return product - analytic_part;
}

BiPoly hankel_apply(const TaylorSymbol& s, const TaylorSymbol& f);

}  // namespace bergman
