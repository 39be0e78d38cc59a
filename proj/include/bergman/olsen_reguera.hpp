#pragma once

// Coefficient-space form of the Hankel operator H_{conj(phi)} on A^2(D).
// Norms in this header use the normalized measure dA/pi, under which
// ||z^n||^2 = 1/(n+1). Multiply by pi to compare with diskalg integrals.

#include <span>
#include <string>
#include <vector>

#include "bergman/rational.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

/// Taylor coefficients a_0..a_{N_f} of f, with the reindexed view
/// b_{n+1} = a_n / (n+1).
class CoeffSeq {
public:
    CoeffSeq() : a_(1, 0.0) {}
    explicit CoeffSeq(std::vector<cdouble> a);
    static CoeffSeq from_b(std::span<const cdouble> b_from_1);
    static CoeffSeq from_symbol(const TaylorSymbol& f);

    int size() const { return static_cast<int>(a_.size()); }
    cdouble a(int n) const;
    /// b_n for n >= 1; zero outside the support.
    cdouble b(int n) const;
    std::span<const cdouble> coeffs() const { return a_; }

    TaylorSymbol as_symbol() const { return TaylorSymbol(std::span<const cdouble>(a_)); }

private:
    std::vector<cdouble> a_;
};

/// sum |a_n|^2 / (n+1).
double seq_norm_sq(const CoeffSeq& f);
/// sum_{m>=1} m |c_m|^2.
double seq_dirichlet(const TaylorSymbol& s);

/// (I) = sum_{n,m>=1,k>=0} b_n conj(b_m) c_{k+m} conj(c_{k+n}) nm/(n+m+k).
double sum_I(const CoeffSeq& f, const TaylorSymbol& s);
/// (II) = sum_{n,m,k>=1} b_{n+k} conj(b_{m+k}) c_m conj(c_n) mn/(n+m+k).
double sum_II(const CoeffSeq& f, const TaylorSymbol& s);
/// (I*) + (II*) in closed form: (sum n|b_n|^2)(sum m|c_m|^2)/2.
double sum_star(const CoeffSeq& f, const TaylorSymbol& s);

/// ||H_{conj(phi)} f||^2 = (I) + (II).
double hankel_norm_sq_on(const CoeffSeq& f, const TaylorSymbol& s);
/// (1/2) ||f||^2 ||phi'||^2, an upper bound for hankel_norm_sq_on.
double or_bound(const CoeffSeq& f, const TaylorSymbol& s);

/// Homogeneous linear constraints on the unknowns b_1..b_N.
struct ConstraintMatrix {
    int unknowns = 0;
    /// Row r, column j is the coefficient of b_{j+1}.
    std::vector<std::vector<QComplex>> rows;
};

/// Equality conditions of the AM-GM step that bounds (I) and (II):
///   b_i c_{j+k} = b_j c_{i+k}      i, j >= 1, k >= 0
///   b_{i+k} c_j = b_{j+k} c_i      i, j, k >= 1
/// over b-indices <= N. A polynomial's coefficients beyond its degree are
/// known zeros and take part. Zero rows and duplicates (up to scale) are
/// dropped. Requires N >= degree + 2.
ConstraintMatrix equality_system(const TaylorSymbol& s, int N);

/// Same system for a symbol known only through c_0..c_{c.size()-1}
/// (for example a sample of an infinite series); rows referencing an
/// unknown coefficient are omitted.
ConstraintMatrix sampled_equality_system(std::span<const QComplex> c, int N);

/// Max |row . b| over all rows, exact.
QComplex max_residual(const ConstraintMatrix& m, std::span<const QComplex> b_from_1);
bool satisfies_all(const ConstraintMatrix& m, std::span<const QComplex> b_from_1);

/// Exact rank and nullspace basis by reduction to row echelon form.
struct Nullspace {
    int rank = 0;
    std::vector<std::vector<QComplex>> basis;
};
Nullspace exact_nullspace(const ConstraintMatrix& m);

enum class Extremality { Monomial, GeometricTail, Other };
std::string to_string(Extremality e);

struct ExtremalityResult {
    Extremality classification = Extremality::Other;
    int nullspace_dim = 0;
    /// Basis vectors as b-sequences b_1..b_N (exact).
    std::vector<std::vector<QComplex>> exact_basis;
    /// The same vectors as coefficient sequences of f.
    std::vector<CoeffSeq> basis;
    int truncation = 0;
    /// Nullspace dimension recomputed at 2N agrees.
    bool stable = false;
};

/// Classification follows the coefficient pattern: Monomial when exactly one
/// c_k (k >= 1) is nonzero, otherwise Other. GeometricTail needs infinite
/// support and is never produced for a polynomial.
/// N = 0 selects the default truncation 4(K+1).
ExtremalityResult extremal_nullspace(const TaylorSymbol& s, int N = 0);

}  // namespace bergman
