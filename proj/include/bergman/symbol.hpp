#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergman/rational.hpp"

namespace bergman {

using cdouble = std::complex<double>;

/// Polynomial analytic symbol phi(z) = sum_k c_k z^k on the unit disk.
///
/// Coefficients are held exactly as complex rationals; double values are
/// cached for the numerical routines. Trailing zeros are trimmed, so
/// `degree()` is the index of the last nonzero coefficient (0 for the zero
/// symbol, which stores the single coefficient 0).
class TaylorSymbol {
public:
    TaylorSymbol() : TaylorSymbol(std::vector<QComplex>{}) {}
    explicit TaylorSymbol(std::vector<QComplex> coeffs);
    explicit TaylorSymbol(std::span<const cdouble> coeffs);
    TaylorSymbol(std::initializer_list<cdouble> coeffs)
        : TaylorSymbol(std::span<const cdouble>(coeffs.begin(), coeffs.size())) {}

    static TaylorSymbol monomial(int k, cdouble scale = 1.0);

    int degree() const { return static_cast<int>(exact_.size()) - 1; }

    /// Coefficient c_k; zero for k outside [0, degree()].
    cdouble coeff(int k) const;
    const QComplex& exact_coeff(int k) const;

    std::span<const cdouble> coeffs() const { return values_; }
    std::span<const QComplex> exact_coeffs() const { return exact_; }

    cdouble operator()(cdouble z) const;

    TaylorSymbol scaled(cdouble lambda) const;
    TaylorSymbol scaled(const QComplex& lambda) const;
    TaylorSymbol with_constant(cdouble c0) const;

    bool is_zero() const { return exact_.size() == 1 && exact_[0].is_zero(); }

    friend bool operator==(const TaylorSymbol& a, const TaylorSymbol& b) { return a.exact_ == b.exact_; }

private:
    std::vector<QComplex> exact_;
    std::vector<cdouble> values_;
};

/// phi' with coefficients k c_k shifted down; degree max(K-1, 0).
TaylorSymbol derivative(const TaylorSymbol& s);

/// sum_{m>=1} m |c_m|^2, exact. Equals ||phi'||^2 in the normalized measure dA/pi.
mpq_class dirichlet_sum(const TaylorSymbol& s);

/// ||phi'||^2 in A^2(D) with unnormalized area measure: pi sum m |c_m|^2.
double dirichlet_energy(const TaylorSymbol& s);

/// Area of phi(D) counted with multiplicity. Same value as dirichlet_energy;
/// it is the geometric area exactly when phi is univalent.
double image_area(const TaylorSymbol& s);

/// Trapezoid-rule length of the boundary curve phi(e^{i theta}).
/// Requires samples >= 4 (degree + 1).
double perimeter(const TaylorSymbol& s, int samples);

/// Sufficient condition for univalence: sum_{k>=2} k|c_k| < |c_1|.
/// A false result is inconclusive.
bool univalence_certificate(const TaylorSymbol& s);

// JSON form: array of [re, im] pairs indexed from c_0. Parts may be numbers
// or exact rational strings such as "1/9".
TaylorSymbol symbol_from_json(const nlohmann::json& j);
TaylorSymbol parse_symbol(const std::string& text);
nlohmann::ordered_json symbol_to_json(const TaylorSymbol& s);

}  // namespace bergman
