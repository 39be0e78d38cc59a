#pragma once

// Independent numerical oracles for the test suites. Nothing here calls into
// the library's algebra; quadrature works on point values only.

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "bergman/symbol.hpp"

namespace oracle {

using cdouble = std::complex<double>;

/// Gauss-Legendre nodes and weights on [0, 1] by Newton iteration on P_n.
inline std::pair<std::vector<double>, std::vector<double>> gauss_legendre01(int n) {
    std::vector<double> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double step = p1 / dp;
            t -= step;
            if (std::abs(step) < 1e-16) break;
        }
        x[static_cast<std::size_t>(i)] = 0.5 * (1.0 - t);
        w[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - t * t) * dp * dp);
    }
    return {x, w};
}

/// Integral over the unit disk (unnormalized dA): Gauss in r, trapezoid in theta.
template <class F>
cdouble disk_quadrature(F&& f, int radial = 64, int angular = 256) {
    const auto [r, wr] = gauss_legendre01(radial);
    const double dt = 2.0 * std::numbers::pi / angular;
    cdouble total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        cdouble ring = 0.0;
        for (int j = 0; j < angular; ++j) ring += f(std::polar(r[i], j * dt));
        total += ring * dt * r[i] * wr[i];
    }
    return total;
}

/// Random symbol with `degree` + 1 coefficients in [-1, 1] (+ i[-1, 1] if complex).
inline bergman::TaylorSymbol random_symbol(std::mt19937_64& rng, int degree, bool complex_coeffs = true) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cdouble> c(static_cast<std::size_t>(degree) + 1);
    for (auto& x : c) x = cdouble(u(rng), complex_coeffs ? u(rng) : 0.0);
    return bergman::TaylorSymbol(std::span<const cdouble>(c));
}

/// Random symbol satisfying the univalence coefficient condition.
inline bergman::TaylorSymbol random_univalent(std::mt19937_64& rng, int degree) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<cdouble> c(static_cast<std::size_t>(degree) + 1);
    c[1] = cdouble(1.0 + u(rng) * 0.5, u(rng) * 0.5);
    double budget = 0.9 * std::abs(c[1]);
    for (int k = 2; k <= degree; ++k) {
        const double mag = budget * (0.5 + 0.5 * std::abs(u(rng))) / (degree - 1) / k;
        c[static_cast<std::size_t>(k)] = std::polar(mag, std::numbers::pi * u(rng));
    }
    c[0] = cdouble(u(rng), u(rng));
    return bergman::TaylorSymbol(std::span<const cdouble>(c));
}

}  // namespace oracle
