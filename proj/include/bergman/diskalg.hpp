#pragma once

// Polynomials in z and conj(z) on the unit disk.
//
// Conventions: Laplacian = 4 d/dz d/dzbar, area measure dA unnormalized,
// so the integral of z^p zbar^q over the disk is pi/(p+1) when p == q.
// The scalar type is either std::complex<double> or QComplex (exact).

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergman/error.hpp"
#include "bergman/rational.hpp"
#include "bergman/symbol.hpp"

namespace bergman {

inline constexpr int kMaxBiDegree = 64;

template <class T>
struct ScalarOps;

template <>
struct ScalarOps<cdouble> {
    static bool is_zero(const cdouble& x) { return x == cdouble(0.0); }
    static cdouble conj(const cdouble& x) { return std::conj(x); }
    static cdouble ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static cdouble to_complex(const cdouble& x) { return x; }
    static cdouble from_exact(const QComplex& x) { return x.to_complex(); }
    static double magnitude(const cdouble& x) { return std::abs(x); }
};

template <>
struct ScalarOps<QComplex> {
    static bool is_zero(const QComplex& x) { return x.is_zero(); }
    static QComplex conj(const QComplex& x) { return bergman::conj(x); }
    static QComplex ratio(long num, long den) {
        mpq_class q(num, den);
        q.canonicalize();
        return QComplex(std::move(q));
    }
    static cdouble to_complex(const QComplex& x) { return x.to_complex(); }
    static QComplex from_exact(const QComplex& x) { return x; }
    static double magnitude(const QComplex& x) { return std::abs(x.to_complex()); }
};

/// Trigonometric polynomial sum_{m=-M}^{M} a_m e^{i m theta}.
template <class T>
class BasicTrigPoly {
public:
    BasicTrigPoly() : coeffs_(1) {}
    explicit BasicTrigPoly(int max_mode) : max_mode_(max_mode), coeffs_(2 * static_cast<std::size_t>(max_mode) + 1) {}

    int max_mode() const { return max_mode_; }

    T fourier(int m) const {
        if (std::abs(m) > max_mode_) return T{};
        return coeffs_[static_cast<std::size_t>(m + max_mode_)];
    }
    T& at(int m) {
        if (std::abs(m) > max_mode_) throw PreconditionError("TrigPoly mode out of range");
        return coeffs_[static_cast<std::size_t>(m + max_mode_)];
    }

    bool is_real() const {
        for (int m = 0; m <= max_mode_; ++m) {
            if (!(fourier(-m) == ScalarOps<T>::conj(fourier(m)))) return false;
        }
        return true;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& x) { return ScalarOps<T>::is_zero(x); });
    }

    double max_magnitude() const {
        double best = 0.0;
        for (const auto& x : coeffs_) best = std::max(best, ScalarOps<T>::magnitude(x));
        return best;
    }

    cdouble operator()(double theta) const {
        cdouble acc = 0.0;
        for (int m = -max_mode_; m <= max_mode_; ++m) {
            acc += ScalarOps<T>::to_complex(fourier(m)) * std::polar(1.0, m * theta);
        }
        return acc;
    }

private:
    int max_mode_ = 0;
    std::vector<T> coeffs_;
};

/// sum_{p,q} coeff(p,q) z^p zbar^q with 0 <= p <= P, 0 <= q <= Q.
template <class T>
class BasicBiPoly {
public:
    BasicBiPoly() : BasicBiPoly(0, 0) {}
    BasicBiPoly(int P, int Q) : P_(P), Q_(Q) {
        if (P < 0 || Q < 0 || P > kMaxBiDegree || Q > kMaxBiDegree) {
            throw PreconditionError("BiPoly degree (" + std::to_string(P) + ", " + std::to_string(Q) +
                                    ") outside [0, " + std::to_string(kMaxBiDegree) + "]");
        }
        coeffs_.resize(static_cast<std::size_t>(P + 1) * static_cast<std::size_t>(Q + 1));
    }

    static BasicBiPoly constant(const T& c) {
        BasicBiPoly out(0, 0);
        out.at(0, 0) = c;
        return out;
    }
    static BasicBiPoly monomial(int p, int q, const T& c) {
        BasicBiPoly out(p, q);
        out.at(p, q) = c;
        return out;
    }
    /// Analytic polynomial sum c_k z^k.
    static BasicBiPoly analytic(const TaylorSymbol& s) {
        BasicBiPoly out(s.degree(), 0);
        for (int k = 0; k <= s.degree(); ++k) out.at(k, 0) = ScalarOps<T>::from_exact(s.exact_coeff(k));
        return out;
    }

    int P() const { return P_; }
    int Q() const { return Q_; }

    T coeff(int p, int q) const {
        if (p < 0 || q < 0 || p > P_ || q > Q_) return T{};
        return coeffs_[index(p, q)];
    }
    T& at(int p, int q) {
        if (p < 0 || q < 0 || p > P_ || q > Q_) throw PreconditionError("BiPoly index out of range");
        return coeffs_[index(p, q)];
    }

    /// Hermitian symmetry coeff(p,q) == conj(coeff(q,p)), i.e. real-valued.
    bool is_real() const {
        const int n = std::max(P_, Q_);
        for (int p = 0; p <= n; ++p) {
            for (int q = p; q <= n; ++q) {
                if (!(coeff(p, q) == ScalarOps<T>::conj(coeff(q, p)))) return false;
            }
        }
        return true;
    }

    bool is_zero() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& x) { return ScalarOps<T>::is_zero(x); });
    }

    double max_magnitude() const {
        double best = 0.0;
        for (const auto& x : coeffs_) best = std::max(best, ScalarOps<T>::magnitude(x));
        return best;
    }

    /// Drops zero trailing rows and columns so P, Q are the true degrees.
    BasicBiPoly trimmed() const {
        int p_top = 0, q_top = 0;
        for (int p = 0; p <= P_; ++p) {
            for (int q = 0; q <= Q_; ++q) {
                if (!ScalarOps<T>::is_zero(coeff(p, q))) {
                    p_top = std::max(p_top, p);
                    q_top = std::max(q_top, q);
                }
            }
        }
        BasicBiPoly out(p_top, q_top);
        for (int p = 0; p <= p_top; ++p) {
            for (int q = 0; q <= q_top; ++q) out.at(p, q) = coeff(p, q);
        }
        return out;
    }

    cdouble operator()(cdouble z) const {
        cdouble acc = 0.0;
        const cdouble zb = std::conj(z);
        cdouble zp = 1.0;
        for (int p = 0; p <= P_; ++p) {
            cdouble row = 0.0;
            for (int q = Q_; q >= 0; --q) row = row * zb + ScalarOps<T>::to_complex(coeff(p, q));
            acc += zp * row;
            zp *= z;
        }
        return acc;
    }

    BasicBiPoly& operator+=(const BasicBiPoly& o) { return accumulate(o, false); }
    BasicBiPoly& operator-=(const BasicBiPoly& o) { return accumulate(o, true); }
    friend BasicBiPoly operator+(BasicBiPoly a, const BasicBiPoly& b) { return a += b; }
    friend BasicBiPoly operator-(BasicBiPoly a, const BasicBiPoly& b) { return a -= b; }

    BasicBiPoly scaled(const T& s) const {
        BasicBiPoly out = *this;
        for (auto& x : out.coeffs_) x = x * s;
        return out;
    }

    /// Exact comparison after trimming.
    friend bool operator==(const BasicBiPoly& a, const BasicBiPoly& b) {
        const int P = std::max(a.P_, b.P_), Q = std::max(a.Q_, b.Q_);
        for (int p = 0; p <= P; ++p) {
            for (int q = 0; q <= Q; ++q) {
                if (!(a.coeff(p, q) == b.coeff(p, q))) return false;
            }
        }
        return true;
    }

private:
    std::size_t index(int p, int q) const {
        return static_cast<std::size_t>(p) * static_cast<std::size_t>(Q_ + 1) + static_cast<std::size_t>(q);
    }

    BasicBiPoly& accumulate(const BasicBiPoly& o, bool subtract) {
        if (o.P_ > P_ || o.Q_ > Q_) {
            BasicBiPoly grown(std::max(P_, o.P_), std::max(Q_, o.Q_));
            for (int p = 0; p <= P_; ++p) {
                for (int q = 0; q <= Q_; ++q) grown.at(p, q) = coeff(p, q);
            }
            *this = std::move(grown);
        }
        for (int p = 0; p <= o.P_; ++p) {
            for (int q = 0; q <= o.Q_; ++q) {
                if (subtract) {
                    at(p, q) = at(p, q) - o.coeff(p, q);
                } else {
                    at(p, q) = at(p, q) + o.coeff(p, q);
                }
            }
        }
        return *this;
    }

    int P_ = 0;
    int Q_ = 0;
    std::vector<T> coeffs_;
};

using BiPoly = BasicBiPoly<cdouble>;
using ExactBiPoly = BasicBiPoly<QComplex>;
using TrigPoly = BasicTrigPoly<cdouble>;
using ExactTrigPoly = BasicTrigPoly<QComplex>;

template <class T>
BasicBiPoly<T> multiply(const BasicBiPoly<T>& a, const BasicBiPoly<T>& b) {
    BasicBiPoly<T> out(a.P() + b.P(), a.Q() + b.Q());
    for (int p = 0; p <= a.P(); ++p) {
        for (int q = 0; q <= a.Q(); ++q) {
            const T x = a.coeff(p, q);
            if (ScalarOps<T>::is_zero(x)) continue;
            for (int r = 0; r <= b.P(); ++r) {
                for (int s = 0; s <= b.Q(); ++s) {
                    const T y = b.coeff(r, s);
                    if (ScalarOps<T>::is_zero(y)) continue;
                    out.at(p + r, q + s) = out.coeff(p + r, q + s) + x * y;
                }
            }
        }
    }
    return out;
}

/// Pointwise complex conjugate: coeff(p,q) -> conj(coeff(q,p)).
template <class T>
BasicBiPoly<T> conjugate(const BasicBiPoly<T>& f) {
    BasicBiPoly<T> out(f.Q(), f.P());
    for (int p = 0; p <= f.P(); ++p) {
        for (int q = 0; q <= f.Q(); ++q) out.at(q, p) = ScalarOps<T>::conj(f.coeff(p, q));
    }
    return out;
}

/// |f|^2 as a real BiPoly.
template <class T>
BasicBiPoly<T> modulus_squared(const BasicBiPoly<T>& f) {
    return multiply(f, conjugate(f));
}

/// (1/pi) * integral of f over the disk: sum_p coeff(p,p)/(p+1).
template <class T>
T disk_integral_over_pi(const BasicBiPoly<T>& f) {
    T total{};
    for (int p = 0; p <= std::min(f.P(), f.Q()); ++p) total = total + f.coeff(p, p) * ScalarOps<T>::ratio(1, p + 1);
    return total;
}

template <class T>
cdouble disk_integral(const BasicBiPoly<T>& f) {
    return std::numbers::pi * ScalarOps<T>::to_complex(disk_integral_over_pi(f));
}

/// Restriction to |z| = 1: Fourier mode m collects coeff(p,q) with p - q = m.
template <class T>
BasicTrigPoly<T> boundary_trace(const BasicBiPoly<T>& f) {
    BasicTrigPoly<T> out(std::max(f.P(), f.Q()));
    for (int p = 0; p <= f.P(); ++p) {
        for (int q = 0; q <= f.Q(); ++q) out.at(p - q) = out.fourier(p - q) + f.coeff(p, q);
    }
    return out;
}

/// Harmonic function on the disk with boundary values g. Requires g real.
template <class T>
BasicBiPoly<T> harmonic_extension(const BasicTrigPoly<T>& g) {
    if (!g.is_real()) throw PreconditionError("harmonic_extension requires real-valued boundary data");
    const int M = g.max_mode();
    BasicBiPoly<T> out(M, M);
    out.at(0, 0) = g.fourier(0);
    for (int m = 1; m <= M; ++m) {
        out.at(m, 0) = g.fourier(m);
        out.at(0, m) = g.fourier(-m);
    }
    return out;
}

/// 4 d/dz d/dzbar applied termwise.
template <class T>
BasicBiPoly<T> laplacian(const BasicBiPoly<T>& f) {
    BasicBiPoly<T> out(std::max(f.P() - 1, 0), std::max(f.Q() - 1, 0));
    for (int p = 1; p <= f.P(); ++p) {
        for (int q = 1; q <= f.Q(); ++q) out.at(p - 1, q - 1) = f.coeff(p, q) * ScalarOps<T>::ratio(4L * p * q, 1);
    }
    return out;
}

/// Solves Laplacian(u) = rhs on the disk with u = 0 on the unit circle.
/// Requires rhs real-valued.
template <class T>
BasicBiPoly<T> poisson_solve(const BasicBiPoly<T>& rhs) {
    if (!rhs.is_real()) throw PreconditionError("poisson_solve requires a real-valued right-hand side");
    BasicBiPoly<T> particular(rhs.P() + 1, rhs.Q() + 1);
    for (int p = 0; p <= rhs.P(); ++p) {
        for (int q = 0; q <= rhs.Q(); ++q) {
            particular.at(p + 1, q + 1) = rhs.coeff(p, q) * ScalarOps<T>::ratio(1, 4L * (p + 1) * (q + 1));
        }
    }
    return particular - harmonic_extension(boundary_trace(particular));
}

template <class T>
BasicBiPoly<cdouble> to_numeric(const BasicBiPoly<T>& f) {
    BasicBiPoly<cdouble> out(f.P(), f.Q());
    for (int p = 0; p <= f.P(); ++p) {
        for (int q = 0; q <= f.Q(); ++q) out.at(p, q) = ScalarOps<T>::to_complex(f.coeff(p, q));
    }
    return out;
}

/// {"P": int, "Q": int, "coeff": [[re, im], ...]} in row-major (p, q) order.
template <class T>
nlohmann::ordered_json bipoly_to_json(const BasicBiPoly<T>& f) {
    nlohmann::ordered_json out;
    out["P"] = f.P();
    out["Q"] = f.Q();
    auto coeffs = nlohmann::ordered_json::array();
    for (int p = 0; p <= f.P(); ++p) {
        for (int q = 0; q <= f.Q(); ++q) {
            const cdouble c = ScalarOps<T>::to_complex(f.coeff(p, q));
            coeffs.push_back({c.real(), c.imag()});
        }
    }
    out["coeff"] = std::move(coeffs);
    return out;
}

}  // namespace bergman
