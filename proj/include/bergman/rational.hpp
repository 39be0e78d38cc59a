#pragma once

#include <complex>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bergman {

/// Complex number with arbitrary-precision rational parts.
struct QComplex {
    mpq_class re;
    mpq_class im;

    QComplex() = default;
    QComplex(mpq_class r) : re(std::move(r)), im(0) {}
    QComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {}
    QComplex(long r) : re(r), im(0) {}

    // Every finite double is a dyadic rational, so this is lossless.
    static QComplex from_double(std::complex<double> z);

    std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    bool is_real() const { return sgn(im) == 0; }

    /// |z|^2, exact.
    mpq_class norm() const { return mpq_class(re * re + im * im); }

    QComplex& operator+=(const QComplex& o);
    QComplex& operator-=(const QComplex& o);
    QComplex& operator*=(const QComplex& o);
    QComplex& operator/=(const QComplex& o);

    friend QComplex operator+(QComplex a, const QComplex& b) { return a += b; }
    friend QComplex operator-(QComplex a, const QComplex& b) { return a -= b; }
    friend QComplex operator*(QComplex a, const QComplex& b) { return a *= b; }
    friend QComplex operator/(QComplex a, const QComplex& b) { return a /= b; }
    friend QComplex operator-(const QComplex& a) { return {mpq_class(-a.re), mpq_class(-a.im)}; }
    friend bool operator==(const QComplex& a, const QComplex& b) { return a.re == b.re && a.im == b.im; }
};

inline QComplex conj(const QComplex& a) { return {a.re, mpq_class(-a.im)}; }

/// Strict weak order (real part first); only for canonical keys, not math.
bool lex_less(const QComplex& a, const QComplex& b);

/// Parses "p/q", an integer, or a decimal such as "-0.125" or "1e-3" exactly.
/// Throws std::invalid_argument on malformed text.
mpq_class parse_rational(std::string_view text);

std::string to_string(const QComplex& z);

}  // namespace bergman
