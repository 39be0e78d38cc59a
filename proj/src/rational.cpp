#include "bergman/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace bergman {

QComplex QComplex::from_double(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw std::invalid_argument("non-finite coefficient");
    }
    return {mpq_class(z.real()), mpq_class(z.imag())};
}

QComplex& QComplex::operator+=(const QComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
}

QComplex& QComplex::operator-=(const QComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
}

QComplex& QComplex::operator*=(const QComplex& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

QComplex& QComplex::operator/=(const QComplex& o) {
    mpq_class d = o.norm();
    if (sgn(d) == 0) throw std::domain_error("QComplex division by zero");
    mpq_class r = (re * o.re + im * o.im) / d;
    mpq_class i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

bool lex_less(const QComplex& a, const QComplex& b) {
    int c = cmp(a.re, b.re);
    if (c != 0) return c < 0;
    return cmp(a.im, b.im) < 0;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    return true;
}

mpq_class parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
            exp_negative = exp_text.front() == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view int_part = s.substr(0, dot);
        std::string_view frac_part = s.substr(dot + 1);
        if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
            (!frac_part.empty() && !all_digits(frac_part))) {
            throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        }
        digits = std::string(int_part) + std::string(frac_part);
        exponent -= static_cast<long>(frac_part.size());
    } else {
        if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        digits = std::string(s);
    }
    mpz_class mantissa(digits, 10);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class value = exponent >= 0 ? mpq_class(mantissa * scale) : mpq_class(mantissa, scale);
    value.canonicalize();
    return negative ? mpq_class(-value) : value;
}

}  // namespace

mpq_class parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpq_class num = parse_decimal(text.substr(0, slash));
        mpq_class den = parse_decimal(text.substr(slash + 1));
        if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        return num / den;
    }
    return parse_decimal(text);
}

std::string to_string(const QComplex& z) {
    if (z.is_real()) return z.re.get_str();
    return z.re.get_str() + (sgn(z.im) < 0 ? " - " : " + ") + mpq_class(abs(z.im)).get_str() + "i";
}

}  // namespace bergman
