#include "bergman/symbol.hpp"

#include <cmath>
#include <numbers>

#include "bergman/error.hpp"

namespace bergman {

namespace {

std::vector<cdouble> to_values(const std::vector<QComplex>& exact) {
    std::vector<cdouble> out;
    out.reserve(exact.size());
    for (const auto& c : exact) out.push_back(c.to_complex());
    return out;
}

std::vector<QComplex> to_exact(std::span<const cdouble> values) {
    std::vector<QComplex> out;
    out.reserve(values.size());
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (!std::isfinite(values[k].real()) || !std::isfinite(values[k].imag())) {
            throw PreconditionError("coefficient c_" + std::to_string(k) + " is not finite");
        }
        out.push_back(QComplex::from_double(values[k]));
    }
    return out;
}

}  // namespace

TaylorSymbol::TaylorSymbol(std::vector<QComplex> coeffs) : exact_(std::move(coeffs)) {
    while (exact_.size() > 1 && exact_.back().is_zero()) exact_.pop_back();
    if (exact_.empty()) exact_.emplace_back(0L);
    values_ = to_values(exact_);
}

TaylorSymbol::TaylorSymbol(std::span<const cdouble> coeffs) : TaylorSymbol(to_exact(coeffs)) {}

TaylorSymbol TaylorSymbol::monomial(int k, cdouble scale) {
    if (k < 0) throw PreconditionError("monomial degree must be nonnegative");
    std::vector<cdouble> c(static_cast<std::size_t>(k) + 1, 0.0);
    c.back() = scale;
    return TaylorSymbol(std::span<const cdouble>(c));
}

cdouble TaylorSymbol::coeff(int k) const {
    if (k < 0 || k > degree()) return 0.0;
    return values_[static_cast<std::size_t>(k)];
}

const QComplex& TaylorSymbol::exact_coeff(int k) const {
    static const QComplex zero;
    if (k < 0 || k > degree()) return zero;
    return exact_[static_cast<std::size_t>(k)];
}

cdouble TaylorSymbol::operator()(cdouble z) const {
    cdouble acc = 0.0;
    for (auto it = values_.rbegin(); it != values_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

TaylorSymbol TaylorSymbol::scaled(const QComplex& lambda) const {
    std::vector<QComplex> c = exact_;
    for (auto& x : c) x *= lambda;
    return TaylorSymbol(std::move(c));
}

TaylorSymbol TaylorSymbol::scaled(cdouble lambda) const { return scaled(QComplex::from_double(lambda)); }

TaylorSymbol TaylorSymbol::with_constant(cdouble c0) const {
    std::vector<QComplex> c = exact_;
    c[0] = QComplex::from_double(c0);
    return TaylorSymbol(std::move(c));
}

TaylorSymbol derivative(const TaylorSymbol& s) {
    std::vector<QComplex> d;
    for (int k = 1; k <= s.degree(); ++k) d.push_back(s.exact_coeff(k) * QComplex(k));
    return TaylorSymbol(std::move(d));
}

mpq_class dirichlet_sum(const TaylorSymbol& s) {
    mpq_class total = 0;
    for (int m = 1; m <= s.degree(); ++m) total += m * s.exact_coeff(m).norm();
    return total;
}

double dirichlet_energy(const TaylorSymbol& s) { return std::numbers::pi * dirichlet_sum(s).get_d(); }

double image_area(const TaylorSymbol& s) { return dirichlet_energy(s); }

double perimeter(const TaylorSymbol& s, int samples) {
    const int floor = 4 * (s.degree() + 1);
    if (samples < floor) {
        throw PreconditionError("perimeter needs at least " + std::to_string(floor) + " samples, got " +
                                std::to_string(samples));
    }
    const TaylorSymbol ds = derivative(s);
    const double step = 2.0 * std::numbers::pi / samples;
    double total = 0.0;
    for (int j = 0; j < samples; ++j) total += std::abs(ds(std::polar(1.0, j * step)));
    return total * step;
}

bool univalence_certificate(const TaylorSymbol& s) {
    double tail = 0.0;
    for (int k = 2; k <= s.degree(); ++k) tail += k * std::abs(s.coeff(k));
    return tail < std::abs(s.coeff(1));
}

namespace {

mpq_class part_from_json(const nlohmann::json& v, std::size_t index, const char* which) {
    const std::string where = "coefficient " + std::to_string(index) + " (" + which + ")";
    if (v.is_number_integer()) return mpq_class(v.get<long>());
    if (v.is_number_float()) {
        double d = v.get<double>();
        if (!std::isfinite(d)) throw PreconditionError(where + ": non-finite value " + v.dump());
        return mpq_class(d);
    }
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw PreconditionError(where + ": cannot parse token " + v.dump());
        }
    }
    throw PreconditionError(where + ": expected a number or rational string, got token " + v.dump());
}

}  // namespace

TaylorSymbol symbol_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw PreconditionError("coefficients must be a JSON array, got token " + j.dump());
    if (j.empty()) throw PreconditionError("coefficient array is empty");
    std::vector<QComplex> c;
    c.reserve(j.size());
    for (std::size_t k = 0; k < j.size(); ++k) {
        const auto& pair = j[k];
        if (!pair.is_array() || pair.size() != 2) {
            throw PreconditionError("coefficient " + std::to_string(k) + ": expected [re, im] pair, got token " +
                                    pair.dump());
        }
        c.emplace_back(part_from_json(pair[0], k, "re"), part_from_json(pair[1], k, "im"));
    }
    return TaylorSymbol(std::move(c));
}

TaylorSymbol parse_symbol(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t pos = e.byte > 0 ? e.byte - 1 : 0;
        std::size_t end = text.find_first_of(",[] \t\n", pos + 1);
        std::string token = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        throw PreconditionError("malformed coefficient JSON at byte " + std::to_string(e.byte) +
                                ", offending token '" + token + "'");
    }
    return symbol_from_json(j);
}

nlohmann::ordered_json symbol_to_json(const TaylorSymbol& s) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& c : s.coeffs()) out.push_back({c.real(), c.imag()});
    return out;
}

}  // namespace bergman
