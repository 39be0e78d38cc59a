#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "bergman/error.hpp"
#include "bergman/symbol.hpp"
#include "oracles.hpp"

using namespace bergman;
using std::numbers::pi;

namespace {

TaylorSymbol make(std::initializer_list<cdouble> c) { return TaylorSymbol(c); }

// 2 pi * integral_0^1 k^2 r^{2k-2} r dr by Gauss-Legendre, no closed form used.
double radial_energy_oracle(int k) {
    const auto [r, w] = oracle::gauss_legendre01(32);
    double total = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) total += w[i] * k * k * std::pow(r[i], 2 * k - 1);
    return 2.0 * pi * total;
}

}  // namespace

TEST_CASE("construction trims trailing zeros") {
    const TaylorSymbol s = make({1.0, 2.0, 0.0, 0.0});
    CHECK(s.degree() == 1);
    CHECK(TaylorSymbol().degree() == 0);
    CHECK(TaylorSymbol().is_zero());
    CHECK(make({0.0, 0.0}).is_zero());
    CHECK(s.coeff(7) == cdouble(0.0));
    CHECK_THROWS_AS(make({1.0, std::nan("")}), PreconditionError);
}

TEST_CASE("derivative") {
    CHECK(derivative(make({0.0, 1.0})) == make({1.0}));
    CHECK(derivative(make({0.0, 0.0, 0.0, 1.0})) == make({0.0, 0.0, 3.0}));
    const TaylorSymbol d = derivative(make({5.0}));
    CHECK(d.degree() == 0);
    CHECK(d.is_zero());
}

TEST_CASE("dirichlet_energy") {
    CHECK(dirichlet_energy(make({0.0, 1.0})) == doctest::Approx(pi).epsilon(1e-15));
    CHECK(dirichlet_energy(make({0.0})) == 0.0);
    for (int k = 1; k <= 6; ++k) {
        CHECK(dirichlet_energy(TaylorSymbol::monomial(k)) == doctest::Approx(radial_energy_oracle(k)).epsilon(1e-13));
    }
}

TEST_CASE("image_area") {
    for (double R : {0.5, 2.0, 3.0}) CHECK(image_area(make({0.0, R})) == doctest::Approx(pi * R * R).epsilon(1e-15));

    const TaylorSymbol s = make({0.0, 1.0, 0.25});
    CHECK(image_area(s) == doctest::Approx(pi * (1.0 + 1.0 / 8.0)).epsilon(1e-15));
    const TaylorSymbol ds = derivative(s);
    const double quad = oracle::disk_quadrature([&](cdouble z) { return cdouble(std::norm(ds(z))); }).real();
    CHECK(image_area(s) == doctest::Approx(quad).epsilon(1e-12));

    for (int k = 2; k <= 4; ++k) {
        const TaylorSymbol dk = derivative(TaylorSymbol::monomial(k));
        const double q = oracle::disk_quadrature([&](cdouble z) { return cdouble(std::norm(dk(z))); }).real();
        CHECK(image_area(TaylorSymbol::monomial(k)) == doctest::Approx(q).epsilon(1e-12));
        CHECK(image_area(TaylorSymbol::monomial(k)) == doctest::Approx(pi * k).epsilon(1e-15));
    }
}

TEST_CASE("perimeter") {
    CHECK(perimeter(make({0.0, 1.0}), 8) == doctest::Approx(2 * pi).epsilon(1e-15));
    CHECK(perimeter(make({0.0, 2.5}), 8) == doctest::Approx(5 * pi).epsilon(1e-15));

    const TaylorSymbol s = make({0.0, 1.0, 0.25});
    const double coarse = perimeter(s, 256);
    const double fine = perimeter(s, 2560);
    CHECK(std::abs(coarse - fine) / fine < 1e-10);

    CHECK_THROWS_AS(perimeter(s, 11), PreconditionError);
    CHECK_NOTHROW(perimeter(s, 12));
}

TEST_CASE("univalence_certificate") {
    CHECK(univalence_certificate(make({0.0, 1.0, 0.25})));
    CHECK_FALSE(univalence_certificate(make({0.0, 0.0, 1.0})));
    CHECK_FALSE(univalence_certificate(make({0.0, 1.0, 0.5})));
    CHECK(univalence_certificate(make({3.0, cdouble(0.0, 2.0)})));
}

TEST_CASE("energy invariants on random symbols") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const TaylorSymbol s = oracle::random_symbol(rng, 1 + trial % 6);
        const double e = dirichlet_energy(s);
        CHECK(e == image_area(s));

        const cdouble lambda(0.3 + 0.1 * trial, -0.7);
        CHECK(dirichlet_energy(s.scaled(lambda)) == doctest::Approx(std::norm(lambda) * e).epsilon(1e-13));
        CHECK(dirichlet_energy(s.with_constant(cdouble(4.0, -1.0))) == e);
    }
}

TEST_CASE("isoperimetric inequality") {
    for (double R : {0.5, 1.0, 2.0, 3.0}) {
        const TaylorSymbol disk = make({0.0, R});
        const double P = perimeter(disk, 64);
        CHECK(std::abs(P * P - 4 * pi * image_area(disk)) < 1e-12 * std::max(1.0, R * R));
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const TaylorSymbol s = oracle::random_univalent(rng, 2 + trial % 5);
        REQUIRE(univalence_certificate(s));
        const double P = perimeter(s, 2048);
        CHECK(P * P >= 4 * pi * image_area(s) - 1e-8);
    }
}

TEST_CASE("JSON coefficient format") {
    const TaylorSymbol s = parse_symbol(R"([[0,0],[1,0],["1/4","0"]])");
    CHECK(s.exact_coeff(2).re == mpq_class(1, 4));
    CHECK(symbol_to_json(s).dump() == "[[0.0,0.0],[1.0,0.0],[0.25,0.0]]");
    CHECK(parse_symbol(symbol_to_json(s).dump()) == s);
    CHECK(parse_symbol(R"([[0,0],[0,0],[0,0],["1/9",0]])").exact_coeff(3).re == mpq_class(1, 9));

    auto message = [](const std::string& text) {
        try {
            parse_symbol(text);
        } catch (const PreconditionError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    CHECK(message("[[0,0],[1,x]]").find("'x'") != std::string::npos);
    CHECK(message("[[0,0],[1]]").find("[1]") != std::string::npos);
    CHECK(message(R"([[0,0],["one",0]])").find("\"one\"") != std::string::npos);
    CHECK(message("{}").find("{}") != std::string::npos);
    CHECK_FALSE(message("[]").empty());
}
