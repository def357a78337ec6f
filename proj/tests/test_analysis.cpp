#include "fermat/analysis.hpp"

#include "fermat/forms.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace fermat;

namespace {
// Independent high-precision evaluations.
constexpr double kBetaSixth = 11.56572777995998878627418673;  // B(1/6, 1/6)
constexpr double kX1213 = 0.443739263238564576166901973321;   // x_{1,2,1,3}, N = 6
}  // namespace

TEST_CASE("beta values") {
    CHECK(beta(1.0, 1.0).contains(1.0));
    CHECK(std::abs(beta(0.5, 0.5).mid - std::numbers::pi) <= beta(0.5, 0.5).rad + 1e-15);
    const auto b = beta_rational(6, 1, 1);
    CHECK(std::abs(b.mid - kBetaSixth) <= b.rad + 1e-14);
    CHECK(beta(0.3, 0.7).mid == doctest::Approx(beta(0.7, 0.3).mid).epsilon(1e-15));
    CHECK_THROWS(beta(-1.0, 1.0));
}

TEST_CASE("Gauss-Jacobi rule is exact on polynomials") {
    for (double c : {-0.8, -0.5, 0.0, 0.37, 2.0}) {
        const auto rule = gauss_jacobi_01(8, c);
        for (int k = 0; k < 16; ++k) {
            double sum = 0.0;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], k);
            CHECK(sum == doctest::Approx(1.0 / (c + k + 1.0)).epsilon(1e-13));
        }
    }
}

TEST_CASE("log-Gamma ratio asymptotics") {
    for (double x : {40.0, 100.0, 1000.0})
        for (auto [a, b] : {std::pair{0.25, 0.75}, std::pair{1.5, 0.1}, std::pair{-0.3, 2.2}})
            CHECK(log_gamma_ratio_asymptotic(x, a, b) ==
                  doctest::Approx(std::lgamma(x + a) - std::lgamma(x + b)).epsilon(1e-12));
}

TEST_CASE("3F2 at unit argument: oracles") {
    SUBCASE("terminating") {
        const auto r = hyp3f2_unit({0, make_rational(1, 3), 1, 2, 2}, 1e-12);
        CHECK(r.value.mid == 1.0);
    }
    SUBCASE("sum of 1/(n+1)^2") {
        const auto r = hyp3f2_unit({1, 1, 1, 2, 2}, 1e-10);
        CHECK(r.value.contains(std::numbers::pi * std::numbers::pi / 6.0));
        CHECK(r.value.rad <= 1e-10);
    }
    SUBCASE("Gauss summation after cancellation") {
        for (int trial = 0; trial < 25; ++trial) {
            const Rational a1 = make_rational(gen::integer(1, 60), 20);
            const Rational a2 = make_rational(gen::integer(1, 30), 20), a3 = make_rational(gen::integer(1, 30), 20);
            const Rational b2 = a2 + a3 + make_rational(gen::integer(3, 40), 20);
            const auto r = hyp3f2_unit({a1, a2, a3, a1, b2}, 1e-11);
            const double x2 = to_double(a2), x3 = to_double(a3), y = to_double(b2);
            const double want =
                std::exp(std::lgamma(y) + std::lgamma(y - x2 - x3) - std::lgamma(y - x2) - std::lgamma(y - x3));
            CHECK(std::abs(r.value.mid - want) <= r.value.rad + 1e-13 * want);
        }
    }
    SUBCASE("slow convergence stays certified") {
        // sigma = 1/20: the tail dominates
        const Rational a = make_rational(1, 2);
        const auto r = hyp3f2_unit({a, a, 1, 1, make_rational(31, 20)}, 1e-9);
        const auto finer = hyp3f2_unit_cut({a, a, 1, 1, make_rational(31, 20)}, 1 << 14);
        CHECK(r.value.rad <= 1e-9);
        CHECK(std::abs(r.value.mid - finer.value.mid) <= r.value.rad + finer.value.rad);
    }
    CHECK_THROWS_AS(hyp3f2_unit({1, 1, 1, 1, 2}, 1e-8), std::domain_error);
    CHECK_THROWS_AS(hyp3f2_unit_cut({1, 1, 1, 2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(hyp3f2_unit({1, 1, 1, 2, 2}, 1e-300, 128), ToleranceUnreachable);
}

TEST_CASE("simplex integrals") {
    const auto unit = simplex_integral(1, 1, 1, 1, 1e-12);
    CHECK(unit.value.contains(0.5));
    for (int trial = 0; trial < 20; ++trial) {
        const double a = gen::integer(1, 40) / 20.0, b = gen::integer(1, 20) / 20.0;
        const double p = gen::integer(1, 40) / 20.0, q = gen::integer(1, 20) / 20.0;
        // the two orderings tile the unit square
        const auto s1 = simplex_integral(a, b, p, q, 1e-10), s2 = simplex_integral(p, q, a, b, 1e-10);
        const double whole = beta(a, b).mid * beta(p, q).mid;
        CHECK(std::abs(s1.value.mid + s2.value.mid - whole) <= s1.value.rad + s2.value.rad + 1e-13 * whole);
    }
    CHECK_THROWS_AS(simplex_integral(1, 1.5, 1, 1, 1e-8), std::invalid_argument);
}

TEST_CASE("x-value oracle") {
    for (auto m : {XMethod::series, XMethod::quadrature, XMethod::both}) {
        const auto x = x_value(6, 1, 2, 1, 3, 1e-12, m);
        CHECK(std::abs(x.mid - kX1213) <= x.err + 1e-16);
        CHECK(x.err <= 1e-12);
        CHECK(x.method == m);
    }
}

TEST_CASE("x on the diagonal is one half") {
    for (int n : {4, 5, 6, 7})
        for (const auto& f : all_forms(n)) {
            const auto x = x_value(n, f.r, f.s, f.r, f.s, 1e-10);
            CHECK(std::abs(x.mid - 0.5) <= x.err + 1e-16);
        }
}

TEST_CASE("shuffle relation and method agreement") {
    for (int n : {4, 5, 6, 7}) {
        const auto forms = all_forms(n);
        for (const auto& f : forms)
            for (const auto& g : forms) {
                const auto x1 = x_value(n, f.r, f.s, g.r, g.s, 1e-9, XMethod::both);
                const auto x2 = x_value(n, g.r, g.s, f.r, f.s, 1e-9, XMethod::both);
                CHECK(std::abs(x1.mid + x2.mid - 1.0) <= x1.err + x2.err);
                REQUIRE(x1.series);
                REQUIRE(x1.quadrature);
                CHECK(std::abs(x1.series->mid - x1.quadrature->mid) <= x1.series->rad + x1.quadrature->rad);
            }
    }
}

TEST_CASE("x-value validation and determinism") {
    CHECK_THROWS_AS(x_value(6, 1, 5, 1, 1, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(x_value(6, 1, 1, 1, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(parse_xmethod("simpson"), std::invalid_argument);
    CHECK(parse_xmethod(to_string(XMethod::quadrature)) == XMethod::quadrature);
    const auto a = x_value(6, 2, 1, 1, 4, 1e-8), b = x_value(6, 2, 1, 1, 4, 1e-8);
    CHECK(a.mid == b.mid);
    CHECK(a.err == b.err);
}
