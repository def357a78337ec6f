#include "fermat/harmonic_volume.hpp"

#include "fermat/homology.hpp"
#include "fermat/json_io.hpp"
#include "fermat/poincare_dual.hpp"
#include "generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace fermat;

TEST_CASE("expression is linear in the dual vector") {
    for (int trial = 0; trial < 10; ++trial) {
        const auto f1 = gen::form(6), f2 = gen::form(6), f3 = gen::form(6), f4 = gen::form(6);
        const CycNum c = gen::cyc(6, 5, 4), d = gen::cyc(6, 5, 4);
        const Vec<CycNum> mix = c * poincare_dual(f3).coeffs + d * poincare_dual(f4).coeffs;
        CHECK(contract_dual(mix, f1, f2) == c * harmonic_volume_expr(f1, f2, f3) + d * harmonic_volume_expr(f1, f2, f4));
    }
}

TEST_CASE("shuffle partner differs by the period pairing") {
    for (int n : {4, 6})
        for (int trial = 0; trial < 15; ++trial) {
            const auto f1 = gen::form(n), f2 = gen::form(n), f3 = gen::form(n);
            const auto sum = harmonic_volume_expr(f1, f2, f3) + harmonic_volume_expr(f2, f1, f3).reversed_symbol();
            CHECK(sum.A.is_zero());
            const auto& d = poincare_dual(f3);
            const auto p1 = period_vector(f1), p2 = period_vector(f2);
            CycNum want = 0;
            for (Eigen::Index k = 0; k < p1.size(); ++k) want += d.coeffs(k) * p1(k) * p2(k);
            CHECK(sum.B == want);
        }
}

TEST_CASE("degenerate symbol gives a pure constant") {
    const auto e = harmonic_volume_expr({6, 2, 1}, {6, 4, 1}, {6, 1, 1});
    CHECK(e.A.is_zero());
}

TEST_CASE("certified witnesses") {
    // 2 I_R values from an independent pipeline
    SUBCASE("sextic") {
        const auto r = evaluate({6, 1, 2}, {6, 2, 2}, {6, 3, 2}, 1e-8);
        CHECK(r.verdict == Verdict::nontrivial);
        CHECK(r.value.mid.real() == doctest::Approx(108.0).epsilon(1e-12));
        CHECK(r.value.mid.imag() == doctest::Approx(98.35906).epsilon(1e-7));
        CHECK(r.lattice_dist->mid == doctest::Approx(0.36783).epsilon(1e-4));
    }
    SUBCASE("quartic") {
        const auto r = evaluate({4, 1, 1}, {4, 1, 2}, {4, 2, 1}, 1e-8);
        CHECK(r.verdict == Verdict::nontrivial);
        CHECK(r.value.mid.real() == doctest::Approx(-64.0).epsilon(1e-12));
        CHECK(r.value.mid.imag() == doctest::Approx(-39.737).epsilon(1e-5));
        CHECK(r.lattice_dist->mid == doctest::Approx(0.263).epsilon(2e-3));
    }
}

TEST_CASE("lattice-valued volume is inconclusive") {
    const auto r = evaluate({6, 1, 2}, {6, 1, 3}, {6, 1, 1}, 1e-6);
    CHECK(r.exact_expr.A.is_zero());
    CHECK(r.exact_expr.B.is_integral());
    CHECK(r.verdict == Verdict::inconclusive);
    CHECK(r.lattice_dist->lower() <= 0.0);
    CHECK(r.two_re_mod_1->mid >= 0.0);
    CHECK(r.two_re_mod_1->mid < 1.0);
}

TEST_CASE("unsupported degree still reports the value") {
    const auto r = evaluate({5, 1, 1}, {5, 1, 2}, {5, 2, 1}, 1e-6);
    CHECK(r.verdict == Verdict::unsupported_N);
    CHECK_FALSE(r.lattice_dist.has_value());
    CHECK(std::isfinite(r.value.mid.real()));
    CHECK_THROWS_AS(sweep(5, 1e-6), std::invalid_argument);
}

TEST_CASE("tightening the tolerance keeps the verdict") {
    for (double tol : {1e-6, 1e-8, 1e-10, 1e-12})
        CHECK(evaluate({6, 1, 1}, {6, 1, 4}, {6, 4, 1}, tol).verdict == Verdict::nontrivial);
}

TEST_CASE("reports are reproducible") {
    const auto a = to_json(evaluate({6, 2, 2}, {6, 2, 3}, {6, 2, 1}, 1e-6)).dump();
    const auto b = to_json(evaluate({6, 2, 2}, {6, 2, 3}, {6, 2, 1}, 1e-6)).dump();
    CHECK(a == b);
}

TEST_CASE("sweeps") {
    SUBCASE("sextic") {
        std::vector<std::string> streamed;
        const auto reps = sweep(6, 1e-6, XMethod::both, 1L << 20,
                                [&](const VolumeReport& r) { streamed.push_back(to_json(r).dump()); });
        CHECK(reps.size() == 550);
        REQUIRE(streamed.size() == reps.size());
        for (std::size_t k = 0; k < reps.size(); ++k) CHECK(streamed[k] == to_json(reps[k]).dump());
        // independent pipeline count
        CHECK(summarize(reps).nontrivial == 27);
        bool found = false;
        for (const auto& r : reps) {
            CHECK(r.tensor[0] <= r.tensor[1]);
            if (r.tensor == std::array<FormIdx, 3>{FormIdx{6, 1, 2}, {6, 1, 3}, {6, 1, 1}}) found = true;
        }
        CHECK(found);
        const auto again = sweep(6, 1e-6);
        for (std::size_t k = 0; k < reps.size(); ++k) CHECK(to_json(again[k]).dump() == to_json(reps[k]).dump());
    }
    SUBCASE("quartic") {
        const auto reps = sweep(4, 1e-6);
        CHECK(reps.size() == 18);
        CHECK(summarize(reps).nontrivial == 3);
    }
}
