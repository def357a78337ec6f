#include "fermat/iterated.hpp"

#include "fermat/homology.hpp"
#include "fermat/poincare_dual.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace fermat;

namespace {

PathWord random_word(int n, int len) {
    PathWord w = PathWord::empty(n);
    for (int k = 0; k < len; ++k)
        w = w * PathWord::letter(n, gen::integer(0, n - 1), gen::integer(0, n - 1), gen::integer(0, 1) ? 1 : -1);
    return w;
}

}  // namespace

TEST_CASE("gamma_0 integrates to the symbol itself") {
    const FormIdx f{6, 1, 2}, g{6, 1, 3};
    const auto e = iterated_integral(PathWord::gamma0(6), f, g);
    CHECK(e.A == CycNum(1));
    CHECK(e.B.is_zero());
    const std::array<int, 4> want{1, 2, 1, 3};
    CHECK(e.x_index == want);
    CHECK(single_integral(PathWord::gamma0(6), f) == CycNum(1));
}

TEST_CASE("single integrals over kappa loops are the periods") {
    for (int n : {4, 5, 6})
        for (const auto& f : all_forms(n)) {
            const auto p = period_vector(f);
            for (int k = 0; k < basis_size(n); ++k) {
                const auto [i, j] = basis_loop(n, k);
                CHECK(single_integral(PathWord::kappa(n, i, j), f) == p(k));
                CHECK(single_integral(PathWord::conjugated_loop(n, i, j), f) == p(k));
            }
        }
}

TEST_CASE("composition, inversion and translation rules") {
    for (int n : {4, 6}) {
        for (int trial = 0; trial < 25; ++trial) {
            const auto f = gen::form(n), g = gen::form(n);
            const auto u = random_word(n, gen::integer(1, 5)), v = random_word(n, gen::integer(1, 5));
            const auto lhs = iterated_integral(u * v, f, g);
            auto rhs = iterated_integral(u, f, g) + iterated_integral(v, f, g);
            rhs.B += single_integral(u, f) * single_integral(v, g);
            CHECK(lhs == rhs);

            auto inv = CycNum(-1) * iterated_integral(u, f, g);
            inv.B += single_integral(u, f) * single_integral(u, g);
            CHECK(iterated_integral(u.inverse(), f, g) == inv);

            const int a = gen::integer(0, n - 1), b = gen::integer(0, n - 1);
            const auto phase = CycNum::zeta(n, a * (f.r + g.r) + b * (f.s + g.s));
            CHECK(iterated_integral(u.translated(a, b), f, g) == phase * iterated_integral(u, f, g));
        }
    }
}

TEST_CASE("shuffle: forward plus reversed order is the product of single integrals") {
    for (int trial = 0; trial < 40; ++trial) {
        const int n = gen::integer(0, 1) ? 6 : 5;
        const auto f = gen::form(n), g = gen::form(n);
        const auto w = random_word(n, gen::integer(1, 8));
        const auto sum = iterated_integral(w, f, g) + iterated_integral(w, g, f).reversed_symbol();
        CHECK(sum.A.is_zero());
        CHECK(sum.B == single_integral(w, f) * single_integral(w, g));
    }
}

TEST_CASE("closed forms agree with the symbolic engine") {
    for (int n : {4, 5, 6, 7}) {
        const auto forms = all_forms(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (const auto& f : forms)
                    for (const auto& g : forms) {
                        CHECK(iterated_integral(PathWord::kappa(n, i, j), f, g) == closed_form_kappa(n, i, j, f, g));
                        CHECK(iterated_integral(PathWord::conjugated_loop(n, i, j), f, g) ==
                              closed_form_gamma(n, i, j, f, g));
                    }
    }
}

TEST_CASE("vanishing symbol coefficient when r1 + r2 = N") {
    const FormIdx f{6, 2, 1}, g{6, 4, 1};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(closed_form_gamma(6, i, j, f, g).A.is_zero());
}

TEST_CASE("L-combination is the twisted sum over conjugated loops") {
    const FormIdx f{6, 1, 2}, g{6, 1, 3};
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 6; ++k) {
            auto acc = ItExpr::zero(f, g);
            for (int t = 0; t < 6; ++t)
                acc += CycNum::zeta(6, t * k) * iterated_integral(PathWord::conjugated_loop(6, i, t), f, g);
            CHECK(l_combination(6, i, k, f, g) == acc);
        }
}

TEST_CASE("expression algebra") {
    const FormIdx f{6, 1, 2}, g{6, 1, 3};
    auto e = ItExpr::zero(f, g);
    e.A = CycNum::zeta(6, 1);
    e.B = 3;
    CHECK(e.reversed_symbol().reversed_symbol() == e);
    CHECK_THROWS_AS(e += ItExpr::zero(g, f), std::invalid_argument);
    CHECK_THROWS(single_integral(PathWord::gamma0(5), f));
}
