#include "fermat/homology.hpp"

#include "fermat/exact_linalg.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace fermat;

namespace {

GroupRingClass random_class(int n) {
    auto x = GroupRingClass::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x.coeffs(i, j) = gen::integer(-5, 5);
    return x;
}

std::vector<BigInt> divisors(const Eigen::MatrixXi& m) {
    Mat<BigInt> b(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) b(i, j) = m(i, j);
    return smith_divisors(b);
}

}  // namespace

TEST_CASE("genus and basis size") {
    CHECK(genus(3) == 1);
    CHECK(genus(4) == 3);
    CHECK(genus(6) == 10);
    CHECK(basis_size(6) == 20);
    CHECK(basis_index(6, 3, 4) == 19);
    CHECK(basis_index(6, 4, 0) == -1);
    CHECK(basis_index(6, 0, 5) == -1);
    CHECK(basis_loop(6, 7) == std::pair{1, 2});
}

TEST_CASE("relation span has rank 3N-2") {
    for (int n = 3; n <= 9; ++n) CHECK(relation_rank(n) == 3 * n - 2);
}

TEST_CASE("intersection matrix is antisymmetric and unimodular") {
    for (int n = 3; n <= 8; ++n) {
        const auto m = intersection_matrix(n);
        CHECK(m.rows() == basis_size(n));
        CHECK(m == -m.transpose());
        const auto d = divisors(m);
        CHECK(static_cast<int>(d.size()) == basis_size(n));
        for (const auto& v : d) CHECK(v == 1);
    }
}

TEST_CASE("base pairing values") {
    CHECK(base_pairing(6, 1, 0) == 1);
    CHECK(base_pairing(6, 0, 1) == 1);
    CHECK(base_pairing(6, 1, 1) == -1);
    CHECK(base_pairing(6, 5, 0) == -1);
    CHECK(base_pairing(6, -1, -1) == 1);
    CHECK(base_pairing(6, 0, 0) == 0);
    CHECK(base_pairing(6, 2, 1) == 0);
}

TEST_CASE("relations lie in the radical of the pairing") {
    for (int n : {4, 5, 6, 7})
        for (const auto& rel : relations(n))
            for (int trial = 0; trial < 5; ++trial) {
                const auto x = random_class(n);
                CHECK(intersection(rel, x) == 0);
                CHECK(intersection(x, rel) == 0);
            }
}

TEST_CASE("pairing is antisymmetric and automorphism invariant") {
    for (int n : {4, 6})
        for (int trial = 0; trial < 20; ++trial) {
            const auto x = random_class(n), y = random_class(n);
            CHECK(intersection(x, y) == -intersection(y, x));
            const int a = gen::integer(0, n - 1), b = gen::integer(0, n - 1);
            CHECK(intersection(x.translated(a, b), y.translated(a, b)) == intersection(x, y));
        }
}

TEST_CASE("reduction respects the pairing and kills relations") {
    for (int n : {4, 5, 6}) {
        for (const auto& rel : relations(n)) {
            const auto h = reduce(rel);
            for (Eigen::Index k = 0; k < h.basis_coeffs.size(); ++k) CHECK(h.basis_coeffs(k) == 0);
        }
        for (int trial = 0; trial < 10; ++trial) {
            const auto x = random_class(n), y = random_class(n);
            CHECK(intersection(lift(reduce(x)), lift(reduce(y))) == intersection(x, y));
            const auto h = reduce(x);
            CHECK(reduce(lift(h)) == h);
        }
    }
}

TEST_CASE("reduction table is integral and fixes basis loops") {
    const auto& t = reduction_table(6);
    CHECK(t.rows() == 36);
    CHECK(t.cols() == 20);
    for (int k = 0; k < 20; ++k) {
        const auto [i, j] = basis_loop(6, k);
        CHECK(t.row(i * 6 + j).sum() == 1);
        CHECK(t(i * 6 + j, k) == 1);
    }
}
