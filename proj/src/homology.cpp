#include "fermat/homology.hpp"

#include "fermat/exact_linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

namespace fermat {

namespace {

void check_n(int n) {
    if (n < 3) throw std::invalid_argument("homology: degree n must be >= 3, got " + std::to_string(n));
}

void check_same(const GroupRingClass& x, const GroupRingClass& y) {
    if (x.n != y.n) throw std::invalid_argument("homology: mismatched degrees");
}

// Nonzero values of (kappa_0, alpha^i beta^j kappa_0).
struct Offset {
    int di, dj, value;
};
constexpr std::array<Offset, 6> kNeighbours{{
    {1, 0, 1}, {0, 1, 1}, {1, 1, -1},
    {-1, 0, -1}, {0, -1, -1}, {-1, -1, 1}  // antisymmetric images
}};

Eigen::MatrixXi build_reduction_table(int n) {
    const int cells = n * n;
    const int g2 = basis_size(n);
    const int nonbasis = cells - g2;
    // column order: non-basis cells first, then the basis in lexicographic order
    std::vector<int> column_of(static_cast<std::size_t>(cells));
    std::vector<int> cell_of_column(static_cast<std::size_t>(cells));
    int next_nb = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int b = basis_index(n, i, j);
            const int col = b >= 0 ? nonbasis + b : next_nb++;
            column_of[static_cast<std::size_t>(i * n + j)] = col;
            cell_of_column[static_cast<std::size_t>(col)] = i * n + j;
        }

    const auto rels = relations(n);
    Mat<Rational> m = Mat<Rational>::Zero(static_cast<Eigen::Index>(rels.size()), cells);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(static_cast<Eigen::Index>(r), column_of[static_cast<std::size_t>(i * n + j)]) = rels[r].coeffs(i, j);

    const auto e = rref<Rational>(std::move(m));
    if (e.rank() != 3 * n - 2)
        throw std::logic_error("homology: relation span has rank " + std::to_string(e.rank()) + ", expected " +
                               std::to_string(3 * n - 2));
    for (int r = 0; r < nonbasis; ++r)
        if (e.pivots[static_cast<std::size_t>(r)] != r)
            throw std::logic_error("homology: relations do not eliminate every non-basis loop");

    Eigen::MatrixXi table = Eigen::MatrixXi::Zero(cells, g2);
    for (int b = 0; b < g2; ++b) {
        const auto [i, j] = basis_loop(n, b);
        table(i * n + j, b) = 1;
    }
    for (int r = 0; r < nonbasis; ++r) {
        const int cell = cell_of_column[static_cast<std::size_t>(r)];
        for (int b = 0; b < g2; ++b) {
            const Rational c = -e.matrix(r, nonbasis + b);
            if (!is_integer(c)) throw std::logic_error("homology: non-integral reduction of a loop class");
            table(cell, b) = c.convert_to<int>();
        }
    }
    return table;
}

}  // namespace

int genus(int n) {
    check_n(n);
    return (n - 1) * (n - 2) / 2;
}

int basis_index(int n, int i, int j) {
    if (i < 0 || i > n - 3 || j < 0 || j > n - 2) return -1;
    return i * (n - 1) + j;
}

std::pair<int, int> basis_loop(int n, int k) {
    if (k < 0 || k >= basis_size(n)) throw std::out_of_range("basis_loop: index out of range");
    return {k / (n - 1), k % (n - 1)};
}

GroupRingClass GroupRingClass::zero(int n) {
    check_n(n);
    return {n, Mat<Rational>::Zero(n, n)};
}

GroupRingClass GroupRingClass::loop(int n, long long i, long long j) {
    auto x = zero(n);
    x.coeffs(mod(i, n), mod(j, n)) = 1;
    return x;
}

GroupRingClass GroupRingClass::translated(long long a, long long b) const {
    auto out = zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.coeffs(mod(i + a, n), mod(j + b, n)) = coeffs(i, j);
    return out;
}

GroupRingClass& GroupRingClass::operator+=(const GroupRingClass& o) {
    check_same(*this, o);
    coeffs += o.coeffs;
    return *this;
}

GroupRingClass& GroupRingClass::operator-=(const GroupRingClass& o) {
    check_same(*this, o);
    coeffs -= o.coeffs;
    return *this;
}

int base_pairing(int n, long long i, long long j) {
    const int a = mod(i, n), b = mod(j, n);
    for (const auto& o : kNeighbours)
        if (mod(o.di, n) == a && mod(o.dj, n) == b) return o.value;
    return 0;
}

Rational intersection(const GroupRingClass& x, const GroupRingClass& y) {
    check_same(x, y);
    const int n = x.n;
    Rational acc = 0;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (x.coeffs(a, b).is_zero()) continue;
            for (const auto& o : kNeighbours) {
                const Rational& d = y.coeffs(mod(a + o.di, n), mod(b + o.dj, n));
                if (!d.is_zero()) acc += x.coeffs(a, b) * d * o.value;
            }
        }
    return acc;
}

std::vector<GroupRingClass> relations(int n) {
    check_n(n);
    std::vector<GroupRingClass> out;
    for (int j = 0; j < n; ++j) {
        auto r = GroupRingClass::zero(n);
        for (int i = 0; i < n; ++i) r.coeffs(i, j) = 1;
        out.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
        auto r = GroupRingClass::zero(n);
        for (int j = 0; j < n; ++j) r.coeffs(i, j) = 1;
        out.push_back(std::move(r));
    }
    for (int d = 0; d < n; ++d) {
        auto r = GroupRingClass::zero(n);
        for (int k = 0; k < n; ++k) r.coeffs(mod(d + k, n), k) = 1;
        out.push_back(std::move(r));
    }
    return out;
}

int relation_rank(int n) {
    const auto rels = relations(n);
    Mat<Rational> m(static_cast<Eigen::Index>(rels.size()), n * n);
    for (std::size_t r = 0; r < rels.size(); ++r)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(static_cast<Eigen::Index>(r), i * n + j) = rels[r].coeffs(i, j);
    return static_cast<int>(rank<Rational>(m));
}

const Eigen::MatrixXi& reduction_table(int n) {
    check_n(n);
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Eigen::MatrixXi>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<Eigen::MatrixXi>(build_reduction_table(n));
    return *slot;
}

HomologyClass reduce(const GroupRingClass& x) {
    return {x.n, reduce_coeffs<Rational>(x.n, x.coeffs)};
}

GroupRingClass lift(const HomologyClass& h) {
    if (h.basis_coeffs.size() != basis_size(h.n)) throw std::invalid_argument("lift: wrong coordinate count");
    auto x = GroupRingClass::zero(h.n);
    for (int k = 0; k < basis_size(h.n); ++k) {
        const auto [i, j] = basis_loop(h.n, k);
        x.coeffs(i, j) = h.basis_coeffs(k);
    }
    return x;
}

Eigen::MatrixXi intersection_matrix(int n) {
    check_n(n);
    const int g2 = basis_size(n);
    Eigen::MatrixXi m(g2, g2);
    for (int a = 0; a < g2; ++a)
        for (int c = 0; c < g2; ++c) {
            const auto [i1, j1] = basis_loop(n, a);
            const auto [i2, j2] = basis_loop(n, c);
            m(a, c) = base_pairing(n, i2 - i1, j2 - j1);
        }
    return m;
}

}  // namespace fermat
