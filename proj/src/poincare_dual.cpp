#include "fermat/poincare_dual.hpp"

#include "fermat/exact_linalg.hpp"
#include "fermat/homology.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace fermat {

namespace {

Mat<CycNum> to_cyc(const Eigen::MatrixXi& m, int n) {
    Mat<CycNum> out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = CycNum(m(i, j)).in_field(n);
    return out;
}

DualVector solve_dual(const FormIdx& f) {
    const int n = f.n;
    const Mat<CycNum> mt = to_cyc(intersection_matrix(n).transpose(), n);
    return {f, solve_exact<CycNum>(mt, period_vector(f))};
}

}  // namespace

Vec<CycNum> period_vector(const FormIdx& f) {
    FormIdx::make(f.n, f.r, f.s);
    const int n = f.n;
    const CycNum base = (CycNum(1) - CycNum::zeta(n, f.r)) * (CycNum(1) - CycNum::zeta(n, f.s));
    Vec<CycNum> p(basis_size(n));
    for (int k = 0; k < basis_size(n); ++k) {
        const auto [i, j] = basis_loop(n, k);
        p(k) = base * CycNum::zeta(n, static_cast<long long>(i) * f.r + static_cast<long long>(j) * f.s);
    }
    return p;
}

const DualVector& poincare_dual(const FormIdx& f) {
    FormIdx::make(f.n, f.r, f.s);
    static std::mutex mu;
    static std::map<FormIdx, std::unique_ptr<DualVector>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(f);
        if (it != cache.end()) return *it->second;
    }
    auto solved = std::make_unique<DualVector>(solve_dual(f));
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[f];
    if (!slot) slot = std::move(solved);
    return *slot;
}

Vec<CycNum> pair_with_basis(int n, const Vec<CycNum>& v) {
    const Eigen::MatrixXi m = intersection_matrix(n);
    Vec<CycNum> out(m.cols());
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
        CycNum acc = CycNum(0).in_field(n);
        for (Eigen::Index a = 0; a < m.rows(); ++a)
            if (m(a, c) != 0) acc += CycNum(m(a, c)) * v(a);
        out(c) = acc;
    }
    return out;
}

Vec<CycNum> pushforward(int n, const Vec<CycNum>& v, Automorphism g) {
    Mat<CycNum> cells(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) cells(i, j) = CycNum(0);
    const int di = g == Automorphism::alpha ? 1 : 0;
    const int dj = g == Automorphism::beta ? 1 : 0;
    for (int k = 0; k < basis_size(n); ++k) {
        const auto [i, j] = basis_loop(n, k);
        cells(mod(i + di, n), mod(j + dj, n)) += v(k);
    }
    return reduce_coeffs<CycNum>(n, cells);
}

bool equivariance_check(const FormIdx& f, Automorphism g) {
    const auto& dual = poincare_dual(f);
    const int n = f.n;
    const CycNum eigen = CycNum::zeta(n, g == Automorphism::alpha ? -f.r : -f.s);
    const Vec<CycNum> pushed = pushforward(n, dual.coeffs, g);
    for (Eigen::Index k = 0; k < pushed.size(); ++k)
        if (pushed(k) != eigen * dual.coeffs(k)) return false;
    return true;
}

Vec<CycNum> l_class(int n, int i, int k) {
    Mat<CycNum> cells(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) cells(a, b) = CycNum(0);
    for (int t = 0; t < n; ++t) cells(mod(i, n), t) = CycNum::zeta(n, static_cast<long long>(t) * k);
    return reduce_coeffs<CycNum>(n, cells);
}

Vec<CycNum> l_presentation(const FormIdx& f) {
    const auto& dual = poincare_dual(f);
    const int n = f.n;
    Mat<CycNum> a(basis_size(n), n - 2);
    for (int i = 0; i < n - 2; ++i) a.col(i) = l_class(n, i, f.s);
    return solve_consistent<CycNum>(a, dual.coeffs);
}

}  // namespace fermat
