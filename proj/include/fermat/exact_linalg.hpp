#ifndef FERMAT_EXACT_LINALG_HPP
#define FERMAT_EXACT_LINALG_HPP

// Exact elimination over any field scalar (Rational, CycNum) stored in Eigen
// dense matrices, plus Smith normal form over the integers.

#include "fermat/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fermat {

template <typename Scalar>
struct Echelon {
    Mat<Scalar> matrix;                 // reduced row echelon form
    std::vector<Eigen::Index> pivots;   // pivot column of each nonzero row
    Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

/// Gauss-Jordan elimination. Columns are scanned left to right, so callers
/// control which variables become pivots by ordering the columns.
template <typename Scalar>
Echelon<Scalar> rref(Mat<Scalar> m) {
    Echelon<Scalar> out;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index sel = row;
        while (sel < m.rows() && is_zero(m(sel, col))) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) m.row(sel).swap(m.row(row));
        const Scalar piv = m(row, col);
        for (Eigen::Index k = col; k < m.cols(); ++k) m(row, k) = m(row, k) / piv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const Scalar f = m(r, col);
            for (Eigen::Index k = col; k < m.cols(); ++k) m(r, k) = m(r, k) - f * m(row, k);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.matrix = std::move(m);
    return out;
}

template <typename Scalar>
Eigen::Index rank(const Mat<Scalar>& m) {
    return rref<Scalar>(m).rank();
}

/// Unique solution of a square system a * x = b. Throws std::domain_error when
/// a is singular.
template <typename Scalar>
Vec<Scalar> solve_exact(const Mat<Scalar>& a, const Vec<Scalar>& b) {
    if (a.rows() != a.cols() || a.rows() != b.size())
        throw std::invalid_argument("solve_exact: dimension mismatch");
    const Eigen::Index n = a.rows();
    Mat<Scalar> aug(n, n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto e = rref<Scalar>(std::move(aug));
    if (e.rank() != n || e.pivots.back() != n - 1) throw std::domain_error("solve_exact: singular system");
    return e.matrix.col(n);
}

/// Least-squares-free solve of a consistent overdetermined system a * x = b.
/// Throws std::domain_error if a lacks full column rank or b is not in its span.
template <typename Scalar>
Vec<Scalar> solve_consistent(const Mat<Scalar>& a, const Vec<Scalar>& b) {
    const Eigen::Index n = a.cols();
    Mat<Scalar> aug(a.rows(), n + 1);
    aug.leftCols(n) = a;
    aug.col(n) = b;
    auto e = rref<Scalar>(std::move(aug));
    if (e.rank() != n) throw std::domain_error("solve_consistent: inconsistent or rank-deficient system");
    for (Eigen::Index k = 0; k < n; ++k)
        if (e.pivots[static_cast<std::size_t>(k)] != k)
            throw std::domain_error("solve_consistent: rank-deficient system");
    return e.matrix.col(n).head(n);
}

/// Elementary divisors (diagonal of the Smith normal form), nonzero ones only.
inline std::vector<BigInt> smith_divisors(Mat<BigInt> m) {
    using boost::multiprecision::abs;
    std::vector<BigInt> diag;
    Eigen::Index t = 0;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    while (t < rows && t < cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        Eigen::Index pr = -1, pc = -1;
        for (Eigen::Index i = t; i < rows; ++i)
            for (Eigen::Index j = t; j < cols; ++j)
                if (!m(i, j).is_zero() && (pr < 0 || abs(m(i, j)) < abs(m(pr, pc)))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        m.row(pr).swap(m.row(t));
        m.col(pc).swap(m.col(t));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (Eigen::Index i = t + 1; i < rows; ++i) {
                if (m(i, t).is_zero()) continue;
                const BigInt q = m(i, t) / m(t, t);
                for (Eigen::Index j = t; j < cols; ++j) m(i, j) -= q * m(t, j);
                if (!m(i, t).is_zero()) {
                    m.row(i).swap(m.row(t));
                    clean = false;
                }
            }
            for (Eigen::Index j = t + 1; j < cols; ++j) {
                if (m(t, j).is_zero()) continue;
                const BigInt q = m(t, j) / m(t, t);
                for (Eigen::Index i = t; i < rows; ++i) m(i, j) -= q * m(i, t);
                if (!m(t, j).is_zero()) {
                    m.col(j).swap(m.col(t));
                    clean = false;
                }
            }
            if (!clean) continue;
            // divisibility condition d_t | every remaining entry
            for (Eigen::Index i = t + 1; i < rows && clean; ++i)
                for (Eigen::Index j = t + 1; j < cols; ++j)
                    if (!(m(i, j) % m(t, t)).is_zero()) {
                        for (Eigen::Index k = t; k < cols; ++k) m(t, k) += m(i, k);
                        clean = false;
                        break;
                    }
        }
        diag.push_back(abs(m(t, t)));
        ++t;
    }
    return diag;
}

}  // namespace fermat

#endif  // FERMAT_EXACT_LINALG_HPP
