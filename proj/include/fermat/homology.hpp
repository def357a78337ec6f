#ifndef FERMAT_HOMOLOGY_HPP
#define FERMAT_HOMOLOGY_HPP

// First integral homology of the Fermat curve F(N) as a quotient of the free
// module on the loops alpha^i beta^j kappa_0, (i, j) in (Z/N)^2.

#include "fermat/rational.hpp"

#include <Eigen/Core>

#include <utility>
#include <vector>

namespace fermat {

/// (N-1)(N-2)/2.
int genus(int n);

/// Size 2g = (N-1)(N-2) of the loop basis {alpha^i beta^j kappa_0 : i <= N-3, j <= N-2}.
inline int basis_size(int n) { return (n - 1) * (n - 2); }

/// Position of (i, j) in the lexicographic basis order; -1 if not a basis loop.
int basis_index(int n, int i, int j);

/// (i, j) of the k-th basis loop.
std::pair<int, int> basis_loop(int n, int k);

/// Sum of c_ij [alpha^i beta^j kappa_0]; coeffs(i, j) with indices mod N.
struct GroupRingClass {
    int n = 0;
    Mat<Rational> coeffs;

    static GroupRingClass zero(int n);
    static GroupRingClass loop(int n, long long i, long long j);

    /// Image under alpha^a beta^b.
    GroupRingClass translated(long long a, long long b) const;

    GroupRingClass& operator+=(const GroupRingClass& o);
    GroupRingClass& operator-=(const GroupRingClass& o);
    friend GroupRingClass operator+(GroupRingClass a, const GroupRingClass& b) { return a += b; }
    friend GroupRingClass operator-(GroupRingClass a, const GroupRingClass& b) { return a -= b; }
    friend GroupRingClass operator*(const Rational& c, GroupRingClass a) {
        a.coeffs *= c;
        return a;
    }
    friend bool operator==(const GroupRingClass& a, const GroupRingClass& b) {
        return a.n == b.n && equal_entries(a.coeffs, b.coeffs);
    }
};

/// Coordinates in the loop basis.
struct HomologyClass {
    int n = 0;
    Vec<Rational> basis_coeffs;

    friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
        return a.n == b.n && equal_entries(a.basis_coeffs, b.basis_coeffs);
    }
};

/// (kappa_0, alpha^i beta^j kappa_0).
int base_pairing(int n, long long i, long long j);

/// Bilinear, automorphism-invariant extension of base_pairing.
Rational intersection(const GroupRingClass& x, const GroupRingClass& y);

/// Row, column and diagonal norm relations (3N classes).
std::vector<GroupRingClass> relations(int n);

/// Rank over Q of the span of relations(n).
int relation_rank(int n);

/// For every (i, j) in (Z/N)^2, row i*N + j holds the integer basis
/// coordinates of alpha^i beta^j kappa_0. Cached; throws std::logic_error if
/// the relation span has the wrong rank or the reduction is not integral.
const Eigen::MatrixXi& reduction_table(int n);

HomologyClass reduce(const GroupRingClass& x);
GroupRingClass lift(const HomologyClass& h);

/// Reduce an arbitrary-scalar combination sum c(i, j) [alpha^i beta^j kappa_0]
/// to basis coordinates.
template <typename Scalar>
Vec<Scalar> reduce_coeffs(int n, const Mat<Scalar>& c) {
    const auto& t = reduction_table(n);
    Vec<Scalar> out(t.cols());
    for (Eigen::Index k = 0; k < out.size(); ++k) out(k) = Scalar(0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (is_zero(c(i, j))) continue;
            const auto row = t.row(i * n + j);
            for (Eigen::Index k = 0; k < row.size(); ++k)
                if (row(k) != 0) out(k) = out(k) + c(i, j) * Scalar(row(k));
        }
    return out;
}

/// Pairings of the basis loops, lexicographic (i, j) order.
Eigen::MatrixXi intersection_matrix(int n);

}  // namespace fermat

#endif  // FERMAT_HOMOLOGY_HPP
