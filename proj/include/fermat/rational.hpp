#ifndef FERMAT_RATIONAL_HPP
#define FERMAT_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Core>

#include <string>

namespace fermat {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

inline Rational make_rational(long long num, long long den = 1) { return Rational(num) / Rational(den); }

inline BigInt numer(const Rational& q) { return BigInt(boost::multiprecision::numerator(q)); }
inline BigInt denom(const Rational& q) { return BigInt(boost::multiprecision::denominator(q)); }

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const BigInt& z) { return z.is_zero(); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Entrywise equality (Eigen's operator== does not instantiate for these scalars).
template <typename A, typename B>
bool equal_entries(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            if (!(a(i, j) == b(i, j))) return false;
    return true;
}

// Euclidean remainder in [0, n).
inline int mod(long long a, int n) {
    const long long r = a % n;
    return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace fermat

#endif  // FERMAT_RATIONAL_HPP
