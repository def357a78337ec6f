#ifndef FERMAT_CYCLOTOMIC_HPP
#define FERMAT_CYCLOTOMIC_HPP

#include "fermat/rational.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace fermat {

/// Q(zeta_N) data: the N-th cyclotomic polynomial and the reductions of
/// x^k, k = 0..N-1, in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
struct CyclotomicField {
    int n = 0;
    int degree = 0;               // phi(n)
    std::vector<BigInt> poly;     // monic, low to high, size degree + 1
    std::vector<Vec<Rational>> powers;
};

/// Cached per N; safe to call concurrently.
const CyclotomicField& cyclotomic_field(int n);

int euler_phi(int n);

/// Exact element of Q(zeta_N) in the power basis modulo the N-th cyclotomic
/// polynomial.
///
/// A default-constructed or rational-constructed CycNum carries n() == 0: it
/// is a rational constant not yet tied to a field and is promoted on first
/// contact with a field element. This keeps Eigen's Scalar(0)/Scalar(1)
/// idioms working for matrices of CycNum.
class CycNum {
public:
    CycNum() : coeffs_(Vec<Rational>::Zero(1)) {}
    CycNum(const Rational& c) : coeffs_(Vec<Rational>::Constant(1, c)) {}  // NOLINT: implicit by design of the scalar
    CycNum(long long c) : CycNum(Rational(c)) {}                          // NOLINT
    CycNum(int c) : CycNum(Rational(c)) {}                                // NOLINT

    /// Element with the given power-basis coefficients (length phi(n)).
    CycNum(int n, Vec<Rational> coeffs);

    /// zeta_n^power.
    static CycNum zeta(int n, long long power);

    int n() const { return n_; }
    const Vec<Rational>& coeffs() const { return coeffs_; }

    /// Same value viewed in Q(zeta_n). Throws if already bound to another field.
    CycNum in_field(int n) const;

    bool is_zero() const;
    /// All power-basis coefficients are integers, i.e. the element lies in Z[zeta_N].
    bool is_integral() const;
    bool is_rational() const;

    /// Complex conjugation zeta -> zeta^{-1}.
    CycNum conj() const;

    CycNum& operator+=(const CycNum& b);
    CycNum& operator-=(const CycNum& b);
    CycNum& operator*=(const CycNum& b);
    CycNum& operator/=(const CycNum& b);

    friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
    friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
    friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
    friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
    friend CycNum operator-(const CycNum& a);

    friend bool operator==(const CycNum& a, const CycNum& b);
    friend bool operator!=(const CycNum& a, const CycNum& b) { return !(a == b); }

private:
    void align(CycNum& b);  // bring both operands to a common field

    int n_ = 0;
    Vec<Rational> coeffs_;
};

inline bool is_zero(const CycNum& a) { return a.is_zero(); }

/// zeta_n^power.
inline CycNum cyc_make(int n, long long power) { return CycNum::zeta(n, power); }

std::ostream& operator<<(std::ostream& os, const CycNum& a);

/// Midpoint-radius complex enclosure.
struct ComplexInterval {
    std::complex<double> mid{0.0, 0.0};
    double rad = 0.0;

    bool contains(std::complex<double> z) const { return std::abs(z - mid) <= rad; }
    bool intersects(const ComplexInterval& o) const { return std::abs(o.mid - mid) <= rad + o.rad; }
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

/// Real midpoint-radius interval.
struct RealInterval {
    double mid = 0.0;
    double rad = 0.0;

    double lower() const { return mid - rad; }
    double upper() const { return mid + rad; }
    bool contains(double v) const { return std::abs(v - mid) <= rad; }
};

/// Numerical value at zeta = exp(2 pi i / N) with a conservative radius.
ComplexInterval embed(const CycNum& a);

/// Whether Z[zeta_n] is a lattice in C (n in {3, 4, 6}).
bool has_discrete_integers(int n);

/// Certified distance from v to the nearest point of Z[zeta_n], n in {3, 4, 6}.
RealInterval lattice_distance(const ComplexInterval& v, int n);

}  // namespace fermat

namespace Eigen {
template <>
struct NumTraits<fermat::CycNum> : GenericNumTraits<fermat::CycNum> {
    typedef fermat::CycNum Real;
    typedef fermat::CycNum NonInteger;
    typedef fermat::CycNum Nested;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 20,
        MulCost = 60
    };
};
}  // namespace Eigen

#endif  // FERMAT_CYCLOTOMIC_HPP
