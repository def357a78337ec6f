#include "fermat/cyclotomic.hpp"

#include "fermat/exact_linalg.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace fermat {

namespace {

using Poly = std::vector<BigInt>;  // low to high

Poly poly_divide_exact(const Poly& num, const Poly& den) {
    // den is monic
    Poly rem = num;
    const std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, BigInt(0));
    for (std::size_t k = num.size(); k-- > dn;) {
        const BigInt c = rem[k];
        if (c.is_zero()) continue;
        q[k - dn] = c;
        for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= c * den[j];
    }
    for (std::size_t j = 0; j < dn; ++j)
        if (!rem[j].is_zero()) throw std::logic_error("cyclotomic: inexact polynomial division");
    return q;
}

Poly cyclotomic_poly(int n) {
    Poly p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = poly_divide_exact(p, cyclotomic_poly(d));
    return p;
}

std::unique_ptr<CyclotomicField> build_field(int n) {
    auto f = std::make_unique<CyclotomicField>();
    f->n = n;
    f->poly = cyclotomic_poly(n);
    f->degree = static_cast<int>(f->poly.size()) - 1;
    const int d = f->degree;
    // x^k reduced: shift the previous power and fold the top coefficient back.
    Vec<Rational> cur = Vec<Rational>::Zero(d);
    cur(0) = 1;
    for (int k = 0; k < n; ++k) {
        f->powers.push_back(cur);
        Vec<Rational> next = Vec<Rational>::Zero(d);
        for (int j = 0; j + 1 < d; ++j) next(j + 1) = cur(j);
        const Rational top = cur(d - 1);
        if (!top.is_zero())
            for (int j = 0; j < d; ++j) next(j) -= top * Rational(f->poly[static_cast<std::size_t>(j)]);
        cur = std::move(next);
    }
    return f;
}

void check_n(int n) {
    if (n < 3) throw std::invalid_argument("cyclotomic: degree n must be >= 3, got " + std::to_string(n));
}

}  // namespace

const CyclotomicField& cyclotomic_field(int n) {
    check_n(n);
    static std::mutex mu;
    static std::map<int, std::unique_ptr<CyclotomicField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) slot = build_field(n);
    return *slot;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

CycNum::CycNum(int n, Vec<Rational> coeffs) : n_(n), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != cyclotomic_field(n).degree)
        throw std::invalid_argument("CycNum: coefficient vector length must equal phi(n)");
}

CycNum CycNum::zeta(int n, long long power) {
    const auto& f = cyclotomic_field(n);
    return CycNum(n, f.powers[static_cast<std::size_t>(mod(power, n))]);
}

CycNum CycNum::in_field(int n) const {
    if (n_ == n) return *this;
    if (n_ != 0) throw std::invalid_argument("CycNum: mismatched cyclotomic fields");
    Vec<Rational> c = Vec<Rational>::Zero(cyclotomic_field(n).degree);
    c(0) = coeffs_(0);
    return CycNum(n, std::move(c));
}

bool CycNum::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool CycNum::is_integral() const {
    for (const auto& c : coeffs_)
        if (!fermat::is_integer(c)) return false;
    return true;
}

bool CycNum::is_rational() const {
    for (Eigen::Index k = 1; k < coeffs_.size(); ++k)
        if (!coeffs_(k).is_zero()) return false;
    return true;
}

CycNum CycNum::conj() const {
    if (n_ == 0) return *this;
    const auto& f = cyclotomic_field(n_);
    Vec<Rational> out = Vec<Rational>::Zero(f.degree);
    for (int k = 0; k < f.degree; ++k)
        if (!coeffs_(k).is_zero()) out += coeffs_(k) * f.powers[static_cast<std::size_t>(mod(-k, n_))];
    return CycNum(n_, std::move(out));
}

void CycNum::align(CycNum& b) {
    if (n_ == b.n_) return;
    if (n_ == 0) {
        *this = in_field(b.n_);
    } else {
        b = b.in_field(n_);
    }
}

CycNum& CycNum::operator+=(const CycNum& other) {
    CycNum b = other;
    align(b);
    coeffs_ += b.coeffs_;
    return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
    CycNum b = other;
    align(b);
    coeffs_ -= b.coeffs_;
    return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
    if (other.n_ == 0) {
        coeffs_ *= other.coeffs_(0);
        return *this;
    }
    if (n_ == 0) {
        const Rational c = coeffs_(0);
        *this = other;
        coeffs_ *= c;
        return *this;
    }
    if (n_ != other.n_) throw std::invalid_argument("CycNum: mismatched cyclotomic fields");
    const auto& f = cyclotomic_field(n_);
    const int d = f.degree;
    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (coeffs_(i).is_zero()) continue;
        for (int j = 0; j < d; ++j)
            if (!other.coeffs_(j).is_zero()) prod[static_cast<std::size_t>(i + j)] += coeffs_(i) * other.coeffs_(j);
    }
    for (int k = 2 * d - 2; k >= d; --k) {
        const Rational c = prod[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<std::size_t>(k - d + j)] -= c * Rational(f.poly[static_cast<std::size_t>(j)]);
    }
    for (int k = 0; k < d; ++k) coeffs_(k) = prod[static_cast<std::size_t>(k)];
    return *this;
}

CycNum& CycNum::operator/=(const CycNum& other) {
    if (other.is_zero()) throw std::domain_error("CycNum: division by zero");
    if (other.n_ == 0) {
        coeffs_ /= other.coeffs_(0);
        return *this;
    }
    CycNum a = *this;
    CycNum b = other;
    a.align(b);
    // Solve (multiplication-by-b matrix) * y = a over Q.
    const int d = cyclotomic_field(a.n_).degree;
    Mat<Rational> m(d, d);
    for (int k = 0; k < d; ++k) {
        Vec<Rational> e = Vec<Rational>::Zero(d);
        e(k) = 1;
        m.col(k) = (CycNum(a.n_, std::move(e)) * b).coeffs_;
    }
    *this = CycNum(a.n_, solve_exact<Rational>(m, a.coeffs_));
    return *this;
}

CycNum operator-(const CycNum& a) {
    CycNum r = a;
    r.coeffs_ = -r.coeffs_;
    return r;
}

bool operator==(const CycNum& a, const CycNum& b) {
    if (a.n_ == b.n_) return equal_entries(a.coeffs_, b.coeffs_);
    if (a.n_ != 0 && b.n_ != 0) return false;
    return (a - b).is_zero();
}

std::ostream& operator<<(std::ostream& os, const CycNum& a) {
    bool first = true;
    for (Eigen::Index k = 0; k < a.coeffs().size(); ++k) {
        const Rational& c = a.coeffs()(k);
        if (c.is_zero()) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        const Rational m = c < 0 ? Rational(-c) : c;
        if (k == 0 || m != 1) os << m;
        if (k > 0) os << "z" << (k > 1 ? "^" + std::to_string(k) : "");
        first = false;
    }
    if (first) os << "0";
    return os;
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    const auto m = a.mid + b.mid;
    return {m, a.rad + b.rad + 2 * std::numeric_limits<double>::epsilon() * std::abs(m)};
}

ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) {
    const auto m = a.mid - b.mid;
    return {m, a.rad + b.rad + 2 * std::numeric_limits<double>::epsilon() * std::abs(m)};
}

ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    const auto m = a.mid * b.mid;
    const double r = std::abs(a.mid) * b.rad + std::abs(b.mid) * a.rad + a.rad * b.rad +
                     4 * std::numeric_limits<double>::epsilon() * std::abs(m);
    return {m, r};
}

ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
    const double bm = std::abs(b.mid);
    if (bm <= b.rad) throw std::domain_error("ComplexInterval: divisor enclosure contains zero");
    const auto m = a.mid / b.mid;
    // |a/b - am/bm| <= (|am| rb / bm + ra) / (bm - rb)
    const double r = (std::abs(m) * b.rad + a.rad) / (bm - b.rad) +
                     4 * std::numeric_limits<double>::epsilon() * std::abs(m);
    return {m, r};
}

ComplexInterval embed(const CycNum& a) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const int n = a.n();
    const auto& c = a.coeffs();
    ComplexInterval out;
    double mag = 0.0;
    for (Eigen::Index k = 0; k < c.size(); ++k) {
        if (c(k).is_zero()) continue;
        const double ck = to_double(c(k));
        const bool exact = Rational(ck) == c(k);
        if (k == 0) {
            out.mid += ck;
            if (!exact) out.rad += std::abs(ck) * eps;
        } else {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / n;
            out.mid += ck * std::complex<double>(std::cos(theta), std::sin(theta));
            out.rad += std::abs(ck) * 4 * eps;
        }
        mag += std::abs(ck);
    }
    // accumulation error
    if (c.size() > 1) out.rad += mag * static_cast<double>(c.size() + 1) * eps;
    return out;
}

bool has_discrete_integers(int n) { return n == 3 || n == 4 || n == 6; }

RealInterval lattice_distance(const ComplexInterval& v, int n) {
    if (!has_discrete_integers(n))
        throw std::invalid_argument("lattice_distance: Z[zeta_" + std::to_string(n) + "] is not discrete in C");
    const double x = v.mid.real(), y = v.mid.imag();
    // coordinates (a, b) of v = a + b w in the lattice basis {1, w}
    std::complex<double> w;
    double a = 0.0, b = 0.0;
    if (n == 4) {
        w = {0.0, 1.0};
        a = x;
        b = y;
    } else {
        const double s3 = std::sqrt(3.0);
        b = 2.0 * y / s3;
        if (n == 6) {
            w = {0.5, s3 / 2};
            a = x - y / s3;
        } else {
            w = {-0.5, s3 / 2};
            a = x + y / s3;
        }
    }
    double best = std::numeric_limits<double>::infinity();
    const double fa = std::floor(a), fb = std::floor(b);
    for (int da = -1; da <= 2; ++da)
        for (int db = -1; db <= 2; ++db) {
            const auto p = std::complex<double>(fa + da, 0.0) + (fb + db) * w;
            best = std::min(best, std::abs(v.mid - p));
        }
    // distance is 1-Lipschitz in v
    const double rounding = 8 * std::numeric_limits<double>::epsilon() * (std::abs(v.mid) + 1.0);
    return {best, v.rad + rounding};
}

}  // namespace fermat
