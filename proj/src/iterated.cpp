#include "fermat/iterated.hpp"

#include <ostream>
#include <stdexcept>

namespace fermat {

namespace {

void check_forms(int n, const FormIdx& f1, const FormIdx& f2) {
    FormIdx::make(f1.n, f1.r, f1.s);
    FormIdx::make(f2.n, f2.r, f2.s);
    if (f1.n != n || f2.n != n) throw std::invalid_argument("iterated integral: mismatched degrees");
}

CycNum z(int n, long long k) { return CycNum::zeta(n, k); }

CycNum one_minus(int n, long long k) { return CycNum(1) - z(n, k); }

}  // namespace

PathWord PathWord::empty(int n) {
    if (n < 3) throw std::invalid_argument("PathWord: degree must be >= 3");
    return {n, {}};
}

PathWord PathWord::letter(int n, long long i, long long j, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("PathWord: letter sign must be +1 or -1");
    auto w = empty(n);
    w.letters.push_back({mod(i, n), mod(j, n), sign});
    return w;
}

PathWord PathWord::kappa(int n, long long i, long long j) {
    PathWord w = letter(n, 0, 0, 1) * letter(n, 0, 1, -1) * letter(n, 1, 1, 1) * letter(n, 1, 0, -1);
    return w.translated(i, j);
}

PathWord PathWord::connector(int n, long long j) { return letter(n, 0, 0, 1) * letter(n, 0, j, -1); }

PathWord PathWord::conjugated_loop(int n, long long i, long long j) {
    const PathWord c = connector(n, j);
    return c * kappa(n, i, j) * c.inverse();
}

PathWord PathWord::inverse() const {
    PathWord w{n, {}};
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back({it->i, it->j, -it->sign});
    return w;
}

PathWord PathWord::translated(long long a, long long b) const {
    PathWord w{n, {}};
    for (const auto& l : letters) w.letters.push_back({mod(l.i + a, n), mod(l.j + b, n), l.sign});
    return w;
}

PathWord operator*(const PathWord& x, const PathWord& y) {
    if (x.n != y.n) throw std::invalid_argument("PathWord: mismatched degrees");
    PathWord w = x;
    w.letters.insert(w.letters.end(), y.letters.begin(), y.letters.end());
    return w;
}

ItExpr ItExpr::zero(const FormIdx& f1, const FormIdx& f2) {
    return {{f1.r, f1.s, f2.r, f2.s}, CycNum(0).in_field(f1.n), CycNum(0).in_field(f1.n)};
}

ItExpr ItExpr::reversed_symbol() const {
    return {{x_index[2], x_index[3], x_index[0], x_index[1]}, -A, A + B};
}

ItExpr& ItExpr::operator+=(const ItExpr& o) {
    if (x_index != o.x_index) throw std::invalid_argument("ItExpr: different transcendental symbols");
    A += o.A;
    B += o.B;
    return *this;
}

ItExpr& ItExpr::operator-=(const ItExpr& o) {
    if (x_index != o.x_index) throw std::invalid_argument("ItExpr: different transcendental symbols");
    A -= o.A;
    B -= o.B;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const ItExpr& e) {
    return os << "(" << e.A << ")*x_{" << e.x_index[0] << "," << e.x_index[1] << "," << e.x_index[2] << ","
              << e.x_index[3] << "} + (" << e.B << ")";
}

CycNum single_integral(const PathWord& w, const FormIdx& f) {
    FormIdx::make(f.n, f.r, f.s);
    if (w.n != f.n) throw std::invalid_argument("single_integral: mismatched degrees");
    CycNum acc = CycNum(0).in_field(w.n);
    for (const auto& l : w.letters) {
        const CycNum v = z(w.n, static_cast<long long>(l.i) * f.r + static_cast<long long>(l.j) * f.s);
        acc += l.sign > 0 ? v : -v;
    }
    return acc;
}

ItExpr iterated_integral(const PathWord& w, const FormIdx& f1, const FormIdx& f2) {
    check_forms(w.n, f1, f2);
    const int n = w.n;
    ItExpr acc = ItExpr::zero(f1, f2);
    CycNum s1 = CycNum(0).in_field(n), s2 = s1;  // single integrals of the prefix
    for (const auto& l : w.letters) {
        // translate rule: integrals along alpha^i beta^j gamma_0
        const CycNum p1 = z(n, static_cast<long long>(l.i) * f1.r + static_cast<long long>(l.j) * f1.s);
        const CycNum p2 = z(n, static_cast<long long>(l.i) * f2.r + static_cast<long long>(l.j) * f2.s);
        ItExpr piece = ItExpr::zero(f1, f2);
        CycNum q1 = p1, q2 = p2;
        if (l.sign > 0) {
            piece.A = p1 * p2;
        } else {
            // inversion rule: -int_l w1 w2 + int_l w1 * int_l w2
            piece.A = -(p1 * p2);
            piece.B = p1 * p2;
            q1 = -p1;
            q2 = -p2;
        }
        // composition rule
        acc += piece;
        acc.B += s1 * q2;
        s1 += q1;
        s2 += q2;
    }
    return acc;
}

ItExpr closed_form_kappa(int n, long long i, long long j, const FormIdx& f1, const FormIdx& f2) {
    check_forms(n, f1, f2);
    const long long r = f1.r, s = f1.s, l = f2.r, m = f2.s;
    const CycNum pre = z(n, i * (r + l) + j * (s + m));
    ItExpr e = ItExpr::zero(f1, f2);
    e.A = pre * one_minus(n, r + l) * one_minus(n, s + m);
    e.B = pre * one_minus(n, s) * (z(n, r + l) + z(n, l + m) - z(n, m) - z(n, l));
    return e;
}

ItExpr closed_form_gamma(int n, long long i, long long j, const FormIdx& f1, const FormIdx& f2) {
    ItExpr e = closed_form_kappa(n, i, j, f1, f2);
    const long long r = f1.r, s = f1.s, l = f2.r, m = f2.s;
    e.B += one_minus(n, j * s) * one_minus(n, l) * one_minus(n, m) * z(n, i * l + j * m);
    e.B -= one_minus(n, j * m) * one_minus(n, r) * one_minus(n, s) * z(n, i * r + j * s);
    return e;
}

ItExpr l_combination(int n, long long i, long long k, const FormIdx& f1, const FormIdx& f2) {
    ItExpr acc = ItExpr::zero(f1, f2);
    for (int t = 0; t < n; ++t) acc += z(n, t * k) * closed_form_gamma(n, i, t, f1, f2);
    return acc;
}

}  // namespace fermat
