#ifndef FERMAT_ITERATED_HPP
#define FERMAT_ITERATED_HPP

// Symbolic length-two iterated integrals on F(N) along words in the
// automorphism translates of gamma_0, exact over Q(zeta_N).

#include "fermat/cyclotomic.hpp"
#include "fermat/forms.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace fermat {

/// alpha^i beta^j gamma_0 (sign +1) or its inverse (sign -1).
struct Letter {
    int i = 0;
    int j = 0;
    int sign = 1;
    friend bool operator==(const Letter&, const Letter&) = default;
};

/// Product of letters traversed left to right.
struct PathWord {
    int n = 0;
    std::vector<Letter> letters;

    static PathWord empty(int n);
    static PathWord letter(int n, long long i, long long j, int sign = 1);
    /// gamma_0.
    static PathWord gamma0(int n) { return letter(n, 0, 0, 1); }
    /// alpha^i beta^j kappa_0 with kappa_0 = gamma_0 (beta gamma_0)^{-1} (alpha beta gamma_0) (alpha gamma_0)^{-1}.
    static PathWord kappa(int n, long long i = 0, long long j = 0);
    /// gamma_j = gamma_0 (beta^j gamma_0)^{-1}.
    static PathWord connector(int n, long long j);
    /// gamma_{i,j} = gamma_j (alpha^i beta^j kappa_0) gamma_j^{-1}, a loop at Q_0.
    static PathWord conjugated_loop(int n, long long i, long long j);

    PathWord inverse() const;
    PathWord translated(long long a, long long b) const;

    friend PathWord operator*(const PathWord& x, const PathWord& y);
};

/// A * x_{r,s,l,m} + B.
struct ItExpr {
    std::array<int, 4> x_index{};
    CycNum A;
    CycNum B;

    static ItExpr zero(const FormIdx& f1, const FormIdx& f2);

    /// Same value written in terms of x_{l,m,r,s} = 1 - x_{r,s,l,m}.
    ItExpr reversed_symbol() const;

    ItExpr& operator+=(const ItExpr& o);
    ItExpr& operator-=(const ItExpr& o);
    friend ItExpr operator+(ItExpr a, const ItExpr& b) { return a += b; }
    friend ItExpr operator-(ItExpr a, const ItExpr& b) { return a -= b; }
    friend ItExpr operator*(const CycNum& c, ItExpr e) {
        e.A = c * e.A;
        e.B = c * e.B;
        return e;
    }
    friend bool operator==(const ItExpr& a, const ItExpr& b) {
        return a.x_index == b.x_index && a.A == b.A && a.B == b.B;
    }
};

std::ostream& operator<<(std::ostream& os, const ItExpr& e);

/// Integral of omega_f along w.
CycNum single_integral(const PathWord& w, const FormIdx& f);

/// Integral of omega_{f1} omega_{f2} along w, derived by folding the
/// composition and inversion rules over the letters of w.
ItExpr iterated_integral(const PathWord& w, const FormIdx& f1, const FormIdx& f2);

/// Closed form over alpha^i beta^j kappa_0.
ItExpr closed_form_kappa(int n, long long i, long long j, const FormIdx& f1, const FormIdx& f2);

/// Closed form over the conjugated loop gamma_{i,j}.
ItExpr closed_form_gamma(int n, long long i, long long j, const FormIdx& f1, const FormIdx& f2);

/// sum_{t=0}^{N-1} zeta^{t k} * (integral over gamma_{i,t}).
ItExpr l_combination(int n, long long i, long long k, const FormIdx& f1, const FormIdx& f2);

}  // namespace fermat

#endif  // FERMAT_ITERATED_HPP
