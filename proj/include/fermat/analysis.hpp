#ifndef FERMAT_ANALYSIS_HPP
#define FERMAT_ANALYSIS_HPP

// Certified double-precision evaluation of Beta values, 3F2 at unit argument,
// simplex double integrals and the iterated-integral constants x_{r,s,l,m}.
// Every result is a midpoint with an absolute error bound.

#include "fermat/cyclotomic.hpp"
#include "fermat/rational.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fermat {

struct ToleranceUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// B(a, b) via log-Gamma; a, b > 0.
RealInterval beta(double a, double b);
/// B(r/n, s/n).
RealInterval beta_rational(int n, int r, int s);

/// 3F2(a1, a2, a3; b1, b2; 1).
struct HypParams {
    Rational a1, a2, a3, b1, b2;
    /// b1 + b2 - a1 - a2 - a3; the series converges at 1 iff positive.
    Rational sigma() const { return b1 + b2 - a1 - a2 - a3; }
};

struct HypResult {
    RealInterval value;
    double partial_sum = 0.0;  // sum of the first `terms` terms: a certified lower bound
    long terms = 0;
};

/// Adaptive: doubles the explicit term count from 64 until the enclosure
/// radius is at most tol. Throws std::domain_error when sigma <= 0 and
/// ToleranceUnreachable past max_terms.
HypResult hyp3f2_unit(const HypParams& p, double tol, long max_terms = 1L << 20);

/// Explicit sum of the first `terms` terms plus the accelerated tail.
HypResult hyp3f2_unit_cut(const HypParams& p, long terms);

/// Asymptotic expansion of ln Gamma(x + a) - ln Gamma(x + b) for large x.
double log_gamma_ratio_asymptotic(double x, double a, double b, int order = 12);

/// Gauss rule for the weight t^c on [0, 1], c > -1.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
QuadratureRule gauss_jacobi_01(int points, double c);

struct QuadResult {
    RealInterval value;
    int nodes = 0;
};

/// Integral of u^{a-1}(1-u)^{b-1} v^{p-1}(1-v)^{q-1} over 0 <= u <= v <= 1;
/// a, b, p, q > 0 and b <= 1.
QuadResult simplex_integral(double a, double b, double p, double q, double tol);

enum class XMethod { series, quadrature, both };

std::string to_string(XMethod m);
XMethod parse_xmethod(const std::string& s);

/// x_{r,s,l,m} = iterated integral of omega_{r,s} omega_{l,m} along gamma_0.
struct XValue {
    int n = 0, r = 0, s = 0, l = 0, m = 0;
    double mid = 0.0;
    double err = 0.0;
    XMethod method = XMethod::both;
    long terms_or_nodes = 0;
    std::optional<RealInterval> series;
    std::optional<RealInterval> quadrature;
    long series_terms = 0;
    int quadrature_nodes = 0;

    RealInterval interval() const { return {mid, err}; }
};

/// max_terms bounds the series budget.
XValue x_value(int n, int r, int s, int l, int m, double tol, XMethod method = XMethod::both,
              long max_terms = 1L << 20);

}  // namespace fermat

#endif  // FERMAT_ANALYSIS_HPP
