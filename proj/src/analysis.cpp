#include "fermat/analysis.hpp"

#include "fermat/forms.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace fermat {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// B_0 .. B_16 with B_1 = -1/2.
constexpr std::array<double, 17> kBernoulli{
    1.0,  -0.5, 1.0 / 6, 0.0, -1.0 / 30, 0.0, 1.0 / 42,          0.0, -1.0 / 30,
    0.0, 5.0 / 66, 0.0, -691.0 / 2730, 0.0, 7.0 / 6, 0.0, -3617.0 / 510};

double binomial(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double bernoulli_poly(int k, double h) {
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) acc += binomial(k, j) * kBernoulli[static_cast<std::size_t>(j)] * std::pow(h, k - j);
    return acc;
}

// Coefficient d_k of x^{-k} in sum_i ln Gamma(x + a_i) - sum_j ln Gamma(x + b_j).
double expansion_coeff(int k, const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double s = 0.0;
    for (double v : a) s += bernoulli_poly(k + 1, v);
    for (double v : b) s -= bernoulli_poly(k + 1, v);
    return ((k % 2) ? 1.0 : -1.0) * s / (k * (k + 1.0));
}

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": parameters must be positive");
}

}  // namespace

RealInterval beta(double a, double b) {
    require_positive(a, "beta");
    require_positive(b, "beta");
    const double la = std::lgamma(a), lb = std::lgamma(b), lab = std::lgamma(a + b);
    const double v = std::exp(la + lb - lab);
    const double log_err = 4 * kEps * (std::abs(la) + std::abs(lb) + std::abs(lab)) + 16 * kEps;
    return {v, v * std::expm1(log_err) + 2 * kEps * v};
}

RealInterval beta_rational(int n, int r, int s) {
    if (n <= 0 || r <= 0 || s <= 0) throw std::invalid_argument("beta_rational: arguments must be positive");
    return beta(static_cast<double>(r) / n, static_cast<double>(s) / n);
}

double log_gamma_ratio_asymptotic(double x, double a, double b, int order) {
    if (order < 1 || order > 15) throw std::invalid_argument("log_gamma_ratio_asymptotic: order out of range");
    double acc = (a - b) * std::log(x);
    double xp = 1.0;
    for (int k = 1; k <= order; ++k) {
        xp /= x;
        const double c = ((k % 2) ? 1.0 : -1.0) * (bernoulli_poly(k + 1, a) - bernoulli_poly(k + 1, b)) / (k * (k + 1.0));
        acc += c * xp;
    }
    return acc;
}

QuadratureRule gauss_jacobi_01(int points, double c) {
    if (points < 1) throw std::invalid_argument("gauss_jacobi_01: need at least one node");
    if (!(c > -1.0)) throw std::invalid_argument("gauss_jacobi_01: weight exponent must exceed -1");
    // Jacobi weight (1-x)^0 (1+x)^c on [-1, 1], monic recurrence (Golub-Welsch).
    const double al = 0.0, be = c;
    Eigen::VectorXd diag(points);
    Eigen::VectorXd sub(std::max(points - 1, 0));
    for (int k = 0; k < points; ++k) {
        const double ab = 2.0 * k + al + be;
        diag(k) = (k == 0) ? (be - al) / (al + be + 2.0) : (be * be - al * al) / (ab * (ab + 2.0));
    }
    for (int k = 1; k < points; ++k) {
        const double ab = 2.0 * k + al + be;
        const double bk = 4.0 * k * (k + al) * (k + be) * (k + al + be) / (ab * ab * (ab + 1.0) * (ab - 1.0));
        sub(k - 1) = std::sqrt(bk);
    }
    QuadratureRule rule;
    if (points == 1) {
        rule.nodes = {(1.0 + diag(0)) / 2.0};
        rule.weights = {1.0 / (c + 1.0)};
        return rule;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (es.info() != Eigen::Success) throw std::runtime_error("gauss_jacobi_01: eigen solver failed");
    for (int k = 0; k < points; ++k) {
        rule.nodes.push_back((1.0 + es.eigenvalues()(k)) / 2.0);
        const double v0 = es.eigenvectors()(0, k);
        rule.weights.push_back(v0 * v0 / (c + 1.0));
    }
    return rule;
}

HypResult hyp3f2_unit_cut(const HypParams& p, long terms) {
    for (const Rational* v : {&p.a1, &p.a2, &p.a3})
        if (v->is_zero()) return {{1.0, 0.0}, 1.0, 1};
    const std::array<double, 3> a{to_double(p.a1), to_double(p.a2), to_double(p.a3)};
    const std::array<double, 3> b{to_double(p.b1), to_double(p.b2), 1.0};
    for (double v : a) require_positive(v, "hyp3f2_unit");
    for (double v : b) require_positive(v, "hyp3f2_unit");
    if (p.sigma() <= 0) throw std::domain_error("hyp3f2_unit: series diverges at 1 (sigma <= 0)");
    const double sigma = to_double(p.sigma());
    double biggest = 0.0;
    for (double v : a) biggest = std::max(biggest, v);
    for (double v : b) biggest = std::max(biggest, v);
    if (terms < 16 || static_cast<double>(terms) < 8.0 * biggest)
        throw std::invalid_argument("hyp3f2_unit_cut: term count too small for the asymptotic tail");

    // explicit part
    double t = 1.0, partial = 0.0;
    for (long n = 0; n < terms; ++n) {
        partial += t;
        const double x = static_cast<double>(n);
        t *= (x + a[0]) * (x + a[1]) * (x + a[2]) / ((x + b[0]) * (x + b[1]) * (x + b[2]));
    }
    const double M = static_cast<double>(terms);
    const double partial_rad = partial * 10.0 * (M + 1.0) * kEps;

    // tail: g(x) = t_M exp(L(x) - L(M)), L(x) = -(1+sigma) ln x + sum_k d_k x^{-k}
    constexpr int K = 12;
    std::array<double, K + 2> d{};
    for (int k = 1; k <= K + 1; ++k) d[static_cast<std::size_t>(k)] = expansion_coeff(k, a, b);
    const double truncation = 4.0 * std::abs(d[K + 1]) * std::pow(M, -(K + 1));

    constexpr int kDer = 5;
    std::array<double, kDer + 1> ld{};  // L^{(m)}(M)
    for (int m = 1; m <= kDer; ++m) {
        double fact = 1.0;
        for (int i = 1; i < m; ++i) fact *= i;
        double v = -(1.0 + sigma) * ((m % 2) ? 1.0 : -1.0) * fact / std::pow(M, m);
        for (int k = 1; k <= K; ++k) {
            double rising = 1.0;
            for (int i = 0; i < m; ++i) rising *= (k + i);
            v += d[static_cast<std::size_t>(k)] * ((m % 2) ? -1.0 : 1.0) * rising * std::pow(M, -(k + m));
        }
        ld[static_cast<std::size_t>(m)] = v;
    }
    std::array<double, kDer + 1> gd{};  // g^{(j)}(M)
    gd[0] = t;
    for (int j = 1; j <= kDer; ++j) {
        double v = 0.0;
        for (int i = 0; i < j; ++i) v += binomial(j - 1, i) * gd[static_cast<std::size_t>(i)] * ld[static_cast<std::size_t>(j - i)];
        gd[static_cast<std::size_t>(j)] = v;
    }

    // integral of g over [M, inf): x = M/u gives M t_M u^{sigma-1} exp(E(u))
    auto tail_integral = [&](int pts) {
        const auto rule = gauss_jacobi_01(pts, sigma - 1.0);
        double acc = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            double e = 0.0, mk = 1.0, uk = 1.0;
            for (int k = 1; k <= K; ++k) {
                mk /= M;
                uk *= u;
                e += d[static_cast<std::size_t>(k)] * mk * (uk - 1.0);
            }
            acc += rule.weights[i] * std::exp(e);
        }
        return M * t * acc;
    };
    const double i1 = tail_integral(16), i2 = tail_integral(32);
    const double quad_err = 10.0 * std::abs(i2 - i1) + 64.0 * kEps * std::abs(i2);

    const double tail = i2 + t / 2.0 - gd[1] / 12.0 + gd[3] / 720.0 - gd[5] / 30240.0;
    // |R_3| <= 2 zeta(6) / (2 pi)^6 * |g^{(5)}(M)| when g^{(6)} keeps one sign on [M, inf)
    const double em_rem = 2.0 * 1.0173430619844491 / std::pow(2.0 * std::numbers::pi, 6) * std::abs(gd[5]);
    const double tail_err = em_rem + quad_err + std::abs(tail) * (truncation + 10.0 * (M + 1.0) * kEps);

    HypResult out;
    out.partial_sum = partial;
    out.terms = terms;
    out.value.mid = partial + tail;
    out.value.rad = partial_rad + tail_err + 4.0 * kEps * std::abs(out.value.mid);
    return out;
}

HypResult hyp3f2_unit(const HypParams& p, double tol, long max_terms) {
    if (!(tol > 0.0)) throw std::invalid_argument("hyp3f2_unit: tolerance must be positive");
    for (const Rational* v : {&p.a1, &p.a2, &p.a3})
        if (v->is_zero()) return {{1.0, 0.0}, 1.0, 1};
    if (p.sigma() <= 0) throw std::domain_error("hyp3f2_unit: series diverges at 1 (sigma <= 0)");
    double biggest = 1.0;
    for (const Rational* v : {&p.a1, &p.a2, &p.a3, &p.b1, &p.b2}) biggest = std::max(biggest, to_double(*v));
    long m = std::max(64L, static_cast<long>(std::ceil(8.0 * biggest)) + 16);
    for (; m <= max_terms; m *= 2) {
        auto r = hyp3f2_unit_cut(p, m);
        if (r.value.rad <= tol) return r;
    }
    throw ToleranceUnreachable("hyp3f2_unit: tolerance " + std::to_string(tol) + " not reached within " +
                               std::to_string(max_terms) + " terms");
}

namespace {

// sum_n (c)_n / n! * z^n / (d + n), |z| <= 1/2, 0 <= c-ish; converges geometrically.
double incomplete_beta_series(double c, double d, double z) {
    double coeff = 1.0, zp = 1.0, acc = 0.0;
    for (int n = 0; n < 4000; ++n) {
        const double term = coeff * zp / (d + n);
        acc += term;
        if (n > 4 && std::abs(term) <= 1e-18 * std::abs(acc)) break;
        coeff *= (c + n) / (n + 1.0);
        zp *= z;
    }
    return acc;
}

}  // namespace

QuadResult simplex_integral(double a, double b, double p, double q, double tol) {
    for (double v : {a, b, p, q}) require_positive(v, "simplex_integral");
    if (b > 1.0) throw std::invalid_argument("simplex_integral: requires b <= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("simplex_integral: tolerance must be positive");
    const RealInterval bab = beta(a, b);
    constexpr double h = 0.5;

    // [0, 1/2]: inner integral = v^a * F(v); [1/2, 1]: inner = B(a,b) - w^b G(w), w = 1 - v.
    struct Pieces {
        double total, scale, p2;
    };
    auto evaluate = [&](int pts) {
        const auto r1 = gauss_jacobi_01(pts, a + p - 1.0);
        const auto r2 = gauss_jacobi_01(pts, q - 1.0);
        const auto r3 = gauss_jacobi_01(pts, q + b - 1.0);
        double p1 = 0.0, p2 = 0.0, p3 = 0.0;
        for (int k = 0; k < pts; ++k) {
            const auto i = static_cast<std::size_t>(k);
            const double v1 = h * r1.nodes[i];
            p1 += r1.weights[i] * std::pow(1.0 - v1, q - 1.0) * incomplete_beta_series(1.0 - b, a, v1);
            const double w2 = h * r2.nodes[i];
            p2 += r2.weights[i] * std::pow(1.0 - w2, p - 1.0);
            const double w3 = h * r3.nodes[i];
            p3 += r3.weights[i] * std::pow(1.0 - w3, p - 1.0) * incomplete_beta_series(1.0 - a, b, w3);
        }
        p1 *= std::pow(h, a + p);
        p2 *= std::pow(h, q);
        p3 *= std::pow(h, q + b);
        return Pieces{p1 + bab.mid * p2 - p3, std::abs(p1) + std::abs(bab.mid * p2) + std::abs(p3), p2};
    };
    for (int pts = 16; pts <= 512; pts *= 2) {
        const auto coarse = evaluate(pts);
        const auto fine = evaluate(2 * pts);
        const double rad = 10.0 * std::abs(fine.total - coarse.total) + bab.rad * std::abs(fine.p2) +
                           256.0 * kEps * fine.scale;
        if (rad <= tol) return {{fine.total, rad}, 2 * pts};
    }
    throw ToleranceUnreachable("simplex_integral: tolerance " + std::to_string(tol) + " not reached");
}

std::string to_string(XMethod m) {
    switch (m) {
        case XMethod::series: return "series";
        case XMethod::quadrature: return "quadrature";
        case XMethod::both: return "both";
    }
    return "both";
}

XMethod parse_xmethod(const std::string& s) {
    if (s == "series") return XMethod::series;
    if (s == "quadrature") return XMethod::quadrature;
    if (s == "both") return XMethod::both;
    throw std::invalid_argument("unknown x method '" + s + "' (expected series|quadrature|both)");
}

namespace {

RealInterval mul(const RealInterval& x, const RealInterval& y) {
    const double m = x.mid * y.mid;
    return {m, std::abs(x.mid) * y.rad + std::abs(y.mid) * x.rad + x.rad * y.rad + 2 * kEps * std::abs(m)};
}

RealInterval div(const RealInterval& x, const RealInterval& y) {
    if (std::abs(y.mid) <= y.rad) throw std::domain_error("interval division by an enclosure of zero");
    const double m = x.mid / y.mid;
    return {m, (std::abs(m) * y.rad + x.rad) / (std::abs(y.mid) - y.rad) + 2 * kEps * std::abs(m)};
}

}  // namespace

XValue x_value(int n, int r, int s, int l, int m, double tol, XMethod method, long max_terms) {
    FormIdx::make(n, r, s);
    FormIdx::make(n, l, m);
    if (!(tol > 0.0)) throw std::invalid_argument("x_value: tolerance must be positive");
    XValue out;
    out.n = n, out.r = r, out.s = s, out.l = l, out.m = m;
    out.method = method;
    const RealInterval b1 = beta_rational(n, r, s), b2 = beta_rational(n, l, m);
    const RealInterval denom = mul(b1, b2);

    if (method != XMethod::quadrature) {
        const RealInterval pre = div(mul({static_cast<double>(n) / r, 0.0}, beta_rational(n, r + l, m)), denom);
        const HypParams hp{make_rational(r, n), 1 - make_rational(s, n), make_rational(r + l, n),
                           1 + make_rational(r, n), make_rational(r + l + m, n)};
        const auto h = hyp3f2_unit(hp, tol / (4.0 * std::max(1.0, pre.mid)), max_terms);
        out.series = mul(pre, h.value);
        out.series_terms = h.terms;
    }
    if (method != XMethod::series) {
        const double a = static_cast<double>(r) / n, b = static_cast<double>(s) / n;
        const double p = static_cast<double>(l) / n, q = static_cast<double>(m) / n;
        const auto qr = simplex_integral(a, b, p, q, tol * denom.mid / 4.0);
        out.quadrature = div(qr.value, denom);
        out.quadrature_nodes = qr.nodes;
    }

    RealInterval v;
    if (method == XMethod::series) {
        v = *out.series;
        out.terms_or_nodes = out.series_terms;
    } else if (method == XMethod::quadrature) {
        v = *out.quadrature;
        out.terms_or_nodes = out.quadrature_nodes;
    } else {
        const auto& s1 = *out.series;
        const auto& q1 = *out.quadrature;
        if (std::abs(s1.mid - q1.mid) > s1.rad + q1.rad)
            throw std::logic_error("x_value: series and quadrature enclosures are disjoint");
        const double lo = std::max(s1.lower(), q1.lower()), hi = std::min(s1.upper(), q1.upper());
        v = {(lo + hi) / 2.0, (hi - lo) / 2.0};
        out.terms_or_nodes = out.series_terms;
    }
    out.mid = v.mid;
    out.err = std::max(v.rad, 4 * kEps * std::abs(v.mid));
    if (out.err > tol)
        throw ToleranceUnreachable("x_value: certified error " + std::to_string(out.err) + " exceeds tolerance " +
                                   std::to_string(tol));
    return out;
}

}  // namespace fermat
