#include "fermat/selftest.hpp"

#include "fermat/analysis.hpp"
#include "fermat/exact_linalg.hpp"
#include "fermat/harmonic_volume.hpp"
#include "fermat/homology.hpp"
#include "fermat/iterated.hpp"
#include "fermat/poincare_dual.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <sstream>

namespace fermat {

namespace {

CycNum z6(long long k) { return CycNum::zeta(6, k); }

CycNum lin(long long a, long long b, long long den) {  // (a + b zeta_6) / den
    return (CycNum(a) + CycNum(b) * z6(1)) / CycNum(den);
}

const FormIdx w11{6, 1, 1}, w12{6, 1, 2}, w13{6, 1, 3};

// Expected doubled expression for w12 (x) w13 (x) w11: (6/61)((42 - 3z) x - 95 + 46z).
ItExpr reference_expression() {
    ItExpr e = ItExpr::zero(w12, w13);
    e.A = CycNum(make_rational(6, 61)) * lin(42, -3, 1);
    e.B = CycNum(make_rational(6, 61)) * lin(-95, 46, 1);
    return e;
}

// Expected coefficients of P.D.(w11) in the L_{i,1} presentation.
std::vector<CycNum> reference_lambda() {
    return {lin(60, -13, 122), -lin(15, -49, 122), -lin(43, -51, 122), -lin(50, -21, 122)};
}

std::string fmt(double v, int prec = 10) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

CriterionResult timed(int id, std::string name, const std::function<bool(std::string&)>& body) {
    CriterionResult r{id, std::move(name), false, "", 0.0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = body(r.detail);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

bool volume_regression(std::string& detail) {
    const auto rep = evaluate(w12, w13, w11, 1e-6);
    const double got = rep.two_re_mod_1->mid;
    const bool close = std::abs(got - 0.74286) <= 1e-4;
    detail = "two_re_mod_1 = " + fmt(got) + " +- " + fmt(rep.two_re_mod_1->rad, 3) + " (target 0.74286 +- 1e-4), verdict " +
             to_string(rep.verdict) + ", 2 I_R = (" + [&] {
                 std::ostringstream os;
                 os << rep.exact_expr.A << ") x + (" << rep.exact_expr.B << ")";
                 return os.str();
             }();
    return close && rep.verdict == Verdict::nontrivial;
}

bool symbolic_regression(std::string& detail) {
    const ItExpr got = CycNum(2) * harmonic_volume_expr(w12, w13, w11);
    const ItExpr want = reference_expression();
    const bool same_a = got.x_index == want.x_index && got.A == want.A;
    const CycNum db = got.B - want.B;
    std::ostringstream os;
    os << "A = " << got.A << " vs " << want.A << "; B - B_ref = " << db << (db.is_integral() ? " (in Z[z])" : " (not in Z[z])");
    detail = os.str();
    return same_a && db.is_integral();
}

bool dual_regression(std::string& detail) {
    const auto lam = l_presentation(w11);
    const auto want = reference_lambda();
    bool ok = lam.size() == static_cast<Eigen::Index>(want.size());
    std::ostringstream os;
    os << "lambda =";
    for (Eigen::Index i = 0; i < lam.size(); ++i) {
        os << (i ? ", " : " ") << lam(i);
        if (ok && lam(i) != want[static_cast<std::size_t>(i)]) ok = false;
    }
    os << "; reference =";
    for (std::size_t i = 0; i < want.size(); ++i) os << (i ? ", " : " ") << want[i];
    detail = os.str();
    return ok;
}

bool closed_form_equivalence(std::string& detail) {
    long checked = 0;
    for (int n : {4, 6}) {
        const auto forms = all_forms(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const auto word = PathWord::conjugated_loop(n, i, j);
                for (const auto& f1 : forms)
                    for (const auto& f2 : forms) {
                        if (!(iterated_integral(word, f1, f2) == closed_form_gamma(n, i, j, f1, f2))) {
                            detail = "mismatch at N=" + std::to_string(n) + " loop (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") forms (" + std::to_string(f1.r) + "," + std::to_string(f1.s) +
                                     "),(" + std::to_string(f2.r) + "," + std::to_string(f2.s) + ")";
                            return false;
                        }
                        ++checked;
                    }
            }
    }
    detail = std::to_string(checked) + " (loop, form pair) cases agree exactly";
    return true;
}

bool homology_certificates(std::string& detail) {
    std::ostringstream os;
    bool ok = true;
    for (int n : {4, 5, 6}) {
        const int rk = relation_rank(n);
        const Eigen::MatrixXi m = intersection_matrix(n);
        const bool anti = m == -m.transpose();
        Mat<BigInt> mb(m.rows(), m.cols());
        for (Eigen::Index a = 0; a < m.rows(); ++a)
            for (Eigen::Index c = 0; c < m.cols(); ++c) mb(a, c) = m(a, c);
        const auto divisors = smith_divisors(mb);
        bool unimodular = static_cast<int>(divisors.size()) == basis_size(n);
        for (const auto& d : divisors) unimodular = unimodular && d == 1;
        os << "N=" << n << ": rank " << rk << "/" << 3 * n - 2 << (anti ? ", antisymmetric" : ", NOT antisymmetric")
           << (unimodular ? ", unimodular" : ", NOT unimodular") << "; ";
        ok = ok && rk == 3 * n - 2 && anti && unimodular;
    }
    detail = os.str();
    return ok;
}

bool analysis_suite(std::string& detail, std::uint64_t seed) {
    std::ostringstream os;
    const auto forms = all_forms(6);
    // shuffle relation and method agreement over all ordered pairs
    std::map<std::pair<int, int>, XValue> xs;
    double worst_shuffle = 0.0;
    int pairs = 0;
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (std::size_t b = 0; b < forms.size(); ++b) {
            const auto& f = forms[a];
            const auto& g = forms[b];
            auto s = x_value(6, f.r, f.s, g.r, g.s, 1e-8, XMethod::series);
            auto q = x_value(6, f.r, f.s, g.r, g.s, 1e-8, XMethod::quadrature);
            if (std::abs(s.mid - q.mid) > s.err + q.err) {
                detail = "series/quadrature disagree for x_{" + std::to_string(f.r) + "," + std::to_string(f.s) + "," +
                         std::to_string(g.r) + "," + std::to_string(g.s) + "}";
                return false;
            }
            xs[{static_cast<int>(a), static_cast<int>(b)}] = s;
            ++pairs;
        }
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (std::size_t b = 0; b < forms.size(); ++b) {
            const auto& x1 = xs[{static_cast<int>(a), static_cast<int>(b)}];
            const auto& x2 = xs[{static_cast<int>(b), static_cast<int>(a)}];
            const double gap = std::abs(x1.mid + x2.mid - 1.0);
            worst_shuffle = std::max(worst_shuffle, gap / (x1.err + x2.err + 1e-300));
            if (gap > x1.err + x2.err) {
                detail = "shuffle relation violated";
                return false;
            }
        }
    os << pairs << " pairs: methods agree, shuffle gap <= " << fmt(worst_shuffle, 3) << " x bound; ";

    std::mt19937_64 rng(seed);
    auto rat = [&](int lo, int hi, int den) {
        std::uniform_int_distribution<int> d(lo, hi);
        return make_rational(d(rng), den);
    };
    double worst_simplex = 0.0;
    for (int k = 0; k < 24; ++k) {
        const Rational a = rat(1, 40, 20), b = rat(1, 19, 20), p = rat(1, 40, 20), q = rat(1, 40, 20);
        const double ad = to_double(a), bd = to_double(b), pd = to_double(p), qd = to_double(q);
        const auto lhs = simplex_integral(ad, bd, pd, qd, 1e-10);
        const auto h = hyp3f2_unit({a, 1 - b, a + p, 1 + a, a + p + q}, 1e-10);
        const double rhs = std::exp(std::lgamma(ad + pd) + std::lgamma(qd) - std::lgamma(ad + pd + qd)) / ad * h.value.mid;
        const double rel = std::abs(lhs.value.mid - rhs) / std::abs(rhs);
        worst_simplex = std::max(worst_simplex, rel);
        if (rel > 1e-6) {
            detail = os.str() + "simplex identity off by relative " + fmt(rel, 3);
            return false;
        }
    }
    os << "simplex identity worst rel " << fmt(worst_simplex, 3) << " (24 draws); ";

    double worst_gauss = 0.0;
    for (int k = 0; k < 24; ++k) {
        const Rational a1 = rat(1, 60, 20), a2 = rat(1, 30, 20), a3 = rat(1, 30, 20);
        const Rational b2 = a2 + a3 + rat(4, 40, 20);
        const auto h = hyp3f2_unit({a1, a2, a3, a1, b2}, 1e-10);
        const double x2 = to_double(a2), x3 = to_double(a3), y = to_double(b2);
        const double want = std::exp(std::lgamma(y) + std::lgamma(y - x2 - x3) - std::lgamma(y - x2) - std::lgamma(y - x3));
        const double rel = std::abs(h.value.mid - want) / want;
        worst_gauss = std::max(worst_gauss, rel);
        if (rel > 1e-8) {
            detail = os.str() + "Gauss summation off by relative " + fmt(rel, 3);
            return false;
        }
    }
    os << "Gauss summation worst rel " << fmt(worst_gauss, 3) << " (24 draws)";
    detail = os.str();
    return true;
}

bool period_integrality(std::string& detail) {
    int count = 0;
    for (int n : {4, 5, 6})
        for (const auto& f : all_forms(n)) {
            const auto p = period_vector(f);
            for (Eigen::Index k = 0; k < p.size(); ++k) {
                if (!p(k).is_integral()) {
                    detail = "non-integral period at N=" + std::to_string(n);
                    return false;
                }
                ++count;
            }
        }
    detail = std::to_string(count) + " periods in Z[zeta_N]";
    return true;
}

bool lattice_soundness(std::string& detail, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x5eedULL);
    std::uniform_int_distribution<int> d(-1000, 1000);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const CycNum c = CycNum(d(rng)) + CycNum(d(rng)) * z6(1);
        const auto dist = lattice_distance(embed(c), 6);
        const CycNum two_re = c + c.conj();
        if (!(dist.lower() <= 0.0) || !two_re.is_rational() || !two_re.is_integral()) {
            detail = "failed at sample " + std::to_string(k);
            return false;
        }
        worst = std::max(worst, dist.mid);
    }
    detail = "100 points: distance enclosures contain 0 (largest midpoint " + fmt(worst, 3) + "), 2 Re exact integers";
    return true;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    out.push_back(timed(1, "volume regression N=6 w12 w13 w11: 2 Re mod 1 ~ 0.74286, nontrivial", volume_regression));
    out.push_back(timed(2, "exact doubled expression (6/61)((42-3z)x - 95 + 46z) mod Z[z]", symbolic_regression));
    out.push_back(timed(3, "dual of w11 at N=6 in the L_{i,1} presentation matches reference", dual_regression));
    out.push_back(timed(4, "closed form over gamma_{i,j} equals symbolic engine, N=4,6", closed_form_equivalence));
    out.push_back(timed(5, "relation rank 3N-2, antisymmetric unimodular intersection, N=4,5,6", homology_certificates));
    out.push_back(timed(6, "analysis properties: shuffle, method agreement, simplex identity, Gauss summation",
                        [seed](std::string& d) { return analysis_suite(d, seed); }));
    out.push_back(timed(7, "basis-loop periods lie in Z[zeta_N], N=4,5,6", period_integrality));
    out.push_back(timed(8, "lattice soundness on 100 random Z[zeta_6] points",
                        [seed](std::string& d) { return lattice_soundness(d, seed); }));
    return out;
}

std::vector<std::string> run_diagnostics(bool include_sweeps) {
    std::vector<std::string> out;
    const auto lam = reference_lambda();

    // Contracting the reference coefficients against the L-combinations.
    ItExpr acc = ItExpr::zero(w12, w13);
    for (std::size_t i = 0; i < lam.size(); ++i) acc += lam[i] * l_combination(6, static_cast<long long>(i), 1, w12, w13);
    acc = CycNum(2) * acc;
    const auto want = reference_expression();
    out.push_back(std::string("reference dual coefficients contracted against L_{i,1}: ") +
                  (acc.A == want.A && (acc.B - want.B).is_integral() ? "reproduces" : "does not reproduce") +
                  " the reference doubled expression");

    // Do the reference coefficients define the dual at all?
    Vec<CycNum> v = Vec<CycNum>::Constant(basis_size(6), CycNum(0));
    for (std::size_t i = 0; i < lam.size(); ++i) v += lam[i] * l_class(6, static_cast<int>(i), 1);
    const auto paired = pair_with_basis(6, v);
    const auto periods = period_vector(w11);
    int bad = 0;
    for (Eigen::Index k = 0; k < periods.size(); ++k) bad += paired(k) != periods(k);
    {
        std::ostringstream os;
        os << "reference dual coefficients reproduce " << periods.size() - bad << "/" << periods.size()
           << " periods of w11 (first mismatch ";
        for (Eigen::Index k = 0; k < periods.size(); ++k)
            if (paired(k) != periods(k)) {
                const auto [a, b] = basis_loop(6, static_cast<int>(k));
                os << "at loop (" << a << "," << b << "): " << paired(k) << " vs " << periods(k);
                break;
            }
        os << ")";
        out.push_back(os.str());
    }
    {
        std::ostringstream os;
        const auto ours = l_presentation(w11);
        os << "computed dual of w11 in L_{i,1}:";
        for (Eigen::Index i = 0; i < ours.size(); ++i) os << (i ? ", " : " ") << ours(i);
        out.push_back(os.str());
    }
    if (include_sweeps) {
        for (int n : {6, 4}) {
            const auto reps = sweep(n, 1e-6);
            const auto s = summarize(reps);
            std::ostringstream os;
            os << "sweep N=" << n << ": " << reps.size() << " tensors, " << s.nontrivial << " nontrivial, "
               << s.inconclusive << " inconclusive";
            double best = 0.0;
            const VolumeReport* witness = nullptr;
            for (const auto& r : reps)
                if (r.verdict == Verdict::nontrivial && r.lattice_dist->lower() > best) {
                    best = r.lattice_dist->lower();
                    witness = &r;
                }
            if (witness)
                os << "; strongest witness w" << witness->tensor[0].r << witness->tensor[0].s << " w"
                   << witness->tensor[1].r << witness->tensor[1].s << " w" << witness->tensor[2].r
                   << witness->tensor[2].s << " lattice distance " << fmt(witness->lattice_dist->mid, 6) << " +- "
                   << fmt(witness->lattice_dist->rad, 2);
            out.push_back(os.str());
        }
    }
    return out;
}

}  // namespace fermat
