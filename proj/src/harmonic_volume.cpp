#include "fermat/harmonic_volume.hpp"

#include "fermat/homology.hpp"
#include "fermat/poincare_dual.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>

namespace fermat {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::nontrivial: return "nontrivial";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::unsupported_N: return "unsupported_N";
    }
    return "unsupported_N";
}

ItExpr contract_dual(const Vec<CycNum>& dual, const FormIdx& f1, const FormIdx& f2) {
    const int n = f1.n;
    if (f2.n != n) throw std::invalid_argument("contract_dual: forms of different degrees");
    FormIdx::make(n, f1.r, f1.s);
    FormIdx::make(n, f2.r, f2.s);
    if (dual.size() != basis_size(n)) throw std::invalid_argument("contract_dual: wrong coordinate count");
    auto acc = ItExpr::zero(f1, f2);
    for (int k = 0; k < basis_size(n); ++k) {
        if (dual(k).is_zero()) continue;
        const auto [i, j] = basis_loop(n, k);
        acc += dual(k) * closed_form_gamma(n, i, j, f1, f2);
    }
    return acc;
}

ItExpr harmonic_volume_expr(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3) {
    if (f2.n != f1.n || f3.n != f1.n) throw std::invalid_argument("harmonic_volume_expr: forms of different degrees");
    return contract_dual(poincare_dual(f3).coeffs, f1, f2);
}

VolumeReport evaluate_with(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3, const XValue& x) {
    VolumeReport rep;
    rep.n = f1.n;
    rep.tensor = {f1, f2, f3};
    rep.exact_expr = CycNum(2) * harmonic_volume_expr(f1, f2, f3);
    if (x.n != rep.n || std::array<int, 4>{x.r, x.s, x.l, x.m} != rep.exact_expr.x_index)
        throw std::invalid_argument("evaluate_with: x value does not match the tensor");
    rep.x = x;
    const ComplexInterval xi{{x.mid, 0.0}, x.err};
    rep.value = embed(rep.exact_expr.A) * xi + embed(rep.exact_expr.B);
    if (rep.n != 4 && rep.n != 6) {
        rep.verdict = Verdict::unsupported_N;
        return rep;
    }

    const double two_re = 2.0 * rep.value.mid.real();
    const double frac = two_re - std::floor(two_re);
    const RealInterval re{frac, 2.0 * rep.value.rad + 4 * std::numeric_limits<double>::epsilon() * std::abs(two_re)};
    rep.two_re_mod_1 = re;
    rep.lattice_dist = lattice_distance(rep.value, rep.n);

    // 2 Re of a lattice point is an integer, so a certified non-integer 2 Re
    // must show up as a positive lattice distance too.
    const bool re_excludes = std::min(frac, 1.0 - frac) > re.rad;
    const bool lattice_excludes = rep.lattice_dist->lower() > 0.0;
    if (re_excludes && !lattice_excludes)
        throw std::logic_error("evaluate: real-part test excludes the lattice but lattice distance does not");
    rep.verdict = lattice_excludes ? Verdict::nontrivial : Verdict::inconclusive;
    return rep;
}

VolumeReport evaluate(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3, double tol, XMethod method,
                      long max_terms) {
    FormIdx::make(f3.n, f3.r, f3.s);
    const auto x = x_value(f1.n, f1.r, f1.s, f2.r, f2.s, tol, method, max_terms);
    return evaluate_with(f1, f2, f3, x);
}

SweepSummary summarize(const std::vector<VolumeReport>& reports) {
    SweepSummary s;
    for (const auto& r : reports) {
        switch (r.verdict) {
            case Verdict::nontrivial: ++s.nontrivial; break;
            case Verdict::inconclusive: ++s.inconclusive; break;
            case Verdict::unsupported_N: ++s.unsupported; break;
        }
    }
    return s;
}

std::vector<VolumeReport> sweep(int n, double tol, XMethod method, long max_terms,
                                const std::function<void(const VolumeReport&)>& on_report) {
    if (n != 4 && n != 6) throw std::invalid_argument("sweep: degree " + std::to_string(n) + " unsupported (need 4 or 6)");
    const auto forms = all_forms(n);
    for (const auto& f : forms) poincare_dual(f);  // warm the cache before fanning out

    std::vector<std::future<std::vector<VolumeReport>>> jobs;
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (std::size_t b = a; b < forms.size(); ++b)
            jobs.push_back(std::async(std::launch::async, [&, a, b] {
                const auto& f1 = forms[a];
                const auto& f2 = forms[b];
                const auto x = x_value(n, f1.r, f1.s, f2.r, f2.s, tol, method, max_terms);
                std::vector<VolumeReport> out;
                for (const auto& f3 : forms) out.push_back(evaluate_with(f1, f2, f3, x));
                return out;
            }));

    std::vector<VolumeReport> all;
    for (auto& job : jobs)
        for (auto& rep : job.get()) {
            if (on_report) on_report(rep);
            all.push_back(std::move(rep));
        }
    return all;
}

}  // namespace fermat
