#ifndef FERMAT_HARMONIC_VOLUME_HPP
#define FERMAT_HARMONIC_VOLUME_HPP

#include "fermat/analysis.hpp"
#include "fermat/cyclotomic.hpp"
#include "fermat/forms.hpp"
#include "fermat/iterated.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fermat {

enum class Verdict { nontrivial, inconclusive, unsupported_N };

std::string to_string(Verdict v);

struct VolumeReport {
    int n = 0;
    std::array<FormIdx, 3> tensor{};
    ItExpr exact_expr;  // 2 I_R as A x + B
    XValue x;
    ComplexInterval value;  // of 2 I_R
    std::optional<RealInterval> two_re_mod_1;  // representative in [0, 1)
    std::optional<RealInterval> lattice_dist;
    Verdict verdict = Verdict::unsupported_N;
};

/// sum_k dual(k) * (integral of omega_{f1} omega_{f2} over gamma_{i_k, j_k}).
ItExpr contract_dual(const Vec<CycNum>& dual, const FormIdx& f1, const FormIdx& f2);

/// I_R(f1 (x) f2 (x) f3) = sum over basis loops of the dual coefficients of f3
/// times the integral of omega_{f1} omega_{f2} over the conjugated loop.
ItExpr harmonic_volume_expr(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3);

/// Verdict from an already computed x; x must match the tensor's x-symbol.
VolumeReport evaluate_with(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3, const XValue& x);

VolumeReport evaluate(const FormIdx& f1, const FormIdx& f2, const FormIdx& f3, double tol,
                      XMethod method = XMethod::both, long max_terms = 1L << 20);

struct SweepSummary {
    int nontrivial = 0;
    int inconclusive = 0;
    int unsupported = 0;
};

SweepSummary summarize(const std::vector<VolumeReport>& reports);

/// All tensors with f1 <= f2 (the x-symbol shuffle pairs the rest), every f3.
/// Evaluated in parallel; on_report, if given, sees the reports in tensor order.
std::vector<VolumeReport> sweep(int n, double tol, XMethod method = XMethod::both, long max_terms = 1L << 20,
                                const std::function<void(const VolumeReport&)>& on_report = {});

}  // namespace fermat

#endif  // FERMAT_HARMONIC_VOLUME_HPP
