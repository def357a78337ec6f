#ifndef FERMAT_POINCARE_DUAL_HPP
#define FERMAT_POINCARE_DUAL_HPP

#include "fermat/cyclotomic.hpp"
#include "fermat/forms.hpp"

namespace fermat {

/// Periods of omega_f over the basis loops alpha^i beta^j kappa_0, in basis order.
Vec<CycNum> period_vector(const FormIdx& f);

/// P.D.(omega_f) = sum_k coeffs(k) K_k over the loop basis.
struct DualVector {
    FormIdx form;
    Vec<CycNum> coeffs;
};

/// Exact solution of (P.D.(omega), K_c) = period over K_c for every basis loop K_c.
/// Cached per form.
const DualVector& poincare_dual(const FormIdx& f);

/// (v, K_c) for every basis loop, i.e. M^T v with M the intersection matrix.
Vec<CycNum> pair_with_basis(int n, const Vec<CycNum>& v);

enum class Automorphism { alpha, beta };

/// Pushforward of a basis-coordinate vector under alpha or beta.
Vec<CycNum> pushforward(int n, const Vec<CycNum>& v, Automorphism g);

/// True iff g_*(P.D.(omega_{r,s})) = zeta^{-r} (alpha) or zeta^{-s} (beta) times P.D.(omega_{r,s}).
bool equivariance_check(const FormIdx& f, Automorphism g = Automorphism::beta);

/// Basis coordinates of L_{i,k} = sum_t zeta^{t k} gamma_{i,t}.
Vec<CycNum> l_class(int n, int i, int k);

/// Coefficients lambda_0 .. lambda_{N-3} with P.D.(omega_{r,s}) = sum_i lambda_i L_{i,s}.
Vec<CycNum> l_presentation(const FormIdx& f);

}  // namespace fermat

#endif  // FERMAT_POINCARE_DUAL_HPP
