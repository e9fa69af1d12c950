#ifndef JACKPS_OPERATORS_HPP
#define JACKPS_OPERATORS_HPP

#include "jackps/laurent.hpp"
#include "jackps/symmetry.hpp"

namespace jackps {

struct OperatorContext {
    int nvars;
    Rat alpha;

    OperatorContext(int n, Rat a);
};

/// The type A Cherednik operator
///   xi_i = alpha z_i d/dz_i
///        + sum_{p<i} z_i/(z_i - z_p) (1 - s_{ip})
///        + sum_{p>i} z_p/(z_i - z_p) (1 - s_{ip})
///        + (1 - i).
/// Each divided difference is an exact Laurent division ((1 - s_{ip}) f is
/// always divisible by z_i - z_p); negative exponents are allowed.
LaurentPolynomial cherednik_apply(int i, const LaurentPolynomial& f,
                                  const OperatorContext& ctx);

/// D_lambda = (1/alpha) sum_j lambda_j (xi_j + (N-1)/2).
LaurentPolynomial d_lambda_apply(const std::vector<Rat>& lambda,
                                 const LaurentPolynomial& f,
                                 const OperatorContext& ctx);

/// D_beta = (xi_j - xi_k)/alpha for beta = e_j - e_k.
LaurentPolynomial d_beta_apply(int j, int k, const LaurentPolynomial& f,
                               const OperatorContext& ctx);

/// O_{I,J} f = sum_{w in W_{I u J}} det_J(w) w(f): Sym on I blocks,
/// Asym on J blocks.
LaurentPolynomial symmetrize(const SymmetrySpec& spec,
                             const LaurentPolynomial& f);

/// O_J = prod_{beta in R_{J,+}} (D_beta + 1/alpha), factors applied in
/// lexicographic (j,k) order.
LaurentPolynomial o_j_apply(const SymmetrySpec& spec,
                            const LaurentPolynomial& f,
                            const OperatorContext& ctx);

} // namespace jackps

#endif
