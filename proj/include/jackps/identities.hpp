#ifndef JACKPS_IDENTITIES_HPP
#define JACKPS_IDENTITIES_HPP

#include <string>
#include <vector>

#include "jackps/jack.hpp"

namespace jackps {

/// Pass/fail record for one identity instance.  A failing report always
/// carries both computed sides.
struct VerificationReport {
    std::string id;
    std::string params;
    bool pass = false;
    std::string lhs;
    std::string rhs;
};

std::string report_to_json(const VerificationReport& r);
std::string reports_to_json(const std::vector<VerificationReport>& rs);

/// The inner product CT( f(x) g(1/x) (Delta(x) Delta(1/x))^k ), defined
/// combinatorially for k = 1/alpha a positive integer.
Rat ct_inner(const LaurentPolynomial& f, const LaurentPolynomial& g, int k);

/// CT( f * prod_j (1 - 1/x_j)^{-c_j} ) with all c_j >= 0, the negative
/// powers expanded as series in 1/x_j (the expansion the Cauchy-kernel
/// derivation prescribes).  Agrees with exact division whenever f is
/// divisible by prod (1 - 1/x_j)^{c_j}.
Rat ct_geometric(const LaurentPolynomial& f, const std::vector<int>& weights);

/// Hook-ratio identity along W_J:
///   d'_{w eta*^(-,0)} d_{w eta*^(-,0)} / (d'_{eta*^(-,0)} d_{eta*^(-,0)})
///   = prod over the inversion set of (bar_beta + 1)/(bar_beta - 1).
VerificationReport check_dn5(const Permutation& w,
                             const Composition& eta_star_in,
                             const SymmetrySpec& spec,
                             const OperatorContext& ctx);

/// Expansion of prod_{i not in J~} (1-x_i)^{r-1} prod_{j in J~_s}
/// (1-x_j)^{r-|J~_s|} over the U basis, compared coefficient-by-coefficient
/// through total degree `cutoff` on the U side.
VerificationReport check_expansion(const SymmetrySpec& spec, const Rat& r,
                                   const OperatorContext& ctx, int cutoff,
                                   JackCache& cache);

/// Norm evaluations at alpha = 1/k: ||S||^2/||1||^2 against the hook
/// formula and ||E_{eta*}||^2 against its closed form, both by brute-force
/// constant term.
VerificationReport check_norms(const Composition& eta_star_in,
                               const SymmetrySpec& spec, int k,
                               JackCache& cache);

/// The constant term identity: left side by full Laurent expansion (with
/// geometric weights for the (1 - 1/x_j)^{1-|J~_s|} factors), right side
/// assembled from the closed forms with slot-cancelled Pochhammer ratios.
VerificationReport check_ct_identity(const Composition& eta_star_in,
                                     const SymmetrySpec& spec, int a, int b,
                                     int k, JackCache& cache);

/// The I = J = {} reduction: CT{ w E_eta } / CT{ w } =
/// E_eta(1^N) [-b]_{eta^+} / [a+1+(N-1)/alpha]_{eta^+} with
/// w = prod (1-x_i)^a (1-1/x_i)^b (Delta Delta(1/x))^k.
VerificationReport check_mkk(const Composition& eta, int a, int b, int k,
                             JackCache& cache);

} // namespace jackps

#endif
