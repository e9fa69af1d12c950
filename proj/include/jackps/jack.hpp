#ifndef JACKPS_JACK_HPP
#define JACKPS_JACK_HPP

#include <map>
#include <mutex>

#include "jackps/operators.hpp"

namespace jackps {

/// Cache of constructed nonsymmetric Jack polynomials, keyed by
/// (composition, alpha).  Entries are verified against the eigenvalue
/// equations on insertion; access is serialized.
class JackCache {
public:
    const LaurentPolynomial& eigenpoly(const Composition& eta,
                                       const OperatorContext& ctx);

private:
    std::map<std::pair<Composition, Rat>, LaurentPolynomial> cache_;
    std::mutex mutex_;
};

/// The nonsymmetric Jack polynomial E_eta: the unique monic solution of
/// xi_i E = bar(eta)_i E supported on the cone of eta, obtained by a
/// triangular solve.  Throws DegenerateParameterError when two spectral
/// vectors in the cone collide.
LaurentPolynomial nonsym_jack(const Composition& eta,
                              const OperatorContext& ctx);

/// The right side of the exchange relation for s_i E_eta:
///   eta_i > eta_{i+1}:  (1/db) E_eta + (1 - 1/db^2) E_{s_i eta}
///   eta_i = eta_{i+1}:  E_eta
///   eta_i < eta_{i+1}:  (1/db) E_eta + E_{s_i eta},
/// with db = bar(eta)_i - bar(eta)_{i+1}.  Serves as an independent oracle
/// against permuting E_eta directly.
LaurentPolynomial exchange_image(int i, const Composition& eta,
                                 const OperatorContext& ctx, JackCache& cache);

/// A Jack polynomial with prescribed symmetry and its symmetric quotient.
struct PrescribedJack {
    Composition eta_star;
    LaurentPolynomial s_poly; // S^{(I,J)}_{eta*}, monic triangular
    LaurentPolynomial u_poly; // U = S / prod_s Delta_{J~_s}
    Rat a_star;               // a^{(I,J)}_{eta*}
};

/// Builds S by both routes -- normalized O_{I,J} E_{eta*} and the explicit
/// E-expansion with hook-ratio coefficients -- and insists they agree.
PrescribedJack prescribed_jack(const Composition& eta_star_in,
                               const SymmetrySpec& spec,
                               const OperatorContext& ctx, JackCache& cache);

/// Coefficient of E_mu in S_{eta*}: det_J(w) d'_{eta*} d_mu /
/// (d'_{mu_I} d_{mu_I}) with w eta* = mu, mu_I = w_I eta*.
Rat expansion_coefficient(const Composition& eta_star_in,
                          const Composition& mu, const SymmetrySpec& spec,
                          const OperatorContext& ctx);

/// a^{(I,J)}_eta with O_{I,J} E_eta = a^{(I,J)}_eta S_{eta*}.
Rat proportionality_constant(const Composition& eta, const SymmetrySpec& spec,
                             const OperatorContext& ctx);

/// E_eta(1^N) = e_{eta^+} / d_eta.
Rat closed_form_E_ones(const Composition& eta, int nvars, const Rat& alpha);

/// S^{(I,empty)}_{eta*}(1^N) = (|W_I| / M_{I,eta*}) e_{eta^+} /
/// d_{eta*^(-,.)}.
Rat closed_form_S_sym_ones(const Composition& eta_star_in,
                           const std::set<int>& i_set, int nvars,
                           const Rat& alpha);

/// c_{eta*} = prod_{beta in R_{J,+}} (bar(eta*)_beta + 1)/alpha.
Rat c_star(const Composition& eta_star_in, const SymmetrySpec& spec,
           const OperatorContext& ctx);

enum class KjMode { Formula, Direct };

/// k_J, either by the closed form prod_s |J~_s|! alpha^{-|delta|}
/// e_{delta^+} or by applying prod D_beta to prod (z^beta - 1) and
/// evaluating at 1^N.
Rat k_j(const SymmetrySpec& spec, const OperatorContext& ctx, KjMode mode);

enum class UOnesVariant { Main, Dunkl };

/// U^{(I,J)}_{eta*}(1^N) in the two closed forms, which must agree.
Rat closed_form_U_ones(const Composition& eta_star_in,
                       const SymmetrySpec& spec, const OperatorContext& ctx,
                       UOnesVariant variant);

} // namespace jackps

#endif
