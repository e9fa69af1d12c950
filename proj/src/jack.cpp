#include "jackps/jack.hpp"

#include <algorithm>
#include <numeric>

#include "jackps/errors.hpp"

namespace jackps {

namespace {

/// Sort key realizing a linear extension of the order < (descending):
/// partial sums of the sorted parts, then of the parts themselves.
std::vector<int> order_key(const Composition& c)
{
    std::vector<int> key = sort_to_partition(c).parts();
    std::partial_sum(key.begin(), key.end(), key.begin());
    std::vector<int> comp_sums = c.parts();
    std::partial_sum(comp_sums.begin(), comp_sums.end(), comp_sums.begin());
    key.insert(key.end(), comp_sums.begin(), comp_sums.end());
    return key;
}

LaurentPolynomial delta_factor(const SymmetrySpec& spec)
{
    LaurentPolynomial d = LaurentPolynomial::constant(spec.nvars(), 1);
    for (const Block& b : spec.j_blocks()) {
        std::vector<int> positions;
        for (int p = b.lo; p <= b.hi; ++p)
            positions.push_back(p);
        d = d * vandermonde(positions, spec.nvars());
    }
    return d;
}

void require_eta_star(const Composition& eta, const SymmetrySpec& spec,
                      const char* who)
{
    if (eta.size() != spec.nvars())
        throw InvalidInputError(std::string(who) + ": length mismatch");
    // Triggers the repeated-part error for degenerate J blocks.
    const Composition star = eta_star(eta, spec);
    if (star != eta)
        throw InvalidInputError(std::string(who) + ": " + eta.str() +
                                " is not the distinguished representative " +
                                star.str());
}

Rat spectral_gap(const std::vector<Rat>& bar, int j, int k)
{
    return bar[static_cast<std::size_t>(j - 1)] -
           bar[static_cast<std::size_t>(k - 1)];
}

} // namespace

LaurentPolynomial nonsym_jack(const Composition& eta,
                              const OperatorContext& ctx)
{
    const int n = ctx.nvars;
    if (eta.size() != n)
        throw InvalidInputError("nonsym_jack: composition length != N");

    std::vector<Composition> cone = cone_of(eta);
    std::vector<std::vector<Rat>> bars;
    bars.reserve(cone.size());
    for (const auto& nu : cone)
        bars.push_back(spectral_vector(nu, ctx.alpha));

    for (std::size_t a = 0; a < cone.size(); ++a)
        for (std::size_t b = a + 1; b < cone.size(); ++b)
            if (bars[a] == bars[b])
                throw DegenerateParameterError(
                    "spectral collision between " + cone[a].str() + " and " +
                    cone[b].str() + " at alpha=" + rational_str(ctx.alpha));

    // Descending linear extension of <; eta comes first.
    std::vector<std::size_t> order(cone.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<int>> keys;
    keys.reserve(cone.size());
    for (const auto& nu : cone)
        keys.push_back(order_key(nu));
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return keys[a] > keys[b]; });
    if (cone[order[0]] != eta)
        throw InternalError("nonsym_jack: cone maximum is not eta");

    // Action of every xi_i on the cone monomials.
    std::vector<std::vector<LaurentPolynomial>> xi_images;
    xi_images.reserve(cone.size());
    for (const auto& nu : cone) {
        const LaurentPolynomial znu =
            LaurentPolynomial::monomial(nu.parts(), 1);
        std::vector<LaurentPolynomial> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i)
            row.push_back(cherednik_apply(i, znu, ctx));
        xi_images.push_back(std::move(row));
    }

    const std::vector<Rat>& eta_bar = bars[order[0]];
    std::map<std::size_t, Rat> coeff;
    coeff[order[0]] = 1;

    for (std::size_t pos = 1; pos < order.size(); ++pos) {
        const std::size_t nu_idx = order[pos];
        const auto& nu_exps = cone[nu_idx].parts();
        const std::vector<Rat>& nu_bar = bars[nu_idx];

        bool solved = false;
        Rat value = 0;
        for (int i = 1; i <= n; ++i) {
            Rat rhs = 0;
            for (std::size_t prev = 0; prev < pos; ++prev) {
                const std::size_t mu_idx = order[prev];
                const Rat& c =
                    xi_images[mu_idx][static_cast<std::size_t>(i - 1)]
                        .coefficient(nu_exps);
                if (c != 0)
                    rhs += coeff[mu_idx] * c;
            }
            const Rat gap = eta_bar[static_cast<std::size_t>(i - 1)] -
                            nu_bar[static_cast<std::size_t>(i - 1)];
            if (gap != 0) {
                const Rat candidate = rhs / gap;
                if (solved && candidate != value)
                    throw InternalError(
                        "nonsym_jack: inconsistent eigen equations at " +
                        cone[nu_idx].str());
                value = candidate;
                solved = true;
            } else if (solved && rhs != 0) {
                throw InternalError(
                    "nonsym_jack: unsolvable eigen equation at " +
                    cone[nu_idx].str());
            }
        }
        if (!solved)
            throw InternalError("nonsym_jack: no resolving index for " +
                                cone[nu_idx].str());
        coeff[nu_idx] = value;
    }

    LaurentPolynomial e_poly(n);
    for (const auto& [idx, c] : coeff)
        e_poly.add_term(cone[idx].parts(), c);
    return e_poly;
}

const LaurentPolynomial& JackCache::eigenpoly(const Composition& eta,
                                              const OperatorContext& ctx)
{
    std::lock_guard lock(mutex_);
    const auto key = std::make_pair(eta, ctx.alpha);
    const auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;

    LaurentPolynomial e = nonsym_jack(eta, ctx);
    const auto bar = spectral_vector(eta, ctx.alpha);
    for (int i = 1; i <= ctx.nvars; ++i)
        if (cherednik_apply(i, e, ctx) !=
            bar[static_cast<std::size_t>(i - 1)] * e)
            throw InternalError("eigen equation failed on insertion for " +
                                eta.str());
    return cache_.emplace(key, std::move(e)).first->second;
}

LaurentPolynomial exchange_image(int i, const Composition& eta,
                                 const OperatorContext& ctx, JackCache& cache)
{
    if (i < 1 || i >= eta.size())
        throw InvalidInputError("exchange_image: index out of range");
    const LaurentPolynomial& e_eta = cache.eigenpoly(eta, ctx);
    if (eta.part(i) == eta.part(i + 1))
        return e_eta;

    const auto bar = spectral_vector(eta, ctx.alpha);
    const Rat db = spectral_gap(bar, i, i + 1);
    if (db == 0)
        throw DegenerateParameterError("vanishing spectral gap at i=" +
                                       std::to_string(i) + " for " +
                                       eta.str());
    const Composition s_eta =
        Permutation::transposition(eta.size(), i, i + 1).apply(eta);
    const LaurentPolynomial& e_flip = cache.eigenpoly(s_eta, ctx);

    if (eta.part(i) > eta.part(i + 1))
        return (1 / db) * e_eta + (1 - 1 / (db * db)) * e_flip;
    return (1 / db) * e_eta + e_flip;
}

Rat expansion_coefficient(const Composition& eta_star_in,
                          const Composition& mu, const SymmetrySpec& spec,
                          const OperatorContext& ctx)
{
    require_eta_star(eta_star_in, spec, "expansion_coefficient");
    if (mu.size() != spec.nvars())
        throw InvalidInputError("expansion_coefficient: length mismatch");

    // mu must agree with eta* outside the blocks and blockwise up to
    // rearrangement.
    if (eta_star(mu, spec) != eta_star_in)
        throw InvalidInputError("expansion_coefficient: " + mu.str() +
                                " not in the orbit of " + eta_star_in.str());

    // mu_I = w_I eta*: the orbit element matching mu on I blocks and eta*
    // (sorted) on J blocks.
    std::vector<int> mu_i_parts = mu.parts();
    int det_j = 1;
    for (const Block& b : spec.j_blocks()) {
        for (int p = b.lo; p <= b.hi; ++p)
            mu_i_parts[static_cast<std::size_t>(p - 1)] = eta_star_in.part(p);
        // parity of the rearrangement taking eta*'s block entries to mu's
        std::vector<int> src, dst;
        for (int p = b.lo; p <= b.hi; ++p) {
            src.push_back(eta_star_in.part(p));
            dst.push_back(mu.part(p));
        }
        std::vector<int> perm(src.size());
        for (std::size_t t = 0; t < dst.size(); ++t) {
            const auto it = std::find(src.begin(), src.end(), dst[t]);
            perm[t] = static_cast<int>(it - src.begin()) + 1;
        }
        if (Permutation(perm).sign() < 0)
            det_j = -det_j;
    }
    const Composition mu_i(std::move(mu_i_parts));

    const auto [d_star, dp_star] = hook_products(eta_star_in, ctx.alpha);
    (void)d_star;
    const auto [d_mu, dp_mu] = hook_products(mu, ctx.alpha);
    (void)dp_mu;
    const auto [d_mui, dp_mui] = hook_products(mu_i, ctx.alpha);
    return Rat(det_j) * dp_star * d_mu / (dp_mui * d_mui);
}

Rat proportionality_constant(const Composition& eta, const SymmetrySpec& spec,
                             const OperatorContext& ctx)
{
    if (eta.size() != spec.nvars())
        throw InvalidInputError("proportionality_constant: length mismatch");
    // Degenerate (vanishing) case is the caller's concern; fail loudly.
    for (const Block& b : spec.j_blocks())
        for (int p = b.lo; p <= b.hi; ++p)
            for (int q = p + 1; q <= b.hi; ++q)
                if (eta.part(p) == eta.part(q))
                    throw InvalidInputError(
                        "proportionality_constant: repeated part in J-block "
                        "for " +
                        eta.str());

    const Composition var_mp =
        orbit_variant(eta, spec, BlockSort::Increasing, BlockSort::Decreasing);
    const Composition var_0p =
        orbit_variant(eta, spec, BlockSort::Keep, BlockSort::Decreasing);
    const Composition var_mm =
        orbit_variant(eta, spec, BlockSort::Increasing, BlockSort::Increasing);

    // det_J of the w_J sorting each J block of eta into decreasing order
    int det_j = 1;
    for (const Block& b : spec.j_blocks()) {
        std::vector<int> vals;
        for (int p = b.lo; p <= b.hi; ++p)
            vals.push_back(eta.part(p));
        // parity = parity of the number of inversions relative to sorted
        int inversions = 0;
        for (std::size_t a = 0; a < vals.size(); ++a)
            for (std::size_t c = a + 1; c < vals.size(); ++c)
                if (vals[a] < vals[c])
                    ++inversions;
        if (inversions % 2 == 1)
            det_j = -det_j;
    }

    const Rat m_stab = Rat(stabilizer_order(eta, spec.i_set(), spec.nvars()));
    const auto [d_eta, dp_eta] = hook_products(eta, ctx.alpha);
    (void)d_eta;
    const auto [d_mp, dp_mp] = hook_products(var_mp, ctx.alpha);
    const auto [d_0p, dp_0p] = hook_products(var_0p, ctx.alpha);
    const auto [d_mm, dp_mm] = hook_products(var_mm, ctx.alpha);
    (void)d_mm;
    return Rat(det_j) * m_stab * dp_eta * dp_mp * d_mp /
           (dp_0p * d_0p * dp_mm);
}

PrescribedJack prescribed_jack(const Composition& eta_star_in,
                               const SymmetrySpec& spec,
                               const OperatorContext& ctx, JackCache& cache)
{
    require_eta_star(eta_star_in, spec, "prescribed_jack");

    // route (a): normalized symmetrization of E_{eta*}
    const LaurentPolynomial& e_star = cache.eigenpoly(eta_star_in, ctx);
    const Rat a_star = proportionality_constant(eta_star_in, spec, ctx);
    if (a_star == 0)
        throw DegenerateParameterError("vanishing a^{(I,J)} for " +
                                       eta_star_in.str());
    const LaurentPolynomial s_a = (1 / a_star) * symmetrize(spec, e_star);

    // route (b): hook-ratio expansion over the orbit
    LaurentPolynomial s_b = LaurentPolynomial::zero(spec.nvars());
    for (const Composition& mu : orbit_of(eta_star_in, spec)) {
        const Rat c = expansion_coefficient(eta_star_in, mu, spec, ctx);
        s_b += c * cache.eigenpoly(mu, ctx);
    }

    if (s_a != s_b)
        throw InternalError(
            "prescribed_jack: construction routes disagree for " +
            eta_star_in.str() + " with " + spec.str());

    if (s_b.coefficient(eta_star_in.parts()) != 1)
        throw InternalError("prescribed_jack: S is not monic at z^{eta*}");

    const LaurentPolynomial u = exact_divide(s_b, delta_factor(spec));
    return PrescribedJack{eta_star_in, std::move(s_b), u, a_star};
}

Rat closed_form_E_ones(const Composition& eta, int nvars, const Rat& alpha)
{
    if (eta.size() != nvars)
        throw InvalidInputError("closed_form_E_ones: length mismatch");
    const auto [e, ep] = e_factors(sort_to_partition(eta), nvars, alpha);
    (void)ep;
    const auto [d, dp] = hook_products(eta, alpha);
    (void)dp;
    return e / d;
}

Rat closed_form_S_sym_ones(const Composition& eta_star_in,
                           const std::set<int>& i_set, int nvars,
                           const Rat& alpha)
{
    const SymmetrySpec spec(nvars, i_set, {});
    require_eta_star(eta_star_in, spec, "closed_form_S_sym_ones");
    const Composition var_m =
        orbit_variant(eta_star_in, spec, BlockSort::Increasing, BlockSort::Keep);
    const auto [e, ep] =
        e_factors(sort_to_partition(eta_star_in), nvars, alpha);
    (void)ep;
    const auto [d_m, dp_m] = hook_products(var_m, alpha);
    (void)dp_m;
    const Rat w_order = Rat(spec.group_order());
    const Rat m_stab = Rat(stabilizer_order(eta_star_in, i_set, nvars));
    return w_order / m_stab * e / d_m;
}

Rat c_star(const Composition& eta_star_in, const SymmetrySpec& spec,
           const OperatorContext& ctx)
{
    require_eta_star(eta_star_in, spec, "c_star");
    const auto bar = spectral_vector(eta_star_in, ctx.alpha);
    Rat prod = 1;
    for (const auto& [j, k] : spec.r_j_plus())
        prod *= (spectral_gap(bar, j, k) + 1) / ctx.alpha;
    return prod;
}

Rat k_j(const SymmetrySpec& spec, const OperatorContext& ctx, KjMode mode)
{
    if (spec.nvars() != ctx.nvars)
        throw InvalidInputError("k_j: variable-count mismatch");
    const Composition delta = delta_of_spec(spec);

    if (mode == KjMode::Formula) {
        Rat r = 1;
        for (const Block& b : spec.j_blocks())
            r *= Rat(factorial(b.size()));
        Rat apow = 1;
        for (int i = 0; i < delta.degree(); ++i)
            apow *= ctx.alpha;
        const auto [e_delta, ep_delta] =
            e_factors(sort_to_partition(delta), spec.nvars(), ctx.alpha);
        (void)ep_delta;
        return r / apow * e_delta;
    }

    // direct: (prod D_beta) (prod (z^beta - 1)) at 1^N
    const auto roots = spec.r_j_plus();
    LaurentPolynomial p = LaurentPolynomial::constant(spec.nvars(), 1);
    for (const auto& [j, k] : roots) {
        LaurentPolynomial::Exponents e(
            static_cast<std::size_t>(spec.nvars()), 0);
        e[static_cast<std::size_t>(j - 1)] = 1;
        e[static_cast<std::size_t>(k - 1)] = -1;
        p = p * (LaurentPolynomial::monomial(e, 1) -
                 LaurentPolynomial::constant(spec.nvars(), 1));
    }
    for (const auto& [j, k] : roots)
        p = d_beta_apply(j, k, p, ctx);
    return p.eval_ones();
}

Rat closed_form_U_ones(const Composition& eta_star_in,
                       const SymmetrySpec& spec, const OperatorContext& ctx,
                       UOnesVariant variant)
{
    require_eta_star(eta_star_in, spec, "closed_form_U_ones");

    const Composition delta = delta_of_spec(spec);
    Rat i_fact = 1;
    for (const Block& b : spec.i_blocks())
        i_fact *= Rat(factorial(b.size()));
    const Rat m_stab =
        Rat(stabilizer_order(eta_star_in, spec.i_set(), spec.nvars()));
    const auto [e_eta, ep_eta] =
        e_factors(sort_to_partition(eta_star_in), spec.nvars(), ctx.alpha);
    (void)ep_eta;
    const auto [e_delta, ep_delta] =
        e_factors(sort_to_partition(delta), spec.nvars(), ctx.alpha);
    (void)ep_delta;
    Rat apow = 1;
    for (int i = 0; i < delta.degree(); ++i)
        apow *= ctx.alpha;

    const auto bar = spectral_vector(eta_star_in, ctx.alpha);

    if (variant == UOnesVariant::Main) {
        const Composition var_mm = orbit_variant(
            eta_star_in, spec, BlockSort::Increasing, BlockSort::Increasing);
        const auto [d_mm, dp_mm] = hook_products(var_mm, ctx.alpha);
        (void)dp_mm;
        Rat prod = 1;
        for (const auto& [j, k] : spec.r_j_plus())
            prod *= (spectral_gap(bar, j, k) + 1) / ctx.alpha;
        return i_fact / m_stab * e_eta * apow / (e_delta * d_mm) * prod;
    }

    const Composition var_mm = orbit_variant(
        eta_star_in, spec, BlockSort::Increasing, BlockSort::Increasing);
    const Composition var_m0 = orbit_variant(
        eta_star_in, spec, BlockSort::Increasing, BlockSort::Keep);
    const auto [d_mm, dp_mm] = hook_products(var_mm, ctx.alpha);
    (void)d_mm;
    const auto [d_m0, dp_m0] = hook_products(var_m0, ctx.alpha);
    Rat prod = 1;
    for (const auto& [j, k] : spec.r_j_plus())
        prod *= (spectral_gap(bar, j, k) - 1) / ctx.alpha;
    return i_fact / m_stab * dp_mm / (dp_m0 * d_m0) * e_eta * apow / e_delta *
           prod;
}

} // namespace jackps
