#include "jackps/verify.hpp"

#include <algorithm>
#include <functional>

#include "jackps/errors.hpp"

namespace jackps {

namespace {

std::string instance_tag(int n, const Composition& eta, const Rat& alpha)
{
    return "N=" + std::to_string(n) + " eta=" + eta.str() +
           " alpha=" + rational_str(alpha);
}

std::vector<Composition> grid_compositions(int n, const VerifyOptions& opt)
{
    if (opt.eta) {
        if (opt.eta->size() != n)
            return {};
        return {*opt.eta};
    }
    std::vector<Composition> out;
    for (int d = 0; d <= opt.deg_max; ++d)
        for (auto& c : compositions_of_degree(d, n))
            out.push_back(std::move(c));
    return out;
}

std::vector<SymmetrySpec> grid_specs(int n, const VerifyOptions& opt)
{
    if (opt.i_set || opt.j_set) {
        const std::set<int> i = opt.i_set.value_or(std::set<int>{});
        const std::set<int> j = opt.j_set.value_or(std::set<int>{});
        return {SymmetrySpec(n, i, j)};
    }
    return enumerate_specs(n);
}

/// Deterministic low-degree polynomial standing in for "a random F".
LaurentPolynomial pseudo_random_poly(int nvars, unsigned seed)
{
    unsigned state = seed * 2654435761u + 12345u;
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return (state >> 16) & 0x7fffu;
    };
    LaurentPolynomial f = LaurentPolynomial::constant(nvars, 1 + (seed % 3));
    for (const auto& c : compositions_of_degree(2, nvars))
        if (next() % 3 == 0)
            f.add_term(c.parts(), Rat(static_cast<int>(next() % 7) - 3));
    for (const auto& c : compositions_of_degree(1, nvars))
        if (next() % 2 == 0)
            f.add_term(c.parts(), Rat(static_cast<int>(next() % 5) + 1, 2));
    return f;
}

VerificationReport make_report(const std::string& id,
                               const std::string& params, bool pass,
                               const std::string& lhs = "",
                               const std::string& rhs = "")
{
    return VerificationReport{id, params, pass, lhs, rhs};
}

using Runner = std::function<std::vector<VerificationReport>(
    const VerifyOptions&)>;

std::vector<VerificationReport> run_eigen(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const Composition& eta : grid_compositions(n, opt)) {
                const LaurentPolynomial e = nonsym_jack(eta, ctx);
                const auto bar = spectral_vector(eta, ctx.alpha);
                bool ok = true;
                std::string lhs, rhs;
                for (int i = 1; i <= n && ok; ++i) {
                    const LaurentPolynomial img = cherednik_apply(i, e, ctx);
                    const LaurentPolynomial want =
                        bar[static_cast<std::size_t>(i - 1)] * e;
                    if (img != want) {
                        ok = false;
                        lhs = "xi_" + std::to_string(i) + " E = " + img.str();
                        rhs = want.str();
                    }
                }
                if (ok && e.coefficient(eta.parts()) != 1) {
                    ok = false;
                    lhs = "leading coefficient " +
                          rational_str(e.coefficient(eta.parts()));
                    rhs = "1";
                }
                if (ok) {
                    for (const auto& [exps, c] : e.terms()) {
                        (void)c;
                        const Composition nu{exps};
                        if (nu != eta && !strictly_precedes(nu, eta)) {
                            ok = false;
                            lhs = "support contains " + nu.str();
                            rhs = "only nu < " + eta.str();
                            break;
                        }
                    }
                }
                reports.push_back(make_report(
                    "eigen", instance_tag(n, eta, alpha), ok, lhs, rhs));
            }
        }
    return reports;
}

std::vector<VerificationReport> run_exchange(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = std::max(2, opt.n_min); n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const Composition& eta : grid_compositions(n, opt)) {
                const LaurentPolynomial& e = cache.eigenpoly(eta, ctx);
                bool ok = true;
                std::string lhs, rhs;
                for (int i = 1; i < n && ok; ++i) {
                    const LaurentPolynomial direct =
                        e.permuted(Permutation::transposition(n, i, i + 1));
                    const LaurentPolynomial via =
                        exchange_image(i, eta, ctx, cache);
                    if (direct != via) {
                        ok = false;
                        lhs = "s_" + std::to_string(i) + " E = " + direct.str();
                        rhs = via.str();
                    }
                }
                reports.push_back(make_report(
                    "exchange", instance_tag(n, eta, alpha), ok, lhs, rhs));
            }
        }
    return reports;
}

std::vector<VerificationReport> run_hook_ratios(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    for (int n = std::max(2, opt.n_min); n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas)
            for (const Composition& eta : grid_compositions(n, opt)) {
                const auto bar = spectral_vector(eta, alpha);
                bool any = false, ok = true;
                std::string lhs, rhs;
                for (int i = 1; i < n && ok; ++i) {
                    if (eta.part(i) <= eta.part(i + 1))
                        continue;
                    any = true;
                    const Composition flipped =
                        Permutation::transposition(n, i, i + 1).apply(eta);
                    const Rat db = bar[static_cast<std::size_t>(i - 1)] -
                                   bar[static_cast<std::size_t>(i)];
                    if (db == 0 || db == 1)
                        throw DegenerateParameterError(
                            "hook-ratio gap degenerate for " + eta.str());
                    const auto [d_eta, dp_eta] = hook_products(eta, alpha);
                    const auto [d_flip, dp_flip] =
                        hook_products(flipped, alpha);
                    if (d_flip / d_eta != (db + 1) / db) {
                        ok = false;
                        lhs = rational_str(d_flip / d_eta);
                        rhs = rational_str((db + 1) / db);
                    } else if (dp_flip / dp_eta != db / (db - 1)) {
                        ok = false;
                        lhs = rational_str(dp_flip / dp_eta);
                        rhs = rational_str(db / (db - 1));
                    }
                }
                if (any)
                    reports.push_back(make_report(
                        "hook-ratios", instance_tag(n, eta, alpha), ok, lhs,
                        rhs));
            }
    return reports;
}

std::vector<VerificationReport> run_evaluation(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            // E at ones
            for (const Composition& eta : grid_compositions(n, opt)) {
                const Rat direct = cache.eigenpoly(eta, ctx).eval_ones();
                const Rat closed = closed_form_E_ones(eta, n, alpha);
                reports.push_back(make_report(
                    "eval-ones", instance_tag(n, eta, alpha), direct == closed,
                    rational_str(direct), rational_str(closed)));
            }
            // U at ones, both closed forms, against the constructed U
            for (const SymmetrySpec& spec : grid_specs(n, opt)) {
                for (const Composition& es :
                     enumerate_eta_stars(spec, opt.deg_max)) {
                    const PrescribedJack pj =
                        prescribed_jack(es, spec, ctx, cache);
                    const Rat direct = pj.u_poly.eval_ones();
                    const Rat main = closed_form_U_ones(es, spec, ctx,
                                                        UOnesVariant::Main);
                    const Rat dunkl = closed_form_U_ones(es, spec, ctx,
                                                         UOnesVariant::Dunkl);
                    reports.push_back(make_report(
                        "u-ones",
                        spec.str() + " eta*=" + es.str() +
                            " alpha=" + rational_str(alpha),
                        direct == main && main == dunkl,
                        "constructed " + rational_str(direct),
                        "main " + rational_str(main) + ", dunkl " +
                            rational_str(dunkl)));
                }
                // k_J both modes
                const Rat kf = k_j(spec, ctx, KjMode::Formula);
                const Rat kd = k_j(spec, ctx, KjMode::Direct);
                reports.push_back(make_report(
                    "k-j", spec.str() + " alpha=" + rational_str(alpha),
                    kf == kd, rational_str(kd), rational_str(kf)));
                // the delta anchor: U_delta^{(0,J)}(1^N) = 1
                if (!spec.j_set().empty() && spec.i_set().empty()) {
                    const Composition delta = delta_of_spec(spec);
                    const PrescribedJack pj =
                        prescribed_jack(delta, spec, ctx, cache);
                    const Rat direct = pj.u_poly.eval_ones();
                    const Rat main = closed_form_U_ones(delta, spec, ctx,
                                                        UOnesVariant::Main);
                    reports.push_back(make_report(
                        "u-delta-one",
                        spec.str() + " alpha=" + rational_str(alpha),
                        direct == 1 && main == 1, rational_str(direct),
                        rational_str(main)));
                }
            }
        }
    return reports;
}

std::vector<VerificationReport> run_proportionality(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const SymmetrySpec& spec : grid_specs(n, opt)) {
                for (const Composition& es :
                     enumerate_eta_stars(spec, opt.deg_max)) {
                    // prescribed_jack already insists both routes agree
                    const PrescribedJack pj =
                        prescribed_jack(es, spec, ctx, cache);
                    bool ok = true;
                    std::string lhs, rhs;
                    for (const Composition& mu : orbit_of(es, spec)) {
                        const LaurentPolynomial sym =
                            symmetrize(spec, cache.eigenpoly(mu, ctx));
                        const Rat a_mu =
                            proportionality_constant(mu, spec, ctx);
                        if (sym != a_mu * pj.s_poly) {
                            ok = false;
                            lhs = "O_{I,J} E_" + mu.str();
                            rhs = "a * S with a = " + rational_str(a_mu);
                            break;
                        }
                    }
                    reports.push_back(make_report(
                        "proportionality",
                        spec.str() + " eta*=" + es.str() +
                            " alpha=" + rational_str(alpha),
                        ok, lhs, rhs));
                }
                // degenerate labels annihilate
                if (!spec.j_set().empty()) {
                    for (const Composition& eta : grid_compositions(n, opt)) {
                        bool degenerate = false;
                        for (const Block& b : spec.j_blocks())
                            for (int p = b.lo; p <= b.hi && !degenerate; ++p)
                                for (int q = p + 1; q <= b.hi; ++q)
                                    if (eta.part(p) == eta.part(q)) {
                                        degenerate = true;
                                        break;
                                    }
                        if (!degenerate)
                            continue;
                        const LaurentPolynomial sym =
                            symmetrize(spec, cache.eigenpoly(eta, ctx));
                        reports.push_back(make_report(
                            "vanishing-degenerate",
                            spec.str() + " eta=" + eta.str() +
                                " alpha=" + rational_str(alpha),
                            sym.is_zero(), sym.str(), "0"));
                    }
                }
            }
        }
    return reports;
}

std::vector<VerificationReport> run_oj_intertwine(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const SymmetrySpec& spec : grid_specs(n, opt)) {
                std::set<int> merged = spec.i_set();
                merged.insert(spec.j_set().begin(), spec.j_set().end());
                const SymmetrySpec sym_spec(n, merged, {});
                for (const Composition& es :
                     enumerate_eta_stars(spec, opt.deg_max)) {
                    const PrescribedJack pj =
                        prescribed_jack(es, spec, ctx, cache);
                    const LaurentPolynomial image =
                        o_j_apply(spec, pj.s_poly, ctx);
                    const PrescribedJack target =
                        prescribed_jack(es, sym_spec, ctx, cache);
                    const Rat c = c_star(es, spec, ctx);
                    bool ok = (image == c * target.s_poly);
                    std::string lhs = "O_J S", rhs = "c* S^{(IuJ,0)}, c* = " +
                                                     rational_str(c);
                    // s_i-invariance of the image
                    for (int i : merged)
                        if (image.permuted(Permutation::transposition(
                                n, i, i + 1)) != image) {
                            ok = false;
                            lhs = "s_" + std::to_string(i) + " O_J S";
                            rhs = "O_J S";
                        }
                    // evaluation route: O_J S at 1^N = U(1^N) k_J
                    const Rat left = image.eval_ones();
                    const Rat right =
                        closed_form_U_ones(es, spec, ctx, UOnesVariant::Main) *
                        k_j(spec, ctx, KjMode::Formula);
                    if (left != right) {
                        ok = false;
                        lhs = "O_J S (1^N) = " + rational_str(left);
                        rhs = "U(1^N) k_J = " + rational_str(right);
                    }
                    reports.push_back(make_report(
                        "oj-intertwine",
                        spec.str() + " eta*=" + es.str() +
                            " alpha=" + rational_str(alpha),
                        ok, lhs, rhs));
                }
            }
        }
    return reports;
}

std::vector<VerificationReport> run_dn5(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const SymmetrySpec& spec : grid_specs(n, opt))
                for (const Composition& es :
                     enumerate_eta_stars(spec, opt.deg_max))
                    for (const auto& [w, det] : wj_elements(spec)) {
                        (void)det;
                        reports.push_back(check_dn5(w, es, spec, ctx));
                    }
        }
    return reports;
}

std::vector<VerificationReport> run_expansion(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const SymmetrySpec& spec : grid_specs(n, opt))
                for (const Rat& r : opt.rs)
                    reports.push_back(
                        check_expansion(spec, r, ctx, opt.cutoff, cache));
        }
    return reports;
}

std::vector<VerificationReport> run_norms(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (int k : opt.ks) {
            // Dyson constant term
            const LaurentPolynomial one = LaurentPolynomial::constant(n, 1);
            const Rat dyson = ct_inner(one, one, k);
            BigInt kfact_pow = 1;
            for (int i = 0; i < n; ++i)
                kfact_pow *= factorial(k);
            const Rat closed = Rat(factorial(k * n)) / Rat(kfact_pow);
            reports.push_back(make_report(
                "dyson", "N=" + std::to_string(n) + " k=" + std::to_string(k),
                dyson == closed, rational_str(dyson), rational_str(closed)));

            for (const SymmetrySpec& spec : grid_specs(n, opt)) {
                const auto stars = enumerate_eta_stars(spec, opt.deg_max);
                for (const Composition& es : stars)
                    reports.push_back(check_norms(es, spec, k, cache));
                // orthogonality of distinct S's
                const OperatorContext ctx(n, Rat(1, k));
                std::vector<LaurentPolynomial> s_polys;
                s_polys.reserve(stars.size());
                for (const Composition& es : stars)
                    s_polys.push_back(
                        prescribed_jack(es, spec, ctx, cache).s_poly);
                for (std::size_t x = 0; x < stars.size(); ++x)
                    for (std::size_t y = x + 1; y < stars.size(); ++y) {
                        const Rat ip = ct_inner(s_polys[x], s_polys[y], k);
                        reports.push_back(make_report(
                            "orthogonality",
                            spec.str() + " eta*=" + stars[x].str() +
                                " nu*=" + stars[y].str() +
                                " k=" + std::to_string(k),
                            ip == 0, rational_str(ip), "0"));
                    }
            }
        }
    return reports;
}

std::vector<VerificationReport> run_ct_identity(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    JackCache cache;
    for (int n = opt.n_min; n <= opt.n_max; ++n)
        for (int k : opt.ks) {
            for (const SymmetrySpec& spec : grid_specs(n, opt))
                for (const Composition& es :
                     enumerate_eta_stars(spec, opt.deg_max))
                    for (int a = 0; a <= opt.a_max; ++a)
                        for (int b = 0; b <= opt.b_max; ++b)
                            reports.push_back(
                                check_ct_identity(es, spec, a, b, k, cache));
            // Macdonald-Kadell-Kaneko reduction at I = J = {}
            if (!opt.i_set && !opt.j_set)
                for (const Composition& eta : grid_compositions(n, opt))
                    for (int a = 0; a <= opt.a_max; ++a)
                        for (int b = 0; b <= opt.b_max; ++b)
                            reports.push_back(check_mkk(eta, a, b, k, cache));
        }
    return reports;
}

std::vector<VerificationReport> run_hecke(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    for (int n = std::max(2, opt.n_min); n <= opt.n_max; ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            bool ok = true;
            std::string lhs, rhs;
            std::vector<Composition> basis;
            for (int d = 0; d <= std::min(3, opt.deg_max); ++d)
                for (auto& c : compositions_of_degree(d, n))
                    basis.push_back(std::move(c));
            for (const Composition& mu : basis) {
                const LaurentPolynomial f =
                    LaurentPolynomial::monomial(mu.parts(), 1);
                for (int i = 1; i < n && ok; ++i) {
                    const Permutation si = Permutation::transposition(n, i, i + 1);
                    const LaurentPolynomial sf = f.permuted(si);
                    // xi_i s_i - s_i xi_{i+1} = 1
                    if (cherednik_apply(i, sf, ctx) -
                            cherednik_apply(i + 1, f, ctx).permuted(si) !=
                        f) {
                        ok = false;
                        lhs = "xi_i s_i - s_i xi_{i+1} on z^" + mu.str();
                        rhs = "identity";
                    }
                    // xi_{i+1} s_i - s_i xi_i = -1
                    if (ok && cherednik_apply(i + 1, sf, ctx) -
                                  cherednik_apply(i, f, ctx).permuted(si) !=
                                  -f) {
                        ok = false;
                        lhs = "xi_{i+1} s_i - s_i xi_i on z^" + mu.str();
                        rhs = "-identity";
                    }
                    // [xi_p, s_i] = 0 for p != i, i+1
                    for (int p = 1; p <= n && ok; ++p) {
                        if (p == i || p == i + 1)
                            continue;
                        if (cherednik_apply(p, sf, ctx) !=
                            cherednik_apply(p, f, ctx).permuted(si)) {
                            ok = false;
                            lhs = "[xi_" + std::to_string(p) + ", s_" +
                                  std::to_string(i) + "] on z^" + mu.str();
                            rhs = "0";
                        }
                    }
                    // intertwining s_i D_beta - D_{s_i beta} s_i =
                    // <beta, beta_i>/alpha
                    for (int j = 1; j <= n && ok; ++j)
                        for (int q = j + 1; q <= n && ok; ++q) {
                            std::vector<Rat> beta(
                                static_cast<std::size_t>(n), 0);
                            beta[static_cast<std::size_t>(j - 1)] = 1;
                            beta[static_cast<std::size_t>(q - 1)] = -1;
                            std::vector<Rat> sbeta = beta;
                            std::swap(sbeta[static_cast<std::size_t>(i - 1)],
                                      sbeta[static_cast<std::size_t>(i)]);
                            const Rat pairing =
                                beta[static_cast<std::size_t>(i - 1)] -
                                beta[static_cast<std::size_t>(i)];
                            const LaurentPolynomial left =
                                d_lambda_apply(beta, f, ctx).permuted(si);
                            const LaurentPolynomial right =
                                d_lambda_apply(sbeta, sf, ctx);
                            if (left - right != (pairing / ctx.alpha) * f) {
                                ok = false;
                                lhs = "s_i D_beta - D_{s_i beta} s_i, beta=e" +
                                      std::to_string(j) + "-e" +
                                      std::to_string(q) +
                                      ", i=" + std::to_string(i);
                                rhs = "<beta,beta_i>/alpha";
                            }
                        }
                }
                if (!ok)
                    break;
            }
            reports.push_back(make_report("hecke-relations",
                                          "N=" + std::to_string(n) +
                                              " alpha=" + rational_str(alpha),
                                          ok, lhs, rhs));
        }
    return reports;
}

std::vector<VerificationReport> run_vanishing(const VerifyOptions& opt)
{
    std::vector<VerificationReport> reports;
    for (int n = std::max(2, opt.n_min); n <= std::min(3, opt.n_max); ++n)
        for (const Rat& alpha : opt.alphas) {
            const OperatorContext ctx(n, alpha);
            for (const SymmetrySpec& spec : grid_specs(n, opt)) {
                const auto roots = spec.r_j_plus();
                if (roots.empty())
                    continue;
                LaurentPolynomial prod = LaurentPolynomial::constant(n, 1);
                for (const auto& [j, k] : roots) {
                    LaurentPolynomial::Exponents e(
                        static_cast<std::size_t>(n), 0);
                    e[static_cast<std::size_t>(j - 1)] = 1;
                    e[static_cast<std::size_t>(k - 1)] = -1;
                    prod = prod * (LaurentPolynomial::monomial(e, 1) -
                                   LaurentPolynomial::constant(n, 1));
                }
                const std::vector<LaurentPolynomial> fs = {
                    LaurentPolynomial::constant(n, 1),
                    pseudo_random_poly(n, static_cast<unsigned>(n))};
                for (std::size_t fi = 0; fi < fs.size(); ++fi) {
                    bool ok = true;
                    std::string lhs, rhs;
                    for (std::size_t l = 0; l < roots.size() && ok; ++l) {
                        LaurentPolynomial img = prod * fs[fi];
                        for (std::size_t t = 0; t < l; ++t)
                            img = d_beta_apply(roots[t].first,
                                               roots[t].second, img, ctx);
                        if (img.eval_ones() != 0) {
                            ok = false;
                            lhs = "l=" + std::to_string(l) + ": " +
                                  rational_str(img.eval_ones());
                            rhs = "0";
                        }
                        // repeated first root selection
                        if (ok && l >= 1) {
                            LaurentPolynomial img2 = prod * fs[fi];
                            for (std::size_t t = 0; t < l; ++t)
                                img2 = d_beta_apply(roots[0].first,
                                                    roots[0].second, img2,
                                                    ctx);
                            if (img2.eval_ones() != 0) {
                                ok = false;
                                lhs = "repeated-root l=" + std::to_string(l) +
                                      ": " + rational_str(img2.eval_ones());
                                rhs = "0";
                            }
                        }
                    }
                    // full length: factorizes through F(1^N) k_J
                    if (ok) {
                        LaurentPolynomial img = prod * fs[fi];
                        for (const auto& [j, k] : roots)
                            img = d_beta_apply(j, k, img, ctx);
                        const Rat want = fs[fi].eval_ones() *
                                         k_j(spec, ctx, KjMode::Formula);
                        if (img.eval_ones() != want) {
                            ok = false;
                            lhs = rational_str(img.eval_ones());
                            rhs = "F(1^N) k_J = " + rational_str(want);
                        }
                    }
                    reports.push_back(make_report(
                        "vanishing",
                        spec.str() + " alpha=" + rational_str(alpha) + " F#" +
                            std::to_string(fi),
                        ok, lhs, rhs));
                }
            }
        }
    return reports;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "eigen",          "exchange",  "hook-ratios", "proportionality",
        "oj-intertwine",  "evaluation", "dn5",        "expansion",
        "norms",          "ct-identity", "hecke-relations", "vanishing"};
    return names;
}

std::vector<VerificationReport> run_suite(const std::string& name,
                                          const VerifyOptions& options)
{
    if (name == "eigen")
        return run_eigen(options);
    if (name == "exchange")
        return run_exchange(options);
    if (name == "hook-ratios")
        return run_hook_ratios(options);
    if (name == "proportionality")
        return run_proportionality(options);
    if (name == "oj-intertwine")
        return run_oj_intertwine(options);
    if (name == "evaluation")
        return run_evaluation(options);
    if (name == "dn5")
        return run_dn5(options);
    if (name == "expansion")
        return run_expansion(options);
    if (name == "norms")
        return run_norms(options);
    if (name == "ct-identity")
        return run_ct_identity(options);
    if (name == "hecke-relations")
        return run_hecke(options);
    if (name == "vanishing")
        return run_vanishing(options);
    throw InvalidInputError("unknown suite '" + name + "'");
}

std::vector<SymmetrySpec> enumerate_specs(int nvars)
{
    std::vector<SymmetrySpec> specs;
    const int m = nvars - 1;
    std::vector<int> assign(static_cast<std::size_t>(std::max(m, 0)), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == m) {
            std::set<int> i_set, j_set;
            for (int p = 0; p < m; ++p) {
                if (assign[static_cast<std::size_t>(p)] == 1)
                    i_set.insert(p + 1);
                else if (assign[static_cast<std::size_t>(p)] == 2)
                    j_set.insert(p + 1);
            }
            specs.emplace_back(nvars, i_set, j_set);
            return;
        }
        for (int v = 0; v < 3; ++v) {
            if (pos > 0) {
                const int prev = assign[static_cast<std::size_t>(pos - 1)];
                if ((prev == 1 && v == 2) || (prev == 2 && v == 1))
                    continue; // coloring rule
            }
            assign[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    return specs;
}

std::vector<Composition> enumerate_eta_stars(const SymmetrySpec& spec,
                                             int deg_max)
{
    std::vector<Composition> out;
    for (int d = 0; d <= deg_max; ++d)
        for (const Composition& c : compositions_of_degree(d, spec.nvars()))
            if (is_valid_eta_star(c, spec))
                out.push_back(c);
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports)
{
    return std::all_of(reports.begin(), reports.end(),
                       [](const VerificationReport& r) { return r.pass; });
}

} // namespace jackps
