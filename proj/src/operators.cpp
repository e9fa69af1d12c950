#include "jackps/operators.hpp"

#include "jackps/errors.hpp"

namespace jackps {

OperatorContext::OperatorContext(int n, Rat a) : nvars(n), alpha(std::move(a))
{
    if (nvars < 1)
        throw InvalidInputError("operator context: N must be at least 1");
    if (alpha == 0)
        throw InvalidInputError("operator context: alpha must be nonzero");
}

LaurentPolynomial cherednik_apply(int i, const LaurentPolynomial& f,
                                  const OperatorContext& ctx)
{
    const int n = ctx.nvars;
    if (f.nvars() != n)
        throw InvalidInputError("cherednik_apply: variable-count mismatch");
    if (i < 1 || i > n)
        throw InvalidInputError("cherednik_apply: index out of range");

    LaurentPolynomial result = ctx.alpha * f.z_dz(i);
    for (int p = 1; p <= n; ++p) {
        if (p == i)
            continue;
        const LaurentPolynomial diff =
            f - f.permuted(Permutation::transposition(n, i, p));
        if (diff.is_zero())
            continue;
        const LaurentPolynomial divisor = LaurentPolynomial::variable(n, i) -
                                          LaurentPolynomial::variable(n, p);
        const LaurentPolynomial quot = exact_divide(diff, divisor);
        result += LaurentPolynomial::variable(n, p < i ? i : p) * quot;
    }
    result += Rat(1 - i) * f;
    return result;
}

LaurentPolynomial d_lambda_apply(const std::vector<Rat>& lambda,
                                 const LaurentPolynomial& f,
                                 const OperatorContext& ctx)
{
    const int n = ctx.nvars;
    if (static_cast<int>(lambda.size()) != n)
        throw InvalidInputError("d_lambda_apply: lambda length mismatch");
    LaurentPolynomial result = LaurentPolynomial::zero(n);
    Rat lambda_sum = 0;
    for (int j = 1; j <= n; ++j) {
        const Rat& lj = lambda[static_cast<std::size_t>(j - 1)];
        if (lj == 0)
            continue;
        lambda_sum += lj;
        result += lj * cherednik_apply(j, f, ctx);
    }
    result += (lambda_sum * Rat(n - 1) / 2) * f;
    return (1 / ctx.alpha) * result;
}

LaurentPolynomial d_beta_apply(int j, int k, const LaurentPolynomial& f,
                               const OperatorContext& ctx)
{
    if (j == k)
        throw InvalidInputError("d_beta_apply: j and k must differ");
    return (1 / ctx.alpha) *
           (cherednik_apply(j, f, ctx) - cherednik_apply(k, f, ctx));
}

LaurentPolynomial symmetrize(const SymmetrySpec& spec,
                             const LaurentPolynomial& f)
{
    if (f.nvars() != spec.nvars())
        throw InvalidInputError("symmetrize: variable-count mismatch");
    LaurentPolynomial result = LaurentPolynomial::zero(f.nvars());
    for (const auto& [w, det_j] : group_elements(spec)) {
        if (det_j > 0)
            result += f.permuted(w);
        else
            result -= f.permuted(w);
    }
    return result;
}

LaurentPolynomial o_j_apply(const SymmetrySpec& spec,
                            const LaurentPolynomial& f,
                            const OperatorContext& ctx)
{
    if (spec.nvars() != ctx.nvars)
        throw InvalidInputError("o_j_apply: variable-count mismatch");
    LaurentPolynomial result = f;
    const Rat inv_alpha = 1 / ctx.alpha;
    for (const auto& [j, k] : spec.r_j_plus())
        result = d_beta_apply(j, k, result, ctx) + inv_alpha * result;
    return result;
}

} // namespace jackps
