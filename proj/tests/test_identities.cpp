#include <doctest.h>

#include "jackps/errors.hpp"
#include "jackps/identities.hpp"

using namespace jackps;

namespace {

LaurentPolynomial z(int n, int p) { return LaurentPolynomial::variable(n, p); }

} // namespace

TEST_CASE("ct_inner Dyson values")
{
    const LaurentPolynomial one = LaurentPolynomial::constant(2, 1);
    CHECK(ct_inner(one, one, 1) == 2);
    CHECK(ct_inner(one, one, 2) == 6);
    const LaurentPolynomial one3 = LaurentPolynomial::constant(3, 1);
    CHECK(ct_inner(one3, one3, 1) == 6);  // 3!/1
    CHECK(ct_inner(one3, one3, 2) == 90); // 6!/2^3
}

TEST_CASE("ct_inner orthogonality of distinct E's")
{
    JackCache cache;
    const OperatorContext ctx(2, Rat(1));
    const LaurentPolynomial& a = cache.eigenpoly(Composition({1, 0}), ctx);
    const LaurentPolynomial& b = cache.eigenpoly(Composition({0, 1}), ctx);
    CHECK(ct_inner(a, b, 1) == 0);
    CHECK(ct_inner(a, a, 1) == Rat(3, 2)); // ||E_{(1,0)}||^2 at alpha = 1
}

TEST_CASE("ct_geometric agrees with exact division when divisible")
{
    const int n = 2;
    const LaurentPolynomial one = LaurentPolynomial::constant(n, 1);
    const LaurentPolynomial g1 = one - z(n, 1).inverted_variables();
    const LaurentPolynomial g2 = one - z(n, 2).inverted_variables();
    const LaurentPolynomial q =
        LaurentPolynomial::monomial({1, -1}, Rat(2)) +
        LaurentPolynomial::monomial({-1, 0}, Rat(-1, 3)) +
        LaurentPolynomial::monomial({1, 1}, Rat(5)) + one;
    // the series inverse cancels the divisible factors exactly
    CHECK(ct_geometric(q * g1 * g2, {1, 1}) == q.constant_term());
    CHECK(ct_geometric(q * g1 * g1 * g2, {2, 1}) == q.constant_term());

    // weight 0 variables demand exponent zero
    CHECK(ct_geometric(z(n, 1), {0, 0}) == 0);
    CHECK(ct_geometric(one, {0, 0}) == 1);

    // hand instance: CT((x1-x2)^4/(x1 x2)^2 * (1-1/x1)^{-1} (1-1/x2)^{-1})
    const LaurentPolynomial num = pow(z(n, 1) - z(n, 2), 4);
    const LaurentPolynomial p =
        num * LaurentPolynomial::monomial({-2, -2}, 1);
    CHECK(ct_geometric(p, {1, 1}) == 6);
}

TEST_CASE("check_dn5 instances")
{
    const OperatorContext ctx(2, Rat(2));
    const SymmetrySpec anti(2, {}, {1});
    const Composition star({1, 0});
    CHECK(check_dn5(Permutation::identity(2), star, anti, ctx).pass);
    const auto rep =
        check_dn5(Permutation::transposition(2, 1, 2), star, anti, ctx);
    CHECK(rep.pass);
    CHECK(rep.lhs == "2");
    CHECK(rep.rhs == "2");
}

TEST_CASE("check_expansion frozen small instances")
{
    JackCache cache;
    const OperatorContext ctx(2, Rat(2));
    const SymmetrySpec anti(2, {}, {1});
    CHECK(check_expansion(anti, Rat(7, 3), ctx, 0, cache).pass);
    CHECK(check_expansion(anti, Rat(7, 3), ctx, 1, cache).pass);
    CHECK(check_expansion(anti, Rat(4), ctx, 2, cache).pass);

    const SymmetrySpec sym(2, {1}, {});
    CHECK(check_expansion(sym, Rat(2), ctx, 1, cache).pass);

    // degree-1 coefficient of the left side is -(r-2)
    CHECK(binomial_rat(Rat(7, 3) - 2, 1) * Rat(-1) == -(Rat(7, 3) - 2));
}

TEST_CASE("check_norms examples")
{
    JackCache cache;
    // ||E_{(1,0)}||^2 / ||1||^2 = 3/4 at N=2, k=1
    const SymmetrySpec trivial(2, {}, {});
    const auto rep = check_norms(Composition({1, 0}), trivial, 1, cache);
    CHECK(rep.pass);
    CHECK(check_norms(Composition({0, 0}), trivial, 1, cache).pass);
    const SymmetrySpec anti(2, {}, {1});
    CHECK(check_norms(Composition({1, 0}), anti, 1, cache).pass);
    CHECK(check_norms(Composition({2, 0}), anti, 2, cache).pass);
}

TEST_CASE("check_ct_identity on the acceptance block")
{
    JackCache cache;
    const SymmetrySpec anti(2, {}, {1});
    for (const Composition& star : {Composition({1, 0}), Composition({2, 0})})
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b) {
                const auto rep = check_ct_identity(star, anti, a, b, 1, cache);
                CAPTURE(rep.params);
                CAPTURE(rep.lhs);
                CAPTURE(rep.rhs);
                CHECK(rep.pass);
            }
}

TEST_CASE("check_mkk reduction")
{
    JackCache cache;
    for (const Composition& eta :
         {Composition({1, 0}), Composition({0, 1}), Composition({2, 0})})
        for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
                CHECK(check_mkk(eta, a, b, 1, cache).pass);
}

TEST_CASE("report json shape")
{
    VerificationReport rep;
    rep.id = "demo";
    rep.params = "N=2";
    rep.pass = false;
    rep.lhs = "1";
    rep.rhs = "2";
    const std::string j = report_to_json(rep);
    CHECK(j.find("\"status\":\"fail\"") != std::string::npos);
    CHECK(j.find("\"id\":\"demo\"") != std::string::npos);
}
