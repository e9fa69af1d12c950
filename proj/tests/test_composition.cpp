#include <doctest.h>

#include "jackps/composition.hpp"
#include "jackps/errors.hpp"

using namespace jackps;

TEST_CASE("sort_to_partition")
{
    CHECK(sort_to_partition(Composition({0, 2, 1})) == Composition({2, 1, 0}));
    CHECK(sort_to_partition(Composition({0, 0})) == Composition({0, 0}));
    CHECK(sort_to_partition(Composition({1, 0})) == Composition({1, 0}));
}

TEST_CASE("precedes resolves the examples")
{
    CHECK(precedes(Composition({1, 1}), Composition({2, 0})) ==
          Precedence::Before);
    CHECK(precedes(Composition({0, 1}), Composition({1, 0})) ==
          Precedence::Before);
    // same partition, partial sums (2,2,3) vs (1,3,3): incomparable
    CHECK(precedes(Composition({2, 0, 1}), Composition({1, 2, 0})) ==
          Precedence::Incomparable);
    CHECK(precedes(Composition({2, 0}), Composition({1, 1})) ==
          Precedence::After);
    CHECK(precedes(Composition({1, 0}), Composition({1, 0})) ==
          Precedence::Incomparable);
    CHECK_THROWS_AS(precedes(Composition({1}), Composition({1, 0})),
                    InvalidInputError);
    CHECK_THROWS_AS(precedes(Composition({2, 0}), Composition({1, 0})),
                    InvalidInputError);
}

TEST_CASE("spectral vectors")
{
    const Rat two = 2;
    CHECK(spectral_vector(Composition({1, 0}), two) ==
          std::vector<Rat>{2, -1});
    CHECK(spectral_vector(Composition({0, 1}), two) ==
          std::vector<Rat>{-1, 2});
    CHECK(spectral_vector(Composition({0, 0}), two) ==
          std::vector<Rat>{0, -1});
    CHECK(spectral_vector(Composition({0, 0}), Rat(5, 3)) ==
          std::vector<Rat>{0, -1});
}

TEST_CASE("spectral vector is equivariant under regular transpositions")
{
    const std::vector<Rat> alphas = {Rat(2), Rat(1, 2), Rat(5, 3)};
    for (const Rat& alpha : alphas)
        for (int n = 2; n <= 4; ++n)
            for (int d = 0; d <= 4; ++d)
                for (const auto& eta : compositions_of_degree(d, n))
                    for (int i = 1; i < n; ++i) {
                        if (eta.part(i) == eta.part(i + 1))
                            continue;
                        std::vector<int> flipped = eta.parts();
                        std::swap(flipped[i - 1], flipped[i]);
                        auto bar = spectral_vector(eta, alpha);
                        std::swap(bar[i - 1], bar[i]);
                        CHECK(bar ==
                              spectral_vector(Composition(flipped), alpha));
                    }
}

TEST_CASE("arm and leg")
{
    CHECK(arm_leg(Composition({1, 0}), {1, 1}) == std::pair{0, 0});
    CHECK(arm_leg(Composition({0, 1}), {2, 1}) == std::pair{0, 1});
    CHECK(arm_leg(Composition({2, 0}), {1, 1}) == std::pair{1, 0});
    CHECK_THROWS_AS(arm_leg(Composition({1, 0}), {2, 1}), InvalidInputError);
}

TEST_CASE("hook products")
{
    const Rat two = 2;
    CHECK(hook_products(Composition({1, 0}), two) == std::pair<Rat, Rat>{3, 2});
    CHECK(hook_products(Composition({0, 1}), two) == std::pair<Rat, Rat>{4, 3});
    CHECK(hook_products(Composition({0, 0}), two) == std::pair<Rat, Rat>{1, 1});
}

TEST_CASE("generalized Pochhammer")
{
    const Rat two = 2;
    const Rat u = 1 + Rat(2) / two; // 1 + 2/alpha at alpha = 2
    CHECK(gen_pochhammer(u, Composition({0, 0, 0}), two) == 1);
    CHECK(gen_pochhammer(u, Composition({1, 0}), two) == 2);
    CHECK(gen_pochhammer(u, Composition({2, 0}), two) == 6);
    CHECK_THROWS_AS(gen_pochhammer(u, Composition({0, 1}), two),
                    InvalidInputError);
}

TEST_CASE("poch_ratio cancels slot by slot")
{
    const Rat alpha = 1;
    // [0]_{(1,0)} / [0]_{(1,0)} would be 0/0; the slot ratio is 1
    CHECK(poch_ratio(Rat(0), Composition({1, 0}), Composition({1, 0}),
                     alpha) == 1);
    // plain ratio where defined
    const Rat u = Rat(7, 3);
    CHECK(poch_ratio(u, Composition({3, 1}), Composition({1, 0}), alpha) ==
          gen_pochhammer(u, Composition({3, 1}), alpha) /
              gen_pochhammer(u, Composition({1, 0}), alpha));
    CHECK_THROWS_AS(poch_ratio(u, Composition({1, 0}), Composition({2, 0}),
                               alpha),
                    InvalidInputError);
}

TEST_CASE("pochhammer shift identity used by the CT substitution")
{
    // [u]_{lambda + 1^N} / [u]_lambda = prod_j (u - (j-1)/alpha + lambda_j)
    const Rat u = Rat(-5, 2);
    const Rat alpha = Rat(5, 3);
    const Composition lambda({3, 1, 0});
    std::vector<int> shifted = lambda.parts();
    for (int& p : shifted)
        ++p;
    Rat expect = 1;
    for (int j = 1; j <= lambda.size(); ++j)
        expect *= u - Rat(j - 1) / alpha + lambda.part(j);
    CHECK(poch_ratio(u, Composition(shifted), lambda, alpha) == expect);
}

TEST_CASE("e factors")
{
    const Rat two = 2;
    CHECK(e_factors(Composition({1, 0}), 2, two) ==
          std::pair<Rat, Rat>{4, Rat(3, 2)});
    CHECK(e_factors(Composition({0, 0}), 2, two) == std::pair<Rat, Rat>{1, 1});
    CHECK(e_factors(Composition({2, 0}), 2, two) ==
          std::pair<Rat, Rat>{24, Rat(15, 4)});
}

TEST_CASE("composition enumeration and cones")
{
    CHECK(compositions_of_degree(2, 2).size() == 3);
    CHECK(compositions_of_degree(0, 3).size() == 1);

    const auto cone = cone_of(Composition({1, 0}));
    CHECK(cone.size() == 2);
    CHECK(cone_of(Composition({0, 1})).size() == 1);

    // cones are downward closed under <
    const auto big = cone_of(Composition({2, 0, 1}));
    for (const auto& nu : big)
        for (const auto& mu : big)
            if (strictly_precedes(nu, mu))
                CHECK(std::find(big.begin(), big.end(), nu) != big.end());
}

TEST_CASE("composition validation")
{
    CHECK_THROWS_AS(Composition({-1, 0}), InvalidInputError);
    CHECK_THROWS_AS(Composition(std::vector<int>{}), InvalidInputError);
    CHECK(Composition({0}).degree() == 0);
}
