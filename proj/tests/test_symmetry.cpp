#include <doctest.h>

#include <algorithm>

#include "jackps/errors.hpp"
#include "jackps/symmetry.hpp"

using namespace jackps;

TEST_CASE("spec validation")
{
    CHECK_NOTHROW(SymmetrySpec(2, {}, {1}));
    CHECK_NOTHROW(SymmetrySpec(4, {1}, {3}));
    CHECK_THROWS_AS(SymmetrySpec(3, {1}, {1}), InvalidInputError);
    CHECK_THROWS_AS(SymmetrySpec(3, {1}, {2}), InvalidInputError); // adjacent
    CHECK_THROWS_AS(SymmetrySpec(2, {}, {2}), InvalidInputError);  // range
}

TEST_CASE("blocks are extended runs")
{
    const SymmetrySpec spec(6, {1}, {3, 4});
    const auto blocks = spec.blocks();
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].lo == 1);
    CHECK(blocks[0].hi == 2);
    CHECK_FALSE(blocks[0].antisym);
    CHECK(blocks[1].lo == 3);
    CHECK(blocks[1].hi == 5);
    CHECK(blocks[1].antisym);
    CHECK(spec.r_j_plus() ==
          std::vector<std::pair<int, int>>{{3, 4}, {3, 5}, {4, 5}});
    CHECK(spec.group_order() == 12); // 2! * 3!
}

TEST_CASE("delta of spec")
{
    CHECK(delta_of_spec(SymmetrySpec(2, {}, {1})) == Composition({1, 0}));
    CHECK(delta_of_spec(SymmetrySpec(4, {}, {1, 2})) ==
          Composition({2, 1, 0, 0}));
    CHECK(delta_of_spec(SymmetrySpec(3, {}, {})) == Composition({0, 0, 0}));
    CHECK(delta_of_spec(SymmetrySpec(3, {}, {2})) == Composition({0, 1, 0}));
    CHECK(delta_of_spec(SymmetrySpec(4, {}, {1, 3})) ==
          Composition({1, 0, 1, 0}));
}

TEST_CASE("orbit variants")
{
    const SymmetrySpec j_spec(2, {}, {1});
    CHECK(orbit_variant(Composition({0, 1}), j_spec, BlockSort::Keep,
                        BlockSort::Decreasing) == Composition({1, 0}));
    CHECK(orbit_variant(Composition({1, 0}), j_spec, BlockSort::Keep,
                        BlockSort::Increasing) == Composition({0, 1}));
    const SymmetrySpec i_spec(3, {1}, {});
    CHECK(orbit_variant(Composition({2, 0, 1}), i_spec, BlockSort::Increasing,
                        BlockSort::Keep) == Composition({0, 2, 1}));
    CHECK_THROWS_AS(orbit_variant(Composition({1, 1}), j_spec, BlockSort::Keep,
                                  BlockSort::Decreasing),
                    InvalidInputError);
}

TEST_CASE("eta_star")
{
    CHECK(eta_star(Composition({0, 1}), SymmetrySpec(2, {}, {1})) ==
          Composition({1, 0}));
    CHECK(eta_star(Composition({0, 2, 0}), SymmetrySpec(3, {1}, {})) ==
          Composition({2, 0, 0}));
    CHECK_THROWS_WITH_AS(
        eta_star(Composition({1, 1}), SymmetrySpec(2, {}, {1})),
        doctest::Contains("repeated part in J-block"), InvalidInputError);

    // idempotent and inside the W orbit
    const SymmetrySpec spec(4, {1}, {3});
    const Composition eta({0, 2, 1, 3});
    const Composition star = eta_star(eta, spec);
    CHECK(eta_star(star, spec) == star);
    const auto orbit = orbit_of(eta, spec);
    CHECK(std::find(orbit.begin(), orbit.end(), star) != orbit.end());
}

TEST_CASE("stabilizer order")
{
    CHECK(stabilizer_order(Composition({1, 0}), {}, 2) == 1);
    CHECK(stabilizer_order(Composition({1, 1, 0}), {1}, 3) == 2);
    CHECK(stabilizer_order(Composition({2, 1, 0}), {1, 2}, 3) == 1);
}

TEST_CASE("stabilizer times orbit size is the group order")
{
    const SymmetrySpec spec(4, {1, 2}, {});
    for (const Composition& eta :
         {Composition({1, 1, 0, 2}), Composition({2, 2, 2, 0}),
          Composition({3, 1, 0, 0})}) {
        std::set<Composition> images;
        for (const auto& [w, det] : group_elements(spec)) {
            (void)det;
            images.insert(w.apply(eta));
        }
        CHECK(stabilizer_order(eta, spec.i_set(), 4) *
                  BigInt(images.size()) ==
              spec.group_order());
    }
}

TEST_CASE("group elements and det_J")
{
    const auto two = group_elements(SymmetrySpec(2, {}, {1}));
    REQUIRE(two.size() == 2);
    int plus = 0, minus = 0;
    for (const auto& [w, det] : two) {
        (void)w;
        (det > 0 ? plus : minus)++;
    }
    CHECK(plus == 1);
    CHECK(minus == 1);

    const auto isym = group_elements(SymmetrySpec(3, {1}, {}));
    REQUIRE(isym.size() == 2);
    for (const auto& [w, det] : isym) {
        (void)w;
        CHECK(det == 1);
    }

    const auto mixed = group_elements(SymmetrySpec(4, {1}, {3}));
    REQUIRE(mixed.size() == 4);
    std::multiset<int> signs;
    for (const auto& [w, det] : mixed) {
        (void)w;
        signs.insert(det);
    }
    CHECK(signs == std::multiset<int>{-1, -1, 1, 1});
}

TEST_CASE("permutation machinery")
{
    const Permutation s12 = Permutation::transposition(3, 1, 2);
    CHECK(s12.apply(Composition({5, 7, 9})) == Composition({7, 5, 9}));
    CHECK(s12.sign() == -1);
    CHECK(s12.compose(s12).is_identity());

    // composition respects the group law on exponent vectors
    const Permutation a = Permutation::transposition(4, 1, 3);
    const Permutation b = Permutation::transposition(4, 2, 3);
    const std::vector<int> v{4, 5, 6, 7};
    CHECK(a.compose(b).apply(v) == a.apply(b.apply(v)));
    CHECK(a.inverse().compose(a).is_identity());
}
