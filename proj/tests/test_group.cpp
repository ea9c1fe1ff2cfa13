#include <catch2/catch_amalgamated.hpp>

#include <neargroup/group.hpp>

using namespace neargroup;

TEST_CASE("cyclic and product tables") {
    GroupTable c4 = build_group_table(FiniteGroupSpec::cyclic(4));
    CHECK(c4.order() == 4);
    CHECK(c4.mul(3, 2) == 1);
    CHECK(c4.inverse[1] == 3);
    CHECK(c4.is_abelian());
    CHECK(c4.element_order(1) == 4);
    CHECK(c4.element_order(2) == 2);

    GroupTable v4 = build_group_table(FiniteGroupSpec::product({2, 2}));
    CHECK(v4.order() == 4);
    CHECK(v4.names[3] == "(1,1)");
    for (int i = 0; i < 4; ++i) CHECK(v4.mul(i, i) == 0);

    GroupTable trivial = build_group_table(FiniteGroupSpec::product({}));
    CHECK(trivial.order() == 1);
    CHECK(trivial.canonical_generators.empty());
}

TEST_CASE("permutation closure") {
    // <(0,1,2), (0,1)> is the symmetric group on three points
    FiniteGroupSpec s3 = FiniteGroupSpec::parse("perm:(0,1,2);(0,1)");
    GroupTable t = build_group_table(s3);
    CHECK(t.order() == 6);
    CHECK_FALSE(t.is_abelian());
    CHECK(t.names[0] == "e");

    // closure respects the element bound
    FiniteGroupSpec big = FiniteGroupSpec::parse("perm:(0,1,2,3,4,5,6,7,8);(0,1)");
    big.element_bound = 1000;  // 9! is way past this
    CHECK_THROWS_AS(build_group_table(big), std::invalid_argument);

    // identity and inverses are consistent
    for (int i = 0; i < t.order(); ++i) {
        CHECK(t.mul(i, t.inverse[i]) == 0);
        CHECK(t.mul(0, i) == i);
    }
}

TEST_CASE("spec parsing round-trips") {
    for (const char* text : {"trivial", "cyclic:6", "product:2,4", "perm:(0,1,2)(3,4);(0,1)"}) {
        FiniteGroupSpec spec = FiniteGroupSpec::parse(text);
        CHECK(spec.describe() == text);
    }
    CHECK_THROWS_AS(FiniteGroupSpec::parse("ring:5"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupSpec::parse("cyclic"), std::invalid_argument);
    CHECK_THROWS_AS(FiniteGroupSpec::parse("perm:(0,1"), std::invalid_argument);
}

TEST_CASE("subgroup machinery on the order-6 nonabelian group") {
    GroupTable t = build_group_table(FiniteGroupSpec::parse("perm:(0,1,2);(0,1)"));

    auto classes = conjugacy_classes(t);
    REQUIRE(classes.size() == 3);
    CHECK(classes[0] == std::vector<int>{0});
    size_t sizes = 0;
    for (const auto& c : classes) sizes += c.size();
    CHECK(sizes == 6);

    CHECK(center(t) == std::vector<int>{0});
    CHECK(commutator_subgroup(t).size() == 3);
    CHECK(minimal_generating_set(t).size() == 2);
}

TEST_CASE("invariant factors from tables") {
    auto factors = [](const FiniteGroupSpec& s) {
        return abelian_invariant_factors(build_group_table(s));
    };
    CHECK(factors(FiniteGroupSpec::cyclic(12)) == std::vector<long>{12});
    CHECK(factors(FiniteGroupSpec::product({2, 4})) == std::vector<long>{2, 4});
    CHECK(factors(FiniteGroupSpec::product({2, 2})) == std::vector<long>{2, 2});
    CHECK(factors(FiniteGroupSpec::product({6, 4})) == std::vector<long>{2, 12});
    CHECK(factors(FiniteGroupSpec::product({3, 5})) == std::vector<long>{15});
    CHECK(factors(FiniteGroupSpec::product({2, 2, 2})) == std::vector<long>{2, 2, 2});
    CHECK(factors(FiniteGroupSpec::cyclic(1)).empty());

    GroupTable s3 = build_group_table(FiniteGroupSpec::parse("perm:(0,1,2);(0,1)"));
    CHECK_THROWS_AS(abelian_invariant_factors(s3), std::invalid_argument);
}

TEST_CASE("abelian enumeration") {
    auto groups = enumerate_abelian_groups(8);
    // orders 1..8: 1,1,1,2,1,1,1,3 chains
    CHECK(groups.size() == 11);
    CHECK(groups.front().empty());
    CHECK(std::count(groups.begin(), groups.end(), std::vector<long>{2, 4}) == 1);
    CHECK(std::count(groups.begin(), groups.end(), std::vector<long>{2, 2, 2}) == 1);
    CHECK(std::count(groups.begin(), groups.end(), std::vector<long>{8}) == 1);

    // every chain is a divisibility chain and groups appear exactly once
    for (const auto& c : groups)
        for (size_t i = 1; i < c.size(); ++i) CHECK(c[i] % c[i - 1] == 0);
}

TEST_CASE("canonical specs") {
    GroupTable t = build_group_table(FiniteGroupSpec::product({4, 2}));
    FiniteGroupSpec canon = canonical_spec(t);
    CHECK(canon.describe() == "product:2,4");

    GroupTable s3 = build_group_table(FiniteGroupSpec::parse("perm:(0,1,2);(0,1)"));
    FiniteGroupSpec back = canonical_spec(s3);
    GroupTable t2 = build_group_table(back);
    CHECK(t2.order() == 6);
    CHECK_FALSE(t2.is_abelian());
}

TEST_CASE("automorphism enumeration") {
    auto count = [](const FiniteGroupSpec& s) {
        return enumerate_automorphism_maps(build_group_table(s)).size();
    };
    CHECK(count(FiniteGroupSpec::cyclic(1)) == 1);
    CHECK(count(FiniteGroupSpec::cyclic(3)) == 2);
    CHECK(count(FiniteGroupSpec::cyclic(8)) == 4);
    CHECK(count(FiniteGroupSpec::product({2, 2})) == 6);
    CHECK(count(FiniteGroupSpec::product({2, 4})) == 8);
    CHECK(count(FiniteGroupSpec::parse("perm:(0,1,2);(0,1)")) == 6);

    // each map is an automorphism: bijective and multiplicative
    GroupTable t = build_group_table(FiniteGroupSpec::product({2, 4}));
    for (const auto& phi : enumerate_automorphism_maps(t)) {
        CHECK(is_permutation(phi));
        for (int x = 0; x < t.order(); ++x)
            for (int y = 0; y < t.order(); ++y)
                CHECK(phi[t.mul(x, y)] == t.mul(phi[x], phi[y]));
    }
}
