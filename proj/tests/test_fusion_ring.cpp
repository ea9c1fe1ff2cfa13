#include <catch2/catch_amalgamated.hpp>

#include <neargroup/fusion_ring.hpp>

using namespace neargroup;

namespace {
FusionRing near_group(const std::string& g, long k) {
    return build_near_group(NearGroupRule{FiniteGroupSpec::parse(g), k});
}
}  // namespace

TEST_CASE("group rings") {
    FusionRing triv = build_group_ring(FiniteGroupSpec::parse("trivial"));
    CHECK(triv.rank() == 1);
    CHECK(triv.n(0, 0, 0) == 1);
    CHECK(check_axioms(triv).empty());

    FusionRing c3 = build_group_ring(FiniteGroupSpec::cyclic(3));
    CHECK(c3.rank() == 3);
    CHECK(c3.dual(1) == 2);
    CHECK(c3.n(1, 2, 0) == 1);
    CHECK(check_axioms(c3).empty());
    for (int i = 0; i < 3; ++i) CHECK(c3.is_invertible(i));

    FusionRing s3 = build_group_ring(FiniteGroupSpec::parse("perm:(0,1,2);(0,1)"));
    CHECK(s3.rank() == 6);
    CHECK_FALSE(s3.is_commutative());
    CHECK(check_axioms(s3).empty());
}

TEST_CASE("near-group rings") {
    FusionRing yl = near_group("trivial", 1);
    CHECK(yl.rank() == 2);
    CHECK(yl.n(1, 1, 0) == 1);
    CHECK(yl.n(1, 1, 1) == 1);
    CHECK(check_axioms(yl).empty());

    FusionRing ty3 = near_group("cyclic:3", 0);
    CHECK(ty3.rank() == 4);
    CHECK(ty3.n(3, 3, 0) == 1);
    CHECK(ty3.n(3, 3, 1) == 1);
    CHECK(ty3.n(3, 3, 2) == 1);
    CHECK(ty3.n(3, 3, 3) == 0);
    CHECK(ty3.dual(3) == 3);

    FusionRing z2 = near_group("cyclic:2", 1);
    CHECK(z2.n(2, 2, 2) == 1);
    CHECK(check_axioms(z2).empty());
    CHECK(near_group("cyclic:5", 2).rank() == 6);

    CHECK_THROWS_AS(build_near_group(NearGroupRule{FiniteGroupSpec::cyclic(2), -1}),
                    std::invalid_argument);
}

TEST_CASE("axiom checker pinpoints tampering") {
    // dual-law violation
    FusionRing bad1 = near_group("cyclic:2", 1);
    bad1.set_n(2, 2, 0, 2);
    auto v1 = check_axioms(bad1);
    REQUIRE_FALSE(v1.empty());
    bool saw_dual = false;
    for (const auto& v : v1) saw_dual = saw_dual || v.law == "dual-law";
    CHECK(saw_dual);

    // Frobenius violation: raise one side of a paired entry
    FusionRing bad2 = near_group("cyclic:2", 1);
    bad2.set_n(1, 2, 2, 2);
    auto v2 = check_axioms(bad2);
    bool saw_frob = false;
    for (const auto& v : v2) saw_frob = saw_frob || v.law == "frobenius";
    CHECK(saw_frob);

    // pure associativity violation with Frobenius kept intact: start from the
    // rule X(x)X = 1 + a, a(x)X = X(x)a = X on {1, a, X} and double the three
    // Frobenius-linked entries N[X][X][a], N[X][a][X], N[a][X][X]
    FusionRing bad3 = near_group("cyclic:2", 0);
    bad3.set_n(2, 2, 1, 2);
    bad3.set_n(2, 1, 2, 2);
    bad3.set_n(1, 2, 2, 2);
    auto v3 = check_axioms(bad3);
    REQUIRE_FALSE(v3.empty());
    for (const auto& v : v3) CHECK(v.law == "associativity");

    // negative entries are flagged
    FusionRing bad4 = near_group("trivial", 1);
    bad4.set_n(1, 1, 1, -1);
    auto v4 = check_axioms(bad4);
    bool saw_neg = false;
    for (const auto& v : v4) saw_neg = saw_neg || v.law == "nonnegativity";
    CHECK(saw_neg);
}

TEST_CASE("object dimensions") {
    FusionRing yl = near_group("trivial", 1);
    FpdimValue d = fpdim_object(yl, 1);
    REQUIRE(d.is_exact());
    CHECK(*d.exact == QuadraticFieldElement(Rational(1, 2), Rational(1, 2), Integer(5)));
    CHECK(d.lo <= d.hi);

    FusionRing ng32 = near_group("cyclic:3", 2);
    FpdimValue d32 = fpdim_object(ng32, 3);
    REQUIRE(d32.is_exact());
    CHECK(d32.exact->is_rational());
    CHECK(d32.exact->as_rational() == 3);

    for (int i = 0; i < 3; ++i) {
        FpdimValue one = fpdim_object(ng32, i);
        REQUIRE(one.is_exact());
        CHECK(one.exact->as_rational() == 1);
    }
}

TEST_CASE("ring dimensions") {
    FpdimValue d1 = fpdim_ring(near_group("cyclic:3", 2));
    REQUIRE(d1.is_exact());
    CHECK(d1.exact->as_rational() == 12);

    FpdimValue d2 = fpdim_ring(build_group_ring(FiniteGroupSpec::cyclic(5)));
    REQUIRE(d2.is_exact());
    CHECK(d2.exact->as_rational() == 5);

    FpdimValue d3 = fpdim_ring(near_group("trivial", 1));
    REQUIRE(d3.is_exact());
    CHECK(*d3.exact == QuadraticFieldElement(Rational(5, 2), Rational(1, 2), Integer(5)));
}

TEST_CASE("dimension of a ring with two non-invertibles is enclosed") {
    // product of the group ring Z/2 with the rule X(x)X = 1 + X:
    // basis (1, g, y, gy), y^2 = 1 + y, g central of order 2
    std::vector<std::string> names{"1", "g", "y", "gy"};
    std::vector<int> dual{0, 1, 2, 3};
    FusionRing r = FusionRing::zeroed(names, dual);
    auto mul2 = [](int a, int b) { return a ^ b; };  // bit 0: g-part, bit 1: y-part
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int ga = a & 1, ya = (a >> 1) & 1;
            int gb = b & 1, yb = (b >> 1) & 1;
            int gc = mul2(ga, gb);
            if (ya && yb) {
                // y*y = 1 + y
                r.set_n(a, b, gc, r.n(a, b, gc) + 1);
                r.set_n(a, b, gc | 2, r.n(a, b, gc | 2) + 1);
            } else {
                r.set_n(a, b, gc | ((ya | yb) << 1), 1);
            }
        }
    REQUIRE(check_axioms(r).empty());
    CHECK_FALSE(r.is_invertible(2));

    FpdimValue d = fpdim_object(r, 2);
    CHECK_FALSE(d.is_exact());
    CHECK(d.char_poly_certified);
    // golden ratio lies inside the enclosure
    QuadraticFieldElement phi(Rational(1, 2), Rational(1, 2), Integer(5));
    CHECK((phi - QuadraticFieldElement(d.lo)).sign() >= 0);
    CHECK((QuadraticFieldElement(d.hi) - phi).sign() >= 0);
    // and the enclosure is tight
    CHECK(d.hi - d.lo < Rational(1, Integer(1) << 30));

    FpdimValue total = fpdim_ring(r);
    CHECK_FALSE(total.is_exact());
    // 2 + 2 phi^2 = 5 + sqrt5 = 7.2360679...
    CHECK(total.lo > Rational(72360, 10001));
    CHECK(total.hi < Rational(72361, 10000));
}

TEST_CASE("dimension multiplicativity for exact rules") {
    for (auto [g, k] : std::vector<std::pair<const char*, long>>{
             {"trivial", 1}, {"cyclic:2", 1}, {"cyclic:3", 2}, {"cyclic:4", 0}, {"product:2,2", 3}}) {
        FusionRing r = near_group(g, k);
        std::vector<QuadraticFieldElement> dims;
        for (int i = 0; i < r.rank(); ++i) {
            FpdimValue d = fpdim_object(r, i);
            REQUIRE(d.is_exact());
            dims.push_back(*d.exact);
        }
        for (int i = 0; i < r.rank(); ++i)
            for (int j = 0; j < r.rank(); ++j) {
                QuadraticFieldElement lhs = dims[i] * dims[j];
                QuadraticFieldElement rhs;
                for (int l = 0; l < r.rank(); ++l)
                    rhs += QuadraticFieldElement(Rational(r.n(i, j, l))) * dims[l];
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("integer dimension scan") {
    IntegerFpdimScan scan = integer_fpdim_scan(10);
    CHECK(scan.ok);
    CHECK(scan.anomalies.empty());
    // hits: (n,0) for n=1..10 plus (n,n-1) for n=2..10
    CHECK(scan.hits.size() == 19);
    for (const auto& h : scan.hits) {
        CHECK((h.k == 0 || h.k == h.n - 1));
        if (h.k == 0) CHECK(h.fpdim_category == 2 * Integer(h.n));
        if (h.k == h.n - 1 && h.k != 0) {
            CHECK(h.fpdim_category == Integer(h.n) * (h.n + 1));
            REQUIRE(h.fpdim_x.has_value());
            CHECK(*h.fpdim_x == h.n);
        }
    }
    // (6,1) and (10,3) have integral dimension but violate the size bound
    REQUIRE(scan.size_bound_excluded.size() >= 2);
    bool saw61 = false, saw103 = false;
    for (const auto& h : scan.size_bound_excluded) {
        saw61 = saw61 || (h.n == 6 && h.k == 1);
        saw103 = saw103 || (h.n == 10 && h.k == 3);
    }
    CHECK(saw61);
    CHECK(saw103);
    // (5,2) is not integral at all
    for (const auto& h : scan.hits) CHECK_FALSE((h.n == 5 && h.k == 2));
}

TEST_CASE("adjoint subrings") {
    Subring a1 = adjoint_subring(near_group("cyclic:2", 1));
    CHECK(a1.members == std::vector<int>{0, 1, 2});

    Subring a2 = adjoint_subring(build_group_ring(FiniteGroupSpec::cyclic(4)));
    CHECK(a2.members == std::vector<int>{0});

    Subring a3 = adjoint_subring(near_group("cyclic:3", 0));
    CHECK(a3.members == std::vector<int>{0, 1, 2});
}

TEST_CASE("commutator subrings") {
    FusionRing r = near_group("cyclic:3", 1);
    Subring pointed{std::vector<int>{0, 1, 2}};
    REQUIRE(subring_valid(r, pointed));

    Subring c1 = commutator_subring(r, pointed);
    CHECK(c1.members == pointed.members);

    Subring full{std::vector<int>{0, 1, 2, 3}};
    CHECK(commutator_subring(r, full).members == full.members);

    FusionRing g = build_group_ring(FiniteGroupSpec::cyclic(4));
    Subring unit{std::vector<int>{0}};
    CHECK(commutator_subring(g, unit).members == std::vector<int>{0, 1, 2, 3});

    Subring invalid{std::vector<int>{0, 3}};
    CHECK_FALSE(subring_valid(r, invalid));
    CHECK_THROWS_AS(commutator_subring(r, invalid), std::invalid_argument);
}

TEST_CASE("near-group recognition") {
    auto rec = recognize_near_group(near_group("cyclic:3", 2));
    REQUIRE(rec.has_value());
    CHECK(rec->rule.k == 2);
    CHECK(rec->group_abelian);
    CHECK(rec->group_invariant_factors == std::vector<long>{3});
    CHECK(rec->x_index == 3);

    auto rec2 = recognize_near_group(near_group("product:2,2", 3));
    REQUIRE(rec2.has_value());
    CHECK(rec2->group_invariant_factors == std::vector<long>{2, 2});

    CHECK_FALSE(recognize_near_group(build_group_ring(FiniteGroupSpec::cyclic(4))).has_value());

    // two non-invertibles: not a near-group ring (reuse the product ring)
    FusionRing yl = near_group("trivial", 1);
    CHECK(recognize_near_group(yl).has_value());
}

TEST_CASE("round trip over a family of rules") {
    for (const char* g : {"trivial", "cyclic:2", "cyclic:6", "product:2,4", "product:2,2,2"})
        for (long k : {0L, 1L, 3L}) {
            FusionRing r = near_group(g, k);
            auto rec = recognize_near_group(r);
            if (std::string(g) == "trivial" && k == 0) {
                // X*X = 1 makes X invertible: this is the rank-2 group ring
                CHECK_FALSE(rec.has_value());
                continue;
            }
            REQUIRE(rec.has_value());
            CHECK(rec->rule.k == k);
            GroupTable expect = build_group_table(FiniteGroupSpec::parse(g));
            if (expect.order() > 1) {
                CHECK(rec->group_invariant_factors ==
                      abelian_invariant_factors(expect));
            } else {
                CHECK(rec->group_invariant_factors.empty());
            }
        }
}
