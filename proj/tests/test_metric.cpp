#include <catch2/catch_amalgamated.hpp>

#include <neargroup/metric.hpp>

#include <algorithm>
#include <set>

using namespace neargroup;

namespace {
CyclotomicNumber rat(long v) { return CyclotomicNumber::from_rational(Rational(v)); }

long count_nondegenerate(const std::vector<QuadraticForm>& forms) {
    long c = 0;
    for (const auto& f : forms)
        if (f.nondegenerate()) ++c;
    return c;
}
}  // namespace

TEST_CASE("abelian group arithmetic") {
    AbelianGroup a({2, 4});
    CHECK(a.order() == 8);
    CHECK(a.exponent() == 4);
    CHECK(a.rank() == 2);
    for (long x = 0; x < 8; ++x) CHECK(a.index(a.coords(x)) == x);

    // (1,3) + (1,2) = (0,1)
    CHECK(a.add(a.index({1, 3}), a.index({1, 2})) == a.index({0, 1}));
    CHECK(a.neg(a.index({1, 3})) == a.index({1, 1}));
    CHECK(a.scalar(3, a.index({0, 3})) == a.index({0, 1}));

    CHECK(a.element_order(0) == 1);
    CHECK(a.element_order(a.index({1, 0})) == 2);
    CHECK(a.element_order(a.index({0, 1})) == 4);
    CHECK(a.element_order(a.index({1, 1})) == 4);
    CHECK(a.element_order(a.index({0, 2})) == 2);

    AbelianGroup b({6, 10});
    CHECK(b.order() == 60);
    CHECK(b.exponent() == 30);

    CHECK_THROWS_AS(AbelianGroup({2, 1}), std::invalid_argument);
}

TEST_CASE("form enumeration counts") {
    auto z2 = enumerate_quadratic_forms(AbelianGroup({2}));
    CHECK(z2.size() == 4);
    CHECK(count_nondegenerate(z2) == 2);
    std::set<long> nondeg_values;
    for (const auto& f : z2)
        if (f.nondegenerate()) nondeg_values.insert(f.q_gen[0]);
    CHECK(nondeg_values == std::set<long>{1, 3});  // q(g) = +-i as exponents of zeta_4

    auto z3 = enumerate_quadratic_forms(AbelianGroup({3}));
    CHECK(z3.size() == 3);
    CHECK(count_nondegenerate(z3) == 2);
    for (const auto& f : z3) CHECK(f.q_exponent(1) == f.q_exponent(2));

    auto z4 = enumerate_quadratic_forms(AbelianGroup({4}));
    CHECK(z4.size() == 8);
    CHECK(count_nondegenerate(z4) == 4);  // exactly the odd exponents
    for (const auto& f : z4) CHECK(f.nondegenerate() == (f.q_gen[0] % 2 == 1));

    auto z22 = enumerate_quadratic_forms(AbelianGroup({2, 2}));
    CHECK(z22.size() == 32);

    // the all-(-1) form on Z/2 x Z/2 appears and is nondegenerate
    bool found = false;
    for (const auto& f : z22) {
        std::vector<long> q = f.value_table();
        if (q[1] == 2 && q[2] == 2 && q[3] == 2) {
            found = true;
            CHECK(f.nondegenerate());
        }
    }
    CHECK(found);

    CHECK_THROWS_AS(enumerate_quadratic_forms(AbelianGroup({128})), std::invalid_argument);
}

TEST_CASE("construction rejects ill-formed data") {
    AbelianGroup z2({2});
    CHECK_NOTHROW(QuadraticForm(z2, {1}, {{2}}));
    // diagonal of b must be twice the generator value
    CHECK_THROWS_AS(QuadraticForm(z2, {1}, {{3}}), std::invalid_argument);
    // q(g) = zeta_6 is not well-defined on Z/3: 9 * 1 != 0 mod 6
    CHECK_THROWS_AS(QuadraticForm(AbelianGroup({3}), {1}, {{2}}), std::invalid_argument);
    // asymmetric pairing matrix
    CHECK_THROWS_AS(QuadraticForm(AbelianGroup({2, 2}), {0, 0}, {{0, 2}, {0, 0}}),
                    std::invalid_argument);
    // pairing value not killed by the generator order: 2 * 1 != 0 mod 4
    CHECK_THROWS_AS(QuadraticForm(AbelianGroup({2, 2}), {0, 0}, {{0, 1}, {1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("quadratic and polarization laws hold on every enumerated form") {
    for (const auto& factors : {std::vector<long>{5}, std::vector<long>{2, 4}}) {
        AbelianGroup a(factors);
        long m = a.order();
        for (const auto& f : enumerate_quadratic_forms(a)) {
            long N = f.conductor;
            for (long x = 0; x < m; ++x) {
                CHECK(f.q_exponent(a.neg(x)) == f.q_exponent(x));
                for (long n = 0; n <= a.element_order(x); ++n)
                    CHECK(f.q_exponent(a.scalar(n, x)) == ((n * n) % N) * f.q_exponent(x) % N);
            }
            for (long x = 0; x < m; ++x)
                for (long y = 0; y < m; ++y) {
                    long pol = ((f.q_exponent(a.add(x, y)) - f.q_exponent(x) - f.q_exponent(y)) % N + N) % N;
                    CHECK(f.b_exponent(x, y) == pol);
                    CHECK(f.b_exponent(x, y) == f.b_exponent(y, x));
                }
        }
    }
}

TEST_CASE("gauss sum anchors") {
    // (Z/3, omega): q(g) = zeta_3, sum = 1 + 2*zeta_3, |sum|^2 = 3
    QuadraticForm omega(AbelianGroup({3}), {2}, {{4}});
    CHECK(gauss_sum(omega) == rat(1) + rat(2) * CyclotomicNumber::root(3, 1));
    CHECK(gauss_norm_squared(omega) == rat(3));
    CHECK(gauss_norm_matches_order(omega));

    // (Z/2 x Z/2, -1): sum = 1 - 3 = -2, |sum|^2 = 4
    QuadraticForm minus_one(AbelianGroup({2, 2}), {2, 2}, {{0, 2}, {2, 0}});
    CHECK(minus_one.nondegenerate());
    CHECK(gauss_sum(minus_one) == rat(-2));
    CHECK(gauss_norm_squared(minus_one) == rat(4));
    CHECK(gauss_norm_matches_order(minus_one));

    // degenerate constant form on Z/2: sum = 2, |sum|^2 = 4 != 2
    QuadraticForm constant(AbelianGroup({2}), {0}, {{0}});
    CHECK_FALSE(constant.nondegenerate());
    CHECK(gauss_sum(constant) == rat(2));
    CHECK(gauss_norm_squared(constant) == rat(4));
    CHECK_FALSE(gauss_norm_matches_order(constant));
}

TEST_CASE("gauss norm matches order exactly for the nondegenerate forms, order <= 16") {
    long mismatches = 0, forms_seen = 0;
    for (const auto& chain : enumerate_abelian_groups(16)) {
        if (chain.empty()) continue;
        AbelianGroup a{std::vector<long>(chain.begin(), chain.end())};
        for (const auto& f : enumerate_quadratic_forms(a)) {
            ++forms_seen;
            if (gauss_norm_matches_order(f) != f.nondegenerate()) ++mismatches;
        }
    }
    CHECK(mismatches == 0);
    CHECK(forms_seen > 18000);  // the sweep is not vacuous
}

TEST_CASE("parametrized enumeration equals the naive functional oracle up to order 8") {
    for (const auto& chain : enumerate_abelian_groups(8)) {
        if (chain.empty()) continue;
        AbelianGroup a{std::vector<long>(chain.begin(), chain.end())};
        std::vector<std::vector<long>> param;
        for (const auto& f : enumerate_quadratic_forms(a)) param.push_back(f.value_table());
        std::sort(param.begin(), param.end());
        CHECK(std::adjacent_find(param.begin(), param.end()) == param.end());  // duplicate-free
        CHECK(param == naive_enumerate_form_tables(a));
    }
    CHECK_THROWS_AS(naive_enumerate_form_tables(AbelianGroup({9})), std::invalid_argument);
}

TEST_CASE("automorphism and isometry groups") {
    CHECK(enumerate_automorphisms(AbelianGroup({3})).size() == 2);
    CHECK(enumerate_automorphisms(AbelianGroup({8})).size() == 4);
    CHECK(enumerate_automorphisms(AbelianGroup({2, 2})).size() == 6);
    CHECK(enumerate_automorphisms(AbelianGroup({2, 4})).size() == 8);

    QuadraticForm omega(AbelianGroup({3}), {2}, {{4}});
    IsometryGroup iso3 = isometry_group(make_metric_group(omega));
    CHECK(iso3.elements.size() == 2);  // identity and inversion

    QuadraticForm minus_one(AbelianGroup({2, 2}), {2, 2}, {{0, 2}, {2, 0}});
    CHECK(isometry_group(make_metric_group(minus_one)).elements.size() == 6);

    // a non-constant form on Z/2 x Z/2 keeps only the shear fixing its value pattern
    QuadraticForm skew(AbelianGroup({2, 2}), {1, 2}, {{2, 2}, {2, 0}});
    CHECK(skew.nondegenerate());
    CHECK(isometry_group(make_metric_group(skew)).elements.size() == 2);

    // inversion always preserves q, so every nondegenerate form on Z/4 has both automorphisms
    for (const auto& f : enumerate_quadratic_forms(AbelianGroup({4})))
        if (f.nondegenerate())
            CHECK(isometry_group(make_metric_group(f)).elements.size() == 2);

    // isometries preserve q pointwise by construction
    IsometryGroup iso22 = isometry_group(make_metric_group(minus_one));
    std::vector<long> q = minus_one.value_table();
    for (const auto& phi : iso22.elements)
        for (long x = 0; x < 4; ++x) CHECK(q[phi[x]] == q[x]);

    CHECK_THROWS_AS(make_metric_group(QuadraticForm(AbelianGroup({2}), {0}, {{0}})),
                    std::invalid_argument);
}

TEST_CASE("transitive scan finds exactly the three expected metric groups") {
    TransitiveScanResult res = transitive_metric_group_scan(16);
    REQUIRE(res.accepted.size() == 3);

    std::set<std::pair<std::vector<long>, std::vector<long>>> got;
    for (const auto& m : res.accepted) got.insert({m.group.factors, m.form.q_gen});
    std::set<std::pair<std::vector<long>, std::vector<long>>> expected{
        {{3}, {2}},     // (Z/3, omega)
        {{3}, {4}},     // (Z/3, conj(omega))
        {{2, 2}, {2, 2}}  // (Z/2 x Z/2, -1)
    };
    CHECK(got == expected);
    for (const auto& m : res.accepted)
        if (m.group.factors == std::vector<long>{2, 2}) CHECK(m.form.b[0][1] == 2);

    // every examined constant form passed the |1+(m-1)w|^2 = m test and was transitive
    CHECK(res.orbit_tests.size() == 3);
    for (const auto& t : res.orbit_tests) {
        CHECK(t.norm_matches);
        CHECK(t.isometry_transitive);
    }

    // named rejections
    bool saw_z4 = false, saw_z5 = false;
    for (const auto& r : res.rejections) {
        if (r.factors == std::vector<long>{4}) {
            saw_z4 = true;
            CHECK(r.reason == "not-elementary-abelian");
        }
        if (r.factors == std::vector<long>{5}) {
            saw_z5 = true;
            CHECK(r.reason == "gauss-bound");
        }
        CHECK((r.reason == "gauss-bound" || r.reason == "not-elementary-abelian" ||
               r.reason == "no-constant-nondegenerate-form" ||
               r.reason == "isometry-orbit-not-transitive"));
    }
    CHECK(saw_z4);
    CHECK(saw_z5);

    // stable once the bound covers order 4
    TransitiveScanResult small = transitive_metric_group_scan(4);
    REQUIRE(small.accepted.size() == 3);
    std::set<std::pair<std::vector<long>, std::vector<long>>> small_got;
    for (const auto& m : small.accepted) small_got.insert({m.group.factors, m.form.q_gen});
    CHECK(small_got == expected);

    CHECK_THROWS_AS(transitive_metric_group_scan(2), std::invalid_argument);
}

TEST_CASE("action classification reproduces the expected counts") {
    TransitiveScanResult res = transitive_metric_group_scan(4);
    REQUIRE(res.accepted.size() == 3);

    const MetricGroup* z3_omega = nullptr;
    const MetricGroup* klein = nullptr;
    for (const auto& m : res.accepted) {
        if (m.group.factors == std::vector<long>{3} && m.form.q_gen == std::vector<long>{2})
            z3_omega = &m;
        if (m.group.factors == std::vector<long>{2, 2}) klein = &m;
    }
    REQUIRE(z3_omega != nullptr);
    REQUIRE(klein != nullptr);

    auto c2 = FiniteGroupSpec::cyclic(2);
    auto c3 = FiniteGroupSpec::cyclic(3);

    auto a1 = classify_actions(*z3_omega, c2);
    REQUIRE(a1.size() == 1);
    REQUIRE(a1[0].generator_images.size() == 1);
    // the generator acts as inversion: no nonzero fixed point
    for (long e = 1; e < 3; ++e) CHECK(a1[0].generator_images[0][e] != e);
    CHECK(a1[0].full_map.size() == 2);

    CHECK(classify_actions(*z3_omega, c3).empty());

    auto a2 = classify_actions(*klein, c3);
    REQUIRE(a2.size() == 1);
    // the generator acts as a 3-cycle on the nonzero vectors
    for (long e = 1; e < 4; ++e) CHECK(a2[0].generator_images[0][e] != e);
    CHECK(a2[0].full_map.size() == 3);

    CHECK(classify_actions(*klein, c2).empty());
}
