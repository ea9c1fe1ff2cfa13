#include <catch2/catch_amalgamated.hpp>

#include <neargroup/classify.hpp>
#include <neargroup/equivariant.hpp>
#include <neargroup/json_io.hpp>

#include <string>
#include <vector>

using namespace neargroup;

namespace {

bool rings_equal(const FusionRing& a, const FusionRing& b) {
    if (a.rank() != b.rank() || a.names() != b.names() || a.duals() != b.duals()) return false;
    for (int i = 0; i < a.rank(); ++i)
        for (int j = 0; j < a.rank(); ++j)
            for (int k = 0; k < a.rank(); ++k)
                if (a.n(i, j, k) != b.n(i, j, k)) return false;
    return true;
}

}  // namespace

TEST_CASE("classification table at max_n = 8") {
    ClassificationReport rep = classify(8);
    REQUIRE(rep.all_pass);
    REQUIRE(rep.max_n == 8);

    std::vector<long> qs;
    for (const ClassificationEntry& e : rep.symmetric) {
        REQUIRE(e.family == "symmetric");
        REQUIRE(e.count == 1);
        REQUIRE(e.provenance == "computed");
        qs.push_back(e.construction.at(0).at("q").get<long>());
    }
    REQUIRE(qs == std::vector<long>{3, 4, 5, 7, 8, 9});
    REQUIRE(rep.symmetric[0].rule == "(cyclic:2, 1)");
    REQUIRE(rep.symmetric[5].rule == "(cyclic:8, 7)");

    REQUIRE(rep.non_symmetric.size() == 3);
    REQUIRE(rep.non_symmetric[0].rule == "(trivial, 1)");
    REQUIRE(rep.non_symmetric[0].family == "yang-lee");
    REQUIRE(rep.non_symmetric[0].count == 4);
    REQUIRE(rep.non_symmetric[0].provenance == "imported-from-paper");
    REQUIRE(rep.non_symmetric[1].rule == "(cyclic:2, 1)");
    REQUIRE(rep.non_symmetric[1].count == 2);
    REQUIRE(rep.non_symmetric[1].provenance == "computed");
    REQUIRE(rep.non_symmetric[1].construction.size() == 2);
    REQUIRE(rep.non_symmetric[2].rule == "(cyclic:3, 2)");
    REQUIRE(rep.non_symmetric[2].count == 1);
    REQUIRE(rep.non_symmetric[2].provenance == "computed");

    long total = 0;
    for (const ClassificationEntry& e : rep.non_symmetric) total += e.count;
    REQUIRE(total == 7);

    REQUIRE(rep.deferred.size() == 1);
    REQUIRE(rep.deferred[0].family == "tambara-yamagami");
    REQUIRE(rep.deferred[0].provenance == "imported-from-paper");

    std::vector<std::string> names;
    for (const ClassificationCheck& c : rep.checks) {
        REQUIRE(c.pass);
        names.push_back(c.name);
    }
    REQUIRE(names == std::vector<std::string>{
                         "symmetric-family", "rank-two-product-identity",
                         "pointed-transitive-scan", "pointed-action-classes",
                         "pointed-equivariant-rules", "orbit-size-constraint", "axioms",
                         "non-symmetric-total"});
}

TEST_CASE("classification table truncations") {
    SECTION("max_n = 1 keeps only the rank-two entry") {
        ClassificationReport rep = classify(1);
        REQUIRE(rep.all_pass);
        REQUIRE(rep.symmetric.empty());
        REQUIRE(rep.non_symmetric.size() == 1);
        REQUIRE(rep.non_symmetric[0].rule == "(trivial, 1)");
        REQUIRE(rep.non_symmetric[0].count == 4);
    }
    SECTION("max_n = 2 adds the order-two pointed entry only") {
        ClassificationReport rep = classify(2);
        REQUIRE(rep.all_pass);
        REQUIRE(rep.symmetric.size() == 1);  // q = 3
        REQUIRE(rep.non_symmetric.size() == 2);
        REQUIRE(rep.non_symmetric[1].rule == "(cyclic:2, 1)");
    }
    SECTION("max_n = 3 restores the full non-symmetric total") {
        ClassificationReport rep = classify(3);
        REQUIRE(rep.all_pass);
        std::vector<long> qs;
        for (const ClassificationEntry& e : rep.symmetric)
            qs.push_back(e.construction.at(0).at("q").get<long>());
        REQUIRE(qs == std::vector<long>{3, 4});
        REQUIRE(rep.non_symmetric.size() == 3);
        long total = 0;
        for (const ClassificationEntry& e : rep.non_symmetric) total += e.count;
        REQUIRE(total == 7);
    }
    SECTION("max_n below 1 is rejected") {
        REQUIRE_THROWS_AS(classify(0), std::invalid_argument);
    }
}

TEST_CASE("classification report serialization is deterministic") {
    std::string a = classification_report_to_json(classify(4)).dump(2);
    std::string b = classification_report_to_json(classify(4)).dump(2);
    REQUIRE(a == b);
    OrderedJson j = OrderedJson::parse(a);
    REQUIRE(j.at("schema") == "neargroup-report/1");
    REQUIRE(j.at("params").at("max_n") == 4);
    REQUIRE(j.at("params").at("seed").is_null());
    std::vector<std::string> keys;
    for (auto& [k, v] : j.items()) keys.push_back(k);
    REQUIRE(keys == std::vector<std::string>{"schema", "params", "symmetric", "non_symmetric",
                                             "deferred", "checks"});
    std::string seeded = classification_report_to_json(classify(4, 7)).dump(2);
    REQUIRE(OrderedJson::parse(seeded).at("params").at("seed") == 7);
}

TEST_CASE("fusion ring json round trip") {
    FusionRing r = build_near_group({FiniteGroupSpec::cyclic(3), 2});
    OrderedJson j = ring_to_json(r);
    REQUIRE(j.at("unit") == 0);
    REQUIRE(j.at("basis").size() == 4);
    FusionRing back = ring_from_json(j);
    REQUIRE(rings_equal(r, back));

    OrderedJson bad = j;
    bad["unit"] = 1;
    REQUIRE_THROWS_AS(ring_from_json(bad), std::invalid_argument);
    OrderedJson short_n = j;
    short_n["N"].erase(0);
    REQUIRE_THROWS_AS(ring_from_json(short_n), std::invalid_argument);
}

TEST_CASE("metric and action json round trips") {
    AbelianGroup a{{2, 2}};
    QuadraticForm f{a, {2, 2}, {{0, 2}, {2, 0}}};
    MetricGroup m = make_metric_group(f);
    OrderedJson j = metric_to_json(m);
    REQUIRE(j.at("factors") == std::vector<long>{2, 2});
    REQUIRE(j.at("conductor") == 4);
    REQUIRE(j.at("nondegenerate") == true);
    MetricGroup back = metric_from_json(j);
    REQUIRE(back.form == m.form);

    OrderedJson wrong = j;
    wrong["conductor"] = 8;
    REQUIRE_THROWS_AS(metric_from_json(wrong), std::invalid_argument);

    ActionData act = ActionData::make(m, FiniteGroupSpec::cyclic(3), {{0, 2, 3, 1}});
    OrderedJson aj = action_to_json(act);
    REQUIRE(aj.at("H") == "cyclic:3");
    ActionData act_back = action_from_json(aj);
    REQUIRE(act_back.images == act.images);
    FusionRing ring = equivariant_fusion_ring(act_back);
    auto ng = recognize_near_group(ring);
    REQUIRE(ng.has_value());
    REQUIRE(ng->rule.k == 2);
}

TEST_CASE("scan serialization carries machine-readable rejection codes") {
    TransitiveScanResult scan = transitive_metric_group_scan(8);
    OrderedJson j = scan_to_json(scan);
    REQUIRE(j.at("accepted").size() == 3);
    REQUIRE(j.at("constant_orbit_tests").size() == 3);
    std::vector<std::string> allowed = {"gauss-bound", "not-elementary-abelian",
                                        "no-constant-nondegenerate-form",
                                        "isometry-orbit-not-transitive"};
    REQUIRE_FALSE(j.at("rejections").empty());
    for (const auto& r : j.at("rejections")) {
        std::string code = r.at("code").get<std::string>();
        REQUIRE(std::find(allowed.begin(), allowed.end(), code) != allowed.end());
    }
}

TEST_CASE("external products separate the rank-two rule from its twists") {
    FusionRing rank_two = build_near_group({FiniteGroupSpec::cyclic(1), 1});
    FusionRing with_trivial = external_product(rank_two, build_group_ring(FiniteGroupSpec::cyclic(1)));
    auto ng = recognize_near_group(with_trivial);
    REQUIRE(ng.has_value());
    REQUIRE(ng->rule.k == 1);
    REQUIRE(ng->group_invariant_factors.empty());

    FusionRing with_z2 = external_product(rank_two, build_group_ring(FiniteGroupSpec::cyclic(2)));
    REQUIRE(with_z2.rank() == 4);
    REQUIRE_FALSE(recognize_near_group(with_z2).has_value());

    RankTwoProductCheck check = rank_two_product_check(6);
    REQUIRE(check.identity_holds);
    REQUIRE(check.near_group_orders == std::vector<long>{1});
}
