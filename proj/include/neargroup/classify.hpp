#pragma once

#include <neargroup/affine.hpp>
#include <neargroup/equivariant.hpp>
#include <neargroup/json_io.hpp>
#include <neargroup/metric.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neargroup {

/// One row of the classification table.  `provenance` is "computed" when the
/// count is produced by a module in this library and "imported-from-paper"
/// when it rests on braiding-level arguments outside ring arithmetic; every
/// imported row says in `source` exactly which statement is imported.
struct ClassificationEntry {
    std::string rule;
    std::string family;
    long count = 0;
    std::string provenance;
    std::string source;
    OrderedJson construction = OrderedJson::array();
    std::string imported_step;  // empty when nothing beyond the count is imported
};

struct ClassificationCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ClassificationReport {
    long max_n = 0;
    std::optional<long> seed;
    std::vector<ClassificationEntry> symmetric;
    std::vector<ClassificationEntry> non_symmetric;
    std::vector<ClassificationEntry> deferred;
    std::vector<ClassificationCheck> checks;
    bool all_pass = true;
};

inline std::string group_label(const std::vector<long>& invariant_factors) {
    if (invariant_factors.empty()) return "trivial";
    if (invariant_factors.size() == 1) return "cyclic:" + std::to_string(invariant_factors[0]);
    std::string s = "product:";
    for (size_t i = 0; i < invariant_factors.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(invariant_factors[i]);
    }
    return s;
}

inline std::string rule_label(const std::vector<long>& invariant_factors, long k) {
    return "(" + group_label(invariant_factors) + ", " + std::to_string(k) + ")";
}

namespace detail {

inline void abort_with(ClassificationReport& rep, ClassificationCheck failing) {
    failing.pass = false;
    rep.checks.push_back(std::move(failing));
    rep.all_pass = false;
}

}  // namespace detail

/// Assemble the classification table for near-group rules (G, k) with
/// |G| <= max_n.  Sections, entries, and checks are emitted in a fixed order
/// so the serialized report is byte-identical across runs.  The first failing
/// check stops the pipeline and is embedded in the report.
inline ClassificationReport classify(long max_n, std::optional<long> seed = std::nullopt) {
    if (max_n < 1) throw std::invalid_argument("classify: max_n must be >= 1");
    ClassificationReport rep;
    rep.max_n = max_n;
    rep.seed = seed;
    long rings_built = 0;

    // Symmetric family: one entry per prime power q with q - 1 <= max_n.
    if (max_n >= 2) {
        SymmetricFamilyReport fam = verify_symmetric_family(max_n + 1);
        std::string qs;
        for (const SymmetricFamilyEntry& e : fam.entries)
            qs += (qs.empty() ? "" : ", ") + std::to_string(e.q);
        if (!fam.all_ok) {
            detail::abort_with(rep, {"symmetric-family", false,
                                     "verification failed for some q in {" + qs + "}"});
            return rep;
        }
        rep.checks.push_back({"symmetric-family", true,
                              "affine construction verified for q in {" + qs + "}"});
        for (const SymmetricFamilyEntry& e : fam.entries) {
            ClassificationEntry entry;
            entry.rule = rule_label({e.q - 1}, e.q - 2);
            entry.family = "symmetric";
            entry.count = 1;
            entry.provenance = "computed";
            entry.source = "representation ring of the affine line group over the field with " +
                           std::to_string(e.q) +
                           " elements; character table certified by exact orthogonality";
            OrderedJson c;
            c["q"] = e.q;
            c["degrees"] = e.degrees;
            entry.construction.push_back(std::move(c));
            ++rings_built;
            rep.symmetric.push_back(std::move(entry));
        }
    } else {
        rep.checks.push_back({"symmetric-family", true,
                              "no prime power q >= 3 has q - 1 <= " + std::to_string(max_n) +
                                  "; section empty"});
    }

    // Rank-two branch: the (1, 1) rule.  The count of braided structures is
    // imported; the ring-level identity excluding hidden pointed factors is
    // computed here.
    RankTwoProductCheck rank_two = rank_two_product_check(6);
    if (!rank_two.identity_holds) {
        detail::abort_with(rep, {"rank-two-product-identity", false,
                                 "product with a nontrivial group ring was recognized as near-group"});
        return rep;
    }
    rep.checks.push_back(
        {"rank-two-product-identity", true,
         "product of the rank-two ring with the group ring of Z/h is near-group only at h = 1 "
         "(checked h <= 6)"});
    {
        ClassificationEntry yl;
        yl.rule = rule_label({}, 1);
        yl.family = "yang-lee";
        yl.count = 4;
        yl.provenance = "imported-from-paper";
        yl.source = "imported count: the rule (trivial, 1) carries exactly four braided "
                    "categories, determined at the braiding level; ring arithmetic here only "
                    "certifies the product identity excluding hidden pointed factors";
        rep.non_symmetric.push_back(std::move(yl));
    }
    {
        ClassificationEntry ty;
        ty.rule = "(G, 0), |G| > 1";
        ty.family = "tambara-yamagami";
        ty.provenance = "imported-from-paper";
        ty.source = "deferral note: rules with k = 0 and |G| > 1 are excluded from this table; "
                    "their braided classification is a separate, imported result";
        rep.deferred.push_back(std::move(ty));
    }

    // Pointed branch: scan metric groups, classify free actions, and
    // equivariantize.  The scan covers |A| <= 16, which is exhaustive for the
    // table because FPdim = |H| * |A| and the surviving rules are small.
    if (max_n >= 2) {
        TransitiveScanResult scan = transitive_metric_group_scan(16);
        bool scan_ok = scan.accepted.size() == 3;
        if (scan_ok) {
            scan_ok = scan.accepted[0].group.factors == std::vector<long>{3} &&
                      scan.accepted[0].form.q_gen == std::vector<long>{2} &&
                      scan.accepted[1].group.factors == std::vector<long>{3} &&
                      scan.accepted[1].form.q_gen == std::vector<long>{4} &&
                      scan.accepted[2].group.factors == std::vector<long>{2, 2};
        }
        if (!scan_ok) {
            detail::abort_with(rep, {"pointed-transitive-scan", false,
                                     "scan over |A| <= 16 did not return the expected three "
                                     "metric groups"});
            return rep;
        }
        rep.checks.push_back({"pointed-transitive-scan", true,
                              "exactly three metric groups with transitive isometric orbit on "
                              "|A| <= 16: two forms on Z/3 and one on Z/2 x Z/2"});

        struct PointedHit {
            std::vector<long> factors;
            long k = 0;
            OrderedJson construction;
        };
        std::vector<PointedHit> hits;
        std::vector<long> class_counts;
        for (const MetricGroup& m : scan.accepted) {
            for (long hsize : {2L, 3L}) {
                FiniteGroupSpec h = FiniteGroupSpec::cyclic(hsize);
                std::vector<ActionClass> classes = classify_actions(m, h);
                class_counts.push_back(static_cast<long>(classes.size()));
                for (const ActionClass& cls : classes) {
                    ActionData act = ActionData::make(m, h, cls.generator_images);
                    FusionRing ring = equivariant_fusion_ring(act);
                    ++rings_built;
                    auto ng = recognize_near_group(ring);
                    if (!ng || !ng->group_abelian) {
                        detail::abort_with(rep, {"pointed-equivariant-rules", false,
                                                 "an equivariantized ring was not a near-group "
                                                 "ring on an abelian group"});
                        return rep;
                    }
                    PointedHit hit;
                    hit.factors = ng->group_invariant_factors;
                    hit.k = ng->rule.k;
                    hit.construction = action_to_json(act);
                    hits.push_back(std::move(hit));
                }
            }
        }
        bool counts_ok = class_counts == std::vector<long>{1, 0, 1, 0, 0, 1};
        if (!counts_ok) {
            detail::abort_with(rep, {"pointed-action-classes", false,
                                     "free transitive action classes did not match the expected "
                                     "pattern over the three metric groups"});
            return rep;
        }
        rep.checks.push_back({"pointed-action-classes", true,
                              "free transitive action classes: one Z/2 class on each Z/3 form, "
                              "one Z/3 class on the Klein form, none otherwise"});

        std::map<std::pair<std::vector<long>, long>, std::vector<OrderedJson>> grouped;
        for (PointedHit& hit : hits)
            grouped[{hit.factors, hit.k}].push_back(std::move(hit.construction));
        bool rules_ok = grouped.size() == 2;
        if (rules_ok) {
            auto z2 = grouped.find({{2}, 1});
            auto z3 = grouped.find({{3}, 2});
            rules_ok = z2 != grouped.end() && z2->second.size() == 2 && z3 != grouped.end() &&
                       z3->second.size() == 1;
        }
        if (!rules_ok) {
            detail::abort_with(rep, {"pointed-equivariant-rules", false,
                                     "recognized rules did not match two of (cyclic:2, 1) and "
                                     "one of (cyclic:3, 2)"});
            return rep;
        }
        rep.checks.push_back({"pointed-equivariant-rules", true,
                              "equivariantizations recognized as (cyclic:2, 1) twice and "
                              "(cyclic:3, 2) once, with exact dimension |H| * |A|"});

        for (auto& [key, constructions] : grouped) {
            const auto& [factors, k] = key;
            long n = 1;
            for (long f : factors) n *= f;
            if (n > max_n) continue;
            ClassificationEntry entry;
            entry.rule = rule_label(factors, k);
            entry.family = "non-symmetric";
            entry.count = static_cast<long>(constructions.size());
            entry.provenance = "computed";
            entry.source = "equivariantization of a transitive metric group by a free isometric "
                           "action; count taken over inequivalent (metric, action) data classes";
            entry.imported_step = "imported step: inequivalent (metric, action) data classes "
                                  "yield inequivalent braided categories";
            for (OrderedJson& c : constructions) entry.construction.push_back(std::move(c));
            rep.non_symmetric.push_back(std::move(entry));
        }
    }

    // Orbit-size constraint backing the pointed branch's rank bookkeeping.
    {
        bool ok = true;
        for (long n = 1; n <= max_n && ok; ++n) {
            OrbitConstraintReport r = orbit_constraint_check(n);
            std::vector<long> expect = n == 1 ? std::vector<long>{1} : std::vector<long>{1, n};
            ok = r.allowed == expect;
        }
        if (!ok) {
            detail::abort_with(rep, {"orbit-size-constraint", false,
                                     "an orbit size other than 1 or n satisfied 1 + s = n + 1"});
            return rep;
        }
        rep.checks.push_back({"orbit-size-constraint", true,
                              "allowed orbit sizes are exactly {1, n} for every 1 <= n <= " +
                                  std::to_string(max_n)});
    }

    rep.checks.push_back({"axioms", true,
                          std::to_string(rings_built) +
                              " fusion rings constructed; each passed the exhaustive axioms "
                              "check at construction"});

    if (max_n >= 3) {
        long total = 0;
        for (const ClassificationEntry& e : rep.non_symmetric) total += e.count;
        bool ok = total == 7;
        if (!ok) {
            detail::abort_with(rep, {"non-symmetric-total", false,
                                     "non-symmetric counts sum to " + std::to_string(total) +
                                         ", expected 4 + 2 + 1 = 7"});
            return rep;
        }
        rep.checks.push_back({"non-symmetric-total", true, "4 + 2 + 1 = 7"});
    } else {
        rep.checks.push_back({"non-symmetric-total", true,
                              "table truncated below max_n = 3; the full-total identity "
                              "4 + 2 + 1 = 7 applies from max_n >= 3"});
    }
    return rep;
}

inline OrderedJson classification_entry_to_json(const ClassificationEntry& e, bool with_count) {
    OrderedJson j;
    j["rule"] = e.rule;
    j["family"] = e.family;
    if (with_count) j["count"] = e.count;
    j["provenance"] = e.provenance;
    j["source"] = e.source;
    if (!e.imported_step.empty()) j["imported_step"] = e.imported_step;
    if (!e.construction.empty()) j["construction"] = e.construction;
    return j;
}

inline OrderedJson classification_report_to_json(const ClassificationReport& rep) {
    OrderedJson j;
    j["schema"] = "neargroup-report/1";
    OrderedJson params;
    params["max_n"] = rep.max_n;
    if (rep.seed) params["seed"] = *rep.seed;
    else params["seed"] = nullptr;
    j["params"] = std::move(params);
    OrderedJson sym = OrderedJson::array();
    for (const ClassificationEntry& e : rep.symmetric)
        sym.push_back(classification_entry_to_json(e, true));
    j["symmetric"] = std::move(sym);
    OrderedJson non_sym = OrderedJson::array();
    for (const ClassificationEntry& e : rep.non_symmetric)
        non_sym.push_back(classification_entry_to_json(e, true));
    j["non_symmetric"] = std::move(non_sym);
    OrderedJson def = OrderedJson::array();
    for (const ClassificationEntry& e : rep.deferred)
        def.push_back(classification_entry_to_json(e, false));
    j["deferred"] = std::move(def);
    OrderedJson checks = OrderedJson::array();
    for (const ClassificationCheck& c : rep.checks) {
        OrderedJson e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    j["checks"] = std::move(checks);
    return j;
}

}  // namespace neargroup
