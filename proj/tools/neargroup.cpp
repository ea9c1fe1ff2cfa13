// Command-line front end: every subcommand runs one library pipeline and
// emits a byte-stable JSON report.  Exit code 0 means every check in the
// report passed, 1 means some mathematical check failed, 2 means the
// invocation itself was unusable (bad flags, malformed input, bad domain
// arguments).

#include <CLI11.hpp>

#include <neargroup/affine.hpp>
#include <neargroup/algint.hpp>
#include <neargroup/classify.hpp>
#include <neargroup/equivariant.hpp>
#include <neargroup/fusion_ring.hpp>
#include <neargroup/json_io.hpp>
#include <neargroup/metric.hpp>
#include <neargroup/spherical.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace neargroup;

namespace {

std::vector<long> parse_longs(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stol(item));
    return out;
}

std::vector<std::vector<long>> parse_matrix(const std::string& text) {
    std::vector<std::vector<long>> out;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) out.push_back(parse_longs(row));
    return out;
}

struct Cli {
    std::string json_path;
    long max_n = 8;
    long seed_value = 0;
    bool quiet = false;
    CLI::Option* seed_option = nullptr;

    OrderedJson report;
    bool ok = true;
    bool ran = false;

    std::optional<long> seed() const {
        if (seed_option && seed_option->count()) return seed_value;
        return std::nullopt;
    }

    OrderedJson& start(const std::string& command, OrderedJson params = OrderedJson::object()) {
        report = OrderedJson::object();
        report["schema"] = "neargroup-report/1";
        OrderedJson p;
        p["command"] = command;
        for (auto& [k, v] : params.items()) p[k] = v;
        report["params"] = std::move(p);
        ran = true;
        return report;
    }

    void add_check(OrderedJson& checks, const std::string& name, bool pass,
                   const std::string& detail) {
        OrderedJson c;
        c["name"] = name;
        c["pass"] = pass;
        c["detail"] = detail;
        checks.push_back(std::move(c));
        if (!pass) ok = false;
    }
};

NearGroupRule make_rule(const std::string& group, long k) {
    return NearGroupRule{FiniteGroupSpec::parse(group), k};
}

void run_ring_build(Cli& cli, const std::string& group, long k) {
    OrderedJson params;
    params["group"] = group;
    params["k"] = k;
    OrderedJson& j = cli.start("ring build", params);
    NearGroupRule rule = make_rule(group, k);
    FusionRing r = build_near_group(rule);
    j["rule"] = rule.describe();
    j["ring"] = ring_to_json(r);
    OrderedJson checks = OrderedJson::array();
    auto violations = check_axioms(r, 1);
    cli.add_check(checks, "axioms", violations.empty(),
                  violations.empty() ? "unit, dual, Frobenius and associativity laws hold"
                                     : violations[0].law + ": " + violations[0].detail);
    j["checks"] = std::move(checks);
}

void run_ring_check(Cli& cli, const std::string& group, long k, const std::string& in_path) {
    OrderedJson params;
    if (in_path.empty()) {
        params["group"] = group;
        params["k"] = k;
    } else {
        params["in"] = in_path;
    }
    OrderedJson& j = cli.start("ring check", params);
    FusionRing r = [&] {
        if (in_path.empty()) return build_near_group(make_rule(group, k));
        OrderedJson loaded = load_json_file(in_path);
        // Accept either a bare ring object or a full `ring build` report.
        if (!loaded.contains("basis") && loaded.contains("ring")) loaded = loaded["ring"];
        return ring_from_json(loaded);
    }();
    auto violations = check_axioms(r);
    OrderedJson vs = OrderedJson::array();
    for (const AxiomViolation& v : violations) {
        OrderedJson e;
        e["law"] = v.law;
        e["where"] = v.where;
        e["detail"] = v.detail;
        vs.push_back(std::move(e));
    }
    j["rank"] = r.rank();
    j["violations"] = std::move(vs);
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "axioms", violations.empty(),
                  violations.empty() ? "all laws hold on every basis triple"
                                     : std::to_string(violations.size()) + " violations found");
    j["checks"] = std::move(checks);
}

void run_ring_fpdim(Cli& cli, const std::string& group, long k) {
    OrderedJson params;
    params["group"] = group;
    params["k"] = k;
    OrderedJson& j = cli.start("ring fpdim", params);
    FusionRing r = build_near_group(make_rule(group, k));
    OrderedJson objects = OrderedJson::array();
    bool all_exact = true;
    for (int i = 0; i < r.rank(); ++i) {
        FpdimValue v = fpdim_object(r, i);
        all_exact = all_exact && v.is_exact();
        OrderedJson e;
        e["name"] = r.name(i);
        e["fpdim"] = fpdim_to_json(v);
        objects.push_back(std::move(e));
    }
    FpdimValue total = fpdim_ring(r);
    j["objects"] = std::move(objects);
    j["total"] = fpdim_to_json(total);
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "exact-values", all_exact && total.is_exact(),
                  "every dimension is an exact quadratic-field value");
    j["checks"] = std::move(checks);
}

void run_spherical_pipeline(Cli& cli, const std::string& group, long k) {
    OrderedJson params;
    params["group"] = group;
    params["k"] = k;
    OrderedJson& j = cli.start("spherical pipeline", params);
    SphericalPipelineReport rep = spherical_pipeline(make_rule(group, k));
    j["rule"] = rep.rule.describe();
    j["n"] = rep.n;
    j["k"] = rep.k;
    OrderedJson cands = OrderedJson::array();
    for (const SphericalCandidate& c : rep.candidates) {
        OrderedJson e;
        e["s"] = c.s;
        e["t"] = c.t;
        e["r"] = c.r;
        e["associative"] = c.associative;
        e["forgetful_ok"] = c.forgetful_ok;
        e["ratio_integral"] = c.ratio_integral;
        e["square_r_radicand"] = c.square_r_radicand;
        e["square_k_radicand"] = c.square_k_radicand;
        e["survives"] = c.survives;
        e["eliminated_by"] = c.eliminated_by;
        e["d_plus"] = quadratic_value_to_json(c.dims.first.d);
        e["total_plus"] = quadratic_value_to_json(c.dims.first.total);
        cands.push_back(std::move(e));
    }
    j["candidates"] = std::move(cands);
    j["survivors"] = rep.survivors;
    j["g_minus_dimension"] = rep.g_minus_dim;
    OrderedJson checks = OrderedJson::array();
    bool doubled_ok = true;
    for (const SphericalCandidate& c : rep.candidates)
        doubled_ok = doubled_ok && c.associative && c.forgetful_ok;
    cli.add_check(checks, "doubled-rings", doubled_ok,
                  "every split's doubled ring passes the axioms and collapses back onto the rule");
    cli.add_check(checks, "survivor-is-k", rep.survivor_is_k,
                  "the only surviving defect is r = k (the pseudo-unitary split)");
    j["checks"] = std::move(checks);
}

void run_alg_lemma_scan(Cli& cli, long a_max, long c_max, long bd_max) {
    OrderedJson params;
    params["a_max"] = a_max;
    params["c_max"] = c_max;
    params["bd_max"] = bd_max;
    OrderedJson& j = cli.start("alg lemma-scan", params);
    if (a_max < 0 || c_max < 1 || bd_max < 2)
        throw std::invalid_argument("lemma-scan: need a_max >= 0, c_max >= 1, bd_max >= 2");
    std::vector<long> nonsquare;
    for (long b = 2; b <= bd_max; ++b) {
        Integer root;
        if (!is_perfect_square(Integer(b), &root)) nonsquare.push_back(b);
    }
    long long points = 0;
    long long mismatches = 0;
    OrderedJson mismatch_examples = OrderedJson::array();
    for (long a = -a_max; a <= a_max; ++a)
        for (long c = 1; c <= c_max; ++c)
            for (long b : nonsquare)
                for (long d : nonsquare) {
                    ++points;
                    auto [plus, minus] = lemma_alg_pair_check(Integer(a), Integer(b), Integer(c),
                                                              Integer(d));
                    if (plus != minus) {
                        ++mismatches;
                        if (mismatch_examples.size() < 10) {
                            OrderedJson e;
                            e["a"] = a;
                            e["b"] = b;
                            e["c"] = c;
                            e["d"] = d;
                            mismatch_examples.push_back(std::move(e));
                        }
                    }
                }
    long long cross_points = 0;
    long long cross_disagreements = 0;
    for (long a = -a_max; a <= a_max; ++a)
        for (long c = 1; c <= c_max; ++c)
            for (long b : nonsquare)
                for (long d : nonsquare) {
                    if (squarefree_decompose(Integer(b)).squarefree !=
                        squarefree_decompose(Integer(d)).squarefree)
                        continue;
                    ++cross_points;
                    LemmaAlgAgreement agree =
                        lemma_alg_cross_check(Integer(a), Integer(b), Integer(c), Integer(d));
                    if (!agree.paths_agree) ++cross_disagreements;
                }
    j["points"] = points;
    j["pair_mismatches"] = mismatches;
    j["mismatch_examples"] = std::move(mismatch_examples);
    j["cross_checked_points"] = cross_points;
    j["cross_disagreements"] = cross_disagreements;
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "pair-equality", mismatches == 0,
                  "the two conjugate quotients are algebraic integers together on the whole grid");
    cli.add_check(checks, "path-agreement", cross_disagreements == 0,
                  "quartic characteristic-polynomial and rationalize-then-quadratic paths agree "
                  "wherever the radicands share a squarefree part");
    j["checks"] = std::move(checks);
}

void run_alg_ratio_scan(Cli& cli, long r_max, long k_max, long n_max) {
    OrderedJson params;
    params["r_max"] = r_max;
    params["k_max"] = k_max;
    params["n_max"] = n_max;
    OrderedJson& j = cli.start("alg ratio-scan", params);
    RatioScanReport rep = theorem_sph_ratio_scan(r_max, k_max, n_max);
    j["points"] = rep.entries.size();
    j["integral_exactly_on_diagonal"] = rep.integral_exactly_on_diagonal;
    j["nonsquare_exactly_on_diagonal"] = rep.nonsquare_exactly_on_diagonal;
    j["off_diagonal_all_square_case"] = rep.off_diagonal_all_square_case;
    j["product_identity_all"] = rep.product_identity_all;
    OrderedJson off = OrderedJson::array();
    for (const RatioEntry& e : rep.off_diagonal_integral) {
        OrderedJson p;
        p["r"] = e.r;
        p["k"] = e.k;
        p["n"] = e.n;
        off.push_back(std::move(p));
    }
    j["off_diagonal_integral"] = std::move(off);
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "product-identity", rep.product_identity_all,
                  "(D/Delta)(conj D/conj Delta) = (r^2+4n)/(k^2+4n) at every grid point");
    cli.add_check(checks, "nonsquare-diagonal", rep.nonsquare_exactly_on_diagonal,
                  "restricted to nonsquare radicands, the ratio is an algebraic integer exactly "
                  "at r = k");
    cli.add_check(checks, "off-diagonal-square-case", rep.off_diagonal_all_square_case,
                  "every off-diagonal integral point has r^2+4n a perfect square, the case the "
                  "pipeline eliminates by the rational-dimension argument instead");
    j["checks"] = std::move(checks);
}

void run_metric_enum(Cli& cli, const std::string& factors_text, bool gauss) {
    OrderedJson params;
    params["factors"] = factors_text;
    OrderedJson& j = cli.start(gauss ? "metric gauss" : "metric enum", params);
    AbelianGroup a{parse_longs(factors_text)};
    std::vector<QuadraticForm> forms = enumerate_quadratic_forms(a);
    long nondeg = 0;
    bool equivalence_ok = true;
    OrderedJson out = OrderedJson::array();
    for (const QuadraticForm& f : forms) {
        OrderedJson e = form_to_json(f);
        if (f.nondegenerate()) ++nondeg;
        if (gauss) {
            CyclotomicNumber sum = gauss_sum(f);
            CyclotomicNumber norm = gauss_norm_squared(f);
            bool matches = gauss_norm_matches_order(f);
            e["gauss_sum"] = cyclotomic_to_json(sum);
            e["gauss_norm_squared"] = cyclotomic_to_json(norm);
            e["norm_matches_order"] = matches;
            equivalence_ok = equivalence_ok && (matches == f.nondegenerate());
        }
        out.push_back(std::move(e));
    }
    j["count"] = forms.size();
    j["nondegenerate_count"] = nondeg;
    j["forms"] = std::move(out);
    OrderedJson checks = OrderedJson::array();
    if (gauss)
        cli.add_check(checks, "norm-iff-nondegenerate", equivalence_ok,
                      "|gauss sum|^2 = |A| exactly for the nondegenerate forms and only those");
    j["checks"] = std::move(checks);
}

void run_metric_isometries(Cli& cli, const std::string& factors_text, const std::string& q_text,
                           const std::string& b_text) {
    OrderedJson params;
    params["factors"] = factors_text;
    params["q_gen"] = q_text;
    params["b"] = b_text;
    OrderedJson& j = cli.start("metric isometries", params);
    AbelianGroup a{parse_longs(factors_text)};
    QuadraticForm f{a, parse_longs(q_text), parse_matrix(b_text)};
    MetricGroup m = make_metric_group(f);
    IsometryGroup iso = isometry_group(m);
    j["form"] = form_to_json(f);
    j["order"] = iso.elements.size();
    j["elements"] = iso.elements;
    j["checks"] = OrderedJson::array();
}

void run_metric_scan(Cli& cli, long max_order) {
    OrderedJson params;
    params["max_order"] = max_order;
    OrderedJson& j = cli.start("metric transitive-scan", params);
    TransitiveScanResult scan = transitive_metric_group_scan(max_order);
    j["scan"] = scan_to_json(scan);
    OrderedJson checks = OrderedJson::array();
    bool orbit_ok = true;
    for (const ConstantOrbitTest& t : scan.orbit_tests)
        orbit_ok = orbit_ok && t.norm_matches && t.isometry_transitive;
    cli.add_check(checks, "accepted-orbit-tests", orbit_ok,
                  "every accepted form has |1 + (m-1)w|^2 = m exactly and a transitive isometry "
                  "orbit");
    j["checks"] = std::move(checks);
}

void run_affine_table(Cli& cli, long q) {
    OrderedJson params;
    params["q"] = q;
    OrderedJson& j = cli.start("affine table", params);
    AffineGroup g = build_affine_group(q);
    CharacterTable t = character_table_affine(g);
    j["q"] = q;
    j["order"] = t.group_order();
    OrderedJson classes = OrderedJson::array();
    for (const auto& c : t.classes) {
        OrderedJson e;
        e["representative"] = t.group.names[c.front()];
        e["size"] = c.size();
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    j["degrees"] = t.degrees;
    OrderedJson chars = OrderedJson::array();
    for (const auto& row : t.characters) {
        OrderedJson r = OrderedJson::array();
        for (const CyclotomicNumber& v : row) r.push_back(cyclotomic_to_json(v));
        chars.push_back(std::move(r));
    }
    j["characters"] = std::move(chars);
    OrderedJson checks = OrderedJson::array();
    verify_character_orthogonality(t);
    cli.add_check(checks, "orthogonality", true,
                  "row and column orthogonality hold exactly in cyclotomic arithmetic");
    FusionRing ring = fusion_ring_from_characters(t);
    auto ng = recognize_near_group(ring);
    cli.add_check(checks, "near-group-rule", ng.has_value() && ng->rule.k == q - 2,
                  "the representation ring is the near-group ring (cyclic:" +
                      std::to_string(q - 1) + ", " + std::to_string(q - 2) + ")");
    j["checks"] = std::move(checks);
}

void run_affine_verify(Cli& cli, long q_max) {
    OrderedJson params;
    params["q_max"] = q_max;
    OrderedJson& j = cli.start("affine verify", params);
    SymmetricFamilyReport rep = verify_symmetric_family(q_max);
    OrderedJson entries = OrderedJson::array();
    for (const SymmetricFamilyEntry& e : rep.entries) {
        OrderedJson o;
        o["q"] = e.q;
        o["degrees"] = e.degrees;
        o["one_large_degree"] = e.one_large;
        o["center_trivial"] = e.center_trivial;
        o["fpdim_matches_order"] = e.fpdim_matches_order;
        o["axioms_ok"] = e.axioms_ok;
        o["recognized"] = e.recognized;
        o["rule"] = e.rule;
        o["rule_matches"] = e.rule_matches;
        o["ok"] = e.ok;
        entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "symmetric-family", rep.all_ok,
                  "each prime power q <= " + std::to_string(q_max) +
                      " gives one large degree, trivial center, and the rule (cyclic:q-1, q-2)");
    j["checks"] = std::move(checks);
}

void run_equi_fuse(Cli& cli, const std::string& in_path) {
    OrderedJson params;
    params["in"] = in_path;
    OrderedJson& j = cli.start("equi fuse", params);
    ActionData act = action_from_json(load_json_file(in_path));
    FusionRing ring = equivariant_fusion_ring(act);
    j["action"] = action_to_json(act);
    j["ring"] = ring_to_json(ring);
    j["fpdim"] = equivariant_fpdim(act);
    auto ng = recognize_near_group(ring);
    if (ng) {
        OrderedJson rec;
        rec["rule"] = rule_label(ng->group_invariant_factors, ng->rule.k);
        rec["k"] = ng->rule.k;
        rec["group_invariant_factors"] = ng->group_invariant_factors;
        j["recognized"] = std::move(rec);
    } else {
        j["recognized"] = nullptr;
    }
    OrderedJson checks = OrderedJson::array();
    cli.add_check(checks, "equivariant-ring", true,
                  "ring passed the axioms check and the |H| * |A| dimension certificate");
    j["checks"] = std::move(checks);
}

void run_classify(Cli& cli) {
    ClassificationReport rep = classify(cli.max_n, cli.seed());
    cli.report = classification_report_to_json(rep);
    cli.ran = true;
    cli.ok = rep.all_pass;
}

}  // namespace

int main(int argc, char** argv) {
    Cli cli;
    CLI::App app{"exact-arithmetic toolkit for near-group fusion rings"};
    app.require_subcommand(1);
    app.add_option("--json", cli.json_path, "write the JSON report to this path");
    app.add_option("--max-n", cli.max_n, "bound for scan ranges (classify: largest |G|)");
    cli.seed_option = app.add_option(
        "--seed", cli.seed_value,
        "seed for randomized property-test subcommands (current checks are exhaustive; the "
        "value is recorded in the report)");
    app.add_flag("--quiet", cli.quiet, "suppress the stdout report");

    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    CLI::App* ring = sub(&app, "ring", "fusion ring construction and checks");
    ring->require_subcommand(1);
    std::string rb_group = "cyclic:2";
    long rb_k = 1;
    CLI::App* ring_build = sub(ring, "build", "build a near-group ring (G, k)");
    ring_build->add_option("--group", rb_group, "group spec: trivial, cyclic:N, product:a,b, perm:...");
    ring_build->add_option("--k", rb_k, "multiplicity of X in X*X");
    ring_build->callback([&] { run_ring_build(cli, rb_group, rb_k); });

    std::string rc_group = "cyclic:2";
    long rc_k = 1;
    std::string rc_in;
    CLI::App* ring_check = sub(ring, "check", "verify the fusion-ring axioms");
    ring_check->add_option("--group", rc_group, "group spec");
    ring_check->add_option("--k", rc_k, "multiplicity of X in X*X");
    ring_check->add_option("--in", rc_in, "check a ring serialized as JSON instead");
    ring_check->callback([&] { run_ring_check(cli, rc_group, rc_k, rc_in); });

    std::string rf_group = "cyclic:2";
    long rf_k = 1;
    CLI::App* ring_fpdim = sub(ring, "fpdim", "exact Frobenius-Perron dimensions");
    ring_fpdim->add_option("--group", rf_group, "group spec");
    ring_fpdim->add_option("--k", rf_k, "multiplicity of X in X*X");
    ring_fpdim->callback([&] { run_ring_fpdim(cli, rf_group, rf_k); });

    CLI::App* spherical = sub(&app, "spherical", "doubled-ring pipeline");
    spherical->require_subcommand(1);
    std::string sp_group = "cyclic:2";
    long sp_k = 1;
    CLI::App* sp_pipeline = sub(spherical, "pipeline",
                                "enumerate splits k = s + t and eliminate defects exactly");
    sp_pipeline->add_option("--group", sp_group, "group spec");
    sp_pipeline->add_option("--k", sp_k, "multiplicity of X in X*X");
    sp_pipeline->callback([&] { run_spherical_pipeline(cli, sp_group, sp_k); });

    CLI::App* alg = sub(&app, "alg", "algebraic-integrality scans");
    alg->require_subcommand(1);
    long la_a = 20, la_c = 20, la_bd = 50;
    CLI::App* lemma_scan = sub(alg, "lemma-scan",
                               "conjugate-pair integrality agreement on an integer grid");
    lemma_scan->add_option("--a-max", la_a, "scan |a| up to this bound");
    lemma_scan->add_option("--c-max", la_c, "scan 1 <= c up to this bound");
    lemma_scan->add_option("--bd-max", la_bd, "scan nonsquare b, d up to this bound");
    lemma_scan->callback([&] { run_alg_lemma_scan(cli, la_a, la_c, la_bd); });

    long rs_r = 10, rs_k = 10, rs_n = 50;
    CLI::App* ratio_scan = sub(alg, "ratio-scan",
                               "integrality of the dimension ratio D/Delta over a grid");
    ratio_scan->add_option("--r-max", rs_r, "bound for r");
    ratio_scan->add_option("--k-max", rs_k, "bound for k");
    ratio_scan->add_option("--n-max", rs_n, "bound for n");
    ratio_scan->callback([&] { run_alg_ratio_scan(cli, rs_r, rs_k, rs_n); });

    CLI::App* metric = sub(&app, "metric", "quadratic forms on finite abelian groups");
    metric->require_subcommand(1);
    std::string me_factors = "2,2";
    CLI::App* metric_enum = sub(metric, "enum", "enumerate all quadratic forms on the group");
    metric_enum->add_option("--factors", me_factors, "cyclic factors, e.g. 2,4");
    metric_enum->callback([&] { run_metric_enum(cli, me_factors, false); });

    std::string mg_factors = "2,2";
    CLI::App* metric_gauss = sub(metric, "gauss", "enumerate forms with exact Gauss sums");
    metric_gauss->add_option("--factors", mg_factors, "cyclic factors, e.g. 2,4");
    metric_gauss->callback([&] { run_metric_enum(cli, mg_factors, true); });

    std::string mi_factors = "3", mi_q = "2", mi_b = "4";
    CLI::App* metric_iso = sub(metric, "isometries", "automorphisms preserving a given form");
    metric_iso->add_option("--factors", mi_factors, "cyclic factors");
    metric_iso->add_option("--q-gen", mi_q, "generator values of q (conductor units)");
    metric_iso->add_option("--b", mi_b, "pairing matrix rows, e.g. 0,2;2,0");
    metric_iso->callback([&] { run_metric_isometries(cli, mi_factors, mi_q, mi_b); });

    long ms_max = 16;
    CLI::App* metric_scan = sub(metric, "transitive-scan",
                                "nondegenerate forms constant on a transitive isometry orbit");
    metric_scan->add_option("--max-order", ms_max, "scan groups up to this order");
    metric_scan->callback([&] { run_metric_scan(cli, ms_max); });

    CLI::App* affine = sub(&app, "affine", "the symmetric family from affine line groups");
    affine->require_subcommand(1);
    long at_q = 5;
    CLI::App* affine_table = sub(affine, "table", "exact character table of F_q x F_q^*");
    affine_table->add_option("--q", at_q, "prime power >= 3");
    affine_table->callback([&] { run_affine_table(cli, at_q); });

    long av_qmax = 9;
    CLI::App* affine_verify = sub(affine, "verify", "verify the family for all prime powers");
    affine_verify->add_option("--q-max", av_qmax, "largest q to verify");
    affine_verify->callback([&] { run_affine_verify(cli, av_qmax); });

    CLI::App* equi = sub(&app, "equi", "equivariantization of pointed rings");
    equi->require_subcommand(1);
    std::string ef_in;
    CLI::App* equi_fuse = sub(equi, "fuse", "fusion ring of a free isometric action");
    equi_fuse->add_option("--in", ef_in, "action JSON: {metric, H, images}")->required();
    equi_fuse->callback([&] { run_equi_fuse(cli, ef_in); });

    CLI::App* classify_cmd = sub(&app, "classify",
                                 "assemble the classification table for |G| <= max-n");
    classify_cmd->callback([&] { run_classify(cli); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    }
    if (!cli.ran) {
        std::cerr << "no subcommand ran\n";
        return 2;
    }
    try {
        if (!cli.json_path.empty()) write_json_file(cli.json_path, cli.report);
    } catch (const std::exception& e) {
        std::cerr << "output error: " << e.what() << "\n";
        return 2;
    }
    if (!cli.quiet) std::cout << cli.report.dump(2) << "\n";
    return cli.ok ? 0 : 1;
}
