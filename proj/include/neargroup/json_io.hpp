#pragma once

#include <json.hpp>

#include <neargroup/cyclotomic.hpp>
#include <neargroup/equivariant.hpp>
#include <neargroup/fusion_ring.hpp>
#include <neargroup/metric.hpp>
#include <neargroup/rational.hpp>

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace neargroup {

/// Insertion-ordered JSON everywhere: reports are meant to be byte-stable
/// across runs, so key order must be the order the code emits.
using OrderedJson = nlohmann::ordered_json;

inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

/// Rationals ride as strings ("3", "-5/2") so nothing is rounded.
inline OrderedJson cyclotomic_to_json(const CyclotomicNumber& z) {
    OrderedJson j;
    if (z.is_rational()) {
        j["rational"] = rational_to_string(z.as_rational());
        return j;
    }
    j["level"] = z.level();
    OrderedJson coeffs = OrderedJson::array();
    for (const Rational& c : z.coefficients()) coeffs.push_back(rational_to_string(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

inline OrderedJson quadratic_value_to_json(const QuadraticFieldElement& v) {
    OrderedJson j;
    if (v.is_rational()) {
        j["rational"] = rational_to_string(v.as_rational());
        return j;
    }
    j["rational_part"] = rational_to_string(v.rational_part());
    j["radical_part"] = rational_to_string(v.radical_part());
    j["radicand"] = v.radicand().str();
    return j;
}

inline OrderedJson fpdim_to_json(const FpdimValue& v) {
    OrderedJson j;
    if (v.is_exact()) j["exact"] = quadratic_value_to_json(*v.exact);
    j["lower"] = rational_to_string(v.lo);
    j["upper"] = rational_to_string(v.hi);
    j["char_poly_certified"] = v.char_poly_certified;
    return j;
}

inline OrderedJson ring_to_json(const FusionRing& r) {
    OrderedJson j;
    j["basis"] = r.names();
    j["unit"] = 0;
    j["dual"] = r.duals();
    OrderedJson n = OrderedJson::array();
    for (int i = 0; i < r.rank(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int k = 0; k < r.rank(); ++k) {
            OrderedJson cell = OrderedJson::array();
            for (int c = 0; c < r.rank(); ++c) cell.push_back(r.n(i, k, c));
            row.push_back(std::move(cell));
        }
        n.push_back(std::move(row));
    }
    j["N"] = std::move(n);
    return j;
}

inline FusionRing ring_from_json(const OrderedJson& j) {
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    std::vector<int> dual = j.at("dual").get<std::vector<int>>();
    if (j.contains("unit") && j.at("unit").get<int>() != 0)
        throw std::invalid_argument("ring_from_json: the unit must be basis index 0");
    FusionRing r = FusionRing::zeroed(names, dual);
    const OrderedJson& n = j.at("N");
    int b = static_cast<int>(names.size());
    if (static_cast<int>(n.size()) != b)
        throw std::invalid_argument("ring_from_json: N must be a rank^3 array");
    for (int i = 0; i < b; ++i) {
        if (static_cast<int>(n[i].size()) != b)
            throw std::invalid_argument("ring_from_json: N must be a rank^3 array");
        for (int k = 0; k < b; ++k) {
            if (static_cast<int>(n[i][k].size()) != b)
                throw std::invalid_argument("ring_from_json: N must be a rank^3 array");
            for (int c = 0; c < b; ++c) r.set_n(i, k, c, n[i][k][c].get<long long>());
        }
    }
    return r;
}

inline OrderedJson form_to_json(const QuadraticForm& f) {
    OrderedJson j;
    j["factors"] = f.group.factors;
    j["conductor"] = f.conductor;
    j["q_gen"] = f.q_gen;
    j["b"] = f.b;
    j["nondegenerate"] = f.nondegenerate();
    return j;
}

inline QuadraticForm form_from_json(const OrderedJson& j) {
    AbelianGroup a{j.at("factors").get<std::vector<long>>()};
    QuadraticForm f{a, j.at("q_gen").get<std::vector<long>>(),
                    j.at("b").get<std::vector<std::vector<long>>>()};
    if (j.contains("conductor") && j.at("conductor").get<long>() != f.conductor)
        throw std::invalid_argument("form_from_json: stated conductor is not 2*exponent");
    return f;
}

inline OrderedJson metric_to_json(const MetricGroup& m) { return form_to_json(m.form); }

inline MetricGroup metric_from_json(const OrderedJson& j) {
    return make_metric_group(form_from_json(j));
}

inline OrderedJson scan_to_json(const TransitiveScanResult& s) {
    OrderedJson j;
    j["max_order"] = s.max_order;
    OrderedJson accepted = OrderedJson::array();
    for (const MetricGroup& m : s.accepted) accepted.push_back(metric_to_json(m));
    j["accepted"] = std::move(accepted);
    OrderedJson tests = OrderedJson::array();
    for (const ConstantOrbitTest& t : s.orbit_tests) {
        OrderedJson e;
        e["factors"] = t.factors;
        e["value_exponent"] = t.value_exponent;
        e["norm_matches"] = t.norm_matches;
        e["isometry_transitive"] = t.isometry_transitive;
        tests.push_back(std::move(e));
    }
    j["constant_orbit_tests"] = std::move(tests);
    OrderedJson rej = OrderedJson::array();
    for (const ScanRecord& r : s.rejections) {
        OrderedJson e;
        e["factors"] = r.factors;
        e["code"] = r.reason;
        e["detail"] = r.detail;
        if (r.form) e["form"] = form_to_json(*r.form);
        rej.push_back(std::move(e));
    }
    j["rejections"] = std::move(rej);
    return j;
}

/// Action input format: {"metric": {factors, q_gen, b}, "H": "cyclic:2",
/// "images": [[...], ...]} with one image per minimal generator of H.
inline ActionData action_from_json(const OrderedJson& j) {
    MetricGroup m = metric_from_json(j.at("metric"));
    FiniteGroupSpec h = FiniteGroupSpec::parse(j.at("H").get<std::string>());
    std::vector<std::vector<long>> images;
    if (j.contains("images")) images = j.at("images").get<std::vector<std::vector<long>>>();
    return ActionData::make(std::move(m), std::move(h), images);
}

inline OrderedJson action_to_json(const ActionData& a) {
    OrderedJson j;
    j["metric"] = metric_to_json(a.metric);
    j["H"] = a.h.describe();
    std::vector<int> gens = minimal_generating_set(a.h_table);
    OrderedJson images = OrderedJson::array();
    for (int g : gens) images.push_back(a.images[g]);
    j["images"] = std::move(images);
    return j;
}

inline OrderedJson load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    OrderedJson j;
    in >> j;
    return j;
}

inline void write_json_file(const std::string& path, const OrderedJson& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    out << j.dump(2) << "\n";
}

}  // namespace neargroup
