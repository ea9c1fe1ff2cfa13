#pragma once

#include <neargroup/cyclotomic.hpp>
#include <neargroup/group.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace neargroup {

/// Finite abelian group presented by a factor list; an element is the tuple
/// of residues, addressed by its mixed-radix index (first factor most
/// significant).
struct AbelianGroup {
    std::vector<long> factors;

    explicit AbelianGroup(std::vector<long> f) : factors(std::move(f)) {
        for (long x : factors)
            if (x < 2) throw std::invalid_argument("AbelianGroup: factors must be >= 2");
    }

    long order() const {
        long m = 1;
        for (long f : factors) m *= f;
        return m;
    }
    long exponent() const {
        long e = 1;
        for (long f : factors) e = std::lcm(e, f);
        return e;
    }
    size_t rank() const { return factors.size(); }

    std::vector<long> coords(long idx) const {
        std::vector<long> c(factors.size());
        for (size_t i = factors.size(); i-- > 0;) {
            c[i] = idx % factors[i];
            idx /= factors[i];
        }
        return c;
    }
    long index(const std::vector<long>& c) const {
        long idx = 0;
        for (size_t i = 0; i < factors.size(); ++i) {
            long v = ((c[i] % factors[i]) + factors[i]) % factors[i];
            idx = idx * factors[i] + v;
        }
        return idx;
    }
    long add(long x, long y) const {
        std::vector<long> a = coords(x), b = coords(y);
        for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        return index(a);
    }
    long neg(long x) const {
        std::vector<long> a = coords(x);
        for (long& v : a) v = -v;
        return index(a);
    }
    long scalar(long n, long x) const {
        std::vector<long> a = coords(x);
        for (size_t i = 0; i < a.size(); ++i) a[i] = (a[i] * (n % factors[i])) % factors[i];
        return index(a);
    }
    long element_order(long x) const {
        long o = 1;
        std::vector<long> c = coords(x);
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0) o = std::lcm(o, factors[i] / std::gcd(factors[i], c[i]));
        return o;
    }
    bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};

/// Quadratic form with values in the 2*exponent(A)-th roots of unity, stored
/// as exponents: q(x) = zeta_N ^ q_exponent(x).  Parametrized by the value at
/// each generator plus the bilinear pairing of distinct generators; the
/// diagonal of b is forced to 2*q_gen.
struct QuadraticForm {
    AbelianGroup group;
    long conductor;                    // N = 2 * exponent(A)
    std::vector<long> q_gen;           // exponent of q at generator i, mod N
    std::vector<std::vector<long>> b;  // full symmetric matrix of exponents mod N

    QuadraticForm(AbelianGroup a, std::vector<long> qg, std::vector<std::vector<long>> bm)
        : group(std::move(a)), conductor(2 * group.exponent()), q_gen(std::move(qg)), b(std::move(bm)) {
        size_t g = group.rank();
        long N = conductor;
        if (q_gen.size() != g || b.size() != g)
            throw std::invalid_argument("QuadraticForm: generator data sizes mismatch");
        for (size_t i = 0; i < g; ++i) {
            if (b[i].size() != g) throw std::invalid_argument("QuadraticForm: b not square");
            long oi = group.factors[i];
            if ((2 * oi * q_gen[i]) % N != 0 || (oi * oi % N) * q_gen[i] % N != 0)
                throw std::invalid_argument("QuadraticForm: q value not well-defined");
            if (b[i][i] != (2 * q_gen[i]) % N)
                throw std::invalid_argument("QuadraticForm: b diagonal must equal 2*q");
            for (size_t j = 0; j < g; ++j) {
                if (b[i][j] != b[j][i]) throw std::invalid_argument("QuadraticForm: b not symmetric");
                if ((oi * b[i][j]) % N != 0)
                    throw std::invalid_argument("QuadraticForm: b value not well-defined");
            }
        }
    }

    long q_exponent(long elem) const {
        std::vector<long> c = group.coords(elem);
        long N = conductor, acc = 0;
        for (size_t i = 0; i < c.size(); ++i) {
            acc = (acc + (c[i] * c[i]) % N * q_gen[i]) % N;
            for (size_t j = i + 1; j < c.size(); ++j)
                acc = (acc + (c[i] * c[j]) % N * b[i][j]) % N;
        }
        return acc;
    }

    long b_exponent(long x, long y) const {
        std::vector<long> cx = group.coords(x), cy = group.coords(y);
        long N = conductor, acc = 0;
        for (size_t i = 0; i < cx.size(); ++i)
            for (size_t j = 0; j < cy.size(); ++j)
                acc = (acc + (cx[i] * cy[j]) % N * b[i][j]) % N;
        return acc;
    }

    /// Nondegeneracy of the pairing: only the identity pairs trivially with
    /// every generator.
    bool nondegenerate() const {
        long m = group.order();
        for (long x = 1; x < m; ++x) {
            bool radical = true;
            std::vector<long> cx = group.coords(x);
            for (size_t j = 0; j < group.rank() && radical; ++j) {
                long acc = 0;
                for (size_t i = 0; i < cx.size(); ++i)
                    acc = (acc + (cx[i] % conductor) * b[i][j]) % conductor;
                radical = acc % conductor == 0;
            }
            if (radical) return false;
        }
        return true;
    }

    std::vector<long> value_table() const {
        std::vector<long> t(group.order());
        for (long x = 0; x < group.order(); ++x) t[x] = q_exponent(x);
        return t;
    }

    bool operator==(const QuadraticForm& o) const {
        return group == o.group && q_gen == o.q_gen && b == o.b;
    }
};

struct MetricGroup {
    AbelianGroup group;
    QuadraticForm form;
};

inline MetricGroup make_metric_group(QuadraticForm f) {
    if (!f.nondegenerate())
        throw std::invalid_argument("make_metric_group: form is degenerate");
    AbelianGroup g = f.group;
    return MetricGroup{std::move(g), std::move(f)};
}

/// All quadratic forms on a, parametrized by admissible generator values and
/// pairings.  Complete and duplicate-free; degenerate forms are included
/// (query .nondegenerate()).
inline std::vector<QuadraticForm> enumerate_quadratic_forms(const AbelianGroup& a,
                                                            long max_order = 64) {
    if (a.order() > max_order)
        throw std::invalid_argument("enumerate_quadratic_forms: order beyond bound");
    size_t g = a.rank();
    long N = 2 * a.exponent();
    std::vector<std::vector<long>> q_choices(g);
    for (size_t i = 0; i < g; ++i) {
        long oi = a.factors[i];
        for (long q = 0; q < N; ++q)
            if ((2 * oi * q) % N == 0 && ((oi * oi) % N) * q % N == 0) q_choices[i].push_back(q);
    }
    std::vector<std::vector<long>> b_choices;  // for pairs i<j, in row-major pair order
    std::vector<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < g; ++i)
        for (size_t j = i + 1; j < g; ++j) {
            pairs.emplace_back(i, j);
            std::vector<long> c;
            long oi = a.factors[i], oj = a.factors[j];
            for (long v = 0; v < N; ++v)
                if ((oi * v) % N == 0 && (oj * v) % N == 0) c.push_back(v);
            b_choices.push_back(std::move(c));
        }
    double predicted = 1;
    for (const auto& c : q_choices) predicted *= static_cast<double>(c.size());
    for (const auto& c : b_choices) predicted *= static_cast<double>(c.size());
    if (predicted > double(1 << 22))
        throw std::invalid_argument("enumerate_quadratic_forms: enumeration too large");

    std::vector<QuadraticForm> out;
    std::vector<size_t> qi(g, 0), bi(pairs.size(), 0);
    while (true) {
        std::vector<long> qg(g);
        for (size_t i = 0; i < g; ++i) qg[i] = q_choices[i][qi[i]];
        std::vector<std::vector<long>> bm(g, std::vector<long>(g, 0));
        for (size_t i = 0; i < g; ++i) bm[i][i] = (2 * qg[i]) % N;
        for (size_t p = 0; p < pairs.size(); ++p) {
            long v = b_choices[p][bi[p]];
            bm[pairs[p].first][pairs[p].second] = v;
            bm[pairs[p].second][pairs[p].first] = v;
        }
        out.emplace_back(a, std::move(qg), std::move(bm));
        // odometer over (qi, bi)
        size_t pos = 0;
        bool carried = true;
        for (; pos < g && carried; ++pos)
            if (++qi[pos] == q_choices[pos].size()) qi[pos] = 0; else carried = false;
        for (size_t p = 0; p < pairs.size() && carried; ++p)
            if (++bi[p] == b_choices[p].size()) bi[p] = 0; else carried = false;
        if (carried) break;
    }
    return out;
}

/// Test oracle: every function A -> mu_N with q(identity) = 0 satisfying
/// q(n x) = n^2 q(x) and bilinear polarization, found by backtracking over
/// value tables with multiples forced early.  Returns sorted value tables.
inline std::vector<std::vector<long>> naive_enumerate_form_tables(const AbelianGroup& a) {
    long m = a.order();
    if (m > 8) throw std::invalid_argument("naive_enumerate_form_tables: order beyond oracle bound");
    long N = 2 * a.exponent();
    std::vector<std::vector<long>> found;
    std::vector<long> table(m, -1);
    table[0] = 0;

    // forced[x] = (y, n) with x = n*y, y < x, if any
    auto forced_value = [&](long x) -> std::optional<long> {
        for (long y = 1; y < x; ++y) {
            if (table[y] < 0) continue;
            for (long n = 2; n < 2 * m; ++n)
                if (a.scalar(n, y) == x) return ((n * n) % N) * table[y] % N;
        }
        return std::nullopt;
    };
    auto full_check = [&]() {
        for (long x = 0; x < m; ++x)
            for (long n = 0; n <= a.element_order(x); ++n)
                if (table[a.scalar(n, x)] != ((n * n) % N) * table[x] % N) return false;
        auto bexp = [&](long x, long y) {
            long v = table[a.add(x, y)] - table[x] - table[y];
            return ((v % N) + N) % N;
        };
        for (long x = 0; x < m; ++x)
            for (long y = 0; y < m; ++y)
                for (long z = 0; z < m; ++z)
                    if (bexp(x, a.add(y, z)) != (bexp(x, y) + bexp(x, z)) % N) return false;
        return true;
    };
    std::function<void(long)> rec = [&](long x) {
        if (x == m) {
            if (full_check()) found.push_back(table);
            return;
        }
        if (auto f = forced_value(x)) {
            table[x] = *f;
            rec(x + 1);
            table[x] = -1;
            return;
        }
        for (long v = 0; v < N; ++v) {
            table[x] = v;
            rec(x + 1);
        }
        table[x] = -1;
    };
    rec(1);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

/// Exact Gauss sum: sum over all elements of zeta_N^q(x).
inline CyclotomicNumber gauss_sum(const QuadraticForm& f) {
    CyclotomicNumber s = CyclotomicNumber::from_rational(Rational(0));
    for (long x = 0; x < f.group.order(); ++x)
        s = s + CyclotomicNumber::root(f.conductor, f.q_exponent(x));
    return s;
}

/// |gauss_sum|^2 as an exact cyclotomic number (rational for the forms the
/// theory cares about, but not in general).
inline CyclotomicNumber gauss_norm_squared(const QuadraticForm& f) {
    return cyc_norm_squared(gauss_sum(f));
}

/// The norm criterion: |sum|^2 equals |A| exactly iff the form is
/// nondegenerate.
inline bool gauss_norm_matches_order(const QuadraticForm& f) {
    return gauss_norm_squared(f) == CyclotomicNumber::from_rational(Rational(f.group.order()));
}

/// Automorphisms of the abelian group as element-index permutations:
/// a generator-image tuple (y_i with o_i * y_i = 0) defines the coordinate
/// map x -> sum x_i y_i, kept when bijective.
inline std::vector<std::vector<long>> enumerate_automorphisms(const AbelianGroup& a) {
    long m = a.order();
    size_t g = a.rank();
    std::vector<std::vector<long>> killed(g);  // candidates for each generator image
    for (size_t i = 0; i < g; ++i)
        for (long y = 0; y < m; ++y)
            if (a.scalar(a.factors[i], y) == 0) killed[i].push_back(y);
    double predicted = 1;
    for (const auto& c : killed) predicted *= static_cast<double>(c.size());
    if (predicted > double(1 << 22))
        throw std::invalid_argument("enumerate_automorphisms: group too large");
    std::vector<std::vector<long>> out;
    std::vector<size_t> pick(g, 0);
    while (true) {
        std::vector<long> map(m);
        for (long x = 0; x < m; ++x) {
            std::vector<long> c = a.coords(x);
            long acc = 0;
            for (size_t i = 0; i < g; ++i) acc = a.add(acc, a.scalar(c[i], killed[i][pick[i]]));
            map[x] = acc;
        }
        std::vector<char> hit(m, 0);
        bool bij = true;
        for (long x = 0; x < m && bij; ++x) {
            if (hit[map[x]]) bij = false;
            hit[map[x]] = 1;
        }
        if (bij) out.push_back(std::move(map));
        size_t pos = 0;
        while (pos < g && ++pick[pos] == killed[pos].size()) pick[pos++] = 0;
        if (pos == g) break;
    }
    return out;
}

struct IsometryGroup {
    MetricGroup base;
    std::vector<std::vector<long>> elements;  // element-index permutations
};

/// Automorphisms preserving the form: q(phi(x)) = q(x) for every x.
inline IsometryGroup isometry_group(const MetricGroup& m) {
    IsometryGroup iso{m, {}};
    std::vector<long> q = m.form.value_table();
    for (auto& phi : enumerate_automorphisms(m.group)) {
        bool keep = true;
        for (long x = 0; x < m.group.order() && keep; ++x) keep = q[phi[x]] == q[x];
        if (keep) iso.elements.push_back(std::move(phi));
    }
    return iso;
}

/// One examined candidate in the transitive scan, with the reason it was
/// rejected (machine-readable code) or an empty reason on acceptance.
struct ScanRecord {
    std::vector<long> factors;
    std::string reason;  // "gauss-bound" | "not-elementary-abelian" |
                         // "no-constant-nondegenerate-form" | "isometry-orbit-not-transitive"
    std::string detail;
    std::optional<QuadraticForm> form;  // set for per-form records
};

/// For a form constant off the identity: the shared value w = zeta_N^e and
/// the exact check |1 + (m-1) w|^2 == m, recorded alongside whether the
/// isometries turned out transitive.
struct ConstantOrbitTest {
    std::vector<long> factors;
    long value_exponent = 0;
    bool norm_matches = false;
    bool isometry_transitive = false;
};

struct TransitiveScanResult {
    long max_order = 0;
    std::vector<MetricGroup> accepted;
    std::vector<ScanRecord> rejections;
    std::vector<ConstantOrbitTest> orbit_tests;
};

/// Hunt for metric groups of order >= 3 whose isometry group is transitive
/// on the non-identity elements.  Filter cascade, each step recorded:
///   1. transitivity makes q constant off the identity, so the Gauss-norm
///      identity |1 + (m-1) w|^2 = m forces (m-1)(m-4) <= 0, i.e. m <= 4;
///   2. transitivity forces all non-identity element orders equal, so the
///      group is elementary abelian (kills Z/4);
///   3. a nondegenerate form constant off the identity must exist;
///   4. the isometry group of each such form must itself act transitively.
inline TransitiveScanResult transitive_metric_group_scan(long max_order) {
    if (max_order < 3)
        throw std::invalid_argument("transitive_metric_group_scan: max_order must be >= 3");
    TransitiveScanResult res;
    res.max_order = max_order;
    for (const auto& chain : enumerate_abelian_groups(max_order)) {
        if (chain.empty()) continue;
        long m = 1;
        for (long f : chain) m *= f;
        if (m < 3) continue;
        AbelianGroup a{std::vector<long>(chain.begin(), chain.end())};
        if ((m - 1) * (m - 4) > 0) {
            res.rejections.push_back(
                {a.factors, "gauss-bound",
                 "|1+(m-1)w|^2 = m has no root of unity solution for m > 4", std::nullopt});
            continue;
        }
        bool elementary = true;
        for (long x = 1; x < m && elementary; ++x)
            elementary = a.element_order(x) == a.element_order(1);
        if (!elementary) {
            res.rejections.push_back({a.factors, "not-elementary-abelian",
                                      "non-identity element orders differ", std::nullopt});
            continue;
        }
        bool found_constant = false;
        for (const auto& f : enumerate_quadratic_forms(a)) {
            if (!f.nondegenerate()) continue;
            std::vector<long> q = f.value_table();
            bool constant = true;
            for (long x = 2; x < m && constant; ++x) constant = q[x] == q[1];
            if (!constant) continue;
            found_constant = true;
            IsometryGroup iso = isometry_group(make_metric_group(f));
            std::vector<char> orbit(m, 0);
            orbit[1] = 1;
            for (const auto& phi : iso.elements) orbit[phi[1]] = 1;
            bool transitive = true;
            for (long x = 1; x < m; ++x) transitive = transitive && orbit[x];
            CyclotomicNumber probe =
                CyclotomicNumber::from_rational(Rational(1)) +
                CyclotomicNumber::from_rational(Rational(m - 1)) *
                    CyclotomicNumber::root(f.conductor, q[1]);
            res.orbit_tests.push_back(
                {a.factors, q[1],
                 cyc_norm_squared(probe) == CyclotomicNumber::from_rational(Rational(m)),
                 transitive});
            if (transitive) {
                res.accepted.push_back(make_metric_group(f));
            } else {
                res.rejections.push_back({a.factors, "isometry-orbit-not-transitive",
                                          "constant form exists but isometries do not reach "
                                          "every non-identity element",
                                          f});
            }
        }
        if (!found_constant)
            res.rejections.push_back({a.factors, "no-constant-nondegenerate-form",
                                      "no nondegenerate form constant off the identity",
                                      std::nullopt});
    }
    return res;
}

/// A free transitive action of h on the non-identity elements of a metric
/// group, through isometries; images of the generating set of h.
struct ActionClass {
    std::vector<std::vector<long>> generator_images;
    std::vector<std::vector<long>> full_map;  // image permutation for every h element
};

/// Homomorphisms h -> Isom(A, q) whose image acts freely and transitively on
/// the non-identity elements, counted up to conjugation inside the isometry
/// group and precomposition by automorphisms of h.
inline std::vector<ActionClass> classify_actions(const MetricGroup& m, const FiniteGroupSpec& h) {
    IsometryGroup iso = isometry_group(m);
    GroupTable ht = build_group_table(h);
    int hn = ht.order();
    long order = m.group.order();
    std::vector<int> gens = minimal_generating_set(ht);
    if (gens.empty()) gens.push_back(0);

    // index isometries for composition bookkeeping
    auto find_iso = [&](const std::vector<long>& p) -> int {
        for (size_t i = 0; i < iso.elements.size(); ++i)
            if (iso.elements[i] == p) return static_cast<int>(i);
        return -1;
    };
    auto compose_iso = [&](int f, int g) {  // f after g
        std::vector<long> r(order);
        for (long x = 0; x < order; ++x) r[x] = iso.elements[f][iso.elements[g][x]];
        return r;
    };

    std::vector<std::vector<int>> homs;  // each: isometry index per h element
    std::vector<size_t> pick(gens.size(), 0);
    while (true) {
        // extend generator images over h by BFS, then verify
        std::vector<int> img(hn, -1);
        img[0] = find_iso([&] {
            std::vector<long> idp(order);
            for (long x = 0; x < order; ++x) idp[x] = x;
            return idp;
        }());
        std::vector<int> queue{0};
        for (size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (size_t i = 0; i < gens.size(); ++i) {
                int nxt = ht.mul(cur, gens[i]);
                if (img[nxt] == -1) {
                    int composed = find_iso(compose_iso(img[cur], static_cast<int>(pick[i])));
                    img[nxt] = composed;
                    queue.push_back(nxt);
                }
            }
        }
        bool ok = true;
        for (int x = 0; x < hn && ok; ++x) ok = img[x] >= 0;
        for (int x = 0; x < hn && ok; ++x)
            for (int y = 0; y < hn && ok; ++y)
                ok = iso.elements[img[ht.mul(x, y)]] == compose_iso(img[x], img[y]);
        if (ok) {
            // free and transitive on non-identity elements; a non-identity h
            // element mapping to the identity isometry fixes everything, so
            // freeness also forces injectivity
            std::vector<char> orbit(order, 0);
            orbit[1] = 1;
            bool free_ok = true;
            for (int x = 1; x < hn && free_ok; ++x) {
                const std::vector<long>& p = iso.elements[img[x]];
                for (long e = 1; e < order && free_ok; ++e) free_ok = p[e] != e;
            }
            for (int x = 0; x < hn; ++x) orbit[iso.elements[img[x]][1]] = 1;
            bool transitive = true;
            for (long e = 1; e < order; ++e) transitive = transitive && orbit[e];
            if (free_ok && transitive) homs.push_back(std::move(img));
        }
        size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == iso.elements.size()) pick[pos++] = 0;
        if (pos == pick.size() || iso.elements.empty()) break;
    }

    // group into classes under Isom-conjugation and Aut(h)-precomposition
    std::vector<std::vector<int>> auts = enumerate_automorphism_maps(ht);
    std::vector<ActionClass> classes;
    std::vector<char> used(homs.size(), 0);
    for (size_t i = 0; i < homs.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        for (size_t j = i + 1; j < homs.size(); ++j) {
            if (used[j]) continue;
            bool equiv = false;
            for (size_t c = 0; c < iso.elements.size() && !equiv; ++c) {
                // psi phi(alpha(x)) psi^{-1} == phi'(x) for all x?
                std::vector<long> psi = iso.elements[c];
                std::vector<long> psi_inv(order);
                for (long e = 0; e < order; ++e) psi_inv[psi[e]] = e;
                for (const auto& alpha : auts) {
                    bool match = true;
                    for (int x = 0; x < hn && match; ++x) {
                        const std::vector<long>& lhs = iso.elements[homs[i][alpha[x]]];
                        const std::vector<long>& rhs = iso.elements[homs[j][x]];
                        for (long e = 0; e < order && match; ++e)
                            match = psi[lhs[psi_inv[e]]] == rhs[e];
                    }
                    if (match) {
                        equiv = true;
                        break;
                    }
                }
            }
            if (equiv) used[j] = 1;
        }
        ActionClass cls;
        for (int g : gens) cls.generator_images.push_back(iso.elements[homs[i][g]]);
        for (int x = 0; x < hn; ++x) cls.full_map.push_back(iso.elements[homs[i][x]]);
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace neargroup
