#pragma once

#include <neargroup/rational.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace neargroup {

/// Permutation of {0..m-1} as an image vector.
using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& f, const Permutation& g) {
    // (f*g)(p) = f(g(p))
    Permutation r(g.size());
    for (size_t p = 0; p < g.size(); ++p) r[p] = f[g[p]];
    return r;
}

inline bool is_permutation(const Permutation& p) {
    std::vector<bool> seen(p.size(), false);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(p.size()) || seen[x]) return false;
        seen[x] = true;
    }
    return true;
}

inline std::string cycle_notation(const Permutation& p) {
    std::string out;
    std::vector<bool> done(p.size(), false);
    for (size_t s = 0; s < p.size(); ++s) {
        if (done[s] || p[s] == static_cast<int>(s)) continue;
        out += "(";
        size_t x = s;
        bool first = true;
        while (!done[x]) {
            done[x] = true;
            if (!first) out += ",";
            out += std::to_string(x);
            first = false;
            x = p[x];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

/// Description of a finite group: a cyclic order, a product of cyclic
/// factors, or a permutation group given by generators.  Parsing and
/// printing round-trip, so specs travel through CLI flags and JSON.
struct FiniteGroupSpec {
    enum class Kind { cyclic, product, permutation };

    Kind kind = Kind::cyclic;
    long n = 1;                            // cyclic
    std::vector<long> factors;             // product
    std::vector<Permutation> generators;   // permutation
    std::size_t element_bound = 10000;     // closure cap for permutation groups

    static FiniteGroupSpec cyclic(long n) {
        if (n < 1) throw std::invalid_argument("FiniteGroupSpec: cyclic order must be positive");
        FiniteGroupSpec s;
        s.kind = Kind::cyclic;
        s.n = n;
        return s;
    }

    static FiniteGroupSpec product(std::vector<long> factors) {
        for (long f : factors)
            if (f < 2) throw std::invalid_argument("FiniteGroupSpec: product factors must be >= 2");
        FiniteGroupSpec s;
        s.kind = Kind::product;
        s.factors = std::move(factors);
        return s;
    }

    static FiniteGroupSpec permutation(std::vector<Permutation> gens, std::size_t bound = 10000) {
        if (gens.empty()) throw std::invalid_argument("FiniteGroupSpec: need at least one generator");
        size_t degree = gens.front().size();
        for (const Permutation& g : gens)
            if (g.size() != degree || !is_permutation(g))
                throw std::invalid_argument("FiniteGroupSpec: generators must be permutations of one degree");
        FiniteGroupSpec s;
        s.kind = Kind::permutation;
        s.generators = std::move(gens);
        s.element_bound = bound;
        return s;
    }

    /// Accepted forms: "trivial", "cyclic:N", "product:a,b,...",
    /// "perm:(0,1,2)(3,4);(0,1)" with ';' between generators.
    static FiniteGroupSpec parse(const std::string& text) {
        if (text == "trivial") return product({});
        auto colon = text.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("FiniteGroupSpec: expected 'kind:...' in '" + text + "'");
        std::string kind = text.substr(0, colon);
        std::string body = text.substr(colon + 1);
        if (kind == "cyclic") return cyclic(std::stol(body));
        if (kind == "product") {
            std::vector<long> fs;
            std::stringstream ss(body);
            std::string item;
            while (std::getline(ss, item, ','))
                if (!item.empty()) fs.push_back(std::stol(item));
            return product(std::move(fs));
        }
        if (kind == "perm") {
            std::vector<Permutation> gens;
            std::stringstream ss(body);
            std::string word;
            int degree = 0;
            std::vector<std::vector<std::vector<int>>> all_cycles;
            while (std::getline(ss, word, ';')) {
                std::vector<std::vector<int>> cycles;
                size_t i = 0;
                while (i < word.size()) {
                    if (word[i] != '(') throw std::invalid_argument("FiniteGroupSpec: malformed cycle in '" + word + "'");
                    size_t close = word.find(')', i);
                    if (close == std::string::npos)
                        throw std::invalid_argument("FiniteGroupSpec: unterminated cycle in '" + word + "'");
                    std::vector<int> cyc;
                    std::stringstream cs(word.substr(i + 1, close - i - 1));
                    std::string num;
                    while (std::getline(cs, num, ','))
                        if (!num.empty()) cyc.push_back(std::stoi(num));
                    for (int p : cyc) degree = std::max(degree, p + 1);
                    cycles.push_back(std::move(cyc));
                    i = close + 1;
                }
                all_cycles.push_back(std::move(cycles));
            }
            for (const auto& cycles : all_cycles) {
                Permutation g(degree);
                std::iota(g.begin(), g.end(), 0);
                for (const auto& cyc : cycles)
                    for (size_t j = 0; j < cyc.size(); ++j) g[cyc[j]] = cyc[(j + 1) % cyc.size()];
                gens.push_back(std::move(g));
            }
            return permutation(std::move(gens));
        }
        throw std::invalid_argument("FiniteGroupSpec: unknown kind '" + kind + "'");
    }

    std::string describe() const {
        switch (kind) {
            case Kind::cyclic:
                return n == 1 ? "trivial" : "cyclic:" + std::to_string(n);
            case Kind::product: {
                if (factors.empty()) return "trivial";
                std::string s = "product:";
                for (size_t i = 0; i < factors.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(factors[i]);
                }
                return s;
            }
            case Kind::permutation: {
                std::string s = "perm:";
                for (size_t i = 0; i < generators.size(); ++i) {
                    if (i) s += ";";
                    std::string cn = cycle_notation(generators[i]);
                    s += cn == "e" ? "()" : cn;
                }
                return s;
            }
        }
        return "";
    }
};

/// Fully materialized multiplication table of a finite group, with
/// deterministic element order and printable names.
struct GroupTable {
    std::vector<std::string> names;
    std::vector<int> mul_table;  // order x order, row-major
    std::vector<int> inverse;
    std::vector<int> canonical_generators;

    int order() const { return static_cast<int>(names.size()); }
    int mul(int i, int j) const { return mul_table[static_cast<size_t>(i) * names.size() + j]; }

    bool is_abelian() const {
        int m = order();
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }

    int power(int x, long e) const {
        int acc = 0;  // identity index
        for (long i = 0; i < e; ++i) acc = mul(acc, x);
        return acc;
    }

    long element_order(int x) const {
        long e = 1;
        int acc = x;
        while (acc != 0) {
            acc = mul(acc, x);
            ++e;
        }
        return e;
    }
};

inline GroupTable build_group_table(const FiniteGroupSpec& spec) {
    GroupTable t;
    switch (spec.kind) {
        case FiniteGroupSpec::Kind::cyclic: {
            long m = spec.n;
            t.names.reserve(m);
            for (long i = 0; i < m; ++i) t.names.push_back(std::to_string(i));
            t.mul_table.resize(m * m);
            for (long i = 0; i < m; ++i)
                for (long j = 0; j < m; ++j) t.mul_table[i * m + j] = static_cast<int>((i + j) % m);
            t.inverse.resize(m);
            for (long i = 0; i < m; ++i) t.inverse[i] = static_cast<int>((m - i) % m);
            if (m > 1) t.canonical_generators = {1};
            return t;
        }
        case FiniteGroupSpec::Kind::product: {
            long m = 1;
            for (long f : spec.factors) m *= f;
            size_t r = spec.factors.size();
            auto digits = [&](long idx) {
                std::vector<long> d(r);
                for (size_t i = 0; i < r; ++i) {
                    d[i] = idx % spec.factors[i];
                    idx /= spec.factors[i];
                }
                return d;
            };
            auto index = [&](const std::vector<long>& d) {
                long idx = 0;
                long stride = 1;
                for (size_t i = 0; i < r; ++i) {
                    idx += d[i] * stride;
                    stride *= spec.factors[i];
                }
                return idx;
            };
            t.names.reserve(m);
            for (long e = 0; e < m; ++e) {
                std::vector<long> d = digits(e);
                if (r <= 1) {
                    t.names.push_back(std::to_string(r == 1 ? d[0] : 0));
                } else {
                    std::string s = "(";
                    for (size_t i = 0; i < r; ++i) {
                        if (i) s += ",";
                        s += std::to_string(d[i]);
                    }
                    s += ")";
                    t.names.push_back(std::move(s));
                }
            }
            t.mul_table.resize(static_cast<size_t>(m) * m);
            t.inverse.resize(m);
            for (long e = 0; e < m; ++e) {
                std::vector<long> de = digits(e);
                std::vector<long> neg(r);
                for (size_t i = 0; i < r; ++i) neg[i] = (spec.factors[i] - de[i]) % spec.factors[i];
                t.inverse[e] = static_cast<int>(index(neg));
                for (long f = 0; f < m; ++f) {
                    std::vector<long> df = digits(f);
                    std::vector<long> sum(r);
                    for (size_t i = 0; i < r; ++i) sum[i] = (de[i] + df[i]) % spec.factors[i];
                    t.mul_table[e * m + f] = static_cast<int>(index(sum));
                }
            }
            for (size_t i = 0; i < r; ++i) {
                std::vector<long> d(r, 0);
                d[i] = 1;
                t.canonical_generators.push_back(static_cast<int>(index(d)));
            }
            return t;
        }
        case FiniteGroupSpec::Kind::permutation: {
            size_t degree = spec.generators.front().size();
            Permutation id(degree);
            std::iota(id.begin(), id.end(), 0);
            std::vector<Permutation> elements{id};
            std::map<Permutation, int> index{{id, 0}};
            // Breadth-first word enumeration: deterministic order, shortest
            // words first, generators in listed order.
            for (size_t head = 0; head < elements.size(); ++head) {
                for (const Permutation& g : spec.generators) {
                    Permutation next = compose(elements[head], g);
                    if (index.emplace(next, static_cast<int>(elements.size())).second) {
                        elements.push_back(std::move(next));
                        if (elements.size() > spec.element_bound)
                            throw std::invalid_argument("group too large: closure exceeded element bound");
                    }
                }
            }
            int m = static_cast<int>(elements.size());
            t.names.reserve(m);
            for (const Permutation& p : elements) t.names.push_back(cycle_notation(p));
            t.mul_table.resize(static_cast<size_t>(m) * m);
            t.inverse.assign(m, -1);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < m; ++j) {
                    int k = index.at(compose(elements[i], elements[j]));
                    t.mul_table[static_cast<size_t>(i) * m + j] = k;
                    if (k == 0) t.inverse[i] = j;
                }
            }
            for (const Permutation& g : spec.generators) t.canonical_generators.push_back(index.at(g));
            return t;
        }
    }
    throw std::logic_error("build_group_table: unreachable");
}

/// Subgroup generated by the given elements, as a sorted index list.
inline std::vector<int> subgroup_closure(const GroupTable& t, std::vector<int> seed) {
    std::vector<bool> in(t.order(), false);
    in[0] = true;
    std::vector<int> members{0};
    for (int s : seed)
        if (!in[s]) {
            in[s] = true;
            members.push_back(s);
        }
    for (size_t head = 0; head < members.size(); ++head) {
        for (size_t j = 0; j < members.size(); ++j) {
            for (int p : {t.mul(members[head], members[j]), t.mul(members[j], members[head])}) {
                if (!in[p]) {
                    in[p] = true;
                    members.push_back(p);
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

inline std::vector<int> commutator_subgroup(const GroupTable& t) {
    std::vector<int> seed;
    int m = t.order();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            seed.push_back(t.mul(t.mul(a, b), t.inverse[t.mul(b, a)]));
    return subgroup_closure(t, std::move(seed));
}

inline std::vector<int> center(const GroupTable& t) {
    std::vector<int> z;
    int m = t.order();
    for (int a = 0; a < m; ++a) {
        bool central = true;
        for (int b = 0; b < m && central; ++b) central = t.mul(a, b) == t.mul(b, a);
        if (central) z.push_back(a);
    }
    return z;
}

/// Conjugacy classes, each sorted, ordered by least member; the identity
/// class comes first.
inline std::vector<std::vector<int>> conjugacy_classes(const GroupTable& t) {
    int m = t.order();
    std::vector<bool> seen(m, false);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < m; ++x) {
        if (seen[x]) continue;
        std::vector<int> cls;
        for (int a = 0; a < m; ++a) {
            int y = t.mul(t.mul(a, x), t.inverse[a]);
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Invariant factors of an abelian group given by its table, recovered from
/// element-order counts: for each prime p the counts of solutions to
/// x^(p^i) = e determine the conjugate of the p-partition.
inline std::vector<long> abelian_invariant_factors(const GroupTable& t) {
    if (!t.is_abelian()) throw std::invalid_argument("abelian_invariant_factors: group is not abelian");
    long m = t.order();
    if (m == 1) return {};
    // Prime factorization of the order.
    std::vector<std::pair<long, int>> primes;
    long rest = m;
    for (long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        primes.emplace_back(p, e);
    }
    if (rest > 1) primes.emplace_back(rest, 1);

    std::vector<std::vector<int>> partitions;  // descending p-partition per prime
    for (auto [p, e] : primes) {
        std::vector<long> count(e + 1);
        count[0] = 1;
        for (int i = 1; i <= e; ++i) {
            long pi = 1;
            for (int j = 0; j < i; ++j) pi *= p;
            long c = 0;
            for (int x = 0; x < m; ++x)
                if (t.power(x, pi) == 0) ++c;
            count[i] = c;
        }
        auto logp = [p](long v) {
            int k = 0;
            while (v > 1) {
                v /= p;
                ++k;
            }
            return k;
        };
        std::vector<int> conj;  // conj[i] = #parts >= i+1
        for (int i = 1; i <= e; ++i) {
            int parts = logp(count[i]) - logp(count[i - 1]);
            if (parts == 0) break;
            conj.push_back(parts);
        }
        // Transpose the conjugate partition.
        std::vector<int> lambda(conj.empty() ? 0 : conj[0], 0);
        for (size_t i = 0; i < conj.size(); ++i)
            for (int j = 0; j < conj[i]; ++j) lambda[j] += 1;
        partitions.push_back(std::move(lambda));
    }

    size_t slots = 0;
    for (const auto& lam : partitions) slots = std::max(slots, lam.size());
    std::vector<long> factors(slots, 1);
    for (size_t k = 0; k < partitions.size(); ++k) {
        long p = primes[k].first;
        const auto& lam = partitions[k];
        for (size_t j = 0; j < lam.size(); ++j) {
            long pw = 1;
            for (int i = 0; i < lam[j]; ++i) pw *= p;
            factors[j] *= pw;  // factors[0] is the largest invariant factor
        }
    }
    std::reverse(factors.begin(), factors.end());  // ascending divisibility chain
    return factors;
}

/// All abelian groups of order <= max_order as ascending divisibility chains
/// [d1, d2, ...] with d1 | d2 | ..., ordered by order then chain.
inline std::vector<std::vector<long>> enumerate_abelian_groups(long max_order) {
    std::vector<std::vector<long>> out;
    // chains with product m whose top (last) factor divides cap
    auto chains = [](auto&& self, long m, long cap) -> std::vector<std::vector<long>> {
        if (m == 1) return {{}};
        std::vector<std::vector<long>> acc;
        for (long d = 2; d <= m && d <= cap; ++d) {
            if (m % d != 0 || cap % d != 0) continue;
            for (auto tail : self(self, m / d, d)) {
                tail.push_back(d);
                acc.push_back(std::move(tail));
            }
        }
        return acc;
    };
    for (long m = 1; m <= max_order; ++m) {
        auto cs = chains(chains, m, m);
        std::sort(cs.begin(), cs.end());
        for (auto& c : cs) out.push_back(std::move(c));
    }
    return out;
}

/// Greedy minimal generating set in table order.
inline std::vector<int> minimal_generating_set(const GroupTable& t) {
    std::vector<int> gens;
    std::vector<int> span = subgroup_closure(t, {});
    while (static_cast<int>(span.size()) < t.order()) {
        for (int x = 0; x < t.order(); ++x) {
            if (!std::binary_search(span.begin(), span.end(), x)) {
                gens.push_back(x);
                span = subgroup_closure(t, gens);
                break;
            }
        }
    }
    return gens;
}

/// Every automorphism of the group, as an element-index map.  Candidate
/// generator images are pruned by order divisibility, extended along words,
/// and verified on all pairs.  Intended for small groups.
inline std::vector<std::vector<int>> enumerate_automorphism_maps(const GroupTable& t) {
    int m = t.order();
    std::vector<int> gens = minimal_generating_set(t);
    if (gens.empty()) return {std::vector<int>{0}};
    std::vector<std::vector<int>> out;
    std::vector<int> pick(gens.size(), 0);
    double predicted = 1;
    for (size_t i = 0; i < gens.size(); ++i) predicted *= m;
    if (predicted > double(1 << 24))
        throw std::invalid_argument("enumerate_automorphism_maps: group too large");
    while (true) {
        bool order_ok = true;
        for (size_t i = 0; i < gens.size() && order_ok; ++i)
            order_ok = t.element_order(pick[i]) == t.element_order(gens[i]);
        if (order_ok) {
            // extend generator images along a BFS spanning tree of the group
            std::vector<int> img(m, -1);
            img[0] = 0;
            std::vector<int> queue{0};
            for (size_t head = 0; head < queue.size(); ++head) {
                int cur = queue[head];
                for (size_t i = 0; i < gens.size(); ++i) {
                    int nxt = t.mul(cur, gens[i]);
                    if (img[nxt] == -1) {
                        img[nxt] = t.mul(img[cur], pick[i]);
                        queue.push_back(nxt);
                    }
                }
            }
            bool ok = static_cast<int>(queue.size()) == m;
            std::vector<char> hit(m, 0);
            for (int x = 0; ok && x < m; ++x) {
                if (hit[img[x]]) ok = false;
                hit[img[x]] = 1;
            }
            for (int a = 0; ok && a < m; ++a)
                for (int b = 0; ok && b < m; ++b)
                    if (img[t.mul(a, b)] != t.mul(img[a], img[b])) ok = false;
            if (ok) out.push_back(std::move(img));
        }
        size_t pos = 0;
        while (pos < pick.size() && ++pick[pos] == m) pick[pos++] = 0;
        if (pos == pick.size()) break;
    }
    return out;
}

/// Canonical spec for a group handed to us as a bare table: abelian groups
/// become their invariant-factor product, anything else a permutation group
/// via the regular representation on minimal generators.
inline FiniteGroupSpec canonical_spec(const GroupTable& t) {
    if (t.is_abelian()) return FiniteGroupSpec::product(abelian_invariant_factors(t));
    std::vector<Permutation> gens;
    for (int g : minimal_generating_set(t)) {
        Permutation p(t.order());
        for (int x = 0; x < t.order(); ++x) p[x] = t.mul(g, x);
        gens.push_back(std::move(p));
    }
    return FiniteGroupSpec::permutation(std::move(gens));
}

}  // namespace neargroup
