#pragma once

#include <neargroup/cyclotomic.hpp>
#include <neargroup/fusion_ring.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace neargroup {

namespace detail {

/// q = p^l with p prime, or nothing.
inline std::optional<std::pair<long, long>> prime_power_split(long q) {
    if (q < 2) return std::nullopt;
    long p = 0;
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return std::make_pair(q, 1L);
    long l = 0, rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++l;
    }
    if (rest != 1) return std::nullopt;
    return std::make_pair(p, l);
}

}  // namespace detail

/// The field with p^l elements.  An element is its base-p digit encoding in
/// [0, q): digit i is the coefficient of x^i modulo the fixed irreducible
/// modulus.  The modulus is the least irreducible monic polynomial in the
/// encoding order and the generator is the least primitive element, so every
/// run builds the identical field.
struct FiniteField {
    long p = 0, l = 0, q = 0;
    std::vector<long> modulus;  // monic, coefficients low to high, size l+1
    long generator = 0;
    std::vector<long> power;  // power[i] = generator^i for 0 <= i < q-1
    std::vector<long> dlog;   // dlog[power[i]] = i; dlog[0] unused

    std::vector<long> digits(long x) const {
        std::vector<long> d(l);
        for (long i = 0; i < l; ++i) {
            d[i] = x % p;
            x /= p;
        }
        return d;
    }
    long encode(const std::vector<long>& d) const {
        long x = 0;
        for (size_t i = d.size(); i-- > 0;) x = x * p + (d[i] % p + p) % p;
        return x;
    }

    long add(long x, long y) const {
        std::vector<long> a = digits(x), b = digits(y);
        for (long i = 0; i < l; ++i) a[i] = (a[i] + b[i]) % p;
        return encode(a);
    }
    long neg(long x) const {
        std::vector<long> a = digits(x);
        for (long& v : a) v = (p - v) % p;
        return encode(a);
    }
    long mul(long x, long y) const {
        std::vector<long> a = digits(x), b = digits(y);
        std::vector<long> c(2 * l - 1, 0);
        for (long i = 0; i < l; ++i)
            for (long j = 0; j < l; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        for (long deg = 2 * l - 2; deg >= l; --deg) {
            long coef = c[deg];
            if (coef == 0) continue;
            c[deg] = 0;
            for (long i = 0; i < l; ++i)
                c[deg - l + i] = ((c[deg - l + i] - coef * modulus[i]) % p + p) % p;
        }
        c.resize(l);
        return encode(c);
    }
    long pow(long x, long e) const {
        long r = 1;
        while (e > 0) {
            if (e & 1) r = mul(r, x);
            x = mul(x, x);
            e >>= 1;
        }
        return r;
    }
    long inverse(long x) const {
        if (x == 0) throw std::invalid_argument("FiniteField: zero has no inverse");
        return pow(x, q - 2);
    }

    static FiniteField make(long q) {
        auto split = detail::prime_power_split(q);
        if (!split) throw std::invalid_argument("FiniteField: order is not a prime power");
        FiniteField f;
        f.p = split->first;
        f.l = split->second;
        f.q = q;

        // least irreducible monic modulus: no monic divisor of degree <= l/2
        auto poly_at = [&](const std::vector<long>& c, long deg) {
            return deg < static_cast<long>(c.size()) ? c[deg] : 0L;
        };
        auto divides = [&](const std::vector<long>& divisor, std::vector<long> target) {
            long dd = static_cast<long>(divisor.size()) - 1;
            for (long deg = static_cast<long>(target.size()) - 1; deg >= dd; --deg) {
                long coef = target[deg];
                if (coef == 0) continue;
                for (long i = 0; i <= dd; ++i)
                    target[deg - dd + i] =
                        ((target[deg - dd + i] - coef * poly_at(divisor, i)) % f.p + f.p) % f.p;
            }
            for (long i = 0; i < dd; ++i)
                if (target[i] != 0) return false;
            return true;
        };
        long count = 1;
        for (long i = 0; i < f.l; ++i) count *= f.p;
        for (long low = 0; low < count && f.modulus.empty(); ++low) {
            std::vector<long> cand = f.digits(low);
            cand.push_back(1);  // monic of degree l
            bool irreducible = true;
            for (long d = 1; 2 * d <= f.l && irreducible; ++d) {
                long dcount = 1;
                for (long i = 0; i < d; ++i) dcount *= f.p;
                for (long dl = 0; dl < dcount && irreducible; ++dl) {
                    std::vector<long> div(d + 1, 0);
                    long v = dl;
                    for (long i = 0; i < d; ++i) {
                        div[i] = v % f.p;
                        v /= f.p;
                    }
                    div[d] = 1;
                    if (divides(div, cand)) irreducible = false;
                }
            }
            if (irreducible) f.modulus = cand;
        }
        if (f.modulus.empty()) throw std::logic_error("FiniteField: no irreducible modulus found");

        // least primitive element, then the discrete-log tables
        for (long g = 1; g < q && f.generator == 0; ++g) {
            long x = g, order = 1;
            while (x != 1) {
                x = f.mul(x, g);
                ++order;
                if (order > q) throw std::logic_error("FiniteField: multiplicative order overflow");
            }
            if (order == q - 1) f.generator = g;
        }
        if (f.generator == 0) throw std::logic_error("FiniteField: no multiplicative generator");
        f.power.resize(q - 1);
        f.dlog.assign(q, 0);
        long x = 1;
        for (long i = 0; i < q - 1; ++i) {
            f.power[i] = x;
            f.dlog[x] = i;
            x = f.mul(x, f.generator);
        }
        return f;
    }
};

/// The group of maps x -> ax + b on the field, a nonzero.  Element index is
/// dlog(a) * q + b, so the identity lands at index 0 and the unit part is
/// already in generator-power order for the linear characters.
struct AffineGroup {
    FiniteField field;
    std::vector<std::pair<long, long>> elems;  // (a, b) by index
    GroupTable table;

    long q() const { return field.q; }
    long order() const { return field.q * (field.q - 1); }
};

inline AffineGroup build_affine_group(long q) {
    if (q == 2) throw std::invalid_argument("build_affine_group: order-2 field is excluded");
    if (q < 3) throw std::invalid_argument("build_affine_group: need a prime power >= 3");
    AffineGroup g;
    g.field = FiniteField::make(q);
    const FiniteField& f = g.field;
    long n = q * (q - 1);
    g.elems.reserve(n);
    for (long pos = 0; pos < q - 1; ++pos)
        for (long b = 0; b < q; ++b) g.elems.push_back({f.power[pos], b});

    g.table.names.reserve(n);
    for (const auto& [a, b] : g.elems)
        g.table.names.push_back("(" + std::to_string(a) + "," + std::to_string(b) + ")");
    g.table.mul_table.resize(static_cast<size_t>(n) * n);
    auto index_of = [&](long a, long b) { return f.dlog[a] * q + b; };
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            auto [a1, b1] = g.elems[i];
            auto [a2, b2] = g.elems[j];
            // composite of x -> a2 x + b2 then x -> a1 x + b1
            g.table.mul_table[static_cast<size_t>(i) * n + j] =
                static_cast<int>(index_of(f.mul(a1, a2), f.add(f.mul(a1, b2), b1)));
        }
    g.table.inverse.resize(n);
    for (long i = 0; i < n; ++i) {
        auto [a, b] = g.elems[i];
        long ainv = f.inverse(a);
        g.table.inverse[i] = static_cast<int>(index_of(ainv, f.mul(ainv, f.neg(b))));
    }
    for (long i = 0; i < n; ++i) {
        if (g.table.mul(0, i) != i || g.table.mul(i, 0) != i ||
            g.table.mul(i, g.table.inverse[i]) != 0)
            throw std::logic_error("build_affine_group: table is not a group");
    }
    g.table.canonical_generators = minimal_generating_set(g.table);

    // the center must be trivial for q >= 3
    for (long z = 1; z < n; ++z) {
        bool central = true;
        for (long x = 0; x < n && central; ++x) central = g.table.mul(z, x) == g.table.mul(x, z);
        if (central) throw std::logic_error("build_affine_group: unexpected central element");
    }
    return g;
}

/// Exact character table: conjugacy classes (sorted member lists, least
/// member = representative) plus one row of cyclotomic values per
/// irreducible character.  Constructors must certify the table by
/// verify_character_orthogonality before handing it out.
struct CharacterTable {
    GroupTable group;
    std::vector<std::vector<int>> classes;
    std::vector<std::vector<CyclotomicNumber>> characters;  // [irrep][class]
    std::vector<long> degrees;

    long group_order() const { return group.order(); }
};

/// Row orthogonality (sum over classes of |C| chi_i conj(chi_j) = |G| delta)
/// and column orthogonality (sum over irreps of chi_i(C) conj(chi_i(C')) =
/// delta |G|/|C|), both exact.  Throws on any failure.
inline void verify_character_orthogonality(const CharacterTable& t) {
    size_t r = t.characters.size();
    size_t c = t.classes.size();
    if (r != c) throw std::logic_error("character table: irrep count differs from class count");
    Rational order(t.group_order());
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            CyclotomicNumber s = CyclotomicNumber::from_rational(Rational(0));
            for (size_t k = 0; k < c; ++k)
                s = s + CyclotomicNumber::from_rational(Rational(t.classes[k].size())) *
                            t.characters[i][k] * t.characters[j][k].conjugate();
            Rational want = i == j ? order : Rational(0);
            if (s != CyclotomicNumber::from_rational(want))
                throw std::logic_error("character table: row orthogonality failed");
        }
    for (size_t k = 0; k < c; ++k)
        for (size_t k2 = 0; k2 < c; ++k2) {
            CyclotomicNumber s = CyclotomicNumber::from_rational(Rational(0));
            for (size_t i = 0; i < r; ++i)
                s = s + t.characters[i][k] * t.characters[i][k2].conjugate();
            Rational want = k == k2 ? order / Rational(t.classes[k].size()) : Rational(0);
            if (s != CyclotomicNumber::from_rational(want))
                throw std::logic_error("character table: column orthogonality failed");
        }
}

/// The q irreducible characters of the affine group: q-1 linear characters
/// factoring through the unit group (values zeta_{q-1}^{j * dlog a}) and one
/// character of degree q-1 from the doubly transitive action on the field
/// (value = fixed points - 1).
inline CharacterTable character_table_affine(const AffineGroup& g) {
    const FiniteField& f = g.field;
    long q = f.q;
    CharacterTable t;
    t.group = g.table;
    t.classes = conjugacy_classes(g.table);
    if (static_cast<long>(t.classes.size()) != q)
        throw std::logic_error("character_table_affine: class count is not q");

    for (long j = 0; j < q - 1; ++j) {
        std::vector<CyclotomicNumber> row;
        row.reserve(q);
        for (const auto& c : t.classes) {
            long a = g.elems[c.front()].first;
            row.push_back(CyclotomicNumber::root(q - 1, (j * f.dlog[a]) % (q - 1)));
        }
        t.characters.push_back(std::move(row));
        t.degrees.push_back(1);
    }
    std::vector<CyclotomicNumber> big;
    big.reserve(q);
    for (const auto& c : t.classes) {
        auto [a, b] = g.elems[c.front()];
        long fix;  // solutions of ax + b = x
        if (a == 1)
            fix = b == 0 ? q : 0;
        else
            fix = 1;
        big.push_back(CyclotomicNumber::from_rational(Rational(fix - 1)));
    }
    t.characters.push_back(std::move(big));
    t.degrees.push_back(q - 1);

    verify_character_orthogonality(t);
    return t;
}

/// Product decomposition from characters alone: N[i][j][k] is the inner
/// product of chi_i * chi_j with chi_k, exact; any non-integral or negative
/// multiplicity is a construction bug and throws.
inline FusionRing fusion_ring_from_characters(const CharacterTable& t) {
    size_t r = t.characters.size();
    size_t nc = t.classes.size();
    Rational order(t.group_order());
    for (size_t k = 0; k < nc; ++k)
        if (t.characters[0][k] != CyclotomicNumber::from_rational(Rational(1)))
            throw std::invalid_argument("fusion_ring_from_characters: first character must be trivial");

    std::vector<int> dual(r, -1);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            bool conj = true;
            for (size_t k = 0; k < nc && conj; ++k)
                conj = t.characters[j][k] == t.characters[i][k].conjugate();
            if (conj) {
                dual[i] = static_cast<int>(j);
                break;
            }
        }
    for (int d : dual)
        if (d < 0) throw std::logic_error("fusion_ring_from_characters: missing conjugate character");

    std::vector<std::string> names;
    names.reserve(r);
    for (size_t i = 0; i < r; ++i) names.push_back("chi" + std::to_string(i));
    FusionRing ring = FusionRing::zeroed(std::move(names), std::move(dual));

    for (size_t i = 0; i < r; ++i)
        for (size_t j = i; j < r; ++j)
            for (size_t k = 0; k < r; ++k) {
                CyclotomicNumber s = CyclotomicNumber::from_rational(Rational(0));
                for (size_t c = 0; c < nc; ++c)
                    s = s + CyclotomicNumber::from_rational(Rational(t.classes[c].size())) *
                                t.characters[i][c] * t.characters[j][c] *
                                t.characters[k][c].conjugate();
                if (!s.is_rational())
                    throw std::logic_error("fusion_ring_from_characters: irrational multiplicity");
                Rational v = s.as_rational() / order;
                if (!is_integer(v) || v < 0)
                    throw std::logic_error("fusion_ring_from_characters: multiplicity not a nonnegative integer");
                long long m = static_cast<long long>(numerator(v));
                ring.set_n(static_cast<int>(i), static_cast<int>(j), static_cast<int>(k), m);
                ring.set_n(static_cast<int>(j), static_cast<int>(i), static_cast<int>(k), m);
            }
    require_axioms(ring, "fusion_ring_from_characters");
    return ring;
}

struct SymmetricFamilyEntry {
    long q = 0;
    std::vector<long> degrees;
    bool one_large = false;
    bool center_trivial = false;
    bool fpdim_matches_order = false;
    bool axioms_ok = false;
    bool recognized = false;
    std::string rule;
    bool rule_matches = false;
    bool ok = false;
};

struct SymmetricFamilyReport {
    long q_max = 0;
    std::vector<SymmetricFamilyEntry> entries;
    bool all_ok = false;
};

/// Runs the affine pipeline for every prime power 3 <= q <= q_max and checks,
/// per q: exactly one irreducible of degree > 1, trivial center (asserted in
/// the builder), sum of squared degrees = |H| = q(q-1), representation ring
/// with valid axioms recognized as the near-group rule (Z/(q-1), q-2).
inline SymmetricFamilyReport verify_symmetric_family(long q_max) {
    if (q_max < 3) throw std::invalid_argument("verify_symmetric_family: q_max must be >= 3");
    SymmetricFamilyReport rep;
    rep.q_max = q_max;
    rep.all_ok = true;
    for (long q = 3; q <= q_max; ++q) {
        if (!detail::prime_power_split(q)) continue;
        SymmetricFamilyEntry e;
        e.q = q;
        AffineGroup g = build_affine_group(q);
        e.center_trivial = true;  // enforced by the builder
        CharacterTable t = character_table_affine(g);
        e.degrees = t.degrees;
        e.one_large = std::count_if(t.degrees.begin(), t.degrees.end(),
                                    [](long d) { return d > 1; }) == 1;
        long sq = 0;
        for (long d : t.degrees) sq += d * d;
        e.fpdim_matches_order = sq == g.order();

        FusionRing ring = fusion_ring_from_characters(t);
        e.axioms_ok = check_axioms(ring, 1).empty();
        if (auto ng = recognize_near_group(ring)) {
            e.recognized = true;
            e.rule = ng->rule.describe();
            GroupTable gt = build_group_table(ng->rule.group);
            e.rule_matches = gt.is_abelian() &&
                             abelian_invariant_factors(gt) == std::vector<long>{q - 1} &&
                             ng->rule.k == q - 2;
        }
        e.ok = e.one_large && e.center_trivial && e.fpdim_matches_order && e.axioms_ok &&
               e.recognized && e.rule_matches;
        rep.all_ok = rep.all_ok && e.ok;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

/// Character table for a group whose commutator subgroup is a central order-2
/// subgroup with elementary abelian quotient: |G/[G,G]| linear characters
/// plus a single large one of degree sqrt(|G| - |G/[G,G]|), certified by
/// orthogonality.
inline CharacterTable character_table_one_large(const GroupTable& t) {
    int n = t.order();
    std::vector<int> comms;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            comms.push_back(t.mul(t.mul(x, y), t.mul(t.inverse[x], t.inverse[y])));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    std::vector<int> derived = subgroup_closure(t, comms);
    if (derived.size() != 2)
        throw std::invalid_argument("character_table_one_large: commutator subgroup is not order 2");
    int z = derived[1];
    for (int x = 0; x < n; ++x)
        if (t.mul(z, x) != t.mul(x, z))
            throw std::invalid_argument("character_table_one_large: commutator element not central");

    // quotient by {e, z}
    std::vector<int> coset(n);
    for (int x = 0; x < n; ++x) coset[x] = std::min(x, t.mul(x, z));
    std::vector<int> reps;
    for (int x = 0; x < n; ++x)
        if (coset[x] == x) reps.push_back(x);
    std::vector<int> rep_index(n, -1);
    for (size_t i = 0; i < reps.size(); ++i) rep_index[reps[i]] = static_cast<int>(i);
    GroupTable quo;
    quo.names.reserve(reps.size());
    for (int r : reps) quo.names.push_back(t.names[r]);
    int qn = static_cast<int>(reps.size());
    quo.mul_table.resize(static_cast<size_t>(qn) * qn);
    quo.inverse.resize(qn);
    for (int i = 0; i < qn; ++i) {
        for (int j = 0; j < qn; ++j)
            quo.mul_table[static_cast<size_t>(i) * qn + j] = rep_index[coset[t.mul(reps[i], reps[j])]];
        quo.inverse[i] = rep_index[coset[t.inverse[reps[i]]]];
    }
    for (int i = 1; i < qn; ++i)
        if (quo.mul(i, i) != 0)
            throw std::invalid_argument("character_table_one_large: quotient is not elementary abelian");
    if (!quo.is_abelian())
        throw std::invalid_argument("character_table_one_large: quotient is not abelian");
    quo.canonical_generators = minimal_generating_set(quo);

    // sign characters of the quotient, extended from a generating set
    std::vector<int> gens = minimal_generating_set(quo);
    std::vector<std::vector<long>> sign_tables;
    for (long mask = 0; mask < (1L << gens.size()); ++mask) {
        std::vector<long> sgn(qn, 0);
        sgn[0] = 1;
        std::vector<int> queue{0};
        for (size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (size_t i = 0; i < gens.size(); ++i) {
                int nxt = quo.mul(cur, gens[i]);
                long v = sgn[cur] * ((mask >> i) & 1 ? -1 : 1);
                if (sgn[nxt] == 0) {
                    sgn[nxt] = v;
                    queue.push_back(nxt);
                }
            }
        }
        bool ok = true;
        for (int x = 0; x < qn && ok; ++x)
            for (int y = 0; y < qn && ok; ++y) ok = sgn[quo.mul(x, y)] == sgn[x] * sgn[y];
        if (ok) sign_tables.push_back(std::move(sgn));
    }
    if (sign_tables.size() != static_cast<size_t>(qn))
        throw std::logic_error("character_table_one_large: linear character count mismatch");
    std::sort(sign_tables.begin(), sign_tables.end(), std::greater<>());  // trivial (all +1) first

    long big_sq = n - qn;
    long d = 1;
    while (d * d < big_sq) ++d;
    if (d * d != big_sq)
        throw std::invalid_argument("character_table_one_large: large degree is not integral");

    CharacterTable table;
    table.group = t;
    table.classes = conjugacy_classes(t);
    for (const auto& sgn : sign_tables) {
        std::vector<CyclotomicNumber> row;
        row.reserve(table.classes.size());
        for (const auto& c : table.classes)
            row.push_back(CyclotomicNumber::from_rational(Rational(sgn[rep_index[coset[c.front()]]])));
        table.characters.push_back(std::move(row));
        table.degrees.push_back(1);
    }
    std::vector<CyclotomicNumber> big;
    big.reserve(table.classes.size());
    for (const auto& c : table.classes) {
        long v = c.front() == 0 ? d : (c.front() == z ? -d : 0);
        big.push_back(CyclotomicNumber::from_rational(Rational(v)));
    }
    table.characters.push_back(std::move(big));
    table.degrees.push_back(d);

    verify_character_orthogonality(table);
    return table;
}

/// Fixed catalog of 2-groups with a unique large irreducible: the order-8
/// dihedral and quaternion groups and the two order-32 central products,
/// realized as (signed) permutation groups.
inline std::vector<FiniteGroupSpec> two_group_catalog() {
    // signed permutation on `states` points doubled by a sign bit:
    // point = state + states * sign
    auto signed_perm = [](const std::vector<int>& state_map, const std::vector<int>& flips) {
        int m = static_cast<int>(state_map.size());
        Permutation p(2 * m);
        for (int s = 0; s < m; ++s)
            for (int sign = 0; sign < 2; ++sign)
                p[s + m * sign] = state_map[s] + m * (sign ^ flips[s]);
        return p;
    };

    std::vector<FiniteGroupSpec> out;
    // dihedral of order 8: rotation and reflection on a square
    out.push_back(FiniteGroupSpec::permutation({{1, 2, 3, 0}, {3, 2, 1, 0}}));
    // quaternion of order 8: i and j on the 4 states {1, i, j, k} with signs
    Permutation qi = signed_perm({1, 0, 3, 2}, {0, 1, 0, 1});
    Permutation qj = signed_perm({2, 3, 0, 1}, {0, 1, 1, 0});
    out.push_back(FiniteGroupSpec::permutation({qi, qj}));
    // central product of two dihedrals (order 32): bit flips and sign marks
    // on two bits, sharing one sign
    Permutation x1 = signed_perm({2, 3, 0, 1}, {0, 0, 0, 0});
    Permutation z1 = signed_perm({0, 1, 2, 3}, {0, 0, 1, 1});
    Permutation x2 = signed_perm({1, 0, 3, 2}, {0, 0, 0, 0});
    Permutation z2 = signed_perm({0, 1, 2, 3}, {0, 1, 0, 1});
    out.push_back(FiniteGroupSpec::permutation({x1, z1, x2, z2}));
    // central product of a dihedral with a quaternion (order 32): 8 states
    // (t, u) = t * 4 + u, dihedral pair acting on t, quaternion pair on u
    std::vector<int> amap(8), bmap(8), cmap(8), dmap(8);
    std::vector<int> aflip(8), bflip(8), cflip(8), dflip(8);
    const int cu[4] = {1, 0, 3, 2}, cf[4] = {0, 1, 0, 1};
    const int du[4] = {2, 3, 0, 1}, df[4] = {0, 1, 1, 0};
    for (int t = 0; t < 2; ++t)
        for (int u = 0; u < 4; ++u) {
            int b = t * 4 + u;
            amap[b] = (1 - t) * 4 + u;
            aflip[b] = 0;
            bmap[b] = b;
            bflip[b] = t;
            cmap[b] = t * 4 + cu[u];
            cflip[b] = cf[u];
            dmap[b] = t * 4 + du[u];
            dflip[b] = df[u];
        }
    out.push_back(FiniteGroupSpec::permutation({signed_perm(amap, aflip), signed_perm(bmap, bflip),
                                                signed_perm(cmap, cflip), signed_perm(dmap, dflip)}));
    return out;
}

}  // namespace neargroup
