#pragma once

#include <neargroup/fusion_ring.hpp>
#include <neargroup/metric.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace neargroup {

/// An action of a finite abelian group h on a metric group through
/// isometries, free away from the identity.  `images` holds the permutation
/// of the underlying group for every element of h; the constructor is the
/// only way to build one, so the invariants always hold.
struct ActionData {
    MetricGroup metric;
    FiniteGroupSpec h;
    GroupTable h_table;
    std::vector<std::vector<long>> images;  // permutation of A per h element

    /// generator_images follow minimal_generating_set(build_group_table(h));
    /// the full map is grown from them and every invariant is verified:
    /// h abelian, images are isometries, the map is a homomorphism, and no
    /// non-identity h element fixes a non-identity point.
    static ActionData make(MetricGroup metric, FiniteGroupSpec h,
                           const std::vector<std::vector<long>>& generator_images) {
        GroupTable table = build_group_table(h);
        ActionData act{std::move(metric), std::move(h), std::move(table), {}};
        GroupTable& ht = act.h_table;
        if (!ht.is_abelian())
            throw std::invalid_argument("ActionData: acting group must be abelian");
        const AbelianGroup& a = act.metric.group;
        long m = a.order();
        std::vector<int> gens = minimal_generating_set(ht);
        if (generator_images.size() != gens.size())
            throw std::invalid_argument("ActionData: need one image per minimal generator");

        std::vector<long> q = act.metric.form.value_table();
        auto check_isometry = [&](const std::vector<long>& phi) {
            if (static_cast<long>(phi.size()) != m)
                throw std::invalid_argument("ActionData: image has wrong degree");
            std::vector<char> hit(m, 0);
            for (long x = 0; x < m; ++x) {
                if (phi[x] < 0 || phi[x] >= m || hit[phi[x]])
                    throw std::invalid_argument("ActionData: image is not a permutation");
                hit[phi[x]] = 1;
            }
            for (long x = 0; x < m; ++x)
                for (long y = 0; y < m; ++y)
                    if (phi[a.add(x, y)] != a.add(phi[x], phi[y]))
                        throw std::invalid_argument("ActionData: image is not an automorphism");
            for (long x = 0; x < m; ++x)
                if (q[phi[x]] != q[x])
                    throw std::invalid_argument("ActionData: image does not preserve the form");
        };
        for (const auto& phi : generator_images) check_isometry(phi);

        int hn = ht.order();
        std::vector<long> identity(m);
        for (long x = 0; x < m; ++x) identity[x] = x;
        act.images.assign(hn, {});
        act.images[0] = identity;
        std::vector<int> queue{0};
        for (size_t head = 0; head < queue.size(); ++head) {
            int cur = queue[head];
            for (size_t i = 0; i < gens.size(); ++i) {
                int nxt = ht.mul(cur, gens[i]);
                if (!act.images[nxt].empty()) continue;
                std::vector<long> comp(m);
                for (long x = 0; x < m; ++x) comp[x] = act.images[cur][generator_images[i][x]];
                act.images[nxt] = std::move(comp);
                queue.push_back(nxt);
            }
        }
        for (int x = 0; x < hn; ++x)
            if (act.images[x].empty())
                throw std::logic_error("ActionData: generator images do not span the group");
        for (int x = 0; x < hn; ++x)
            for (int y = 0; y < hn; ++y)
                for (long e = 0; e < m; ++e)
                    if (act.images[ht.mul(x, y)][e] != act.images[x][act.images[y][e]])
                        throw std::invalid_argument("ActionData: images do not define a homomorphism");
        for (int x = 1; x < hn; ++x)
            for (long e = 1; e < m; ++e)
                if (act.images[x][e] == e)
                    throw std::invalid_argument(
                        "ActionData: action is not free away from the identity");
        return act;
    }
};

/// A simple object of the equivariantized ring: either the unit orbit paired
/// with a character of h (labeled by an h element under a fixed isomorphism
/// of h with its dual) or a free orbit of non-identity elements.
struct OrbitObject {
    bool is_character = false;
    int character = 0;        // h element index when is_character
    std::vector<long> orbit;  // sorted members when a free orbit
};

inline std::vector<OrbitObject> equivariant_simples(const ActionData& act) {
    int hn = act.h_table.order();
    long m = act.metric.group.order();
    std::vector<OrbitObject> out;
    for (int i = 0; i < hn; ++i) {
        OrbitObject o;
        o.is_character = true;
        o.character = i;
        out.push_back(std::move(o));
    }
    std::vector<char> seen(m, 0);
    seen[0] = 1;
    for (long x = 1; x < m; ++x) {
        if (seen[x]) continue;
        OrbitObject o;
        for (int i = 0; i < hn; ++i) {
            long y = act.images[i][x];
            if (!seen[y]) {
                seen[y] = 1;
                o.orbit.push_back(y);
            }
        }
        std::sort(o.orbit.begin(), o.orbit.end());
        if (static_cast<int>(o.orbit.size()) != hn)
            throw std::logic_error("equivariant_simples: orbit size differs from |H|");
        out.push_back(std::move(o));
    }
    return out;
}

/// Fusion ring of the equivariantization.  Basis: one character object per
/// h element (characters multiply by the group law of h), then one object
/// per free orbit.  Orbit products are computed from the multiset
/// {a + b : a in O, b in O'}: identity occurrences arrive in blocks of size
/// |H| and each block contributes every character once (the regular
/// representation of h); a free orbit contributes its constant per-member
/// count.  The dimension vector (1 on characters, |H| on orbits) is checked
/// to be multiplicative, which pins FPdim to |H| * |A| exactly.
inline FusionRing equivariant_fusion_ring(const ActionData& act) {
    const AbelianGroup& a = act.metric.group;
    int hn = act.h_table.order();
    long m = a.order();
    std::vector<OrbitObject> simples = equivariant_simples(act);
    int rank = static_cast<int>(simples.size());

    std::vector<int> orbit_of(m, -1);  // basis index of the orbit containing x
    for (int s = hn; s < rank; ++s)
        for (long x : simples[s].orbit) orbit_of[x] = s;

    std::vector<std::string> names;
    names.reserve(rank);
    for (int i = 0; i < hn; ++i) names.push_back("chi" + std::to_string(i));
    for (int s = hn; s < rank; ++s) names.push_back("X{" + std::to_string(simples[s].orbit.front()) + "}");

    std::vector<int> dual(rank);
    for (int i = 0; i < hn; ++i) dual[i] = act.h_table.inverse[i];
    for (int s = hn; s < rank; ++s) dual[s] = orbit_of[a.neg(simples[s].orbit.front())];

    FusionRing r = FusionRing::zeroed(std::move(names), std::move(dual));
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < hn; ++j) r.set_n(i, j, act.h_table.mul(i, j), 1);
    for (int i = 0; i < hn; ++i)
        for (int s = hn; s < rank; ++s) {
            r.set_n(i, s, s, 1);
            r.set_n(s, i, s, 1);
        }
    for (int s = hn; s < rank; ++s)
        for (int u = hn; u < rank; ++u) {
            std::vector<long> count(m, 0);
            for (long x : simples[s].orbit)
                for (long y : simples[u].orbit) ++count[a.add(x, y)];
            if (count[0] % hn != 0)
                throw std::logic_error(
                    "equivariant_fusion_ring: identity count is not a multiple of |H|");
            long blocks = count[0] / hn;
            for (int i = 0; i < hn; ++i) r.set_n(s, u, i, blocks);
            for (int w = hn; w < rank; ++w) {
                long c = count[simples[w].orbit.front()];
                for (long x : simples[w].orbit)
                    if (count[x] != c)
                        throw std::logic_error(
                            "equivariant_fusion_ring: multiset count varies along an orbit");
                r.set_n(s, u, w, c);
            }
        }
    require_axioms(r, "equivariant_fusion_ring");

    // exact Frobenius-Perron certificate: dims (1,...,1, |H|,...,|H|)
    std::vector<long long> d(rank, 1);
    for (int s = hn; s < rank; ++s) d[s] = hn;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            long long sum = 0;
            for (int k = 0; k < rank; ++k) sum += r.n(i, j, k) * d[k];
            if (sum != d[i] * d[j])
                throw std::logic_error("equivariant_fusion_ring: dimension vector is not multiplicative");
        }
    return r;
}

/// FPdim of the equivariantization, exact: |H| * |A|.  The value is the sum
/// of squared entries of the dimension vector certified multiplicative in
/// equivariant_fusion_ring.
inline long long equivariant_fpdim(const ActionData& act) {
    return static_cast<long long>(act.h_table.order()) * act.metric.group.order();
}

/// Ring-level external product: basis pairs, componentwise structure
/// constants.  The result is verified against the fusion-ring axioms.
inline FusionRing external_product(const FusionRing& a, const FusionRing& b) {
    int ra = a.rank();
    int rb = b.rank();
    std::vector<std::string> names;
    std::vector<int> dual;
    names.reserve(static_cast<size_t>(ra) * rb);
    dual.reserve(static_cast<size_t>(ra) * rb);
    for (int i = 0; i < ra; ++i)
        for (int j = 0; j < rb; ++j) {
            names.push_back(a.name(i) + "*" + b.name(j));
            dual.push_back(a.dual(i) * rb + b.dual(j));
        }
    FusionRing r = FusionRing::zeroed(std::move(names), std::move(dual));
    for (int i1 = 0; i1 < ra; ++i1)
        for (int j1 = 0; j1 < rb; ++j1)
            for (int i2 = 0; i2 < ra; ++i2)
                for (int j2 = 0; j2 < rb; ++j2)
                    for (int k1 = 0; k1 < ra; ++k1)
                        for (int k2 = 0; k2 < rb; ++k2)
                            r.set_n(i1 * rb + j1, i2 * rb + j2, k1 * rb + k2,
                                    a.n(i1, i2, k1) * b.n(j1, j2, k2));
    require_axioms(r, "external_product");
    return r;
}

/// Ring-level fact behind the rank-two branch of the classification: the
/// product of the rank-two ring X*X = 1 + X with the group ring of H is a
/// near-group ring exactly when H is trivial (any nontrivial H contributes
/// extra non-invertible basis elements g*X).  Checked for cyclic H of every
/// order up to h_max.
struct RankTwoProductCheck {
    long h_max = 0;
    bool identity_holds = true;
    std::vector<long> near_group_orders;  // |H| values where the product is near-group
};

inline RankTwoProductCheck rank_two_product_check(long h_max) {
    if (h_max < 1) throw std::invalid_argument("rank_two_product_check: h_max must be >= 1");
    RankTwoProductCheck rep;
    rep.h_max = h_max;
    FusionRing rank_two = build_near_group({FiniteGroupSpec::cyclic(1), 1});
    for (long h = 1; h <= h_max; ++h) {
        FusionRing prod = external_product(rank_two, build_group_ring(FiniteGroupSpec::cyclic(h)));
        bool is_near_group = recognize_near_group(prod).has_value();
        if (is_near_group) rep.near_group_orders.push_back(h);
        if (is_near_group != (h == 1)) rep.identity_holds = false;
    }
    return rep;
}

/// Orbit-size constraint for the distinguished non-invertible object: size 1
/// is always possible, and any size s >= 2 must satisfy 1 + s = n + 1, so
/// only s = n survives.
struct OrbitConstraintReport {
    long n = 0;
    std::vector<long> allowed;
};

inline OrbitConstraintReport orbit_constraint_check(long n) {
    if (n < 1) throw std::invalid_argument("orbit_constraint_check: n must be >= 1");
    OrbitConstraintReport rep;
    rep.n = n;
    rep.allowed.push_back(1);
    for (long s = 2; s <= n + 1; ++s)
        if (1 + s == n + 1) rep.allowed.push_back(s);
    return rep;
}

}  // namespace neargroup
