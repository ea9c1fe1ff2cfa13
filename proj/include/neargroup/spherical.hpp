#pragma once

#include <neargroup/algint.hpp>
#include <neargroup/fusion_ring.hpp>

#include <string>
#include <utility>
#include <vector>

namespace neargroup {

/// The doubled ring of a near-group rule: every base object acquires + and -
/// copies, with e- an order-two invertible gluing the halves together.
/// Basis layout: g+ at the group-table index of g, g- at n + that index,
/// X+ at 2n, X- at 2n+1.
struct SphericalizedRing {
    NearGroupRule rule;
    long s = 0, t = 0;
    GroupTable group;
    FusionRing ring;

    long n() const { return group.order(); }
    int plus(int g) const { return g; }
    int minus(int g) const { return static_cast<int>(n()) + g; }
    int x_plus() const { return static_cast<int>(2 * n()); }
    int x_minus() const { return static_cast<int>(2 * n() + 1); }
};

namespace detail {

inline FusionRing assemble_doubled_table(const GroupTable& tab, long s, long t) {
    int n = tab.order();
    std::vector<std::string> names;
    std::vector<int> dual;
    names.reserve(2 * n + 2);
    for (int g = 0; g < n; ++g) names.push_back(tab.names[g] + "+");
    for (int g = 0; g < n; ++g) names.push_back(tab.names[g] + "-");
    names.push_back("X+");
    names.push_back("X-");
    for (int g = 0; g < n; ++g) dual.push_back(tab.inverse[g]);
    for (int g = 0; g < n; ++g) dual.push_back(n + tab.inverse[g]);
    dual.push_back(2 * n);
    dual.push_back(2 * n + 1);

    FusionRing r = FusionRing::zeroed(names, dual);
    int b = 2 * n + 2;
    // sign of a basis element: 0 for the + copy, 1 for the - copy
    auto sign_of = [&](int i) { return i < n ? 0 : (i < 2 * n ? i / n : i - 2 * n); };
    auto group_part = [&](int i) { return i % n; };  // valid for i < 2n
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j) {
            bool xi = i >= 2 * n, xj = j >= 2 * n;
            int si = sign_of(i), sj = sign_of(j);
            if (!xi && !xj) {
                r.set_n(i, j, tab.mul(group_part(i), group_part(j)) + n * (si ^ sj), 1);
            } else if (xi != xj) {
                r.set_n(i, j, 2 * n + (si ^ sj), 1);
            } else if (si == sj) {
                // X+ X+ and X- X-: all g+ once, then s X+ + t X-
                for (int g = 0; g < n; ++g) r.set_n(i, j, g, 1);
                r.set_n(i, j, 2 * n, s);
                r.set_n(i, j, 2 * n + 1, t);
            } else {
                // mixed signs: all g- once, then t X+ + s X-
                for (int g = 0; g < n; ++g) r.set_n(i, j, n + g, 1);
                r.set_n(i, j, 2 * n, t);
                r.set_n(i, j, 2 * n + 1, s);
            }
        }
    return r;
}

}  // namespace detail

/// Collapse map onto the base near-group ring: g+, g- to g and X+, X- to X.
/// Returns true when the doubled table pushes forward to the base table:
/// for all a, b and every base c, the sum of N(a, b, c') over the two
/// preimages c' of c equals the base structure constant at the images.
inline bool verify_forgetful_homomorphism(const SphericalizedRing& sph) {
    FusionRing base = build_near_group(sph.rule);
    int n = static_cast<int>(sph.n());
    int b = 2 * n + 2;
    auto image = [&](int i) { return i < 2 * n ? i % n : n; };
    for (int i = 0; i < b; ++i)
        for (int j = 0; j < b; ++j)
            for (int c = 0; c <= n; ++c) {
                long long pushed = 0;
                if (c < n)
                    pushed = sph.ring.n(i, j, c) + sph.ring.n(i, j, n + c);
                else
                    pushed = sph.ring.n(i, j, 2 * n) + sph.ring.n(i, j, 2 * n + 1);
                if (pushed != base.n(image(i), image(j), c)) return false;
            }
    return true;
}

/// Build the doubled ring for a split k = s + t, verify the fusion-ring
/// axioms, and verify the collapse map back onto the base rule.
inline SphericalizedRing build_sphericalized_ring(const NearGroupRule& rule, long s, long t) {
    if (s < 0 || t < 0 || s + t != rule.k)
        throw std::invalid_argument("build_sphericalized_ring: need s, t >= 0 with s + t = k");
    SphericalizedRing sph;
    sph.rule = rule;
    sph.s = s;
    sph.t = t;
    sph.group = build_group_table(rule.group);
    sph.ring = detail::assemble_doubled_table(sph.group, s, t);
    auto bad = check_axioms(sph.ring, 1);
    if (!bad.empty())
        throw std::logic_error("build_sphericalized_ring: assembled table fails " + bad[0].law);
    if (!verify_forgetful_homomorphism(sph))
        throw std::logic_error("build_sphericalized_ring: collapse map is not a homomorphism");
    return sph;
}

/// One root of d^2 = n + r d together with the total dimension 2n + r d it
/// induces on the doubled ring.
struct DimensionSolution {
    long n = 0;
    long r = 0;
    QuadraticFieldElement d;
    QuadraticFieldElement total;
};

/// Both roots d = (r +- sqrt(r^2+4n)) / 2, the + root first.  Exact: each
/// returned d satisfies d*d == n + r*d identically.
inline std::pair<DimensionSolution, DimensionSolution> solve_dimensions(long n, long r) {
    if (n < 1) throw std::invalid_argument("solve_dimensions: n must be positive");
    Integer disc = Integer(r) * r + 4 * Integer(n);
    auto make = [&](int sgn) {
        DimensionSolution sol;
        sol.n = n;
        sol.r = r;
        sol.d = QuadraticFieldElement(Rational(r, 2), Rational(sgn, 2), disc);
        sol.total = QuadraticFieldElement(Rational(2 * n)) + QuadraticFieldElement(Rational(r)) * sol.d;
        return sol;
    };
    return {make(+1), make(-1)};
}

/// One (s, t) split examined by the pipeline.
struct SphericalCandidate {
    long s = 0, t = 0;
    long r = 0;                    // s - t, nonnegative by the naming convention
    bool associative = false;      // doubled table passes the axioms
    bool forgetful_ok = false;     // collapse map verified
    bool ratio_integral = false;   // D/Delta an algebraic integer
    bool square_r_radicand = false;  // r^2+4n a perfect square
    bool square_k_radicand = false;  // k^2+4n a perfect square
    bool survives = false;
    std::string eliminated_by;     // empty when the candidate survives
    std::pair<DimensionSolution, DimensionSolution> dims;
};

struct SphericalPipelineReport {
    NearGroupRule rule;
    long n = 0, k = 0;
    std::vector<SphericalCandidate> candidates;
    std::vector<long> survivors;
    bool survivor_is_k = false;
    // The - copy of the unit is an invertible of dimension -1: its square is
    // the unit, and the total 2n + rd (rather than 2(n + d^2)) is consistent
    // only with the g- objects carrying dimension -1.
    long g_minus_dim = -1;
};

/// Enumerate the splits of k (s from ceil(k/2) to k, so r = s - t >= 0),
/// build and certify each doubled ring, and eliminate candidate r values
/// by exact arithmetic:
///   - if r^2+4n or k^2+4n is a perfect square, the corresponding dimension
///     is a rational algebraic integer, which forces the pseudo-unitary case
///     r = k; a candidate r < k is eliminated on that ground even when the
///     dimension ratio happens to be an algebraic integer (it can be: the
///     smallest case is n=3, k=6, r=2 with ratio 2 - sqrt(3));
///   - otherwise r survives only if D/Delta = (r^2+4n + r sqrt(r^2+4n)) /
///     (k^2+4n + k sqrt(k^2+4n)) is an algebraic integer, which happens
///     exactly at r = k by the conjugate-product argument.
/// An integrality failure eliminates the r value and nothing more.
inline SphericalPipelineReport spherical_pipeline(const NearGroupRule& rule) {
    SphericalPipelineReport rep;
    rep.rule = rule;
    rep.k = rule.k;
    GroupTable tab = build_group_table(rule.group);
    rep.n = tab.order();
    long n = rep.n, k = rep.k;
    Integer bk = Integer(k) * k + 4 * Integer(n);
    for (long s = (k + 1) / 2; s <= k; ++s) {
        long t = k - s;
        SphericalCandidate cand;
        cand.s = s;
        cand.t = t;
        cand.r = s - t;
        long r = cand.r;
        SphericalizedRing sph;
        sph.rule = rule;
        sph.s = s;
        sph.t = t;
        sph.group = tab;
        sph.ring = detail::assemble_doubled_table(tab, s, t);
        cand.associative = check_axioms(sph.ring, 1).empty();
        cand.forgetful_ok = verify_forgetful_homomorphism(sph);
        Integer br = Integer(r) * r + 4 * Integer(n);
        cand.square_r_radicand = is_perfect_square(br);
        cand.square_k_radicand = is_perfect_square(bk);
        cand.ratio_integral =
            radical_quotient(br, Integer(r) * r * br, bk, Integer(k) * k * bk, +1)
                .is_algebraic_integer();
        cand.dims = solve_dimensions(n, r);
        if (cand.square_r_radicand || cand.square_k_radicand) {
            cand.survives = (r == k);
            if (!cand.survives)
                cand.eliminated_by = "integer radicand forces the pseudo-unitary case r = k";
        } else {
            cand.survives = cand.ratio_integral;
            if (!cand.survives)
                cand.eliminated_by = "dimension ratio is not an algebraic integer";
        }
        if (cand.survives) rep.survivors.push_back(r);
        rep.candidates.push_back(std::move(cand));
    }
    rep.survivor_is_k = rep.survivors == std::vector<long>{k};
    return rep;
}

/// Arithmetic-only sweep of the pipeline's elimination logic over a grid of
/// (n, k) pairs, skipping the ring builds: returns every (n, k) whose
/// survivor set is not exactly {k}.  Empty result = the elimination logic
/// pins r = k on the whole grid.
inline std::vector<std::pair<long, long>> pipeline_survivor_scan(long n_max, long k_max) {
    if (n_max < 1 || k_max < 0)
        throw std::invalid_argument("pipeline_survivor_scan: bad bounds");
    std::vector<std::pair<long, long>> bad;
    for (long n = 1; n <= n_max; ++n)
        for (long k = 0; k <= k_max; ++k) {
            Integer bk = Integer(k) * k + 4 * Integer(n);
            bool bk_square = is_perfect_square(bk);
            std::vector<long> survivors;
            for (long s = (k + 1) / 2; s <= k; ++s) {
                long r = 2 * s - k;
                Integer br = Integer(r) * r + 4 * Integer(n);
                bool survives;
                if (is_perfect_square(br) || bk_square) {
                    survives = (r == k);
                } else {
                    survives =
                        radical_quotient(br, Integer(r) * r * br, bk, Integer(k) * k * bk, +1)
                            .is_algebraic_integer();
                }
                if (survives) survivors.push_back(r);
            }
            if (survivors != std::vector<long>{k}) bad.emplace_back(n, k);
        }
    return bad;
}

}  // namespace neargroup
