#pragma once

#include <neargroup/rational.hpp>

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace neargroup {

namespace detail {

/// Exact quotient of integer polynomials with monic divisor; throws if the
/// division leaves a remainder.  Coefficients constant term first.
inline std::vector<Integer> poly_quotient_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    if (den.empty() || den.back() != 1)
        throw std::invalid_argument("poly_quotient_exact: divisor must be monic");
    long dn = static_cast<long>(num.size()) - 1;
    long dd = static_cast<long>(den.size()) - 1;
    if (dn < dd) throw std::invalid_argument("poly_quotient_exact: divisor degree too high");
    std::vector<Integer> quot(dn - dd + 1);
    for (long i = dn; i >= dd; --i) {
        Integer lead = num[i];
        if (lead == 0) continue;
        quot[i - dd] = lead;
        for (long j = 0; j <= dd; ++j) num[i - dd + j] -= lead * den[j];
    }
    for (const Integer& r : num)
        if (r != 0) throw std::logic_error("poly_quotient_exact: nonzero remainder");
    return quot;
}

}  // namespace detail

/// Coefficients of the n-th cyclotomic polynomial, constant term first,
/// computed by peeling the proper-divisor factors off x^n - 1.
inline const std::vector<Integer>& cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
    thread_local std::map<long, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Integer> f(n + 1);
    f[0] = -1;
    f[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) f = detail::poly_quotient_exact(std::move(f), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(f)).first->second;
}

/// Element of a cyclotomic field, stored as a coefficient vector modulo
/// x^N - 1 so that addition, multiplication, and conjugation are plain cyclic
/// operations.  Reduction modulo the cyclotomic polynomial happens lazily,
/// only when a canonical form is needed (equality, rationality).  Values at
/// different levels N compare correctly by lifting to the lcm.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(long n = 1) : n_(checked(n)), c_(n_) {}

    /// zeta_n^j, any integer j.
    static CyclotomicNumber root(long n, long j) {
        CyclotomicNumber z(n);
        long r = j % n;
        if (r < 0) r += n;
        z.c_[r] = 1;
        return z;
    }

    static CyclotomicNumber from_rational(Rational r, long n = 1) {
        CyclotomicNumber z(n);
        z.c_[0] = std::move(r);
        return z;
    }

    long level() const { return n_; }
    const std::vector<Rational>& coefficients() const { return c_; }

    /// Same value re-expressed at level m (requires n | m).
    CyclotomicNumber lift(long m) const {
        if (m % n_ != 0) throw std::invalid_argument("CyclotomicNumber::lift: level must be a multiple");
        if (m == n_) return *this;
        CyclotomicNumber z(m);
        long stride = m / n_;
        for (long i = 0; i < n_; ++i) z.c_[i * stride] = c_[i];
        return z;
    }

    /// Complex conjugate: zeta^i -> zeta^{-i}.
    CyclotomicNumber conjugate() const {
        CyclotomicNumber z(n_);
        for (long i = 0; i < n_; ++i) z.c_[(n_ - i) % n_] = c_[i];
        return z;
    }

    /// Canonical representative: coefficients reduced modulo the cyclotomic
    /// polynomial of the level (degree < phi(n), higher entries zero).
    CyclotomicNumber reduced() const {
        const std::vector<Integer>& phi = cyclotomic_polynomial(n_);
        long dphi = static_cast<long>(phi.size()) - 1;
        CyclotomicNumber z(*this);
        for (long i = n_ - 1; i >= dphi; --i) {
            if (z.c_[i] == 0) continue;
            Rational lead = z.c_[i];
            for (long j = 0; j <= dphi; ++j) z.c_[i - dphi + j] -= lead * Rational(phi[j]);
        }
        return z;
    }

    bool is_zero() const {
        CyclotomicNumber r = reduced();
        for (const Rational& x : r.c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        CyclotomicNumber r = reduced();
        for (long i = 1; i < n_; ++i)
            if (r.c_[i] != 0) return false;
        return true;
    }

    Rational as_rational() const {
        CyclotomicNumber r = reduced();
        for (long i = 1; i < n_; ++i)
            if (r.c_[i] != 0) throw std::domain_error("CyclotomicNumber::as_rational: irrational value");
        return r.c_[0];
    }

    CyclotomicNumber operator-() const {
        CyclotomicNumber z(*this);
        for (Rational& x : z.c_) x = -x;
        return z;
    }

    CyclotomicNumber& operator+=(const CyclotomicNumber& o) {
        align(o, [](std::vector<Rational>& a, const std::vector<Rational>& b) {
            for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });
        return *this;
    }

    CyclotomicNumber& operator-=(const CyclotomicNumber& o) {
        align(o, [](std::vector<Rational>& a, const std::vector<Rational>& b) {
            for (size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
        });
        return *this;
    }

    CyclotomicNumber& operator*=(const CyclotomicNumber& o) {
        long L = std::lcm(n_, o.n_);
        CyclotomicNumber a = lift(L);
        CyclotomicNumber b = o.lift(L);
        CyclotomicNumber prod(L);
        if (all_integral(a.c_) && all_integral(b.c_)) {
            // Integer cyclic convolution; the common case for Gauss sums and
            // character arithmetic, where coefficients are counts.
            std::vector<Integer> ai(L), bi(L), ri(L);
            for (long i = 0; i < L; ++i) ai[i] = numerator(a.c_[i]);
            for (long i = 0; i < L; ++i) bi[i] = numerator(b.c_[i]);
            for (long i = 0; i < L; ++i) {
                if (ai[i] == 0) continue;
                for (long j = 0; j < L; ++j) {
                    if (bi[j] == 0) continue;
                    ri[(i + j) % L] += ai[i] * bi[j];
                }
            }
            for (long i = 0; i < L; ++i) prod.c_[i] = Rational(ri[i]);
        } else {
            for (long i = 0; i < L; ++i) {
                if (a.c_[i] == 0) continue;
                for (long j = 0; j < L; ++j) {
                    if (b.c_[j] == 0) continue;
                    prod.c_[(i + j) % L] += a.c_[i] * b.c_[j];
                }
            }
        }
        *this = std::move(prod);
        return *this;
    }

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return (a - b).is_zero();
    }
    friend bool operator!=(const CyclotomicNumber& a, const CyclotomicNumber& b) { return !(a == b); }

private:
    static long checked(long n) {
        if (n < 1) throw std::invalid_argument("CyclotomicNumber: level must be positive");
        return n;
    }

    static bool all_integral(const std::vector<Rational>& v) {
        for (const Rational& x : v)
            if (!is_integer(x)) return false;
        return true;
    }

    template <typename F>
    void align(const CyclotomicNumber& o, F&& combine) {
        long L = std::lcm(n_, o.n_);
        if (L != n_) *this = lift(L);
        if (L == o.n_) {
            combine(c_, o.c_);
        } else {
            combine(c_, o.lift(L).c_);
        }
    }

    long n_;
    std::vector<Rational> c_;
};

/// z * conj(z); rational and equal to |z|^2 whenever that is rational.
inline CyclotomicNumber cyc_norm_squared(const CyclotomicNumber& z) { return z * z.conjugate(); }

}  // namespace neargroup
