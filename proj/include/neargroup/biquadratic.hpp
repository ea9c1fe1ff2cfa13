#pragma once

#include <neargroup/quadratic.hpp>
#include <neargroup/rational.hpp>

#include <array>
#include <stdexcept>
#include <vector>

namespace neargroup {

/// Element of the biquadratic field Q(sqrt(m1), sqrt(m2)), m1 != m2 both
/// squarefree and > 1, written on the basis {1, sqrt(m1), sqrt(m2), sqrt(m3)}
/// where m3 is the squarefree part of m1*m2.  With g = gcd(m1, m2):
///
///   sqrt(m1)*sqrt(m2) = g*sqrt(m3)
///   sqrt(m1)*sqrt(m3) = (m1/g)*sqrt(m2)
///   sqrt(m2)*sqrt(m3) = (m2/g)*sqrt(m1)
///
/// The four basis values are linearly independent over Q, so coordinates are
/// canonical and equality is coordinatewise.
class BiquadraticElement {
public:
    BiquadraticElement(Integer m1, Integer m2, Rational c0 = 0, Rational c1 = 0, Rational c2 = 0,
                       Rational c3 = 0) {
        if (m1 > m2) {
            std::swap(m1, m2);
            std::swap(c1, c2);
        }
        check_radicand(m1);
        check_radicand(m2);
        if (m1 == m2) throw std::invalid_argument("BiquadraticElement: radicands must differ");
        m1_ = m1;
        m2_ = m2;
        g_ = boost::multiprecision::gcd(m1_, m2_);
        m3_ = (m1_ / g_) * (m2_ / g_);
        c_ = {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
    }

    /// Embeds a quadratic value whose radicand is 1, m1, m2, or m3.
    static BiquadraticElement embed(const QuadraticFieldElement& x, const Integer& m1, const Integer& m2) {
        BiquadraticElement r(m1, m2);
        r.c_[0] = x.rational_part();
        if (x.is_rational()) return r;
        if (x.radicand() == r.m1_)
            r.c_[1] = x.radical_part();
        else if (x.radicand() == r.m2_)
            r.c_[2] = x.radical_part();
        else if (x.radicand() == r.m3_)
            r.c_[3] = x.radical_part();
        else
            throw std::invalid_argument("BiquadraticElement: quadratic value lies outside the field");
        return r;
    }

    const Integer& m1() const { return m1_; }
    const Integer& m2() const { return m2_; }
    const Integer& m3() const { return m3_; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_rational() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_zero() const { return is_rational() && c_[0] == 0; }

    /// Galois conjugate sending sqrt(m1) -> s1*sqrt(m1), sqrt(m2) -> s2*sqrt(m2)
    /// for signs s1, s2 in {+1, -1}; sqrt(m3) follows as the product.
    BiquadraticElement conjugate(int s1, int s2) const {
        BiquadraticElement r(*this);
        if (s1 < 0) r.c_[1] = -r.c_[1];
        if (s2 < 0) r.c_[2] = -r.c_[2];
        if (s1 * s2 < 0) r.c_[3] = -r.c_[3];
        return r;
    }

    BiquadraticElement operator-() const {
        BiquadraticElement r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    BiquadraticElement& operator+=(const BiquadraticElement& o) {
        check_same_field(o);
        for (int i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }

    BiquadraticElement& operator-=(const BiquadraticElement& o) {
        check_same_field(o);
        for (int i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }

    BiquadraticElement& operator*=(const BiquadraticElement& o) {
        check_same_field(o);
        const Rational u(m1_ / g_), v(m2_ / g_), g(g_);
        const auto& a = c_;
        const auto& b = o.c_;
        std::array<Rational, 4> r;
        r[0] = a[0] * b[0] + a[1] * b[1] * Rational(m1_) + a[2] * b[2] * Rational(m2_) +
               a[3] * b[3] * Rational(m3_);
        r[1] = a[0] * b[1] + a[1] * b[0] + (a[2] * b[3] + a[3] * b[2]) * v;
        r[2] = a[0] * b[2] + a[2] * b[0] + (a[1] * b[3] + a[3] * b[1]) * u;
        r[3] = a[0] * b[3] + a[3] * b[0] + (a[1] * b[2] + a[2] * b[1]) * g;
        c_ = std::move(r);
        return *this;
    }

    BiquadraticElement& operator*=(const Rational& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend BiquadraticElement operator+(BiquadraticElement x, const BiquadraticElement& y) { return x += y; }
    friend BiquadraticElement operator-(BiquadraticElement x, const BiquadraticElement& y) { return x -= y; }
    friend BiquadraticElement operator*(BiquadraticElement x, const BiquadraticElement& y) { return x *= y; }
    friend BiquadraticElement operator*(BiquadraticElement x, const Rational& s) { return x *= s; }
    friend BiquadraticElement operator*(const Rational& s, BiquadraticElement x) { return x *= s; }

    friend bool operator==(const BiquadraticElement& x, const BiquadraticElement& y) {
        return x.m1_ == y.m1_ && x.m2_ == y.m2_ && x.c_ == y.c_;
    }
    friend bool operator!=(const BiquadraticElement& x, const BiquadraticElement& y) { return !(x == y); }

    /// Projections x + s2(x) and x*s2(x) onto the fixed field Q(sqrt(m1)) of
    /// the conjugation flipping sqrt(m2).
    QuadraticFieldElement trace_to_first() const {
        return QuadraticFieldElement(2 * c_[0], 2 * c_[1], m1_);
    }

    QuadraticFieldElement norm_to_first() const {
        BiquadraticElement p = *this * conjugate(1, -1);
        if (p.c_[2] != 0 || p.c_[3] != 0)
            throw std::logic_error("norm_to_first: product escaped the fixed field");
        return QuadraticFieldElement(p.c_[0], p.c_[1], m1_);
    }

    /// Characteristic polynomial of multiplication on the degree-4 field,
    /// coefficients constant term first, leading coefficient 1.  Computed as
    /// (t^2 - A t + B)(t^2 - A' t + B') with A, B in Q(sqrt(m1)) the relative
    /// trace and norm and ' the conjugation of Q(sqrt(m1)).
    std::vector<Rational> char_poly() const {
        QuadraticFieldElement A = trace_to_first();
        QuadraticFieldElement B = norm_to_first();
        Rational p3 = -A.trace();
        Rational p2 = B.trace() + A.norm();
        Rational p1 = -(A * B.conjugate()).trace();
        Rational p0 = B.norm();
        return {p0, p1, p2, p3, 1};
    }

    /// Integrality of the characteristic polynomial; by the Gauss lemma this
    /// is equivalent to integrality of the minimal polynomial, so the test is
    /// exact even when the value lies in a proper subfield.
    bool is_algebraic_integer() const {
        for (const Rational& p : char_poly())
            if (!is_integer(p)) return false;
        return true;
    }

private:
    static void check_radicand(const Integer& m) {
        if (m <= 1) throw std::invalid_argument("BiquadraticElement: radicand must exceed 1");
        SquarefreeSplit s = squarefree_decompose(m);
        if (s.square_part != 1) throw std::invalid_argument("BiquadraticElement: radicand must be squarefree");
    }

    void check_same_field(const BiquadraticElement& o) const {
        if (m1_ != o.m1_ || m2_ != o.m2_)
            throw std::invalid_argument("BiquadraticElement: field mismatch");
    }

    Integer m1_, m2_, m3_, g_;
    std::array<Rational, 4> c_;
};

}  // namespace neargroup
