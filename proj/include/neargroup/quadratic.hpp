#pragma once

#include <neargroup/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace neargroup {

/// Element a + b*sqrt(m) of a quadratic field, held in canonical form:
/// m squarefree, and m == 1 exactly when the value is rational (then b == 0).
///
/// Arithmetic is defined between elements of the same field; rational values
/// (m == 1) are compatible with every field. Mixing two distinct irrational
/// radicands throws, so accidental field confusion is an error, never a
/// silent wrong answer.
class QuadraticFieldElement {
public:
    QuadraticFieldElement() : m_(1) {}

    QuadraticFieldElement(Rational a) : a_(std::move(a)), m_(1) {}

    QuadraticFieldElement(int a) : a_(a), m_(1) {}

    /// Value a + b*sqrt(radicand), radicand > 0.  The radicand is reduced to
    /// its squarefree part, folding the extracted square into b; a vanishing
    /// radical part collapses to a rational value.
    QuadraticFieldElement(Rational a, Rational b, const Integer& radicand)
        : a_(std::move(a)), b_(std::move(b)) {
        if (radicand <= 0) throw std::invalid_argument("QuadraticFieldElement: radicand must be positive");
        if (b_ == 0) {
            m_ = 1;
            return;
        }
        SquarefreeSplit split = squarefree_decompose(radicand);
        b_ *= split.square_part;
        m_ = split.squarefree;
        if (m_ == 1) {
            a_ += b_;
            b_ = 0;
        }
    }

    static QuadraticFieldElement sqrt_of(const Integer& n) {
        return QuadraticFieldElement(Rational(0), Rational(1), n);
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    const Integer& radicand() const { return m_; }

    bool is_rational() const { return m_ == 1; }

    const Rational& as_rational() const {
        if (!is_rational()) throw std::domain_error("as_rational: value is irrational");
        return a_;
    }

    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadraticFieldElement conjugate() const {
        QuadraticFieldElement r(*this);
        r.b_ = -r.b_;
        return r;
    }

    Rational trace() const { return 2 * a_; }

    Rational norm() const { return a_ * a_ - b_ * b_ * m_; }

    /// Trace and norm both integral; this is the standard membership test for
    /// the ring of integers, and reduces to a in Z when the value is rational.
    bool is_algebraic_integer() const { return is_integer(trace()) && is_integer(norm()); }

    /// Characteristic polynomial of multiplication on the rank-2 lattice,
    /// t^2 - trace*t + norm, coefficients constant term first.
    std::vector<Rational> char_poly() const { return {norm(), -trace(), 1}; }

    QuadraticFieldElement operator-() const {
        QuadraticFieldElement r(*this);
        r.a_ = -r.a_;
        r.b_ = -r.b_;
        return r;
    }

    QuadraticFieldElement& operator+=(const QuadraticFieldElement& o) {
        adopt_field(o);
        a_ += o.a_;
        b_ += o.b_;
        collapse();
        return *this;
    }

    QuadraticFieldElement& operator-=(const QuadraticFieldElement& o) {
        adopt_field(o);
        a_ -= o.a_;
        b_ -= o.b_;
        collapse();
        return *this;
    }

    QuadraticFieldElement& operator*=(const QuadraticFieldElement& o) {
        adopt_field(o);
        Rational a = a_ * o.a_ + b_ * o.b_ * Rational(m_);
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        collapse();
        return *this;
    }

    QuadraticFieldElement& operator/=(const QuadraticFieldElement& o) {
        if (o.is_zero()) throw std::domain_error("QuadraticFieldElement: division by zero");
        adopt_field(o);
        Rational n = o.norm();
        Rational a = (a_ * o.a_ - b_ * o.b_ * Rational(m_)) / n;
        Rational b = (b_ * o.a_ - a_ * o.b_) / n;
        a_ = std::move(a);
        b_ = std::move(b);
        collapse();
        return *this;
    }

    friend QuadraticFieldElement operator+(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x += y; }
    friend QuadraticFieldElement operator-(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x -= y; }
    friend QuadraticFieldElement operator*(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x *= y; }
    friend QuadraticFieldElement operator/(QuadraticFieldElement x, const QuadraticFieldElement& y) { return x /= y; }

    friend bool operator==(const QuadraticFieldElement& x, const QuadraticFieldElement& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.m_ == y.m_);
    }
    friend bool operator!=(const QuadraticFieldElement& x, const QuadraticFieldElement& y) { return !(x == y); }

    /// Sign of the real number a + b*sqrt(m): -1, 0, or +1.
    int sign() const {
        int sa = a_ == 0 ? 0 : (a_ > 0 ? 1 : -1);
        if (b_ == 0) return sa;
        int sb = b_ > 0 ? 1 : -1;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare |a| with |b|sqrt(m) via squares; equality is
        // impossible since m is squarefree and > 1 here.
        return a_ * a_ > b_ * b_ * Rational(m_) ? sa : sb;
    }

    bool is_positive() const { return sign() > 0; }

    std::string str() const {
        if (is_rational()) return to_string(a_);
        std::string s = to_string(a_);
        s += b_ > 0 ? " + " : " - ";
        Rational ab = b_ > 0 ? b_ : Rational(-b_);
        if (ab != 1) s += to_string(ab) + "*";
        s += "sqrt(" + m_.str() + ")";
        return s;
    }

private:
    // Fields match when either side is rational or the radicands agree.
    void adopt_field(const QuadraticFieldElement& o) {
        if (m_ == o.m_) return;
        if (m_ == 1) {
            m_ = o.m_;
            return;
        }
        if (o.m_ != 1) throw std::invalid_argument("QuadraticFieldElement: radicand mismatch");
    }

    void collapse() {
        if (b_ == 0) m_ = 1;
    }

    Rational a_;
    Rational b_;
    Integer m_;
};

}  // namespace neargroup
