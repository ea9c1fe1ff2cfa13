#include <catch2/catch_amalgamated.hpp>

#include <neargroup/quadratic.hpp>

using namespace neargroup;

namespace {
QuadraticFieldElement value(long a, long b, long m, long den = 1) {
    return QuadraticFieldElement(Rational(a, den), Rational(b, den), Integer(m));
}
}  // namespace

TEST_CASE("canonical form") {
    // radicand reduced to squarefree part
    QuadraticFieldElement x = value(0, 1, 12);  // sqrt(12) = 2 sqrt(3)
    CHECK(x.radicand() == 3);
    CHECK(x.radical_part() == 2);

    // perfect-square radicand collapses to a rational
    QuadraticFieldElement y = value(1, 3, 49);  // 1 + 3*7
    CHECK(y.is_rational());
    CHECK(y.as_rational() == 22);

    // b = 0 forces m = 1
    QuadraticFieldElement z = value(5, 0, 7);
    CHECK(z.is_rational());
    CHECK(z.radicand() == 1);

    CHECK_THROWS_AS(value(0, 1, -2), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
    QuadraticFieldElement a = value(1, 1, 2);   // 1 + sqrt(2)
    QuadraticFieldElement b = value(3, -1, 2);  // 3 - sqrt(2)
    CHECK((a + b) == value(4, 0, 2));
    CHECK((a * b) == value(1, 2, 2));  // 3 - sqrt2 + 3 sqrt2 - 2
    CHECK((a - a).is_zero());

    // (3 + sqrt(2)) / (1 + sqrt(2)) = 2 sqrt(2) - 1
    QuadraticFieldElement q = value(3, 1, 2) / value(1, 1, 2);
    CHECK(q == value(-1, 2, 2));

    // mixing rationals with any field is fine; mixing two fields is not
    CHECK((value(2, 0, 1) * a) == value(2, 2, 2));
    CHECK_THROWS_AS(a + value(0, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(a / QuadraticFieldElement(Rational(0)), std::domain_error);
}

TEST_CASE("conjugate, trace, norm") {
    QuadraticFieldElement x = value(2, 3, 5);
    CHECK(x.conjugate() == value(2, -3, 5));
    CHECK(x.trace() == 4);
    CHECK(x.norm() == Rational(4 - 45));
    CHECK((x * x.conjugate()) == QuadraticFieldElement(Rational(-41)));
    CHECK(x.char_poly() == std::vector<Rational>{Rational(-41), Rational(-4), Rational(1)});
}

TEST_CASE("algebraic integer test") {
    // golden ratio: x^2 - x - 1
    CHECK(value(1, 1, 5, 2).is_algebraic_integer());
    // 1/2 is not
    CHECK_FALSE(QuadraticFieldElement(Rational(1, 2)).is_algebraic_integer());
    // 3 + 2 sqrt(2): x^2 - 6x + 1
    CHECK(value(3, 2, 2).is_algebraic_integer());
    // (1 + sqrt(3))/2 has norm -1/2
    CHECK_FALSE(value(1, 1, 3, 2).is_algebraic_integer());
    // plain integers are
    CHECK(QuadraticFieldElement(Rational(-7)).is_algebraic_integer());
    // (3 + sqrt(2))/(1 + sqrt(2)) = 2 sqrt(2) - 1 is integral
    CHECK((value(3, 1, 2) / value(1, 1, 2)).is_algebraic_integer());
    // (1 + sqrt(2))/(3 + sqrt(2)) has norm -1/7
    CHECK_FALSE((value(1, 1, 2) / value(3, 1, 2)).is_algebraic_integer());
}

TEST_CASE("ordering of real values") {
    CHECK(value(0, 1, 2).sign() == 1);
    CHECK(value(0, -1, 2).sign() == -1);
    CHECK(value(-1, 1, 2).sign() == 1);    // sqrt(2) > 1
    CHECK(value(-2, 1, 2).sign() == -1);   // sqrt(2) < 2
    CHECK(value(3, -2, 2).sign() == 1);    // 3 > 2 sqrt(2)
    CHECK(value(-3, 2, 2).sign() == -1);
    CHECK(QuadraticFieldElement().sign() == 0);
    CHECK(value(7, -4, 3, 2).is_positive());  // 7 > 4 sqrt(3) is false: 48 < 49, true
}

TEST_CASE("printing") {
    CHECK(value(1, 1, 5, 2).str() == "1/2 + 1/2*sqrt(5)");
    CHECK(value(0, -1, 3).str() == "0 - sqrt(3)");
    CHECK(QuadraticFieldElement(Rational(4)).str() == "4");
}
