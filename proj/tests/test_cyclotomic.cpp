#include <catch2/catch_amalgamated.hpp>

#include <neargroup/cyclotomic.hpp>

#include <algorithm>

using namespace neargroup;

namespace {
CyclotomicNumber zeta(long n, long j = 1) { return CyclotomicNumber::root(n, j); }
CyclotomicNumber rat(long v) { return CyclotomicNumber::from_rational(Rational(v)); }
}  // namespace

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<Integer>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
    // phi(105) = 48; first cyclotomic with a coefficient of magnitude 2
    const auto& c105 = cyclotomic_polynomial(105);
    CHECK(c105.size() == 49);
    CHECK(*std::min_element(c105.begin(), c105.end()) == -2);
}

TEST_CASE("vanishing sums and rationality") {
    CyclotomicNumber s = rat(1) + zeta(3) + zeta(3, 2);
    CHECK(s.is_zero());
    CHECK(s.is_rational());

    CHECK(zeta(4, 2) == rat(-1));
    CHECK(zeta(6, 3) == rat(-1));
    CHECK_FALSE(zeta(5).is_rational());

    // lifting: zeta_6^2 = zeta_3
    CHECK(zeta(6, 2) == zeta(3, 1));
    CHECK(zeta(6) * zeta(6) == zeta(3));
}

TEST_CASE("norm squared anchors") {
    // |1 + 2 w|^2 = 3 for w a primitive cube root
    CyclotomicNumber a = rat(1) + rat(2) * zeta(3);
    CHECK(cyc_norm_squared(a) == rat(3));

    // |1 + 3 w|^2 = 4 for w = -1
    CyclotomicNumber b = rat(1) + rat(3) * zeta(2);
    CHECK(cyc_norm_squared(b) == rat(4));

    // |zeta_N^j| = 1
    for (long n = 1; n <= 60; ++n)
        for (long j = 0; j < n; ++j) CHECK(cyc_norm_squared(zeta(n, j)) == rat(1));
}

TEST_CASE("ring laws on mixed-level values") {
    CyclotomicNumber x = zeta(3) + rat(2);
    CyclotomicNumber y = zeta(4) - rat(1);
    CyclotomicNumber z = zeta(6, 5);

    CHECK(x * y == y * x);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x - x).is_zero());

    // conjugation is a ring map and fixes rationals
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK(rat(7).conjugate() == rat(7));
}

TEST_CASE("reduction is idempotent and value-preserving") {
    CyclotomicNumber x = zeta(12, 7) + zeta(12, 11) * rat(3) + rat(5);
    CyclotomicNumber r1 = x.reduced();
    CyclotomicNumber r2 = r1.reduced();
    CHECK(r1.coefficients() == r2.coefficients());
    CHECK(r1 == x);

    // reduced coefficients vanish at and above phi(12) = 4
    for (size_t i = 4; i < r1.coefficients().size(); ++i) CHECK(r1.coefficients()[i] == 0);
}

TEST_CASE("levels interoperate") {
    CHECK((zeta(2) + zeta(3)).level() == 6);
    CHECK(zeta(2) * zeta(3) == zeta(6, 5));
    CHECK_THROWS_AS(zeta(6).lift(4), std::invalid_argument);
}
