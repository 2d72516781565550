#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimerstrip/qseries.hpp"

using namespace dimerstrip;

TEST_CASE("rational arithmetic and normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 12) - Rational(1, 8) == Rational(-1, 24));
    CHECK(Rational(3, 4) * Rational(2, 3) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational(7).is_integer());
    CHECK(Rational(1, 3).str() == "1/3");
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("ring laws on random-ish series") {
    QSeries a = QSeries::monomial(2, Rational(1, 2)) + QSeries::monomial(-1, Rational(3));
    QSeries b = QSeries::one() + QSeries::monomial(5, Rational(1, 8));
    QSeries c = QSeries::monomial(3, Rational(-1, 12));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * QSeries::one() == a);
    CHECK((a - a).is_zero());
}

TEST_CASE("no zero coefficients are stored") {
    QSeries a = QSeries::monomial(1, Rational(2)) - QSeries::monomial(1, Rational(2));
    CHECK(a.is_zero());
    CHECK(a.terms().empty());
}

TEST_CASE("exponent denominators must divide 24") {
    QSeries a;
    CHECK_NOTHROW(a.add_term(Rational(5, 24), 1));
    CHECK_NOTHROW(a.add_term(Rational(1, 8), 1));
    CHECK_THROWS(a.add_term(Rational(1, 5), 1));
    CHECK_THROWS(a.add_term(Rational(1, 48), 1));
}

TEST_CASE("exact division") {
    QSeries num = QSeries::one() - QSeries::monomial(1, Rational(4));
    QSeries den = QSeries::one() - QSeries::monomial(1, Rational(1));
    QSeries q = num.divide_exact(den);
    QSeries expect;
    for (int k = 0; k < 4; ++k) expect.add_term(Rational(k), 1);
    CHECK(q == expect);
    // non-exact division must throw, never truncate
    QSeries bad = QSeries::one() + QSeries::monomial(1, Rational(3));
    CHECK_THROWS_AS((void)bad.divide_exact(den), std::domain_error);
}

TEST_CASE("serialization is exponent-ascending with rational powers") {
    QSeries a = QSeries::monomial(2, Rational(1, 12)) + QSeries::monomial(-3, Rational(5, 2));
    CHECK(a.str() == "2*q^(1/12)+-3*q^(5/2)");
    CHECK(QSeries().str() == "0");
}

TEST_CASE("evaluation") {
    QSeries a = QSeries::monomial(2, Rational(0)) + QSeries::monomial(3, Rational(2));
    CHECK(a.eval_at_one() == 5);
    CHECK(a.eval(0.5) == doctest::Approx(2 + 3 * 0.25));
}
