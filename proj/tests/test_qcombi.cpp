#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dimerstrip/qcombi.hpp"
#include "dimerstrip/statespace.hpp"

using namespace dimerstrip;

namespace {
QSeries poly(std::initializer_list<std::pair<long long, long long>> terms) {
    QSeries s;
    for (auto [e, c] : terms) s.add_term(Rational(e), c);
    return s;
}
}  // namespace

TEST_CASE("Gaussian polynomials") {
    CHECK(q_binomial(2, 1) == poly({{0, 1}, {1, 1}}));
    CHECK(q_binomial(4, 2) == poly({{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 1}}));
    CHECK(q_binomial(3, 5).is_zero());
    for (int big = 0; big <= 10; ++big)
        for (int m = 0; m <= big; ++m)
            CHECK(q_binomial(big, m).eval_at_one() == binomial(big, m));
}

TEST_CASE("skew q-binomials") {
    SUBCASE("worked example {3; 1,2}") {
        QSeries want = poly({{0, 1}, {1, 2}, {2, 2}, {3, 2}, {4, 1}});
        CHECK(skew_q_binomial(3, 1, 2, SkewMethod::closed_form) == want);
        CHECK(skew_q_binomial(3, 1, 2, SkewMethod::diagrams) == want);
        CHECK(skew_q_binomial(3, 1, 2, SkewMethod::young) == want);
    }
    SUBCASE("{M; 0,0} = 1") {
        for (int big = 0; big <= 6; ++big)
            CHECK(skew_q_binomial(big, 0, 0) == QSeries::one());
    }
    SUBCASE("three methods agree exhaustively to M = 6") {
        for (int big = 0; big <= 6; ++big)
            for (int m = 0; m <= big; ++m)
                for (int n = m; n <= big; ++n) {
                    QSeries closed = skew_q_binomial(big, m, n, SkewMethod::closed_form);
                    CHECK(closed == skew_q_binomial(big, m, n, SkewMethod::diagrams));
                    CHECK(closed == skew_q_binomial(big, m, n, SkewMethod::young));
                }
    }
    SUBCASE("m > n is a domain error") {
        CHECK_THROWS_AS((void)skew_q_binomial(3, 2, 1), std::domain_error);
    }
}

TEST_CASE("q-Narayana numbers") {
    SUBCASE("<M; 0,0> = 1") {
        for (int big = 0; big <= 6; ++big) CHECK(q_narayana(big, 0, 0) == QSeries::one());
    }
    SUBCASE("<3; 1,2> carries the q^4 prefactor") {
        QSeries want = poly({{4, 1}, {5, 2}, {6, 2}, {7, 2}, {8, 1}});
        CHECK(q_narayana(3, 1, 2) == want);
    }
    SUBCASE("equals the admissible-diagram energy sum up to M = 6") {
        for (int big = 0; big <= 6; ++big)
            for (int m = 0; m <= big; ++m)
                for (int n = m; n <= big; ++n) {
                    QSeries direct;
                    for (const auto& d : admissible_diagrams(big, m, n))
                        direct.add_term(Rational(d.energy()), 1);
                    CHECK(q_narayana(big, m, n) == direct);
                }
    }
}

TEST_CASE("admissibility follows the sorted-descending dominance rule") {
    DoubleColumnDiagram good{4, {1, 3}, {2, 4}};
    CHECK(good.admissible());
    DoubleColumnDiagram bad{4, {4}, {1}};  // left above right: negative slope
    CHECK_FALSE(bad.admissible());
    DoubleColumnDiagram unbalanced{3, {1, 2}, {3}};
    CHECK_FALSE(unbalanced.admissible());
    CHECK(good.energy() == 10);
    CHECK(good.content() == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("q-Catalan polynomials") {
    SUBCASE("both closed forms equal their sums (built-in assertion) to M = 8") {
        for (int big = 1; big <= 8; ++big)
            for (int r = 1; r <= big + 1; ++r) {
                CHECK_NOTHROW((void)q_catalan(big, r, CatalanKind::odd));
                CHECK_NOTHROW((void)q_catalan(big, r, CatalanKind::even));
            }
    }
    SUBCASE("C_{2,1} is the diagonal Narayana sum") {
        QSeries want;
        for (int m = 0; m <= 2; ++m) want = want + q_narayana(2, m, m);
        CHECK(q_catalan(2, 1, CatalanKind::odd) == want);
    }
    SUBCASE("odd kind at q = 1 counts what the diagonal says") {
        for (int big = 1; big <= 6; ++big) {
            long long sum = 0;
            for (int m = 0; m <= big; ++m)
                sum += skew_q_binomial(big, m, m).eval_at_one();
            CHECK(q_catalan(big, 1, CatalanKind::odd).eval_at_one() == sum);
        }
    }
    SUBCASE("even kind r = 1 has integer exponents and unit prefactor") {
        QSeries even = q_catalan(3, 1, CatalanKind::even);
        CHECK(even.min_exponent() == Rational(0));
        for (const auto& [e, c] : even.terms()) CHECK(e.is_integer());
    }
    SUBCASE("finitized irreducibles are positive and exponent-nonnegative") {
        for (int big = 1; big <= 6; ++big)
            for (int r = 1; r <= big + 1; ++r)
                for (auto kind : {CatalanKind::odd, CatalanKind::even}) {
                    QSeries ch = irreducible_character_finitized(big, r, kind);
                    CHECK(ch.eval_at_one() > 0);
                    CHECK(ch.shifted(-Rational(1, 12)).min_exponent() >= Rational(-1, 8));
                }
    }
}

TEST_CASE("selection matrices reproduce the printed examples") {
    using Mat = std::vector<std::vector<int>>;
    CHECK(selection_matrix(8, 1) == Mat{{2, 2, 2, 2}, {0, 2, 2, 2}, {0, 0, 2, 2}, {0, 0, 0, 2}});
    CHECK(selection_matrix(8, 3) == Mat{{1, 2, 2, 2}, {0, 1, 2, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    CHECK(selection_matrix(8, 5) == Mat{{0, 1, 2, 2}, {0, 0, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(selection_matrix(8, 7) == Mat{{0, 0, 1, 2}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(selection_matrix(8, 9) == Mat{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(selection_matrix(7, 2) == Mat{{1, 1, 1, 1}, {0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}});
    CHECK(selection_matrix(7, 4) == Mat{{0, 1, 1, 1}, {0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}});
    CHECK(selection_matrix(7, 6) == Mat{{0, 0, 1, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(selection_matrix(7, 8) == Mat{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK_THROWS_AS((void)selection_matrix(8, 2), std::domain_error);
}

TEST_CASE("closed-form characters") {
    SUBCASE("two sites, vacuum sector") {
        QSeries chi = character_closed_form(2, 1);
        CHECK(chi == QSeries::monomial(2, Rational(1, 12)));
    }
    SUBCASE("counting of states at q = 1") {
        for (int nn = 1; nn <= 10; ++nn)
            for (int s = (nn % 2 == 0) ? 1 : 2; s <= nn + 1; s += 2)
                CHECK(character_closed_form(nn, s).eval_at_one() ==
                      binomial(nn, (nn + s - 1) / 2));
    }
    SUBCASE("conformal weights") {
        CHECK(conformal_weight(1) == Rational(0));
        CHECK(conformal_weight(2) == Rational(-1, 8));
        CHECK(conformal_weight(3) == Rational(0));
        CHECK(conformal_weight(4) == Rational(3, 8));
        CHECK(conformal_weight(5) == Rational(1));
    }
}

TEST_CASE("decompositions agree with the closed form") {
    for (int nn = 1; nn <= 10; ++nn)
        for (int s = (nn % 2 == 0) ? 1 : 2; s <= nn + 1; s += 2) {
            QSeries closed = character_closed_form(nn, s);
            CHECK(narayana_decomposition(nn, s) == closed);
            CHECK(catalan_decomposition(nn, s) == closed);
        }
}

TEST_CASE("thermodynamic limit truncations") {
    SUBCASE("s = 1 coefficients double the partition numbers") {
        QSeries lim = character_limit_truncation(1, Rational(3) + Rational(1, 12));
        // 2/(q)_infty = 2(1 + q + 2q^2 + 3q^3 + ...)
        CHECK(lim.coeff(Rational(1, 12)) == 2);
        CHECK(lim.coeff(Rational(1, 12) + Rational(1)) == 2);
        CHECK(lim.coeff(Rational(1, 12) + Rational(2)) == 4);
        CHECK(lim.coeff(Rational(1, 12) + Rational(3)) == 6);
    }
    SUBCASE("s = 2 carries half-integer exponents") {
        QSeries lim = character_limit_truncation(2, Rational(2));
        bool found_half = false;
        for (const auto& [e, c] : lim.terms()) {
            Rational shifted = e - Rational(1, 12) + Rational(1, 8);
            if (!shifted.is_integer()) found_half = true;
        }
        CHECK(found_half);
    }
    SUBCASE("finitized characters stabilize toward the limit") {
        for (int s : {1, 2, 3}) {
            Rational order = character_prefactor(s) + Rational(2);
            QSeries lim = character_limit_truncation(s, order);
            int start = (s % 2 == 1) ? 12 : 13;  // keep N + s odd
            QSeries big1 = character_closed_form(start, s).truncated(order);
            QSeries big2 = character_closed_form(start + 2, s).truncated(order);
            CHECK(big1 == lim);
            CHECK(big2 == lim);
        }
    }
}

TEST_CASE("refined decomposition into irreducibles, hats as metadata") {
    // chi_s for s odd decomposes with multiplicity 1 on ch_{(s-1)/2} and 2 on
    // every later diagonal; alternate copies are flagged as Jordan paired.
    for (int s : {1, 3, 5}) {
        Rational order = character_prefactor(s) + Rational(6);
        QSeries sum;
        auto refinement = character_refinement(s, 8);
        for (const auto& m : refinement)
            sum = sum +
                  irreducible_character_limit(m.r, order) * (long long)m.multiplicity;
        CHECK(sum.truncated(order) == character_limit_truncation(s, order));
        // flags alternate starting from the first doubled term
        bool expect = true;
        for (const auto& m : refinement) {
            if (m.multiplicity != 2) {
                CHECK(m.r == (s - 1) / 2);
                CHECK_FALSE(m.jordan_paired);
                continue;
            }
            CHECK(m.jordan_paired == expect);
            expect = !expect;
        }
    }
    // coefficients coincide with the first selection-matrix row, which is
    // what the finitized decomposition uses
    for (int s : {1, 3, 5, 7}) {
        auto a = selection_matrix(10, s);
        auto refinement = character_refinement(s, 5);
        std::vector<int> from_matrix(6, 0), from_refinement(6, 0);
        for (int r = 1; r <= 5; ++r) from_matrix[r] = a[0][r - 1];
        for (const auto& m : refinement) from_refinement[m.r] = m.multiplicity;
        CHECK(from_matrix == from_refinement);
    }
}
