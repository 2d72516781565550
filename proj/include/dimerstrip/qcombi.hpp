#pragma once

#include <vector>

#include "dimerstrip/qseries.hpp"

namespace dimerstrip {

// Double-column diagram of height M: occupied heights L in the left column
// and R in the right column. Admissible when |L| <= |R| and the top-down
// pairing of occupied sites never produces a segment of strictly negative
// slope, i.e. L_j <= R_j once both columns are sorted descending.
struct DoubleColumnDiagram {
    int big_m = 0;
    std::vector<int> left;   // occupied heights, subset of 1..M
    std::vector<int> right;

    bool admissible() const;
    long long energy() const;  // sum of occupied heights in both columns
    // 1-string content per height: n_j = [j in L] + [j in R]
    std::vector<int> content() const;
};

// All admissible diagrams of height M with |L| = m, |R| = n.
std::vector<DoubleColumnDiagram> admissible_diagrams(int big_m, int m, int n);

enum class SkewMethod { closed_form, diagrams, young };
enum class CatalanKind { odd, even };

// Gaussian polynomial [M m]_q.
QSeries q_binomial(int big_m, int m);

// Skew q-binomial {M; m,n}_q = [M m][M n] - q^{n-m+1} [M m-1][M n+1],
// also computable by double-column diagram enumeration or as an energy
// weighted sum over nested pairs of Young diagrams. All three agree.
QSeries skew_q_binomial(int big_m, int m, int n,
                        SkewMethod method = SkewMethod::closed_form);

// Generalized q-Narayana number <M; m,n>_q = q^{m(m+1)/2 + n(n+1)/2} {M; m,n}_q
// = sum over admissible diagrams of q^{E(S)}.
QSeries q_narayana(int big_m, int m, int n);

// q-Catalan polynomials:
//   odd  C_{M,r}(q)  = sum_m <M; m,m+r-1>
//                    = q^{r(r-1)/2} (1-q^r)/(1-q^{M+1}) [2M+2, M+1-r]_q
//   even C'_{M,r}(q) = q^{-(r-1)/2} sum_m q^{-m} <M; m,m+r-1>
//                    = q^{(r-1)^2/2} (1-q^{2r})/(1-q^{M+r+1}) [2M+1, M+1-r]_q
// Both routes are computed and asserted equal; the closed forms divide
// exactly or the call throws.
QSeries q_catalan(int big_m, int r, CatalanKind kind);

// Finitized irreducible characters ch_{r,1} = q^{1/12} C_{M,r} and
// ch_{r,2} = q^{1/12 - 1/8} C'_{M,r}.
QSeries irreducible_character_finitized(int big_m, int r, CatalanKind kind);

// Toeplitz selection matrix of size floor((N+1)/2): entries above the
// diagonal only. For s = 2k+1: 2 where n-m > k-1, 1 where n-m = k-1;
// for s = 2k: 1 where n-m >= k-1. Reproduces the printed examples.
std::vector<std::vector<int>> selection_matrix(int big_n, int s);

Rational conformal_weight(int s);   // Delta_s = ((2-s)^2 - 1)/8
Rational character_prefactor(int s);  // -c/24 + Delta_s with c = -2

// chi_s^{(N)} = q^{1/12+Delta_s} (1+q^{(s-1)/2})/(1+q^{N/2}) [N, (N+s-1)/2]_q
QSeries character_closed_form(int big_n, int s);

// chi via Eq-style Narayana decomposition: selection matrix against
// q-Narayana numbers (with the q^{-(m+n)/2} scaling for s even).
QSeries narayana_decomposition(int big_n, int s);

// chi as a sum of finitized irreducible characters along matrix diagonals.
QSeries catalan_decomposition(int big_n, int s);

// Truncation of the thermodynamic limit
// chi_s = q^{1/12+Delta_s} (1+q^{(s-1)/2}) / (q)_infty up to q^order.
QSeries character_limit_truncation(int s, const Rational& order);

// Thermodynamic-limit irreducible character q^{1/12 + r(r-1)/2} (1-q^r)/(q)_infty
// truncated at q^order.
QSeries irreducible_character_limit(int r, const Rational& order);

// Multiplicity of the irreducible ch_{r,1} inside chi_s for s odd, with the
// Jordan-pairing flag: a flagged multiplicity 2 marks the two copies whose
// matching vectors combine into rank-2 blocks. Coefficient data only.
struct RefinedMultiplicity {
    int r = 1;
    int multiplicity = 0;
    bool jordan_paired = false;
};
std::vector<RefinedMultiplicity> character_refinement(int s, int r_max);

}  // namespace dimerstrip
