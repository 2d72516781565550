#pragma once

#include <functional>
#include <vector>

#include "dimerstrip/gaussian_rank.hpp"
#include "dimerstrip/qcombi.hpp"
#include "dimerstrip/qseries.hpp"
#include "dimerstrip/transfer.hpp"

namespace dimerstrip {

// 1-string content per quantized ordinate: content[j-1] in {0,1,2} counts the
// 1-strings at ordinate j, j = 1..M with M = floor((N+w-1)/2). Conformal
// energies E_j = j when N+w is even and j - 1/2 when odd.
struct StringPattern {
    std::vector<int> content;
    bool half_integer = false;  // E_j = j - 1/2

    Rational string_energy(int j) const {
        return half_integer ? Rational(2 * j - 1, 2) : Rational(j);
    }
    Rational energy() const;  // sum_j content_j E_j
};

// Candidate normalized transfer eigenvalue attached to a pattern:
//   d(u) = prod_j (1 + k_j sin 2u)^{2-n_j} (1 - k_j sin 2u)^{n_j},
// k_j = sin(E_j pi / N). Validated against the inversion identity before use.
struct CandidateEigenvalue {
    StringPattern pattern;
    std::vector<double> kappa;

    double evaluate(double u) const;
    // H eigenvalue implied by -(1/2) d/du log d(u) at u = 0.
    double hamiltonian_energy() const;
};

// H_w as a matrix: -sum e_j for w = 0, with the extra boundary term
// e_N / (s_0(xi) s_2(xi)) for w = 1.
ComplexOperator hamiltonian(const StripModel& model);
ComplexOperator hamiltonian_sector(const StripModel& model, const Sector& sec);
// Exact Gaussian-integer build; requires x = i and, for w = 1, xi = lambda/2
// so the boundary coupling is the integer -2.
GaussianMatrix hamiltonian_sector_exact(const StripModel& model, const Sector& sec);

// All 3^M candidates. Construction first validates oracle O1,
//   prod_j (1 - k_j^2 sin^2 2u) = (cos^{2N}u - sin^{2N}u)/cos 2u   (w=0)
//                               =  cos^{2N}u + sin^{2N}u           (w=1, xi=l/2)
// at `samples` random points; failure aborts with a diagnostic.
std::vector<CandidateEigenvalue> candidate_eigenvalues(const StripModel& model,
                                                       int samples = 200,
                                                       unsigned seed = 1);

struct SelectionTable {
    Sector sector;
    double u0 = 0;                            // matching point actually used
    std::vector<CandidateEigenvalue> candidates;
    std::vector<long long> multiplicity;      // per candidate
    long long total() const;
};

// Eigenvalues grouped within `tol` of their neighbours, returned as
// (centroid, count). Eigenvalues of matrices with Jordan blocks scatter by
// the square root of machine precision, symmetrically around the true
// value, so centroids recover the accuracy the raw output cannot.
std::vector<std::pair<Complex, long long>> cluster_eigenvalues(
    std::vector<Complex> values, double tol);

// Numerically diagonalize d(u0) on the sector, cluster, and greedily match
// every cluster centroid to a candidate. u0 is re-drawn on the deterministic
// sequence pi/5 + k/100 until candidates are pairwise separated by > 1e-6.
// An unmatched eigenvalue throws with the offending value.
SelectionTable match_spectrum(const StripModel& model, const Sector& sec,
                              double u0 = M_PI / 5);

// Spectrum generating function q^{1/12 + Delta_s} sum mu(pattern) q^E from
// the matched sector with |S_z| = s - 1.
QSeries character_from_spectrum(const StripModel& model, int s);

// Multiplicity the selection matrices predict for one pattern: the sum of
// A^{(s)} (or B^{(s)}) entries over all admissible double-column diagrams
// with that 1-string content.
long long predicted_multiplicity(const StringPattern& pattern, int big_n, int s);

struct JordanCluster {
    Complex value;                 // cluster centroid
    long long algebraic_mult = 0;
    long long blocks_ge2 = 0;      // number of Jordan blocks of size >= 2
    long long blocks_ge3 = 0;      // must be 0 for these models
};

struct JordanReport {
    std::vector<JordanCluster> clusters;
    bool cluster_warning = false;  // two clusters closer than 10 * tol

    long long total_blocks_ge2() const;
    long long total_blocks_ge3() const;
};

struct JordanOptions {
    double cluster_tol_scale = 1e-7;   // times the spectral radius
    double rank_tol_scale = 1e-8;      // times sigma_max * dim
};

// Block census by rank counts of (A - lambda)^k, k <= 3; no generalized
// eigenvector chains are ever computed.
JordanReport jordan_structure(const ComplexOperator& op, JordanOptions opt = {});

// Exact cross-check at eigenvalue zero for Gaussian-integer matrices:
// returns (blocks of size >= 2, blocks of size >= 3) from exact ranks of
// H, H^2, H^3 over Q(i).
std::pair<long long, long long> jordan_zero_blocks_exact(const GaussianMatrix& h);

}  // namespace dimerstrip
