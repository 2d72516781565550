#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dimerstrip {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

constexpr int kMaxSites = 14;          // largest strip handled in-core
constexpr int kMaxDenseFullSpace = 10; // full 2^N dense matrices allowed up to here
constexpr double kDefaultOffBlockTol = 1e-10;

// Occupation numbers a_j of one row of the strip. Bit j-1 of `mask` stores
// a_j, so site 1 is the least-significant bit. The canonical ordering of a
// sector basis is lexicographic on the sequence (a_1, a_2, ..., a_N).
struct OccupationState {
    std::uint32_t mask = 0;
    int n_sites = 0;

    int bit(int site) const { return (mask >> (site - 1)) & 1u; }
    int particle_count() const { return __builtin_popcount(mask); }
    std::string str() const;

    bool operator==(const OccupationState& o) const {
        return mask == o.mask && n_sites == o.n_sites;
    }
};

// Conserved-charge block of the strip: particle number d, magnetization
// S_z = N - 2d, defect number l = |S_z| and sector label s = l + 1.
struct Sector {
    int big_n = 0;  // number of sites N+w
    int d = 0;      // particle count
    int s_z = 0;
    int ell = 0;
    int s = 0;

    long long dimension() const;
};

Sector make_sector(int big_n, int d);

// All occupation states of big_n sites with exactly d particles, in
// lexicographic order on (a_1, ..., a_N). This ordering is the canonical
// sector basis everywhere in the project.
std::vector<OccupationState> enumerate_sector(int big_n, int d);

// Position of `state` in enumerate_sector(state.n_sites, d), computed by the
// combinatorial number system rather than a search.
long long sector_rank(const OccupationState& state);

// Dense complex matrix tagged with the basis it is expressed in: either the
// full 2^N product basis (site 1 = least-significant bit) or one sector block
// in the canonical sector basis.
struct ComplexOperator {
    CMatrix mat;
    int big_n = 0;
    std::optional<Sector> sector;  // empty = full space

    Eigen::Index dim() const { return mat.rows(); }
};

ComplexOperator full_identity(int big_n);

// Largest absolute entry of op connecting different particle-number sectors.
double off_block_leakage(const ComplexOperator& op);

// Extract the d-block of a full-space operator in the canonical sector basis.
// Throws std::runtime_error naming the worst entry if the operator leaks
// between sectors by more than tol.
ComplexOperator project_to_sector(const ComplexOperator& op, const Sector& sec,
                                  double tol = kDefaultOffBlockTol);

// Embed a sector block back into the full space (zero outside the block).
ComplexOperator embed_from_sector(const ComplexOperator& op);

long long binomial(int n, int k);

}  // namespace dimerstrip
