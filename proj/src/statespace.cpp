#include "dimerstrip/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dimerstrip {

std::string OccupationState::str() const {
    std::string s(n_sites, '0');
    for (int j = 1; j <= n_sites; ++j)
        if (bit(j)) s[j - 1] = '1';
    return s;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long Sector::dimension() const { return binomial(big_n, d); }

Sector make_sector(int big_n, int d) {
    if (big_n < 1 || big_n > kMaxSites)
        throw std::domain_error("make_sector: N out of range 1.." +
                                std::to_string(kMaxSites));
    if (d < 0 || d > big_n) throw std::domain_error("make_sector: d out of range");
    Sector sec;
    sec.big_n = big_n;
    sec.d = d;
    sec.s_z = big_n - 2 * d;
    sec.ell = std::abs(sec.s_z);
    sec.s = sec.ell + 1;
    return sec;
}

std::vector<OccupationState> enumerate_sector(int big_n, int d) {
    make_sector(big_n, d);  // validates the ranges
    std::vector<OccupationState> basis;
    basis.reserve(binomial(big_n, d));
    // Lexicographic order on (a_1, a_2, ...) is generated by a depth-first
    // walk choosing a_1 first; equivalently, recurse on the leading bit.
    std::uint32_t mask = 0;
    auto rec = [&](auto&& self, int site, int remaining) -> void {
        if (site > big_n) {
            if (remaining == 0) basis.push_back({mask, big_n});
            return;
        }
        if (big_n - site + 1 < remaining) return;  // cannot place the rest
        self(self, site + 1, remaining);           // a_site = 0 first
        if (remaining > 0) {
            mask |= 1u << (site - 1);
            self(self, site + 1, remaining - 1);
            mask &= ~(1u << (site - 1));
        }
    };
    rec(rec, 1, d);
    return basis;
}

long long sector_rank(const OccupationState& state) {
    // Combinatorial number system for the lexicographic sequence order:
    // states with a_j = 0 at the first undecided site precede those with
    // a_j = 1, so each occupied site skips binomial(remaining-1, left) states.
    long long rank = 0;
    int left = state.particle_count();
    for (int j = 1; j <= state.n_sites && left > 0; ++j) {
        if (state.bit(j)) {
            rank += binomial(state.n_sites - j, left);
            --left;
        }
    }
    return rank;
}

ComplexOperator full_identity(int big_n) {
    ComplexOperator op;
    op.big_n = big_n;
    op.mat = CMatrix::Identity(1LL << big_n, 1LL << big_n);
    return op;
}

double off_block_leakage(const ComplexOperator& op) {
    if (op.sector) return 0.0;
    double worst = 0.0;
    const auto dim = op.mat.rows();
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (__builtin_popcount(std::uint32_t(r)) ==
                __builtin_popcount(std::uint32_t(c)))
                continue;
            worst = std::max(worst, std::abs(op.mat(r, c)));
        }
    return worst;
}

ComplexOperator project_to_sector(const ComplexOperator& op, const Sector& sec,
                                  double tol) {
    if (op.sector) throw std::invalid_argument("project_to_sector: already a sector block");
    if (op.big_n != sec.big_n)
        throw std::invalid_argument("project_to_sector: size mismatch");

    // Verify the operator is block diagonal before slicing.
    const auto dim = op.mat.rows();
    double worst = 0.0;
    Eigen::Index wr = 0, wc = 0;
    for (Eigen::Index r = 0; r < dim; ++r)
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (__builtin_popcount(std::uint32_t(r)) ==
                __builtin_popcount(std::uint32_t(c)))
                continue;
            double a = std::abs(op.mat(r, c));
            if (a > worst) { worst = a; wr = r; wc = c; }
        }
    if (worst > tol) {
        std::ostringstream os;
        os << "project_to_sector: operator not block-diagonal, entry (" << wr << ","
           << wc << ") = " << worst << " exceeds " << tol;
        throw std::runtime_error(os.str());
    }

    auto basis = enumerate_sector(sec.big_n, sec.d);
    ComplexOperator out;
    out.big_n = sec.big_n;
    out.sector = sec;
    out.mat.resize(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            out.mat(r, c) = op.mat(basis[r].mask, basis[c].mask);
    return out;
}

ComplexOperator embed_from_sector(const ComplexOperator& op) {
    if (!op.sector) throw std::invalid_argument("embed_from_sector: not a sector block");
    const Sector& sec = *op.sector;
    auto basis = enumerate_sector(sec.big_n, sec.d);
    ComplexOperator out;
    out.big_n = sec.big_n;
    out.mat = CMatrix::Zero(1LL << sec.big_n, 1LL << sec.big_n);
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            out.mat(basis[r].mask, basis[c].mask) = op.mat(r, c);
    return out;
}

}  // namespace dimerstrip
