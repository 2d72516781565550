#pragma once

#include <cstdint>
#include <vector>

#include "dimerstrip/statespace.hpp"

namespace dimerstrip {

// Minimal sign-magnitude big integer, just enough for fraction-free Gaussian
// elimination over Z[i]. Bareiss pivots grow like Hadamard bounds, far past
// 64 bits for the sector sizes the Jordan census needs.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    // Exact quotient; aborts if the division leaves a remainder.
    BigInt divide_exact(const BigInt& o) const;

    bool operator==(const BigInt& o) const {
        return sign_ == o.sign_ && limbs_ == o.limbs_;
    }

    std::string str() const;

private:
    static int compare_magnitude(const std::vector<std::uint32_t>& a,
                                 const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_magnitude(const std::vector<std::uint32_t>& a,
                                                    const std::vector<std::uint32_t>& b);
    void trim();

    int sign_ = 0;  // -1, 0, +1
    std::vector<std::uint32_t> limbs_;  // little-endian base 2^32
};

// Gaussian integer a + b i with big components.
struct GaussianInt {
    BigInt re, im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    // Exact quotient in Z[i].
    GaussianInt divide_exact(const GaussianInt& o) const;
};

using GaussianMatrix = std::vector<std::vector<GaussianInt>>;

// Convert a complex matrix with (near-)Gaussian-integer entries; throws if
// any entry is farther than tol from Z[i].
GaussianMatrix to_gaussian(const CMatrix& m, double tol = 1e-9);

// Exact rank over Q(i) by fraction-free Bareiss elimination.
int gaussian_rank(GaussianMatrix m);

GaussianMatrix gaussian_multiply(const GaussianMatrix& a, const GaussianMatrix& b);

}  // namespace dimerstrip
