#include "dimerstrip/gaussian_rank.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace dimerstrip {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    unsigned long long mag = v > 0 ? (unsigned long long)v : -(unsigned long long)v;
    while (mag) {
        limbs_.push_back(std::uint32_t(mag & 0xffffffffu));
        mag >>= 32;
    }
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

int BigInt::compare_magnitude(const std::vector<std::uint32_t>& a,
                              const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

std::vector<std::uint32_t> BigInt::add_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(std::uint32_t(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

std::vector<std::uint32_t> BigInt::sub_magnitude(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b) {
    // requires |a| >= |b|
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::int64_t d = std::int64_t(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = std::uint32_t(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigInt r;
    if (sign_ == o.sign_) {
        r.sign_ = sign_;
        r.limbs_ = add_magnitude(limbs_, o.limbs_);
    } else {
        int c = compare_magnitude(limbs_, o.limbs_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.sign_ = sign_;
            r.limbs_ = sub_magnitude(limbs_, o.limbs_);
        } else {
            r.sign_ = o.sign_;
            r.limbs_ = sub_magnitude(o.limbs_, limbs_);
        }
    }
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigInt();
    BigInt r;
    r.sign_ = sign_ * o.sign_;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < o.limbs_.size() || carry; ++j) {
            std::uint64_t cur = r.limbs_[i + j] + carry;
            if (j < o.limbs_.size())
                cur += std::uint64_t(limbs_[i]) * o.limbs_[j];
            r.limbs_[i + j] = std::uint32_t(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::divide_exact(const BigInt& o) const {
    if (o.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (sign_ == 0) return BigInt();
    // Schoolbook long division on magnitudes, most significant limb first.
    std::vector<std::uint32_t> quot(limbs_.size(), 0);
    std::vector<std::uint32_t> rem;
    auto mul_small = [&](const std::vector<std::uint32_t>& a, std::uint64_t f) {
        std::vector<std::uint32_t> out;
        out.reserve(a.size() + 2);
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < a.size() || carry; ++i) {
            std::uint64_t cur = carry;
            if (i < a.size()) cur += a[i] * f;
            out.push_back(std::uint32_t(cur & 0xffffffffu));
            carry = cur >> 32;
        }
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        rem.insert(rem.begin(), limbs_[i]);
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
        std::uint64_t lo = 0, hi = 0xffffffffu, q = 0;
        while (lo <= hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            auto prod = mul_small(o.limbs_, mid);
            bool fits = prod.empty() || compare_magnitude(prod, rem) <= 0;
            if (fits) {
                q = mid;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        quot[i] = std::uint32_t(q);
        if (q) rem = sub_magnitude(rem, mul_small(o.limbs_, q));
    }
    if (!rem.empty()) throw std::domain_error("BigInt: non-exact division");
    BigInt r;
    r.limbs_ = quot;
    r.sign_ = sign_ * o.sign_;
    r.trim();
    return r;
}

std::string BigInt::str() const {
    if (sign_ == 0) return "0";
    // repeated division by 10^9 for printing
    std::vector<std::uint32_t> mag = limbs_;
    std::string out;
    while (!mag.empty()) {
        std::uint64_t rem = 0;
        for (std::size_t i = mag.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | mag[i];
            mag[i] = std::uint32_t(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!mag.empty() && mag.back() == 0) mag.pop_back();
        for (int k = 0; k < 9; ++k) {
            out.push_back(char('0' + rem % 10));
            rem /= 10;
        }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    if (sign_ < 0) out.push_back('-');
    return std::string(out.rbegin(), out.rend());
}

GaussianInt GaussianInt::divide_exact(const GaussianInt& o) const {
    // a / b = a conj(b) / |b|^2, each component dividing exactly
    BigInt norm = o.re * o.re + o.im * o.im;
    GaussianInt conj{o.re, -o.im};
    GaussianInt num = *this * conj;
    return {num.re.divide_exact(norm), num.im.divide_exact(norm)};
}

GaussianMatrix to_gaussian(const CMatrix& m, double tol) {
    GaussianMatrix g(m.rows(), std::vector<GaussianInt>(m.cols()));
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            double re = m(r, c).real(), im = m(r, c).imag();
            long long ri = std::llround(re), ii = std::llround(im);
            if (std::abs(re - double(ri)) > tol || std::abs(im - double(ii)) > tol)
                throw std::domain_error("to_gaussian: entry not a Gaussian integer");
            g[r][c] = {BigInt(ri), BigInt(ii)};
        }
    return g;
}

int gaussian_rank(GaussianMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    GaussianInt prev_pivot{BigInt(1), BigInt(0)};
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && m[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        // Bareiss update: a_ij <- (pivot a_ij - a_i,col a_rank,j) / prev_pivot
        const GaussianInt pivot = m[rank][col];
        for (std::size_t i = rank + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                GaussianInt num = pivot * m[i][j] - m[i][col] * m[rank][j];
                m[i][j] = num.divide_exact(prev_pivot);
            }
            m[i][col] = {BigInt(0), BigInt(0)};
        }
        prev_pivot = pivot;
        ++rank;
    }
    return int(rank);
}

GaussianMatrix gaussian_multiply(const GaussianMatrix& a, const GaussianMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), mcols = b.empty() ? 0 : b[0].size();
    GaussianMatrix r(n, std::vector<GaussianInt>(mcols, {BigInt(0), BigInt(0)}));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < mcols; ++j) {
                if (b[t][j].is_zero()) continue;
                r[i][j] = r[i][j] + a[i][t] * b[t][j];
            }
        }
    return r;
}

}  // namespace dimerstrip
