#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dimerstrip/gaussian_rank.hpp"

using namespace dimerstrip;

TEST_CASE("big integer arithmetic against 64-bit references") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long long> dist(-1000000, 1000000);
    for (int t = 0; t < 500; ++t) {
        long long a = dist(rng), b = dist(rng);
        CHECK((BigInt(a) + BigInt(b)).str() == std::to_string(a + b));
        CHECK((BigInt(a) - BigInt(b)).str() == std::to_string(a - b));
        CHECK((BigInt(a) * BigInt(b)).str() == std::to_string(a * b));
        if (b != 0) CHECK((BigInt(a * b).divide_exact(BigInt(b))).str() == std::to_string(a));
    }
    CHECK(BigInt(0).str() == "0");
    CHECK_THROWS_AS((void)BigInt(7).divide_exact(BigInt(2)), std::domain_error);
}

TEST_CASE("multi-limb products divide back exactly") {
    BigInt a(123456789012345678LL), b(987654321098765431LL);
    BigInt p = a * b;
    CHECK(p.divide_exact(a).str() == b.str());
    CHECK(p.divide_exact(b).str() == a.str());
    BigInt big = p * p * p;  // ~170 bits
    CHECK(big.divide_exact(p * p).str() == p.str());
}

TEST_CASE("Gaussian integer division") {
    GaussianInt a{BigInt(3), BigInt(4)};
    GaussianInt b{BigInt(1), BigInt(2)};
    GaussianInt p = a * b;  // (3+4i)(1+2i) = -5 + 10i
    CHECK(p.re.str() == "-5");
    CHECK(p.im.str() == "10");
    GaussianInt q = p.divide_exact(b);
    CHECK(q.re.str() == "3");
    CHECK(q.im.str() == "4");
}

TEST_CASE("exact rank agrees with known cases") {
    auto from_ll = [](std::vector<std::vector<std::pair<long long, long long>>> rows) {
        GaussianMatrix m;
        for (auto& r : rows) {
            m.emplace_back();
            for (auto [re, im] : r) m.back().push_back({BigInt(re), BigInt(im)});
        }
        return m;
    };
    CHECK(gaussian_rank(from_ll({{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}})) == 2);
    CHECK(gaussian_rank(from_ll({{{1, 0}, {2, 0}}, {{2, 0}, {4, 0}}})) == 1);
    CHECK(gaussian_rank(from_ll({{{0, 1}, {0, 2}}, {{0, 2}, {0, 4}}})) == 1);
    CHECK(gaussian_rank(from_ll({{{0, 0}}})) == 0);
    // i-dependent rank: rows (1, i) and (i, -1) are parallel over Q(i)
    CHECK(gaussian_rank(from_ll({{{1, 0}, {0, 1}}, {{0, 1}, {-1, 0}}})) == 1);
    CHECK(gaussian_rank(from_ll({{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}})) == 2);
}

TEST_CASE("exact rank agrees with floating SVD on random integer matrices") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> size(2, 8);
    for (int t = 0; t < 20; ++t) {
        int n = size(rng), r = size(rng) % n + 1;
        // build rank-r product A = B C with B (n x r), C (r x n)
        CMatrix bm(n, r), cm(r, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < r; ++j) bm(i, j) = Complex(entry(rng), entry(rng));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) cm(i, j) = Complex(entry(rng), entry(rng));
        CMatrix a = bm * cm;
        Eigen::JacobiSVD<CMatrix> svd(a);
        long long svd_rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 1e-9 * svd.singularValues()(0) * n) ++svd_rank;
        if (svd.singularValues()(0) < 1e-12) svd_rank = 0;
        CHECK(gaussian_rank(to_gaussian(a)) == svd_rank);
    }
}

TEST_CASE("non-integer entries are rejected") {
    CMatrix m(1, 1);
    m(0, 0) = Complex(0.5, 0);
    CHECK_THROWS_AS((void)to_gaussian(m), std::domain_error);
}
