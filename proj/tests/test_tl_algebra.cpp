#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dimerstrip/tl_algebra.hpp"

using namespace dimerstrip;

namespace {
double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }
Complex phase(double t) { return std::polar(1.0, t); }
}  // namespace

TEST_CASE("single-site number operator") {
    auto n = fermion_op(1, 1, FermionKind::number);
    CHECK(n.mat(0, 0) == Complex(0, 0));
    CHECK(n.mat(1, 1) == Complex(1, 0));
    CHECK_THROWS_AS(fermion_op(3, 4, FermionKind::number), std::domain_error);
}

TEST_CASE("mixed commutation relations of the hard-core operators") {
    for (int nn : {2, 4, 6}) {
        const long long dim = 1LL << nn;
        CMatrix id = CMatrix::Identity(dim, dim);
        for (int j = 1; j <= nn; ++j) {
            CMatrix f = fermion_op(nn, j, FermionKind::annihilate).mat;
            CMatrix fd = fermion_op(nn, j, FermionKind::create).mat;
            CHECK(max_abs(f * f) == 0.0);
            CHECK(max_abs(fd * fd) == 0.0);
            CHECK(max_abs(f * fd + fd * f - id) == 0.0);
            for (int k = 1; k <= nn; ++k) {
                if (k == j) continue;
                CMatrix g = fermion_op(nn, k, FermionKind::annihilate).mat;
                CMatrix gd = fermion_op(nn, k, FermionKind::create).mat;
                CHECK(max_abs(fd * g - g * fd) == 0.0);
                CHECK(max_abs(fd * gd - gd * fd) == 0.0);
                CHECK(max_abs(f * g - g * f) == 0.0);
            }
        }
    }
}

TEST_CASE("projector algebra") {
    const int nn = 4;
    const long long dim = 1LL << nn;
    CMatrix id = CMatrix::Identity(dim, dim);
    for (int j = 1; j <= nn; ++j) {
        CMatrix n1 = fermion_op(nn, j, FermionKind::number).mat;
        CMatrix n0 = fermion_op(nn, j, FermionKind::covacancy).mat;
        CHECK(max_abs(n1 * n1 - n1) == 0.0);
        CHECK(max_abs(n0 * n0 - n0) == 0.0);
        CHECK(max_abs(n0 * n1) == 0.0);
        CHECK(max_abs(n0 + n1 - id) == 0.0);
    }
}

TEST_CASE("Temperley-Lieb relations at the dimer point") {
    const Complex x(0, 1);
    for (int nn = 2; nn <= 8; ++nn) {
        std::vector<CMatrix> e;
        for (int j = 1; j <= nn - 1; ++j) e.push_back(tl_generator(nn, j, x).mat);
        for (int j = 0; j < nn - 1; ++j) {
            CHECK(max_abs(e[j] * e[j]) < 1e-13);  // beta = 0
            if (j + 1 < nn - 1)
                CHECK(max_abs(e[j] * e[j + 1] * e[j] - e[j]) < 1e-13);
            if (j >= 1) CHECK(max_abs(e[j] * e[j - 1] * e[j] - e[j]) < 1e-13);
            for (int k = j + 2; k < nn - 1; ++k)
                CHECK(max_abs(e[j] * e[k] - e[k] * e[j]) < 1e-13);
        }
    }
}

TEST_CASE("face weight tables") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.1, 1.4);
    SUBCASE("six nonzero entries with the stated multiset") {
        for (auto orient : {FaceOrientation::blue, FaceOrientation::pink}) {
            double u = 0.37;
            auto tbl = make_face_weights(M_PI / 2, u, phase(0.9), orient);
            std::vector<Complex> values;
            for (int l = 0; l < 2; ++l)
                for (int b = 0; b < 2; ++b)
                    for (int r = 0; r < 2; ++r)
                        for (int t = 0; t < 2; ++t) {
                            Complex w = tbl.weight(l, b, r, t);
                            if (w != Complex(0, 0)) values.push_back(w);
                        }
            REQUIRE(values.size() == 6);
            auto count = [&](Complex v) {
                int c = 0;
                for (Complex w : values)
                    if (std::abs(w - v) < 1e-14) ++c;
                return c;
            };
            CHECK(count(std::cos(u)) == 2);
            CHECK(count(std::sin(u)) == 2);
            CHECK(count(phase(0.9)) == 1);
            CHECK(count(1.0 / phase(0.9)) == 1);
        }
    }
    SUBCASE("free-fermion condition at lambda = pi/2 for random u, g") {
        for (int t = 0; t < 100; ++t) {
            double u = dist(rng);
            Complex g = phase(dist(rng));
            double rho = dist(rng);
            auto tbl = make_face_weights(M_PI / 2, u, g, FaceOrientation::blue, rho);
            Complex a = tbl.weight(0, 0, 0, 0), b = tbl.weight(0, 1, 0, 1);
            Complex c1 = tbl.weight(1, 0, 0, 1), c2 = tbl.weight(0, 1, 1, 0);
            CHECK(std::abs(a * a + b * b - c1 * c2) < 1e-13);
        }
    }
    SUBCASE("pink values agree with blue on the equated configurations") {
        double u = 0.83;
        auto blue = make_face_weights(M_PI / 3, u, phase(0.4), FaceOrientation::blue);
        auto pink = make_face_weights(M_PI / 3, u, phase(0.4), FaceOrientation::pink);
        CHECK(blue.weight(0, 0, 0, 0) == pink.weight(0, 0, 0, 0));
        CHECK(blue.weight(1, 1, 1, 1) == pink.weight(1, 1, 1, 1));
        CHECK(blue.weight(0, 1, 0, 1) == pink.weight(0, 1, 0, 1));
        CHECK(blue.weight(1, 0, 1, 0) == pink.weight(1, 0, 1, 0));
        CHECK(blue.weight(1, 0, 0, 1) == pink.weight(1, 1, 0, 0));  // g
        CHECK(blue.weight(0, 1, 1, 0) == pink.weight(0, 0, 1, 1));  // 1/g
    }
}

TEST_CASE("face operators") {
    SUBCASE("X(0) is the identity and X(lambda) the generator") {
        // At the dimer point beta = 0 and the bilinear generator equals the
        // planar (projector-form) one, so X(lambda) = e_j holds verbatim.
        auto x0 = face_operator(4, 2, 0.0, phase(0.0), FaceVariant::X, M_PI / 2);
        CHECK(max_abs(x0.mat - CMatrix::Identity(16, 16)) < 1e-15);
        auto xl = face_operator(4, 2, M_PI / 2, phase(M_PI / 2), FaceVariant::X, M_PI / 2);
        auto e = tl_generator(4, 2, Complex(0, 1));
        CHECK(max_abs(xl.mat - e.mat) < 1e-14);
    }
    SUBCASE("general lambda uses the projector-form generator") {
        const double lambda = M_PI / 3;
        const Complex x = phase(lambda);
        auto x0 = face_operator(4, 2, 0.0, phase(0.0), FaceVariant::X, lambda);
        CHECK(max_abs(x0.mat - CMatrix::Identity(16, 16)) < 1e-15);
        // e_j as x n^{10} + x^{-1} n^{01} + hops; differs from the bilinear
        // form by beta on the doubly occupied diagonal.
        Eigen::Matrix4cd eproj = Eigen::Matrix4cd::Zero();
        eproj(1, 1) = 1.0 / x;
        eproj(2, 2) = x;
        eproj(1, 2) = eproj(2, 1) = 1.0;
        auto xl = face_operator(4, 2, lambda, phase(lambda), FaceVariant::X, lambda);
        CHECK(max_abs(xl.mat - embed_two_site(4, 2, eproj).mat) < 1e-14);
        auto e = tl_generator(4, 2, x);
        Eigen::Matrix4cd beta_term = Eigen::Matrix4cd::Zero();
        beta_term(3, 3) = x + 1.0 / x;
        CHECK(max_abs(e.mat - embed_two_site(4, 2, eproj).mat -
                      embed_two_site(4, 2, beta_term).mat) < 1e-14);
    }
    SUBCASE("fixed-gauge decomposition at the dimer point") {
        // With beta = 0 the projector and bilinear forms of e_j coincide, so
        // X_j(u, e^{iu}) = s_1(-u) I + s_0(u) e_j holds verbatim.
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> dist(0.0, M_PI);
        for (int t = 0; t < 25; ++t) {
            double u = dist(rng);
            auto x = face_operator(3, 1, u, phase(u), FaceVariant::X, M_PI / 2);
            CMatrix want = s_weight(1, -u, M_PI / 2) * CMatrix::Identity(8, 8) +
                           s_weight(0, u, M_PI / 2) * tl_generator(3, 1).mat;
            CHECK(max_abs(x.mat - want) < 1e-12);
        }
    }
}

TEST_CASE("boundary triangles") {
    auto kl = boundary_triangle(BoundarySide::left, Complex(0, 1));
    CHECK(kl(0, 0) == Complex(0, 1));
    CHECK(kl(1, 1) == Complex(0, -1));
    CHECK(kl(0, 1) == Complex(0, 0));
    auto kr = boundary_triangle(BoundarySide::right, phase(0.3));
    CHECK(max_abs(kr - Eigen::Matrix2cd::Identity()) == 0.0);
    // unitary for unimodular x
    auto klu = boundary_triangle(BoundarySide::left, phase(0.77));
    CHECK(max_abs(klu * klu.adjoint() - Eigen::Matrix2cd::Identity()) < 1e-15);
}
