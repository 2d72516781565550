#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dimerstrip/local_relations.hpp"

using namespace dimerstrip;

namespace {
Complex phase(double t) { return std::polar(1.0, t); }
}  // namespace

TEST_CASE("inversion relations") {
    SUBCASE("inv1 at u = 0 is exact") {
        CHECK(check_inversion_local(M_PI / 2, 0.0, phase(0.2), InversionKind::inv1, 2, 1) <
              1e-15);
    }
    SUBCASE("random draws at the dimer point and one general lambda") {
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> dist(0.05, 1.5);
        for (double lambda : {M_PI / 2, M_PI / 3}) {
            for (int t = 0; t < 100; ++t) {
                double u = dist(rng);
                Complex g = phase(dist(rng));
                CHECK(check_inversion_local(lambda, u, g, InversionKind::inv1, 3, 1) <
                      kLocalResidualThreshold);
                CHECK(check_inversion_local(lambda, u, g, InversionKind::inv2, 3, 2) <
                      kLocalResidualThreshold);
            }
        }
    }
}

TEST_CASE("fundamental Yang-Baxter equation") {
    SUBCASE("one face degenerates to the identity at v = 0") {
        CHECK(check_ybe(M_PI / 2, 0.61, 0.0, 3, 1, YbeVariant::fundamental) < 1e-13);
    }
    SUBCASE("random draws, both lambdas") {
        std::mt19937_64 rng(5);
        std::uniform_real_distribution<double> dist(0.05, 1.4);
        for (double lambda : {M_PI / 2, M_PI / 3}) {
            for (int t = 0; t < 100; ++t) {
                double u = dist(rng), v = dist(rng);
                CHECK(check_ybe(lambda, u, v, 3, 1, YbeVariant::fundamental) <
                      kLocalResidualThreshold);
            }
        }
    }
    SUBCASE("position validation") {
        CHECK_THROWS_AS(check_ybe(M_PI / 2, 0.3, 0.4, 2, 1, YbeVariant::fundamental),
                        std::domain_error);
    }
}

TEST_CASE("boundary-field Yang-Baxter moves") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> dist(0.05, 1.4);
    for (double lambda : {M_PI / 2, M_PI / 3}) {
        for (int t = 0; t < 100; ++t) {
            double u = dist(rng), v = dist(rng);
            double xi = (t % 3 == 0) ? lambda / 2 : dist(rng);
            CHECK(check_ybe(lambda, u, v, 3, 1, YbeVariant::ybe1, xi) <
                  kLocalResidualThreshold);
            CHECK(check_ybe(lambda, u, v, 3, 1, YbeVariant::ybe2, xi) <
                  kLocalResidualThreshold);
            CHECK(check_ybe(lambda, u, v, 3, 1, YbeVariant::ybe3, xi) <
                  kLocalResidualThreshold);
        }
    }
}

TEST_CASE("reflection equations") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> dist(0.05, 1.4);
    SUBCASE("right boundary equals the face commutator") {
        for (int t = 0; t < 100; ++t) {
            double u = dist(rng), v = dist(rng);
            double res = check_boundary_ybe(M_PI / 2, u, v, BoundarySide::right);
            CHECK(res < kLocalResidualThreshold);
            CHECK(res == check_face_commutation(M_PI / 2, u - v, u + v, FaceVariant::X,
                                                phase(0.0)));
        }
    }
    SUBCASE("left boundary at u = v is trivial") {
        CHECK(check_boundary_ybe(M_PI / 2, 0.53, 0.53, BoundarySide::left) < 1e-13);
    }
    SUBCASE("left boundary, random draws, both lambdas") {
        for (double lambda : {M_PI / 2, M_PI / 3}) {
            Complex x = phase(lambda);
            for (int t = 0; t < 100; ++t) {
                double u = dist(rng), v = dist(rng);
                CHECK(check_boundary_ybe(lambda, u, v, BoundarySide::left, x) <
                      kLocalResidualThreshold);
            }
        }
    }
}

TEST_CASE("face commutation at equal gauge") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> dist(0.05, 1.4);
    for (int t = 0; t < 50; ++t) {
        double u = dist(rng), v = dist(rng);
        CHECK(check_face_commutation(M_PI / 2, u, v, FaceVariant::X, phase(0)) < 1e-13);
        CHECK(check_face_commutation(M_PI / 3, u, v, FaceVariant::Xtilde, phase(0.7)) <
              1e-13);
    }
}

TEST_CASE("residuals scale linearly with a seeded weight perturbation") {
    // Perturb one entry of one face by eps and 2 eps: the YBE residual must
    // double, confirming the checks are conditioned like the inputs.
    const double lambda = M_PI / 2, u = 0.53, v = 0.71;
    auto residual_with_eps = [&](double eps) {
        auto x1 = face_x(lambda, u, phase(u));
        auto x12 = face_x(lambda, u + v, phase(u + v));
        auto x2 = face_x(lambda, v, phase(v));
        x1(1, 1) += eps;
        CMatrix a = embed_two_site(3, 1, x1).mat;
        CMatrix b = embed_two_site(3, 2, x12).mat;
        CMatrix c = embed_two_site(3, 1, x2).mat;
        CMatrix a2 = embed_two_site(3, 2, x1).mat;
        CMatrix b2 = embed_two_site(3, 1, x12).mat;
        CMatrix c2 = embed_two_site(3, 2, x2).mat;
        return ((a * b * c) - (c2 * b2 * a2)).cwiseAbs().maxCoeff();
    };
    double r1 = residual_with_eps(1e-6);
    double r2 = residual_with_eps(2e-6);
    CHECK(r1 > 1e-8);
    CHECK(r2 / r1 == doctest::Approx(2.0).epsilon(1e-3));
}
