#include "dimerstrip/tl_algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace dimerstrip {

namespace {
void check_site(int big_n, int j, int max_j) {
    if (big_n < 1 || big_n > kMaxDenseFullSpace)
        throw std::domain_error("full-space operators limited to " +
                                std::to_string(kMaxDenseFullSpace) + " sites");
    if (j < 1 || j > max_j) throw std::domain_error("site index out of range");
}
}  // namespace

ComplexOperator fermion_op(int big_n, int j, FermionKind kind) {
    check_site(big_n, j, big_n);
    Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
    switch (kind) {
        case FermionKind::create: m(1, 0) = 1.0; break;      // |1><0|
        case FermionKind::annihilate: m(0, 1) = 1.0; break;  // |0><1|
        case FermionKind::number: m(1, 1) = 1.0; break;
        case FermionKind::covacancy: m(0, 0) = 1.0; break;
    }
    ComplexOperator op;
    op.big_n = big_n;
    const long long dim = 1LL << big_n;
    op.mat = CMatrix::Zero(dim, dim);
    const std::uint32_t bit = 1u << (j - 1);
    for (long long c = 0; c < dim; ++c) {
        int in = (c & bit) ? 1 : 0;
        for (int out = 0; out < 2; ++out) {
            Complex w = m(out, in);
            if (w == Complex(0, 0)) continue;
            long long r = (c & ~(long long)bit) | (out ? bit : 0);
            op.mat(r, c) += w;
        }
    }
    return op;
}

ComplexOperator tl_generator(int big_n, int j, Complex x) {
    check_site(big_n, j, big_n - 1);
    // e_j acts on sites (j, j+1); build the 4x4 block and embed it.
    Eigen::Matrix4cd e = Eigen::Matrix4cd::Zero();
    e(1, 1) = 1.0 / x;  // x^{-1} n_{j+1} on |01>
    e(2, 2) = x;        // x n_j on |10>
    e(1, 2) = 1.0;      // f_{j+1}^dag f_j : |10> -> |01>
    e(2, 1) = 1.0;      // f_j^dag f_{j+1} : |01> -> |10>
    e(3, 3) = x + 1.0 / x;
    return embed_two_site(big_n, j, e);
}

double s_weight(int k, double u, double lambda) {
    return std::sin(u + k * lambda) / std::sin(lambda);
}

Complex FaceWeightTable::weight(int l, int b, int r, int t) const {
    // Blue table, keyed (left, bottom, right, top). The pink face with a
    // given edge configuration has the weight of the blue face with the
    // labels rotated one step: W_pink(l,b,r,t) = W_blue(b,r,t,l).
    int a = l, bb = b, c = r, d = t;
    if (orientation == FaceOrientation::pink) {
        a = b; bb = r; c = t; d = l;
    }
    const double s1m = rho * s_weight(1, -u, lambda);
    const double s0 = rho * s_weight(0, u, lambda);
    if (a == 0 && bb == 0 && c == 0 && d == 0) return s1m;
    if (a == 1 && bb == 1 && c == 1 && d == 1) return s1m;
    if (a == 0 && bb == 1 && c == 0 && d == 1) return s0;
    if (a == 1 && bb == 0 && c == 1 && d == 0) return s0;
    if (a == 1 && bb == 0 && c == 0 && d == 1) return rho * g;        // c1
    if (a == 0 && bb == 1 && c == 1 && d == 0) return rho / g;        // c2
    return 0.0;
}

Eigen::Matrix4cd FaceWeightTable::as_x_matrix() const {
    // X(u,g)_{(a,b),(d,c)} = W_blue(a,b,c,d); rows are the lower pair of the
    // vertical action, columns the upper pair.
    FaceWeightTable blue = *this;
    blue.orientation = FaceOrientation::blue;
    Eigen::Matrix4cd m;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    m(a * 2 + b, d * 2 + c) = blue.weight(a, b, c, d);
    return m;
}

Eigen::Matrix4cd FaceWeightTable::as_xtilde_matrix() const {
    // X~(u,g)_{(d,a),(c,b)} = W_pink(a,b,c,d) with pink labels a=left,
    // b=top, c=right, d=bottom.
    FaceWeightTable pink = *this;
    pink.orientation = FaceOrientation::pink;
    Eigen::Matrix4cd m;
    for (int l = 0; l < 2; ++l)
        for (int b = 0; b < 2; ++b)
            for (int r = 0; r < 2; ++r)
                for (int t = 0; t < 2; ++t)
                    m(b * 2 + l, r * 2 + t) = pink.weight(l, b, r, t);
    return m;
}

FaceWeightTable make_face_weights(double lambda, double u, Complex g,
                                  FaceOrientation orientation, double rho) {
    FaceWeightTable tbl;
    tbl.lambda = lambda;
    tbl.u = u;
    tbl.g = g;
    tbl.rho = rho;
    tbl.orientation = orientation;
    return tbl;
}

Eigen::Matrix4cd face_x(double lambda, double u, Complex g, double rho) {
    return make_face_weights(lambda, u, g, FaceOrientation::blue, rho).as_x_matrix();
}

Eigen::Matrix4cd face_xtilde(double lambda, double u, Complex g, double rho) {
    return make_face_weights(lambda, u, g, FaceOrientation::pink, rho).as_xtilde_matrix();
}

ComplexOperator face_operator(int big_n, int j, double u, Complex g,
                              FaceVariant variant, double lambda, double rho) {
    check_site(big_n, j, big_n - 1);
    Eigen::Matrix4cd m = (variant == FaceVariant::X) ? face_x(lambda, u, g, rho)
                                                     : face_xtilde(lambda, u, g, rho);
    return embed_two_site(big_n, j, m);
}

Eigen::Matrix2cd boundary_triangle(BoundarySide side, Complex x) {
    Eigen::Matrix2cd k = Eigen::Matrix2cd::Identity();
    if (side == BoundarySide::left) {
        k(0, 0) = x;
        k(1, 1) = 1.0 / x;
    }
    return k;
}

ComplexOperator embed_two_site(int big_n, int j, const Eigen::Matrix4cd& m) {
    check_site(big_n, j, big_n - 1);
    ComplexOperator op;
    op.big_n = big_n;
    const long long dim = 1LL << big_n;
    op.mat = CMatrix::Zero(dim, dim);
    const std::uint32_t bj = 1u << (j - 1);
    const std::uint32_t bj1 = 1u << j;
    const std::uint32_t pair = bj | bj1;
    for (long long c = 0; c < dim; ++c) {
        // Matrix basis index is (a_j, a_{j+1}) with a_j first.
        int cin = ((c & bj) ? 2 : 0) | ((c & bj1) ? 1 : 0);
        for (int rout = 0; rout < 4; ++rout) {
            Complex w = m(rout, cin);
            if (w == Complex(0, 0)) continue;
            long long r = (c & ~(long long)pair) | ((rout & 2) ? bj : 0) |
                          ((rout & 1) ? bj1 : 0);
            op.mat(r, c) += w;
        }
    }
    return op;
}

}  // namespace dimerstrip
