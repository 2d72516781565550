#pragma once

#include <array>

#include "dimerstrip/statespace.hpp"

namespace dimerstrip {

enum class FermionKind { create, annihilate, number, covacancy };
enum class FaceOrientation { blue, pink };
enum class FaceVariant { X, Xtilde };
enum class BoundarySide { left, right };

// Single-site operator f_j, f_j^dag, n_j or n_j^0 = 1 - n_j on N sites.
// These satisfy the mixed relations f_j^2 = 0, {f_j, f_j^dag} = 1 with
// operators at different sites commuting (no Jordan-Wigner strings).
ComplexOperator fermion_op(int big_n, int j, FermionKind kind);

// Temperley-Lieb generator
//   e_j = x n_j + x^{-1} n_{j+1} + f_j^dag f_{j+1} + f_{j+1}^dag f_j
// with loop fugacity beta = x + x^{-1}; the model point is x = i, beta = 0.
ComplexOperator tl_generator(int big_n, int j, Complex x = Complex(0, 1));

// Trigonometric weight s_k(u) = sin(u + k*lambda) / sin(lambda).
double s_weight(int k, double u, double lambda);

// The six-vertex face weights of one face, with the gauge g on the two
// source/sink entries. `weight(l,b,r,t)` is keyed by the occupation numbers
// of the left, bottom, right and top edge midpoints. Blue faces move
// particles up-right, pink faces (the 90-degree rotation) up-left; a pink
// face has the weight of the blue face with edges relabelled one step
// around the square.
struct FaceWeightTable {
    double lambda = 0;
    double u = 0;
    Complex g = 1.0;
    double rho = 1.0;
    FaceOrientation orientation = FaceOrientation::blue;

    Complex weight(int l, int b, int r, int t) const;

    // The same six weights packed as the 4x4 operators of the vertical
    // action on two adjacent sites, basis {00, 01, 10, 11}.
    Eigen::Matrix4cd as_x_matrix() const;       // blue convention  X(u,g)
    Eigen::Matrix4cd as_xtilde_matrix() const;  // pink convention  X~(u,g)
};

FaceWeightTable make_face_weights(double lambda, double u, Complex g,
                                  FaceOrientation orientation, double rho = 1.0);

// 4x4 face operators in the vertical action.
Eigen::Matrix4cd face_x(double lambda, double u, Complex g, double rho = 1.0);
Eigen::Matrix4cd face_xtilde(double lambda, double u, Complex g, double rho = 1.0);

// X_j(u,g) or X~_j(u,g) embedded at sites (j, j+1) of N sites. With the
// fixed gauge g = e^{iu}, X_j(u) = s_1(-u) I + s_0(u) e_j.
ComplexOperator face_operator(int big_n, int j, double u, Complex g,
                              FaceVariant variant, double lambda, double rho = 1.0);

// Boundary triangles of the strip: K^L = diag(x, 1/x), K^R = I, both
// independent of the spectral parameter.
Eigen::Matrix2cd boundary_triangle(BoundarySide side, Complex x = Complex(0, 1));

// Embed a 4x4 two-site operator at sites (j, j+1); shared by the face
// operators and the local-relation checks.
ComplexOperator embed_two_site(int big_n, int j, const Eigen::Matrix4cd& m);

}  // namespace dimerstrip
