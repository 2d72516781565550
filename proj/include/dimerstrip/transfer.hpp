#pragma once

#include <array>
#include <string>
#include <vector>

#include "dimerstrip/statespace.hpp"
#include "dimerstrip/tl_algebra.hpp"

namespace dimerstrip {

// Double-row strip at the free-fermion point: N bulk columns plus w = 0,1
// boundary columns, boundary field xi (only meaningful for w = 1), left
// triangle weight x = i. lambda is fixed at pi/2 for everything built here;
// only the local relations support general lambda.
struct StripModel {
    int n = 2;                  // bulk columns
    int w = 0;                  // boundary columns, 0 or 1
    double xi = M_PI / 4;       // boundary field, default lambda/2
    double lambda = M_PI / 2;
    double rho = 1.0;
    Complex x = Complex(0, 1);

    int big_n() const { return n + w; }
    // Divisor of Eq-style normalization: sin 2u for w=0 and
    // sin^2(xi+lambda) sin 2u for w=1.
    Complex normalization(double u) const;
};

StripModel make_strip(int n, int w, double xi_over_lambda = 0.5);

// One column of a single double row: a blue face at u_bot below a pink face
// at u_top, contracted over their shared vertical edge. The 4-dimensional
// horizontal channel pairs (bottom-row edge f, top-row edge e), ordered
// {(0,0),(0,1),(1,0),(1,1)} with f first. Row index = left edge pair,
// column index = right edge pair, so a row of faces is a left-to-right
// matrix product between the boundary vectors.
Eigen::Matrix4cd column_matrix(const StripModel& model, int a_top, int b_bot,
                               double u_bot, double u_top);

// Boundary vectors of the channel: left triangle carries x^{1-2f} delta(f,e),
// right triangle delta(f,e).
Eigen::Vector4cd left_boundary_vector(Complex x);
Eigen::Vector4cd right_boundary_vector();

// D(u)_{b,a} for one pair of boundary configurations.
Complex double_row_element(const StripModel& model, double u,
                           const OccupationState& b, const OccupationState& a);

// Full-space D(u); permitted only for N+w <= kMaxDenseFullSpace.
ComplexOperator double_row_transfer(const StripModel& model, double u);

// Sector block of D(u) built directly in the canonical sector basis.
ComplexOperator double_row_transfer_sector(const StripModel& model, double u,
                                           const Sector& sec);

// Normalized transfer d(u) = D(u)/normalization; d(0) = I, d(lambda-u) = d(u).
ComplexOperator normalized_transfer(const StripModel& model, double u);
ComplexOperator normalized_transfer_sector(const StripModel& model, double u,
                                           const Sector& sec);

// max |D(u)D(v) - D(v)D(u)| over all sector blocks.
double check_commutation(const StripModel& model, double u, double v);

struct InversionResiduals {
    double raw = 0;         // D(u)D(u+lambda) + f(u)^2 I
    double normalized = 0;  // d(u)d(u+lambda) - fbar(u)^2 I
};

// Scalar of Eq-style inversion identities:
//   w=0:  D(u)D(u+l) = -tan^2(2u) (cos^{2N}u - sin^{2N}u)^2 I
//   w=1:  D(u)D(u+l) = -tan^2(2u)(sin(u+xi)sin(u-xi)cos^{2N}u
//                                 - cos(u+xi)cos(u-xi)sin^{2N}u)^2 I
// and the normalized forms (cos^{2N}u - sin^{2N}u)^2/cos^2(2u) (w=0) and
// (cos^{2N}u + sin^{2N}u)^2 (w=1, xi=lambda/2).
double inversion_scalar_raw(const StripModel& model, double u);
double inversion_scalar_normalized(const StripModel& model, double u);

// Throws std::domain_error within |sin 2u| <= 1e-6 of a normalization pole.
InversionResiduals check_inversion_identity(const StripModel& model, double u);

// max over sectors of |d(u) - d(lambda - u)|.
double check_crossing(const StripModel& model, double u);

// d(0) and d'(0) on one sector, evaluated exactly through the Laurent
// expansion: every element of D(u) is a Laurent polynomial in z = e^{iu},
// recovered by uniform sampling and divided by the sin 2u normalization in
// coefficient space, so the u = 0 pole of the normalization never appears.
CMatrix normalized_transfer_at_zero(const StripModel& model, const Sector& sec);
CMatrix normalized_transfer_derivative_at_zero(const StripModel& model,
                                               const Sector& sec);

// max over sectors of |d(0) - I|.
double check_initial_condition(const StripModel& model);

// --- Appendix-style two-double-row column machinery (w = 0) ---------------

// Basis of the 16 intermediate channel states (c,d,e,f) listed top edge
// first; index = 8c + 4d + 2e + f reordered so the first six states span the
// invariant subspace V6 = {0000, 0011, 1100, 1111, 0110, 1001} (written as
// (c,d,e,f)), the remaining ten V10.
extern const std::array<std::array<int, 4>, 16> kTwoRowChannelBasis;

// Column matrix of D(u)D(u+lambda): four stacked faces blue(u), pink(u),
// blue(u+lambda), pink(u+lambda) with fixed gauge e^{i theta} per face.
Eigen::Matrix<Complex, 16, 16> two_row_column_matrix(const StripModel& model,
                                                     int a, int b, double u);

Eigen::Matrix<Complex, 16, 1> two_row_right_vector();
Eigen::Matrix<Complex, 1, 16> two_row_left_vector(Complex x);

// Hand transcription of the four printed 16x16 column matrices at lambda =
// pi/2, g = z, rho = 1; entries are monomials coeff * c^i s^j z^k.
Eigen::Matrix<Complex, 16, 16> printed_column_matrix(int a, int b, double u);

// Plain-text matrix file with the same data evaluated at a reference u
// (see data/appendix_a_columns.txt); row-major "a+bi" tokens, '#' comments.
double diff_against_matrix_file(const std::string& path, double u_ref);
void write_matrix_file(const std::string& path, double u_ref);

struct AppendixReport {
    double printed_diff = 0;       // (i) constructive vs printed arrays
    double block_structure = 0;    // (ii) leakage of R(a/a) between V6 and V10
    double spectrum = 0;           // (iii) eigenvalues of R(0/0) on V6
    double delta_r_chain = 0;      // (iv) product with Delta R vs closed form
    double orthogonality = 0;      // (iv') <left| against the Delta R chain
    double diagonal_element = 0;   // (v) diagonal element independence
    double off_diagonal = 0;       // (vi) off-diagonal elements of D(u)D(u+l)
    double max_residual() const;
};

AppendixReport appendix_a_suite(int n, double u);

}  // namespace dimerstrip
