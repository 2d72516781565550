#include "dimerstrip/transfer.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace dimerstrip {

namespace {
Complex phase(double t) { return std::polar(1.0, t); }
}  // namespace

Complex StripModel::normalization(double u) const {
    double s2u = std::sin(2 * u);
    if (w == 0) return s2u;
    double sxl = std::sin(xi + lambda);
    return sxl * sxl * s2u;
}

StripModel make_strip(int n, int w, double xi_over_lambda) {
    if (n < 1) throw std::domain_error("make_strip: need at least one bulk column");
    if (w != 0 && w != 1) throw std::domain_error("make_strip: w must be 0 or 1");
    StripModel m;
    m.n = n;
    m.w = w;
    m.xi = xi_over_lambda * m.lambda;
    if (m.big_n() > kMaxSites) throw std::domain_error("make_strip: strip too wide");
    return m;
}

Eigen::Matrix4cd column_matrix(const StripModel& model, int a_top, int b_bot,
                               double u_bot, double u_top) {
    FaceWeightTable blue =
        make_face_weights(model.lambda, u_bot, phase(u_bot), FaceOrientation::blue, model.rho);
    FaceWeightTable pink =
        make_face_weights(model.lambda, u_top, phase(u_top), FaceOrientation::pink, model.rho);
    // Channel pair (f,e): f = bottom-row edge, e = top-row edge; sum over the
    // internal vertical edge m between the two faces of the column.
    Eigen::Matrix4cd c = Eigen::Matrix4cd::Zero();
    for (int f = 0; f < 2; ++f)
        for (int e = 0; e < 2; ++e)
            for (int fp = 0; fp < 2; ++fp)
                for (int ep = 0; ep < 2; ++ep) {
                    Complex sum = 0;
                    for (int m = 0; m < 2; ++m)
                        sum += blue.weight(f, b_bot, fp, m) * pink.weight(e, m, ep, a_top);
                    c(f * 2 + e, fp * 2 + ep) = sum;
                }
    return c;
}

Eigen::Vector4cd left_boundary_vector(Complex x) {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(0) = x;          // (f,e) = (0,0), weight x^{1-2f}
    v(3) = 1.0 / x;    // (f,e) = (1,1)
    return v;
}

Eigen::Vector4cd right_boundary_vector() {
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    v(0) = 1.0;
    v(3) = 1.0;
    return v;
}

Complex double_row_element(const StripModel& model, double u,
                           const OccupationState& b, const OccupationState& a) {
    const int nn = model.big_n();
    Eigen::Vector4cd v = right_boundary_vector();
    for (int j = nn; j >= 1; --j) {
        double ub = u, ut = u;
        if (model.w == 1 && j == nn) { ub = u - model.xi; ut = u + model.xi; }
        v = column_matrix(model, a.bit(j), b.bit(j), ub, ut) * v;
    }
    Eigen::Vector4cd left = left_boundary_vector(model.x);
    return left(0) * v(0) + left(3) * v(3);  // bilinear pairing, no conjugation
}

ComplexOperator double_row_transfer(const StripModel& model, double u) {
    const int nn = model.big_n();
    if (nn > kMaxDenseFullSpace)
        throw std::domain_error("double_row_transfer: full-space build limited to N+w <= " +
                                std::to_string(kMaxDenseFullSpace));
    ComplexOperator op;
    op.big_n = nn;
    const long long dim = 1LL << nn;
    op.mat.resize(dim, dim);
    for (long long r = 0; r < dim; ++r)
        for (long long c = 0; c < dim; ++c)
            op.mat(r, c) = double_row_element(model, u, {std::uint32_t(r), nn},
                                              {std::uint32_t(c), nn});
    return op;
}

ComplexOperator double_row_transfer_sector(const StripModel& model, double u,
                                           const Sector& sec) {
    if (sec.big_n != model.big_n())
        throw std::invalid_argument("double_row_transfer_sector: size mismatch");
    auto basis = enumerate_sector(sec.big_n, sec.d);
    ComplexOperator op;
    op.big_n = sec.big_n;
    op.sector = sec;
    op.mat.resize(basis.size(), basis.size());
    for (std::size_t r = 0; r < basis.size(); ++r)
        for (std::size_t c = 0; c < basis.size(); ++c)
            op.mat(r, c) = double_row_element(model, u, basis[r], basis[c]);
    return op;
}

ComplexOperator normalized_transfer(const StripModel& model, double u) {
    ComplexOperator op = double_row_transfer(model, u);
    op.mat /= model.normalization(u);
    return op;
}

ComplexOperator normalized_transfer_sector(const StripModel& model, double u,
                                           const Sector& sec) {
    ComplexOperator op = double_row_transfer_sector(model, u, sec);
    op.mat /= model.normalization(u);
    return op;
}

double check_commutation(const StripModel& model, double u, double v) {
    const int nn = model.big_n();
    double worst = 0;
    for (int d = 0; d <= nn; ++d) {
        Sector sec = make_sector(nn, d);
        CMatrix du = double_row_transfer_sector(model, u, sec).mat;
        CMatrix dv = double_row_transfer_sector(model, v, sec).mat;
        worst = std::max(worst, (du * dv - dv * du).cwiseAbs().maxCoeff());
    }
    return worst;
}

double inversion_scalar_raw(const StripModel& model, double u) {
    double t2 = std::tan(2 * u);
    double cN = std::pow(std::cos(u), 2 * model.n);
    double sN = std::pow(std::sin(u), 2 * model.n);
    if (model.w == 0) {
        double f = cN - sN;
        return t2 * t2 * f * f;
    }
    double f = std::sin(u + model.xi) * std::sin(u - model.xi) * cN -
               std::cos(u + model.xi) * std::cos(u - model.xi) * sN;
    return t2 * t2 * f * f;
}

double inversion_scalar_normalized(const StripModel& model, double u) {
    double c2u = std::cos(2 * u);
    double raw = inversion_scalar_raw(model, u);
    double t2 = std::tan(2 * u);
    // raw = tan^2(2u) f^2; normalized = f^2 / (norm-const^2 cos^2 2u) with
    // norm-const = sin^2(xi+lambda) for w=1 and 1 for w=0.
    double f2 = raw / (t2 * t2);
    double nc = (model.w == 0) ? 1.0 : std::pow(std::sin(model.xi + model.lambda), 2);
    return f2 / (nc * nc * c2u * c2u);
}

InversionResiduals check_inversion_identity(const StripModel& model, double u) {
    if (std::abs(std::sin(2 * u)) <= 1e-6)
        throw std::domain_error("check_inversion_identity: u within the pole exclusion zone");
    const int nn = model.big_n();
    const double lambda = model.lambda;
    InversionResiduals res;
    double raw_scalar = inversion_scalar_raw(model, u);
    double norm_scalar = inversion_scalar_normalized(model, u);
    for (int d = 0; d <= nn; ++d) {
        Sector sec = make_sector(nn, d);
        CMatrix du = double_row_transfer_sector(model, u, sec).mat;
        CMatrix dup = double_row_transfer_sector(model, u + lambda, sec).mat;
        CMatrix id = CMatrix::Identity(du.rows(), du.cols());
        res.raw = std::max(res.raw, (du * dup + raw_scalar * id).cwiseAbs().maxCoeff());
        CMatrix ndu = du / model.normalization(u);
        CMatrix ndup = dup / model.normalization(u + lambda);
        res.normalized = std::max(
            res.normalized, (ndu * ndup - norm_scalar * id).cwiseAbs().maxCoeff());
    }
    return res;
}

double check_crossing(const StripModel& model, double u) {
    const int nn = model.big_n();
    double worst = 0;
    for (int d = 0; d <= nn; ++d) {
        Sector sec = make_sector(nn, d);
        CMatrix a = normalized_transfer_sector(model, u, sec).mat;
        CMatrix b = normalized_transfer_sector(model, model.lambda - u, sec).mat;
        worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
    return worst;
}

namespace {

// Laurent coefficients of every element of D(u) on a sector, index m+kmax
// holding the z^m coefficient.
std::vector<CMatrix> transfer_laurent_coefficients(const StripModel& model,
                                                   const Sector& sec, int kmax) {
    const int samples = 2 * kmax + 1;
    std::vector<CMatrix> ds;
    ds.reserve(samples);
    for (int k = 0; k < samples; ++k)
        ds.push_back(double_row_transfer_sector(model, 2 * M_PI * k / samples, sec).mat);
    std::vector<CMatrix> coeffs(samples);
    for (int m = -kmax; m <= kmax; ++m) {
        CMatrix c = CMatrix::Zero(ds[0].rows(), ds[0].cols());
        for (int k = 0; k < samples; ++k)
            c += ds[k] * std::polar(1.0 / samples, -2 * M_PI * k * m / samples);
        coeffs[m + kmax] = c;
    }
    return coeffs;
}

// Divide the Laurent polynomial sum_m c_m z^m by sin 2u = (z^2 - z^{-2})/2i,
// i.e. compute 2i P z^2 / (z^4 - 1) by long division from the top. The
// division is exact because d(u) is itself a Laurent polynomial. Returns the
// quotient with index i holding the z^{i - kmax + 2} coefficient... see the
// offset returned through `lo`.
std::vector<CMatrix> divide_by_sin2u(const std::vector<CMatrix>& coeffs, int kmax,
                                     int& lo) {
    const CMatrix zero = CMatrix::Zero(coeffs[0].rows(), coeffs[0].cols());
    // numerator N = P z^2: exponents -kmax+2 .. kmax+2
    const int nlo = -kmax + 2, nhi = kmax + 2;
    std::vector<CMatrix> c(coeffs);  // c[i] = coefficient of z^{nlo + i}
    std::vector<CMatrix> quot(c.size() - 4, zero);
    for (int e = nhi; e >= nlo + 4; --e) {
        int i = e - nlo;
        quot[i - 4] = c[i];
        c[i - 4] += c[i];  // subtracting q (z^4 - 1) adds q at e-4
        c[i] = zero;
    }
    double rem = 0, scale = 0;
    for (int i = 0; i < 4; ++i) rem = std::max(rem, c[i].cwiseAbs().maxCoeff());
    for (const auto& m : coeffs) scale = std::max(scale, m.cwiseAbs().maxCoeff());
    if (rem > 1e-8 * std::max(scale, 1.0))
        throw std::runtime_error("divide_by_sin2u: non-exact Laurent division");
    for (auto& q : quot) q *= Complex(0, 2);
    lo = nlo;  // quotient exponents run lo .. lo + quot.size() - 1
    return quot;
}

}  // namespace

CMatrix normalized_transfer_at_zero(const StripModel& model, const Sector& sec) {
    const int kmax = 2 * model.big_n() + 6;
    auto coeffs = transfer_laurent_coefficients(model, sec, kmax);
    int lo = 0;
    auto quot = divide_by_sin2u(coeffs, kmax, lo);
    CMatrix d0 = CMatrix::Zero(coeffs[0].rows(), coeffs[0].cols());
    for (const auto& q : quot) d0 += q;  // z = 1
    if (model.w == 1) d0 /= std::pow(std::sin(model.xi + model.lambda), 2);
    return d0;
}

CMatrix normalized_transfer_derivative_at_zero(const StripModel& model,
                                               const Sector& sec) {
    const int kmax = 2 * model.big_n() + 6;
    auto coeffs = transfer_laurent_coefficients(model, sec, kmax);
    int lo = 0;
    auto quot = divide_by_sin2u(coeffs, kmax, lo);
    CMatrix dp = CMatrix::Zero(coeffs[0].rows(), coeffs[0].cols());
    for (int i = 0; i < int(quot.size()); ++i) dp += quot[i] * Complex(0, lo + i);
    if (model.w == 1) dp /= std::pow(std::sin(model.xi + model.lambda), 2);
    return dp;
}

double check_initial_condition(const StripModel& model) {
    const int nn = model.big_n();
    double worst = 0;
    for (int d = 0; d <= nn; ++d) {
        Sector sec = make_sector(nn, d);
        CMatrix d0 = normalized_transfer_at_zero(model, sec);
        CMatrix id = CMatrix::Identity(d0.rows(), d0.cols());
        worst = std::max(worst, (d0 - id).cwiseAbs().maxCoeff());
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Two stacked double rows: the 16-dimensional channel.

const std::array<std::array<int, 4>, 16> kTwoRowChannelBasis = {{
    // (c,d,e,f): the six states closed under R(a/a) come first.
    {0, 0, 0, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {1, 1, 1, 1}, {0, 1, 1, 0}, {1, 0, 0, 1},
    {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 1},
    {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0},
}};

Eigen::Matrix<Complex, 16, 16> two_row_column_matrix(const StripModel& model,
                                                     int a, int b, double u) {
    if (model.w != 0)
        throw std::domain_error("two_row_column_matrix: stated for w = 0 strips");
    const double lambda = model.lambda;
    const double u2 = u + lambda;
    FaceWeightTable blue1 =
        make_face_weights(lambda, u, phase(u), FaceOrientation::blue, model.rho);
    FaceWeightTable pink1 =
        make_face_weights(lambda, u, phase(u), FaceOrientation::pink, model.rho);
    FaceWeightTable blue2 =
        make_face_weights(lambda, u2, phase(u2), FaceOrientation::blue, model.rho);
    FaceWeightTable pink2 =
        make_face_weights(lambda, u2, phase(u2), FaceOrientation::pink, model.rho);

    Eigen::Matrix<Complex, 16, 16> r = Eigen::Matrix<Complex, 16, 16>::Zero();
    for (int li = 0; li < 16; ++li) {
        auto [cl, dl, el, fl] = kTwoRowChannelBasis[li];
        for (int ri = 0; ri < 16; ++ri) {
            auto [cr, dr, er, fr] = kTwoRowChannelBasis[ri];
            Complex sum = 0;
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    for (int m3 = 0; m3 < 2; ++m3)
                        sum += blue1.weight(fl, b, fr, m1) * pink1.weight(el, m1, er, m2) *
                               blue2.weight(dl, m2, dr, m3) * pink2.weight(cl, m3, cr, a);
            r(li, ri) = sum;
        }
    }
    return r;
}

Eigen::Matrix<Complex, 16, 1> two_row_right_vector() {
    Eigen::Matrix<Complex, 16, 1> v = Eigen::Matrix<Complex, 16, 1>::Zero();
    for (int i = 0; i < 16; ++i) {
        auto [c, d, e, f] = kTwoRowChannelBasis[i];
        if (f == e && d == c) v(i) = 1.0;
    }
    return v;
}

Eigen::Matrix<Complex, 1, 16> two_row_left_vector(Complex x) {
    Eigen::Matrix<Complex, 1, 16> v = Eigen::Matrix<Complex, 1, 16>::Zero();
    for (int i = 0; i < 16; ++i) {
        auto [c, d, e, f] = kTwoRowChannelBasis[i];
        if (f == e && d == c) v(i) = std::pow(x, 1 - 2 * f) * std::pow(x, 1 - 2 * d);
    }
    return v;
}

// ---------------------------------------------------------------------------
// Hand transcription of the printed column matrices, entries coeff*c^i s^j z^k.

namespace {

struct MonomialEntry {
    std::uint8_t row, col;  // 1-based as printed
    double re, im;
    std::int8_t pc, ps, pz;
};

// clang-format off
const MonomialEntry kPrintedR00[] = {
    {1,1, 1,0, 2,2,0},   {1,5, 0,1, 1,1,-2},
    {2,1, 1,0, 0,2,2},   {2,2, 1,0, 0,4,0},   {2,5, 0,1, 1,1,0},
    {3,1, -1,0, 2,0,2},  {3,3, 1,0, 4,0,0},   {3,5, 0,-1, 1,1,0},
    {4,1, -1,0, 0,0,4},  {4,2, -1,0, 0,2,2},  {4,3, 1,0, 2,0,2},
    {4,4, 1,0, 2,2,0},   {4,5, 0,-1, 1,1,2},
    {5,5, -1,0, 2,2,0},
    {6,1, 0,1, 1,1,2},   {6,2, 0,1, 1,1,0},   {6,3, 0,-1, 1,1,0},
    {6,4, 0,-1, 1,1,-2}, {6,6, -1,0, 2,2,0},
    {7,7, 1,0, 1,3,0},   {7,9, 0,1, 0,2,0},   {7,11, 0,1, 0,2,-2},
    {8,8, 1,0, 1,3,0},
    {9,9, -1,0, 3,1,0},
    {10,10, -1,0, 2,2,0},
    {11,9, -1,0, 1,1,2}, {11,11, -1,0, 1,3,0},
    {12,8, 0,1, 2,0,0},  {12,12, -1,0, 3,1,0}, {12,16, 0,-1, 2,0,-2},
    {13,13, -1,0, 2,2,0},
    {14,8, 0,1, 2,0,2},  {14,12, -1,0, 1,1,2}, {14,14, -1,0, 1,3,0}, {14,16, 0,-1, 2,0,0},
    {15,7, -1,0, 1,1,2}, {15,9, 0,-1, 0,2,2},  {15,11, 0,-1, 0,2,0}, {15,15, 1,0, 3,1,0},
    {16,8, -1,0, 1,1,2}, {16,16, 1,0, 3,1,0},
};

const MonomialEntry kPrintedR11[] = {
    {1,1, 1,0, 2,2,0},   {1,2, 1,0, 2,0,-2},  {1,3, -1,0, 0,2,-2},
    {1,4, -1,0, 0,0,-4}, {1,6, 0,1, 1,1,-2},
    {2,2, 1,0, 4,0,0},   {2,4, -1,0, 2,0,-2}, {2,6, 0,1, 1,1,0},
    {3,3, 1,0, 0,4,0},   {3,4, 1,0, 0,2,-2},  {3,6, 0,-1, 1,1,0},
    {4,4, 1,0, 2,2,0},   {4,6, 0,-1, 1,1,2},
    {5,1, 0,1, 1,1,2},   {5,2, 0,1, 1,1,0},   {5,3, 0,-1, 1,1,0},
    {5,4, 0,-1, 1,1,-2}, {5,5, -1,0, 2,2,0},
    {6,6, -1,0, 2,2,0},
    {7,7, 1,0, 3,1,0},   {7,15, -1,0, 1,1,-2},
    {8,8, 1,0, 3,1,0},   {8,12, 0,1, 0,2,0},  {8,14, 0,1, 0,2,-2}, {8,16, -1,0, 1,1,-2},
    {9,7, 0,1, 2,0,0},   {9,9, -1,0, 1,3,0},  {9,11, -1,0, 1,1,-2}, {9,15, 0,-1, 2,0,-2},
    {10,10, -1,0, 2,2,0},
    {11,7, 0,1, 2,0,2},  {11,11, -1,0, 3,1,0}, {11,15, 0,-1, 2,0,0},
    {12,12, -1,0, 1,3,0}, {12,14, -1,0, 1,1,-2},
    {13,13, -1,0, 2,2,0},
    {14,14, -1,0, 3,1,0},
    {15,15, 1,0, 1,3,0},
    {16,12, 0,-1, 0,2,2}, {16,14, 0,-1, 0,2,0}, {16,16, 1,0, 1,3,0},
};

const MonomialEntry kPrintedR01[] = {
    {1,7, 1,0, 1,2,-1},  {1,9, 0,1, 0,3,-1},  {1,11, 0,1, 0,1,-3},
    {2,7, 1,0, 1,2,1},   {2,11, 0,1, 2,1,-1},
    {3,7, -1,0, 1,0,1},  {3,9, 0,-1, 0,3,1},  {3,11, 0,-1, 0,1,-1}, {3,15, 1,0, 3,0,-1},
    {4,7, -1,0, 1,0,3},  {4,11, 0,-1, 2,1,1}, {4,15, 1,0, 3,0,1},
    {5,9, -1,0, 1,2,1},  {5,11, -1,0, 1,2,-1},
    {6,7, 0,1, 2,1,1},   {6,15, 0,-1, 2,1,-1},
    {7,10, 0,1, 1,2,-1},
    {8,1, 1,0, 0,3,1},   {8,2, 1,0, 0,3,-1},  {8,5, 0,1, 1,2,-1},
    {9,10, -1,0, 2,1,-1},
    {11,10, -1,0, 2,1,1},
    {12,1, 0,1, 1,2,1},  {12,2, 0,1, 1,0,-1}, {12,3, 0,-1, 1,2,-1},
    {12,4, 0,-1, 1,0,-3}, {12,6, -1,0, 2,1,-1},
    {13,8, 0,1, 2,1,1},  {13,12, -1,0, 1,2,1}, {13,14, -1,0, 1,2,-1}, {13,16, 0,-1, 2,1,-1},
    {14,2, 0,1, 3,0,1},  {14,4, 0,-1, 3,0,-1}, {14,6, -1,0, 2,1,1},
    {15,10, 0,-1, 1,2,1},
    {16,1, -1,0, 0,1,3}, {16,2, -1,0, 0,1,1}, {16,3, 1,0, 2,1,1},
    {16,4, 1,0, 2,1,-1}, {16,5, 0,-1, 1,2,1},
};

const MonomialEntry kPrintedR10[] = {
    {1,8, 1,0, 3,0,-1},  {1,12, 0,1, 2,1,-1}, {1,16, -1,0, 1,0,-3},
    {2,8, 1,0, 3,0,1},   {2,12, 0,1, 0,1,1},  {2,14, 0,1, 0,3,-1}, {2,16, -1,0, 1,0,-1},
    {3,12, 0,-1, 2,1,1}, {3,16, 1,0, 1,2,-1},
    {4,12, 0,-1, 0,1,3}, {4,14, 0,-1, 0,3,1}, {4,16, 1,0, 1,2,1},
    {5,8, 0,1, 2,1,1},   {5,16, 0,-1, 2,1,-1},
    {6,12, -1,0, 1,2,1}, {6,14, -1,0, 1,2,-1},
    {7,1, 1,0, 2,1,1},   {7,2, 1,0, 2,1,-1},  {7,3, -1,0, 0,1,-1},
    {7,4, -1,0, 0,1,-3}, {7,6, 0,1, 1,2,-1},
    {8,13, 0,1, 1,2,-1},
    {9,1, 0,1, 3,0,1},   {9,3, 0,-1, 3,0,-1}, {9,5, -1,0, 2,1,-1},
    {10,7, 0,1, 2,1,1},  {10,9, -1,0, 1,2,1}, {10,11, -1,0, 1,2,-1}, {10,15, 0,-1, 2,1,-1},
    {11,1, 0,1, 1,0,3},  {11,2, 0,1, 1,2,1},  {11,3, 0,-1, 1,0,1},
    {11,4, 0,-1, 1,2,-1}, {11,5, -1,0, 2,1,1},
    {12,13, -1,0, 2,1,-1},
    {14,13, -1,0, 2,1,1},
    {15,3, 1,0, 0,3,1},  {15,4, 1,0, 0,3,-1}, {15,6, 0,-1, 1,2,1},
    {16,13, 0,-1, 1,2,1},
};
// clang-format on

Eigen::Matrix<Complex, 16, 16> assemble_printed(const MonomialEntry* first,
                                                std::size_t count, double u) {
    const Complex z = phase(u);
    const double c = std::cos(u), s = std::sin(u);
    Eigen::Matrix<Complex, 16, 16> m = Eigen::Matrix<Complex, 16, 16>::Zero();
    for (std::size_t i = 0; i < count; ++i) {
        const MonomialEntry& e = first[i];
        Complex value = Complex(e.re, e.im) * std::pow(c, e.pc) * std::pow(s, e.ps) *
                        std::pow(z, int(e.pz));
        m(e.row - 1, e.col - 1) = value;
    }
    return m;
}

}  // namespace

Eigen::Matrix<Complex, 16, 16> printed_column_matrix(int a, int b, double u) {
    if (a == 0 && b == 0)
        return assemble_printed(kPrintedR00, std::size(kPrintedR00), u);
    if (a == 1 && b == 1)
        return assemble_printed(kPrintedR11, std::size(kPrintedR11), u);
    if (a == 0 && b == 1)
        return assemble_printed(kPrintedR01, std::size(kPrintedR01), u);
    return assemble_printed(kPrintedR10, std::size(kPrintedR10), u);
}

double diff_against_matrix_file(const std::string& path, double u_ref) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix file: " + path);
    double worst = 0;
    std::string line;
    int ab = -1, row = 0;
    Eigen::Matrix<Complex, 16, 16> cur;
    auto compare_matrix = [&](int which) {
        int a = which / 2, b = which % 2;
        StripModel model = make_strip(2, 0);
        auto built = two_row_column_matrix(model, a, b, u_ref);
        worst = std::max(worst, (built - cur).cwiseAbs().maxCoeff());
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto pos = line.find("matrix");
            if (pos != std::string::npos) {
                if (ab >= 0) compare_matrix(ab);
                int a = line[line.find("a=") + 2] - '0';
                int b = line[line.find("b=") + 2] - '0';
                ab = a * 2 + b;
                row = 0;
            }
            continue;
        }
        std::istringstream ss(line);
        std::string tok;
        int col = 0;
        while (ss >> tok) {
            // "a+bi" / "a-bi"; the separating sign is the last one not part
            // of a float exponent
            std::size_t sep = std::string::npos;
            for (std::size_t i = tok.size() - 1; i > 0; --i) {
                char ch = tok[i];
                if ((ch == '+' || ch == '-') && tok[i - 1] != 'e' && tok[i - 1] != 'E') {
                    sep = i;
                    break;
                }
            }
            double re = std::stod(tok.substr(0, sep));
            double im = std::stod(tok.substr(sep, tok.size() - sep - 1));
            cur(row, col++) = Complex(re, im);
        }
        ++row;
    }
    if (ab >= 0) compare_matrix(ab);
    return worst;
}

void write_matrix_file(const std::string& path, double u_ref) {
    std::ofstream out(path);
    out.precision(17);
    out << "# Two-double-row column matrices at the reference spectral point u = "
        << u_ref << "\n";
    out << "# Basis: channel states (c,d,e,f), V6 block first; see transfer.hpp.\n";
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            out << "# matrix a=" << a << " b=" << b << "\n";
            auto m = printed_column_matrix(a, b, u_ref);
            for (int r = 0; r < 16; ++r) {
                for (int c = 0; c < 16; ++c) {
                    Complex v = m(r, c);
                    out << (c ? " " : "") << v.real() << (v.imag() < 0 ? "-" : "+")
                        << std::abs(v.imag()) << "i";
                }
                out << "\n";
            }
        }
}

double AppendixReport::max_residual() const {
    return std::max({printed_diff, block_structure, spectrum, delta_r_chain,
                     orthogonality, diagonal_element, off_diagonal});
}

AppendixReport appendix_a_suite(int n, double u) {
    if (n < 2 || n > 8) throw std::domain_error("appendix_a_suite: n must be in 2..8");
    StripModel model = make_strip(n, 0);
    AppendixReport rep;

    using M16 = Eigen::Matrix<Complex, 16, 16>;
    std::array<M16, 2> raa;  // R(a/a)
    for (int a = 0; a < 2; ++a) raa[a] = two_row_column_matrix(model, a, a, u);

    // (i) the constructive column matrices equal the printed arrays
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            auto built = two_row_column_matrix(model, a, b, u);
            auto printed = printed_column_matrix(a, b, u);
            rep.printed_diff =
                std::max(rep.printed_diff, (built - printed).cwiseAbs().maxCoeff());
        }

    // (ii) R(a/a) maps V6 -> V6 and V10 -> V10
    for (int a = 0; a < 2; ++a)
        for (int r = 0; r < 16; ++r)
            for (int c = 0; c < 16; ++c)
                if ((r < 6) != (c < 6))
                    rep.block_structure = std::max(rep.block_structure, std::abs(raa[a](r, c)));

    // (iii) spectrum of the V6 block of R(0/0)
    const double s = std::sin(u), c = std::cos(u);
    {
        Eigen::Matrix<Complex, 6, 6> block = raa[0].topLeftCorner<6, 6>();
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(block);
        std::vector<Complex> got(solver.eigenvalues().data(), solver.eigenvalues().data() + 6);
        std::vector<Complex> want = {s * s * s * s,  c * c * c * c,  s * s * c * c,
                                     s * s * c * c,  -s * s * c * c, -s * s * c * c};
        auto key = [](const Complex& z) { return std::make_pair(z.real(), z.imag()); };
        std::sort(got.begin(), got.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
        std::sort(want.begin(), want.end(), [&](auto& x, auto& y) { return key(x) < key(y); });
        for (int i = 0; i < 6; ++i)
            rep.spectrum = std::max(rep.spectrum, std::abs(got[i] - want[i]));
    }

    using V6 = Eigen::Matrix<Complex, 6, 1>;
    using M6 = Eigen::Matrix<Complex, 6, 6>;
    const Complex z = phase(u);
    const Complex z2 = z * z, z4 = z2 * z2;
    std::array<M6, 2> raa6;
    for (int a = 0; a < 2; ++a) raa6[a] = raa[a].topLeftCorner<6, 6>();
    M6 delta_r = (2.0 * z2 / (1.0 - z4)) * (raa6[0] - raa6[1]);
    V6 right6;
    right6 << 1, 1, 1, 1, 0, 0;
    Eigen::Matrix<Complex, 1, 6> left6;
    left6 << -1, 1, 1, -1, 0, 0;

    // (iv) Delta R chains: the product with any diagonal string lands on one
    // fixed vector, and <left| annihilates it. In the channel basis pinned
    // by the printed arrays the last component carries -i sin 2u; the
    // orthogonality, the string independence and the scalar factor are as
    // stated either way.
    {
        const double sc2 = -(s * s * c * c);
        const Complex cos2u = std::cos(2 * u), isin2u = Complex(0, 1) * std::sin(2 * u);
        V6 expected;
        expected << 1.0 / z2, cos2u, cos2u, z2, isin2u, -isin2u;
        for (std::uint32_t bits = 0; bits < (1u << (n - 1)); ++bits) {
            V6 v = delta_r * right6;
            for (int j = 0; j < n - 1; ++j) v = raa6[(bits >> j) & 1] * v;
            V6 want = std::pow(sc2, n - 1) * expected;
            rep.delta_r_chain = std::max(rep.delta_r_chain, (v - want).cwiseAbs().maxCoeff());
            rep.orthogonality = std::max(rep.orthogonality, std::abs((left6 * v)(0, 0)));
        }
    }

    // (v) diagonal elements are the same scalar for every diagonal state
    {
        const double want = -inversion_scalar_raw(model, u);
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            V6 v = right6;
            for (int j = n - 1; j >= 0; --j) v = raa6[(bits >> j) & 1] * v;
            Complex got = (left6 * v)(0, 0);
            rep.diagonal_element = std::max(rep.diagonal_element, std::abs(got - want));
        }
    }

    // (vi) off-diagonal elements of D(u)D(u+lambda) vanish
    if (n <= 6) {
        auto left16 = two_row_left_vector(model.x);
        auto right16 = two_row_right_vector();
        std::array<std::array<M16, 2>, 2> rall;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) rall[a][b] = two_row_column_matrix(model, a, b, u);
        for (std::uint32_t am = 0; am < (1u << n); ++am)
            for (std::uint32_t bm = 0; bm < (1u << n); ++bm) {
                if (am == bm) continue;
                Eigen::Matrix<Complex, 16, 1> v = right16;
                for (int j = n - 1; j >= 0; --j)
                    v = rall[(am >> j) & 1][(bm >> j) & 1] * v;
                rep.off_diagonal = std::max(rep.off_diagonal, std::abs((left16 * v)(0, 0)));
            }
    }
    return rep;
}

}  // namespace dimerstrip
