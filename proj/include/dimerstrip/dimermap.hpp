#pragma once

#include <array>
#include <string>
#include <vector>

#include "dimerstrip/transfer.hpp"

namespace dimerstrip {

// The vertex <-> particle <-> dimer correspondence. Dimers live on the
// medial lattice: each face of the strip has four edge-midpoint sites
// (bottom, right, top, left), shared with its neighbours, and a dimer placed
// in a face covers two adjacent midpoints of that face. "Horizontal" dimers
// (weight zeta_h = rho cos u) are parallel to the main diagonal, covering
// (bottom,right) or (top,left); "vertical" dimers (zeta_v = rho sin u) cover
// (right,top) or (left,bottom).

enum class FaceType { a1, a2, b1, b2, c1, c2 };
enum class DimerPair { BR, RT, TL, LB };

const char* face_type_name(FaceType t);

// Classify a face by its edge occupations (left, bottom, right, top).
// Throws for a configuration outside the six-vertex set.
FaceType classify_face(FaceOrientation orientation, int l, int b, int r, int t);

struct DimerOption {
    std::vector<DimerPair> pairs;
    int h = 0, v = 0;  // weight = zeta_h^h * zeta_v^v
};

// Dimer options of one face type: a and b faces carry one single-dimer
// option, c1 two double-dimer options, c2 none (weight 1).
const std::vector<DimerOption>& dimer_rule(FaceOrientation orientation, FaceType type);

// Residual of c1 = zeta_h^2 + zeta_v^2 and c2 = 1 in the dimer gauge g = rho.
double check_weight_consistency(double u, double rho);

// One vertex configuration of a double row: per column the edge labels
// (l,b,r,t) of the blue (bottom) and pink (top) face, plus its weight in
// the transfer-matrix gauge.
struct DoubleRowConfig {
    std::vector<std::array<int, 4>> blue;
    std::vector<std::array<int, 4>> pink;
    Complex weight = 0;

    int c1_faces() const;
};

std::vector<DoubleRowConfig> enumerate_double_row_vertex_configs(
    const StripModel& model, double u, const OccupationState& b,
    const OccupationState& a);

struct EnumerationResult {
    Complex weighted_sum = 0;      // must equal D(u)_{b,a}
    long long vertex_configs = 0;
    long long dimer_count = 0;     // isotropic count, c1 faces expanded
    // sum over configs of prod_faces (sum of dimer option weights) at the
    // isotropic point; must equal dimer_count exactly
    double expansion_sum = 0;
};

EnumerationResult enumerate_double_row_configs(const StripModel& model, double u,
                                               const OccupationState& b,
                                               const OccupationState& a);

// One dimer configuration: the chosen option per face, row 0 = blue.
struct PlacedFace {
    int row = 0, col = 1;
    FaceOrientation orientation = FaceOrientation::blue;
    FaceType type = FaceType::a1;
    int option = 0;
};

struct DimerConfiguration {
    std::vector<PlacedFace> faces;
    double weight = 1.0;  // product of option weights at given (u, rho)

    // line-based text form, one face per token "row:col:type:option"
    std::string str() const;
};

// Cartesian product of the per-face options; cardinality 2^{#c1}.
std::vector<DimerConfiguration> map_vertex_to_dimers(const DoubleRowConfig& config,
                                                     double u, double rho);

// Medial-lattice site coordinates covered by an option of the face at
// (col, row), on the doubled integer grid: horizontal-edge midpoints at
// (2 col - 1, 2 row), vertical-edge midpoints at (2 col or 2 col - 2,
// 2 row + 1).
std::vector<std::array<int, 2>> option_sites(const PlacedFace& face);

// Check that a dimer configuration of a patch of `cols` columns and `rows`
// face rows covers every interior medial site exactly once. Interior sites
// are those not on the outer boundary of the patch (the boundary zigzags
// take care of those).
bool covering_valid(const std::vector<PlacedFace>& faces, int cols, int rows,
                    std::string* diagnostic = nullptr);

}  // namespace dimerstrip
