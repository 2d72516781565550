#include "dimerstrip/dimermap.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace dimerstrip {

const char* face_type_name(FaceType t) {
    switch (t) {
        case FaceType::a1: return "a1";
        case FaceType::a2: return "a2";
        case FaceType::b1: return "b1";
        case FaceType::b2: return "b2";
        case FaceType::c1: return "c1";
        case FaceType::c2: return "c2";
    }
    return "?";
}

// The dimer gauge alternates between the rows (g = rho on odd rows, 1/rho on
// even rows), so the two-dimer c1 face of an even (pink) row is the source
// face (0,0,1,1) rather than the sink (1,1,0,0); this is the unique
// assignment under which stacked rows tile the medial sites consistently.
FaceType classify_face(FaceOrientation orientation, int l, int b, int r, int t) {
    int code = l * 8 + b * 4 + r * 2 + t;
    switch (code) {
        case 0b0000: return FaceType::a1;
        case 0b1111: return FaceType::a2;
        case 0b0101: return FaceType::b1;
        case 0b1010: return FaceType::b2;
    }
    if (orientation == FaceOrientation::blue) {
        if (code == 0b1001) return FaceType::c1;
        if (code == 0b0110) return FaceType::c2;
    } else {
        if (code == 0b0011) return FaceType::c1;
        if (code == 0b1100) return FaceType::c2;
    }
    throw std::domain_error("classify_face: not a six-vertex face");
}

// Placement rule: the unique assignment (over all per-type choices of pairs
// within an orientation class) for which every enumerated strip
// configuration, with every c1 option choice, tiles the interior medial
// sites exactly once; the dimermap tests re-verify this on the enumerated
// strips. On odd (blue) rows horizontal dimers are parallel to the main
// diagonal, on even (pink) rows to the anti-diagonal, mirroring the up-right
// versus up-left particle flow.
const std::vector<DimerOption>& dimer_rule(FaceOrientation orientation, FaceType type) {
    using P = DimerPair;
    static const std::vector<DimerOption> none{};
    static const std::vector<DimerOption> blue_a1{{{P::BR}, 1, 0}};
    static const std::vector<DimerOption> blue_a2{{{P::TL}, 1, 0}};
    static const std::vector<DimerOption> blue_b1{{{P::RT}, 0, 1}};
    static const std::vector<DimerOption> blue_b2{{{P::LB}, 0, 1}};
    static const std::vector<DimerOption> blue_c1{{{P::BR, P::TL}, 2, 0},
                                                  {{P::RT, P::LB}, 0, 2}};
    static const std::vector<DimerOption> pink_a1{{{P::LB}, 1, 0}};
    static const std::vector<DimerOption> pink_a2{{{P::RT}, 1, 0}};
    static const std::vector<DimerOption> pink_b1{{{P::TL}, 0, 1}};
    static const std::vector<DimerOption> pink_b2{{{P::BR}, 0, 1}};
    static const std::vector<DimerOption> pink_c1{{{P::RT, P::LB}, 2, 0},
                                                  {{P::BR, P::TL}, 0, 2}};
    static const std::vector<DimerOption> c2_opts{};
    const bool blue = orientation == FaceOrientation::blue;
    switch (type) {
        case FaceType::a1: return blue ? blue_a1 : pink_a1;
        case FaceType::a2: return blue ? blue_a2 : pink_a2;
        case FaceType::b1: return blue ? blue_b1 : pink_b1;
        case FaceType::b2: return blue ? blue_b2 : pink_b2;
        case FaceType::c1: return blue ? blue_c1 : pink_c1;
        case FaceType::c2: return c2_opts;
    }
    return none;
}

double check_weight_consistency(double u, double rho) {
    double zh = rho * std::cos(u), zv = rho * std::sin(u);
    // dimer gauge g = rho: c1 = rho g = rho^2, c2 = rho / g = 1
    double c1 = rho * rho, c2 = 1.0;
    double r1 = std::abs(c1 - (zh * zh + zv * zv));
    double r2 = std::abs(c2 - 1.0);
    return std::max(r1, r2);
}

int DoubleRowConfig::c1_faces() const {
    int n = 0;
    for (const auto& f : blue)
        if (classify_face(FaceOrientation::blue, f[0], f[1], f[2], f[3]) == FaceType::c1)
            ++n;
    for (const auto& f : pink)
        if (classify_face(FaceOrientation::pink, f[0], f[1], f[2], f[3]) == FaceType::c1)
            ++n;
    return n;
}

std::vector<DoubleRowConfig> enumerate_double_row_vertex_configs(
    const StripModel& model, double u, const OccupationState& b,
    const OccupationState& a) {
    const int nn = model.big_n();
    if (model.n > 6)
        throw std::domain_error("enumerate_double_row_vertex_configs: N <= 6 only");
    std::vector<DoubleRowConfig> out;
    DoubleRowConfig cur;
    cur.blue.resize(nn);
    cur.pink.resize(nn);

    auto face_tables = [&](int j) {
        double ub = u, ut = u;
        if (model.w == 1 && j == nn) { ub = u - model.xi; ut = u + model.xi; }
        return std::pair{make_face_weights(model.lambda, ub, std::polar(1.0, ub),
                                           FaceOrientation::blue, model.rho),
                         make_face_weights(model.lambda, ut, std::polar(1.0, ut),
                                           FaceOrientation::pink, model.rho)};
    };

    // Walk the columns left to right over channel pairs (f, e) and internal
    // vertical edges m; boundary triangles pin (f0, e0) and (fN, eN).
    auto rec = [&](auto&& self, int j, int f, int e, Complex weight) -> void {
        if (j > nn) {
            if (f == e) {
                cur.weight = weight;  // right triangle weight 1 on f = e
                out.push_back(cur);
            }
            return;
        }
        auto [blue, pink] = face_tables(j);
        for (int m = 0; m < 2; ++m)
            for (int fp = 0; fp < 2; ++fp)
                for (int ep = 0; ep < 2; ++ep) {
                    Complex wb = blue.weight(f, b.bit(j), fp, m);
                    if (wb == Complex(0, 0)) continue;
                    Complex wp = pink.weight(e, m, ep, a.bit(j));
                    if (wp == Complex(0, 0)) continue;
                    cur.blue[j - 1] = {f, b.bit(j), fp, m};
                    cur.pink[j - 1] = {e, m, ep, a.bit(j)};
                    self(self, j + 1, fp, ep, weight * wb * wp);
                }
    };
    for (int f0 = 0; f0 < 2; ++f0) {
        Complex left_weight = std::pow(model.x, 1 - 2 * f0);
        rec(rec, 1, f0, f0, left_weight);
    }
    return out;
}

EnumerationResult enumerate_double_row_configs(const StripModel& model, double u,
                                               const OccupationState& b,
                                               const OccupationState& a) {
    EnumerationResult res;
    auto configs = enumerate_double_row_vertex_configs(model, u, b, a);
    res.vertex_configs = (long long)configs.size();
    for (const auto& cfg : configs) res.weighted_sum += cfg.weight;

    // Isotropic count: u = pi/4, rho = sqrt(2), dimer gauge; each c1 face
    // contributes its two options, everything else weight 1.
    StripModel iso = model;
    iso.rho = std::sqrt(2.0);
    auto iso_configs = enumerate_double_row_vertex_configs(iso, M_PI / 4, b, a);
    for (const auto& cfg : iso_configs) {
        res.dimer_count += 1LL << cfg.c1_faces();
        double prod = 1.0;
        const double zh = iso.rho * std::cos(M_PI / 4), zv = iso.rho * std::sin(M_PI / 4);
        auto option_sum = [&](FaceOrientation o, const std::array<int, 4>& fc) {
            FaceType t = classify_face(o, fc[0], fc[1], fc[2], fc[3]);
            const auto& opts = dimer_rule(o, t);
            if (opts.empty()) return 1.0;  // c2
            double s = 0;
            for (const auto& opt : opts)
                s += std::pow(zh, opt.h) * std::pow(zv, opt.v);
            return s;
        };
        for (const auto& fc : cfg.blue) prod *= option_sum(FaceOrientation::blue, fc);
        for (const auto& fc : cfg.pink) prod *= option_sum(FaceOrientation::pink, fc);
        res.expansion_sum += prod;
    }
    return res;
}

std::string DimerConfiguration::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& f : faces) {
        if (!first) os << " ";
        first = false;
        os << f.row << ":" << f.col << ":" << face_type_name(f.type) << ":" << f.option;
    }
    return os.str();
}

std::vector<DimerConfiguration> map_vertex_to_dimers(const DoubleRowConfig& config,
                                                     double u, double rho) {
    const double zh = rho * std::cos(u), zv = rho * std::sin(u);
    std::vector<PlacedFace> faces;
    for (std::size_t j = 0; j < config.blue.size(); ++j) {
        const auto& fb = config.blue[j];
        faces.push_back({0, int(j + 1), FaceOrientation::blue,
                         classify_face(FaceOrientation::blue, fb[0], fb[1], fb[2], fb[3]),
                         0});
        const auto& fp = config.pink[j];
        faces.push_back({1, int(j + 1), FaceOrientation::pink,
                         classify_face(FaceOrientation::pink, fp[0], fp[1], fp[2], fp[3]),
                         0});
    }
    std::vector<DimerConfiguration> out;
    DimerConfiguration cur;
    cur.faces = faces;
    auto rec = [&](auto&& self, std::size_t idx, double weight) -> void {
        if (idx == faces.size()) {
            cur.weight = weight;
            out.push_back(cur);
            return;
        }
        const auto& opts = dimer_rule(cur.faces[idx].orientation, cur.faces[idx].type);
        if (opts.empty()) {
            cur.faces[idx].option = 0;
            self(self, idx + 1, weight);
            return;
        }
        for (std::size_t k = 0; k < opts.size(); ++k) {
            cur.faces[idx].option = int(k);
            self(self, idx + 1,
                 weight * std::pow(zh, opts[k].h) * std::pow(zv, opts[k].v));
        }
    };
    rec(rec, 0, 1.0);
    return out;
}

std::vector<std::array<int, 2>> option_sites(const PlacedFace& face) {
    const int cx = 2 * face.col - 1, cy = 2 * face.row + 1;  // face center
    auto site = [&](DimerPair p) -> std::array<std::array<int, 2>, 2> {
        switch (p) {
            case DimerPair::BR: return {{{cx, cy - 1}, {cx + 1, cy}}};
            case DimerPair::RT: return {{{cx + 1, cy}, {cx, cy + 1}}};
            case DimerPair::TL: return {{{cx, cy + 1}, {cx - 1, cy}}};
            default: return {{{cx - 1, cy}, {cx, cy - 1}}};  // LB
        }
    };
    std::vector<std::array<int, 2>> sites;
    const auto& opts = dimer_rule(face.orientation, face.type);
    if (opts.empty()) return sites;
    for (DimerPair p : opts[face.option].pairs) {
        auto s = site(p);
        sites.push_back(s[0]);
        sites.push_back(s[1]);
    }
    return sites;
}

bool covering_valid(const std::vector<PlacedFace>& faces, int cols, int rows,
                    std::string* diagnostic) {
    std::map<std::array<int, 2>, int> cover;
    for (const auto& f : faces)
        for (const auto& s : option_sites(f)) cover[s] += 1;
    // Interior sites: horizontal-edge midpoints strictly between the face
    // rows, vertical-edge midpoints strictly inside the columns.
    for (int r = 1; r < rows; ++r)
        for (int c = 1; c <= cols; ++c) {
            std::array<int, 2> s{2 * c - 1, 2 * r};
            if (cover[s] != 1) {
                if (diagnostic) {
                    std::ostringstream os;
                    os << "horizontal site (" << c << "," << r << ") covered "
                       << cover[s] << " times";
                    *diagnostic = os.str();
                }
                return false;
            }
        }
    for (int r = 0; r < rows; ++r)
        for (int c = 1; c < cols; ++c) {
            std::array<int, 2> s{2 * c, 2 * r + 1};
            if (cover[s] != 1) {
                if (diagnostic) {
                    std::ostringstream os;
                    os << "vertical site (" << c << "," << r << ") covered "
                       << cover[s] << " times";
                    *diagnostic = os.str();
                }
                return false;
            }
        }
    return true;
}

}  // namespace dimerstrip
