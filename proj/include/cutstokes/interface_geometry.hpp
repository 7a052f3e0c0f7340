#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cutstokes/level_set.hpp"
#include "cutstokes/mesh.hpp"
#include "cutstokes/types.hpp"

namespace cutstokes {

enum class Location { Subdomain1, Subdomain2, Cut };

// Geometry of one cut element: the two boundary intersection points, the
// straight interface chord between them, and the sub-polygons K∩Ω_1, K∩Ω_2.
struct CutElementData {
    int element = -1;
    std::array<Vec2, 2> cut_points{};
    Vec2 normal = Vec2::Zero(); // unit normal of the chord, subdomain 1 -> 2
    double chord_length = 0.0;
    std::array<std::vector<Vec2>, 2> poly; // CCW, 3 or 4 vertices each
    std::array<double, 2> area{0.0, 0.0};
};

// Piece of a mesh edge lying inside one subdomain; both adjacent elements are
// cut. normal points from tri_l to tri_r.
struct CutSegment {
    int edge = -1;
    int tri_l = -1, tri_r = -1;
    Vec2 a, b;
    double length = 0.0;
    Vec2 normal;
};

struct InterfaceGeometry {
    std::vector<double> vertex_phi; // snapped values
    std::vector<Location> location;
    std::vector<int> cut_index; // element -> index into cut_data, -1 if uncut
    std::vector<CutElementData> cut_data;

    std::array<std::vector<int>, 2> subdomain_elements; // T_{h,i}, ascending
    std::array<std::vector<char>, 2> in_subdomain;

    std::array<std::vector<CutSegment>, 2> f_cut; // edge pieces between two cut elements
    std::array<std::vector<int>, 2> f_gamma;      // full edges near the interface (stabilized)
    std::array<std::vector<int>, 2> f_nc;         // uncut subdomain edges + boundary edges

    // max over cut segments of |seg|^2 / max(|K_l ∩ Ω_i|, |K_r ∩ Ω_i|);
    // finite by the mesh-resolution assumptions, reported for diagnostics.
    double theta_max = 0.0;

    int n_cut() const { return static_cast<int>(cut_data.size()); }
    bool element_in(int i, int k) const { return in_subdomain[i][k] != 0; }
    const CutElementData& cut_of(int k) const { return cut_data[cut_index[k]]; }

    // Area / polygon of K ∩ Ω_i; element k must belong to subdomain i.
    double side_area(const Mesh& mesh, int i, int k) const;
    std::vector<Vec2> side_polygon(const Mesh& mesh, int i, int k) const;
};

struct ClassifyOptions {
    double vertex_snap_rel = 1e-12;          // snap |phi| below this times h
    bool enforce_neighbor_assumption = true; // (A2)-style neighbor check
};

// Classify all elements and edges against the level set. Throws
// AssumptionViolation when the interface is not resolved by the mesh.
InterfaceGeometry classify(const Mesh& mesh, const LevelSet& ls, const ClassifyOptions& opts = {});

// Cut geometry of a single element with mixed vertex signs. Throws
// GeometryDegenerate when no proper two-point cut exists (e.g. the interface
// only touches a vertex).
CutElementData cut_element(const Mesh& mesh, const LevelSet& ls, int k);

} // namespace cutstokes
