#pragma once

#include <array>
#include <vector>

#include "cutstokes/types.hpp"

namespace cutstokes {

struct Rect {
    double xmin = -1.0, ymin = -1.0, xmax = 1.0, ymax = 1.0;
    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
};

// Edge between two mesh vertices, v[0] < v[1]. Interior edges have two
// adjacent triangles, boundary edges one (tri[1] = -1).
struct Edge {
    std::array<int, 2> v{-1, -1};
    std::array<int, 2> tri{-1, -1};
};

// Conforming triangulation of a rectangle. Local edge m of a triangle is the
// edge opposite local vertex m, i.e. it connects vertices (m+1)%3 and (m+2)%3.
struct Mesh {
    std::vector<Vec2> vertices;
    std::vector<std::array<int, 3>> triangles; // counterclockwise
    std::vector<Edge> edges;                   // lexicographic by sorted vertex pair
    std::vector<std::array<int, 3>> triangle_to_edges;
    std::vector<std::array<bool, 3>> triangle_edge_forward; // local traversal matches v[0]->v[1]
    std::vector<bool> boundary_edge_flags;
    double h = 0.0; // max triangle diameter

    Rect domain;
    int nx = 0, ny = 0; // grid cells per direction (structured meshes only)

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_triangles() const { return static_cast<int>(triangles.size()); }
    int n_edges() const { return static_cast<int>(edges.size()); }

    const Vec2& vertex(int k, int local) const { return vertices[triangles[k][local]]; }
    double triangle_area(int k) const;
    Vec2 triangle_centroid(int k) const;
    // Endpoints of local edge m of triangle k, in local traversal order.
    std::pair<Vec2, Vec2> local_edge_points(int k, int m) const;
    double edge_length(int e) const { return (vertices[edges[e].v[1]] - vertices[edges[e].v[0]]).norm(); }
};

// Derive edge tables, adjacency, boundary flags and h from vertices+triangles.
void build_edge_tables(Mesh& mesh);

// Uniform grid of squares, each split bottom-left to top-right; n subdivisions
// along the shortest side. Throws std::invalid_argument for n = 0 or a
// degenerate rectangle.
Mesh build_structured_mesh(const Rect& domain, int n);

} // namespace cutstokes
