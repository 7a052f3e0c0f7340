#include "cutstokes/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cutstokes {

double Mesh::triangle_area(int k) const {
    const Vec2& a = vertex(k, 0);
    const Vec2& b = vertex(k, 1);
    const Vec2& c = vertex(k, 2);
    return 0.5 * ((b.x() - a.x()) * (c.y() - a.y()) - (b.y() - a.y()) * (c.x() - a.x()));
}

Vec2 Mesh::triangle_centroid(int k) const {
    return (vertex(k, 0) + vertex(k, 1) + vertex(k, 2)) / 3.0;
}

std::pair<Vec2, Vec2> Mesh::local_edge_points(int k, int m) const {
    return {vertex(k, (m + 1) % 3), vertex(k, (m + 2) % 3)};
}

void build_edge_tables(Mesh& mesh) {
    // Collect unique vertex pairs, then index them lexicographically so that
    // assembly traversal order is independent of triangle order.
    std::map<std::pair<int, int>, int> index_of;
    for (const auto& t : mesh.triangles) {
        for (int m = 0; m < 3; ++m) {
            int a = t[(m + 1) % 3], b = t[(m + 2) % 3];
            index_of.emplace(std::minmax(a, b), -1);
        }
    }
    mesh.edges.assign(index_of.size(), Edge{});
    int next = 0;
    for (auto& [key, id] : index_of) {
        id = next;
        mesh.edges[next].v = {key.first, key.second};
        ++next;
    }

    mesh.triangle_to_edges.assign(mesh.triangles.size(), {-1, -1, -1});
    mesh.triangle_edge_forward.assign(mesh.triangles.size(), {false, false, false});
    for (int k = 0; k < mesh.n_triangles(); ++k) {
        const auto& t = mesh.triangles[k];
        for (int m = 0; m < 3; ++m) {
            int a = t[(m + 1) % 3], b = t[(m + 2) % 3];
            int e = index_of.at(std::minmax(a, b));
            mesh.triangle_to_edges[k][m] = e;
            mesh.triangle_edge_forward[k][m] = (a < b);
            Edge& edge = mesh.edges[e];
            if (edge.tri[0] < 0)
                edge.tri[0] = k;
            else if (edge.tri[1] < 0)
                edge.tri[1] = k;
            else
                throw std::invalid_argument("build_edge_tables: edge shared by more than two triangles");
        }
    }

    mesh.boundary_edge_flags.assign(mesh.edges.size(), false);
    for (int e = 0; e < mesh.n_edges(); ++e)
        mesh.boundary_edge_flags[e] = (mesh.edges[e].tri[1] < 0);

    mesh.h = 0.0;
    for (int k = 0; k < mesh.n_triangles(); ++k) {
        for (int m = 0; m < 3; ++m) {
            auto [p, q] = mesh.local_edge_points(k, m);
            mesh.h = std::max(mesh.h, (q - p).norm());
        }
        if (mesh.triangle_area(k) <= 0.0)
            throw std::invalid_argument("build_edge_tables: triangle with non-positive area");
    }
}

Mesh build_structured_mesh(const Rect& domain, int n) {
    if (n < 1)
        throw std::invalid_argument("build_structured_mesh: n must be >= 1");
    if (!(domain.width() > 0.0) || !(domain.height() > 0.0))
        throw std::invalid_argument("build_structured_mesh: degenerate rectangle");

    const double cell = std::min(domain.width(), domain.height()) / n;
    const int nx = std::max(1, static_cast<int>(std::lround(domain.width() / cell)));
    const int ny = std::max(1, static_cast<int>(std::lround(domain.height() / cell)));

    Mesh mesh;
    mesh.domain = domain;
    mesh.nx = nx;
    mesh.ny = ny;
    mesh.vertices.reserve((nx + 1) * (ny + 1));
    for (int j = 0; j <= ny; ++j) {
        for (int i = 0; i <= nx; ++i) {
            double x = domain.xmin + domain.width() * (static_cast<double>(i) / nx);
            double y = domain.ymin + domain.height() * (static_cast<double>(j) / ny);
            mesh.vertices.emplace_back(x, y);
        }
    }

    auto vid = [nx](int i, int j) { return j * (nx + 1) + i; };
    mesh.triangles.reserve(2 * nx * ny);
    for (int j = 0; j < ny; ++j) {
        for (int i = 0; i < nx; ++i) {
            int v00 = vid(i, j), v10 = vid(i + 1, j);
            int v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11}); // below the diagonal
            mesh.triangles.push_back({v00, v11, v01}); // above the diagonal
        }
    }

    build_edge_tables(mesh);
    return mesh;
}

} // namespace cutstokes
