#include "cutstokes/interface_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cutstokes/quadrature.hpp"

namespace cutstokes {

namespace {

std::vector<double> snapped_vertex_values(const Mesh& mesh, const LevelSet& ls, double snap_rel) {
    const double snap = snap_rel * mesh.h;
    std::vector<double> phi(mesh.n_vertices());
    for (int v = 0; v < mesh.n_vertices(); ++v) {
        double p = ls(mesh.vertices[v]);
        phi[v] = (std::abs(p) < snap) ? snap : p; // push coincident vertices into subdomain 1
    }
    return phi;
}

// Parameter of the interface crossing on [a,b], or nullopt when the raw level
// set does not bracket a root (possible when an endpoint value was snapped).
std::optional<double> edge_root(const LevelSet& ls, const Vec2& a, const Vec2& b) {
    if (ls.edge_intersection) {
        if (auto t = ls.edge_intersection(a, b))
            return t;
        return std::nullopt;
    }
    double fa = ls(a), fb = ls(b);
    if (fa == 0.0)
        return 0.0;
    if (fb == 0.0)
        return 1.0;
    if (fa * fb > 0.0)
        return std::nullopt;
    double lo = 0.0, hi = 1.0;
    while (hi - lo > 1e-13) {
        double mid = 0.5 * (lo + hi);
        double fm = ls(a + mid * (b - a));
        if (fm == 0.0)
            return mid;
        if (fa * fm < 0.0)
            hi = mid;
        else {
            lo = mid;
            fa = fm;
        }
    }
    return 0.5 * (lo + hi);
}

// Crossing parameter for an edge whose *snapped* endpoint signs differ. Falls
// back to the endpoint closest to the interface when snapping removed the
// sign change of the raw values.
double snapped_edge_root(const LevelSet& ls, const Vec2& a, const Vec2& b) {
    if (auto t = edge_root(ls, a, b))
        return *t;
    return std::abs(ls(a)) <= std::abs(ls(b)) ? 0.0 : 1.0;
}

void dedup_ring(std::vector<Vec2>& poly, double tol) {
    std::vector<Vec2> out;
    for (const Vec2& p : poly) {
        if (out.empty() || (p - out.back()).norm() > tol)
            out.push_back(p);
    }
    while (out.size() > 1 && (out.front() - out.back()).norm() <= tol)
        out.pop_back();
    poly.swap(out);
}

// Build the cut data of element k from snapped vertex values; nullopt when
// the cut is degenerate (interface only touches the element boundary).
std::optional<CutElementData> try_cut_element(const Mesh& mesh, const LevelSet& ls,
                                              const std::vector<double>& phi, int k) {
    const auto& tri = mesh.triangles[k];
    const double point_tol = 1e-12 * mesh.h;

    CutElementData data;
    data.element = k;
    int n_points = 0;
    std::array<std::optional<Vec2>, 3> crossing; // crossing[j]: on the edge vertex j -> j+1

    for (int j = 0; j < 3; ++j) {
        const Vec2& pa = mesh.vertices[tri[j]];
        const Vec2& pb = mesh.vertices[tri[(j + 1) % 3]];
        if (phi[tri[j]] * phi[tri[(j + 1) % 3]] < 0.0) {
            double t = snapped_edge_root(ls, pa, pb);
            crossing[j] = pa + t * (pb - pa);
            if (n_points < 2)
                data.cut_points[n_points] = *crossing[j];
            ++n_points;
        }
    }
    if (n_points != 2)
        throw GeometryDegenerate("cut_element: element " + std::to_string(k) + " has " +
                                 std::to_string(n_points) + " crossed edges");

    for (int j = 0; j < 3; ++j) {
        int side = phi[tri[j]] > 0.0 ? 0 : 1;
        data.poly[side].push_back(mesh.vertices[tri[j]]);
        if (crossing[j]) {
            data.poly[0].push_back(*crossing[j]);
            data.poly[1].push_back(*crossing[j]);
        }
    }
    dedup_ring(data.poly[0], point_tol);
    dedup_ring(data.poly[1], point_tol);

    data.chord_length = (data.cut_points[1] - data.cut_points[0]).norm();
    const double area_tol = 1e-14 * mesh.triangle_area(k);
    for (int i = 0; i < 2; ++i)
        data.area[i] = data.poly[i].size() >= 3 ? polygon_area(data.poly[i]) : 0.0;
    if (data.chord_length <= point_tol || data.area[0] <= area_tol || data.area[1] <= area_tol)
        return std::nullopt;

    // Chord normal oriented from the subdomain-1 piece toward the subdomain-2
    // piece (phi decreases along it).
    Vec2 d = (data.cut_points[1] - data.cut_points[0]) / data.chord_length;
    Vec2 n(d.y(), -d.x());
    Vec2 c[2];
    for (int i = 0; i < 2; ++i) {
        c[i] = Vec2::Zero();
        for (const Vec2& p : data.poly[i])
            c[i] += p;
        c[i] /= static_cast<double>(data.poly[i].size());
    }
    if (n.dot(c[1] - c[0]) < 0.0)
        n = -n;
    data.normal = n;
    return data;
}

} // namespace

double InterfaceGeometry::side_area(const Mesh& mesh, int i, int k) const {
    if (location[k] == Location::Cut)
        return cut_of(k).area[i];
    return mesh.triangle_area(k);
}

std::vector<Vec2> InterfaceGeometry::side_polygon(const Mesh& mesh, int i, int k) const {
    if (location[k] == Location::Cut)
        return cut_of(k).poly[i];
    return {mesh.vertex(k, 0), mesh.vertex(k, 1), mesh.vertex(k, 2)};
}

CutElementData cut_element(const Mesh& mesh, const LevelSet& ls, int k) {
    auto phi = snapped_vertex_values(mesh, ls, 1e-12);
    auto data = try_cut_element(mesh, ls, phi, k);
    if (!data)
        throw GeometryDegenerate("cut_element: degenerate cut of element " + std::to_string(k));
    return *data;
}

InterfaceGeometry classify(const Mesh& mesh, const LevelSet& ls, const ClassifyOptions& opts) {
    InterfaceGeometry geo;
    geo.vertex_phi = snapped_vertex_values(mesh, ls, opts.vertex_snap_rel);
    geo.location.assign(mesh.n_triangles(), Location::Subdomain1);
    geo.cut_index.assign(mesh.n_triangles(), -1);

    // With an exact intersection routine available, probe every edge; the hook
    // raises AssumptionViolation on an open edge crossed twice.
    if (ls.edge_intersection) {
        for (int e = 0; e < mesh.n_edges(); ++e) {
            const Vec2& a = mesh.vertices[mesh.edges[e].v[0]];
            const Vec2& b = mesh.vertices[mesh.edges[e].v[1]];
            try {
                ls.edge_intersection(a, b);
            } catch (const AssumptionViolation&) {
                throw AssumptionViolation("edge " + std::to_string(e) + " from (" + std::to_string(a.x()) +
                                          "," + std::to_string(a.y()) + ") to (" + std::to_string(b.x()) +
                                          "," + std::to_string(b.y()) + ") is crossed twice by the interface");
            }
        }
    }

    for (int k = 0; k < mesh.n_triangles(); ++k) {
        const auto& tri = mesh.triangles[k];
        int n_pos = 0, n_neg = 0;
        for (int j = 0; j < 3; ++j)
            (geo.vertex_phi[tri[j]] > 0.0 ? n_pos : n_neg)++;
        if (n_neg == 0) {
            geo.location[k] = Location::Subdomain1;
        } else if (n_pos == 0) {
            geo.location[k] = Location::Subdomain2;
        } else if (auto data = try_cut_element(mesh, ls, geo.vertex_phi, k)) {
            geo.location[k] = Location::Cut;
            geo.cut_index[k] = static_cast<int>(geo.cut_data.size());
            geo.cut_data.push_back(std::move(*data));
        } else {
            // Interface only grazes the boundary of k; the piecewise-linear cut
            // is empty on one side. Assign the element to its majority side.
            geo.location[k] = (n_pos > n_neg) ? Location::Subdomain1 : Location::Subdomain2;
        }
    }

    for (int i = 0; i < 2; ++i)
        geo.in_subdomain[i].assign(mesh.n_triangles(), 0);
    for (int k = 0; k < mesh.n_triangles(); ++k) {
        if (geo.location[k] != Location::Subdomain2)
            geo.in_subdomain[0][k] = 1;
        if (geo.location[k] != Location::Subdomain1)
            geo.in_subdomain[1][k] = 1;
        for (int i = 0; i < 2; ++i)
            if (geo.in_subdomain[i][k])
                geo.subdomain_elements[i].push_back(k);
    }

    // Edge sets.
    const double prune = 1e-14 * mesh.h;
    for (int e = 0; e < mesh.n_edges(); ++e) {
        const Edge& edge = mesh.edges[e];
        const int va = edge.v[0], vb = edge.v[1];
        const Vec2& pa = mesh.vertices[va];
        const Vec2& pb = mesh.vertices[vb];
        const int kl = edge.tri[0], kr = edge.tri[1];
        const bool interior = kr >= 0;

        const int sign_a = geo.vertex_phi[va] > 0.0 ? 0 : 1;
        const int sign_b = geo.vertex_phi[vb] > 0.0 ? 0 : 1;
        const bool edge_uncut = (sign_a == sign_b);

        if (interior) {
            const bool both_cut =
                geo.location[kl] == Location::Cut && geo.location[kr] == Location::Cut;
            for (int i = 0; i < 2; ++i) {
                const bool both_in = geo.element_in(i, kl) && geo.element_in(i, kr);
                if (!both_in)
                    continue;
                if (geo.location[kl] == Location::Cut || geo.location[kr] == Location::Cut)
                    geo.f_gamma[i].push_back(e);
                // Edges between two cut elements are handled as (possibly full)
                // cut segments, never as uncut interior edges.
                if (edge_uncut && sign_a == i && !both_cut)
                    geo.f_nc[i].push_back(e);
            }
            if (both_cut) {
                Vec2 d = (pb - pa).normalized();
                Vec2 n(d.y(), -d.x());
                if (n.dot(mesh.triangle_centroid(kr) - mesh.triangle_centroid(kl)) < 0.0)
                    n = -n;
                auto push_segment = [&](int i, const Vec2& a, const Vec2& b) {
                    double len = (b - a).norm();
                    if (len > prune)
                        geo.f_cut[i].push_back({e, kl, kr, a, b, len, n});
                };
                if (edge_uncut) {
                    push_segment(sign_a, pa, pb);
                } else {
                    double t = snapped_edge_root(ls, pa, pb);
                    Vec2 mid = pa + t * (pb - pa);
                    push_segment(sign_a, pa, mid);
                    push_segment(sign_b, mid, pb);
                }
            }
        } else if (edge_uncut && geo.element_in(sign_a, kl)) {
            geo.f_nc[sign_a].push_back(e);
        }
    }

    geo.theta_max = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (const CutSegment& s : geo.f_cut[i]) {
            double denom = std::max(geo.side_area(mesh, i, s.tri_l), geo.side_area(mesh, i, s.tri_r));
            geo.theta_max = std::max(geo.theta_max, s.length * s.length / denom);
        }
    }

    if (opts.enforce_neighbor_assumption) {
        std::vector<std::vector<int>> elems_at_vertex(mesh.n_vertices());
        for (int k = 0; k < mesh.n_triangles(); ++k)
            for (int j = 0; j < 3; ++j)
                elems_at_vertex[mesh.triangles[k][j]].push_back(k);
        for (const CutElementData& cd : geo.cut_data) {
            for (int i = 0; i < 2; ++i) {
                bool found = false;
                for (int j = 0; j < 3 && !found; ++j)
                    for (int kk : elems_at_vertex[mesh.triangles[cd.element][j]])
                        if (geo.location[kk] == (i == 0 ? Location::Subdomain1 : Location::Subdomain2)) {
                            found = true;
                            break;
                        }
                if (!found)
                    throw AssumptionViolation("cut element " + std::to_string(cd.element) +
                                              " has no uncut neighbor in subdomain " + std::to_string(i + 1));
            }
        }
    }

    return geo;
}

} // namespace cutstokes
