#include "cutstokes/assembly.hpp"

#include <algorithm>

#include "cutstokes/quadrature.hpp"

namespace cutstokes {

namespace {

constexpr int kVolumeDegree = 4;
constexpr int kSegmentDegree = 3;

// One velocity trial/test slot on an interface chord or cut segment: global
// dof (component 0), owning element, local edge and jump sign.
struct CouplingSlot {
    int dof;
    int element;
    int local_edge;
    double jump_sign;
};

// Emit the (a,b) contribution of a symmetric local form; distinct local
// slots contribute to both (a,b) and (b,a), even when they alias the same
// global dof (shared edge of two coupled elements).
void add_pair(std::vector<Triplet>& out, int a, int b, double v, bool distinct_slots) {
    out.emplace_back(a, b, v);
    if (distinct_slots)
        out.emplace_back(b, a, v);
}

} // namespace

SparseMat from_triplets_stable(int rows, int cols, std::vector<Triplet>& triplets) {
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& x, const Triplet& y) {
        return x.col() != y.col() ? x.col() < y.col() : x.row() < y.row();
    });
    std::vector<Triplet> unique;
    unique.reserve(triplets.size());
    for (const Triplet& t : triplets) {
        if (!unique.empty() && unique.back().row() == t.row() && unique.back().col() == t.col())
            unique.back() = Triplet(t.row(), t.col(), unique.back().value() + t.value());
        else
            unique.push_back(t);
    }
    SparseMat m(rows, cols);
    m.setFromTriplets(unique.begin(), unique.end());
    m.makeCompressed();
    return m;
}

SparseMat assemble_a_h(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params) {
    std::vector<Triplet> trip;

    // Viscous volume terms on K ∩ Ω_i; gradients are constant per element.
    for (int i = 0; i < 2; ++i) {
        for (int k : geo.subdomain_elements[i]) {
            const double area = geo.side_area(mesh, i, k);
            const CrBasis basis = cr_basis(mesh, k, mesh.triangle_centroid(k));
            for (int m = 0; m < 3; ++m) {
                for (int l = m; l < 3; ++l) {
                    const double v = params.mu(i) * area * basis.grad[m].dot(basis.grad[l]);
                    for (int c = 0; c < 2; ++c) {
                        int a = dofs.vdof(i, mesh.triangle_to_edges[k][m], c);
                        int b = dofs.vdof(i, mesh.triangle_to_edges[k][l], c);
                        add_pair(trip, a, b, v, l != m);
                    }
                }
            }
        }
    }

    // Nitsche terms on the interface chords: consistency, symmetry and penalty,
    // with harmonic-weighted fluxes and the penalty gamma0*{mu}_w/h.
    const double penalty_gamma = params.gamma0 * params.mu_harm() / mesh.h;
    for (const CutElementData& cd : geo.cut_data) {
        const int k = cd.element;
        QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], kSegmentDegree);
        std::array<CouplingSlot, 6> slot;
        std::array<double, 6> flux; // {mu grad(phi).n}_w coefficient, constant on K
        const CrBasis basis = cr_basis(mesh, k, mesh.triangle_centroid(k));
        for (int i = 0; i < 2; ++i) {
            for (int m = 0; m < 3; ++m) {
                slot[3 * i + m] = {dofs.vdof(i, mesh.triangle_to_edges[k][m], 0), k, m, i == 0 ? 1.0 : -1.0};
                flux[3 * i + m] = params.w(i) * params.mu(i) * basis.grad[m].dot(cd.normal);
            }
        }
        for (int q = 0; q < rule.size(); ++q) {
            const CrBasis at = cr_basis(mesh, k, rule.points[q]);
            std::array<double, 6> jump;
            for (int s = 0; s < 6; ++s)
                jump[s] = slot[s].jump_sign * at.value[slot[s].local_edge];
            for (int a = 0; a < 6; ++a) {
                for (int b = a; b < 6; ++b) {
                    const double v =
                        rule.weights[q] *
                        (-(flux[a] * jump[b] + flux[b] * jump[a]) + penalty_gamma * jump[a] * jump[b]);
                    for (int c = 0; c < 2; ++c)
                        add_pair(trip, slot[a].dof + c, slot[b].dof + c, v, b != a);
                }
            }
        }
    }

    // Cut-segment terms: arithmetic-average fluxes and |e~|^{-1} penalties.
    for (int i = 0; i < 2; ++i) {
        const double mu = params.mu(i);
        for (const CutSegment& seg : geo.f_cut[i]) {
            QuadratureRule rule = segment_rule(seg.a, seg.b, kSegmentDegree);
            const double penalty = params.gamma_cut(i) * mu / seg.length;
            std::array<CouplingSlot, 6> slot;
            std::array<double, 6> flux;
            const std::array<int, 2> elems{seg.tri_l, seg.tri_r};
            for (int s = 0; s < 2; ++s) {
                const CrBasis basis = cr_basis(mesh, elems[s], mesh.triangle_centroid(elems[s]));
                for (int m = 0; m < 3; ++m) {
                    slot[3 * s + m] = {dofs.vdof(i, mesh.triangle_to_edges[elems[s]][m], 0), elems[s], m,
                                       s == 0 ? 1.0 : -1.0};
                    flux[3 * s + m] = 0.5 * mu * basis.grad[m].dot(seg.normal);
                }
            }
            for (int q = 0; q < rule.size(); ++q) {
                const std::array<CrBasis, 2> at{cr_basis(mesh, seg.tri_l, rule.points[q]),
                                                cr_basis(mesh, seg.tri_r, rule.points[q])};
                std::array<double, 6> jump;
                for (int s = 0; s < 6; ++s)
                    jump[s] = slot[s].jump_sign * at[s / 3].value[slot[s].local_edge];
                for (int a = 0; a < 6; ++a) {
                    for (int b = a; b < 6; ++b) {
                        const double v =
                            rule.weights[q] *
                            (-(flux[a] * jump[b] + flux[b] * jump[a]) + penalty * jump[a] * jump[b]);
                        for (int c = 0; c < 2; ++c)
                            add_pair(trip, slot[a].dof + c, slot[b].dof + c, v, b != a);
                    }
                }
            }
        }
    }

    return from_triplets_stable(dofs.n_u, dofs.n_u, trip);
}

SparseMat assemble_J_u(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params) {
    std::vector<Triplet> trip;

    // |e| mu_i int_e [grad u]:[grad v] on full edges near the interface;
    // integrands are constant, so each term is |e|^2 mu_i times the jump dot.
    for (int i = 0; i < 2; ++i) {
        const double mu = params.mu(i);
        for (int e : geo.f_gamma[i]) {
            const Edge& edge = mesh.edges[e];
            const double len = mesh.edge_length(e);
            const double scale = mu * len * len;
            std::array<Vec2, 6> djump;
            std::array<int, 6> dof;
            for (int s = 0; s < 2; ++s) {
                const int k = edge.tri[s];
                const CrBasis basis = cr_basis(mesh, k, mesh.triangle_centroid(k));
                for (int m = 0; m < 3; ++m) {
                    dof[3 * s + m] = dofs.vdof(i, mesh.triangle_to_edges[k][m], 0);
                    djump[3 * s + m] = (s == 0 ? 1.0 : -1.0) * basis.grad[m];
                }
            }
            for (int a = 0; a < 6; ++a)
                for (int b = a; b < 6; ++b) {
                    const double v = scale * djump[a].dot(djump[b]);
                    for (int c = 0; c < 2; ++c)
                        add_pair(trip, dof[a] + c, dof[b] + c, v, b != a);
                }
        }

        // |e~| mu_i int_e~ [grad u . n][grad v . n] on cut segments.
        for (const CutSegment& seg : geo.f_cut[i]) {
            const double scale = mu * seg.length * seg.length;
            std::array<double, 6> njump;
            std::array<int, 6> dof;
            const std::array<int, 2> elems{seg.tri_l, seg.tri_r};
            for (int s = 0; s < 2; ++s) {
                const CrBasis basis = cr_basis(mesh, elems[s], mesh.triangle_centroid(elems[s]));
                for (int m = 0; m < 3; ++m) {
                    dof[3 * s + m] = dofs.vdof(i, mesh.triangle_to_edges[elems[s]][m], 0);
                    njump[3 * s + m] = (s == 0 ? 1.0 : -1.0) * basis.grad[m].dot(seg.normal);
                }
            }
            for (int a = 0; a < 6; ++a)
                for (int b = a; b < 6; ++b) {
                    const double v = scale * njump[a] * njump[b];
                    for (int c = 0; c < 2; ++c)
                        add_pair(trip, dof[a] + c, dof[b] + c, v, b != a);
                }
        }
    }

    return from_triplets_stable(dofs.n_u, dofs.n_u, trip);
}

SparseMat assemble_b_h(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params) {
    std::vector<Triplet> trip;

    // -int_{K ∩ Ω_i} p div v
    for (int i = 0; i < 2; ++i) {
        for (int k : geo.subdomain_elements[i]) {
            const double area = geo.side_area(mesh, i, k);
            const CrBasis basis = cr_basis(mesh, k, mesh.triangle_centroid(k));
            const int row = dofs.pdof(i, k);
            for (int m = 0; m < 3; ++m)
                for (int c = 0; c < 2; ++c)
                    trip.emplace_back(row, dofs.vdof(i, mesh.triangle_to_edges[k][m], c),
                                      -area * basis.grad[m][c]);
        }
    }

    // +int_e~ {p}_k [v . n_e~] on cut segments
    for (int i = 0; i < 2; ++i) {
        for (const CutSegment& seg : geo.f_cut[i]) {
            QuadratureRule rule = segment_rule(seg.a, seg.b, kSegmentDegree);
            const std::array<int, 2> elems{seg.tri_l, seg.tri_r};
            for (int q = 0; q < rule.size(); ++q) {
                for (int sp = 0; sp < 2; ++sp) {
                    const int row = dofs.pdof(i, elems[sp]);
                    for (int sv = 0; sv < 2; ++sv) {
                        const CrBasis at = cr_basis(mesh, elems[sv], rule.points[q]);
                        const double sign = (sv == 0 ? 1.0 : -1.0);
                        for (int m = 0; m < 3; ++m)
                            for (int c = 0; c < 2; ++c)
                                trip.emplace_back(row, dofs.vdof(i, mesh.triangle_to_edges[elems[sv]][m], c),
                                                  rule.weights[q] * 0.5 * sign * at.value[m] * seg.normal[c]);
                    }
                }
            }
        }
    }

    // +int_{Γ_K} {p}_w [v . n] on interface chords
    for (const CutElementData& cd : geo.cut_data) {
        const int k = cd.element;
        QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], kSegmentDegree);
        for (int q = 0; q < rule.size(); ++q) {
            const CrBasis at = cr_basis(mesh, k, rule.points[q]);
            for (int sp = 0; sp < 2; ++sp) {
                const int row = dofs.pdof(sp, k);
                for (int sv = 0; sv < 2; ++sv) {
                    const double sign = (sv == 0 ? 1.0 : -1.0);
                    for (int m = 0; m < 3; ++m)
                        for (int c = 0; c < 2; ++c)
                            trip.emplace_back(row, dofs.vdof(sv, mesh.triangle_to_edges[k][m], c),
                                              rule.weights[q] * params.w(sp) * sign * at.value[m] *
                                                  cd.normal[c]);
                }
            }
        }
    }

    return from_triplets_stable(dofs.n_p, dofs.n_u, trip);
}

SparseMat assemble_J_p(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params) {
    std::vector<Triplet> trip;
    for (int i = 0; i < 2; ++i) {
        const double inv_mu = 1.0 / params.mu(i);
        for (int e : geo.f_gamma[i]) {
            const Edge& edge = mesh.edges[e];
            const double len = mesh.edge_length(e);
            const double scale = inv_mu * len * len;
            const int pl = dofs.pdof(i, edge.tri[0]);
            const int pr = dofs.pdof(i, edge.tri[1]);
            add_pair(trip, pl, pl, scale, false);
            add_pair(trip, pr, pr, scale, false);
            add_pair(trip, pl, pr, -scale, true);
        }
        for (const CutSegment& seg : geo.f_cut[i]) {
            const double scale = inv_mu * seg.length * seg.length;
            const int pl = dofs.pdof(i, seg.tri_l);
            const int pr = dofs.pdof(i, seg.tri_r);
            add_pair(trip, pl, pl, scale, false);
            add_pair(trip, pr, pr, scale, false);
            add_pair(trip, pl, pr, -scale, true);
        }
    }
    return from_triplets_stable(dofs.n_p, dofs.n_p, trip);
}

Eigen::VectorXd assemble_rhs(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                             const PhysicalParams& params) {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dofs.n_u);

    if (params.body_force) {
        for (int i = 0; i < 2; ++i) {
            for (int k : geo.subdomain_elements[i]) {
                QuadratureRule rule = polygon_rule(geo.side_polygon(mesh, i, k), kVolumeDegree);
                for (int q = 0; q < rule.size(); ++q) {
                    const Vec2 f = params.body_force(i, rule.points[q]);
                    const CrBasis at = cr_basis(mesh, k, rule.points[q]);
                    for (int m = 0; m < 3; ++m)
                        for (int c = 0; c < 2; ++c)
                            rhs[dofs.vdof(i, mesh.triangle_to_edges[k][m], c)] +=
                                rule.weights[q] * f[c] * at.value[m];
                }
            }
        }
    }

    // Surface-tension term with conjugate weights: side 1 sees w2, side 2 w1.
    if (params.interface_traction) {
        for (const CutElementData& cd : geo.cut_data) {
            const int k = cd.element;
            QuadratureRule rule = segment_rule(cd.cut_points[0], cd.cut_points[1], kSegmentDegree);
            for (int q = 0; q < rule.size(); ++q) {
                const double gk = params.interface_traction(rule.points[q]);
                const CrBasis at = cr_basis(mesh, k, rule.points[q]);
                for (int i = 0; i < 2; ++i) {
                    const double wc = params.w(1 - i);
                    for (int m = 0; m < 3; ++m)
                        for (int c = 0; c < 2; ++c)
                            rhs[dofs.vdof(i, mesh.triangle_to_edges[k][m], c)] +=
                                rule.weights[q] * gk * wc * at.value[m] * cd.normal[c];
                }
            }
        }
    }

    return rhs;
}

SaddleSystem assemble_system(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                             const PhysicalParams& params) {
    SparseMat A_full = assemble_a_h(mesh, geo, dofs, params);
    {
        SparseMat Ju = assemble_J_u(mesh, geo, dofs, params);
        A_full += Ju;
    }
    SparseMat B_full = assemble_b_h(mesh, geo, dofs, params);

    SaddleSystem sys;
    sys.Jp = assemble_J_p(mesh, geo, dofs, params);
    sys.n_u_full = dofs.n_u;

    sys.dirichlet_values = Eigen::VectorXd::Zero(dofs.n_u);
    if (params.dirichlet) {
        for (const auto& [dof, value] : apply_dirichlet(mesh, dofs, params.dirichlet))
            sys.dirichlet_values[dof] = value;
    }

    sys.free_of_full.assign(dofs.n_u, -1);
    for (int d = 0; d < dofs.n_u; ++d) {
        if (!dofs.velocity_dirichlet[d]) {
            sys.free_of_full[d] = static_cast<int>(sys.full_of_free.size());
            sys.full_of_free.push_back(d);
        }
    }
    sys.n_free = static_cast<int>(sys.full_of_free.size());

    Eigen::VectorXd load = assemble_rhs(mesh, geo, dofs, params);
    Eigen::VectorXd lift_u = A_full * sys.dirichlet_values;
    Eigen::VectorXd lift_p = B_full * sys.dirichlet_values;

    // Restrict to free dofs.
    std::vector<Triplet> ta, tb;
    for (int col = 0; col < A_full.outerSize(); ++col) {
        const int fc = sys.free_of_full[col];
        for (SparseMat::InnerIterator it(A_full, col); it; ++it) {
            const int fr = sys.free_of_full[static_cast<int>(it.row())];
            if (fr >= 0 && fc >= 0)
                ta.emplace_back(fr, fc, it.value());
        }
    }
    for (int col = 0; col < B_full.outerSize(); ++col) {
        const int fc = sys.free_of_full[col];
        if (fc < 0)
            continue;
        for (SparseMat::InnerIterator it(B_full, col); it; ++it)
            tb.emplace_back(static_cast<int>(it.row()), fc, it.value());
    }
    sys.A = from_triplets_stable(sys.n_free, sys.n_free, ta);
    sys.B = from_triplets_stable(dofs.n_p, sys.n_free, tb);

    sys.rhs_u.resize(sys.n_free);
    for (int f = 0; f < sys.n_free; ++f)
        sys.rhs_u[f] = load[sys.full_of_free[f]] - lift_u[sys.full_of_free[f]];
    sys.rhs_p = lift_p;

    sys.c.resize(dofs.n_p);
    for (int d = 0; d < dofs.n_p; ++d) {
        const auto& info = dofs.pressure_info[d];
        sys.c[d] = geo.side_area(mesh, info.subdomain, info.element) / params.mu(info.subdomain);
    }

    return sys;
}

} // namespace cutstokes
