#pragma once

#include <functional>
#include <vector>

#include "cutstokes/interface_geometry.hpp"
#include "cutstokes/mesh.hpp"
#include "cutstokes/spaces.hpp"
#include "cutstokes/types.hpp"

namespace cutstokes {

// Viscosities, penalty parameters and problem data. Interface averages use
// the harmonic weights w1 = mu2/(mu1+mu2), w2 = mu1/(mu1+mu2), so every
// interface coefficient stays bounded by the smaller viscosity.
struct PhysicalParams {
    double mu1 = 1.0;
    double mu2 = 1.0;
    double gamma0 = 10.0;
    double gamma1 = 10.0;
    double gamma2 = 10.0;
    VelocityFn body_force;                               // f per side; empty means 0
    std::function<double(const Vec2&)> interface_traction; // sigma*kappa along the interface; empty means 0
    BoundaryFn dirichlet;                                // g on the outer boundary; empty means 0

    double mu(int i) const { return i == 0 ? mu1 : mu2; }
    double w(int i) const { return (i == 0 ? mu2 : mu1) / (mu1 + mu2); }
    double mu_harm() const { return 2.0 * mu1 * mu2 / (mu1 + mu2); }
    double gamma_cut(int i) const { return i == 0 ? gamma1 : gamma2; }
};

// Discrete saddle-point system after Dirichlet elimination:
//   [ A   B^T  0 ] [u]   [rhs_u]
//   [-B   Jp   c ] [p] = [rhs_p]
//   [ 0   c^T  0 ] [l]   [ 0   ]
// where c_m = mu_i^{-1} |K ∩ Ω_i| enforces the weighted zero pressure mean.
struct SaddleSystem {
    SparseMat A;  // n_free x n_free, symmetric
    SparseMat B;  // n_p x n_free
    SparseMat Jp; // n_p x n_p, symmetric positive semidefinite
    Eigen::VectorXd c;
    Eigen::VectorXd rhs_u;
    Eigen::VectorXd rhs_p;

    int n_u_full = 0;
    int n_free = 0;
    std::vector<int> free_of_full;  // -1 on Dirichlet dofs
    std::vector<int> full_of_free;
    Eigen::VectorXd dirichlet_values; // full velocity size, zero on free dofs
};

// Individual bilinear forms over the full (pre-elimination) dof spaces.
SparseMat assemble_a_h(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params);
SparseMat assemble_J_u(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params);
SparseMat assemble_b_h(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params);
SparseMat assemble_J_p(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                       const PhysicalParams& params);
Eigen::VectorXd assemble_rhs(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                             const PhysicalParams& params);

SaddleSystem assemble_system(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                             const PhysicalParams& params);

// Triplet accumulation with deterministic duplicate summation (stable order).
SparseMat from_triplets_stable(int rows, int cols, std::vector<Triplet>& triplets);

} // namespace cutstokes
