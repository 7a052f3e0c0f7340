#pragma once

#include <functional>
#include <string>
#include <vector>

#include "cutstokes/assembly.hpp"
#include "cutstokes/solver.hpp"

namespace cutstokes {

// Manufactured solution: globally valid per-side formulas with analytic
// gradients, pressure and body force.
struct ExactSolution {
    std::string name;
    VelocityFn velocity;
    std::function<Mat2(int side, const Vec2&)> velocity_gradient; // (c,d) = d u_c / d x_d
    ScalarSideFn pressure;
    VelocityFn body_force;
};

struct ErrorReport {
    double h = 0.0;   // reported mesh-size label
    double e1_u = 0.0; // relative mu^{1/2}-weighted broken H1 seminorm error
    double e0_u = 0.0; // relative L2 velocity error
    double e0_p = 0.0; // relative mu^{-1/2}-weighted L2 pressure error
};

// Relative errors of a discrete solution, integrated with degree-`degree`
// rules over K ∩ Ω_i. The discrete pressure is shifted to match the exact
// pressure's weighted mean before comparison (gauge fixing).
ErrorReport compute_errors(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                           const PhysicalParams& params, const Solution& sol, const ExactSolution& exact,
                           int degree = 5);

// Inter-level convergence rates: rate_j = log(e_{j-1}/e_j) / log(h_{j-1}/h_j);
// the first level has no rate (NaN). Throws std::invalid_argument unless h is
// strictly decreasing.
std::vector<double> rates(const std::vector<double>& h, const std::vector<double>& errors);

// Diagnostic energy-norm pieces of the discretization error (jump terms of
// the discrete fields on interface chords, cut segments and stabilized edges).
struct EnergyDiagnostics {
    double broken_grad_sq = 0.0;    // sum mu_i |grad(u - u_h)|^2 over K ∩ Ω_i
    double interface_jump_sq = 0.0; // ({mu}_w/h) |[u_h]|^2 over chords
    double cut_jump_sq = 0.0;       // |e~|^{-1} mu_i |[u_h]|^2 over cut segments
    double grad_stab_sq = 0.0;      // J_u(u - u_h, u - u_h)
    double pressure_stab_sq = 0.0;  // J_p(p - p_h, p - p_h)
    double total() const { return broken_grad_sq + interface_jump_sq + cut_jump_sq + grad_stab_sq; }
};
EnergyDiagnostics energy_diagnostics(const Mesh& mesh, const InterfaceGeometry& geo, const DofMap& dofs,
                                     const PhysicalParams& params, const Solution& sol,
                                     const ExactSolution& exact);

} // namespace cutstokes
