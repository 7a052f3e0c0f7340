#pragma once

#include "cutstokes/assembly.hpp"
#include "cutstokes/types.hpp"

namespace cutstokes {

struct Solution {
    Eigen::VectorXd velocity; // full dof space, Dirichlet values reinstated
    Eigen::VectorXd pressure;
    double multiplier = 0.0;    // Lagrange multiplier of the pressure mean constraint
    double residual_norm = 0.0; // max-norm residual of the bordered linear system
};

// Direct sparse LU solve of the bordered saddle-point system. Throws
// SingularSystem when the factorization reports rank deficiency.
Solution solve(const SaddleSystem& sys);

} // namespace cutstokes
