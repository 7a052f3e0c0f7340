#include "cutstokes/solver.hpp"

#include <Eigen/SparseLU>

namespace cutstokes {

// Bordered system
//   [ K  c~ ] [x]   [F]          K  = [[A, B^T], [-B, Jp]],
//   [ c~^T 0] [l] = [0],         c~ = [0; c],
// solved by block elimination. K's one-dimensional kernel is the constant
// pressure e = (0, 1): B^T 1 = 0 (discrete divergence of interior test
// functions against a constant) and Jp 1 = 0 (jump form). Solvability of the
// first block row fixes the multiplier in closed form, l = sum(rhs_p)/sum(c);
// the kernel component is fixed afterwards by the constraint c^T p = 0. The
// factorization works on K with one pinned pressure diagonal, which keeps the
// dense constraint column out of the fill-in ordering.
Solution solve(const SaddleSystem& sys) {
    const int nf = sys.n_free;
    const int np = static_cast<int>(sys.c.size());
    const double c_sum = sys.c.sum();

    const double lambda = sys.rhs_p.sum() / c_sum;

    std::vector<Triplet> trip;
    trip.reserve(sys.A.nonZeros() + 2 * sys.B.nonZeros() + sys.Jp.nonZeros() + 1);
    for (int col = 0; col < sys.A.outerSize(); ++col)
        for (SparseMat::InnerIterator it(sys.A, col); it; ++it)
            trip.emplace_back(static_cast<int>(it.row()), col, it.value());
    for (int col = 0; col < sys.B.outerSize(); ++col) {
        for (SparseMat::InnerIterator it(sys.B, col); it; ++it) {
            const int pr = static_cast<int>(it.row());
            trip.emplace_back(col, nf + pr, it.value());  // B^T block
            trip.emplace_back(nf + pr, col, -it.value()); // -B block
        }
    }
    for (int col = 0; col < sys.Jp.outerSize(); ++col)
        for (SparseMat::InnerIterator it(sys.Jp, col); it; ++it)
            trip.emplace_back(nf + static_cast<int>(it.row()), nf + col, it.value());
    trip.emplace_back(nf + np - 1, nf + np - 1, 1.0); // pin the kernel

    SparseMat K(nf + np, nf + np);
    K.setFromTriplets(trip.begin(), trip.end());
    K.makeCompressed();

    Eigen::VectorXd rhs(nf + np);
    rhs << sys.rhs_u, sys.rhs_p - lambda * sys.c;

    Eigen::SparseLU<SparseMat> lu;
    lu.analyzePattern(K);
    lu.factorize(K);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("sparse LU factorization failed: " + lu.lastErrorMessage());
    Eigen::VectorXd z = lu.solve(rhs);
    if (lu.info() != Eigen::Success)
        throw SingularSystem("sparse LU solve failed");

    Eigen::VectorXd uf = z.head(nf);
    Eigen::VectorXd p = z.tail(np);
    p.array() -= sys.c.dot(p) / c_sum; // kernel shift onto the constraint

    Solution sol;
    sol.multiplier = lambda;

    // Residual of the full bordered system, blockwise.
    Eigen::VectorXd r_u = sys.A * uf + sys.B.transpose() * p - sys.rhs_u;
    Eigen::VectorXd r_p = -(sys.B * uf) + sys.Jp * p + lambda * sys.c - sys.rhs_p;
    const double r_c = sys.c.dot(p);
    sol.residual_norm = std::max({r_u.lpNorm<Eigen::Infinity>(), r_p.lpNorm<Eigen::Infinity>(), std::abs(r_c)});

    sol.velocity = sys.dirichlet_values;
    for (int f = 0; f < nf; ++f)
        sol.velocity[sys.full_of_free[f]] = uf[f];
    sol.pressure = p;
    return sol;
}

} // namespace cutstokes
