#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <stdexcept>
#include <string>

namespace cutstokes {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using SparseMat = Eigen::SparseMatrix<double>;
using Triplet = Eigen::Triplet<double>;

// Interface/mesh resolution assumptions (A1)/(A2) do not hold.
struct AssumptionViolation : std::runtime_error {
    explicit AssumptionViolation(const std::string& what) : std::runtime_error(what) {}
};

// A cut computation produced an unusable configuration (no bracketed root,
// collapsed sub-polygon requested as a proper cut, ...).
struct GeometryDegenerate : std::runtime_error {
    explicit GeometryDegenerate(const std::string& what) : std::runtime_error(what) {}
};

// Direct factorization failed beyond the expected saddle-point structure.
struct SingularSystem : std::runtime_error {
    explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

} // namespace cutstokes
