#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "tec/tensor.hpp"

namespace tec {

enum class ProjectionScaling {
  unit_variance,  // entries N(0, 1)
  inv_sqrt_p,     // entries N(0, 1/P_j); preserves E||Ax||^2 = ||x||^2
};

// One Gaussian matrix per (mode, rank component). Matrices regenerate
// deterministically from the seed: serialized models store only the
// descriptor (seed, scaling, dims, rank).
struct ProjectionSet {
  std::vector<std::vector<Eigen::MatrixXd>> matrices;  // [mode][rank]: P_j x I_j
  std::vector<int> mode_dims;
  std::vector<int> target_dims;
  int rank = 0;
  std::uint64_t seed = 0;
  ProjectionScaling scaling = ProjectionScaling::inv_sqrt_p;
  bool identity = false;  // testing hook: P_j = I_j with identity matrices
};

// Draw order is fixed: modes outermost, rank components next, then row-major
// within each matrix, all from one counter stream keyed by `seed`.
ProjectionSet sample_projection_set(const std::vector<int>& mode_dims,
                                    const std::vector<int>& target_dims,
                                    int rank, std::uint64_t seed,
                                    ProjectionScaling scaling);

// P_j = I_j with identity matrices; projection becomes a no-op.
ProjectionSet identity_projection_set(const std::vector<int>& mode_dims,
                                      int rank);

// Output factor j column k = matrices[j][k] * input factor j column k.
CpTensor project_cp(const CpTensor& t, const ProjectionSet& p);

// ceil(3 r^(2/d) eps^-2 ln(n/delta1)^(1/d)) + 1
int jl_target_dim(int n, double eps, double delta1, int rank, int d);

// P_j = max(1, floor(frac * I_j))
std::vector<int> fractional_target_dims(const std::vector<int>& mode_dims,
                                        double frac);

}  // namespace tec
