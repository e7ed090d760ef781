#pragma once

#include <cstdint>
#include <vector>

#include "tec/tensor.hpp"

namespace tec {

struct AlsOptions {
  int max_sweeps = 100;
  double tol = 1e-6;  // stop when relative-residual improvement drops below
  std::uint64_t seed = 0;
};

// Alternating least squares CP decomposition. Factors are initialized
// i.i.d. uniform [0,1) from the seed; each least-squares step solves the
// normal equations with Tikhonov damping 1e-10 * trace to survive
// collinearity. An all-zero input returns all-zero factors without
// iterating. If sweep_residuals is non-null it receives the relative
// Frobenius residual after each sweep.
CpTensor cp_als(const DenseTensor& t, int rank, const AlsOptions& opts = {},
                std::vector<double>* sweep_residuals = nullptr);

}  // namespace tec
