#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "tec/rng.hpp"
#include "tec/tensor.hpp"

namespace tec {

enum class SimModel { F1, F2, F3, F4, F5, M1, T1 };

SimModel sim_model_from_string(const std::string& name);
std::string to_string(SimModel m);

struct SimModelSpec {
  SimModel model = SimModel::F1;
  int samples_per_class = 100;
  std::uint64_t seed = 0;
};

enum class CovKind { identity, ar, minij };

struct CovarianceSpec {
  CovKind kind = CovKind::identity;
  double param = 0.0;  // AR coefficient
  int dim = 1;
};

// identity -> I; ar -> param^|i-j|; minij -> min(i,j) (1-based indices).
Eigen::MatrixXd build_covariance(const CovarianceSpec& spec);

// Draws via the Cholesky factor of cov; deterministic per seed.
std::vector<Eigen::VectorXd> mvn_sample(const Eigen::VectorXd& mean,
                                        const Eigen::MatrixXd& cov, int n,
                                        std::uint64_t seed);

// Balanced two-class draw from one of the simulation models. F1-F5 produce
// CP samples directly (no dense storage); M1 and T1 produce dense tensors.
// Class 1 carries label -1, class 2 label +1. Sample i draws from the
// substream split_seed(seed, i), with class 1 occupying indices
// [0, samples_per_class).
struct GeneratedData {
  std::vector<CpTensor> cp;
  std::vector<DenseTensor> dense;
  std::vector<int> labels;

  bool is_dense() const { return !dense.empty(); }
  int size() const { return static_cast<int>(labels.size()); }
};

GeneratedData generate(const SimModelSpec& spec);

}  // namespace tec
