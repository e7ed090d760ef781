#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tec/kernel.hpp"

namespace tec {

// Squared-hinge support tensor machine in the primal, on a precomputed Gram
// matrix:  min_beta  lambda beta' Dy K Dy beta
//                    + (1/n) sum_i max(0, 1 - y_i f_i)^2,   f = K Dy beta.
struct StmProblem {
  GramMatrix gram;
  std::vector<int> labels;  // +1 / -1
  double lambda = 1e-2;

  void validate() const;
};

struct StmSolution {
  Eigen::VectorXd beta;
  std::vector<bool> support_mask;  // y_i f_i < 1 at the returned beta
  int iterations = 0;              // Newton steps that moved the iterate
  bool converged = false;
  double objective = 0.0;
};

// Newton iteration on the active set: with S = {i : y_i f_i < 1} the
// restricted objective is an SPD ridge system on the support,
//   (n lambda I_S + (Dy K Dy)_SS) beta_S = 1_S,    beta outside S = 0,
// resolved each step until the iterate is a fixed point. A repeated support
// mask without convergence triggers step damping to break cycles. Starts
// from beta = 1.
StmSolution newton_solve(const StmProblem& p, double tol = 1e-6,
                         int max_iter = 50);

// sum_i kernel_row[i] * labels[i] * beta[i]
double decision_value(const Eigen::VectorXd& beta,
                      const std::vector<int>& labels,
                      const Eigen::VectorXd& kernel_row);

double objective_value(const StmProblem& p, const Eigen::VectorXd& beta);

}  // namespace tec
