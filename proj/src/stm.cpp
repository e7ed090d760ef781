#include "tec/stm.hpp"

#include <cmath>
#include <set>

#include "tec/errors.hpp"

namespace tec {

void StmProblem::validate() const {
  const int n = gram.n();
  if (n < 1) throw DataError("stm: empty problem");
  if (gram.values.cols() != n) throw DataError("stm: gram matrix not square");
  if (static_cast<int>(labels.size()) != n)
    throw DataError("stm: label count must equal sample count");
  for (int y : labels)
    if (y != 1 && y != -1) throw DataError("stm: labels must be +1 or -1");
  if (!(lambda > 0.0)) throw DataError("stm: lambda must be positive");
  if (!gram.values.allFinite())
    throw DataError("stm: gram matrix has non-finite entries");
}

namespace {

Eigen::VectorXd label_vector(const std::vector<int>& labels) {
  Eigen::VectorXd y(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    y[static_cast<Eigen::Index>(i)] = labels[i];
  return y;
}

std::vector<bool> support_at(const Eigen::MatrixXd& gram,
                             const Eigen::VectorXd& y,
                             const Eigen::VectorXd& beta) {
  const Eigen::VectorXd f = gram * y.cwiseProduct(beta);
  std::vector<bool> mask(beta.size());
  for (Eigen::Index i = 0; i < beta.size(); ++i)
    mask[i] = y[i] * f[i] < 1.0;
  return mask;
}

// Minimizer of the support-restricted quadratic: outside the support beta is
// zero; on it, (n lambda I + (Dy K Dy)_SS) beta_S = 1_S. The system is SPD
// for any lambda > 0, so the solve cannot go singular.
Eigen::VectorXd restricted_minimizer(const Eigen::MatrixXd& dkd,
                                     const std::vector<bool>& mask,
                                     double n_lambda, int iter) {
  const Eigen::Index n = dkd.rows();
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < n; ++i)
    if (mask[i]) idx.push_back(i);

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(n);
  if (idx.empty()) return beta;

  const Eigen::Index s = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXd a(s, s);
  for (Eigen::Index p = 0; p < s; ++p)
    for (Eigen::Index q = 0; q < s; ++q)
      a(p, q) = dkd(idx[p], idx[q]);
  a.diagonal().array() += n_lambda;

  const Eigen::VectorXd sol = a.ldlt().solve(Eigen::VectorXd::Ones(s));
  if (!sol.allFinite())
    throw NumericError("stm newton: singular support system at iteration " +
                       std::to_string(iter));
  for (Eigen::Index p = 0; p < s; ++p) beta[idx[p]] = sol[p];
  return beta;
}

}  // namespace

StmSolution newton_solve(const StmProblem& p, double tol, int max_iter) {
  p.validate();
  if (!(tol > 0.0)) throw DataError("stm newton: tol must be positive");
  if (max_iter < 1) throw DataError("stm newton: max_iter must be >= 1");

  const int n = p.gram.n();
  const Eigen::VectorXd y = label_vector(p.labels);
  const Eigen::MatrixXd dkd =
      y.asDiagonal() * p.gram.values * y.asDiagonal();
  const double n_lambda = n * p.lambda;

  StmSolution sol;
  sol.beta = Eigen::VectorXd::Ones(n);
  std::set<std::vector<bool>> seen;

  for (int iter = 0; iter < max_iter; ++iter) {
    const std::vector<bool> mask = support_at(p.gram.values, y, sol.beta);
    const Eigen::VectorXd candidate =
        restricted_minimizer(dkd, mask, n_lambda, iter);

    if ((candidate - sol.beta).norm() < tol) {
      sol.beta = candidate;
      sol.converged = true;
      break;
    }
    if (seen.contains(mask)) {
      sol.beta = 0.5 * (sol.beta + candidate);  // break active-set cycles
    } else {
      seen.insert(mask);
      sol.beta = candidate;
    }
    ++sol.iterations;
  }

  sol.support_mask = support_at(p.gram.values, y, sol.beta);
  sol.objective = objective_value(p, sol.beta);
  return sol;
}

double decision_value(const Eigen::VectorXd& beta,
                      const std::vector<int>& labels,
                      const Eigen::VectorXd& kernel_row) {
  if (beta.size() != kernel_row.size() ||
      beta.size() != static_cast<Eigen::Index>(labels.size()))
    throw DataError("decision_value: length mismatch");
  double g = 0.0;
  for (Eigen::Index i = 0; i < beta.size(); ++i)
    g += kernel_row[i] * labels[i] * beta[i];
  return g;
}

double objective_value(const StmProblem& p, const Eigen::VectorXd& beta) {
  const int n = p.gram.n();
  if (beta.size() != n) throw DataError("objective_value: beta length");
  const Eigen::VectorXd y = label_vector(p.labels);
  const Eigen::VectorXd u = y.cwiseProduct(beta);  // Dy beta
  const Eigen::VectorXd f = p.gram.values * u;
  const double reg = p.lambda * u.dot(f);  // lambda beta' Dy K Dy beta
  double loss = 0.0;
  for (int i = 0; i < n; ++i) {
    const double margin = 1.0 - y[i] * f[i];
    if (margin > 0.0) loss += margin * margin;
  }
  return reg + loss / n;
}

}  // namespace tec
