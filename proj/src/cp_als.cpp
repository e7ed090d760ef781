#include "tec/cp_als.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "tec/errors.hpp"
#include "tec/rng.hpp"

namespace tec {

namespace {

// Khatri-Rao chain skipping one mode, highest mode first (row ordering has
// the lowest mode index varying fastest, matching mode_unfold).
Eigen::MatrixXd kr_chain_skip(const std::vector<Eigen::MatrixXd>& factors,
                              int skip) {
  const int d = static_cast<int>(factors.size());
  Eigen::MatrixXd acc;
  bool first = true;
  for (int m = d - 1; m >= 0; --m) {
    if (m == skip) continue;
    if (first) {
      acc = factors[m];
      first = false;
    } else {
      acc = khatri_rao(acc, factors[m]);
    }
  }
  return acc;
}

}  // namespace

CpTensor cp_als(const DenseTensor& t, int rank, const AlsOptions& opts,
                std::vector<double>* sweep_residuals) {
  if (rank < 1) throw DataError("cp_als: rank must be positive");
  if (opts.tol <= 0) throw DataError("cp_als: tol must be positive");
  const int d = t.order();
  if (sweep_residuals) sweep_residuals->clear();

  const double input_norm = t.values.norm();
  if (input_norm == 0.0) {
    std::vector<Eigen::MatrixXd> zero;
    for (int dim : t.mode_dims)
      zero.push_back(Eigen::MatrixXd::Zero(dim, rank));
    CpTensor out;
    out.factors = std::move(zero);
    if (sweep_residuals) sweep_residuals->push_back(0.0);
    return out;
  }

  CounterRng rng(opts.seed);
  std::vector<Eigen::MatrixXd> factors(d);
  for (int j = 0; j < d; ++j) {
    factors[j].resize(t.mode_dims[j], rank);
    for (Eigen::Index c = 0; c < factors[j].cols(); ++c)
      for (Eigen::Index r = 0; r < factors[j].rows(); ++r)
        factors[j](r, c) = rng.next_uniform();
  }

  std::vector<Eigen::MatrixXd> unfoldings(d);
  for (int j = 0; j < d; ++j) unfoldings[j] = mode_unfold(t, j + 1);

  std::vector<Eigen::MatrixXd> gram(d);  // factor^T factor per mode
  for (int j = 0; j < d; ++j) gram[j] = factors[j].transpose() * factors[j];

  double prev_rel = std::numeric_limits<double>::infinity();
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    for (int n = 0; n < d; ++n) {
      Eigen::MatrixXd v = Eigen::MatrixXd::Ones(rank, rank);
      for (int m = 0; m < d; ++m)
        if (m != n) v = v.cwiseProduct(gram[m]);
      const double damp = 1e-10 * v.trace() + 1e-300;
      v.diagonal().array() += damp;

      const Eigen::MatrixXd w = kr_chain_skip(factors, n);
      const Eigen::MatrixXd design = unfoldings[n] * w;
      factors[n] = v.ldlt().solve(design.transpose()).transpose();
      if (!factors[n].allFinite())
        throw NumericError("cp_als: non-finite factor update");
      gram[n] = factors[n].transpose() * factors[n];
    }

    // ||X - Xhat||^2 = ||X||^2 - 2<X, Xhat> + ||Xhat||^2, all in factor space.
    Eigen::MatrixXd full_gram = Eigen::MatrixXd::Ones(rank, rank);
    for (int m = 0; m < d; ++m) full_gram = full_gram.cwiseProduct(gram[m]);
    const double model_norm_sq = full_gram.sum();
    const Eigen::MatrixXd w1 = kr_chain_skip(factors, 0);
    const double inner = (unfoldings[0].cwiseProduct(factors[0] * w1.transpose())).sum();
    const double resid_sq =
        std::max(0.0, input_norm * input_norm - 2.0 * inner + model_norm_sq);
    const double rel = std::sqrt(resid_sq) / input_norm;
    if (sweep_residuals) sweep_residuals->push_back(rel);

    if (prev_rel - rel < opts.tol) break;
    prev_rel = rel;
  }

  CpTensor out;
  out.factors = std::move(factors);
  return out;
}

}  // namespace tec
