#include "tec/datagen.hpp"

#include <Eigen/Cholesky>
#include <cmath>

#include "tec/errors.hpp"

namespace tec {

SimModel sim_model_from_string(const std::string& name) {
  if (name == "F1") return SimModel::F1;
  if (name == "F2") return SimModel::F2;
  if (name == "F3") return SimModel::F3;
  if (name == "F4") return SimModel::F4;
  if (name == "F5") return SimModel::F5;
  if (name == "M1") return SimModel::M1;
  if (name == "T1") return SimModel::T1;
  throw UsageError("unknown simulation model: " + name);
}

std::string to_string(SimModel m) {
  switch (m) {
    case SimModel::F1: return "F1";
    case SimModel::F2: return "F2";
    case SimModel::F3: return "F3";
    case SimModel::F4: return "F4";
    case SimModel::F5: return "F5";
    case SimModel::M1: return "M1";
    case SimModel::T1: return "T1";
  }
  return "?";
}

Eigen::MatrixXd build_covariance(const CovarianceSpec& spec) {
  if (spec.dim < 1) throw DataError("covariance: dim must be >= 1");
  switch (spec.kind) {
    case CovKind::identity:
      return Eigen::MatrixXd::Identity(spec.dim, spec.dim);
    case CovKind::ar: {
      if (!(spec.param > -1.0 && spec.param < 1.0))
        throw DataError("covariance: AR coefficient must be in (-1,1)");
      Eigen::MatrixXd s(spec.dim, spec.dim);
      for (int i = 0; i < spec.dim; ++i)
        for (int j = 0; j < spec.dim; ++j)
          s(i, j) = std::pow(spec.param, std::abs(i - j));
      return s;
    }
    case CovKind::minij: {
      Eigen::MatrixXd s(spec.dim, spec.dim);
      for (int i = 0; i < spec.dim; ++i)
        for (int j = 0; j < spec.dim; ++j)
          s(i, j) = std::min(i, j) + 1;
      return s;
    }
  }
  throw DataError("covariance: unknown kind");
}

namespace {

Eigen::MatrixXd cholesky_factor(const Eigen::MatrixXd& cov) {
  Eigen::LLT<Eigen::MatrixXd> llt(cov);
  if (llt.info() != Eigen::Success)
    throw NumericError("mvn: covariance is not positive definite");
  return llt.matrixL();
}

Eigen::VectorXd draw_standard_normal(CounterRng& rng, int dim) {
  Eigen::VectorXd z(dim);
  for (int i = 0; i < dim; ++i) z[i] = rng.next_gaussian();
  return z;
}

Eigen::VectorXd draw_mvn(CounterRng& rng, const Eigen::VectorXd& mean,
                         const Eigen::MatrixXd& chol) {
  return mean + chol * draw_standard_normal(rng, static_cast<int>(mean.size()));
}

}  // namespace

std::vector<Eigen::VectorXd> mvn_sample(const Eigen::VectorXd& mean,
                                        const Eigen::MatrixXd& cov, int n,
                                        std::uint64_t seed) {
  if (cov.rows() != cov.cols() || cov.rows() != mean.size())
    throw DataError("mvn: mean/covariance shape mismatch");
  const Eigen::MatrixXd chol = cholesky_factor(cov);
  CounterRng rng(seed);
  std::vector<Eigen::VectorXd> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(draw_mvn(rng, mean, chol));
  return out;
}

namespace {

// Factor models: one column per rank component, drawn mode by mode.
using ColumnSampler =
    std::function<Eigen::VectorXd(CounterRng&, int mode, int dim)>;

CpTensor draw_factor_sample(CounterRng& rng, const std::vector<int>& dims,
                            int rank, const ColumnSampler& sample_column) {
  CpTensor t;
  t.factors.reserve(dims.size());
  for (std::size_t j = 0; j < dims.size(); ++j) {
    Eigen::MatrixXd f(dims[j], rank);
    for (int k = 0; k < rank; ++k)
      f.col(k) = sample_column(rng, static_cast<int>(j), dims[j]);
    t.factors.push_back(std::move(f));
  }
  return t;
}

DenseTensor draw_iid_dense(CounterRng& rng, const std::vector<int>& dims,
                           double mean) {
  DenseTensor t = DenseTensor::zeros(dims);
  for (Eigen::Index i = 0; i < t.values.size(); ++i)
    t.values[i] = mean + rng.next_gaussian();
  return t;
}

}  // namespace

GeneratedData generate(const SimModelSpec& spec) {
  if (spec.samples_per_class < 1)
    throw DataError("generate: samples_per_class must be >= 1");

  GeneratedData data;
  const int m = spec.samples_per_class;

  // The F2/F3 mode covariances: I, AR(0.7), min(i,j), AR(0.7) on dim 50.
  const auto f23_chols = [] {
    std::vector<Eigen::MatrixXd> chols;
    chols.push_back(Eigen::MatrixXd::Identity(50, 50));
    chols.push_back(cholesky_factor(
        build_covariance({CovKind::ar, 0.7, 50})));
    chols.push_back(cholesky_factor(
        build_covariance({CovKind::minij, 0.0, 50})));
    chols.push_back(cholesky_factor(
        build_covariance({CovKind::ar, 0.7, 50})));
    return chols;
  };

  auto for_each_sample = [&](auto&& draw_one) {
    for (int cls = 0; cls < 2; ++cls) {
      for (int i = 0; i < m; ++i) {
        const int index = cls * m + i;
        CounterRng rng(split_seed(spec.seed, index));
        draw_one(rng, cls);
        data.labels.push_back(cls == 0 ? -1 : +1);
      }
    }
  };

  switch (spec.model) {
    case SimModel::F1: {
      const std::vector<int> dims{30, 30, 30};
      for_each_sample([&](CounterRng& rng, int cls) {
        const double mean = cls == 0 ? 0.0 : 0.5;
        data.cp.push_back(draw_factor_sample(
            rng, dims, 1, [&](CounterRng& r, int, int dim) {
              return Eigen::VectorXd::Constant(dim, mean) +
                     draw_standard_normal(r, dim);
            }));
      });
      break;
    }
    case SimModel::F2:
    case SimModel::F3: {
      const std::vector<int> dims{50, 50, 50, 50};
      const int rank = spec.model == SimModel::F2 ? 1 : 3;
      const auto chols = f23_chols();
      for_each_sample([&](CounterRng& rng, int cls) {
        const double mean = cls == 0 ? 0.0 : 1.0;
        data.cp.push_back(draw_factor_sample(
            rng, dims, rank, [&](CounterRng& r, int mode, int dim) {
              return draw_mvn(r, Eigen::VectorXd::Constant(dim, mean),
                              chols[mode]);
            }));
      });
      break;
    }
    case SimModel::F4: {
      const std::vector<int> dims{30, 30, 30};
      for_each_sample([&](CounterRng& rng, int cls) {
        const int gamma_shape = cls == 0 ? 4 : 6;
        data.cp.push_back(draw_factor_sample(
            rng, dims, 1, [&](CounterRng& r, int mode, int dim) {
              Eigen::VectorXd v(dim);
              for (int i = 0; i < dim; ++i) {
                if (mode == 0) v[i] = r.next_gamma_int(gamma_shape, 2.0);
                else if (mode == 1) v[i] = r.next_gaussian();
                else v[i] = r.next_uniform();
              }
              return v;
            }));
      });
      break;
    }
    case SimModel::F5: {
      const std::vector<int> dims{50, 50, 50, 50};
      for_each_sample([&](CounterRng& rng, int cls) {
        const int gamma_shape = cls == 0 ? 4 : 5;
        const double ulo = cls == 0 ? 3.5 : 4.5;
        data.cp.push_back(draw_factor_sample(
            rng, dims, 1, [&](CounterRng& r, int mode, int dim) {
              Eigen::VectorXd v(dim);
              for (int i = 0; i < dim; ++i) {
                if (mode == 0) v[i] = r.next_gamma_int(gamma_shape, 2.0);
                else if (mode == 1) v[i] = r.next_gaussian();
                else if (mode == 2) v[i] = r.next_gamma_int(2, 1.0);
                else v[i] = r.next_uniform(ulo, ulo + 1.0);
              }
              return v;
            }));
      });
      break;
    }
    case SimModel::M1: {
      const std::vector<int> dims{30, 30, 30};
      for_each_sample([&](CounterRng& rng, int cls) {
        data.dense.push_back(draw_iid_dense(rng, dims, cls == 0 ? 0.0 : 0.5));
      });
      break;
    }
    case SimModel::T1: {
      const std::vector<int> dims{30, 30, 30};
      const std::vector<Eigen::MatrixXd> mode_cov{
          Eigen::MatrixXd::Identity(30, 30),
          Eigen::MatrixXd::Identity(30, 30),
          build_covariance({CovKind::ar, 0.7, 30})};
      for_each_sample([&](CounterRng& rng, int cls) {
        DenseTensor core = draw_iid_dense(rng, dims, cls == 0 ? 0.0 : 0.5);
        for (int mode = 1; mode <= 3; ++mode)
          core = mode_multiply(core, mode, mode_cov[mode - 1]);
        data.dense.push_back(std::move(core));
      });
      break;
    }
  }
  return data;
}

}  // namespace tec
