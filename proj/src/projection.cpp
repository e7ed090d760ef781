#include "tec/projection.hpp"

#include <cmath>

#include "tec/errors.hpp"
#include "tec/rng.hpp"

namespace tec {

ProjectionSet sample_projection_set(const std::vector<int>& mode_dims,
                                    const std::vector<int>& target_dims,
                                    int rank, std::uint64_t seed,
                                    ProjectionScaling scaling) {
  if (mode_dims.size() != target_dims.size())
    throw DataError("projection: target dims count must match mode count");
  if (rank < 1) throw DataError("projection: rank must be positive");
  const int d = static_cast<int>(mode_dims.size());
  for (int j = 0; j < d; ++j) {
    if (target_dims[j] < 1 || target_dims[j] > mode_dims[j])
      throw DataError("projection: target dim must be in [1, mode dim]");
  }

  ProjectionSet p;
  p.mode_dims = mode_dims;
  p.target_dims = target_dims;
  p.rank = rank;
  p.seed = seed;
  p.scaling = scaling;
  p.matrices.resize(d);

  CounterRng rng(seed);
  for (int j = 0; j < d; ++j) {
    const double scale = scaling == ProjectionScaling::inv_sqrt_p
                             ? 1.0 / std::sqrt(static_cast<double>(target_dims[j]))
                             : 1.0;
    p.matrices[j].reserve(rank);
    for (int k = 0; k < rank; ++k) {
      Eigen::MatrixXd a(target_dims[j], mode_dims[j]);
      for (Eigen::Index r = 0; r < a.rows(); ++r)
        for (Eigen::Index c = 0; c < a.cols(); ++c)
          a(r, c) = scale * rng.next_gaussian();
      p.matrices[j].push_back(std::move(a));
    }
  }
  return p;
}

ProjectionSet identity_projection_set(const std::vector<int>& mode_dims,
                                      int rank) {
  ProjectionSet p;
  p.mode_dims = mode_dims;
  p.target_dims = mode_dims;
  p.rank = rank;
  p.identity = true;
  p.matrices.resize(mode_dims.size());
  for (std::size_t j = 0; j < mode_dims.size(); ++j)
    p.matrices[j].assign(rank,
                         Eigen::MatrixXd::Identity(mode_dims[j], mode_dims[j]));
  return p;
}

CpTensor project_cp(const CpTensor& t, const ProjectionSet& p) {
  if (t.mode_dims() != p.mode_dims)
    throw DataError("project_cp: tensor mode dims do not match projection");
  if (t.rank() > p.rank)
    throw DataError("project_cp: projection covers fewer rank components");

  CpTensor out;
  out.factors.reserve(t.factors.size());
  for (int j = 0; j < t.order(); ++j) {
    Eigen::MatrixXd f(p.target_dims[j], t.rank());
    for (int k = 0; k < t.rank(); ++k)
      f.col(k) = p.matrices[j][k] * t.factors[j].col(k);
    out.factors.push_back(std::move(f));
  }
  return out;
}

int jl_target_dim(int n, double eps, double delta1, int rank, int d) {
  if (n < 1) throw DataError("jl_target_dim: n must be positive");
  if (!(eps > 0.0 && eps <= 1.0))
    throw DataError("jl_target_dim: eps must be in (0,1]");
  if (!(delta1 > 0.0 && delta1 < 0.5))
    throw DataError("jl_target_dim: delta1 must be in (0,1/2)");
  if (rank < 1 || d < 1)
    throw DataError("jl_target_dim: rank and d must be positive");
  const double value = 3.0 *
                       std::pow(static_cast<double>(rank), 2.0 / d) /
                       (eps * eps) *
                       std::pow(std::log(static_cast<double>(n) / delta1), 1.0 / d);
  return static_cast<int>(std::ceil(value)) + 1;
}

std::vector<int> fractional_target_dims(const std::vector<int>& mode_dims,
                                        double frac) {
  if (!(frac > 0.0 && frac <= 1.0))
    throw DataError("projection fraction must be in (0,1]");
  std::vector<int> out;
  out.reserve(mode_dims.size());
  for (int dim : mode_dims)
    out.push_back(std::max(1, static_cast<int>(std::floor(frac * dim))));
  return out;
}

}  // namespace tec
