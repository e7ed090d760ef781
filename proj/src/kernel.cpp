#include "tec/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "tec/errors.hpp"

namespace tec {

KernelSpec KernelSpec::gaussian(std::vector<double> sigmas) {
  KernelSpec spec;
  spec.bandwidths = std::move(sigmas);
  return spec;
}

KernelSpec KernelSpec::gaussian(double sigma, int modes) {
  KernelSpec spec;
  spec.bandwidths.assign(modes, sigma);
  return spec;
}

double KernelSpec::bandwidth_for_mode(int j) const {
  if (bandwidths.size() == 1) return bandwidths[0];
  return bandwidths.at(j);
}

void KernelSpec::validate(int modes) const {
  if (bandwidths.size() != 1 && static_cast<int>(bandwidths.size()) != modes)
    throw DataError("kernel spec: bandwidth count must be 1 or match modes");
  for (double s : bandwidths)
    if (!(s > 0.0) || !std::isfinite(s))
      throw DataError("kernel spec: bandwidths must be positive and finite");
}

double mode_kernel_eval(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                        KernelFamily family, double bandwidth) {
  if (a.size() != b.size())
    throw DataError("mode_kernel_eval: vector length mismatch");
  if (!(bandwidth > 0.0))
    throw DataError("mode_kernel_eval: bandwidth must be positive");
  switch (family) {
    case KernelFamily::gaussian_rbf:
      return std::exp(-(a - b).squaredNorm() / (2.0 * bandwidth * bandwidth));
  }
  throw DataError("mode_kernel_eval: unknown kernel family");
}

double tensor_kernel(const CpTensor& x, const CpTensor& y,
                     const KernelSpec& spec) {
  const int d = x.order();
  if (y.order() != d || x.mode_dims() != y.mode_dims())
    throw DataError("tensor_kernel: mode dimensions disagree");
  spec.validate(d);

  const int rx = x.rank(), ry = y.rank();
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(rx) * ry);
  for (int k = 0; k < rx; ++k) {
    for (int l = 0; l < ry; ++l) {
      double prod = 1.0;
      for (int j = 0; j < d; ++j) {
        const double sigma = spec.bandwidth_for_mode(j);
        const double dist_sq =
            (x.factors[j].col(k) - y.factors[j].col(l)).squaredNorm();
        prod *= std::exp(-dist_sq / (2.0 * sigma * sigma));
      }
      terms.push_back(prod);
    }
  }
  // Canonical accumulation order keeps K(x,y) == K(y,x) bit-exact.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum;
}

GramMatrix gram_matrix(const std::vector<CpTensor>& data,
                       const KernelSpec& spec) {
  if (data.empty()) throw DataError("gram_matrix: empty dataset");
  const auto dims = data[0].mode_dims();
  for (const auto& t : data)
    if (t.mode_dims() != dims)
      throw DataError("gram_matrix: heterogeneous tensor shapes");

  const int n = static_cast<int>(data.size());
  GramMatrix g;
  g.values.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int m = 0; m <= i; ++m) {
      const double v = tensor_kernel(data[i], data[m], spec);
      g.values(i, m) = v;
      g.values(m, i) = v;
    }
  }
  return g;
}

Eigen::VectorXd kernel_row(const std::vector<CpTensor>& data,
                           const CpTensor& x, const KernelSpec& spec) {
  Eigen::VectorXd row(data.size());
  for (std::size_t i = 0; i < data.size(); ++i)
    row[static_cast<Eigen::Index>(i)] = tensor_kernel(data[i], x, spec);
  return row;
}

std::vector<double> median_bandwidths(const std::vector<CpTensor>& data) {
  if (data.empty()) throw DataError("median_bandwidths: empty dataset");
  const int d = data[0].order();
  const int n = static_cast<int>(data.size());
  std::vector<double> sigmas(d, 1.0);

  for (int j = 0; j < d; ++j) {
    std::vector<double> dists;
    for (int i = 0; i < n; ++i) {
      for (int m = i + 1; m < n; ++m) {
        const auto& a = data[i].factors[j];
        const auto& b = data[m].factors[j];
        for (Eigen::Index k = 0; k < a.cols(); ++k)
          for (Eigen::Index l = 0; l < b.cols(); ++l)
            dists.push_back((a.col(k) - b.col(l)).norm());
      }
    }
    if (dists.empty()) continue;
    const std::size_t mid = dists.size() / 2;
    std::nth_element(dists.begin(), dists.begin() + mid, dists.end());
    double med = dists[mid];
    if (dists.size() % 2 == 0) {
      const double lower =
          *std::max_element(dists.begin(), dists.begin() + mid);
      med = 0.5 * (med + lower);
    }
    if (med > 0.0 && std::isfinite(med)) sigmas[j] = med;
  }
  return sigmas;
}

}  // namespace tec
