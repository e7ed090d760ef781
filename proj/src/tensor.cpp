#include "tec/tensor.hpp"

#include <cmath>
#include <limits>

#include "tec/errors.hpp"

namespace tec {

namespace {

// ~16 GiB of doubles; anything above is a caller mistake, not a workload.
constexpr std::int64_t kMaxElements = std::int64_t(1) << 31;

}  // namespace

DenseTensor::DenseTensor(std::vector<int> dims, Eigen::VectorXd vals)
    : mode_dims(std::move(dims)), values(std::move(vals)) {
  if (element_count(mode_dims) != values.size())
    throw DataError("dense tensor: value count does not match mode dims");
}

std::int64_t DenseTensor::element_count(const std::vector<int>& dims) {
  if (dims.empty()) throw DataError("tensor must have at least one mode");
  std::int64_t n = 1;
  for (int d : dims) {
    if (d < 1) throw DataError("tensor mode dims must be positive");
    if (n > kMaxElements / d)
      throw DataError("dense tensor capacity exceeded");
    n *= d;
  }
  return n;
}

DenseTensor DenseTensor::zeros(std::vector<int> dims) {
  const std::int64_t n = element_count(dims);
  DenseTensor t;
  t.mode_dims = std::move(dims);
  t.values = Eigen::VectorXd::Zero(n);
  return t;
}

double& DenseTensor::at(const std::vector<int>& index) {
  std::int64_t lin = 0;
  for (std::size_t k = 0; k < mode_dims.size(); ++k)
    lin = lin * mode_dims[k] + index[k];
  return values[lin];
}

double DenseTensor::at(const std::vector<int>& index) const {
  return const_cast<DenseTensor*>(this)->at(index);
}

CpTensor::CpTensor(std::vector<Eigen::MatrixXd> f) : factors(std::move(f)) {
  validate();
}

std::vector<int> CpTensor::mode_dims() const {
  std::vector<int> dims;
  dims.reserve(factors.size());
  for (const auto& f : factors) dims.push_back(static_cast<int>(f.rows()));
  return dims;
}

void CpTensor::validate() const {
  if (factors.empty()) throw DataError("cp tensor must have at least one mode");
  const Eigen::Index r = factors[0].cols();
  if (r < 1) throw DataError("cp tensor rank must be positive");
  for (const auto& f : factors) {
    if (f.cols() != r) throw DataError("cp tensor factors disagree on rank");
    if (f.rows() < 1) throw DataError("cp tensor factor has no rows");
    if (!f.allFinite()) throw DataError("cp tensor factor has non-finite entries");
  }
}

Eigen::MatrixXd khatri_rao(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.cols() != b.cols())
    throw DataError("khatri_rao: column count mismatch");
  const Eigen::Index ia = a.rows(), ib = b.rows(), r = a.cols();
  Eigen::MatrixXd out(ia * ib, r);
  for (Eigen::Index k = 0; k < r; ++k)
    for (Eigen::Index i = 0; i < ia; ++i)
      out.col(k).segment(i * ib, ib) = a(i, k) * b.col(k);
  return out;
}

namespace {

// Khatri-Rao chain over all modes except `skip` (0-based), highest mode
// first, so that the lowest mode index varies fastest in the row ordering.
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

DenseTensor cp_reconstruct(const CpTensor& t) {
  t.validate();
  const std::vector<int> dims = t.mode_dims();
  DenseTensor::element_count(dims);  // capacity check up front
  if (t.order() == 1) {
    DenseTensor out;
    out.mode_dims = dims;
    out.values = t.factors[0].rowwise().sum();
    return out;
  }
  const Eigen::MatrixXd w = kr_chain_skip(t.factors, 0);
  const Eigen::MatrixXd unfolded = t.factors[0] * w.transpose();
  return mode_refold(unfolded, 1, dims);
}

namespace {

void check_mode(const std::vector<int>& dims, int mode) {
  if (mode < 1 || mode > static_cast<int>(dims.size()))
    throw DataError("mode index out of range");
}

// Column strides of the mode-n unfolding: J_k = prod of dims of modes below
// k, skipping n itself.
std::vector<std::int64_t> unfold_strides(const std::vector<int>& dims, int n) {
  std::vector<std::int64_t> stride(dims.size(), 0);
  std::int64_t s = 1;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (static_cast<int>(k) == n) continue;
    stride[k] = s;
    s *= dims[k];
  }
  return stride;
}

}  // namespace

Eigen::MatrixXd mode_unfold(const DenseTensor& t, int mode) {
  check_mode(t.mode_dims, mode);
  const int d = t.order();
  const int n = mode - 1;
  const std::int64_t total = t.size();
  const std::int64_t rows = t.mode_dims[n];
  const auto stride = unfold_strides(t.mode_dims, n);

  Eigen::MatrixXd out(rows, total / rows);
  std::vector<int> idx(d, 0);
  for (std::int64_t lin = 0; lin < total; ++lin) {
    std::int64_t col = 0;
    for (int k = 0; k < d; ++k)
      if (k != n) col += idx[k] * stride[k];
    out(idx[n], col) = t.values[lin];
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < t.mode_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

DenseTensor mode_refold(const Eigen::MatrixXd& m, int mode,
                        const std::vector<int>& dims) {
  check_mode(dims, mode);
  const int d = static_cast<int>(dims.size());
  const int n = mode - 1;
  const std::int64_t total = DenseTensor::element_count(dims);
  if (m.rows() != dims[n] || m.rows() * m.cols() != total)
    throw DataError("mode_refold: matrix shape does not match dims");
  const auto stride = unfold_strides(dims, n);

  DenseTensor out;
  out.mode_dims = dims;
  out.values.resize(total);
  std::vector<int> idx(d, 0);
  for (std::int64_t lin = 0; lin < total; ++lin) {
    std::int64_t col = 0;
    for (int k = 0; k < d; ++k)
      if (k != n) col += idx[k] * stride[k];
    out.values[lin] = m(idx[n], col);
    for (int k = d - 1; k >= 0; --k) {
      if (++idx[k] < dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

DenseTensor mode_multiply(const DenseTensor& t, int mode,
                          const Eigen::MatrixXd& m) {
  check_mode(t.mode_dims, mode);
  if (m.cols() != t.mode_dims[mode - 1])
    throw DataError("mode_multiply: matrix columns must match mode dim");
  std::vector<int> dims = t.mode_dims;
  dims[mode - 1] = static_cast<int>(m.rows());
  return mode_refold(m * mode_unfold(t, mode), mode, dims);
}

}  // namespace tec
