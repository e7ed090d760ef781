#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

namespace tec {

// Dense d-mode tensor stored row-major (last mode varies fastest).
struct DenseTensor {
  std::vector<int> mode_dims;
  Eigen::VectorXd values;

  DenseTensor() = default;
  DenseTensor(std::vector<int> dims, Eigen::VectorXd vals);

  int order() const { return static_cast<int>(mode_dims.size()); }
  std::int64_t size() const { return values.size(); }

  static std::int64_t element_count(const std::vector<int>& dims);
  static DenseTensor zeros(std::vector<int> dims);

  double& at(const std::vector<int>& index);
  double at(const std::vector<int>& index) const;
};

// Tensor in CP form: factor j is an I_j x r matrix whose column k is the
// mode-j component of the k-th rank-one term.
struct CpTensor {
  std::vector<Eigen::MatrixXd> factors;

  CpTensor() = default;
  explicit CpTensor(std::vector<Eigen::MatrixXd> f);

  int order() const { return static_cast<int>(factors.size()); }
  int rank() const { return factors.empty() ? 0 : static_cast<int>(factors[0].cols()); }
  std::vector<int> mode_dims() const;

  void validate() const;
};

DenseTensor cp_reconstruct(const CpTensor& t);

// Mode-n unfolding, 1-based mode index. Column order follows the usual
// convention where the lowest remaining mode index varies fastest, matching
// the Khatri-Rao chain A(d) (.) ... (.) A(n+1) (.) A(n-1) (.) ... (.) A(1).
Eigen::MatrixXd mode_unfold(const DenseTensor& t, int mode);
DenseTensor mode_refold(const Eigen::MatrixXd& m, int mode,
                        const std::vector<int>& dims);

// Mode-n product: unfold, left-multiply, refold with the new mode size.
DenseTensor mode_multiply(const DenseTensor& t, int mode,
                          const Eigen::MatrixXd& m);

// Columnwise Kronecker product: column k of the result is a[:,k] (x) b[:,k]
// with the b index varying fastest.
Eigen::MatrixXd khatri_rao(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace tec
