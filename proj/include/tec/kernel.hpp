#pragma once

#include <Eigen/Dense>
#include <vector>

#include "tec/tensor.hpp"

namespace tec {

enum class KernelFamily { gaussian_rbf };

// Per-mode kernel choice. A single bandwidth broadcasts across modes.
struct KernelSpec {
  KernelFamily family = KernelFamily::gaussian_rbf;
  std::vector<double> bandwidths;  // sigma per mode

  static KernelSpec gaussian(std::vector<double> sigmas);
  static KernelSpec gaussian(double sigma, int modes);

  double bandwidth_for_mode(int j) const;
  void validate(int modes) const;
};

struct GramMatrix {
  Eigen::MatrixXd values;
  int n() const { return static_cast<int>(values.rows()); }
};

// exp(-||a-b||^2 / (2 sigma^2))
double mode_kernel_eval(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                        KernelFamily family, double bandwidth);

// Cross-norm tensor kernel: sum over rank-component pairs (k,l) of the
// product over modes of the per-mode kernel. Ranks of x and y may differ.
// The r_x*r_y products are accumulated in sorted order so the result is
// bitwise symmetric in its arguments.
double tensor_kernel(const CpTensor& x, const CpTensor& y,
                     const KernelSpec& spec);

// Lower triangle computed, mirrored into the upper.
GramMatrix gram_matrix(const std::vector<CpTensor>& data,
                       const KernelSpec& spec);

// Kernel row k[i] = tensor_kernel(data[i], x).
Eigen::VectorXd kernel_row(const std::vector<CpTensor>& data,
                           const CpTensor& x, const KernelSpec& spec);

// Per-mode median heuristic: sigma_j is the median Euclidean distance
// between mode-j factor columns over sample pairs. Falls back to 1.0 for a
// degenerate (all identical) mode.
std::vector<double> median_bandwidths(const std::vector<CpTensor>& data);

}  // namespace tec
