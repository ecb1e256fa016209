#pragma once

#include <string>
#include <vector>

namespace eigml {

// Dense float64 tensor, row-major. The tape works on 2-D shapes; row
// vectors are 1xN, scalars 1x1.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  Tensor(std::vector<int> shape_in, std::vector<double> data_in);

  static Tensor zeros(const std::vector<int>& shape);
  static Tensor full(const std::vector<int>& shape, double v);
  static Tensor scalar(double v);
  static Tensor row(const std::vector<double>& v);
  static Tensor matrix(int r, int c, std::vector<double> v);
  static Tensor identity(int n);

  int ndim() const { return static_cast<int>(shape.size()); }
  int numel() const;
  int rows() const;
  int cols() const;
  bool is_scalar() const { return numel() == 1; }
  double scalar_value() const;

  double& at(int r, int c);
  double at(int r, int c) const;

  bool all_finite() const;
  std::string shape_str() const;
};

}  // namespace eigml
