#include "eigml/tensor.hpp"

#include <cmath>
#include <sstream>

#include "eigml/errors.hpp"

namespace eigml {

namespace {
int product(const std::vector<int>& shape) {
  int n = 1;
  for (int s : shape) {
    if (s <= 0) throw DimensionError("tensor dimensions must be positive, got " + std::to_string(s));
    n *= s;
  }
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<int> shape_in, std::vector<double> data_in)
    : shape(std::move(shape_in)), data(std::move(data_in)) {
  if (product(shape) != static_cast<int>(data.size())) {
    throw DimensionError("tensor shape " + shape_str() + " does not match data length " +
                         std::to_string(data.size()));
  }
}

Tensor Tensor::zeros(const std::vector<int>& shape) {
  return Tensor(shape, std::vector<double>(product(shape), 0.0));
}

Tensor Tensor::full(const std::vector<int>& shape, double v) {
  return Tensor(shape, std::vector<double>(product(shape), v));
}

Tensor Tensor::scalar(double v) { return Tensor({1, 1}, {v}); }

Tensor Tensor::row(const std::vector<double>& v) {
  return Tensor({1, static_cast<int>(v.size())}, v);
}

Tensor Tensor::matrix(int r, int c, std::vector<double> v) {
  return Tensor({r, c}, std::move(v));
}

Tensor Tensor::identity(int n) {
  Tensor t = zeros({n, n});
  for (int i = 0; i < n; ++i) t.data[i * n + i] = 1.0;
  return t;
}

int Tensor::numel() const { return static_cast<int>(data.size()); }

int Tensor::rows() const {
  if (ndim() != 2) throw DimensionError("rows() on non-2D tensor " + shape_str());
  return shape[0];
}

int Tensor::cols() const {
  if (ndim() != 2) throw DimensionError("cols() on non-2D tensor " + shape_str());
  return shape[1];
}

double Tensor::scalar_value() const {
  if (!is_scalar()) throw DimensionError("scalar_value() on tensor " + shape_str());
  return data[0];
}

double& Tensor::at(int r, int c) { return data[static_cast<size_t>(r) * cols() + c]; }
double Tensor::at(int r, int c) const { return data[static_cast<size_t>(r) * cols() + c]; }

bool Tensor::all_finite() const {
  for (double v : data)
    if (!std::isfinite(v)) return false;
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < shape.size(); ++i) {
    if (i) os << "x";
    os << shape[i];
  }
  os << "]";
  return os.str();
}

}  // namespace eigml
