#include "scing/tensor.hpp"

#include <cmath>
#include <utility>

#include "scing/errors.hpp"

namespace scing {

Tensor::Tensor(std::int64_t rows, std::int64_t cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {
  if (rows < 0 || cols < 0) {
    throw ShapeError("tensor dimensions must be non-negative, got " + shape_str());
  }
}

Tensor Tensor::zeros(std::int64_t rows, std::int64_t cols) { return Tensor(rows, cols); }

Tensor Tensor::full(std::int64_t rows, std::int64_t cols, double value) {
  Tensor t(rows, cols);
  for (std::int64_t i = 0; i < t.size(); ++i) t[i] = value;
  return t;
}

Tensor Tensor::scalar(double value) { return full(1, 1, value); }

Tensor Tensor::row(std::vector<double> values) {
  Tensor t;
  t.rows_ = 1;
  t.cols_ = static_cast<std::int64_t>(values.size());
  t.data_ = std::move(values);
  return t;
}

Tensor Tensor::from_rows(std::int64_t rows, std::int64_t cols, std::vector<double> data) {
  if (static_cast<std::int64_t>(data.size()) != rows * cols) {
    throw ShapeError("from_rows: data size " + std::to_string(data.size()) +
                     " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
  Tensor t;
  t.rows_ = rows;
  t.cols_ = cols;
  t.data_ = std::move(data);
  return t;
}

double Tensor::item() const {
  if (rows_ != 1 || cols_ != 1) {
    throw ShapeError("item() requires a 1x1 tensor, got " + shape_str());
  }
  return data_[0];
}

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

Tensor Tensor::reshaped(std::int64_t rows, std::int64_t cols) const {
  if (rows * cols != size()) {
    throw ShapeError("reshape from " + shape_str() + " to " + std::to_string(rows) + "x" +
                     std::to_string(cols) + " changes element count");
  }
  Tensor t = *this;
  t.rows_ = rows;
  t.cols_ = cols;
  return t;
}

std::string Tensor::shape_str() const {
  return std::to_string(rows_) + "x" + std::to_string(cols_);
}

void check_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (!a.same_shape(b)) {
    throw ShapeError(std::string(what) + ": shape mismatch, expected " + a.shape_str() +
                     ", actual " + b.shape_str());
  }
}

void check_shape(const Tensor& t, std::int64_t rows, std::int64_t cols, const char* what) {
  if (t.rows() != rows || t.cols() != cols) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", actual " + t.shape_str());
  }
}

}  // namespace scing
