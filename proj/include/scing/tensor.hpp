#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scing {

/// Dense row-major matrix of doubles. Everything in the pipeline is 2-D:
/// vectors are stored as 1 x n rows, scalars as 1 x 1.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::int64_t rows, std::int64_t cols);

  static Tensor zeros(std::int64_t rows, std::int64_t cols);
  static Tensor full(std::int64_t rows, std::int64_t cols, double value);
  static Tensor scalar(double value);
  static Tensor row(std::vector<double> values);
  static Tensor from_rows(std::int64_t rows, std::int64_t cols, std::vector<double> data);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  std::int64_t size() const { return rows_ * cols_; }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }
  double& at(std::int64_t r, std::int64_t c) { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  double at(std::int64_t r, std::int64_t c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }

  /// Value of a 1x1 tensor; throws ShapeError otherwise.
  double item() const;

  bool same_shape(const Tensor& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }
  bool all_finite() const;

  Tensor reshaped(std::int64_t rows, std::int64_t cols) const;
  std::string shape_str() const;

  bool operator==(const Tensor& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  std::int64_t rows_{0};
  std::int64_t cols_{0};
  std::vector<double> data_;
};

/// Throws ShapeError naming the context when shapes differ.
void check_same_shape(const Tensor& a, const Tensor& b, const char* what);
void check_shape(const Tensor& t, std::int64_t rows, std::int64_t cols, const char* what);

}  // namespace scing
