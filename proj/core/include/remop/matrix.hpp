#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace remop {

class Rng;

// Dense row-major matrix of 64-bit floats. All training and inference
// math runs through this type; persistence narrows to 32 bits elsewhere.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, 0.0) {}

  static Matrix zeros(int r, int c) { return Matrix(r, c); }
  static Matrix gaussian(int r, int c, Rng& rng, double stddev);

  double& at(int r, int c) { return data[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<size_t>(r) * cols + c]; }

  std::span<double> row(int r) { return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }
  std::span<const double> row(int r) const { return {data.data() + static_cast<size_t>(r) * cols, static_cast<size_t>(cols)}; }

  size_t size() const { return data.size(); }
  bool same_shape(const Matrix& other) const { return rows == other.rows && cols == other.cols; }
  bool all_finite() const;

  std::string shape_str() const;
};

// Standard product with deterministic accumulation: for each output cell
// the sum over k runs left to right. Throws ShapeError on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);

// a * b^T and a^T * b without materializing transposes. Same
// deterministic accumulation order as matmul.
Matrix matmul_nt(const Matrix& a, const Matrix& b);
Matrix matmul_tn(const Matrix& a, const Matrix& b);

// Row-wise softmax with per-row max subtraction. Each output row sums
// to 1 within 1e-12 for inputs of magnitude up to 1e4.
Matrix softmax_rows(const Matrix& m);

// Zero-mean unit-variance normalization of one row followed by the
// affine transform gain * xhat + bias.
std::vector<double> layer_norm(std::span<const double> x,
                               std::span<const double> gain,
                               std::span<const double> bias,
                               double eps = 1e-5);

}  // namespace remop
