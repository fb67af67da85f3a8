#include "remop/matrix.hpp"

#include <cmath>
#include <sstream>

#include "remop/errors.hpp"
#include "remop/rng.hpp"

namespace remop {

Matrix Matrix::gaussian(int r, int c, Rng& rng, double stddev) {
  Matrix m(r, c);
  for (auto& v : m.data) v = rng.normal() * stddev;
  return m;
}

bool Matrix::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Matrix::shape_str() const {
  std::ostringstream os;
  os << rows << "x" << cols;
  return os.str();
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) {
    throw ShapeError("matmul: incompatible shapes " + a.shape_str() + " and " + b.shape_str());
  }
  Matrix out(a.rows, b.cols);
  // ikj loop order: cache-friendly and k still ascends for every output
  // cell, so accumulation order matches the plain ijk definition.
  for (int i = 0; i < a.rows; ++i) {
    double* out_row = out.data.data() + static_cast<size_t>(i) * out.cols;
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a.at(i, k);
      const double* b_row = b.data.data() + static_cast<size_t>(k) * b.cols;
      for (int j = 0; j < b.cols; ++j) out_row[j] += aik * b_row[j];
    }
  }
  return out;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
  if (a.cols != b.cols) {
    throw ShapeError("matmul_nt: incompatible shapes " + a.shape_str() + " and " + b.shape_str() + "^T");
  }
  Matrix out(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    const double* a_row = a.data.data() + static_cast<size_t>(i) * a.cols;
    for (int j = 0; j < b.rows; ++j) {
      const double* b_row = b.data.data() + static_cast<size_t>(j) * b.cols;
      double sum = 0.0;
      for (int k = 0; k < a.cols; ++k) sum += a_row[k] * b_row[k];
      out.at(i, j) = sum;
    }
  }
  return out;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
  if (a.rows != b.rows) {
    throw ShapeError("matmul_tn: incompatible shapes " + a.shape_str() + "^T and " + b.shape_str());
  }
  Matrix out(a.cols, b.cols);
  for (int k = 0; k < a.rows; ++k) {
    const double* a_row = a.data.data() + static_cast<size_t>(k) * a.cols;
    const double* b_row = b.data.data() + static_cast<size_t>(k) * b.cols;
    for (int i = 0; i < a.cols; ++i) {
      double* out_row = out.data.data() + static_cast<size_t>(i) * out.cols;
      const double aki = a_row[i];
      for (int j = 0; j < b.cols; ++j) out_row[j] += aki * b_row[j];
    }
  }
  return out;
}

Matrix softmax_rows(const Matrix& m) {
  if (m.rows == 0 || m.cols == 0) throw ShapeError("softmax_rows: empty matrix");
  Matrix out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i) {
    const auto in_row = m.row(i);
    auto out_row = out.row(i);
    double max_val = in_row[0];
    for (double v : in_row) max_val = std::max(max_val, v);
    double sum = 0.0;
    for (int j = 0; j < m.cols; ++j) {
      out_row[j] = std::exp(in_row[j] - max_val);
      sum += out_row[j];
    }
    const double inv = 1.0 / sum;
    for (int j = 0; j < m.cols; ++j) out_row[j] *= inv;
  }
  return out;
}

std::vector<double> layer_norm(std::span<const double> x,
                               std::span<const double> gain,
                               std::span<const double> bias,
                               double eps) {
  if (x.size() != gain.size() || x.size() != bias.size()) {
    throw ShapeError("layer_norm: length mismatch");
  }
  if (eps <= 0.0) throw ConfigError("layer_norm: eps must be positive");
  const size_t n = x.size();
  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : x) var += (v - mean) * (v - mean);
  var /= static_cast<double>(n);
  const double inv_std = 1.0 / std::sqrt(var + eps);
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = gain[i] * ((x[i] - mean) * inv_std) + bias[i];
  return out;
}

}  // namespace remop
