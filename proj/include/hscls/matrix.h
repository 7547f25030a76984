#pragma once

#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hscls/kernels.h"
#include "hscls/real.h"
#include "hscls/rng.h"

namespace hscls {

class Vector;

// Dense row-major matrix of parameters. Row operations go through the
// kernel dispatch table.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::int64_t rows, std::int64_t cols)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), 0.0) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }

  real* row(std::int64_t i) {
    assert(i >= 0 && i < rows_);
    return data_.data() + i * cols_;
  }
  const real* row(std::int64_t i) const {
    assert(i >= 0 && i < rows_);
    return data_.data() + i * cols_;
  }

  real at(std::int64_t i, std::int64_t j) const { return row(i)[j]; }
  real& at(std::int64_t i, std::int64_t j) { return row(i)[j]; }

  void zero() { std::fill(data_.begin(), data_.end(), 0.0); }

  // Entries drawn uniformly from [-bound, bound], row-major order.
  void uniform(real bound, Rng& rng) {
    for (real& x : data_) {
      x = rng.uniform(-bound, bound);
    }
  }

  real dot_row(const Vector& v, std::int64_t i) const;
  void add_to_row(const Vector& v, std::int64_t i, real a);

  const std::vector<real>& data() const { return data_; }

  void save(std::ostream& out) const;
  static Matrix load(std::istream& in);

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<real> data_;
};

class Vector {
 public:
  explicit Vector(std::int64_t dim) : data_(static_cast<std::size_t>(dim), 0.0) {}

  std::int64_t size() const { return static_cast<std::int64_t>(data_.size()); }

  real* data() { return data_.data(); }
  const real* data() const { return data_.data(); }

  real operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }
  real& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }

  void zero() { std::fill(data_.begin(), data_.end(), 0.0); }

  void mul(real a) { kernels::active().scale(data(), a, data_.size()); }

  void add_row(const Matrix& m, std::int64_t i, real a = 1.0) {
    assert(m.cols() == size());
    kernels::active().axpy(data(), a, m.row(i), data_.size());
  }

  void add_vector(const Vector& v, real a = 1.0) {
    assert(v.size() == size());
    kernels::active().axpy(data(), a, v.data(), data_.size());
  }

 private:
  std::vector<real> data_;
};

inline real Matrix::dot_row(const Vector& v, std::int64_t i) const {
  assert(v.size() == cols_);
  return kernels::active().dot(row(i), v.data(), static_cast<std::size_t>(cols_));
}

inline void Matrix::add_to_row(const Vector& v, std::int64_t i, real a) {
  assert(v.size() == cols_);
  kernels::active().axpy(row(i), a, v.data(), static_cast<std::size_t>(cols_));
}

}  // namespace hscls
