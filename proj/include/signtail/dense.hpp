#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace signtail {

// ---- dense containers ----

/**
 * Dense real vector. Plain contiguous storage with bounds-unchecked element
 * access; all numerical routines in this library operate on these values or
 * on DenseMatrix.
 */
class DenseVector {
 public:
  DenseVector() = default;
  explicit DenseVector(std::size_t n, double fill = 0.0) : e_(n, fill) {}
  DenseVector(std::initializer_list<double> init) : e_(init) {}

  static DenseVector zeros(std::size_t n) { return DenseVector(n, 0.0); }
  static DenseVector constant(std::size_t n, double c) { return DenseVector(n, c); }

  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }

  double& operator[](std::size_t i) { return e_[i]; }
  double operator[](std::size_t i) const { return e_[i]; }

  double* data() { return e_.data(); }
  const double* data() const { return e_.data(); }

  std::vector<double>::iterator begin() { return e_.begin(); }
  std::vector<double>::iterator end() { return e_.end(); }
  std::vector<double>::const_iterator begin() const { return e_.begin(); }
  std::vector<double>::const_iterator end() const { return e_.end(); }

  bool all_finite() const {
    for (double x : e_) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  }

  bool operator==(const DenseVector& o) const { return e_ == o.e_; }

 private:
  std::vector<double> e_;
};

/**
 * Dense real matrix, row-major storage. (i, j) indexes row i, column j.
 */
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static DenseMatrix zeros(std::size_t rows, std::size_t cols) {
    return DenseMatrix(rows, cols, 0.0);
  }
  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static DenseMatrix diag(const DenseVector& d) {
    DenseMatrix m(d.size(), d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  double* data() { return e_.data(); }
  const double* data() const { return e_.data(); }

  bool all_finite() const {
    for (double x : e_) {
      if (!std::isfinite(x)) return false;
    }
    return true;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> e_;
};

// ---- shape checks ----

inline void require_same_size(const DenseVector& a, const DenseVector& b,
                              const char* where) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(std::string(where) + ": dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  }
}

inline void require_same_shape(const DenseMatrix& a, const DenseMatrix& b,
                               const char* where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(where) + ": shape mismatch");
  }
}

// ---- elementwise arithmetic ----

inline DenseVector operator+(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "operator+");
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline DenseVector operator-(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "operator-");
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline DenseVector operator*(double s, const DenseVector& a) {
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator+");
  DenseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) r.data()[i] = a.data()[i] + b.data()[i];
  return r;
}

inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "operator-");
  DenseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) r.data()[i] = a.data()[i] - b.data()[i];
  return r;
}

inline DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.size(); ++i) r.data()[i] = s * a.data()[i];
  return r;
}

// ---- products ----

inline double dot(const DenseVector& a, const DenseVector& b) {
  require_same_size(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/** Frobenius inner product <A, B> = sum_ij A_ij B_ij. */
inline double frob_inner(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b, "frob_inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data()[i] * b.data()[i];
  return s;
}

inline DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  DenseMatrix r(a.rows(), b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

inline DenseVector matvec(const DenseMatrix& a, const DenseVector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matvec: dimension mismatch");
  DenseVector r(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

/** Reshape an m-by-n matrix into a length m*n vector in row-major order. */
inline DenseVector vectorize(const DenseMatrix& a) {
  DenseVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a.data()[i];
  return r;
}

/** Inverse of vectorize: fill an m-by-n matrix from a row-major flat vector. */
inline DenseMatrix reshape(const DenseVector& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("reshape: size mismatch");
  DenseMatrix r(rows, cols);
  for (std::size_t i = 0; i < v.size(); ++i) r.data()[i] = v[i];
  return r;
}

}  // namespace signtail
