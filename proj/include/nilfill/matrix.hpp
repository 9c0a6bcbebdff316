#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nilfill/rational.hpp"

namespace nilfill {

// Dense matrix over Q. Row-major. Sized for the paper-scale complexes
// (dimensions in the hundreds), not for serious linear algebra.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static QMatrix from_rows(const std::vector<QVector>& rows) {
    if (rows.empty()) return QMatrix();
    QMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVector row(std::size_t i) const {
    QVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
  }

  QMatrix transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  QVector apply(const QVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix/vector size mismatch");
    QVector out(rows_, Rational(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      Rational s(0);
      for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
      out[i] = s;
    }
    return out;
  }

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> data_;
};

struct Echelon {
  QMatrix mat;                     // reduced row echelon form
  std::vector<std::size_t> pivots; // pivot column per nonzero row
};

// Reduced row echelon form, pivoting on the first nonzero entry in column
// order. Deterministic; used to pick canonical complements downstream.
inline Echelon rref(QMatrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.mat = std::move(m);
  return e;
}

inline std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

// Basis of the right kernel {v : Mv = 0}; size cols - rank.
inline std::vector<QVector> kernel_basis(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<QVector> basis;
  for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
    if (is_pivot[free_c]) continue;
    QVector v(m.cols(), Rational(0));
    v[free_c] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
      v[e.pivots[i]] = -e.mat(i, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of Mx = b, or nullopt if inconsistent.
inline std::optional<QVector> solve(const QMatrix& m, const QVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: size mismatch");
  QMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  for (auto c : e.pivots)
    if (c == m.cols()) return std::nullopt;
  QVector x(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i)
    x[e.pivots[i]] = e.mat(i, m.cols());
  return x;
}

// Span membership: is v in the row space of rows?
inline bool in_span(const std::vector<QVector>& rows, const QVector& v) {
  if (rows.empty()) return is_zero(v);
  QMatrix m = QMatrix::from_rows(rows).transpose();
  return solve(m, v).has_value();
}

// Canonical (rref) basis of the span of the given vectors.
inline std::vector<QVector> span_basis(const std::vector<QVector>& vectors) {
  if (vectors.empty()) return {};
  Echelon e = rref(QMatrix::from_rows(vectors));
  std::vector<QVector> basis;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) basis.push_back(e.mat.row(i));
  return basis;
}

}  // namespace nilfill
