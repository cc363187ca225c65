#pragma once

#include <Eigen/Dense>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spin7spec/rational.hpp"

namespace spin7spec {

// Dense matrix over Q. Sizes in this project stay below ~400, so dense
// storage with zero-skipping products is enough.
class ExactMat {
 public:
  ExactMat() : rows_(0), cols_(0) {}
  ExactMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static ExactMat identity(int n) {
    ExactMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  ExactMat transpose() const {
    ExactMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  ExactMat operator*(const ExactMat& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matmul: shape mismatch");
    ExactMat c(rows_, b.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const Rational& aik = at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b.at(k, j);
          if (bkj == 0) continue;
          c.at(i, j) += aik * bkj;
        }
      }
    return c;
  }

  ExactMat& operator+=(const ExactMat& b) {
    require_same_shape(b);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
    return *this;
  }
  ExactMat& operator-=(const ExactMat& b) {
    require_same_shape(b);
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
    return *this;
  }
  ExactMat& operator*=(const Rational& c) {
    for (auto& x : a_) x *= c;
    return *this;
  }
  friend ExactMat operator+(ExactMat a, const ExactMat& b) { return a += b; }
  friend ExactMat operator-(ExactMat a, const ExactMat& b) { return a -= b; }
  friend ExactMat operator*(const Rational& c, ExactMat a) { return a *= c; }

  bool operator==(const ExactMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Rational trace() const {
    Rational t = 0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
    return t;
  }

  Eigen::MatrixXd to_double() const {
    Eigen::MatrixXd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j).get_d();
    return m;
  }

  // Row echelon reduction in place; returns pivot column list. Pivots are
  // chosen to keep intermediate entries small (shortest numerator+denominator
  // among candidate rows).
  std::vector<int> rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int best = -1;
      size_t best_sz = 0;
      for (int i = r; i < rows_; ++i) {
        const Rational& x = at(i, c);
        if (x == 0) continue;
        size_t sz = mpz_size(x.get_num().get_mpz_t()) + mpz_size(x.get_den().get_mpz_t());
        if (best < 0 || sz < best_sz) {
          best = i;
          best_sz = sz;
        }
      }
      if (best < 0) continue;
      swap_rows(best, r);
      Rational inv = 1 / at(r, c);
      for (int j = c; j < cols_; ++j) at(r, j) *= inv;
      for (int i = 0; i < rows_; ++i) {
        if (i == r) continue;
        Rational f = at(i, c);
        if (f == 0) continue;
        for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
      }
      pivots.push_back(c);
      ++r;
    }
    return pivots;
  }

  int rank() const {
    ExactMat copy = *this;
    return int(copy.rref().size());
  }

  // Columns form a basis of the nullspace.
  ExactMat kernel() const {
    ExactMat red = *this;
    std::vector<int> pivots = red.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cols_; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    ExactMat k(cols_, int(free_cols.size()));
    for (size_t f = 0; f < free_cols.size(); ++f) {
      int fc = free_cols[f];
      k.at(fc, int(f)) = 1;
      for (size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], int(f)) = -red.at(int(pi), fc);
    }
    return k;
  }

  // Solves A X = B exactly for full-column-rank A; throws if inconsistent.
  static ExactMat solve(const ExactMat& A, const ExactMat& B) {
    if (A.rows() != B.rows()) throw std::invalid_argument("solve: shape mismatch");
    ExactMat aug(A.rows(), A.cols() + B.cols());
    for (int i = 0; i < A.rows(); ++i) {
      for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
      for (int j = 0; j < B.cols(); ++j) aug.at(i, A.cols() + j) = B.at(i, j);
    }
    std::vector<int> pivots = aug.rref();
    ExactMat X(A.cols(), B.cols());
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      if (pivots[pi] >= A.cols()) throw std::runtime_error("solve: inconsistent system");
      for (int j = 0; j < B.cols(); ++j) X.at(pivots[pi], j) = aug.at(int(pi), A.cols() + j);
    }
    if (!(A * X == B)) throw std::runtime_error("solve: no exact solution");
    return X;
  }

  ExactMat inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    ExactMat inv = solve(*this, identity(rows_));
    return inv;
  }

  static ExactMat kron(const ExactMat& a, const ExactMat& b) {
    ExactMat k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) {
        if (a.at(i, j) == 0) continue;
        for (int p = 0; p < b.rows(); ++p)
          for (int q = 0; q < b.cols(); ++q) {
            if (b.at(p, q) == 0) continue;
            k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
          }
      }
    return k;
  }

  ExactMat col(int j) const {
    ExactMat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
  }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }
  void require_same_shape(const ExactMat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("shape mismatch");
  }

  int rows_, cols_;
  std::vector<Rational> a_;
};

// Multiplicities of candidate eigenvalues of an exactly diagonalizable matrix
// via trace moments. Candidates must be distinct and cover the spectrum: this
// is certified by checking that prod (A - lambda) annihilates A exactly.
// Returns the eigenspace dimensions in candidate order.
inline std::vector<Rational> eigenspace_dims_certified(const ExactMat& A,
                                                       const std::vector<Rational>& candidates) {
  int n = A.rows();
  ExactMat ann = ExactMat::identity(n);
  for (const Rational& lam : candidates) {
    ExactMat shift = A;
    for (int i = 0; i < n; ++i) shift.at(i, i) -= lam;
    ann = ann * shift;
  }
  if (!ann.is_zero())
    throw std::runtime_error("eigenspace_dims_certified: candidate set does not cover spectrum");

  int k = int(candidates.size());
  // Vandermonde system sum_j dims_j * lambda_j^i = tr(A^i), i = 0..k-1.
  ExactMat V(k, k), t(k, 1);
  ExactMat power = ExactMat::identity(n);
  for (int i = 0; i < k; ++i) {
    t.at(i, 0) = power.trace();
    if (i + 1 < k) power = power * A;
    for (int j = 0; j < k; ++j) {
      Rational p = 1;
      for (int e = 0; e < i; ++e) p *= candidates[j];
      V.at(i, j) = p;
    }
  }
  ExactMat dims = ExactMat::solve(V, t);
  std::vector<Rational> out(k);
  for (int j = 0; j < k; ++j) {
    out[j] = dims.at(j, 0);
    if (out[j].get_den() != 1 || out[j] < 0)
      throw std::runtime_error("eigenspace_dims_certified: non-integer eigenspace dimension");
  }
  return out;
}

}  // namespace spin7spec
