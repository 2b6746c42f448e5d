#include "lbrep/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <stdexcept>

namespace lbrep {

RingMatrix::RingMatrix(Context context, std::size_t rows, std::size_t cols)
    : context_(std::move(context)), rows_(rows), cols_(cols), data_(rows * cols, GroupRingElement(context_)) {}

RingMatrix RingMatrix::identity(Context context, std::size_t n) {
  RingMatrix m(context, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GroupRingElement::integer(context, 1);
  return m;
}

RingMatrix RingMatrix::diagonal(const std::vector<GroupRingElement>& entries) {
  if (entries.empty()) throw std::invalid_argument("diagonal matrix needs at least one entry");
  RingMatrix m(entries.front().context(), entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
  RingMatrix r(context_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const auto& b = other(k, j);
        if (!b.is_zero()) r(i, j) += a * b;
      }
    }
  }
  return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shapes differ");
  RingMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += other.data_[i];
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference: shapes differ");
  RingMatrix r(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= other.data_[i];
  return r;
}

std::vector<GroupRingElement> RingMatrix::apply(const std::vector<GroupRingElement>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector product: length mismatch");
  std::vector<GroupRingElement> out(rows_, GroupRingElement(context_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  }
  return out;
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix r(context_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  }
  return r;
}

RingMatrix RingMatrix::involution() const {
  RingMatrix r(*this);
  for (auto& e : r.data_) e = e.involution();
  return r;
}

RingMatrix RingMatrix::scaled(const GroupRingElement& s) const {
  RingMatrix r(*this);
  for (auto& e : r.data_) e = e * s;
  return r;
}

bool RingMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = (*this)(i, j);
      if (i == j ? !e.is_one() : !e.is_zero()) return false;
    }
  }
  return true;
}

bool RingMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const GroupRingElement& e) { return e.is_zero(); });
}

bool RingMatrix::is_diagonal() const {
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (i != j && !(*this)(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool RingMatrix::operator==(const RingMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

GroupRingElement exact_quotient(const GroupRingElement& a, const GroupRingElement& b) {
  auto q = divide_exact(a, b);
  if (!q) throw std::logic_error("fraction-free elimination hit an inexact division");
  return *q;
}

// Fraction-free Gauss-Jordan on [A | I]. Returns the final pivot (= ±det A)
// and the right block R with R·A = pivot·I, or nullopt when A is singular.
std::optional<std::pair<GroupRingElement, RingMatrix>> bareiss_jordan(const RingMatrix& a) {
  const std::size_t n = a.rows();
  const auto& ctx = a.context();
  std::vector<std::vector<GroupRingElement>> w(n, std::vector<GroupRingElement>(2 * n, GroupRingElement(ctx)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = a(i, j);
    w[i][n + i] = GroupRingElement::integer(ctx, 1);
  }
  GroupRingElement prev = GroupRingElement::integer(ctx, 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (w[r][k].is_zero()) continue;
      if (pivot == n || w[r][k].term_count() < w[pivot][k].term_count()) pivot = r;
    }
    if (pivot == n) return std::nullopt;
    std::swap(w[k], w[pivot]);
    const GroupRingElement p = w[k][k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const GroupRingElement f = w[i][k];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        auto num = p * w[i][j] - f * w[k][j];
        w[i][j] = num.is_zero() ? GroupRingElement(ctx) : exact_quotient(num, prev);
      }
    }
    prev = p;
  }
  RingMatrix right(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) right(i, j) = w[i][n + j];
  }
  return std::pair{prev, std::move(right)};
}

// Fraction-free Gaussian elimination; returns det.
GroupRingElement bareiss_determinant(std::vector<std::vector<GroupRingElement>> w, const Context& ctx) {
  const std::size_t n = w.size();
  if (n == 0) return GroupRingElement::integer(ctx, 1);
  GroupRingElement prev = GroupRingElement::integer(ctx, 1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = n;
    for (std::size_t r = k; r < n; ++r) {
      if (!w[r][k].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == n) return GroupRingElement(ctx);
    if (pivot != k) {
      std::swap(w[k], w[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = w[k][k] * w[i][j] - w[i][k] * w[k][j];
        w[i][j] = num.is_zero() ? GroupRingElement(ctx) : exact_quotient(num, prev);
      }
      w[i][k] = GroupRingElement(ctx);
    }
    prev = w[k][k];
  }
  return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

std::vector<std::vector<GroupRingElement>> rows_of(const RingMatrix& a) {
  std::vector<std::vector<GroupRingElement>> w(a.rows(), std::vector<GroupRingElement>(a.cols(), GroupRingElement(a.context())));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) w[i][j] = a(i, j);
  }
  return w;
}

}  // namespace

GroupRingElement RingMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (!context_->coefficients().is_exact()) throw std::domain_error("determinant needs exact coefficients");
  return bareiss_determinant(rows_of(*this), context_);
}

RingMatrix RingMatrix::adjugate() const {
  if (!is_square()) throw std::invalid_argument("adjugate of a non-square matrix");
  if (!context_->coefficients().is_exact()) throw std::domain_error("adjugate needs exact coefficients");
  const std::size_t n = rows_;
  if (n == 1) return identity(context_, 1);
  if (auto result = bareiss_jordan(*this)) {
    auto& [pivot, right] = *result;
    auto det = determinant();
    // right = (pivot / det) · adj with pivot = ±det.
    return pivot == det ? right : right.scaled(GroupRingElement::integer(context_, -1));
  }
  // Singular: cofactor expansion through (n-1)-minors.
  RingMatrix adj(context_, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<GroupRingElement>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<GroupRingElement> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back((*this)(r, c));
        }
        minor.push_back(std::move(row));
      }
      auto m = bareiss_determinant(std::move(minor), context_);
      adj(i, j) = ((i + j) % 2 == 0) ? m : -m;
    }
  }
  return adj;
}

std::optional<RingMatrix> RingMatrix::inverse() const {
  auto det = determinant();
  if (det.is_zero()) return std::nullopt;
  auto inv = det.unit_inverse();
  if (!inv) return std::nullopt;
  return adjugate().scaled(*inv);
}

RingMatrix specialize(const RingMatrix& m, const std::map<std::string, Scalar>& values, const Context& target) {
  RingMatrix r(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = specialize(m(i, j), values, target);
  }
  return r;
}

ScalarMatrix evaluate(const RingMatrix& m, const std::map<std::string, Scalar>& values,
                      const CoefficientRing& target) {
  ScalarMatrix out(m.rows(), std::vector<Scalar>(m.cols(), target.zero()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), values, target);
  }
  return out;
}

std::size_t field_rank(const ScalarMatrix& m, const CoefficientRing& field) {
  if (!field.is_field()) throw std::domain_error("field_rank needs rationals or integers mod p");
  ScalarMatrix w = m;
  const std::size_t rows = w.size();
  const std::size_t cols = rows ? w[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!field.is_zero(w[r][c])) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(w[rank], w[pivot]);
    auto inv = field.inverse(w[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (field.is_zero(w[r][c])) continue;
      auto f = field.mul(w[r][c], inv);
      for (std::size_t j = c; j < cols; ++j) w[r][j] = field.sub(w[r][j], field.mul(f, w[rank][j]));
    }
    ++rank;
  }
  return rank;
}

std::size_t numerical_rank(const ScalarMatrix& m, double tolerance) {
  const auto rows = static_cast<Eigen::Index>(m.size());
  const auto cols = rows ? static_cast<Eigen::Index>(m[0].size()) : 0;
  if (rows == 0 || cols == 0) return 0;
  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      const auto& s = m[i][j];
      a(i, j) = std::holds_alternative<Complex>(s) ? std::get<Complex>(s)
                                                   : Complex(std::get<Rational>(s).convert_to<double>(), 0.0);
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = tolerance * sv(0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

std::vector<Integer> smith_invariant_factors(const std::vector<std::vector<Integer>>& input) {
  auto a = input;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // Smallest non-zero entry of the remaining block as pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& row : a) std::swap(row[t], row[pc]);

    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      Integer q = a[i][t] / a[t][t];
      for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      Integer q = a[t][j] / a[t][t];
      for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;
    // Divisibility: fold any entry not divisible by the pivot into row t.
    bool divisible = true;
    for (std::size_t i = t + 1; i < rows && divisible; ++i) {
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[i][j] % a[t][t] != 0) {
          for (std::size_t c = t; c < cols; ++c) a[t][c] += a[i][c];
          divisible = false;
          break;
        }
      }
    }
    if (!divisible) continue;
    diag.push_back(abs(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace lbrep
