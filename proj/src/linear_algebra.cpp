#include "coxeter/linear_algebra.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace coxeter {

namespace {

void append_key(std::string& out, const AlgReal& x) {
  bool first = true;
  for (const auto& c : x.coefficients()) {
    if (!first) out += ',';
    first = false;
    out += c.get_str();
  }
}

std::string display(const AlgReal& x) {
  std::string s = x.to_string();
  if (s.find(' ') != std::string::npos) s = "(" + s + ")";
  return s;
}

}  // namespace

RootVector::RootVector(const FieldContext& field, std::size_t dim)
    : coords_(dim, AlgReal::zero(field)) {
  if (dim == 0) throw std::invalid_argument("RootVector: dimension must be positive");
}

RootVector::RootVector(std::vector<AlgReal> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("RootVector: dimension must be positive");
}

RootVector::RootVector(const FieldContext& field, const std::vector<long>& coords)
    : RootVector(field, coords.size()) {
  for (std::size_t i = 0; i < coords.size(); ++i) coords_[i] = AlgReal(field, coords[i]);
}

RootVector RootVector::simple_root(const FieldContext& field, std::size_t dim, std::size_t i) {
  RootVector v(field, dim);
  v.coords_.at(i) = AlgReal::one(field);
  return v;
}

bool RootVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

RootVector& RootVector::operator+=(const RootVector& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("RootVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

RootVector& RootVector::operator-=(const RootVector& rhs) {
  if (rhs.size() != size()) throw std::invalid_argument("RootVector: dimension mismatch");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

RootVector& RootVector::operator*=(const AlgReal& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RootVector operator-(RootVector a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

std::string RootVector::key() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ';';
    append_key(out, coords_[i]);
  }
  return out;
}

std::string RootVector::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << display(coords_[i]);
  os << ")";
  return os.str();
}

Matrix::Matrix(const FieldContext& field, std::size_t rows, std::size_t cols)
    : field_(&field), rows_(rows), cols_(cols), data_(rows * cols, AlgReal::zero(field)) {}

Matrix Matrix::identity(const FieldContext& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgReal::one(field);
  return m;
}

RootVector Matrix::column(std::size_t c) const {
  std::vector<AlgReal> v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return RootVector(std::move(v));
}

Matrix Matrix::transpose() const {
  Matrix t(*field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: dimension mismatch");
  Matrix out(*a.field_, a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const AlgReal& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c)
        if (!b(k, c).is_zero()) out(r, c) += x * b(k, c);
    }
  return out;
}

RootVector operator*(const Matrix& a, const RootVector& v) {
  if (a.cols_ != v.size()) throw std::invalid_argument("Matrix: dimension mismatch");
  RootVector out(*a.field_, a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(r, k).is_zero() && !v[k].is_zero()) out[r] += a(r, k) * v[k];
  return out;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  const AlgReal one = AlgReal::one(*field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const AlgReal& x = (*this)(r, c);
      if (r == c ? !(x == one) : !x.is_zero()) return false;
    }
  return true;
}

std::string Matrix::key() const {
  std::string out = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (i) out += ';';
    append_key(out, data_[i]);
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << display((*this)(r, c));
    os << "]";
  }
  os << "]";
  return os.str();
}

AlgReal bilinear(const Matrix& m, const RootVector& v, const RootVector& w) {
  AlgReal acc = AlgReal::zero(m.field());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i].is_zero()) continue;
    AlgReal row = AlgReal::zero(m.field());
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !w[j].is_zero()) row += m(i, j) * w[j];
    acc += v[i] * row;
  }
  return acc;
}

AlgReal determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  AlgReal det = AlgReal::one(m.field());
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return AlgReal::zero(m.field());
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    const AlgReal inv = m(k, k).inverse();
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k).is_zero()) continue;
      const AlgReal factor = m(r, k) * inv;
      for (std::size_t c = k; c < n; ++c) m(r, c) -= factor * m(k, c);
    }
  }
  return det;
}

std::vector<RootVector> kernel_basis(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const FieldContext& f = m.field();
  std::vector<std::size_t> col_perm(cols);
  std::iota(col_perm.begin(), col_perm.end(), 0);

  // Full pivoting: any nonzero entry of the remaining block serves as pivot.
  std::size_t rank = 0;
  for (; rank < std::min(rows, cols); ++rank) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t r = rank; r < rows && pr == rows; ++r)
      for (std::size_t c = rank; c < cols; ++c)
        if (!m(r, col_perm[c]).is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == rows) break;
    for (std::size_t c = 0; c < cols; ++c) std::swap(m(rank, c), m(pr, c));
    std::swap(col_perm[rank], col_perm[pc]);
    const AlgReal inv = m(rank, col_perm[rank]).inverse();
    for (std::size_t c = 0; c < cols; ++c) m(rank, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m(r, col_perm[rank]).is_zero()) continue;
      const AlgReal factor = m(r, col_perm[rank]);
      for (std::size_t c = 0; c < cols; ++c) m(r, c) -= factor * m(rank, c);
    }
  }

  // Reduced row echelon in permuted columns: free columns give the basis.
  std::vector<RootVector> basis;
  for (std::size_t free = rank; free < cols; ++free) {
    RootVector v(f, cols);
    v[col_perm[free]] = AlgReal::one(f);
    for (std::size_t r = 0; r < rank; ++r) v[col_perm[r]] = -m(r, col_perm[free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Definiteness classify_symmetric(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("classify_symmetric: matrix not square");
  const std::size_t n = m.rows();
  std::vector<bool> done(n, false);
  bool singular = false;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pivot = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Sign s = m(i, i).sign();
      if (s == Sign::kNegative) return Definiteness::kIndefinite;
      if (s == Sign::kPositive && pivot == n) pivot = i;
    }
    if (pivot == n) {
      // All remaining diagonal entries are zero; psd forces the block to vanish.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && !m(i, j).is_zero()) return Definiteness::kIndefinite;
      singular = true;
      break;
    }
    done[pivot] = true;
    const AlgReal inv = m(pivot, pivot).inverse();
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, pivot).is_zero()) continue;
      const AlgReal factor = m(i, pivot) * inv;
      for (std::size_t j = 0; j < n; ++j)
        if (!done[j]) m(i, j) -= factor * m(pivot, j);
    }
  }
  return singular ? Definiteness::kPositiveSemidefinite : Definiteness::kPositiveDefinite;
}

}  // namespace coxeter
