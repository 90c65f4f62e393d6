#include "leonard/matrix.hpp"

#include <sstream>

namespace leonard {

Matrix::Matrix(FieldSpec field, std::size_t n) : field_(field), n_(n), a_(n * n, Scalar::zero(field)) {
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimension must be at least 1");
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& diag) {
  if (diag.empty()) throw Error(ErrorCode::DimensionMismatch, "empty diagonal");
  Matrix m(diag.front().field(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!(diag[i].field() == m.field_)) throw Error(ErrorCode::FieldMismatch, "diagonal entries disagree on field");
    m(i, i) = diag[i];
  }
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Scalar>> out;
  for (const auto& row : rows) {
    std::vector<Scalar> r;
    for (long v : row) r.emplace_back(field, v);
    out.push_back(std::move(r));
  }
  return from_rows(field, out);
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
  Matrix m(field, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error(ErrorCode::DimensionMismatch, "matrix rows are not square");
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (!(rows[i][j].field() == field)) throw Error(ErrorCode::FieldMismatch, "entry field differs from matrix field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw Error(ErrorCode::IndexOutOfRange, "matrix index out of range");
  return (*this)(i, j);
}

void Matrix::require_compatible(const Matrix& rhs) const {
  if (n_ != rhs.n_) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(n_) + " vs " + std::to_string(rhs.n_));
  }
  if (!(field_ == rhs.field_)) throw Error(ErrorCode::FieldMismatch, field_.to_string() + " vs " + rhs.field_.to_string());
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_compatible(rhs);
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return mat_mul(lhs, rhs); }

bool operator==(const Matrix& lhs, const Matrix& rhs) {
  return lhs.field_ == rhs.field_ && lhs.n_ == rhs.n_ && lhs.a_ == rhs.a_;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::inverse() const {
  Matrix work = *this;
  Matrix inv = identity(field_, n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && work(pivot, col).is_zero()) ++pivot;
    if (pivot == n_) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n_; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    Scalar scale = work(col, col).inverse();
    for (std::size_t j = 0; j < n_; ++j) {
      work(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == col || work(i, col).is_zero()) continue;
      Scalar f = work(i, col);
      for (std::size_t j = 0; j < n_; ++j) {
        work(i, j) -= f * work(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::shifted(const Scalar& c) const {
  Matrix m = *this;
  for (std::size_t i = 0; i < n_; ++i) m(i, i) -= c;
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) v.push_back((*this)(i, j));
  return v;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  if (v.size() != n_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix size");
  std::vector<Scalar> out(n_, Scalar::zero(field_));
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Matrix::nonzero_positions() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      if (!(*this)(i, j).is_zero()) out.emplace_back(i, j);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    os << '[';
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]\n";
  }
  return os.str();
}

namespace {

void check_product_args(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, a.field().to_string() + " vs " + b.field().to_string());
}

// Row i of a*b; skipping zero factors matters because the matrices in this
// library are mostly bidiagonal or rank one.
void product_row(const Matrix& a, const Matrix& b, Matrix& out, std::size_t i) {
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) {
    const Scalar& aik = a(i, k);
    if (aik.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Scalar& bkj = b(k, j);
      if (!bkj.is_zero()) out(i, j) += aik * bkj;
    }
  }
}

}  // namespace

Matrix mat_mul_serial(const Matrix& a, const Matrix& b) {
  check_product_args(a, b);
  Matrix out(a.field(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) product_row(a, b, out, i);
  return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_product_args(a, b);
  Matrix out(a.field(), a.size());
  const long n = static_cast<long>(a.size());
  // Each thread owns whole rows of `out`; inputs are only read.
#pragma omp parallel for schedule(dynamic) if (n >= 16)
  for (long i = 0; i < n; ++i) product_row(a, b, out, static_cast<std::size_t>(i));
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return mat_mul(a, b) - mat_mul(b, a); }

}  // namespace leonard
