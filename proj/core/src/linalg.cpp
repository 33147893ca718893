#include "rlk/linalg.hpp"

namespace rlk {

namespace {

void require_same_spec(const FieldSpec& a, const FieldSpec& b) {
  if (a != b) throw FieldMismatch(a.str() + " vs " + b.str());
}

}  // namespace

Vector Vector::basis(const FieldSpec& spec, std::size_t n, std::size_t i) {
  Vector v(spec, n);
  v[i] = Value::one(spec);
  return v;
}

bool Vector::is_zero() const {
  for (const Value& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector Vector::operator-() const {
  Vector v = *this;
  for (Value& x : v.e_) x = -x;
  return v;
}

Vector operator+(const Vector& a, const Vector& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vector v = a;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = v[i] + b[i];
  return v;
}

Vector operator-(const Vector& a, const Vector& b) { return a + (-b); }

Vector operator*(const Value& c, const Vector& v) {
  Vector w = v;
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = c * w[i];
  return w;
}

bool operator==(const Vector& a, const Vector& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

Matrix Matrix::identity(const FieldSpec& spec, std::size_t n) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Value::one(spec);
  return m;
}

Matrix Matrix::zero(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
  return Matrix(spec, rows, cols);
}

Matrix Matrix::random(Sampler& s, const FieldSpec& spec, std::size_t rows, std::size_t cols,
                      unsigned height) {
  Matrix m(spec, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = s.value(spec, height);
  }
  return m;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
  require_same_spec(a.spec(), b.spec());
  Matrix m(a.spec(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) m.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  }
  return m;
}

Vector Matrix::col(std::size_t j) const {
  Vector v(spec_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Vector Matrix::apply(const Vector& x) const {
  require_same_spec(spec_, x.spec());
  if (x.size() != cols_) throw DimensionMismatch("matrix-vector shapes");
  Vector y(spec_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Value acc = Value::zero(spec_);
    for (std::size_t j = 0; j < cols_; ++j) acc += at(i, j) * x[j];
    y[i] = acc;
  }
  return y;
}

Matrix Matrix::transpose() const {
  Matrix m(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (Value& x : m.e_) x = -x;
  return m;
}

bool Matrix::is_zero() const {
  for (const Value& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Value Matrix::det() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  Matrix a = *this;
  const std::size_t n = rows_;
  Value d = Value::one(spec_);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n) return Value::zero(spec_);
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    const Value inv = a.at(c, c).inv();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a.at(r, c).is_zero()) continue;
      const Value f = a.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) a.at(r, j) -= f * a.at(c, j);
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix inv = identity(spec_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a.at(pivot, c).is_zero()) ++pivot;
    if (pivot == n) throw Degenerate();
    if (pivot != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(c, j));
        std::swap(inv.at(pivot, j), inv.at(c, j));
      }
    }
    const Value f = a.at(c, c).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) *= f;
      inv.at(c, j) *= f;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a.at(r, c).is_zero()) continue;
      const Value g = a.at(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(r, j) -= g * a.at(c, j);
        inv.at(r, j) -= g * inv.at(c, j);
      }
    }
  }
  return inv;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix addition shapes");
  Matrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = m.e_[i] + b.e_[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
  Matrix m(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        m.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return m;
}

Matrix operator*(const Value& c, const Matrix& m) {
  Matrix r = m;
  for (std::size_t i = 0; i < r.rows_; ++i) {
    for (std::size_t j = 0; j < r.cols_; ++j) r.at(i, j) = c * r.at(i, j);
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return false;
  }
  return true;
}

int Matrix::cmp(const Matrix& a, const Matrix& b) {
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    int c = Value::cmp(a.e_[i], b.e_[i]);
    if (c != 0) return c;
  }
  return 0;
}

Vector Matrix::flatten() const {
  Vector v(spec_, e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i];
  return v;
}

bool Tensor3::is_zero() const {
  for (const Value& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<std::array<std::size_t, 3>> Tensor3::first_nonzero() const {
  for (std::size_t i = 0; i < d0_; ++i) {
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) {
        if (!at(i, j, k).is_zero()) return std::array<std::size_t, 3>{i, j, k};
      }
    }
  }
  return std::nullopt;
}

Matrix Tensor3::slice0(std::size_t i) const {
  Matrix m(spec_, d1_, d2_);
  for (std::size_t j = 0; j < d1_; ++j) {
    for (std::size_t k = 0; k < d2_; ++k) m.at(j, k) = at(i, j, k);
  }
  return m;
}

Tensor3 Tensor3::contract(std::size_t s, const Matrix& m) const {
  require_same_spec(spec_, m.spec());
  const std::size_t old_dim = s == 0 ? d0_ : (s == 1 ? d1_ : d2_);
  if (m.cols() != old_dim) throw DimensionMismatch("tensor contraction shapes");
  std::size_t nd0 = d0_, nd1 = d1_, nd2 = d2_;
  (s == 0 ? nd0 : (s == 1 ? nd1 : nd2)) = m.rows();
  Tensor3 t(spec_, nd0, nd1, nd2);
  for (std::size_t i = 0; i < d0_; ++i) {
    for (std::size_t j = 0; j < d1_; ++j) {
      for (std::size_t k = 0; k < d2_; ++k) {
        const Value& v = at(i, j, k);
        if (v.is_zero()) continue;
        const std::size_t a = s == 0 ? i : (s == 1 ? j : k);
        for (std::size_t b = 0; b < m.rows(); ++b) {
          if (m.at(b, a).is_zero()) continue;
          std::size_t ni = i, nj = j, nk = k;
          (s == 0 ? ni : (s == 1 ? nj : nk)) = b;
          t.at(ni, nj, nk) += m.at(b, a) * v;
        }
      }
    }
  }
  return t;
}

Tensor3 operator+(const Tensor3& a, const Tensor3& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) {
    throw DimensionMismatch("tensor addition shapes");
  }
  Tensor3 t = a;
  for (std::size_t i = 0; i < t.e_.size(); ++i) t.e_[i] = t.e_[i] + b.e_[i];
  return t;
}

Tensor3 operator-(const Tensor3& a, const Tensor3& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) {
    throw DimensionMismatch("tensor subtraction shapes");
  }
  Tensor3 t = a;
  for (std::size_t i = 0; i < t.e_.size(); ++i) t.e_[i] = t.e_[i] - b.e_[i];
  return t;
}

bool operator==(const Tensor3& a, const Tensor3& b) {
  require_same_spec(a.spec_, b.spec_);
  if (a.d0_ != b.d0_ || a.d1_ != b.d1_ || a.d2_ != b.d2_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    if (a.e_[i] != b.e_[i]) return false;
  }
  return true;
}

Vector Tensor3::flatten() const {
  Vector v(spec_, e_.size());
  for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i];
  return v;
}

}  // namespace rlk
