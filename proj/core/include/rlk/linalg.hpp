#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "rlk/field.hpp"
#include "rlk/random.hpp"

namespace rlk {

class Matrix;

/// Dense exact vector over one field.
class Vector {
 public:
  Vector(const FieldSpec& spec, std::size_t n) : spec_(spec), e_(n, Value::zero(spec)) {}
  static Vector basis(const FieldSpec& spec, std::size_t n, std::size_t i);

  const FieldSpec& spec() const { return spec_; }
  std::size_t size() const { return e_.size(); }
  Value& operator[](std::size_t i) { return e_[i]; }
  const Value& operator[](std::size_t i) const { return e_[i]; }

  bool is_zero() const;
  Vector operator-() const;
  friend Vector operator+(const Vector& a, const Vector& b);
  friend Vector operator-(const Vector& a, const Vector& b);
  friend Vector operator*(const Value& c, const Vector& v);
  friend bool operator==(const Vector& a, const Vector& b);
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

 private:
  FieldSpec spec_;
  std::vector<Value> e_;
};

/// Dense exact matrix, column convention: column j holds the image of e_j.
class Matrix {
 public:
  Matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols)
      : spec_(spec), rows_(rows), cols_(cols), e_(rows * cols, Value::zero(spec)) {}

  static Matrix identity(const FieldSpec& spec, std::size_t n);
  static Matrix zero(const FieldSpec& spec, std::size_t rows, std::size_t cols);
  static Matrix random(Sampler& s, const FieldSpec& spec, std::size_t rows, std::size_t cols,
                       unsigned height = Sampler::kDefaultHeight);
  /// Block-diagonal composition diag(a, b).
  static Matrix block_diag(const Matrix& a, const Matrix& b);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Value& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Value& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vector col(std::size_t j) const;
  Vector apply(const Vector& x) const;

  Matrix transpose() const;
  Matrix operator-() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Value det() const;
  Matrix inverse() const;  // throws Degenerate

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Value& c, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// Row-major entry comparison for canonical report ordering.
  static int cmp(const Matrix& a, const Matrix& b);

  /// Flattens row-major, for witness payloads.
  Vector flatten() const;

 private:
  FieldSpec spec_;
  std::size_t rows_, cols_;
  std::vector<Value> e_;
};

/// Order-3 exact tensor with index semantics fixed by each use site.
class Tensor3 {
 public:
  Tensor3(const FieldSpec& spec, std::size_t d0, std::size_t d1, std::size_t d2)
      : spec_(spec), d0_(d0), d1_(d1), d2_(d2), e_(d0 * d1 * d2, Value::zero(spec)) {}

  const FieldSpec& spec() const { return spec_; }
  std::size_t dim0() const { return d0_; }
  std::size_t dim1() const { return d1_; }
  std::size_t dim2() const { return d2_; }

  Value& at(std::size_t i, std::size_t j, std::size_t k) { return e_[(i * d1_ + j) * d2_ + k]; }
  const Value& at(std::size_t i, std::size_t j, std::size_t k) const {
    return e_[(i * d1_ + j) * d2_ + k];
  }

  bool is_zero() const;
  /// First nonzero entry in lexicographic (i,j,k) order, if any.
  std::optional<std::array<std::size_t, 3>> first_nonzero() const;

  /// Slice with the first index fixed, as a d1 x d2 matrix.
  Matrix slice0(std::size_t i) const;

  /// Contracts slot `s` (0,1,2) with matrix m: entries m[a'][a] replace index a.
  Tensor3 contract(std::size_t s, const Matrix& m) const;

  friend Tensor3 operator+(const Tensor3& a, const Tensor3& b);
  friend Tensor3 operator-(const Tensor3& a, const Tensor3& b);
  friend bool operator==(const Tensor3& a, const Tensor3& b);
  friend bool operator!=(const Tensor3& a, const Tensor3& b) { return !(a == b); }

  Vector flatten() const;

 private:
  FieldSpec spec_;
  std::size_t d0_, d1_, d2_;
  std::vector<Value> e_;
};

}  // namespace rlk
