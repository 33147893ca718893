#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rlk/errors.hpp"

namespace rlk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

/// Ground field: the rationals, or F_p for an odd prime 3 <= p < 2^31.
struct FieldSpec {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 0;  // modulus, PrimeField only

  static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return kind == FieldKind::Rationals; }
  std::string str() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_odd_prime(std::uint32_t n);

/// Exact scalar: a reduced rational, or a residue in F_p. Immutable value type.
class Value {
 public:
  Value() = default;  // 0 over Q

  static Value zero(const FieldSpec& spec);
  static Value one(const FieldSpec& spec);
  static Value of(const FieldSpec& spec, long long n);
  static Value rational(const BigInt& num, const BigInt& den);
  static Value residue(const FieldSpec& spec, std::uint64_t r);

  /// Parses the serialized form: "num/den" or "num" over Q, decimal residue over F_p.
  static Value parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  Value operator-() const;
  Value inv() const;

  friend Value operator+(const Value& a, const Value& b);
  friend Value operator-(const Value& a, const Value& b);
  friend Value operator*(const Value& a, const Value& b);
  friend Value operator/(const Value& a, const Value& b);
  friend bool operator==(const Value& a, const Value& b);
  friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }

  Value& operator+=(const Value& b) { return *this = *this + b; }
  Value& operator-=(const Value& b) { return *this = *this - b; }
  Value& operator*=(const Value& b) { return *this = *this * b; }

  /// Total order within one field, used for canonical report sorting.
  static int cmp(const Value& a, const Value& b);

  std::string str() const;

  std::uint64_t res() const { return res_; }
  const BigRat& rat() const { return rat_; }

 private:
  FieldSpec spec_;
  BigRat rat_;            // Rationals payload, always normalized by cpp_rational
  std::uint64_t res_ = 0;  // PrimeField payload, in [0, p)

  static void require_same(const Value& a, const Value& b);
};

}  // namespace rlk
