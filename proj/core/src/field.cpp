#include "rlk/field.hpp"

#include <utility>

namespace rlk {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a * b % p;  // p < 2^31, so a*b < 2^62
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t acc = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1) acc = mulmod(acc, base, p);
    base = mulmod(base, base, p);
    exp >>= 1;
  }
  return acc;
}

// Deterministic Miller-Rabin, valid for all n < 3'215'031'751.
bool miller_rabin(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint32_t a : {2u, 3u, 5u, 7u}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // Extended Euclid on signed 64-bit; p < 2^31.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw DivisionByZero();
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

bool is_odd_prime(std::uint32_t n) { return n >= 3 && (n & 1) == 1 && miller_rabin(n); }

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_odd_prime(p)) {
    throw InvalidStructure("modulus " + std::to_string(p) +
                           " is not an odd prime below 2^31");
  }
  return {FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p);
}

void Value::require_same(const Value& a, const Value& b) {
  if (a.spec_ != b.spec_) {
    throw FieldMismatch(a.spec_.str() + " vs " + b.spec_.str());
  }
}

Value Value::zero(const FieldSpec& spec) {
  Value v;
  v.spec_ = spec;
  return v;
}

Value Value::one(const FieldSpec& spec) { return of(spec, 1); }

Value Value::of(const FieldSpec& spec, long long n) {
  Value v;
  v.spec_ = spec;
  if (spec.is_rational()) {
    v.rat_ = n;
  } else {
    std::int64_t r = n % static_cast<std::int64_t>(spec.p);
    if (r < 0) r += spec.p;
    v.res_ = static_cast<std::uint64_t>(r);
  }
  return v;
}

Value Value::rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw DivisionByZero();
  Value v;
  v.spec_ = FieldSpec::rationals();
  if (den < 0) {
    v.rat_ = BigRat(-num, -den);  // cpp_rational requires a positive denominator
  } else {
    v.rat_ = BigRat(num, den);
  }
  return v;
}

Value Value::residue(const FieldSpec& spec, std::uint64_t r) {
  if (spec.is_rational()) throw FieldMismatch("residue requires a prime field");
  Value v;
  v.spec_ = spec;
  v.res_ = r % spec.p;
  return v;
}

Value Value::parse(const FieldSpec& spec, const std::string& text) {
  if (text.empty()) throw ParseError("empty scalar");
  try {
    if (spec.is_rational()) {
      auto slash = text.find('/');
      if (slash == std::string::npos) return rational(BigInt(text), 1);
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den <= 0) throw ParseError("denominator must be positive in '" + text + "'");
      return rational(num, den);
    }
    BigInt n(text);
    BigInt r = n % spec.p;
    if (r < 0) r += spec.p;
    return residue(spec, r.convert_to<std::uint64_t>());
  } catch (const std::runtime_error&) {
    throw ParseError("bad scalar '" + text + "' for field " + spec.str());
  }
}

bool Value::is_zero() const {
  return spec_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Value::is_one() const {
  return spec_.is_rational() ? rat_ == 1 : res_ == 1;
}

Value Value::operator-() const {
  Value v = *this;
  if (spec_.is_rational()) {
    v.rat_ = -rat_;
  } else if (res_ != 0) {
    v.res_ = spec_.p - res_;
  }
  return v;
}

Value Value::inv() const {
  if (is_zero()) throw DivisionByZero();
  Value v = *this;
  if (spec_.is_rational()) {
    v.rat_ = 1 / rat_;
  } else {
    v.res_ = invmod(res_, spec_.p);
  }
  return v;
}

Value operator+(const Value& a, const Value& b) {
  Value::require_same(a, b);
  Value v = a;
  if (a.spec_.is_rational()) {
    v.rat_ += b.rat_;
  } else {
    v.res_ = (a.res_ + b.res_) % a.spec_.p;
  }
  return v;
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Value& a, const Value& b) {
  Value::require_same(a, b);
  Value v = a;
  if (a.spec_.is_rational()) {
    v.rat_ *= b.rat_;
  } else {
    v.res_ = mulmod(a.res_, b.res_, a.spec_.p);
  }
  return v;
}

Value operator/(const Value& a, const Value& b) { return a * b.inv(); }

bool operator==(const Value& a, const Value& b) {
  Value::require_same(a, b);
  return a.spec_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

int Value::cmp(const Value& a, const Value& b) {
  require_same(a, b);
  if (a.spec_.is_rational()) {
    if (a.rat_ < b.rat_) return -1;
    return a.rat_ == b.rat_ ? 0 : 1;
  }
  if (a.res_ < b.res_) return -1;
  return a.res_ == b.res_ ? 0 : 1;
}

std::string Value::str() const {
  if (!spec_.is_rational()) return std::to_string(res_);
  const BigInt num = boost::multiprecision::numerator(rat_);
  const BigInt den = boost::multiprecision::denominator(rat_);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace rlk
