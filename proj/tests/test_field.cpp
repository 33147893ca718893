#include <doctest.h>

#include "rlk/field.hpp"
#include "rlk/random.hpp"

using namespace rlk;

TEST_CASE("rational arithmetic is exact and reduced") {
  const FieldSpec q = FieldSpec::rationals();
  const Value half = Value::parse(q, "1/2");
  const Value third = Value::parse(q, "1/3");
  CHECK((half + third).str() == "5/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half - half).is_zero());
  CHECK(Value::rational(BigInt(4), BigInt(6)).str() == "2/3");
  CHECK(Value::rational(BigInt(3), BigInt(-6)).str() == "-1/2");
  CHECK(Value::parse(q, "-7").str() == "-7");
}

TEST_CASE("prime field arithmetic") {
  const FieldSpec f7 = FieldSpec::prime(7);
  const Value three = Value::of(f7, 3);
  CHECK(three.inv().str() == "5");
  CHECK((three * three.inv()).is_one());
  CHECK((-Value::of(f7, 2)).str() == "5");
  CHECK_THROWS_AS(Value::zero(f7).inv(), DivisionByZero);
  CHECK_THROWS_AS(Value::parse(FieldSpec::rationals(), "1/0"), ParseError);
}

TEST_CASE("field spec validation") {
  CHECK_THROWS_AS(FieldSpec::prime(4), InvalidStructure);
  CHECK_THROWS_AS(FieldSpec::prime(2), InvalidStructure);
  CHECK_THROWS_AS(FieldSpec::prime(1), InvalidStructure);
  CHECK(FieldSpec::prime(2147483647).p == 2147483647u);  // 2^31 - 1
  const Value a = Value::of(FieldSpec::prime(5), 1);
  const Value b = Value::of(FieldSpec::prime(7), 1);
  CHECK_THROWS_AS((void)(a + b), FieldMismatch);
}

TEST_CASE("field axioms hold on random triples") {
  for (const FieldSpec spec : {FieldSpec::rationals(), FieldSpec::prime(7)}) {
    Sampler s(42);
    for (int t = 0; t < 10000; ++t) {
      const Value a = s.value(spec, 10);
      const Value b = s.value(spec, 10);
      const Value c = s.value(spec, 10);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
    }
  }
}

TEST_CASE("re-reducing a rational is a no-op") {
  Sampler s(7);
  const FieldSpec q = FieldSpec::rationals();
  for (int t = 0; t < 200; ++t) {
    const Value v = s.value(q);
    CHECK(Value::parse(q, v.str()) == v);
  }
}

TEST_CASE("deterministic sampling with exclusions") {
  const FieldSpec f5 = FieldSpec::prime(5);
  Sampler a(123), b(123);
  for (int t = 0; t < 50; ++t) {
    const Value va = a.outside(f5, {Value::zero(f5)});
    const Value vb = b.outside(f5, {Value::zero(f5)});
    CHECK(va == vb);
    CHECK(!va.is_zero());
  }

  const FieldSpec q = FieldSpec::rationals();
  Sampler sq(9);
  for (int t = 0; t < 100; ++t) {
    const Value v = sq.value(q);
    using boost::multiprecision::abs;
    CHECK(abs(numerator(v.rat())) <= 100);
    CHECK(denominator(v.rat()) <= 100);
  }

  const FieldSpec f3 = FieldSpec::prime(3);
  Sampler s3(1);
  const std::vector<Value> all{Value::of(f3, 0), Value::of(f3, 1), Value::of(f3, 2)};
  CHECK_THROWS_AS(s3.outside(f3, all), ExhaustedField);
}
