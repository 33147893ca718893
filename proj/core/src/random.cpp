#include "rlk/random.hpp"

#include <algorithm>

namespace rlk {

std::uint64_t Sampler::uniform(std::uint64_t bound) {
  std::uniform_int_distribution<std::uint64_t> dist(0, bound - 1);
  return dist(rng_);
}

Value Sampler::value(const FieldSpec& spec, unsigned height) {
  if (spec.is_rational()) {
    const std::int64_t h = static_cast<std::int64_t>(height);
    std::int64_t num = static_cast<std::int64_t>(uniform(2 * height + 1)) - h;
    std::int64_t den = static_cast<std::int64_t>(uniform(height)) + 1;
    return Value::rational(BigInt(num), BigInt(den));
  }
  return Value::residue(spec, uniform(spec.p));
}

Value Sampler::nonzero(const FieldSpec& spec, unsigned height) {
  return outside(spec, {Value::zero(spec)}, height);
}

Value Sampler::outside(const FieldSpec& spec, const std::vector<Value>& excluded,
                       unsigned height) {
  if (!spec.is_rational()) {
    std::vector<std::uint64_t> seen;
    for (const Value& v : excluded) {
      if (v.spec() == spec) seen.push_back(v.res());
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    if (seen.size() >= spec.p) throw ExhaustedField();
  }
  for (;;) {
    Value v = value(spec, height);
    bool hit = false;
    for (const Value& e : excluded) {
      if (e.spec() == spec && e == v) {
        hit = true;
        break;
      }
    }
    if (!hit) return v;
  }
}

}  // namespace rlk
