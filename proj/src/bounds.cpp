/*
Copyright 2026 The gallai Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "gallai/bounds.hpp"

#include <array>
#include <numeric>
#include <utility>

#include "gallai/error.hpp"

namespace gallai {

namespace {

struct TagName {
  BoundTag tag;
  std::string_view kebab;
  std::string_view camel;
};

constexpr std::array<TagName, 10> kTagNames = {{
    {BoundTag::LowerBound, "lower-bound", "LowerBound"},
    {BoundTag::TrivialUpper, "trivial-upper", "TrivialUpper"},
    {BoundTag::MonoExt, "mono-ext", "MonoExt"},
    {BoundTag::ExtCeiling, "ext-ceiling", "ExtCeiling"},
    {BoundTag::NonExtremal, "non-extremal", "NonExtremal"},
    {BoundTag::FPrime, "f-prime", "FPrime"},
    {BoundTag::NoBigF, "no-big-f", "NoBigF"},
    {BoundTag::ThreeColorLower, "three-color-lower", "ThreeColorLower"},
    {BoundTag::MainTerm, "main-term", "MainTerm"},
    {BoundTag::CnThree, "cn-three", "CnThree"},
}};

ExactValue integer_value(BigCount value) {
  ExactValue out;
  out.integer = std::move(value);
  return out;
}

// 2^e for a possibly negative e, as the exact coefficient/exponent pair.
ExactValue scaled_power(BigCount coefficient, std::int64_t num, std::int64_t den) {
  ExactValue out;
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (den == 1 && num >= 0) {
    out.integer = coefficient * pow2(static_cast<std::uint64_t>(num));
    return out;
  }
  out.coefficient = std::move(coefficient);
  out.exponent_num = num;
  out.exponent_den = den;
  return out;
}

BigCount mono_value(unsigned n, const BigCount& k) {
  return (k - 1) * pow2(n) - (k - 2);
}

void require(bool condition, const std::string& message) {
  if (!condition) fail(ErrorCode::InvalidArgument, message);
}

}  // namespace

std::string_view to_string(BoundTag tag) {
  for (const auto& entry : kTagNames) {
    if (entry.tag == tag) return entry.kebab;
  }
  return "unknown";
}

BoundTag parse_bound_tag(std::string_view text) {
  for (const auto& entry : kTagNames) {
    if (text == entry.kebab || text == entry.camel) return entry.tag;
  }
  fail(ErrorCode::InvalidArgument, "unknown bound expression '" + std::string(text) + "'");
}

BigCount ExactValue::floor() const {
  if (coefficient == 0) return integer;
  // floor(r^(1/q)) = floor(floor(r)^(1/q)) for rational r >= 0.
  BigCount radicand = power(coefficient, static_cast<std::uint64_t>(exponent_den));
  if (exponent_num >= 0) {
    radicand *= pow2(static_cast<std::uint64_t>(exponent_num));
  } else {
    mpz_fdiv_q_2exp(radicand.get_mpz_t(), radicand.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent_num));
  }
  BigCount root;
  mpz_root(root.get_mpz_t(), radicand.get_mpz_t(), static_cast<unsigned long>(exponent_den));
  return integer + root;
}

std::string ExactValue::to_string() const {
  if (coefficient == 0) return to_decimal(integer);
  std::string out;
  if (integer != 0) out = to_decimal(integer) + " + ";
  out += to_decimal(coefficient) + "*2^(" + std::to_string(exponent_num);
  if (exponent_den != 1) out += "/" + std::to_string(exponent_den);
  return out + ")";
}

ExactValue non_extremal_new_color_term(unsigned n, const BigCount& k, unsigned m) {
  return scaled_power(k * n, 5 * static_cast<std::int64_t>(n) - 2 * static_cast<std::int64_t>(m), 5);
}

Evaluation eval(const BoundExpr& expr) {
  const unsigned n = expr.n;
  const BigCount& k = expr.k;
  require(n >= 1, "n must be at least 1");
  require(k >= 1, "k must be at least 1");
  const std::uint64_t pairs = pair_count(n);

  Evaluation out;
  out.expr = expr;
  switch (expr.tag) {
    case BoundTag::LowerBound:
      require(n >= 2, "lower-bound needs n >= 2");
      out.value = integer_value(binomial(k, 2) * (pow2(pairs) - 2) + k);
      break;
    case BoundTag::TrivialUpper:
      out.value = integer_value(power(k - 1, n) * pow2(pairs));
      out.hypothesis_met = k >= 2;
      if (!out.hypothesis_met) out.note = "stated for k >= 2";
      break;
    case BoundTag::MonoExt:
    case BoundTag::ExtCeiling:
      out.value = integer_value(mono_value(n, k));
      break;
    case BoundTag::NonExtremal: {
      require(expr.m.has_value(), "non-extremal needs m");
      const unsigned m = *expr.m;
      out.value = non_extremal_new_color_term(n, k, m);
      out.value.integer += pow2(n);
      out.hypothesis_met = m >= 1 && m <= n;
      if (!out.hypothesis_met) out.note = "needs 1 <= m <= n";
      break;
    }
    case BoundTag::FPrime: {
      const std::int64_t num = 20 * static_cast<std::int64_t>(pairs) - static_cast<std::int64_t>(n) * n;
      out.value = scaled_power(power(k, n + 1), num, 20);
      break;
    }
    case BoundTag::NoBigF: {
      require(expr.t.has_value(), "no-big-f needs t");
      const unsigned t = *expr.t;
      require(t >= 1, "no-big-f needs t >= 1");
      out.value = scaled_power(k * k * t, static_cast<std::int64_t>(n) - t, 1);
      out.hypothesis_met = n >= 75ULL * t;
      if (!out.hypothesis_met) out.note = "needs n >= 75t";
      break;
    }
    case BoundTag::ThreeColorLower:
      require(n >= 2, "three-color-lower needs n >= 2");
      out.value = integer_value(k * (k - 1) * (k - 2) * (pow2(pair_count(n - 2)) - 1));
      break;
    case BoundTag::MainTerm:
      out.value = integer_value(binomial(k, 2) * pow2(pairs));
      break;
    case BoundTag::CnThree:
      out.value = integer_value(BigCount(7) * (n + 1) * pow2(pairs));
      out.hypothesis_met = k == 3;
      if (!out.hypothesis_met) out.note = "stated for k = 3";
      break;
  }
  return out;
}

std::strong_ordering compare(const BigCount& value, const ExactValue& bound) {
  const BigCount rest = value - bound.integer;
  if (bound.coefficient == 0) {
    const int s = sgn(rest);
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (rest <= 0) return std::strong_ordering::less;  // the power term is positive

  // rest vs coefficient * 2^(p/q)  <=>  rest^q vs coefficient^q * 2^p
  const auto q = static_cast<std::uint64_t>(bound.exponent_den);
  BigCount lhs = power(rest, q);
  BigCount rhs = power(bound.coefficient, q);
  if (bound.exponent_num >= 0) {
    rhs *= pow2(static_cast<std::uint64_t>(bound.exponent_num));
  } else {
    lhs *= pow2(static_cast<std::uint64_t>(-bound.exponent_num));
  }
  const int c = cmp(lhs, rhs);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare(const BigCount& value, const BoundExpr& expr) {
  return compare(value, eval(expr).value);
}

}  // namespace gallai
