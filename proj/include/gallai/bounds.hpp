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

#pragma once

// Exact evaluation of the closed-form bounds on c(n, k) and w(phi, k).
//
// Values have the shape  integer + coefficient * 2^(p/q)  with q in
// {1, 5, 20}. Fractional powers of two come from 2^(-0.4 m) and
// 2^(-0.05 n^2); 2^((n+1) log k) is kept as the integer k^(n+1).
// Comparisons raise both sides to the q-th power and never use floating
// point.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "gallai/bigcount.hpp"

namespace gallai {

enum class BoundTag {
  LowerBound,       // C(k,2)(2^C(n,2) - 2) + k
  TrivialUpper,     // (k-1)^n 2^C(n,2)
  MonoExt,          // (k-1) 2^n - (k-2)
  ExtCeiling,       // (k-1) 2^n - (k-2)
  NonExtremal,      // 2^n + k n 2^(n - 2m/5)
  FPrime,           // 2^(C(n,2) - n^2/20) k^(n+1)
  NoBigF,           // t k^2 2^(n-t)
  ThreeColorLower,  // k(k-1)(k-2)(2^C(n-2,2) - 1)
  MainTerm,         // C(k,2) 2^C(n,2)
  CnThree,          // 7(n+1) 2^C(n,2)
};

/// Kebab-case names ("lower-bound", "no-big-f", ...).
std::string_view to_string(BoundTag tag);
/// Accepts the kebab-case and CamelCase spellings.
BoundTag parse_bound_tag(std::string_view text);

struct BoundExpr {
  BoundTag tag = BoundTag::LowerBound;
  unsigned n = 0;
  BigCount k = 0;
  /// Required by NonExtremal.
  std::optional<unsigned> m;
  /// Required by NoBigF.
  std::optional<unsigned> t;
};

struct ExactValue {
  BigCount integer = 0;
  BigCount coefficient = 0;
  std::int64_t exponent_num = 0;
  std::int64_t exponent_den = 1;

  bool is_integer() const { return coefficient == 0; }
  /// Exact floor of the value.
  BigCount floor() const;
  /// "1024" or "16384 + 56*2^(68/5)".
  std::string to_string() const;
};

struct Evaluation {
  BoundExpr expr;
  ExactValue value;
  /// False when the parameters lie outside the statement's hypotheses; the
  /// value is still computed.
  bool hypothesis_met = true;
  std::string note;
};

/// Throws InvalidArgument for parameters outside the expression's domain.
Evaluation eval(const BoundExpr& expr);

std::strong_ordering compare(const BigCount& value, const ExactValue& bound);
std::strong_ordering compare(const BigCount& value, const BoundExpr& expr);

/// The k n 2^(n - 2m/5) term on its own: the allowance for extensions that
/// use a color outside a 2-colored base.
ExactValue non_extremal_new_color_term(unsigned n, const BigCount& k, unsigned m);

}  // namespace gallai
