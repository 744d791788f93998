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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace gallai {

/// Exact nonnegative integer used for every count and bound value.
using BigCount = mpz_class;

std::string to_decimal(const BigCount& value);

/// Parses a nonnegative decimal literal, or `pow2:e` meaning 2^e.
BigCount parse_count(std::string_view text);

BigCount from_u64(std::uint64_t value);
BigCount pow2(std::uint64_t exponent);
BigCount power(const BigCount& base, std::uint64_t exponent);
BigCount binomial(const BigCount& n, std::uint64_t k);
BigCount factorial(std::uint64_t n);

/// Returns true and stores the value when it fits in 64 bits.
bool to_u64(const BigCount& value, std::uint64_t& out);

constexpr std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace gallai
