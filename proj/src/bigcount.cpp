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

#include "gallai/bigcount.hpp"

#include <charconv>

#include "gallai/error.hpp"

namespace gallai {

std::string to_decimal(const BigCount& value) { return value.get_str(10); }

BigCount parse_count(std::string_view text) {
  constexpr std::string_view kPow2 = "pow2:";
  if (text.starts_with(kPow2)) {
    std::string_view digits = text.substr(kPow2.size());
    std::uint64_t e = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), e);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail(ErrorCode::InvalidArgument, "malformed exponent in '" + std::string(text) + "'");
    }
    return pow2(e);
  }
  if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos) {
    fail(ErrorCode::InvalidArgument, "expected a nonnegative decimal integer, got '" +
                                         std::string(text) + "'");
  }
  return BigCount(std::string(text), 10);
}

BigCount from_u64(std::uint64_t value) {
  BigCount out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(value), 0, 0, &value);
  return out;
}

BigCount pow2(std::uint64_t exponent) {
  BigCount out;
  mpz_setbit(out.get_mpz_t(), exponent);
  return out;
}

BigCount power(const BigCount& base, std::uint64_t exponent) {
  BigCount out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

BigCount binomial(const BigCount& n, std::uint64_t k) {
  BigCount out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

BigCount factorial(std::uint64_t n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

bool to_u64(const BigCount& value, std::uint64_t& out) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 64) return false;
  out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value.get_mpz_t());
  return true;
}

}  // namespace gallai
