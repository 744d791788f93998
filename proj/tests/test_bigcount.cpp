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

#include <doctest.h>

#include "gallai/bigcount.hpp"
#include "gallai/error.hpp"
#include "oracle.hpp"

using namespace gallai;

TEST_CASE("decimal and pow2 literals") {
  CHECK(to_decimal(parse_count("0")) == "0");
  CHECK(to_decimal(parse_count("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(parse_count("pow2:10") == 1024);
  CHECK(to_decimal(parse_count("pow2:100")) == "1267650600228229401496703205376");
  CHECK_THROWS_AS(parse_count("-3"), Error);
  CHECK_THROWS_AS(parse_count("12a"), Error);
  CHECK_THROWS_AS(parse_count(""), Error);
  CHECK_THROWS_AS(parse_count("pow2:"), Error);
}

TEST_CASE("combinatorial helpers against machine arithmetic") {
  for (std::uint64_t n = 0; n <= 30; ++n) {
    for (std::uint64_t r = 0; r <= n + 1; ++r) CHECK(binomial(from_u64(n), r) == from_u64(oracle::binomial(n, r)));
  }
  std::uint64_t f = 1;
  for (std::uint64_t n = 0; n <= 20; ++n) {
    if (n > 0) f *= n;
    CHECK(factorial(n) == from_u64(f));
  }
  CHECK(power(3, 4) == 81);
  CHECK(pow2(63) == from_u64(std::uint64_t{1} << 63));
  CHECK(pair_count(0) == 0);
  CHECK(pair_count(1) == 0);
  CHECK(pair_count(7) == 21);
}

TEST_CASE("binomial of a huge top argument") {
  const BigCount k = pow2(40);
  CHECK(binomial(k, 2) == k * (k - 1) / 2);
}

TEST_CASE("to_u64") {
  std::uint64_t out = 0;
  CHECK(to_u64(from_u64(~std::uint64_t{0}), out));
  CHECK(out == ~std::uint64_t{0});
  CHECK_FALSE(to_u64(pow2(64), out));
}
