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

#include <algorithm>

#include "gallai/error.hpp"
#include "gallai/verify.hpp"

using namespace gallai;

namespace {

VerifyOptions grid(unsigned n_min, unsigned n_max, unsigned k_min, unsigned k_max) {
  VerifyOptions o;
  o.n_min = n_min;
  o.n_max = n_max;
  o.k_min = k_min;
  o.k_max = k_max;
  o.threads = 1;
  return o;
}

bool same(const SuiteReport& a, const SuiteReport& b) {
  if (a.cells.size() != b.cells.size()) return false;
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& x = a.cells[i];
    const auto& y = b.cells[i];
    if (x.n != y.n || x.k != y.k || x.status != y.status || x.lhs != y.lhs || x.rhs != y.rhs ||
        x.detail != y.detail || x.witness != y.witness)
      return false;
  }
  return true;
}

}  // namespace

TEST_CASE("every suite passes on a small grid") {
  for (auto name : suite_names()) {
    CAPTURE(name);
    const auto report = verify_suite(name, grid(1, 4, 1, 3));
    CHECK(report.suite == name);
    CHECK(report.passed());
    for (const auto& cell : report.cells) {
      CHECK(cell.status != CellStatus::Fail);
      CHECK_FALSE(cell.witness.has_value());
    }
  }
}

TEST_CASE("cells come back in grid order") {
  const auto report = verify_suite("sandwich", grid(2, 4, 2, 3));
  REQUIRE(report.cells.size() == 6);
  CHECK(report.cells[0].n == 2);
  CHECK(report.cells[0].k == 2);
  CHECK(report.cells[1].k == 3);
  CHECK(report.cells[5].n == 4);
  CHECK(report.cells[5].k == 3);
}

TEST_CASE("cells below a suite's floor are skipped") {
  const auto trivial = verify_suite("trivial-upper", grid(1, 3, 1, 3));
  CHECK(std::none_of(trivial.cells.begin(), trivial.cells.end(), [](const CellResult& c) { return c.k < 2; }));
  CHECK(trivial.cells.size() == 6);

  const auto lower = verify_suite("lower-bound", grid(1, 3, 1, 1));
  CHECK(lower.cells.size() == 2);

  const auto cn = verify_suite("cn-three", grid(1, 4, 1, 1));
  for (const auto& c : cn.cells) CHECK(c.k == 3);

  const auto none = verify_suite("sandwich", grid(5, 4, 1, 4));
  CHECK(none.cells.empty());
  CHECK(none.passed());
}

TEST_CASE("lhs and rhs are filled for the sandwich") {
  const auto report = verify_suite("sandwich", grid(3, 3, 3, 3));
  REQUIRE(report.cells.size() == 1);
  CHECK(report.cells[0].lhs == "21");
  CHECK(report.cells[0].status == CellStatus::Pass);
}

TEST_CASE("unmet hypotheses are reported, not failed") {
  const auto report = verify_suite("no-big-f", grid(3, 5, 3, 3));
  REQUIRE_FALSE(report.cells.empty());
  for (const auto& c : report.cells) CHECK(c.status == CellStatus::HypothesisUnmet);
  CHECK(report.passed());

  const auto small = verify_suite("non-extremal", grid(4, 4, 3, 3));
  REQUIRE(small.cells.size() == 1);
  CHECK(small.cells[0].status == CellStatus::HypothesisUnmet);
}

TEST_CASE("extension ceiling equality comes only from monochromatic colorings") {
  const auto report = verify_suite("ext-ceiling", grid(3, 4, 2, 3));
  REQUIRE(report.passed());
  for (const auto& c : report.cells) CHECK(c.detail.find("equality_all_monochromatic") != std::string::npos);
}

TEST_CASE("reports do not depend on the thread count") {
  for (const char* name : {"sandwich", "non-extremal", "classifier-partition", "f-prime"}) {
    CAPTURE(name);
    VerifyOptions one = grid(2, 5, 2, 3);
    VerifyOptions many = one;
    if (std::string_view(name) == "non-extremal") {
      one.n_min = many.n_min = 14;
      one.n_max = many.n_max = 15;
      one.samples = many.samples = 5;
    }
    many.threads = 4;
    CHECK(same(verify_suite(name, one), verify_suite(name, many)));
  }
}

TEST_CASE("seed changes the random sample but not the verdict") {
  VerifyOptions a = grid(14, 14, 3, 3);
  a.samples = 5;
  VerifyOptions b = a;
  b.seed = 7;
  CHECK(verify_suite("non-extremal", a).passed());
  CHECK(verify_suite("non-extremal", b).passed());
}

TEST_CASE("bad requests") {
  CHECK_THROWS_AS(verify_suite("nope", grid(1, 2, 1, 2)), Error);
  CHECK_THROWS_AS(verify_suite("sandwich", grid(1, 21, 1, 2)), Error);
  CHECK(to_string(CellStatus::HypothesisUnmet) == "hypothesis-unmet");
}
