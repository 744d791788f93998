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

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gallai_cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct TableRow {
  unsigned n = 0;
  std::string k;
  std::string method;
  std::string count;
  double seconds = 0.0;
};

/// CSV (header `n,k,method,count,seconds`) or a JSON array of objects.
/// Counts are decimal strings in both.
std::string emit_table(const std::vector<TableRow>& rows, std::string_view format);

/// Writes `bytes` to `path` through a temporary file and a rename.
void write_atomically(const std::string& path, const std::string& bytes);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gallai_cli
