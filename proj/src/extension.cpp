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

#include "gallai/extension.hpp"

#include <algorithm>
#include <vector>

#include "gallai/error.hpp"

namespace gallai {

namespace {

void require_budget(const EdgeColoring& coloring, const BigCount& k) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "color budget must be at least 1");
  const auto used = colors_used(coloring);
  if (!used.empty() && k < used.back()) {
    fail(ErrorCode::InvalidArgument, "color budget " + to_decimal(k) + " is below used color " +
                                         std::to_string(used.back()));
  }
}

// Fan search over dense colors: [0, U) are the base coloring's colors, U + i
// is the i-th color outside the base coloring to appear in the fan.
class FanSearch {
 public:
  explicit FanSearch(const EdgeColoring& coloring)
      : classes_(coloring),
        n_(coloring.n()),
        used_(classes_.color_count()),
        masks_(used_ + n_ + 1, 0) {}

  std::size_t used() const { return used_; }
  unsigned n() const { return n_; }

  // Would giving edge {w, new} dense color d create a rainbow triangle with
  // an earlier fan edge?
  bool can_assign(Vertex w, std::size_t d, std::size_t active) const {
    const std::uint64_t own = d < used_ ? classes_.neighbors(w, d) : 0;
    for (std::size_t a = 0; a < active; ++a) {
      if (a == d || masks_[a] == 0) continue;
      const std::uint64_t same = a < used_ ? classes_.neighbors(w, a) : 0;
      if (masks_[a] & ~(same | own)) return false;
    }
    return true;
  }

  void set(Vertex w, std::size_t d) { masks_[d] |= std::uint64_t{1} << w; }
  void unset(Vertex w, std::size_t d) { masks_[d] &= ~(std::uint64_t{1} << w); }

  // Leaves by number of distinct new colors in the fan.
  void count(Vertex w, std::size_t fresh, std::size_t fresh_limit, std::vector<std::uint64_t>& histogram) {
    const std::size_t active = used_ + fresh;
    if (w == n_) {
      ++histogram[fresh];
      return;
    }
    for (std::size_t d = 0; d < active; ++d) {
      if (!can_assign(w, d, active)) continue;
      set(w, d);
      count(w + 1, fresh, fresh_limit, histogram);
      unset(w, d);
    }
    if (fresh < fresh_limit && can_assign(w, active, active)) {
      set(w, active);
      count(w + 1, fresh + 1, fresh_limit, histogram);
      unset(w, active);
    }
  }

  const ColorClasses& classes() const { return classes_; }

 private:
  ColorClasses classes_;
  unsigned n_;
  std::size_t used_;
  std::vector<std::uint64_t> masks_;
};

class FanEnumerator {
 public:
  FanEnumerator(const EdgeColoring& coloring, ColorId k, const FanSink& sink)
      : search_(coloring), k_(k), sink_(sink), fan_(coloring.n(), 0) {}

  std::uint64_t run() {
    visit(0);
    return delivered_;
  }

 private:
  bool visit(Vertex w) {
    if (w == search_.n()) {
      ++delivered_;
      return sink_(fan_);
    }
    const std::size_t used = search_.used();
    for (ColorId c = 1; c <= k_; ++c) {
      const int base = search_.classes().dense(c);
      std::size_t d;
      bool opened = false;
      if (base >= 0) {
        d = static_cast<std::size_t>(base);
      } else {
        auto it = std::find(fresh_.begin(), fresh_.end(), c);
        d = used + static_cast<std::size_t>(it - fresh_.begin());
        if (it == fresh_.end()) {
          fresh_.push_back(c);
          opened = true;
        }
      }
      const std::size_t active = used + fresh_.size();
      bool keep_going = true;
      if (search_.can_assign(w, d, active)) {
        search_.set(w, d);
        fan_[w] = c;
        keep_going = visit(w + 1);
        search_.unset(w, d);
      }
      if (opened) fresh_.pop_back();
      if (!keep_going) return false;
      if (c == k_) break;
    }
    return true;
  }

  FanSearch search_;
  ColorId k_;
  const FanSink& sink_;
  std::vector<ColorId> fan_;
  std::vector<ColorId> fresh_;
  std::uint64_t delivered_ = 0;
};

}  // namespace

ExtensionCounts count_extensions_detailed(const EdgeColoring& coloring, const BigCount& k) {
  require_gallai(coloring);
  require_budget(coloring, k);
  FanSearch search(coloring);
  const BigCount outside = k - static_cast<unsigned long>(search.used());
  std::uint64_t outside_small = 0;
  const std::size_t fresh_limit =
      to_u64(outside, outside_small) ? static_cast<std::size_t>(std::min<std::uint64_t>(outside_small, coloring.n()))
                                     : coloring.n();
  std::vector<std::uint64_t> histogram(coloring.n() + 1, 0);
  search.count(0, 0, fresh_limit, histogram);

  ExtensionCounts out{0, 0};
  BigCount weight = 1;  // falling factorial (k - U)_f
  for (std::size_t f = 0; f < histogram.size(); ++f) {
    if (f > 0) weight *= outside - static_cast<unsigned long>(f - 1);
    if (histogram[f] == 0) continue;
    const BigCount term = from_u64(histogram[f]) * weight;
    out.total += term;
    if (f > 0) out.with_new_color += term;
  }
  return out;
}

BigCount count_extensions(const EdgeColoring& coloring, const BigCount& k) {
  return count_extensions_detailed(coloring, k).total;
}

std::uint64_t enumerate_extensions(const EdgeColoring& coloring, ColorId k, const FanSink& sink) {
  require_gallai(coloring);
  require_budget(coloring, k);
  return FanEnumerator(coloring, k, sink).run();
}

BigCount mono_extension_value(unsigned n, const BigCount& k) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be at least 1");
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  return (k - 1) * pow2(n) - (k - 2);
}

RecurrenceCheck check_recurrence(const EdgeColoring& coloring, std::span<const ColorId> fan, ColorId k) {
  require_gallai(coloring);
  require_budget(coloring, k);
  for (ColorId c : fan) {
    if (c < 1 || c > k) fail(ErrorCode::InvalidArgument, "fan color out of range: " + std::to_string(c));
  }
  if (!is_gallai_with_new_vertex(coloring, fan)) {
    fail(ErrorCode::InvalidArgument, "fan is not a Gallai extension");
  }
  const EdgeColoring base = coloring.with_budget(std::max(coloring.k(), k));
  const EdgeColoring child = base.with_new_vertex(fan);
  RecurrenceCheck out{count_extensions(base, k), count_extensions(child, k), false};
  out.holds = out.child <= 2 * out.parent + (BigCount(k) - 2);
  return out;
}

}  // namespace gallai
