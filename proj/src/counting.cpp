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

#include "gallai/counting.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "gallai/error.hpp"
#include "parallel.hpp"

namespace gallai {

std::string_view to_string(CountMethod method) {
  switch (method) {
    case CountMethod::Dfs:
      return "dfs";
    case CountMethod::ExactColor:
      return "exact-color";
    case CountMethod::Formula:
      return "formula";
  }
  return "unknown";
}

CountMethod parse_count_method(std::string_view text) {
  if (text == "dfs") return CountMethod::Dfs;
  if (text == "exact" || text == "exact-color") return CountMethod::ExactColor;
  if (text == "formula") return CountMethod::Formula;
  fail(ErrorCode::InvalidArgument, "unknown count method '" + std::string(text) + "'");
}

namespace {

void require_n(unsigned n) {
  if (n < 1 || n > kMaxVertices) {
    fail(ErrorCode::InvalidArgument, "n must be in [1, 64], got " + std::to_string(n));
  }
}

void check_budget(const BigCount& estimate, std::uint64_t budget, std::string_view what) {
  if (budget == 0) fail(ErrorCode::InvalidArgument, "node budget must be positive");
  if (estimate > from_u64(budget)) {
    fail(ErrorCode::BudgetExceeded, "instance too large: " + std::string(what) + " estimated at " +
                                        to_decimal(estimate) + " leaves exceeds node budget " +
                                        std::to_string(budget));
  }
}

// Partial coloring grown edge by edge in lexicographic edge order. Colors are
// dense indices in [0, palette). adjacency(v, c) is the set of vertices
// joined to v by a c-colored edge so far.
class PartialColoring {
 public:
  PartialColoring(unsigned n, unsigned palette)
      : n_(n), palette_(palette), edges_(pair_count(n)), adjacency_(std::size_t{n} * palette, 0) {
    ends_.reserve(edges_);
    for (Vertex v = 1; v < n; ++v) {
      for (Vertex u = 0; u < v; ++u) ends_.push_back({u, v});
    }
    colors_.assign(edges_, 0);
  }

  std::size_t edges() const { return edges_; }
  unsigned palette() const { return palette_; }

  // Edges of the new vertex v are filled in order, so adjacency(v, a) only
  // holds vertices w < u: triangle {w, u, v} is rainbow iff w has fan color
  // a != c and wu is colored neither a nor c.
  bool can_assign(std::size_t pos, unsigned c, unsigned active) const {
    const auto [u, v] = ends_[pos];
    const std::uint64_t* au = &adjacency_[std::size_t{u} * palette_];
    const std::uint64_t* av = &adjacency_[std::size_t{v} * palette_];
    const std::uint64_t own = au[c];
    for (unsigned a = 0; a < active; ++a) {
      if (a != c && (av[a] & ~(au[a] | own))) return false;
    }
    return true;
  }

  void assign(std::size_t pos, unsigned c) {
    const auto [u, v] = ends_[pos];
    adjacency_[std::size_t{u} * palette_ + c] |= std::uint64_t{1} << v;
    adjacency_[std::size_t{v} * palette_ + c] |= std::uint64_t{1} << u;
    colors_[pos] = static_cast<std::uint16_t>(c);
  }

  void unassign(std::size_t pos, unsigned c) {
    const auto [u, v] = ends_[pos];
    adjacency_[std::size_t{u} * palette_ + c] &= ~(std::uint64_t{1} << v);
    adjacency_[std::size_t{v} * palette_ + c] &= ~(std::uint64_t{1} << u);
  }

  std::uint16_t color_at(std::size_t pos) const { return colors_[pos]; }

  // Labelled leaves below `pos` with every color in [0, palette) allowed.
  std::uint64_t count_labelled(std::size_t pos) {
    const unsigned k = palette_;
    if (pos + 1 == edges_) {
      std::uint64_t leaves = 0;
      for (unsigned c = 0; c < k; ++c) leaves += can_assign(pos, c, k) ? 1 : 0;
      return leaves;
    }
    std::uint64_t total = 0;
    for (unsigned c = 0; c < k; ++c) {
      if (!can_assign(pos, c, k)) continue;
      assign(pos, c);
      total += count_labelled(pos + 1);
      unassign(pos, c);
    }
    return total;
  }

  // Canonical leaves below `pos`, where `used` colors [0, used) appeared so
  // far and the next new color must be `used`. histogram[j] counts leaves
  // using exactly j colors.
  void count_canonical(std::size_t pos, unsigned used, std::vector<std::uint64_t>& histogram) {
    if (pos == edges_) {
      ++histogram[used];
      return;
    }
    const unsigned limit = std::min(used + 1, palette_);
    for (unsigned c = 0; c < limit; ++c) {
      if (!can_assign(pos, c, used)) continue;
      assign(pos, c);
      count_canonical(pos + 1, c == used ? used + 1 : used, histogram);
      unassign(pos, c);
    }
  }

  template <class Visit>
  void walk_labelled(std::size_t pos, std::size_t stop, const Visit& visit) {
    if (pos == stop) {
      visit(*this);
      return;
    }
    for (unsigned c = 0; c < palette_; ++c) {
      if (!can_assign(pos, c, palette_)) continue;
      assign(pos, c);
      walk_labelled(pos + 1, stop, visit);
      unassign(pos, c);
    }
  }

  template <class Visit>
  void walk_canonical(std::size_t pos, std::size_t stop, unsigned used, const Visit& visit) {
    if (pos == stop) {
      visit(*this, used);
      return;
    }
    const unsigned limit = std::min(used + 1, palette_);
    for (unsigned c = 0; c < limit; ++c) {
      if (!can_assign(pos, c, used)) continue;
      assign(pos, c);
      walk_canonical(pos + 1, stop, c == used ? used + 1 : used, visit);
      unassign(pos, c);
    }
  }

 private:
  struct Ends {
    Vertex u;
    Vertex v;
  };
  unsigned n_;
  unsigned palette_;
  std::size_t edges_;
  std::vector<Ends> ends_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::uint16_t> colors_;
};

struct WorkUnit {
  std::vector<std::uint16_t> prefix;
  unsigned used = 0;
};

// Completed units as "<id> <c0>,<c1>,..." lines after a header naming the
// instance. A trailing line without newline is a torn write and is ignored.
class Checkpoint {
 public:
  Checkpoint(std::filesystem::path path, std::string header) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (in) {
      std::stringstream buffer;
      buffer << in.rdbuf();
      const std::string text = buffer.str();
      load(text, header);
      in.close();
      const std::size_t complete = text.rfind('\n') == std::string::npos ? 0 : text.rfind('\n') + 1;
      if (complete != text.size()) std::filesystem::resize_file(path_, complete);
    }
    const bool fresh = !header_seen_;
    out_.open(path_, std::ios::binary | std::ios::app);
    if (!out_) fail(ErrorCode::Io, "cannot open checkpoint " + path_.string());
    if (fresh) {
      out_ << header << '\n';
      out_.flush();
    }
  }

  const std::map<std::size_t, std::vector<std::uint64_t>>& done() const { return done_; }

  void record(std::size_t id, const std::vector<std::uint64_t>& values) {
    std::lock_guard lock(mutex_);
    out_ << id << ' ';
    for (std::size_t i = 0; i < values.size(); ++i) out_ << (i ? "," : "") << values[i];
    out_ << '\n';
    out_.flush();
    if (!out_) fail(ErrorCode::Io, "write failed on checkpoint " + path_.string());
  }

 private:
  void load(const std::string& text, const std::string& header) {
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
      const std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) break;  // torn final line
      const std::string line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line_no == 1) {
        if (line != header) {
          fail(ErrorCode::InvalidArgument, "checkpoint " + path_.string() + " belongs to another run: '" +
                                               line + "' vs '" + header + "'");
        }
        header_seen_ = true;
        continue;
      }
      parse_entry(line, line_no);
    }
  }

  void parse_entry(const std::string& line, std::size_t line_no) {
    const std::size_t space = line.find(' ');
    auto bad = [&] {
      fail(ErrorCode::Parse, "checkpoint " + path_.string() + " line " + std::to_string(line_no) + " malformed");
    };
    if (space == std::string::npos) bad();
    std::size_t id = 0;
    if (std::from_chars(line.data(), line.data() + space, id).ptr != line.data() + space) bad();
    std::vector<std::uint64_t> values;
    const char* p = line.data() + space + 1;
    const char* end = line.data() + line.size();
    while (p < end) {
      std::uint64_t v = 0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc()) bad();
      values.push_back(v);
      p = next;
      if (p < end) {
        if (*p != ',') bad();
        ++p;
      }
    }
    done_[id] = std::move(values);
  }

  std::filesystem::path path_;
  std::map<std::size_t, std::vector<std::uint64_t>> done_;
  bool header_seen_ = false;
  std::ofstream out_;
  std::mutex mutex_;
};

// Runs every work unit (or takes it from the checkpoint) and returns the
// per-unit histograms in unit order.
template <class Solve>
std::vector<std::vector<std::uint64_t>> run_units(const std::vector<WorkUnit>& units, const CountOptions& options,
                                                  const std::string& header, const Solve& solve) {
  std::vector<std::vector<std::uint64_t>> results(units.size());
  std::vector<std::size_t> pending;
  std::unique_ptr<Checkpoint> checkpoint;
  if (!options.checkpoint.empty()) {
    checkpoint = std::make_unique<Checkpoint>(options.checkpoint, header);
    for (const auto& [id, values] : checkpoint->done()) {
      if (id >= units.size()) {
        fail(ErrorCode::Parse, "checkpoint unit id " + std::to_string(id) + " out of range");
      }
      results[id] = values;
    }
  }
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!checkpoint || !checkpoint->done().contains(i)) pending.push_back(i);
  }
  detail::parallel_for(pending.size(), options.threads, [&](std::size_t slot) {
    const std::size_t id = pending[slot];
    results[id] = solve(units[id]);
    if (checkpoint) checkpoint->record(id, results[id]);
  });
  return results;
}

std::string checkpoint_header(unsigned n, unsigned k, CountMethod method, unsigned prefix, std::size_t units) {
  return "gallai-checkpoint v1 n=" + std::to_string(n) + " k=" + std::to_string(k) +
         " method=" + std::string(to_string(method)) + " prefix=" + std::to_string(prefix) +
         " units=" + std::to_string(units);
}

unsigned prefix_vertices(unsigned n, const CountOptions& options) {
  return std::max(1U, std::min(n, options.prefix_vertices));
}

unsigned canonical_palette(unsigned n) {
  return static_cast<unsigned>(std::max<std::uint64_t>(1, pair_count(n)));
}

}  // namespace

BigCount estimate_dfs_work(unsigned n, unsigned k) {
  if (k <= 1) return 1;
  return power(BigCount(k - 1), n) * pow2(pair_count(n));
}

BigCount estimate_exact_work(unsigned n) {
  BigCount total = 1;
  for (unsigned j = 2; j + 1 <= std::max(n, 3U); ++j) {
    BigCount term = power(BigCount(j - 1), n) * pow2(pair_count(n));
    BigCount fac = factorial(j);
    BigCount q;
    mpz_cdiv_q(q.get_mpz_t(), term.get_mpz_t(), fac.get_mpz_t());
    total += q;
  }
  return total;
}

BigCount count_gallai_dfs(unsigned n, unsigned k, const CountOptions& options) {
  require_n(n);
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > 255) fail(ErrorCode::InvalidArgument, "dfs method supports k <= 255; use the exact-color method");
  check_budget(estimate_dfs_work(n, k), options.budget, "c(" + std::to_string(n) + "," + std::to_string(k) + ")");
  if (n == 1) return 1;

  const unsigned prefix = prefix_vertices(n, options);
  const std::size_t prefix_edges = pair_count(prefix);
  std::vector<WorkUnit> units;
  {
    PartialColoring search(n, k);
    search.walk_labelled(0, prefix_edges, [&](const PartialColoring& p) {
      WorkUnit unit;
      for (std::size_t e = 0; e < prefix_edges; ++e) unit.prefix.push_back(p.color_at(e));
      units.push_back(std::move(unit));
    });
  }
  const auto results = run_units(units, options, checkpoint_header(n, k, CountMethod::Dfs, prefix, units.size()),
                                 [&](const WorkUnit& unit) {
                                   PartialColoring search(n, k);
                                   for (std::size_t e = 0; e < unit.prefix.size(); ++e) search.assign(e, unit.prefix[e]);
                                   const std::uint64_t leaves =
                                       unit.prefix.size() == search.edges() ? 1 : search.count_labelled(unit.prefix.size());
                                   return std::vector<std::uint64_t>{leaves};
                                 });
  BigCount total = 0;
  for (const auto& r : results) {
    if (r.size() != 1) fail(ErrorCode::Parse, "checkpoint entry has wrong arity for dfs");
    total += from_u64(r[0]);
  }
  return total;
}

std::vector<BigCount> exact_color_profile(unsigned n, const CountOptions& options) {
  require_n(n);
  check_budget(estimate_exact_work(n), options.budget, "g(" + std::to_string(n) + ",*)");
  if (n == 1) return {BigCount(1)};

  const unsigned palette = canonical_palette(n);
  const unsigned prefix = prefix_vertices(n, options);
  const std::size_t prefix_edges = pair_count(prefix);
  std::vector<WorkUnit> units;
  {
    PartialColoring search(n, palette);
    search.walk_canonical(0, prefix_edges, 0, [&](const PartialColoring& p, unsigned used) {
      WorkUnit unit;
      for (std::size_t e = 0; e < prefix_edges; ++e) unit.prefix.push_back(p.color_at(e));
      unit.used = used;
      units.push_back(std::move(unit));
    });
  }
  const auto results =
      run_units(units, options, checkpoint_header(n, palette, CountMethod::ExactColor, prefix, units.size()),
                [&](const WorkUnit& unit) {
                  PartialColoring search(n, palette);
                  for (std::size_t e = 0; e < unit.prefix.size(); ++e) search.assign(e, unit.prefix[e]);
                  std::vector<std::uint64_t> histogram(palette + 1, 0);
                  search.count_canonical(unit.prefix.size(), unit.used, histogram);
                  return histogram;
                });

  std::vector<BigCount> profile(palette + 1, 0);
  for (const auto& r : results) {
    if (r.size() != profile.size()) fail(ErrorCode::Parse, "checkpoint entry has wrong arity for exact-color");
    for (std::size_t j = 0; j < r.size(); ++j) profile[j] += from_u64(r[j]);
  }
  // Each canonical coloring with exactly j colors stands for j! labelled ones.
  for (std::size_t j = 0; j < profile.size(); ++j) profile[j] *= factorial(j);
  while (profile.size() > 1 && profile.back() == 0) profile.pop_back();
  return profile;
}

BigCount count_exact_colors(unsigned n, unsigned j, const CountOptions& options) {
  if (j < 1) fail(ErrorCode::InvalidArgument, "j must be at least 1");
  const auto profile = exact_color_profile(n, options);
  return j < profile.size() ? profile[j] : BigCount(0);
}

BigCount combine_profile(std::span<const BigCount> profile, const BigCount& k) {
  BigCount total = 0;
  for (std::size_t j = 0; j < profile.size(); ++j) {
    if (profile[j] == 0) continue;
    total += binomial(k, j) * profile[j];
  }
  return total;
}

BigCount count_gallai_via_exact(unsigned n, const BigCount& k, const CountOptions& options) {
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  const auto profile = exact_color_profile(n, options);
  return combine_profile(profile, k);
}

std::optional<BigCount> count_gallai_formula(unsigned n, const BigCount& k) {
  require_n(n);
  if (k < 1) fail(ErrorCode::InvalidArgument, "k must be at least 1");
  if (n == 1 || k == 1) return BigCount(1);
  if (n == 2) return k;
  if (k == 2) return pow2(pair_count(n));
  if (n == 3) return 3 * k * k - 2 * k;
  return std::nullopt;
}

BigCount count_at_most_two_colors(unsigned n, const BigCount& k) {
  require_n(n);
  if (n == 1) return 1;
  return binomial(k, 2) * (pow2(pair_count(n)) - 2) + k;
}

DominanceReport dominance_report(unsigned n, unsigned k, const CountOptions& options) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "dominance report needs k >= 2");
  DominanceReport out{n, k, count_gallai_dfs(n, k, options), count_at_most_two_colors(n, k), 0, 0};
  const BigCount main_term = binomial(BigCount(k), 2) * pow2(pair_count(n));
  BigCount g;
  mpz_gcd(g.get_mpz_t(), out.count.get_mpz_t(), main_term.get_mpz_t());
  out.ratio_numerator = out.count / g;
  out.ratio_denominator = main_term / g;
  return out;
}

void for_each_gallai(unsigned n, unsigned k, const std::function<void(const EdgeColoring&)>& visit,
                     std::uint64_t budget) {
  require_n(n);
  if (k < 1 || k > 255) fail(ErrorCode::InvalidArgument, "k must be in [1, 255]");
  check_budget(estimate_dfs_work(n, k), budget, "enumeration of K_" + std::to_string(n));
  PartialColoring search(n, k);
  std::vector<ColorId> colors(search.edges());
  search.walk_labelled(0, search.edges(), [&](const PartialColoring& p) {
    for (std::size_t e = 0; e < colors.size(); ++e) colors[e] = p.color_at(e) + 1U;
    visit(EdgeColoring::from_edge_colors(n, k, colors));
  });
}

void CountTable::add(CountCell cell) {
  for (const CountCell& other : cells_) {
    if (other.n == cell.n && other.k == cell.k && other.count != cell.count) {
      fail(ErrorCode::Internal, "count mismatch at (n=" + std::to_string(cell.n) + ", k=" + to_decimal(cell.k) +
                                    "): " + std::string(to_string(other.method)) + "=" + to_decimal(other.count) +
                                    " vs " + std::string(to_string(cell.method)) + "=" + to_decimal(cell.count));
    }
  }
  cells_.push_back(std::move(cell));
}

std::optional<BigCount> CountTable::lookup(unsigned n, const BigCount& k, CountMethod method) const {
  for (const CountCell& cell : cells_) {
    if (cell.n == n && cell.k == k && cell.method == method) return cell.count;
  }
  return std::nullopt;
}

}  // namespace gallai
