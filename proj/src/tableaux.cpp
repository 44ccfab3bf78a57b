#include "consec/tableaux.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace consec {

namespace {

std::map<std::pair<int, int>, int> position_map(const std::vector<StripCell>& cells) {
  std::map<std::pair<int, int>, int> m;
  for (const auto& c : cells) {
    if (!m.emplace(std::make_pair(c.row, c.col), c.entry).second) {
      throw std::invalid_argument("two cells share a position");
    }
  }
  return m;
}

}  // namespace

StripTableau::StripTableau(std::vector<StripCell> cells) : cells_(std::move(cells)) {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (const auto& c : cells_) {
    if (c.entry < 1 || c.entry > n || seen[c.entry - 1]) {
      throw std::invalid_argument("entries must be exactly {1.." + std::to_string(n) + "}");
    }
    seen[c.entry - 1] = true;
  }
  for (int i = 1; i < n; ++i) {
    const auto& prev = cells_[i - 1];
    const auto& cur = cells_[i];
    const bool below = cur.col == prev.col && cur.row == prev.row + 1;
    const bool right = cur.row == prev.row && cur.col == prev.col + 1;
    if (!below && !right) throw std::invalid_argument("cells do not form a strip");
  }
  auto pos = position_map(cells_);
  for (const auto& c : cells_) {
    auto above = pos.find({c.row - 1, c.col});
    if (above != pos.end() && above->second >= c.entry) {
      throw std::invalid_argument("columns must decrease bottom to top");
    }
    auto right = pos.find({c.row, c.col + 1});
    if (right != pos.end() && right->second >= c.entry) {
      throw std::invalid_argument("rows must decrease left to right");
    }
  }
}

StripTableau StripTableau::from_word(const Permutation& p) {
  const int n = p.size();
  std::vector<StripCell> build;
  build.reserve(n);
  int row = 0, col = 0;
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      if (p[i] < p[i - 1]) --row;  // stack on top
      else --col;                  // extend to the left
    }
    build.push_back({p[i], row, col});
  }
  int min_row = 0, min_col = 0;
  for (const auto& c : build) {
    min_row = std::min(min_row, c.row);
    min_col = std::min(min_col, c.col);
  }
  for (auto& c : build) {
    c.row -= min_row;
    c.col -= min_col;
  }
  std::reverse(build.begin(), build.end());  // strip order starts at the top-left end
  return StripTableau(std::move(build));
}

Permutation StripTableau::reading_word() const {
  // Columns right to left, bottom (largest row) to top.
  std::vector<StripCell> sorted = cells_;
  std::sort(sorted.begin(), sorted.end(), [](const StripCell& a, const StripCell& b) {
    if (a.col != b.col) return a.col > b.col;
    return a.row > b.row;
  });
  std::vector<int> word;
  word.reserve(sorted.size());
  for (const auto& c : sorted) word.push_back(c.entry);
  return Permutation(std::move(word));
}

std::optional<int> StripTableau::entry_at(int row, int col) const {
  for (const auto& c : cells_)
    if (c.row == row && c.col == col) return c.entry;
  return std::nullopt;
}

int StripTableau::column_height(int col) const {
  int h = 0;
  for (const auto& c : cells_)
    if (c.col == col) ++h;
  return h;
}

int StripTableau::row_width(int row) const {
  int w = 0;
  for (const auto& c : cells_)
    if (c.row == row) ++w;
  return w;
}

int StripTableau::first_column() const {
  int m = cells_.empty() ? 0 : cells_[0].col;
  for (const auto& c : cells_) m = std::min(m, c.col);
  return m;
}

int StripTableau::last_column() const {
  int m = cells_.empty() ? 0 : cells_[0].col;
  for (const auto& c : cells_) m = std::max(m, c.col);
  return m;
}

std::string StripTableau::render() const {
  if (cells_.empty()) return "(empty)\n";
  int max_row = 0, max_col = 0, max_entry = 1;
  for (const auto& c : cells_) {
    max_row = std::max(max_row, c.row);
    max_col = std::max(max_col, c.col);
    max_entry = std::max(max_entry, c.entry);
  }
  const int width = static_cast<int>(std::to_string(max_entry).size());
  std::vector<std::vector<std::string>> grid(max_row + 1,
                                             std::vector<std::string>(max_col + 1, ""));
  for (const auto& c : cells_) grid[c.row][c.col] = std::to_string(c.entry);
  std::string out;
  for (const auto& row : grid) {
    std::string line;
    for (const auto& cell : row) {
      std::string padded = cell;
      while (static_cast<int>(padded.size()) < width) padded.insert(padded.begin(), ' ');
      line += padded;
      line += ' ';
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

nlohmann::json StripTableau::to_json() const {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : cells_) {
    cells.push_back({{"entry", c.entry}, {"row", c.row}, {"col", c.col}});
  }
  return {{"cells", cells}};
}

StripTableau StripTableau::from_json(const nlohmann::json& j) {
  std::vector<StripCell> cells;
  for (const auto& c : j.at("cells")) {
    cells.push_back({c.at("entry").get<int>(), c.at("row").get<int>(), c.at("col").get<int>()});
  }
  return StripTableau(std::move(cells));
}

bool structurally_avoids(const StripTableau& t, const GeneralizedPattern& g) {
  static const std::map<std::string, int> kKinds = {
      {"321", 0}, {"123", 1}, {"312", 2}, {"213", 3}, {"231", 4}, {"132", 5}};
  auto it = kKinds.find(g.to_string());
  if (it == kKinds.end()) {
    throw std::invalid_argument("no structural condition for pattern " + g.to_string());
  }
  const int kind = it->second;
  auto pos = [&t](int row, int col) { return t.entry_at(row, col); };

  switch (kind) {
    case 0: {  // 321: columns at most 2 high
      std::map<int, int> heights;
      for (const auto& c : t.cells()) ++heights[c.col];
      for (const auto& [col, h] : heights)
        if (h > 2) return false;
      return true;
    }
    case 1: {  // 123: rows at most 2 wide
      std::map<int, int> widths;
      for (const auto& c : t.cells()) ++widths[c.row];
      for (const auto& [row, w] : widths)
        if (w > 2) return false;
      return true;
    }
    case 2:    // 312: right corners decrease
    case 3: {  // 213: right corners increase
      for (const auto& c : t.cells()) {
        auto left = pos(c.row, c.col - 1);
        auto below = pos(c.row + 1, c.col);
        if (!left || !below) continue;
        if (kind == 2 && *below > *left) return false;
        if (kind == 3 && *below < *left) return false;
      }
      return true;
    }
    default: {  // 231 / 132: left corners
      for (const auto& c : t.cells()) {
        auto above = pos(c.row - 1, c.col);
        auto right = pos(c.row, c.col + 1);
        if (!above || !right) continue;
        if (kind == 4 && *above < *right) return false;
        if (kind == 5 && *above > *right) return false;
      }
      return true;
    }
  }
}

FibonacciShape::FibonacciShape(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p != 1 && p != 2) throw std::invalid_argument("shape parts must be 1 or 2");
}

int FibonacciShape::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string FibonacciShape::to_string() const {
  std::string out;
  for (int p : parts_) out += static_cast<char>('0' + p);
  return out;
}

FibonacciTableau::FibonacciTableau(std::vector<std::vector<int>> columns)
    : columns_(std::move(columns)) {
  const int n = size();
  std::vector<bool> seen(n, false);
  for (const auto& col : columns_) {
    if (col.empty() || col.size() > 2) {
      throw std::invalid_argument("columns must have height 1 or 2");
    }
    for (int v : col) {
      if (v < 1 || v > n || seen[v - 1]) {
        throw std::invalid_argument("entries must be exactly {1.." + std::to_string(n) + "}");
      }
      seen[v - 1] = true;
    }
    if (col.size() == 2 && col[1] >= col[0]) {
      throw std::invalid_argument("columns must decrease bottom to top");
    }
  }
  for (std::size_t j = 1; j < columns_.size(); ++j) {
    if (columns_[j][0] >= columns_[j - 1][0]) {
      throw std::invalid_argument("bottom row must decrease left to right");
    }
  }
}

FibonacciShape FibonacciTableau::shape() const {
  std::vector<int> parts;
  parts.reserve(columns_.size());
  for (const auto& col : columns_) parts.push_back(static_cast<int>(col.size()));
  return FibonacciShape(std::move(parts));
}

int FibonacciTableau::size() const {
  int n = 0;
  for (const auto& col : columns_) n += static_cast<int>(col.size());
  return n;
}

Permutation FibonacciTableau::reading_word() const {
  std::vector<int> word;
  word.reserve(size());
  for (auto it = columns_.rbegin(); it != columns_.rend(); ++it) {
    for (int v : *it) word.push_back(v);  // stored bottom-to-top already
  }
  return Permutation(std::move(word));
}

bool FibonacciTableau::all_columns_height2() const {
  return std::all_of(columns_.begin(), columns_.end(),
                     [](const std::vector<int>& c) { return c.size() == 2; });
}

bool FibonacciTableau::top_row_decreasing() const {
  int prev = 0;
  bool first = true;
  for (const auto& col : columns_) {
    if (col.size() != 2) continue;
    if (!first && col[1] >= prev) return false;
    prev = col[1];
    first = false;
  }
  return true;
}

std::string FibonacciTableau::render() const {
  if (columns_.empty()) return "(empty)\n";
  int max_entry = 1;
  for (const auto& col : columns_)
    for (int v : col) max_entry = std::max(max_entry, v);
  const int width = static_cast<int>(std::to_string(max_entry).size());
  auto pad = [width](const std::string& s) {
    std::string p = s;
    while (static_cast<int>(p.size()) < width) p.insert(p.begin(), ' ');
    return p;
  };
  std::string top, bottom;
  for (const auto& col : columns_) {
    top += pad(col.size() == 2 ? std::to_string(col[1]) : "");
    top += ' ';
    bottom += pad(std::to_string(col[0]));
    bottom += ' ';
  }
  while (!top.empty() && top.back() == ' ') top.pop_back();
  while (!bottom.empty() && bottom.back() == ' ') bottom.pop_back();
  std::string out;
  if (top.find_first_not_of(' ') != std::string::npos) {
    out += top;
    out += '\n';
  }
  out += bottom;
  out += '\n';
  return out;
}

nlohmann::json FibonacciTableau::to_json() const {
  return {{"shape", shape().parts()}, {"columns", columns_}};
}

FibonacciTableau FibonacciTableau::from_json(const nlohmann::json& j) {
  return FibonacciTableau(j.at("columns").get<std::vector<std::vector<int>>>());
}

FibonacciTableau strip_to_fibonacci(const StripTableau& t) {
  if (!structurally_avoids(t, GeneralizedPattern::parse("321")) ||
      !structurally_avoids(t, GeneralizedPattern::parse("312"))) {
    throw std::invalid_argument(
        "dropping columns requires heights <= 2 and decreasing right corners");
  }
  std::map<int, std::vector<std::pair<int, int>>> by_col;  // col -> (row, entry)
  for (const auto& c : t.cells()) by_col[c.col].push_back({c.row, c.entry});
  std::vector<std::vector<int>> columns;
  for (auto& [col, cells] : by_col) {
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });  // bottom first
    std::vector<int> column;
    column.reserve(cells.size());
    for (const auto& [row, entry] : cells) column.push_back(entry);
    columns.push_back(std::move(column));
  }
  return FibonacciTableau(std::move(columns));
}

namespace {

void fill_columns(const std::vector<int>& parts, std::size_t idx, std::vector<int>& remaining,
                  std::vector<std::vector<int>>& columns,
                  const std::function<void(const FibonacciTableau&)>& visit) {
  if (idx == parts.size()) {
    visit(FibonacciTableau(columns));
    return;
  }
  // The bottom of each column is forced: it must exceed every value placed
  // later, so it is the largest remaining value.  Only height-2 tops vary.
  const int bottom = remaining.back();
  remaining.pop_back();
  if (parts[idx] == 1) {
    columns.push_back({bottom});
    fill_columns(parts, idx + 1, remaining, columns, visit);
    columns.pop_back();
  } else {
    for (int i = static_cast<int>(remaining.size()) - 1; i >= 0; --i) {
      const int top = remaining[i];
      remaining.erase(remaining.begin() + i);
      columns.push_back({bottom, top});
      fill_columns(parts, idx + 1, remaining, columns, visit);
      columns.pop_back();
      remaining.insert(remaining.begin() + i, top);
    }
  }
  remaining.push_back(bottom);
}

void shapes_then_fill(int remaining_size, std::vector<int>& parts, int n,
                      const std::function<void(const FibonacciTableau&)>& visit) {
  if (remaining_size == 0) {
    std::vector<int> values(n);
    std::iota(values.begin(), values.end(), 1);
    std::vector<std::vector<int>> columns;
    fill_columns(parts, 0, values, columns, visit);
    return;
  }
  parts.push_back(1);
  shapes_then_fill(remaining_size - 1, parts, n, visit);
  parts.pop_back();
  if (remaining_size >= 2) {
    parts.push_back(2);
    shapes_then_fill(remaining_size - 2, parts, n, visit);
    parts.pop_back();
  }
}

}  // namespace

void for_each_fibonacci_tableau(int n, const std::function<void(const FibonacciTableau&)>& visit,
                                int cap) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap) throw CapExceeded(n, cap);
  if (n == 0) {
    visit(FibonacciTableau());
    return;
  }
  std::vector<int> parts;
  shapes_then_fill(n, parts, n, visit);
}

std::vector<FibonacciTableau> enumerate_fibonacci_tableaux(
    int n, const std::function<bool(const FibonacciTableau&)>& keep, int cap) {
  std::vector<FibonacciTableau> out;
  for_each_fibonacci_tableau(
      n,
      [&](const FibonacciTableau& t) {
        if (!keep || keep(t)) out.push_back(t);
      },
      cap);
  return out;
}

}  // namespace consec
