#include "consec/dyck.hpp"

#include <algorithm>
#include <stdexcept>

namespace consec {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  int north = 0, east = 0;
  for (Step s : steps_) {
    if (s == Step::North) ++north;
    else ++east;
    if (east > north) throw std::invalid_argument("path dips below the diagonal");
  }
  if (north != east) throw std::invalid_argument("unbalanced Dyck path");
}

int DyckPath::area() const {
  int x = 0, y = 0, area = 0;
  for (Step s : steps_) {
    if (s == Step::North) {
      ++y;
    } else {
      area += y - x - 1;
      ++x;
    }
  }
  return area;
}

std::string DyckPath::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out += (s == Step::North) ? 'N' : 'E';
  return out;
}

namespace {

void extend(std::vector<Step>& prefix, int north, int east, int n, std::vector<DyckPath>& out) {
  if (north == n && east == n) {
    out.emplace_back(prefix);
    return;
  }
  if (east < north) {  // EAST first keeps the stream lexicographic in E < N
    prefix.push_back(Step::East);
    extend(prefix, north, east + 1, n, out);
    prefix.pop_back();
  }
  if (north < n) {
    prefix.push_back(Step::North);
    extend(prefix, north + 1, east, n, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<DyckPath> enumerate_dyck(int n, int cap) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<DyckPath> out;
  std::vector<Step> prefix;
  extend(prefix, 0, 0, n, out);
  return out;
}

TwoRowTableau dyck_to_two_row(const DyckPath& d) {
  TwoRowTableau t;
  int label = 1;
  for (Step s : d.steps()) {
    (s == Step::North ? t.top : t.bottom).push_back(label++);
  }
  return t;
}

DyckPath two_row_to_dyck(const TwoRowTableau& t) {
  if (t.top.size() != t.bottom.size()) throw std::invalid_argument("rows differ in length");
  const int total = 2 * static_cast<int>(t.top.size());
  std::vector<Step> steps(total, Step::East);
  std::vector<bool> seen(total, false);
  for (int v : t.top) {
    if (v < 1 || v > total || seen[v - 1]) throw std::invalid_argument("bad top-row label");
    seen[v - 1] = true;
    steps[v - 1] = Step::North;
  }
  for (int v : t.bottom) {
    if (v < 1 || v > total || seen[v - 1]) throw std::invalid_argument("bad bottom-row label");
    seen[v - 1] = true;
  }
  if (!std::is_sorted(t.top.begin(), t.top.end()) ||
      !std::is_sorted(t.bottom.begin(), t.bottom.end())) {
    throw std::invalid_argument("rows must increase left to right");
  }
  return DyckPath(std::move(steps));  // validates the prefix condition
}

}  // namespace consec
