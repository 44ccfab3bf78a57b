#include "consec/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace consec {

namespace {

void check_entries(const std::vector<int>& entries) {
  const int n = static_cast<int>(entries.size());
  std::vector<bool> seen(n, false);
  for (int v : entries) {
    if (v < 1 || v > n || seen[v - 1]) {
      throw std::invalid_argument("not a permutation of {1.." + std::to_string(n) + "}");
    }
    seen[v - 1] = true;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  check_entries(entries_);
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative permutation size");
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> entries;
  std::string token;
  std::istringstream in(text);
  std::string normalized;
  normalized.reserve(text.size());
  for (char c : text) normalized.push_back(c == ',' ? ' ' : c);

  std::istringstream words(normalized);
  std::vector<std::string> tokens;
  while (words >> token) tokens.push_back(token);

  auto all_digits = [](const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
  };

  if (tokens.size() == 1 && tokens[0].size() > 1 && all_digits(tokens[0])) {
    // Compact one-line form, one digit per entry.
    for (char c : tokens[0]) entries.push_back(c - '0');
  } else {
    for (const auto& t : tokens) {
      if (!all_digits(t)) throw std::invalid_argument("bad permutation entry '" + t + "'");
      entries.push_back(std::stoi(t));
    }
  }
  return Permutation(std::move(entries));
}

int Permutation::inversion_count() const {
  int inv = 0;
  const int n = size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (entries_[i] > entries_[j]) ++inv;
  return inv;
}

Permutation Permutation::reverse() const {
  std::vector<int> e(entries_.rbegin(), entries_.rend());
  return Permutation(std::move(e));
}

Permutation Permutation::complement() const {
  const int n = size();
  std::vector<int> e(entries_);
  for (int& v : e) v = n + 1 - v;
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  const int n = size();
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[entries_[i] - 1] = i + 1;
  return Permutation(std::move(e));
}

int Permutation::descent_count() const {
  int d = 0;
  for (int i = 0; i + 1 < size(); ++i)
    if (entries_[i] > entries_[i + 1]) ++d;
  return d;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(entries_[i]);
  }
  return out;
}

std::string Permutation::to_compact_string() const {
  if (size() > 9) return to_string();
  std::string out;
  for (int v : entries_) out += static_cast<char>('0' + v);
  return out;
}

}  // namespace consec
