#include "consec/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <thread>

namespace consec {

GeneralizedPattern::GeneralizedPattern(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  for (const auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("empty pattern block");
    letters_.insert(letters_.end(), b.begin(), b.end());
  }
  if (letters_.empty()) throw std::invalid_argument("empty pattern");
  const int k = static_cast<int>(letters_.size());
  std::vector<bool> seen(k, false);
  for (int v : letters_) {
    if (v < 1 || v > k || seen[v - 1]) {
      throw std::invalid_argument("pattern letters must form a permutation of {1.." +
                                  std::to_string(k) + "}");
    }
    seen[v - 1] = true;
  }
}

GeneralizedPattern GeneralizedPattern::parse(const std::string& text) {
  std::vector<std::vector<int>> blocks(1);
  for (char c : text) {
    if (c == '-') {
      blocks.emplace_back();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      blocks.back().push_back(c - '0');
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw std::invalid_argument(std::string("bad pattern character '") + c + "'");
    }
  }
  return GeneralizedPattern(std::move(blocks));
}

bool GeneralizedPattern::is_standard() const {
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](const std::vector<int>& b) { return b.size() == 1; });
}

GeneralizedPattern GeneralizedPattern::reversed() const {
  std::vector<std::vector<int>> blocks(blocks_.rbegin(), blocks_.rend());
  for (auto& b : blocks) std::reverse(b.begin(), b.end());
  return GeneralizedPattern(std::move(blocks));
}

GeneralizedPattern GeneralizedPattern::complemented() const {
  const int k = length();
  std::vector<std::vector<int>> blocks(blocks_);
  for (auto& b : blocks)
    for (int& v : b) v = k + 1 - v;
  return GeneralizedPattern(std::move(blocks));
}

std::string GeneralizedPattern::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (i) out += '-';
    for (int v : blocks_[i]) out += static_cast<char>('0' + v);
  }
  return out;
}

PatternSet::PatternSet(std::vector<GeneralizedPattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::parse(const std::string& text) {
  std::vector<GeneralizedPattern> pats;
  std::string token;
  for (char c : text) {
    if (c == ',') {
      if (!token.empty()) pats.push_back(GeneralizedPattern::parse(token));
      token.clear();
    } else {
      token += c;
    }
  }
  if (!token.empty()) pats.push_back(GeneralizedPattern::parse(token));
  return PatternSet(std::move(pats));
}

bool PatternSet::contains_pattern(const GeneralizedPattern& g) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), g);
}

bool PatternSet::is_subset_of(const PatternSet& other) const {
  return std::all_of(patterns_.begin(), patterns_.end(),
                     [&](const GeneralizedPattern& g) { return other.contains_pattern(g); });
}

bool PatternSet::all_consecutive_of_length(int k) const {
  return std::all_of(patterns_.begin(), patterns_.end(), [k](const GeneralizedPattern& g) {
    return g.is_consecutive() && g.length() == k;
  });
}

PatternSet PatternSet::reversed() const {
  std::vector<GeneralizedPattern> pats;
  pats.reserve(patterns_.size());
  for (const auto& g : patterns_) pats.push_back(g.reversed());
  return PatternSet(std::move(pats));
}

PatternSet PatternSet::complemented() const {
  std::vector<GeneralizedPattern> pats;
  pats.reserve(patterns_.size());
  for (const auto& g : patterns_) pats.push_back(g.complemented());
  return PatternSet(std::move(pats));
}

std::string PatternSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    if (i) out += ',';
    out += patterns_[i].to_string();
  }
  return out;
}

std::vector<std::string> PatternSet::pattern_strings() const {
  std::vector<std::string> out;
  out.reserve(patterns_.size());
  for (const auto& g : patterns_) out.push_back(g.to_string());
  return out;
}

namespace {

// Window at position s order-isomorphic to a consecutive pattern: every value
// pair must compare the same way as the corresponding letter pair.
bool window_matches(const std::vector<int>& p, int s, const std::vector<int>& letters) {
  const int k = static_cast<int>(letters.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((p[s + i] < p[s + j]) != (letters[i] < letters[j])) return false;
  return true;
}

struct Matcher {
  const std::vector<int>& p;
  const std::vector<std::vector<int>>& blocks;
  std::vector<int> chosen_pos;     // host positions picked so far
  std::vector<int> chosen_letter;  // letters they must realize

  bool place(std::size_t block_idx, int min_start) {
    if (block_idx == blocks.size()) return true;
    const auto& block = blocks[block_idx];
    const int len = static_cast<int>(block.size());
    const int n = static_cast<int>(p.size());
    for (int s = min_start; s + len <= n; ++s) {
      bool ok = true;
      for (int t = 0; t < len && ok; ++t) {
        // New cell must order-match every previously chosen cell.
        for (std::size_t u = 0; u < chosen_pos.size() && ok; ++u) {
          if ((p[s + t] < p[chosen_pos[u]]) != (block[t] < chosen_letter[u])) ok = false;
        }
        // And the cells of its own block placed before it.
        for (int t2 = 0; t2 < t && ok; ++t2) {
          if ((p[s + t] < p[s + t2]) != (block[t] < block[t2])) ok = false;
        }
      }
      if (!ok) continue;
      for (int t = 0; t < len; ++t) {
        chosen_pos.push_back(s + t);
        chosen_letter.push_back(block[t]);
      }
      if (place(block_idx + 1, s + len)) return true;
      chosen_pos.resize(chosen_pos.size() - len);
      chosen_letter.resize(chosen_letter.size() - len);
    }
    return false;
  }
};

}  // namespace

bool contains(const Permutation& p, const GeneralizedPattern& g) {
  if (g.length() > p.size()) return false;
  const std::vector<int>& e = p.entries();
  if (g.is_consecutive()) {
    const auto& letters = g.letters();
    const int k = g.length();
    for (int s = 0; s + k <= p.size(); ++s)
      if (window_matches(e, s, letters)) return true;
    return false;
  }
  Matcher m{e, g.blocks(), {}, {}};
  return m.place(0, 0);
}

bool avoids_all(const Permutation& p, const PatternSet& s) {
  for (const auto& g : s.patterns())
    if (contains(p, g)) return false;
  return true;
}

void for_each_avoider(int n, const PatternSet& s,
                      const std::function<void(const Permutation&)>& visit, int cap) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap) throw CapExceeded(n, cap);
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do {
    Permutation p(e);
    if (avoids_all(p, s)) visit(p);
  } while (std::next_permutation(e.begin(), e.end()));
}

std::vector<Permutation> enumerate_avoiders(int n, const PatternSet& s, int cap) {
  std::vector<Permutation> out;
  for_each_avoider(n, s, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

namespace {

// Sum of q^inv over avoiders with the given first entry.
void oracle_slice(int n, int first, const PatternSet& s, std::vector<std::int64_t>& coeffs) {
  std::vector<int> rest;
  rest.reserve(n - 1);
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> e(n);
  e[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), e.begin() + 1);
    Permutation p(e);
    if (avoids_all(p, s)) coeffs[p.inversion_count()] += 1;
  } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

QPolynomial oracle_inv_poly(int n, const PatternSet& s, int cap, int jobs) {
  if (n < 0) throw std::invalid_argument("negative n");
  if (n > cap) throw CapExceeded(n, cap);
  if (n == 0) return QPolynomial::one();  // the empty permutation avoids everything

  const int max_inv = n * (n - 1) / 2;
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min(jobs, n);

  if (jobs == 1) {
    std::vector<std::int64_t> coeffs(max_inv + 1, 0);
    for (int first = 1; first <= n; ++first) oracle_slice(n, first, s, coeffs);
    return QPolynomial(std::move(coeffs));
  }

  std::vector<std::vector<std::int64_t>> partial(jobs, std::vector<std::int64_t>(max_inv + 1, 0));
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  for (int w = 0; w < jobs; ++w) {
    workers.emplace_back([&, w]() {
      for (int first = w + 1; first <= n; first += jobs) {
        oracle_slice(n, first, s, partial[w]);
      }
    });
  }
  for (auto& t : workers) t.join();

  std::vector<std::int64_t> coeffs(max_inv + 1, 0);
  for (const auto& part : partial)
    for (int e = 0; e <= max_inv; ++e) coeffs[e] += part[e];
  return QPolynomial(std::move(coeffs));
}

}  // namespace consec
