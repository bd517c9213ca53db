#include "kscyc/truncation.hpp"

#include <algorithm>

namespace kscyc {

int Truncation::level(const Rational& e) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), e);
  return static_cast<int>(it - levels.begin());
}

std::optional<int> Truncation::exact_level(const Rational& e) const {
  auto it = std::lower_bound(levels.begin(), levels.end(), e);
  if (it == levels.end() || *it != e) return std::nullopt;
  return static_cast<int>(it - levels.begin());
}

Vec truncate(const Vec& v, const Truncation& t) {
  Vec out;
  for (const auto& [m, c] : v)
    if (t.keep(m.e, m.w.size())) out.emplace_hint(out.end(), m, c);
  return out;
}

std::optional<int> min_order(const Vec& v, const Truncation& t) {
  std::optional<int> best;
  for (const auto& [m, c] : v) {
    int o = t.order_of(m.e, m.w.size());
    if (!best || o < *best) best = o;
  }
  return best;
}

std::vector<Word> all_words(const std::vector<Letter>& letters, int lo, int hi) {
  std::vector<Word> out;
  std::vector<Word> layer{Word{}};
  for (int len = 0; len <= hi; ++len) {
    if (len >= lo) out.insert(out.end(), layer.begin(), layer.end());
    if (len == hi) break;
    std::vector<Word> next;
    next.reserve(layer.size() * letters.size());
    for (const auto& w : layer)
      for (Letter l : letters) {
        Word x = w;
        x.push_back(l);
        next.push_back(std::move(x));
      }
    layer = std::move(next);
  }
  return out;
}

}  // namespace kscyc
