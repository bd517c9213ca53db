#include "kscyc/linalg.hpp"

#include "kscyc/errors.hpp"

namespace kscyc {

void Eliminator::reduce(SparseRow& row) const {
  // Eliminate pivots in increasing column order.  Reducing by a pivot row only
  // introduces entries in columns that are not pivots of earlier rows, except
  // larger pivot columns, which are handled later in the same sweep.
  auto it = row.begin();
  while (it != row.end()) {
    auto p = pivots_.find(it->first);
    if (p == pivots_.end()) {
      ++it;
      continue;
    }
    Rational f = it->second;
    int col = it->first;
    for (const auto& [c, v] : p->second) {
      auto [jt, fresh] = row.try_emplace(c, -f * v);
      if (!fresh) {
        jt->second -= f * v;
        if (is_zero(jt->second)) row.erase(jt);
      }
    }
    it = row.upper_bound(col);
  }
}

bool Eliminator::add_row(SparseRow row) {
  for (auto it = row.begin(); it != row.end();)
    it = is_zero(it->second) ? row.erase(it) : std::next(it);
  reduce(row);
  if (row.empty()) return false;
  int col = row.begin()->first;
  Rational inv = 1 / row.begin()->second;
  for (auto& [c, v] : row) v *= inv;
  // keep the stored rows fully reduced against each other
  for (auto& [pc, prow] : pivots_) {
    auto jt = prow.find(col);
    if (jt == prow.end()) continue;
    Rational f = jt->second;
    for (const auto& [c, v] : row) {
      auto [kt, fresh] = prow.try_emplace(c, -f * v);
      if (!fresh) {
        kt->second -= f * v;
        if (is_zero(kt->second)) prow.erase(kt);
      }
    }
  }
  pivots_.emplace(col, std::move(row));
  return true;
}

std::vector<SparseRow> Eliminator::nullspace() const {
  std::vector<SparseRow> out;
  for (int free = 0; free < ncols_; ++free) {
    if (pivots_.count(free)) continue;
    SparseRow v;
    v[free] = 1;
    for (const auto& [pc, prow] : pivots_) {
      auto jt = prow.find(free);
      if (jt != prow.end()) v[pc] = -jt->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

int rank(const Matrix& a) {
  if (a.empty()) return 0;
  Eliminator e(static_cast<int>(a[0].size()));
  for (const auto& r : a) {
    SparseRow row;
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!is_zero(r[j])) row[static_cast<int>(j)] = r[j];
    e.add_row(std::move(row));
  }
  return e.rank();
}

std::optional<std::vector<Rational>> solve(const Matrix& a,
                                           const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw InvariantViolation("solve: shape mismatch");
  const int n = a.empty() ? 0 : static_cast<int>(a[0].size());
  // augmented column n carries b
  Eliminator e(n + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    SparseRow row;
    for (int j = 0; j < n; ++j)
      if (!is_zero(a[i][j])) row[j] = a[i][j];
    if (!is_zero(b[i])) row[n] = b[i];
    e.add_row(std::move(row));
  }
  // a pivot in column n means 0 = 1
  std::vector<Rational> x(n);
  for (const auto& v : e.nullspace()) {
    auto it = v.find(n);
    if (it == v.end()) continue;
    // the unique null vector with entry 1 at the augmented column, free
    // variables zero: x = -(that vector) restricted to the first n entries
    for (const auto& [c, q] : v)
      if (c < n) x[c] = -q;
    return x;
  }
  return std::nullopt;
}

Matrix transpose(const Matrix& a) {
  if (a.empty()) return {};
  Matrix t(a[0].size(), std::vector<Rational>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

}  // namespace kscyc
