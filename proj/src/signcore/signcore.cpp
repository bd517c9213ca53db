#include "kscyc/signcore.hpp"

#include <set>

namespace kscyc {

int koszul_sign(std::span<const GradedSymbol> left,
                std::span<const GradedSymbol> right) {
  int pl = 0, sl = 0, pr = 0, sr = 0;
  for (const auto& g : left) {
    pl += g.shifted_degree;
    sl += g.sharp;
  }
  for (const auto& g : right) {
    pr += g.shifted_degree;
    sr += g.sharp;
  }
  return sign_of(swap_exponent(parity_of(pl), parity_of(pr), parity_of(sl),
                               parity_of(sr)));
}

int shifted_degree_of_word(std::span<const BasisElement> word) {
  int s = 0;
  for (const auto& e : word) s += e.shifted();
  return s;
}

Basis::Basis(std::vector<BasisElement> elems) : elems_(std::move(elems)) {
  if (elems_.size() > 127) throw InputError("at most 127 basis elements supported");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const auto& e = elems_[i];
    if (e.id.empty()) throw InputError("basis element with empty id");
    if (!seen.insert(e.id).second) throw InputError("duplicate basis id '" + e.id + "'");
    if (e.is_unit) {
      if (unit_) throw InputError("more than one unit in basis");
      unit_ = static_cast<int>(i);
    }
    par_.push_back(parity_of(e.shifted()));
  }
}

int Basis::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].id == id) return static_cast<int>(i);
  throw InputError("unknown basis id '" + std::string(id) + "'");
}

int Basis::word_parity(const Word& w) const { return word_parity(w, 0, w.size()); }

int Basis::word_parity(const Word& w, std::size_t from, std::size_t to) const {
  int p = 0;
  for (std::size_t i = from; i < to; ++i) p ^= par_[letter_index(w[i])];
  return p;
}

int Basis::shifted_degree(const Word& w) const {
  int s = 0;
  for (Letter l : w) s += elems_[letter_index(l)].shifted();
  return s;
}

std::string Basis::format_word(const Word& w) const {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += elems_[letter_index(w[i])].id;
  }
  return s + "]";
}

bool Basis::operator==(const Basis& o) const {
  if (elems_.size() != o.elems_.size()) return false;
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].id != o.elems_[i].id || elems_[i].degree != o.elems_[i].degree ||
        elems_[i].is_unit != o.elems_[i].is_unit)
      return false;
  return true;
}

std::map<Word, Series> index_by_word(const Vec& v) {
  std::map<Word, Series> out;
  for (const auto& [m, c] : v) add_term(out[m.w], m.e, c);
  return out;
}

}  // namespace kscyc
