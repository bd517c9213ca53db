#include <algorithm>
#include <sstream>

#include "kscyc/barcx.hpp"

namespace kscyc {

AInftyStructure::AInftyStructure(Basis basis, Truncation trunc, bool filtered)
    : basis_(std::move(basis)), trunc_(std::move(trunc)), filtered_(filtered) {
  if (trunc_.order < 1) throw InputError("truncation order must be >= 1");
}

void AInftyStructure::add_op(const Word& inputs, int output, const Rational& c,
                             const Rational& energy, int mu) {
  const int n = static_cast<int>(basis_.size());
  auto describe = [&] {
    std::ostringstream os;
    os << "m" << inputs.size() << basis_.format_word(inputs);
    return os.str();
  };
  for (Letter l : inputs)
    if (l >= n)
      throw InputError("op m" + std::to_string(inputs.size()) + ": input index " +
                       std::to_string(l) + " out of range");
  if (output < 0 || output >= n)
    throw InputError("op " + describe() + ": output index out of range");
  if (!filtered_) {
    if (inputs.empty())
      throw InputError("op m0: arity-0 operations need a filtered structure");
    if (!is_zero(energy) || mu != 0)
      throw InputError("op " + describe() + ": energy tag on an unfiltered structure");
    if (!parity_only_ && basis_[output].shifted() != basis_.shifted_degree(inputs) + 1)
      throw InputError("op " + describe() + " -> " + basis_[output].id +
                       ": shifted degree must be sum of inputs + 1");
  }
  if (filtered_ || parity_only_) {
    // the Novikov parameter's grading is dropped, so only parity is checked
    if (parity_of(basis_[output].shifted()) !=
        parity_of(basis_.shifted_degree(inputs) + 1))
      throw InputError("op " + describe() + " -> " + basis_[output].id +
                       ": output parity must be input parity + 1");
  }
  if (is_zero(c)) return;
  entries_.push_back({inputs, output, c, energy, mu});
  add_term(ops_[inputs], Mono{energy, Word{static_cast<Letter>(output)}}, c);
  if (ops_[inputs].empty()) ops_.erase(inputs);
  max_arity_ = std::max(max_arity_, static_cast<int>(inputs.size()));
}

bool AInftyStructure::minimal() const {
  for (const auto& [in, out] : ops_) {
    if (in.size() != 1) continue;
    for (const auto& [m, c] : out)
      if (is_zero(m.e)) return false;
  }
  return true;
}

Vec hat_extend(const AInftyStructure& a, int k, const Vec& x) {
  return coderivation(a.basis(), a.ops(), 1, x, a.trunc(), k);
}

Vec dhat(const AInftyStructure& a, const Vec& x) {
  return coderivation(a.basis(), a.ops(), 1, x, a.trunc());
}

std::map<Word, Vec> ainfty_defect(const AInftyStructure& a) {
  std::vector<Letter> letters(a.basis().size());
  for (std::size_t i = 0; i < letters.size(); ++i) letters[i] = static_cast<Letter>(i);
  std::map<Word, Vec> out;
  const int lo = a.filtered() ? 0 : 1;
  for (auto& w : all_words(letters, lo, a.trunc().order)) {
    Vec r = truncate(dhat(a, dhat(a, single(w))), a.trunc());
    if (!r.empty()) out.emplace(std::move(w), std::move(r));
  }
  return out;
}

Report unit_check(const AInftyStructure& a) {
  const Basis& b = a.basis();
  auto u = b.unit();
  if (!u) throw PreconditionError("unit_check: no basis element is flagged as unit");
  Report rep;
  const Letter I = static_cast<Letter>(*u);
  for (const auto& [in, out] : a.ops()) {
    if (in.size() == 2 || std::find(in.begin(), in.end(), I) == in.end()) continue;
    rep.fail("m" + std::to_string(in.size()) + b.format_word(in) +
             " has a unit input but is nonzero: " + format_vec(b, out));
  }
  auto op = [&](const Word& in) {
    auto it = a.ops().find(in);
    return it == a.ops().end() ? Vec{} : it->second;
  };
  for (std::size_t x = 0; x < b.size(); ++x) {
    const Letter X = static_cast<Letter>(x);
    Vec left = op({I, X}), right = op({X, I});
    Vec want_left = single({X});
    Vec want_right = single({X}, sign_of(b[x].degree));
    if (left != want_left)
      rep.fail("m2(I," + b[x].id + ") = " + format_vec(b, left) + ", expected " +
               format_vec(b, want_left));
    if (right != want_right)
      rep.fail("m2(" + b[x].id + ",I) = " + format_vec(b, right) + ", expected " +
               format_vec(b, want_right));
  }
  return rep;
}

std::string format_vec(const Basis& b, const Vec& v) {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : v) {
    if (!first) s += " + ";
    first = false;
    s += format_rational(c);
    if (!is_zero(m.e)) s += "*T^" + format_rational(m.e);
    s += b.format_word(m.w);
  }
  return s;
}

}  // namespace kscyc
