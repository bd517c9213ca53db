#include <algorithm>
#include <set>

#include "kscyc/sympeq.hpp"

namespace kscyc {

namespace {

std::vector<Letter> index_letters(const Basis& b) {
  std::vector<Letter> l(b.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = static_cast<Letter>(i);
  return l;
}

Word indices_of(const Word& w) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = static_cast<Letter>(letter_index(w[i]));
  return r;
}

// psi indexed by (word, pos) with the energy series as value
using BimodIndex = std::map<std::pair<Word, int>, Series>;

BimodIndex index_bimod(const BimodMap& psi) {
  BimodIndex idx;
  for (const auto& [k, c] : psi) add_term(idx[{k.w, k.pos}], k.e, c);
  return idx;
}

// Coefficient attached to a linear word with two dx letters: rotate so the
// last dx ends the word and read psi there.
Series coef2(const Basis& b, const BimodIndex& idx, const Word& w) {
  std::size_t q = w.size();
  while (!is_dx(w[--q])) {}
  Word head(w.begin(), w.begin() + q + 1), tail(w.begin() + q + 1, w.end());
  const int sg = sign_of(swap_exponent(b.word_parity(head), b.word_parity(tail)));
  Word v = tail;
  v.insert(v.end(), head.begin(), head.end());
  int p = 0;
  while (!is_dx(v[p])) ++p;
  auto it = idx.find({indices_of(v), p});
  if (it == idx.end()) return {};
  return scaled(it->second, Rational(sg));
}

}  // namespace

std::set<Word> cyclic_classes(const Vec& v) {
  std::set<Word> out;
  for (const auto& [m, c] : v) {
    Word w = indices_of(m.w), best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    out.insert(best);
  }
  return out;
}

Vec to_form(const Basis& b, const ConstantTwoForm& w) { return constant_twoform(b, w.g); }

ConstantTwoForm constant_part(const Basis& b, const Vec& omega) {
  Vec c;
  for (const auto& [m, a] : omega)
    if (m.w.size() == 2 && is_zero(m.e)) add_term(c, m, a);
  ConstantTwoForm g{Matrix(b.size(), std::vector<Rational>(b.size()))};
  for (const auto& [k, a] : bimodmap_from_twoform(b, c)) g.g[k.w[0]][k.w[1]] = a;
  return g;
}

bool is_graded_skew(const Basis& b, const ConstantTwoForm& w) {
  const std::size_t n = b.size();
  if (w.g.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (w.g[i].size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) {
      const int s = sign_of(swap_exponent(b.parity(i), b.parity(j)));
      if (w.g[i][j] != -s * w.g[j][i]) return false;
    }
  }
  return true;
}

bool is_nondegenerate(const ConstantTwoForm& w) {
  return rank(w.g) == static_cast<int>(w.g.size());
}

CyclicityReport cyclicity_defect(const AInftyStructure& a, const ConstantTwoForm& w) {
  const Basis& b = a.basis();
  const Truncation& t = a.trunc();
  if (!is_graded_skew(b, w)) throw PreconditionError("cyclicity: pairing is not graded skew");
  CyclicityReport rep;

  std::set<std::size_t> arities;
  for (const auto& [in, out] : a.ops()) arities.insert(in.size());
  auto pair_with = [&](const Word& in, Letter z) {
    Series s;
    auto it = a.ops().find(in);
    if (it == a.ops().end()) return s;
    for (const auto& [o, c] : it->second) add_term(s, o.e, Rational(c * w.g[o.w[0]][z]));
    return s;
  };
  for (std::size_t k : arities) {
    if (static_cast<int>(k) + 1 > t.order) continue;
    for (const auto& x : all_words(index_letters(b), k + 1, k + 1)) {
      Series lhs = pair_with(Word(x.begin(), x.end() - 1), x.back());
      const int sg = sign_of(b.parity(x[0]) * b.word_parity(x, 1, x.size()));
      add_scaled(lhs, pair_with(Word(x.begin() + 1, x.end()), x[0]), Rational(-sg));
      for (const auto& [e, c] : lhs)
        if (t.keep(e, x.size())) add_term(rep.equation_defect, Mono{e, x}, c);
    }
  }

  const VectorField q = q_from_structure(a);
  rep.lie_defect = truncate(lie_derivative(b, q, to_form(b, w)), t);
  return rep;
}

std::vector<Word> closedness_failures(const Basis& b, const BimodMap& psi, int max_len) {
  const BimodIndex idx = index_bimod(psi);
  std::vector<Word> bad;
  for (const auto& u : all_words(index_letters(b), 3, max_len)) {
    const std::size_t n = u.size();
    const Word xu = x_word(u);
    bool failed = false;
    for (std::size_t i = 0; i < n && !failed; ++i)
      for (std::size_t j = i + 1; j < n && !failed; ++j)
        for (std::size_t k = j + 1; k < n && !failed; ++k) {
          const std::size_t marks[3] = {i, j, k};
          Series s;
          for (int r = 0; r < 3; ++r) {
            Word w = xu;
            int before = 0;
            for (int o = 0; o < 3; ++o) {
              if (o == r) continue;
              w[marks[o]] = dx_letter(u[marks[o]]);
              if (marks[o] < marks[r]) ++before;
            }
            add_scaled(s, coef2(b, idx, w), Rational(sign_of(before)));
          }
          if (!s.empty()) {
            Word wit = xu;
            for (std::size_t mk : marks) wit[mk] = dx_letter(u[mk]);
            bad.push_back(wit);
            failed = true;
          }
        }
  }
  return bad;
}

ShipReport ship_check(const AInftyStructure& a, const BimodMap& psi, int max_slots) {
  const Basis& b = a.basis();
  ShipReport rep;
  Truncation t = a.trunc();
  t.order = max_slots;

  BimodMap window;
  for (const auto& [k, c] : psi)
    if (t.keep(k.e, k.w.size())) add_term(window, k, c);

  for (const auto& k : skew_failures(b, window))
    rep.skew.fail("psi not skew at " + format_bimod(b, BimodMap{{k, window.at(k)}}));

  for (const auto& w : closedness_failures(b, window, max_slots))
    rep.closed_direct.fail("closedness fails on " + format_form(b, single(w)));

  if (rep.skew.pass) {
    Vec dw = truncate(d_cyc(b, twoform_from_bimodmap(b, window)), t);
    for (const auto& [m, c] : dw)
      rep.closed_form.fail("d omega has " + format_form(b, Vec{{m, c}}));
  } else {
    rep.closed_form.fail("omega_psi undefined: psi is not skew");
  }

  if (!a.minimal())
    throw PreconditionError("ship_check: nondegeneracy needs a minimal algebra");
  const std::size_t n = b.size();
  rep.gram.assign(n, std::vector<Rational>(n));
  for (const auto& [k, c] : window)
    if (k.w.size() == 2 && is_zero(k.e)) rep.gram[k.w[0]][k.w[1]] = c;
  const int r = rank(rep.gram);
  if (r != static_cast<int>(n))
    rep.nondegenerate.fail("gram matrix has rank " + std::to_string(r) + " < " +
                           std::to_string(n));
  return rep;
}

VectorField solve_contraction(const Basis& b, const ConstantTwoForm& w, const Vec& beta) {
  const std::size_t n = b.size();
  const Vec omega = to_form(b, w);
  // beta as a cochain: rows (I, energy) -> coefficient of (x^I dx^j)_c
  std::map<Mono, std::vector<Rational>> rows;
  for (const auto& [m, c] : cochain_from_oneform(b, beta)) {
    Mono key{m.e, Word(m.w.begin(), m.w.end() - 1)};
    auto& row = rows[key];
    row.resize(n);
    row[m.w.back()] += c;
  }
  VectorField v = zero_field(b, 0);
  bool have_parity = false;
  for (const auto& [key, row] : rows) {
    // column a: i_{x^I d/dx_a} omega read back as a cochain
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t a = 0; a < n; ++a) {
      VectorField unit = zero_field(b, b.word_parity(key.w) ^ b.parity(a));
      unit.comp[a] = single(x_word(key.w), 1, key.e);
      for (const auto& [u, c] : cochain_from_oneform(b, contract(b, unit, omega))) {
        if (Word(u.w.begin(), u.w.end() - 1) != key.w)
          throw InvariantViolation("solve_contraction: contraction moved the x word");
        m[u.w.back()][a] += c;
      }
    }
    auto y = solve(m, row);
    if (!y)
      throw PreconditionError("solve_contraction: no solution for x word " +
                              b.format_word(key.w) + " (form degenerate?)");
    for (std::size_t a = 0; a < n; ++a) {
      if (is_zero((*y)[a])) continue;
      const int p = b.word_parity(key.w) ^ b.parity(a);
      if (have_parity && p != v.parity)
        throw PreconditionError("solve_contraction: right-hand side is not homogeneous");
      v.parity = p;
      have_parity = true;
      add_term(v.comp[a], Mono{key.e, x_word(key.w)}, (*y)[a]);
    }
  }
  if (contract(b, v, omega) != cyc(b, beta))
    throw InvariantViolation("solve_contraction: i_v omega does not reproduce beta");
  return v;
}

std::string format_field(const Basis& b, const VectorField& v) {
  std::string s;
  for (std::size_t i = 0; i < v.comp.size(); ++i) {
    if (v.comp[i].empty()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + format_form(b, v.comp[i]) + ")*d/dx:" + b[i].id;
  }
  return s.empty() ? "0" : s;
}

}  // namespace kscyc
