#include <algorithm>

#include "internal.hpp"

namespace kscyc {

namespace {

std::vector<Letter> input_letters(const Basis& b, bool reduced) {
  std::vector<Letter> l;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!(reduced && b.unit() && *b.unit() == static_cast<int>(i)))
      l.push_back(static_cast<Letter>(i));
  return l;
}

void add_product(Series& s, const Series& x, const Series& y, const Rational& c) {
  for (const auto& [ex, cx] : x)
    for (const auto& [ey, cy] : y) add_term(s, Rational(ex + ey), Rational(cx * cy * c));
}

void add_shifted(Series& s, const Series& x, const Rational& e, const Rational& c) {
  for (const auto& [ex, cx] : x) add_term(s, Rational(ex + e), Rational(cx * c));
}

}  // namespace

int cochain_parity(const Basis& b, const Cochain& f) {
  int p = -1;
  for (const auto& [m, c] : f) {
    const int q = b.word_parity(m.w);
    if (p >= 0 && q != p) throw PreconditionError("cochain is not homogeneous");
    p = q;
  }
  return p < 0 ? 0 : p;
}

Cochain bstar(const AInftyStructure& a, const Cochain& f, int max_arity, bool reduced) {
  require_uncurved(a, "bstar");
  const Basis& b = a.basis();
  const Family& m = a.ops();
  const int df = cochain_parity(b, f);
  const auto fi = index_by_word(f);
  const int n = static_cast<int>(b.size());
  Cochain out;
  if (f.empty()) return out;
  Word key;
  for (const auto& x : all_words(input_letters(b, reduced), 0, max_arity)) {
    const std::size_t k = x.size();
    for (int w = 0; w < n; ++w) {
      Series s;
      // f(..., m(...), ...)(w)
      for (std::size_t i = 0; i < k; ++i) {
        const int sg = sign_of(b.word_parity(x, 0, i));
        for (std::size_t j = 1; i + j <= k; ++j) {
          auto it = m.find(Word(x.begin() + i, x.begin() + i + j));
          if (it == m.end()) continue;
          for (const auto& [o, co] : it->second) {
            key.assign(x.begin(), x.begin() + i);
            key.push_back(o.w[0]);
            key.insert(key.end(), x.begin() + i + j, x.end());
            key.push_back(static_cast<Letter>(w));
            auto ft = fi.find(key);
            if (ft != fi.end()) add_shifted(s, ft->second, o.e, Rational(co * sg));
          }
        }
      }
      // d*(L, f(I), R)(w) with x = L I R
      for (std::size_t p = 0; p <= k; ++p) {
        const Word L(x.begin(), x.begin() + p);
        const int sgL = sign_of(df * (1 + b.word_parity(L)));
        for (std::size_t q = p; q <= k; ++q) {
          const Word R(x.begin() + q, x.end());
          key.assign(x.begin() + p, x.begin() + q);
          key.push_back(0);
          for (int j = 0; j < n; ++j) {
            key.back() = static_cast<Letter>(j);
            auto ft = fi.find(key);
            if (ft == fi.end()) continue;
            Series ds = dual_action(a, L, j, R, w);
            if (ds.empty()) continue;
            const int sg = sgL * sign_of(b.parity(w) * b.parity(j));
            add_product(s, ft->second, ds, Rational(sg));
          }
        }
      }
      for (const auto& [e, c] : s) {
        if (!a.trunc().below_cutoff(e)) continue;
        Word kw = x;
        kw.push_back(static_cast<Letter>(w));
        add_term(out, Mono{e, std::move(kw)}, c);
      }
    }
  }
  return out;
}

Cochain Bstar(const AInftyStructure& a, const Cochain& f, int max_arity, bool reduced) {
  const Basis& b = a.basis();
  auto u = b.unit();
  if (!u) throw PreconditionError("Bstar: algebra has no unit");
  const int df = cochain_parity(b, f);
  Cochain out;
  for (const auto& [m, c] : f) {
    if (m.w.back() != *u) continue;
    const Word x(m.w.begin(), m.w.end() - 1);  // f(x)(I), |x| = n + 1
    const std::size_t len = x.size();
    if (len == 0 || static_cast<int>(len) - 1 > max_arity) continue;
    for (std::size_t i = 0; i < len; ++i) {
      // cc = x[len-i..] x[..len-i], so that cc[i..] cc[..i] = x
      Word cc(x.begin() + (len - i), x.end());
      cc.insert(cc.end(), x.begin(), x.begin() + (len - i));
      if (reduced && std::find(cc.begin(), cc.end() - 1, static_cast<Letter>(*u)) != cc.end() - 1)
        continue;
      const int e = swap_exponent(b.word_parity(cc, 0, i), b.word_parity(cc, i, len)) + df;
      add_term(out, Mono{m.e, std::move(cc)}, Rational(c * sign_of(e)));
    }
  }
  return out;
}

Report validate_negative_cocycle(const AInftyStructure& a, const NegativeCyclicCochain& phi) {
  const Basis& b = a.basis();
  const int N = a.trunc().order;
  Report rep;
  for (std::size_t i = 0; i < phi.cols.size(); ++i) {
    Cochain lhs = bstar(a, phi.cols[i], N - 2, phi.reduced);
    Cochain rhs = i + 1 < phi.cols.size() ? Bstar(a, phi.cols[i + 1], N - 2, phi.reduced)
                                          : Cochain{};
    Cochain d = minus(lhs, rhs);
    if (!d.empty())
      rep.fail("column " + std::to_string(i) + ": b*phi_i - B*phi_{i+1} = " +
               format_cochain(b, d));
  }
  return rep;
}

Series trace(const AInftyStructure& a, const Cochain& phi0, int c) {
  auto u = a.basis().unit();
  if (!u) throw PreconditionError("trace: algebra has no unit");
  const int sg = sign_of(cochain_parity(a.basis(), phi0));
  Series s;
  for (const auto& [m, v] : phi0)
    if (m.w.size() == 2 && m.w[0] == c && m.w[1] == *u) add_term(s, m.e, Rational(v * sg));
  return s;
}

Report trace_compare(const AInftyStructure& a, const Cochain& phi0) {
  const Basis& b = a.basis();
  if (!b.unit()) throw PreconditionError("trace_compare: algebra has no unit");
  const BimodMap t = tilde(b, phi0);
  const int n = static_cast<int>(b.size());
  std::vector<Series> tr(n);
  for (int c = 0; c < n; ++c) tr[c] = trace(a, phi0, c);
  Report rep;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      Series lhs, rhs;
      auto it = a.ops().find(Word{static_cast<Letter>(x), static_cast<Letter>(y)});
      if (it != a.ops().end())
        for (const auto& [o, co] : it->second) add_shifted(lhs, tr[o.w[0]], o.e, co);
      for (const auto& [k, v] : t)
        if (k.pos == 0 && k.w.size() == 2 && k.w[0] == x && k.w[1] == y) add_term(rhs, k.e, v);
      if (lhs != rhs)
        rep.fail("Tr(m2(" + b[x].id + "," + b[y].id + ")) != tilde(" + b[x].id + ")(" +
                 b[y].id + ")");
    }
  return rep;
}

std::vector<Word> cochain_keys(const Basis& b, int dp, int max_arity, bool reduced) {
  std::vector<Word> keys;
  for (const auto& x : all_words(input_letters(b, reduced), 0, max_arity))
    for (std::size_t j = 0; j < b.size(); ++j) {
      Word k = x;
      k.push_back(static_cast<Letter>(j));
      if (b.word_parity(k) == dp) keys.push_back(std::move(k));
    }
  return keys;
}

Cochain random_cochain(const Basis& b, int dp, int max_arity, double density,
                       std::mt19937_64& rng, bool reduced, int coeff_bound) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> val(-coeff_bound, coeff_bound);
  Cochain f;
  for (auto& k : cochain_keys(b, dp, max_arity, reduced))
    if (coin(rng) < density) add_term(f, Mono{0, std::move(k)}, Rational(val(rng)));
  return f;
}

std::string format_cochain(const Basis& b, const Cochain& f) {
  if (f.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : f) {
    if (!first) s += " + ";
    first = false;
    s += format_rational(c);
    if (!is_zero(m.e)) s += "*T^" + format_rational(m.e);
    s += "*f" + b.format_word(Word(m.w.begin(), m.w.end() - 1)) + "(" + b[m.w.back()].id + ")";
  }
  return s;
}

}  // namespace kscyc
