#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace kscyc;

namespace {

std::vector<GradedSymbol> symbols(const Basis& b, const Word& w, std::size_t from, std::size_t to) {
  std::vector<GradedSymbol> s;
  for (std::size_t i = from; i < to; ++i) s.push_back({b[w[i]].shifted(), 0});
  return s;
}

// Oracle for m-hat: the operation (one odd symbol) moves past the prefix.
Vec hat_oracle(const AInftyStructure& a, const Word& w) {
  const Basis& b = a.basis();
  const std::vector<GradedSymbol> op{{1, 0}};
  Vec out;
  for (std::size_t i = 0; i <= w.size(); ++i)
    for (std::size_t j = i; j <= w.size(); ++j) {
      auto it = a.ops().find(Word(w.begin() + i, w.begin() + j));
      if (it == a.ops().end()) continue;
      const int s = koszul_sign(op, symbols(b, w, 0, i));
      for (const auto& [m, c] : it->second) {
        Word r(w.begin(), w.begin() + i);
        r.push_back(m.w[0]);
        r.insert(r.end(), w.begin() + j, w.end());
        add_term(out, Mono{m.e, r}, Rational(c * s));
      }
    }
  return out;
}

// Oracle for f-hat of an even family: sum over block decompositions.
void blocks(const Cohomomorphism& f, const Word& w, std::size_t from, Word acc, Rational c,
            Vec& out) {
  if (from == w.size()) {
    add_term(out, Mono{0, acc}, c);
    return;
  }
  for (std::size_t to = from + 1; to <= w.size(); ++to) {
    auto it = f.comp.find(Word(w.begin() + from, w.begin() + to));
    if (it == f.comp.end()) continue;
    for (const auto& [m, x] : it->second) {
      Word next = acc;
      next.push_back(m.w[0]);
      blocks(f, w, to, next, Rational(c * x), out);
    }
  }
}

Cohomomorphism random_cohom(std::mt19937_64& rng, const Basis& b, int max_arity) {
  Cohomomorphism f = identity_cohomomorphism(b);
  std::vector<Letter> l(b.size());
  for (std::size_t i = 0; i < l.size(); ++i) l[i] = static_cast<Letter>(i);
  for (auto& w : all_words(l, 2, max_arity))
    for (std::size_t o = 0; o < b.size(); ++o)
      if (b.word_parity(w) == b.parity(o) && rng() % 3 == 0)
        add_term(f.comp[w], Mono{0, {static_cast<Letter>(o)}}, fx::small_rational(rng));
  return f;
}

// u in degree 0 and e in degree 1, unital, e*e = 0.
AInftyStructure dual_numbers(int order) {
  Basis b({{"u", 0, true}, {"e", 1, false}});
  AInftyStructure a(b, fx::plain(order));
  fx::add_unit_products(a);
  return a;
}

}  // namespace

TEST_CASE("hat extension on small words") {
  auto f = fx::s2(6);
  const auto& a = f.a;
  // unit signs: m2(t,u) = (-1)^{deg t} t = t
  CHECK(hat_extend(a, 2, single({1, 0})) == single({1}));
  CHECK(hat_extend(a, 2, single({0, 0})) == single({0}));
  // windows (u,t) and (t,u) of [u,t,u]; the second passes an odd u
  CHECK(dhat(a, single({0, 1, 0})) == minus(single({1, 0}), single({0, 1})));
  // [t,u,t]: the two windows cancel
  CHECK(dhat(a, single({1, 0, 1})).empty());
  CHECK(hat_extend(a, 3, single({0, 1, 0})).empty());
}

TEST_CASE("hat extension agrees with the block-move oracle") {
  for (auto f : {fx::s2(6), fx::cp2(6)}) {
    AInftyStructure a = f.a;
    a.relax_degree_check();
    a.add_op({1, 1, 1, 1}, 1, 3);  // extra arity-4 term, parity-valid
    std::vector<Letter> l(a.basis().size());
    for (std::size_t i = 0; i < l.size(); ++i) l[i] = static_cast<Letter>(i);
    for (auto& w : all_words(l, 1, 5)) CHECK(dhat(a, single(w)) == hat_oracle(a, w));
  }
}

TEST_CASE("A-infinity defect") {
  CHECK(ainfty_defect(fx::s2(8).a).empty());
  CHECK(ainfty_defect(fx::cp2(8).a).empty());
  Basis b({{"u", 0, true}, {"t", 2, false}});
  CHECK(ainfty_defect(AInftyStructure(b, fx::plain(6))).empty());

  // m2(t,t) = t keeps k[t]/(t^2 - t) associative: still no defect
  auto c = fx::s2(6);
  c.a.relax_degree_check();
  c.a.add_op({1, 1}, 1, 1);
  CHECK(ainfty_defect(c.a).empty());

  // m2(u,t) = 2t breaks associativity at [u,u,t]
  auto d = fx::s2(6);
  d.a.add_op({0, 1}, 1, 1);
  const auto defect = ainfty_defect(d.a);
  CHECK(defect.count(Word{0, 0, 1}) == 1);
}

TEST_CASE("add_op validation") {
  auto f = fx::s2(6);
  CHECK_THROWS_AS(f.a.add_op({1, 1}, 1, 1), InputError);  // degree mismatch
  CHECK_THROWS_AS(f.a.add_op({0, 7}, 1, 1), InputError);  // unknown index
  CHECK_THROWS_AS(f.a.add_op({0, 1}, 2, 1), InputError);  // output out of range
  CHECK_THROWS_AS(f.a.add_op({}, 1, 1), InputError);  // m0 needs a filtered structure
}

TEST_CASE("unit check") {
  CHECK(unit_check(fx::s2().a).pass);
  CHECK(unit_check(fx::cp2().a).pass);
  auto a = dual_numbers(6);
  CHECK(unit_check(a).pass);
  a.add_op({1, 0, 1}, 1, 1);  // m3(e, I, e) = e
  const Report r = unit_check(a);
  CHECK_FALSE(r.pass);
  CHECK_FALSE(r.witnesses.empty());

  Basis b({{"t", 2, false}});
  CHECK_THROWS_AS(unit_check(AInftyStructure(b, fx::plain(4))), PreconditionError);
}

TEST_CASE("cohomomorphism extension") {
  const Basis b = fx::s2().a.basis();
  const Truncation t = fx::plain(6);
  const Cohomomorphism id = identity_cohomomorphism(b);
  CHECK(cohom_extend(b, id, single({1, 0, 1}), t) == single({1, 0, 1}));

  // only f1, f2 on [a,b]: [f1 a, f1 b] + [f2(a,b)]
  Cohomomorphism f = id;
  add_term(f.comp[{0, 0}], Mono{0, {1}}, 3);
  CHECK(cohom_extend(b, f, single({0, 0}), t) == plus(single({0, 0}), single({1}, 3)));

  std::mt19937_64 rng(22);
  for (int k = 0; k < 10; ++k) {
    const Cohomomorphism g = random_cohom(rng, b, 3);
    for (auto& w : all_words({0, 1}, 1, 5)) {
      Vec oracle;
      blocks(g, w, 0, {}, 1, oracle);
      CHECK(cohom_extend(b, g, single(w), t) == oracle);
    }
    auto ext = [&](const Vec& x) { return cohom_extend(b, g, x, t); };
    CHECK(cohomomorphism_property_failures(b, ext, t).empty());
  }
}

TEST_CASE("coalgebra properties detect the wrong kind of map") {
  auto f = fx::cp2(6);
  const Basis& b = f.a.basis();
  const Truncation& t = f.a.trunc();
  auto d = [&](const Vec& x) { return dhat(f.a, x); };
  CHECK(coderivation_property_failures(b, 1, d, t).empty());
  CHECK_FALSE(cohomomorphism_property_failures(b, d, t).empty());

  Cohomomorphism g = identity_cohomomorphism(b);
  add_term(g.comp[{1, 1}], Mono{0, {2}}, 1);
  auto ext = [&](const Vec& x) { return cohom_extend(b, g, x, t); };
  CHECK_FALSE(coderivation_property_failures(b, 0, ext, t).empty());
}

TEST_CASE("homomorphism defect") {
  auto f = fx::s2(6);
  const Basis& b = f.a.basis();
  CHECK(homomorphism_defect(identity_cohomomorphism(b), f.a, f.a).empty());
  Cohomomorphism swap;
  add_term(swap.comp[{0}], Mono{0, {1}}, 1);
  add_term(swap.comp[{1}], Mono{0, {0}}, 1);
  CHECK_FALSE(homomorphism_defect(swap, f.a, f.a).empty());
}

TEST_CASE("composition") {
  std::mt19937_64 rng(23);
  const Basis b = fx::cp2().a.basis();
  const Truncation t = fx::plain(5);
  const Cohomomorphism id = identity_cohomomorphism(b);
  for (int k = 0; k < 5; ++k) {
    const Cohomomorphism f = random_cohom(rng, b, 3), g = random_cohom(rng, b, 3);
    CHECK(compose(b, id, f, t).comp == compose(b, f, id, t).comp);
    const Cohomomorphism h = compose(b, f, g, t);
    // (f o g)_2 = f1 g2 + f2 (g1 (x) g1); here f1 = g1 = id
    for (auto& w : all_words({0, 1, 2}, 2, 2)) {
      Vec expect;
      if (auto it = g.comp.find(w); it != g.comp.end()) add_scaled(expect, it->second, 1);
      if (auto it = f.comp.find(w); it != f.comp.end()) add_scaled(expect, it->second, 1);
      const auto it = h.comp.find(w);
      CHECK((it == h.comp.end() ? Vec{} : it->second) == expect);
    }
    // f-hat g-hat = (f o g)-hat
    for (auto& w : all_words({0, 1, 2}, 1, 4))
      CHECK(cohom_extend(b, f, cohom_extend(b, g, single(w), t), t) ==
            cohom_extend(b, h, single(w), t));
  }
}

TEST_CASE("exponential of an even coderivation") {
  const Basis b = dual_numbers(6).basis();  // u odd, e even after the shift
  const Truncation t = fx::plain(6);
  Family v, nv;
  add_term(v[{0, 1}], Mono{0, {0}}, 2);
  add_term(v[{1, 1, 0}], Mono{0, {0}}, -1);
  for (const auto& [w, x] : v) nv[w] = scaled(x, -1);
  for (auto& w : all_words({0, 1}, 1, 5)) {
    const Vec x = single(w);
    CHECK(exp_coderivation_apply(b, nv, exp_coderivation_apply(b, v, x, t), t) == x);
  }
  // pi e^q on [e,e,e] = q3 + (q2(q2 (x) 1) + q2(1 (x) q2)) / 2 = 5e + e
  Family q;
  add_term(q[{1, 1}], Mono{0, {1}}, 1);
  add_term(q[{1, 1, 1}], Mono{0, {1}}, 5);
  Vec got;
  for (const auto& [m, c] : exp_coderivation_apply(b, q, single({1, 1, 1}), t))
    if (m.w.size() == 1) add_term(got, m, c);
  CHECK(got == single({1}, 6));
}
