#pragma once

// Fixture algebras used across the test suites.  Built directly in C++ so
// that the unit tests do not depend on the JSON layer; test_cli checks that
// the shipped fixture files parse to the same structures.

#include <random>

#include "kscyc/sympeq.hpp"

namespace fx {

using namespace kscyc;

struct Fixture {
  AInftyStructure a;
  ConstantTwoForm pairing;
};

inline Truncation plain(int order) {
  Truncation t;
  t.order = order;
  return t;
}

// Unital m_2 with the unit signs m2(I,x) = x, m2(x,I) = (-1)^{|x|} x.
inline void add_unit_products(AInftyStructure& a) {
  const Basis& b = a.basis();
  const int u = *b.unit();
  for (std::size_t x = 0; x < b.size(); ++x) {
    const Letter X = static_cast<Letter>(x), U = static_cast<Letter>(u);
    a.add_op({U, X}, static_cast<int>(x), 1);
    if (static_cast<int>(x) != u) a.add_op({X, U}, static_cast<int>(x), sign_of(b[x].degree));
  }
}

// H*(S^2): u in degree 0, t in degree 2, <u,t> = 1.
inline Fixture s2(int order = 8) {
  Basis b({{"u", 0, true}, {"t", 2, false}});
  Fixture f{AInftyStructure(b, plain(order)), {}};
  add_unit_products(f.a);
  f.pairing.g = {{0, 1}, {1, 0}};
  return f;
}

// H*(CP^2): u, h, h2 in degrees 0, 2, 4, cup product, <h^a,h^b> = delta_{a+b,2}.
inline Fixture cp2(int order = 8) {
  Basis b({{"u", 0, true}, {"h", 2, false}, {"h2", 4, false}});
  Fixture f{AInftyStructure(b, plain(order)), {}};
  add_unit_products(f.a);
  f.a.add_op({1, 1}, 2, 1);
  f.pairing.g = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  return f;
}

// Energy lattice {0,1,2,3} below the cutoff 4, generated by (1,2).
inline Truncation qs2_trunc(int order = 8) {
  Truncation t;
  t.order = order;
  t.cutoff = Rational(4);
  t.levels = {0, 1, 2, 3};
  return t;
}

// Quantum S^2: S^2 plus m2(t,t) = T u.
inline Fixture qs2(int order = 8) {
  Basis b({{"u", 0, true}, {"t", 2, false}});
  Fixture f{AInftyStructure(b, qs2_trunc(order), true), {}};
  add_unit_products(f.a);
  f.a.add_op({1, 1}, 0, 1, 1, 2);
  f.pairing.g = {{0, 1}, {1, 0}};
  return f;
}

inline Fixture with_order(Fixture f, int order) {
  Truncation t = f.a.trunc();
  t.order = order;
  f.a.set_trunc(t);
  return f;
}

inline Rational small_rational(std::mt19937_64& rng, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  int c = 0;
  while (c == 0) c = d(rng);
  return c;
}

}  // namespace fx
