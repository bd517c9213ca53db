#pragma once

#include "kscyc/signcore.hpp"

namespace kscyc {

// Hochschild cochain f_n : A[1]^{(x)n} -> A*.  Key word = the n inputs
// followed by the index j of the probe, i.e. the entry f(e_I)(e_j).
using Cochain = Vec;

// Entry psi(L, v, R)(w) of a bimodule map A -> A*.  The word is L v R w and
// pos = |L| locates the module slot v.
struct BKey {
  Rational e;
  Word w;
  int pos = 0;
};

inline bool operator<(const BKey& a, const BKey& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.pos != b.pos) return a.pos < b.pos;
  return a.e < b.e;
}
inline bool operator==(const BKey& a, const BKey& b) {
  return a.w == b.w && a.pos == b.pos && a.e == b.e;
}

using BimodMap = Sparse<BKey>;

}  // namespace kscyc
