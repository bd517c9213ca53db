#include "internal.hpp"
#include "kscyc/linalg.hpp"

namespace kscyc {

// Unknowns are the entries of phi_0..phi_M on the cochain keys of parity dp
// (b* and B* both flip parity, so all columns share it).  Equation rows are
// the entries of b* phi_i - B* phi_{i+1} at arity <= N - 2.
std::vector<NegativeCyclicCochain> generate_cocycles(const AInftyStructure& a, int N, int M,
                                                     int dp, int count, std::uint64_t seed,
                                                     bool reduced, int* nullity) {
  const Basis& b = a.basis();
  if (!b.unit()) throw PreconditionError("generate_cocycles: algebra has no unit");
  const auto keys = cochain_keys(b, dp, N - 1, reduced);
  const int nk = static_cast<int>(keys.size());
  const int ncols = (M + 1) * nk;

  std::map<std::pair<int, Mono>, SparseRow> rows;
  for (int kk = 0; kk < nk; ++kk) {
    const Cochain unit = single(keys[kk]);
    const Cochain bs = bstar(a, unit, N - 2, reduced);
    const Cochain Bs = Bstar(a, unit, N - 2, reduced);
    for (int i = 0; i <= M; ++i) {
      for (const auto& [m, c] : bs) rows[{i, m}][i * nk + kk] += c;
      if (i > 0)
        for (const auto& [m, c] : Bs) rows[{i - 1, m}][i * nk + kk] -= c;
    }
  }
  Eliminator elim(ncols);
  for (auto& [key, row] : rows) elim.add_row(std::move(row));
  const auto ns = elim.nullspace();
  if (nullity) *nullity = static_cast<int>(ns.size());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-2, 2);
  std::vector<NegativeCyclicCochain> out;
  for (int t = 0; t < count; ++t) {
    SparseRow x;
    for (const auto& v : ns) {
      const int c = coef(rng);
      if (c == 0) continue;
      for (const auto& [col, q] : v) x[col] += c * q;
    }
    NegativeCyclicCochain phi;
    phi.reduced = reduced;
    phi.cols.resize(M + 1);
    for (const auto& [col, q] : x)
      if (!is_zero(q)) add_term(phi.cols[col / nk], Mono{0, keys[col % nk]}, q);
    out.push_back(std::move(phi));
  }
  return out;
}

}  // namespace kscyc
