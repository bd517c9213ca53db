#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "kscyc/barcx.hpp"
#include "kscyc/stores.hpp"

namespace kscyc {

// Hochschild chain v | x_1 ... x_k: word[0] is the module slot.
using Chain = Vec;

Chain b_chain(const AInftyStructure& a, const Chain& c);

// d*(L, e_j^*, R)(e_w) for the dual bimodule A*, as an energy series.
Series dual_action(const AInftyStructure& a, const Word& L, int j, const Word& R, int w);

// |f| for a homogeneous cochain (0 for the zero cochain).
int cochain_parity(const Basis& b, const Cochain& f);

// b* f and B* f on all input words of arity <= max_arity.  In reduced mode
// inputs never contain the unit.
Cochain bstar(const AInftyStructure& a, const Cochain& f, int max_arity, bool reduced = true);
Cochain Bstar(const AInftyStructure& a, const Cochain& f, int max_arity, bool reduced = true);

// <f, c> = sum c(v|x) f(x)(v).
Series pairing(const Cochain& f, const Chain& c);

struct NegativeCyclicCochain {
  std::vector<Cochain> cols;  // phi_0, ..., phi_M
  bool reduced = true;
};

// b* phi_i = B* phi_{i+1} (i < M) and b* phi_M = 0, on inputs of arity
// <= N - 2 where N is the truncation order of a.
Report validate_negative_cocycle(const AInftyStructure& a, const NegativeCyclicCochain& phi);

// phi~(L,v,R)(w) = phi(L v R)(w) - (-1)^{(|L|'+|v|')(|R|'+|w|')} phi(R w L)(v).
BimodMap tilde(const Basis& b, const Cochain& phi0);

// psi o d-hat - d* o psi-hat on all slots (L, v, R, w) with |L|+|R|+2 <= max_slots.
BimodMap bimodule_defect(const AInftyStructure& a, const BimodMap& psi, int max_slots);

// Tr(c) = (B* phi0)_0(c) = (-1)^{|phi0|} phi0(c)(I).
Series trace(const AInftyStructure& a, const Cochain& phi0, int c);
// Tr(m2(a,b)) = phi~(a)(b) for all basis pairs.
Report trace_compare(const AInftyStructure& a, const Cochain& phi0);

// Keys (inputs + probe) of all cochains of parity dp and arity <= max_arity.
std::vector<Word> cochain_keys(const Basis& b, int dp, int max_arity, bool reduced);

Cochain random_cochain(const Basis& b, int dp, int max_arity, double density,
                       std::mt19937_64& rng, bool reduced = true, int coeff_bound = 3);

// Negative cyclic cocycles phi_0..phi_M of parity dp with arities <= N-1,
// as random integer combinations of a nullspace basis of the truncated
// bicomplex equations.  `nullity` receives the dimension of the solution space.
std::vector<NegativeCyclicCochain> generate_cocycles(const AInftyStructure& a, int N, int M,
                                                     int dp, int count, std::uint64_t seed,
                                                     bool reduced = true,
                                                     int* nullity = nullptr);

std::string format_cochain(const Basis& b, const Cochain& f);
std::string format_bimod(const Basis& b, const BimodMap& psi);

}  // namespace kscyc
