#pragma once

#include "kscyc/hochcyc.hpp"

namespace kscyc {

// Hochschild operators here assume m0 = 0.
void require_uncurved(const AInftyStructure& a, const char* what);

}  // namespace kscyc
