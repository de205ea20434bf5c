// Isomorphism search between finite simplicial sets.
#pragma once

#include "sset/core.hpp"

namespace sset {

// Partial assignment of non-degenerate cells of X to non-degenerate cells of Y.
using Partial = std::vector<std::vector<int>>;  // -1 = free

// Returns an isomorphism X -> Y extending `fixed`, if one exists.
std::optional<SMap> iso_check(SP X, SP Y, const Partial& fixed = {});
// Isomorphism Y -> Z commuting with the inclusions a: A -> Y and b: A -> Z.
std::optional<SMap> iso_under(const SMap& a, const SMap& b);

}  // namespace sset
