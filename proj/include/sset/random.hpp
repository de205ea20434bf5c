// Seeded random objects, subobjects and lift problems.
#pragma once

#include <random>

#include "sset/lifting.hpp"

namespace sset {

using Rng = std::mt19937_64;

// Iterated pushouts of boundary, horn and face inclusions along random maps,
// occasionally followed by a product with Delta[1].
SP random_object(Rng& g, int max_cells);
// Face-closure of a random set of cells, each kept with probability p.
Sub random_sub(SP X, Rng& g, double p = 0.4);
Embedded random_inclusion(Rng& g, int max_cells);

struct LiftProblem {
    SMap incl;  // A -> B
    SMap f;     // A -> X
};
// Both B and X are random objects; f is drawn from the maps A -> X.
LiftProblem random_lift_problem(Rng& g, int max_b, int max_x);

}  // namespace sset
