// Homotopy-category presentations, bounded word closure, and the
// pre-isomorphism semi-decision pair (inverting tilings / functors).
#pragma once

#include "sset/anodyne.hpp"

namespace sset {

struct CategoryPresentation {
    struct Gen {
        std::string name;
        int src = 0, tgt = 0;
    };
    // g o f = h for a 2-cell with d2 = f, d0 = g, d1 = h; -1 stands for an identity.
    struct Rel {
        int g = -1, f = -1, h = -1;
        std::string cell;
    };
    std::vector<std::string> objects;
    std::vector<Gen> gens;  // indexed like the non-degenerate edges
    std::vector<Rel> rels;
};

CategoryPresentation presentation(const SSet& X);

using GenWord = std::vector<int>;  // generators in the order they are traversed

struct HomClasses {
    std::vector<std::vector<GenWord>> classes;  // each sorted, shortest first
    bool complete = false;
};
// Paths x -> y of length <= depth modulo rewriting by the relations in both directions.
HomClasses bounded_hom(const CategoryPresentation& p, int x, int y, int depth);
std::string word_name(const CategoryPresentation& p, const GenWord& w);

enum class PreIso { Certified, Refuted, Exhausted };
std::string preiso_name(PreIso v);

struct PreIsoVerdict {
    PreIso verdict = PreIso::Exhausted;
    std::string tiling;        // certifying inverting tiling
    std::optional<SMap> map;   // tiling -> X, sending e_T to the edge
    int tilings_tried = 0;
};
PreIsoVerdict preiso_search(SP X, const Formal& e, int cell_bound);

class NotAFunctor : public Error {
  public:
    using Error::Error;
};

// True iff F is a functor on presentation(X) and F(e) is not an isomorphism.
// Throws NotAFunctor when F breaks endpoints or a relation.
bool noniso_functor_check(const SSet& X, const FunctorData& F, const Formal& e);

// Searches functors X -> C (in assignment order) sending e to a non-isomorphism.
std::optional<FunctorData> find_refuting_functor(const SSet& X, const FiniteCategory& C, const Formal& e,
                                                 size_t cap = 1000000);

std::optional<EdgeWitness> almost_edge_search(SP X, const Formal& e, const SMap& iota, int size_bound);

}  // namespace sset
