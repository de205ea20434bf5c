// Standard simplices, their subcomplexes, and nerves of finite categories.
#pragma once

#include <set>

#include "sset/core.hpp"

namespace sset {

// Delta[n]; the k-cells are (k+1)-subsets of {0..n}, named by their digits.
SP standard_simplex(int n);
// Index of the cell of Delta[n] with the given increasing vertex list.
int simplex_cell(const SSet& delta, const std::vector<int>& verts);
// Formal simplex of Delta[n] on a weakly increasing vertex sequence.
Formal simplex_formal(const SSet& delta, const std::vector<int>& seq);

// Subobject of Delta[n] generated by simplices with the given vertex sets.
Sub simplex_sub(SP delta, const std::vector<std::vector<int>>& tuples);

Embedded boundary(int n);
Embedded horn(int n, int i);
Embedded generalized_horn(int n, const std::set<int>& S);
Embedded spine(int n);
Embedded face_sub(int n, int j);  // the d_j face of Delta[n]

// Map Delta[m] -> X picking an m-simplex.
SMap simplex_map(SP X, const Formal& s);
SMap edge_map(SP X, const Formal& e);

SMap constant_map(SP A, SP X, int v);

// A finite category with explicit arrows, identities included.
struct FiniteCategory {
    struct Arrow {
        int src, tgt;
        std::string name;
        bool id = false;
    };
    std::vector<std::string> objects;
    std::vector<Arrow> arrows;
    std::vector<std::vector<int>> comp;  // comp[g][f] = g o f, or -1 when not composable
    bool thin = false;                   // name nerve cells by vertex sequences

    int id(int x) const;
    std::vector<int> hom(int x, int y) const;
    bool is_iso(int f) const;
    // Associativity, identity laws and totality on composable pairs.
    std::vector<std::string> check() const;
};

// Category from arrow list (without identities) and a partial composition table
// given as (g, f) -> h over those names; identity composites are filled in.
FiniteCategory make_category(const std::vector<std::string>& objects,
                             const std::vector<FiniteCategory::Arrow>& arrows,
                             const std::map<std::pair<std::string, std::string>, std::string>& comp);
// Preorder category: leq[a][b] means a unique arrow a -> b.
FiniteCategory preorder(const std::vector<std::string>& objects, const std::vector<std::vector<bool>>& leq);
FiniteCategory poset_n(int n);
FiniteCategory free_iso();  // the free-living isomorphism on objects 0, 1

SP nerve(const FiniteCategory& C, int D);

}  // namespace sset
