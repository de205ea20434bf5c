// Products, pushouts along inclusions, skeleta and pointwise cylinders.
#pragma once

#include "sset/build.hpp"

namespace sset {

struct Product {
    SP X, Y, obj;
    SMap p1, p2;
    std::vector<std::vector<std::pair<Formal, Formal>>> comp;  // components of each cell
    std::map<std::pair<Formal, Formal>, int> index;            // non-degenerate pair -> cell index

    // The simplex (x, y) for equal-dimensional x and y; empty above truncation.
    std::optional<Formal> pair(const Formal& x, const Formal& y) const;
};

Product product(SP X, SP Y, int D);
// Cells of the product over a subobject of each factor.
Sub product_sub(const Product& P, const Sub& a, const Sub& b);

struct Pushout {
    SP X, B, obj;
    SMap inX, inB;
    // For every cell of obj: true when it came from B (fresh), with its index there.
    std::vector<std::vector<std::pair<bool, int>>> origin;

    SMap induced(const SMap& hX, const SMap& hB) const;
};

// Pushout of X <- A -> B with g: A -> B an inclusion. X's names are kept;
// fresh cells are named "tag:name" when a tag is given, with primes on clashes.
Pushout pushout(const SMap& f, const SMap& g, const std::string& tag = "");

struct Glued {
    SP obj;
    SMap inA, inX;
};
// A with X glued along the edge e via x: Delta[1] -> X.
// The map obj -> target determined by legs (Y_k -> obj, Y_k -> target) that
// jointly cover every non-degenerate cell of obj.
SMap induced_cover(SP obj, SP target, const std::vector<std::pair<SMap, SMap>>& legs);

Glued glue_edge(SP A, const Formal& e, const SMap& x, const std::string& tag = "");

Embedded skeleton(SP X, int k);
Embedded zero_skeleton(SP X);

struct Cylinder {
    SP X, I, obj;
    SMap iota;     // Delta[1] -> I
    Product full;  // Delta[1] x X
    Product side;  // I x sk_0 X
    Embedded sk0;
    Pushout po;

    // Image of the Delta[1] x X simplex (t, x), empty above truncation.
    std::optional<Formal> cell(const Formal& t, const Formal& x) const;
    Sub end(int eps) const;          // {eps} (.) X
    Sub over(const Sub& a) const;    // I (.) A for A a subobject of X
    SMap end_map(int eps) const;     // X -> cylinder
    SMap chi(int v) const;           // the copy of I over vertex v
    SMap projection() const;         // cylinder -> X
};

Cylinder pointwise_cylinder(const SMap& iota, SP X);

}  // namespace sset
