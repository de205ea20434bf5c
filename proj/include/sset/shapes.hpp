// Named objects: J, K, augmented and pinched horns, triangulations, tilings,
// special horns, isoplexes, the two-cycle and the example T.
#pragma once

#include <array>

#include "sset/colimit.hpp"
#include "sset/lifting.hpp"

namespace sset {

SP build_J(int D);

struct KShape {
    SP obj;
    int a = 0, b = 0;           // kappa: a -> b
    Formal kappa, f, g;         // f, g: b -> a
    Formal kf, gk;              // 2-cells witnessing kappa f = id_b and g kappa = id_a
    SMap edge() const { return edge_map(obj, kappa); }
};
KShape build_K();

struct AugHorn {
    int n = 0, j = 0, i = 0;
    std::set<int> S;      // faces kept; a horn when |S| = n
    Glued glued;          // Delta[n] with X along i -> i+1
    Embedded dom;         // Lambda^S[n]^X inside the glued object
    SMap incl() const { return dom.incl; }
};
// Lambda^j[n]^X_{i->i+1} into Delta[n]^X_{i->i+1}; x: Delta[1] -> X.
AugHorn augmented_horn(int n, int j, int i, const SMap& x, const std::string& tag = "X");
AugHorn pinched_horn(int n, int j, int i);
AugHorn generalized_augmented_horn(int n, const std::set<int>& S, int i, const SMap& x,
                                   const std::string& tag = "X");
SMap point_edge();  // Delta[1] -> Delta[0]

// A triangulated polygon whose vertex labels make every edge point upward.
struct Triangulation {
    int n = 0;                              // labels 0..n
    std::vector<int> cycle;                 // labels around the polygon
    std::vector<std::array<int, 3>> tris;   // sorted label triples
    std::pair<int, int> outer(int k) const;  // k-th boundary edge, lower label first
    int outer_count() const { return static_cast<int>(cycle.size()); }
};
Embedded realize_triangulation(const Triangulation& t);
std::vector<Triangulation> enumerate_triangulations(int n);
// Every labelled polygon triangulation, before identification up to isomorphism.
std::vector<Triangulation> labelled_triangulations(int n);

struct AugTriangulation {
    Triangulation base;
    int dist = 0;  // boundary edge without a copy of I
    SP obj;
    Formal edge;   // the distinguished edge in obj
    int size() const { return base.outer_count() - 1; }
    SMap edge_map() const { return sset::edge_map(obj, edge); }
};
AugTriangulation realize_aug(const Triangulation& t, int dist, const SMap& iota);
// Sizes 1..max_size, deduplicated up to isomorphism fixing the distinguished edge.
std::vector<AugTriangulation> aug_triangulations(const SMap& iota, int max_size, bool dedup = true);
// U on the 0->1 face and V on the 1->2 face of a 2-simplex; distinguished 0->2.
AugTriangulation two_out_of_three_glue(const AugTriangulation& U, const AugTriangulation& V, const SMap& iota);
// U and V on the two faces of a 2-simplex other than d_missing, in the order
// 0->1, 1->2, 0->2; the distinguished edge is the d_missing face.
AugTriangulation glue_on_triangle(const AugTriangulation& U, const AugTriangulation& V, int missing,
                                  const SMap& iota);

// Composition tilings as move sequences on a spine: 'c' contracts a->b->c at
// position p into a->c, 'e' expands the edge at position p into two.
struct TilingDesc {
    int r = 2;
    std::vector<std::pair<char, int>> moves;
    std::string name() const;
};

struct Tiling {
    TilingDesc desc;
    SP obj;
    SMap left, right;  // spine inclusions Sp[r] and Sp[s]
    int s = 1;
};
Tiling composition_tiling(const TilingDesc& d);
Tiling composition_tile(int n, int i);  // C_i[n, n+1] as a single contraction

struct PinchedTiling {
    TilingDesc desc;
    SP obj;
    Formal first, last;  // the 0->1 and (r-1)->r edges of the left spine
    int cells() const { return obj->total(); }
};
PinchedTiling pinched_tiling(const Tiling& c);

struct InvertingTiling {
    std::string name;
    SP obj;
    Formal e;
    int cells() const { return obj->total(); }
    SMap edge() const { return edge_map(obj, e); }
};
InvertingTiling inverting_tiling(const PinchedTiling& left, const PinchedTiling& right);

// Pinched tilings with at most max_cells cells, one per isomorphism class.
std::vector<PinchedTiling> enumerate_pinched_tilings(int max_cells);
// Ordered by cell count, then name.
std::vector<InvertingTiling> enumerate_inverting_tilings(int max_cells);

std::vector<NamedInclusion> enumerate_special_horns(int max_tiling_cells, int max_n, bool outer_only = false);

struct Isoplex {
    int n = 0, i = 0, D = 0;
    SP obj;
    std::vector<Embedded> faces;
};
Isoplex isoplex(int n, int i, int D);
Embedded iso_horn(int n, int i, int D);

SP build_two_cycle_I();
std::vector<NamedInclusion> build_A_I_family(SP I, int max_n);

struct FunctorData {
    FiniteCategory target;
    std::map<std::string, int> objects;  // vertex name -> object
    std::map<std::string, int> arrows;   // edge name -> arrow
};
// Full subcategory of finite sets on the given sets; arrows are all functions.
FiniteCategory finset_category(const std::vector<std::string>& names,
                               const std::vector<std::vector<std::string>>& sets);

struct ExampleT {
    SP obj;
    Formal e;  // x -> y
    FunctorData functor;
};
ExampleT build_example_T();

std::vector<NamedInclusion> horn_family(int max_n, bool inner_only);
std::vector<NamedInclusion> aug_horn_family(const std::string& X, int max_n);
std::vector<NamedInclusion> iso_horn_family(int max_n, int D);

struct FamilyBounds {
    int max_n = 3;
    int tiling_cells = 7;
    int D = 4;
};
// horns, inner-horns, special-horns, outer-special-horns, aug-horns:X,
// J-aug-horns (X = J@D), iso-horns, A_I, or one catalog inclusion.
std::vector<NamedInclusion> named_family(const std::string& name, const FamilyBounds& b);

// Catalog objects by canonical name.
struct CatalogItem {
    SP obj;                     // object, or codomain of an inclusion
    std::optional<SMap> incl;   // when the name denotes an inclusion
    std::map<std::string, Formal> edges;
};
CatalogItem resolve(const std::string& name);
// Edge into a named attaching object: "K", "J@D", "*", "I2", "Delta(1)".
SMap attachment(const std::string& name);

}  // namespace sset
