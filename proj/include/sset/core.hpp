// Finite, dimension-truncated simplicial sets presented by their
// non-degenerate cells, with formal (possibly degenerate) faces.
#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace sset {

// Admissible degeneracy word s_{w0} s_{w1} ... with w0 > w1 > ...
// The entries are exactly the positions p of the represented simplex
// whose vertices p and p+1 coincide.
using Word = std::vector<int>;

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Rewrites a raw word (leftmost operator applied last) into admissible form
// using s_i s_j = s_{j+1} s_i for i <= j.
Word normalize_word(Word raw);
bool is_admissible(const Word& w);

// Surjection [m] -> [m - |w|] encoded by an admissible word, and back.
std::vector<int> word_to_surjection(const Word& w, int m);
Word surjection_to_word(const std::vector<int>& sigma);

struct Formal {
    int bdim = 0;  // dimension of the non-degenerate base cell
    int idx = 0;   // index of the base cell within its dimension
    Word word;     // admissible degeneracy word

    int dim() const { return bdim + static_cast<int>(word.size()); }
    bool degenerate() const { return !word.empty(); }
    auto operator<=>(const Formal&) const = default;
    bool operator==(const Formal&) const = default;
};

struct FormalHash {
    size_t operator()(const Formal& f) const {
        size_t h = static_cast<size_t>(f.bdim) * 1000003u + static_cast<size_t>(f.idx);
        for (int w : f.word) h = h * 31u + static_cast<size_t>(w) + 7u;
        return h;
    }
};

inline Formal nd(int dim, int idx) { return Formal{dim, idx, {}}; }

class SSet {
  public:
    int D = 0;               // truncation bound
    bool truncated = false;  // true when cells above D were dropped

    int dims() const { return static_cast<int>(names_.size()); }  // stored dims 0..dims()-1
    int count(int n) const { return n < dims() ? static_cast<int>(names_[n].size()) : 0; }
    int total() const;
    int top() const;  // highest dimension holding a cell, -1 if empty
    std::vector<int> counts() const;

    const std::string& name(int n, int k) const { return names_[n][k]; }
    const std::vector<Formal>& faces(int n, int k) const { return faces_[n][k]; }
    std::optional<int> find(int n, const std::string& nm) const;
    int at(int n, const std::string& nm) const;  // throws when absent

    // Adds a non-degenerate n-cell; faces must have n+1 entries of dim n-1 (n >= 1).
    int add(int n, const std::string& nm, std::vector<Formal> fs = {});
    // Vertex list of a non-degenerate cell.
    const std::vector<int>& verts(int n, int k) const { return verts_[n][k]; }

    std::string fname(const Formal& f) const;  // "name" or "s2s0(name)"

  private:
    std::vector<std::vector<std::string>> names_;
    std::vector<std::vector<std::vector<Formal>>> faces_;
    std::vector<std::vector<std::vector<int>>> verts_;
    std::vector<std::unordered_map<std::string, int>> index_;
};

using SP = std::shared_ptr<const SSet>;
inline SP share(SSet&& x) { return std::make_shared<const SSet>(std::move(x)); }

// Canonical d_i of a formal simplex.
Formal face(const SSet& X, const Formal& f, int i);
// Canonical s_j of a formal simplex.
Formal degen(const Formal& f, int j);
// s_w applied to f, where w is admissible for the result dimension.
Formal apply_word(const Word& w, const Formal& f);
// Vertex p of a formal simplex, as a vertex index.
int vertex_of(const SSet& X, const Formal& f, int p);
std::vector<int> vertices_of(const SSet& X, const Formal& f);
// Totally degenerate simplex of dimension m on vertex v.
Formal const_simplex(int v, int m);
// Enumerates every simplex (degenerate or not) of dimension m.
std::vector<Formal> all_simplices(const SSet& X, int m);

// Simplicial-identity validator; returns diagnostics naming cells.
std::vector<std::string> validate(const SSet& X);

struct SMap {
    SP dom, cod;
    std::vector<std::vector<Formal>> img;  // img[n][k] for each non-degenerate cell

    const Formal& operator()(int n, int k) const { return img[n][k]; }
    Formal apply(const Formal& f) const;
};

SMap identity(SP X);
SMap compose(const SMap& g, const SMap& f);  // g after f
std::vector<std::string> validate_map(const SMap& f);
bool maps_equal(const SMap& f, const SMap& g);
// Injective on non-degenerate cells and never sends them to degenerate ones.
bool is_mono(const SMap& f);

// Subobject as a face-closed set of non-degenerate cells.
struct Sub {
    SP amb;
    std::vector<std::vector<char>> in;

    bool has(int n, int k) const { return n < static_cast<int>(in.size()) && in[n][k]; }
    bool has(const Formal& f) const { return has(f.bdim, f.idx); }
    int total() const;
    std::vector<int> counts() const;
};

Sub empty_sub(SP X);
Sub full_sub(SP X);
Sub closure(Sub s);  // adds all faces
Sub generated(SP X, const std::vector<Formal>& cells);
Sub sub_union(const Sub& a, const Sub& b);
Sub sub_intersection(const Sub& a, const Sub& b);
bool sub_equal(const Sub& a, const Sub& b);
bool sub_subset(const Sub& a, const Sub& b);
std::vector<Formal> complement(const Sub& s);
Sub image(const SMap& f);                   // image of the whole domain
Sub image_of(const SMap& f, const Sub& a);  // image of a subobject of the domain

struct Embedded {
    SP obj;
    SMap incl;  // obj -> ambient
};
// Realizes a subobject as its own SSet with the ambient names.
Embedded realize(const Sub& s);
// Restricts f along a subobject of its domain.
SMap restrict_map(const SMap& f, const Embedded& e);
// Corestricts f to a subobject of its codomain containing its image.
SMap corestrict(const SMap& f, const Embedded& e);

SSet rename(const SSet& X, const std::map<std::pair<int, std::string>, std::string>& ren);

// Drops cells above D and marks the result truncated when anything was dropped.
SP crop(SP X, int D);
// Factors m: Y -> B through the inclusion phi: S -> B; throws when m leaves the image.
SMap lift_through(const SMap& phi, const SMap& m);

}  // namespace sset
