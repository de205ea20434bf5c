// Brute-force reference computations. They only use the formal-simplex
// primitives of core (faces, degeneracies, enumeration of all simplices),
// never the solver, the colimit code or the triangulation enumerator.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "sset/build.hpp"

namespace oracle {

using namespace sset;

// Vertex list of s_{w0} s_{w1} ... applied to the base simplex, innermost
// operator first: s_j repeats the vertex at position j.
inline std::vector<int> raw_surjection(const Word& raw, int m) {
    std::vector<int> verts(m + 1 - raw.size());
    std::iota(verts.begin(), verts.end(), 0);
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) verts.insert(verts.begin() + *it, verts[*it]);
    return verts;
}

// Non-degenerate n-simplices of the nerve: chains of n composable non-identity arrows.
inline std::vector<int> nerve_counts(const FiniteCategory& C, int D) {
    std::vector<int> out(D + 1, 0);
    out[0] = static_cast<int>(C.objects.size());
    std::function<void(int, int)> walk = [&](int obj, int len) {
        if (len >= 1) ++out[len];
        if (len == D) return;
        for (int a = 0; a < static_cast<int>(C.arrows.size()); ++a)
            if (!C.arrows[a].id && C.arrows[a].src == obj) walk(C.arrows[a].tgt, len + 1);
    };
    for (int x = 0; x < out[0]; ++x) walk(x, 0);
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

inline bool in_degenerate_image(const Formal& f, int j) {
    return std::find(f.word.begin(), f.word.end(), j) != f.word.end();
}

// Non-degenerate k-simplices of X x Y: pairs of k-simplices sharing no degeneracy index.
inline std::vector<int> product_counts(const SSet& X, const SSet& Y, int D) {
    std::vector<int> out;
    for (int k = 0; k <= D; ++k) {
        int c = 0;
        auto xs = all_simplices(X, k), ys = all_simplices(Y, k);
        for (auto& a : xs)
            for (auto& b : ys) {
                bool deg = false;
                for (int j = 0; j < k && !deg; ++j) deg = in_degenerate_image(a, j) && in_degenerate_image(b, j);
                if (!deg) ++c;
            }
        out.push_back(c);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Pushout of X <- A -> B computed on all simplices up to dimension D:
// identify g(a) with f(a), then count classes outside every degeneracy image.
inline std::vector<int> pushout_counts(const SMap& f, const SMap& g, int D) {
    const SSet& X = *f.cod;
    const SSet& B = *g.cod;
    const SSet& A = *f.dom;
    std::vector<int> out;
    for (int n = 0; n <= D; ++n) {
        auto xs = all_simplices(X, n), bs = all_simplices(B, n);
        std::map<std::pair<int, Formal>, int> id;
        for (auto& s : xs) id.emplace(std::make_pair(0, s), static_cast<int>(id.size()));
        for (auto& s : bs) id.emplace(std::make_pair(1, s), static_cast<int>(id.size()));
        std::vector<int> par(id.size());
        std::iota(par.begin(), par.end(), 0);
        std::function<int(int)> find = [&](int a) { return par[a] == a ? a : par[a] = find(par[a]); };
        for (auto& a : all_simplices(A, n)) {
            int p = id.at({0, f.apply(a)}), q = id.at({1, g.apply(a)});
            par[find(p)] = find(q);
        }
        std::set<int> classes, degenerate;
        for (auto& [k, v] : id) classes.insert(find(v));
        if (n > 0) {
            for (auto& s : all_simplices(X, n - 1))
                for (int j = 0; j < n; ++j) degenerate.insert(find(id.at({0, degen(s, j)})));
            for (auto& s : all_simplices(B, n - 1))
                for (int j = 0; j < n; ++j) degenerate.insert(find(id.at({1, degen(s, j)})));
        }
        out.push_back(static_cast<int>(classes.size() - degenerate.size()));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Non-degenerate simplices of (I x boundary(n)) u ({v} x Delta[n]) inside I x Delta[n].
inline std::vector<int> a_i_domain_counts(const SSet& I, int v, const SSet& simplex, int D) {
    int n = simplex.top();
    std::vector<int> out;
    for (int k = 0; k <= D; ++k) {
        int c = 0;
        for (auto& a : all_simplices(I, k))
            for (auto& b : all_simplices(simplex, k)) {
                bool deg = false;
                for (int j = 0; j < k && !deg; ++j) deg = in_degenerate_image(a, j) && in_degenerate_image(b, j);
                if (deg) continue;
                bool on_boundary = b.bdim < n;
                bool over_v = a.bdim == 0 && a.idx == v;
                if (on_boundary || over_v) ++c;
            }
        out.push_back(c);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Generate-and-test over all assignments of B's non-degenerate cells to
// simplices of X, in dimension order. Counts completions up to cap.
inline size_t count_lifts(const SMap& incl, const SMap& f, size_t cap) {
    const SSet& B = *incl.cod;
    const SSet& X = *f.cod;
    std::vector<std::vector<std::optional<Formal>>> img(B.dims());
    for (int n = 0; n < B.dims(); ++n) img[n].resize(B.count(n));
    const SSet& A = *incl.dom;
    for (int n = 0; n < A.dims(); ++n)
        for (int k = 0; k < A.count(n); ++k) {
            Formal b = incl(n, k);
            img[b.bdim][b.idx] = f(n, k);
        }
    std::vector<std::pair<int, int>> order;
    for (int n = 0; n < B.dims(); ++n)
        for (int k = 0; k < B.count(n); ++k) order.push_back({n, k});
    std::vector<std::vector<Formal>> cand(B.dims());
    for (int n = 0; n < B.dims(); ++n) cand[n] = all_simplices(X, n);
    auto image_of = [&](const Formal& b) { return apply_word(b.word, *img[b.bdim][b.idx]); };
    auto consistent = [&](int n, int k, const Formal& s) {
        if (n == 0) return true;
        auto& fs = B.faces(n, k);
        for (int i = 0; i <= n; ++i)
            if (face(X, s, i) != image_of(fs[i])) return false;
        return true;
    };
    size_t found = 0;
    std::function<void(size_t)> go = [&](size_t p) {
        if (found >= cap) return;
        if (p == order.size()) {
            ++found;
            return;
        }
        auto [n, k] = order[p];
        if (img[n][k]) {
            if (consistent(n, k, *img[n][k])) go(p + 1);
            return;
        }
        for (auto& s : cand[n]) {
            if (!consistent(n, k, s)) continue;
            img[n][k] = s;
            go(p + 1);
            img[n][k].reset();
            if (found >= cap) return;
        }
    };
    go(0);
    return found;
}

// Unordered triangulations of a polygon with labels 0..n, up to relabelings
// that preserve the orientation of every edge.
inline int triangulation_classes(int n) {
    int V = n + 1;
    // Triangulations of the convex polygon 0..V-1 by position.
    std::function<std::vector<std::vector<std::array<int, 3>>>(int, int)> tri = [&](int a, int b) {
        std::vector<std::vector<std::array<int, 3>>> out;
        if (b - a < 2) return std::vector<std::vector<std::array<int, 3>>>{{}};
        for (int c = a + 1; c < b; ++c)
            for (auto& L : tri(a, c))
                for (auto& R : tri(c, b)) {
                    auto t = L;
                    t.insert(t.end(), R.begin(), R.end());
                    t.push_back({a, c, b});
                    out.push_back(t);
                }
        return out;
    };
    using Shape = std::pair<std::set<std::array<int, 3>>, std::set<std::pair<int, int>>>;
    std::vector<Shape> shapes;
    std::vector<int> lab(V);
    std::iota(lab.begin(), lab.end(), 0);
    auto shapes_of = [&](const std::vector<std::array<int, 3>>& T, const std::vector<int>& l) {
        Shape s;
        for (auto& t : T) {
            std::array<int, 3> x{l[t[0]], l[t[1]], l[t[2]]};
            std::sort(x.begin(), x.end());
            s.first.insert(x);
            s.second.insert({x[0], x[1]});
            s.second.insert({x[1], x[2]});
            s.second.insert({x[0], x[2]});
        }
        for (int p = 0; p < V; ++p) {
            int a = l[p], b = l[(p + 1) % V];
            s.second.insert({std::min(a, b), std::max(a, b)});
        }
        return s;
    };
    auto all = tri(0, V - 1);
    do {
        for (auto& T : all) shapes.push_back(shapes_of(T, lab));
    } while (std::next_permutation(lab.begin(), lab.end()));
    std::vector<Shape> reps;
    auto iso = [&](const Shape& a, const Shape& b) {
        std::vector<int> phi(V);
        std::iota(phi.begin(), phi.end(), 0);
        do {
            bool ok = true;
            for (auto& [x, y] : a.second)
                if (phi[x] > phi[y] || !b.second.count({phi[x], phi[y]})) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            for (auto& t : a.first)
                if (!b.first.count({phi[t[0]], phi[t[1]], phi[t[2]]})) ok = false;
            if (ok && a.first.size() == b.first.size() && a.second.size() == b.second.size()) return true;
        } while (std::next_permutation(phi.begin(), phi.end()));
        return false;
    };
    for (auto& s : shapes) {
        bool seen = false;
        for (auto& r : reps)
            if (iso(s, r)) {
                seen = true;
                break;
            }
        if (!seen) reps.push_back(s);
    }
    return static_cast<int>(reps.size());
}

// Isomorphism by trying every dimension-wise bijection of non-degenerate cells.
inline bool brute_iso(const SSet& X, const SSet& Y) {
    if (X.counts() != Y.counts()) return false;
    int D = X.dims();
    std::vector<std::vector<int>> perm(D);
    for (int n = 0; n < D; ++n) {
        perm[n].resize(X.count(n));
        std::iota(perm[n].begin(), perm[n].end(), 0);
    }
    auto image = [&](const Formal& f) { return Formal{f.bdim, perm[f.bdim][f.idx], f.word}; };
    auto faces_ok = [&](int n) {
        for (int k = 0; k < X.count(n); ++k) {
            auto& fx = X.faces(n, k);
            auto& fy = Y.faces(n, perm[n][k]);
            for (int i = 0; i <= n; ++i)
                if (image(fx[i]) != fy[i]) return false;
        }
        return true;
    };
    std::function<bool(int)> go = [&](int n) {
        if (n == D) return true;
        std::sort(perm[n].begin(), perm[n].end());
        do {
            if ((n == 0 || faces_ok(n)) && go(n + 1)) return true;
        } while (std::next_permutation(perm[n].begin(), perm[n].end()));
        return false;
    };
    return go(0);
}

}  // namespace oracle
