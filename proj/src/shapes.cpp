#include "sset/shapes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>

#include "sset/iso.hpp"

namespace sset {

SP build_J(int D) {
    if (D < 1) throw Error("build_J: D >= 1 required");
    SSet X;
    X.D = D;
    X.truncated = true;
    X.add(0, "0");
    X.add(0, "1");
    auto seq = [](int start, int len) {
        std::vector<int> s;
        for (int p = 0; p < len; ++p) s.push_back((start + p) % 2);
        return s;
    };
    auto formal = [](const std::vector<int>& s) {
        std::vector<int> core;
        Word w;
        for (size_t p = 0; p < s.size(); ++p)
            if (p == 0 || s[p] != s[p - 1]) core.push_back(s[p]);
        for (int p = static_cast<int>(s.size()) - 2; p >= 0; --p)
            if (s[p] == s[p + 1]) w.push_back(p);
        return Formal{static_cast<int>(core.size()) - 1, core[0], w};
    };
    for (int n = 1; n <= D; ++n)
        for (int start = 0; start < 2; ++start) {
            auto s = seq(start, n + 1);
            std::vector<Formal> fs;
            for (int i = 0; i <= n; ++i) {
                auto t = s;
                t.erase(t.begin() + i);
                fs.push_back(formal(t));
            }
            std::string nm;
            for (int v : s) nm += std::to_string(v);
            X.add(n, nm, fs);
        }
    return share(std::move(X));
}

SMap point_edge() {
    SSet P;
    P.add(0, "*");
    SP p = share(std::move(P));
    return SMap{standard_simplex(1), p, {{const_simplex(0, 0), const_simplex(0, 0)}, {const_simplex(0, 1)}}};
}

namespace {
SP pinched_simplex_2() {
    auto d2 = standard_simplex(2);
    return glue_edge(d2, nd(1, d2->at(1, "02")), point_edge()).obj;
}
}  // namespace

KShape build_K() {
    SP P1 = pinched_simplex_2();
    SP P2 = P1;
    // last edge 1 -> * of the first copy against the first edge * -> 1 of the second
    auto x = edge_map(P2, nd(1, P2->at(1, "01")));
    auto gl = glue_edge(P1, nd(1, P1->at(1, "12")), x, "c2");
    const SSet& G = *gl.obj;
    std::map<std::pair<int, std::string>, std::string> ren = {
        {{0, "1"}, "a"},    {{0, "*"}, "b"},     {{1, "12"}, "k"},   {{1, "01"}, "f"},
        {{1, "c2:12"}, "g"}, {{2, "012"}, "kf"}, {{2, "c2:012"}, "gk"}};
    for (auto& [k, v] : ren)
        if (!G.find(k.first, k.second)) throw Error("build_K: unexpected cell names");
    KShape K;
    K.obj = share(rename(G, ren));
    K.a = K.obj->at(0, "a");
    K.b = K.obj->at(0, "b");
    K.kappa = nd(1, K.obj->at(1, "k"));
    K.f = nd(1, K.obj->at(1, "f"));
    K.g = nd(1, K.obj->at(1, "g"));
    K.kf = nd(2, K.obj->at(2, "kf"));
    K.gk = nd(2, K.obj->at(2, "gk"));
    return K;
}

AugHorn generalized_augmented_horn(int n, const std::set<int>& S, int i, const SMap& x, const std::string& tag) {
    if (n < 2) throw Error("augmented horn: n >= 2 required");
    if (i < 0 || i > n - 1) throw Error("augmented horn: edge index out of range");
    if (S.size() < 2) throw Error("generalized augmented horn: |S| >= 2 required");
    for (int j : S)
        if (j < 0 || j > n) throw Error("generalized augmented horn: face index out of range");
    if (S.count(i) + S.count(i + 1) != 1) throw Error("generalized augmented horn: exactly one of i, i+1 must lie in S");
    auto d = standard_simplex(n);
    AugHorn h;
    h.n = n;
    h.i = i;
    h.S = S;
    h.j = -1;
    if (static_cast<int>(S.size()) == n)
        for (int k = 0; k <= n; ++k)
            if (!S.count(k)) h.j = k;
    h.glued = glue_edge(d, nd(1, simplex_cell(*d, {i, i + 1})), x, tag);
    auto lam = generalized_horn(n, S);
    Sub lamsub = image(lam.incl);
    Sub dom = sub_union(image_of(h.glued.inA, lamsub), image(h.glued.inX));
    h.dom = realize(dom);
    return h;
}

AugHorn augmented_horn(int n, int j, int i, const SMap& x, const std::string& tag) {
    if (n < 2) throw Error("augmented horn: n >= 2 required");
    if (i < 0 || i > n - 1) throw Error("augmented horn: edge index out of range");
    if (j != i && j != i + 1) throw Error("augmented horn: j must be i or i+1");
    std::set<int> S;
    for (int k = 0; k <= n; ++k)
        if (k != j) S.insert(k);
    return generalized_augmented_horn(n, S, i, x, tag);
}

AugHorn pinched_horn(int n, int j, int i) { return augmented_horn(n, j, i, point_edge(), ""); }

std::pair<int, int> Triangulation::outer(int k) const {
    int a = cycle[k], b = cycle[(k + 1) % cycle.size()];
    return {std::min(a, b), std::max(a, b)};
}

Embedded realize_triangulation(const Triangulation& t) {
    auto d = standard_simplex(t.n);
    std::vector<std::vector<int>> tuples;
    for (auto& tr : t.tris) tuples.push_back({tr[0], tr[1], tr[2]});
    for (int k = 0; k < t.outer_count(); ++k) {
        auto [a, b] = t.outer(k);
        tuples.push_back({a, b});
    }
    return realize(simplex_sub(d, tuples));
}

namespace {
void triangulate(const std::vector<int>& poly, std::vector<std::vector<std::array<int, 3>>>& out) {
    if (poly.size() < 3) {
        out.push_back({});
        return;
    }
    int a = poly.front(), b = poly.back();
    for (size_t m = 1; m + 1 < poly.size(); ++m) {
        std::vector<std::vector<std::array<int, 3>>> L, R;
        triangulate(std::vector<int>(poly.begin(), poly.begin() + m + 1), L);
        triangulate(std::vector<int>(poly.begin() + m, poly.end()), R);
        for (auto& l : L)
            for (auto& r : R) {
                auto t = l;
                t.insert(t.end(), r.begin(), r.end());
                t.push_back({a, poly[m], b});
                out.push_back(t);
            }
    }
}
}  // namespace

std::vector<Triangulation> labelled_triangulations(int n) {
    if (n < 2) throw Error("triangulations: n >= 2 required");
    std::vector<int> pos(n + 1);
    std::iota(pos.begin(), pos.end(), 0);
    std::vector<std::vector<std::array<int, 3>>> shapes;
    triangulate(pos, shapes);
    std::vector<Triangulation> out;
    std::vector<int> label = pos;
    do {
        for (auto& sh : shapes) {
            Triangulation t;
            t.n = n;
            t.cycle = label;
            for (auto tr : sh) {
                std::array<int, 3> l{label[tr[0]], label[tr[1]], label[tr[2]]};
                std::sort(l.begin(), l.end());
                t.tris.push_back(l);
            }
            std::sort(t.tris.begin(), t.tris.end());
            out.push_back(t);
        }
    } while (std::next_permutation(label.begin(), label.end()));
    return out;
}

std::vector<Triangulation> enumerate_triangulations(int n) {
    std::vector<Triangulation> reps;
    std::vector<SP> objs;
    for (auto& t : labelled_triangulations(n)) {
        SP o = realize_triangulation(t).obj;
        bool dup = false;
        for (auto& r : objs)
            if (iso_check(o, r)) {
                dup = true;
                break;
            }
        if (!dup) {
            reps.push_back(t);
            objs.push_back(o);
        }
    }
    return reps;
}

AugTriangulation realize_aug(const Triangulation& t, int dist, const SMap& iota) {
    if (!is_mono(iota)) throw Error("augmented triangulation: I must contain Delta[1]");
    AugTriangulation A;
    A.base = t;
    A.dist = dist;
    SP stage = realize_triangulation(t).obj;
    auto nm = [](std::pair<int, int> e) { return std::to_string(e.first) + std::to_string(e.second); };
    for (int k = 0; k < t.outer_count(); ++k) {
        if (k == dist) continue;
        Formal e = nd(1, stage->at(1, nm(t.outer(k))));
        stage = glue_edge(stage, e, iota, "I" + std::to_string(k)).obj;
    }
    A.obj = stage;
    A.edge = nd(1, stage->at(1, nm(t.outer(dist))));
    return A;
}

std::vector<AugTriangulation> aug_triangulations(const SMap& iota, int max_size, bool dedup) {
    if (max_size < 1) throw Error("aug_triangulations: size bound must be >= 1");
    std::vector<AugTriangulation> out;
    Triangulation seg;
    seg.n = 1;
    seg.cycle = {0, 1};
    out.push_back(realize_aug(seg, 0, iota));
    for (int s = 2; s <= max_size; ++s) {
        for (auto& t : enumerate_triangulations(s)) {
            SP base = realize_triangulation(t).obj;
            std::vector<Formal> kept;
            for (int k = 0; k < t.outer_count(); ++k) {
                auto [a, b] = t.outer(k);
                Formal e = nd(1, base->at(1, std::to_string(a) + std::to_string(b)));
                bool dup = false;
                if (dedup)
                    for (auto& o : kept)
                        if (iso_under(edge_map(base, e), edge_map(base, o))) dup = true;
                if (dup) continue;
                kept.push_back(e);
                out.push_back(realize_aug(t, k, iota));
            }
        }
    }
    return out;
}

AugTriangulation glue_on_triangle(const AugTriangulation& U, const AugTriangulation& V, int missing,
                                  const SMap& iota) {
    if (missing < 0 || missing > 2) throw Error("glue_on_triangle: missing face index must be 0, 1 or 2");
    // triangle sides in cycle order 0->1, 1->2, 2->0; the side opposite vertex k is d_k
    const std::array<std::pair<int, int>, 3> sides{{{0, 1}, {1, 2}, {0, 2}}};
    const std::array<int, 3> opposite{2, 0, 1};
    std::vector<int> occupied;
    for (int s = 0; s < 3; ++s)
        if (opposite[s] != missing) occupied.push_back(s);
    const AugTriangulation* part[3] = {nullptr, nullptr, nullptr};
    part[occupied[0]] = &U;
    part[occupied[1]] = &V;

    // node ids: 0..2 triangle vertices, then each piece's remaining labels
    std::vector<std::vector<int>> node(3);
    int next = 3;
    std::vector<std::pair<int, int>> key{{0, 0}, {0, 1}, {0, 2}};
    for (int s = 0; s < 3; ++s) {
        if (!part[s]) continue;
        const auto& A = *part[s];
        auto [lo, hi] = A.base.outer(A.dist);
        node[s].assign(A.base.n + 1, -1);
        node[s][lo] = sides[s].first;
        node[s][hi] = sides[s].second;
        for (int l = 0; l <= A.base.n; ++l)
            if (node[s][l] < 0) {
                node[s][l] = next++;
                key.push_back({s + 1, l});
            }
    }
    std::vector<std::vector<int>> succ(next);
    std::vector<int> indeg(next, 0);
    auto arc = [&](int a, int b) {
        succ[a].push_back(b);
        ++indeg[b];
    };
    arc(0, 1);
    arc(1, 2);
    for (int s = 0; s < 3; ++s)
        if (part[s])
            for (int l = 0; l < part[s]->base.n; ++l) arc(node[s][l], node[s][l + 1]);
    std::set<std::pair<std::pair<int, int>, int>> ready;
    for (int v = 0; v < next; ++v)
        if (!indeg[v]) ready.insert({key[v], v});
    std::vector<int> label(next, -1);
    int lab = 0;
    while (!ready.empty()) {
        int v = ready.begin()->second;
        ready.erase(ready.begin());
        label[v] = lab++;
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.insert({key[w], w});
    }
    if (lab != next) throw Error("glue_on_triangle: inconsistent orders");

    auto path = [](const AugTriangulation& A) {
        const auto& c = A.base.cycle;
        int m = static_cast<int>(c.size());
        auto [lo, hi] = A.base.outer(A.dist);
        std::vector<int> p;
        for (int s = 1; s <= m; ++s) p.push_back(c[(A.dist + s) % m]);
        if (p.front() != lo) std::reverse(p.begin(), p.end());
        if (p.front() != lo || p.back() != hi) throw Error("glue_on_triangle: malformed boundary");
        return p;
    };
    Triangulation t;
    t.n = next - 1;
    int distIndex = -1;
    const std::array<std::pair<int, int>, 3> walk{{{0, 1}, {1, 2}, {2, 0}}};
    for (int w = 0; w < 3; ++w) {
        int s = w == 2 ? 2 : w;
        auto [from, to] = walk[w];
        if (!part[s]) {
            distIndex = static_cast<int>(t.cycle.size());
            t.cycle.push_back(label[from]);
            continue;
        }
        auto p = path(*part[s]);
        if (from > to) std::reverse(p.begin(), p.end());
        for (size_t q = 0; q + 1 < p.size(); ++q) t.cycle.push_back(label[node[s][p[q]]]);
    }
    for (int s = 0; s < 3; ++s)
        if (part[s])
            for (auto tr : part[s]->base.tris)
                t.tris.push_back({label[node[s][tr[0]]], label[node[s][tr[1]]], label[node[s][tr[2]]]});
    t.tris.push_back({label[0], label[1], label[2]});
    for (auto& tr : t.tris) std::sort(tr.begin(), tr.end());
    std::sort(t.tris.begin(), t.tris.end());
    return realize_aug(t, distIndex, iota);
}

AugTriangulation two_out_of_three_glue(const AugTriangulation& U, const AugTriangulation& V, const SMap& iota) {
    return glue_on_triangle(U, V, 1, iota);
}

std::string TilingDesc::name() const {
    std::string s = "C(" + std::to_string(r) + ";";
    for (size_t k = 0; k < moves.size(); ++k) s += (k ? "," : "") + std::string(1, moves[k].first) + std::to_string(moves[k].second);
    return s + ")";
}

Tiling composition_tiling(const TilingDesc& d) {
    if (d.r < 1 || d.r > 9) throw Error("composition tiling: spine length must lie in 1..9");
    SSet X;
    X.D = 2;
    std::vector<int> path, edges;
    for (int v = 0; v <= d.r; ++v) path.push_back(X.add(0, std::to_string(v)));
    auto add_edge = [&](int a, int b) {
        std::string nm = X.name(0, a) + ">" + X.name(0, b);
        while (X.find(1, nm)) nm += "'";
        return X.add(1, nm, {nd(0, b), nd(0, a)});
    };
    for (int v = 0; v < d.r; ++v) edges.push_back(add_edge(v, v + 1));
    std::vector<int> leftEdges = edges;
    int fresh = 0, tri = 0;
    for (auto [kind, p] : d.moves) {
        int len = static_cast<int>(edges.size());
        if (kind == 'c') {
            if (p < 0 || p + 1 >= len) throw Error("composition tiling: contraction out of range");
            int a = path[p], c = path[p + 2];
            int ac = add_edge(a, c);
            X.add(2, "t" + std::to_string(++tri), {nd(1, edges[p + 1]), nd(1, ac), nd(1, edges[p])});
            path.erase(path.begin() + p + 1);
            edges.erase(edges.begin() + p, edges.begin() + p + 2);
            edges.insert(edges.begin() + p, ac);
        } else if (kind == 'e') {
            if (p < 0 || p >= len) throw Error("composition tiling: expansion out of range");
            int a = path[p], c = path[p + 1];
            int b = X.add(0, "m" + std::to_string(++fresh));
            int ab = add_edge(a, b), bc = add_edge(b, c);
            X.add(2, "t" + std::to_string(++tri), {nd(1, bc), nd(1, edges[p]), nd(1, ab)});
            path.insert(path.begin() + p + 1, b);
            edges.erase(edges.begin() + p);
            edges.insert(edges.begin() + p, {ab, bc});
        } else {
            throw Error("composition tiling: unknown move");
        }
    }
    Tiling T;
    T.desc = d;
    T.obj = share(std::move(X));
    T.s = static_cast<int>(edges.size());
    auto spine_map = [&](int len, const std::vector<int>& vs, const std::vector<int>& es) {
        auto sp = spine(len).obj;
        SMap m{sp, T.obj, {}};
        m.img.resize(2);
        for (int v = 0; v <= len; ++v) m.img[0].push_back(nd(0, vs[sp->verts(0, v)[0]]));
        for (int k = 0; k < sp->count(1); ++k) m.img[1].push_back(nd(1, es[sp->verts(1, k)[0]]));
        return m;
    };
    std::vector<int> leftVerts(d.r + 1);
    std::iota(leftVerts.begin(), leftVerts.end(), 0);
    T.left = spine_map(d.r, leftVerts, leftEdges);
    T.right = spine_map(T.s, path, edges);
    return T;
}

Tiling composition_tile(int n, int i) {
    if (n < 1 || i < 1 || i > n) throw Error("composition tile: need 1 <= i <= n");
    return composition_tiling(TilingDesc{n + 1, {{'c', i - 1}}});
}

PinchedTiling pinched_tiling(const Tiling& c) {
    if (c.s != 1) throw Error("pinched tiling: right spine must have length 1");
    if (c.desc.r < 2) throw Error("pinched tiling: left spine must have length >= 2");
    auto gl = glue_edge(c.obj, c.right.img[1][0], point_edge());
    PinchedTiling P;
    P.desc = c.desc;
    P.obj = gl.obj;
    const SSet& sp = *c.left.dom;
    P.first = gl.inA.apply(c.left.apply(nd(1, sp.at(1, "01"))));
    P.last = gl.inA.apply(c.left.apply(nd(1, sp.at(1, std::to_string(c.desc.r - 1) + std::to_string(c.desc.r)))));
    return P;
}

InvertingTiling inverting_tiling(const PinchedTiling& L, const PinchedTiling& R) {
    auto po = pushout(edge_map(L.obj, L.last), edge_map(R.obj, R.first), "R");
    InvertingTiling T;
    T.name = "inv(" + L.desc.name() + "," + R.desc.name() + ")";
    T.obj = po.obj;
    T.e = po.inX.apply(L.last);
    return T;
}

std::vector<PinchedTiling> enumerate_pinched_tilings(int max_cells) {
    std::vector<PinchedTiling> out;
    for (int r = 2; r <= 9 && 4 * r - 3 <= max_cells; ++r) {
        std::vector<std::pair<char, int>> moves;
        // pinched cell count = 2r+1 + 2 per contraction + 4 per expansion - 2
        std::function<void(int, int)> dfs = [&](int len, int cells) {
            if (len == 1) {
                auto p = pinched_tiling(composition_tiling(TilingDesc{r, moves}));
                bool dup = false;
                for (auto& q : out) {
                    if (q.cells() != p.cells()) continue;
                    Partial fx(2);
                    fx[0].assign(p.obj->count(0), -1);
                    fx[1].assign(p.obj->count(1), -1);
                    fx[1][p.first.idx] = q.first.idx;
                    fx[1][p.last.idx] = q.last.idx;
                    if (iso_check(p.obj, q.obj, fx)) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) out.push_back(p);
            }
            for (int q = 0; q + 1 < len; ++q)
                if (cells + 2 <= max_cells) {
                    moves.push_back({'c', q});
                    dfs(len - 1, cells + 2);
                    moves.pop_back();
                }
            for (int q = 0; q < len; ++q)
                if (cells + 4 <= max_cells) {
                    moves.push_back({'e', q});
                    dfs(len + 1, cells + 4);
                    moves.pop_back();
                }
        };
        dfs(r, 2 * r + 1 - 2);
    }
    std::stable_sort(out.begin(), out.end(), [](const PinchedTiling& a, const PinchedTiling& b) {
        if (a.cells() != b.cells()) return a.cells() < b.cells();
        return a.desc.name() < b.desc.name();
    });
    return out;
}

std::vector<InvertingTiling> enumerate_inverting_tilings(int max_cells) {
    auto ps = enumerate_pinched_tilings(max_cells - 2);
    std::vector<InvertingTiling> out;
    for (auto& L : ps)
        for (auto& R : ps)
            if (L.cells() + R.cells() - 3 <= max_cells) out.push_back(inverting_tiling(L, R));
    std::stable_sort(out.begin(), out.end(), [](const InvertingTiling& a, const InvertingTiling& b) {
        if (a.cells() != b.cells()) return a.cells() < b.cells();
        return a.name < b.name;
    });
    return out;
}

std::vector<NamedInclusion> enumerate_special_horns(int max_tiling_cells, int max_n, bool outer_only) {
    if (max_tiling_cells < 1 || max_n < 1) throw Error("special horns: bounds must be >= 1");
    std::vector<NamedInclusion> out;
    for (auto& T : enumerate_inverting_tilings(max_tiling_cells))
        for (int n = 2; n <= max_n; ++n)
            for (int i = 0; i < n; ++i)
                for (int j : {i, i + 1}) {
                    bool outer = j == 0 || j == n;
                    if (outer_only && !outer) continue;
                    auto h = augmented_horn(n, j, i, T.edge(), T.name);
                    out.push_back({"aug_horn(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(i) +
                                       ";" + T.name + ")",
                                   h.incl(), outer});
                }
    return out;
}

Isoplex isoplex(int n, int i, int D) {
    if (n < 1 || i < 0 || i > n - 1 || D < n) throw Error("isoplex: need n >= 1, 0 <= i <= n-1, D >= n");
    std::vector<std::string> ob;
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    auto collapse = [&](int a) { return a <= i ? a : a - 1; };
    for (int a = 0; a <= n; ++a) {
        ob.push_back(std::to_string(a));
        for (int b = 0; b <= n; ++b) leq[a][b] = collapse(a) <= collapse(b);
    }
    Isoplex I;
    I.n = n;
    I.i = i;
    I.D = D;
    I.obj = nerve(preorder(ob, leq), D);
    for (int j = 0; j <= n; ++j) {
        Sub s = empty_sub(I.obj);
        for (int m = 0; m < I.obj->dims(); ++m)
            for (int k = 0; k < I.obj->count(m); ++k) {
                auto vs = I.obj->verts(m, k);
                if (std::find(vs.begin(), vs.end(), j) == vs.end()) s.in[m][k] = 1;
            }
        I.faces.push_back(realize(s));
    }
    return I;
}

Embedded iso_horn(int n, int i, int D) {
    Isoplex I = isoplex(n, i, D);
    Sub s = empty_sub(I.obj);
    for (int j = 0; j <= n; ++j)
        if (j != i) s = sub_union(s, image(I.faces[j].incl));
    return realize(s);
}

SP build_two_cycle_I() {
    SSet I;
    I.D = 1;
    int a = I.add(0, "a"), b = I.add(0, "b");
    I.add(1, "ab", {nd(0, b), nd(0, a)});
    I.add(1, "ba", {nd(0, a), nd(0, b)});
    return share(std::move(I));
}

std::vector<NamedInclusion> build_A_I_family(SP I, int max_n) {
    std::vector<NamedInclusion> out;
    for (int n = 0; n <= max_n; ++n) {
        auto d = standard_simplex(n);
        Product P = product(I, d, std::max(I->top(), 0) + n);
        Sub bd = empty_sub(d);
        for (int m = 0; m < n; ++m) std::fill(bd.in[m].begin(), bd.in[m].end(), 1);
        for (int v = 0; v < I->count(0); ++v) {
            Sub pt = generated(I, {nd(0, v)});
            Sub s = sub_union(product_sub(P, full_sub(I), bd), product_sub(P, pt, full_sub(d)));
            out.push_back({"A_I(" + std::to_string(n) + "," + I->name(0, v) + ")", realize(s).incl, false});
        }
    }
    return out;
}

std::vector<NamedInclusion> horn_family(int max_n, bool inner_only) {
    std::vector<NamedInclusion> out;
    for (int n = 1; n <= max_n; ++n)
        for (int i = 0; i <= n; ++i) {
            bool outer = i == 0 || i == n;
            if (inner_only && outer) continue;
            out.push_back({"horn(" + std::to_string(n) + "," + std::to_string(i) + ")", horn(n, i).incl, outer});
        }
    return out;
}

std::vector<NamedInclusion> aug_horn_family(const std::string& X, int max_n) {
    std::vector<NamedInclusion> out;
    SMap x = attachment(X);
    for (int n = 2; n <= max_n; ++n)
        for (int i = 0; i < n; ++i)
            for (int j : {i, i + 1})
                out.push_back({"aug_horn(" + std::to_string(n) + "," + std::to_string(j) + "," + std::to_string(i) + ";" +
                                   X + ")",
                               augmented_horn(n, j, i, x, X).incl(), j == 0 || j == n});
    return out;
}

std::vector<NamedInclusion> iso_horn_family(int max_n, int D) {
    std::vector<NamedInclusion> out;
    for (int n = 1; n <= max_n; ++n)
        for (int i = 0; i < n; ++i)
            out.push_back({"iso_horn(" + std::to_string(n) + "," + std::to_string(i) + ")@" + std::to_string(D),
                           sset::iso_horn(n, i, D).incl, false});
    return out;
}

std::vector<NamedInclusion> named_family(const std::string& name, const FamilyBounds& b) {
    if (name == "horns") return horn_family(b.max_n, false);
    if (name == "inner-horns") return horn_family(b.max_n, true);
    if (name == "special-horns") return enumerate_special_horns(b.tiling_cells, b.max_n);
    if (name == "outer-special-horns") return enumerate_special_horns(b.tiling_cells, b.max_n, true);
    if (name == "J-aug-horns") return aug_horn_family("J@" + std::to_string(b.D), b.max_n);
    if (name.rfind("aug-horns:", 0) == 0) return aug_horn_family(name.substr(10), b.max_n);
    if (name == "iso-horns") return iso_horn_family(b.max_n, b.D);
    if (name == "A_I") return build_A_I_family(build_two_cycle_I(), b.max_n);
    auto it = resolve(name);
    if (!it.incl) throw Error("'" + name + "' is neither a family nor an inclusion");
    return {{name, *it.incl, false}};
}

FiniteCategory finset_category(const std::vector<std::string>& names, const std::vector<std::vector<std::string>>& sets) {
    FiniteCategory C;
    C.objects = names;
    std::vector<std::vector<int>> fn;  // function as image indices
    std::map<std::tuple<int, int, std::vector<int>>, int> byFn;
    for (int s = 0; s < static_cast<int>(sets.size()); ++s)
        for (int t = 0; t < static_cast<int>(sets.size()); ++t) {
            int ns = static_cast<int>(sets[s].size()), nt = static_cast<int>(sets[t].size());
            std::vector<int> f(ns, 0);
            while (true) {
                bool isId = s == t;
                for (int k = 0; k < ns && isId; ++k) isId = f[k] == k;
                std::string nm = names[s] + "->" + names[t] + "[";
                for (int k = 0; k < ns; ++k) nm += (k ? "," : "") + sets[s][k] + ":" + sets[t][f[k]];
                nm += "]";
                if (isId) nm = "id_" + names[s];
                byFn[{s, t, f}] = static_cast<int>(C.arrows.size());
                C.arrows.push_back({s, t, nm, isId});
                fn.push_back(f);
                int k = 0;
                while (k < ns && ++f[k] == nt) f[k++] = 0;
                if (k == ns) break;
            }
        }
    int m = static_cast<int>(C.arrows.size());
    C.comp.assign(m, std::vector<int>(m, -1));
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (C.arrows[f].tgt != C.arrows[g].src) continue;
            std::vector<int> h;
            for (int v : fn[f]) h.push_back(fn[g][v]);
            C.comp[g][f] = byFn.at({C.arrows[f].src, C.arrows[g].tgt, h});
        }
    return C;
}

ExampleT build_example_T() {
    SSet T;
    T.D = 2;
    int w = T.add(0, "w"), x = T.add(0, "x"), y = T.add(0, "y"), z = T.add(0, "z");
    auto E = [&](const std::string& nm, int a, int b) { return nd(1, T.add(1, nm, {nd(0, b), nd(0, a)})); };
    Formal xz = E("xz", x, z), zx = E("zx", z, x), yz = E("yz", y, z), xy = E("xy", x, y);
    Formal yw = E("yw", y, w), wy = E("wy", w, y), wx = E("wx", w, x);
    T.add(2, "xzx", {zx, const_simplex(x, 1), xz});
    T.add(2, "xyz", {yz, xz, xy});
    T.add(2, "ywy", {wy, const_simplex(y, 1), yw});
    T.add(2, "wxy", {xy, wy, wx});
    ExampleT ex;
    ex.obj = share(std::move(T));
    ex.e = xy;
    // sets {a}, {a'}, {a,c}
    ex.functor.target = finset_category({"A", "A'", "C"}, {{"a"}, {"a'"}, {"a", "c"}});
    const auto& C = ex.functor.target;
    auto arrow = [&](const std::string& nm) {
        for (int k = 0; k < static_cast<int>(C.arrows.size()); ++k)
            if (C.arrows[k].name == nm) return k;
        throw Error("example T functor: no arrow " + nm);
    };
    ex.functor.objects = {{"w", 2}, {"x", 0}, {"y", 1}, {"z", 2}};
    ex.functor.arrows = {{"yz", arrow("A'->C[a':a]")}, {"xz", arrow("A->C[a:a]")},  {"zx", arrow("C->A[a:a,c:a]")},
                         {"xy", arrow("A->A'[a:a']")},  {"yw", arrow("A'->C[a':a]")}, {"wy", arrow("C->A'[a:a',c:a']")},
                         {"wx", arrow("C->A[a:a,c:a]")}};
    return ex;
}

SMap attachment(const std::string& name) {
    std::smatch m;
    if (name == "K") return build_K().edge();
    if (name == "*") return point_edge();
    if (name == "I2") {
        auto I = build_two_cycle_I();
        return edge_map(I, nd(1, I->at(1, "ab")));
    }
    if (name == "Delta(1)") return identity(standard_simplex(1));
    if (std::regex_match(name, m, std::regex(R"(J@(\d+))"))) {
        auto J = build_J(std::stoi(m[1]));
        return edge_map(J, nd(1, J->at(1, "01")));
    }
    if (name.rfind("inv(", 0) == 0) {
        auto it = resolve(name);
        return edge_map(it.obj, it.edges.at("e"));
    }
    throw Error("unknown attaching object '" + name + "'");
}

namespace {
TilingDesc parse_tiling(const std::string& s) {
    std::smatch m;
    if (!std::regex_match(s, m, std::regex(R"(C\((\d+);([ce0-9,]*)\))"))) throw Error("bad tiling name '" + s + "'");
    TilingDesc d;
    d.r = std::stoi(m[1]);
    std::string mv = m[2];
    std::regex tok(R"(([ce])(\d+))");
    for (auto it = std::sregex_iterator(mv.begin(), mv.end(), tok); it != std::sregex_iterator(); ++it)
        d.moves.push_back({(*it)[1].str()[0], std::stoi((*it)[2])});
    return d;
}

std::set<int> parse_set(const std::string& s) {
    std::set<int> S;
    std::regex num(R"(\d+)");
    for (auto it = std::sregex_iterator(s.begin(), s.end(), num); it != std::sregex_iterator(); ++it)
        S.insert(std::stoi(it->str()));
    return S;
}

CatalogItem of_incl(const SMap& i) { return CatalogItem{i.cod, i, {}}; }
}  // namespace

CatalogItem resolve(const std::string& name) {
    std::smatch m;
    auto I = [](const std::string& s) { return std::stoi(s); };
    if (name.rfind("dom:", 0) == 0) {
        auto it = resolve(name.substr(4));
        if (!it.incl) throw Error("'" + name.substr(4) + "' is not an inclusion");
        return CatalogItem{it.incl->dom, std::nullopt, {}};
    }
    if (name.rfind("cod:", 0) == 0) {
        auto it = resolve(name.substr(4));
        return CatalogItem{it.obj, std::nullopt, it.edges};
    }
    if (std::regex_match(name, m, std::regex(R"((?:Delta)\((\d+)\))"))) return CatalogItem{standard_simplex(I(m[1])), {}, {}};
    if (std::regex_match(name, m, std::regex(R"(boundary\((\d+)\))"))) return of_incl(boundary(I(m[1])).incl);
    if (std::regex_match(name, m, std::regex(R"(horn\((\d+),(\d+)\))"))) return of_incl(horn(I(m[1]), I(m[2])).incl);
    if (std::regex_match(name, m, std::regex(R"(Lambda\((\d+),(\d+)\))")))
        return CatalogItem{horn(I(m[1]), I(m[2])).obj, {}, {}};
    if (std::regex_match(name, m, std::regex(R"(spine\((\d+)\))"))) return of_incl(spine(I(m[1])).incl);
    if (std::regex_match(name, m, std::regex(R"(J@(\d+))"))) {
        auto J = build_J(I(m[1]));
        return CatalogItem{J, {}, {{"e", nd(1, J->at(1, "01"))}}};
    }
    if (name == "K") {
        auto K = build_K();
        return CatalogItem{K.obj, {}, {{"k", K.kappa}, {"f", K.f}, {"g", K.g}}};
    }
    if (name == "I2") return CatalogItem{build_two_cycle_I(), {}, {}};
    if (name == "exampleT") {
        auto T = build_example_T();
        return CatalogItem{T.obj, {}, {{"e_T", T.e}}};
    }
    if (std::regex_match(name, m, std::regex(R"(isoplex\((\d+),(\d+)\)@(\d+))")))
        return CatalogItem{isoplex(I(m[1]), I(m[2]), I(m[3])).obj, {}, {}};
    if (std::regex_match(name, m, std::regex(R"(iso_horn\((\d+),(\d+)\)@(\d+))")))
        return of_incl(iso_horn(I(m[1]), I(m[2]), I(m[3])).incl);
    if (std::regex_match(name, m, std::regex(R"(aug_horn\((\d+),(\d+),(\d+);(.+)\))")))
        return of_incl(augmented_horn(I(m[1]), I(m[2]), I(m[3]), attachment(m[4]), m[4]).incl());
    if (std::regex_match(name, m, std::regex(R"(pinched_horn\((\d+),(\d+),(\d+)\))")))
        return of_incl(pinched_horn(I(m[1]), I(m[2]), I(m[3])).incl());
    if (std::regex_match(name, m, std::regex(R"(gen_aug_horn\((\d+),\{([0-9,]*)\},(\d+);(.+)\))")))
        return of_incl(generalized_augmented_horn(I(m[1]), parse_set(m[2]), I(m[3]), attachment(m[4]), m[4]).incl());
    if (std::regex_match(name, m, std::regex(R"(aug_simplex\((\d+),(\d+);(.+)\))"))) {
        auto d = standard_simplex(I(m[1]));
        int i = I(m[2]);
        return CatalogItem{glue_edge(d, nd(1, simplex_cell(*d, {i, i + 1})), attachment(m[3]), m[3]).obj, {}, {}};
    }
    if (std::regex_match(name, m, std::regex(R"(pinched_simplex\((\d+),(\d+)\))"))) {
        auto d = standard_simplex(I(m[1]));
        int i = I(m[2]);
        return CatalogItem{glue_edge(d, nd(1, simplex_cell(*d, {i, i + 1})), point_edge()).obj, {}, {}};
    }
    if (std::regex_match(name, m, std::regex(R"(A_I\((\d+),(\w)\))"))) {
        for (auto& e : build_A_I_family(build_two_cycle_I(), I(m[1])))
            if (e.name == name) return of_incl(e.incl);
        throw Error("unknown vertex in '" + name + "'");
    }
    if (std::regex_match(name, m, std::regex(R"(tiling\((C\(.*\))\))"))) {
        auto t = composition_tiling(parse_tiling(m[1]));
        return CatalogItem{t.obj, {}, {}};
    }
    if (std::regex_match(name, m, std::regex(R"(pinched_tiling\((C\(.*\))\))"))) {
        auto p = pinched_tiling(composition_tiling(parse_tiling(m[1])));
        return CatalogItem{p.obj, {}, {{"first", p.first}, {"last", p.last}}};
    }
    if (std::regex_match(name, m, std::regex(R"(inv\((C\([^)]*\)),(C\([^)]*\))\))"))) {
        auto L = pinched_tiling(composition_tiling(parse_tiling(m[1])));
        auto R = pinched_tiling(composition_tiling(parse_tiling(m[2])));
        auto T = inverting_tiling(L, R);
        return CatalogItem{T.obj, {}, {{"e", T.e}}};
    }
    if (std::regex_match(name, m, std::regex(R"(poset\((\d+)\)@(\d+))")))
        return CatalogItem{nerve(poset_n(I(m[1])), I(m[2])), {}, {}};
    if (std::regex_match(name, m, std::regex(R"(iso\(\)@(\d+))")))
        return CatalogItem{nerve(free_iso(), I(m[1])), {}, {}};
    throw Error("unknown catalog name '" + name + "'");
}

}  // namespace sset
