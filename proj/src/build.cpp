#include "sset/build.hpp"

#include <algorithm>

namespace sset {

namespace {
std::string digits(const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += std::to_string(x);
    return s;
}

void subsets_of_size(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v <= n; ++v) {
        cur.push_back(v);
        subsets_of_size(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

SP standard_simplex(int n) {
    if (n < 0 || n > 9) throw Error("standard_simplex: n must lie in 0..9");
    SSet X;
    X.D = n;
    for (int k = 0; k <= n; ++k) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        subsets_of_size(n, k + 1, 0, cur, subs);
        for (auto& s : subs) {
            std::vector<Formal> fs;
            if (k > 0)
                for (int i = 0; i <= k; ++i) {
                    auto t = s;
                    t.erase(t.begin() + i);
                    fs.push_back(nd(k - 1, X.at(k - 1, digits(t))));
                }
            X.add(k, digits(s), fs);
        }
    }
    return share(std::move(X));
}

int simplex_cell(const SSet& delta, const std::vector<int>& verts) {
    return delta.at(static_cast<int>(verts.size()) - 1, digits(verts));
}

Formal simplex_formal(const SSet& delta, const std::vector<int>& seq) {
    std::vector<int> distinct;
    Word w;
    for (size_t p = 0; p < seq.size(); ++p) {
        if (p > 0 && seq[p] < seq[p - 1]) throw Error("vertex sequence must be weakly increasing");
        if (p > 0 && seq[p] == seq[p - 1]) continue;
        distinct.push_back(seq[p]);
    }
    for (int p = static_cast<int>(seq.size()) - 2; p >= 0; --p)
        if (seq[p] == seq[p + 1]) w.push_back(p);
    return Formal{static_cast<int>(distinct.size()) - 1, simplex_cell(delta, distinct), w};
}

Sub simplex_sub(SP delta, const std::vector<std::vector<int>>& tuples) {
    std::vector<Formal> cells;
    for (auto& t : tuples) {
        auto s = t;
        std::sort(s.begin(), s.end());
        cells.push_back(nd(static_cast<int>(s.size()) - 1, simplex_cell(*delta, s)));
    }
    return generated(delta, cells);
}

namespace {
std::vector<int> omit(int n, int j) {
    std::vector<int> v;
    for (int k = 0; k <= n; ++k)
        if (k != j) v.push_back(k);
    return v;
}
}  // namespace

Embedded boundary(int n) {
    if (n < 0) throw Error("boundary: n < 0");
    auto d = standard_simplex(n);
    std::vector<std::vector<int>> t;
    for (int j = 0; j <= n && n > 0; ++j) t.push_back(omit(n, j));
    return realize(simplex_sub(d, t));
}

Embedded horn(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw Error("horn: need n >= 1 and 0 <= i <= n");
    auto d = standard_simplex(n);
    std::vector<std::vector<int>> t;
    for (int j = 0; j <= n; ++j)
        if (j != i) t.push_back(omit(n, j));
    return realize(simplex_sub(d, t));
}

Embedded generalized_horn(int n, const std::set<int>& S) {
    if (S.size() < 2) throw Error("generalized_horn: |S| >= 2 required");
    for (int j : S)
        if (j < 0 || j > n) throw Error("generalized_horn: index out of range");
    auto d = standard_simplex(n);
    std::vector<std::vector<int>> t;
    for (int j : S) t.push_back(omit(n, j));
    return realize(simplex_sub(d, t));
}

Embedded spine(int n) {
    if (n < 1) throw Error("spine: n >= 1 required");
    auto d = standard_simplex(n);
    std::vector<std::vector<int>> t;
    for (int k = 0; k < n; ++k) t.push_back({k, k + 1});
    return realize(simplex_sub(d, t));
}

Embedded face_sub(int n, int j) {
    auto d = standard_simplex(n);
    return realize(simplex_sub(d, {omit(n, j)}));
}

SMap simplex_map(SP X, const Formal& s) {
    int m = s.dim();
    auto d = standard_simplex(m);
    SMap f{d, X, {}};
    f.img.resize(d->dims());
    for (int k = 0; k <= m; ++k)
        for (int c = 0; c < d->count(k); ++c) {
            const auto& vs = d->verts(k, c);
            Formal t = s;
            // drop absent vertices from the top so lower positions stay put
            for (int v = m; v >= 0; --v)
                if (!std::binary_search(vs.begin(), vs.end(), v)) t = face(*X, t, v);
            f.img[k].push_back(t);
        }
    return f;
}

SMap edge_map(SP X, const Formal& e) {
    if (e.dim() != 1) throw Error("edge_map: not an edge");
    return simplex_map(X, e);
}

SMap constant_map(SP A, SP X, int v) {
    SMap f{A, X, {}};
    f.img.resize(A->dims());
    for (int n = 0; n < A->dims(); ++n) f.img[n].assign(A->count(n), const_simplex(v, n));
    return f;
}

int FiniteCategory::id(int x) const {
    for (int k = 0; k < static_cast<int>(arrows.size()); ++k)
        if (arrows[k].id && arrows[k].src == x) return k;
    throw Error("category without identity on object " + objects[x]);
}

std::vector<int> FiniteCategory::hom(int x, int y) const {
    std::vector<int> h;
    for (int k = 0; k < static_cast<int>(arrows.size()); ++k)
        if (arrows[k].src == x && arrows[k].tgt == y) h.push_back(k);
    return h;
}

bool FiniteCategory::is_iso(int f) const {
    const auto& a = arrows[f];
    for (int g : hom(a.tgt, a.src))
        if (comp[g][f] == id(a.src) && comp[f][g] == id(a.tgt)) return true;
    return false;
}

std::vector<std::string> FiniteCategory::check() const {
    std::vector<std::string> diag;
    int m = static_cast<int>(arrows.size());
    for (int x = 0; x < static_cast<int>(objects.size()); ++x) {
        int c = 0;
        for (auto& a : arrows)
            if (a.id && a.src == x) ++c;
        if (c != 1) diag.push_back("object " + objects[x] + " needs exactly one identity");
    }
    if (!diag.empty()) return diag;
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            bool composable = arrows[f].tgt == arrows[g].src;
            int h = comp[g][f];
            if (composable && h < 0) diag.push_back("missing composite " + arrows[g].name + " o " + arrows[f].name);
            if (!composable && h >= 0) diag.push_back("composite of non-composable pair");
            if (composable && h >= 0 && (arrows[h].src != arrows[f].src || arrows[h].tgt != arrows[g].tgt))
                diag.push_back("composite " + arrows[g].name + " o " + arrows[f].name + " has wrong endpoints");
        }
    if (!diag.empty()) return diag;
    for (int f = 0; f < m; ++f) {
        if (comp[f][id(arrows[f].src)] != f || comp[id(arrows[f].tgt)][f] != f)
            diag.push_back("identity law fails at " + arrows[f].name);
    }
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (comp[g][f] < 0) continue;
            for (int h = 0; h < m; ++h) {
                if (comp[h][g] < 0) continue;
                if (comp[h][comp[g][f]] != comp[comp[h][g]][f])
                    diag.push_back("associativity fails at " + arrows[h].name + "," + arrows[g].name + "," +
                                   arrows[f].name);
            }
        }
    return diag;
}

FiniteCategory make_category(const std::vector<std::string>& objects,
                             const std::vector<FiniteCategory::Arrow>& arrows,
                             const std::map<std::pair<std::string, std::string>, std::string>& table) {
    FiniteCategory C;
    C.objects = objects;
    for (int x = 0; x < static_cast<int>(objects.size()); ++x) C.arrows.push_back({x, x, "id_" + objects[x], true});
    std::map<std::string, int> byname;
    for (auto& a : arrows) {
        if (byname.count(a.name)) throw Error("duplicate arrow " + a.name);
        byname[a.name] = static_cast<int>(C.arrows.size());
        C.arrows.push_back({a.src, a.tgt, a.name, false});
    }
    int m = static_cast<int>(C.arrows.size());
    C.comp.assign(m, std::vector<int>(m, -1));
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g) {
            if (C.arrows[f].tgt != C.arrows[g].src) continue;
            if (C.arrows[f].id) C.comp[g][f] = g;
            else if (C.arrows[g].id) C.comp[g][f] = f;
        }
    for (auto& [k, v] : table) {
        auto gi = byname.find(k.first), fi = byname.find(k.second);
        if (gi == byname.end() || fi == byname.end()) throw Error("composition table names an unknown arrow");
        int h;
        if (auto hi = byname.find(v); hi != byname.end()) h = hi->second;
        else if (v.rfind("id_", 0) == 0) {
            auto o = std::find(objects.begin(), objects.end(), v.substr(3));
            if (o == objects.end()) throw Error("unknown identity " + v);
            h = static_cast<int>(o - objects.begin());
        } else
            throw Error("composition table names an unknown arrow " + v);
        C.comp[gi->second][fi->second] = h;
    }
    return C;
}

FiniteCategory preorder(const std::vector<std::string>& objects, const std::vector<std::vector<bool>>& leq) {
    int n = static_cast<int>(objects.size());
    FiniteCategory C;
    C.objects = objects;
    C.thin = true;
    std::vector<std::vector<int>> arr(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x) {
        arr[x][x] = x;
        C.arrows.push_back({x, x, "id_" + objects[x], true});
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && leq[a][b]) {
                arr[a][b] = static_cast<int>(C.arrows.size());
                C.arrows.push_back({a, b, objects[a] + objects[b], false});
            }
    int m = static_cast<int>(C.arrows.size());
    C.comp.assign(m, std::vector<int>(m, -1));
    for (int f = 0; f < m; ++f)
        for (int g = 0; g < m; ++g)
            if (C.arrows[f].tgt == C.arrows[g].src) {
                int h = arr[C.arrows[f].src][C.arrows[g].tgt];
                if (h < 0) throw Error("preorder relation is not transitive");
                C.comp[g][f] = h;
            }
    return C;
}

FiniteCategory poset_n(int n) {
    std::vector<std::string> ob;
    std::vector<std::vector<bool>> leq(n + 1, std::vector<bool>(n + 1));
    for (int a = 0; a <= n; ++a) {
        ob.push_back(std::to_string(a));
        for (int b = a; b <= n; ++b) leq[a][b] = true;
    }
    return preorder(ob, leq);
}

FiniteCategory free_iso() { return preorder({"0", "1"}, {{true, true}, {true, true}}); }

namespace {
struct Chains {
    const FiniteCategory& C;
    std::vector<std::map<std::vector<int>, int>> index;

    // Formal simplex of a chain that may contain identities.
    Formal formal(const std::vector<int>& chain, int start) const {
        std::vector<int> core;
        Word w;
        for (int p = static_cast<int>(chain.size()); p >= 1; --p)
            if (C.arrows[chain[p - 1]].id) w.push_back(p - 1);
        for (int a : chain)
            if (!C.arrows[a].id) core.push_back(a);
        if (core.empty()) return Formal{0, start, w};
        int k = static_cast<int>(core.size());
        return Formal{k, index[k].at(core), w};
    }
};
}  // namespace

SP nerve(const FiniteCategory& C, int D) {
    auto diag = C.check();
    if (!diag.empty()) throw Error("nerve: inconsistent composition table: " + diag.front());
    if (D < 0) throw Error("nerve: negative truncation");
    SSet X;
    X.D = D;
    Chains ch{C, {}};
    ch.index.resize(D + 2);
    for (int x = 0; x < static_cast<int>(C.objects.size()); ++x) X.add(0, C.objects[x]);
    std::vector<std::vector<int>> layer = {{}};
    std::vector<int> nonid;
    for (int a = 0; a < static_cast<int>(C.arrows.size()); ++a)
        if (!C.arrows[a].id) nonid.push_back(a);
    for (int n = 1; n <= D + 1; ++n) {
        std::vector<std::vector<int>> next;
        for (auto& c : layer)
            for (int a : nonid)
                if (c.empty() || C.arrows[c.back()].tgt == C.arrows[a].src) {
                    auto d = c;
                    d.push_back(a);
                    next.push_back(d);
                }
        if (n == D + 1) {
            X.truncated = !next.empty();
            break;
        }
        for (auto& c : next) {
            std::vector<Formal> fs;
            for (int i = 0; i <= n; ++i) {
                std::vector<int> f;
                int start;
                if (i == 0) {
                    f.assign(c.begin() + 1, c.end());
                    start = C.arrows[c[0]].tgt;
                } else if (i == n) {
                    f.assign(c.begin(), c.end() - 1);
                    start = C.arrows[c[0]].src;
                } else {
                    f.assign(c.begin(), c.begin() + (i - 1));
                    f.push_back(C.comp[c[i]][c[i - 1]]);
                    f.insert(f.end(), c.begin() + i + 1, c.end());
                    start = C.arrows[c[0]].src;
                }
                fs.push_back(ch.formal(f, start));
            }
            std::string nm;
            if (C.thin) {
                nm = C.objects[C.arrows[c[0]].src];
                for (int a : c) nm += C.objects[C.arrows[a].tgt];
            } else {
                for (size_t p = 0; p < c.size(); ++p) nm += (p ? "|" : "") + C.arrows[c[p]].name;
            }
            if (n == 1) fs = {nd(0, C.arrows[c[0]].tgt), nd(0, C.arrows[c[0]].src)};
            ch.index[n][c] = X.add(n, nm, fs);
        }
        layer = std::move(next);
    }
    return share(std::move(X));
}

}  // namespace sset
