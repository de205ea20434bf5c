#include "sset/hcat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace sset {

CategoryPresentation presentation(const SSet& X) {
    CategoryPresentation p;
    for (int v = 0; v < X.count(0); ++v) p.objects.push_back(X.name(0, v));
    for (int k = 0; k < X.count(1); ++k) {
        auto& vs = X.verts(1, k);
        p.gens.push_back({X.name(1, k), vs[0], vs[1]});
    }
    auto gen = [](const Formal& f) { return f.degenerate() ? -1 : f.idx; };
    for (int k = 0; k < X.count(2); ++k) {
        auto& fs = X.faces(2, k);
        p.rels.push_back({gen(fs[0]), gen(fs[2]), gen(fs[1]), X.name(2, k)});
    }
    return p;
}

std::string word_name(const CategoryPresentation& p, const GenWord& w) {
    if (w.empty()) return "id";
    std::string s;
    // Written as a composite: last traversed first.
    for (auto it = w.rbegin(); it != w.rend(); ++it) s += (s.empty() ? "" : "*") + p.gens[*it].name;
    return s;
}

namespace {

bool word_less(const GenWord& a, const GenWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Closure {
    std::vector<GenWord> words;
    std::vector<int> parent;
    int find(int a) { return parent[a] == a ? a : parent[a] = find(parent[a]); }
};

std::vector<std::vector<GenWord>> classes_at(const CategoryPresentation& p, int x, int y, int depth) {
    int V = static_cast<int>(p.objects.size());
    std::vector<std::vector<int>> out(V);
    for (int g = 0; g < static_cast<int>(p.gens.size()); ++g) out[p.gens[g].src].push_back(g);
    Closure C;
    std::map<GenWord, int> id;
    GenWord cur;
    std::function<void(int)> walk = [&](int v) {
        if (v == y) {
            id.emplace(cur, static_cast<int>(C.words.size()));
            C.words.push_back(cur);
        }
        if (static_cast<int>(cur.size()) == depth) return;
        for (int g : out[v]) {
            cur.push_back(g);
            walk(p.gens[g].tgt);
            cur.pop_back();
        }
    };
    walk(x);
    C.parent.resize(C.words.size());
    std::iota(C.parent.begin(), C.parent.end(), 0);

    std::vector<std::pair<GenWord, GenWord>> eqs;
    for (auto& r : p.rels) {
        GenWord L, R;
        if (r.f >= 0) L.push_back(r.f);
        if (r.g >= 0) L.push_back(r.g);
        if (r.h >= 0) R.push_back(r.h);
        if (L == R) continue;
        eqs.push_back({L, R});
        eqs.push_back({R, L});
    }
    for (int w = 0; w < static_cast<int>(C.words.size()); ++w) {
        const GenWord word = C.words[w];
        for (auto& [from, to] : eqs) {
            if (static_cast<int>(word.size() - from.size() + to.size()) > depth) continue;
            for (size_t pos = 0; pos + from.size() <= word.size(); ++pos) {
                if (!std::equal(from.begin(), from.end(), word.begin() + pos)) continue;
                if (from.empty()) {
                    // Inserting a loop needs the path to sit at its base point.
                    int at = pos == 0 ? x : p.gens[word[pos - 1]].tgt;
                    if (p.gens[to.front()].src != at) continue;
                }
                GenWord nw(word.begin(), word.begin() + pos);
                nw.insert(nw.end(), to.begin(), to.end());
                nw.insert(nw.end(), word.begin() + pos + from.size(), word.end());
                auto it = id.find(nw);
                if (it == id.end()) continue;
                int a = C.find(w), b = C.find(it->second);
                if (a != b) C.parent[a] = b;
            }
        }
    }
    std::map<int, std::vector<GenWord>> groups;
    for (int w = 0; w < static_cast<int>(C.words.size()); ++w) groups[C.find(w)].push_back(C.words[w]);
    std::vector<std::vector<GenWord>> cls;
    for (auto& [_, ws] : groups) {
        std::sort(ws.begin(), ws.end(), word_less);
        cls.push_back(ws);
    }
    std::sort(cls.begin(), cls.end(), [](auto& a, auto& b) { return word_less(a.front(), b.front()); });
    return cls;
}

}  // namespace

HomClasses bounded_hom(const CategoryPresentation& p, int x, int y, int depth) {
    if (depth < 0) throw Error("bounded_hom: negative depth");
    HomClasses H;
    H.classes = classes_at(p, x, y, depth);
    if (depth == 0) return H;
    // Heuristic: nothing new at the last length, and each class has room for
    // one relation insertion above its shortest word. Rewrites that need a
    // longer detour can still merge classes later.
    auto below = classes_at(p, x, y, depth - 1);
    H.complete = below.size() == H.classes.size();
    for (auto& c : H.classes)
        if (static_cast<int>(c.front().size()) + 2 > depth) H.complete = false;
    return H;
}

std::string preiso_name(PreIso v) {
    switch (v) {
        case PreIso::Certified: return "certified-pre-iso";
        case PreIso::Refuted: return "refuted";
        case PreIso::Exhausted: return "exhausted";
    }
    return "?";
}

PreIsoVerdict preiso_search(SP X, const Formal& e, int cell_bound) {
    if (cell_bound < 1) throw Error("preiso_search: bound must be >= 1");
    PreIsoVerdict v;
    SMap em = edge_map(X, e);
    SimplexIndex idx(X, 2);
    for (auto& T : enumerate_inverting_tilings(cell_bound)) {
        ++v.tilings_tried;
        auto L = extend(T.edge(), em, &idx);
        if (L.status == LiftStatus::Lift) {
            v.verdict = PreIso::Certified;
            v.tiling = T.name;
            v.map = L.map;
            return v;
        }
    }
    return v;
}

namespace {

int arrow_of(const SSet& X, const FunctorData& F, const Formal& e) {
    const FiniteCategory& C = F.target;
    if (e.degenerate()) {
        auto it = F.objects.find(X.name(0, e.idx));
        if (it == F.objects.end()) throw NotAFunctor("vertex " + X.name(0, e.idx) + " has no image");
        return C.id(it->second);
    }
    auto it = F.arrows.find(X.name(1, e.idx));
    if (it == F.arrows.end()) throw NotAFunctor("edge " + X.name(1, e.idx) + " has no image");
    if (it->second < 0 || it->second >= static_cast<int>(C.arrows.size()))
        throw NotAFunctor("edge " + X.name(1, e.idx) + " maps outside the category");
    return it->second;
}

}  // namespace

bool noniso_functor_check(const SSet& X, const FunctorData& F, const Formal& e) {
    const FiniteCategory& C = F.target;
    auto bad = C.check();
    if (!bad.empty()) throw Error("functor target is not a category: " + bad.front());
    for (int v = 0; v < X.count(0); ++v) {
        auto it = F.objects.find(X.name(0, v));
        if (it == F.objects.end()) throw NotAFunctor("vertex " + X.name(0, v) + " has no image");
        if (it->second < 0 || it->second >= static_cast<int>(C.objects.size()))
            throw NotAFunctor("vertex " + X.name(0, v) + " maps outside the category");
    }
    for (int k = 0; k < X.count(1); ++k) {
        int a = arrow_of(X, F, nd(1, k));
        auto& vs = X.verts(1, k);
        if (C.arrows[a].src != F.objects.at(X.name(0, vs[0])) || C.arrows[a].tgt != F.objects.at(X.name(0, vs[1])))
            throw NotAFunctor("edge " + X.name(1, k) + " has mismatched endpoints");
    }
    for (int k = 0; k < X.count(2); ++k) {
        auto& fs = X.faces(2, k);
        int g = arrow_of(X, F, fs[0]), h = arrow_of(X, F, fs[1]), f = arrow_of(X, F, fs[2]);
        if (C.comp[g][f] != h) throw NotAFunctor("2-cell " + X.name(2, k) + " is not respected");
    }
    return !C.is_iso(arrow_of(X, F, e));
}

std::optional<FunctorData> find_refuting_functor(const SSet& X, const FiniteCategory& C, const Formal& e, size_t cap) {
    int V = X.count(0), E = X.count(1);
    std::vector<int> ob(V, -1), ar(E, -1);
    // 2-cells become checkable once their last non-degenerate edge is set.
    std::vector<std::vector<int>> due(E + 1);
    for (int k = 0; k < X.count(2); ++k) {
        int last = -1;
        for (auto& f : X.faces(2, k))
            if (!f.degenerate()) last = std::max(last, f.idx);
        due[last + 1].push_back(k);
    }
    auto arrow = [&](const Formal& f) { return f.degenerate() ? C.id(ob[f.idx]) : ar[f.idx]; };
    auto cells_ok = [&](int slot) {
        for (int k : due[slot]) {
            auto& fs = X.faces(2, k);
            if (C.comp[arrow(fs[0])][arrow(fs[2])] != arrow(fs[1])) return false;
        }
        return true;
    };
    size_t visited = 0;
    std::optional<FunctorData> found;
    std::function<bool(int)> edges = [&](int k) -> bool {
        if (++visited > cap) return true;
        if (k == E) {
            if (C.is_iso(arrow(e))) return false;
            FunctorData F;
            F.target = C;
            for (int v = 0; v < V; ++v) F.objects[X.name(0, v)] = ob[v];
            for (int q = 0; q < E; ++q) F.arrows[X.name(1, q)] = ar[q];
            found = F;
            return true;
        }
        auto& vs = X.verts(1, k);
        for (int a : C.hom(ob[vs[0]], ob[vs[1]])) {
            ar[k] = a;
            if (cells_ok(k + 1) && edges(k + 1)) return true;
        }
        ar[k] = -1;
        return false;
    };
    std::function<bool(int)> objs = [&](int v) -> bool {
        if (v == V) return cells_ok(0) && edges(0);
        for (int o = 0; o < static_cast<int>(C.objects.size()); ++o) {
            ob[v] = o;
            if (objs(v + 1)) return true;
        }
        return false;
    };
    objs(0);
    if (visited > cap) throw Error("find_refuting_functor: cap exceeded");
    return found;
}

std::optional<EdgeWitness> almost_edge_search(SP X, const Formal& e, const SMap& iota, int size_bound) {
    if (size_bound < 1) throw Error("almost_edge_search: bound must be >= 1");
    return find_edge_witness(X, e, iota, size_bound);
}

}  // namespace sset
