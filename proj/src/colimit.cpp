#include "sset/colimit.hpp"

#include <algorithm>

namespace sset {

namespace {
void choose(const std::vector<int>& pool, int k, size_t start, Word& cur, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == k) {
        Word w(cur.rbegin(), cur.rend());
        out.push_back(w);
        return;
    }
    for (size_t p = start; p < pool.size(); ++p) {
        cur.push_back(pool[p]);
        choose(pool, k, p + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Word> choose(const std::vector<int>& pool, int k) {
    std::vector<Word> out;
    Word cur;
    if (k >= 0 && k <= static_cast<int>(pool.size())) choose(pool, k, 0, cur, out);
    return out;
}

Word reindex_without(const Word& w, const Word& common) {
    Word out;
    for (int r : w) {
        if (std::find(common.begin(), common.end(), r) != common.end()) continue;
        int c = 0;
        for (int x : common)
            if (x < r) ++c;
        out.push_back(r - c);
    }
    return out;
}
}  // namespace

std::optional<Formal> Product::pair(const Formal& x, const Formal& y) const {
    if (x.dim() != y.dim()) throw Error("product pair of unequal dimensions");
    Word common;
    for (int r : x.word)
        if (std::find(y.word.begin(), y.word.end(), r) != y.word.end()) common.push_back(r);
    Formal xr{x.bdim, x.idx, reindex_without(x.word, common)};
    Formal yr{y.bdim, y.idx, reindex_without(y.word, common)};
    auto it = index.find({xr, yr});
    int n = xr.dim();
    if (it == index.end()) {
        if (n > obj->D) return std::nullopt;
        throw Error("product pair not found");
    }
    return Formal{n, it->second, common};
}

Product product(SP X, SP Y, int D) {
    int Dout = D;
    if (X->truncated) Dout = std::min(Dout, X->D);
    if (Y->truncated) Dout = std::min(Dout, Y->D);
    SSet P;
    P.D = Dout;
    P.truncated = X->truncated || Y->truncated ||
                  (X->top() >= 0 && Y->top() >= 0 && X->top() + Y->top() > Dout);
    Product R;
    R.X = X;
    R.Y = Y;
    for (int n = 0; n <= Dout; ++n) {
        std::vector<int> pos;
        for (int p = 0; p < n; ++p) pos.push_back(p);
        for (int p = 0; p <= n && p < X->dims(); ++p)
            for (int q = 0; q <= n && q < Y->dims(); ++q) {
                if (p + q < n) continue;
                auto rxs = choose(pos, n - p);
                for (int xi = 0; xi < X->count(p); ++xi)
                    for (int yi = 0; yi < Y->count(q); ++yi)
                        for (auto& rx : rxs) {
                            std::vector<int> rest;
                            for (int v : pos)
                                if (std::find(rx.begin(), rx.end(), v) == rx.end()) rest.push_back(v);
                            for (auto& ry : choose(rest, n - q)) {
                                Formal fx{p, xi, rx}, fy{q, yi, ry};
                                std::vector<Formal> fs;
                                if (n > 0) {
                                    for (int i = 0; i <= n; ++i) {
                                        Formal a = face(*X, fx, i), b = face(*Y, fy, i);
                                        Word common;
                                        for (int r : a.word)
                                            if (std::find(b.word.begin(), b.word.end(), r) != b.word.end())
                                                common.push_back(r);
                                        Formal ar{a.bdim, a.idx, reindex_without(a.word, common)};
                                        Formal br{b.bdim, b.idx, reindex_without(b.word, common)};
                                        fs.push_back(Formal{ar.dim(), R.index.at({ar, br}), common});
                                    }
                                }
                                int k = P.add(n, "(" + X->fname(fx) + "," + Y->fname(fy) + ")", fs);
                                R.index[{fx, fy}] = k;
                                if (static_cast<int>(R.comp.size()) <= n) R.comp.resize(n + 1);
                                R.comp[n].push_back({fx, fy});
                            }
                        }
            }
    }
    R.obj = share(std::move(P));
    R.p1 = SMap{R.obj, X, {}};
    R.p2 = SMap{R.obj, Y, {}};
    R.p1.img.resize(R.obj->dims());
    R.p2.img.resize(R.obj->dims());
    for (int n = 0; n < R.obj->dims(); ++n)
        for (auto& [a, b] : R.comp[n]) {
            R.p1.img[n].push_back(a);
            R.p2.img[n].push_back(b);
        }
    return R;
}

Sub product_sub(const Product& P, const Sub& a, const Sub& b) {
    Sub s = empty_sub(P.obj);
    for (int n = 0; n < P.obj->dims(); ++n)
        for (int k = 0; k < P.obj->count(n); ++k) {
            auto& [x, y] = P.comp[n][k];
            if (a.has(x) && b.has(y)) s.in[n][k] = 1;
        }
    return s;
}

Pushout pushout(const SMap& f, const SMap& g, const std::string& tag) {
    if (f.dom->counts() != g.dom->counts()) throw Error("pushout: legs have different domains");
    if (!validate_map(g).empty() || !is_mono(g)) throw Error("pushout: second leg must be an inclusion");
    const SSet& X = *f.cod;
    const SSet& B = *g.cod;
    int Dout;
    if (X.truncated && B.truncated) Dout = std::min(X.D, B.D);
    else if (X.truncated) Dout = X.D;
    else if (B.truncated) Dout = B.D;
    else Dout = std::max(X.D, B.D);

    std::vector<std::vector<int>> pre(B.dims());
    for (int n = 0; n < B.dims(); ++n) pre[n].assign(B.count(n), -1);
    for (int n = 0; n < static_cast<int>(g.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(g.img[n].size()); ++k) pre[n][g.img[n][k].idx] = k;

    SSet P;
    P.D = Dout;
    P.truncated = X.truncated || B.truncated;
    Pushout R;
    R.X = f.cod;
    R.B = g.cod;
    int top = std::min(Dout, std::max(X.dims(), B.dims()) - 1);
    R.origin.resize(top + 1);
    for (int n = 0; n <= top && n < X.dims(); ++n)
        for (int k = 0; k < X.count(n); ++k) {
            P.add(n, X.name(n, k), n ? X.faces(n, k) : std::vector<Formal>{});
            R.origin[n].push_back({false, k});
        }
    std::vector<std::vector<int>> fresh(B.dims());
    for (int n = 0; n < B.dims(); ++n) {
        fresh[n].assign(B.count(n), -1);
        if (n > top) continue;
        for (int k = 0; k < B.count(n); ++k) {
            if (pre[n][k] >= 0) continue;
            std::vector<Formal> fs;
            if (n > 0)
                for (auto& F : B.faces(n, k)) {
                    int a = pre[F.bdim][F.idx];
                    if (a >= 0) fs.push_back(apply_word(F.word, f.img[F.bdim][a]));
                    else fs.push_back(Formal{F.bdim, fresh[F.bdim][F.idx], F.word});
                }
            std::string nm = tag.empty() ? B.name(n, k) : tag + ":" + B.name(n, k);
            while (P.find(n, nm)) nm += "'";
            fresh[n][k] = P.add(n, nm, fs);
            R.origin[n].push_back({true, k});
        }
    }
    R.obj = share(std::move(P));
    R.inX = SMap{f.cod, R.obj, {}};
    R.inX.img.resize(X.dims());
    for (int n = 0; n < X.dims() && n <= top; ++n)
        for (int k = 0; k < X.count(n); ++k) R.inX.img[n].push_back(nd(n, k));
    R.inB = SMap{g.cod, R.obj, {}};
    R.inB.img.resize(B.dims());
    for (int n = 0; n < B.dims() && n <= top; ++n)
        for (int k = 0; k < B.count(n); ++k) {
            int a = pre[n][k];
            R.inB.img[n].push_back(a >= 0 ? f.img[n][a] : nd(n, fresh[n][k]));
        }
    return R;
}

SMap Pushout::induced(const SMap& hX, const SMap& hB) const {
    SMap h{obj, hX.cod, {}};
    h.img.resize(obj->dims());
    for (int n = 0; n < obj->dims(); ++n)
        for (auto [fromB, k] : origin[n]) h.img[n].push_back(fromB ? hB.img[n][k] : hX.img[n][k]);
    return h;
}

Glued glue_edge(SP A, const Formal& e, const SMap& x, const std::string& tag) {
    if (e.dim() != 1 || e.bdim >= A->dims() || e.idx >= A->count(e.bdim)) throw Error("glue_edge: not an edge of A");
    SMap em = edge_map(A, e);
    if (is_mono(x)) {
        auto po = pushout(em, x, tag);
        return {po.obj, po.inX, po.inB};
    }
    if (is_mono(em)) {
        auto po = pushout(x, em, tag);
        return {po.obj, po.inB, po.inX};
    }
    throw Error("glue_edge: neither the edge nor the attaching map is an inclusion");
}

Embedded skeleton(SP X, int k) {
    Sub s = empty_sub(X);
    for (int n = 0; n <= k && n < X->dims(); ++n) std::fill(s.in[n].begin(), s.in[n].end(), 1);
    return realize(s);
}

Embedded zero_skeleton(SP X) { return skeleton(X, 0); }

Cylinder pointwise_cylinder(const SMap& iota, SP X) {
    Cylinder C;
    C.X = X;
    C.I = iota.cod;
    C.iota = iota;
    SP d1 = iota.dom;
    C.full = product(d1, X, X->truncated ? X->D : X->D + 1);
    C.sk0 = zero_skeleton(X);
    C.side = product(C.I, C.sk0.obj, std::max(C.I->D, 1));
    Product small = product(d1, C.sk0.obj, 1);
    SMap f{small.obj, C.side.obj, {}}, g{small.obj, C.full.obj, {}};
    f.img.resize(small.obj->dims());
    g.img.resize(small.obj->dims());
    for (int n = 0; n < small.obj->dims(); ++n)
        for (auto& [t, v] : small.comp[n]) {
            auto a = C.side.pair(iota.apply(t), v);
            auto b = C.full.pair(t, C.sk0.incl.apply(v));
            if (!a || !b) throw Error("pointwise_cylinder: truncation below dimension 1");
            f.img[n].push_back(*a);
            g.img[n].push_back(*b);
        }
    C.po = pushout(f, g);
    C.obj = C.po.obj;
    return C;
}

std::optional<Formal> Cylinder::cell(const Formal& t, const Formal& x) const {
    auto q = full.pair(t, x);
    if (!q) return std::nullopt;
    if (q->bdim >= static_cast<int>(po.inB.img.size()) || po.inB.img[q->bdim].empty()) return std::nullopt;
    return po.inB.apply(*q);
}

Sub Cylinder::end(int eps) const {
    std::vector<Formal> cells;
    for (int n = 0; n < X->dims(); ++n)
        for (int k = 0; k < X->count(n); ++k)
            if (auto c = cell(const_simplex(eps, n), nd(n, k))) cells.push_back(Formal{c->bdim, c->idx, {}});
    return generated(obj, cells);
}

Sub Cylinder::over(const Sub& a) const {
    std::vector<Formal> cells;
    for (int n = 0; n < full.obj->dims() && n < static_cast<int>(po.inB.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(po.inB.img[n].size()); ++k)
            if (a.has(full.comp[n][k].second)) {
                auto y = po.inB.img[n][k];
                cells.push_back(Formal{y.bdim, y.idx, {}});
            }
    for (int n = 0; n < side.obj->dims() && n < static_cast<int>(po.inX.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(po.inX.img[n].size()); ++k) {
            Formal v = sk0.incl.apply(side.comp[n][k].second);
            if (a.has(v)) cells.push_back(po.inX.img[n][k]);
        }
    return generated(obj, cells);
}

SMap Cylinder::end_map(int eps) const {
    SMap m{X, obj, {}};
    m.img.resize(X->dims());
    for (int n = 0; n < X->dims(); ++n)
        for (int k = 0; k < X->count(n); ++k) {
            auto c = cell(const_simplex(eps, n), nd(n, k));
            if (!c) break;
            m.img[n].push_back(*c);
        }
    return m;
}

SMap Cylinder::chi(int v) const {
    SMap m{I, obj, {}};
    m.img.resize(I->dims());
    for (int n = 0; n < I->dims(); ++n)
        for (int k = 0; k < I->count(n); ++k) {
            auto q = side.pair(nd(n, k), const_simplex(v, n));
            m.img[n].push_back(po.inX.apply(*q));
        }
    return m;
}

SMap Cylinder::projection() const {
    SMap hX{side.obj, X, {}};
    hX.img.resize(side.obj->dims());
    for (int n = 0; n < side.obj->dims(); ++n)
        for (auto& pr : side.comp[n]) hX.img[n].push_back(sk0.incl.apply(pr.second));
    return po.induced(hX, full.p2);
}

}  // namespace sset

namespace sset {

SMap induced_cover(SP obj, SP target, const std::vector<std::pair<SMap, SMap>>& legs) {
    SMap r{obj, target, {}};
    r.img.resize(obj->dims());
    std::vector<std::vector<char>> done(obj->dims());
    for (int n = 0; n < obj->dims(); ++n) {
        r.img[n].resize(obj->count(n));
        done[n].assign(obj->count(n), 0);
    }
    for (auto& [in, out] : legs)
        for (int n = 0; n < static_cast<int>(in.img.size()); ++n)
            for (int k = 0; k < static_cast<int>(in.img[n].size()); ++k) {
                const Formal& f = in.img[n][k];
                if (f.degenerate() || done[n][f.idx]) continue;
                if (n >= static_cast<int>(out.img.size()) || k >= static_cast<int>(out.img[n].size())) continue;
                r.img[n][f.idx] = out.img[n][k];
                done[n][f.idx] = 1;
            }
    for (int n = 0; n < obj->dims(); ++n) {
        bool full = std::all_of(done[n].begin(), done[n].end(), [](char c) { return c != 0; });
        if (full) continue;
        if (target->truncated && n > target->D) {
            r.img[n].clear();
            continue;
        }
        for (int k = 0; k < obj->count(n); ++k)
            if (!done[n][k]) throw Error("induced_cover: cell " + obj->name(n, k) + " is not covered");
    }
    auto diag = validate_map(r);
    if (!diag.empty()) throw Error("induced_cover: legs disagree: " + diag.front());
    return r;
}

}  // namespace sset
