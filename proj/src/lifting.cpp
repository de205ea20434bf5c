#include "sset/lifting.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sset {

SimplexIndex::SimplexIndex(SP X, int maxdim) : X_(std::move(X)) {
    sims_.resize(std::max(maxdim, 0) + 1);
    byFaces_.resize(sims_.size());
    for (int n = 0; n <= maxdim; ++n) {
        if (X_->truncated && n > X_->D) continue;
        sims_[n] = all_simplices(*X_, n);
        if (n == 0) continue;
        for (int s = 0; s < static_cast<int>(sims_[n].size()); ++s) {
            std::vector<Formal> fs;
            for (int i = 0; i <= n; ++i) fs.push_back(face(*X_, sims_[n][s], i));
            byFaces_[n][fs].push_back(s);
        }
    }
}

const std::vector<int>& SimplexIndex::matching(int n, const std::vector<Formal>& fs) const {
    auto it = byFaces_[n].find(fs);
    return it == byFaces_[n].end() ? none_ : it->second;
}

bool undecidable(const SSet& B, const Assignment& pre, const SSet& X) {
    if (!X.truncated) return false;
    for (int n = X.D + 1; n < B.dims(); ++n)
        for (int k = 0; k < B.count(n); ++k)
            if (n >= static_cast<int>(pre.size()) || !pre[n][k]) return true;
    return false;
}

namespace {

struct Search {
    const SSet& B;
    const SimplexIndex& idx;
    Assignment cur;
    std::vector<Formal> order;                 // missing cells
    std::vector<std::vector<int>> checkAt;     // cells to test once position p is set
    std::vector<int> allVerts;
    const std::function<bool(const SMap&)>& visit;
    SP Bp;
    size_t found = 0;

    std::vector<Formal> tuple(int n, int k) const {
        std::vector<Formal> fs;
        for (auto& F : B.faces(n, k)) fs.push_back(apply_word(F.word, *cur[F.bdim][F.idx]));
        return fs;
    }
    const std::vector<int>& candidates(int n, int k) const {
        if (n == 0) return allVerts;
        return idx.matching(n, tuple(n, k));
    }
    // A missing cell needs candidates; a pre-assigned one must match its faces.
    bool viable(int n, int k) const {
        if (!cur[n][k]) return !candidates(n, k).empty();
        const Formal& y = *cur[n][k];
        auto fs = tuple(n, k);
        for (int i = 0; i <= n; ++i)
            if (face(*idx.target(), y, i) != fs[i]) return false;
        return true;
    }

    bool go(size_t p) {
        if (p == order.size()) {
            SMap m{Bp, idx.target(), {}};
            m.img.resize(B.dims());
            for (int n = 0; n < B.dims(); ++n)
                for (int k = 0; k < B.count(n); ++k) m.img[n].push_back(*cur[n][k]);
            ++found;
            return visit(m);
        }
        int n = order[p].bdim, k = order[p].idx;
        std::vector<int> cands = candidates(n, k);
        for (int c : cands) {
            cur[n][k] = idx.all(n)[c];
            bool ok = true;
            for (int q : checkAt[p]) {
                int qn = q / (1 << 20), qk = q % (1 << 20);
                if (!viable(qn, qk)) {
                    ok = false;
                    break;
                }
            }
            if (ok && !go(p + 1)) {
                cur[n][k].reset();
                return false;
            }
        }
        cur[n][k].reset();
        return true;
    }
};

}  // namespace

size_t solve_assignments(SP Bp, const SimplexIndex& idx, const Assignment& pre,
                         const std::function<bool(const SMap&)>& visit) {
    const SSet& B = *Bp;
    Search s{B, idx, {}, {}, {}, {}, visit, Bp};
    s.cur.resize(B.dims());
    for (int n = 0; n < B.dims(); ++n) {
        s.cur[n].resize(B.count(n));
        for (int k = 0; k < B.count(n); ++k)
            if (n < static_cast<int>(pre.size()) && k < static_cast<int>(pre[n].size())) s.cur[n][k] = pre[n][k];
    }
    for (int n = 0; n < B.dims(); ++n)
        for (int k = 0; k < B.count(n); ++k)
            if (!s.cur[n][k]) {
                if (n > idx.maxdim()) throw Error("simplex index too shallow for the search");
                s.order.push_back(nd(n, k));
            }
    std::stable_sort(s.order.begin(), s.order.end(), [&](const Formal& a, const Formal& b) {
        if (a.bdim != b.bdim) return a.bdim < b.bdim;
        return B.name(a.bdim, a.idx) < B.name(b.bdim, b.idx);
    });
    std::vector<std::vector<int>> pos(B.dims());
    for (int n = 0; n < B.dims(); ++n) pos[n].assign(B.count(n), -1);
    for (size_t p = 0; p < s.order.size(); ++p) pos[s.order[p].bdim][s.order[p].idx] = static_cast<int>(p);
    for (int v = 0; v < static_cast<int>(idx.all(0).size()); ++v) s.allVerts.push_back(v);

    s.checkAt.resize(s.order.size());
    std::vector<std::pair<int, int>> upfront;
    for (int n = 1; n < B.dims(); ++n)
        for (int k = 0; k < B.count(n); ++k) {
            int last = -1;
            for (auto& F : B.faces(n, k)) last = std::max(last, pos[F.bdim][F.idx]);
            if (last < 0) upfront.push_back({n, k});
            else s.checkAt[last].push_back(n * (1 << 20) + k);
        }
    for (auto [n, k] : upfront)
        if (!s.viable(n, k)) return 0;
    for (int k = 0; k < B.count(0); ++k)
        if (!s.cur[0][k] && s.allVerts.empty()) return 0;
    s.go(0);
    return s.found;
}

LiftResult extend(const SMap& incl, const SMap& f, const SimplexIndex* idx) {
    if (!is_mono(incl)) throw Error("extend: not an inclusion");
    if (incl.dom->counts() != f.dom->counts()) throw Error("extend: map and inclusion have different domains");
    auto diag = validate_map(f);
    if (!diag.empty()) throw Error("extend: invalid map: " + diag.front());
    SP B = incl.cod;
    SP X = f.cod;
    Assignment pre(B->dims());
    for (int n = 0; n < B->dims(); ++n) pre[n].resize(B->count(n));
    for (int n = 0; n < static_cast<int>(incl.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(incl.img[n].size()); ++k) {
            if (n >= static_cast<int>(f.img.size()) || k >= static_cast<int>(f.img[n].size()))
                throw Error("extend: map undefined on part of the domain");
            pre[n][incl.img[n][k].idx] = f.img[n][k];
        }
    LiftResult r;
    r.bounded = B->truncated;
    if (undecidable(*B, pre, *X)) {
        r.status = LiftStatus::Undecidable;
        return r;
    }
    std::optional<SimplexIndex> local;
    if (!idx || idx->maxdim() < B->top()) {
        local.emplace(X, std::max(B->top(), 0));
        idx = &*local;
    }
    solve_assignments(B, *idx, pre, [&](const SMap& m) {
        r.map = m;
        return false;
    });
    if (!r.map) {
        r.status = LiftStatus::NoLift;
        return r;
    }
    if (!validate_map(*r.map).empty() || !maps_equal(compose(*r.map, incl), f))
        throw Error("extend: solver returned an invalid extension");
    r.status = LiftStatus::Lift;
    return r;
}

size_t count_extensions(const SMap& incl, const SMap& f, size_t cap) {
    if (!is_mono(incl)) throw Error("count_extensions: not an inclusion");
    SP B = incl.cod;
    Assignment pre(B->dims());
    for (int n = 0; n < B->dims(); ++n) pre[n].resize(B->count(n));
    for (int n = 0; n < static_cast<int>(incl.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(incl.img[n].size()); ++k) pre[n][incl.img[n][k].idx] = f.img[n][k];
    if (undecidable(*B, pre, *f.cod)) throw Error("count_extensions: undecidable at this truncation");
    SimplexIndex idx(f.cod, std::max(B->top(), 0));
    size_t n = 0;
    solve_assignments(B, idx, pre, [&](const SMap&) { return ++n < cap; });
    return n;
}

MapList enumerate_maps(SP A, SP X, size_t cap, const SimplexIndex* idx) {
    MapList out;
    Assignment pre(A->dims());
    for (int n = 0; n < A->dims(); ++n) pre[n].resize(A->count(n));
    if (undecidable(*A, pre, *X)) {
        out.undecidable = true;
        return out;
    }
    std::optional<SimplexIndex> local;
    if (!idx || idx->maxdim() < A->top()) {
        local.emplace(X, std::max(A->top(), 0));
        idx = &*local;
    }
    solve_assignments(A, *idx, pre, [&](const SMap& m) {
        if (out.maps.size() == cap) {
            out.cap_exceeded = true;
            return false;
        }
        out.maps.push_back(m);
        return true;
    });
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Undecidable: return "undecidable";
        case Verdict::CapExceeded: return "cap-exceeded";
    }
    return "?";
}

Verdict FibrancyReport::overall() const {
    bool und = false, cap = false;
    for (auto& e : entries) {
        if (e.verdict == Verdict::Fail) return Verdict::Fail;
        und |= e.verdict == Verdict::Undecidable;
        cap |= e.verdict == Verdict::CapExceeded;
    }
    if (und) return Verdict::Undecidable;
    if (cap) return Verdict::CapExceeded;
    return Verdict::Pass;
}

namespace {

struct RlpPlan {
    std::unique_ptr<SimplexIndex> idx;
    std::vector<FibrancyEntry> entries;
    std::vector<MapList> maps;
    std::vector<std::pair<int, int>> tasks;  // (entry, map) in canonical order
};

RlpPlan plan(SP X, const std::vector<NamedInclusion>& family, const RlpOptions& opt) {
    RlpPlan p;
    int maxdim = 0;
    for (auto& e : family) maxdim = std::max(maxdim, e.incl.cod->top());
    p.idx = std::make_unique<SimplexIndex>(X, maxdim);
    for (int e = 0; e < static_cast<int>(family.size()); ++e) {
        const auto& inc = family[e];
        FibrancyEntry fe;
        fe.name = inc.name;
        fe.bounded = inc.incl.cod->truncated;
        MapList ml;
        if (X->truncated && inc.incl.cod->top() > X->D) {
            fe.verdict = Verdict::Undecidable;
        } else {
            ml = enumerate_maps(inc.incl.dom, X, opt.cap, p.idx.get());
            if (ml.undecidable) fe.verdict = Verdict::Undecidable;
            for (int m = 0; m < static_cast<int>(ml.maps.size()) && !ml.undecidable; ++m) p.tasks.push_back({e, m});
        }
        p.entries.push_back(fe);
        p.maps.push_back(std::move(ml));
    }
    return p;
}

FibrancyReport merge(RlpPlan& p, const std::vector<LiftStatus>& res) {
    FibrancyReport r;
    for (size_t t = 0; t < p.tasks.size(); ++t) {
        auto [e, m] = p.tasks[t];
        auto& fe = p.entries[e];
        ++fe.maps_checked;
        if (res[t] == LiftStatus::NoLift && !fe.counterexample) {
            fe.verdict = Verdict::Fail;
            fe.counterexample = p.maps[e].maps[m];
        } else if (res[t] == LiftStatus::Undecidable && fe.verdict == Verdict::Pass) {
            fe.verdict = Verdict::Undecidable;
        }
    }
    for (size_t e = 0; e < p.entries.size(); ++e)
        if (p.entries[e].verdict == Verdict::Pass && p.maps[e].cap_exceeded) p.entries[e].verdict = Verdict::CapExceeded;
    r.entries = std::move(p.entries);
    return r;
}

}  // namespace

FibrancyReport has_rlp(SP X, const std::vector<NamedInclusion>& family, const RlpOptions& opt) {
    RlpPlan p = plan(X, family, opt);
    std::vector<LiftStatus> res(p.tasks.size());
    std::vector<std::string> errors(p.tasks.size());
    const long n = static_cast<long>(p.tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < n; ++t) {
        auto [e, m] = p.tasks[t];
        try {
            res[t] = extend(family[e].incl, p.maps[e].maps[m], p.idx.get()).status;
        } catch (const std::exception& ex) {
            errors[t] = ex.what();
        }
    }
    for (auto& s : errors)
        if (!s.empty()) throw Error(s);
    return merge(p, res);
}

FibrancyReport has_rlp_serial(SP X, const std::vector<NamedInclusion>& family, const RlpOptions& opt) {
    RlpPlan p = plan(X, family, opt);
    std::vector<LiftStatus> res(p.tasks.size());
    for (size_t t = 0; t < p.tasks.size(); ++t) {
        auto [e, m] = p.tasks[t];
        res[t] = extend(family[e].incl, p.maps[e].maps[m], p.idx.get()).status;
    }
    return merge(p, res);
}

std::optional<SMap> homotopy_step(const Cylinder& cyl, const SMap& f, const SMap& g) {
    SP B = cyl.obj;
    Assignment pre(B->dims());
    for (int n = 0; n < B->dims(); ++n) pre[n].resize(B->count(n));
    for (int eps = 0; eps < 2; ++eps) {
        SMap e = cyl.end_map(eps);
        const SMap& h = eps ? g : f;
        for (int n = 0; n < static_cast<int>(e.img.size()); ++n)
            for (int k = 0; k < static_cast<int>(e.img[n].size()); ++k) pre[n][e.img[n][k].idx] = h.img[n][k];
    }
    if (undecidable(*B, pre, *f.cod)) return std::nullopt;
    SimplexIndex idx(f.cod, std::max(B->top(), 0));
    std::optional<SMap> out;
    solve_assignments(B, idx, pre, [&](const SMap& m) {
        out = m;
        return false;
    });
    return out;
}

bool homotopic_bounded(const Cylinder& cyl, const SMap& f, const SMap& g, int bound, size_t cap) {
    if (maps_equal(f, g)) return true;
    auto ml = enumerate_maps(f.dom, f.cod, cap);
    if (ml.cap_exceeded) throw Error("homotopic_bounded: map enumeration cap exceeded");
    auto find = [&](const SMap& h) {
        for (size_t i = 0; i < ml.maps.size(); ++i)
            if (maps_equal(ml.maps[i], h)) return static_cast<int>(i);
        return -1;
    };
    int s = find(f), t = find(g);
    if (s < 0 || t < 0) throw Error("homotopic_bounded: maps not found among enumerated maps");
    int N = static_cast<int>(ml.maps.size());
    std::vector<int> dist(N, -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
        int a = q.front();
        q.pop_front();
        if (dist[a] == bound) continue;
        for (int b = 0; b < N; ++b) {
            if (dist[b] >= 0) continue;
            if (homotopy_step(cyl, ml.maps[a], ml.maps[b]) || homotopy_step(cyl, ml.maps[b], ml.maps[a])) {
                dist[b] = dist[a] + 1;
                if (b == t) return true;
                q.push_back(b);
            }
        }
    }
    return false;
}

std::vector<std::string> verify_retract(const Retract& r) {
    std::vector<std::string> diag;
    const std::pair<const char*, const SMap*> maps[] = {{"inner", &r.inner}, {"outer", &r.outer}, {"sA", &r.sA},
                                                        {"sB", &r.sB},       {"rA", &r.rA},       {"rB", &r.rB}};
    for (auto& [nm, m] : maps)
        for (auto& d : validate_map(*m)) diag.push_back(std::string(nm) + ": " + d);
    if (!diag.empty()) return diag;
    auto same = [](const SP& a, const SP& b) { return a == b || a->counts() == b->counts(); };
    if (!same(r.sA.dom, r.inner.dom) || !same(r.sA.cod, r.outer.dom) || !same(r.sB.dom, r.inner.cod) ||
        !same(r.sB.cod, r.outer.cod) || !same(r.rA.dom, r.outer.dom) || !same(r.rB.dom, r.outer.cod)) {
        diag.push_back("dimension mismatch between the two inclusions");
        return diag;
    }
    if (!maps_equal(compose(r.rA, r.sA), identity(r.inner.dom))) diag.push_back("rA o sA is not the identity");
    if (!maps_equal(compose(r.rB, r.sB), identity(r.inner.cod))) diag.push_back("rB o sB is not the identity");
    if (!maps_equal(compose(r.sB, r.inner), compose(r.outer, r.sA))) diag.push_back("section square does not commute");
    if (!maps_equal(compose(r.inner, r.rA), compose(r.rB, r.outer))) diag.push_back("retraction square does not commute");
    return diag;
}

}  // namespace sset
