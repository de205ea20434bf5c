#include "sset/anodyne.hpp"

#include <algorithm>
#include <numeric>

#include "sset/iso.hpp"

namespace sset {

namespace {

std::string S(int v) { return std::to_string(v); }

// Crop that always marks the result truncated at D.
SP force_crop(SP X, int D) {
    if (X->truncated && X->D == D && X->top() <= D) return X;
    Sub s = empty_sub(X);
    for (int n = 0; n <= D && n < X->dims(); ++n) std::fill(s.in[n].begin(), s.in[n].end(), 1);
    SSet Y = *realize(s).obj;
    Y.D = D;
    Y.truncated = true;
    return share(std::move(Y));
}

// f with its domain replaced by a copy of (a prefix of) the same cells.
SMap rebind(const SMap& f, SP dom, SP cod) {
    SMap r{dom, cod, f.img};
    r.img.resize(dom->dims());
    for (int n = 0; n < dom->dims(); ++n)
        if (static_cast<int>(r.img[n].size()) != dom->count(n)) throw Error("rebind: cell counts differ");
    return r;
}

// Agreement on every row both maps define.
bool agree(const SMap& f, const SMap& g) {
    size_t rows = std::min(f.img.size(), g.img.size());
    for (size_t n = 0; n < rows; ++n) {
        if (f.img[n].empty() || g.img[n].empty()) continue;
        if (f.img[n] != g.img[n]) return false;
    }
    return true;
}

std::vector<int> counts_diff(const SSet& a, const SSet& b) {
    std::vector<int> d;
    for (int n = 0; n < std::max(a.dims(), b.dims()); ++n) d.push_back(a.count(n) - b.count(n));
    while (!d.empty() && d.back() == 0) d.pop_back();
    return d;
}

// The attaching map of a certificate step, read back by names.
SMap attaching_map(const Step& st, SP tdom, SP stage, std::string* err) {
    std::map<std::pair<int, std::string>, const AttachEntry*> byCell;
    for (auto& e : st.attach) {
        if (!byCell.emplace(std::make_pair(e.dim, e.cell), &e).second) {
            *err = "duplicate attaching entry for " + e.cell;
            return {};
        }
    }
    SMap a{tdom, stage, {}};
    a.img.resize(tdom->dims());
    for (int n = 0; n < tdom->dims(); ++n)
        for (int k = 0; k < tdom->count(n); ++k) {
            auto it = byCell.find({n, tdom->name(n, k)});
            if (it == byCell.end()) {
                *err = "no attaching entry for template cell " + tdom->name(n, k);
                return {};
            }
            const AttachEntry& e = *it->second;
            int bd = n - static_cast<int>(e.word.size());
            if (bd < 0 || !is_admissible(e.word) || (!e.word.empty() && e.word[0] > n - 1)) {
                *err = "bad degeneracy word for " + e.cell;
                return {};
            }
            auto idx = stage->find(bd, e.image);
            if (!idx) {
                *err = "attaching image " + e.image + " of " + e.cell + " is not a cell of the stage";
                return {};
            }
            a.img[n].push_back(Formal{bd, *idx, e.word});
            byCell.erase(it);
        }
    if (!byCell.empty()) {
        *err = "attaching entry for unknown template cell " + byCell.begin()->first.second;
        return {};
    }
    return a;
}

bool crossing(int p, int q, int r, int s) {
    if (p > q) std::swap(p, q);
    if (r > s) std::swap(r, s);
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

// I for an ambient one dimension deeper than a truncated I.
SMap deeper_iota(const std::string& I) {
    SMap iota = attachment(I);
    if (!iota.cod->truncated) return iota;
    auto at = I.find('@');
    if (I.rfind("J@", 0) != 0 || at == std::string::npos)
        throw Error("no deeper ambient known for truncated " + I);
    return attachment("J@" + S(std::stoi(I.substr(at + 1)) + 1));
}

std::vector<int> iota_seq(int a, int b) {
    std::vector<int> v;
    for (int x = a; x <= b; ++x) v.push_back(x);
    return v;
}

// Vertex sequence of P_j in Delta[1] x Delta[n]: (0,0..j),(1,j..n).
std::pair<std::vector<int>, std::vector<int>> path_P(int n, int j) {
    std::vector<int> t(j + 1, 0), x = iota_seq(0, j);
    for (int k = j; k <= n; ++k) t.push_back(1), x.push_back(k);
    return {t, x};
}
// Q^j_{j+1}: (0,0..j),(1,j+1..n).
std::pair<std::vector<int>, std::vector<int>> path_Q(int n, int j) {
    std::vector<int> t(j + 1, 0), x = iota_seq(0, j);
    for (int k = j + 1; k <= n; ++k) t.push_back(1), x.push_back(k);
    return {t, x};
}

Formal pull(const Embedded& e, const Formal& f) {
    for (int k = 0; k < static_cast<int>(e.incl.img[f.bdim].size()); ++k)
        if (e.incl.img[f.bdim][k] == nd(f.bdim, f.idx)) return Formal{f.bdim, k, f.word};
    throw Error("cell outside the subobject");
}

Sub pull_sub(const Embedded& e, const Sub& s) {
    Sub r = empty_sub(e.obj);
    for (int n = 0; n < e.obj->dims(); ++n)
        for (int k = 0; k < e.obj->count(n); ++k)
            if (s.has(e.incl.img[n][k])) r.in[n][k] = 1;
    return r;
}

}  // namespace

std::string TemplateSpec::name() const {
    if (kind == "horn") return "horn(" + S(n) + "," + S(j) + ")";
    if (kind == "boundary") return "boundary(" + S(n) + ")";
    if (kind == "iso_horn") return "iso_horn(" + S(n) + "," + S(i) + ")@" + S(D);
    if (kind == "aug_horn") return "aug_horn(" + S(n) + "," + S(j) + "," + S(i) + ";" + x + ")";
    if (kind == "almost_aug_horn") {
        std::string c;
        for (int v : tri.cycle) c += (c.empty() ? "" : ",") + S(v);
        return "almost_aug_horn(" + S(n) + "," + S(j) + "," + S(i) + ";" + x + ";cycle=" + c + ";dist=" +
               S(dist) + ")";
    }
    return kind;
}

TemplateSpec TemplateSpec::horn(int n, int j) {
    TemplateSpec s;
    s.kind = "horn";
    s.n = n;
    s.j = j;
    return s;
}

TemplateSpec TemplateSpec::aug(int n, int j, int i, const std::string& x) {
    TemplateSpec s;
    s.kind = "aug_horn";
    s.n = n;
    s.j = j;
    s.i = i;
    s.x = x;
    return s;
}

bool valid_triangulation(const Triangulation& t) {
    int v = t.n + 1;
    if (t.n < 1 || static_cast<int>(t.cycle.size()) != v) return false;
    std::vector<int> pos(v, -1);
    for (int k = 0; k < v; ++k) {
        int c = t.cycle[k];
        if (c < 0 || c >= v || pos[c] >= 0) return false;
        pos[c] = k;
    }
    if (t.n == 1) return t.tris.empty();
    if (static_cast<int>(t.tris.size()) != t.n - 1) return false;
    std::set<std::array<int, 3>> seen;
    for (auto tr : t.tris) {
        for (int c : tr)
            if (c < 0 || c >= v) return false;
        if (!(tr[0] < tr[1] && tr[1] < tr[2]) || !seen.insert(tr).second) return false;
    }
    // Pairwise non-crossing distinct triangles, as many as a triangulation has.
    for (size_t a = 0; a < t.tris.size(); ++a)
        for (size_t b = a + 1; b < t.tris.size(); ++b)
            for (int p = 0; p < 3; ++p)
                for (int q = 0; q < 3; ++q) {
                    auto& A = t.tris[a];
                    auto& B = t.tris[b];
                    if (crossing(pos[A[p]], pos[A[(p + 1) % 3]], pos[B[q]], pos[B[(q + 1) % 3]])) return false;
                }
    return true;
}

Template build_template(const TemplateSpec& s) {
    if (s.kind == "horn") {
        auto h = horn(s.n, s.j);
        return {h.incl, identity(h.incl.cod), {}};
    }
    if (s.kind == "boundary") {
        auto b = boundary(s.n);
        return {b.incl, identity(b.incl.cod), {}};
    }
    if (s.kind == "iso_horn") return {iso_horn(s.n, s.i, s.D).incl, {}, {}};
    if (s.kind == "aug_horn") {
        auto h = augmented_horn(s.n, s.j, s.i, attachment(s.x), "X");
        return {h.incl(), h.glued.inA, h.glued.inX};
    }
    if (s.kind == "almost_aug_horn") {
        if (!valid_triangulation(s.tri)) throw Error("almost_aug_horn: invalid triangulation");
        if (s.dist < 0 || s.dist >= s.tri.outer_count()) throw Error("almost_aug_horn: bad distinguished edge");
        auto at = realize_aug(s.tri, s.dist, attachment(s.x));
        auto h = augmented_horn(s.n, s.j, s.i, at.edge_map(), "T");
        return {h.incl(), h.glued.inA, h.glued.inX};
    }
    throw Error("unknown template kind " + s.kind);
}

std::optional<std::string> membership(const TemplateSpec& s, const Family& f) {
    auto aug_ok = [&]() -> std::optional<std::string> {
        if (s.n < 1 || s.i < 0 || s.i > s.n - 1) return "augmented edge out of range";
        if (s.j != s.i && s.j != s.i + 1) return "missing face must be d_i or d_{i+1}";
        return std::nullopt;
    };
    if (f.name == "ordinary-horn" || f.name == "inner-horn") {
        if (s.kind != "horn") return s.name() + " is not an ordinary horn";
        if (s.n < 1 || s.j < 0 || s.j > s.n) return "horn index out of range";
        if (f.name == "inner-horn" && (s.j == 0 || s.j == s.n)) return s.name() + " is an outer horn";
        return std::nullopt;
    }
    if (f.name == "I-augmented-horn") {
        if (s.kind != "aug_horn" || s.x != f.x) return s.name() + " is not augmented by " + f.x;
        return aug_ok();
    }
    if (f.name == "almost-I-augmented-horn") {
        if (s.kind == "aug_horn" && s.x == f.x) return aug_ok();
        if (s.kind != "almost_aug_horn" || s.x != f.x) return s.name() + " is not almost-augmented by " + f.x;
        if (!valid_triangulation(s.tri)) return "invalid triangulation";
        if (s.dist < 0 || s.dist >= s.tri.outer_count()) return "bad distinguished edge";
        return aug_ok();
    }
    if (f.name == "special-horn") {
        if (s.kind != "aug_horn" || s.x.rfind("inv(", 0) != 0) return s.name() + " is not a special horn";
        if (!f.x.empty() && s.x != f.x) return s.name() + " uses a different tiling";
        return aug_ok();
    }
    if (f.name == "boundary-inclusion") {
        if (s.kind != "boundary" || s.n < 0) return s.name() + " is not a boundary inclusion";
        return std::nullopt;
    }
    if (f.name == "iso-horn") {
        if (s.kind != "iso_horn" || s.n < 1 || s.i < 0 || s.i > s.n) return s.name() + " is not an iso-horn";
        return std::nullopt;
    }
    return "unknown family " + f.name;
}

std::vector<Family> Certificate::families() const {
    std::vector<Family> r;
    for (auto& st : steps)
        if (std::find(r.begin(), r.end(), st.family) == r.end()) r.push_back(st.family);
    return r;
}

VerifyResult verify(const Certificate& c) {
    VerifyResult R;
    auto fail = [&](int k, const std::string& m) {
        R.failed_step = k;
        R.diagnostics.push_back(k >= 0 ? "step " + S(k) + ": " + m : m);
        return R;
    };
    if (!c.target.dom || !c.target.cod) return fail(-1, "certificate has no target");
    if (!validate_map(c.target).empty() || !is_mono(c.target)) return fail(-1, "target is not an inclusion");
    SP stage = c.target.dom;
    if (c.truncation) {
        if (stage->top() > *c.truncation) return fail(-1, "domain exceeds the truncation");
        stage = force_crop(stage, *c.truncation);
    }
    SMap comp = rebind(identity(c.target.dom), c.target.dom, stage);
    for (int k = 0; k < static_cast<int>(c.steps.size()); ++k) {
        const Step& st = c.steps[k];
        if (auto why = membership(st.spec, st.family)) return fail(k, "template not in family " + st.family.str() + ": " + *why);
        Template T;
        try {
            T = build_template(st.spec);
        } catch (const Error& e) {
            return fail(k, std::string("cannot build template: ") + e.what());
        }
        std::string err;
        SMap att = attaching_map(st, T.incl.dom, stage, &err);
        if (!err.empty()) return fail(k, err);
        auto diag = validate_map(att);
        if (!diag.empty()) return fail(k, "attaching map is not simplicial: " + diag.front());
        Pushout P;
        try {
            P = pushout(att, T.incl, "s" + S(k));
        } catch (const Error& e) {
            return fail(k, e.what());
        }
        SP next = c.truncation ? force_crop(P.obj, *c.truncation) : P.obj;
        R.added.push_back(counts_diff(*next, *stage));
        comp = compose(rebind(P.inX, stage, next), comp);
        stage = next;
    }
    if (!iso_under(comp, c.target))
        return fail(-1, "final stage (" + S(stage->total()) + " cells) is not isomorphic to the codomain (" +
                            S(c.target.cod->total()) + " cells) under the domain");
    R.ok = true;
    return R;
}

CertBuilder::CertBuilder(std::string lemma, const SMap& target, std::optional<int> truncation)
    : lemma_(std::move(lemma)), target_(target), trunc_(truncation) {
    if (!is_mono(target)) throw Error("builder: target is not an inclusion");
    stage_ = stage0_ = trunc_ ? force_crop(target.dom, *trunc_) : target.dom;
    phi_ = rebind(target, stage_, target.cod);
}

void CertBuilder::step(const Family& f, const TemplateSpec& s, const Formal& sigma, const std::optional<SMap>& witness) {
    int k = static_cast<int>(steps_.size());
    std::string where = "builder: step " + S(k) + " (" + s.name() + ")";
    if (auto why = membership(s, f)) throw Error(where + ": " + *why);
    Template T = build_template(s);
    if (!T.simplex) throw Error(where + ": template has no top simplex");
    SP amb = target_.cod;
    SMap sm = simplex_map(amb, sigma);
    std::vector<std::pair<SMap, SMap>> legs{{*T.simplex, sm}};
    SMap w;
    if (T.attached) {
        if (!witness) throw Error(where + ": needs a witness for the attached object");
        w = rebind(*witness, T.attached->dom, amb);
        legs.push_back({*T.attached, w});
    }
    SMap psi = induced_cover(T.incl.cod, amb, legs);
    if (!agree(compose(psi, *T.simplex), sm)) throw Error(where + ": simplex leg disagrees");
    if (T.attached && !agree(compose(psi, *T.attached), w))
        throw Error(where + ": witness does not meet the simplex along its edge");
    SMap att = lift_through(phi_, compose(psi, T.incl));
    Pushout P = pushout(att, T.incl, "s" + S(k));
    SP next = trunc_ ? force_crop(P.obj, *trunc_) : P.obj;
    SMap phi2 = rebind(P.induced(phi_, psi), next, amb);
    if (!is_mono(phi2)) throw Error(where + ": the glued cells are already present");
    Step st{f, s, {}};
    SP td = T.incl.dom;
    for (int n = 0; n < td->dims(); ++n)
        for (int c = 0; c < td->count(n); ++c) {
            const Formal& a = att.img[n][c];
            st.attach.push_back({n, td->name(n, c), stage_->name(a.bdim, a.idx), a.word});
        }
    steps_.push_back(std::move(st));
    stage_ = next;
    phi_ = phi2;
}

void CertBuilder::horn(const Family& f, const Formal& sigma, int missing) {
    step(f, TemplateSpec::horn(sigma.dim(), missing), sigma);
}

Certificate CertBuilder::finish(std::map<std::string, std::string> params) {
    SP B = trunc_ ? force_crop(target_.cod, *trunc_) : target_.cod;
    Sub hit = image(phi_);
    for (int n = 0; n < B->dims(); ++n)
        for (int k = 0; k < B->count(n); ++k)
            if (!hit.has(n, k)) throw Error("builder: cell " + B->name(n, k) + " of the codomain was never glued");
    Certificate c;
    c.lemma = lemma_;
    c.params = std::move(params);
    c.target = rebind(target_, stage0_, B);
    c.truncation = trunc_;
    c.steps = steps_;
    return c;
}

// ---------------------------------------------------------------------------

Certificate gen_generalized_aug(int n, const std::set<int>& Sset, int i, const std::string& I) {
    SMap x = attachment(I);
    AugHorn h = generalized_augmented_horn(n, Sset, i, x, I);
    CertBuilder b("generalized-aug", h.incl());
    Family fam{"I-augmented-horn", I};
    SP dn = h.glued.inA.dom;
    std::function<void(const std::vector<int>&, std::set<int>, int)> fill = [&](const std::vector<int>& V,
                                                                                   std::set<int> Sv, int ii) {
        int m = static_cast<int>(V.size()) - 1;
        if (static_cast<int>(Sv.size()) == m) {
            int j = 0;
            while (Sv.count(j)) ++j;
            Formal sigma = h.glued.inA.apply(nd(m, simplex_cell(*dn, V)));
            b.step(fam, TemplateSpec::aug(m, j, ii, I), sigma, h.glued.inX);
            return;
        }
        int l = 0;
        while (Sv.count(l) || l == ii || l == ii + 1) ++l;
        std::vector<int> V2;
        for (int p = 0; p <= m; ++p)
            if (p != l) V2.push_back(V[p]);
        std::set<int> S2;
        for (int s : Sv) S2.insert(s < l ? s : s - 1);
        fill(V2, S2, ii < l ? ii : ii - 1);
        Sv.insert(l);
        fill(V, Sv, ii);
    };
    fill(iota_seq(0, n), Sset, i);
    std::string sl;
    for (int s : Sset) sl += (sl.empty() ? "" : ",") + S(s);
    return b.finish({{"n", S(n)}, {"S", "{" + sl + "}"}, {"i", S(i)}, {"I", I}});
}

namespace {

Certificate bij0_impl(const std::string& lemma, const std::string& I, const SMap& j, int eps,
                      std::map<std::string, std::string> params) {
    if (eps != 0 && eps != 1) throw Error(lemma + ": eps must be 0 or 1");
    SMap iota = attachment(I);
    std::optional<int> trunc;
    if (iota.cod->truncated) {
        trunc = iota.cod->D;
        iota = deeper_iota(I);
    }
    SP B = j.cod;
    Sub Aim = image(j);
    for (int v = 0; v < B->count(0); ++v)
        if (!Aim.has(0, v)) throw Error(lemma + ": inclusion is not bijective on vertices");
    Cylinder cyl = pointwise_cylinder(iota, B);
    Embedded A = realize(sub_union(cyl.end(eps), cyl.over(Aim)));
    CertBuilder b(lemma, A.incl, trunc);
    SP d1 = standard_simplex(1);
    Family fam{"I-augmented-horn", I};
    for (int n = 1; n < B->dims(); ++n)
        for (int k = 0; k < B->count(n); ++k) {
            if (Aim.has(n, k)) continue;
            SMap s = simplex_map(B, nd(n, k));
            for (int q = 0; q <= n; ++q) {
                int p = eps == 0 ? n - q : q;
                auto [t, x] = path_P(n, p);
                auto c = cyl.cell(simplex_formal(*d1, t), s.apply(simplex_formal(*s.dom, x)));
                if (!c) throw Error(lemma + ": cylinder cell above truncation");
                int miss = eps == 0 ? p : p + 1;
                b.step(fam, TemplateSpec::aug(n + 1, miss, p, I), *c, cyl.chi(vertex_of(*B, nd(n, k), p)));
            }
        }
    params["I"] = I;
    params["eps"] = S(eps);
    return b.finish(std::move(params));
}

}  // namespace

Certificate gen_bij0(const std::string& I, const SMap& j, int eps) { return bij0_impl("bij0", I, j, eps, {}); }

Certificate gen_an1(const std::string& I, int n, int eps) {
    if (n < 1) throw Error("gen_an1: n must be at least 1");
    return bij0_impl("an1", I, boundary(n).incl, eps, {{"n", S(n)}});
}

Certificate gen_an2(const std::string& I, int n, int i, An2Case c) {
    bool up = c == An2Case::Upper;
    if (n < 2 || (up && (i < 0 || i > n - 1)) || (!up && (i < 1 || i > n)))
        throw Error("gen_an2: index out of range");
    int lo = up ? i : i - 1;
    SMap iota = attachment(I);
    SP d1 = standard_simplex(1), dn = standard_simplex(n);
    Product P = product(d1, dn, n + 1);
    auto pc = [&](const std::vector<int>& t, const std::vector<int>& x) {
        auto f = P.pair(simplex_formal(*d1, t), simplex_formal(*dn, x));
        if (!f) throw Error("gen_an2: product cell above truncation");
        return *f;
    };
    Glued G1 = glue_edge(P.obj, pc({0, 0}, {lo, lo + 1}), iota, "I0");
    Glued G2 = glue_edge(G1.obj, G1.inA.apply(pc({1, 1}, {lo, lo + 1})), iota, "I1");
    SMap toB = compose(G2.inA, G1.inA);
    SMap W[2] = {compose(G2.inA, G1.inX), G2.inX};
    Sub ends = generated(d1, {nd(0, 0), nd(0, 1)});
    Sub a = sub_union(product_sub(P, ends, full_sub(dn)), product_sub(P, full_sub(d1), image(horn(n, i).incl)));
    Sub A = sub_union(image_of(toB, a), sub_union(image(W[0]), image(W[1])));
    CertBuilder b("an2", realize(A).incl);
    Family fam{"I-augmented-horn", I};

    struct Item {
        std::vector<int> t, x;
        int miss, edge;
    };
    int u = up ? i : n - i;  // the upper-case index, before dualising
    std::vector<Item> items;
    for (int j = 0; j <= n - 1; ++j)
        if (j != u) {
            auto [t, x] = path_Q(n, j);
            items.push_back({t, x, u, u});
        }
    for (int j = 0; j <= n; ++j) {
        auto [t, x] = path_P(n, j);
        if (j <= u) items.push_back({t, x, u + 1, u + 1});
    }
    for (int j = u + 1; j <= n; ++j) {
        auto [t, x] = path_P(n, j);
        items.push_back({t, x, u, u});
    }
    if (!up)
        for (auto& it : items) {
            int m = static_cast<int>(it.t.size()) - 1;
            std::reverse(it.t.begin(), it.t.end());
            std::reverse(it.x.begin(), it.x.end());
            for (auto& v : it.t) v = 1 - v;
            for (auto& v : it.x) v = n - v;
            it.miss = m - it.miss;
            it.edge = m - 1 - it.edge;
        }
    for (auto& it : items) {
        int e = it.edge;
        if (it.t[e] != it.t[e + 1] || it.x[e] != lo || it.x[e + 1] != lo + 1)
            throw Error("gen_an2: augmented edge is not a glued edge");
        Formal sigma = toB.apply(pc(it.t, it.x));
        b.step(fam, TemplateSpec::aug(static_cast<int>(it.t.size()) - 1, it.miss, e, I), sigma, W[it.t[e]]);
    }
    return b.finish({{"I", I}, {"n", S(n)}, {"i", S(i)}, {"case", up ? "i->i+1" : "i-1->i"}});
}

Certificate gen_J_from_edge(int D) {
    if (D < 2) throw Error("gen_J_from_edge: D must be at least 2");
    SP J = build_J(D + 1);
    CertBuilder b("J-from-edge", edge_map(J, nd(1, J->at(1, "01"))), D);
    Family fam{"ordinary-horn", ""};
    for (int m = 2; m <= D + 1; ++m) {
        std::string nm;
        for (int p = 0; p <= m; ++p) nm += (p % 2 ? '1' : '0');
        b.horn(fam, nd(m, J->at(m, nm)), 0);
    }
    return b.finish({{"D", S(D)}});
}

Certificate gen_K_from_edge() {
    KShape K = build_K();
    CertBuilder b("K-from-edge", K.edge());
    Family fam{"ordinary-horn", ""};
    b.horn(fam, K.kf, 2);
    b.horn(fam, K.gk, 0);
    return b.finish();
}

Certificate gen_cyl_J(int lmax) {
    if (lmax < 1) throw Error("gen_cyl_J: lmax must be at least 1");
    int D = lmax + 2;
    SP J = build_J(D), d1 = standard_simplex(1);
    Product P = product(d1, J, D);
    auto jcell = [&](int n) {
        std::string nm;
        for (int p = 0; p <= n; ++p) nm += (p % 2 ? '1' : '0');
        return nd(n, J->at(n, nm));
    };
    Sub ends = generated(d1, {nd(0, 0), nd(0, 1)});
    Sub Asub = sub_union(product_sub(P, ends, full_sub(J)), product_sub(P, full_sub(d1), generated(J, {jcell(0)})));
    Sub Bsub = sub_union(Asub, product_sub(P, full_sub(d1), generated(J, {jcell(lmax + 1)})));
    Embedded EB = realize(Bsub);
    CertBuilder b("cyl-J", realize(pull_sub(EB, Asub)).incl);
    Family fam{"ordinary-horn", ""};
    for (int l = 0; l <= lmax; ++l) {
        int n = l + 1;
        SMap s = simplex_map(J, jcell(n));
        auto cell = [&](const std::pair<std::vector<int>, std::vector<int>>& tx) {
            auto f = P.pair(simplex_formal(*d1, tx.first), s.apply(simplex_formal(*s.dom, tx.second)));
            if (!f) throw Error("gen_cyl_J: cell above truncation");
            return pull(EB, *f);
        };
        for (int j = 1; j <= n - 1; ++j) b.horn(fam, cell(path_Q(n, j)), 0);
        b.horn(fam, cell(path_P(n, 0)), 1);
        for (int j = 1; j <= n; ++j) b.horn(fam, cell(path_P(n, j)), 0);
    }
    return b.finish({{"lmax", S(lmax)}});
}

Certificate gen_cyl_K(int eps) {
    if (eps != 0 && eps != 1) throw Error("gen_cyl_K: eps must be 0 or 1");
    KShape K = build_K();
    SP X = K.obj, d1 = standard_simplex(1);
    Product P = product(d1, X, 3);
    struct Item {
        std::vector<int> t;
        std::string base;
        int s;  // degeneracy position
        int miss;
    };
    // The {0}-end filling; the {1}-end is its mirror image under K^op = K.
    std::vector<Item> items = {
        {{0, 1, 1}, "k", 0, 1},        {{0, 0, 1}, "k", 1, 0},        {{0, 0, 1}, "f", 1, 1},
        {{0, 0, 1}, "g", 1, 1},        {{0, 1, 1, 1}, "gk", 0, 1},    {{0, 0, 0, 1}, "gk", 2, 2},
        {{0, 0, 1, 1}, "gk", 1, 0},    {{0, 0, 0, 1}, "kf", 2, 2},    {{0, 0, 1, 1}, "kf", 1, 1},
        {{0, 1, 1, 1}, "kf", 0, 3},
    };
    std::map<std::string, std::string> op = {{"k", "k"}, {"f", "g"}, {"g", "f"}, {"kf", "gk"}, {"gk", "kf"}};
    if (eps == 1)
        for (auto& it : items) {
            int m = static_cast<int>(it.t.size()) - 1;
            std::reverse(it.t.begin(), it.t.end());
            for (auto& v : it.t) v = 1 - v;
            it.base = op.at(it.base);
            it.s = m - 1 - it.s;
            it.miss = m - it.miss;
        }
    int v = eps == 0 ? K.a : K.b;
    Sub ends = generated(d1, {nd(0, 0), nd(0, 1)});
    Sub Asub = sub_union(product_sub(P, ends, full_sub(X)), product_sub(P, full_sub(d1), generated(X, {nd(0, v)})));
    CertBuilder b("cyl-K", realize(Asub).incl);
    Family fam{"ordinary-horn", ""};
    for (auto& it : items) {
        int m = static_cast<int>(it.t.size()) - 1;
        Formal x = degen(nd(m - 1, X->at(m - 1, it.base)), it.s);
        auto c = P.pair(simplex_formal(*d1, it.t), x);
        if (!c) throw Error("gen_cyl_K: missing product cell");
        b.horn(fam, *c, it.miss);
    }
    return b.finish({{"eps", S(eps)}});
}

Upgrade gen_upgrade(const Certificate& base, const SMap& u, const std::map<int, EdgeWitness>& evidence,
                    const std::string& I) {
    if (base.truncation) throw Error("gen_upgrade: truncated certificates are not supported");
    SMap iota = attachment(I);
    // Replay the base steps to locate each glued simplex in B.
    SP stage = base.target.dom;
    SMap comp = identity(stage);
    std::vector<std::pair<int, Formal>> glued;  // (missing face, simplex)
    for (int k = 0; k < static_cast<int>(base.steps.size()); ++k) {
        const Step& st = base.steps[k];
        if (st.spec.kind != "horn") throw Error("gen_upgrade: base certificate must use ordinary horns");
        if (st.spec.n < 2) throw Error("gen_upgrade: 1-dimensional horns are not supported");
        Template T = build_template(st.spec);
        std::string err;
        SMap att = attaching_map(st, T.incl.dom, stage, &err);
        if (!err.empty()) throw Error("gen_upgrade: step " + S(k) + ": " + err);
        Pushout P = pushout(att, T.incl, "s" + S(k));
        for (auto& g : glued) g.second = P.inX.apply(g.second);
        glued.push_back({st.spec.j, P.inB.apply(nd(st.spec.n, 0))});
        comp = compose(P.inX, comp);
        stage = P.obj;
    }
    auto h = iso_under(comp, base.target);
    if (!h) throw Error("gen_upgrade: base certificate does not verify");
    Pushout Q = pushout(u, base.target, "B");
    CertBuilder b("upgrade", Q.inX);

    std::map<int, EdgeWitness> wit;
    auto normalized = [&](const AugTriangulation& tri, const SMap& m) {
        AugTriangulation at = realize_aug(tri.base, tri.dist, iota);
        auto iso = iso_under(at.edge_map(), tri.edge_map());
        if (!iso) throw Error("gen_upgrade: witness object does not match its triangulation");
        return EdgeWitness{at, compose(m, *iso)};
    };
    for (auto& [e, w] : evidence) {
        Formal qe = Q.inX.apply(nd(1, e));
        if (qe.degenerate()) continue;
        EdgeWitness nw = normalized(w.tri, compose(Q.inX, w.map));
        if (!agree(compose(nw.map, nw.tri.edge_map()), edge_map(Q.obj, qe)))
            throw Error("gen_upgrade: witness for edge " + u.cod->name(1, e) + " misses its edge");
        wit.emplace(qe.idx, nw);
    }
    Triangulation seg{1, {0, 1}, {}};
    auto witness_for = [&](const Formal& e) {
        if (e.degenerate()) {
            AugTriangulation at = realize_aug(seg, 0, iota);
            return EdgeWitness{at, constant_map(at.obj, Q.obj, vertex_of(*Q.obj, e, 0))};
        }
        auto it = wit.find(e.idx);
        if (it == wit.end()) throw Error("gen_upgrade: no almost-augmentation witness for edge " + Q.obj->name(1, e.idx));
        return it->second;
    };
    Family fam{"almost-I-augmented-horn", I};
    for (auto& [k, sigB] : glued) {
        Formal sig = Q.inB.apply(h->apply(sigB));
        int m = sig.dim();
        SMap s = simplex_map(Q.obj, sig);
        auto edge_of = [&](int p, int q) { return s.apply(simplex_formal(*s.dom, {p, q})); };
        // The face d_k of a 2-simplex is the edge away from vertex k.
        std::pair<int, int> newe{-1, -1};
        if (m == 2) newe = k == 0 ? std::make_pair(1, 2) : k == 1 ? std::make_pair(0, 2) : std::make_pair(0, 1);
        std::vector<std::pair<int, int>> sides;  // horn edges; for m = 2 in the order 0->1, 1->2, 0->2
        if (m == 2) {
            for (auto pq : {std::make_pair(0, 1), std::make_pair(1, 2), std::make_pair(0, 2)})
                if (pq != newe) sides.push_back(pq);
        } else {
            for (int p = 0; p <= m; ++p)
                for (int q = p + 1; q <= m; ++q) sides.push_back({p, q});
        }
        for (auto [p, q] : sides) witness_for(edge_of(p, q));
        int i = k <= m - 1 ? k : k - 1;
        EdgeWitness w = witness_for(edge_of(i, i + 1));
        TemplateSpec spec = TemplateSpec::aug(m, k, i, I);
        spec.kind = "almost_aug_horn";
        spec.tri = w.tri.base;
        spec.dist = w.tri.dist;
        b.step(fam, spec, sig, w.map);
        if (m == 2) {
            EdgeWitness U = witness_for(edge_of(sides[0].first, sides[0].second));
            EdgeWitness V = witness_for(edge_of(sides[1].first, sides[1].second));
            AugTriangulation G = glue_on_triangle(U.tri, V.tri, k, iota);
            AugTriangulation at = realize_aug(G.base, G.dist, iota);
            Formal ne = edge_of(newe.first, newe.second);
            if (ne.degenerate()) continue;
            SMap inStage = lift_through(b.into(), edge_map(Q.obj, ne));
            auto L = extend(at.edge_map(), inStage);
            if (L.status != LiftStatus::Lift) throw Error("gen_upgrade: cannot place the glued witness");
            wit.emplace(ne.idx, EdgeWitness{at, compose(b.into(), *L.map)});
        }
    }
    Upgrade R;
    R.cert = b.finish({{"I", I}, {"base", base.lemma}});
    R.witnesses = std::move(wit);
    return R;
}

std::optional<EdgeWitness> find_edge_witness(SP X, const Formal& e, const SMap& iota, int max_size) {
    SMap em = edge_map(X, e);
    SimplexIndex idx(X, std::max(2, iota.cod->top()));
    for (auto& at : aug_triangulations(iota, max_size)) {
        auto L = extend(at.edge_map(), em, &idx);
        if (L.status == LiftStatus::Lift) return EdgeWitness{at, *L.map};
    }
    return std::nullopt;
}

Upgrade upgrade_cyl_K(int eps, int max_size) {
    Certificate base = gen_cyl_K(eps);
    SP A = base.target.dom;
    // K goes on the one vertical edge of the domain.
    int vert = -1;
    for (int e = 0; e < A->count(1); ++e)
        if (A->name(1, e).rfind("(01,", 0) == 0) vert = e;
    if (vert < 0) throw Error("upgrade_cyl_K: no vertical edge");
    SMap kappa = attachment("K");
    Glued G = glue_edge(A, nd(1, vert), kappa, "K");
    std::map<int, EdgeWitness> ev;
    for (int e = 0; e < G.obj->count(1); ++e) {
        auto w = find_edge_witness(G.obj, nd(1, e), kappa, max_size);
        if (w) ev.emplace(e, *w);
    }
    return gen_upgrade(base, G.inA, ev, "K");
}

Retract gen_retract(int n, int j, const std::string& I) {
    if (n < 2 || j < 1 || j > n) throw Error("gen_retract: need n >= 2 and 1 <= j <= n");
    int m = n - 1;
    SMap iota = attachment(I);
    SP dm = standard_simplex(m), d1 = standard_simplex(1);
    Cylinder cyl = pointwise_cylinder(iota, dm);
    auto Pk = [&](int k) {
        auto [t, x] = path_P(m, k);
        auto c = cyl.cell(simplex_formal(*d1, t), simplex_formal(*dm, x));
        if (!c) throw Error("gen_retract: cylinder cell above truncation");
        return *c;
    };
    Sub Aj = sub_union(cyl.end(1), cyl.over(image(boundary(m).incl)));
    std::vector<Formal> earlier;
    for (int k = 0; k <= j - 2; ++k) earlier.push_back(Pk(k));
    Aj = sub_union(Aj, generated(cyl.obj, earlier));
    Embedded outerE = realize(Aj);
    AugHorn h = augmented_horn(n, j, j - 1, iota, "I");
    SP Bn = h.glued.obj;
    SP dn = h.glued.inA.dom;
    Retract R;
    R.inner = h.incl();
    R.outer = outerE.incl;
    R.sB = induced_cover(Bn, cyl.obj, {{h.glued.inA, simplex_map(cyl.obj, Pk(j - 1))}, {h.glued.inX, cyl.chi(j - 1)}});
    R.sA = lift_through(R.outer, compose(R.sB, R.inner));

    auto rho = [&](int t, int k) { return t == 0 ? (k <= j - 1 ? k : k + 1) : (k < j - 1 ? k : k + 1); };
    auto bvert = [&](int r) { return h.glued.inA.apply(nd(0, r)).idx; };
    SP full = cyl.full.obj, side = cyl.side.obj;
    SMap fmap{full, Bn, {}};
    fmap.img.resize(full->dims());
    for (int d = 0; d < full->dims(); ++d)
        for (int c = 0; c < full->count(d); ++c) {
            auto& [t, x] = cyl.full.comp[d][c];
            auto tv = vertices_of(*d1, t), xv = vertices_of(*dm, x);
            std::vector<int> seq;
            for (int p = 0; p <= d; ++p) seq.push_back(rho(tv[p], xv[p]));
            fmap.img[d].push_back(h.glued.inA.apply(simplex_formal(*dn, seq)));
        }
    SMap smap{side, Bn, {}};
    smap.img.resize(side->dims());
    for (int d = 0; d < side->dims(); ++d)
        for (int c = 0; c < side->count(d); ++c) {
            auto& [ci, y] = cyl.side.comp[d][c];
            int k = cyl.sk0.incl.apply(nd(0, vertex_of(*cyl.sk0.obj, y, 0))).idx;
            smap.img[d].push_back(k == j - 1 ? h.glued.inX.apply(ci) : const_simplex(bvert(rho(0, k)), d));
        }
    R.rB = induced_cover(cyl.obj, Bn, {{cyl.po.inB, fmap}, {cyl.po.inX, smap}});
    R.rA = lift_through(R.inner, compose(R.rB, R.outer));
    return R;
}

DH2Parts dh2_parts(const SMap& iota, const SMap& sample) {
    Cylinder cyl = pointwise_cylinder(iota, sample.cod);
    Sub a = image(sample);
    DH2Parts p;
    p.cylinder = cyl.obj;
    p.cylA = cyl.over(a);
    for (int e = 0; e < 2; ++e) {
        p.endB[e] = cyl.end(e);
        p.endA[e] = image_of(cyl.end_map(e), a);
    }
    return p;
}

bool check_dh2(const SMap& iota, const SMap& sample) {
    DH2Parts p = dh2_parts(iota, sample);
    for (int e = 0; e < 2; ++e)
        if (!sub_equal(sub_intersection(p.cylA, p.endB[e]), p.endA[e])) return false;
    return true;
}

}  // namespace sset
