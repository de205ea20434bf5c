#include "sset/core.hpp"

#include <algorithm>
#include <set>

namespace sset {

Word normalize_word(Word w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t k = 0; k + 1 < w.size(); ++k) {
            if (w[k] <= w[k + 1]) {
                int i = w[k], j = w[k + 1];
                w[k] = j + 1;
                w[k + 1] = i;
                changed = true;
            }
        }
    }
    return w;
}

bool is_admissible(const Word& w) {
    for (size_t k = 0; k + 1 < w.size(); ++k)
        if (w[k] <= w[k + 1]) return false;
    return w.empty() || w.back() >= 0;
}

std::vector<int> word_to_surjection(const Word& w, int m) {
    std::vector<int> s(m + 1);
    for (int p = 0; p <= m; ++p) {
        int c = 0;
        for (int r : w)
            if (r < p) ++c;
        s[p] = p - c;
    }
    return s;
}

Word surjection_to_word(const std::vector<int>& s) {
    Word w;
    for (int p = static_cast<int>(s.size()) - 2; p >= 0; --p)
        if (s[p] == s[p + 1]) w.push_back(p);
    return w;
}

int SSet::total() const {
    int t = 0;
    for (auto& v : names_) t += static_cast<int>(v.size());
    return t;
}

int SSet::top() const {
    for (int n = dims() - 1; n >= 0; --n)
        if (count(n) > 0) return n;
    return -1;
}

std::vector<int> SSet::counts() const {
    std::vector<int> c;
    for (int n = 0; n <= top(); ++n) c.push_back(count(n));
    return c;
}

std::optional<int> SSet::find(int n, const std::string& nm) const {
    if (n < 0 || n >= dims()) return std::nullopt;
    auto it = index_[n].find(nm);
    if (it == index_[n].end()) return std::nullopt;
    return it->second;
}

int SSet::at(int n, const std::string& nm) const {
    auto k = find(n, nm);
    if (!k) throw Error("no " + std::to_string(n) + "-cell named '" + nm + "'");
    return *k;
}

int SSet::add(int n, const std::string& nm, std::vector<Formal> fs) {
    if (n < 0) throw Error("negative dimension");
    while (dims() <= n) {
        names_.emplace_back();
        faces_.emplace_back();
        verts_.emplace_back();
        index_.emplace_back();
    }
    if (index_[n].count(nm)) throw Error("duplicate " + std::to_string(n) + "-cell name '" + nm + "'");
    if (n == 0 && !fs.empty()) throw Error("vertices have no faces");
    if (n > 0 && static_cast<int>(fs.size()) != n + 1)
        throw Error("cell '" + nm + "' needs " + std::to_string(n + 1) + " faces");
    for (auto& f : fs) {
        if (f.dim() != n - 1 || f.bdim >= dims() || f.idx < 0 || f.idx >= count(f.bdim))
            throw Error("cell '" + nm + "' has an invalid face");
    }
    int k = count(n);
    std::vector<int> vs;
    if (n == 0) {
        vs = {k};
    } else {
        for (int p = 0; p < n; ++p) vs.push_back(vertex_of(*this, fs[n], p));
        vs.push_back(vertex_of(*this, fs[0], n - 1));
    }
    names_[n].push_back(nm);
    faces_[n].push_back(std::move(fs));
    verts_[n].push_back(std::move(vs));
    index_[n][nm] = k;
    return k;
}

std::string SSet::fname(const Formal& f) const {
    std::string s;
    for (int w : f.word) s += "s" + std::to_string(w);
    const std::string& b = names_[f.bdim][f.idx];
    return s.empty() ? b : s + "(" + b + ")";
}

Formal face(const SSet& X, const Formal& f, int i) {
    int m = f.dim();
    if (m < 1 || i < 0 || i > m) throw Error("face index out of range");
    auto sigma = word_to_surjection(f.word, m);
    int b = f.bdim;
    std::vector<int> tau;
    tau.reserve(m);
    for (int p = 0; p <= m; ++p)
        if (p != i) tau.push_back(sigma[p]);
    int v = sigma[i];
    bool hit = std::find(tau.begin(), tau.end(), v) != tau.end();
    if (hit) return Formal{b, f.idx, surjection_to_word(tau)};
    for (int& t : tau)
        if (t > v) --t;
    const Formal& g = X.faces(b, f.idx)[v];
    auto rho = word_to_surjection(g.word, b - 1);
    std::vector<int> c(tau.size());
    for (size_t p = 0; p < tau.size(); ++p) c[p] = rho[tau[p]];
    return Formal{g.bdim, g.idx, surjection_to_word(c)};
}

Formal degen(const Formal& f, int j) {
    int m = f.dim();
    if (j < 0 || j > m) throw Error("degeneracy index out of range");
    auto sigma = word_to_surjection(f.word, m);
    sigma.insert(sigma.begin() + j, sigma[j]);
    return Formal{f.bdim, f.idx, surjection_to_word(sigma)};
}

Formal apply_word(const Word& w, const Formal& f) {
    if (w.empty()) return f;
    int m = f.dim() + static_cast<int>(w.size());
    auto sigma = word_to_surjection(w, m);
    auto rho = word_to_surjection(f.word, f.dim());
    std::vector<int> c(sigma.size());
    for (size_t p = 0; p < sigma.size(); ++p) c[p] = rho[sigma[p]];
    return Formal{f.bdim, f.idx, surjection_to_word(c)};
}

int vertex_of(const SSet& X, const Formal& f, int p) {
    auto sigma = word_to_surjection(f.word, f.dim());
    if (f.bdim == 0) return f.idx;
    return X.verts(f.bdim, f.idx)[sigma[p]];
}

std::vector<int> vertices_of(const SSet& X, const Formal& f) {
    std::vector<int> v;
    for (int p = 0; p <= f.dim(); ++p) v.push_back(vertex_of(X, f, p));
    return v;
}

Formal const_simplex(int v, int m) {
    Word w;
    for (int p = m - 1; p >= 0; --p) w.push_back(p);
    return Formal{0, v, w};
}

namespace {
void subsets(int m, int k, int start, Word& cur, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == k) {
        Word w(cur.rbegin(), cur.rend());
        out.push_back(w);
        return;
    }
    for (int p = start; p < m; ++p) {
        cur.push_back(p);
        subsets(m, k, p + 1, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<Formal> all_simplices(const SSet& X, int m) {
    std::vector<Formal> out;
    for (int b = 0; b <= m && b < X.dims(); ++b) {
        if (X.count(b) == 0) continue;
        std::vector<Word> ws;
        Word cur;
        subsets(m, m - b, 0, cur, ws);
        for (int k = 0; k < X.count(b); ++k)
            for (auto& w : ws) out.push_back(Formal{b, k, w});
    }
    return out;
}

namespace {
bool formal_ok(const SSet& X, const Formal& f) {
    if (f.bdim < 0 || f.bdim >= X.dims() || f.idx < 0 || f.idx >= X.count(f.bdim)) return false;
    if (!is_admissible(f.word)) return false;
    for (int w : f.word)
        if (w >= f.dim()) return false;
    return true;
}
}  // namespace

std::vector<std::string> validate(const SSet& X) {
    std::vector<std::string> diag;
    for (int n = 0; n < X.dims(); ++n) {
        if (X.count(n) > 0 && n > X.D) diag.push_back("cell above truncation in dim " + std::to_string(n));
        for (int k = 0; k < X.count(n); ++k) {
            if (n == 0) continue;
            const auto& fs = X.faces(n, k);
            std::string nm = X.name(n, k);
            if (static_cast<int>(fs.size()) != n + 1) {
                diag.push_back(nm + ": wrong face count");
                continue;
            }
            bool ok = true;
            for (auto& f : fs)
                if (!formal_ok(X, f) || f.dim() != n - 1) ok = false;
            if (!ok) {
                diag.push_back(nm + ": malformed face");
                continue;
            }
            if (n < 2) continue;
            Formal x = nd(n, k);
            for (int j = 1; j <= n; ++j)
                for (int i = 0; i < j; ++i) {
                    Formal a = face(X, face(X, x, j), i);
                    Formal b = face(X, face(X, x, i), j - 1);
                    if (a != b)
                        diag.push_back(nm + ": d" + std::to_string(i) + "d" + std::to_string(j) + " != d" +
                                       std::to_string(j - 1) + "d" + std::to_string(i));
                }
        }
    }
    return diag;
}

Formal SMap::apply(const Formal& f) const {
    if (f.bdim >= static_cast<int>(img.size()) || f.idx >= static_cast<int>(img[f.bdim].size()))
        throw Error("map undefined on a cell (above truncation?)");
    return apply_word(f.word, img[f.bdim][f.idx]);
}

SMap identity(SP X) {
    SMap m{X, X, {}};
    m.img.resize(X->dims());
    for (int n = 0; n < X->dims(); ++n)
        for (int k = 0; k < X->count(n); ++k) m.img[n].push_back(nd(n, k));
    return m;
}

SMap compose(const SMap& g, const SMap& f) {
    SMap m{f.dom, g.cod, {}};
    m.img.resize(f.dom->dims());
    for (int n = 0; n < static_cast<int>(f.img.size()) && n < f.dom->dims(); ++n) {
        if (g.cod->truncated && n > g.cod->D) continue;
        for (auto& y : f.img[n]) m.img[n].push_back(g.apply(y));
    }
    return m;
}

std::vector<std::string> validate_map(const SMap& f) {
    std::vector<std::string> diag;
    const SSet& A = *f.dom;
    const SSet& X = *f.cod;
    if (static_cast<int>(f.img.size()) < A.dims()) {
        diag.push_back("assignment missing dimensions");
        return diag;
    }
    for (int n = 0; n < A.dims(); ++n) {
        // Above a truncated codomain's bound the map is left undefined.
        if (X.truncated && n > X.D && f.img[n].empty()) continue;
        if (static_cast<int>(f.img[n].size()) != A.count(n)) {
            diag.push_back("assignment size mismatch in dim " + std::to_string(n));
            return diag;
        }
        for (int k = 0; k < A.count(n); ++k) {
            const Formal& y = f.img[n][k];
            if (!formal_ok(X, y) || y.dim() != n) {
                diag.push_back(A.name(n, k) + ": image malformed");
                continue;
            }
        }
    }
    if (!diag.empty()) return diag;
    for (int n = 1; n < A.dims(); ++n)
        for (int k = 0; k < static_cast<int>(f.img[n].size()); ++k)
            for (int i = 0; i <= n; ++i) {
                Formal lhs = face(X, f.img[n][k], i);
                Formal rhs = f.apply(A.faces(n, k)[i]);
                if (lhs != rhs) diag.push_back(A.name(n, k) + ": face d" + std::to_string(i) + " not preserved");
            }
    return diag;
}

bool maps_equal(const SMap& f, const SMap& g) { return f.img == g.img; }

bool is_mono(const SMap& f) {
    std::set<Formal> seen;
    for (auto& row : f.img)
        for (auto& y : row) {
            if (y.degenerate()) return false;
            if (!seen.insert(y).second) return false;
        }
    return true;
}

int Sub::total() const {
    int t = 0;
    for (auto& r : in)
        for (char c : r) t += c ? 1 : 0;
    return t;
}

std::vector<int> Sub::counts() const {
    std::vector<int> c;
    for (auto& r : in) {
        int t = 0;
        for (char x : r) t += x ? 1 : 0;
        c.push_back(t);
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

Sub empty_sub(SP X) {
    Sub s{X, {}};
    s.in.resize(X->dims());
    for (int n = 0; n < X->dims(); ++n) s.in[n].assign(X->count(n), 0);
    return s;
}

Sub full_sub(SP X) {
    Sub s = empty_sub(X);
    for (auto& r : s.in) std::fill(r.begin(), r.end(), 1);
    return s;
}

Sub closure(Sub s) {
    const SSet& X = *s.amb;
    for (int n = X.dims() - 1; n >= 1; --n)
        for (int k = 0; k < X.count(n); ++k)
            if (s.in[n][k])
                for (auto& f : X.faces(n, k)) s.in[f.bdim][f.idx] = 1;
    return s;
}

Sub generated(SP X, const std::vector<Formal>& cells) {
    Sub s = empty_sub(X);
    for (auto& c : cells) s.in[c.bdim][c.idx] = 1;
    return closure(std::move(s));
}

static void same_ambient(const Sub& a, const Sub& b) {
    if (a.amb != b.amb) throw Error("subobjects of different ambients");
}

Sub sub_union(const Sub& a, const Sub& b) {
    same_ambient(a, b);
    Sub s = a;
    for (size_t n = 0; n < s.in.size(); ++n)
        for (size_t k = 0; k < s.in[n].size(); ++k) s.in[n][k] = a.in[n][k] || b.in[n][k];
    return s;
}

Sub sub_intersection(const Sub& a, const Sub& b) {
    same_ambient(a, b);
    Sub s = a;
    for (size_t n = 0; n < s.in.size(); ++n)
        for (size_t k = 0; k < s.in[n].size(); ++k) s.in[n][k] = a.in[n][k] && b.in[n][k];
    return s;
}

bool sub_equal(const Sub& a, const Sub& b) {
    same_ambient(a, b);
    return a.in == b.in;
}

bool sub_subset(const Sub& a, const Sub& b) {
    same_ambient(a, b);
    for (size_t n = 0; n < a.in.size(); ++n)
        for (size_t k = 0; k < a.in[n].size(); ++k)
            if (a.in[n][k] && !b.in[n][k]) return false;
    return true;
}

std::vector<Formal> complement(const Sub& s) {
    std::vector<Formal> out;
    for (int n = 0; n < static_cast<int>(s.in.size()); ++n)
        for (int k = 0; k < static_cast<int>(s.in[n].size()); ++k)
            if (!s.in[n][k]) out.push_back(nd(n, k));
    return out;
}

Sub image(const SMap& f) { return image_of(f, full_sub(f.dom)); }

Sub image_of(const SMap& f, const Sub& a) {
    Sub s = empty_sub(f.cod);
    for (int n = 0; n < static_cast<int>(f.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(f.img[n].size()); ++k)
            if (a.has(n, k)) s.in[f.img[n][k].bdim][f.img[n][k].idx] = 1;
    return closure(std::move(s));
}

Embedded realize(const Sub& s) {
    const SSet& X = *s.amb;
    SSet Y;
    Y.D = X.D;
    Y.truncated = X.truncated;
    std::vector<std::vector<int>> pos(X.dims());
    SMap incl;
    for (int n = 0; n < X.dims(); ++n) {
        pos[n].assign(X.count(n), -1);
        for (int k = 0; k < X.count(n); ++k) {
            if (!s.in[n][k]) continue;
            std::vector<Formal> fs;
            if (n > 0)
                for (auto f : X.faces(n, k)) {
                    if (pos[f.bdim][f.idx] < 0) throw Error("subobject not closed under faces");
                    f.idx = pos[f.bdim][f.idx];
                    fs.push_back(f);
                }
            pos[n][k] = Y.add(n, X.name(n, k), fs);
        }
    }
    SP y = share(std::move(Y));
    incl.dom = y;
    incl.cod = s.amb;
    incl.img.resize(y->dims());
    for (int n = 0; n < X.dims(); ++n)
        for (int k = 0; k < X.count(n); ++k)
            if (pos[n][k] >= 0) incl.img[n].push_back(nd(n, k));
    return {y, incl};
}

SMap restrict_map(const SMap& f, const Embedded& e) { return compose(f, e.incl); }

SMap corestrict(const SMap& f, const Embedded& e) {
    const SSet& X = *e.incl.cod;
    std::vector<std::vector<int>> pos(X.dims());
    for (int n = 0; n < X.dims(); ++n) pos[n].assign(X.count(n), -1);
    for (int n = 0; n < static_cast<int>(e.incl.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(e.incl.img[n].size()); ++k)
            pos[n][e.incl.img[n][k].idx] = k;
    SMap g{f.dom, e.obj, f.img};
    for (auto& row : g.img)
        for (auto& y : row) {
            int p = pos[y.bdim][y.idx];
            if (p < 0) throw Error("map does not land in the subobject");
            y.idx = p;
        }
    return g;
}

SSet rename(const SSet& X, const std::map<std::pair<int, std::string>, std::string>& ren) {
    SSet Y;
    Y.D = X.D;
    Y.truncated = X.truncated;
    for (int n = 0; n < X.dims(); ++n)
        for (int k = 0; k < X.count(n); ++k) {
            auto it = ren.find({n, X.name(n, k)});
            std::string nm = it == ren.end() ? X.name(n, k) : it->second;
            Y.add(n, nm, n ? X.faces(n, k) : std::vector<Formal>{});
        }
    return Y;
}

}  // namespace sset

namespace sset {

SP crop(SP X, int D) {
    if (X->top() <= D && (!X->truncated || X->D <= D)) return X;
    Sub s = empty_sub(X);
    for (int n = 0; n <= D && n < X->dims(); ++n) std::fill(s.in[n].begin(), s.in[n].end(), 1);
    SSet Y = *realize(s).obj;
    Y.D = D;
    Y.truncated = true;
    return share(std::move(Y));
}

SMap lift_through(const SMap& phi, const SMap& m) {
    std::vector<std::map<int, int>> inv(phi.cod->dims());
    for (int n = 0; n < static_cast<int>(phi.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(phi.img[n].size()); ++k) {
            const Formal& f = phi.img[n][k];
            if (f.degenerate()) throw Error("lift_through: not an inclusion");
            inv[n][f.idx] = k;
        }
    SMap r{m.dom, phi.dom, {}};
    r.img.resize(m.img.size());
    for (int n = 0; n < static_cast<int>(m.img.size()); ++n)
        for (const Formal& f : m.img[n]) {
            auto it = f.bdim < static_cast<int>(inv.size()) ? inv[f.bdim].find(f.idx) : inv[0].end();
            if (f.bdim >= static_cast<int>(inv.size()) || it == inv[f.bdim].end())
                throw Error("lift_through: cell " + m.cod->fname(f) + " is outside the subobject");
            r.img[n].push_back(Formal{f.bdim, it->second, f.word});
        }
    return r;
}

}  // namespace sset
