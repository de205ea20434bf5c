#include "sset/iso.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace sset {

namespace {

using Colors = std::vector<std::vector<int>>;

// Refines cell colors jointly over both objects; faces are position-labelled.
std::pair<Colors, Colors> refine(const SSet& X, const SSet& Y) {
    auto init = [](const SSet& S) {
        Colors c(S.dims());
        for (int n = 0; n < S.dims(); ++n) c[n].assign(S.count(n), 0);
        return c;
    };
    Colors cx = init(X), cy = init(Y);
    using Sig = std::vector<long>;
    auto signature = [](const SSet& S, const Colors& c, int n, int k,
                        const std::vector<std::vector<std::vector<std::pair<int, int>>>>& cof) {
        Sig s{n, c[n][k]};
        if (n > 0)
            for (auto& f : S.faces(n, k)) {
                s.push_back(f.bdim);
                s.push_back(c[f.bdim][f.idx]);
                s.push_back(static_cast<long>(f.word.size()));
                for (int w : f.word) s.push_back(w);
                s.push_back(-1);
            }
        std::vector<std::pair<int, int>> up = cof[n][k];
        std::sort(up.begin(), up.end());
        s.push_back(-2);
        for (auto [a, b] : up) {
            s.push_back(a);
            s.push_back(b);
        }
        return s;
    };
    auto cofaces = [](const SSet& S, const Colors& c) {
        std::vector<std::vector<std::vector<std::pair<int, int>>>> cof(S.dims());
        for (int n = 0; n < S.dims(); ++n) cof[n].resize(S.count(n));
        for (int n = 1; n < S.dims(); ++n)
            for (int k = 0; k < S.count(n); ++k)
                for (int i = 0; i <= n; ++i) {
                    auto& f = S.faces(n, k)[i];
                    cof[f.bdim][f.idx].push_back({c[n][k] * 64 + i, n});
                }
        return cof;
    };
    int classes = -1;
    for (int round = 0; round < 64; ++round) {
        std::map<Sig, int> ids;
        auto ofx = cofaces(X, cx), ofy = cofaces(Y, cy);
        Colors nx = cx, ny = cy;
        for (int n = 0; n < X.dims(); ++n)
            for (int k = 0; k < X.count(n); ++k) nx[n][k] = ids.emplace(signature(X, cx, n, k, ofx), ids.size()).first->second;
        for (int n = 0; n < Y.dims(); ++n)
            for (int k = 0; k < Y.count(n); ++k) ny[n][k] = ids.emplace(signature(Y, cy, n, k, ofy), ids.size()).first->second;
        cx = nx;
        cy = ny;
        int now = static_cast<int>(ids.size());
        if (now == classes) break;
        classes = now;
    }
    return {cx, cy};
}

}  // namespace

std::optional<SMap> iso_check(SP Xp, SP Yp, const Partial& fixed) {
    const SSet& X = *Xp;
    const SSet& Y = *Yp;
    if (X.counts() != Y.counts()) return std::nullopt;
    if (X.truncated != Y.truncated || (X.truncated && X.D != Y.D)) return std::nullopt;
    auto [cx, cy] = refine(X, Y);
    int dims = static_cast<int>(X.counts().size());

    std::vector<std::vector<int>> img(dims), used(dims);
    for (int n = 0; n < dims; ++n) {
        img[n].assign(X.count(n), -1);
        used[n].assign(Y.count(n), -1);
    }
    // candidate lists per cell
    std::vector<std::vector<std::vector<int>>> cand(dims);
    for (int n = 0; n < dims; ++n) {
        cand[n].resize(X.count(n));
        for (int k = 0; k < X.count(n); ++k)
            for (int y = 0; y < Y.count(n); ++y)
                if (cx[n][k] == cy[n][y]) cand[n][k].push_back(y);
    }
    // (coface dim, coface index, face position) for every base cell
    std::vector<std::vector<std::vector<std::array<int, 3>>>> up(dims);
    for (int n = 0; n < dims; ++n) up[n].resize(X.count(n));
    for (int n = 1; n < dims; ++n)
        for (int k = 0; k < X.count(n); ++k)
            for (int i = 0; i <= n; ++i) {
                auto& f = X.faces(n, k)[i];
                up[f.bdim][f.idx].push_back({n, k, i});
            }
    auto consistent = [&](int n, int k, int y) {
        if (used[n][y] >= 0 && used[n][y] != k) return false;
        if (n > 0) {
            const auto& fx = X.faces(n, k);
            const auto& fy = Y.faces(n, y);
            for (int i = 0; i <= n; ++i) {
                int m = img[fx[i].bdim][fx[i].idx];
                if (m >= 0 && Formal{fx[i].bdim, m, fx[i].word} != fy[i]) return false;
            }
        }
        for (auto [c, ck, i] : up[n][k]) {
            int cy = img[c][ck];
            if (cy < 0) continue;
            const Formal& f = X.faces(c, ck)[i];
            if (Formal{n, y, f.word} != Y.faces(c, cy)[i]) return false;
        }
        return true;
    };
    for (int n = 0; n < static_cast<int>(fixed.size()) && n < dims; ++n)
        for (int k = 0; k < static_cast<int>(fixed[n].size()); ++k) {
            int y = fixed[n][k];
            if (y < 0) continue;
            if (std::find(cand[n][k].begin(), cand[n][k].end(), y) == cand[n][k].end()) return std::nullopt;
            if (used[n][y] >= 0) return std::nullopt;
            if (!consistent(n, k, y)) return std::nullopt;
            img[n][k] = y;
            used[n][y] = k;
        }

    std::vector<Formal> order;
    for (int n = 0; n < dims; ++n) {
        std::vector<int> ks;
        for (int k = 0; k < X.count(n); ++k)
            if (img[n][k] < 0) ks.push_back(k);
        std::stable_sort(ks.begin(), ks.end(),
                         [&](int a, int b) { return cand[n][a].size() < cand[n][b].size(); });
        for (int k : ks) order.push_back(nd(n, k));
    }

    std::function<bool(size_t)> go = [&](size_t p) -> bool {
        if (p == order.size()) return true;
        int n = order[p].bdim, k = order[p].idx;
        for (int y : cand[n][k]) {
            if (!consistent(n, k, y)) continue;
            img[n][k] = y;
            used[n][y] = k;
            if (go(p + 1)) return true;
            img[n][k] = -1;
            used[n][y] = -1;
        }
        return false;
    };
    if (!go(0)) return std::nullopt;

    SMap f{Xp, Yp, {}};
    f.img.resize(X.dims());
    for (int n = 0; n < dims; ++n)
        for (int k = 0; k < X.count(n); ++k) f.img[n].push_back(nd(n, img[n][k]));
    if (!validate_map(f).empty()) throw Error("iso_check produced an invalid map");
    return f;
}

std::optional<SMap> iso_under(const SMap& a, const SMap& b) {
    if (!is_mono(a) || !is_mono(b)) throw Error("iso_under: legs must be inclusions");
    Partial fixed(a.cod->dims());
    for (int n = 0; n < a.cod->dims(); ++n) fixed[n].assign(a.cod->count(n), -1);
    for (int n = 0; n < static_cast<int>(a.img.size()); ++n)
        for (int k = 0; k < static_cast<int>(a.img[n].size()); ++k) {
            if (n >= static_cast<int>(b.img.size()) || k >= static_cast<int>(b.img[n].size())) return std::nullopt;
            fixed[n][a.img[n][k].idx] = b.img[n][k].idx;
        }
    return iso_check(a.cod, b.cod, fixed);
}

}  // namespace sset
