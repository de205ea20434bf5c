#include "sset/random.hpp"

namespace sset {

namespace {

int pick(Rng& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

std::optional<SMap> random_map(SP A, SP X, Rng& g, size_t cap) {
    auto L = enumerate_maps(A, X, cap);
    if (L.maps.empty()) return std::nullopt;
    return L.maps[pick(g, 0, static_cast<int>(L.maps.size()) - 1)];
}

}  // namespace

SP random_object(Rng& g, int max_cells) {
    SP X = standard_simplex(pick(g, 0, 2));
    int rounds = pick(g, 1, 4);
    for (int r = 0; r < rounds; ++r) {
        int n = pick(g, 1, 3);
        Embedded e;
        switch (pick(g, 0, 2)) {
            case 0: e = boundary(n); break;
            case 1: e = horn(n, pick(g, 0, n)); break;
            default: e = face_sub(n, pick(g, 0, n)); break;
        }
        auto f = random_map(e.incl.dom, X, g, 400);
        if (!f) continue;
        SP next = pushout(*f, e.incl).obj;
        if (next->total() > max_cells) break;
        X = next;
    }
    if (pick(g, 0, 4) == 0) {
        SP P = product(standard_simplex(1), X, X->top() + 1).obj;
        if (P->total() <= max_cells) X = P;
    }
    return X;
}

Sub random_sub(SP X, Rng& g, double p) {
    Sub s = empty_sub(X);
    std::bernoulli_distribution keep(p);
    for (int n = 0; n < X->dims(); ++n)
        for (int k = 0; k < X->count(n); ++k)
            if (keep(g)) s.in[n][k] = 1;
    return closure(s);
}

Embedded random_inclusion(Rng& g, int max_cells) { return realize(random_sub(random_object(g, max_cells), g)); }

LiftProblem random_lift_problem(Rng& g, int max_b, int max_x) {
    for (;;) {
        Embedded a = random_inclusion(g, max_b);
        SP X = random_object(g, max_x);
        auto f = random_map(a.obj, X, g, 400);
        if (f) return {a.incl, *f};
    }
}

}  // namespace sset
