#include <doctest.h>

#include "sset/hcat.hpp"
#include "sset/io.hpp"

using namespace sset;

namespace {

int gen_index(const CategoryPresentation& p, const std::string& nm) {
    for (size_t k = 0; k < p.gens.size(); ++k)
        if (p.gens[k].name == nm) return static_cast<int>(k);
    return -2;
}

FiniteCategory non_thin() {
    return make_category({"A", "B", "C"}, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}, {0, 2, "hf"}},
                         {{{"h", "f"}, "hf"}, {{"h", "g"}, "hf"}});
}

}  // namespace

TEST_SUITE("hcat") {

TEST_CASE("presentation of K") {
    auto K = build_K();
    auto p = presentation(*K.obj);
    CHECK(p.objects.size() == 2);
    CHECK(p.gens.size() == 3);
    REQUIRE(p.rels.size() == 2);
    int k = gen_index(p, "k"), f = gen_index(p, "f"), g = gen_index(p, "g");
    bool gk = false, kf = false;
    for (auto& r : p.rels) {
        gk = gk || (r.g == g && r.f == k && r.h == -1);
        kf = kf || (r.g == k && r.f == f && r.h == -1);
    }
    CHECK(gk);
    CHECK(kf);
    CHECK(bounded_hom(p, K.a, K.a, 4).classes.size() == 1);
    // f = (g k) f = g (k f) = g passes through a word of length 3, and g k f
    // only joins once words of length 5 are allowed
    CHECK(bounded_hom(p, K.b, K.a, 2).classes.size() == 2);
    CHECK_FALSE(bounded_hom(p, K.b, K.a, 4).complete);
    CHECK(bounded_hom(p, K.b, K.a, 5).classes.size() == 1);
}

TEST_CASE("bounded hom-sets of nerves match the category") {
    std::vector<FiniteCategory> cats{poset_n(2), poset_n(3), free_iso(), non_thin()};
    for (auto& C : cats) {
        SP N = nerve(C, 3);
        auto p = presentation(*N);
        for (int x = 0; x < static_cast<int>(C.objects.size()); ++x)
            for (int y = 0; y < static_cast<int>(C.objects.size()); ++y) {
                INFO(C.objects[x] << " -> " << C.objects[y]);
                auto h = bounded_hom(p, x, y, 4);
                CHECK(h.classes.size() == C.hom(x, y).size());
            }
    }
}

TEST_CASE("pre-isomorphism certificates for kappa") {
    auto K = build_K();
    auto v = preiso_search(K.obj, K.kappa, 7);
    REQUIRE(v.verdict == PreIso::Certified);
    CHECK(v.tiling == "inv(C(2;c0),C(2;c0))");
    REQUIRE(v.map.has_value());
    auto T = resolve(v.tiling);
    CHECK(validate_map(*v.map).empty());
    CHECK(v.map->apply(T.edges.at("e")) == K.kappa);
}

TEST_CASE("edges of Delta[1] are not pre-isomorphisms") {
    SP d1 = standard_simplex(1);
    auto v = preiso_search(d1, nd(1, 0), 11);
    CHECK(v.verdict != PreIso::Certified);
    auto F = find_refuting_functor(*d1, poset_n(1), nd(1, 0));
    REQUIRE(F.has_value());
    CHECK(noniso_functor_check(*d1, *F, nd(1, 0)));
}

TEST_CASE("example T functor") {
    auto T = build_example_T();
    for (int k = 0; k < T.obj->count(1); ++k) {
        INFO(T.obj->name(1, k));
        bool refuted = noniso_functor_check(*T.obj, T.functor, nd(1, k));
        CHECK(refuted == (nd(1, k) != T.e));
    }
    CHECK_FALSE(find_refuting_functor(*T.obj, T.functor.target, T.e).has_value());
    CHECK(find_refuting_functor(*T.obj, T.functor.target, nd(1, T.obj->at(1, "wx"))).has_value());
}

TEST_CASE("functor checks reject non-functors") {
    auto T = build_example_T();
    const auto& C = T.functor.target;
    // an arrow with the wrong endpoints
    auto bad = T.functor;
    int xz = bad.arrows.at("xz");
    for (int a = 0; a < static_cast<int>(C.arrows.size()); ++a)
        if (C.arrows[a].src != C.arrows[xz].src) {
            bad.arrows["xz"] = a;
            break;
        }
    CHECK_THROWS_AS(noniso_functor_check(*T.obj, bad, T.e), NotAFunctor);
    // same endpoints, but some relation breaks
    bool broke = false;
    for (auto& [edge, arrow] : T.functor.arrows) {
        for (int a : C.hom(C.arrows[arrow].src, C.arrows[arrow].tgt)) {
            if (a == arrow) continue;
            auto alt = T.functor;
            alt.arrows[edge] = a;
            try {
                noniso_functor_check(*T.obj, alt, T.e);
            } catch (const NotAFunctor&) {
                broke = true;
            }
            if (broke) break;
        }
        if (broke) break;
    }
    CHECK(broke);
}

TEST_CASE("almost-augmented edge witnesses") {
    auto kap = attachment("K");
    SP d2 = standard_simplex(2);
    auto g1 = glue_edge(d2, nd(1, d2->at(1, "01")), kap, "K1");
    auto g2 = glue_edge(g1.obj, g1.inA.apply(nd(1, d2->at(1, "12"))), kap, "K2");
    Formal e02 = compose(g2.inA, g1.inA).apply(nd(1, d2->at(1, "02")));
    CHECK_FALSE(almost_edge_search(g2.obj, e02, kap, 1).has_value());
    auto w = almost_edge_search(g2.obj, e02, kap, 2);
    REQUIRE(w.has_value());
    CHECK(w->tri.size() == 2);
    CHECK(w->map.apply(w->tri.edge) == e02);
    CHECK(validate_map(w->map).empty());

    auto T = build_example_T();
    CHECK_FALSE(almost_edge_search(T.obj, T.e, kap, 3).has_value());
}

}
