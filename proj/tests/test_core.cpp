#include "doctest.h"
#include "oracle.hpp"
#include "sset/colimit.hpp"
#include "sset/iso.hpp"
#include "sset/random.hpp"
#include "sset/shapes.hpp"

using namespace sset;

namespace {

std::vector<int> C(std::initializer_list<int> l) { return l; }

// All raw words of length len over [0, m-1].
void raw_words(int m, int len, Word& cur, std::vector<Word>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    int dimHere = m - static_cast<int>(cur.size());  // operator applied at this depth lands in dim dimHere
    for (int j = 0; j < dimHere; ++j) {
        cur.push_back(j);
        raw_words(m, len, cur, out);
        cur.pop_back();
    }
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("normalized words agree with composing raw degeneracies") {
    for (int m = 1; m <= 5; ++m)
        for (int len = 1; len <= m; ++len) {
            std::vector<Word> ws;
            Word cur;
            raw_words(m, len, cur, ws);
            for (auto& raw : ws) {
                Word w = normalize_word(raw);
                CHECK(is_admissible(w));
                CHECK(word_to_surjection(w, m) == oracle::raw_surjection(raw, m));
            }
        }
}

TEST_CASE("surjections and admissible words are inverse") {
    for (int m = 0; m <= 5; ++m)
        for (int k = 0; k <= m; ++k) {
            // every monotone surjection [m] -> [k]
            std::vector<int> s(m + 1);
            std::function<void(int, int)> go = [&](int p, int v) {
                if (p > m) {
                    if (v == k) {
                        auto w = surjection_to_word(s);
                        CHECK(static_cast<int>(w.size()) == m - k);
                        CHECK(word_to_surjection(w, m) == s);
                    }
                    return;
                }
                for (int nv = (p == 0 ? 0 : v); nv <= std::min(k, (p == 0 ? 0 : v + 1)); ++nv) {
                    s[p] = nv;
                    go(p + 1, nv);
                }
            };
            go(0, 0);
        }
}

TEST_CASE("simplicial identities hold on every catalog object") {
    for (std::string nm : {"Delta(3)", "K", "J@4", "I2", "exampleT", "isoplex(3,1)@4", "pinched_simplex(2,0)",
                           "aug_simplex(3,1;K)", "poset(3)@4", "iso()@4", "cod:aug_horn(3,1,1;K)", "dom:aug_horn(3,1,1;K)",
                           "inv(C(3;c1,c0),C(3;c0,c0))"}) {
        INFO(nm);
        CHECK(validate(*resolve(nm).obj).empty());
    }
}

TEST_CASE("validator names the offending cell") {
    SSet X;
    X.D = 2;
    X.add(0, "a");
    X.add(0, "b");
    int e = X.add(1, "e", {nd(0, 1), nd(0, 0)});
    // d0 d2 = b but d1 d0 = a
    X.add(2, "bad", {nd(1, e), nd(1, e), nd(1, e)});
    auto d = validate(X);
    REQUIRE(!d.empty());
    CHECK(d.front().find("bad") != std::string::npos);
}

TEST_CASE("nerve counts match chain counting") {
    CHECK(nerve(free_iso(), 2)->counts() == C({2, 2, 2}));
    CHECK(nerve(free_iso(), 3)->counts() == oracle::nerve_counts(free_iso(), 3));
    for (int n = 0; n <= 3; ++n) CHECK(nerve(poset_n(n), 4)->counts() == oracle::nerve_counts(poset_n(n), 4));
    auto nt = make_category({"A", "B", "C"}, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}, {0, 2, "hf"}},
                            {{{"h", "f"}, "hf"}, {{"h", "g"}, "hf"}});
    CHECK(nt.check().empty());
    CHECK(nerve(nt, 3)->counts() == oracle::nerve_counts(nt, 3));
    CHECK(build_J(3)->counts() == C({2, 2, 2, 2}));
}

TEST_CASE("pushouts match the presheaf oracle") {
    auto d2 = standard_simplex(2);
    // collapse of 0 -> 1
    auto e01 = edge_map(d2, nd(1, d2->at(1, "01")));
    auto P = pushout(point_edge(), e01);
    CHECK(P.obj->counts() == C({2, 2, 1}));
    CHECK(oracle::pushout_counts(point_edge(), e01, 3) == P.obj->counts());
    CHECK(validate(*P.obj).empty());
    // pinched along 1 -> 2
    auto e12 = edge_map(d2, nd(1, d2->at(1, "12")));
    CHECK(glue_edge(d2, nd(1, d2->at(1, "12")), point_edge()).obj->counts() == C({2, 2, 1}));
    CHECK(oracle::pushout_counts(point_edge(), e12, 3) == C({2, 2, 1}));
    // K from two pinched simplices
    auto p1 = glue_edge(d2, nd(1, d2->at(1, "02")), point_edge()).obj;
    auto x = edge_map(p1, nd(1, p1->at(1, "01")));
    auto y = edge_map(p1, nd(1, p1->at(1, "12")));
    CHECK(oracle::pushout_counts(y, x, 3) == C({2, 3, 2}));
    CHECK(build_K().obj->counts() == C({2, 3, 2}));
    CHECK(skeleton(build_K().obj, 1).obj->counts() == C({2, 3}));
    // horn with K along 0 -> 1
    auto h = horn(2, 0);
    auto hk = glue_edge(h.obj, nd(1, h.obj->at(1, "01")), attachment("K"));
    CHECK(hk.obj->counts() == C({3, 4, 2}));
    CHECK(oracle::pushout_counts(attachment("K"), edge_map(h.obj, nd(1, h.obj->at(1, "01"))), 3) == C({3, 4, 2}));
}

TEST_CASE("random pushouts match the presheaf oracle") {
    Rng g(11);
    int checked = 0;
    for (int t = 0; t < 40; ++t) {
        SP X = random_object(g, 14);
        Embedded a = random_inclusion(g, 10);
        auto maps = enumerate_maps(a.obj, X, 200);
        if (maps.maps.empty()) continue;
        auto& f = maps.maps[std::uniform_int_distribution<size_t>(0, maps.maps.size() - 1)(g)];
        auto P = pushout(f, a.incl);
        INFO("trial " << t);
        CHECK(validate(*P.obj).empty());
        int D = std::max(P.obj->top(), std::max(X->top(), a.incl.cod->top()));
        CHECK(P.obj->counts() == oracle::pushout_counts(f, a.incl, D));
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("products match the pair oracle") {
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q) {
            auto P = product(standard_simplex(p), standard_simplex(q), p + q);
            CHECK(P.obj->counts() == oracle::product_counts(*standard_simplex(p), *standard_simplex(q), p + q));
            CHECK(validate(*P.obj).empty());
        }
    auto K = build_K().obj;
    CHECK(product(standard_simplex(1), K, 3).obj->counts() == oracle::product_counts(*standard_simplex(1), *K, 3));
}

TEST_CASE("cylinders") {
    auto d1 = standard_simplex(1);
    // identity iota: the cylinder is the product
    auto cyl = pointwise_cylinder(attachment("Delta(1)"), d1);
    CHECK(iso_check(cyl.obj, product(d1, d1, 2).obj).has_value());
    // K on both vertical edges of the square
    auto ck = pointwise_cylinder(attachment("K"), d1);
    CHECK(validate(*ck.obj).empty());
    auto sq = product(d1, d1, 2);
    // oracle: glue K twice onto Delta[1] x Delta[1]
    auto v0 = sq.pair(simplex_formal(*d1, {0, 1}), simplex_formal(*d1, {0, 0}));
    auto v1 = sq.pair(simplex_formal(*d1, {0, 1}), simplex_formal(*d1, {1, 1}));
    auto g1 = glue_edge(sq.obj, *v0, attachment("K"));
    auto g2 = glue_edge(g1.obj, g1.inA.apply(*v1), attachment("K"));
    CHECK(ck.obj->counts() == g2.obj->counts());
    CHECK(oracle::pushout_counts(attachment("K"), edge_map(g1.obj, g1.inA.apply(*v1)), 3) == ck.obj->counts());
}

TEST_CASE("subobject algebra") {
    auto hn = horn(2, 0);
    SP d2 = hn.incl.cod;
    Sub h = image(hn.incl);
    Sub f0 = generated(d2, {nd(1, d2->at(1, "12"))});
    Sub both = sub_intersection(h, f0);
    // Lambda^0[2] has the edges 01 and 02; the d_0 face is the edge 12: they share vertices 1 and 2.
    CHECK(both.counts() == C({2}));
    CHECK(both.has(0, d2->at(0, "1")));
    CHECK(both.has(0, d2->at(0, "2")));
    CHECK(sub_equal(sub_union(h, f0), generated(d2, {nd(1, d2->at(1, "01")), nd(1, d2->at(1, "02")), nd(1, d2->at(1, "12"))})));
    CHECK(complement(sub_union(h, f0)).size() == 1);
}

TEST_CASE("isomorphism search agrees with bijection search") {
    std::vector<SP> objs;
    for (std::string nm : {"K", "Delta(2)", "pinched_simplex(2,0)", "pinched_simplex(2,1)", "I2", "J@2",
                           "inv(C(2;c0),C(3;c0,c0))", "inv(C(3;c0,c0),C(2;c0))", "Lambda(2,1)", "Lambda(2,0)"})
        objs.push_back(resolve(nm).obj);
    Rng g(17);
    while (objs.size() < 40) {
        SP X = random_object(g, 12);
        if (X->total() <= 12) objs.push_back(X);
    }
    int isos = 0, pairs = 0;
    for (size_t p = 0; p < objs.size(); ++p)
        for (size_t q = p; q < objs.size(); ++q) {
            if (objs[p]->counts() != objs[q]->counts()) continue;
            ++pairs;
            bool want = oracle::brute_iso(*objs[p], *objs[q]);
            auto got = iso_check(objs[p], objs[q]);
            CHECK(got.has_value() == want);
            if (got) {
                CHECK(validate_map(*got).empty());
                ++isos;
            }
        }
    CHECK(pairs > objs.size());
    CHECK(isos > 0);
}

TEST_CASE("isomorphism search") {
    auto K = build_K();
    CHECK(iso_check(K.obj, resolve("inv(C(2;c0),C(2;c0))").obj).has_value());
    CHECK(!iso_check(K.obj, build_J(2)).has_value());
}

}
