#include <doctest.h>

#include "oracle.hpp"
#include "sset/random.hpp"
#include "sset/shapes.hpp"

using namespace sset;

namespace {

SMap from_empty(SP X) {
    Embedded E = realize(empty_sub(X));
    return E.incl;
}

bool same_report(const FibrancyReport& a, const FibrancyReport& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t k = 0; k < a.entries.size(); ++k) {
        auto& x = a.entries[k];
        auto& y = b.entries[k];
        if (x.name != y.name || x.verdict != y.verdict || x.maps_checked != y.maps_checked) return false;
        if (x.counterexample.has_value() != y.counterexample.has_value()) return false;
        if (x.counterexample && !maps_equal(*x.counterexample, *y.counterexample)) return false;
    }
    return a.overall() == b.overall();
}

}  // namespace

TEST_SUITE("lifting") {

TEST_CASE("extend agrees with generate-and-test on random problems") {
    Rng g(5);
    int lifts = 0, none = 0;
    for (int t = 0; t < 120; ++t) {
        auto p = random_lift_problem(g, 10, 10);
        INFO("trial " << t);
        auto r = extend(p.incl, p.f);
        REQUIRE(r.status != LiftStatus::Undecidable);
        size_t want = oracle::count_lifts(p.incl, p.f, 1);
        CHECK((r.status == LiftStatus::Lift) == (want > 0));
        if (r.map) {
            CHECK(validate_map(*r.map).empty());
            CHECK(maps_equal(compose(*r.map, p.incl), p.f));
            ++lifts;
        } else {
            ++none;
        }
        CHECK(count_extensions(p.incl, p.f, 30) == oracle::count_lifts(p.incl, p.f, 30));
    }
    CHECK(lifts > 0);
    CHECK(none > 0);
}

TEST_CASE("map enumeration agrees with generate-and-test") {
    Rng g(9);
    for (int t = 0; t < 30; ++t) {
        SP A = random_object(g, 8);
        SP X = random_object(g, 10);
        auto ms = enumerate_maps(A, X, 5000);
        REQUIRE(!ms.cap_exceeded);
        CHECK(ms.maps.size() == oracle::count_lifts(from_empty(A), from_empty(X), 5000));
        for (size_t p = 0; p < ms.maps.size(); ++p)
            for (size_t q = 0; q < p; ++q) CHECK_FALSE(maps_equal(ms.maps[p], ms.maps[q]));
    }
}

TEST_CASE("inner horns in a nerve have unique fillers") {
    SP N = nerve(poset_n(2), 3);
    auto h = horn(2, 1);
    auto ms = enumerate_maps(h.obj, N);
    CHECK(ms.maps.size() == oracle::count_lifts(from_empty(h.obj), from_empty(N), 1000));
    for (auto& f : ms.maps) CHECK(count_extensions(h.incl, f, 5) == 1);
    // the horn itself has no 2-simplex to fill with: its 7 formal 2-simplices are all degenerate
    CHECK(all_simplices(*h.obj, 2).size() == 7);
    CHECK(oracle::count_lifts(h.incl, identity(h.obj), 1) == 0);
    CHECK(extend(h.incl, identity(h.obj)).status == LiftStatus::NoLift);
}

TEST_CASE("truncated targets give undecidable problems") {
    SP J = build_J(2);
    REQUIRE(J->truncated);
    auto b = boundary(3);
    auto f = constant_map(b.obj, J, 0);
    CHECK(extend(b.incl, f).status == LiftStatus::Undecidable);
    auto d = boundary(2);
    CHECK(extend(d.incl, constant_map(d.obj, J, 0)).status == LiftStatus::Lift);
}

TEST_CASE("parallel and serial fibrancy agree") {
    FamilyBounds bounds;
    for (std::string obj : {"K", "Lambda(2,1)", "poset(2)@4", "pinched_simplex(2,0)"})
        for (std::string fam : {"horns", "inner-horns", "special-horns"}) {
            INFO(obj << " / " << fam);
            SP X = resolve(obj).obj;
            auto F = named_family(fam, bounds);
            CHECK(same_report(has_rlp(X, F), has_rlp_serial(X, F)));
        }
    Rng g(3);
    for (int t = 0; t < 10; ++t) {
        SP X = random_object(g, 14);
        auto F = horn_family(3, false);
        CHECK(same_report(has_rlp(X, F), has_rlp_serial(X, F)));
    }
}

TEST_CASE("fibrancy counterexamples do not extend") {
    SP L = resolve("Lambda(2,1)").obj;
    auto rep = has_rlp(L, horn_family(2, true));
    CHECK(rep.overall() == Verdict::Fail);
    bool found = false;
    for (auto& e : rep.entries)
        if (e.verdict == Verdict::Fail) {
            REQUIRE(e.counterexample.has_value());
            found = true;
        }
    CHECK(found);
    for (auto& e : rep.entries)
        if (e.counterexample) {
            auto fam = horn_family(2, true);
            for (auto& h : fam)
                if (h.name == e.name) CHECK(oracle::count_lifts(h.incl, *e.counterexample, 1) == 0);
        }
}

TEST_CASE("bounded homotopies through cylinders") {
    auto K = build_K();
    SP pt = standard_simplex(0);
    auto cyl = pointwise_cylinder(attachment("K"), pt);
    auto fa = constant_map(pt, K.obj, K.a);
    auto fb = constant_map(pt, K.obj, K.b);
    CHECK(homotopy_step(cyl, fa, fb).has_value());
    CHECK(homotopic_bounded(cyl, fa, fb, 1));
    CHECK(homotopic_bounded(cyl, fb, fa, 1));

    SP two = boundary(1).obj;
    auto g0 = constant_map(pt, two, 0);
    auto g1 = constant_map(pt, two, 1);
    CHECK_FALSE(homotopy_step(cyl, g0, g1).has_value());
    CHECK_FALSE(homotopic_bounded(cyl, g0, g1, 3));
    CHECK(homotopic_bounded(cyl, g0, g0, 1));
}

TEST_CASE("retract diagram checks") {
    // Lambda^1[2] -> Delta[2] as a retract of itself
    auto h = horn(2, 1);
    Retract r{h.incl, h.incl, identity(h.obj), identity(h.incl.cod), identity(h.obj), identity(h.incl.cod)};
    CHECK(verify_retract(r).empty());
    // a non-identity endomorphism breaks r s = id
    r.rB = constant_map(h.incl.cod, h.incl.cod, 0);
    CHECK_FALSE(verify_retract(r).empty());
}

}
