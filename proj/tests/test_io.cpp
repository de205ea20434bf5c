#include <doctest.h>

#include "sset/io.hpp"
#include "sset/report.hpp"

using namespace sset;

namespace {

const std::vector<std::string> kCatalog{
    "Delta(0)", "Delta(3)", "boundary(3)", "Lambda(3,1)", "K", "J@3", "I2", "exampleT", "isoplex(2,1)@3",
    "pinched_simplex(2,1)", "aug_simplex(2,0;K)", "poset(2)@3", "iso()@3", "cod:aug_horn(2,1,1;K)",
    "dom:aug_horn(3,1,1;K)", "inv(C(2;c0),C(3;c1,c0))", "A_I(1,a)", "tiling(C(3;c1,c0))"};

std::string message_of(const json& j) {
    try {
        object_from_json(j);
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("object files round-trip byte for byte") {
    for (auto& nm : kCatalog) {
        INFO(nm);
        auto item = resolve(nm);
        SP X = item.incl ? item.incl->dom : item.obj;
        auto j = object_to_json(*X, item.incl ? std::map<std::string, Formal>{} : item.edges);
        std::map<std::string, Formal> edges;
        SP back = object_from_json(json::parse(j.dump(2)), &edges);
        CHECK(back->counts() == X->counts());
        CHECK(object_to_json(*back, edges).dump(2) == j.dump(2));
    }
}

TEST_CASE("malformed object files are rejected with the offending cell") {
    auto good = object_to_json(*build_K().obj);
    REQUIRE(message_of(good).empty());

    auto wrong_format = good;
    wrong_format["format"] = "sset-map";
    CHECK(!message_of(wrong_format).empty());

    auto wrong_version = good;
    wrong_version["version"] = kFormatVersion + 1;
    CHECK(!message_of(wrong_version).empty());

    auto dup = good;
    dup["cells"][1][1] = dup["cells"][1][0];
    CHECK(!message_of(dup).empty());

    auto short_faces = good;
    std::string first2 = good["cells"][2][0];
    short_faces["faces"][2][0].erase(0);
    CHECK(message_of(short_faces).find(first2) != std::string::npos);

    // point the last face of a 2-cell at an edge with the wrong endpoints
    auto bent = good;
    std::string e = good["faces"][2][0][0]["base"];
    for (auto& c : good["cells"][1])
        if (c != e) {
            bent["faces"][2][0][0] = json{{"base", c}, {"word", json::array()}};
            break;
        }
    CHECK(message_of(bent).find(first2) != std::string::npos);

    auto unknown = good;
    unknown["faces"][2][0][1] = json{{"base", "nope"}, {"word", json::array()}};
    CHECK(!message_of(unknown).empty());

    auto inadmissible = good;
    inadmissible["faces"][2][0][1] = json{{"base", good["cells"][0][0]}, {"word", {0, 1}}};
    CHECK(!message_of(inadmissible).empty());
}

TEST_CASE("maps and categories round-trip") {
    auto K = build_K();
    auto f = K.edge();
    auto back = map_from_json(json::parse(map_to_json(f).dump()), f.dom, f.cod);
    CHECK(maps_equal(back, f));
    auto bad = map_to_json(f);
    bad[1][0]["base"] = K.obj->name(0, K.a);
    CHECK_THROWS_AS(map_from_json(bad, f.dom, f.cod), Error);

    auto C = build_example_T().functor.target;
    auto Cj = category_to_json(C);
    auto C2 = category_from_json(Cj);
    CHECK(category_to_json(C2) == Cj);
    CHECK(C2.check().empty());
}

TEST_CASE("functor certificates round-trip and re-check") {
    auto fc = example_T_functor_certificate();
    auto j = functor_to_json(fc);
    auto back = functor_from_json(json::parse(j.dump()));
    CHECK(functor_to_json(back) == j);
    auto T = resolve(back.object);
    for (int k = 0; k < T.obj->count(1); ++k)
        if (T.obj->name(1, k) != "xy") CHECK(noniso_functor_check(*T.obj, back.functor, nd(1, k)));
}

TEST_CASE("triangulations round-trip") {
    for (auto& t : enumerate_triangulations(4)) {
        auto back = triangulation_from_json(triangulation_to_json(t));
        CHECK(back.cycle == t.cycle);
        CHECK(back.tris == t.tris);
    }
}

TEST_CASE("reports replay and catch tampering") {
    for (std::string id : {"E2", "E7", "E8"}) {
        auto rep = run_experiment(id);
        auto j = json::parse(report_to_json(rep).dump());
        INFO(id);
        CHECK(replay_report(j).empty());
    }

    auto j = report_to_json(run_experiment("E7"));
    bool tampered = false;
    for (auto& c : j["checks"])
        if (c.contains("witness") && c["witness"]["kind"] == "certificate") {
            c["witness"]["certificate"]["steps"].erase(0);
            tampered = true;
            break;
        }
    REQUIRE(tampered);
    CHECK(!replay_report(j).empty());

    auto w = report_to_json(run_experiment("E2"));
    bool changed = false;
    for (auto& c : w["checks"])
        if (c.contains("witness") && c["witness"]["kind"] == "no-lift") {
            // Lambda^1[2] does fill into Delta[2]
            c["witness"]["object"] = "Delta(2)";
            changed = true;
            break;
        }
    REQUIRE(changed);
    CHECK(!replay_report(w).empty());
}

TEST_CASE("fibrancy reports and dot output") {
    auto r = run_fibrancy("Lambda(2,1)", "inner-horns", FamilyBounds{2, 7, 4});
    auto j = fibrancy_to_json(r);
    CHECK(j["format"] == "sset-fibrancy");
    CHECK(j["overall"] == "fail");
    CHECK(j["entries"].size() == r.entries.size());
    auto dot = to_dot(*build_K().obj, "K");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("\"k\"") != std::string::npos);
}

}
