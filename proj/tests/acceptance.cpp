// Runs the ten acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is the number of failing criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>

#include "oracle.hpp"
#include "sset/io.hpp"
#include "sset/random.hpp"
#include "sset/report.hpp"

using namespace sset;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = false;
    std::string detail;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string S(long v) { return std::to_string(v); }

std::vector<std::string> catalog_names() {
    std::vector<std::string> v;
    for (int n = 0; n <= 4; ++n) v.push_back("Delta(" + S(n) + ")");
    for (int n = 1; n <= 4; ++n) {
        v.push_back("boundary(" + S(n) + ")");
        v.push_back("spine(" + S(n) + ")");
        for (int i = 0; i <= n; ++i) {
            v.push_back("horn(" + S(n) + "," + S(i) + ")");
            v.push_back("Lambda(" + S(n) + "," + S(i) + ")");
        }
        for (int i = 0; i < n; ++i) {
            v.push_back("iso_horn(" + S(n) + "," + S(i) + ")@4");
            v.push_back("isoplex(" + S(n) + "," + S(i) + ")@4");
            v.push_back("aug_simplex(" + S(n) + "," + S(i) + ";K)");
            v.push_back("pinched_simplex(" + S(n) + "," + S(i) + ")");
        }
    }
    for (int n = 2; n <= 4; ++n)
        for (int i = 0; i < n; ++i)
            for (int j : {i, i + 1}) {
                v.push_back("aug_horn(" + S(n) + "," + S(j) + "," + S(i) + ";K)");
                v.push_back("pinched_horn(" + S(n) + "," + S(j) + "," + S(i) + ")");
                if (n <= 3) v.push_back("aug_horn(" + S(n) + "," + S(j) + "," + S(i) + ";J@4)");
            }
    for (int D = 1; D <= 4; ++D) {
        v.push_back("J@" + S(D));
        v.push_back("iso()@" + S(D));
    }
    for (int n = 0; n <= 3; ++n) v.push_back("poset(" + S(n) + ")@4");
    for (int n = 0; n <= 3; ++n)
        for (std::string s : {"a", "b"}) v.push_back("A_I(" + S(n) + "," + s + ")");
    v.insert(v.end(), {"K", "I2", "exampleT", "gen_aug_horn(3,{0,2},1;K)", "gen_aug_horn(4,{0,1,3},1;K)",
                       "tiling(C(2;c0))", "tiling(C(3;c1,c0))", "pinched_tiling(C(3;c0,c0))"});
    for (auto& t : enumerate_inverting_tilings(11)) v.push_back(t.name);
    return v;
}

Outcome core_validity() {
    auto t0 = Clock::now();
    int objects = 0, bad = 0;
    std::string first;
    auto take = [&](const std::string& label, const SSet& X) {
        ++objects;
        auto d = validate(X);
        if (!d.empty()) {
            ++bad;
            if (first.empty()) first = label + ": " + d.front();
        }
    };
    int catalog = 0;
    for (auto& nm : catalog_names()) {
        try {
            auto it = resolve(nm);
            ++catalog;
            take(nm, *it.obj);
            if (it.incl) {
                take("dom:" + nm, *it.incl->dom);
                if (!validate_map(*it.incl).empty() || !is_mono(*it.incl)) {
                    ++bad;
                    if (first.empty()) first = nm + ": inclusion is not a monomorphism";
                }
            }
        } catch (const std::exception& e) {
            ++bad;
            if (first.empty()) first = nm + ": " + e.what();
        }
    }
    Rng g(2024);
    for (int t = 0; t < 150; ++t) take("random " + S(t), *random_object(g, 30));
    for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
            take("product", *product(standard_simplex(p), standard_simplex(q), p + q).obj);
    take("product", *product(standard_simplex(1), build_K().obj, 3).obj);
    double dt = seconds_since(t0);
    bool ok = objects >= 200 && bad == 0 && dt < 60;
    return {ok, S(objects) + " objects (" + S(catalog) + " catalog names), " + S(bad) + " invalid" +
                    (first.empty() ? "" : " [" + first + "]") + ", " + std::to_string(dt) + " s"};
}

Outcome solver_oracle() {
    auto t0 = Clock::now();
    Rng g(7);
    int problems = 0, agree = 0, lifts = 0, largest = 0;
    while (problems < 500) {
        auto p = random_lift_problem(g, 20, 20);
        int cells = p.incl.cod->total() + p.f.cod->total();
        if (cells > 40) continue;
        largest = std::max(largest, cells);
        ++problems;
        auto r = extend(p.incl, p.f);
        bool want = oracle::count_lifts(p.incl, p.f, 1) > 0;
        bool got = r.status == LiftStatus::Lift;
        if (got && !(validate_map(*r.map).empty() && maps_equal(compose(*r.map, p.incl), p.f))) got = false;
        if (r.status != LiftStatus::Undecidable && got == want) ++agree;
        lifts += want;
    }
    double dt = seconds_since(t0);
    return {agree == problems && dt < 300, S(agree) + "/" + S(problems) + " agree (" + S(lifts) + " liftable, up to " +
                                               S(largest) + " cells), " + std::to_string(dt) + " s"};
}

Outcome decompositions() {
    auto t0 = Clock::now();
    int total = 0, good = 0;
    std::string first;
    auto run = [&](const std::string& label, const std::function<Certificate()>& gen, int steps) {
        ++total;
        try {
            auto c = gen();
            auto v = verify(c);
            bool ok = v.ok && (steps < 0 || static_cast<int>(c.steps.size()) == steps);
            if (ok) ++good;
            else if (first.empty()) first = label + (v.ok ? " has " + S(c.steps.size()) + " steps" : " rejected");
        } catch (const std::exception& e) {
            if (first.empty()) first = label + ": " + e.what();
        }
    };
    for (int n = 2; n <= 4; ++n)
        for (int mask = 0; mask < (1 << (n + 1)); ++mask) {
            std::set<int> Sset;
            for (int s = 0; s <= n; ++s)
                if (mask >> s & 1) Sset.insert(s);
            if (Sset.size() < 2 || static_cast<int>(Sset.size()) > n) continue;
            for (int i = 0; i < n; ++i)
                if (Sset.count(i) + Sset.count(i + 1) == 1)
                    run("generalized-aug n=" + S(n) + " i=" + S(i), [=] { return gen_generalized_aug(n, Sset, i, "K"); }, -1);
        }
    for (std::string I : {"K", "J@4"})
        for (int n = 1; n <= 4; ++n)
            for (int eps = 0; eps <= 1; ++eps)
                run("an1 " + I + " n=" + S(n) + " eps=" + S(eps), [=] { return gen_an1(I, n, eps); }, n + 1);
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i <= n - 1; ++i)
            run("an2 upper n=" + S(n) + " i=" + S(i), [=] { return gen_an2("K", n, i, An2Case::Upper); }, -1);
        for (int i = 1; i <= n; ++i)
            run("an2 lower n=" + S(n) + " i=" + S(i), [=] { return gen_an2("K", n, i, An2Case::Lower); }, -1);
    }
    run("J-from-edge(4)", [] { return gen_J_from_edge(4); }, -1);
    run("K-from-edge", [] { return gen_K_from_edge(); }, -1);
    run("cyl-J(2)", [] { return gen_cyl_J(2); }, -1);
    for (int eps = 0; eps <= 1; ++eps) run("cyl-K(" + S(eps) + ")", [=] { return gen_cyl_K(eps); }, -1);
    double dt = seconds_since(t0);
    return {good == total && dt < 300, S(good) + "/" + S(total) + " certificates verified" +
                                           (first.empty() ? "" : " [" + first + "]") + ", " + std::to_string(dt) + " s"};
}

Outcome separation() {
    struct Cell {
        std::string object, family;
        FamilyBounds b;
        Verdict want;
        bool witness;
    };
    std::vector<Cell> cells{
        {"Lambda(2,1)", "special-horns", {3, 7, -1}, Verdict::Pass, false},
        {"Lambda(2,1)", "horn(2,1)", {-1, -1, -1}, Verdict::Fail, true},
        {"pinched_simplex(2,0)", "J-aug-horns", {3, -1, 4}, Verdict::Fail, true},
        {"pinched_simplex(2,0)", "iso-horns", {3, -1, 4}, Verdict::Pass, false},
        {"pinched_simplex(2,0)", "A_I", {3, -1, -1}, Verdict::Pass, false},
        {"dom:aug_horn(3,1,1;K)", "J-aug-horns", {3, -1, 4}, Verdict::Pass, false},
        {"dom:aug_horn(3,1,1;K)", "aug-horns:K", {3, -1, -1}, Verdict::Fail, true},
    };
    int good = 0;
    std::string pattern;
    for (auto& c : cells) {
        auto r = run_fibrancy(c.object, c.family, c.b);
        bool ok = r.overall() == c.want;
        if (ok && c.witness) {
            // the emitted counterexample must replay as a genuine non-extension
            bool replayed = false;
            for (auto& e : r.entries)
                if (e.counterexample) replayed = replay_witness(no_lift_witness(c.object, e)).empty();
            ok = replayed;
        }
        good += ok;
        pattern += (pattern.empty() ? "" : ", ") + c.object + "/" + c.family + "=" + verdict_name(r.overall());
    }
    return {good == static_cast<int>(cells.size()), S(good) + "/" + S(cells.size()) + " cells match: " + pattern};
}

Outcome example_T(const std::string& corpus) {
    auto t0 = Clock::now();
    std::vector<std::string> failed;
    auto T = build_example_T();
    FunctorCertificate fc;
    try {
        fc = functor_from_json(read_json_file(corpus + "/exampleT.functor.json"));
        if (!fc.functor.target.check().empty()) failed.push_back("shipped target is not a category");
    } catch (const std::exception& e) {
        failed.push_back(std::string("shipped certificate: ") + e.what());
    }
    int refuted = 0;
    try {
        for (int k = 0; k < T.obj->count(1); ++k) {
            bool r = noniso_functor_check(*T.obj, fc.functor, nd(1, k));
            if (r != (nd(1, k) != T.e)) failed.push_back("edge " + T.obj->name(1, k));
            refuted += r;
        }
    } catch (const std::exception& e) {
        failed.push_back(std::string("functor check: ") + e.what());
    }
    auto v = preiso_search(T.obj, T.e, 12);
    if (v.verdict != PreIso::Certified)
        failed.push_back("e_T " + preiso_name(v.verdict) + " at 12 cells after " + S(v.tilings_tried) + " tilings");
    if (almost_edge_search(T.obj, T.e, attachment("K"), 3)) failed.push_back("almost-K witness found for e_T");
    double dt = seconds_since(t0);
    if (dt >= 120) failed.push_back("took " + std::to_string(dt) + " s");
    std::string d = S(refuted) + " edges refuted";
    for (auto& f : failed) d += "; " + f;
    return {failed.empty(), d + ", " + std::to_string(dt) + " s"};
}

Outcome triangulations() {
    size_t a = enumerate_triangulations(2).size(), b = enumerate_triangulations(3).size();
    return {a == 1 && b == 6, "n=2: " + S(a) + ", n=3: " + S(b)};
}

Outcome nerves() {
    std::vector<std::pair<std::string, FiniteCategory>> cats;
    for (int n = 0; n <= 3; ++n) cats.push_back({"[" + S(n) + "]", poset_n(n)});
    cats.push_back({"iso", free_iso()});
    cats.push_back({"non-thin", make_category({"A", "B", "C"}, {{0, 1, "f"}, {0, 1, "g"}, {1, 2, "h"}, {0, 2, "hf"}},
                                              {{{"h", "f"}, "hf"}, {{"h", "g"}, "hf"}})});
    int good = 0;
    size_t fillers = 0;
    std::string first;
    auto inner = horn_family(4, true);
    auto outer = named_family("outer-special-horns", FamilyBounds{3, 7, 4});
    for (auto& [name, C] : cats) {
        SP N = nerve(C, 4);
        bool ok = has_rlp(N, inner).overall() == Verdict::Pass && has_rlp(N, outer).overall() == Verdict::Pass;
        for (auto& h : inner)
            for (auto& f : enumerate_maps(h.incl.dom, N).maps) {
                ++fillers;
                if (count_extensions(h.incl, f, 2) != 1) ok = false;
            }
        good += ok;
        if (!ok && first.empty()) first = name;
    }
    return {good == static_cast<int>(cats.size()),
            S(good) + "/" + S(cats.size()) + " nerves, " + S(fillers) + " inner horn maps with unique fillers, " +
                S(outer.size()) + " outer special horns" + (first.empty() ? "" : " [fails: " + first + "]")};
}

Outcome saturation() {
    SP N = nerve(free_iso(), 3);
    SMap kap = attachment("K");
    int certified = 0, extendable = 0;
    for (int k = 0; k < N->count(1); ++k) {
        if (!almost_edge_search(N, nd(1, k), kap, 3)) continue;
        ++certified;
        if (extend(kap, edge_map(N, nd(1, k))).status == LiftStatus::Lift) ++extendable;
    }
    return {certified > 0 && certified == extendable, S(extendable) + "/" + S(certified) + " certified edges extend"};
}

Outcome dh2() {
    Rng g(99);
    std::vector<Embedded> samples;
    for (int t = 0; t < 100; ++t) samples.push_back(random_inclusion(g, 12));
    std::string d;
    bool ok = true;
    for (std::string I : {"K", "J@3", "Delta(1)"}) {
        int pass = 0;
        for (auto& s : samples) pass += check_dh2(attachment(I), s.incl);
        ok = ok && pass == 100;
        d += (d.empty() ? "" : ", ") + I + " " + S(pass) + "/100";
    }
    return {ok, d};
}

Outcome retracts() {
    int good = 0, total = 0;
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j <= n; ++j) {
            ++total;
            try {
                good += verify_retract(gen_retract(n, j, "K")).empty();
            } catch (const std::exception&) {
            }
        }
    return {good == total, S(good) + "/" + S(total) + " retract diagrams commute"};
}

}  // namespace

int main(int argc, char** argv) {
    std::string corpus = argc > 1 ? argv[1] : SSET_CORPUS_DIR;
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"core validity", core_validity},
        {"solver/oracle equivalence", solver_oracle},
        {"decomposition certificates", decompositions},
        {"separation matrix", separation},
        {"example T", [&] { return example_T(corpus); }},
        {"triangulation counts", triangulations},
        {"nerve lifting", nerves},
        {"saturation", saturation},
        {"DH2 exactness", dh2},
        {"retract witnesses", retracts},
    };
    int failed = 0;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        failed += !o.ok;
        std::printf("criterion %zu (%s): %s - %s\n", k + 1, criteria[k].first.c_str(), o.ok ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed;
}
