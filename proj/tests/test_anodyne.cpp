#include <doctest.h>

#include "oracle.hpp"
#include "sset/anodyne.hpp"
#include "sset/io.hpp"
#include "sset/iso.hpp"
#include "sset/random.hpp"

using namespace sset;

namespace {

std::vector<int> padded(std::vector<int> v, size_t n) {
    v.resize(std::max(v.size(), n), 0);
    return v;
}

// Cells outside the image of the target, by dimension, against what the steps added.
void check_accounting(const Certificate& c, const VerifyResult& r) {
    const SSet& B = *c.target.cod;
    Sub im = image(c.target);
    size_t D = B.dims();
    std::vector<int> want(D, 0), got(D, 0);
    for (int n = 0; n < B.dims(); ++n)
        for (int k = 0; k < B.count(n); ++k)
            if (!im.has(n, k) && (!c.truncation || n <= *c.truncation)) ++want[n];
    for (auto& a : r.added)
        for (size_t n = 0; n < a.size(); ++n) {
            if (n >= got.size()) got.resize(n + 1, 0);
            got[n] += a[n];
        }
    CHECK(padded(got, D) == padded(want, got.size()));
}

void check_cert(const Certificate& c) {
    INFO(c.lemma);
    auto r = verify(c);
    for (auto& d : r.diagnostics) MESSAGE(d);
    REQUIRE(r.ok);
    CHECK(r.added.size() == c.steps.size());
    check_accounting(c, r);
}

Certificate horn_cert(int n, int k) {
    CertBuilder b("horn", horn(n, k).incl);
    b.horn({"ordinary-horn", ""}, nd(n, 0), k);
    return b.finish();
}

// K glued along every edge of A, with the size-1 witness for each new edge.
std::pair<SMap, std::map<int, EdgeWitness>> k_on_edges(SP A) {
    SMap kap = attachment("K");
    SMap u = identity(A);
    std::vector<SMap> ws;
    SP cur = A;
    for (int e = 0; e < A->count(1); ++e) {
        Glued G = glue_edge(cur, u.apply(nd(1, e)), kap, "K" + std::to_string(e));
        for (auto& w : ws) w = compose(G.inA, w);
        u = compose(G.inA, u);
        ws.push_back(G.inX);
        cur = G.obj;
    }
    std::map<int, EdgeWitness> ev;
    Triangulation seg{1, {0, 1}, {}};
    for (int e = 0; e < A->count(1); ++e) {
        auto at = realize_aug(seg, 0, kap);
        auto iso = iso_under(at.edge_map(), kap);
        REQUIRE(iso.has_value());
        ev[u.apply(nd(1, e)).idx] = EdgeWitness{at, compose(ws[e], *iso)};
    }
    return {u, ev};
}

}  // namespace

TEST_SUITE("anodyne") {

TEST_CASE("augmented horns of the first kind") {
    for (std::string I : {"K", "J@4"})
        for (int n = 1; n <= 4; ++n)
            for (int eps = 0; eps <= 1; ++eps) {
                auto c = gen_an1(I, n, eps);
                CHECK(c.steps.size() == static_cast<size_t>(n + 1));
                check_cert(c);
            }
}

TEST_CASE("augmented horns of the second kind") {
    for (int n = 2; n <= 3; ++n) {
        for (int i = 0; i <= n - 1; ++i) check_cert(gen_an2("K", n, i, An2Case::Upper));
        for (int i = 1; i <= n; ++i) check_cert(gen_an2("K", n, i, An2Case::Lower));
    }
    check_cert(gen_an2("J@4", 2, 1, An2Case::Upper));
    // augmenting 0->1 or 1->2 of the same 3-simplex takes the same number of steps
    CHECK(gen_an2("K", 3, 1, An2Case::Upper).steps.size() == gen_an2("K", 3, 2, An2Case::Lower).steps.size());
}

TEST_CASE("generalized augmented horns") {
    check_cert(gen_generalized_aug(2, {0, 1}, 1, "K"));
    check_cert(gen_generalized_aug(3, {0, 1, 2}, 2, "K"));
    // the full face set is one step
    CHECK(gen_generalized_aug(3, {0, 1, 2}, 2, "K").steps.size() == 1);
    CHECK(gen_generalized_aug(3, {0, 2}, 1, "K").steps.size() >
          gen_generalized_aug(3, {0, 2, 3}, 1, "K").steps.size());
    CHECK_THROWS(gen_generalized_aug(3, {0, 3}, 1, "K"));
    CHECK_THROWS(gen_generalized_aug(3, {2}, 1, "K"));
}

TEST_CASE("bijective-on-vertices inclusions") {
    auto b = boundary(2);
    auto c = gen_bij0("K", b.incl, 0);
    CHECK(c.steps.size() == 3);
    check_cert(c);
    check_cert(gen_bij0("K", b.incl, 1));
    // not bijective on vertices
    CHECK_THROWS(gen_bij0("K", face_sub(2, 0).incl, 0));
}

TEST_CASE("J and K from their edges") {
    for (int D = 2; D <= 4; ++D) check_cert(gen_J_from_edge(D));
    auto k = gen_K_from_edge();
    CHECK(k.steps.size() == 2);
    for (auto& s : k.steps) {
        CHECK(s.spec.kind == "horn");
        CHECK(s.spec.n == 2);
        CHECK((s.spec.j == 0 || s.spec.j == 2));
    }
    check_cert(k);
}

TEST_CASE("cylinders") {
    for (int l = 1; l <= 2; ++l) check_cert(gen_cyl_J(l));
    for (int eps = 0; eps <= 1; ++eps) {
        auto c = gen_cyl_K(eps);
        check_cert(c);
        int two = 0, three = 0;
        for (auto& s : c.steps) (s.spec.n == 2 ? two : three) += 1;
        CHECK(two == 4);
        CHECK(three == 6);
        // all 2-dimensional steps come first
        for (size_t k = 1; k < c.steps.size(); ++k) CHECK(c.steps[k - 1].spec.n <= c.steps[k].spec.n);
    }
}

TEST_CASE("mutated certificates are rejected at the broken step") {
    auto c = gen_an2("K", 2, 1, An2Case::Upper);
    REQUIRE(verify(c).ok);
    for (size_t k = 0; k < c.steps.size(); ++k) {
        auto bad = c;
        bad.steps[k].family = bad.steps[k].family.name == "inner-horn" ? Family{"I-augmented-horn", "J@4"}
                                                                        : Family{"inner-horn", ""};
        auto r = verify(bad);
        CHECK_FALSE(r.ok);
        CHECK(r.failed_step == static_cast<int>(k));
    }
    auto bad = c;
    auto& a = bad.steps.back().attach.front();
    const SSet& B = *c.target.cod;
    for (int k = 0; k < B.count(a.dim - static_cast<int>(a.word.size())); ++k)
        if (B.name(a.dim - static_cast<int>(a.word.size()), k) != a.image) {
            a.image = B.name(a.dim - static_cast<int>(a.word.size()), k);
            break;
        }
    auto r = verify(bad);
    CHECK_FALSE(r.ok);
    auto dropped = c;
    dropped.steps.pop_back();
    CHECK_FALSE(verify(dropped).ok);
    CHECK(verify(dropped).failed_step == -1);
}

TEST_CASE("certificates survive serialization") {
    for (auto c : {gen_an2("K", 2, 1, An2Case::Upper), gen_cyl_K(1), gen_generalized_aug(3, {0, 2}, 1, "K")}) {
        auto j = certificate_to_json(c);
        auto back = certificate_from_json(j);
        CHECK(verify(back).ok);
        CHECK(certificate_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("upgrading horn certificates over augmented horns") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {2, 0}}) {
        INFO("horn " << n << "," << k);
        auto base = horn_cert(n, k);
        REQUIRE(verify(base).ok);
        auto [u, ev] = k_on_edges(base.target.dom);
        auto up = gen_upgrade(base, u, ev, "K");
        check_cert(up.cert);
        ev.erase(ev.begin());
        CHECK_THROWS_AS(gen_upgrade(base, u, ev, "K"), Error);
    }
    for (int eps = 0; eps <= 1; ++eps) check_cert(upgrade_cyl_K(eps).cert);
}

TEST_CASE("retracts of augmented horns") {
    for (int n = 2; n <= 3; ++n)
        for (int j = 1; j <= n; ++j) {
            INFO(n << "," << j);
            auto r = gen_retract(n, j, "K");
            CHECK(verify_retract(r).empty());
            CHECK(is_mono(r.inner));
            CHECK(is_mono(r.outer));
        }
    CHECK_THROWS(gen_retract(2, 0, "K"));
}

TEST_CASE("cylinders over a subobject meet the ends in the subobject") {
    auto oracle_dh2 = [](const SMap& iota, const SMap& sample) {
        auto p = dh2_parts(iota, sample);
        Cylinder cyl = pointwise_cylinder(iota, sample.cod);
        Sub a = image(sample);
        const SSet& B = *sample.cod;
        for (int e = 0; e < 2; ++e)
            for (int n = 0; n < B.dims(); ++n)
                for (int k = 0; k < B.count(n); ++k) {
                    auto c = cyl.cell(const_simplex(e, n), nd(n, k));
                    if (!c) continue;
                    if (p.cylA.has(*c) != a.has(n, k)) return false;
                }
        return true;
    };
    auto b1 = boundary(1);
    CHECK(check_dh2(attachment("K"), b1.incl));
    CHECK(oracle_dh2(attachment("K"), b1.incl));
    Rng g(21);
    for (int t = 0; t < 25; ++t) {
        auto a = random_inclusion(g, 10);
        for (std::string I : {"K", "Delta(1)"}) {
            bool lib = check_dh2(attachment(I), a.incl);
            CHECK(lib);
            CHECK(lib == oracle_dh2(attachment(I), a.incl));
        }
    }
}

}
