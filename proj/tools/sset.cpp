// Command-line front end: build, lift, fibrant, certify, verify, hcat, report.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sset/report.hpp"

using namespace sset;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUndecidable = 2, kUsage = 3 };

class Usage : public Error {
  public:
    using Error::Error;
};

std::string counts(const SSet& X) {
    std::string s = "(";
    for (int n = 0; n <= X.top(); ++n) s += (n ? "," : "") + std::to_string(X.count(n));
    return s + ")";
}

void emit(const json& j, const std::string& out) {
    if (out.empty()) std::cout << j.dump(2) << "\n";
    else write_json_file(out, j);
}

Formal edge_named(const CatalogItem& it, const std::string& e) {
    if (it.edges.count(e)) return it.edges.at(e);
    auto k = it.obj->find(1, e);
    if (!k) throw Usage("no edge '" + e + "' in the object");
    return nd(1, *k);
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Pass: return kOk;
        case Verdict::Fail: return kFailed;
        default: return kUndecidable;
    }
}

struct Opts {
    std::string name, object, family, out, dot, replay, query, map;
    int max_n = -1, tiling = -1, trunc = -1, depth = -1, size = -1;
    bool json_out = false;
    std::vector<std::string> params;
    std::uint64_t seed = 1;
};

// ---- build ----

int cmd_build(const Opts& o) {
    auto it = resolve(o.name);
    json j = object_to_json(*it.obj, it.edges);
    if (it.incl) {
        Sub im = image(*it.incl);
        json sub = json::array();
        for (int n = 0; n < it.obj->dims(); ++n) {
            json row = json::array();
            for (int k = 0; k < it.obj->count(n); ++k)
                if (im.has(n, k)) row.push_back(it.obj->name(n, k));
            sub.push_back(row);
        }
        j["subobjects"] = {{"dom", sub}};
    }
    if (!o.dot.empty()) {
        std::ofstream(o.dot) << to_dot(*it.obj, o.name);
    }
    if (o.out.empty() && !o.json_out) {
        std::cout << o.name << ": counts " << counts(*it.obj) << (it.incl ? ", with subobject 'dom'" : "") << "\n";
        if (!it.edges.empty()) {
            std::cout << "edges:";
            for (auto& [nm, f] : it.edges) std::cout << " " << nm << "=" << it.obj->fname(f);
            std::cout << "\n";
        }
        return kOk;
    }
    emit(j, o.out);
    if (!o.out.empty()) std::cout << o.name << ": counts " << counts(*it.obj) << " -> " << o.out << "\n";
    return kOk;
}

// ---- lift ----

int replay_file(const std::string& path) {
    json j = read_json_file(path);
    std::vector<std::string> diag;
    std::string fmt = j.value("format", "");
    if (fmt == "sset-report") diag = replay_report(j);
    else if (fmt == "sset-report-suite") {
        for (auto& r : j.at("reports"))
            for (auto& d : replay_report(r)) diag.push_back(r.value("experiment", "?") + ": " + d);
    } else if (fmt == "sset-certificate") diag = replay_witness({{"kind", "certificate"}, {"certificate", j}});
    else if (fmt == "sset-fibrancy") {
        for (auto& e : j.at("entries"))
            if (e.contains("counterexample"))
                for (auto& d : replay_witness({{"kind", "no-lift"}, {"object", j.at("object")}, {"inclusion", e.at("name")},
                                               {"map", e.at("counterexample")}}))
                    diag.push_back(e.at("name").get<std::string>() + ": " + d);
    } else if (fmt == "sset-functor") diag = replay_witness({{"kind", "functor"}, {"certificate", j}});
    else diag = replay_witness(j);
    for (auto& d : diag) std::cout << "replay failure: " << d << "\n";
    std::cout << (diag.empty() ? "replay: every witness re-verifies\n" : "replay: rejected\n");
    return diag.empty() ? kOk : kFailed;
}

int cmd_lift(const Opts& o) {
    if (!o.replay.empty()) return replay_file(o.replay);
    if (o.object.empty() || o.family.empty()) throw Usage("lift needs --object and --family (an inclusion name), or --replay");
    auto X = resolve(o.object);
    auto inc = resolve(o.family);
    if (!inc.incl) throw Usage("'" + o.family + "' is not an inclusion");
    std::vector<SMap> problems;
    if (!o.map.empty()) {
        problems.push_back(map_from_json(read_json_file(o.map), inc.incl->dom, X.obj));
    } else {
        auto L = enumerate_maps(inc.incl->dom, X.obj);
        if (L.undecidable || L.cap_exceeded) {
            std::cout << "map enumeration " << (L.undecidable ? "undecidable at truncation" : "cap exceeded") << "\n";
            return kUndecidable;
        }
        problems = L.maps;
    }
    size_t lifts = 0;
    for (auto& f : problems) {
        auto r = extend(*inc.incl, f);
        if (r.status == LiftStatus::Undecidable) {
            std::cout << "undecidable at the truncation of " << o.object << "\n";
            return kUndecidable;
        }
        if (r.status == LiftStatus::NoLift) {
            FibrancyEntry e{o.family, Verdict::Fail, f, problems.size(), false};
            json w = no_lift_witness(o.object, e);
            std::cout << "no lift: " << lifts << " of " << problems.size() << " maps extended before a counterexample\n";
            if (!o.out.empty()) write_json_file(o.out, w);
            else if (o.json_out) std::cout << w.dump(2) << "\n";
            return kFailed;
        }
        ++lifts;
    }
    std::cout << "lift: all " << problems.size() << " maps " << o.family << " -> " << o.object << " extend\n";
    return kOk;
}

// ---- fibrant ----

int cmd_fibrant(const Opts& o) {
    if (o.object.empty() || o.family.empty()) throw Usage("fibrant needs --object and --family");
    // Bounds are never defaulted: each family names the ones it depends on.
    const std::string& f = o.family;
    bool special = f == "special-horns" || f == "outer-special-horns";
    bool trunc = f == "J-aug-horns" || f == "iso-horns";
    bool ranged = special || trunc || f == "horns" || f == "inner-horns" || f == "A_I" || f.rfind("aug-horns:", 0) == 0;
    if (ranged && o.max_n < 0) throw Usage("--max-n is required for family " + f);
    if (special && o.tiling < 0) throw Usage("--tiling-cells is required for family " + f);
    if (trunc && o.trunc < 0) throw Usage("--truncation is required for family " + f);
    FamilyBounds b;
    b.max_n = o.max_n;
    b.tiling_cells = o.tiling;
    b.D = o.trunc;
    auto R = run_fibrancy(o.object, f, b);
    json j = fibrancy_to_json(R);
    for (auto& e : R.entries)
        if (e.verdict == Verdict::Fail) {
            j["witness"] = no_lift_witness(o.object, e);
            break;
        }
    if (o.json_out || !o.out.empty()) emit(j, o.out);
    if (!o.json_out) {
        for (auto& e : R.entries)
            std::cout << "  " << e.name << ": " << verdict_name(e.verdict) << " (" << e.maps_checked << " maps"
                      << (e.bounded ? ", <=D" : "") << ")\n";
        std::cout << o.object << " against " << f << " [" << R.bounds << "]: " << verdict_name(R.overall()) << "\n";
    }
    return exit_for(R.overall());
}

// ---- certify / verify ----

std::map<std::string, std::string> parse_params(const std::vector<std::string>& ps) {
    std::map<std::string, std::string> m;
    for (auto& p : ps) {
        auto eq = p.find('=');
        if (eq == std::string::npos) throw Usage("--param expects key=value, got '" + p + "'");
        m[p.substr(0, eq)] = p.substr(eq + 1);
    }
    return m;
}

Certificate certify(const std::string& lemma, const std::map<std::string, std::string>& P) {
    auto get = [&](const std::string& k) {
        auto it = P.find(k);
        if (it == P.end()) throw Usage("lemma " + lemma + " needs --param " + k + "=...");
        return it->second;
    };
    auto num = [&](const std::string& k) { return std::stoi(get(k)); };
    if (lemma == "an1") return gen_an1(get("I"), num("n"), num("eps"));
    if (lemma == "an2") {
        std::string c = get("case");
        if (c != "upper" && c != "lower") throw Usage("an2 case is 'upper' (i->i+1) or 'lower' (i-1->i)");
        return gen_an2(get("I"), num("n"), num("i"), c == "upper" ? An2Case::Upper : An2Case::Lower);
    }
    if (lemma == "generalized-aug") {
        std::set<int> S;
        std::stringstream ss(get("S"));
        for (std::string t; std::getline(ss, t, ',');) S.insert(std::stoi(t));
        return gen_generalized_aug(num("n"), S, num("i"), get("I"));
    }
    if (lemma == "J-from-edge") return gen_J_from_edge(num("D"));
    if (lemma == "K-from-edge") return gen_K_from_edge();
    if (lemma == "cyl-J") return gen_cyl_J(num("lmax"));
    if (lemma == "cyl-K") return gen_cyl_K(num("eps"));
    if (lemma == "upgrade-cyl-K") return upgrade_cyl_K(num("eps"), P.count("size") ? num("size") : 2).cert;
    throw Usage("unknown lemma '" + lemma +
                "' (an1, an2, generalized-aug, J-from-edge, K-from-edge, cyl-J, cyl-K, upgrade-cyl-K)");
}

int cmd_certify(const Opts& o) {
    Certificate c = certify(o.name, parse_params(o.params));
    auto v = verify(c);
    if (!o.out.empty() || o.json_out) emit(certificate_to_json(c), o.out);
    if (!o.json_out) {
        std::cout << c.lemma << ": " << c.steps.size() << " steps over";
        for (auto& f : c.families()) std::cout << " " << f.str();
        std::cout << "; " << (v.ok ? "verified" : "REJECTED") << "\n";
    }
    return v.ok ? kOk : kFailed;
}

int cmd_verify(const Opts& o) {
    Certificate c;
    try {
        c = certificate_from_json(read_json_file(o.name));
    } catch (const Error& ex) {
        std::cout << "malformed certificate: " << ex.what() << "\n";
        return kUsage;
    }
    auto v = verify(c);
    if (v.ok) {
        std::cout << "accept: " << c.lemma << ", " << c.steps.size() << " steps\n";
        for (size_t k = 0; k < v.added.size(); ++k) {
            std::cout << "  step " << k << " " << c.steps[k].spec.name() << " adds (";
            for (size_t n = 0; n < v.added[k].size(); ++n) std::cout << (n ? "," : "") << v.added[k][n];
            std::cout << ")\n";
        }
        return kOk;
    }
    std::cout << "reject";
    if (v.failed_step >= 0) std::cout << " at step " << v.failed_step;
    std::cout << "\n";
    for (auto& d : v.diagnostics) std::cout << "  " << d << "\n";
    return kFailed;
}

// ---- hcat ----

int cmd_hcat(const Opts& o) {
    if (o.object.empty()) throw Usage("hcat needs --object");
    auto it = resolve(o.object);
    const SSet& X = *it.obj;
    auto p = presentation(X);
    std::string q = o.query.empty() ? "presentation" : o.query;
    auto arg = [&](const std::string& prefix) { return q.substr(prefix.size()); };
    if (q == "presentation") {
        std::cout << "objects:";
        for (auto& v : p.objects) std::cout << " " << v;
        std::cout << "\ngenerators:\n";
        for (auto& g : p.gens) std::cout << "  " << g.name << ": " << p.objects[g.src] << " -> " << p.objects[g.tgt] << "\n";
        std::cout << "relations:\n";
        auto nm = [&](int g) { return g < 0 ? std::string("id") : p.gens[g].name; };
        for (auto& r : p.rels) std::cout << "  " << r.cell << ": " << nm(r.g) << "*" << nm(r.f) << " = " << nm(r.h) << "\n";
        return kOk;
    }
    if (q.rfind("hom:", 0) == 0) {
        if (o.depth < 0) throw Usage("hom queries need --depth");
        std::string a = arg("hom:");
        auto comma = a.find(',');
        if (comma == std::string::npos) throw Usage("hom query is hom:x,y");
        int x = X.at(0, a.substr(0, comma)), y = X.at(0, a.substr(comma + 1));
        auto H = bounded_hom(p, x, y, o.depth);
        std::cout << "hom(" << a << ") at depth " << o.depth << ": " << H.classes.size() << " classes"
                  << (H.complete ? " (stable)" : " (may grow with depth)") << "\n";
        for (auto& c : H.classes) {
            std::cout << "  [" << word_name(p, c.front()) << "]";
            for (size_t k = 1; k < c.size() && k < 4; ++k) std::cout << " = " << word_name(p, c[k]);
            if (c.size() > 4) std::cout << " = ... (" << c.size() << " words)";
            std::cout << "\n";
        }
        return H.complete ? kOk : kUndecidable;
    }
    if (q.rfind("preiso:", 0) == 0) {
        if (o.tiling < 0) throw Usage("preiso queries need --tiling-cells");
        Formal e = edge_named(it, arg("preiso:"));
        auto v = preiso_search(it.obj, e, o.tiling);
        std::cout << arg("preiso:") << ": " << preiso_name(v.verdict) << " (" << v.tilings_tried << " inverting tilings within "
                  << o.tiling << " cells" << (v.map ? ", by " + v.tiling : "") << ")\n";
        if (v.map && (!o.out.empty() || o.json_out))
            emit({{"kind", "preiso"}, {"object", o.object}, {"edge", arg("preiso:")}, {"tiling", v.tiling}, {"map", map_to_json(*v.map)}},
                 o.out);
        return v.verdict == PreIso::Certified ? kOk : kUndecidable;
    }
    if (q == "functor") {
        // the functor recorded with the example T
        if (o.object != "exampleT") throw Usage("only exampleT ships a functor certificate");
        auto fc = example_T_functor_certificate();
        emit(functor_to_json(fc), o.out);
        return kOk;
    }
    if (q.rfind("functor:", 0) == 0) {
        auto fc = functor_from_json(read_json_file(arg("functor:")));
        std::string edge = fc.edge;
        if (edge.empty()) {
            // no edge named: report every non-degenerate edge
            try {
                for (int k = 0; k < X.count(1); ++k) {
                    bool r = noniso_functor_check(X, fc.functor, nd(1, k));
                    std::cout << X.name(1, k) << ": " << (r ? "refuted as pre-isomorphism" : "sent to an isomorphism") << "\n";
                }
            } catch (const NotAFunctor& ex) {
                std::cout << "not a functor: " << ex.what() << "\n";
                return kFailed;
            }
            return kOk;
        }
        bool refuted;
        try {
            refuted = noniso_functor_check(X, fc.functor, edge_named(it, edge));
        } catch (const NotAFunctor& ex) {
            std::cout << "not a functor: " << ex.what() << "\n";
            return kFailed;
        }
        std::cout << edge << ": " << (refuted ? "refuted as pre-isomorphism" : "sent to an isomorphism; no refutation") << "\n";
        return refuted ? kFailed : kOk;
    }
    if (q.rfind("almost:", 0) == 0) {
        if (o.size < 0) throw Usage("almost queries need --size");
        Formal e = edge_named(it, arg("almost:"));
        std::string I = o.family.empty() ? "K" : o.family;
        auto w = almost_edge_search(it.obj, e, attachment(I), o.size);
        std::cout << arg("almost:") << ": " << (w ? "almost-" + I + " witness of size " + std::to_string(w->tri.size()) : "no witness within size " + std::to_string(o.size)) << "\n";
        return w ? kOk : kUndecidable;
    }
    throw Usage("unknown hcat query '" + q + "' (presentation, hom:x,y, preiso:e, functor, functor:FILE, almost:e)");
}

// ---- report ----

int cmd_report(const Opts& o) {
    if (!o.replay.empty()) return replay_file(o.replay);
    std::vector<std::string> ids;
    if (o.name == "all") ids = suite_ids();
    else ids.push_back(o.name);
    std::vector<ExperimentReport> reports;
    for (auto& id : ids) reports.push_back(run_experiment(id, o.seed));
    bool ok = true;
    json docs = json::array();
    for (auto& R : reports) {
        ok = ok && R.ok();
        docs.push_back(report_to_json(R));
        if (o.json_out) continue;
        std::cout << R.id << " " << R.title << ": " << (R.ok() ? "PASS" : "FAIL") << (R.complete ? "" : " (incomplete)")
                  << " [" << R.wall_time << " s]\n";
        for (auto& c : R.checks)
            std::cout << "  " << (c.ok ? "ok  " : "FAIL") << (c.informational ? " (info)" : "") << " " << c.name
                      << ": expected " << c.expected << ", observed " << c.observed
                      << (c.detail.empty() ? "" : " [" + c.detail + "]") << "\n";
    }
    auto matrix = separation_matrix(reports);
    if (!o.json_out && matrix.find('|') != std::string::npos) std::cout << "\nseparation matrix\n" << matrix;
    if (!o.out.empty() || o.json_out) {
        json j = ids.size() == 1 ? docs[0]
                                 : json{{"format", "sset-report-suite"}, {"version", kFormatVersion}, {"reports", docs},
                                        {"matrix", matrix}};
        emit(j, o.out);
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite simplicial sets: lifting, certificates, homotopy categories"};
    app.require_subcommand(1);
    Opts o;
    auto common = [&](CLI::App* s) {
        s->add_option("--out", o.out, "write JSON output here");
        s->add_flag("--json", o.json_out, "print JSON to stdout");
    };
    auto* build = app.add_subcommand("build", "emit a catalog object as an ObjectFile");
    build->add_option("name", o.name, "catalog name")->required();
    build->add_option("--dot", o.dot, "also write the 1-skeleton as a graph file");
    common(build);

    auto* lift = app.add_subcommand("lift", "solve lift problems against one inclusion, or replay a witness");
    lift->add_option("--object", o.object, "target object");
    lift->add_option("--family", o.family, "inclusion catalog name");
    lift->add_option("--map", o.map, "a single map file (domain -> object) instead of all maps");
    lift->add_option("--replay", o.replay, "witness, certificate or report file to re-verify");
    common(lift);

    auto* fib = app.add_subcommand("fibrant", "right lifting property against a family");
    fib->add_option("--object", o.object)->required();
    fib->add_option("--family", o.family)->required();
    fib->add_option("--max-n", o.max_n);
    fib->add_option("--tiling-cells", o.tiling);
    fib->add_option("--truncation", o.trunc);
    common(fib);

    auto* cert = app.add_subcommand("certify", "generate and check a decomposition certificate");
    cert->add_option("lemma", o.name)->required();
    cert->add_option("--param", o.params, "key=value, repeatable");
    common(cert);

    auto* ver = app.add_subcommand("verify", "check a certificate file");
    ver->add_option("path", o.name)->required();

    auto* hc = app.add_subcommand("hcat", "homotopy-category queries");
    hc->add_option("--object", o.object)->required();
    hc->add_option("--query", o.query, "presentation | hom:x,y | preiso:e | functor | functor:FILE | almost:e");
    hc->add_option("--depth", o.depth);
    hc->add_option("--tiling-cells", o.tiling);
    hc->add_option("--size", o.size, "triangulation size bound for almost queries");
    hc->add_option("--family", o.family, "attaching object for almost queries (default K)");
    common(hc);

    auto* rep = app.add_subcommand("report", "run experiments E1..E11 or 'all'");
    rep->add_option("suite", o.name);
    rep->add_option("--replay", o.replay, "re-verify the witnesses in a report file");
    rep->add_option("--seed", o.seed);
    common(rep);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (*build) return cmd_build(o);
        if (*lift) return cmd_lift(o);
        if (*fib) return cmd_fibrant(o);
        if (*cert) return cmd_certify(o);
        if (*ver) return cmd_verify(o);
        if (*hc) return cmd_hcat(o);
        if (*rep) {
            if (o.name.empty() && o.replay.empty()) throw Usage("report needs a suite id or --replay");
            return cmd_report(o);
        }
    } catch (const Usage& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
