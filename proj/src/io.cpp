#include "sset/io.hpp"

#include <fstream>
#include <sstream>

namespace sset {

namespace {

void expect_format(const json& j, const std::string& fmt) {
    if (!j.is_object() || j.value("format", "") != fmt) throw Error("not a " + fmt + " document");
    if (j.value("version", 0) != kFormatVersion)
        throw Error(fmt + ": unsupported version " + std::to_string(j.value("version", 0)));
}

}  // namespace

json formal_to_json(const SSet& X, const Formal& f) {
    return json{{"base", X.name(f.bdim, f.idx)}, {"word", f.word}};
}

Formal formal_from_json(const SSet& X, const json& j, int dim) {
    Word w = j.at("word").get<Word>();
    int bd = dim - static_cast<int>(w.size());
    if (bd < 0 || !is_admissible(w) || (!w.empty() && w[0] > dim - 1))
        throw Error("bad degeneracy word on " + j.at("base").get<std::string>());
    auto nm = j.at("base").get<std::string>();
    auto k = X.find(bd, nm);
    if (!k) throw Error("unknown " + std::to_string(bd) + "-cell '" + nm + "'");
    return Formal{bd, *k, w};
}

json object_to_json(const SSet& X, const std::map<std::string, Formal>& edges) {
    json cells = json::array(), faces = json::array();
    for (int n = 0; n <= X.top(); ++n) {
        json names = json::array(), fs = json::array();
        for (int k = 0; k < X.count(n); ++k) {
            names.push_back(X.name(n, k));
            json row = json::array();
            if (n > 0)
                for (auto& f : X.faces(n, k)) row.push_back(formal_to_json(X, f));
            fs.push_back(row);
        }
        cells.push_back(names);
        faces.push_back(fs);
    }
    json j{{"format", "sset-object"}, {"version", kFormatVersion}, {"D", X.D}, {"truncated", X.truncated},
           {"cells", cells}, {"faces", faces}};
    if (!edges.empty()) {
        json e = json::object();
        for (auto& [nm, f] : edges) e[nm] = formal_to_json(X, f);
        j["edges"] = e;
    }
    return j;
}

SP object_from_json(const json& j, std::map<std::string, Formal>* edges) {
    expect_format(j, "sset-object");
    SSet X;
    X.D = j.at("D").get<int>();
    X.truncated = j.at("truncated").get<bool>();
    auto& cells = j.at("cells");
    auto& faces = j.at("faces");
    if (cells.size() != faces.size()) throw Error("object: cells and faces tables differ in length");
    for (size_t n = 0; n < cells.size(); ++n) {
        if (cells[n].size() != faces[n].size()) throw Error("object: faces missing in dimension " + std::to_string(n));
        for (size_t k = 0; k < cells[n].size(); ++k) {
            std::string nm = cells[n][k].get<std::string>();
            if (X.find(static_cast<int>(n), nm)) throw Error("object: duplicate cell name '" + nm + "'");
            std::vector<Formal> fs;
            if (n > 0) {
                if (faces[n][k].size() != n + 1) throw Error("object: cell '" + nm + "' needs " + std::to_string(n + 1) + " faces");
                for (auto& f : faces[n][k]) fs.push_back(formal_from_json(X, f, static_cast<int>(n) - 1));
            }
            X.add(static_cast<int>(n), nm, fs);
        }
    }
    auto diag = validate(X);
    if (!diag.empty()) {
        std::string msg = "object fails validation:";
        for (auto& d : diag) msg += "\n  " + d;
        throw Error(msg);
    }
    if (edges && j.contains("edges"))
        for (auto& [nm, f] : j.at("edges").items()) (*edges)[nm] = formal_from_json(X, f, 1);
    return share(std::move(X));
}

json map_to_json(const SMap& f) {
    json rows = json::array();
    for (int n = 0; n < static_cast<int>(f.img.size()); ++n) {
        json row = json::array();
        for (int k = 0; k < static_cast<int>(f.img[n].size()); ++k) {
            json e = formal_to_json(*f.cod, f.img[n][k]);
            e["cell"] = f.dom->name(n, k);
            row.push_back(e);
        }
        rows.push_back(row);
    }
    return rows;
}

SMap map_from_json(const json& j, SP dom, SP cod) {
    SMap f{dom, cod, {}};
    f.img.resize(dom->dims());
    for (int n = 0; n < dom->dims(); ++n) {
        if (n >= static_cast<int>(j.size())) {
            if (dom->count(n) && !(cod->truncated && n > cod->D)) throw Error("map: no images in dimension " + std::to_string(n));
            continue;
        }
        std::map<std::string, const json*> byName;
        for (auto& e : j[n]) byName[e.at("cell").get<std::string>()] = &e;
        for (int k = 0; k < dom->count(n); ++k) {
            auto it = byName.find(dom->name(n, k));
            if (it == byName.end()) throw Error("map: no image for cell '" + dom->name(n, k) + "'");
            f.img[n].push_back(formal_from_json(*cod, *it->second, n));
        }
    }
    auto diag = validate_map(f);
    if (!diag.empty()) throw Error("map fails validation: " + diag.front());
    return f;
}

json triangulation_to_json(const Triangulation& t) {
    json tris = json::array();
    for (auto& tr : t.tris) tris.push_back({tr[0], tr[1], tr[2]});
    return json{{"n", t.n}, {"cycle", t.cycle}, {"tris", tris}};
}

Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    t.n = j.at("n").get<int>();
    t.cycle = j.at("cycle").get<std::vector<int>>();
    for (auto& tr : j.at("tris")) t.tris.push_back({tr.at(0).get<int>(), tr.at(1).get<int>(), tr.at(2).get<int>()});
    return t;
}

namespace {

json spec_to_json(const TemplateSpec& s) {
    json j{{"name", s.name()}, {"kind", s.kind}, {"n", s.n}, {"j", s.j}, {"i", s.i}};
    if (s.kind == "iso_horn") j["D"] = s.D;
    if (!s.x.empty()) j["x"] = s.x;
    if (s.kind == "almost_aug_horn") {
        j["triangulation"] = triangulation_to_json(s.tri);
        j["dist"] = s.dist;
    }
    return j;
}

TemplateSpec spec_from_json(const json& j) {
    TemplateSpec s;
    s.kind = j.at("kind").get<std::string>();
    s.n = j.at("n").get<int>();
    s.j = j.at("j").get<int>();
    s.i = j.at("i").get<int>();
    s.D = j.value("D", 0);
    s.x = j.value("x", "");
    if (j.contains("triangulation")) s.tri = triangulation_from_json(j.at("triangulation"));
    s.dist = j.value("dist", 0);
    return s;
}

json family_to_json(const Family& f) {
    json j{{"name", f.name}};
    if (!f.x.empty()) j["x"] = f.x;
    return j;
}

Family family_from_json(const json& j) { return Family{j.at("name").get<std::string>(), j.value("x", "")}; }

}  // namespace

json certificate_to_json(const Certificate& c) {
    json fams = json::array();
    for (auto& f : c.families()) fams.push_back(family_to_json(f));
    json steps = json::array();
    for (auto& st : c.steps) {
        json att = json::array();
        for (auto& e : st.attach) att.push_back({{"dim", e.dim}, {"cell", e.cell}, {"image", e.image}, {"word", e.word}});
        steps.push_back({{"family", family_to_json(st.family)}, {"template", spec_to_json(st.spec)}, {"attach", att}});
    }
    json params = json::object();
    for (auto& [k, v] : c.params) params[k] = v;
    return json{{"format", "sset-certificate"},
                {"version", kFormatVersion},
                {"lemma", c.lemma},
                {"params", params},
                {"truncation", c.truncation ? json(*c.truncation) : json(nullptr)},
                {"target",
                 {{"dom", object_to_json(*c.target.dom)},
                  {"cod", object_to_json(*c.target.cod)},
                  {"map", map_to_json(c.target)}}},
                {"families", fams},
                {"steps", steps}};
}

Certificate certificate_from_json(const json& j) {
    expect_format(j, "sset-certificate");
    Certificate c;
    c.lemma = j.value("lemma", "");
    for (auto& [k, v] : j.at("params").items()) c.params[k] = v.get<std::string>();
    if (!j.at("truncation").is_null()) c.truncation = j.at("truncation").get<int>();
    auto& t = j.at("target");
    SP dom = object_from_json(t.at("dom")), cod = object_from_json(t.at("cod"));
    c.target = map_from_json(t.at("map"), dom, cod);
    for (auto& s : j.at("steps")) {
        Step st{family_from_json(s.at("family")), spec_from_json(s.at("template")), {}};
        for (auto& e : s.at("attach"))
            st.attach.push_back({e.at("dim").get<int>(), e.at("cell").get<std::string>(), e.at("image").get<std::string>(),
                                 e.at("word").get<Word>()});
        c.steps.push_back(std::move(st));
    }
    return c;
}

json category_to_json(const FiniteCategory& C) {
    json arrows = json::array(), comp = json::array();
    for (auto& a : C.arrows)
        arrows.push_back({{"name", a.name}, {"src", C.objects[a.src]}, {"tgt", C.objects[a.tgt]}, {"id", a.id}});
    for (size_t g = 0; g < C.comp.size(); ++g)
        for (size_t f = 0; f < C.comp[g].size(); ++f)
            if (C.comp[g][f] >= 0)
                comp.push_back({{"g", C.arrows[g].name}, {"f", C.arrows[f].name}, {"h", C.arrows[C.comp[g][f]].name}});
    return json{{"objects", C.objects}, {"arrows", arrows}, {"comp", comp}, {"thin", C.thin}};
}

FiniteCategory category_from_json(const json& j) {
    FiniteCategory C;
    C.objects = j.at("objects").get<std::vector<std::string>>();
    C.thin = j.value("thin", false);
    auto obj = [&](const std::string& nm) {
        for (int k = 0; k < static_cast<int>(C.objects.size()); ++k)
            if (C.objects[k] == nm) return k;
        throw Error("category: unknown object '" + nm + "'");
    };
    std::map<std::string, int> byName;
    for (auto& a : j.at("arrows")) {
        std::string nm = a.at("name").get<std::string>();
        if (!byName.emplace(nm, static_cast<int>(C.arrows.size())).second) throw Error("category: duplicate arrow '" + nm + "'");
        C.arrows.push_back({obj(a.at("src").get<std::string>()), obj(a.at("tgt").get<std::string>()), nm,
                            a.value("id", false)});
    }
    auto arrow = [&](const json& v) {
        auto it = byName.find(v.get<std::string>());
        if (it == byName.end()) throw Error("category: unknown arrow '" + v.get<std::string>() + "'");
        return it->second;
    };
    C.comp.assign(C.arrows.size(), std::vector<int>(C.arrows.size(), -1));
    for (auto& e : j.at("comp")) C.comp[arrow(e.at("g"))][arrow(e.at("f"))] = arrow(e.at("h"));
    return C;
}

json functor_to_json(const FunctorCertificate& f) {
    const FiniteCategory& C = f.functor.target;
    json objs = json::object(), arrs = json::object();
    for (auto& [v, o] : f.functor.objects) objs[v] = C.objects[o];
    for (auto& [e, a] : f.functor.arrows) arrs[e] = C.arrows[a].name;
    return json{{"format", "sset-functor"}, {"version", kFormatVersion}, {"object", f.object}, {"edge", f.edge},
                {"category", category_to_json(C)}, {"objects", objs}, {"arrows", arrs}};
}

FunctorCertificate functor_from_json(const json& j) {
    expect_format(j, "sset-functor");
    FunctorCertificate f;
    f.object = j.at("object").get<std::string>();
    f.edge = j.value("edge", "");
    f.functor.target = category_from_json(j.at("category"));
    const FiniteCategory& C = f.functor.target;
    for (auto& [v, o] : j.at("objects").items()) {
        int k = -1;
        for (int q = 0; q < static_cast<int>(C.objects.size()); ++q)
            if (C.objects[q] == o.get<std::string>()) k = q;
        if (k < 0) throw Error("functor: unknown object '" + o.get<std::string>() + "'");
        f.functor.objects[v] = k;
    }
    for (auto& [e, a] : j.at("arrows").items()) {
        int k = -1;
        for (int q = 0; q < static_cast<int>(C.arrows.size()); ++q)
            if (C.arrows[q].name == a.get<std::string>()) k = q;
        if (k < 0) throw Error("functor: unknown arrow '" + a.get<std::string>() + "'");
        f.functor.arrows[e] = k;
    }
    return f;
}

json fibrancy_to_json(const FibrancyReport& r) {
    json entries = json::array();
    for (auto& e : r.entries) {
        json j{{"name", e.name}, {"verdict", verdict_name(e.verdict)}, {"maps_checked", e.maps_checked}, {"bounded", e.bounded}};
        if (e.counterexample) j["counterexample"] = map_to_json(*e.counterexample);
        entries.push_back(j);
    }
    return json{{"format", "sset-fibrancy"}, {"version", kFormatVersion}, {"object", r.object}, {"family", r.family}, {"bounds", r.bounds},
                {"overall", verdict_name(r.overall())}, {"entries", entries}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string to_dot(const SSet& X, const std::string& title) {
    std::ostringstream o;
    o << "digraph \"" << title << "\" {\n";
    for (int v = 0; v < X.count(0); ++v) o << "  \"" << X.name(0, v) << "\";\n";
    for (int k = 0; k < X.count(1); ++k) {
        auto& vs = X.verts(1, k);
        o << "  \"" << X.name(0, vs[0]) << "\" -> \"" << X.name(0, vs[1]) << "\" [label=\"" << X.name(1, k) << "\"];\n";
    }
    o << "}\n";
    return o.str();
}

}  // namespace sset
