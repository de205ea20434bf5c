// Pushout-decomposition certificates, their verifier, and generators for the
// constructive decompositions (augmented horns, cylinders, J and K).
#pragma once

#include "sset/shapes.hpp"

namespace sset {

// A generating family; `x` names the attaching object where one applies.
struct Family {
    std::string name;  // ordinary-horn, inner-horn, I-augmented-horn, almost-I-augmented-horn,
                       // special-horn, boundary-inclusion, iso-horn
    std::string x;
    std::string str() const { return x.empty() ? name : name + "[" + x + "]"; }
    bool operator==(const Family&) const = default;
};

// Recipe for a template inclusion.
struct TemplateSpec {
    std::string kind;  // horn, aug_horn, almost_aug_horn, boundary, iso_horn
    int n = 0, j = 0, i = 0, D = 0;
    std::string x;      // attaching object (aug_horn) or I (almost_aug_horn)
    Triangulation tri;  // almost_aug_horn only
    int dist = 0;
    std::string name() const;

    static TemplateSpec horn(int n, int j);
    static TemplateSpec aug(int n, int j, int i, const std::string& x);
};

struct Template {
    SMap incl;
    std::optional<SMap> simplex;   // Delta[n] -> codomain
    std::optional<SMap> attached;  // X -> codomain
};
Template build_template(const TemplateSpec& s);
// Empty when the template belongs to the family, otherwise the reason.
std::optional<std::string> membership(const TemplateSpec& s, const Family& f);
// True when t is a triangulated polygon (the size-1 segment included).
bool valid_triangulation(const Triangulation& t);

struct AttachEntry {
    int dim = 0;
    std::string cell;   // template-domain cell
    std::string image;  // stage cell, of dimension dim - |word|
    Word word;
};

struct Step {
    Family family;
    TemplateSpec spec;
    std::vector<AttachEntry> attach;
};

struct Certificate {
    std::string lemma;
    std::map<std::string, std::string> params;
    SMap target;                    // A -> B
    std::optional<int> truncation;  // every stage is cropped to this dimension
    std::vector<Step> steps;
    std::vector<Family> families() const;
};

struct VerifyResult {
    bool ok = false;
    int failed_step = -1;  // -1 for the final comparison or success
    std::vector<std::string> diagnostics;
    std::vector<std::vector<int>> added;  // cells added by each step, by dimension
};
VerifyResult verify(const Certificate& c);

// Records pushout steps inside a known ambient B, checking each as it goes.
class CertBuilder {
  public:
    CertBuilder(std::string lemma, const SMap& target, std::optional<int> truncation = {});
    // Glues sigma (a cell of B of the template's dimension) along the template;
    // witness maps the template's attached object into B.
    void step(const Family& f, const TemplateSpec& s, const Formal& sigma, const std::optional<SMap>& witness = {});
    void horn(const Family& f, const Formal& sigma, int missing);
    SP stage() const { return stage_; }
    const SMap& into() const { return phi_; }  // stage -> B
    Certificate finish(std::map<std::string, std::string> params = {});

  private:
    std::string lemma_;
    SMap target_;
    std::optional<int> trunc_;
    SP stage0_, stage_;
    SMap phi_;
    std::vector<Step> steps_;
};

Certificate gen_generalized_aug(int n, const std::set<int>& S, int i, const std::string& I);
Certificate gen_an1(const std::string& I, int n, int eps);
// j must be bijective on vertices.
Certificate gen_bij0(const std::string& I, const SMap& j, int eps);

enum class An2Case { Lower, Upper };  // augmented edges (i-1)->i or i->(i+1)
Certificate gen_an2(const std::string& I, int n, int i, An2Case c);

Certificate gen_J_from_edge(int D);
Certificate gen_K_from_edge();
Certificate gen_cyl_J(int lmax);
Certificate gen_cyl_K(int eps);

struct EdgeWitness {
    AugTriangulation tri;
    SMap map;  // tri.obj -> X, sending tri.edge to the witnessed edge
};
struct Upgrade {
    Certificate cert;
    std::map<int, EdgeWitness> witnesses;  // by edge of the new codomain
};
// Re-declares a horn certificate A -> B, pushed out along u: A -> X, over
// almost-I-augmented horns; evidence is keyed by non-degenerate edges of X.
Upgrade gen_upgrade(const Certificate& base, const SMap& u, const std::map<int, EdgeWitness>& evidence,
                    const std::string& I);

// gen_cyl_K(eps) pushed out along K glued on the vertical edge, then upgraded.
Upgrade upgrade_cyl_K(int eps, int max_size = 2);

// First almost-I witness for e by triangulation size, then enumeration order.
std::optional<EdgeWitness> find_edge_witness(SP X, const Formal& e, const SMap& iota, int max_size);

Retract gen_retract(int n, int j, const std::string& I);

struct DH2Parts {
    SP cylinder;
    Sub cylA;           // iota (.) A inside iota (.) B
    Sub endB[2];        // {eps} (.) B
    Sub endA[2];        // {eps} (.) A
};
DH2Parts dh2_parts(const SMap& iota, const SMap& sample);
bool check_dh2(const SMap& iota, const SMap& sample);

}  // namespace sset
