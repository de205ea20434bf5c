// JSON formats: ObjectFile, maps, Certificate, FunctorCertificate, reports.
#pragma once

#include "json.hpp"
#include "sset/hcat.hpp"

namespace sset {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

json object_to_json(const SSet& X, const std::map<std::string, Formal>& edges = {});
// Validates on load; throws Error listing the validator diagnostics.
SP object_from_json(const json& j, std::map<std::string, Formal>* edges = nullptr);

json formal_to_json(const SSet& X, const Formal& f);
Formal formal_from_json(const SSet& X, const json& j, int dim);

json map_to_json(const SMap& f);
SMap map_from_json(const json& j, SP dom, SP cod);

json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const json& j);

json triangulation_to_json(const Triangulation& t);
Triangulation triangulation_from_json(const json& j);

json category_to_json(const FiniteCategory& C);
FiniteCategory category_from_json(const json& j);

struct FunctorCertificate {
    std::string object;  // catalog name
    std::string edge;    // refuted edge
    FunctorData functor;
};
json functor_to_json(const FunctorCertificate& f);
FunctorCertificate functor_from_json(const json& j);

json fibrancy_to_json(const FibrancyReport& r);

json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const json& j);
std::string to_dot(const SSet& X, const std::string& title);

}  // namespace sset
