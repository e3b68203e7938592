#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "vkdim/bounds.hpp"
#include "vkdim/complex.hpp"
#include "vkdim/obstruction.hpp"

namespace vkdim {

/// Malformed or inconsistent JSON document.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace schema {
inline constexpr const char* complex = "vkdim.complex/1";
inline constexpr const char* certificate = "vkdim.certificate/1";
inline constexpr const char* report = "vkdim.report/1";
inline constexpr const char* homology = "vkdim.homology/1";
inline constexpr const char* lemma_suite = "vkdim.lemma-suite/1";
}  // namespace schema

/// {"schema", "vertices": [labels in order], "simplices": [maximal faces as label lists]}
nlohmann::json to_json(const SimplicialComplex& k);

/// Accepts the layout above ("maximal_simplices" is an alias of "simplices"),
/// or {"graph": {"vertices", "edges"}, "flag": true} for a flag completion.
/// "vertices" and "vertex_order" are optional; the order is "vertex_order",
/// else "vertices", else first appearance. Throws FormatError or ComplexError.
SimplicialComplex complex_from_json(const nlohmann::json& j);

/// {"schema", "degree", "M", "Delta", "D", "omega_support", "star_condition", "evaluation"}.
/// M and Delta use labels of L; D and omega_support use labels of OL.
nlohmann::json to_json(const SimplicialComplex& l, const CycleCertificate& cert);

/// Rebuilds the certificate against L. D is recomputed from (M, Delta);
/// the stored omega, star flag and evaluation are taken as given so that
/// verify_certificate can check them. Throws FormatError on labels that do
/// not resolve in L or OL.
CycleCertificate certificate_from_json(const SimplicialComplex& l, const nlohmann::json& j);

nlohmann::json to_json(const BoundRecord& r);
nlohmann::json to_json(const Interval& i);
nlohmann::json to_json(const SimplicialComplex& l, const DimensionReport& report);

nlohmann::json homology_json(const SimplicialComplex& k);

}  // namespace vkdim
