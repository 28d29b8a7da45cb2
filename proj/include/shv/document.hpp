#pragma once

#include <json.hpp>
#include <memory>
#include <stdexcept>
#include <string>

#include "shv/conformal.hpp"
#include "shv/induced.hpp"
#include "shv/superalgebra.hpp"

/// JSON documents for elements, base modules, induced vectors and reports.
/// Scalars are strings "p/q" or "p"; Ramond indices are integers and
/// Neveu-Schwarz G indices are strings "n/2".
namespace shv::document {

using json = nlohmann::json;

/// Malformed or ill-typed document.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json parse_text(const std::string& text);

json render_scalar(const Scalar& s);
/// Accepts "p/q", "p" or a JSON integer.
Scalar parse_scalar(const json& j);

json render_generator_index(const superalgebra::Generator& g);

/// {"terms":[{"coeff":..,"family":..,"index":..}]}, canonical order; Neveu-Schwarz
/// elements carry "algebra":"ns".
json render_element(const superalgebra::Element& e);
superalgebra::Element parse_element(const json& j, superalgebra::Tag fallback = superalgebra::Tag::ramond);

/// Space separated letters, e.g. "L1 G-1".
induced::Word parse_word(const std::string& text);
json render_word(const induced::Word& w);
induced::Word parse_word(const json& j);

/// Module documents:
///   {"type":"verma","h":..,"c0":..}
///   {"type":"whittaker","k":1,"phi":{"I1":"1"},"c0":..}
///   {"type":"finite","alpha":..,"beta":..,"z":..,
///    "basis":[{"name":"v","parity":0},..],"actions":{"G0":[["0","1"],["1","0"]]}}
std::shared_ptr<const induced::BaseModule> parse_module(const json& j);
json render_module(const induced::BaseModule& m);

/// Basis label such as "v" or "G0 L0 v".
induced::BaseKey parse_base_key(const induced::BaseModule& m, const json& label);

/// {"terms":[{"coeff":..,"word":[..],"base":..}]}; words need not be normal.
induced::InducedVector parse_vector(const induced::InducedModule& m, const json& j);
json render_vector(const induced::InducedModule& m, const induced::InducedVector& v);
json render_base_vector(const induced::BaseModule& m, const induced::BaseVec& v);

json render_report(const induced::ConditionReport& r);
json render_trace(const induced::InducedModule& m, const induced::ProbeTrace& t);

/// {"a":..,"b":..,"c":..,"phi":..,"psi":..}; phi and psi are a scalar or a list of
/// {"coeff":..,"d":..,"l":..} terms in ∂ and λ.
conformal::ExtensionAnsatz parse_ansatz(const json& j);
json render_family(const conformal::SolutionFamily& f);

}  // namespace shv::document
