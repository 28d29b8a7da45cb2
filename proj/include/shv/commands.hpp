#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shv/document.hpp"

/// Document-in, document-out operations shared by the command line tool
/// and the Python bindings.
namespace shv::commands {

using document::json;

/// Arguments that are well formed JSON but out of range or inconsistent.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Result {
  Result() = default;
  Result(json d) : doc(std::move(d)) {}

  json doc;
  /// False for a semantic failure (a check failed, a probe did not succeed).
  bool ok = true;
  /// One line per failed condition or probe, for standard error.
  std::vector<std::string> diagnostics;
};

/// Fuel from SHV_FUEL, or the default; throws UsageError when malformed.
long fuel_from_env();

Result bracket(const json& x, const json& y, superalgebra::Tag tag);

/// Built-in algebras when no ansatz is given.
Result conformal_check(const std::optional<json>& ansatz);
Result conformal_classify(long degree, bool c_nonzero);
Result conformal_products();

Result lie_of(long range);
Result ns_check(long range, bool corrupt);
Result quotient(long alpha, long beta, long z);

/// Normal form of a vector document, or of `word` applied to `base`
/// (the first basis vector when empty).
Result normal_form(const json& module, const std::optional<json>& vector, const std::string& word,
                   const std::string& base, const std::string& strategy, long fuel);
Result act(const json& module, const json& vector, const std::string& word, const std::string& coeff, long fuel);

struct ProbeRequest {
  /// A vector document or {"vectors":[...]}; exclusive with `random`.
  std::optional<json> vectors;
  long random = 0;
  long max_weight = 6;
  std::optional<unsigned long> seed;
  long sample_bound = 4;
};

Result probe(const json& module, const ProbeRequest& request, long fuel);
Result validate_module(const json& module, long sample_bound, long fuel);

}  // namespace shv::commands
