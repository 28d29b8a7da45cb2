// shv: batch front end for the super Heisenberg-Virasoro engine.
#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "shv/commands.hpp"

namespace {

using namespace shv;
using document::DocumentError;
using document::json;
using superalgebra::Tag;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

using commands::UsageError;

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw DocumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_document(const std::string& path) { return document::parse_text(read_input(path)); }

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int report(const commands::Result& r) {
  emit(r.doc);
  for (const auto& d : r.diagnostics) std::cerr << d << "\n";
  return r.ok ? kOk : kFailure;
}

void one_stdin(const std::string& a, const std::string& b) {
  if (a == "-" && b == "-") throw UsageError("only one document can come from standard input");
}

std::optional<json> optional_document(const std::string& path) {
  if (path.empty()) return std::nullopt;
  return read_document(path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the super Heisenberg-Virasoro algebra"};
  app.require_subcommand(1);

  std::string x_path, y_path, algebra = "ramond";
  auto* bracket = app.add_subcommand("bracket", "bracket of two element documents");
  bracket->add_option("x", x_path, "first element document (- for stdin)")->required();
  bracket->add_option("y", y_path, "second element document (- for stdin)")->required();
  bracket->add_option("--algebra", algebra, "ramond or ns")->check(CLI::IsMember({"ramond", "ns"}));

  auto* conformal_cmd = app.add_subcommand("conformal", "lambda-bracket checks and classification");
  conformal_cmd->require_subcommand(1);
  std::string ansatz_path;
  auto* check = conformal_cmd->add_subcommand("check", "skew-symmetry and Jacobi identity");
  check->add_option("ansatz", ansatz_path, "extension ansatz document (default: built-in algebras)");
  long degree = 0;
  bool c_nonzero = false;
  auto* classify = conformal_cmd->add_subcommand("classify", "rank-one odd extensions");
  classify->add_option("--degree", degree, "total degree bound for phi and psi")->required();
  classify->add_flag("--c-nonzero", c_nonzero, "restrict to the c != 0 branch");
  auto* products = conformal_cmd->add_subcommand("products", "j-th product tables");

  long range = 8;
  auto* lie = app.add_subcommand("lie-of", "compare the formal distribution algebra with S");
  lie->add_option("--range", range, "index bound (at most 64)");
  bool corrupt = false;
  long ns_range = 8;
  auto* ns = app.add_subcommand("ns-check", "check the Neveu-Schwarz embedding");
  ns->add_option("--range", ns_range, "index bound (at most 64)");
  ns->add_flag("--corrupt", corrupt, "use L_m -> L_{2m} without the factor 1/2");

  long alpha = 0, beta = 0, z = 0;
  auto* quotient = app.add_subcommand("quotient", "finite quotient algebra and ideal check");
  quotient->add_option("--alpha", alpha);
  quotient->add_option("--beta", beta);
  quotient->add_option("--z", z);

  std::string module_path, vector_path, word, base, strategy = "rightmost", coeff = "1";
  auto* nf = app.add_subcommand("normal-form", "PBW normal form in an induced module");
  nf->add_option("module", module_path, "module document")->required();
  nf->add_option("vector", vector_path, "vector document whose words need not be normal");
  nf->add_option("--word", word, "letters such as \"L1 L-1\", rightmost acts first");
  nf->add_option("--base", base, "base vector label (default: first basis vector)");
  nf->add_option("--strategy", strategy, "rightmost or leftmost");

  auto* act = app.add_subcommand("act", "act with a word on an induced vector");
  act->add_option("module", module_path, "module document")->required();
  act->add_option("vector", vector_path, "vector document")->required();
  act->add_option("--word", word, "letters such as \"L1 L-1\", rightmost acts first")->required();
  act->add_option("--coeff", coeff, "scalar factor");

  long random = 0, max_weight = 6, sample_bound = 4;
  std::optional<unsigned long> seed;
  auto* probe = app.add_subcommand("probe", "validate a base module and run degree-lowering probes");
  probe->add_option("module", module_path, "module document")->required();
  probe->add_option("vector", vector_path, "vector document, or {\"vectors\":[...]}");
  probe->add_option("--random", random, "number of random vectors");
  probe->add_option("--max-weight", max_weight, "weight bound for random vectors");
  probe->add_option("--seed", seed, "seed for random vectors");
  probe->add_option("--sample-bound", sample_bound, "word length bound for infinite base modules");

  auto* validate = app.add_subcommand("validate-module", "check the simplicity conditions on a base module");
  validate->add_option("module", module_path, "module document")->required();
  validate->add_option("--sample-bound", sample_bound, "word length bound for infinite base modules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*bracket) {
      one_stdin(x_path, y_path);
      const Tag tag = algebra == "ns" ? Tag::neveu_schwarz : Tag::ramond;
      return report(commands::bracket(read_document(x_path), read_document(y_path), tag));
    }
    if (*check) return report(commands::conformal_check(optional_document(ansatz_path)));
    if (*classify) return report(commands::conformal_classify(degree, c_nonzero));
    if (*products) return report(commands::conformal_products());
    if (*lie) return report(commands::lie_of(range));
    if (*ns) return report(commands::ns_check(ns_range, corrupt));
    if (*quotient) return report(commands::quotient(alpha, beta, z));
    if (*validate) {
      const long fuel = commands::fuel_from_env();
      return report(commands::validate_module(read_document(module_path), sample_bound, fuel));
    }
    one_stdin(module_path, vector_path);
    const long fuel = commands::fuel_from_env();
    if (*nf) {
      const json module = read_document(module_path);
      return report(commands::normal_form(module, optional_document(vector_path), word, base, strategy, fuel));
    }
    if (*act) {
      const json module = read_document(module_path);
      return report(commands::act(module, read_document(vector_path), word, coeff, fuel));
    }
    if (*probe) {
      const json module = read_document(module_path);
      commands::ProbeRequest request{optional_document(vector_path), random, max_weight, seed, sample_bound};
      return report(commands::probe(module, request, fuel));
    }
  } catch (const DocumentError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
