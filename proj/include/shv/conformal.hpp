#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shv/poly.hpp"
#include "shv/scalar.hpp"

/// Lambda-bracket calculus for Lie conformal superalgebras that are free of
/// finite rank over C[∂], plus the rank-one extension classifier.
namespace shv::conformal {

/// Variable slots used by every polynomial in this namespace.
enum Var : int { kDel = 0, kLam = 1, kMu = 2, kParamA = 3, kParamB = 4, kParamC = 5, kFirstUnknown = 6 };

std::string var_name(int v);

enum class Parity { even = 0, odd = 1 };
inline int operator*(Parity a, Parity b) { return static_cast<int>(a) * static_cast<int>(b); }

struct Generator {
  std::string name;
  Parity parity;
};

/// A C[∂]-combination of generators, possibly with λ, µ or parameter
/// dependence in the coefficients: generator index -> coefficient.
using ConfElem = std::map<int, MPoly>;

ConfElem& accumulate(ConfElem& into, const ConfElem& add, const MPoly& factor = MPoly(1));
ConfElem substitute(const ConfElem& e, const std::map<int, MPoly>& repl);
bool is_zero(const ConfElem& e);

class ResolutionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Generators plus the bracket table [x λ y] for every ordered pair.
class AlgebraSpec {
 public:
  AlgebraSpec(std::vector<Generator> generators, std::map<std::pair<int, int>, ConfElem> table);

  [[nodiscard]] const std::vector<Generator>& generators() const { return gens_; }
  [[nodiscard]] std::size_t size() const { return gens_.size(); }
  [[nodiscard]] int index_of(const std::string& name) const;
  [[nodiscard]] Parity parity(int g) const { return gens_.at(g).parity; }
  [[nodiscard]] const std::string& name(int g) const { return gens_.at(g).name; }
  /// [x λ y], coefficients in ∂ and λ.
  [[nodiscard]] const ConfElem& entry(int x, int y) const { return table_.at({x, y}); }
  [[nodiscard]] AlgebraSpec with_entry(int x, int y, ConfElem value) const;

 private:
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, ConfElem> table_;
};

/// The Heisenberg-Virasoro conformal algebra: [LλL]=(∂+2λ)L, [LλI]=(∂+λ)I.
AlgebraSpec heisenberg_virasoro();
/// The super extension with [LλG]=(∂+λ)G and [GλG]=2I.
AlgebraSpec super_heisenberg_virasoro();

/// Parameters of the odd rank-one extension
///   [LλG]=(∂+aλ+b)G, [IλG]=cG, [GλG]=phi(∂,λ)L+psi(∂,λ)I.
/// Reverse-order entries are fixed by skew-symmetry.
struct ExtensionAnsatz {
  Scalar a, b, c;
  MPoly phi, psi;  // polynomials in kDel and kLam
};

AlgebraSpec extension_algebra(const ExtensionAnsatz& ansatz);
/// Same construction with symbolic a, b, c (any polynomial coefficients).
AlgebraSpec extension_algebra(const MPoly& a, const MPoly& b, const MPoly& c, const MPoly& phi,
                              const MPoly& psi);

/// [x Λ y] for arbitrary Λ, extended by sesquilinearity:
/// p(∂)x Λ q(∂)y = p(-Λ) q(∂+Λ) [x Λ y].
ConfElem bracket_at(const AlgebraSpec& spec, const ConfElem& x, const ConfElem& y, const MPoly& lambda);

/// [x λ y] for C[∂]-combinations of generators.
ConfElem lambda_bracket(const AlgebraSpec& spec, const ConfElem& x, const ConfElem& y);

struct Report {
  bool pass = true;
  std::vector<std::string> violations;
};

/// Nonzero differences [xλy] + (-1)^{|x||y|}[y_{-λ-∂}x], keyed by pair.
std::vector<std::pair<std::pair<int, int>, ConfElem>> skew_defects(const AlgebraSpec& spec);
/// Nonzero Jacobi defects for generator triples, in ∂, λ, µ.
std::vector<std::pair<std::vector<int>, ConfElem>> jacobi_defects(const AlgebraSpec& spec);

Report check_skew(const AlgebraSpec& spec);
Report check_jacobi(const AlgebraSpec& spec);

/// Left and right hand sides of the Jacobi identity for one triple.
std::pair<ConfElem, ConfElem> jacobi_sides(const AlgebraSpec& spec, int a, int b, int c);

/// A rank-one conformal module C[∂]v: generator g acts by
/// g λ v = action[g](∂, λ) v.
struct ModuleSpec {
  Parity v_parity = Parity::even;
  std::map<int, MPoly> action;
};

/// V(a,b,c): L λ v = (∂+aλ+b)v, I λ v = cv.
struct RankOneModuleSpec {
  Scalar a, b, c;
};

ModuleSpec rank_one_module(const AlgebraSpec& hv, const RankOneModuleSpec& mod);
Report check_conformal_module(const AlgebraSpec& spec, const ModuleSpec& mod);
Report check_conformal_module(const AlgebraSpec& spec, const RankOneModuleSpec& mod);
bool rank_one_irreducible(const RankOneModuleSpec& mod);

/// All nonzero x_(j) y, with x_(j) y = j! * (coefficient of λ^j in [xλy]).
std::vector<std::pair<int, ConfElem>> jth_products(const AlgebraSpec& spec, int x, int y);

std::string render(const AlgebraSpec& spec, const ConfElem& e);
/// Compact rendering such as "∂ + 2λ".
std::string render_poly(const MPoly& p);

/// One parametric family of solutions (a, b, c, phi, psi) of the
/// extension ansatz. Parameters a, b, c not in `fixed` are free subject
/// to `nonzero`. The (phi, psi) part is any nonzero combination of the
/// kernel basis.
struct SolutionFamily {
  std::map<std::string, MPoly> fixed;
  std::vector<MPoly> nonzero;
  std::vector<std::pair<MPoly, MPoly>> kernel;
};

struct ClassifyOptions {
  bool require_c_nonzero = false;
};

std::vector<SolutionFamily> classify_rank_one_extension(int degree_bound, ClassifyOptions options = {});

}  // namespace shv::conformal
