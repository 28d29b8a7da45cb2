#pragma once

#include <compare>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "shv/conformal.hpp"
#include "shv/scalar.hpp"

/// The super Heisenberg-Virasoro algebra of Ramond type and its
/// Neveu-Schwarz counterpart, realised on indexed generators.
namespace shv::superalgebra {

enum class Family { L = 0, I = 1, G = 2 };
enum class Tag { ramond, neveu_schwarz };

char family_char(Family f);
Family parse_family(char c);

/// Indexed generator; indices are stored doubled so half-integer G indices
/// of the Neveu-Schwarz algebra share the representation.
struct Generator {
  Family family;
  long doubled;

  static Generator integral(Family f, long index) { return {f, 2 * index}; }
  [[nodiscard]] bool odd() const { return family == Family::G; }
  [[nodiscard]] bool integral_index() const { return doubled % 2 == 0; }
  /// Index as a machine integer; throws for half-integer indices.
  [[nodiscard]] long index() const;
  [[nodiscard]] Scalar index_value() const { return Scalar(doubled, 2); }
  /// "L5", "G-1", "G3/2".
  [[nodiscard]] std::string str() const;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Parses "L5", "I-2", "G3/2".
Generator parse_generator(const std::string& text);

class TagMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finite linear combination of generators.
class Element {
 public:
  using Terms = std::map<Generator, Scalar>;

  explicit Element(Tag tag = Tag::ramond) : tag_(tag) {}
  Element(Tag tag, const Generator& g, Scalar coeff = Scalar(1));

  [[nodiscard]] Tag tag() const { return tag_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  void add(const Generator& g, const Scalar& coeff);
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  friend bool operator==(const Element& a, const Element& b) {
    return a.tag_ == b.tag_ && a.terms_ == b.terms_;
  }

  [[nodiscard]] std::string str() const;

 private:
  Tag tag_;
  Terms terms_;
};

/// Throws std::invalid_argument when g violates the index rule of the tag.
void validate_generator(Tag tag, const Generator& g);

Element bracket(const Generator& x, const Generator& y, Tag tag = Tag::ramond);
Element bracket(const Element& x, const Element& y);

/// Bracket [a_(m), b_(n)] in Lie(spec) before re-indexing, as a map from
/// (generator index in spec, mode) to coefficient.
using FormalElement = std::map<std::pair<int, long>, Scalar>;
FormalElement formal_bracket(const conformal::AlgebraSpec& spec, int a, long m, int b, long n);

/// Bracket table of Lie(spec) after the re-indexing L_m <-> -L_(m+1),
/// I_m <-> I_(m), G_m <-> G_(m), for generator indices in [lo, hi].
/// The conformal algebra must name its generators L, I, G.
std::map<std::pair<Generator, Generator>, Element> lie_of(const conformal::AlgebraSpec& spec, long lo, long hi);

struct LieComparison {
  bool matches = true;
  /// [L_(m), L_(n)] = (m-n) L_(m+n-1) before re-indexing.
  bool pre_shift_identity = true;
  std::size_t pairs = 0;
  std::vector<std::string> mismatches;
};

/// Compares lie_of(spec) on [-bound, bound] with the bracket of S term by term.
LieComparison compare_lie_of(const conformal::AlgebraSpec& spec, long bound);

/// Linear map on generators used for the Neveu-Schwarz embedding.
using GeneratorMap = std::function<Element(const Generator&)>;

/// L_m -> L_{2m}/2, I_m -> I_{2m}, G_{m+1/2} -> G_{2m+1}.
Element ns_generator_image(const Generator& g);
Element ns_embed(const Element& x, const GeneratorMap& map = ns_generator_image);

struct EmbeddingReport {
  bool pass = true;
  std::vector<std::string> violations;
};

EmbeddingReport check_ns_embedding(long bound, const GeneratorMap& map = ns_generator_image);

/// S_{alpha,beta}, S^{(r,s,t)} or T(r), described by per-family lower
/// index bounds.
class Subalgebra {
 public:
  static Subalgebra s_alpha_beta(long alpha, long beta);
  static Subalgebra s_rst(long r, long s, long t);
  static Subalgebra t_r(long r) { return s_rst(r, r, r); }

  [[nodiscard]] long lower_bound(Family f) const;
  [[nodiscard]] bool contains(const Generator& g) const;
  [[nodiscard]] std::string str() const { return name_; }

 private:
  Subalgebra(long l, long i, long g, std::string name) : l_(l), i_(i), g_(g), name_(std::move(name)) {}
  long l_, i_, g_;
  std::string name_;
};

bool member(const Subalgebra& sub, const Element& x);

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// S_{alpha,beta} modulo S^{(z+alpha+1, z+1, z+beta+1)}.
struct QuotientAlgebra {
  long alpha = 0, beta = 0, z = 0;
  std::vector<Generator> survivors;
  std::map<std::pair<Generator, Generator>, Element> table;

  [[nodiscard]] bool survives(const Generator& g) const;
  /// Drops terms lying in the ideal.
  [[nodiscard]] Element truncate(const Element& e) const;
  [[nodiscard]] Element bracket(const Element& x, const Element& y) const;
  /// Super Jacobi identity over all survivor triples.
  [[nodiscard]] bool check_jacobi() const;
};

QuotientAlgebra quotient_algebra(long alpha, long beta, long z);

}  // namespace shv::superalgebra
