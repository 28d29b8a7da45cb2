#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shv/order.hpp"
#include "shv/straighten.hpp"

/// Induced modules Ind(V) = U(S) ⊗_{U(S_{α,β})} V, base modules, and the
/// degree-lowering simplicity probe.
namespace shv::induced {

using order::BoolIndex;
using order::DegreeTriple;
using order::MonoIndex;

using Matrix = std::vector<std::vector<Scalar>>;

struct ConditionReport {
  bool pass = true;
  long z = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// A module over S_{α,β} on which I_0 acts by the scalar c0.
class BaseModule {
 public:
  BaseModule(long alpha, long beta, long z, Scalar c0);
  virtual ~BaseModule() = default;

  [[nodiscard]] long alpha() const { return alpha_; }
  [[nodiscard]] long beta() const { return beta_; }
  /// Annihilation level used by the simplicity conditions.
  [[nodiscard]] long z() const { return z_; }
  [[nodiscard]] const Scalar& c0() const { return c0_; }
  [[nodiscard]] bool in_subalgebra(const Generator& g) const;

  [[nodiscard]] virtual int parity(const BaseKey& key) const = 0;
  /// Action of g ∈ S_{α,β} on a basis vector.
  [[nodiscard]] virtual BaseVec act(const Generator& g, const BaseKey& key) const = 0;
  /// Every generator with index above this value acts as zero.
  [[nodiscard]] virtual long annihilation_level() const = 0;
  /// Basis vectors of "size" at most `bound` (all of them when finite).
  [[nodiscard]] virtual std::vector<BaseKey> sample_basis(long bound) const = 0;
  [[nodiscard]] virtual std::string describe(const BaseKey& key) const = 0;
  /// Inverse of describe; throws std::invalid_argument.
  [[nodiscard]] virtual BaseKey parse_key(const std::string& label) const = 0;
  [[nodiscard]] virtual ConditionReport validate(long sample_bound) const = 0;

 private:
  long alpha_, beta_, z_;
  Scalar c0_;
};

/// Finite-dimensional module given by matrices (column c holds the image of
/// basis vector c). Generators without a matrix act as zero. The matrices
/// are checked against the relations of the quotient S_{α,β} /
/// S^{(z+α+1, z+1, z+β+1)} on construction.
class FiniteTableModule : public BaseModule {
 public:
  FiniteTableModule(long alpha, long beta, long z, std::vector<int> parities, std::map<Generator, Matrix> actions,
                    std::vector<std::string> names = {});

  [[nodiscard]] std::size_t dimension() const { return parities_.size(); }
  [[nodiscard]] const std::vector<int>& parities() const { return parities_; }
  [[nodiscard]] const std::map<Generator, Matrix>& actions() const { return actions_; }
  [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
  [[nodiscard]] Matrix matrix(const Generator& g) const;

  int parity(const BaseKey& key) const override;
  BaseVec act(const Generator& g, const BaseKey& key) const override;
  long annihilation_level() const override;
  std::vector<BaseKey> sample_basis(long bound) const override;
  std::string describe(const BaseKey& key) const override;
  BaseKey parse_key(const std::string& label) const override;
  ConditionReport validate(long sample_bound) const override;

 private:
  std::vector<int> parities_;
  std::map<Generator, Matrix> actions_;
  std::vector<std::string> names_;
};

/// Two-dimensional highest-weight module {v even, w = G_0 v odd}:
/// L_0 = h, I_0 = c0, G_0 v = w, G_0 w = c0 v; α = β = z = 0.
std::shared_ptr<FiniteTableModule> verma(const Scalar& h, const Scalar& c0);

class InconsistentHomomorphism : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// U(T(0)) ⊗_{U(T(k))} C v with x v = φ(x) v on T(k) and I_0 v = c0 v.
/// Basis: normal words in L_i, G_i (0 <= i < k) and I_i (1 <= i < k)
/// applied to v. Here α = β = 0 and z = 2k-1.
class WhittakerBase : public BaseModule {
 public:
  WhittakerBase(long k, std::map<Generator, Scalar> phi, Scalar c0);

  [[nodiscard]] long level() const { return k_; }
  [[nodiscard]] const std::map<Generator, Scalar>& phi() const { return phi_; }
  [[nodiscard]] Scalar phi_of(const Generator& g) const;

  static BaseKey encode(const Word& w);
  static Word decode(const BaseKey& key);

  int parity(const BaseKey& key) const override;
  BaseVec act(const Generator& g, const BaseKey& key) const override;
  long annihilation_level() const override;
  std::vector<BaseKey> sample_basis(long bound) const override;
  std::string describe(const BaseKey& key) const override;
  BaseKey parse_key(const std::string& label) const override;
  ConditionReport validate(long sample_bound) const override;

 private:
  long k_;
  std::map<Generator, Scalar> phi_;
  Straightener inner_;
  mutable std::mutex cache_mutex_;
  mutable std::map<std::pair<Generator, BaseKey>, BaseVec> cache_;
};

std::shared_ptr<WhittakerBase> whittaker(long k, const std::map<Generator, Scalar>& phi, const Scalar& c0);

ConditionReport validate_conditions(const BaseModule& v, long sample_bound = 4);

/// One-dimensional T(1)-module check: φ([x,y]) = φ(x)φ(y) - (-1)^{|x||y|} φ(y)φ(x)
/// for all generators x, y of T(1) with index <= 4.
ConditionReport dim_check_t1(const std::map<Generator, Scalar>& phi);

/// Key of a PBW basis vector I^i G^j L^k ⊗ (base); the offsets place
/// position p of i, j, k at I_{-p-α}, G_{-p-β}, L_{-p}.
struct PBWMonomial {
  MonoIndex i;
  BoolIndex j;
  MonoIndex k;
  long alpha = 0;
  long beta = 0;

  [[nodiscard]] DegreeTriple triple() const { return {i, j, k}; }
  [[nodiscard]] Word word() const;
  [[nodiscard]] int parity() const { return static_cast<int>(j.length() % 2); }
  [[nodiscard]] long weight() const { return i.weight() + j.weight() + k.weight(); }
  [[nodiscard]] std::string str() const;
  static PBWMonomial from_word(const Word& w, long alpha, long beta);

  friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;
};

class InducedModule;

/// Element Σ I^i G^j L^k v_{i,j,k} of an induced module.
class InducedVector {
 public:
  using Terms = std::map<PBWMonomial, BaseVec>;

  InducedVector() = default;
  explicit InducedVector(Terms terms);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// True when every term is 1 ⊗ (base vector).
  [[nodiscard]] bool in_base() const;
  [[nodiscard]] BaseVec base_part() const;

  void add(const PBWMonomial& m, const BaseKey& key, const Scalar& c);
  InducedVector& operator+=(const InducedVector& o);
  InducedVector& operator-=(const InducedVector& o);
  InducedVector& operator*=(const Scalar& s);
  friend InducedVector operator+(InducedVector a, const InducedVector& b) { return a += b; }
  friend InducedVector operator-(InducedVector a, const InducedVector& b) { return a -= b; }
  friend InducedVector operator*(InducedVector a, const Scalar& s) { return a *= s; }
  friend bool operator==(const InducedVector&, const InducedVector&) = default;

 private:
  Terms terms_;
};

struct ProbeStep {
  Generator applied;
  DegreeTriple degree;
  char branch;  // 'I', 'G' or 'L'
  std::optional<DegreeTriple> predicted;
};

struct ProbeTrace {
  DegreeTriple start;
  std::vector<ProbeStep> steps;
  bool success = false;
  BaseVec terminal;
  std::string failure;
};

class InducedModule {
 public:
  explicit InducedModule(std::shared_ptr<const BaseModule> base, long fuel = kDefaultFuel);

  [[nodiscard]] const BaseModule& base() const { return *base_; }
  [[nodiscard]] std::shared_ptr<const BaseModule> base_ptr() const { return base_; }
  [[nodiscard]] long alpha() const { return base_->alpha(); }
  [[nodiscard]] long beta() const { return base_->beta(); }

  /// Letters kept in normal words: L_{<0}, I_{<-α}, G_{<-β}.
  [[nodiscard]] bool is_basis_letter(const Generator& g) const;

  /// 1 ⊗ key.
  [[nodiscard]] InducedVector vacuum(const BaseKey& key) const;
  /// Normal form of word ⊗ key.
  [[nodiscard]] InducedVector normal_form(const Word& w, const BaseKey& key,
                                          Strategy strategy = Strategy::rightmost_first) const;

  [[nodiscard]] InducedVector act(const Generator& g, const InducedVector& v,
                                  Strategy strategy = Strategy::rightmost_first) const;
  [[nodiscard]] InducedVector act(const superalgebra::Element& x, const InducedVector& v) const;
  /// The rightmost letter acts first.
  [[nodiscard]] InducedVector act_word(const Word& word, const InducedVector& v, const Scalar& scale = Scalar(1),
                                       Strategy strategy = Strategy::rightmost_first) const;

  /// Parity of a homogeneous vector; throws when v mixes parities.
  [[nodiscard]] int parity(const InducedVector& v) const;

  [[nodiscard]] const Straightener& straightener() const { return engine_; }

 private:
  std::shared_ptr<const BaseModule> base_;
  Straightener engine_;
};

using order::Reading;

/// Support sorted ascending in the principal order.
std::vector<DegreeTriple> support(const InducedVector& v, Reading reading = Reading::right_to_left);
/// Maximal support element under the principal order; throws for v = 0.
DegreeTriple degree(const InducedVector& v, Reading reading = Reading::right_to_left);
std::pair<std::vector<DegreeTriple>, DegreeTriple> support_and_degree(const InducedVector& v,
                                                                      Reading reading = Reading::right_to_left);

/// (i, j, k') if k != 0, else (i, j', 0) if j != 0, else (i', 0, 0).
DegreeTriple degree_after_lowering(const DegreeTriple& deg);
DegreeTriple degree_after_lowering(const InducedVector& v, Reading reading = Reading::right_to_left);

/// Applies I_{k̃+z}, G_{j̃+β+z} or L_{ĩ+α+z} according to the shape of the
/// current degree until the vector lies in 1 ⊗ V.
ProbeTrace simplicity_probe(const InducedModule& m, const InducedVector& v, Reading reading = Reading::right_to_left);

/// Least k >= 0 such that every generator of index > k kills v.
long annihilation_bound(const InducedModule& m, const InducedVector& v);

/// Random homogeneous vector with 1..3 PBW terms of total weight <= max_weight.
InducedVector random_vector(const InducedModule& m, std::mt19937_64& rng, long max_weight, int parity);

}  // namespace shv::induced
