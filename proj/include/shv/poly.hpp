#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shv/scalar.hpp"

namespace shv {

/// Sorted (variable, exponent) pairs; exponents are positive.
using Monomial = std::vector<std::pair<int, int>>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
int monomial_exponent(const Monomial& m, int var);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Variables are small integers; their meaning is assigned by the caller.
class MPoly {
 public:
  using Terms = std::map<Monomial, Scalar>;

  MPoly() = default;
  MPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly var(int v, int exponent = 1);
  static MPoly term(Monomial m, Scalar c);

  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  /// Constant term (coefficient of the empty monomial).
  [[nodiscard]] Scalar constant_term() const;
  [[nodiscard]] int degree_in(int var) const;
  [[nodiscard]] int total_degree() const;
  [[nodiscard]] std::set<int> variables() const;
  [[nodiscard]] bool uses_only(const std::set<int>& vars) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator-(MPoly a) { return a *= Scalar(-1); }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& s) { return a *= s; }
  friend MPoly operator*(const Scalar& s, MPoly a) { return a *= s; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  [[nodiscard]] MPoly pow(int n) const;

  /// Replaces every occurrence of `var` by `replacement`.
  [[nodiscard]] MPoly substitute(int var, const MPoly& replacement) const;
  /// Simultaneous substitution of several variables.
  [[nodiscard]] MPoly substitute(const std::map<int, MPoly>& replacements) const;

  /// Splits into coefficients with respect to the variables in `outer`:
  /// result maps an outer-only monomial to a polynomial in the remaining
  /// variables.
  [[nodiscard]] std::map<Monomial, MPoly> split(const std::set<int>& outer) const;

  /// Coefficient of var^e, as a polynomial in the other variables.
  [[nodiscard]] MPoly coefficient(int var, int e) const;

  /// Exact division by a polynomial of the form k*var + rest, with k a
  /// nonzero constant and rest free of var. Returns nullopt when the
  /// division leaves a remainder.
  [[nodiscard]] std::optional<MPoly> divide_linear(int var, const MPoly& divisor) const;

  /// Divides by the leading rational coefficient so the leading term has
  /// coefficient 1. Zero stays zero.
  [[nodiscard]] MPoly monic() const;

  [[nodiscard]] std::string str(const std::function<std::string(int)>& name) const;

 private:
  void add_term(const Monomial& m, const Scalar& c);
  Terms terms_;
};

}  // namespace shv
