#include "shv/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace shv {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

int monomial_exponent(const Monomial& m, int var) {
  for (const auto& [v, e] : m)
    if (v == var) return e;
  return 0;
}

MPoly::MPoly(Scalar c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, std::move(c));
}

MPoly MPoly::var(int v, int exponent) {
  if (exponent == 0) return MPoly(1);
  return term(Monomial{{v, exponent}}, Scalar(1));
}

MPoly MPoly::term(Monomial m, Scalar c) {
  MPoly p;
  p.add_term(m, c);
  return p;
}

void MPoly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Scalar MPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Scalar(0) : it->second;
}

int MPoly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_exponent(m, var));
  return d;
}

int MPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    d = std::max(d, s);
  }
  return d;
}

std::set<int> MPoly::variables() const {
  std::set<int> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m) out.insert(v);
  return out;
}

bool MPoly::uses_only(const std::set<int>& vars) const {
  for (const auto& [m, c] : terms_)
    for (const auto& [v, e] : m)
      if (!vars.contains(v)) return false;
  return true;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
  return out;
}

MPoly MPoly::pow(int n) const {
  if (n < 0) throw std::domain_error("negative polynomial power");
  MPoly r(1);
  for (int t = 0; t < n; ++t) r = r * *this;
  return r;
}

MPoly MPoly::substitute(int var, const MPoly& replacement) const {
  return substitute(std::map<int, MPoly>{{var, replacement}});
}

MPoly MPoly::substitute(const std::map<int, MPoly>& replacements) const {
  // powers are cached per variable since the same power recurs across terms
  std::map<std::pair<int, int>, MPoly> cache;
  auto power = [&](int v, int e) -> const MPoly& {
    auto key = std::make_pair(v, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, replacements.at(v).pow(e)).first->second;
  };
  MPoly out;
  for (const auto& [m, c] : terms_) {
    Monomial kept;
    MPoly factor(c);
    for (const auto& [v, e] : m) {
      if (replacements.contains(v))
        factor = factor * power(v, e);
      else
        kept.emplace_back(v, e);
    }
    out += factor * term(kept, Scalar(1));
  }
  return out;
}

std::map<Monomial, MPoly> MPoly::split(const std::set<int>& outer) const {
  std::map<Monomial, MPoly> out;
  for (const auto& [m, c] : terms_) {
    Monomial o, rest;
    for (const auto& ve : m) (outer.contains(ve.first) ? o : rest).push_back(ve);
    out[o].add_term(rest, c);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

MPoly MPoly::coefficient(int var, int e) const {
  MPoly out;
  for (const auto& [m, c] : terms_) {
    if (monomial_exponent(m, var) != e) continue;
    Monomial rest;
    for (const auto& ve : m)
      if (ve.first != var) rest.push_back(ve);
    out.add_term(rest, c);
  }
  return out;
}

std::optional<MPoly> MPoly::divide_linear(int var, const MPoly& divisor) const {
  if (divisor.degree_in(var) != 1) throw std::invalid_argument("divisor is not linear in var");
  MPoly lead = divisor.coefficient(var, 1);
  if (!lead.is_constant() || lead.is_zero())
    throw std::invalid_argument("divisor leading coefficient must be a nonzero constant");
  // divisor = k (var - root)
  Scalar k = lead.constant_term();
  MPoly root = -(divisor.coefficient(var, 0) * (Scalar(1) / k));
  int n = degree_in(var);
  if (is_zero()) return MPoly();
  // synthetic division in var: coefficients c_n..c_0
  std::vector<MPoly> coeff(n + 1);
  for (int e = 0; e <= n; ++e) coeff[e] = coefficient(var, e);
  std::vector<MPoly> quot(std::max(n, 1));
  MPoly carry;
  for (int e = n; e >= 1; --e) {
    carry = coeff[e] + carry * root;
    quot[e - 1] = carry;
  }
  MPoly remainder = coeff[0] + carry * root;
  if (n == 0) remainder = coeff[0];
  if (!remainder.is_zero()) return std::nullopt;
  MPoly out;
  for (int e = 0; e < n; ++e) out += quot[e] * MPoly::var(var, e);
  return out * (Scalar(1) / k);
}

MPoly MPoly::monic() const {
  if (terms_.empty()) return *this;
  return *this * (Scalar(1) / terms_.rbegin()->second);
}

std::string MPoly::str(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest monomials first reads more naturally
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Scalar mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == Scalar(1);
    if (!unit || m.empty()) {
      os << mag.str();
      if (!m.empty()) os << "*";
    }
    bool firstvar = true;
    for (const auto& [v, e] : m) {
      if (!firstvar) os << "*";
      firstvar = false;
      os << name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace shv
