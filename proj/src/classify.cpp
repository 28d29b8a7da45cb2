// Rank-one extension classifier: generates the skew and Jacobi constraints
// of the extension ansatz with symbolic a, b, c and symbolic coefficients
// for phi and psi, then solves the resulting system, which is linear in the
// phi/psi coefficients with coefficients in Q[a, b, c], by Gaussian
// elimination that branches on every non-constant pivot (pivot = 0 versus
// pivot != 0).

#include <array>
#include <optional>
#include <set>

#include "shv/conformal.hpp"

namespace shv::conformal {

namespace {

using Row = std::map<int, MPoly>;

struct Branch {
  std::map<int, MPoly> subst;
  std::vector<MPoly> nonzero;
  std::vector<MPoly> pending;
  std::vector<Row> active;
  std::vector<std::pair<int, Row>> pivots;
};

struct Unknowns {
  // column -> (is_psi, ∂ exponent, λ exponent)
  std::vector<std::array<int, 3>> columns;
};

// Splitting order: c, then b, then a.
constexpr std::array<int, 3> kParamOrder{kParamC, kParamB, kParamA};

std::optional<int> solvable_var(const MPoly& p) {
  for (int v : kParamOrder) {
    if (p.degree_in(v) != 1) continue;
    MPoly lead = p.coefficient(v, 1);
    if (lead.is_constant()) return v;
  }
  return std::nullopt;
}

std::string key_of(const MPoly& p) { return p.str(var_name); }

std::string key_of(const Row& r) {
  std::string k;
  for (const auto& [c, p] : r) k += std::to_string(c) + ":" + key_of(p) + ";";
  return k;
}

void apply_substitution(Branch& b, int var, const MPoly& value) {
  const std::map<int, MPoly> repl{{var, value}};
  for (auto& [v, p] : b.subst) p = p.substitute(repl);
  b.subst[var] = value;
  auto fix_row = [&](Row& row) {
    for (auto& [c, p] : row) p = p.substitute(repl);
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  };
  for (auto& row : b.active) fix_row(row);
  for (auto& [c, row] : b.pivots) fix_row(row);
  for (auto& p : b.nonzero) p = p.substitute(repl);
  for (auto& p : b.pending) p = p.substitute(repl);
}

// False when an assumed-nonzero polynomial has collapsed to zero.
bool prune_nonzero(Branch& b) {
  std::vector<MPoly> kept;
  std::set<std::string> seen;
  for (const auto& p : b.nonzero) {
    if (p.is_zero()) return false;
    if (p.is_constant()) continue;
    MPoly m = p.monic();
    if (seen.insert(key_of(m)).second) kept.push_back(m);
  }
  b.nonzero = std::move(kept);
  return true;
}

bool known_nonzero(const Branch& b, const MPoly& p) {
  if (p.is_constant()) return !p.is_zero();
  std::string k = key_of(p.monic());
  for (const auto& q : b.nonzero)
    if (key_of(q) == k) return true;
  return false;
}

void reduce_row(Row& row, const std::vector<MPoly>& nonzero) {
  if (row.empty()) return;
  // strip factors known to be nonzero
  for (const auto& q : nonzero) {
    auto v = solvable_var(q);
    if (!v) continue;
    for (;;) {
      Row divided;
      bool ok = true;
      for (const auto& [c, p] : row) {
        auto d = p.divide_linear(*v, q);
        if (!d) {
          ok = false;
          break;
        }
        divided.emplace(c, std::move(*d));
      }
      if (!ok) break;
      row = std::move(divided);
    }
  }
  Scalar lead = row.begin()->second.terms().rbegin()->second;
  for (auto& [c, p] : row) p *= Scalar(1) / lead;
}

void tidy(Branch& b) {
  std::vector<Row> rows;
  std::set<std::string> seen;
  for (auto& row : b.active) {
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
    if (row.empty()) continue;
    reduce_row(row, b.nonzero);
    if (seen.insert(key_of(row)).second) rows.push_back(std::move(row));
  }
  b.active = std::move(rows);
}

void eliminate(Branch& b, std::size_t r, int col) {
  Row pivot = b.active[r];
  const MPoly p = pivot.at(col);
  const bool constant = p.is_constant();
  for (std::size_t k = 0; k < b.active.size(); ++k) {
    if (k == r) continue;
    Row& row = b.active[k];
    auto it = row.find(col);
    if (it == row.end()) continue;
    MPoly e = it->second;
    if (constant) {
      MPoly f = e * (Scalar(1) / p.constant_term());
      for (const auto& [c, q] : pivot) {
        MPoly& slot = row[c];
        slot -= f * q;
      }
    } else {
      for (auto& [c, q] : row) q = q * p;
      for (const auto& [c, q] : pivot) {
        MPoly& slot = row[c];
        slot -= e * q;
      }
    }
    std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
  }
  b.active.erase(b.active.begin() + static_cast<long>(r));
  b.pivots.emplace_back(col, std::move(pivot));
}

SolutionFamily make_family(const Branch& b, const Unknowns& u) {
  SolutionFamily fam;
  const std::map<int, std::string> names{{kParamA, "a"}, {kParamB, "b"}, {kParamC, "c"}};
  for (const auto& [v, value] : b.subst) fam.fixed[names.at(v)] = value;
  fam.nonzero = b.nonzero;
  std::set<int> pivot_cols;
  for (const auto& [c, row] : b.pivots) pivot_cols.insert(c);
  const int n = static_cast<int>(u.columns.size());
  for (int f = 0; f < n; ++f) {
    if (pivot_cols.contains(f)) continue;
    std::map<int, MPoly> x{{f, MPoly(1)}};
    for (auto it = b.pivots.rbegin(); it != b.pivots.rend(); ++it) {
      const auto& [c, row] = *it;
      MPoly s;
      for (const auto& [j, e] : row)
        if (j != c && x.contains(j)) s += e * x.at(j);
      const MPoly& p = row.at(c);
      if (p.is_constant()) {
        x[c] = -(s * (Scalar(1) / p.constant_term()));
      } else {
        // keep entries polynomial by rescaling the whole vector
        for (auto& [j, q] : x) q = q * p;
        x[c] = -s;
      }
    }
    MPoly phi, psi;
    for (const auto& [j, q] : x) {
      const auto& [is_psi, de, le] = u.columns[j];
      MPoly mono = MPoly::var(kDel, de) * MPoly::var(kLam, le) * q;
      (is_psi ? psi : phi) += mono;
    }
    // normalize so the basis vector does not depend on elimination order
    const MPoly& lead = !psi.is_zero() ? psi : phi;
    Scalar s = Scalar(1) / lead.terms().rbegin()->second;
    fam.kernel.emplace_back(phi * s, psi * s);
  }
  return fam;
}

void solve(Branch b, const Unknowns& u, std::vector<SolutionFamily>& out) {
  for (;;) {
    while (!b.pending.empty()) {
      MPoly p = b.pending.back();
      b.pending.pop_back();
      if (p.is_zero()) continue;
      if (p.is_constant()) return;
      auto v = solvable_var(p);
      if (!v) throw std::runtime_error("classifier cannot split on constraint " + key_of(p) + " = 0");
      MPoly root = -(p.coefficient(*v, 0) * (Scalar(1) / p.coefficient(*v, 1).constant_term()));
      apply_substitution(b, *v, root);
      if (!prune_nonzero(b)) return;
    }
    tidy(b);
    if (b.active.empty()) {
      std::set<int> pivot_cols;
      for (const auto& [c, row] : b.pivots) pivot_cols.insert(c);
      if (pivot_cols.size() < u.columns.size()) out.push_back(make_family(b, u));
      return;
    }
    // prefer constant pivots, sparsest row first
    std::optional<std::pair<std::size_t, int>> pick;
    std::size_t best = SIZE_MAX;
    for (std::size_t r = 0; r < b.active.size(); ++r)
      for (const auto& [c, p] : b.active[r])
        if (p.is_constant() && b.active[r].size() < best) {
          best = b.active[r].size();
          pick = {r, c};
        }
    if (pick) {
      eliminate(b, pick->first, pick->second);
      continue;
    }
    // non-constant pivot: prefer solvable ones, then low degree, then by
    // the c, b, a splitting order
    auto score = [](const MPoly& p) {
      auto v = solvable_var(p);
      int rank = 3;
      for (int i = 0; i < 3; ++i)
        if (v && *v == kParamOrder[i]) rank = i;
      return std::make_tuple(v ? 0 : 1, p.total_degree(), rank, p.terms().size());
    };
    std::optional<decltype(score(MPoly()))> best_score;
    for (std::size_t r = 0; r < b.active.size(); ++r)
      for (const auto& [c, p] : b.active[r]) {
        auto s = score(p);
        if (!best_score || s < *best_score) {
          best_score = s;
          pick = {r, c};
        }
      }
    const MPoly p = b.active[pick->first].at(pick->second);
    if (!known_nonzero(b, p)) {
      Branch zero = b;
      zero.pending.push_back(p);
      solve(std::move(zero), u, out);
      b.nonzero.push_back(p);
      if (!prune_nonzero(b)) return;
    }
    eliminate(b, pick->first, pick->second);
  }
}

void add_constraints(const ConfElem& defect, Branch& b, std::set<std::string>& seen) {
  const std::set<int> formal{kDel, kLam, kMu};
  for (const auto& [g, poly] : defect) {
    for (const auto& [mono, coeff] : poly.split(formal)) {
      Row row;
      MPoly pure;
      for (const auto& [m, c] : coeff.terms()) {
        int col = -1;
        Monomial rest;
        for (const auto& [v, e] : m) {
          if (v >= kFirstUnknown) {
            if (col >= 0 || e != 1) throw std::logic_error("constraint is not linear in the unknowns");
            col = v - kFirstUnknown;
          } else {
            rest.emplace_back(v, e);
          }
        }
        if (col < 0)
          pure += MPoly::term(rest, c);
        else
          row[col] += MPoly::term(rest, c);
      }
      std::erase_if(row, [](const auto& kv) { return kv.second.is_zero(); });
      if (!pure.is_zero()) b.pending.push_back(pure);
      if (!row.empty() && seen.insert(key_of(row)).second) b.active.push_back(std::move(row));
    }
  }
}

}  // namespace

std::vector<SolutionFamily> classify_rank_one_extension(int degree_bound, ClassifyOptions options) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be non-negative");
  Unknowns u;
  MPoly phi, psi;
  for (int is_psi = 0; is_psi < 2; ++is_psi)
    for (int total = 0; total <= degree_bound; ++total)
      for (int de = total; de >= 0; --de) {
        int col = static_cast<int>(u.columns.size());
        u.columns.push_back({is_psi, de, total - de});
        MPoly mono = MPoly::var(kDel, de) * MPoly::var(kLam, total - de) * MPoly::var(kFirstUnknown + col);
        (is_psi ? psi : phi) += mono;
      }
  AlgebraSpec spec = extension_algebra(MPoly::var(kParamA), MPoly::var(kParamB), MPoly::var(kParamC), phi, psi);
  Branch root;
  if (options.require_c_nonzero) root.nonzero.push_back(MPoly::var(kParamC));
  std::set<std::string> seen;
  for (const auto& [pair, defect] : skew_defects(spec)) add_constraints(defect, root, seen);
  for (const auto& [triple, defect] : jacobi_defects(spec)) add_constraints(defect, root, seen);
  std::vector<SolutionFamily> out;
  solve(std::move(root), u, out);
  return out;
}

}  // namespace shv::conformal
