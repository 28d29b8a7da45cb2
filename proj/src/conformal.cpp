#include "shv/conformal.hpp"

#include <algorithm>
#include <sstream>

namespace shv::conformal {

std::string var_name(int v) {
  switch (v) {
    case kDel: return "∂";
    case kLam: return "λ";
    case kMu: return "µ";
    case kParamA: return "a";
    case kParamB: return "b";
    case kParamC: return "c";
    default: return "x" + std::to_string(v - kFirstUnknown);
  }
}

ConfElem& accumulate(ConfElem& into, const ConfElem& add, const MPoly& factor) {
  for (const auto& [g, p] : add) {
    MPoly& slot = into[g];
    slot += p * factor;
    if (slot.is_zero()) into.erase(g);
  }
  return into;
}

ConfElem substitute(const ConfElem& e, const std::map<int, MPoly>& repl) {
  ConfElem out;
  for (const auto& [g, p] : e) {
    MPoly q = p.substitute(repl);
    if (!q.is_zero()) out.emplace(g, std::move(q));
  }
  return out;
}

bool is_zero(const ConfElem& e) {
  return std::all_of(e.begin(), e.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

AlgebraSpec::AlgebraSpec(std::vector<Generator> generators, std::map<std::pair<int, int>, ConfElem> table)
    : gens_(std::move(generators)), table_(std::move(table)) {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name) throw std::invalid_argument("duplicate generator " + gens_[i].name);
  const int n = static_cast<int>(gens_.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      auto it = table_.find({x, y});
      if (it == table_.end()) {
        table_[{x, y}] = {};
        continue;
      }
      std::erase_if(it->second, [](const auto& kv) { return kv.second.is_zero(); });
      int want = (static_cast<int>(gens_[x].parity) + static_cast<int>(gens_[y].parity)) % 2;
      for (const auto& [g, p] : it->second) {
        if (g < 0 || g >= n) throw ResolutionError("bracket table refers to unknown generator");
        if (static_cast<int>(gens_[g].parity) != want)
          throw std::invalid_argument("bracket [" + gens_[x].name + " λ " + gens_[y].name +
                                      "] has the wrong parity");
      }
    }
  }
  for (const auto& [key, v] : table_)
    if (key.first < 0 || key.first >= n || key.second < 0 || key.second >= n)
      throw ResolutionError("bracket table refers to unknown generator");
}

int AlgebraSpec::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<int>(i);
  throw ResolutionError("unknown generator '" + name + "'");
}

AlgebraSpec AlgebraSpec::with_entry(int x, int y, ConfElem value) const {
  auto table = table_;
  table[{x, y}] = std::move(value);
  return AlgebraSpec(gens_, std::move(table));
}

namespace {

const MPoly kD = MPoly::var(kDel);
const MPoly kL = MPoly::var(kLam);
const MPoly kM = MPoly::var(kMu);

int sign_of(Parity a, Parity b) { return (a * b) ? -1 : 1; }

}  // namespace

AlgebraSpec heisenberg_virasoro() {
  // 0 = L, 1 = I
  std::map<std::pair<int, int>, ConfElem> t;
  t[{0, 0}] = {{0, kD + kL * Scalar(2)}};
  t[{0, 1}] = {{1, kD + kL}};
  t[{1, 0}] = {{1, kL}};  // from skew: -(∂ + (-λ-∂)) = λ
  return AlgebraSpec({{"L", Parity::even}, {"I", Parity::even}}, std::move(t));
}

AlgebraSpec extension_algebra(const MPoly& a, const MPoly& b, const MPoly& c, const MPoly& phi,
                              const MPoly& psi) {
  // 0 = L, 1 = I, 2 = G
  AlgebraSpec hv = heisenberg_virasoro();
  std::map<std::pair<int, int>, ConfElem> t;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) t[{x, y}] = hv.entry(x, y);
  const MPoly flip = -kL - kD;
  t[{0, 2}] = {{2, kD + a * kL + b}};
  t[{1, 2}] = {{2, c}};
  // [G λ X] = -[X_{-λ-∂} G]
  t[{2, 0}] = {{2, -(kD + a * flip + b)}};
  t[{2, 1}] = {{2, -c}};
  ConfElem gg;
  if (!phi.is_zero()) gg[0] = phi;
  if (!psi.is_zero()) gg[1] = psi;
  t[{2, 2}] = gg;
  return AlgebraSpec({{"L", Parity::even}, {"I", Parity::even}, {"G", Parity::odd}}, std::move(t));
}

AlgebraSpec extension_algebra(const ExtensionAnsatz& ansatz) {
  if (ansatz.phi.is_zero() && ansatz.psi.is_zero())
    throw std::invalid_argument("extension ansatz needs phi or psi nonzero");
  const std::set<int> allowed{kDel, kLam};
  if (!ansatz.phi.uses_only(allowed) || !ansatz.psi.uses_only(allowed))
    throw std::invalid_argument("phi and psi must be polynomials in ∂ and λ");
  return extension_algebra(MPoly(ansatz.a), MPoly(ansatz.b), MPoly(ansatz.c), ansatz.phi, ansatz.psi);
}

AlgebraSpec super_heisenberg_virasoro() {
  return extension_algebra(ExtensionAnsatz{Scalar(1), Scalar(0), Scalar(0), MPoly(), MPoly(2)});
}

ConfElem bracket_at(const AlgebraSpec& spec, const ConfElem& x, const ConfElem& y, const MPoly& lambda) {
  if (lambda.variables().contains(kDel)) throw std::invalid_argument("bracket variable may not contain ∂");
  const int n = static_cast<int>(spec.size());
  ConfElem out;
  for (const auto& [gx, p] : x) {
    if (gx < 0 || gx >= n) throw ResolutionError("unknown generator index");
    MPoly left = p.substitute(kDel, -lambda);
    for (const auto& [gy, q] : y) {
      if (gy < 0 || gy >= n) throw ResolutionError("unknown generator index");
      MPoly factor = left * q.substitute(kDel, kD + lambda);
      if (factor.is_zero()) continue;
      ConfElem e = substitute(spec.entry(gx, gy), {{kLam, lambda}});
      accumulate(out, e, factor);
    }
  }
  return out;
}

ConfElem lambda_bracket(const AlgebraSpec& spec, const ConfElem& x, const ConfElem& y) {
  const std::set<int> dpoly{kDel};
  for (const auto* e : {&x, &y})
    for (const auto& [g, p] : *e)
      if (!p.uses_only(dpoly)) throw std::invalid_argument("arguments must be C[∂]-combinations");
  return bracket_at(spec, x, y, kL);
}

std::vector<std::pair<std::pair<int, int>, ConfElem>> skew_defects(const AlgebraSpec& spec) {
  std::vector<std::pair<std::pair<int, int>, ConfElem>> out;
  const int n = static_cast<int>(spec.size());
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      ConfElem defect = spec.entry(x, y);
      ConfElem mirror = substitute(spec.entry(y, x), {{kLam, -kL - kD}});
      accumulate(defect, mirror, MPoly(sign_of(spec.parity(x), spec.parity(y))));
      if (!is_zero(defect)) out.emplace_back(std::make_pair(x, y), std::move(defect));
    }
  }
  return out;
}

std::pair<ConfElem, ConfElem> jacobi_sides(const AlgebraSpec& spec, int a, int b, int c) {
  const ConfElem ea{{a, MPoly(1)}}, eb{{b, MPoly(1)}}, ec{{c, MPoly(1)}};
  ConfElem lhs = bracket_at(spec, ea, bracket_at(spec, eb, ec, kM), kL);
  ConfElem rhs = bracket_at(spec, bracket_at(spec, ea, eb, kL), ec, kL + kM);
  accumulate(rhs, bracket_at(spec, eb, bracket_at(spec, ea, ec, kL), kM),
             MPoly(sign_of(spec.parity(a), spec.parity(b))));
  return {lhs, rhs};
}

std::vector<std::pair<std::vector<int>, ConfElem>> jacobi_defects(const AlgebraSpec& spec) {
  std::vector<std::pair<std::vector<int>, ConfElem>> out;
  const int n = static_cast<int>(spec.size());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        auto [lhs, rhs] = jacobi_sides(spec, a, b, c);
        accumulate(lhs, rhs, MPoly(-1));
        if (!is_zero(lhs)) out.emplace_back(std::vector<int>{a, b, c}, std::move(lhs));
      }
  return out;
}

Report check_skew(const AlgebraSpec& spec) {
  Report r;
  for (const auto& [pair, defect] : skew_defects(spec)) {
    r.pass = false;
    r.violations.push_back("(" + spec.name(pair.first) + "," + spec.name(pair.second) + ")");
  }
  return r;
}

Report check_jacobi(const AlgebraSpec& spec) {
  Report r;
  for (const auto& [triple, defect] : jacobi_defects(spec)) {
    r.pass = false;
    r.violations.push_back("(" + spec.name(triple[0]) + "," + spec.name(triple[1]) + "," +
                           spec.name(triple[2]) + ")");
  }
  return r;
}

ModuleSpec rank_one_module(const AlgebraSpec& hv, const RankOneModuleSpec& mod) {
  ModuleSpec m;
  m.action[hv.index_of("L")] = kD + kL * mod.a + MPoly(mod.b);
  m.action[hv.index_of("I")] = MPoly(mod.c);
  return m;
}

namespace {

// x Λ (p(∂) v) for a generator x
MPoly act_on(const ModuleSpec& mod, int g, const MPoly& coeff, const MPoly& lambda) {
  auto it = mod.action.find(g);
  if (it == mod.action.end()) return MPoly();
  return coeff.substitute(kDel, kD + lambda) * it->second.substitute(kLam, lambda);
}

// (Σ p_g(∂) g) Λ v
MPoly elem_act(const ModuleSpec& mod, const ConfElem& x, const MPoly& lambda) {
  MPoly out;
  for (const auto& [g, p] : x) out += p.substitute(kDel, -lambda) * act_on(mod, g, MPoly(1), lambda);
  return out;
}

}  // namespace

Report check_conformal_module(const AlgebraSpec& spec, const ModuleSpec& mod) {
  Report r;
  const int n = static_cast<int>(spec.size());
  for (const auto& [g, p] : mod.action)
    if (g < 0 || g >= n) throw ResolutionError("module action refers to unknown generator");
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      MPoly lhs = act_on(mod, a, act_on(mod, b, MPoly(1), kM), kL);
      lhs -= act_on(mod, b, act_on(mod, a, MPoly(1), kL), kM) * Scalar(sign_of(spec.parity(a), spec.parity(b)));
      MPoly rhs = elem_act(mod, spec.entry(a, b), kL + kM);
      if (!(lhs == rhs)) {
        r.pass = false;
        r.violations.push_back("(" + spec.name(a) + "," + spec.name(b) + ")");
      }
    }
  }
  return r;
}

Report check_conformal_module(const AlgebraSpec& spec, const RankOneModuleSpec& mod) {
  return check_conformal_module(spec, rank_one_module(spec, mod));
}

bool rank_one_irreducible(const RankOneModuleSpec& mod) { return !(mod.a.is_zero() && mod.c.is_zero()); }

std::vector<std::pair<int, ConfElem>> jth_products(const AlgebraSpec& spec, int x, int y) {
  const ConfElem& e = spec.entry(x, y);
  int top = 0;
  for (const auto& [g, p] : e) top = std::max(top, p.degree_in(kLam));
  std::vector<std::pair<int, ConfElem>> out;
  for (int j = 0; j <= top; ++j) {
    ConfElem prod;
    for (const auto& [g, p] : e) {
      MPoly c = p.coefficient(kLam, j) * factorial(j);
      if (!c.is_zero()) prod.emplace(g, std::move(c));
    }
    if (!prod.empty()) out.emplace_back(j, std::move(prod));
  }
  return out;
}

std::string render_poly(const MPoly& p) {
  std::vector<std::pair<Monomial, Scalar>> terms(p.terms().begin(), p.terms().end());
  auto deg = [](const Monomial& m) {
    int s = 0;
    for (const auto& [v, e] : m) s += e;
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (deg(a.first) != deg(b.first)) return deg(a.first) > deg(b.first);
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Scalar mag = c.sign() < 0 ? -c : c;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    if (!(mag == Scalar(1)) || m.empty()) os << mag.str();
    for (const auto& [v, e] : m) {
      os << var_name(v);
      if (e > 1) os << "^" << e;
    }
  }
  return first ? "0" : os.str();
}

std::string render(const AlgebraSpec& spec, const ConfElem& e) {
  if (e.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, p] : e) {
    if (!first) os << " + ";
    first = false;
    std::string s = render_poly(p);
    if (s == "1")
      os << spec.name(g);
    else if (s == "-1")
      os << "-" << spec.name(g);
    else if (p.terms().size() == 1)
      os << s << spec.name(g);
    else
      os << "(" << s << ")" << spec.name(g);
  }
  return os.str();
}

}  // namespace shv::conformal
