#include "shv/induced.hpp"

#include <algorithm>
#include <sstream>

namespace shv::induced {

using superalgebra::Element;
using superalgebra::Subalgebra;

namespace {

constexpr Family kFamilies[] = {Family::L, Family::I, Family::G};

Generator gen(Family f, long index) { return Generator::integral(f, index); }

int letter_parity(const Generator& g) { return g.odd() ? 1 : 0; }

void add_to(BaseVec& v, const BaseKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = v.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) v.erase(it);
  }
}

Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Scalar>(n, Scalar(0))); }

Matrix identity(std::size_t n, const Scalar& s) {
  Matrix m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = s;
  return m;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

void axpy(Matrix& y, const Scalar& s, const Matrix& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) y[i][j] += s * x[i][j];
}

bool is_zero(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& c : row)
      if (!c.is_zero()) return false;
  return true;
}

// rank by Gaussian elimination over the rationals
std::size_t rank(std::vector<std::vector<Scalar>> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

// rank of the images of `inputs` under `apply`, laid out as columns
template <typename Apply>
std::size_t image_rank(const std::vector<BaseKey>& inputs, Apply apply) {
  std::vector<BaseVec> images;
  std::map<BaseKey, std::size_t> slot;
  for (const auto& key : inputs) {
    images.push_back(apply(key));
    for (const auto& [k, c] : images.back()) slot.try_emplace(k, slot.size());
  }
  std::vector<std::vector<Scalar>> rows(images.size(), std::vector<Scalar>(slot.size(), Scalar(0)));
  for (std::size_t i = 0; i < images.size(); ++i)
    for (const auto& [k, c] : images[i]) rows[i][slot[k]] = c;
  return rank(std::move(rows));
}

std::string describe_bounds(long alpha, long beta, long z) {
  std::ostringstream os;
  os << "L_i (i > " << z + alpha << "), G_j (j > " << z + beta << "), I_k (k > " << z << ")";
  return os.str();
}

// first index above which generator g must act as zero
long family_bound(Family f, long alpha, long beta, long z) {
  switch (f) {
    case Family::L: return z + alpha;
    case Family::G: return z + beta;
    case Family::I: return z;
  }
  return z;
}

}  // namespace

BaseModule::BaseModule(long alpha, long beta, long z, Scalar c0)
    : alpha_(alpha), beta_(beta), z_(z), c0_(std::move(c0)) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("offsets must be non-negative");
  if (alpha < 2 * beta) throw superalgebra::PreconditionError("offsets require alpha >= 2 beta");
  if (z < 0) throw std::invalid_argument("annihilation level must be non-negative");
}

bool BaseModule::in_subalgebra(const Generator& g) const {
  return Subalgebra::s_alpha_beta(alpha_, beta_).contains(g);
}

// ---------------------------------------------------------------- finite

FiniteTableModule::FiniteTableModule(long alpha, long beta, long z, std::vector<int> parities,
                                     std::map<Generator, Matrix> actions, std::vector<std::string> names)
    : BaseModule(alpha, beta, z,
                 [&] {
                   auto it = actions.find(gen(Family::I, 0));
                   if (it == actions.end() || it->second.empty()) return Scalar(0);
                   return it->second[0][0];
                 }()),
      parities_(std::move(parities)),
      names_(std::move(names)) {
  const std::size_t n = parities_.size();
  if (n == 0) throw std::invalid_argument("module must have positive dimension");
  for (int p : parities_)
    if (p != 0 && p != 1) throw std::invalid_argument("parities must be 0 or 1");
  if (names_.empty())
    for (std::size_t i = 0; i < n; ++i) names_.push_back("v" + std::to_string(i));
  if (names_.size() != n) throw std::invalid_argument("one name per basis vector is required");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (names_[i] == names_[j]) throw std::invalid_argument("duplicate basis name '" + names_[i] + "'");

  for (auto& [g, m] : actions) {
    if (!in_subalgebra(g)) throw std::invalid_argument(g.str() + " does not lie in the acting subalgebra");
    if (m.size() != n) throw std::invalid_argument("matrix of " + g.str() + " has the wrong size");
    for (const auto& row : m)
      if (row.size() != n) throw std::invalid_argument("matrix of " + g.str() + " has the wrong size");
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (!m[r][c].is_zero() && (parities_[r] ^ parities_[c]) != letter_parity(g))
          throw std::invalid_argument("matrix of " + g.str() + " does not respect parity");
    if (!is_zero(m)) actions_.emplace(g, m);
  }
  if (matrix(gen(Family::I, 0)) != identity(n, c0()))
    throw std::invalid_argument("I0 must act as a scalar multiple of the identity");

  // the relations of S_{α,β} on a window large enough to involve every
  // stored matrix
  long top = z + alpha + beta;
  for (const auto& [g, m] : actions_) top = std::max(top, g.index());
  top += alpha + 1;
  std::vector<Generator> window;
  for (Family f : kFamilies) {
    const long lo = f == Family::L ? 0 : f == Family::I ? -alpha : -beta;
    for (long i = lo; i <= top; ++i) window.push_back(gen(f, i));
  }
  for (const auto& x : window) {
    const Matrix mx = matrix(x);
    for (const auto& y : window) {
      const Matrix my = matrix(y);
      Matrix lhs = mul(mx, my);
      axpy(lhs, (x.odd() && y.odd()) ? Scalar(1) : Scalar(-1), mul(my, mx));
      Matrix rhs = zeros(n);
      const Element br = superalgebra::bracket(x, y);
      for (const auto& [g, c] : br.terms()) axpy(rhs, c, matrix(g));
      if (lhs != rhs)
        throw std::invalid_argument("matrices violate the relation for [" + x.str() + ", " + y.str() + "]");
    }
  }
}

Matrix FiniteTableModule::matrix(const Generator& g) const {
  auto it = actions_.find(g);
  return it == actions_.end() ? zeros(dimension()) : it->second;
}

int FiniteTableModule::parity(const BaseKey& key) const {
  if (key.size() != 1 || key[0] < 0 || static_cast<std::size_t>(key[0]) >= dimension())
    throw std::invalid_argument("bad basis key for a finite module");
  return parities_[static_cast<std::size_t>(key[0])];
}

BaseVec FiniteTableModule::act(const Generator& g, const BaseKey& key) const {
  parity(key);
  if (!in_subalgebra(g)) throw std::invalid_argument(g.str() + " does not act on the base module");
  BaseVec out;
  auto it = actions_.find(g);
  if (it == actions_.end()) return out;
  const auto col = static_cast<std::size_t>(key[0]);
  for (std::size_t r = 0; r < dimension(); ++r) add_to(out, {static_cast<long>(r)}, it->second[r][col]);
  return out;
}

long FiniteTableModule::annihilation_level() const {
  long level = 0;
  for (const auto& [g, m] : actions_) level = std::max(level, g.index());
  return level;
}

std::vector<BaseKey> FiniteTableModule::sample_basis(long) const {
  std::vector<BaseKey> out;
  for (std::size_t i = 0; i < dimension(); ++i) out.push_back({static_cast<long>(i)});
  return out;
}

std::string FiniteTableModule::describe(const BaseKey& key) const {
  parity(key);
  return names_[static_cast<std::size_t>(key[0])];
}

BaseKey FiniteTableModule::parse_key(const std::string& label) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == label) return {static_cast<long>(i)};
  throw std::invalid_argument("unknown basis vector '" + label + "'");
}

ConditionReport FiniteTableModule::validate(long) const {
  ConditionReport rep;
  rep.z = z();
  const Matrix iz = matrix(gen(Family::I, z()));
  if (rank(iz) != dimension()) {
    rep.pass = false;
    rep.failures.push_back("condition (a) failed: I_" + std::to_string(z()) + " not injective");
  }
  for (const auto& [g, m] : actions_) {
    if (g.index() > family_bound(g.family, alpha(), beta(), z())) {
      rep.pass = false;
      rep.failures.push_back("condition (b) failed: " + g.str() + " acts nontrivially");
    }
  }
  rep.notes.push_back("checked exactly on all " + std::to_string(dimension()) + " basis vectors; " +
                      describe_bounds(alpha(), beta(), z()) + " must vanish");
  return rep;
}

std::shared_ptr<FiniteTableModule> verma(const Scalar& h, const Scalar& c0) {
  std::map<Generator, Matrix> actions;
  actions[gen(Family::L, 0)] = identity(2, h);
  actions[gen(Family::I, 0)] = identity(2, c0);
  Matrix g0 = zeros(2);
  g0[1][0] = Scalar(1);
  g0[0][1] = c0;
  actions[gen(Family::G, 0)] = g0;
  return std::make_shared<FiniteTableModule>(0, 0, 0, std::vector<int>{0, 1}, std::move(actions),
                                             std::vector<std::string>{"v", "w"});
}

// ---------------------------------------------------------------- whittaker

namespace {

bool whittaker_letter(long k, const Generator& g) {
  if (!g.integral_index()) return false;
  const long i = g.index();
  if (g.family == Family::I) return i >= 1 && i < k;
  return i >= 0 && i < k;
}

}  // namespace

WhittakerBase::WhittakerBase(long k, std::map<Generator, Scalar> phi, Scalar c0)
    : BaseModule(0, 0, 2 * k - 1, std::move(c0)),
      k_(k),
      inner_(InductionScheme{}) {
  if (k < 1) throw std::invalid_argument("Whittaker level must be at least 1");
  for (const auto& [g, value] : phi) {
    if (value.is_zero()) continue;
    if (!g.integral_index() || g.index() < k)
      throw std::invalid_argument(g.str() + " is not in T(" + std::to_string(k) + ")");
    const bool derived = g.family == Family::L ? g.index() >= 2 * k + 1 : g.index() >= 2 * k;
    if (derived) throw InconsistentHomomorphism("phi must vanish on the derived slot " + g.str());
    if (g.odd()) throw InconsistentHomomorphism("phi must vanish on the odd slot " + g.str());
    phi_.emplace(g, value);
  }
  const long level = k;
  const Scalar central = this->c0();
  auto values = phi_;
  inner_ = Straightener(
      InductionScheme{
          [level](const Generator& g) { return whittaker_letter(level, g); },
          block_rank,
          [central, values](const Generator& g, const BaseKey& key) {
            BaseVec out;
            if (g == gen(Family::I, 0)) {
              add_to(out, key, central);
              return out;
            }
            auto it = values.find(g);
            if (it != values.end()) add_to(out, key, it->second);
            return out;
          }},
      kDefaultFuel);
}

Scalar WhittakerBase::phi_of(const Generator& g) const {
  auto it = phi_.find(g);
  return it == phi_.end() ? Scalar(0) : it->second;
}

BaseKey WhittakerBase::encode(const Word& w) {
  BaseKey key;
  for (const auto& g : w) {
    key.push_back(static_cast<long>(g.family));
    key.push_back(g.doubled);
  }
  return key;
}

Word WhittakerBase::decode(const BaseKey& key) {
  if (key.size() % 2 != 0) throw std::invalid_argument("bad Whittaker basis key");
  Word w;
  for (std::size_t i = 0; i < key.size(); i += 2) {
    if (key[i] < 0 || key[i] > 2) throw std::invalid_argument("bad Whittaker basis key");
    w.push_back({static_cast<Family>(key[i]), key[i + 1]});
  }
  return w;
}

int WhittakerBase::parity(const BaseKey& key) const {
  int p = 0;
  for (const auto& g : decode(key)) p ^= letter_parity(g);
  return p;
}

BaseVec WhittakerBase::act(const Generator& g, const BaseKey& key) const {
  if (!in_subalgebra(g)) throw std::invalid_argument(g.str() + " does not act on the base module");
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find({g, key});
    if (it != cache_.end()) return it->second;
  }
  Word w{g};
  const Word tail = decode(key);
  w.insert(w.end(), tail.begin(), tail.end());
  BaseVec out;
  for (const auto& [wk, c] : inner_.normalize(w, {})) add_to(out, encode(wk.first), c);
  std::lock_guard lock(cache_mutex_);
  cache_.emplace(std::make_pair(g, key), out);
  return out;
}

long WhittakerBase::annihilation_level() const {
  return phi_of(gen(Family::L, 2 * k_)).is_zero() ? 2 * k_ - 1 : 2 * k_;
}

std::vector<BaseKey> WhittakerBase::sample_basis(long bound) const {
  std::vector<Generator> letters;
  for (long i = 1; i < k_; ++i) letters.push_back(gen(Family::I, i));
  for (long i = 0; i < k_; ++i) letters.push_back(gen(Family::G, i));
  for (long i = 0; i < k_; ++i) letters.push_back(gen(Family::L, i));
  std::vector<BaseKey> out;
  Word current;
  // non-decreasing words in the canonical letter order, odd letters at most once
  auto extend = [&](auto&& self, std::size_t from) -> void {
    out.push_back(encode(current));
    if (static_cast<long>(current.size()) >= bound) return;
    for (std::size_t i = from; i < letters.size(); ++i) {
      if (letters[i].odd() && !current.empty() && current.back() == letters[i]) continue;
      current.push_back(letters[i]);
      self(self, i);
      current.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

std::string WhittakerBase::describe(const BaseKey& key) const {
  std::string s;
  for (const auto& g : decode(key)) s += g.str() + " ";
  return s + "v";
}

BaseKey WhittakerBase::parse_key(const std::string& label) const {
  std::istringstream in(label);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  if (tokens.empty() || tokens.back() != "v") throw std::invalid_argument("Whittaker vector must end in 'v': " + label);
  Word w;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) w.push_back(superalgebra::parse_generator(tokens[i]));
  if (!inner_.is_normal(w)) throw std::invalid_argument("not a normal Whittaker basis word: " + label);
  return encode(w);
}

ConditionReport WhittakerBase::validate(long sample_bound) const {
  ConditionReport rep;
  rep.z = z();
  const auto sample = sample_basis(sample_bound);
  const Generator iz = gen(Family::I, z());
  if (phi_of(iz).is_zero()) {
    rep.pass = false;
    rep.failures.push_back("condition (a) failed: phi(" + iz.str() + ") = 0");
  }
  if (image_rank(sample, [&](const BaseKey& key) { return act(iz, key); }) != sample.size()) {
    rep.pass = false;
    rep.failures.push_back("condition (a) failed: " + iz.str() + " not injective");
  }
  const long top = sample_bound + 2 * k_ + 1;
  for (Family f : kFamilies) {
    for (long i = family_bound(f, 0, 0, z()) + 1; i <= top; ++i) {
      const Generator g = gen(f, i);
      for (const auto& key : sample) {
        if (!act(g, key).empty()) {
          rep.pass = false;
          rep.failures.push_back("condition (b) failed: " + g.str() + " acts nontrivially on " + describe(key));
          break;
        }
      }
    }
  }
  rep.notes.push_back("checked on " + std::to_string(sample.size()) + " basis words of length <= " +
                      std::to_string(sample_bound) + "; " + describe_bounds(0, 0, z()) + " must vanish");
  return rep;
}

std::shared_ptr<WhittakerBase> whittaker(long k, const std::map<Generator, Scalar>& phi, const Scalar& c0) {
  return std::make_shared<WhittakerBase>(k, phi, c0);
}

ConditionReport validate_conditions(const BaseModule& v, long sample_bound) { return v.validate(sample_bound); }

ConditionReport dim_check_t1(const std::map<Generator, Scalar>& phi) {
  ConditionReport rep;
  rep.z = 0;
  auto value = [&](const Generator& g) {
    auto it = phi.find(g);
    return it == phi.end() ? Scalar(0) : it->second;
  };
  for (const auto& [g, c] : phi) {
    if (!g.integral_index() || g.index() < 1) {
      rep.pass = false;
      rep.failures.push_back(g.str() + " is not in T(1)");
    } else if (g.odd() && !c.is_zero()) {
      rep.pass = false;
      rep.failures.push_back("odd generator " + g.str() + " cannot act by a nonzero scalar on an even vector");
    }
  }
  for (Family fx : kFamilies)
    for (long m = 1; m <= 4; ++m)
      for (Family fy : kFamilies)
        for (long n = 1; n <= 4; ++n) {
          const Generator x = gen(fx, m), y = gen(fy, n);
          Scalar lhs(0);
          const Element br = superalgebra::bracket(x, y);
          for (const auto& [g, c] : br.terms()) lhs += c * value(g);
          const Scalar sign = (x.odd() && y.odd()) ? Scalar(-1) : Scalar(1);
          const Scalar rhs = value(x) * value(y) - sign * value(y) * value(x);
          if (lhs != rhs) {
            rep.pass = false;
            rep.failures.push_back("phi([" + x.str() + ", " + y.str() + "]) = " + lhs.str() + ", expected " +
                                   rhs.str());
          }
        }
  return rep;
}

// ---------------------------------------------------------------- PBW monomials

Word PBWMonomial::word() const {
  Word w;
  for (auto it = i.entries().rbegin(); it != i.entries().rend(); ++it)
    for (long e = 0; e < it->second; ++e) w.push_back(gen(Family::I, -it->first - alpha));
  for (auto it = j.entries().rbegin(); it != j.entries().rend(); ++it) w.push_back(gen(Family::G, -it->first - beta));
  for (auto it = k.entries().rbegin(); it != k.entries().rend(); ++it)
    for (long e = 0; e < it->second; ++e) w.push_back(gen(Family::L, -it->first));
  return w;
}

std::string PBWMonomial::str() const {
  std::string s;
  for (const auto& g : word()) s += (s.empty() ? "" : " ") + g.str();
  return s.empty() ? "1" : s;
}

PBWMonomial PBWMonomial::from_word(const Word& w, long alpha, long beta) {
  PBWMonomial m;
  m.alpha = alpha;
  m.beta = beta;
  for (const auto& g : w) {
    const long idx = g.index();
    switch (g.family) {
      case Family::I:
        if (-idx - alpha < 1) throw std::invalid_argument(g.str() + " is not a PBW letter");
        m.i.add(-idx - alpha);
        break;
      case Family::G:
        if (-idx - beta < 1) throw std::invalid_argument(g.str() + " is not a PBW letter");
        m.j.add(-idx - beta);
        break;
      case Family::L:
        if (-idx < 1) throw std::invalid_argument(g.str() + " is not a PBW letter");
        m.k.add(-idx);
        break;
    }
  }
  return m;
}

// ---------------------------------------------------------------- vectors

InducedVector::InducedVector(Terms terms) {
  for (const auto& [m, vec] : terms)
    for (const auto& [key, c] : vec) add(m, key, c);
}

bool InducedVector::in_base() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.triple().is_zero(); });
}

BaseVec InducedVector::base_part() const {
  for (const auto& [m, vec] : terms_)
    if (m.triple().is_zero()) return vec;
  return {};
}

void InducedVector::add(const PBWMonomial& m, const BaseKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto& vec = terms_[m];
  add_to(vec, key, c);
  if (vec.empty()) terms_.erase(m);
}

InducedVector& InducedVector::operator+=(const InducedVector& o) {
  for (const auto& [m, vec] : o.terms_)
    for (const auto& [key, c] : vec) add(m, key, c);
  return *this;
}

InducedVector& InducedVector::operator-=(const InducedVector& o) {
  for (const auto& [m, vec] : o.terms_)
    for (const auto& [key, c] : vec) add(m, key, -c);
  return *this;
}

InducedVector& InducedVector::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, vec] : terms_)
    for (auto& [key, c] : vec) c *= s;
  return *this;
}

// ---------------------------------------------------------------- module

InducedModule::InducedModule(std::shared_ptr<const BaseModule> base, long fuel)
    : base_(std::move(base)), engine_(InductionScheme{}, fuel) {
  if (!base_) throw std::invalid_argument("induced module needs a base module");
  const BaseModule* b = base_.get();
  engine_ = Straightener(
      InductionScheme{[b](const Generator& g) { return !b->in_subalgebra(g); }, block_rank,
                      [b](const Generator& g, const BaseKey& key) { return b->act(g, key); }},
      fuel);
}

bool InducedModule::is_basis_letter(const Generator& g) const { return !base_->in_subalgebra(g); }

InducedVector InducedModule::vacuum(const BaseKey& key) const {
  base_->parity(key);
  InducedVector v;
  v.add(PBWMonomial{{}, {}, {}, alpha(), beta()}, key, Scalar(1));
  return v;
}

namespace {

InducedVector collect(const WordTerms& terms, long alpha, long beta) {
  InducedVector out;
  for (const auto& [wk, c] : terms) out.add(PBWMonomial::from_word(wk.first, alpha, beta), wk.second, c);
  return out;
}

}  // namespace

InducedVector InducedModule::normal_form(const Word& w, const BaseKey& key, Strategy strategy) const {
  for (const auto& g : w) superalgebra::validate_generator(superalgebra::Tag::ramond, g);
  base_->parity(key);
  return collect(engine_.normalize(w, key, strategy), alpha(), beta());
}

InducedVector InducedModule::act(const Generator& g, const InducedVector& v, Strategy strategy) const {
  return act_word({g}, v, Scalar(1), strategy);
}

InducedVector InducedModule::act(const Element& x, const InducedVector& v) const {
  if (x.tag() != superalgebra::Tag::ramond) throw superalgebra::TagMismatch("induced modules carry the Ramond algebra");
  InducedVector out;
  for (const auto& [g, c] : x.terms()) out += act(g, v) * c;
  return out;
}

InducedVector InducedModule::act_word(const Word& word, const InducedVector& v, const Scalar& scale,
                                      Strategy strategy) const {
  for (const auto& g : word) superalgebra::validate_generator(superalgebra::Tag::ramond, g);
  WordTerms input;
  for (const auto& [m, vec] : v.terms()) {
    Word w = word;
    const Word tail = m.word();
    w.insert(w.end(), tail.begin(), tail.end());
    for (const auto& [key, c] : vec) {
      auto [it, inserted] = input.try_emplace({w, key}, c * scale);
      if (!inserted) it->second += c * scale;
    }
  }
  std::erase_if(input, [](const auto& t) { return t.second.is_zero(); });
  return collect(engine_.normalize(input, strategy), alpha(), beta());
}

int InducedModule::parity(const InducedVector& v) const {
  int p = -1;
  for (const auto& [m, vec] : v.terms())
    for (const auto& [key, c] : vec) {
      const int q = m.parity() ^ base_->parity(key);
      if (p >= 0 && p != q) throw std::domain_error("vector is not homogeneous");
      p = q;
    }
  if (p < 0) throw std::domain_error("the zero vector has no parity");
  return p;
}

// ---------------------------------------------------------------- degrees

std::vector<DegreeTriple> support(const InducedVector& v, Reading reading) {
  std::vector<DegreeTriple> out;
  for (const auto& [m, vec] : v.terms()) out.push_back(m.triple());
  std::sort(out.begin(), out.end(), [reading](const auto& a, const auto& b) {
    return order::principal_compare(a, b, reading) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DegreeTriple degree(const InducedVector& v, Reading reading) {
  if (v.is_zero()) throw std::domain_error("the zero vector has no degree");
  return support(v, reading).back();
}

std::pair<std::vector<DegreeTriple>, DegreeTriple> support_and_degree(const InducedVector& v, Reading reading) {
  auto s = support(v, reading);
  if (s.empty()) throw std::domain_error("the zero vector has no degree");
  DegreeTriple d = s.back();
  return {std::move(s), std::move(d)};
}

DegreeTriple degree_after_lowering(const DegreeTriple& deg) {
  if (!deg.k.is_zero()) return {deg.i, deg.j, deg.k.lower_prime()};
  if (!deg.j.is_zero()) return {deg.i, deg.j.lower_prime(), {}};
  if (!deg.i.is_zero()) return {deg.i.lower_prime(), {}, {}};
  throw std::domain_error("vector already lies in the base module");
}

DegreeTriple degree_after_lowering(const InducedVector& v, Reading reading) {
  if (v.is_zero() || v.in_base()) throw std::domain_error("vector already lies in the base module");
  return degree_after_lowering(degree(v, reading));
}

ProbeTrace simplicity_probe(const InducedModule& m, const InducedVector& v, Reading reading) {
  if (v.is_zero()) throw std::domain_error("cannot probe the zero vector");
  ProbeTrace trace;
  trace.start = degree(v, reading);
  const long z = m.base().z();
  InducedVector cur = v;
  DegreeTriple deg = trace.start;
  while (!cur.in_base()) {
    ProbeStep step{gen(Family::L, 0), {}, 'L', std::nullopt};
    if (!deg.k.is_zero()) {
      step.applied = gen(Family::I, deg.k.min_support() + z);
      step.branch = 'I';
      step.predicted = degree_after_lowering(deg);
    } else if (!deg.j.is_zero()) {
      step.applied = gen(Family::G, deg.j.min_support() + m.beta() + z);
      step.branch = 'G';
    } else {
      step.applied = gen(Family::L, deg.i.min_support() + m.alpha() + z);
      step.branch = 'L';
    }
    cur = m.act(step.applied, cur);
    if (cur.is_zero()) {
      trace.failure = "applying " + step.applied.str() + " gave zero";
      return trace;
    }
    step.degree = degree(cur, reading);
    trace.steps.push_back(step);
    if (order::principal_compare(step.degree, deg, reading) >= 0) {
      trace.failure = "degree did not decrease after " + step.applied.str();
      return trace;
    }
    if (step.predicted && *step.predicted != step.degree) {
      trace.failure = "degree after " + step.applied.str() + " differs from the prediction";
      return trace;
    }
    deg = step.degree;
  }
  trace.terminal = cur.base_part();
  trace.success = !trace.terminal.empty();
  if (!trace.success) trace.failure = "terminal element vanished";
  return trace;
}

long annihilation_bound(const InducedModule& m, const InducedVector& v) {
  if (v.is_zero()) throw std::domain_error("annihilation bound of the zero vector");
  long depth = 0;
  for (const auto& [mono, vec] : v.terms()) {
    long s = 0;
    for (const auto& g : mono.word()) s -= g.index();
    depth = std::max(depth, s);
  }
  for (long n = depth + m.base().annihilation_level(); n > 0; --n)
    for (Family f : kFamilies)
      if (!m.act(gen(f, n), v).is_zero()) return n;
  return 0;
}

InducedVector random_vector(const InducedModule& m, std::mt19937_64& rng, long max_weight, int parity) {
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  std::vector<BaseKey> keys[2];
  for (const auto& key : m.base().sample_basis(2)) keys[m.base().parity(key)].push_back(key);
  InducedVector out;
  const long count = uniform(1, 3);
  for (int attempts = 0; attempts < 1000 && static_cast<long>(out.terms().size()) < count; ++attempts) {
    PBWMonomial mono{{}, {}, {}, m.alpha(), m.beta()};
    long remaining = uniform(0, max_weight);
    for (int tries = 0; remaining > 0 && tries < 50; ++tries) {
      const long p = uniform(1, remaining);
      const long f = uniform(0, 2);
      if (f == 0) {
        mono.i.add(p);
      } else if (f == 1) {
        if (mono.j.at(p) != 0) continue;
        mono.j.add(p);
      } else {
        mono.k.add(p);
      }
      remaining -= p;
    }
    const auto& pool = keys[parity ^ mono.parity()];
    if (pool.empty()) continue;
    const BaseKey& key = pool[static_cast<std::size_t>(uniform(0, static_cast<long>(pool.size()) - 1))];
    long num = 0;
    while (num == 0) num = uniform(-5, 5);
    out.add(mono, key, Scalar(num, uniform(1, 3)));
  }
  if (out.is_zero()) throw std::runtime_error("could not draw a vector of the requested parity");
  return out;
}

}  // namespace shv::induced
