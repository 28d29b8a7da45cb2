#include "shv/superalgebra.hpp"

#include <sstream>

namespace shv::superalgebra {

char family_char(Family f) {
  switch (f) {
    case Family::L: return 'L';
    case Family::I: return 'I';
    case Family::G: return 'G';
  }
  return '?';
}

Family parse_family(char c) {
  switch (c) {
    case 'L': return Family::L;
    case 'I': return Family::I;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown family '") + c + "'");
  }
}

long Generator::index() const {
  if (doubled % 2 != 0) throw std::domain_error("half-integer index on " + str());
  return doubled / 2;
}

std::string Generator::str() const {
  std::string s(1, family_char(family));
  return s + index_value().str();
}

Generator parse_generator(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("malformed generator '" + text + "'");
  Family f = parse_family(text[0]);
  Scalar idx = Scalar::parse(text.substr(1));
  Scalar twice = idx * Scalar(2);
  if (!twice.is_integer()) throw std::invalid_argument("generator index must be a multiple of 1/2: " + text);
  return {f, twice.to_long()};
}

void validate_generator(Tag tag, const Generator& g) {
  bool half = g.doubled % 2 != 0;
  if (tag == Tag::ramond && half)
    throw std::invalid_argument("Ramond generator with half-integer index: " + g.str());
  if (tag == Tag::neveu_schwarz && half != (g.family == Family::G))
    throw std::invalid_argument("Neveu-Schwarz index rule violated by " + g.str());
}

Element::Element(Tag tag, const Generator& g, Scalar coeff) : tag_(tag) { add(g, coeff); }

void Element::add(const Generator& g, const Scalar& coeff) {
  if (coeff.is_zero()) return;
  validate_generator(tag_, g);
  auto [it, inserted] = terms_.try_emplace(g, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.tag_ != tag_ && !o.is_zero()) throw TagMismatch("cannot add elements of different algebras");
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.tag_ != tag_ && !o.is_zero()) throw TagMismatch("cannot subtract elements of different algebras");
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= s;
  return *this;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Scalar(1))) os << c.str() << "*";
    os << g.str();
  }
  return os.str();
}

Element bracket(const Generator& x, const Generator& y, Tag tag) {
  validate_generator(tag, x);
  validate_generator(tag, y);
  Element out(tag);
  const long sum = x.doubled + y.doubled;
  using F = Family;
  if (x.family == F::L && y.family == F::L) {
    out.add({F::L, sum}, Scalar(y.doubled - x.doubled, 2));
  } else if (x.family == F::L) {
    out.add({y.family, sum}, y.index_value());
  } else if (y.family == F::L) {
    out.add({x.family, sum}, -x.index_value());
  } else if (x.family == F::G && y.family == F::G) {
    out.add({F::I, sum}, Scalar(2));
  }
  return out;
}

Element bracket(const Element& x, const Element& y) {
  if (x.tag() != y.tag()) throw TagMismatch("bracket of elements from different algebras");
  Element out(x.tag());
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) out += bracket(gx, gy, x.tag()) * (cx * cy);
  return out;
}

FormalElement formal_bracket(const conformal::AlgebraSpec& spec, int a, long m, int b, long n) {
  FormalElement out;
  for (const auto& [j, prod] : conformal::jth_products(spec, a, b)) {
    Scalar binom = binomial(m, j);
    if (binom.is_zero()) continue;
    const long p = m + n - j;
    for (const auto& [g, poly] : prod) {
      for (const auto& [mono, coeff] : poly.terms()) {
        // (∂^k c)_p = (-1)^k p(p-1)...(p-k+1) c_{p-k}
        const int k = monomial_exponent(mono, conformal::kDel);
        Scalar falling(1);
        for (int t = 0; t < k; ++t) falling *= Scalar(-(p - t));
        Scalar c = binom * coeff * falling;
        if (c.is_zero()) continue;
        Scalar& slot = out[{g, p - k}];
        slot += c;
        if (slot.is_zero()) out.erase({g, p - k});
      }
    }
  }
  return out;
}

std::map<std::pair<Generator, Generator>, Element> lie_of(const conformal::AlgebraSpec& spec, long lo, long hi) {
  const int l = spec.index_of("L"), i = spec.index_of("I"), g = spec.index_of("G");
  struct Symbol {
    int gen;
    long mode;
    Scalar sign;
  };
  auto to_symbol = [&](const Generator& x) -> Symbol {
    switch (x.family) {
      case Family::L: return {l, x.index() + 1, Scalar(-1)};
      case Family::I: return {i, x.index(), Scalar(1)};
      case Family::G: return {g, x.index(), Scalar(1)};
    }
    throw std::logic_error("bad family");
  };
  auto from_symbol = [&](int gen, long mode) -> std::pair<Generator, Scalar> {
    if (gen == l) return {Generator::integral(Family::L, mode - 1), Scalar(-1)};
    if (gen == i) return {Generator::integral(Family::I, mode), Scalar(1)};
    return {Generator::integral(Family::G, mode), Scalar(1)};
  };
  std::map<std::pair<Generator, Generator>, Element> table;
  for (Family fx : {Family::L, Family::I, Family::G})
    for (Family fy : {Family::L, Family::I, Family::G})
      for (long m = lo; m <= hi; ++m)
        for (long n = lo; n <= hi; ++n) {
          Generator x = Generator::integral(fx, m), y = Generator::integral(fy, n);
          Symbol sx = to_symbol(x), sy = to_symbol(y);
          Element e(Tag::ramond);
          for (const auto& [key, c] : formal_bracket(spec, sx.gen, sx.mode, sy.gen, sy.mode)) {
            auto [gen, sign] = from_symbol(key.first, key.second);
            e.add(gen, c * sign * sx.sign * sy.sign);
          }
          table.emplace(std::make_pair(x, y), std::move(e));
        }
  return table;
}

LieComparison compare_lie_of(const conformal::AlgebraSpec& spec, long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  LieComparison out;
  for (const auto& [pair, value] : lie_of(spec, -bound, bound)) {
    ++out.pairs;
    const Element expected = bracket(pair.first, pair.second);
    if (!(value == expected)) {
      out.matches = false;
      out.mismatches.push_back("[" + pair.first.str() + "," + pair.second.str() + "] = " + value.str() +
                               ", expected " + expected.str());
    }
  }
  const int l = spec.index_of("L");
  for (long m = -bound; m <= bound; ++m)
    for (long n = -bound; n <= bound; ++n) {
      FormalElement expected;
      if (m != n) expected[{l, m + n - 1}] = Scalar(m - n);
      if (formal_bracket(spec, l, m, l, n) != expected) {
        out.pre_shift_identity = false;
        out.mismatches.push_back("[L_(" + std::to_string(m) + "),L_(" + std::to_string(n) + ")] before re-indexing");
      }
    }
  return out;
}

Element ns_generator_image(const Generator& g) {
  validate_generator(Tag::neveu_schwarz, g);
  switch (g.family) {
    case Family::L: return Element(Tag::ramond, {Family::L, 2 * g.doubled}, Scalar(1, 2));
    case Family::I: return Element(Tag::ramond, {Family::I, 2 * g.doubled});
    case Family::G: return Element(Tag::ramond, {Family::G, 2 * g.doubled});
  }
  throw std::logic_error("bad family");
}

Element ns_embed(const Element& x, const GeneratorMap& map) {
  if (x.tag() != Tag::neveu_schwarz) throw TagMismatch("ns_embed expects a Neveu-Schwarz element");
  Element out(Tag::ramond);
  for (const auto& [g, c] : x.terms()) out += map(g) * c;
  return out;
}

EmbeddingReport check_ns_embedding(long bound, const GeneratorMap& map) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  std::vector<Generator> gens;
  for (long m = -bound; m <= bound; ++m) {
    gens.push_back(Generator::integral(Family::L, m));
    gens.push_back(Generator::integral(Family::I, m));
  }
  for (long d = -2 * bound + 1; d <= 2 * bound - 1; d += 2) gens.push_back({Family::G, d});

  EmbeddingReport r;
  std::map<std::string, Generator> seen;
  for (const auto& g : gens) {
    Element img = map(g);
    std::string key = img.str();
    if (img.is_zero() || seen.contains(key)) {
      r.pass = false;
      r.violations.push_back("not injective at " + g.str());
    }
    seen.emplace(key, g);
  }
  for (const auto& x : gens)
    for (const auto& y : gens) {
      Element lhs = ns_embed(bracket(x, y, Tag::neveu_schwarz), map);
      Element rhs = bracket(map(x), map(y));
      if (!(lhs == rhs)) {
        r.pass = false;
        r.violations.push_back("[" + x.str() + "," + y.str() + "]");
      }
    }
  return r;
}

Subalgebra Subalgebra::s_alpha_beta(long alpha, long beta) {
  if (alpha < 0 || beta < 0) throw std::invalid_argument("alpha and beta must be non-negative");
  if (alpha < 2 * beta) throw PreconditionError("S_{alpha,beta} requires alpha >= 2 beta");
  return Subalgebra(0, -alpha, -beta, "S_{" + std::to_string(alpha) + "," + std::to_string(beta) + "}");
}

Subalgebra Subalgebra::s_rst(long r, long s, long t) {
  if (r < 0 || s < 0 || t < 0) throw std::invalid_argument("r, s, t must be non-negative");
  return Subalgebra(r, s, t, "S^(" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(t) + ")");
}

long Subalgebra::lower_bound(Family f) const {
  switch (f) {
    case Family::L: return l_;
    case Family::I: return i_;
    case Family::G: return g_;
  }
  return 0;
}

bool Subalgebra::contains(const Generator& g) const { return g.integral_index() && g.index() >= lower_bound(g.family); }

bool member(const Subalgebra& sub, const Element& x) {
  if (x.tag() != Tag::ramond) throw TagMismatch("membership is defined for Ramond elements");
  for (const auto& [g, c] : x.terms())
    if (!sub.contains(g)) return false;
  return true;
}

bool QuotientAlgebra::survives(const Generator& g) const {
  if (!Subalgebra::s_alpha_beta(alpha, beta).contains(g)) return false;
  const long m = g.index();
  switch (g.family) {
    case Family::L: return m <= z + alpha;
    case Family::I: return m <= z;
    case Family::G: return m <= z + beta;
  }
  return false;
}

Element QuotientAlgebra::truncate(const Element& e) const {
  Element out(Tag::ramond);
  for (const auto& [g, c] : e.terms())
    if (survives(g)) out.add(g, c);
  return out;
}

Element QuotientAlgebra::bracket(const Element& x, const Element& y) const {
  Element out(Tag::ramond);
  for (const auto& [gx, cx] : x.terms())
    for (const auto& [gy, cy] : y.terms()) {
      auto it = table.find({gx, gy});
      if (it != table.end()) out += it->second * (cx * cy);
    }
  return out;
}

bool QuotientAlgebra::check_jacobi() const {
  for (const auto& x : survivors)
    for (const auto& y : survivors)
      for (const auto& w : survivors) {
        const Element ex(Tag::ramond, x), ey(Tag::ramond, y), ew(Tag::ramond, w);
        Element lhs = bracket(ex, bracket(ey, ew));
        Scalar sign = (x.odd() && y.odd()) ? Scalar(-1) : Scalar(1);
        Element rhs = bracket(bracket(ex, ey), ew) + bracket(ey, bracket(ex, ew)) * sign;
        if (!(lhs == rhs)) return false;
      }
  return true;
}

QuotientAlgebra quotient_algebra(long alpha, long beta, long z) {
  if (alpha < 0 || beta < 0 || z < 0) throw PreconditionError("alpha, beta, z must be non-negative");
  if (alpha < 2 * beta) throw PreconditionError("quotient algebra requires alpha >= 2 beta");
  QuotientAlgebra q;
  q.alpha = alpha;
  q.beta = beta;
  q.z = z;
  for (long m = 0; m <= z + alpha; ++m) q.survivors.push_back(Generator::integral(Family::L, m));
  for (long m = -alpha; m <= z; ++m) q.survivors.push_back(Generator::integral(Family::I, m));
  for (long m = -beta; m <= z + beta; ++m) q.survivors.push_back(Generator::integral(Family::G, m));

  // ideal property: brackets are index-additive, so a window of width
  // z + alpha + 2 above every lower bound covers all sign patterns
  const Subalgebra whole = Subalgebra::s_alpha_beta(alpha, beta);
  const Subalgebra ideal = Subalgebra::s_rst(z + alpha + 1, z + 1, z + beta + 1);
  const long window = z + alpha + 2;
  for (Family fx : {Family::L, Family::I, Family::G})
    for (Family fy : {Family::L, Family::I, Family::G})
      for (long m = whole.lower_bound(fx); m <= whole.lower_bound(fx) + z + alpha + window; ++m)
        for (long n = ideal.lower_bound(fy); n <= ideal.lower_bound(fy) + window; ++n) {
          Element e = superalgebra::bracket(Generator::integral(fx, m), Generator::integral(fy, n));
          if (!member(ideal, e))
            throw ConsistencyError("ideal check failed at [" + Generator::integral(fx, m).str() + "," +
                                   Generator::integral(fy, n).str() + "]");
        }

  for (const auto& x : q.survivors)
    for (const auto& y : q.survivors) {
      Element e = q.truncate(superalgebra::bracket(x, y));
      if (!e.is_zero()) q.table.emplace(std::make_pair(x, y), std::move(e));
    }
  return q;
}

}  // namespace shv::superalgebra
