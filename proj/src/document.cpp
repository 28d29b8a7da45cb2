#include "shv/document.hpp"

#include <sstream>

namespace shv::document {

using induced::BaseKey;
using induced::BaseModule;
using induced::BaseVec;
using induced::FiniteTableModule;
using induced::InducedModule;
using induced::InducedVector;
using induced::WhittakerBase;
using superalgebra::Element;
using superalgebra::Family;
using superalgebra::Generator;
using superalgebra::Tag;

namespace {

[[noreturn]] void fail(const std::string& what) { throw DocumentError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field \"") + key + "\"");
  return *it;
}

long integer_field(const json& j, const char* key, long fallback, bool required = false) {
  if (!j.is_object()) fail("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) fail(std::string("missing field \"") + key + "\"");
    return fallback;
  }
  if (!it->is_number_integer()) fail(std::string("field \"") + key + "\" must be an integer");
  return it->get<long>();
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) fail(std::string("field \"") + key + "\" must be an array");
  return a;
}

Generator parse_generator_text(const std::string& text) {
  try {
    return superalgebra::parse_generator(text);
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("malformed JSON: ") + e.what());
  }
}

json render_scalar(const Scalar& s) { return s.str(); }

Scalar parse_scalar(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) fail("scalars must be strings \"p/q\" or integers");
  try {
    return Scalar::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail("bad scalar \"" + j.get<std::string>() + "\": " + e.what());
  }
}

json render_generator_index(const Generator& g) {
  if (g.integral_index()) return g.index();
  return g.index_value().str();
}

json render_element(const Element& e) {
  json terms = json::array();
  for (const auto& [g, c] : e.terms())
    terms.push_back({{"coeff", render_scalar(c)}, {"family", std::string(1, family_char(g.family))},
                     {"index", render_generator_index(g)}});
  json out = {{"terms", terms}};
  if (e.tag() == Tag::neveu_schwarz) out["algebra"] = "ns";
  return out;
}

Element parse_element(const json& j, Tag fallback) {
  Tag tag = fallback;
  if (j.is_object() && j.contains("algebra")) {
    const json& a = j["algebra"];
    if (a == "ns")
      tag = Tag::neveu_schwarz;
    else if (a == "ramond")
      tag = Tag::ramond;
    else
      fail("algebra must be \"ramond\" or \"ns\"");
  }
  Element out(tag);
  for (const json& t : array_field(j, "terms")) {
    const json& fam = field(t, "family");
    if (!fam.is_string() || fam.get<std::string>().size() != 1) fail("family must be \"L\", \"I\" or \"G\"");
    Family f;
    try {
      f = superalgebra::parse_family(fam.get<std::string>()[0]);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    const Scalar idx = parse_scalar(field(t, "index"));
    const Scalar twice = idx * Scalar(2);
    if (!twice.is_integer()) fail("index must be an integer or a half-integer");
    const Generator g{f, twice.to_long()};
    const Scalar c = t.contains("coeff") ? parse_scalar(t["coeff"]) : Scalar(1);
    try {
      out.add(g, c);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  return out;
}

induced::Word parse_word(const std::string& text) {
  std::istringstream in(text);
  induced::Word w;
  for (std::string t; in >> t;) {
    const Generator g = parse_generator_text(t);
    if (!g.integral_index()) fail("Ramond letters need integer indices: " + t);
    w.push_back(g);
  }
  return w;
}

json render_word(const induced::Word& w) {
  json out = json::array();
  for (const auto& g : w) out.push_back(g.str());
  return out;
}

induced::Word parse_word(const json& j) {
  if (j.is_string()) return parse_word(j.get<std::string>());
  if (!j.is_array()) fail("a word is an array of letters such as \"L-1\"");
  induced::Word w;
  for (const json& t : j) {
    if (!t.is_string()) fail("a word is an array of letters such as \"L-1\"");
    auto part = parse_word(t.get<std::string>());
    if (part.size() != 1) fail("one letter per word entry: " + t.get<std::string>());
    w.push_back(part.front());
  }
  return w;
}

std::shared_ptr<const BaseModule> parse_module(const json& j) {
  const json& type = field(j, "type");
  if (type == "verma") return induced::verma(parse_scalar(field(j, "h")), parse_scalar(field(j, "c0")));
  if (type == "whittaker") {
    const long k = integer_field(j, "k", 1, true);
    std::map<Generator, Scalar> phi;
    if (j.contains("phi")) {
      const json& p = j["phi"];
      if (!p.is_object()) fail("phi must map letters such as \"I1\" to scalars");
      for (const auto& [name, value] : p.items()) phi[parse_generator_text(name)] = parse_scalar(value);
    }
    if (k < 1) fail("Whittaker level k must be at least 1");
    return induced::whittaker(k, phi, parse_scalar(field(j, "c0")));
  }
  if (type == "finite") {
    const long alpha = integer_field(j, "alpha", 0), beta = integer_field(j, "beta", 0), z = integer_field(j, "z", 0);
    std::vector<int> parities;
    std::vector<std::string> names;
    for (const json& b : array_field(j, "basis")) {
      const json& name = field(b, "name");
      if (!name.is_string()) fail("basis names must be strings");
      names.push_back(name.get<std::string>());
      parities.push_back(static_cast<int>(integer_field(b, "parity", 0, true)));
    }
    std::map<Generator, induced::Matrix> actions;
    if (j.contains("actions")) {
      const json& acts = j["actions"];
      if (!acts.is_object()) fail("actions must map letters to matrices");
      for (const auto& [name, rows] : acts.items()) {
        if (!rows.is_array()) fail("matrix of " + name + " must be an array of rows");
        induced::Matrix m;
        for (const json& row : rows) {
          if (!row.is_array()) fail("matrix of " + name + " must be an array of rows");
          std::vector<Scalar> r;
          for (const json& c : row) r.push_back(parse_scalar(c));
          m.push_back(std::move(r));
        }
        actions[parse_generator_text(name)] = std::move(m);
      }
    }
    return std::make_shared<FiniteTableModule>(alpha, beta, z, parities, actions, names);
  }
  fail("module type must be \"verma\", \"whittaker\" or \"finite\"");
}

json render_module(const BaseModule& m) {
  if (const auto* w = dynamic_cast<const WhittakerBase*>(&m)) {
    json phi = json::object();
    for (const auto& [g, c] : w->phi()) phi[g.str()] = render_scalar(c);
    return {{"type", "whittaker"}, {"k", w->level()}, {"phi", phi}, {"c0", render_scalar(w->c0())}};
  }
  if (const auto* f = dynamic_cast<const FiniteTableModule*>(&m)) {
    json basis = json::array();
    for (std::size_t i = 0; i < f->dimension(); ++i)
      basis.push_back({{"name", f->names()[i]}, {"parity", f->parities()[i]}});
    json actions = json::object();
    for (const auto& [g, mat] : f->actions()) {
      json rows = json::array();
      for (const auto& row : mat) {
        json r = json::array();
        for (const auto& c : row) r.push_back(render_scalar(c));
        rows.push_back(r);
      }
      actions[g.str()] = rows;
    }
    return {{"type", "finite"}, {"alpha", f->alpha()}, {"beta", f->beta()}, {"z", f->z()},
            {"basis", basis},   {"actions", actions}};
  }
  fail("unknown base module kind");
}

BaseKey parse_base_key(const BaseModule& m, const json& label) {
  if (!label.is_string()) fail("base must be a basis label such as \"v\"");
  try {
    return m.parse_key(label.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

InducedVector parse_vector(const InducedModule& m, const json& j) {
  InducedVector out;
  for (const json& t : array_field(j, "terms")) {
    const induced::Word w = t.contains("word") ? parse_word(t["word"]) : induced::Word{};
    const BaseKey key = parse_base_key(m.base(), field(t, "base"));
    const Scalar c = t.contains("coeff") ? parse_scalar(t["coeff"]) : Scalar(1);
    out += m.normal_form(w, key) * c;
  }
  return out;
}

json render_vector(const InducedModule& m, const InducedVector& v) {
  json terms = json::array();
  for (const auto& [mono, vec] : v.terms())
    for (const auto& [key, c] : vec)
      terms.push_back({{"coeff", render_scalar(c)}, {"word", render_word(mono.word())},
                       {"base", m.base().describe(key)}});
  return {{"terms", terms}};
}

json render_base_vector(const BaseModule& m, const BaseVec& v) {
  json out = json::array();
  for (const auto& [key, c] : v) out.push_back({{"coeff", render_scalar(c)}, {"base", m.describe(key)}});
  return out;
}

json render_report(const induced::ConditionReport& r) {
  return {{"pass", r.pass}, {"z", r.z}, {"failures", r.failures}, {"notes", r.notes}};
}

json render_trace(const InducedModule& m, const induced::ProbeTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json step = {{"applied", s.applied.str()}, {"branch", std::string(1, s.branch)}, {"degree", s.degree.str()}};
    if (s.predicted) step["predicted"] = s.predicted->str();
    steps.push_back(step);
  }
  json out = {{"start", t.start.str()}, {"steps", steps}, {"success", t.success}};
  if (t.success) {
    out["terminal"] = render_base_vector(m.base(), t.terminal);
    std::string text;
    for (const auto& [key, c] : t.terminal)
      text += (text.empty() ? "" : " + ") + c.str() + "·" + m.base().describe(key);
    out["terminal_text"] = text;
  } else
    out["failure"] = t.failure;
  return out;
}

namespace {

MPoly parse_bivariate(const json& j) {
  if (j.is_string() || j.is_number_integer()) return MPoly(parse_scalar(j));
  if (!j.is_array()) fail("phi and psi are a scalar or a list of {\"coeff\",\"d\",\"l\"} terms");
  MPoly out;
  for (const json& t : j) {
    const long d = integer_field(t, "d", 0), l = integer_field(t, "l", 0);
    if (d < 0 || l < 0 || d > 64 || l > 64) fail("exponents must lie in 0..64");
    out = out + MPoly::var(conformal::kDel, static_cast<int>(d)) * MPoly::var(conformal::kLam, static_cast<int>(l)) *
                    MPoly(parse_scalar(field(t, "coeff")));
  }
  return out;
}

std::string render_parameter(const MPoly& p, const std::string& name) {
  if (p.is_zero()) return "0";
  if (p == MPoly(1)) return name;
  return name + "·(" + conformal::render_poly(p) + ")";
}

}  // namespace

conformal::ExtensionAnsatz parse_ansatz(const json& j) {
  conformal::ExtensionAnsatz a{parse_scalar(field(j, "a")), parse_scalar(field(j, "b")), parse_scalar(field(j, "c")),
                               parse_bivariate(field(j, "phi")), parse_bivariate(field(j, "psi"))};
  if (a.phi.is_zero() && a.psi.is_zero()) fail("phi and psi must not both vanish");
  return a;
}

json render_family(const conformal::SolutionFamily& f) {
  json out = json::object();
  for (const char* p : {"a", "b", "c"}) {
    auto it = f.fixed.find(p);
    out[p] = it == f.fixed.end() ? json(std::string("free")) : json(conformal::render_poly(it->second));
  }
  json nonzero = json::array();
  for (const auto& q : f.nonzero) nonzero.push_back(q.str(conformal::var_name));
  if (!nonzero.empty()) out["nonzero"] = nonzero;
  if (f.kernel.size() == 1) {
    out["phi"] = render_parameter(f.kernel[0].first, "Δ");
    out["psi"] = render_parameter(f.kernel[0].second, "Δ");
  } else {
    json basis = json::array();
    for (std::size_t i = 0; i < f.kernel.size(); ++i) {
      const std::string name = "Δ" + std::to_string(i + 1);
      basis.push_back({{"phi", render_parameter(f.kernel[i].first, name)},
                       {"psi", render_parameter(f.kernel[i].second, name)}});
    }
    out["kernel"] = basis;
  }
  return out;
}

}  // namespace shv::document
