#include "shv/commands.hpp"

#include <cstdlib>
#include <random>

#include "shv/conformal.hpp"
#include "shv/induced.hpp"
#include "shv/superalgebra.hpp"

namespace shv::commands {

using superalgebra::Tag;

namespace {

std::string verdict(bool pass) { return pass ? "pass" : "fail"; }

void check_range(long n, long lo, long hi, const std::string& what) {
  if (n < lo || n > hi)
    throw UsageError(what + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

induced::Strategy parse_strategy(const std::string& s) {
  if (s == "rightmost") return induced::Strategy::rightmost_first;
  if (s == "leftmost") return induced::Strategy::leftmost_first;
  throw UsageError("strategy must be rightmost or leftmost");
}

json conformal_verdict(const conformal::AlgebraSpec& spec, bool& ok) {
  const auto skew = conformal::check_skew(spec);
  const auto jacobi = conformal::check_jacobi(spec);
  ok = ok && skew.pass && jacobi.pass;
  json out = {{"skew", verdict(skew.pass)}, {"jacobi", verdict(jacobi.pass)}};
  if (!skew.pass) out["skew_violations"] = skew.violations;
  if (!jacobi.pass) out["jacobi_violations"] = jacobi.violations;
  return out;
}

struct Loaded {
  std::shared_ptr<const induced::BaseModule> base;
  std::unique_ptr<induced::InducedModule> module;
};

Loaded load(const json& module, long fuel) {
  Loaded l;
  l.base = document::parse_module(module);
  l.module = std::make_unique<induced::InducedModule>(l.base, fuel);
  return l;
}

json validation(const induced::BaseModule& base, long sample_bound, Result& r) {
  const auto rep = induced::validate_conditions(base, sample_bound);
  r.ok = rep.pass;
  r.diagnostics.insert(r.diagnostics.end(), rep.failures.begin(), rep.failures.end());
  return document::render_report(rep);
}

}  // namespace

long fuel_from_env() {
  const char* raw = std::getenv("SHV_FUEL");
  if (raw == nullptr || *raw == '\0') return induced::kDefaultFuel;
  char* end = nullptr;
  const long v = std::strtol(raw, &end, 10);
  if (*end != '\0' || v <= 0) throw UsageError("SHV_FUEL must be a positive integer");
  return v;
}

Result bracket(const json& x, const json& y, Tag tag) {
  const auto a = document::parse_element(x, tag);
  const auto b = document::parse_element(y, tag);
  return {document::render_element(superalgebra::bracket(a, b))};
}

Result conformal_check(const std::optional<json>& ansatz) {
  Result r;
  if (!ansatz) {
    r.doc = conformal_verdict(conformal::super_heisenberg_virasoro(), r.ok);
    r.doc["heisenberg_virasoro"] = conformal_verdict(conformal::heisenberg_virasoro(), r.ok);
  } else {
    r.doc = conformal_verdict(conformal::extension_algebra(document::parse_ansatz(*ansatz)), r.ok);
  }
  return r;
}

Result conformal_classify(long degree, bool c_nonzero) {
  check_range(degree, 0, 12, "degree");
  json families = json::array();
  for (const auto& f : conformal::classify_rank_one_extension(static_cast<int>(degree), {c_nonzero}))
    families.push_back(document::render_family(f));
  json out = {{"degree_bound", degree}, {"families", families}};
  if (c_nonzero) out["restriction"] = "c != 0";
  return {out};
}

Result conformal_products() {
  const auto spec = conformal::super_heisenberg_virasoro();
  json tables = json::array();
  for (int x = 0; x < static_cast<int>(spec.size()); ++x)
    for (int y = 0; y < static_cast<int>(spec.size()); ++y) {
      json products = json::array();
      for (const auto& [j, e] : conformal::jth_products(spec, x, y))
        products.push_back(json::array({j, conformal::render(spec, e)}));
      tables.push_back({{"pair", {spec.name(x), spec.name(y)}}, {"products", products}});
    }
  return {{{"tables", tables}}};
}

Result lie_of(long range) {
  check_range(range, 0, 64, "range");
  const auto cmp = superalgebra::compare_lie_of(conformal::super_heisenberg_virasoro(), range);
  Result r{{{"range", {-range, range}},
            {"pairs", cmp.pairs},
            {"matches_S", cmp.matches},
            {"pre_shift_identity", cmp.pre_shift_identity},
            {"mismatches", cmp.mismatches}}};
  r.ok = cmp.matches && cmp.pre_shift_identity;
  r.diagnostics = cmp.mismatches;
  return r;
}

Result ns_check(long range, bool corrupt) {
  check_range(range, 1, 64, "range");
  superalgebra::GeneratorMap map = superalgebra::ns_generator_image;
  if (corrupt) {
    map = [](const superalgebra::Generator& g) {
      const superalgebra::Element e = superalgebra::ns_generator_image(g);
      return g.family == superalgebra::Family::L ? e * Scalar(2) : e;
    };
  }
  const auto rep = superalgebra::check_ns_embedding(range, map);
  Result r{{{"range", range}, {"result", verdict(rep.pass)}, {"violations", rep.violations}}};
  r.ok = rep.pass;
  return r;
}

Result quotient(long alpha, long beta, long z) {
  check_range(alpha, 0, 32, "alpha");
  check_range(beta, 0, 32, "beta");
  check_range(z, 0, 32, "z");
  if (alpha < 2 * beta) throw UsageError("quotient requires alpha >= 2 beta");
  const auto q = superalgebra::quotient_algebra(alpha, beta, z);
  json survivors = json::array();
  for (const auto& g : q.survivors) survivors.push_back(g.str());
  json table = json::array();
  for (const auto& [pair, e] : q.table)
    table.push_back({{"x", pair.first.str()}, {"y", pair.second.str()}, {"bracket", document::render_element(e)}});
  const bool jacobi = q.check_jacobi();
  Result r{{{"alpha", alpha},
            {"beta", beta},
            {"z", z},
            {"survivors", survivors},
            {"table", table},
            {"ideal_check", "pass"},
            {"jacobi", verdict(jacobi)}}};
  r.ok = jacobi;
  return r;
}

Result normal_form(const json& module, const std::optional<json>& vector, const std::string& word,
                   const std::string& base, const std::string& strategy, long fuel) {
  const auto ctx = load(module, fuel);
  const auto strat = parse_strategy(strategy);
  induced::InducedVector v;
  if (vector) {
    if (!word.empty()) throw UsageError("give either a vector document or a word, not both");
    for (const json& t : vector->at("terms")) {
      const auto w = t.contains("word") ? document::parse_word(t["word"]) : induced::Word{};
      const auto key = document::parse_base_key(*ctx.base, t.at("base"));
      const Scalar c = t.contains("coeff") ? document::parse_scalar(t["coeff"]) : Scalar(1);
      v += ctx.module->normal_form(w, key, strat) * c;
    }
  } else {
    const auto key = base.empty() ? ctx.base->sample_basis(0).front() : document::parse_base_key(*ctx.base, json(base));
    v = ctx.module->normal_form(document::parse_word(word), key, strat);
  }
  return {document::render_vector(*ctx.module, v)};
}

Result act(const json& module, const json& vector, const std::string& word, const std::string& coeff, long fuel) {
  const auto ctx = load(module, fuel);
  const auto v = document::parse_vector(*ctx.module, vector);
  const Scalar c = document::parse_scalar(json(coeff));
  return {document::render_vector(*ctx.module, ctx.module->act_word(document::parse_word(word), v, c))};
}

Result validate_module(const json& module, long sample_bound, long fuel) {
  check_range(sample_bound, 0, 12, "sample bound");
  const auto ctx = load(module, fuel);
  Result r;
  r.doc = validation(*ctx.base, sample_bound, r);
  return r;
}

Result probe(const json& module, const ProbeRequest& request, long fuel) {
  check_range(request.sample_bound, 0, 12, "sample bound");
  if (request.vectors.has_value() == (request.random != 0)) throw UsageError("give a vector document or --random N");
  if (request.random != 0) {
    check_range(request.random, 1, 10000, "random count");
    check_range(request.max_weight, 0, 16, "max weight");
    if (!request.seed) throw UsageError("random vectors need a seed");
  }
  const auto ctx = load(module, fuel);
  Result r;
  r.doc = {{"validation", validation(*ctx.base, request.sample_bound, r)}};
  if (!r.ok) return r;

  std::vector<induced::InducedVector> vectors;
  if (request.random != 0) {
    std::mt19937_64 rng(*request.seed);
    for (long t = 0; t < request.random; ++t)
      vectors.push_back(induced::random_vector(*ctx.module, rng, request.max_weight, static_cast<int>(t % 2)));
  } else if (request.vectors->is_object() && request.vectors->contains("vectors")) {
    for (const json& v : (*request.vectors)["vectors"]) vectors.push_back(document::parse_vector(*ctx.module, v));
  } else {
    vectors.push_back(document::parse_vector(*ctx.module, *request.vectors));
  }

  json probes = json::array();
  for (const auto& v : vectors) {
    if (v.is_zero()) throw document::DocumentError("cannot probe the zero vector");
    const auto trace = induced::simplicity_probe(*ctx.module, v);
    r.ok = r.ok && trace.success;
    json entry = document::render_trace(*ctx.module, trace);
    entry["vector"] = document::render_vector(*ctx.module, v);
    probes.push_back(entry);
    if (!trace.success) r.diagnostics.push_back("probe failed: " + trace.failure);
  }
  r.doc["probes"] = probes;
  r.doc["all_succeeded"] = r.ok;
  return r;
}

}  // namespace shv::commands
