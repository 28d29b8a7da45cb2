#include <gtest/gtest.h>

#include "shv/document.hpp"
#include "support.hpp"

using namespace shv;
using namespace shv::document;
using namespace shv::testing;
using superalgebra::Element;
using superalgebra::Tag;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 12);
  return Scalar(num(rng), den(rng));
}

Element random_element(std::mt19937_64& rng) {
  const Tag tag = rng() % 2 ? Tag::ramond : Tag::neveu_schwarz;
  Element e(tag);
  for (int t = static_cast<int>(rng() % 4); t > 0; --t) {
    Generator g = random_generator(rng, -9, 9);
    if (tag == Tag::neveu_schwarz && g.odd()) g.doubled += 1;
    e.add(g, random_scalar(rng));
  }
  return e;
}

std::shared_ptr<const induced::BaseModule> random_module(std::mt19937_64& rng) {
  switch (rng() % 3) {
    case 0: return induced::verma(random_scalar(rng), random_scalar(rng));
    case 1: return induced::whittaker(1, {{gen("I1"), random_scalar(rng)}, {gen("L2"), random_scalar(rng)}},
                                      random_scalar(rng));
    default: return induced::whittaker(2, {{gen("I3"), random_scalar(rng)}, {gen("L4"), random_scalar(rng)}},
                                       random_scalar(rng));
  }
}

}  // namespace

TEST(Scalars, Render) {
  EXPECT_EQ(render_scalar(Scalar(-3, 6)), json("-1/2"));
  EXPECT_EQ(parse_scalar(json("4/6")), Scalar(2, 3));
  EXPECT_EQ(parse_scalar(json(7)), Scalar(7));
  EXPECT_THROW(parse_scalar(json("0.5")), DocumentError);
  EXPECT_THROW(parse_scalar(json(0.5)), DocumentError);
}

TEST(Elements, CanonicalRendering) {
  const Element e = Element(Tag::ramond, gen("L5"));
  EXPECT_EQ(render_element(e).dump(), R"({"terms":[{"coeff":"1","family":"L","index":5}]})");
  EXPECT_EQ(render_element(Element()).dump(), R"({"terms":[]})");
  const Element ns(Tag::neveu_schwarz, gen("G5/2"), Scalar(3, 2));
  const json j = render_element(ns);
  EXPECT_EQ(j.at("algebra"), "ns");
  EXPECT_EQ(j.at("terms")[0].at("index"), "5/2");
}

TEST(Elements, ParseErrors) {
  EXPECT_THROW(parse_element(json::parse(R"({"terms":[{"family":"X","index":1}]})")), DocumentError);
  EXPECT_THROW(parse_element(json::parse(R"({"terms":[{"family":"G","index":"1/2"}]})")), DocumentError);
  EXPECT_THROW(parse_element(json::parse(R"({"terms":[{"family":"L"}]})")), DocumentError);
  EXPECT_THROW(parse_element(json::parse(R"([1,2])")), DocumentError);
  EXPECT_THROW(parse_text("{\"terms\": ["), DocumentError);
  const auto e = parse_element(json::parse(R"({"terms":[{"family":"I","index":2}]})"));
  EXPECT_EQ(e, Element(Tag::ramond, gen("I2")));
}

TEST(Words, ParseAndRender) {
  EXPECT_EQ(parse_word(std::string("L1 G-1")), word("L1 G-1"));
  EXPECT_EQ(parse_word(json::parse(R"(["I-2","L0"])")), word("I-2 L0"));
  EXPECT_EQ(render_word(word("I-2 L0")), json::parse(R"(["I-2","L0"])"));
  EXPECT_TRUE(parse_word(std::string("")).empty());
  EXPECT_THROW(parse_word(std::string("Q1")), DocumentError);
}

TEST(Modules, ParseDocuments) {
  const auto v = parse_module(json::parse(R"({"type":"verma","h":"2","c0":"1"})"));
  EXPECT_EQ(v->c0(), Scalar(1));
  const auto w = parse_module(json::parse(R"({"type":"whittaker","k":1,"phi":{"I1":"1"},"c0":"1"})"));
  EXPECT_EQ(w->z(), 1);
  EXPECT_THROW(parse_module(json::parse(R"({"type":"moon"})")), DocumentError);
  EXPECT_THROW(parse_module(json::parse(R"({"type":"verma","h":"2"})")), DocumentError);
  const auto f = parse_module(json::parse(
      R"({"type":"finite","alpha":0,"beta":0,"z":0,"basis":[{"name":"v","parity":0},{"name":"w","parity":1}],
          "actions":{"I0":[["1","0"],["0","1"]],"G0":[["0","1"],["1","0"]]}})"));
  EXPECT_EQ(f->sample_basis(0).size(), 2u);
}

TEST(Vectors, NormalizeOnParse) {
  const induced::InducedModule m(induced::verma(2, 1));
  const auto v = parse_vector(m, json::parse(R"({"terms":[{"coeff":"1","word":["L1","L-1"],"base":"v"}]})"));
  EXPECT_EQ(v, m.vacuum(m.base().parse_key("v")) * Scalar(-4));
  EXPECT_THROW(parse_vector(m, json::parse(R"({"terms":[{"word":[],"base":"u"}]})")), DocumentError);
}

TEST(RoundTrip, RandomValues) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 200; ++t) {
    const Element e = random_element(rng);
    EXPECT_EQ(parse_element(parse_text(render_element(e).dump())), e);

    const auto base = random_module(rng);
    const json doc = render_module(*base);
    const auto again = parse_module(parse_text(doc.dump()));
    EXPECT_EQ(render_module(*again), doc);

    const induced::InducedModule m(again);
    const auto v = induced::random_vector(m, rng, 4, t % 2);
    EXPECT_EQ(parse_vector(m, parse_text(render_vector(m, v).dump())), v);
  }
}

TEST(RoundTrip, FiniteModule) {
  const auto V = induced::verma(Scalar(5, 3), Scalar(-2));
  const json doc = render_module(*V);
  EXPECT_EQ(doc.at("type"), "finite");
  EXPECT_EQ(render_module(*parse_module(doc)), doc);
}

TEST(Ansatz, Parse) {
  const auto a = parse_ansatz(json::parse(R"({"a":"1","b":"0","c":"0","phi":"0","psi":"2"})"));
  EXPECT_EQ(a.a, Scalar(1));
  EXPECT_EQ(a.psi, MPoly(2));
  const auto b = parse_ansatz(json::parse(R"({"a":"1","b":"0","c":"0","phi":[{"coeff":"3","d":1,"l":2}],"psi":"1"})"));
  EXPECT_EQ(b.phi, MPoly::var(conformal::kDel) * MPoly::var(conformal::kLam, 2) * Scalar(3));
  EXPECT_THROW(parse_ansatz(json::parse(R"({"a":"1"})")), DocumentError);
}

TEST(Families, Render) {
  const auto out = conformal::classify_rank_one_extension(2);
  ASSERT_EQ(out.size(), 1u);
  const json j = render_family(out[0]);
  EXPECT_EQ(j.at("a"), "1");
  EXPECT_EQ(j.at("b"), "0");
  EXPECT_EQ(j.at("c"), "0");
  EXPECT_EQ(j.at("phi"), "0");
  EXPECT_EQ(j.at("psi"), "Δ");
}
