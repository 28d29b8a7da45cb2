#pragma once

#include <random>
#include <sstream>
#include <string>

#include "shv/induced.hpp"

namespace shv::testing {

using induced::Generator;
using induced::Word;
using superalgebra::Family;

inline Generator gen(const std::string& s) { return superalgebra::parse_generator(s); }

inline Word word(const std::string& text) {
  std::istringstream in(text);
  Word w;
  for (std::string tok; in >> tok;) w.push_back(gen(tok));
  return w;
}

inline Generator random_generator(std::mt19937_64& rng, long lo, long hi) {
  const auto f = static_cast<Family>(std::uniform_int_distribution<int>(0, 2)(rng));
  return Generator::integral(f, std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Word random_word(std::mt19937_64& rng, std::size_t max_len, long lo, long hi) {
  Word w(std::uniform_int_distribution<std::size_t>(0, max_len)(rng));
  for (auto& g : w) g = random_generator(rng, lo, hi);
  return w;
}

inline std::map<Generator, Scalar> whittaker_phi() { return {{gen("I1"), Scalar(1)}}; }

}  // namespace shv::testing
