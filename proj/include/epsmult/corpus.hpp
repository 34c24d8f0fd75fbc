#pragma once

#include <cstdint>
#include <vector>

#include "epsmult/monomial_ideal.hpp"

namespace epsmult {

/// Shape of a seeded random corpus of monomial ideals.
struct CorpusShape {
  std::size_t max_dim = 3;
  std::size_t max_generators = 5;
  Exponent max_exponent = 6;
};

/// `count` random ideals drawn from `seed`. Each has a dimension in
/// [1, max_dim], between 1 and max_generators generators, and entries in
/// [0, max_exponent]; no generator is the zero vector, so no ideal is the
/// unit or zero ideal. Identical across platforms for a given seed.
std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count,
                                         const CorpusShape& shape = {});

}  // namespace epsmult
