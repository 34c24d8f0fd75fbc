#include "epsmult/corpus.hpp"

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/uniform_int_distribution.hpp>

namespace epsmult {

std::vector<MonomialIdeal> random_corpus(std::uint64_t seed, std::size_t count,
                                         const CorpusShape& shape) {
  boost::random::mt19937_64 rng(seed);
  auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
    return boost::random::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  std::vector<MonomialIdeal> corpus;
  corpus.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const auto dim = static_cast<std::size_t>(
        draw(1, static_cast<std::int64_t>(shape.max_dim)));
    const auto gens = draw(1, static_cast<std::int64_t>(shape.max_generators));
    std::vector<ExponentVector> vs;
    for (std::int64_t g = 0; g < gens; ++g) {
      ExponentVector e(dim);
      do {
        for (std::size_t i = 0; i < dim; ++i)
          e[i] = static_cast<Exponent>(draw(0, shape.max_exponent));
      } while (e.is_zero());
      vs.push_back(std::move(e));
    }
    corpus.emplace_back(dim, std::move(vs));
  }
  return corpus;
}

}  // namespace epsmult
