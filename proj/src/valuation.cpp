#include "epsmult/valuation.hpp"

#include "epsmult/errors.hpp"

namespace epsmult {

WeightVector::WeightVector(std::vector<Rational> base_weights)
    : weights_(std::move(base_weights)) {
  if (weights_.empty()) throw PreconditionError("weight vector is empty");
  for (const auto& w : weights_)
    if (w < 1) throw PreconditionError("weight " + to_string(w) + " is below 1");
}

WeightVector WeightVector::standard(std::size_t dim) {
  std::vector<Rational> w{Rational(1)};
  unsigned candidate = 2;
  while (w.size() < dim) {
    bool prime = true;
    for (unsigned q = 2; q * q <= candidate; ++q)
      if (candidate % q == 0) prime = false;
    if (prime) w.push_back(1 + Rational(1, candidate));
    ++candidate;
  }
  return WeightVector(std::move(w));
}

ValuationValue nu_value(const ExponentVector& e, const WeightVector& w) {
  if (e.size() != w.dim())
    throw DimensionMismatch("nu_value: exponent of length " +
                            std::to_string(e.size()) + " with " +
                            std::to_string(w.dim()) + " weights");
  Rational total = 0;
  for (std::size_t i = 0; i < e.size(); ++i) total += w.base_weights()[i] * e[i];
  return {std::move(total), e};
}

std::optional<ValuationValue> nu_value_of_support(
    std::span<const ExponentVector> support, const WeightVector& w) {
  std::optional<ValuationValue> best;
  for (const auto& e : support) {
    auto v = nu_value(e, w);
    if (!best || v < *best) best = std::move(v);
  }
  return best;
}

bool ValuationCut::contains(const ExponentVector& e, const WeightVector& w) const {
  const auto v = nu_value(e, w);
  return strict ? v > threshold : v >= threshold;
}

}  // namespace epsmult
