#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"

namespace epsmult {

/// Weights lambda_1..lambda_d >= 1 of a monomial valuation. Ties between
/// monomials of equal weight are broken lexicographically, which makes the
/// value order total on N^d the way rationally independent real weights
/// would.
class WeightVector {
 public:
  /// Throws PreconditionError if a weight is < 1 or the list is empty.
  explicit WeightVector(std::vector<Rational> base_weights);

  /// (1, 1 + 1/2, 1 + 1/3, 1 + 1/5, ...): distinct small rationals.
  static WeightVector standard(std::size_t dim);

  std::size_t dim() const noexcept { return weights_.size(); }
  const std::vector<Rational>& base_weights() const noexcept { return weights_; }

 private:
  std::vector<Rational> weights_;
};

/// An element of the ordered value group: weight first, then the exponent
/// vector lexicographically.
struct ValuationValue {
  Rational weight;
  ExponentVector tiebreak;

  friend bool operator==(const ValuationValue&, const ValuationValue&) = default;
  friend bool operator<(const ValuationValue& a, const ValuationValue& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.tiebreak < b.tiebreak;
  }
  friend bool operator>(const ValuationValue& a, const ValuationValue& b) {
    return b < a;
  }
  friend bool operator<=(const ValuationValue& a, const ValuationValue& b) {
    return !(b < a);
  }
  friend bool operator>=(const ValuationValue& a, const ValuationValue& b) {
    return !(a < b);
  }
  friend ValuationValue operator+(const ValuationValue& a,
                                  const ValuationValue& b) {
    return {a.weight + b.weight, a.tiebreak + b.tiebreak};
  }
};

/// nu(x^e) = (sum e_i lambda_i, e).
ValuationValue nu_value(const ExponentVector& e, const WeightVector& w);

/// Value of a polynomial with the given support: the minimum over its
/// monomials. nullopt for the empty support (the zero polynomial).
std::optional<ValuationValue> nu_value_of_support(
    std::span<const ExponentVector> support, const WeightVector& w);

/// K_lambda (strict = false) or K_lambda^+ (strict = true).
struct ValuationCut {
  ValuationValue threshold;
  bool strict = false;

  bool contains(const ExponentVector& e, const WeightVector& w) const;
};

/// Coordinate sum n_1 + ... + n_d.
inline std::int64_t psi(const ExponentVector& e) { return e.degree(); }
/// Leading exponent of a monomial, which is the monomial's own exponent.
inline const ExponentVector& phi(const ExponentVector& e) { return e; }

}  // namespace epsmult
