#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "epsmult/graded_family.hpp"
#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"

namespace epsmult {

/// A length over the residue field; infinite lengths carry no value.
struct LengthValue {
  std::optional<Integer> value;

  static LengthValue infinite() { return {}; }
  static LengthValue of(Integer v) { return {std::move(v)}; }

  bool finite() const noexcept { return value.has_value(); }
  friend bool operator==(const LengthValue&, const LengthValue&) = default;
};

/// Whether J/I has finite length, i.e. J is contained in I^sat.
/// Throws PreconditionError unless I is contained in J.
bool is_finite_colength(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// l(J/I) = #{e : x^e in J, x^e not in I} for I contained in J.
///
/// For a prefix p = (e_1..e_{d-1}) the quotient contributes t_I(p) - t_J(p)
/// monomials. Both thresholds are constant once p_i reaches the largest
/// exponent M_i of variable i among the generators, so the sum runs over the
/// box prod [0, M_i] and the length is infinite exactly when some prefix on
/// the upper face of that box contributes, or when t_I(p) is unbounded while
/// t_J(p) is not.
///
/// Returns LengthValue::infinite() for an infinite quotient; throws
/// PreconditionError if I is not contained in J.
LengthValue colength(const MonomialIdeal& inner, const MonomialIdeal& outer);

/// [l(famJ(n) / famI(n))] for n = 1..n_max. Throws InfiniteLengthError or
/// PreconditionError naming the offending n.
std::vector<LengthValue> length_sequence(const GradedFamilySpec& inner,
                                         const GradedFamilySpec& outer,
                                         unsigned n_max);

/// Largest total degree of a monomial in J but not in I, or nullopt when
/// J = I. Throws InfiniteLengthError when J/I has infinite length.
std::optional<std::int64_t> top_degree_of_quotient(const MonomialIdeal& inner,
                                                   const MonomialIdeal& outer);

/// #{e in N^d : x^e in J, |e| <= bound}.
Integer count_in_simplex(const MonomialIdeal& ideal, std::int64_t bound);

/// CSV rows "n,length" with a header line; infinite entries print "inf".
void write_length_csv(std::ostream& os, const std::vector<LengthValue>& seq);

}  // namespace epsmult
