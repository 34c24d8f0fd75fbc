#pragma once

#include <optional>
#include <span>
#include <vector>

#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"

namespace epsmult {

inline constexpr unsigned kDefaultWindow = 3;
inline constexpr unsigned kDefaultKMax = 20;
inline constexpr unsigned kDefaultMMax = 6;

/// Stabilized d-th forward difference of a length sequence. An empty `value`
/// means the difference sequence had no constant tail of the requested
/// window: the result is inconclusive and nothing is extrapolated.
struct AmaoResult {
  std::optional<Integer> value;
  /// 1-based index n at which the constant tail of the d-th differences starts.
  unsigned stabilized_at = 0;
  /// Number of equal trailing differences observed.
  unsigned window = 0;
  /// Length of the sequence the result was computed from.
  unsigned k_used = 0;

  bool conclusive() const noexcept { return value.has_value(); }
};

/// d-th forward differences of `seq`; a polynomial of degree <= d in n has
/// constant d-th difference d! times its degree-d coefficient.
/// Throws PreconditionError if seq.size() < d + window.
AmaoResult leading_difference(std::span<const Integer> seq, unsigned d,
                              unsigned window = kDefaultWindow);

/// a(inner, outer): stabilized d-th difference of l(outer^k / inner^k),
/// k = 1..k_max, with d the ambient dimension.
/// Throws PreconditionError if inner is not contained in outer and
/// InfiniteLengthError if outer/inner has infinite length.
AmaoResult amao(const MonomialIdeal& inner, const MonomialIdeal& outer,
                unsigned k_max = kDefaultKMax, unsigned window = kDefaultWindow);

/// e_n = d! l((I^n)^sat / I^n) / n^d for n = 1..n_max.
struct EpsilonEstimate {
  std::vector<Integer> lengths;
  std::vector<Rational> sequence;
  unsigned n_max = 0;
};

/// Throws PreconditionError for the zero or unit ideal.
EpsilonEstimate epsilon_sequence(const MonomialIdeal& ideal, unsigned n_max);

struct TheoremARow {
  unsigned m = 0;
  AmaoResult amao;
  /// a_m / m^d; empty when the row is inconclusive.
  std::optional<Rational> ratio;
};

/// Rows m = 1..m_max of a(I^m, (I^m)^sat) and a_m / m^d. Rows are computed
/// concurrently and returned in order of m.
std::vector<TheoremARow> theorem_a_table(const MonomialIdeal& ideal,
                                         unsigned m_max,
                                         unsigned k_max = kDefaultKMax,
                                         unsigned window = kDefaultWindow);

struct ContainmentCheck {
  bool holds = true;
  /// Smallest i with (I^sat)^i not contained in (I^i)^sat.
  std::optional<unsigned> counterexample;
};

/// (I^sat)^i subset (I^i)^sat for i = 1..i_max.
ContainmentCheck check_sat_power_containment(const MonomialIdeal& ideal,
                                             unsigned i_max);

/// Literal check of I^{mk} cap m^{cmk} = ((I^m)^sat)^k cap m^{cmk} by
/// intersecting with the power of the maximal ideal. Cost grows quickly
/// with c m k; swanson_c_search uses an equivalent degree criterion.
bool swanson_equality_holds(const MonomialIdeal& ideal, unsigned m, unsigned k,
                            unsigned c);

struct SwansonResult {
  /// Least c in [1, c_max] passing every pair on the grid.
  std::optional<unsigned> c;
  /// The least c that would pass the grid, even if it exceeds c_max.
  unsigned required_c = 1;
  /// A pair (m, k) attaining required_c.
  unsigned worst_m = 1;
  unsigned worst_k = 1;
  unsigned mk_bound = 0;
  /// Always true: the grid is a falsification harness, not a proof for all m, k.
  bool verified_on_grid_only = true;
};

/// Searches c = 1..c_max for I^{mk} cap m^{cmk} = ((I^m)^sat)^k cap m^{cmk}
/// over all m k <= mk_bound.
///
/// Since I^{mk} is contained in ((I^m)^sat)^k, the equality at (m, k, c)
/// holds iff every monomial of ((I^m)^sat)^k outside I^{mk} has degree below
/// c m k. The quotient is finite because ((I^m)^sat)^k lies in (I^{mk})^sat.
/// Throws PreconditionError for the zero or unit ideal.
SwansonResult swanson_c_search(const MonomialIdeal& ideal, unsigned c_max,
                               unsigned mk_bound);

}  // namespace epsmult
