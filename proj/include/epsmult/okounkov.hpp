#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "epsmult/graded_family.hpp"
#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"
#include "epsmult/valuation.hpp"

namespace epsmult {

/// A subsemigroup of N^{d+1}, the last coordinate being the level. Either
/// finitely generated, or given level by level up to some maximum level.
class Semigroup {
 public:
  /// Each generator has length d + 1. Throws on length mismatch.
  static Semigroup from_generators(std::size_t dim,
                                   std::vector<ExponentVector> generators);
  /// levels[i] lists S_i as points of N^d, kept in the given order with
  /// duplicates dropped. Level 0 is {0} and may be omitted.
  static Semigroup from_levels(std::size_t dim,
                               std::map<unsigned, std::vector<ExponentVector>> levels);

  std::size_t dim() const noexcept { return dim_; }
  bool is_generated() const noexcept { return generated_; }
  const std::vector<ExponentVector>& generators() const noexcept {
    return generators_;
  }
  const std::map<unsigned, std::vector<ExponentVector>>& levels() const noexcept {
    return levels_;
  }

  /// Every generator sits at level 1.
  bool generated_in_level_one() const;

  /// Whether S_n can be produced (materialized, or generated with no
  /// nonzero generator at level 0).
  bool has_level(unsigned n) const;

  /// S_n as points of N^d: sorted for generated semigroups, in stored order
  /// otherwise. Throws PreconditionError if the level is unavailable.
  std::vector<ExponentVector> level(unsigned n) const;

  /// [#S_0, ..., #S_{n_max}].
  std::vector<Integer> level_counts(unsigned n_max) const;

  /// The known points (v, i) of N^{d+1}: generators, or all listed levels.
  std::vector<ExponentVector> known_points() const;

 private:
  Semigroup(std::size_t dim, bool generated) : dim_(dim), generated_(generated) {}

  std::size_t dim_;
  bool generated_;
  std::vector<ExponentVector> generators_;
  std::map<unsigned, std::vector<ExponentVector>> levels_;
};

void to_json(nlohmann::json& j, const Semigroup& s);
/// Accepts {"dim", "generators"} or {"dim", "levels": {"1": [...], ...}}.
Semigroup semigroup_from_json(const nlohmann::json& j);

/// Level i holds the exponents of monomials of fam(i) of degree <= beta i,
/// in increasing valuation order under w, for i = 1..i_max.
/// Throws PreconditionError if fam(1) is the zero ideal.
Semigroup gamma_beta(const GradedFamilySpec& fam, unsigned beta, unsigned i_max,
                     const WeightVector& w);

/// #Gamma_beta(fam)_n without materializing the level.
Integer gamma_beta_count(const GradedFamilySpec& fam, unsigned beta, unsigned n);

struct ConeConditions {
  /// Every known point (v, i) satisfies |v| <= beta i.
  bool cone2 = false;
  /// The known points generate Z^{d+1}.
  bool cone3 = false;
};

/// Throws PreconditionError with fewer than d + 1 known points.
ConeConditions check_cone_conditions(const Semigroup& s, unsigned beta);

/// #S_n.
Integer semigroup_count(const Semigroup& s, unsigned n);

/// #(k * S_p), k-fold sums of points of S_p.
Integer k_fold_sum_count(const Semigroup& s, unsigned p, unsigned k);
/// [#(1 * S_p), ..., #(k_max * S_p)].
std::vector<Integer> k_fold_sum_counts(const Semigroup& s, unsigned p,
                                       unsigned k_max);

struct VolumeResult {
  /// vol(Delta(S)) when S is generated in level one and d <= 3.
  std::optional<Rational> exact;
  /// #S_n / n^d at n = n_used.
  Rational estimate;
  Integer count;
  unsigned n_used = 0;
};

VolumeResult delta_volume(const Semigroup& s, unsigned n_probe);

/// d! (#Gamma_beta(J)_n - #Gamma_beta(I)_n) / n^d for the saturated powers J
/// and the powers I, at n = n_probe. The counts do not depend on w.
struct VolumeDifference {
  Rational value;
  Rational outer_volume;  // #Gamma_beta(sat powers)_n / n^d
  Rational inner_volume;  // #Gamma_beta(powers)_n / n^d
  unsigned beta = 0;
  unsigned n_used = 0;
};

/// Throws PreconditionError for the zero or unit ideal.
VolumeDifference epsilon_via_volumes(const MonomialIdeal& ideal, unsigned beta,
                                     unsigned n_probe, const WeightVector& w);

struct BetaDiagnostic {
  std::vector<VolumeDifference> trail;  // one entry per beta tried
  bool stable = false;
  unsigned beta = 0;                    // last beta tried
};

/// Doubles beta from `beta0` until two successive values of
/// epsilon_via_volumes differ by at most `tolerance`, trying at most
/// `max_rounds` values of beta.
BetaDiagnostic stabilize_beta(const MonomialIdeal& ideal, unsigned beta0,
                              unsigned n_probe, const Rational& tolerance,
                              unsigned max_rounds, const WeightVector& w);

/// CSV "n,count,estimate_num,estimate_den,exact_num,exact_den" for
/// n = 1..n_max; exact columns are empty when unavailable.
void write_volume_csv(std::ostream& os, const Semigroup& s, unsigned n_max);

}  // namespace epsmult
