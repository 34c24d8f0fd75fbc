#pragma once

#include <string>
#include <vector>

#include "epsmult/monomial_ideal.hpp"

namespace epsmult {

enum class FamilyKind {
  powers,                     // n -> I^n
  saturated_powers,           // n -> (I^n)^sat
  power_then_saturate_power,  // k -> ((I^m)^sat)^k
  fixed_power_family,         // k -> I^(m k)
  constant_unit,              // n -> R
};

/// A rule n -> ideal with family(0) = R and family(a) family(b) contained in
/// family(a + b).
class GradedFamilySpec {
 public:
  static GradedFamilySpec powers(MonomialIdeal base);
  static GradedFamilySpec saturated_powers(MonomialIdeal base);
  static GradedFamilySpec power_then_saturate_power(MonomialIdeal base,
                                                    unsigned m);
  static GradedFamilySpec fixed_power_family(MonomialIdeal base, unsigned m);
  static GradedFamilySpec constant_unit(std::size_t dim);

  FamilyKind kind() const noexcept { return kind_; }
  const MonomialIdeal& base() const noexcept { return base_; }
  unsigned m() const noexcept { return m_; }
  std::size_t dim() const noexcept { return base_.dim(); }

  MonomialIdeal at(unsigned n) const;

  /// [family(1), ..., family(n_max)], built incrementally.
  std::vector<MonomialIdeal> sequence(unsigned n_max) const;

  std::string describe() const;

 private:
  GradedFamilySpec(FamilyKind kind, MonomialIdeal base, unsigned m)
      : kind_(kind), base_(std::move(base)), m_(m) {}

  /// The ideal whose k-th power is family(k), for the power-like kinds.
  MonomialIdeal step_ideal() const;

  FamilyKind kind_;
  MonomialIdeal base_;
  unsigned m_;
};

}  // namespace epsmult
