#include "epsmult/graded_family.hpp"

#include "epsmult/errors.hpp"

namespace epsmult {

GradedFamilySpec GradedFamilySpec::powers(MonomialIdeal base) {
  return {FamilyKind::powers, std::move(base), 1};
}

GradedFamilySpec GradedFamilySpec::saturated_powers(MonomialIdeal base) {
  return {FamilyKind::saturated_powers, std::move(base), 1};
}

GradedFamilySpec GradedFamilySpec::power_then_saturate_power(
    MonomialIdeal base, unsigned m) {
  if (m == 0) throw PreconditionError("family parameter m must be positive");
  return {FamilyKind::power_then_saturate_power, std::move(base), m};
}

GradedFamilySpec GradedFamilySpec::fixed_power_family(MonomialIdeal base,
                                                      unsigned m) {
  if (m == 0) throw PreconditionError("family parameter m must be positive");
  return {FamilyKind::fixed_power_family, std::move(base), m};
}

GradedFamilySpec GradedFamilySpec::constant_unit(std::size_t dim) {
  return {FamilyKind::constant_unit, MonomialIdeal::unit(dim), 1};
}

MonomialIdeal GradedFamilySpec::step_ideal() const {
  switch (kind_) {
    case FamilyKind::powers:
    case FamilyKind::saturated_powers:
    case FamilyKind::constant_unit:
      return base_;
    case FamilyKind::power_then_saturate_power:
      return saturate(power(base_, m_));
    case FamilyKind::fixed_power_family:
      return power(base_, m_);
  }
  return base_;
}

MonomialIdeal GradedFamilySpec::at(unsigned n) const {
  if (n == 0) return MonomialIdeal::unit(dim());
  switch (kind_) {
    case FamilyKind::constant_unit:
      return MonomialIdeal::unit(dim());
    case FamilyKind::saturated_powers:
      return saturate(power(base_, n));
    default:
      return power(step_ideal(), n);
  }
}

std::vector<MonomialIdeal> GradedFamilySpec::sequence(unsigned n_max) const {
  std::vector<MonomialIdeal> out;
  out.reserve(n_max);
  if (kind_ == FamilyKind::constant_unit) {
    out.assign(n_max, MonomialIdeal::unit(dim()));
    return out;
  }
  const MonomialIdeal step = step_ideal();
  MonomialIdeal current = MonomialIdeal::unit(dim());
  for (unsigned n = 1; n <= n_max; ++n) {
    current = product(current, step);
    out.push_back(kind_ == FamilyKind::saturated_powers ? saturate(current)
                                                        : current);
  }
  return out;
}

std::string GradedFamilySpec::describe() const {
  const std::string b = to_string(base_);
  switch (kind_) {
    case FamilyKind::powers:
      return "powers" + b;
    case FamilyKind::saturated_powers:
      return "saturated_powers" + b;
    case FamilyKind::power_then_saturate_power:
      return "power_then_saturate_power" + b + "[m=" + std::to_string(m_) + "]";
    case FamilyKind::fixed_power_family:
      return "fixed_power_family" + b + "[m=" + std::to_string(m_) + "]";
    case FamilyKind::constant_unit:
      return "constant_unit";
  }
  return "?";
}

}  // namespace epsmult
