#pragma once

#include <optional>
#include <vector>

#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"

namespace epsmult {

/// Exact d-dimensional volume of the convex hull of lattice points, d <= 3.
/// Lower-dimensional hulls have volume 0. Returns nullopt for d > 3 and
/// for an empty point set.
std::optional<Rational> convex_hull_volume(const std::vector<ExponentVector>& points);

}  // namespace epsmult
