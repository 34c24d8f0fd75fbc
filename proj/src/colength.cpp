#include "epsmult/colength.hpp"

#include <algorithm>
#include <array>
#include <ostream>

#include "epsmult/errors.hpp"
#include "epsmult/staircase.hpp"

namespace epsmult {

namespace {

void require_contained(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  if (!is_subideal(inner, outer))
    throw PreconditionError("inner ideal " + to_string(inner) +
                            " is not contained in outer ideal " +
                            to_string(outer));
}

std::vector<std::int64_t> quotient_extents(const MonomialIdeal& inner,
                                           const MonomialIdeal& outer) {
  std::vector<std::int64_t> extents;
  for (std::size_t i = 0; i + 1 < inner.dim(); ++i)
    extents.push_back(std::max(inner.max_exponent(i), outer.max_exponent(i)));
  return extents;
}

// Visits (prefix degree, t_J, t_I) for every prefix where J \ I is nonempty.
// Returns false if the quotient is infinite.
template <class F>
bool scan_quotient(const MonomialIdeal& inner, const MonomialIdeal& outer,
                   F&& on_column) {
  const auto extents = quotient_extents(inner, outer);
  const std::array<const MonomialIdeal*, 2> ideals{&outer, &inner};
  bool finite = true;
  scan_staircase(ideals, extents, kUnbounded,
                 [&](std::span<const Exponent> prefix, std::int64_t degree,
                     std::span<const std::int64_t> t) {
                   if (!finite) return;
                   const std::int64_t t_outer = t[0];
                   const std::int64_t t_inner = t[1];
                   if (t_inner == t_outer) return;
                   if (t_inner == kUnbounded) {
                     finite = false;
                     return;
                   }
                   for (std::size_t i = 0; i < prefix.size(); ++i)
                     if (prefix[i] == extents[i]) {
                       finite = false;
                       return;
                     }
                   on_column(degree, t_outer, t_inner);
                 });
  return finite;
}

}  // namespace

bool is_finite_colength(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_contained(inner, outer);
  return is_subideal(outer, saturate(inner));
}

LengthValue colength(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_contained(inner, outer);
  std::int64_t partial = 0;
  Integer total = 0;
  const bool finite =
      scan_quotient(inner, outer, [&](std::int64_t, std::int64_t lo,
                                      std::int64_t hi) {
        partial += hi - lo;
        if (partial > (std::int64_t{1} << 60)) {
          total += partial;
          partial = 0;
        }
      });
  if (!finite) return LengthValue::infinite();
  total += partial;
  return LengthValue::of(std::move(total));
}

std::vector<LengthValue> length_sequence(const GradedFamilySpec& inner,
                                         const GradedFamilySpec& outer,
                                         unsigned n_max) {
  if (inner.dim() != outer.dim())
    throw DimensionMismatch("length_sequence: families in different dimensions");
  const auto inner_seq = inner.sequence(n_max);
  const auto outer_seq = outer.sequence(n_max);
  std::vector<LengthValue> out;
  out.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n) {
    LengthValue v;
    try {
      v = colength(inner_seq[n - 1], outer_seq[n - 1]);
    } catch (const PreconditionError& e) {
      throw PreconditionError("at n = " + std::to_string(n) + ": " + e.what());
    }
    if (!v.finite())
      throw InfiniteLengthError("at n = " + std::to_string(n) + ": " +
                                outer.describe() + " / " + inner.describe() +
                                " has infinite length");
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::int64_t> top_degree_of_quotient(const MonomialIdeal& inner,
                                                   const MonomialIdeal& outer) {
  require_contained(inner, outer);
  std::optional<std::int64_t> top;
  const bool finite = scan_quotient(
      inner, outer, [&](std::int64_t degree, std::int64_t, std::int64_t hi) {
        const std::int64_t d = degree + hi - 1;
        if (!top || d > *top) top = d;
      });
  if (!finite)
    throw InfiniteLengthError(to_string(outer) + " / " + to_string(inner) +
                              " has infinite length");
  return top;
}

Integer count_in_simplex(const MonomialIdeal& ideal, std::int64_t bound) {
  if (bound < 0 || ideal.is_zero()) return 0;
  const std::vector<std::int64_t> extents(ideal.dim() - 1, bound);
  const std::array<const MonomialIdeal*, 1> ideals{&ideal};
  Integer total = 0;
  std::int64_t partial = 0;
  scan_staircase(ideals, extents, bound,
                 [&](std::span<const Exponent>, std::int64_t degree,
                     std::span<const std::int64_t> t) {
                   const std::int64_t room = bound - degree - t[0] + 1;
                   if (room > 0) partial += room;
                   if (partial > (std::int64_t{1} << 60)) {
                     total += partial;
                     partial = 0;
                   }
                 });
  total += partial;
  return total;
}

void write_length_csv(std::ostream& os, const std::vector<LengthValue>& seq) {
  os << "n,length\n";
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << (i + 1) << ',' << (seq[i].finite() ? seq[i].value->str() : "inf")
       << '\n';
}

}  // namespace epsmult
