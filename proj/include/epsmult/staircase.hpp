#pragma once

// Enumeration of monomials in staircases, one prefix (e_1..e_{d-1}) at a
// time. For a fixed prefix p the monomials of an ideal I with that prefix are
// exactly those with last exponent >= t_I(p), where
//   t_I(p) = min { g_d : g in gens(I), (g_1..g_{d-1}) <= p }.
// All counting in the library reduces to sums over t_I(p).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "epsmult/monomial_ideal.hpp"

namespace epsmult {

/// Threshold value meaning "no generator lies under this prefix".
inline constexpr std::int64_t kUnbounded =
    std::numeric_limits<std::int64_t>::max();

namespace detail {

template <class Visit>
class StaircaseScanner {
 public:
  StaircaseScanner(std::span<const MonomialIdeal* const> ideals,
                   std::span<const std::int64_t> extents,
                   std::int64_t degree_cap, Visit& visit)
      : ideals_(ideals),
        extents_(extents),
        degree_cap_(degree_cap),
        visit_(visit),
        dim_(ideals.front()->dim()),
        prefix_(dim_ > 1 ? dim_ - 1 : 0, 0),
        thresholds_(ideals.size(), kUnbounded) {}

  void run() {
    std::vector<std::vector<const ExponentVector*>> all(ideals_.size());
    for (std::size_t k = 0; k < ideals_.size(); ++k)
      for (const auto& g : ideals_[k]->generators()) all[k].push_back(&g);
    if (dim_ == 1) {
      for (std::size_t k = 0; k < all.size(); ++k)
        thresholds_[k] = min_last(all[k]);
      if (thresholds_[0] != kUnbounded)
        visit_(std::span<const Exponent>(prefix_), std::int64_t{0},
               std::span<const std::int64_t>(thresholds_));
      return;
    }
    descend(0, 0, std::move(all));
  }

 private:
  using Bucket = std::vector<const ExponentVector*>;

  std::int64_t min_last(const Bucket& b) const {
    std::int64_t m = kUnbounded;
    for (const auto* g : b) m = std::min<std::int64_t>(m, (*g)[dim_ - 1]);
    return m;
  }

  void descend(std::size_t depth, std::int64_t degree,
               std::vector<Bucket> candidates) {
    for (auto& b : candidates)
      std::sort(b.begin(), b.end(),
                [depth](const ExponentVector* a, const ExponentVector* c) {
                  return (*a)[depth] < (*c)[depth];
                });
    const bool leaf = depth + 2 == dim_;
    std::vector<Bucket> active(candidates.size());
    std::vector<std::size_t> cursor(candidates.size(), 0);
    std::vector<std::int64_t> running(candidates.size(), kUnbounded);

    std::int64_t limit = extents_[depth];
    if (degree_cap_ != kUnbounded)
      limit = std::min(limit, degree_cap_ - degree);
    for (std::int64_t v = 0; v <= limit; ++v) {
      for (std::size_t k = 0; k < candidates.size(); ++k) {
        auto& c = candidates[k];
        while (cursor[k] < c.size() && (*c[cursor[k]])[depth] <= v) {
          const auto* g = c[cursor[k]++];
          if (leaf)
            running[k] = std::min<std::int64_t>(running[k], (*g)[dim_ - 1]);
          else
            active[k].push_back(g);
        }
      }
      prefix_[depth] = static_cast<Exponent>(v);
      if (leaf) {
        if (running[0] == kUnbounded) continue;
        thresholds_ = running;
        visit_(std::span<const Exponent>(prefix_), degree + v,
               std::span<const std::int64_t>(thresholds_));
      } else {
        if (active[0].empty()) continue;
        descend(depth + 1, degree + v, active);
      }
    }
    prefix_[depth] = 0;
  }

  std::span<const MonomialIdeal* const> ideals_;
  std::span<const std::int64_t> extents_;
  std::int64_t degree_cap_;
  Visit& visit_;
  std::size_t dim_;
  std::vector<Exponent> prefix_;
  std::vector<std::int64_t> thresholds_;
};

}  // namespace detail

/// Calls visit(prefix, prefix_degree, thresholds) for every prefix p with
/// 0 <= p_i <= extents[i] (and |p| <= degree_cap unless it is kUnbounded)
/// at which the first ideal has a generator below p. thresholds[k] is t(p)
/// for ideals[k], or kUnbounded. All ideals must share a dimension d, and
/// extents must have d - 1 entries.
template <class Visit>
void scan_staircase(std::span<const MonomialIdeal* const> ideals,
                    std::span<const std::int64_t> extents,
                    std::int64_t degree_cap, Visit&& visit) {
  detail::StaircaseScanner<std::remove_reference_t<Visit>> scanner(
      ideals, extents, degree_cap, visit);
  scanner.run();
}

}  // namespace epsmult
