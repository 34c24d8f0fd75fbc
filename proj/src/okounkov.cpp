#include "epsmult/okounkov.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <ostream>
#include <set>

#include <nlohmann/json.hpp>

#include "epsmult/colength.hpp"
#include "epsmult/errors.hpp"
#include "epsmult/hull_volume.hpp"
#include "epsmult/lattice.hpp"
#include "epsmult/staircase.hpp"

namespace epsmult {

namespace {

// Level sets of a finitely generated semigroup as dense bitsets over a box
// large enough for every level up to n_max.
class LevelGenerator {
 public:
  LevelGenerator(const Semigroup& s, unsigned n_max) : dim_(s.dim()) {
    std::vector<std::int64_t> max_coord(dim_, 0);
    for (const auto& g : s.generators()) {
      const Exponent level = g[dim_];
      if (level == 0) {
        if (!g.is_zero())
          throw PreconditionError(
              "generator " + to_string(g) +
              " lies in level 0, so the levels are not finite sets");
        continue;
      }
      steps_.push_back(g);
      for (std::size_t i = 0; i < dim_; ++i)
        max_coord[i] = std::max<std::int64_t>(max_coord[i], g[i]);
      max_level_ = std::max<unsigned>(max_level_, static_cast<unsigned>(level));
    }
    std::uint64_t bits = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      extents_.push_back(max_coord[i] * n_max + 1);
      strides_.push_back(bits);
      bits *= static_cast<std::uint64_t>(extents_.back());
      if (bits > (std::uint64_t{1} << 34))
        throw PreconditionError("semigroup levels too large to enumerate");
    }
    words_ = static_cast<std::size_t>((bits + 63) / 64);
  }

  // Calls on_level(n, bitset) for n = 0..n_max in order.
  template <class F>
  void run(unsigned n_max, F&& on_level) {
    const unsigned ring = max_level_ + 1;
    std::vector<std::vector<std::uint64_t>> levels(
        ring, std::vector<std::uint64_t>(words_, 0));
    levels[0][0] = 1;  // the origin
    on_level(0u, levels[0]);
    for (unsigned n = 1; n <= n_max; ++n) {
      auto& cur = levels[n % ring];
      std::fill(cur.begin(), cur.end(), 0);
      for (const auto& g : steps_) {
        const auto level = static_cast<unsigned>(g[dim_]);
        if (level > n) continue;
        shift_or(cur, levels[(n - level) % ring], offset(g));
      }
      on_level(n, cur);
    }
  }

  ExponentVector decode(std::uint64_t index) const {
    ExponentVector e(dim_);
    for (std::size_t i = dim_; i-- > 0;) {
      e[i] = static_cast<Exponent>(index / strides_[i]);
      index %= strides_[i];
    }
    return e;
  }

 private:
  std::uint64_t offset(const ExponentVector& g) const {
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < dim_; ++i)
      off += static_cast<std::uint64_t>(g[i]) * strides_[i];
    return off;
  }

  static void shift_or(std::vector<std::uint64_t>& dst,
                       const std::vector<std::uint64_t>& src,
                       std::uint64_t offset) {
    const std::size_t q = offset / 64;
    const unsigned r = offset % 64;
    for (std::size_t w = 0; w + q < dst.size(); ++w) {
      const std::uint64_t word = src[w];
      if (!word) continue;
      dst[w + q] |= word << r;
      if (r && w + q + 1 < dst.size()) dst[w + q + 1] |= word >> (64 - r);
    }
  }

  std::size_t dim_;
  std::vector<ExponentVector> steps_;
  std::vector<std::int64_t> extents_;
  std::vector<std::uint64_t> strides_;
  std::size_t words_ = 0;
  unsigned max_level_ = 0;
};

Integer popcount(const std::vector<std::uint64_t>& bits) {
  std::uint64_t total = 0;
  for (auto w : bits) total += static_cast<std::uint64_t>(std::popcount(w));
  return Integer(total);
}

// Monomials of `ideal` with total degree <= bound.
std::vector<ExponentVector> monomials_in_simplex(const MonomialIdeal& ideal,
                                                 std::int64_t bound) {
  std::vector<ExponentVector> out;
  if (ideal.is_zero() || bound < 0) return out;
  const std::vector<std::int64_t> extents(ideal.dim() - 1, bound);
  const std::array<const MonomialIdeal*, 1> ideals{&ideal};
  scan_staircase(ideals, extents, bound,
                 [&](std::span<const Exponent> prefix, std::int64_t degree,
                     std::span<const std::int64_t> t) {
                   ExponentVector e(ideal.dim());
                   for (std::size_t i = 0; i < prefix.size(); ++i) e[i] = prefix[i];
                   for (std::int64_t last = t[0]; last <= bound - degree; ++last) {
                     e[ideal.dim() - 1] = static_cast<Exponent>(last);
                     out.push_back(e);
                   }
                 });
  return out;
}

}  // namespace

Semigroup Semigroup::from_generators(std::size_t dim,
                                     std::vector<ExponentVector> generators) {
  if (dim == 0) throw PreconditionError("semigroup dimension must be positive");
  for (const auto& g : generators) {
    if (g.size() != dim + 1)
      throw DimensionMismatch("semigroup generator " + to_string(g) +
                              " does not have length " + std::to_string(dim + 1));
    for (Exponent c : g)
      if (c < 0) throw PreconditionError("negative entry in " + to_string(g));
  }
  Semigroup s(dim, true);
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()),
                   generators.end());
  s.generators_ = std::move(generators);
  return s;
}

Semigroup Semigroup::from_levels(
    std::size_t dim, std::map<unsigned, std::vector<ExponentVector>> levels) {
  if (dim == 0) throw PreconditionError("semigroup dimension must be positive");
  for (auto& [i, pts] : levels) {
    for (const auto& p : pts) {
      if (p.size() != dim)
        throw DimensionMismatch("level point " + to_string(p) +
                                " does not have length " + std::to_string(dim));
      for (Exponent c : p)
        if (c < 0) throw PreconditionError("negative entry in " + to_string(p));
    }
    std::set<ExponentVector> seen;
    std::erase_if(pts, [&](const ExponentVector& p) { return !seen.insert(p).second; });
  }
  auto& zero = levels[0];
  if (!(zero.empty() || (zero.size() == 1 && zero.front().is_zero())))
    throw PreconditionError("level 0 of a semigroup must be {0}");
  zero = {ExponentVector(dim)};
  Semigroup s(dim, false);
  s.levels_ = std::move(levels);
  return s;
}

bool Semigroup::generated_in_level_one() const {
  return generated_ && !generators_.empty() &&
         std::all_of(generators_.begin(), generators_.end(),
                     [this](const ExponentVector& g) { return g[dim_] == 1; });
}

bool Semigroup::has_level(unsigned n) const {
  if (!generated_) return levels_.contains(n);
  if (n == 0) return true;
  return std::none_of(generators_.begin(), generators_.end(),
                      [this](const ExponentVector& g) {
                        return g[dim_] == 0 && !g.is_zero();
                      });
}

std::vector<ExponentVector> Semigroup::level(unsigned n) const {
  if (!has_level(n))
    throw PreconditionError("level " + std::to_string(n) +
                            " of the semigroup is unavailable");
  if (!generated_) return levels_.at(n);
  LevelGenerator gen(*this, n);
  std::vector<ExponentVector> out;
  gen.run(n, [&](unsigned level, const std::vector<std::uint64_t>& bits) {
    if (level != n) return;
    for (std::size_t w = 0; w < bits.size(); ++w) {
      std::uint64_t word = bits[w];
      while (word) {
        const int b = std::countr_zero(word);
        out.push_back(gen.decode(w * 64 + static_cast<unsigned>(b)));
        word &= word - 1;
      }
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Integer> Semigroup::level_counts(unsigned n_max) const {
  std::vector<Integer> counts;
  if (!generated_) {
    for (unsigned n = 0; n <= n_max; ++n) {
      if (!has_level(n))
        throw PreconditionError("level " + std::to_string(n) +
                                " of the semigroup is unavailable");
      counts.emplace_back(levels_.at(n).size());
    }
    return counts;
  }
  if (!has_level(1)) level(1);  // throws with the reason
  LevelGenerator gen(*this, n_max);
  gen.run(n_max, [&](unsigned, const std::vector<std::uint64_t>& bits) {
    counts.push_back(popcount(bits));
  });
  return counts;
}

std::vector<ExponentVector> Semigroup::known_points() const {
  if (generated_) return generators_;
  std::vector<ExponentVector> out;
  for (const auto& [i, pts] : levels_)
    for (const auto& p : pts) {
      std::vector<Exponent> coords(p.begin(), p.end());
      coords.push_back(static_cast<Exponent>(i));
      out.emplace_back(std::move(coords));
    }
  return out;
}

void to_json(nlohmann::json& j, const Semigroup& s) {
  auto rows = [](const std::vector<ExponentVector>& pts) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : pts) arr.push_back(std::vector<Exponent>(p.begin(), p.end()));
    return arr;
  };
  j = nlohmann::json{{"dim", s.dim()}};
  if (s.is_generated()) {
    j["generators"] = rows(s.generators());
  } else {
    nlohmann::json levels = nlohmann::json::object();
    for (const auto& [i, pts] : s.levels())
      if (i > 0) levels[std::to_string(i)] = rows(pts);
    j["levels"] = std::move(levels);
  }
}

Semigroup semigroup_from_json(const nlohmann::json& j) {
  auto read_points = [](const nlohmann::json& arr) {
    if (!arr.is_array()) throw ParseError("expected an array of points");
    std::vector<ExponentVector> pts;
    for (const auto& row : arr) {
      if (!row.is_array()) throw ParseError("each point must be an array");
      std::vector<Exponent> coords;
      for (const auto& c : row) {
        if (!c.is_number_integer()) throw ParseError("coordinates must be integers");
        coords.push_back(c.get<Exponent>());
      }
      pts.emplace_back(std::move(coords));
    }
    return pts;
  };
  if (!j.is_object() || !j.contains("dim"))
    throw ParseError("semigroup JSON needs the key \"dim\"");
  if (!j.at("dim").is_number_integer() || j.at("dim").get<std::int64_t>() <= 0)
    throw ParseError("\"dim\" must be a positive integer");
  const auto dim = j.at("dim").get<std::size_t>();
  const bool has_gens = j.contains("generators");
  const bool has_levels = j.contains("levels");
  if (has_gens == has_levels)
    throw ParseError("semigroup JSON needs exactly one of \"generators\" or \"levels\"");
  if (has_gens) return Semigroup::from_generators(dim, read_points(j.at("generators")));
  const auto& lv = j.at("levels");
  if (!lv.is_object()) throw ParseError("\"levels\" must be an object");
  std::map<unsigned, std::vector<ExponentVector>> levels;
  for (const auto& [key, pts] : lv.items()) {
    std::size_t used = 0;
    unsigned long level = 0;
    try {
      level = std::stoul(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty())
      throw ParseError("level key \"" + key + "\" is not a nonnegative integer");
    levels[static_cast<unsigned>(level)] = read_points(pts);
  }
  return Semigroup::from_levels(dim, std::move(levels));
}

Semigroup gamma_beta(const GradedFamilySpec& fam, unsigned beta, unsigned i_max,
                     const WeightVector& w) {
  if (w.dim() != fam.dim())
    throw DimensionMismatch("gamma_beta: weights and family differ in dimension");
  if (beta == 0) throw PreconditionError("gamma_beta: beta must be positive");
  const auto members = fam.sequence(i_max);
  if (i_max == 0 ? fam.at(1).is_zero() : members.front().is_zero())
    throw PreconditionError("gamma_beta: the family is zero in level 1");
  std::map<unsigned, std::vector<ExponentVector>> levels;
  for (unsigned i = 1; i <= i_max; ++i) {
    auto pts = monomials_in_simplex(members[i - 1],
                                    static_cast<std::int64_t>(beta) * i);
    std::sort(pts.begin(), pts.end(),
              [&w](const ExponentVector& a, const ExponentVector& b) {
                return nu_value(a, w) < nu_value(b, w);
              });
    levels[i] = std::move(pts);
  }
  return Semigroup::from_levels(fam.dim(), std::move(levels));
}

Integer gamma_beta_count(const GradedFamilySpec& fam, unsigned beta, unsigned n) {
  return count_in_simplex(fam.at(n), static_cast<std::int64_t>(beta) * n);
}

ConeConditions check_cone_conditions(const Semigroup& s, unsigned beta) {
  const auto points = s.known_points();
  const std::size_t d = s.dim();
  if (points.size() < d + 1)
    throw PreconditionError("cone check needs at least " + std::to_string(d + 1) +
                            " points, got " + std::to_string(points.size()));
  ConeConditions result;
  result.cone2 = std::all_of(points.begin(), points.end(), [&](const ExponentVector& p) {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < d; ++i) sum += p[i];
    return sum <= static_cast<std::int64_t>(beta) * p[d];
  });
  DenseMatrix<Integer> m(static_cast<Eigen::Index>(points.size()),
                         static_cast<Eigen::Index>(d + 1));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c <= d; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = points[r][c];
  result.cone3 = generates_full_lattice<Integer>(m);
  return result;
}

Integer semigroup_count(const Semigroup& s, unsigned n) {
  if (!s.is_generated()) {
    if (!s.has_level(n))
      throw PreconditionError("level " + std::to_string(n) +
                              " of the semigroup is unavailable");
    return Integer(s.levels().at(n).size());
  }
  return s.level_counts(n).back();
}

std::vector<Integer> k_fold_sum_counts(const Semigroup& s, unsigned p,
                                       unsigned k_max) {
  const auto base = s.level(p);
  std::vector<Integer> counts;
  if (k_max == 0) return counts;
  std::vector<ExponentVector> current = base;
  counts.emplace_back(current.size());
  for (unsigned k = 2; k <= k_max; ++k) {
    std::vector<ExponentVector> next;
    next.reserve(current.size() * base.size());
    for (const auto& a : current)
      for (const auto& b : base) next.push_back(a + b);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    current = std::move(next);
    counts.emplace_back(current.size());
  }
  return counts;
}

Integer k_fold_sum_count(const Semigroup& s, unsigned p, unsigned k) {
  if (k == 0) throw PreconditionError("k_fold_sum_count: k must be positive");
  return k_fold_sum_counts(s, p, k).back();
}

namespace {

std::optional<Rational> exact_volume(const Semigroup& s) {
  if (!s.generated_in_level_one() || s.dim() > 3) return std::nullopt;
  std::vector<ExponentVector> vertices;
  for (const auto& g : s.generators())
    vertices.emplace_back(std::vector<Exponent>(g.begin(), g.end() - 1));
  return convex_hull_volume(vertices);
}

}  // namespace

VolumeResult delta_volume(const Semigroup& s, unsigned n_probe) {
  if (n_probe == 0) throw PreconditionError("delta_volume: n_probe must be positive");
  VolumeResult r;
  r.n_used = n_probe;
  r.count = semigroup_count(s, n_probe);
  r.estimate = Rational(r.count, ipow(Integer(n_probe), static_cast<unsigned>(s.dim())));
  r.exact = exact_volume(s);
  return r;
}

VolumeDifference epsilon_via_volumes(const MonomialIdeal& ideal, unsigned beta,
                                     unsigned n_probe, const WeightVector& w) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError("epsilon_via_volumes: ideal must be neither zero nor unit");
  if (w.dim() != ideal.dim())
    throw DimensionMismatch("epsilon_via_volumes: weights and ideal differ in dimension");
  if (beta == 0 || n_probe == 0)
    throw PreconditionError("epsilon_via_volumes: beta and n_probe must be positive");
  const auto d = static_cast<unsigned>(ideal.dim());
  const auto bound = static_cast<std::int64_t>(beta) * n_probe;
  const MonomialIdeal inner = power(ideal, n_probe);
  const MonomialIdeal outer = saturate(inner);
  const Integer scale = ipow(Integer(n_probe), d);
  VolumeDifference r;
  r.beta = beta;
  r.n_used = n_probe;
  r.outer_volume = Rational(count_in_simplex(outer, bound), scale);
  r.inner_volume = Rational(count_in_simplex(inner, bound), scale);
  r.value = Rational(factorial(d)) * (r.outer_volume - r.inner_volume);
  return r;
}

BetaDiagnostic stabilize_beta(const MonomialIdeal& ideal, unsigned beta0,
                              unsigned n_probe, const Rational& tolerance,
                              unsigned max_rounds, const WeightVector& w) {
  BetaDiagnostic diag;
  unsigned beta = beta0;
  for (unsigned round = 0; round < max_rounds; ++round, beta *= 2) {
    diag.trail.push_back(epsilon_via_volumes(ideal, beta, n_probe, w));
    diag.beta = beta;
    if (diag.trail.size() >= 2) {
      const Rational gap = diag.trail.back().value - diag.trail[diag.trail.size() - 2].value;
      if ((gap < 0 ? Rational(-gap) : gap) <= tolerance) {
        diag.stable = true;
        break;
      }
    }
  }
  return diag;
}

void write_volume_csv(std::ostream& os, const Semigroup& s, unsigned n_max) {
  os << "n,count,estimate_num,estimate_den,exact_num,exact_den\n";
  const auto counts = s.level_counts(n_max);
  const auto exact = exact_volume(s);
  for (unsigned n = 1; n <= n_max; ++n) {
    const Rational est(counts[n], ipow(Integer(n), static_cast<unsigned>(s.dim())));
    os << n << ',' << counts[n] << ',' << numerator_of(est) << ','
       << denominator_of(est) << ',';
    if (exact) os << numerator_of(*exact) << ',' << denominator_of(*exact);
    else os << ',';
    os << '\n';
  }
}

}  // namespace epsmult
