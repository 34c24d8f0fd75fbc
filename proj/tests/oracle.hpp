#pragma once

// Brute-force reference implementations. They work point by point on a
// bounded box of exponents and never touch the library's generator algebra.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "epsmult/monomial_ideal.hpp"
#include "epsmult/numeric.hpp"

namespace oracle {

using epsmult::Exponent;
using epsmult::ExponentVector;
using epsmult::Integer;
using epsmult::MonomialIdeal;

using Point = std::vector<Exponent>;
using Gens = std::vector<Point>;

inline bool divides(const Point& g, const Point& e) {
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > e[i]) return false;
  return true;
}

// Membership in the ideal generated by raw (possibly redundant) generators.
inline bool member(const Gens& gens, const Point& e) {
  for (const auto& g : gens)
    if (divides(g, e)) return true;
  return false;
}

inline Gens raw(const MonomialIdeal& ideal) {
  Gens out;
  for (const auto& g : ideal.generators()) out.emplace_back(g.begin(), g.end());
  return out;
}

// Calls f on every point of [0, bound]^d.
inline void for_box(std::size_t d, Exponent bound, const std::function<void(const Point&)>& f) {
  Point p(d, 0);
  for (;;) {
    f(p);
    std::size_t i = 0;
    while (i < d && p[i] == bound) p[i++] = 0;
    if (i == d) return;
    ++p[i];
  }
}

// Calls f on every point of N^d with coordinate sum exactly t.
inline void for_degree(std::size_t d, Exponent t, const std::function<void(const Point&)>& f) {
  Point p(d, 0);
  std::function<void(std::size_t, Exponent)> fill = [&](std::size_t i, Exponent left) {
    if (i + 1 == d) {
      p[i] = left;
      f(p);
      return;
    }
    for (Exponent c = 0; c <= left; ++c) {
      p[i] = c;
      fill(i + 1, left - c);
    }
  };
  fill(0, t);
}

inline Point add(const Point& a, const Point& b) {
  Point out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Exponent max_entry(const Gens& gens) {
  Exponent m = 0;
  for (const auto& g : gens)
    for (auto c : g) m = std::max(m, c);
  return m;
}

// e in I*J iff e = a + b with a in I and b in J; a may be taken to be a
// generator of I, since enlarging b keeps it in J.
inline bool member_product(const Gens& i, const Gens& j, const Point& e) {
  for (const auto& g : i) {
    if (!divides(g, e)) continue;
    Point b(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) b[k] = e[k] - g[k];
    if (member(j, b)) return true;
  }
  return false;
}

// e in I : J iff e + g in I for every generator g of J.
inline bool member_colon(const Gens& i, const Gens& j, const Point& e) {
  for (const auto& g : j)
    if (!member(i, add(e, g))) return false;
  return true;
}

// e in I : m^T for T = d * (largest exponent) + 1, which is I^sat.
inline bool member_saturation(const Gens& gens, const Point& e) {
  const auto d = e.size();
  const Exponent t = static_cast<Exponent>(d) * max_entry(gens) + 1;
  bool all = true;
  for_degree(d, t, [&](const Point& u) {
    if (all && !member(gens, add(e, u))) all = false;
  });
  return all;
}

// Whether a monomial ideal agrees with a membership predicate on [0, bound]^d.
inline bool agrees_on_box(const MonomialIdeal& ideal, Exponent bound,
                          const std::function<bool(const Point&)>& pred) {
  const auto gens = raw(ideal);
  bool ok = true;
  for_box(ideal.dim(), bound, [&](const Point& p) {
    if (ok && member(gens, p) != pred(p)) ok = false;
  });
  return ok;
}

// #{e in [0, bound)^d : e in J, e not in I}.
inline Integer colength_in_box(const Gens& inner, const Gens& outer, std::size_t d,
                               Exponent bound) {
  Integer count = 0;
  for_box(d, bound - 1, [&](const Point& p) {
    if (member(outer, p) && !member(inner, p)) ++count;
  });
  return count;
}

// Deterministic small random numbers independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  int uniform(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

inline MonomialIdeal random_ideal(Rng& rng, std::size_t d, int max_gens, int max_exp) {
  std::vector<ExponentVector> gens;
  const int n = rng.uniform(1, max_gens);
  for (int k = 0; k < n; ++k) {
    ExponentVector e(d);
    for (std::size_t i = 0; i < d; ++i) e[i] = rng.uniform(0, max_exp);
    gens.push_back(e);
  }
  return MonomialIdeal(d, std::move(gens));
}

// Leibniz determinant of a small square matrix.
inline Integer determinant(const std::vector<std::vector<Integer>>& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  Integer det = 0;
  do {
    Integer term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    det += inversions % 2 ? Integer(-term) : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

// gcd of all n x n minors of the rows (points in Z^n); 0 when rank < n.
inline Integer maximal_minor_gcd(const std::vector<std::vector<Integer>>& rows, std::size_t n) {
  Integer g = 0;
  const std::size_t r = rows.size();
  if (r < n) return 0;
  std::vector<bool> pick(r, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<std::vector<Integer>> sub;
    for (std::size_t i = 0; i < r; ++i)
      if (pick[i]) sub.push_back(rows[i]);
    g = boost::multiprecision::gcd(g, boost::multiprecision::abs(determinant(sub)));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

// Whether v lies in the group generated by `rows`, assuming it has rank n:
// adjoining v leaves the index unchanged exactly when v is already inside.
inline bool in_lattice(const std::vector<std::vector<Integer>>& rows,
                       const std::vector<Integer>& v, std::size_t n) {
  const Integer before = maximal_minor_gcd(rows, n);
  if (before == 0) return false;
  auto more = rows;
  more.push_back(v);
  return maximal_minor_gcd(more, n) == before;
}

// (0, ..., 0, 1) and every (e_i, 0) lie in the group generated by the points.
inline bool generates_everything(const std::vector<ExponentVector>& points) {
  const std::size_t n = points.front().size();
  std::vector<std::vector<Integer>> rows;
  for (const auto& p : points) rows.emplace_back(p.begin(), p.end());
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Integer> target(n, 0);
    target[i] = 1;
    if (!in_lattice(rows, target, n)) return false;
  }
  return true;
}

// Closed forms used across the suites.
inline Integer triangular(std::int64_t n) { return Integer(n) * (n + 1) / 2; }

}  // namespace oracle
