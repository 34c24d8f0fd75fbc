#include "epsmult/multiplicity.hpp"

#include <algorithm>
#include <future>

#include "epsmult/colength.hpp"
#include "epsmult/errors.hpp"
#include "epsmult/graded_family.hpp"

namespace epsmult {

namespace {

void require_proper(const MonomialIdeal& ideal, const char* op) {
  if (ideal.is_zero() || ideal.is_unit())
    throw PreconditionError(std::string(op) +
                            ": ideal must be neither zero nor the unit ideal");
}

}  // namespace

AmaoResult leading_difference(std::span<const Integer> seq, unsigned d,
                              unsigned window) {
  if (d == 0) throw PreconditionError("leading_difference: d must be positive");
  if (window == 0)
    throw PreconditionError("leading_difference: window must be positive");
  if (seq.size() < static_cast<std::size_t>(d) + window)
    throw PreconditionError("leading_difference: need at least " +
                            std::to_string(d + window) + " terms, got " +
                            std::to_string(seq.size()));

  std::vector<Integer> diff(seq.begin(), seq.end());
  for (unsigned r = 0; r < d; ++r) {
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
  }

  AmaoResult result;
  result.k_used = static_cast<unsigned>(seq.size());
  std::size_t start = diff.size() - 1;
  while (start > 0 && diff[start - 1] == diff.back()) --start;
  const auto tail = static_cast<unsigned>(diff.size() - start);
  result.window = tail;
  result.stabilized_at = static_cast<unsigned>(start + 1);
  if (tail < window) return result;
  if (diff.back() < 0)
    throw PreconditionError(
        "leading_difference: negative constant difference; the input is not "
        "a length sequence of dimension " + std::to_string(d));
  result.value = diff.back();
  return result;
}

AmaoResult amao(const MonomialIdeal& inner, const MonomialIdeal& outer,
                unsigned k_max, unsigned window) {
  detail::require_same_dim(inner, outer, "amao");
  if (!is_subideal(inner, outer))
    throw PreconditionError("inner not contained in outer: " + to_string(inner) +
                            " vs " + to_string(outer));
  if (!is_finite_colength(inner, outer))
    throw InfiniteLengthError("amao: " + to_string(outer) + " / " +
                              to_string(inner) + " has infinite length");
  const auto lengths =
      length_sequence(GradedFamilySpec::powers(inner),
                      GradedFamilySpec::powers(outer), k_max);
  std::vector<Integer> seq;
  seq.reserve(lengths.size());
  for (const auto& l : lengths) seq.push_back(*l.value);
  return leading_difference(seq, static_cast<unsigned>(inner.dim()), window);
}

EpsilonEstimate epsilon_sequence(const MonomialIdeal& ideal, unsigned n_max) {
  require_proper(ideal, "epsilon_sequence");
  const auto d = static_cast<unsigned>(ideal.dim());
  const auto lengths =
      length_sequence(GradedFamilySpec::powers(ideal),
                      GradedFamilySpec::saturated_powers(ideal), n_max);
  const Integer d_fact = factorial(d);
  EpsilonEstimate est;
  est.n_max = n_max;
  for (unsigned n = 1; n <= n_max; ++n) {
    const Integer& l = *lengths[n - 1].value;
    est.lengths.push_back(l);
    est.sequence.push_back(Rational(d_fact * l, ipow(Integer(n), d)));
  }
  return est;
}

std::vector<TheoremARow> theorem_a_table(const MonomialIdeal& ideal,
                                         unsigned m_max, unsigned k_max,
                                         unsigned window) {
  require_proper(ideal, "theorem_a_table");
  const auto d = static_cast<unsigned>(ideal.dim());
  auto row = [&ideal, k_max, window, d](unsigned m) {
    const MonomialIdeal pm = power(ideal, m);
    TheoremARow r;
    r.m = m;
    r.amao = amao(pm, saturate(pm), k_max, window);
    if (r.amao.conclusive())
      r.ratio = Rational(*r.amao.value, ipow(Integer(m), d));
    return r;
  };
  std::vector<std::future<TheoremARow>> pending;
  for (unsigned m = 1; m <= m_max; ++m)
    pending.push_back(std::async(std::launch::async, row, m));
  std::vector<TheoremARow> rows;
  for (auto& f : pending) rows.push_back(f.get());
  std::sort(rows.begin(), rows.end(),
            [](const TheoremARow& a, const TheoremARow& b) { return a.m < b.m; });
  return rows;
}

ContainmentCheck check_sat_power_containment(const MonomialIdeal& ideal,
                                             unsigned i_max) {
  const MonomialIdeal sat = saturate(ideal);
  MonomialIdeal sat_power = MonomialIdeal::unit(ideal.dim());
  MonomialIdeal plain_power = MonomialIdeal::unit(ideal.dim());
  for (unsigned i = 1; i <= i_max; ++i) {
    sat_power = product(sat_power, sat);
    plain_power = product(plain_power, ideal);
    if (!is_subideal(sat_power, saturate(plain_power))) return {false, i};
  }
  return {};
}

bool swanson_equality_holds(const MonomialIdeal& ideal, unsigned m, unsigned k,
                            unsigned c) {
  const MonomialIdeal band = power(MonomialIdeal::maximal(ideal.dim()), c * m * k);
  const MonomialIdeal lhs = intersect(power(ideal, m * k), band);
  const MonomialIdeal rhs = intersect(power(saturate(power(ideal, m)), k), band);
  return lhs == rhs;
}

SwansonResult swanson_c_search(const MonomialIdeal& ideal, unsigned c_max,
                               unsigned mk_bound) {
  require_proper(ideal, "swanson_c_search");
  SwansonResult result;
  result.mk_bound = mk_bound;

  std::vector<MonomialIdeal> powers{MonomialIdeal::unit(ideal.dim())};
  for (unsigned n = 1; n <= mk_bound; ++n)
    powers.push_back(product(powers.back(), ideal));

  for (unsigned m = 1; m <= mk_bound; ++m) {
    const MonomialIdeal sat = saturate(powers[m]);
    MonomialIdeal rhs = MonomialIdeal::unit(ideal.dim());
    for (unsigned k = 1; m * k <= mk_bound; ++k) {
      rhs = product(rhs, sat);
      const MonomialIdeal& lhs = powers[m * k];
      const auto top = top_degree_of_quotient(lhs, rhs);
      if (!top) continue;
      // smallest c with c m k > top
      const auto mk = static_cast<std::int64_t>(m) * k;
      const auto needed = static_cast<unsigned>(*top / mk + 1);
      if (needed > result.required_c) {
        result.required_c = needed;
        result.worst_m = m;
        result.worst_k = k;
      }
    }
  }
  if (result.required_c <= c_max) result.c = result.required_c;
  return result;
}

}  // namespace epsmult
