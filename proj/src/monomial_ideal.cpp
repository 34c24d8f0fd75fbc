#include "epsmult/monomial_ideal.hpp"

#include <algorithm>
#include <numeric>

#include <nlohmann/json.hpp>

#include "epsmult/errors.hpp"

namespace epsmult {

ExponentVector::ExponentVector(std::initializer_list<Exponent> coords)
    : coords_(coords) {}

ExponentVector::ExponentVector(std::vector<Exponent> coords)
    : coords_(std::move(coords)) {}

std::int64_t ExponentVector::degree() const noexcept {
  return std::accumulate(coords_.begin(), coords_.end(), std::int64_t{0});
}

bool ExponentVector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](Exponent c) { return c == 0; });
}

bool ExponentVector::divides(const ExponentVector& other) const noexcept {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i] > other.coords_[i]) return false;
  return true;
}

ExponentVector& ExponentVector::operator+=(const ExponentVector& other) {
  if (other.size() != size())
    throw DimensionMismatch("exponent vectors of different length");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

ExponentVector monomial_quotient(const ExponentVector& a,
                                 const ExponentVector& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("exponent vectors of different length");
  ExponentVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = std::max<Exponent>(a[i] - b[i], 0);
  return out;
}

std::string to_string(const ExponentVector& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(e[i]);
  }
  return out + ")";
}

namespace detail {

void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b,
                      const char* op) {
  if (a.dim() != b.dim())
    throw DimensionMismatch(std::string(op) + ": ideals in dimensions " +
                            std::to_string(a.dim()) + " and " +
                            std::to_string(b.dim()));
}

}  // namespace detail

MonomialIdeal::MonomialIdeal(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
}

MonomialIdeal::MonomialIdeal(std::size_t dim,
                             std::vector<ExponentVector> generators)
    : MonomialIdeal(minimalize(std::move(generators), dim)) {}

MonomialIdeal MonomialIdeal::unit(std::size_t dim) {
  return MonomialIdeal(dim, {ExponentVector(dim)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t dim) {
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < dim; ++i) {
    ExponentVector e(dim);
    e[i] = 1;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal(dim, std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_zero();
}

bool MonomialIdeal::contains(const ExponentVector& e) const {
  if (e.size() != dim_)
    throw DimensionMismatch("membership test: vector of length " +
                            std::to_string(e.size()) + " in dimension " +
                            std::to_string(dim_));
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& g) { return g.divides(e); });
}

Exponent MonomialIdeal::max_exponent(std::size_t i) const noexcept {
  Exponent m = 0;
  for (const auto& g : gens_) m = std::max(m, g[i]);
  return m;
}

std::int64_t MonomialIdeal::max_degree() const noexcept {
  std::int64_t m = 0;
  for (const auto& g : gens_) m = std::max(m, g.degree());
  return m;
}

MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim) {
  if (dim == 0) throw PreconditionError("ambient dimension must be positive");
  for (const auto& g : gens) {
    if (g.size() != dim)
      throw DimensionMismatch("generator " + to_string(g) +
                              " does not have length " + std::to_string(dim));
    for (Exponent c : g)
      if (c < 0) throw PreconditionError("negative exponent in " + to_string(g));
  }

  // A divisor of g has degree <= deg g, so scanning by degree means every
  // candidate only needs testing against already-kept generators.
  std::vector<std::pair<std::int64_t, ExponentVector>> keyed;
  keyed.reserve(gens.size());
  for (auto& g : gens) {
    const auto deg = g.degree();
    keyed.emplace_back(deg, std::move(g));
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  std::vector<ExponentVector> kept;
  for (auto& [deg, g] : keyed) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(),
                    [&](const ExponentVector& k) { return k.divides(g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());
  return MonomialIdeal(MonomialIdeal::Normalized{}, dim, std::move(kept));
}

bool contains(const MonomialIdeal& ideal, const ExponentVector& e) {
  return ideal.contains(e);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b, "sum");
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(std::move(gens), a.dim());
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b, "product");
  std::vector<ExponentVector> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(g + h);
  return minimalize(std::move(gens), a.dim());
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.dim());
  MonomialIdeal base = ideal;
  while (n) {
    if (n & 1u) result = product(result, base);
    n >>= 1u;
    if (n) base = product(base, base);
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  detail::require_same_dim(a, b, "intersect");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<ExponentVector> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  return minimalize(std::move(gens), a.dim());
}

namespace {

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal,
                                const ExponentVector& g) {
  std::vector<ExponentVector> gens;
  gens.reserve(ideal.size());
  for (const auto& h : ideal.generators())
    gens.push_back(monomial_quotient(h, g));
  return minimalize(std::move(gens), ideal.dim());
}

}  // namespace

MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_dim(i, j, "colon");
  if (j.is_zero())
    throw PreconditionError("colon: quotient by the zero ideal");
  MonomialIdeal result = MonomialIdeal::unit(i.dim());
  for (const auto& g : j.generators()) {
    result = intersect(result, colon_by_monomial(i, g));
    if (result.is_zero()) break;
  }
  return result;
}

MonomialIdeal variable_saturate(const MonomialIdeal& ideal, std::size_t var) {
  if (var >= ideal.dim())
    throw DimensionMismatch("variable index out of range");
  std::vector<ExponentVector> gens = ideal.generators();
  for (auto& g : gens) g[var] = 0;
  return minimalize(std::move(gens), ideal.dim());
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  // x^e m^t is in I for large t iff every x^e x_i^t is.
  MonomialIdeal result = variable_saturate(ideal, 0);
  for (std::size_t i = 1; i < ideal.dim(); ++i)
    result = intersect(result, variable_saturate(ideal, i));
  return result;
}

MonomialIdeal saturate_by_colon(const MonomialIdeal& ideal,
                                std::size_t max_iterations) {
  const MonomialIdeal m = MonomialIdeal::maximal(ideal.dim());
  MonomialIdeal current = ideal;
  for (std::size_t step = 0; step < max_iterations; ++step) {
    MonomialIdeal next = colon(current, m);
    if (next == current) return current;
    current = std::move(next);
  }
  throw IterationLimitError("saturation did not stabilize within " +
                            std::to_string(max_iterations) + " colon steps");
}

bool is_subideal(const MonomialIdeal& i, const MonomialIdeal& j) {
  detail::require_same_dim(i, j, "is_subideal");
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [&](const ExponentVector& g) { return j.contains(g); });
}

std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  if (ideal.is_unit()) return "(1)";
  static const char* const kNames[] = {"x", "y", "z", "w"};
  const bool named = ideal.dim() <= 4;
  std::string out = "(";
  bool first_gen = true;
  for (const auto& g : ideal.generators()) {
    if (!first_gen) out += ", ";
    first_gen = false;
    bool first_var = true;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!first_var) out += '*';
      first_var = false;
      out += named ? std::string(kNames[i]) : "x" + std::to_string(i + 1);
      if (g[i] > 1) out += "^" + std::to_string(g[i]);
    }
  }
  return out + ")";
}

void to_json(nlohmann::json& j, const MonomialIdeal& ideal) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators())
    gens.push_back(std::vector<Exponent>(g.begin(), g.end()));
  j = nlohmann::json{{"dim", ideal.dim()}, {"generators", std::move(gens)}};
}

void from_json(const nlohmann::json& j, MonomialIdeal& ideal) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw ParseError("ideal JSON needs the keys \"dim\" and \"generators\"");
  const auto& dim_node = j.at("dim");
  if (!dim_node.is_number_integer() || dim_node.get<std::int64_t>() <= 0)
    throw ParseError("\"dim\" must be a positive integer");
  const auto dim = dim_node.get<std::size_t>();
  const auto& gens_node = j.at("generators");
  if (!gens_node.is_array()) throw ParseError("\"generators\" must be an array");
  std::vector<ExponentVector> gens;
  for (const auto& row : gens_node) {
    if (!row.is_array()) throw ParseError("each generator must be an array");
    std::vector<Exponent> coords;
    for (const auto& c : row) {
      if (!c.is_number_integer()) throw ParseError("exponents must be integers");
      coords.push_back(c.get<Exponent>());
    }
    gens.emplace_back(std::move(coords));
  }
  ideal = MonomialIdeal(dim, std::move(gens));
}

}  // namespace epsmult
