#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "epsmult/numeric.hpp"

namespace epsmult {

/// Exponent of a monomial x_1^{e_1} ... x_d^{e_d}; a point of N^d.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::size_t dim) : coords_(dim, 0) {}
  ExponentVector(std::initializer_list<Exponent> coords);
  explicit ExponentVector(std::vector<Exponent> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  Exponent operator[](std::size_t i) const { return coords_[i]; }
  Exponent& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }
  std::span<const Exponent> coords() const noexcept { return coords_; }

  /// Total degree e_1 + ... + e_d.
  std::int64_t degree() const noexcept;
  bool is_zero() const noexcept;

  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExponentVector& other) const noexcept;

  ExponentVector& operator+=(const ExponentVector& other);
  friend ExponentVector operator+(ExponentVector a, const ExponentVector& b) {
    a += b;
    return a;
  }

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;
  /// Lexicographic.
  friend auto operator<=>(const ExponentVector& a, const ExponentVector& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  std::vector<Exponent> coords_;
};

/// Componentwise maximum: the exponent of lcm(x^a, x^b).
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// Componentwise max(a - b, 0): the generator of (x^a) : (x^b).
ExponentVector monomial_quotient(const ExponentVector& a,
                                 const ExponentVector& b);

std::string to_string(const ExponentVector& e);

/// A monomial ideal in k[x_1..x_d], stored by its minimal generators in
/// lexicographic order. The zero ideal has no generators; the unit ideal has
/// the single generator 0.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dim = 1);

  /// Minimalizes `generators`. Throws DimensionMismatch if a vector has the
  /// wrong length and PreconditionError on negative entries or dim == 0.
  MonomialIdeal(std::size_t dim, std::vector<ExponentVector> generators);

  static MonomialIdeal zero(std::size_t dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(std::size_t dim);
  /// (x_1, ..., x_d)
  static MonomialIdeal maximal(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<ExponentVector>& generators() const noexcept {
    return gens_;
  }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  /// True iff x^e lies in the ideal.
  bool contains(const ExponentVector& e) const;

  /// Largest exponent of variable i over the generators (0 for the zero ideal).
  Exponent max_exponent(std::size_t i) const noexcept;
  /// Largest total degree over the generators.
  std::int64_t max_degree() const noexcept;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  struct Normalized {};
  MonomialIdeal(Normalized, std::size_t dim, std::vector<ExponentVector> gens)
      : dim_(dim), gens_(std::move(gens)) {}

  friend MonomialIdeal minimalize(std::vector<ExponentVector>, std::size_t);

  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// Antichain of componentwise-minimal elements, sorted lexicographically.
MonomialIdeal minimalize(std::vector<ExponentVector> gens, std::size_t dim);

bool contains(const MonomialIdeal& ideal, const ExponentVector& e);

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
/// Binary exponentiation; power(I, 0) is the unit ideal.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// I : J. Throws PreconditionError when J is the zero ideal.
MonomialIdeal colon(const MonomialIdeal& i, const MonomialIdeal& j);

/// I : x_var^infinity; generators with coordinate `var` cleared.
MonomialIdeal variable_saturate(const MonomialIdeal& ideal, std::size_t var);

/// I : m^infinity with m = (x_1, ..., x_d), computed as the intersection of
/// the d variable saturations.
MonomialIdeal saturate(const MonomialIdeal& ideal);

/// I : m^infinity by iterating J <- J : m to a fixed point. Slower than
/// saturate(); kept as an independent route. Throws IterationLimitError if
/// the chain has not stabilized after `max_iterations` steps.
MonomialIdeal saturate_by_colon(const MonomialIdeal& ideal,
                                std::size_t max_iterations = 100000);

/// I subset-of J.
bool is_subideal(const MonomialIdeal& i, const MonomialIdeal& j);

/// "(x^2, x*y)" style rendering for d <= 4, x1..xd otherwise.
std::string to_string(const MonomialIdeal& ideal);

void to_json(nlohmann::json& j, const MonomialIdeal& ideal);
void from_json(const nlohmann::json& j, MonomialIdeal& ideal);

namespace detail {
void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b,
                      const char* op);
}

}  // namespace epsmult
