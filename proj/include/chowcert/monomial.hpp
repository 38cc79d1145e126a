#ifndef CHOWCERT_MONOMIAL_HPP
#define CHOWCERT_MONOMIAL_HPP

#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "chowcert/rational.hpp"

namespace chowcert {

/// A monomial in a fixed set of variables, stored as its exponent vector.
class Monomial {
public:
  explicit Monomial(std::vector<Int> exponents);

  const std::vector<Int>& exponents() const { return exponents_; }
  std::size_t variables() const { return exponents_.size(); }
  Int total_degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // quotient; requires other.divides(*this)
  Monomial operator/(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exponents_ == b.exponents_;
  }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

private:
  std::vector<Int> exponents_;
};

/// A parametrization of a projective variety by monomials of a common degree:
/// the generators are the coordinates of the map, and the image sits in the
/// projective space with one coordinate per generator.
class MonomialMap {
public:
  MonomialMap(int ambient_vars, std::vector<Monomial> generators);

  int ambient_vars() const { return ambient_vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  // index of the target projective space, one less than the generator count
  int coordinate_index() const {
    return static_cast<int>(generators_.size()) - 1;
  }
  const Int& common_degree() const { return common_degree_; }

  /// Dimension of the image: the rank of the lattice spanned by differences
  /// of generator exponent vectors.
  int dimension() const;

private:
  int ambient_vars_;
  std::vector<Monomial> generators_;
  Int common_degree_;
};

/// Non-negative, non-increasing exact weights, one per map generator.
class WeightVector {
public:
  explicit WeightVector(std::vector<Rat> weights);

  /// Sorts into non-increasing order; `order[k]` is the original index of the
  /// k-th sorted weight.
  static std::pair<WeightVector, std::vector<std::size_t>>
  from_unsorted(std::vector<Rat> weights);

  const std::vector<Rat>& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rat& operator[](std::size_t i) const { return weights_[i]; }
  Rat sum() const;
  Rat average() const;
  bool all_zero() const;

  WeightVector scaled(const Rat& factor) const;

  friend bool operator==(const WeightVector& a, const WeightVector& b) {
    return a.weights_ == b.weights_;
  }

private:
  std::vector<Rat> weights_;
};

/// One element of the monomial basis of a graded piece, together with the
/// minimal weight over its factorizations into generators.
struct GradedBasisElement {
  Monomial image;
  Rat min_weight;
};

/// The monomial basis of the degree-m graded piece of the subalgebra
/// generated by the map: all products of exactly m generators, deduplicated,
/// in ascending lexicographic order.
std::vector<Monomial> image_basis(const MonomialMap& map, int m);

/// Minimal total weight over all factorizations of `u` into exactly m
/// generators. Throws not_in_image_error when no factorization exists.
Rat min_weight(const MonomialMap& map, const WeightVector& weights,
               const Monomial& u, int m);

/// Basis of the degree-m piece with per-element minimal weights.
std::vector<GradedBasisElement> graded_basis(const MonomialMap& map,
                                             const WeightVector& weights,
                                             int m, int jobs = 1);

/// Total minimal weight of the degree-m piece: the least weight any basis of
/// generator monomials can have.
Rat weight_sum(const MonomialMap& map, const WeightVector& weights, int m,
               int jobs = 1);

/// Number of basis monomials in the degree-m piece.
Int hilbert_function(const MonomialMap& map, int m);

// The weight filtration admits two readings, with elements of weight
// strictly below a threshold or at most the threshold; both are provided.
std::size_t filtration_dim_below(const std::vector<GradedBasisElement>& basis,
                                 const Rat& threshold);
std::size_t filtration_dim_at_most(const std::vector<GradedBasisElement>& basis,
                                   const Rat& threshold);

} // namespace chowcert

#endif
