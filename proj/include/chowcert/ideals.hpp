#ifndef CHOWCERT_IDEALS_HPP
#define CHOWCERT_IDEALS_HPP

#include <utility>
#include <vector>

#include "chowcert/monomial.hpp"
#include "chowcert/rational.hpp"

namespace chowcert {

/// A monomial ideal in a power-series ring, held by its minimal generators
/// (sorted, with redundant generators removed).
class MonomialIdeal {
public:
  MonomialIdeal(int variables, std::vector<Monomial> generators);

  int variables() const { return variables_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;
  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;
  bool has_finite_colength() const;

  MonomialIdeal power(unsigned n) const;

private:
  int variables_;
  std::vector<Monomial> generators_;
};

/// An increasing chain of monomial ideals ending in the unit ideal.
class IdealChain {
public:
  explicit IdealChain(std::vector<MonomialIdeal> members);

  int variables() const { return members_.front().variables(); }
  const std::vector<MonomialIdeal>& members() const { return members_; }
  // number of proper (non-unit) members
  std::size_t proper_count() const;

private:
  std::vector<MonomialIdeal> members_;
};

/// The graded ideal of a chain in one extra variable: the degree-i piece is
/// the i-th chain member (the full ring beyond the end of the chain).
class ReesIdeal {
public:
  explicit ReesIdeal(IdealChain chain) : chain_(std::move(chain)) {}

  const IdealChain& chain() const { return chain_; }

  /// The corresponding monomial ideal in variables() + 1 variables, the new
  /// variable last.
  MonomialIdeal graded_ideal() const;

private:
  IdealChain chain_;
};

/// Number of monomials outside the ideal. Throws infinite_colength_error
/// when unbounded.
Int colength(const MonomialIdeal& ideal);

/// Hilbert-Samuel multiplicity: r! times the leading coefficient of
/// n -> colength(I^n), found by exact finite differences. Powers are
/// extended until two consecutive order-r differences agree; past `max_power`
/// a not_stabilized_error is thrown.
Int multiplicity(const MonomialIdeal& ideal, unsigned max_power = 12,
                 int jobs = 1);

/// multiplicity / (r! * colength); at most 1 for ideals in a regular ring.
Rat flat_ratio(const MonomialIdeal& ideal, unsigned max_power = 12,
               int jobs = 1);

/// Colength of the graded ideal: the sum of the colengths of the proper
/// chain members.
Int rees_colength(const ReesIdeal& rees);

/// Multiplicity of the graded ideal in one more variable.
Int rees_multiplicity(const ReesIdeal& rees, unsigned max_power = 12,
                      int jobs = 1);

/// Ratio rees_multiplicity / ((dim+1)! * rees_colength) minus one: positive
/// values witness an unstable local ring.
Rat rees_excess(const ReesIdeal& rees, int dimension, unsigned max_power = 12,
                int jobs = 1);

struct InducedWeights {
  WeightVector weights;
  std::vector<std::size_t> order; // order[k] = original index of k-th weight
};

/// Weights induced by a chain filtration: element i gets the least chain
/// index j whose member contains its residue; the pairs are
/// (element index, least such j).
InducedWeights induced_weights(const IdealChain& chain,
                               const std::vector<std::pair<std::size_t, int>>&
                                   least_membership);

/// All distinct finite-colength monomial ideals whose minimal generators
/// have total degree between 1 and max_degree.
std::vector<MonomialIdeal>
enumerate_finite_colength_ideals(int variables, unsigned max_degree);

/// Best flat ratio over the ideals enumerated above: a lower bound for the
/// flat multiplicity of the base ring, not the supremum itself.
Rat flat_multiplicity_lower_bound(int variables, unsigned max_degree,
                                  unsigned max_power = 12, int jobs = 1);

} // namespace chowcert

#endif
