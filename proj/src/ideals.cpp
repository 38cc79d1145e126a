#include "chowcert/ideals.hpp"

#include <algorithm>
#include <set>

#include "chowcert/errors.hpp"
#include "chowcert/parallel.hpp"

namespace chowcert {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> generators) {
  std::sort(generators.begin(), generators.end(),
            [](const Monomial& a, const Monomial& b) {
              const Int da = a.total_degree(), db = b.total_degree();
              if (da != db)
                return da < db;
              return a < b;
            });
  std::vector<Monomial> minimal;
  for (const Monomial& g : generators) {
    bool redundant = false;
    for (const Monomial& kept : minimal)
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant)
      minimal.push_back(g);
  }
  return minimal;
}

} // namespace

MonomialIdeal::MonomialIdeal(int variables, std::vector<Monomial> generators)
    : variables_(variables) {
  if (variables_ < 1)
    throw config_error("ideal needs at least one variable");
  for (const Monomial& g : generators)
    if (static_cast<int>(g.variables()) != variables_)
      throw config_error("generator arity does not match the ring");
  generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
  for (const Monomial& g : generators_)
    if (g.divides(m))
      return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const Monomial& g : other.generators_)
    if (!contains(g))
      return false;
  return true;
}

bool MonomialIdeal::has_finite_colength() const {
  if (is_unit())
    return true;
  for (int v = 0; v < variables_; ++v) {
    bool pure_power = false;
    for (const Monomial& g : generators_) {
      bool pure = g.exponents()[static_cast<std::size_t>(v)] > 0;
      for (int u = 0; pure && u < variables_; ++u)
        if (u != v && g.exponents()[static_cast<std::size_t>(u)] != 0)
          pure = false;
      if (pure) {
        pure_power = true;
        break;
      }
    }
    if (!pure_power)
      return false;
  }
  return true;
}

MonomialIdeal MonomialIdeal::power(unsigned n) const {
  if (n == 0)
    return MonomialIdeal(
        variables_,
        {Monomial(std::vector<Int>(static_cast<std::size_t>(variables_), 0))});
  if (generators_.empty())
    return *this;
  // products of n generators with non-decreasing index
  std::vector<Monomial> products;
  std::vector<std::pair<std::size_t, Monomial>> frontier = {
      {0, Monomial(std::vector<Int>(static_cast<std::size_t>(variables_), 0))}};
  for (unsigned step = 0; step < n; ++step) {
    std::vector<std::pair<std::size_t, Monomial>> next;
    for (const auto& [first, partial] : frontier)
      for (std::size_t i = first; i < generators_.size(); ++i)
        next.emplace_back(i, partial * generators_[i]);
    frontier = std::move(next);
  }
  products.reserve(frontier.size());
  for (auto& [first, m] : frontier)
    products.push_back(std::move(m));
  return MonomialIdeal(variables_, std::move(products));
}

IdealChain::IdealChain(std::vector<MonomialIdeal> members)
    : members_(std::move(members)) {
  if (members_.empty())
    throw config_error("ideal chain must be nonempty");
  const int vars = members_.front().variables();
  for (const MonomialIdeal& ideal : members_)
    if (ideal.variables() != vars)
      throw config_error("chain members must share the ring");
  for (std::size_t i = 0; i + 1 < members_.size(); ++i)
    if (!members_[i + 1].contains(members_[i]))
      throw config_error("chain members must be increasing");
  if (!members_.back().is_unit())
    throw config_error("chain must end in the unit ideal");
}

std::size_t IdealChain::proper_count() const {
  std::size_t count = 0;
  for (const MonomialIdeal& ideal : members_)
    if (!ideal.is_unit())
      ++count;
  return count;
}

MonomialIdeal ReesIdeal::graded_ideal() const {
  const int vars = chain_.variables();
  std::vector<Monomial> generators;
  for (std::size_t level = 0; level < chain_.members().size(); ++level) {
    for (const Monomial& g : chain_.members()[level].generators()) {
      std::vector<Int> exps = g.exponents();
      exps.push_back(Int(static_cast<unsigned long>(level)));
      generators.emplace_back(std::move(exps));
    }
  }
  return MonomialIdeal(vars + 1, std::move(generators));
}

namespace {

// exclusive box bounds given by the least pure power of each variable
std::vector<unsigned long> colength_box(const MonomialIdeal& ideal) {
  const int vars = ideal.variables();
  std::vector<unsigned long> caps(static_cast<std::size_t>(vars), 0);
  std::vector<bool> seen(static_cast<std::size_t>(vars), false);
  for (const Monomial& g : ideal.generators()) {
    int nonzero = -1;
    bool pure = true;
    for (int v = 0; v < vars; ++v) {
      if (g.exponents()[static_cast<std::size_t>(v)] == 0)
        continue;
      if (nonzero >= 0) {
        pure = false;
        break;
      }
      nonzero = v;
    }
    if (!pure || nonzero < 0)
      continue;
    const Int& e = g.exponents()[static_cast<std::size_t>(nonzero)];
    if (!e.fits_ulong_p())
      throw error("pure power exponent too large for colength enumeration");
    const unsigned long cap = e.get_ui();
    auto& slot = caps[static_cast<std::size_t>(nonzero)];
    if (!seen[static_cast<std::size_t>(nonzero)] || cap < slot) {
      slot = cap;
      seen[static_cast<std::size_t>(nonzero)] = true;
    }
  }
  for (int v = 0; v < vars; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw infinite_colength_error(
          "ideal misses a pure power of variable " + std::to_string(v));
  return caps;
}

} // namespace

Int colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit())
    return 0;
  if (ideal.is_zero())
    throw infinite_colength_error("zero ideal has infinite colength");
  const std::vector<unsigned long> caps = colength_box(ideal);
  double volume = 1;
  for (unsigned long c : caps)
    volume *= static_cast<double>(std::max<unsigned long>(c, 1));
  if (volume > 5e8)
    throw error("colength enumeration box too large");
  // count standard monomials by walking the box below the pure powers
  const std::size_t vars = caps.size();
  std::vector<Int> point(vars, 0);
  Int count = 0;
  for (;;) {
    if (!ideal.contains(Monomial(point)))
      ++count;
    std::size_t v = 0;
    while (v < vars) {
      point[v] += 1;
      if (point[v] < static_cast<long>(caps[v]))
        break;
      point[v] = 0;
      ++v;
    }
    if (v == vars)
      break;
  }
  return count;
}

namespace {

Int stabilized_difference(const std::vector<Int>& values, int order,
                          bool& stabilized) {
  std::vector<Int> diffs = values;
  for (int k = 0; k < order; ++k)
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
  const std::size_t count = values.size() - static_cast<std::size_t>(order);
  stabilized = count >= 2 && diffs[count - 1] == diffs[count - 2];
  return diffs[count - 1];
}

} // namespace

Int multiplicity(const MonomialIdeal& ideal, unsigned max_power, int jobs) {
  if (ideal.is_unit())
    throw config_error("multiplicity of the unit ideal is undefined");
  if (!ideal.has_finite_colength())
    throw infinite_colength_error("multiplicity needs finite colength");
  const int order = ideal.variables();
  std::vector<Int> colengths; // colengths[n-1] = colength(I^n)
  auto extend_to = [&](unsigned target) {
    const std::size_t old = colengths.size();
    if (target <= old)
      return;
    colengths.resize(target);
    parallel_for(target - old, jobs, [&](std::size_t i) {
      colengths[old + i] =
          colength(ideal.power(static_cast<unsigned>(old + i) + 1));
    });
  };
  unsigned target = static_cast<unsigned>(order) + 2;
  for (;;) {
    if (target > max_power)
      target = max_power;
    extend_to(target);
    if (colengths.size() >= static_cast<std::size_t>(order) + 2) {
      bool stabilized = false;
      const Int value = stabilized_difference(colengths, order, stabilized);
      if (stabilized)
        return value;
    }
    if (target >= max_power)
      throw not_stabilized_error(
          "power colengths did not stabilize by power " +
          std::to_string(max_power));
    target += 2;
  }
}

Rat flat_ratio(const MonomialIdeal& ideal, unsigned max_power, int jobs) {
  const Int e = multiplicity(ideal, max_power, jobs);
  const Int col = colength(ideal);
  return frac(e, factorial(static_cast<unsigned long>(ideal.variables())) * col);
}

Int rees_colength(const ReesIdeal& rees) {
  Int total = 0;
  for (const MonomialIdeal& ideal : rees.chain().members()) {
    if (ideal.is_unit())
      continue;
    if (!ideal.has_finite_colength())
      throw infinite_colength_error("chain member has infinite colength");
    total += colength(ideal);
  }
  return total;
}

Int rees_multiplicity(const ReesIdeal& rees, unsigned max_power, int jobs) {
  if (rees.chain().members().front().is_unit())
    throw config_error(
        "chain starting at the unit ideal has a degenerate graded ideal");
  for (const MonomialIdeal& ideal : rees.chain().members())
    if (!ideal.is_unit() && !ideal.has_finite_colength())
      throw infinite_colength_error("chain member has infinite colength");
  return multiplicity(rees.graded_ideal(), max_power, jobs);
}

Rat rees_excess(const ReesIdeal& rees, int dimension, unsigned max_power,
                int jobs) {
  if (dimension < 1)
    throw config_error("dimension must be positive");
  if (rees.chain().variables() != dimension)
    throw config_error("chain ring must match the variety dimension");
  const Int e = rees_multiplicity(rees, max_power, jobs);
  const Int col = rees_colength(rees);
  return frac(e, factorial(static_cast<unsigned long>(dimension) + 1) * col) - 1;
}

InducedWeights induced_weights(
    const IdealChain& chain,
    const std::vector<std::pair<std::size_t, int>>& least_membership) {
  const int max_level = static_cast<int>(chain.members().size()) - 1;
  std::vector<Rat> weights(least_membership.size(), Rat(0));
  std::vector<bool> seen(least_membership.size(), false);
  for (const auto& [index, level] : least_membership) {
    if (index >= weights.size())
      throw config_error("basis index out of range");
    if (seen[index])
      throw config_error("duplicate basis index");
    if (level < 0 || level > max_level)
      throw config_error("membership level outside the chain");
    seen[index] = true;
    weights[index] = Rat(static_cast<long>(level));
  }
  auto [sorted, order] = WeightVector::from_unsorted(std::move(weights));
  return InducedWeights{std::move(sorted), std::move(order)};
}

std::vector<MonomialIdeal>
enumerate_finite_colength_ideals(int variables, unsigned max_degree) {
  if (variables < 1)
    throw config_error("need at least one variable");
  // all monomials of total degree 1..max_degree
  std::vector<Monomial> pool;
  std::vector<Int> point(static_cast<std::size_t>(variables), 0);
  for (;;) {
    std::size_t v = 0;
    while (v < point.size()) {
      point[v] += 1;
      Int degree = 0;
      for (const Int& e : point)
        degree += e;
      if (degree <= static_cast<long>(max_degree))
        break;
      point[v] = 0;
      ++v;
    }
    if (v == point.size())
      break;
    pool.emplace_back(point);
  }
  if (pool.size() > 20)
    throw error("ideal enumeration pool too large");
  std::set<std::vector<Monomial>> seen;
  std::vector<MonomialIdeal> out;
  for (std::size_t mask = 1; mask < (std::size_t(1) << pool.size()); ++mask) {
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (mask & (std::size_t(1) << i))
        gens.push_back(pool[i]);
    MonomialIdeal ideal(variables, std::move(gens));
    if (!ideal.has_finite_colength())
      continue;
    if (seen.insert(ideal.generators()).second)
      out.push_back(std::move(ideal));
  }
  return out;
}

Rat flat_multiplicity_lower_bound(int variables, unsigned max_degree,
                                  unsigned max_power, int jobs) {
  const auto ideals = enumerate_finite_colength_ideals(variables, max_degree);
  if (ideals.empty())
    throw config_error("no finite-colength ideals within the degree bound");
  std::vector<Rat> ratios(ideals.size());
  parallel_for(ideals.size(), jobs, [&](std::size_t i) {
    ratios[i] = flat_ratio(ideals[i], max_power, 1);
  });
  return *std::max_element(ratios.begin(), ratios.end());
}

} // namespace chowcert
