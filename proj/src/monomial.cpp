#include "chowcert/monomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "chowcert/errors.hpp"
#include "chowcert/parallel.hpp"

namespace chowcert {

Monomial::Monomial(std::vector<Int> exponents)
    : exponents_(std::move(exponents)) {
  if (exponents_.empty())
    throw config_error("monomial needs at least one variable");
  for (const Int& e : exponents_)
    if (e < 0)
      throw config_error("monomial exponents must be non-negative");
}

Int Monomial::total_degree() const {
  Int degree = 0;
  for (const Int& e : exponents_)
    degree += e;
  return degree;
}

bool Monomial::is_one() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const Int& e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  if (variables() != other.variables())
    return false;
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i])
      return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i)
    exps[i] += other.exponents_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::operator/(const Monomial& other) const {
  std::vector<Int> exps(exponents_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    exps[i] -= other.exponents_[i];
    if (exps[i] < 0)
      throw error("monomial quotient is not a monomial");
  }
  return Monomial(std::move(exps));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.exponents_.size() != b.exponents_.size())
    return a.exponents_.size() <=> b.exponents_.size();
  for (std::size_t i = 0; i < a.exponents_.size(); ++i) {
    const int c = cmp(a.exponents_[i], b.exponents_[i]);
    if (c != 0)
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (i)
      out << ",";
    out << exponents_[i];
  }
  out << ")";
  return out.str();
}

MonomialMap::MonomialMap(int ambient_vars, std::vector<Monomial> generators)
    : ambient_vars_(ambient_vars), generators_(std::move(generators)) {
  if (ambient_vars_ < 1)
    throw config_error("monomial map needs at least one ambient variable");
  if (generators_.empty())
    throw config_error("monomial map needs at least one generator");
  for (const Monomial& g : generators_)
    if (static_cast<int>(g.variables()) != ambient_vars_)
      throw config_error("generator arity does not match ambient variables");
  common_degree_ = generators_.front().total_degree();
  if (common_degree_ < 1)
    throw config_error("generators must have degree at least one");
  for (const Monomial& g : generators_)
    if (g.total_degree() != common_degree_)
      throw config_error("generators must share a common degree");
  std::set<Monomial> distinct(generators_.begin(), generators_.end());
  if (distinct.size() != generators_.size())
    throw config_error("generators must be distinct");
}

int MonomialMap::dimension() const {
  // rank over the rationals of {g_i - g_0}
  const std::size_t rows = generators_.size() - 1;
  const std::size_t cols = static_cast<std::size_t>(ambient_vars_);
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m[i][j] = Rat(generators_[i + 1].exponents()[j] -
                    generators_[0].exponents()[j]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0)
      ++pivot;
    if (pivot == rows)
      continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0)
        continue;
      const Rat factor = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] -= factor * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

WeightVector::WeightVector(std::vector<Rat> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty())
    throw config_error("weight vector must be nonempty");
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 0)
      throw config_error("weights must be non-negative");
    if (i > 0 && weights_[i] > weights_[i - 1])
      throw config_error("weights must be non-increasing");
  }
}

std::pair<WeightVector, std::vector<std::size_t>>
WeightVector::from_unsorted(std::vector<Rat> weights) {
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return weights[a] > weights[b];
                   });
  std::vector<Rat> sorted;
  sorted.reserve(weights.size());
  for (std::size_t i : order)
    sorted.push_back(weights[i]);
  return {WeightVector(std::move(sorted)), std::move(order)};
}

Rat WeightVector::sum() const {
  Rat total = 0;
  for (const Rat& w : weights_)
    total += w;
  return total;
}

Rat WeightVector::average() const {
  Rat total = sum();
  total /= Rat(static_cast<unsigned long>(weights_.size()));
  return total;
}

bool WeightVector::all_zero() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](const Rat& w) { return w == 0; });
}

WeightVector WeightVector::scaled(const Rat& factor) const {
  if (factor <= 0)
    throw config_error("weight scaling must be positive");
  std::vector<Rat> scaled;
  scaled.reserve(weights_.size());
  for (const Rat& w : weights_)
    scaled.push_back(w * factor);
  return WeightVector(std::move(scaled));
}

namespace {

void enumerate_products(const MonomialMap& map, std::size_t first_index,
                        int remaining, const Monomial& partial,
                        std::set<Monomial>& out) {
  if (remaining == 0) {
    out.insert(partial);
    return;
  }
  // non-decreasing generator index, so each multiset appears once
  for (std::size_t i = first_index; i < map.generator_count(); ++i)
    enumerate_products(map, i, remaining - 1, partial * map.generators()[i],
                       out);
}

using MemoKey = std::pair<std::vector<Int>, int>;

std::optional<Rat> min_weight_search(const MonomialMap& map,
                                     const WeightVector& weights,
                                     const Monomial& residual, int remaining,
                                     std::map<MemoKey, std::optional<Rat>>& memo) {
  if (remaining == 0)
    return residual.is_one() ? std::optional<Rat>(Rat(0)) : std::nullopt;
  MemoKey key(residual.exponents(), remaining);
  if (auto it = memo.find(key); it != memo.end())
    return it->second;
  std::optional<Rat> best;
  for (std::size_t i = 0; i < map.generator_count(); ++i) {
    const Monomial& g = map.generators()[i];
    if (!g.divides(residual))
      continue;
    auto rest = min_weight_search(map, weights, residual / g, remaining - 1, memo);
    if (!rest)
      continue;
    Rat candidate = weights[i] + *rest;
    if (!best || candidate < *best)
      best = candidate;
  }
  memo.emplace(std::move(key), best);
  return best;
}

} // namespace

std::vector<Monomial> image_basis(const MonomialMap& map, int m) {
  if (m < 1)
    throw config_error("graded piece index must be positive");
  std::set<Monomial> out;
  std::vector<Int> unit(static_cast<std::size_t>(map.ambient_vars()), 0);
  enumerate_products(map, 0, m, Monomial(std::move(unit)), out);
  return std::vector<Monomial>(out.begin(), out.end());
}

Rat min_weight(const MonomialMap& map, const WeightVector& weights,
               const Monomial& u, int m) {
  if (weights.size() != map.generator_count())
    throw config_error("weight count must match generator count");
  if (m < 1)
    throw config_error("graded piece index must be positive");
  std::map<MemoKey, std::optional<Rat>> memo;
  auto best = min_weight_search(map, weights, u, m, memo);
  if (!best)
    throw not_in_image_error("monomial " + u.to_string() +
                             " is not a product of " + std::to_string(m) +
                             " generators");
  return *best;
}

std::vector<GradedBasisElement> graded_basis(const MonomialMap& map,
                                             const WeightVector& weights,
                                             int m, int jobs) {
  const std::vector<Monomial> basis = image_basis(map, m);
  std::vector<GradedBasisElement> out;
  out.reserve(basis.size());
  for (const Monomial& u : basis)
    out.push_back(GradedBasisElement{u, Rat(0)});
  parallel_for(basis.size(), jobs, [&](std::size_t i) {
    out[i].min_weight = min_weight(map, weights, out[i].image, m);
  });
  return out;
}

Rat weight_sum(const MonomialMap& map, const WeightVector& weights, int m,
               int jobs) {
  Rat total = 0;
  for (const GradedBasisElement& e : graded_basis(map, weights, m, jobs))
    total += e.min_weight;
  return total;
}

Int hilbert_function(const MonomialMap& map, int m) {
  return Int(static_cast<unsigned long>(image_basis(map, m).size()));
}

std::size_t filtration_dim_below(const std::vector<GradedBasisElement>& basis,
                                 const Rat& threshold) {
  return static_cast<std::size_t>(
      std::count_if(basis.begin(), basis.end(), [&](const GradedBasisElement& e) {
        return e.min_weight < threshold;
      }));
}

std::size_t filtration_dim_at_most(const std::vector<GradedBasisElement>& basis,
                                   const Rat& threshold) {
  return static_cast<std::size_t>(
      std::count_if(basis.begin(), basis.end(), [&](const GradedBasisElement& e) {
        return e.min_weight <= threshold;
      }));
}

} // namespace chowcert
