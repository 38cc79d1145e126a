#include "chowcert/asymptotics.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "chowcert/errors.hpp"
#include "chowcert/parallel.hpp"

namespace chowcert {

FiltrationProfile::FiltrationProfile(int dimension,
                                     std::vector<ProfileSample> samples)
    : dimension_(dimension), samples_(std::move(samples)) {
  if (dimension_ < 0)
    throw config_error("profile dimension must be non-negative");
  if (samples_.empty())
    throw config_error("profile must have at least one sample");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    const ProfileSample& s = samples_[i];
    if (s.m < 1)
      throw config_error("sample degrees must be positive");
    if (s.weight < 0)
      throw config_error("sample weights must be non-negative");
    if (s.h0 < 1)
      throw config_error("sample dimensions must be positive");
    if (i > 0) {
      const ProfileSample& prev = samples_[i - 1];
      if (s.m != prev.m + 1)
        throw config_error("sample degrees must be consecutive");
      if (s.weight < prev.weight)
        throw config_error("sample weights must be non-decreasing");
      if (dimension_ >= 1 && s.h0 <= prev.h0)
        throw config_error("sample dimensions must be strictly increasing");
    }
  }
}

const ProfileSample& FiltrationProfile::sample_at(int m) const {
  for (const ProfileSample& s : samples_)
    if (s.m == m)
      return s;
  throw missing_sample_error("no sample at degree " + std::to_string(m));
}

std::vector<Rat> FiltrationProfile::weight_sequence() const {
  std::vector<Rat> out;
  out.reserve(samples_.size());
  for (const ProfileSample& s : samples_)
    out.push_back(s.weight);
  return out;
}

std::vector<Rat> FiltrationProfile::h0_sequence() const {
  std::vector<Rat> out;
  out.reserve(samples_.size());
  for (const ProfileSample& s : samples_)
    out.push_back(Rat(s.h0));
  return out;
}

Rat DensitySummary::mean() const {
  Rat mean = 0;
  Rat previous = 0;
  for (const DensityJump& j : jumps) {
    mean += j.x * (j.cumulative - previous);
    previous = j.cumulative;
  }
  return mean;
}

Rat expected_value(const FiltrationProfile& profile, int m) {
  const ProfileSample& s = profile.sample_at(m);
  Rat denom = Rat(static_cast<long>(m)) * Rat(s.h0);
  return s.weight / denom;
}

DensitySummary density_summary(const std::vector<GradedBasisElement>& basis,
                               int m) {
  if (basis.empty())
    throw config_error("density needs a nonempty basis");
  if (m < 1)
    throw config_error("graded piece index must be positive");
  std::map<Rat, unsigned long> counts;
  for (const GradedBasisElement& e : basis)
    counts[e.min_weight / Rat(static_cast<long>(m))] += 1;
  DensitySummary summary;
  summary.m = m;
  const Rat total(static_cast<unsigned long>(basis.size()));
  Rat cumulative = 0;
  for (const auto& [x, count] : counts) {
    cumulative += Rat(count) / total;
    summary.jumps.push_back(DensityJump{x, cumulative});
  }
  return summary;
}

DifferenceResult leading_coefficient(const std::vector<Rat>& values,
                                     int order) {
  if (order < 0)
    throw config_error("difference order must be non-negative");
  if (values.size() < static_cast<std::size_t>(order) + 2)
    throw insufficient_samples_error(
        "need at least " + std::to_string(order + 2) +
        " consecutive samples for order " + std::to_string(order));
  std::vector<Rat> diffs = values;
  for (int k = 0; k < order; ++k)
    for (std::size_t i = 0; i + 1 < diffs.size(); ++i)
      diffs[i] = diffs[i + 1] - diffs[i];
  // after order passes the first size-order entries hold the differences
  const std::size_t count = values.size() - static_cast<std::size_t>(order);
  DifferenceResult result;
  result.coefficient = diffs[count - 1];
  result.stabilized = diffs[count - 1] == diffs[count - 2];
  return result;
}

AsymptoticInvariants asymptotic_invariants(const FiltrationProfile& profile) {
  const int d = profile.dimension();
  if (profile.samples().size() < static_cast<std::size_t>(d) + 3)
    throw insufficient_samples_error(
        "profile needs at least " + std::to_string(d + 3) +
        " samples in dimension " + std::to_string(d));
  const DifferenceResult contact =
      leading_coefficient(profile.weight_sequence(), d + 1);
  const DifferenceResult degree =
      leading_coefficient(profile.h0_sequence(), d);
  AsymptoticInvariants out;
  out.contact_degree = contact.coefficient;
  out.degree = degree.coefficient;
  out.dimension = d;
  if (out.degree > 0)
    out.mean_weight_limit =
        out.contact_degree / (Rat(static_cast<long>(d) + 1) * out.degree);
  out.stabilized = contact.stabilized && degree.stabilized;
  return out;
}

StabilityVerdict chow_semistable(const AsymptoticInvariants& invariants,
                                 const WeightVector& weights) {
  if (!invariants.stabilized)
    throw not_stabilized_error(
        "semistability requires stabilized invariants; extend m_max");
  StabilityVerdict verdict;
  verdict.margin = weights.average() - invariants.mean_weight_limit;
  verdict.semistable = verdict.margin >= 0;
  return verdict;
}

FiltrationProfile build_profile(const MonomialMap& map,
                                const WeightVector& weights, int m_max,
                                int jobs) {
  if (m_max < 1)
    throw config_error("m_max must be positive");
  std::vector<ProfileSample> samples;
  samples.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m) {
    ProfileSample s;
    s.m = m;
    Rat total = 0;
    const auto basis = graded_basis(map, weights, m, jobs);
    for (const GradedBasisElement& e : basis)
      total += e.min_weight;
    s.weight = total;
    s.h0 = Int(static_cast<unsigned long>(basis.size()));
    samples.push_back(std::move(s));
  }
  return FiltrationProfile(map.dimension(), std::move(samples));
}

namespace {

// non-increasing vectors over {0..bound}, ascending lexicographic order
void enumerate_flags(std::vector<unsigned>& prefix, std::size_t length,
                     unsigned bound,
                     std::vector<std::vector<unsigned>>& out) {
  if (prefix.size() == length) {
    out.push_back(prefix);
    return;
  }
  const unsigned cap = prefix.empty() ? bound : prefix.back();
  for (unsigned value = 0; value <= cap; ++value) {
    prefix.push_back(value);
    enumerate_flags(prefix, length, bound, out);
    prefix.pop_back();
  }
}

bool is_primitive(const std::vector<unsigned>& values) {
  unsigned long g = 0;
  for (unsigned v : values)
    g = std::gcd(g, static_cast<unsigned long>(v));
  return g == 1;
}

} // namespace

std::optional<DestabilizingFlag>
find_destabilizing_weights(const MonomialMap& map, unsigned weight_bound,
                           int m_max, int jobs) {
  const int d = map.dimension();
  if (m_max < d + 3)
    throw config_error("m_max must be at least dimension + 3");

  std::vector<std::vector<unsigned>> raw;
  {
    std::vector<unsigned> prefix;
    enumerate_flags(prefix, map.generator_count(), weight_bound, raw);
  }
  std::vector<WeightVector> candidates;
  for (const auto& flag : raw) {
    if (!is_primitive(flag))
      continue; // scalar multiples carry the same verdict
    std::vector<Rat> weights;
    weights.reserve(flag.size());
    for (unsigned v : flag)
      weights.emplace_back(static_cast<unsigned long>(v));
    candidates.emplace_back(std::move(weights));
  }

  // the bases do not depend on the weights
  std::vector<std::vector<Monomial>> bases;
  bases.reserve(static_cast<std::size_t>(m_max));
  for (int m = 1; m <= m_max; ++m)
    bases.push_back(image_basis(map, m));

  auto evaluate = [&](const WeightVector& weights) -> std::optional<Rat> {
    std::vector<ProfileSample> samples;
    for (int m = 1; m <= m_max; ++m) {
      ProfileSample s;
      s.m = m;
      Rat total = 0;
      for (const Monomial& u : bases[static_cast<std::size_t>(m - 1)])
        total += min_weight(map, weights, u, m);
      s.weight = total;
      s.h0 = Int(
          static_cast<unsigned long>(bases[static_cast<std::size_t>(m - 1)].size()));
      samples.push_back(std::move(s));
    }
    const auto invariants =
        asymptotic_invariants(FiltrationProfile(d, std::move(samples)));
    if (!invariants.stabilized)
      return std::nullopt;
    const auto verdict = chow_semistable(invariants, weights);
    if (verdict.semistable)
      return std::nullopt;
    return verdict.margin;
  };

  // evaluate in blocks; results are inspected in candidate order, so the
  // first hit is independent of the thread count
  const std::size_t block = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                         std::max(jobs, 1)) * 4);
  for (std::size_t begin = 0; begin < candidates.size(); begin += block) {
    const std::size_t end = std::min(candidates.size(), begin + block);
    std::vector<std::optional<Rat>> results(end - begin);
    parallel_for(end - begin, jobs, [&](std::size_t i) {
      results[i] = evaluate(candidates[begin + i]);
    });
    for (std::size_t i = 0; i < results.size(); ++i)
      if (results[i])
        return DestabilizingFlag{candidates[begin + i], *results[i]};
  }
  return std::nullopt;
}

} // namespace chowcert
