#ifndef CHOWCERT_ASYMPTOTICS_HPP
#define CHOWCERT_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "chowcert/monomial.hpp"
#include "chowcert/rational.hpp"

namespace chowcert {

struct ProfileSample {
  int m = 0;
  Rat weight;
  Int h0;
};

/// The exact sequence m -> (total minimal weight, graded dimension) from
/// which the asymptotic invariants are extracted.
class FiltrationProfile {
public:
  FiltrationProfile(int dimension, std::vector<ProfileSample> samples);

  int dimension() const { return dimension_; }
  const std::vector<ProfileSample>& samples() const { return samples_; }
  const ProfileSample& sample_at(int m) const;

  std::vector<Rat> weight_sequence() const;
  std::vector<Rat> h0_sequence() const;

private:
  int dimension_;
  std::vector<ProfileSample> samples_;
};

/// Cumulative distribution of normalized weights w/m across a graded basis.
struct DensityJump {
  Rat x;          // normalized weight
  Rat cumulative; // mass of elements with normalized weight <= x
};

struct DensitySummary {
  int m = 0;
  std::vector<DensityJump> jumps;
  Rat mean() const;
};

struct AsymptoticInvariants {
  Rat contact_degree;    // (d+1)! times the leading coefficient of the weights
  Rat degree;            // d! times the leading coefficient of the dimensions
  int dimension = 0;
  Rat mean_weight_limit; // contact_degree / ((d+1) * degree)
  bool stabilized = false;
};

struct DifferenceResult {
  Rat coefficient;
  bool stabilized = false;
};

struct StabilityVerdict {
  bool semistable = false;
  Rat margin; // flag average minus the limit mean weight
};

struct DestabilizingFlag {
  WeightVector weights;
  Rat margin;
};

/// Mean of the normalized weight distribution at degree m:
/// weight_sum / (m * h0).
Rat expected_value(const FiltrationProfile& profile, int m);

DensitySummary density_summary(const std::vector<GradedBasisElement>& basis,
                               int m);

/// Order-th forward difference at the end of the sequence. When the sequence
/// is eventually polynomial of degree `order`, this equals order! times its
/// leading coefficient; `stabilized` reports whether the last two such
/// differences agree.
DifferenceResult leading_coefficient(const std::vector<Rat>& values, int order);

AsymptoticInvariants asymptotic_invariants(const FiltrationProfile& profile);

/// Chow semistability of the flag: compares the average weight against the
/// limit mean weight. Requires stabilized invariants.
StabilityVerdict chow_semistable(const AsymptoticInvariants& invariants,
                                 const WeightVector& weights);

/// Profile of a monomial map for m = 1..m_max.
FiltrationProfile build_profile(const MonomialMap& map,
                                const WeightVector& weights, int m_max,
                                int jobs = 1);

/// Scans non-increasing integer weight vectors with entries <= weight_bound
/// (primitive ones only) in ascending lexicographic order and returns the
/// first Chow-unstable flag with stabilized invariants, if any.
std::optional<DestabilizingFlag>
find_destabilizing_weights(const MonomialMap& map, unsigned weight_bound,
                           int m_max, int jobs = 1);

} // namespace chowcert

#endif
