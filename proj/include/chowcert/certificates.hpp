#ifndef CHOWCERT_CERTIFICATES_HPP
#define CHOWCERT_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowcert/blowup.hpp"
#include "chowcert/ideals.hpp"
#include "chowcert/rational.hpp"
#include "chowcert/surfaces.hpp"

namespace chowcert {

/// Outcome of one threshold inequality: exact sides, exact margin, and a
/// strict verdict. Certificates carry their unverified hypotheses along as
/// assumption strings; a certificate with assumptions is conditional.
struct Certificate {
  std::string theorem_id;
  std::vector<std::pair<std::string, std::string>> inputs;
  Rat lhs;
  Rat rhs;
  Rat margin; // equals lhs - rhs except where several inequalities combine
  bool pass = false;
  std::string formula;
  std::vector<std::string> assumptions;
  std::vector<std::string> warnings;
  std::optional<Rat> schmidt_baseline;
};

/// Core applicability condition: the per-place limit mean weights, each
/// divided by its scaling, must sum to more than one. The excess is the
/// margin; an excess of one or more is kept but flagged.
Certificate certify_fw(const std::vector<Rat>& mean_limits,
                       const std::vector<Rat>& scalings);

/// Point condition: mult * sum(k_v/d_v) > (dim + 1) deg.
Certificate certify_local_point(const Int& mult, int dim, const Int& deg,
                                const std::vector<Rat>& ks,
                                const std::vector<Rat>& ds);

/// Chain condition, verbatim: sum_v sum_i r_{v,i}/d_v > deg / (dim + 1)!.
Certificate certify_local_chain(
    const std::vector<std::vector<Rat>>& weights_per_place,
    const std::vector<Rat>& ds, const Rat& deg, int dim);

/// Chain condition routed through the graded-ideal multiplicity: per place,
/// the limit mean weight is rees_multiplicity / ((dim+1) deg), and the core
/// condition is applied to those values. The per-place excess ratios are
/// echoed on the certificate.
Certificate certify_local_chain_normalized(const std::vector<IdealChain>& chains,
                                           const std::vector<Rat>& ds,
                                           const Rat& deg, int dim,
                                           unsigned max_power = 12,
                                           int jobs = 1);

/// Threshold for the cubic ruled surface in four-space: sum(k_v/d_v) > 9/4,
/// with the ambient-space baseline 5/2 attached.
Certificate certify_steiner(const std::vector<Rat>& ks,
                            const std::vector<Rat>& ds);

/// Ruled-surface condition: contact * sum(1/d_v) > 3 D.D, conditional on
/// the vanishing of higher cohomology of D - jS.
Certificate certify_ruled(const RuledSurfaceData& data,
                          const std::vector<Rat>& ds);

/// Bundle-unstable ruled surface: requires deg E < 2 deg L and combines
///   b + (a/2)(deg E - 2 deg L) > 2g - 2   and
///   sum(1/d_v) > 3b / (a(b + g - 1)).
/// The margin is the smaller of the two inequality margins.
Certificate certify_bundle_unstable(int genus, const Rat& a, const Rat& b,
                                    const Rat& deg_e, const Rat& deg_l,
                                    const std::vector<Rat>& ds);

/// Blow-up condition: contact lower bound * sum(1/d_v) > (n+1) (rH-sE)^n.
Certificate certify_blowup(const BlowupData& data, const std::vector<Rat>& ds);

/// Cone specialization with unit scalings at #places places.
Certificate certify_cone(const ConeData& data);

/// IV* elliptic surface: sum(k/d_v) > 3/25, with the ambient baseline
/// attached.
Certificate certify_elliptic(const Int& k, const std::vector<Rat>& ds);

/// Mean weight of the ambient projective space for the same data:
/// sum_v sum_i r_{v,i} / ((N+1) d_v). The value the subspace-theorem
/// hypothesis would have to exceed one.
Rat schmidt_baseline(const std::vector<std::vector<Rat>>& weights_per_place,
                     int ambient_index, const std::vector<Rat>& ds);

} // namespace chowcert

#endif
