#include "chowcert/certificates.hpp"

#include "chowcert/errors.hpp"

namespace chowcert {

namespace {

void require_scalings(const std::vector<Rat>& ds) {
  if (ds.empty())
    throw config_error("need at least one place");
  for (const Rat& d : ds)
    if (d <= 0)
      throw config_error("scalings must be positive");
}

void require_matching(const std::vector<Rat>& ks, const std::vector<Rat>& ds) {
  require_scalings(ds);
  if (ks.size() != ds.size())
    throw config_error("one weight per place required");
  for (const Rat& k : ks)
    if (k < 0)
      throw config_error("weights must be non-negative");
}

Rat sum_ratios(const std::vector<Rat>& ks, const std::vector<Rat>& ds) {
  Rat total = 0;
  for (std::size_t i = 0; i < ks.size(); ++i)
    total += ks[i] / ds[i];
  return total;
}

Rat sum_inverse(const std::vector<Rat>& ds) {
  Rat total = 0;
  for (const Rat& d : ds)
    total += 1 / d;
  return total;
}

void echo_list(Certificate& cert, const std::string& key,
               const std::vector<Rat>& values) {
  std::string text;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i)
      text += ",";
    text += rational_to_string(values[i]);
  }
  cert.inputs.emplace_back(key, text);
}

Certificate simple_threshold(std::string theorem_id, Rat lhs, Rat rhs,
                             std::string formula) {
  Certificate cert;
  cert.theorem_id = std::move(theorem_id);
  cert.lhs = std::move(lhs);
  cert.rhs = std::move(rhs);
  cert.margin = cert.lhs - cert.rhs;
  cert.pass = cert.margin > 0;
  cert.formula = std::move(formula);
  return cert;
}

} // namespace

Certificate certify_fw(const std::vector<Rat>& mean_limits,
                       const std::vector<Rat>& scalings) {
  require_scalings(scalings);
  if (mean_limits.size() != scalings.size())
    throw config_error("one mean limit per place required");
  for (const Rat& e : mean_limits)
    if (e < 0)
      throw config_error("mean limits must be non-negative");
  Certificate cert =
      simple_threshold("fw-general", sum_ratios(mean_limits, scalings), Rat(1),
                       "sum_v E_v/d_v > 1");
  echo_list(cert, "mean_limits", mean_limits);
  echo_list(cert, "scalings", scalings);
  if (cert.margin >= 1)
    cert.warnings.push_back(
        "excess of one or more: beyond the stated hypothesis range, kept");
  return cert;
}

Certificate certify_local_point(const Int& mult, int dim, const Int& deg,
                                const std::vector<Rat>& ks,
                                const std::vector<Rat>& ds) {
  if (mult < 1 || deg < 1 || dim < 1)
    throw config_error("multiplicity, degree and dimension must be positive");
  require_matching(ks, ds);
  Certificate cert = simple_threshold(
      "local-point", Rat(mult) * sum_ratios(ks, ds), Rat((dim + 1) * deg),
      "mult * sum_v k_v/d_v > (dim+1) * deg");
  cert.inputs.emplace_back("mult", mult.get_str());
  cert.inputs.emplace_back("dim", std::to_string(dim));
  cert.inputs.emplace_back("deg", deg.get_str());
  echo_list(cert, "k", ks);
  echo_list(cert, "d", ds);
  return cert;
}

Certificate certify_local_chain(
    const std::vector<std::vector<Rat>>& weights_per_place,
    const std::vector<Rat>& ds, const Rat& deg, int dim) {
  require_scalings(ds);
  if (weights_per_place.size() != ds.size())
    throw config_error("one weight list per place required");
  if (deg <= 0 || dim < 1)
    throw config_error("degree and dimension must be positive");
  Rat lhs = 0;
  for (std::size_t v = 0; v < ds.size(); ++v)
    for (const Rat& w : weights_per_place[v]) {
      if (w < 0)
        throw config_error("weights must be non-negative");
      lhs += w / ds[v];
    }
  Certificate cert = simple_threshold(
      "local-chain", std::move(lhs),
      deg / Rat(factorial(static_cast<unsigned long>(dim) + 1)),
      "sum_v sum_i r_{v,i}/d_v > deg / (dim+1)!");
  cert.inputs.emplace_back("dim", std::to_string(dim));
  cert.inputs.emplace_back("deg", rational_to_string(deg));
  echo_list(cert, "d", ds);
  return cert;
}

Certificate certify_local_chain_normalized(const std::vector<IdealChain>& chains,
                                           const std::vector<Rat>& ds,
                                           const Rat& deg, int dim,
                                           unsigned max_power, int jobs) {
  require_scalings(ds);
  if (chains.size() != ds.size())
    throw config_error("one chain per place required");
  if (deg <= 0 || dim < 1)
    throw config_error("degree and dimension must be positive");
  std::vector<Rat> mean_limits;
  std::vector<Rat> excesses;
  mean_limits.reserve(chains.size());
  for (const IdealChain& chain : chains) {
    ReesIdeal rees(chain);
    const Int e = rees_multiplicity(rees, max_power, jobs);
    excesses.push_back(rees_excess(rees, dim, max_power, jobs));
    mean_limits.push_back(frac(e, Int(dim + 1)) / deg);
  }
  Certificate cert = certify_fw(mean_limits, ds);
  cert.theorem_id = "local-chain-normalized";
  cert.formula = "sum_v e(I_v) / ((dim+1) * deg * d_v) > 1";
  cert.inputs.emplace_back("dim", std::to_string(dim));
  cert.inputs.emplace_back("deg", rational_to_string(deg));
  echo_list(cert, "excess", excesses);
  return cert;
}

Certificate certify_steiner(const std::vector<Rat>& ks,
                            const std::vector<Rat>& ds) {
  require_matching(ks, ds);
  Certificate cert = simple_threshold("steiner", sum_ratios(ks, ds), Rat(9, 4),
                                      "sum_v k_v/d_v > 9/4");
  echo_list(cert, "k", ks);
  echo_list(cert, "d", ds);
  // the same data on the ambient four-space needs sum k_v/d_v > 5/2
  cert.schmidt_baseline = Rat(5, 2);
  return cert;
}

Certificate certify_ruled(const RuledSurfaceData& data,
                          const std::vector<Rat>& ds) {
  require_scalings(ds);
  Certificate cert = simple_threshold(
      "ruled", contact_ruled(data) * sum_inverse(ds),
      3 * ruled_degree(data.polarization()),
      "(3a^2 D.S - a^3 S.S) * sum_v 1/d_v > 3 D.D");
  cert.inputs.emplace_back("genus", std::to_string(data.genus()));
  cert.inputs.emplace_back("a", rational_to_string(data.a()));
  cert.inputs.emplace_back("b", rational_to_string(data.b()));
  cert.inputs.emplace_back("section_square",
                           rational_to_string(data.section_square()));
  echo_list(cert, "d", ds);
  cert.assumptions.push_back(
      "higher cohomology of D - jS vanishes for 0 <= j <= a");
  return cert;
}

Certificate certify_bundle_unstable(int genus, const Rat& a, const Rat& b,
                                    const Rat& deg_e, const Rat& deg_l,
                                    const std::vector<Rat>& ds) {
  require_scalings(ds);
  if (genus < 0)
    throw config_error("genus must be non-negative");
  if (a < 1)
    throw config_error("polarization must be positive on fibres");
  if (deg_e >= 2 * deg_l)
    throw not_bundle_unstable_error(
        "bundle-unstable certificate needs deg E < 2 deg L");
  const Rat instability = deg_e - 2 * deg_l; // negative; equals S.S
  const Rat genus_margin = b + a / 2 * instability - Rat(2 * genus - 2);
  const Rat denominator = a * (b + Rat(genus - 1));
  if (denominator == 0)
    throw config_error("threshold undefined: a(b + g - 1) vanishes");
  Certificate cert;
  cert.theorem_id = "bundle-unstable";
  cert.lhs = sum_inverse(ds);
  cert.rhs = 3 * b / denominator;
  const Rat threshold_margin = cert.lhs - cert.rhs;
  cert.margin = std::min(genus_margin, threshold_margin);
  cert.pass = genus_margin > 0 && threshold_margin > 0;
  cert.formula =
      "b + (a/2)(deg E - 2 deg L) > 2g - 2  and  sum_v 1/d_v > 3b/(a(b+g-1))";
  cert.inputs.emplace_back("genus", std::to_string(genus));
  cert.inputs.emplace_back("a", rational_to_string(a));
  cert.inputs.emplace_back("b", rational_to_string(b));
  cert.inputs.emplace_back("deg_e", rational_to_string(deg_e));
  cert.inputs.emplace_back("deg_l", rational_to_string(deg_l));
  cert.inputs.emplace_back("genus_margin", rational_to_string(genus_margin));
  cert.inputs.emplace_back("threshold_margin",
                           rational_to_string(threshold_margin));
  echo_list(cert, "d", ds);
  cert.assumptions.push_back("D = aG + bf is very ample");
  return cert;
}

Certificate certify_blowup(const BlowupData& data, const std::vector<Rat>& ds) {
  require_scalings(ds);
  Certificate cert = simple_threshold(
      "blowup", contact_lower_bound(data) * sum_inverse(ds),
      Rat(data.n() + 1) * polarization_degree(data),
      "contact_lower_bound * sum_v 1/d_v > (n+1) (rH-sE)^n");
  cert.inputs.emplace_back("n", std::to_string(data.n()));
  echo_list(cert, "nu", data.nu());
  cert.inputs.emplace_back("r", std::to_string(data.r()));
  cert.inputs.emplace_back("s", std::to_string(data.s()));
  echo_list(cert, "d", ds);
  cert.assumptions.push_back(
      "h^i(rH - jE) grows like O((r+j)^{n-2}) for i > 0, s <= j <= r");
  return cert;
}

Certificate certify_cone(const ConeData& data) {
  const ConeVerdict verdict = cone_condition(data);
  Certificate cert;
  cert.theorem_id = "cone";
  cert.lhs = Rat(data.n() + 1) *
                 Rat(ipow(Int(data.s()), static_cast<unsigned long>(data.n()))) *
                 Rat(data.s() - data.r()) +
             Rat(ipow(Int(data.r()), static_cast<unsigned long>(data.n()) + 1)) -
             Rat(ipow(Int(data.s()), static_cast<unsigned long>(data.n()) + 1));
  cert.rhs = cert.lhs - verdict.margin;
  cert.margin = verdict.margin;
  cert.pass = verdict.pass;
  cert.formula =
      "(n+1) s^n (s-r) + r^{n+1} - s^{n+1} > (n+1)(r^n - s^n)/#places";
  cert.inputs.emplace_back("n", std::to_string(data.n()));
  cert.inputs.emplace_back("h", rational_to_string(data.h()));
  cert.inputs.emplace_back("r", std::to_string(data.r()));
  cert.inputs.emplace_back("s", std::to_string(data.s()));
  cert.inputs.emplace_back("places", std::to_string(data.sigma_count()));
  cert.assumptions.push_back(
      "higher cohomology of the base polarization vanishes in all twists");
  return cert;
}

Certificate certify_elliptic(const Int& k, const std::vector<Rat>& ds) {
  require_scalings(ds);
  if (k < 1)
    throw config_error("polarization index must be positive");
  std::vector<Rat> ks(ds.size(), Rat(k));
  Certificate cert = simple_threshold("elliptic", sum_ratios(ks, ds),
                                      Rat(3, 25), "sum_v k/d_v > 3/25");
  cert.inputs.emplace_back("k", k.get_str());
  echo_list(cert, "d", ds);
  const EllipticInvariants inv = elliptic_invariants(EllipticData{k});
  // ambient threshold on the same sum: k h0 / weight_sum
  cert.schmidt_baseline = Rat(k) * Rat(inv.h0) / inv.weight_sum;
  cert.assumptions.push_back(
      "contact of the vanishing filtration is at least 675 k^3");
  cert.assumptions.push_back("D = 3kS + 6kf is very ample on the IV* surface");
  return cert;
}

Rat schmidt_baseline(const std::vector<std::vector<Rat>>& weights_per_place,
                     int ambient_index, const std::vector<Rat>& ds) {
  require_scalings(ds);
  if (weights_per_place.size() != ds.size())
    throw config_error("one weight list per place required");
  if (ambient_index < 0)
    throw config_error("ambient index must be non-negative");
  Rat total = 0;
  for (std::size_t v = 0; v < ds.size(); ++v) {
    if (weights_per_place[v].size() !=
        static_cast<std::size_t>(ambient_index) + 1)
      throw config_error("need one weight per ambient coordinate");
    for (const Rat& w : weights_per_place[v])
      total += w / (Rat(ambient_index + 1) * ds[v]);
  }
  return total;
}

} // namespace chowcert
