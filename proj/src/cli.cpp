#include "chowcert/cli.hpp"

#include <ostream>

#include "chowcert/asymptotics.hpp"
#include "chowcert/certificates.hpp"
#include "chowcert/errors.hpp"

namespace chowcert {

namespace {

void emit(std::ostream& out, const Json& document) {
  out << document.dump(2) << "\n";
}

Json certificate_json(const Certificate& cert) {
  Json doc;
  doc["theorem"] = cert.theorem_id;
  Json inputs = Json::object();
  for (const auto& [key, value] : cert.inputs)
    inputs[key] = value;
  doc["inputs"] = inputs;
  doc["lhs"] = rational_json(cert.lhs);
  doc["rhs"] = rational_json(cert.rhs);
  doc["margin"] = rational_json(cert.margin);
  doc["verdict"] = cert.pass ? "pass" : "fail";
  doc["formula"] = cert.formula;
  doc["assumptions"] = cert.assumptions;
  doc["warnings"] = cert.warnings;
  if (cert.schmidt_baseline)
    doc["schmidt_baseline"] = rational_json(*cert.schmidt_baseline);
  return doc;
}

Json invariants_json(const FiltrationProfile& profile,
                     const AsymptoticInvariants& invariants) {
  Json doc;
  doc["dimension"] = profile.dimension();
  Json samples = Json::array();
  for (const ProfileSample& s : profile.samples()) {
    Json sample;
    sample["m"] = s.m;
    sample["weight"] = rational_json(s.weight);
    sample["h0"] = integer_json(s.h0);
    samples.push_back(sample);
  }
  doc["samples"] = samples;
  doc["contact_degree"] = rational_json(invariants.contact_degree);
  doc["degree"] = rational_json(invariants.degree);
  doc["mean_weight_limit"] = rational_json(invariants.mean_weight_limit);
  doc["stabilized"] = invariants.stabilized;
  doc["formulas"] = Json{
      {"weight", "total minimal weight of the degree-m monomial basis"},
      {"contact_degree",
       "weight(m) = contact_degree * m^(d+1)/(d+1)! + lower order"},
      {"degree", "h0(m) = degree * m^d/d! + lower order"},
      {"mean_weight_limit", "contact_degree / ((d+1) * degree)"}};
  return doc;
}

int run_contact(const RunConfig& config, const Json& input, std::ostream& out) {
  const MonomialMap map = parse_variety(require_field(input, "variety"));
  const WeightVector weights = parse_weight_vector(
      require_field(input, "weights"), map.generator_count());
  const int m_max = config.m_max.value_or(map.dimension() + 3);
  const FiltrationProfile profile =
      build_profile(map, weights, m_max, config.jobs);
  const AsymptoticInvariants invariants = asymptotic_invariants(profile);
  Json doc;
  doc["command"] = "contact";
  doc.update(invariants_json(profile, invariants));
  emit(out, doc);
  return invariants.stabilized ? exit_ok : exit_not_stabilized;
}

int run_semistable(const RunConfig& config, const Json& input,
                   std::ostream& out) {
  const MonomialMap map = parse_variety(require_field(input, "variety"));
  const WeightVector weights = parse_weight_vector(
      require_field(input, "weights"), map.generator_count());
  const int m_max = config.m_max.value_or(map.dimension() + 3);
  const FiltrationProfile profile =
      build_profile(map, weights, m_max, config.jobs);
  const AsymptoticInvariants invariants = asymptotic_invariants(profile);
  const StabilityVerdict verdict = chow_semistable(invariants, weights);
  Json doc;
  doc["command"] = "semistable";
  doc.update(invariants_json(profile, invariants));
  doc["flag_average"] = rational_json(weights.average());
  doc["margin"] = rational_json(verdict.margin);
  doc["verdict"] = verdict.semistable ? "semistable" : "unstable";
  doc["formulas"]["margin"] = "sum(r_i)/(N+1) - mean_weight_limit";
  emit(out, doc);
  return exit_ok;
}

int run_destabilize(const RunConfig& config, const Json& input,
                    std::ostream& out) {
  const MonomialMap map = parse_variety(require_field(input, "variety"));
  const int m_max = config.m_max.value_or(map.dimension() + 3);
  const auto flag =
      find_destabilizing_weights(map, config.weight_bound, m_max, config.jobs);
  Json doc;
  doc["command"] = "destabilize";
  doc["weight_bound"] = config.weight_bound;
  doc["m_max"] = m_max;
  doc["found"] = flag.has_value();
  if (flag) {
    doc["weights"] = rational_list_json(flag->weights.weights());
    doc["margin"] = rational_json(flag->margin);
  }
  doc["formulas"] = Json{
      {"margin", "sum(r_i)/(N+1) - mean_weight_limit, negative is unstable"}};
  emit(out, doc);
  return exit_ok;
}

int run_multiplicity(const RunConfig& config, const Json& input,
                     std::ostream& out) {
  Json doc;
  doc["command"] = "multiplicity";
  if (input.contains("ideal")) {
    const MonomialIdeal ideal = parse_ideal(input.at("ideal"));
    doc["kind"] = "ideal";
    doc["variables"] = ideal.variables();
    Json gens = Json::array();
    for (const Monomial& g : ideal.generators())
      gens.push_back(monomial_json(g));
    doc["minimal_generators"] = gens;
    doc["colength"] = integer_json(colength(ideal));
    doc["multiplicity"] = integer_json(multiplicity(ideal, 12, config.jobs));
    doc["flat_ratio"] = rational_json(flat_ratio(ideal, 12, config.jobs));
    doc["formulas"] = Json{
        {"colength", "number of monomials outside the ideal"},
        {"multiplicity",
         "r! * leading coefficient of n -> colength(I^n), by differences"},
        {"flat_ratio", "multiplicity / (r! * colength)"}};
  } else if (input.contains("chain")) {
    const IdealChain chain = parse_chain(input.at("chain"));
    const ReesIdeal rees(chain);
    doc["kind"] = "chain";
    doc["variables"] = chain.variables();
    Json colengths = Json::array();
    for (const MonomialIdeal& member : chain.members())
      colengths.push_back(
          member.is_unit() ? Json("0") : integer_json(colength(member)));
    doc["member_colengths"] = colengths;
    doc["rees_colength"] = integer_json(rees_colength(rees));
    doc["rees_multiplicity"] =
        integer_json(rees_multiplicity(rees, 12, config.jobs));
    doc["excess"] = rational_json(
        rees_excess(rees, chain.variables(), 12, config.jobs));
    doc["formulas"] = Json{
        {"rees_colength", "sum of the colengths of the proper chain members"},
        {"rees_multiplicity",
         "multiplicity of the graded chain ideal in one more variable"},
        {"excess", "rees_multiplicity / ((dim+1)! * rees_colength) - 1"}};
  } else {
    throw config_error("multiplicity needs an \"ideal\" or \"chain\" section");
  }
  emit(out, doc);
  return exit_ok;
}

int run_heights(const Json& input, std::ostream& out) {
  const Json& coords = require_field(input, "point");
  if (!coords.is_array() || coords.empty())
    throw config_error("point must be a nonempty list of integers");
  std::vector<Int> values;
  values.reserve(coords.size());
  for (const Json& c : coords)
    values.push_back(json_to_integer(c));
  const ProjectivePoint point(std::move(values));
  const HeightRecord record = height(point);
  Json doc;
  doc["command"] = "heights";
  doc["point"] = point_json(point.coords());
  doc["norm_sq"] = integer_json(record.norm_sq);
  doc["height_zero"] = record.is_zero();
  doc["formulas"] = Json{
      {"norm_sq", "sum of squared primitive coordinates"},
      {"height", "log(norm_sq)/2; finite places contribute nothing"}};
  emit(out, doc);
  return exit_ok;
}

int run_search(const RunConfig& config, const Json& input, std::ostream& out) {
  const MonomialMap map = parse_variety(require_field(input, "variety"));
  const ApproximationSystem system =
      parse_system(require_field(input, "system"));
  const auto hits =
      search_points(map, system, config.height_bound, config.jobs);
  Json doc;
  doc["command"] = "search";
  doc["height_bound"] = config.height_bound;
  doc["hit_count"] = hits.size();
  Json list = Json::array();
  for (const SearchHit& hit : hits) {
    Json entry;
    entry["parameter"] = point_json(hit.parameter);
    entry["image"] = point_json(hit.image.coords());
    entry["height_zero"] = height(hit.image).is_zero();
    list.push_back(entry);
  }
  doc["hits"] = list;
  doc["formulas"] = Json{
      {"hits", "primitive parameters whose images satisfy every inequality "
               "log(|l(x)|_v/|x|_v) <= -(r/d) h(x)"}};
  emit(out, doc);
  return exit_ok;
}

Certificate dispatch_certificate(const RunConfig& config, const Json& input,
                                 Json& extra) {
  const std::string& id = config.theorem;
  if (id == "fw-general")
    return certify_fw(field_rational_list(input, "mean_limits"),
                      field_rational_list(input, "scalings"));
  if (id == "local-point")
    return certify_local_point(field_integer(input, "multiplicity"),
                               field_int(input, "dimension"),
                               field_integer(input, "degree"),
                               field_rational_list(input, "k"),
                               field_rational_list(input, "scalings"));
  if (id == "local-chain" || id == "local-chain-normalized") {
    const Rat deg = field_rational(input, "degree");
    const int dim = field_int(input, "dimension");
    const auto scalings = field_rational_list(input, "scalings");
    if (id == "local-chain") {
      const Json& lists = require_field(input, "weights");
      if (!lists.is_array())
        throw config_error("weights must be a list of per-place lists");
      std::vector<std::vector<Rat>> weights;
      for (const Json& list : lists) {
        if (!list.is_array())
          throw config_error("each per-place weight entry must be a list");
        std::vector<Rat> row;
        for (const Json& item : list)
          row.push_back(json_to_rational(item));
        weights.push_back(std::move(row));
      }
      return certify_local_chain(weights, scalings, deg, dim);
    }
    const Json& lists = require_field(input, "chains");
    if (!lists.is_array())
      throw config_error("chains must be a list");
    std::vector<IdealChain> chains;
    for (const Json& chain : lists)
      chains.push_back(parse_chain(chain));
    return certify_local_chain_normalized(chains, scalings, deg, dim, 12,
                                          config.jobs);
  }
  if (id == "steiner")
    return certify_steiner(field_rational_list(input, "k"),
                           field_rational_list(input, "scalings"));
  if (id == "ruled") {
    // the section self-intersection may be given directly or through the
    // bundle degrees, deg E - 2 deg L
    Rat square;
    if (input.contains("section_square"))
      square = field_rational(input, "section_square");
    else
      square = field_rational(input, "deg_e") -
               2 * field_rational(input, "deg_l");
    const RuledSurfaceData data = RuledSurfaceData::from_section_square(
        field_int(input, "genus"), field_rational(input, "a"),
        field_rational(input, "b"), square);
    return certify_ruled(data, field_rational_list(input, "scalings"));
  }
  if (id == "bundle-unstable")
    return certify_bundle_unstable(field_int(input, "genus"),
                                   field_rational(input, "a"),
                                   field_rational(input, "b"),
                                   field_rational(input, "deg_e"),
                                   field_rational(input, "deg_l"),
                                   field_rational_list(input, "scalings"));
  if (id == "blowup") {
    std::vector<Rat> nu = field_rational_list(input, "nu");
    const BlowupData data(field_int(input, "n"), std::move(nu),
                          field_long(input, "r"), field_long(input, "s"));
    return certify_blowup(data, field_rational_list(input, "scalings"));
  }
  if (id == "cone") {
    const ConeData data(field_int(input, "n"), field_rational(input, "h"),
                        field_long(input, "r"), field_long(input, "s"),
                        field_int(input, "places"));
    Certificate cert = certify_cone(data);
    extra["blowup_equivalent"] = certificate_json(certify_blowup(
        data.to_blowup_data(),
        std::vector<Rat>(static_cast<std::size_t>(data.sigma_count()),
                         Rat(1))));
    return cert;
  }
  if (id == "elliptic")
    return certify_elliptic(field_integer(input, "k"),
                            field_rational_list(input, "scalings"));
  throw config_error("unknown theorem id: " + id);
}

int run_certify(const RunConfig& config, const Json& input, std::ostream& out) {
  Json extra = Json::object();
  const Certificate cert = dispatch_certificate(config, input, extra);
  Json doc;
  doc["command"] = "certify";
  doc.update(certificate_json(cert));
  // the verbatim chain threshold rides along with its normalized variant
  if (cert.theorem_id == "local-chain-normalized" &&
      input.contains("weights")) {
    RunConfig verbatim = config;
    verbatim.theorem = "local-chain";
    Json ignored = Json::object();
    doc["verbatim_variant"] =
        certificate_json(dispatch_certificate(verbatim, input, ignored));
  }
  for (auto& [key, value] : extra.items())
    doc[key] = value;
  emit(out, doc);
  return cert.pass ? exit_ok : exit_certificate_failed;
}

} // namespace

int run_on(const RunConfig& config, const Json& input, std::ostream& out,
           std::ostream& err) {
  try {
    if (config.command == "contact")
      return run_contact(config, input, out);
    if (config.command == "semistable")
      return run_semistable(config, input, out);
    if (config.command == "destabilize")
      return run_destabilize(config, input, out);
    if (config.command == "multiplicity")
      return run_multiplicity(config, input, out);
    if (config.command == "certify")
      return run_certify(config, input, out);
    if (config.command == "heights")
      return run_heights(input, out);
    if (config.command == "search")
      return run_search(config, input, out);
    throw config_error("unknown command: " + config.command);
  } catch (const not_stabilized_error& e) {
    err << "not stabilized: " << e.what() << "\n";
    return exit_not_stabilized;
  } catch (const config_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Json input;
  try {
    input = load_config(config.input_path);
  } catch (const config_error& e) {
    err << "input error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return run_on(config, input, out, err);
}

} // namespace chowcert
