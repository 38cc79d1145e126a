#include "chowcert/config.hpp"

#include <climits>
#include <fstream>
#include <sstream>

#include "chowcert/errors.hpp"

namespace chowcert {

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw config_error("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config_text(buffer.str());
}

Json parse_config_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw config_error(std::string("invalid configuration: ") + e.what());
  }
}

const Json& require_field(const Json& node, const std::string& key) {
  if (!node.is_object() || !node.contains(key))
    throw config_error("missing field: " + key);
  return node.at(key);
}

Rat json_to_rational(const Json& value) {
  if (value.is_string())
    return parse_rational(value.get<std::string>());
  if (value.is_number_integer())
    return Rat(static_cast<long>(value.get<long long>()));
  throw config_error("expected an exact rational as \"p/q\" or an integer");
}

Int json_to_integer(const Json& value) {
  if (value.is_string())
    return parse_integer(value.get<std::string>());
  if (value.is_number_integer())
    return Int(static_cast<long>(value.get<long long>()));
  throw config_error("expected an exact integer");
}

Rat field_rational(const Json& node, const std::string& key) {
  try {
    return json_to_rational(require_field(node, key));
  } catch (const config_error& e) {
    throw config_error("field " + key + ": " + e.what());
  }
}

Int field_integer(const Json& node, const std::string& key) {
  try {
    return json_to_integer(require_field(node, key));
  } catch (const config_error& e) {
    throw config_error("field " + key + ": " + e.what());
  }
}

long field_long(const Json& node, const std::string& key) {
  const Int value = field_integer(node, key);
  if (!value.fits_slong_p())
    throw config_error("field " + key + ": value out of range");
  return value.get_si();
}

int field_int(const Json& node, const std::string& key) {
  const long value = field_long(node, key);
  if (value < INT_MIN || value > INT_MAX)
    throw config_error("field " + key + ": value out of range");
  return static_cast<int>(value);
}

std::vector<Rat> field_rational_list(const Json& node, const std::string& key) {
  const Json& list = require_field(node, key);
  if (!list.is_array())
    throw config_error("field " + key + " must be a list");
  std::vector<Rat> out;
  out.reserve(list.size());
  for (const Json& item : list)
    out.push_back(json_to_rational(item));
  return out;
}

namespace {

Monomial json_to_monomial(const Json& value) {
  if (!value.is_array() || value.empty())
    throw config_error("exponent vectors must be nonempty lists");
  std::vector<Int> exponents;
  exponents.reserve(value.size());
  for (const Json& item : value)
    exponents.push_back(json_to_integer(item));
  return Monomial(std::move(exponents));
}

} // namespace

MonomialMap parse_variety(const Json& node) {
  const int ambient = field_int(node, "ambient_vars");
  const Json& rows = require_field(node, "generators");
  if (!rows.is_array() || rows.empty())
    throw config_error("generators must be a nonempty list of exponent rows");
  std::vector<Monomial> generators;
  generators.reserve(rows.size());
  for (const Json& row : rows)
    generators.push_back(json_to_monomial(row));
  return MonomialMap(ambient, std::move(generators));
}

WeightVector parse_weight_vector(const Json& node, std::size_t expected) {
  if (!node.is_array())
    throw config_error("weights must be a list");
  if (expected != 0 && node.size() != expected)
    throw config_error("need exactly " + std::to_string(expected) +
                       " weights");
  std::vector<Rat> weights;
  weights.reserve(node.size());
  for (const Json& item : node)
    weights.push_back(json_to_rational(item));
  return WeightVector(std::move(weights));
}

MonomialIdeal parse_ideal(const Json& node) {
  const int variables = field_int(node, "variables");
  const Json& rows = require_field(node, "generators");
  if (!rows.is_array())
    throw config_error("generators must be a list of exponent rows");
  std::vector<Monomial> generators;
  generators.reserve(rows.size());
  for (const Json& row : rows)
    generators.push_back(json_to_monomial(row));
  return MonomialIdeal(variables, std::move(generators));
}

IdealChain parse_chain(const Json& node) {
  const int variables = field_int(node, "variables");
  const Json& ideals = require_field(node, "ideals");
  if (!ideals.is_array() || ideals.empty())
    throw config_error("a chain needs at least one ideal");
  std::vector<MonomialIdeal> members;
  members.reserve(ideals.size());
  for (const Json& rows : ideals) {
    if (!rows.is_array())
      throw config_error("each chain member is a list of exponent rows");
    std::vector<Monomial> generators;
    generators.reserve(rows.size());
    for (const Json& row : rows)
      generators.push_back(json_to_monomial(row));
    members.emplace_back(variables, std::move(generators));
  }
  return IdealChain(std::move(members));
}

ApproximationSystem parse_system(const Json& node) {
  const Json& places = require_field(node, "places");
  if (!places.is_array() || places.empty())
    throw config_error("a system needs at least one place");
  std::vector<PlaceSystem> out;
  out.reserve(places.size());
  for (const Json& entry : places) {
    const Json& tag = require_field(entry, "place");
    Place place = Place::real();
    if (tag.is_string() && tag.get<std::string>() == "real")
      place = Place::real();
    else
      place = Place::finite(json_to_integer(tag));
    const Json& rows = require_field(entry, "forms");
    if (!rows.is_array() || rows.empty())
      throw config_error("each place needs a nonempty list of forms");
    std::vector<LinearForm> forms;
    forms.reserve(rows.size());
    for (const Json& row : rows) {
      if (!row.is_array())
        throw config_error("each form is a list of coefficients");
      LinearForm form;
      form.reserve(row.size());
      for (const Json& coefficient : row)
        form.push_back(json_to_rational(coefficient));
      forms.push_back(std::move(form));
    }
    WeightVector weights =
        parse_weight_vector(require_field(entry, "weights"), forms.size());
    Rat scaling = field_rational(entry, "scaling");
    out.push_back(PlaceSystem{place, std::move(forms), std::move(weights),
                              std::move(scaling)});
  }
  return ApproximationSystem(std::move(out));
}

Json rational_json(const Rat& value) { return rational_to_string(value); }

Json integer_json(const Int& value) { return value.get_str(); }

Json rational_list_json(const std::vector<Rat>& values) {
  Json out = Json::array();
  for (const Rat& v : values)
    out.push_back(rational_json(v));
  return out;
}

Json monomial_json(const Monomial& m) {
  Json out = Json::array();
  for (const Int& e : m.exponents())
    out.push_back(integer_json(e));
  return out;
}

Json point_json(const std::vector<Int>& coords) {
  Json out = Json::array();
  for (const Int& c : coords)
    out.push_back(integer_json(c));
  return out;
}

} // namespace chowcert
