#ifndef CHOWCERT_CONFIG_HPP
#define CHOWCERT_CONFIG_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "chowcert/heights.hpp"
#include "chowcert/ideals.hpp"
#include "chowcert/monomial.hpp"
#include "chowcert/rational.hpp"

namespace chowcert {

using Json = nlohmann::ordered_json;

Json load_config(const std::string& path);
Json parse_config_text(const std::string& text);

// field accessors; all throw config_error with the field name on bad input
const Json& require_field(const Json& node, const std::string& key);
Rat field_rational(const Json& node, const std::string& key);
Int field_integer(const Json& node, const std::string& key);
long field_long(const Json& node, const std::string& key);
int field_int(const Json& node, const std::string& key);
std::vector<Rat> field_rational_list(const Json& node, const std::string& key);

Rat json_to_rational(const Json& value);
Int json_to_integer(const Json& value);

// domain object readers
MonomialMap parse_variety(const Json& node);
WeightVector parse_weight_vector(const Json& node, std::size_t expected);
MonomialIdeal parse_ideal(const Json& node);
IdealChain parse_chain(const Json& node);
ApproximationSystem parse_system(const Json& node);

// serialization
Json rational_json(const Rat& value);
Json integer_json(const Int& value);
Json rational_list_json(const std::vector<Rat>& values);
Json monomial_json(const Monomial& m);
Json point_json(const std::vector<Int>& coords);

} // namespace chowcert

#endif
