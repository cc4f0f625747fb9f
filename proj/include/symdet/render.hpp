#ifndef SYMDET_RENDER_HPP
#define SYMDET_RENDER_HPP

#include <string>

#include "json.hpp"

#include "symdet/classify.hpp"
#include "symdet/resolution.hpp"

namespace symdet {

using Json = nlohmann::ordered_json;

/* {"n", "t", "char": "0", "projdim", "entries": [{"i", "degree", "rank",
 * "partitions"}]}. Ranks are decimal strings. */
Json to_json(const BettiTable& table);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
BettiTable betti_table_from_json(const Json& j);

Json to_json(const Classification& c);
Classification classification_from_json(const Json& j);

/// Betti diagram: columns are homological degrees i, rows are degree - i.
std::string render_betti_diagram(const BettiTable& table);

std::string render_classification(const Classification& c);

std::string to_decimal(const BigInt& v);
BigInt from_decimal(const std::string& s);

} // namespace symdet

#endif
