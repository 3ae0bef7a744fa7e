#pragma once

// JSON formats for every domain type. Output is canonical: keys sorted,
// integers only, big integers written as decimal strings.

#include <string>

#include "json.hpp"

#include "cx1/catalog.hpp"
#include "cx1/chardata.hpp"
#include "cx1/classify.hpp"
#include "cx1/quasitoric.hpp"
#include "cx1/report.hpp"
#include "cx1/sponge.hpp"
#include "cx1/weights.hpp"

namespace cx1 {

using Json = nlohmann::json;

// Throws InputError with the byte offset of the first syntax error.
Json parse_json(const std::string& text, const std::string& source);
// Throws InputError if the file cannot be read or parsed.
Json read_json_file(const std::string& path);
// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

// Integers that fit in 64 bits are numbers, larger ones strings.
Json to_json(const Integer& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
// Accepts numbers and decimal strings. Throws InputError.
Integer integer_from_json(const Json& j, const std::string& where);
IntVector int_vector_from_json(const Json& j, const std::string& where);
// Parses "1,1,-1".
IntVector int_vector_from_csv(const std::string& text);

Json to_json(const WeightSystem& ws);
WeightSystem weight_system_from_json(const Json& j);

Json to_json(const SpongeComplex& s);
SpongeComplex sponge_from_json(const Json& j);

Json to_json(const CharacteristicData& cd);
CharacteristicData chardata_from_json(const Json& j);

Json to_json(const SimplePolytope& P);
SimplePolytope polytope_from_json(const Json& j);

Json lambda_to_json(const CharacteristicFunction& lambda);
CharacteristicFunction lambda_from_json(const Json& j);

Json to_json(const EquivalenceWitness& w);
Json to_json(const Comparison& c);

Json to_json(const CatalogEntry& e);

// {"check", "status": "pass"|"fail", "detail"} per finding.
Json results_json(const Report& r);

}  // namespace cx1
