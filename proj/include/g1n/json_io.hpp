#pragma once

#include "g1n/chern.hpp"
#include "g1n/cones.hpp"
#include "g1n/coniveau.hpp"
#include "g1n/flagpush.hpp"
#include "g1n/schur.hpp"

#include <json.hpp>

#include <string>

namespace g1n {

// Field order in emitted objects is fixed, so serialized output is
// byte-deterministic for a given value.
using Json = nlohmann::ordered_json;

// Rationals serialize as "p/q" strings, the denominator always present.
Json to_json(const SchurClass& u);
Json to_json(const LC2Poly& p);
Json to_json(const HC2Poly& p);
Json to_json(const BivarPoly& p);
Json to_json(const MultiDegree& md);
Json to_json(const NumerologyReport& rep);
Json to_json(const ConeCertificate& cert);

// Parsers accept exactly the shapes the serializers emit and throw
// std::invalid_argument on malformed input.
SchurClass schur_from_json(const Json& j);
LC2Poly lc2_from_json(const Json& j);
HC2Poly hc2_from_json(const Json& j);
BivarPoly bivar_from_json(const Json& j);
MultiDegree multidegree_from_json(const Json& j);

// One CSV row per multidegree for sweep output.
std::string numerology_csv_header();
std::string numerology_csv_row(const NumerologyReport& rep);

}  // namespace g1n
