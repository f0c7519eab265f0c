#pragma once

#include <json.hpp>

#include "effcone/baselocus.hpp"
#include "effcone/cone.hpp"
#include "effcone/divisor.hpp"
#include "effcone/effective.hpp"
#include "effcone/oracle.hpp"

namespace effcone {

// All emitters use ordered_json with fixed field order and canonical "p/q"
// rational strings, so identical inputs give byte-identical output.
using Json = nlohmann::ordered_json;

Json to_json(const DivisorClass& D);
DivisorClass divisor_from_json(const Json& j);

Json to_json(const ConeDesc& c);
Json to_json(const Certificate& cert);
Json to_json(const BaseLocusReport& r);
Json to_json(const FanoReport& r);
Json to_json(const H0Estimate& e);
Json to_json(const std::vector<IncidenceEntry>& entries);

}  // namespace effcone
