#pragma once

#include <string>

#include <json.hpp>

#include "fwps/enumerate.hpp"
#include "fwps/simplex.hpp"

namespace fwps {

// Every number crossing the serialization boundary is rendered as a decimal
// string; rationals as {"num","den"} string pairs. No floats anywhere, so
// parse -> dump round trips are byte-identical.
nlohmann::json json_int(const Int& v);
nlohmann::json json_rat(const Rat& v);
nlohmann::json json_parts(const std::vector<Int>& values);
nlohmann::json json_partition(const UfPartition& a);
nlohmann::json json_weights(const WeightSystem& q);

const char* bound_status_name(BoundStatus s);

nlohmann::json report_to_json(const EnumerationReport& report);
std::string report_to_csv(const EnumerationReport& report);

} // namespace fwps
