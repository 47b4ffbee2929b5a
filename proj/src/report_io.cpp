#include "fwps/report_io.hpp"

namespace fwps {

using nlohmann::json;

json json_int(const Int& v) {
    return v.get_str();
}

json json_rat(const Rat& v) {
    return json{{"num", v.get_num().get_str()}, {"den", v.get_den().get_str()}};
}

json json_parts(const std::vector<Int>& values) {
    json arr = json::array();
    for (const Int& v : values) arr.push_back(v.get_str());
    return arr;
}

json json_partition(const UfPartition& a) {
    return json_parts(a.parts());
}

json json_weights(const WeightSystem& q) {
    return json_parts(q.weights());
}

const char* bound_status_name(BoundStatus s) {
    switch (s) {
    case BoundStatus::Matches: return "Matches";
    case BoundStatus::Exceeds: return "Exceeds";
    case BoundStatus::Below: return "Below";
    }
    return "Unknown";
}

json report_to_json(const EnumerationReport& report) {
    json partitions = json::array();
    for (const UfPartition& a : report.partitions) partitions.push_back(json_partition(a));
    json extremizers = json::array();
    for (const UfPartition& a : report.extremizers) extremizers.push_back(json_partition(a));
    return json{
        {"iota", json_int(report.iota)},
        {"n", std::to_string(report.n)},
        {"count", std::to_string(report.count())},
        {"partitions", partitions},
        {"max_product", json_int(report.max_product)},
        {"extremizers", extremizers},
        {"bound_value", json_rat(report.bound_value)},
        {"bound_status", bound_status_name(report.bound_status)},
        {"nodes", std::to_string(report.nodes)},
    };
}

std::string report_to_csv(const EnumerationReport& report) {
    std::string out;
    for (int k = 1; k <= report.n; ++k) {
        if (k > 1) out += ",";
        out += "a" + std::to_string(k);
    }
    out += ",head_product,extremizer\n";
    for (const UfPartition& a : report.partitions) {
        Int head = 1;
        for (int k = 0; k + 1 < a.length(); ++k) head *= a[k];
        for (int k = 0; k < a.length(); ++k) {
            if (k) out += ",";
            out += a[k].get_str();
        }
        out += "," + head.get_str();
        out += (head == report.max_product) ? ",1\n" : ",0\n";
    }
    return out;
}

} // namespace fwps
