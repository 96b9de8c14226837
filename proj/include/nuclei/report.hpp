#ifndef NUCLEI_REPORT_HPP_
#define NUCLEI_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "nuclei/bound.hpp"
#include "nuclei/enumerate.hpp"
#include "nuclei/nuclei.hpp"

namespace nuclei {

using Json = nlohmann::ordered_json;

Json to_json(const FVector& v);
Json to_json(const FDelta& d);
Json to_json(const MoveRecord& r);
Json to_json(const std::vector<MoveRecord>& log);
Json to_json(const ValidationReport& r);
Json to_json(const SplitTrace& s);
Json to_json(const GrowthLedger& g);
Json to_json(const NucleusSplit& s);
Json to_json(const BoundSeries& b);
Json to_json(const Enumeration& e);
Json to_json(const NodeFlower& f);
Json to_json(const Disk& d);

/// `{"tets": [[a, b, c, d], ...], "root": [a, b, c] | null}`.
Json triangulation_json(const Triangulation& t);

MoveRecord move_record_from_json(const Json& j);
std::vector<MoveRecord> move_log_from_json(const Json& j);

/// Indented `key: value` rendering for --pretty.
std::string pretty(const Json& j);

}  // namespace nuclei

#endif  // NUCLEI_REPORT_HPP_
