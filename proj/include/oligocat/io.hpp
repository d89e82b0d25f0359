// JSON forms of functions, matrices, series, reports and tables.
#pragma once

#include <json.hpp>
#include <map>
#include <string>

#include "oligocat/glq.hpp"
#include "oligocat/matrix.hpp"
#include "oligocat/report.hpp"

namespace olig {

using Json = nlohmann::ordered_json;

// {"domain", "level", "terms": [{"orbit", "coeff"}]}
Json to_json(const SchwartzFunction& f);
SchwartzFunction schwartz_from_json(const ContextPtr& ctx, const Json& j);
// the above plus "codomain"; orbits live on codomain * domain
Json to_json(const InvariantMatrix& m);
InvariantMatrix matrix_from_json(const ContextPtr& ctx, const Json& j);
// {"order", "coeffs": [poly strings], "text"}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);
// {"title", "ok", "failures", "checks": [{"name", "ok", "detail"}]}
Json to_json(const Report& r);
Report report_from_json(const Json& j);
Json to_json(const OmegaTable& t);
// {canonical-form: value}, values as rational strings or integers
std::map<std::string, Rational> rational_table_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace olig
