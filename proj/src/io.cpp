#include "oligocat/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace olig {

namespace {

Json terms_json(const GroupContext& ctx, const SetExpr& x, const std::map<Orbit, Poly>& terms) {
  Json arr = Json::array();
  for (const auto& [o, c] : terms) arr.push_back({{"orbit", format_orbit(ctx, x, o)}, {"coeff", c.str()}});
  return arr;
}

SchwartzFunction read_terms(const ContextPtr& ctx, const SetExpr& x, const Json& j) {
  SchwartzFunction f(ctx, x, j.at("level").get<int>());
  for (const auto& term : j.at("terms")) {
    Orbit o = parse_orbit(*ctx, x, term.at("orbit").get<std::string>());
    if (o.p.level != f.level()) throw ParseError("orbit level differs from the function level");
    f.add(o, Poly::parse(term.at("coeff").get<std::string>()));
  }
  return f;
}

}  // namespace

Json to_json(const SchwartzFunction& f) {
  return {{"domain", f.domain().str()}, {"level", f.level()}, {"terms", terms_json(f.ctx(), f.domain(), f.terms())}};
}

SchwartzFunction schwartz_from_json(const ContextPtr& ctx, const Json& j) {
  return read_terms(ctx, SetExpr::parse(j.at("domain").get<std::string>()), j);
}

Json to_json(const InvariantMatrix& m) {
  const auto& f = m.entries();
  return {{"domain", m.dom().str()},
          {"codomain", m.cod().str()},
          {"level", f.level()},
          {"terms", terms_json(f.ctx(), f.domain(), f.terms())}};
}

InvariantMatrix matrix_from_json(const ContextPtr& ctx, const Json& j) {
  SetExpr dom = SetExpr::parse(j.at("domain").get<std::string>());
  SetExpr cod = SetExpr::parse(j.at("codomain").get<std::string>());
  return InvariantMatrix(dom, cod, read_terms(ctx, cod * dom, j));
}

Json to_json(const TruncatedSeries& s) {
  Json c = Json::array();
  for (const auto& p : s.coeffs()) c.push_back(p.str());
  return {{"order", s.order()}, {"coeffs", c}, {"text", s.str()}};
}

TruncatedSeries series_from_json(const Json& j) {
  std::vector<Poly> c;
  for (const auto& s : j.at("coeffs")) c.push_back(Poly::parse(s.get<std::string>()));
  int order = j.at("order").get<int>();
  if (static_cast<int>(c.size()) != order) throw ParseError("series order and coefficient count differ");
  return TruncatedSeries(order, std::move(c));
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  return {{"title", r.title}, {"ok", r.ok()}, {"failures", r.failures()}, {"checks", checks}};
}

Report report_from_json(const Json& j) {
  Report r;
  r.title = j.value("title", "");
  for (const auto& c : j.at("checks")) r.add(c.at("name"), c.at("ok"), c.value("detail", ""));
  return r;
}

Json to_json(const OmegaTable& t) {
  Json rows = Json::array();
  for (size_t i = 0; i < t.rows.size(); ++i) {
    Json vals = Json::array();
    for (const auto& v : t.values[i]) vals.push_back(to_string(v));
    rows.push_back({{"m", t.rows[i].first}, {"d", t.rows[i].second}, {"values", vals}});
  }
  return {{"q", t.q}, {"n", t.ns}, {"rows", rows}};
}

std::map<std::string, Rational> rational_table_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("table must be a JSON object {canonical-form: value}");
  std::map<std::string, Rational> out;
  for (const auto& [k, v] : j.items()) {
    if (v.is_number_integer()) out[k] = Rational(v.get<long>());
    else if (v.is_string()) out[k] = parse_rational(v.get<std::string>());
    else throw ParseError("table value for '" + k + "' must be an integer or a rational string");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace olig
