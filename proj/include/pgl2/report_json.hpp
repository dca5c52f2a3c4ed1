#pragma once

// JSON encoding of orbit reports. Integers beyond 2^53 are written as
// decimal strings; readers accept both forms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "errors.hpp"
#include "invariants.hpp"

namespace pgl2 {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct ReportDocument {
  std::string input;
  std::optional<std::string> minpoly;
  std::string form;
  int degree_d = 0;
  /// "numeric", "user", "infinite" or "none".
  std::string stabilizer_source = "none";
  std::optional<double> tolerance;
  OrbitReport report;
  std::optional<std::string> numeric_hessian_check;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

namespace detail {

inline nlohmann::json int_json(std::int64_t v) {
  constexpr std::int64_t safe = std::int64_t{1} << 53;
  if (v > safe || v < -safe) return std::to_string(v);
  return v;
}

inline std::int64_t int_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      const std::string s = j.get<std::string>();
      const long long v = std::stoll(s, &used);
      if (used != s.size()) throw ParseError("bad integer string " + s);
      return v;
    } catch (const std::logic_error&) {
      throw ParseError("bad integer string " + j.dump());
    }
  }
  if (!j.is_number_integer()) throw ParseError("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

template <class T>
nlohmann::json opt_json(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, std::int64_t>) return int_json(*v);
  else return *v;
}

}  // namespace detail

inline nlohmann::json to_json(const ReportDocument& doc) {
  using nlohmann::json;
  using detail::int_json;
  using detail::opt_json;
  const OrbitReport& r = doc.report;
  json j;
  j["schema"] = kReportSchemaVersion;
  j["version"] = kToolVersion;
  j["input"] = doc.input;
  j["minpoly"] = opt_json(doc.minpoly);
  j["form"] = doc.form;
  j["degree_d"] = doc.degree_d;
  j["profile"] = r.profile.multiplicities();
  j["s"] = r.profile.s();
  j["dimension"] = r.dimension;
  j["predegree"] = int_json(r.predegree);
  j["stabilizer"] = {{"order", opt_json(r.stabilizer_order)},
                     {"certified", r.stabilizer_certified},
                     {"source", doc.stabilizer_source},
                     {"tolerance", opt_json(doc.tolerance)}};
  j["degree"] = opt_json(r.degree);
  json bd = json::array();
  for (const auto& e : r.boundary) {
    json o;
    o["kind"] = e.orbit.kind == BoundaryKind::DFold ? "dfold" : "pair";
    o["r"] = e.orbit.kind == BoundaryKind::DFold ? json(e.orbit.r_high) : json(e.orbit.r_low);
    if (e.orbit.kind == BoundaryKind::Pair) o["r_high"] = e.orbit.r_high;
    o["dimension"] = e.orbit.dimension();
    o["premultiplicity"] = opt_json(e.premultiplicity);
    o["multiplicity"] = opt_json(e.multiplicity);
    bd.push_back(o);
  }
  j["boundary"] = bd;
  j["smooth"] = opt_json(r.smooth);
  j["smooth_codim1"] = opt_json(r.smooth_codim1);
  json ext = json::array();
  for (auto [k, n] : r.external_profile) ext.push_back({{"k", k}, {"count", n}});
  j["hessian"] = {{"external_profile", ext}, {"numeric_check", opt_json(doc.numeric_hessian_check)}};
  json res = json::array();
  for (const auto& x : r.residuals)
    res.push_back({{"r", x.r}, {"weight", x.weight}, {"h", x.hess_mult}, {"at_infinity", x.at_infinity},
                   {"factor", x.factor}});
  j["residuals"] = res;
  return j;
}

inline ReportDocument report_from_json(const nlohmann::json& j) {
  using detail::int_from_json;
  try {
    if (j.at("schema").get<int>() != kReportSchemaVersion)
      throw ParseError("unsupported report schema " + j.at("schema").dump());
    auto opt_int = [&](const nlohmann::json& v) -> std::optional<std::int64_t> {
      if (v.is_null()) return std::nullopt;
      return int_from_json(v);
    };
    auto opt_bool = [&](const nlohmann::json& v) -> std::optional<bool> {
      if (v.is_null()) return std::nullopt;
      return v.get<bool>();
    };
    auto opt_str = [&](const nlohmann::json& v) -> std::optional<std::string> {
      if (v.is_null()) return std::nullopt;
      return v.get<std::string>();
    };
    ReportDocument doc;
    doc.input = j.at("input").get<std::string>();
    doc.minpoly = opt_str(j.at("minpoly"));
    doc.form = j.at("form").get<std::string>();
    doc.degree_d = j.at("degree_d").get<int>();
    OrbitReport& r = doc.report;
    r.profile = MultiplicityProfile(j.at("profile").get<std::vector<int>>());
    if (r.profile.s() != j.at("s").get<int>()) throw ParseError("profile and s disagree");
    r.dimension = j.at("dimension").get<int>();
    r.predegree = int_from_json(j.at("predegree"));
    const auto& st = j.at("stabilizer");
    r.stabilizer_order = opt_int(st.at("order"));
    r.stabilizer_certified = st.at("certified").get<bool>();
    doc.stabilizer_source = st.at("source").get<std::string>();
    if (!st.at("tolerance").is_null()) doc.tolerance = st.at("tolerance").get<double>();
    r.degree = opt_int(j.at("degree"));
    for (const auto& o : j.at("boundary")) {
      BoundaryEntry e;
      const std::string kind = o.at("kind").get<std::string>();
      if (kind == "dfold") e.orbit = BoundaryOrbit::dfold(o.at("r").get<int>());
      else if (kind == "pair")
        e.orbit = {BoundaryKind::Pair, o.at("r").get<int>(), o.at("r_high").get<int>()};
      else throw ParseError("unknown boundary kind " + kind);
      e.premultiplicity = opt_int(o.at("premultiplicity"));
      e.multiplicity = opt_int(o.at("multiplicity"));
      r.boundary.push_back(e);
    }
    r.smooth = opt_bool(j.at("smooth"));
    r.smooth_codim1 = opt_bool(j.at("smooth_codim1"));
    for (const auto& x : j.at("hessian").at("external_profile"))
      r.external_profile.emplace_back(x.at("k").get<int>(), x.at("count").get<int>());
    doc.numeric_hessian_check = opt_str(j.at("hessian").at("numeric_check"));
    for (const auto& x : j.at("residuals"))
      r.residuals.push_back({x.at("r").get<int>(), x.at("weight").get<int>(), x.at("h").get<int>(),
                             x.at("at_infinity").get<bool>(), x.at("factor").get<std::string>()});
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace pgl2
