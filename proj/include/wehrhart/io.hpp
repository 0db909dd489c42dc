#pragma once

// JSON forms of the library's values and input files.
//   LaurentPoly          [[exponent, numerator, denominator], ...] by exponent
//   WeightedEhrhartPoly  [LaurentPoly, ...] indexed by the power of z
//   polytope file        {"name": s, "dim": n, "vertices": [[int, ...], ...]}
//   weight file          {"kind": "constant"|"ic"|"indicator"|"subcomplex"|"table",
//                         "face": [int...], "faces": [[int...]...],
//                         "entries": [{"face": [int...], "weight": LaurentPoly}...]}
// Integers that do not fit in 64 bits are written as decimal strings.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "wehrhart/error.hpp"
#include "wehrhart/exact.hpp"
#include "wehrhart/polytope.hpp"
#include "wehrhart/stanley.hpp"

namespace wehrhart::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return Json(static_cast<std::int64_t>(v));
  }
  return Json(v.str());
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

inline std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must contain integers");
    out.push_back(x.get<int>());
  }
  return out;
}

inline FaceId face_id_from_json(const Json& j) {
  FaceId id = int_list(j, "face");
  std::sort(id.begin(), id.end());
  return id;
}

}  // namespace detail

inline Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) {
    out.push_back(Json::array({e, detail::integer_to_json(numerator(c)), detail::integer_to_json(denominator(c))}));
  }
  return out;
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "polynomial must be an array of [exp, num, den] triples");
  LaurentPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 3 || !term[0].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "bad polynomial term " + term.dump());
    }
    const Integer den = detail::integer_from_json(term[2]);
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in " + term.dump());
    p += LaurentPoly::monomial(make_rational(detail::integer_from_json(term[1]), den), term[0].get<int>());
  }
  return p;
}

inline Json to_json(const WeightedEhrhartPoly& e) {
  Json out = Json::array();
  for (const auto& c : e.coefficients()) out.push_back(to_json(c));
  return out;
}

inline WeightedEhrhartPoly ehrhart_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "Ehrhart polynomial must be an array");
  std::vector<LaurentPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(laurent_from_json(c));
  return WeightedEhrhartPoly(std::move(coeffs));
}

inline Json face_id_to_json(const FaceId& id) { return Json(id); }

inline Json to_json(const LatticePolytope& p) {
  Json out;
  out["name"] = p.name();
  out["dim"] = p.ambient_dim();
  out["vertices"] = p.vertices();
  return out;
}

inline LatticePolytope polytope_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "polytope file must hold a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<std::int64_t>() < 1) {
    throw Error(ErrorKind::ParseError, "polytope needs a positive integer \"dim\"");
  }
  if (!j.contains("vertices") || !j["vertices"].is_array()) {
    throw Error(ErrorKind::ParseError, "polytope needs a \"vertices\" array");
  }
  std::string name = "polytope";
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::ParseError, "\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  std::vector<Point> verts;
  for (const auto& v : j["vertices"]) {
    if (!v.is_array()) throw Error(ErrorKind::ParseError, "each vertex must be an array of integers");
    Point p;
    for (const auto& c : v) {
      if (!c.is_number_integer()) throw Error(ErrorKind::ParseError, "vertex coordinates must be integers");
      p.push_back(c.get<std::int64_t>());
    }
    verts.push_back(std::move(p));
  }
  return LatticePolytope(std::move(name), j["dim"].get<std::size_t>(), std::move(verts));
}

inline std::optional<WeightKind> parse_weight_kind(std::string_view s) {
  if (s == "constant") return WeightKind::Constant;
  if (s == "ic") return WeightKind::Ic;
  if (s == "indicator") return WeightKind::Indicator;
  if (s == "subcomplex") return WeightKind::Subcomplex;
  if (s == "table") return WeightKind::Table;
  return std::nullopt;
}

inline WeightSpec weight_spec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw Error(ErrorKind::ParseError, "weight file needs a string \"kind\"");
  }
  const auto kind = parse_weight_kind(j["kind"].get<std::string>());
  if (!kind) throw Error(ErrorKind::ParseError, "unknown weight kind " + j["kind"].dump());
  WeightSpec spec;
  spec.kind = *kind;
  switch (*kind) {
    case WeightKind::Constant:
    case WeightKind::Ic:
      break;
    case WeightKind::Indicator:
      if (!j.contains("face")) throw Error(ErrorKind::ParseError, "indicator weights need \"face\"");
      spec.face = detail::face_id_from_json(j["face"]);
      break;
    case WeightKind::Subcomplex:
      if (!j.contains("faces") || !j["faces"].is_array()) {
        throw Error(ErrorKind::ParseError, "subcomplex weights need a \"faces\" array");
      }
      for (const auto& f : j["faces"]) spec.faces.push_back(detail::face_id_from_json(f));
      break;
    case WeightKind::Table:
      if (!j.contains("entries") || !j["entries"].is_array()) {
        throw Error(ErrorKind::ParseError, "table weights need an \"entries\" array");
      }
      for (const auto& e : j["entries"]) {
        if (!e.is_object() || !e.contains("face") || !e.contains("weight")) {
          throw Error(ErrorKind::ParseError, "table entry needs \"face\" and \"weight\"");
        }
        spec.entries.emplace_back(detail::face_id_from_json(e["face"]), laurent_from_json(e["weight"]));
      }
      break;
  }
  return spec;
}

inline Json to_json(const WeightSpec& spec) {
  Json out;
  switch (spec.kind) {
    case WeightKind::Constant: out["kind"] = "constant"; break;
    case WeightKind::Ic: out["kind"] = "ic"; break;
    case WeightKind::Indicator:
      out["kind"] = "indicator";
      out["face"] = spec.face;
      break;
    case WeightKind::Subcomplex:
      out["kind"] = "subcomplex";
      out["faces"] = spec.faces;
      break;
    case WeightKind::Table: {
      out["kind"] = "table";
      Json entries = Json::array();
      for (const auto& [id, w] : spec.entries) entries.push_back(Json{{"face", id}, {"weight", to_json(w)}});
      out["entries"] = entries;
      break;
    }
  }
  return out;
}

inline Json parse_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

inline Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_text(buffer.str(), path);
}

}  // namespace wehrhart::io
