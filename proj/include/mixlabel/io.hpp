#pragma once

// JSON files for instances and labelings. Coordinates are strings holding a
// decimal ("-1.25", "3e-2") or a fraction ("1/3"), parsed exactly.

#include "instance.hpp"
#include "routing.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <regex>
#include <sstream>

namespace mixlabel {

using Json = nlohmann::json;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Scalar parse_decimal(const std::string& s) {
  static const std::regex dec(R"(^\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*$)");
  static const std::regex frac(R"(^\s*([+-]?\d+)\s*/\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    Integer den(m[2].str(), 10);
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    std::string num = m[1].str();
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    Scalar v{Integer(num, 10), den};
    v.canonicalize();
    return v;
  }
  if (!std::regex_match(s, m, dec) || (m[2].length() == 0 && m[3].length() == 0))
    throw ParseError("not a decimal number: '" + s + "'");
  std::string digits = m[2].str() + m[3].str();
  long exp = -static_cast<long>(m[3].length());
  if (m[4].matched) {
    try {
      exp += std::stol(m[4].str());
    } catch (const std::exception&) {
      throw ParseError("exponent out of range in '" + s + "'");
    }
  }
  if (exp > 4000 || exp < -4000) throw ParseError("exponent out of range in '" + s + "'");
  Scalar v{Integer(digits.empty() ? std::string("0") : digits, 10)};
  Integer ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp >= 0) {
    v *= ten_pow;
  } else {
    v /= ten_pow;
  }
  if (m[1].str() == "-") v = -v;
  v.canonicalize();
  return v;
}

/// Finite decimal when the denominator is 2^a 5^b, otherwise "p/q".
inline std::string format_scalar(const Scalar& v) {
  Integer den = v.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return v.get_num().get_str() + "/" + v.get_den().get_str();
  const int k = std::max(twos, fives);
  if (k == 0) return v.get_num().get_str();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(k));
  Integer digits = abs(v.get_num()) * (scale / v.get_den());
  std::string ds = digits.get_str();
  if (ds.size() <= static_cast<std::size_t>(k)) ds.insert(0, static_cast<std::size_t>(k) - ds.size() + 1, '0');
  ds.insert(ds.size() - static_cast<std::size_t>(k), ".");
  return (v < 0 ? "-" : "") + ds;
}

inline Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Scalar(Integer(std::to_string(j.get<unsigned long long>()), 10))
                                  : Scalar(Integer(std::to_string(j.get<long long>()), 10));
  }
  if (j.is_number_float()) {
    // Accept a binary float only when its shortest decimal spelling is exact.
    const double d = j.get<double>();
    char buf[64];
    auto r = std::to_chars(buf, buf + sizeof buf, d);
    std::string text(buf, r.ptr);
    Scalar dec = parse_decimal(text);
    if (dec != exact_from_double(d))
      throw ParseError("number " + text + " is not exact in binary; write it as a string, e.g. \"" + text + "\"");
    return dec;
  }
  throw ParseError("expected a number, got " + j.dump());
}

inline Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected [x, y], got " + j.dump());
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

inline Json point_to_json(const Point& p) { return Json::array({format_scalar(p.x), format_scalar(p.y)}); }

inline Polygon polygon_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a vertex list");
  Polygon poly;
  for (const auto& v : j) poly.push_back(point_from_json(v));
  return poly;
}

inline Json polygon_to_json(const Polygon& poly) {
  Json a = Json::array();
  for (const auto& v : poly) a.push_back(point_to_json(v));
  return a;
}

inline Json direction_to_json(const Direction& d) { return Json::array({d.dx().get_str(), d.dy().get_str()}); }

inline Direction direction_from_json(const Json& j) {
  Point v = point_from_json(j);
  if (v.x == 0 && v.y == 0) throw ParseError("zero direction");
  return Direction(v.x, v.y);
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (!j.contains("points")) throw ParseError("instance has no \"points\"");
  Instance inst;
  for (const auto& p : j.at("points")) inst.points.push_back(point_from_json(p));
  if (j.contains("label")) {
    const auto& l = j.at("label");
    inst.label_w = scalar_from_json(l.at("w"));
    inst.label_h = scalar_from_json(l.at("h"));
  }
  if (j.contains("direction") && j.contains("theta")) throw ParseError("give either \"theta\" or \"direction\"");
  if (j.contains("direction")) inst.direction = direction_from_json(j.at("direction"));
  if (j.contains("theta")) {
    if (!j.at("theta").is_number()) throw ParseError("theta must be a number (radians)");
    try {
      inst.direction = direction_from_theta(j.at("theta").get<double>());
    } catch (const DomainError& e) {
      throw ParseError(e.what());
    }
  }
  if (j.contains("map")) inst.map = polygon_from_json(j.at("map"));
  if (j.contains("obstacles"))
    for (const auto& o : j.at("obstacles")) {
      try {
        inst.obstacles.emplace_back(polygon_from_json(o));
      } catch (const DomainError& e) {
        throw ParseError(e.what());
      }
    }
  try {
    inst.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return inst;
}

inline Json instance_to_json(const Instance& inst) {
  Json j;
  j["points"] = Json::array();
  for (const auto& p : inst.points) j["points"].push_back(point_to_json(p));
  j["label"] = {{"w", format_scalar(inst.label_w)}, {"h", format_scalar(inst.label_h)}};
  if (inst.direction) j["direction"] = direction_to_json(*inst.direction);
  if (inst.map) j["map"] = polygon_to_json(*inst.map);
  if (!inst.obstacles.empty()) {
    j["obstacles"] = Json::array();
    for (const auto& o : inst.obstacles) j["obstacles"].push_back(polygon_to_json(o.polygon));
  }
  return j;
}

inline bool same_instance(const Instance& a, const Instance& b) {
  if (a.points != b.points || a.label_w != b.label_w || a.label_h != b.label_h) return false;
  if (a.direction != b.direction || a.map != b.map || a.obstacles.size() != b.obstacles.size()) return false;
  for (std::size_t i = 0; i < a.obstacles.size(); ++i)
    if (a.obstacles[i].polygon != b.obstacles[i].polygon) return false;
  return true;
}

struct LabelingFile {
  Labeling labeling;
  std::vector<RoutedExternal> routes;  // may be empty
  long long optimum = 0;
  Direction direction{-1, 0};
  std::string mode;
  bool valid = false;  // as recorded; callers recompute
};

inline Json rect_to_json(const Rect& r) {
  return {{"anchor", point_to_json(r.anchor)}, {"w", format_scalar(r.w)}, {"h", format_scalar(r.h)}};
}

inline Rect rect_from_json(const Json& j) {
  return Rect(point_from_json(j.at("anchor")), scalar_from_json(j.at("w")), scalar_from_json(j.at("h")));
}

inline Json labeling_to_json(const LabelingFile& f) {
  Json j;
  j["internal"] = f.labeling.internal;
  j["external"] = Json::array();
  for (auto i : f.labeling.external) {
    Json e{{"index", i}};
    for (const auto& r : f.routes) {
      if (r.index != i) continue;
      e["boundary_exit"] = point_to_json(r.boundary_exit);
      e["outer_path"] = polygon_to_json(r.outer_path);
      e["label"] = rect_to_json(r.label_rect);
    }
    j["external"].push_back(e);
  }
  j["optimum"] = f.optimum;
  j["direction"] = direction_to_json(f.direction);
  j["theta"] = f.direction.theta();
  j["mode"] = f.mode;
  j["valid"] = f.valid;
  return j;
}

inline LabelingFile labeling_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("labeling must be a JSON object");
  LabelingFile f;
  try {
    for (const auto& i : j.at("internal")) f.labeling.internal.push_back(i.get<std::size_t>());
    for (const auto& e : j.at("external")) {
      if (e.is_number()) {
        f.labeling.external.push_back(e.get<std::size_t>());
        continue;
      }
      const auto idx = e.at("index").get<std::size_t>();
      f.labeling.external.push_back(idx);
      if (e.contains("label")) {
        RoutedExternal r;
        r.index = idx;
        r.boundary_exit = point_from_json(e.at("boundary_exit"));
        r.outer_path = polygon_from_json(e.at("outer_path"));
        r.label_rect = rect_from_json(e.at("label"));
        f.routes.push_back(std::move(r));
      }
    }
    f.optimum = j.value("optimum", static_cast<long long>(f.labeling.internal.size()));
    if (j.contains("direction")) f.direction = direction_from_json(j.at("direction"));
    f.mode = j.value("mode", std::string{});
    f.valid = j.value("valid", false);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad labeling file: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad labeling file: ") + e.what());
  }
  return f;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace mixlabel
