#include "segstab/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace segstab {

namespace {

const char* orient_name(Orientation o) { return o == Orientation::horizontal ? "h" : "v"; }

Orientation orient_from(const std::string& s) {
  if (s == "h" || s == "horizontal") return Orientation::horizontal;
  if (s == "v" || s == "vertical") return Orientation::vertical;
  throw Error("unknown orientation '" + s + "'");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(std::string("missing field '") + key + "'");
  return j.at(key);
}

Json triple(const std::array<Rational, 3>& p) { return Json::array({to_json(p[0]), to_json(p[1]), to_json(p[2])}); }

}  // namespace

Json to_json(const Rational& q) { return format_rational(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_number()) return parse_rational(j.dump());
  throw Error("expected a rational, got " + j.dump());
}

Json to_json(const Rect& r) {
  return Json{{"id", r.id},
              {"x1", to_json(r.x_left)},
              {"x2", to_json(r.x_right)},
              {"y1", to_json(r.y_bottom)},
              {"y2", to_json(r.y_top)},
              {"mult", r.multiplicity}};
}

Json to_json(const Segment& s) {
  return Json{{"id", s.id},
              {"x1", to_json(s.x_left)},
              {"x2", to_json(s.x_right)},
              {"y", to_json(s.y)},
              {"orient", orient_name(s.orientation)}};
}

Rect rect_from_json(const Json& j) {
  Rect r;
  r.id = field(j, "id").get<int>();
  r.x_left = rational_from_json(field(j, "x1"));
  r.x_right = rational_from_json(field(j, "x2"));
  r.y_bottom = rational_from_json(field(j, "y1"));
  r.y_top = rational_from_json(field(j, "y2"));
  r.multiplicity = j.value("mult", 1);
  return r;
}

Segment segment_from_json(const Json& j) {
  Segment s;
  s.id = field(j, "id").get<int>();
  s.x_left = rational_from_json(field(j, "x1"));
  s.x_right = rational_from_json(field(j, "x2"));
  s.y = rational_from_json(field(j, "y"));
  s.orientation = orient_from(j.value("orient", std::string("h")));
  return s;
}

Json to_json(const StabInstance& inst) {
  Json j;
  j["objective"] = inst.objective == Objective::length ? "length" : "cardinality";
  j["hv"] = inst.hv;
  j["rects"] = Json::array();
  for (const auto& r : inst.rects) j["rects"].push_back(to_json(r));
  if (inst.fixed_candidates) {
    j["candidates"] = Json::array();
    for (const auto& s : *inst.fixed_candidates) j["candidates"].push_back(to_json(s));
  }
  return j;
}

StabInstance instance_from_json(const Json& j) {
  StabInstance inst;
  std::string objective = j.value("objective", std::string("length"));
  if (objective == "length") {
    inst.objective = Objective::length;
  } else if (objective == "cardinality") {
    inst.objective = Objective::cardinality;
  } else {
    throw Error("unknown objective '" + objective + "'");
  }
  inst.hv = j.value("hv", false);
  for (const auto& r : field(j, "rects")) inst.rects.push_back(rect_from_json(r));
  if (j.contains("candidates") && !j.at("candidates").is_null()) {
    std::vector<Segment> cands;
    for (const auto& s : j.at("candidates")) cands.push_back(segment_from_json(s));
    inst.fixed_candidates = std::move(cands);
  }
  inst.validate();
  return inst;
}

Json to_json(const Solution& sol) {
  Json j;
  j["segments"] = Json::array();
  for (const auto& s : sol.segments) j["segments"].push_back(to_json(s));
  j["cost"] = to_json(sol.cost);
  Json assignment = Json::object();
  for (const auto& [rect, seg] : sol.assignment) assignment[std::to_string(rect)] = seg;
  j["assignment"] = assignment;
  return j;
}

Solution solution_from_json(const Json& j) {
  Solution sol;
  for (const auto& s : field(j, "segments")) sol.segments.push_back(segment_from_json(s));
  sol.cost = rational_from_json(field(j, "cost"));
  if (j.contains("assignment")) {
    for (const auto& [key, value] : j.at("assignment").items()) {
      try {
        sol.assignment[std::stoi(key)] = value.get<int>();
      } catch (const std::exception&) {
        throw Error("bad assignment entry '" + key + "'");
      }
    }
  }
  return sol;
}

Json to_json(const LaminarDecomposition& dec) {
  Json j;
  j["scale"] = to_json(dec.scale);
  j["shift"] = to_json(dec.shift);
  j["max_stretch"] = to_json(dec.max_stretch());
  j["segments"] = Json::array();
  for (const auto& s : dec.snapped) {
    Json e = to_json(s.snapped);
    e["family"] = s.family;
    e["level"] = s.level;
    e["stretch"] = to_json(s.stretch);
    e["original"] = to_json(s.original);
    j["segments"].push_back(e);
  }
  return j;
}

Json to_json(const PiercingInstance3D& p) {
  Json j;
  j["boxes"] = Json::array();
  for (const auto& b : p.boxes) j["boxes"].push_back(Json{{"id", b.id}, {"lo", triple(b.lo)}, {"hi", triple(b.hi)}});
  j["points"] = Json::array();
  for (const auto& q : p.points) {
    j["points"].push_back(Json{{"id", q.id}, {"at", triple(q.at)}, {"weight", to_json(q.weight)}});
  }
  return j;
}

Json to_json(const SpscInstance& s) {
  Json j;
  j["n"] = s.n;
  j["m"] = s.m;
  j["triples"] = s.triples;
  j["sets"] = s.sets;
  return j;
}

Json to_json(const NPGadgetInstance& np) {
  Json j;
  j["n"] = np.n;
  j["overlap"] = to_json(np.overlap);
  j["c"] = to_json(np.c);
  j["grid_scale"] = to_json(np.grid_scale);
  j["vertices"] = Json::array();
  for (const auto& v : np.vertices) {
    Json g;
    g["vertex"] = v.vertex;
    g["rects"] = v.rect_ids;
    g["len_act"] = to_json(v.len_act);
    g["len_ina"] = to_json(v.len_ina);
    g["s_act"] = Json::array();
    for (const auto& s : v.s_act) g["s_act"].push_back(to_json(s));
    g["s_ina"] = Json::array();
    for (const auto& s : v.s_ina) g["s_ina"].push_back(to_json(s));
    j["vertices"].push_back(g);
  }
  j["edges"] = Json::array();
  for (const auto& e : np.edges) {
    j["edges"].push_back(Json{{"edge", e.edge}, {"rect", e.rect_id}, {"left", e.left}, {"right", e.right}});
  }
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

void write_output(const std::filesystem::path& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace segstab
