#include "zonocube/io.hpp"

#include <algorithm>
#include <cctype>

namespace zonocube::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw MalformedInput(what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

void only_fields(const Json& j, std::initializer_list<const char*> names) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(names.begin(), names.end(), [&](const char* n) { return key == n; })) {
      bad("unexpected field \"" + key + "\"");
    }
  }
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InvalidArgument& e) {
    throw MalformedInput(e.what());
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump() + "\n"; }

Json to_json(ColorSet s) {
  Json arr = Json::array();
  for (int c : s) arr.push_back(c);
  return arr;
}

Json to_json(const std::vector<ColorSet>& sets) {
  Json arr = Json::array();
  for (ColorSet s : sets) arr.push_back(to_json(s));
  return arr;
}

Json to_json(const Cubillage& Q) {
  Json cubes = Json::array();
  for (const Cube& c : Q.cubes()) cubes.push_back(Json{{"root", to_json(c.root)}, {"type", to_json(c.type)}});
  return Json{{"colors", to_json(Q.colors())}, {"d", Q.dim()}, {"cubes", cubes}};
}

Json to_json(const SetSystem& S) { return Json{{"n", S.n}, {"sets", to_json(S.sets)}}; }

Json to_json(const Membrane& M) {
  Json plates = Json::array();
  for (const Facet& f : M.plates) plates.push_back(Json{{"root", to_json(f.root)}, {"type", to_json(f.type)}});
  return Json{{"plates", plates}};
}

Json to_json(const AdmissibleOrder& O) {
  Json rel = Json::array();
  for (const auto& [a, b] : O.relations) rel.push_back(Json::array({to_json(a), to_json(b)}));
  return Json{{"n", O.n}, {"d", O.d}, {"relations", rel}};
}

Json to_json(const Triangulation& T) {
  return Json{{"n", T.n}, {"d", T.d}, {"simplices", to_json(T.simplices)}};
}

ColorSet color_set_from_json(const Json& j) {
  if (!j.is_array()) bad("a color set must be a JSON array");
  std::vector<int> colors;
  for (const Json& c : j) {
    if (!c.is_number_integer()) bad("colors must be integers");
    colors.push_back(c.get<int>());
  }
  return guarded([&] { return ColorSet::from_sequence(colors); });
}

std::vector<ColorSet> color_sets_from_json(const Json& j) {
  if (!j.is_array()) bad("expected a JSON array of color sets");
  std::vector<ColorSet> out;
  for (const Json& s : j) out.push_back(color_set_from_json(s));
  return out;
}

Cubillage cubillage_from_json(const Json& j) {
  only_fields(j, {"colors", "d", "cubes"});
  ColorSet colors = color_set_from_json(field(j, "colors"));
  int d = int_field(j, "d");
  const Json& cubes = field(j, "cubes");
  if (!cubes.is_array()) bad("\"cubes\" must be an array");
  std::vector<Cube> out;
  for (const Json& c : cubes) {
    only_fields(c, {"root", "type"});
    out.push_back({color_set_from_json(field(c, "root")), color_set_from_json(field(c, "type"))});
  }
  return guarded([&] { return Cubillage(colors, d, std::move(out)); });
}

SetSystem set_system_from_json(const Json& j) {
  only_fields(j, {"n", "sets"});
  int n = int_field(j, "n");
  std::vector<ColorSet> sets = color_sets_from_json(field(j, "sets"));
  return guarded([&] { return SetSystem(n, std::move(sets)); });
}

Membrane membrane_from_json(const Json& j) {
  only_fields(j, {"plates"});
  const Json& plates = field(j, "plates");
  if (!plates.is_array()) bad("\"plates\" must be an array");
  Membrane M;
  for (const Json& p : plates) {
    only_fields(p, {"root", "type"});
    M.plates.push_back({color_set_from_json(field(p, "root")), color_set_from_json(field(p, "type"))});
  }
  std::sort(M.plates.begin(), M.plates.end());
  return M;
}

AdmissibleOrder order_from_json(const Json& j) {
  only_fields(j, {"n", "d", "relations"});
  AdmissibleOrder O;
  O.n = int_field(j, "n");
  O.d = int_field(j, "d");
  const Json& rel = field(j, "relations");
  if (!rel.is_array()) bad("\"relations\" must be an array");
  for (const Json& r : rel) {
    if (!r.is_array() || r.size() != 2) bad("each relation must be a pair of sets");
    O.relations.emplace_back(color_set_from_json(r[0]), color_set_from_json(r[1]));
  }
  return O;
}

Triangulation triangulation_from_json(const Json& j) {
  only_fields(j, {"n", "d", "simplices"});
  Triangulation T;
  T.n = int_field(j, "n");
  T.d = int_field(j, "d");
  T.simplices = color_sets_from_json(field(j, "simplices"));
  std::sort(T.simplices.begin(), T.simplices.end());
  return T;
}

ColorSet parse_set(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) bad("empty set description");
  if (t.front() == '[') return color_set_from_json(parse(t));
  if (t == "0") return {};
  std::vector<int> colors;
  for (char ch : t) {
    if (ch < '1' || ch > '9') bad("set \"" + text + "\" must be a digit word or a JSON array");
    colors.push_back(ch - '0');
  }
  return guarded([&] { return ColorSet::from_sequence(colors); });
}

std::vector<ColorSet> parse_set_list(const std::string& text) {
  auto first = std::find_if(text.begin(), text.end(), [](char ch) { return !std::isspace(static_cast<unsigned char>(ch)); });
  if (first != text.end() && *first == '[') return color_sets_from_json(parse(text));
  std::vector<ColorSet> out;
  std::string word;
  for (char ch : text + ",") {
    if (ch == ',' || ch == ' ' || ch == '\n' || ch == '\t') {
      if (!word.empty()) out.push_back(parse_set(word));
      word.clear();
    } else {
      word += ch;
    }
  }
  return out;
}

}  // namespace zonocube::io
