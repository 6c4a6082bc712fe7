#include "mo/json_io.hpp"

#include <json.hpp>

#include <map>

#include "mo/error.hpp"

namespace mo {

using nlohmann::json;

namespace {

json parse_or_raise(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) raise(Errc::parse, "malformed JSON");
  return doc;
}

std::vector<long long> int_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) raise(Errc::parse, std::string(key) + ": expected an array");
  std::vector<long long> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) raise(Errc::parse, std::string(key) + ": expected integers");
    out.push_back(v.get<long long>());
  }
  return out;
}

Poset poset_from(const json& doc) {
  if (!doc.contains("elements") || !doc["elements"].is_array())
    raise(Errc::parse, "poset: missing \"elements\"");
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) raise(Errc::parse, "poset: element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<int, int>> covers;
  if (doc.contains("covers")) {
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
        raise(Errc::parse, "poset: covers must be [lower, upper] index pairs");
      covers.emplace_back(c[0].get<int>(), c[1].get<int>());
    }
  }
  return Poset::from_covers(std::move(labels), covers);
}

SkewShape skew_from(const json& doc) {
  std::vector<long long> mu;
  if (doc.contains("mu")) mu = int_list(doc, "mu");
  return SkewShape::create(int_list(doc, "lambda"), mu);
}

MarkedPoset marked_from(const json& doc) {
  Poset p = poset_from(doc);
  if (!doc.contains("marked") || !doc["marked"].is_object())
    raise(Errc::parse, "marked poset: missing \"marked\" object");
  std::map<int, long long> marks;
  for (const auto& [label, value] : doc["marked"].items()) {
    if (!value.is_number_integer()) raise(Errc::parse, "marked: values must be integers");
    int id = -1;
    for (int v = 0; v < p.size(); ++v)
      if (p.label(v) == label) id = v;
    if (id < 0) raise(Errc::parse, "marked: unknown element label " + label);
    marks[id] = value.get<long long>();
  }
  return MarkedPoset::create(std::move(p), marks);
}

FamilyInstance family_from(const json& doc) {
  if (!doc.contains("family") || !doc["family"].is_string())
    raise(Errc::parse, "spec: missing \"family\"");
  const std::string family = doc["family"].get<std::string>();
  FamilyInstance out;
  if (family == "ps")
    out.kind = FamilyInstance::Kind::ps;
  else if (family == "gt")
    out.kind = FamilyInstance::Kind::gt;
  else if (family == "gt-flagged")
    out.kind = FamilyInstance::Kind::gt_flagged;
  else
    raise(Errc::parse, "spec: unknown family " + family);
  if (!doc.contains("k") || !doc["k"].is_number_integer() || !doc.contains("m") ||
      !doc["m"].is_number_integer())
    raise(Errc::parse, "spec: k and m must be integers");
  out.spec = GridSpec::create(doc["k"].get<int>(), doc["m"].get<int>(), int_list(doc, "y"),
                              int_list(doc, "z"));
  if (out.kind == FamilyInstance::Kind::gt_flagged)
    out.flags = FlagSpec::create(int_list(doc, "a"), int_list(doc, "b"), out.spec.k, out.spec.m);
  return out;
}

}  // namespace

MarkedPoset FamilyInstance::to_marked() const {
  switch (kind) {
    case Kind::ps:
      return pitman_stanley_marked(spec);
    case Kind::gt:
      return gelfand_tsetlin_marked(spec);
    case Kind::gt_flagged:
      return flagged_face_marked(spec, *flags);
  }
  raise(Errc::invalid_argument, "unreachable family kind");
}

Document read_document(const std::string& text) {
  json doc = parse_or_raise(text);
  if (!doc.is_object()) raise(Errc::parse, "expected a JSON object");
  if (doc.contains("family")) return family_from(doc);
  if (doc.contains("marked")) return marked_from(doc);
  if (doc.contains("elements")) return poset_from(doc);
  if (doc.contains("lambda")) return skew_from(doc);
  raise(Errc::parse, "unrecognized document: expected a poset, skew shape, marked poset, or family spec");
}

Poset poset_from_json(const std::string& text) { return poset_from(parse_or_raise(text)); }
SkewShape skew_from_json(const std::string& text) { return skew_from(parse_or_raise(text)); }
MarkedPoset marked_from_json(const std::string& text) { return marked_from(parse_or_raise(text)); }
FamilyInstance family_from_json(const std::string& text) {
  return family_from(parse_or_raise(text));
}

namespace {

json poset_json(const Poset& p) {
  json doc;
  doc["elements"] = p.labels();
  auto& covers = doc["covers"] = json::array();
  for (auto [lo, hi] : p.covers()) covers.push_back({lo, hi});
  return doc;
}

}  // namespace

std::string poset_to_json(const Poset& p) { return poset_json(p).dump(); }

std::string skew_to_json(const SkewShape& s) {
  json doc;
  doc["lambda"] = s.lambda;
  doc["mu"] = s.mu;
  return doc.dump();
}

std::string marked_to_json(const MarkedPoset& m) {
  json doc = poset_json(m.poset());
  auto& marks = doc["marked"] = json::object();
  m.marked().for_each([&](int a) { marks[m.poset().label(a)] = m.mark(a); });
  return doc.dump();
}

std::string family_to_json(const FamilyInstance& f) {
  json doc;
  switch (f.kind) {
    case FamilyInstance::Kind::ps:
      doc["family"] = "ps";
      break;
    case FamilyInstance::Kind::gt:
      doc["family"] = "gt";
      break;
    case FamilyInstance::Kind::gt_flagged:
      doc["family"] = "gt-flagged";
      break;
  }
  doc["k"] = f.spec.k;
  doc["m"] = f.spec.m;
  doc["y"] = f.spec.y;
  doc["z"] = f.spec.z;
  if (f.flags) {
    doc["a"] = f.flags->a;
    doc["b"] = f.flags->b;
  }
  return doc.dump();
}

std::string multipoly_to_json(const MultiPoly& p) {
  json doc;
  doc["nvars"] = p.nvars();
  auto& terms = doc["terms"] = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    json term;
    term["exp"] = it->first;
    term["num"] = it->second.get_num().get_str();
    term["den"] = it->second.get_den().get_str();
    terms.push_back(std::move(term));
  }
  return doc.dump();
}

MarkedPoset marked_from_document(const Document& doc) {
  if (const auto* m = std::get_if<MarkedPoset>(&doc)) return *m;
  if (const auto* f = std::get_if<FamilyInstance>(&doc)) return f->to_marked();
  raise(Errc::parse, "expected a marked poset or family spec document");
}

Poset poset_from_document(const Document& doc) {
  if (const auto* p = std::get_if<Poset>(&doc)) return *p;
  if (const auto* s = std::get_if<SkewShape>(&doc)) return skew_shape_poset(*s);
  raise(Errc::parse, "expected a poset or skew shape document");
}

}  // namespace mo
