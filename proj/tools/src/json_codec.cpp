#include "fmlog_cli/json_codec.hpp"

#include <fstream>
#include <sstream>

#include "fmlog/errors.hpp"

namespace fmlog::cli {

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(origin + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw InvalidInput(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Json encode_node(const FMNode& node) {
  if (node.is_leaf()) return Json{{"leaf", node.leaf}};
  Json children = Json::array(), positions = Json::array();
  for (const auto& c : node.children) children.push_back(encode_node(c));
  for (const auto& p : node.positions) positions.push_back(encode(p));
  return Json{{"children", children}, {"positions", positions}};
}

FMNode decode_node(const Json& j, int dim) {
  FMNode node;
  if (j.is_object() && j.contains("leaf")) {
    node.leaf = int_field(j, "leaf");
    return node;
  }
  const Json& children = field(j, "children");
  const Json& positions = field(j, "positions");
  if (!children.is_array() || !positions.is_array() || children.size() != positions.size())
    throw InvalidInput("\"children\" and \"positions\" must be arrays of equal length");
  for (const auto& c : children) node.children.push_back(decode_node(c, dim));
  for (const auto& p : positions) node.positions.push_back(decode_vec(p, dim));
  return node;
}

Json encode_tree_node(const TreeNode& node) {
  if (node.is_leaf()) return Json{{"leaf", node.leaf}};
  Json children = Json::array();
  for (const auto& c : node.children) children.push_back(encode_tree_node(c));
  return Json{{"children", children}};
}

TreeNode decode_tree_node(const Json& j) {
  TreeNode node;
  if (j.is_object() && j.contains("leaf")) {
    node.leaf = int_field(j, "leaf");
    return node;
  }
  const Json& children = field(j, "children");
  if (!children.is_array()) throw InvalidInput("\"children\" must be an array");
  for (const auto& c : children) node.children.push_back(decode_tree_node(c));
  return node;
}

std::vector<Vec> decode_config(const Json& j, int dim) {
  if (!j.is_array()) throw InvalidInput("\"config\" must be an array of points");
  std::vector<Vec> pts;
  for (const auto& p : j) pts.push_back(decode_vec(p, dim));
  return pts;
}

std::string section_name(const LogBundle& b) {
  switch (b.section) {
    case Section::Divisor: return "divisor:" + bundle_key(b.id);
    case Section::Zero: return "zero";
    case Section::Unit: return "unit";
  }
  return "unit";
}

}  // namespace

Json encode(const Rational& r) { return to_string(r); }

Rational decode_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("rationals must be \"p/q\" strings or integers");
}

Json encode(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(encode(x));
  return a;
}

Vec decode_vec(const Json& j, int dim) {
  if (!j.is_array()) throw InvalidInput("vectors must be arrays");
  Vec v;
  for (const auto& x : j) v.push_back(decode_rational(x));
  if (dim >= 0 && static_cast<int>(v.size()) != dim)
    throw InvalidInput("vector of length " + std::to_string(v.size()) + ", expected " + std::to_string(dim));
  return v;
}

Json encode_subset(Mask m) { return Json(labels_of(m)); }

Json encode(const NestedCollection& c) {
  Json a = Json::array();
  for (Mask m : c.masks()) a.push_back(encode_subset(m));
  return a;
}

Json encode(const StableTree& t) { return encode_tree_node(t.root()); }

StableTree decode_tree(const Json& j, int n) { return StableTree(n, decode_tree_node(j)); }

Json encode(const FMPoint& x) {
  return Json{{"D", x.dim()}, {"arity", x.arity()}, {"tree", encode_node(x.root())}};
}

FMPoint decode_point(const Json& j) {
  const int dim = int_field(j, "D");
  if (dim < 1) throw InvalidInput("\"D\" must be positive");
  if (j.contains("config")) return point_from_config(dim, decode_config(j.at("config"), dim));
  return FMPoint(dim, decode_node(field(j, "tree"), dim));
}

Json encode(const FramedFMPoint& x) {
  Json j = encode(x.point);
  Json frames = Json::array();
  for (const auto& f : x.frames) frames.push_back(Json::array({encode(f.c()), encode(f.s())}));
  j["frames"] = frames;
  return j;
}

FramedFMPoint decode_framed(const Json& j) {
  FMPoint p = decode_point(j);
  std::vector<CirclePoint> frames;
  if (j.contains("frames")) {
    for (const auto& f : j.at("frames")) {
      const Vec cs = decode_vec(f, 2);
      frames.emplace_back(cs[0], cs[1]);
    }
  } else {
    frames.assign(p.arity(), CirclePoint());
  }
  return FramedFMPoint(std::move(p), std::move(frames));
}

Json encode(const SimpleScreen& s) {
  Json phi = Json::object();
  for (const auto& [m, c] : s.covectors()) phi[subset_key(m)] = encode(c);
  return Json{{"n", s.arity()}, {"d", s.d()}, {"phi", phi}};
}

SimpleScreen decode_screen(const Json& j) {
  const int d = int_field(j, "d");
  if (d < 1) throw InvalidInput("\"d\" must be positive");
  if (j.contains("config")) return screen_from_config(d, decode_config(j.at("config"), d));
  const int n = int_field(j, "n");
  if (n <= 1) return SimpleScreen(n, d);
  const Json& phi = field(j, "phi");
  if (!phi.is_object()) throw InvalidInput("\"phi\" must be an object keyed by subsets");
  std::map<Mask, Vec> map;
  for (const auto& [key, value] : phi.items()) {
    const Mask m = parse_subset_key(key);
    map[m] = decode_vec(value, d * (popcount(m) - 1));
  }
  return SimpleScreen(n, d, std::move(map));
}

std::string bundle_key(const BundleId& id) {
  const std::string key = subset_key(id.key);
  return id.factor == 0 ? key : std::to_string(id.factor) + ":" + key;
}

Json encode(const LatticeVector& v) {
  Json j = Json::object();
  for (const auto& [id, c] : v) j[bundle_key(id)] = c;
  return j;
}

Json encode(const DFStructure& s) {
  Json a = Json::array();
  for (const auto& b : s.bundles())
    a.push_back(Json{{"bundle", bundle_key(b.id)}, {"class", encode(b.cls)}, {"section", section_name(b)}});
  return a;
}

Json encode_rows(const LogMorphism& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows().size(); ++i) {
    const LogRow& row = m.rows()[i];
    Json exps = Json::object();
    for (const auto& e : row.entries) exps[bundle_key(e.col)] = e.exp;
    rows.push_back(Json{{"target", bundle_key(m.target().bundles()[i].id)},
                        {"exponents", exps},
                        {"pulled", to_string(row.pulled)}});
  }
  return rows;
}

Json encode(const LogMorphism& m, bool with_structures) {
  Json j{{"kind", m.kind() == MorphismKind::StrictDF ? "strict" : "virtual"}, {"rows", encode_rows(m)}};
  if (with_structures) {
    j["source"] = encode(m.source());
    j["target"] = encode(m.target());
    j["matrix"] = m.matrix();
  }
  return j;
}

Json encode(const CheckResult& r) {
  return Json{{"name", r.name}, {"ok", r.ok}, {"cases", r.cases}, {"detail", r.detail}};
}

Json encode(const kn::Report& r) {
  return Json{{"name", r.name},
              {"ok", r.ok()},
              {"checked", r.checked},
              {"max_error", r.max_error},
              {"failed", r.failed},
              {"failures", r.failures}};
}

}  // namespace fmlog::cli
