#include "skb/io.hpp"

#include <fstream>

#include "skb/central_product.hpp"

namespace skb {

namespace {

using nlohmann::json;

const json& expect(const json& j, const char* field) {
  auto it = j.find(field);
  if (it == j.end())
    fail(Errc::format_error, std::string("missing field '") + field + "'");
  return *it;
}

std::vector<std::vector<Elem>> read_table(const json& j, const char* field,
                                          int order) {
  const json& rows = expect(j, field);
  if (!rows.is_array() || static_cast<int>(rows.size()) != order)
    fail(Errc::format_error, std::string("field '") + field + "' must be a " +
                                 std::to_string(order) + "-row table");
  std::vector<std::vector<Elem>> out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      fail(Errc::format_error,
           std::string("field '") + field + "' has a row of wrong length");
    std::vector<Elem> r;
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number_integer())
        fail(Errc::format_error,
             std::string("field '") + field + "' has a non-integer entry");
      r.push_back(v.get<Elem>());
    }
    out.push_back(std::move(r));
  }
  return out;
}

int read_order(const json& j) {
  const json& o = expect(j, "order");
  if (!o.is_number_integer() || o.get<int>() < 1)
    fail(Errc::format_error, "'order' must be a positive integer");
  int order = o.get<int>();
  if (order > kDenseOrderCap)
    fail(Errc::format_error, "dense tables are limited to order " +
                                 std::to_string(kDenseOrderCap) +
                                 "; use the factored format");
  return order;
}

std::string read_name(const json& j) {
  auto it = j.find("name");
  if (it == j.end() || !it->is_string()) return "";
  return it->get<std::string>();
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::format_error, "cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    fail(Errc::format_error, "JSON parse error in '" + path + "': " + e.what());
  }
}

void write_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(Errc::format_error, "cannot write '" + path + "'");
  out << j.dump(1) << "\n";
}

}  // namespace

nlohmann::json group_to_json(const Group& g) {
  if (g.order() > kDenseOrderCap)
    fail(Errc::format_error, "group exceeds the dense serialization cap");
  json j;
  j["format"] = "group-table/v1";
  j["order"] = g.order();
  j["op"] = g.table();
  if (!g.name().empty()) j["name"] = g.name();
  return j;
}

Group group_from_json(const nlohmann::json& j, const CheckOptions&) {
  if (!j.is_object() || expect(j, "format") != "group-table/v1")
    fail(Errc::format_error, "expected format 'group-table/v1'");
  int order = read_order(j);
  return validate_group(read_table(j, "op", order), read_name(j));
}

Group load_group(const std::string& path, const CheckOptions& opts) {
  return group_from_json(parse_file(path), opts);
}

void save_group(const Group& g, const std::string& path) {
  write_file(group_to_json(g), path);
}

nlohmann::json brace_to_json(const SkewBrace& b) {
  json j;
  if (b.order() <= kDenseOrderCap) {
    j["format"] = "skewbrace-table/v1";
    j["order"] = b.order();
    j["add"] = b.add().table();
    j["mul"] = b.mul().table();
    if (!b.name().empty()) j["name"] = b.name();
    return j;
  }
  const auto& cp = b.central_product_data();
  if (!cp)
    fail(Errc::format_error,
         "refusing a dense dump of order " + std::to_string(b.order()) +
             " and no factored form is available");
  j["format"] = "skewbrace-centralproduct/v1";
  j["left"] = brace_to_json(*cp->left);
  j["right"] = brace_to_json(*cp->right);
  j["left_ideal"] = cp->left_ideal;
  j["right_ideal"] = cp->right_ideal;
  json alpha = json::array();
  for (auto [src, dst] : cp->alpha) alpha.push_back(json::array({src, dst}));
  j["alpha"] = alpha;
  if (!b.name().empty()) j["name"] = b.name();
  return j;
}

SkewBrace brace_from_json(const nlohmann::json& j, const CheckOptions& opts) {
  if (!j.is_object()) fail(Errc::format_error, "expected a JSON object");
  const json& format = expect(j, "format");
  if (format == "skewbrace-table/v1") {
    int order = read_order(j);
    return validate_brace(read_table(j, "add", order),
                          read_table(j, "mul", order), read_name(j), opts);
  }
  if (format == "skewbrace-centralproduct/v1") {
    CentralProductSpec spec;
    spec.b1 = brace_from_json(expect(j, "left"), opts);
    spec.b2 = brace_from_json(expect(j, "right"), opts);
    const json& li = expect(j, "left_ideal");
    const json& ri = expect(j, "right_ideal");
    if (!li.is_array() || !ri.is_array())
      fail(Errc::format_error, "ideals must be element arrays");
    spec.i1 = ElementSet::from_elements(spec.b1.order(),
                                        li.get<std::vector<Elem>>());
    spec.i2 = ElementSet::from_elements(spec.b2.order(),
                                        ri.get<std::vector<Elem>>());
    const json& alpha = expect(j, "alpha");
    if (!alpha.is_array()) fail(Errc::format_error, "'alpha' must be an array");
    for (const auto& pair : alpha) {
      if (!pair.is_array() || pair.size() != 2)
        fail(Errc::format_error, "'alpha' entries must be [i, j] pairs");
      spec.alpha.push_back({pair[0].get<Elem>(), pair[1].get<Elem>()});
    }
    SkewBrace b = external_central_product(spec, opts).product;
    std::string name = read_name(j);
    return name.empty() ? b : b.with_name(name);
  }
  fail(Errc::format_error, "unknown format '" + format.dump() + "'");
}

SkewBrace load_brace(const std::string& path, const CheckOptions& opts) {
  return brace_from_json(parse_file(path), opts);
}

void save_brace(const SkewBrace& b, const std::string& path) {
  write_file(brace_to_json(b), path);
}

nlohmann::json morphism_to_json(const BraceMorphism& m) {
  json j;
  j["format"] = "morphism/v1";
  j["map"] = m.map;
  return j;
}

std::vector<Elem> morphism_map_from_json(const nlohmann::json& j) {
  if (!j.is_object() || expect(j, "format") != "morphism/v1")
    fail(Errc::format_error, "expected format 'morphism/v1'");
  const json& map = expect(j, "map");
  if (!map.is_array()) fail(Errc::format_error, "'map' must be an array");
  return map.get<std::vector<Elem>>();
}

}  // namespace skb
