#include <fstream>
#include <limits>
#include <regex>
#include <set>
#include <sstream>

#include "eqzeta/error.hpp"
#include "eqzeta/io.hpp"

namespace eqzeta::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ValidationError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string child(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string child(const std::string& where, std::size_t i) {
  return where + "/" + std::to_string(i);
}

void check_fields(const json& node, const std::string& where,
                  std::initializer_list<const char*> allowed) {
  if (!node.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : node.items()) {
    bool known = key == "comment";
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail(child(where, key), "unknown field");
  }
}

const json& field(const json& node, const std::string& key, const std::string& where) {
  auto it = node.find(key);
  if (it == node.end()) fail(child(where, key), "missing field");
  return *it;
}

long long as_integer(const json& node, const std::string& where) {
  if (node.is_number_unsigned()) {
    const auto v = node.get<unsigned long long>();
    if (v > static_cast<unsigned long long>(std::numeric_limits<long long>::max())) {
      fail(where, "integer out of range");
    }
    return static_cast<long long>(v);
  }
  if (!node.is_number_integer()) fail(where, "expected an integer");
  return node.get<long long>();
}

int as_int(const json& node, const std::string& where, long long lo = 0,
           long long hi = std::numeric_limits<int>::max()) {
  const long long v = as_integer(node, where);
  if (v < lo || v > hi) {
    fail(where, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

BigInt as_bigint(const json& node, const std::string& where) {
  if (node.is_string()) {
    static const std::regex decimal("-?[0-9]+");
    const auto& s = node.get_ref<const std::string&>();
    if (!std::regex_match(s, decimal)) fail(where, "expected a decimal integer string");
    return BigInt(s);
  }
  if (node.is_number_unsigned()) return BigInt(node.get<unsigned long long>());
  return BigInt(as_integer(node, where));
}

const json& as_array(const json& node, const std::string& where) {
  if (!node.is_array()) fail(where, "expected an array");
  return node;
}

std::vector<int> int_array(const json& node, const std::string& where, long long lo, long long hi) {
  std::vector<int> out;
  for (std::size_t i = 0; i < as_array(node, where).size(); ++i) {
    out.push_back(as_int(node[i], child(where, i), lo, hi));
  }
  return out;
}

Element as_element(const FiniteGroup& g, const json& node, const std::string& where) {
  if (node.is_string()) {
    const Element a = g.find_label(node.get<std::string>());
    if (a < 0) fail(where, "unknown element label '" + node.get<std::string>() + "'");
    return a;
  }
  return as_int(node, where, 0, g.order() - 1);
}

Subgroup as_subgroup(const FiniteGroup& g, const json& node, const std::string& where) {
  std::vector<Element> elements;
  for (std::size_t i = 0; i < as_array(node, where).size(); ++i) {
    elements.push_back(as_element(g, node[i], child(where, i)));
  }
  if (!g.is_subgroup(elements)) fail(where, "elements do not form a subgroup");
  return Subgroup(std::move(elements));
}

// Subgroup given either as a class id or as an element array; returns the
// class id and an element x with x^-1 H x = representative.
SubgroupClassTable::Location as_class(const GroupContext& ctx, const json& node,
                                      const std::string& where) {
  if (node.is_array()) return ctx.locate(as_subgroup(ctx.group(), node, where));
  return {as_int(node, where, 0, ctx.classes().size() - 1), ctx.group().identity()};
}

template <typename F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ValidationError& e) {
    fail(where, e.what());
  } catch (const InconsistentData& e) {
    fail(where, e.what());
  }
}

void check_kind(const Document& doc, const std::string& expected) {
  if (doc.kind != expected) fail("/kind", "expected \"" + expected + "\", got \"" + doc.kind + "\"");
}

}  // namespace

Document parse_document(const std::string& text, const std::filesystem::path& base) {
  json body;
  try {
    body = json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ValidationError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                          ": malformed JSON");
  }
  if (!body.is_object()) fail("", "document must be a JSON object");
  const json& kind = field(body, "kind", "");
  if (!kind.is_string()) fail("/kind", "expected a string");
  static const std::set<std::string> kinds{"group", "gperm", "strata", "lefschetz", "expr", "complex"};
  if (!kinds.count(kind.get<std::string>())) {
    fail("/kind", "unknown document kind \"" + kind.get<std::string>() + "\"");
  }
  return Document{kind.get<std::string>(), std::move(body), base};
}

Document read_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return parse_document(text.str(), path.parent_path().empty() ? "." : path.parent_path());
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

FiniteGroup build_group(const json& spec, const GroupLimits& limits, const std::string& where) {
  if (!spec.is_object()) fail(where, "expected a group description object");
  const json& type_node = field(spec, "type", where);
  if (!type_node.is_string()) fail(child(where, "type"), "expected a string");
  const std::string type = type_node.get<std::string>();
  auto build = [&](auto&& f) { return located(where, f); };

  if (type == "cyclic" || type == "dihedral" || type == "symmetric") {
    check_fields(spec, where, {"kind", "type", "n"});
    const int n = as_int(field(spec, "n", where), child(where, "n"), 1);
    if (type == "cyclic") return build([&] { return cyclic_group(n, limits); });
    if (type == "dihedral") return build([&] { return dihedral_group(n, limits); });
    return build([&] { return symmetric_group(n, limits); });
  }
  if (type == "product") {
    check_fields(spec, where, {"kind", "type", "factors"});
    const std::string fw = child(where, "factors");
    const json& factors = as_array(field(spec, "factors", where), fw);
    if (factors.empty()) fail(fw, "need at least one factor");
    FiniteGroup result = build_group(factors[0], limits, child(fw, 0));
    for (std::size_t i = 1; i < factors.size(); ++i) {
      FiniteGroup next = build_group(factors[i], limits, child(fw, i));
      result = build([&] { return direct_product(result, next, limits); });
    }
    return result;
  }
  if (type == "perm-gens") {
    check_fields(spec, where, {"kind", "type", "degree", "generators"});
    const int degree = as_int(field(spec, "degree", where), child(where, "degree"), 1, 64);
    const std::string gw = child(where, "generators");
    const json& gens = as_array(field(spec, "generators", where), gw);
    std::vector<Permutation> perms;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      perms.push_back(int_array(gens[i], child(gw, i), std::numeric_limits<int>::min(),
                                std::numeric_limits<int>::max()));
    }
    return build([&] { return permutation_group(degree, perms, limits); });
  }
  if (type == "table") {
    check_fields(spec, where, {"kind", "type", "table", "labels", "generators"});
    const std::string tw = child(where, "table");
    const json& rows = as_array(field(spec, "table", where), tw);
    if (rows.empty()) fail(tw, "table is empty");
    if (static_cast<long long>(rows.size()) > limits.max_order) {
      fail(tw, "group order " + std::to_string(rows.size()) + " exceeds the bound " +
                   std::to_string(limits.max_order));
    }
    const long long n = static_cast<long long>(rows.size());
    std::vector<std::vector<Element>> table;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      table.push_back(int_array(rows[i], child(tw, i), 0, n - 1));
      if (static_cast<long long>(table.back().size()) != n) fail(child(tw, i), "row has wrong length");
    }
    std::vector<std::string> labels;
    if (spec.contains("labels")) {
      const std::string lw = child(where, "labels");
      const json& l = as_array(spec["labels"], lw);
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (!l[i].is_string()) fail(child(lw, i), "expected a string");
        labels.push_back(l[i].get<std::string>());
      }
    }
    std::vector<Element> generators;
    if (spec.contains("generators")) {
      generators = int_array(spec["generators"], child(where, "generators"), 0, n - 1);
    }
    return build([&] { return FiniteGroup(table, generators, labels, limits); });
  }
  fail(child(where, "type"), "unknown group type \"" + type + "\"");
}

LoadedGroup load_group(const json& node, const std::filesystem::path& base,
                       const GroupLimits& limits, const std::string& where) {
  if (node.is_string()) {
    const std::filesystem::path path = base / node.get<std::string>();
    Document doc = located(where, [&] { return read_document(path); });
    if (doc.kind != "group") fail(where, path.string() + " is not a group document");
    json spec = doc.body;
    spec.erase("kind");
    return {analyze(build_group(spec, limits, where)), spec};
  }
  if (node.is_object() && node.contains("kind") && node["kind"] != "group") {
    fail(child(where, "kind"), "expected \"group\"");
  }
  json spec = node;
  if (spec.is_object()) spec.erase("kind");
  return {analyze(build_group(spec, limits, where)), spec};
}

LoadedGroup group_of(const Document& doc, const GroupLimits& limits) {
  if (doc.kind == "group") {
    json spec = doc.body;
    spec.erase("kind");
    return {analyze(build_group(spec, limits, "")), spec};
  }
  return load_group(field(doc.body, "group", ""), doc.base, limits, "/group");
}

GPermutation gperm_from(const Document& doc, const GroupRef& group) {
  check_kind(doc, "gperm");
  const json& b = doc.body;
  check_fields(b, "", {"kind", "group", "points", "action", "sigma"});
  const FiniteGroup& g = group->group();
  const int points = as_int(field(b, "points", ""), "/points", 0, 1'000'000);
  const json& action = as_array(field(b, "action", ""), "/action");
  if (action.size() != g.generators().size()) {
    fail("/action", "expected " + std::to_string(g.generators().size()) +
                        " generator image arrays, got " + std::to_string(action.size()));
  }
  std::vector<Permutation> images;
  for (std::size_t i = 0; i < action.size(); ++i) {
    images.push_back(int_array(action[i], child("/action", i), 0, points - 1));
    if (static_cast<int>(images.back().size()) != points) {
      fail(child("/action", i), "expected " + std::to_string(points) + " images");
    }
  }
  Permutation sigma = int_array(field(b, "sigma", ""), "/sigma", 0, points - 1);
  GSet set = located("/action", [&] { return GSet::from_generators(g, points, images); });
  return located("/sigma", [&] { return GPermutation(group, std::move(set), std::move(sigma)); });
}

std::vector<StratumRecord> strata_from(const Document& doc, const GroupRef& group) {
  check_kind(doc, "strata");
  check_fields(doc.body, "", {"kind", "group", "strata"});
  const FiniteGroup& g = group->group();
  const json& list = as_array(field(doc.body, "strata", ""), "/strata");
  std::vector<StratumRecord> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = child("/strata", i);
    const json& s = list[i];
    check_fields(s, w, {"chi", "m", "n", "H", "alpha", "name"});
    StratumRecord r;
    if (s.contains("name")) {
      if (!s["name"].is_string()) fail(child(w, "name"), "expected a string");
      r.name = s["name"].get<std::string>();
    }
    r.chi = as_bigint(field(s, "chi", w), child(w, "chi"));
    r.m = as_int(field(s, "m", w), child(w, "m"), 1);
    r.n = as_int(field(s, "n", w), child(w, "n"), 1);
    const std::string hw = child(w, "H");
    std::vector<Element> h;
    const json& hn = as_array(field(s, "H", w), hw);
    for (std::size_t j = 0; j < hn.size(); ++j) h.push_back(as_element(g, hn[j], child(hw, j)));
    r.h = Subgroup(std::move(h));
    r.alpha = as_element(g, field(s, "alpha", w), child(w, "alpha"));
    located(w, [&] { validate_stratum(*group, r, i); });
    out.push_back(std::move(r));
  }
  return out;
}

LefschetzTable lefschetz_from(const Document& doc, const GroupRef& group) {
  check_kind(doc, "lefschetz");
  check_fields(doc.body, "", {"kind", "group", "m_max", "entries"});
  const GroupContext& ctx = *group;
  const FiniteGroup& g = ctx.group();
  int m_max = 0;
  if (doc.body.contains("m_max")) m_max = as_int(doc.body["m_max"], "/m_max", 0, 1'000'000);
  const json& list = as_array(field(doc.body, "entries", ""), "/entries");

  struct Parsed {
    int cls, m;
    Element g;
    BigInt value;
    std::string where;
  };
  std::vector<Parsed> parsed;
  int largest = 0;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = child("/entries", i);
    const json& e = list[i];
    check_fields(e, w, {"H", "g", "m", "value"});
    const auto loc = located(child(w, "H"), [&] { return as_class(ctx, field(e, "H", w), child(w, "H")); });
    const Element raw = as_element(g, field(e, "g", w), child(w, "g"));
    const int m = as_int(field(e, "m", w), child(w, "m"), 1, 1'000'000);
    const BigInt value = as_bigint(field(e, "value", w), child(w, "value"));
    if (m_max > 0 && m > m_max) fail(child(w, "m"), "m exceeds m_max");
    if (value != 0) largest = std::max(largest, m);
    parsed.push_back({loc.class_id, m, g.conj(raw, loc.conjugator), value, w});
  }
  if (m_max == 0) m_max = std::max(largest, 1);

  LefschetzTable table(group, m_max);
  std::map<LefschetzKey, std::pair<BigInt, std::string>> seen;
  for (const auto& p : parsed) {
    const LefschetzKey k = located(p.where, [&] { return table.key(p.cls, p.m, p.g); });
    auto [it, fresh] = seen.emplace(k, std::make_pair(p.value, p.where));
    if (!fresh && it->second.first != p.value) {
      fail(p.where, "conflicts with " + it->second.second);
    }
    if (fresh) table.set(p.cls, p.m, p.g, p.value);
  }
  return table;
}

ZGRingElement expr_from(const Document& doc, const GroupRef& group) {
  check_kind(doc, "expr");
  check_fields(doc.body, "", {"kind", "group", "terms", "element"});
  const GroupContext& ctx = *group;
  const FiniteGroup& g = ctx.group();
  if (doc.body.contains("terms") && doc.body.contains("element")) {
    fail("", "give either terms or element, not both");
  }
  if (doc.body.contains("element")) {
    if (!doc.body["element"].is_string()) fail("/element", "expected a string");
    return located("/element", [&] { return parse_zg(group, doc.body["element"].get<std::string>()); });
  }
  ZGRingElement z(group);
  if (!doc.body.contains("terms")) return z;
  const json& list = as_array(doc.body["terms"], "/terms");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string w = child("/terms", i);
    const json& t = list[i];
    check_fields(t, w, {"coeff", "H", "m", "alpha"});
    const BigInt k = as_bigint(field(t, "coeff", w), child(w, "coeff"));
    const int m = as_int(field(t, "m", w), child(w, "m"), 1);
    const Element a = as_element(g, field(t, "alpha", w), child(w, "alpha"));
    const json& h = field(t, "H", w);
    if (h.is_array()) {
      const Subgroup sub = as_subgroup(g, h, child(w, "H"));
      located(w, [&] { z.add_term(sub, m, a, k); });
    } else {
      const int cls = as_int(h, child(w, "H"), 0, ctx.classes().size() - 1);
      located(w, [&] { z.add_term(canonical_triple(ctx, cls, m, a), k); });
    }
  }
  return z;
}

ComplexData complex_from(const Document& doc, const GroupRef& group) {
  check_kind(doc, "complex");
  check_fields(doc.body, "", {"kind", "group", "faces", "action", "sigma"});
  const json& faces_node = as_array(field(doc.body, "faces", ""), "/faces");
  if (faces_node.empty()) fail("/faces", "need at least dimension 0");
  std::vector<std::vector<std::vector<int>>> faces;
  for (std::size_t d = 0; d < faces_node.size(); ++d) {
    const std::string dw = child("/faces", d);
    std::vector<std::vector<int>> cells;
    for (std::size_t c = 0; c < as_array(faces_node[d], dw).size(); ++c) {
      cells.push_back(int_array(faces_node[d][c], child(dw, c), 0, std::numeric_limits<int>::max()));
    }
    faces.push_back(std::move(cells));
  }
  const json& action_node = as_array(field(doc.body, "action", ""), "/action");
  std::vector<std::vector<Permutation>> action;
  for (std::size_t i = 0; i < action_node.size(); ++i) {
    const std::string gw = child("/action", i);
    std::vector<Permutation> per_dim;
    for (std::size_t d = 0; d < as_array(action_node[i], gw).size(); ++d) {
      per_dim.push_back(int_array(action_node[i][d], child(gw, d), std::numeric_limits<int>::min(),
                                  std::numeric_limits<int>::max()));
    }
    action.push_back(std::move(per_dim));
  }
  GComplex complex = located("/faces", [&] { return GComplex(group, std::move(faces), action); });
  std::optional<GCellularMap> sigma;
  if (doc.body.contains("sigma")) {
    const json& s = as_array(doc.body["sigma"], "/sigma");
    std::vector<Permutation> images;
    for (std::size_t d = 0; d < s.size(); ++d) {
      images.push_back(int_array(s[d], child("/sigma", d), std::numeric_limits<int>::min(),
                                 std::numeric_limits<int>::max()));
    }
    sigma.emplace(located("/sigma", [&] { return GCellularMap(complex, std::move(images)); }));
  }
  return {std::move(complex), std::move(sigma)};
}

ZGRingElement zeta_of(const Document& doc, const GroupRef& group) {
  if (doc.kind == "gperm") return classify(gperm_from(doc, group));
  if (doc.kind == "expr") return expr_from(doc, group);
  if (doc.kind == "strata") return acampo(group, strata_from(doc, group));
  if (doc.kind == "lefschetz") {
    const LefschetzTable table = lefschetz_from(doc, group);
    return located("/entries", [&] { return zeta_from_lefschetz(table); });
  }
  if (doc.kind == "complex") {
    ComplexData data = complex_from(doc, group);
    if (!data.sigma) fail("/sigma", "complex has no cellular map");
    return brute_zeta(data.complex, *data.sigma);
  }
  fail("/kind", "a " + doc.kind + " document does not describe a zeta function");
}

}  // namespace eqzeta::io
