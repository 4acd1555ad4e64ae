#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "eqzeta/error.hpp"
#include "eqzeta/io.hpp"

namespace eqzeta::io {

namespace {

template <typename Map, typename Term>
std::string join_terms(const Map& terms, Term&& term) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, k] : terms) {
    if (first) {
      out += (k < 0 ? "-" : "");
    } else {
      out += (k < 0 ? " - " : " + ");
    }
    out += term(key, k < 0 ? BigInt(-k) : k);
    first = false;
  }
  return out;
}

// Minimal cursor over rendered text.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(const std::string& token) {
    skip_space();
    if (text_.compare(pos_, token.size(), token) == 0) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& token) {
    if (!accept(token)) error("expected '" + token + "'");
  }
  BigInt integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start || (pos_ == start + 1 && text_[start] == '-')) error("expected an integer");
    return BigInt(text_.substr(start, pos_ - start));
  }
  int small_integer() {
    const BigInt v = integer();
    if (v < 0 || v > std::numeric_limits<int>::max()) error("integer out of range");
    return static_cast<int>(v);
  }
  /// A label: everything up to a reserved character.
  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::string(" \t\n,()[]*=+").find(text_[pos_]) == std::string::npos) {
      ++pos_;
    }
    if (pos_ == start) error("expected a name");
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void error(const std::string& what) const {
    throw ValidationError("at offset " + std::to_string(pos_) + ": " + what);
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
};

int class_from_name(const GroupContext& ctx, const std::string& name, const Scanner& s) {
  if (name == "G") return ctx.whole_class();
  if (name == "e" || name == "1") return ctx.trivial_class();
  if (name.size() > 1 && name[0] == 'H') {
    const std::string digits = name.substr(1);
    if (digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 9) {
      const int id = std::stoi(digits);
      if (id < ctx.classes().size()) return id;
    }
  }
  s.error("unknown subgroup class '" + name + "'");
}

bool is_literal(const std::string& text, const std::string& literal) {
  const auto first = text.find_first_not_of(" \t\n");
  const auto last = text.find_last_not_of(" \t\n");
  return first != std::string::npos && text.substr(first, last - first + 1) == literal;
}

// Sign-separated sequence of terms, as produced by join_terms.
template <typename Term>
void parse_terms(Scanner& s, Term&& term) {
  if (s.done()) s.error("empty expression");
  bool negative = s.accept("-");
  while (true) {
    BigInt k = s.integer();
    term(s, negative ? BigInt(-k) : k);
    if (s.done()) return;
    if (s.accept("+")) {
      negative = false;
    } else if (s.accept("-")) {
      negative = true;
    } else {
      s.error("expected '+' or '-'");
    }
  }
}

}  // namespace

std::string class_name(const GroupContext& group, int class_id, bool zg) {
  if (class_id == group.whole_class()) return "G";
  if (class_id == group.trivial_class()) return zg ? "1" : "e";
  return "H" + std::to_string(class_id);
}

// Larger subgroup classes first.
std::string render(const BurnsideElement& x) {
  const std::vector<std::pair<int, BigInt>> terms(x.coefficients().rbegin(), x.coefficients().rend());
  return join_terms(terms, [&](int c, const BigInt& k) {
    return k.str() + "*[G/" + class_name(*x.group(), c, false) + "]";
  });
}

std::string render(const ZGRingElement& x) {
  const GroupContext& ctx = *x.group();
  std::vector<std::pair<TripleClass, BigInt>> terms(x.coefficients().begin(), x.coefficients().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return a.first.subgroup_class > b.first.subgroup_class;
  });
  return join_terms(terms, [&](const TripleClass& t, const BigInt& k) {
    return k.str() + " * [ZxG / (H=" + class_name(ctx, t.subgroup_class, true) +
           ", m=" + std::to_string(t.m) + ", a=" + ctx.group().label(t.alpha) + ")]";
  });
}

std::string render(const ClassicalZeta& z) {
  if (z.is_one()) return "1";
  std::string out;
  for (const auto& [m, s] : z.exponents()) {
    if (!out.empty()) out += ' ';
    out += m == 1 ? "(1-t)" : "(1-t^" + std::to_string(m) + ")";
    if (s != 1) out += "^" + s.str();
  }
  return out;
}

std::string render(const LefschetzTable& table) {
  if (table.entries().empty()) return "0";
  const GroupContext& ctx = *table.group();
  std::string out;
  for (const auto& [key, v] : table.entries()) {
    if (!out.empty()) out += '\n';
    out += "l(H=" + class_name(ctx, key.subgroup_class, true) + ", m=" + std::to_string(key.m) +
           ", g=" + ctx.group().label(key.coset) + ") = " + v.str();
  }
  return out;
}

BurnsideElement parse_burnside(const GroupRef& group, const std::string& text) {
  BurnsideElement out(group);
  if (is_literal(text, "0")) return out;
  Scanner s(text);
  parse_terms(s, [&](Scanner& sc, const BigInt& k) {
    sc.expect("*");
    sc.expect("[G/");
    const int c = class_from_name(*group, sc.word(), sc);
    sc.expect("]");
    out.add_term(c, k);
  });
  return out;
}

ZGRingElement parse_zg(const GroupRef& group, const std::string& text) {
  const FiniteGroup& g = group->group();
  ZGRingElement out(group);
  if (is_literal(text, "0")) return out;
  Scanner s(text);
  parse_terms(s, [&](Scanner& sc, const BigInt& k) {
    sc.expect("*");
    sc.expect("[");
    sc.expect("ZxG");
    sc.expect("/");
    sc.expect("(");
    sc.expect("H");
    sc.expect("=");
    const int c = class_from_name(*group, sc.word(), sc);
    sc.expect(",");
    sc.expect("m");
    sc.expect("=");
    const int m = sc.small_integer();
    sc.expect(",");
    sc.expect("a");
    sc.expect("=");
    const std::string label = sc.word();
    const Element a = g.find_label(label);
    if (a < 0) sc.error("unknown element '" + label + "'");
    sc.expect(")");
    sc.expect("]");
    out.add_term(canonical_triple(*group, c, m, a), k);
  });
  return out;
}

ClassicalZeta parse_classical(const std::string& text) {
  ClassicalZeta z;
  if (is_literal(text, "1")) return z;
  Scanner s(text);
  if (s.done()) s.error("empty expression");
  while (!s.done()) {
    s.expect("(1-t");
    int m = 1;
    if (s.accept("^")) m = s.small_integer();
    if (m < 1) s.error("cycle length must be positive");
    s.expect(")");
    BigInt e = 1;
    if (s.accept("^")) e = s.integer();
    z.add_exponent(m, e);
  }
  return z;
}

json coefficient_json(const BigInt& k) {
  if (k >= std::numeric_limits<long long>::min() && k <= std::numeric_limits<long long>::max()) {
    return static_cast<long long>(k);
  }
  return k.str();
}

json to_json(const BurnsideElement& x) {
  json terms = json::array();
  for (const auto& [c, k] : x.coefficients()) terms.push_back({{"coeff", coefficient_json(k)}, {"H", c}});
  return {{"kind", "burnside"}, {"terms", terms}};
}

json to_json(const ZGRingElement& x) {
  json terms = json::array();
  for (const auto& [t, k] : x.coefficients()) {
    terms.push_back({{"coeff", coefficient_json(k)}, {"H", t.subgroup_class}, {"m", t.m}, {"alpha", t.alpha}});
  }
  return {{"kind", "expr"}, {"terms", terms}};
}

json to_json(const ClassicalZeta& z) {
  json factors = json::array();
  for (const auto& [m, s] : z.exponents()) factors.push_back({{"m", m}, {"s", coefficient_json(s)}});
  return {{"kind", "classical"}, {"factors", factors}};
}

json to_json(const LefschetzTable& table, const json& group_spec) {
  json entries = json::array();
  for (const auto& [key, v] : table.entries()) {
    entries.push_back({{"H", key.subgroup_class}, {"g", key.coset}, {"m", key.m}, {"value", coefficient_json(v)}});
  }
  return {{"kind", "lefschetz"}, {"group", group_spec}, {"m_max", table.m_max()}, {"entries", entries}};
}

}  // namespace eqzeta::io
