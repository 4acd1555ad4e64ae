#include "eqzeta/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "eqzeta/error.hpp"

namespace eqzeta {

Subgroup::Subgroup(std::vector<Element> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

namespace {

bool is_permutation_row(const std::vector<Element>& row, int n) {
  std::vector<char> seen(n, 0);
  for (Element x : row) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Right-multiplication closure from `start`; valid for any finite loop.
std::vector<char> right_closure(const std::vector<std::vector<Element>>& table, Element start,
                                std::span<const Element> seeds) {
  const int n = static_cast<int>(table.size());
  std::vector<char> in(n, 0);
  std::vector<Element> queue{start};
  in[start] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : seeds) {
      Element y = table[queue[i]][s];
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return in;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table, std::vector<Element> generators,
                         std::vector<std::string> labels, GroupLimits limits)
    : table_(std::move(table)), generators_(std::move(generators)), labels_(std::move(labels)) {
  const int n = static_cast<int>(table_.size());
  if (n < 1) throw ValidationError("group table is empty");
  if (n > limits.max_order) {
    throw ValidationError("group order " + std::to_string(n) + " exceeds the bound " +
                          std::to_string(limits.max_order));
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table_[a].size()) != n) {
      throw ValidationError("group table row " + std::to_string(a) + " has wrong length");
    }
    if (!is_permutation_row(table_[a], n)) {
      throw ValidationError("group table row " + std::to_string(a) + " is not a permutation");
    }
  }
  for (int b = 0; b < n; ++b) {
    std::vector<Element> column(n);
    for (int a = 0; a < n; ++a) column[a] = table_[a][b];
    if (!is_permutation_row(column, n)) {
      throw ValidationError("group table column " + std::to_string(b) + " is not a permutation");
    }
  }

  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw ValidationError("group table has no two-sided identity");

  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == identity_) inverse_[a] = b;
    }
    if (table_[inverse_[a]][a] != identity_) {
      throw ValidationError("element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  if (generators_.empty()) {
    std::vector<char> reached = right_closure(table_, identity_, generators_);
    for (int a = 0; a < n; ++a) {
      if (!reached[a]) {
        generators_.push_back(a);
        reached = right_closure(table_, identity_, generators_);
      }
    }
  } else {
    for (Element g : generators_) {
      if (g < 0 || g >= n) throw ValidationError("generator index out of range");
    }
    std::vector<char> reached = right_closure(table_, identity_, generators_);
    if (std::count(reached.begin(), reached.end(), 1) != n) {
      throw ValidationError("the listed generators do not generate the group");
    }
  }

  // Light's test: the generators are associative elements and generate.
  for (Element s : generators_) {
    for (int x = 0; x < n; ++x) {
      const Element xs = table_[x][s];
      for (int y = 0; y < n; ++y) {
        if (table_[xs][y] != table_[x][table_[s][y]]) {
          std::ostringstream msg;
          msg << "group table is not associative: (" << x << "*" << s << ")*" << y
              << " != " << x << "*(" << s << "*" << y << ")";
          throw ValidationError(msg.str());
        }
      }
    }
  }

  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n) {
      throw ValidationError("label count does not match the group order");
    }
    std::vector<std::string> sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw ValidationError("element labels are not unique");
    }
    // Labels appear inside rendered ring elements and must survive parsing.
    for (const auto& l : labels_) {
      if (l.empty() || l.find_first_of(" \t\n,()[]*=+-") != std::string::npos) {
        throw ValidationError("element label '" + l + "' is empty or contains a reserved character");
      }
    }
  }
}

Element FiniteGroup::power(Element a, long long k) const {
  if (k < 0) {
    a = inverse_[a];
    k = -k;
  }
  k %= element_order(a);
  Element result = identity_;
  for (long long i = 0; i < k; ++i) result = table_[result][a];
  return result;
}

int FiniteGroup::element_order(Element a) const {
  int k = 1;
  for (Element x = a; x != identity_; x = table_[x][a]) ++k;
  return k;
}

std::string FiniteGroup::label(Element a) const {
  if (!labels_.empty()) return labels_[a];
  if (a == identity_) return "e";
  return "g" + std::to_string(a);
}

Element FiniteGroup::find_label(const std::string& text) const {
  for (int a = 0; a < order(); ++a) {
    if (label(a) == text) return a;
  }
  return -1;
}

Subgroup FiniteGroup::closure(std::span<const Element> seeds) const {
  std::vector<char> in = right_closure(table_, identity_, seeds);
  std::vector<Element> elements;
  for (int a = 0; a < order(); ++a) {
    if (in[a]) elements.push_back(a);
  }
  return Subgroup(std::move(elements));
}

bool FiniteGroup::is_subgroup(std::span<const Element> elements) const {
  std::vector<char> in(order(), 0);
  for (Element a : elements) {
    if (a < 0 || a >= order()) return false;
    in[a] = 1;
  }
  if (!in[identity_]) return false;
  for (Element a : elements) {
    for (Element b : elements) {
      if (!in[table_[a][b]]) return false;
    }
  }
  return true;
}

Subgroup FiniteGroup::whole() const {
  std::vector<Element> all(order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup(std::move(all));
}

Subgroup FiniteGroup::trivial() const { return Subgroup({identity_}); }

Subgroup FiniteGroup::conjugate(const Subgroup& h, Element g) const {
  std::vector<Element> out;
  out.reserve(h.elements().size());
  for (Element x : h.elements()) out.push_back(conj(x, g));
  return Subgroup(std::move(out));
}

Subgroup FiniteGroup::normalizer(const Subgroup& h) const {
  if (!is_subgroup(h.elements())) throw ValidationError("element set is not a subgroup");
  std::vector<char> in(order(), 0);
  for (Element x : h.elements()) in[x] = 1;
  std::vector<Element> out;
  for (int a = 0; a < order(); ++a) {
    bool ok = true;
    for (Element x : h.elements()) {
      if (!in[conj(x, a)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(a);
  }
  return Subgroup(std::move(out));
}

bool same_group(const GroupRef& a, const GroupRef& b) {
  if (a == b) return true;
  return a && b && a->group() == b->group();
}

}  // namespace eqzeta
