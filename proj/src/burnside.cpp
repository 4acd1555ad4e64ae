#include "eqzeta/burnside.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eqzeta/error.hpp"

namespace eqzeta {

namespace {

void check_bijection(const Permutation& p, int points, const std::string& what) {
  if (static_cast<int>(p.size()) != points) {
    throw ValidationError(what + " has " + std::to_string(p.size()) + " images, expected " +
                          std::to_string(points));
  }
  std::vector<char> seen(points, 0);
  for (int x : p) {
    if (x < 0 || x >= points || seen[x]) throw ValidationError(what + " is not a bijection");
    seen[x] = 1;
  }
}

Permutation then(const Permutation& first, const Permutation& second) {
  // x -> first(second(x))
  Permutation r(second.size());
  for (std::size_t x = 0; x < second.size(); ++x) r[x] = first[second[x]];
  return r;
}

Permutation identity_permutation(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

GSet GSet::from_generators(const FiniteGroup& group, int points,
                           const std::vector<Permutation>& generator_images) {
  if (points < 0) throw ValidationError("negative point count");
  const auto& gens = group.generators();
  if (generator_images.size() != gens.size()) {
    throw ValidationError("expected images for " + std::to_string(gens.size()) +
                          " generators, got " + std::to_string(generator_images.size()));
  }
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check_bijection(generator_images[i], points, "image of generator " + std::to_string(i));
  }
  std::vector<Permutation> action(group.order());
  std::vector<char> set(group.order(), 0);
  action[group.identity()] = identity_permutation(points);
  set[group.identity()] = 1;
  std::vector<Element> queue{group.identity()};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Element x = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Element y = group.mul(x, gens[i]);
      Permutation candidate = then(action[x], generator_images[i]);
      if (!set[y]) {
        action[y] = std::move(candidate);
        set[y] = 1;
        queue.push_back(y);
      } else if (action[y] != candidate) {
        throw ValidationError("generator images do not define a group action (relation fails at " +
                              group.label(x) + " * generator " + std::to_string(i) + ")");
      }
    }
  }
  return GSet(points, std::move(action));
}

GSet GSet::from_table(const FiniteGroup& group, std::vector<Permutation> action) {
  if (static_cast<int>(action.size()) != group.order()) {
    throw ValidationError("action table must have one row per group element");
  }
  const int points = action.empty() ? 0 : static_cast<int>(action[0].size());
  for (int g = 0; g < group.order(); ++g) {
    check_bijection(action[g], points, "action of " + group.label(g));
  }
  if (action[group.identity()] != identity_permutation(points)) {
    throw ValidationError("identity does not act trivially");
  }
  for (int x = 0; x < group.order(); ++x) {
    for (Element s : group.generators()) {
      if (action[group.mul(x, s)] != then(action[x], action[s])) {
        throw ValidationError("action table is not a homomorphism at " + group.label(x) + " * " +
                              group.label(s));
      }
    }
  }
  return GSet(points, std::move(action));
}

Subgroup GSet::stabilizer(int x) const {
  std::vector<Element> out;
  for (int g = 0; g < static_cast<int>(action_.size()); ++g) {
    if (action_[g][x] == x) out.push_back(g);
  }
  return Subgroup(std::move(out));
}

std::vector<std::vector<int>> GSet::orbits() const {
  std::vector<char> seen(points_, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < points_; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit;
    for (const auto& row : action_) {
      const int y = row[x];
      if (!seen[y]) {
        seen[y] = 1;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

GSet coset_space(const FiniteGroup& group, const Subgroup& h) {
  if (!group.is_subgroup(h.elements())) throw ValidationError("element set is not a subgroup");
  std::vector<int> coset(group.order(), -1);
  std::vector<Element> least;
  for (int g = 0; g < group.order(); ++g) {
    if (coset[g] >= 0) continue;
    const int id = static_cast<int>(least.size());
    least.push_back(g);
    for (Element x : h.elements()) coset[group.mul(g, x)] = id;
  }
  const int points = static_cast<int>(least.size());
  std::vector<Permutation> action(group.order(), Permutation(points));
  for (int a = 0; a < group.order(); ++a) {
    for (int c = 0; c < points; ++c) action[a][c] = coset[group.mul(a, least[c])];
  }
  return GSet::from_table(group, std::move(action));
}

GSet product_gset(const GSet& a, const GSet& b) {
  const int na = a.points(), nb = b.points();
  std::vector<Permutation> action(a.table().size(), Permutation(na * nb));
  for (std::size_t g = 0; g < action.size(); ++g) {
    for (int x = 0; x < na; ++x) {
      for (int y = 0; y < nb; ++y) action[g][x * nb + y] = a.act(g, x) * nb + b.act(g, y);
    }
  }
  return GSet(na * nb, std::move(action));
}

BurnsideElement::BurnsideElement(GroupRef group) : group_(std::move(group)) {}

BurnsideElement BurnsideElement::basis(GroupRef group, int class_id) {
  BurnsideElement x(std::move(group));
  x.add_term(class_id, 1);
  return x;
}

BurnsideElement BurnsideElement::one(GroupRef group) {
  const int top = group->whole_class();
  return basis(std::move(group), top);
}

BigInt BurnsideElement::coefficient(int class_id) const {
  auto it = coeffs_.find(class_id);
  return it == coeffs_.end() ? BigInt(0) : it->second;
}

void BurnsideElement::add_term(int class_id, const BigInt& c) {
  if (class_id < 0 || class_id >= group_->classes().size()) {
    throw ValidationError("subgroup class id " + std::to_string(class_id) + " out of range");
  }
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(class_id, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

std::vector<BigInt> BurnsideElement::mark_vector() const {
  const auto& marks = group_->marks();
  std::vector<BigInt> v(marks.size(), 0);
  for (const auto& [k, c] : coeffs_) {
    for (int h = 0; h <= k; ++h) v[h] += c * marks(k, h);
  }
  return v;
}

BurnsideElement BurnsideElement::from_marks(GroupRef group, const std::vector<BigInt>& v) {
  const auto& marks = group->marks();
  const int n = marks.size();
  if (static_cast<int>(v.size()) != n) throw std::domain_error("mark vector has wrong length");
  std::vector<BigInt> c(n, 0);
  for (int h = n - 1; h >= 0; --h) {
    BigInt rest = v[h];
    for (int k = h + 1; k < n; ++k) rest -= c[k] * marks(k, h);
    if (rest % marks(h, h) != 0) throw std::domain_error("mark vector is not in the image");
    c[h] = rest / marks(h, h);
  }
  BurnsideElement x(std::move(group));
  for (int h = 0; h < n; ++h) x.add_term(h, c[h]);
  return x;
}

BigInt BurnsideElement::cardinality() const {
  BigInt total = 0;
  for (const auto& [k, c] : coeffs_) total += c * group_->index(k);
  return total;
}

BurnsideElement& BurnsideElement::operator+=(const BurnsideElement& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  for (const auto& [k, c] : other.coeffs_) add_term(k, c);
  return *this;
}

BurnsideElement& BurnsideElement::operator-=(const BurnsideElement& other) {
  if (!same_group(group_, other.group_)) throw GroupMismatch();
  for (const auto& [k, c] : other.coeffs_) add_term(k, -c);
  return *this;
}

BurnsideElement operator-(BurnsideElement a) {
  for (auto& [k, c] : a.coeffs_) c = -c;
  return a;
}

BurnsideElement operator*(const BurnsideElement& a, const BurnsideElement& b) {
  if (!same_group(a.group_, b.group_)) throw GroupMismatch();
  std::vector<BigInt> va = a.mark_vector();
  const std::vector<BigInt> vb = b.mark_vector();
  for (std::size_t i = 0; i < va.size(); ++i) va[i] *= vb[i];
  return BurnsideElement::from_marks(a.group_, va);
}

BurnsideElement operator*(const BigInt& k, BurnsideElement a) {
  if (k == 0) return BurnsideElement(a.group_);
  for (auto& [id, c] : a.coeffs_) c *= k;
  return a;
}

bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
  return same_group(a.group_, b.group_) && a.coeffs_ == b.coeffs_;
}

BurnsideElement class_of_gset(const GroupRef& group, const GSet& set) {
  if (static_cast<int>(set.table().size()) != group->group().order()) {
    throw ValidationError("G-set does not belong to this group");
  }
  BurnsideElement out(group);
  for (const auto& orbit : set.orbits()) {
    out.add_term(group->locate(set.stabilizer(orbit.front())).class_id, 1);
  }
  return out;
}

}  // namespace eqzeta
