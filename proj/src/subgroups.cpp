#include <algorithm>
#include <set>

#include "eqzeta/error.hpp"
#include "eqzeta/group.hpp"

namespace eqzeta {

namespace {

struct Conjugates {
  std::vector<Subgroup> distinct;  // sorted
  Subgroup least;
};

Conjugates all_conjugates(const FiniteGroup& group, const Subgroup& h) {
  std::set<Subgroup> seen;
  for (int g = 0; g < group.order(); ++g) seen.insert(group.conjugate(h, g));
  Conjugates out;
  out.distinct.assign(seen.begin(), seen.end());
  out.least = out.distinct.front();
  return out;
}

}  // namespace

SubgroupClassTable::SubgroupClassTable(const FiniteGroup& group) {
  // Seeds: cyclic subgroups. Every subgroup is a representative joined with
  // one more cyclic subgroup, up to conjugacy, so joining each new class
  // representative with every cyclic subgroup reaches all classes.
  std::vector<std::pair<Subgroup, Element>> cyclic;
  {
    std::set<Subgroup> seen;
    for (int g = 0; g < group.order(); ++g) {
      const Element seed[] = {g};
      Subgroup c = group.closure(seed);
      if (seen.insert(c).second) cyclic.emplace_back(std::move(c), g);
    }
  }

  std::set<Subgroup> known;  // every conjugate of every class found so far
  std::vector<SubgroupClass> found;
  std::vector<std::size_t> pending;

  auto consider = [&](const Subgroup& h, std::vector<Element> gens) {
    if (known.count(h)) return;
    Conjugates conj = all_conjugates(group, h);
    for (const auto& c : conj.distinct) known.insert(c);
    SubgroupClass cls;
    // Re-express the generators for the least conjugate.
    Element to_least = 0;
    for (int g = 0; g < group.order(); ++g) {
      if (group.conjugate(h, g) == conj.least) {
        to_least = g;
        break;
      }
    }
    for (Element& x : gens) x = group.conj(x, to_least);
    cls.representative = conj.least;
    cls.members = std::move(conj.distinct);
    cls.generators = std::move(gens);
    found.push_back(std::move(cls));
    pending.push_back(found.size() - 1);
  };

  for (const auto& [c, g] : cyclic) consider(c, g == group.identity() ? std::vector<Element>{}
                                                                      : std::vector<Element>{g});
  while (!pending.empty()) {
    const std::size_t id = pending.back();
    pending.pop_back();
    const Subgroup rep = found[id].representative;
    const std::vector<Element> gens = found[id].generators;
    for (const auto& [c, g] : cyclic) {
      if (c.is_subset_of(rep)) continue;
      std::vector<Element> joined = gens;
      joined.push_back(g);
      Subgroup j = group.closure(joined);
      consider(j, std::move(joined));
    }
  }

  std::sort(found.begin(), found.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order()) {
      return a.representative.order() < b.representative.order();
    }
    return a.representative < b.representative;
  });
  for (auto& cls : found) cls.normalizer = group.normalizer(cls.representative);
  classes_ = std::move(found);
  for (int i = 0; i < size(); ++i) by_representative_.emplace(classes_[i].representative.elements(), i);

  subconjugacy_.assign(size(), std::vector<char>(size(), 0));
  for (int i = 0; i < size(); ++i) {
    for (int j = i; j < size(); ++j) {
      const auto& outer = classes_[j].representative;
      if (outer.order() % classes_[i].representative.order() != 0) continue;
      for (const auto& member : classes_[i].members) {
        if (member.is_subset_of(outer)) {
          subconjugacy_[i][j] = 1;
          break;
        }
      }
    }
  }
}

SubgroupClassTable::Location SubgroupClassTable::locate(const FiniteGroup& group,
                                                        const Subgroup& h) const {
  if (!group.is_subgroup(h.elements())) throw ValidationError("element set is not a subgroup");
  Subgroup best;
  Element best_g = -1;
  for (int g = 0; g < group.order(); ++g) {
    Subgroup c = group.conjugate(h, g);
    if (best_g < 0 || c < best) {
      best = std::move(c);
      best_g = g;
    }
  }
  auto it = by_representative_.find(best.elements());
  if (it == by_representative_.end()) {
    throw std::logic_error("subgroup class table is incomplete");
  }
  return {it->second, best_g};
}

int SubgroupClassTable::total_subgroups() const {
  int total = 0;
  for (const auto& cls : classes_) total += static_cast<int>(cls.members.size());
  return total;
}

TableOfMarks::TableOfMarks([[maybe_unused]] const FiniteGroup& group,
                           const SubgroupClassTable& classes) {
  const int n = classes.size();
  marks_.assign(n, std::vector<long long>(n, 0));
  // Fixed points of H on G/K: |{g : g^-1 H g <= K}| / |K|, and each conjugate
  // of H arises from |N(H)| elements g.
  for (int k = 0; k < n; ++k) {
    const auto& outer = classes[k].representative;
    for (int h = 0; h <= k; ++h) {
      if (!classes.subconjugate(h, k)) continue;
      long long inside = 0;
      for (const auto& member : classes[h].members) {
        if (member.is_subset_of(outer)) ++inside;
      }
      marks_[k][h] = inside * classes[h].normalizer.order() / outer.order();
    }
  }
}

GroupContext::GroupContext(FiniteGroup group)
    : group_(std::move(group)), classes_(group_), marks_(group_, classes_) {
  weyl_.reserve(classes_.size());
  for (int c = 0; c < classes_.size(); ++c) {
    const Subgroup& h = classes_[c].representative;
    const Subgroup& norm = classes_[c].normalizer;
    WeylData w;
    w.coset_of.assign(group_.order(), -1);
    for (Element g : norm.elements()) {
      if (w.coset_of[g] >= 0) continue;
      const int id = w.order();
      w.coset_min.push_back(g);
      for (Element x : h.elements()) w.coset_of[group_.mul(g, x)] = id;
    }
    const int size = w.order();
    w.conj_class.assign(size, -1);
    w.centralizer_size.assign(size, 0);
    w.coset_order.assign(size, 0);
    for (int c0 = 0; c0 < size; ++c0) {
      int k = 1;
      for (Element x = w.coset_min[c0]; !h.contains(x); x = group_.mul(x, w.coset_min[c0])) ++k;
      w.coset_order[c0] = k;
      if (w.conj_class[c0] >= 0) continue;
      const int cls = static_cast<int>(w.class_canon.size());
      std::vector<int> orbit;
      for (int d = 0; d < size; ++d) {
        const int image = w.coset_of[group_.conj(w.coset_min[c0], w.coset_min[d])];
        if (w.conj_class[image] < 0) {
          w.conj_class[image] = cls;
          orbit.push_back(image);
        }
      }
      Element canon = w.coset_min[orbit.front()];
      for (int o : orbit) canon = std::min(canon, w.coset_min[o]);
      w.class_canon.push_back(canon);
      for (int o : orbit) w.centralizer_size[o] = size / static_cast<int>(orbit.size());
    }
    weyl_.push_back(std::move(w));
  }
}

int GroupContext::index(int class_id) const {
  return group_.order() / classes_[class_id].representative.order();
}

GroupRef analyze(FiniteGroup group) { return std::make_shared<const GroupContext>(std::move(group)); }

}  // namespace eqzeta
