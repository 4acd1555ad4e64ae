#include "eqzeta/gperm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eqzeta/error.hpp"

namespace eqzeta {

GPermutation::GPermutation(GroupRef group, GSet gset, Permutation sigma)
    : group_(std::move(group)), gset_(std::move(gset)), sigma_(std::move(sigma)) {
  const FiniteGroup& g = group_->group();
  if (static_cast<int>(gset_.table().size()) != g.order()) {
    throw ValidationError("G-set does not belong to this group");
  }
  const int n = gset_.points();
  if (static_cast<int>(sigma_.size()) != n) {
    throw ValidationError("sigma has " + std::to_string(sigma_.size()) + " images, expected " +
                          std::to_string(n));
  }
  std::vector<char> seen(n, 0);
  for (int x : sigma_) {
    if (x < 0 || x >= n || seen[x]) throw ValidationError("sigma is not a bijection");
    seen[x] = 1;
  }
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (int x = 0; x < n; ++x) {
      if (sigma_[gset_.act(gens[i], x)] != gset_.act(gens[i], sigma_[x])) {
        throw ValidationError("sigma does not commute with generator " + std::to_string(i) +
                              " (" + g.label(gens[i]) + ") at point " + std::to_string(x));
      }
    }
  }
}

GPermutation GPermutation::from_generators(GroupRef group, int points,
                                           const std::vector<Permutation>& generator_images,
                                           Permutation sigma) {
  GSet set = GSet::from_generators(group->group(), points, generator_images);
  return GPermutation(std::move(group), std::move(set), std::move(sigma));
}

GPermutation GPermutation::power(int m) const {
  if (m < 0) throw ValidationError("negative power");
  Permutation p(points());
  std::iota(p.begin(), p.end(), 0);
  for (int k = 0; k < m; ++k) {
    for (int& x : p) x = sigma_[x];
  }
  return GPermutation(group_, gset_, std::move(p));
}

TripleClass orbit_triple(const GPermutation& p, int base) {
  const FiniteGroup& g = p.group()->group();
  const GSet& set = p.gset();
  std::vector<Element> reaching(p.points(), -1);  // reaching[y] = a with a base = y
  for (int a = 0; a < g.order(); ++a) {
    const int y = set.act(a, base);
    if (reaching[y] < 0) reaching[y] = a;
  }
  int m = 1;
  int y = p.sigma()[base];
  while (reaching[y] < 0) {
    y = p.sigma()[y];
    ++m;
  }
  // reaching[y] base = y, so its inverse sends sigma^m(base) back to base.
  const Element a = g.inv(reaching[y]);
  return canonical_triple(*p.group(), set.stabilizer(base), m, a);
}

std::vector<std::vector<int>> zg_orbits(const GPermutation& p) {
  const int n = p.points();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> out;
  const auto& gens = p.group()->group().generators();
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> orbit{x};
    seen[x] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      auto visit = [&](int y) {
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      };
      visit(p.sigma()[orbit[i]]);
      for (Element s : gens) visit(p.gset().act(s, orbit[i]));
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

ZGRingElement classify(const GPermutation& p) {
  ZGRingElement out(p.group());
  for (const auto& orbit : zg_orbits(p)) out.add_term(orbit_triple(p, orbit.front()), 1);
  return out;
}

GPermutation realize(const GroupRef& group, const TripleClass& t) {
  const FiniteGroup& g = group->group();
  if (t.m < 1) throw ValidationError("triple multiplicity m must be >= 1");
  if (t.subgroup_class < 0 || t.subgroup_class >= group->classes().size()) {
    throw ValidationError("subgroup class id out of range");
  }
  const Subgroup& h = group->representative(t.subgroup_class);
  if (group->weyl(t.subgroup_class).coset_of.at(t.alpha) < 0) {
    throw ValidationError("alpha does not normalize the subgroup");
  }
  std::vector<int> coset(g.order(), -1);
  std::vector<Element> least;
  for (int b = 0; b < g.order(); ++b) {
    if (coset[b] >= 0) continue;
    const int id = static_cast<int>(least.size());
    least.push_back(b);
    for (Element x : h.elements()) coset[g.mul(b, x)] = id;
  }
  const int cosets = static_cast<int>(least.size());
  const int n = t.m * cosets;
  std::vector<Permutation> action(g.order(), Permutation(n));
  for (int a = 0; a < g.order(); ++a) {
    for (int i = 0; i < t.m; ++i) {
      for (int c = 0; c < cosets; ++c) action[a][i * cosets + c] = i * cosets + coset[g.mul(a, least[c])];
    }
  }
  const Element alpha_inv = g.inv(t.alpha);
  Permutation sigma(n);
  for (int i = 0; i < t.m; ++i) {
    for (int c = 0; c < cosets; ++c) {
      sigma[i * cosets + c] = i + 1 < t.m ? (i + 1) * cosets + c : coset[g.mul(least[c], alpha_inv)];
    }
  }
  return GPermutation(group, GSet::from_table(g, std::move(action)), std::move(sigma));
}

BurnsideElement equivariant_lefschetz(Element g, const GPermutation& p) {
  const FiniteGroup& group = p.group()->group();
  if (g < 0 || g >= group.order()) throw ValidationError("element index out of range");
  const GSet& set = p.gset();
  std::vector<int> position(p.points(), -1);
  std::vector<int> fixed;
  for (int x = 0; x < p.points(); ++x) {
    if (set.act(g, p.sigma()[x]) == x) {
      position[x] = static_cast<int>(fixed.size());
      fixed.push_back(x);
    }
  }
  std::vector<Permutation> action(group.order(), Permutation(fixed.size()));
  for (int a = 0; a < group.order(); ++a) {
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      const int image = position[set.act(a, fixed[i])];
      if (image < 0) {
        throw ValidationError("fixed set of " + group.label(g) +
                              " sigma is not G-invariant; use the Lefschetz table instead");
      }
      action[a][i] = image;
    }
  }
  return class_of_gset(p.group(), GSet::from_table(group, std::move(action)));
}

long long period_lcm(const GPermutation& p) {
  long long l = 1;
  for (const auto& orbit : zg_orbits(p)) l = std::lcm(l, static_cast<long long>(orbit_triple(p, orbit.front()).m));
  return l;
}

LefschetzTable lefschetz_table(const GPermutation& p, int m_max) {
  if (m_max < 0) throw ValidationError("m_max must be >= 0");
  if (m_max == 0) {
    const long long l = period_lcm(p);
    if (l > 1'000'000) throw ValidationError("orbit period lcm too large; pass m_max explicitly");
    m_max = static_cast<int>(l);
  }
  const GroupContext& ctx = *p.group();
  const GSet& set = p.gset();
  const int n = p.points();

  // Points whose G-stabilizer is exactly a class representative.
  std::vector<std::vector<int>> exact(ctx.classes().size());
  {
    std::map<Subgroup, int> cache;
    for (int x = 0; x < n; ++x) {
      Subgroup s = set.stabilizer(x);
      auto it = cache.find(s);
      if (it == cache.end()) {
        const int c = ctx.locate(s).class_id;
        it = cache.emplace(s, ctx.representative(c) == s ? c : -1).first;
      }
      if (it->second >= 0) exact[it->second].push_back(x);
    }
  }

  LefschetzTable table(p.group(), m_max);
  Permutation power(n);
  std::iota(power.begin(), power.end(), 0);
  for (int m = 1; m <= m_max; ++m) {
    for (int& x : power) x = p.sigma()[x];
    for (int c = 0; c < ctx.classes().size(); ++c) {
      if (exact[c].empty()) continue;
      const WeylData& w = ctx.weyl(c);
      for (int d = 0; d < w.order(); ++d) {
        const Element g = w.coset_min[d];
        long long count = 0;
        for (int y : exact[c]) {
          if (set.act(g, power[y]) == y) ++count;
        }
        if (count % w.centralizer_size[d] != 0) {
          throw std::logic_error("fixed-point count not divisible by the centralizer order");
        }
        table.set(c, m, g, count / w.centralizer_size[d]);
      }
    }
  }
  return table;
}

GPermutation disjoint_union(const GPermutation& a, const GPermutation& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch();
  const int na = a.points(), nb = b.points();
  const int order = a.group()->group().order();
  std::vector<Permutation> action(order, Permutation(na + nb));
  for (int g = 0; g < order; ++g) {
    for (int x = 0; x < na; ++x) action[g][x] = a.gset().act(g, x);
    for (int y = 0; y < nb; ++y) action[g][na + y] = na + b.gset().act(g, y);
  }
  Permutation sigma(na + nb);
  for (int x = 0; x < na; ++x) sigma[x] = a.sigma()[x];
  for (int y = 0; y < nb; ++y) sigma[na + y] = na + b.sigma()[y];
  return GPermutation(a.group(), GSet::from_table(a.group()->group(), std::move(action)),
                      std::move(sigma));
}

GPermutation cartesian_product(const GPermutation& a, const GPermutation& b) {
  if (!same_group(a.group(), b.group())) throw GroupMismatch();
  const int nb = b.points();
  Permutation sigma(a.points() * nb);
  for (int x = 0; x < a.points(); ++x) {
    for (int y = 0; y < nb; ++y) sigma[x * nb + y] = a.sigma()[x] * nb + b.sigma()[y];
  }
  return GPermutation(a.group(), product_gset(a.gset(), b.gset()), std::move(sigma));
}

GPermutation relabel(const GPermutation& p, const Permutation& relabel) {
  const int n = p.points();
  if (static_cast<int>(relabel.size()) != n) throw ValidationError("relabel has wrong length");
  const int order = p.group()->group().order();
  std::vector<Permutation> action(order, Permutation(n));
  for (int g = 0; g < order; ++g) {
    for (int x = 0; x < n; ++x) action[g][relabel[x]] = relabel[p.gset().act(g, x)];
  }
  Permutation sigma(n);
  for (int x = 0; x < n; ++x) sigma[relabel[x]] = relabel[p.sigma()[x]];
  return GPermutation(p.group(), GSet::from_table(p.group()->group(), std::move(action)),
                      std::move(sigma));
}

}  // namespace eqzeta
