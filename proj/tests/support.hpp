#pragma once

// Shared fixtures and brute-force oracles for the test binaries.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "eqzeta/burnside.hpp"
#include "eqzeta/gcomplex.hpp"
#include "eqzeta/gperm.hpp"
#include "eqzeta/group.hpp"
#include "eqzeta/zeta_engine.hpp"
#include "eqzeta/zg_ring.hpp"

namespace testing_support {

using namespace eqzeta;

struct NamedGroup {
  std::string name;
  GroupRef group;
};

inline std::vector<NamedGroup> suite_groups() {
  return {
      {"trivial", analyze(cyclic_group(1))},
      {"C2", analyze(cyclic_group(2))},
      {"C3", analyze(cyclic_group(3))},
      {"C4", analyze(cyclic_group(4))},
      {"C2xC2", analyze(direct_product(cyclic_group(2), cyclic_group(2)))},
      {"S3", analyze(symmetric_group(3))},
      {"D4", analyze(dihedral_group(4))},
  };
}

/// Every canonical triple with m <= m_max.
inline std::vector<TripleClass> all_triples(const GroupContext& ctx, int m_max) {
  std::vector<TripleClass> out;
  for (int c = 0; c < ctx.classes().size(); ++c) {
    for (int m = 1; m <= m_max; ++m) {
      for (Element a : ctx.weyl(c).class_canon) out.push_back(TripleClass{c, m, a});
    }
  }
  return out;
}

inline Permutation random_permutation(int n, std::mt19937& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Random G-permutation built without realize(): a union of coset spaces
/// G/H_j and an equivariant bijection that permutes orbits of equal type and
/// acts on each by bH -> b n_j H with n_j in N(H).
inline GPermutation random_gperm(const GroupRef& group, int max_points, std::mt19937& rng) {
  const GroupContext& ctx = *group;
  const FiniteGroup& g = ctx.group();
  std::vector<int> orbit_class;
  int points = 0;
  std::uniform_int_distribution<int> pick_class(0, ctx.classes().size() - 1);
  for (int tries = 0; tries < 40; ++tries) {
    const int c = pick_class(rng);
    if (points + ctx.index(c) > max_points) continue;
    orbit_class.push_back(c);
    points += ctx.index(c);
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
  }
  if (orbit_class.empty()) orbit_class.push_back(ctx.whole_class()), points = 1;

  // coset index of b H inside orbit j, in the ordering of coset_space
  std::vector<int> offset;
  std::vector<std::vector<int>> coset_of(orbit_class.size());
  std::vector<Permutation> action(g.order(), Permutation(points));
  int next = 0;
  for (std::size_t j = 0; j < orbit_class.size(); ++j) {
    const Subgroup& h = ctx.representative(orbit_class[j]);
    const GSet cosets = coset_space(g, h);
    int base = -1;
    for (int x = 0; x < cosets.points(); ++x) {
      if (cosets.stabilizer(x) == h) base = x;
    }
    for (int b = 0; b < g.order(); ++b) coset_of[j].push_back(cosets.act(b, base));
    for (int a = 0; a < g.order(); ++a) {
      for (int x = 0; x < cosets.points(); ++x) action[a][next + x] = next + cosets.act(a, x);
    }
    offset.push_back(next);
    next += cosets.points();
  }

  Permutation sigma(points);
  std::map<int, std::vector<int>> by_class;
  for (std::size_t j = 0; j < orbit_class.size(); ++j) by_class[orbit_class[j]].push_back(j);
  for (auto& [c, orbits] : by_class) {
    std::vector<int> target = orbits;
    std::shuffle(target.begin(), target.end(), rng);
    const Subgroup& n = ctx.classes()[c].normalizer;
    for (std::size_t i = 0; i < orbits.size(); ++i) {
      const int j = orbits[i], k = target[i];
      const Element nj = n.elements()[std::uniform_int_distribution<int>(0, n.order() - 1)(rng)];
      for (int b = 0; b < g.order(); ++b) {
        sigma[offset[j] + coset_of[j][b]] = offset[k] + coset_of[k][g.mul(b, nj)];
      }
    }
  }
  GPermutation p(group, GSet::from_table(g, std::move(action)), std::move(sigma));
  return relabel(p, random_permutation(points, rng));
}

/// Random G-permutation as a relabelled disjoint union of realized triples.
inline GPermutation random_realized_gperm(const GroupRef& group, int max_points,
                                          std::mt19937& rng) {
  const auto triples = all_triples(*group, 6);
  std::vector<TripleClass> chosen;
  int points = 0;
  for (int tries = 0; tries < 40; ++tries) {
    const TripleClass& t = triples[std::uniform_int_distribution<std::size_t>(0, triples.size() - 1)(rng)];
    const long long size = triple_size(*group, t);
    if (points + size > max_points) continue;
    chosen.push_back(t);
    points += static_cast<int>(size);
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) break;
  }
  if (chosen.empty()) chosen.push_back(TripleClass{group->whole_class(), 1, group->group().identity()});
  GPermutation p = realize(group, chosen[0]);
  for (std::size_t i = 1; i < chosen.size(); ++i) p = disjoint_union(p, realize(group, chosen[i]));
  return relabel(p, random_permutation(p.points(), rng));
}

inline ZGRingElement random_element(const GroupRef& group, int m_max, int terms,
                                    std::mt19937& rng) {
  const auto triples = all_triples(*group, m_max);
  ZGRingElement z(group);
  for (int i = 0; i < terms; ++i) {
    const TripleClass& t = triples[std::uniform_int_distribution<std::size_t>(0, triples.size() - 1)(rng)];
    z.add_term(t, std::uniform_int_distribution<int>(-3, 3)(rng));
  }
  return z;
}

/// Brute force: is some conjugate of Ĥ(inner) inside Ĥ(outer)? Both are
/// computed as subgroups of (Z/M) x G, M = lcm(m o, m' o'); both contain
/// M Z x {e}, so containment there is containment in Z x G.
inline bool brute_contains(const GroupContext& ctx, const TripleClass& inner,
                           const TripleClass& outer) {
  const FiniteGroup& g = ctx.group();
  const int n = g.order();
  const long long M = std::lcm(static_cast<long long>(inner.m) * alpha_order(ctx, inner),
                               static_cast<long long>(outer.m) * alpha_order(ctx, outer));
  auto generate = [&](const std::vector<std::pair<long long, Element>>& gens) {
    std::vector<char> in(M * n, 0);
    std::vector<std::pair<long long, Element>> queue{{0, g.identity()}};
    in[g.identity()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (const auto& [k, x] : gens) {
        const long long z = (queue[i].first + k) % M;
        const Element y = g.mul(queue[i].second, x);
        if (!in[z * n + y]) {
          in[z * n + y] = 1;
          queue.emplace_back(z, y);
        }
      }
    }
    return in;
  };
  auto gens_of = [&](const TripleClass& t, Element conj) {
    std::vector<std::pair<long long, Element>> gens;
    for (Element h : ctx.representative(t.subgroup_class).elements()) gens.emplace_back(0, g.conj(h, conj));
    gens.emplace_back(t.m % M, g.conj(t.alpha, conj));
    return gens;
  };
  const std::vector<char> big = generate(gens_of(outer, g.identity()));
  for (Element x = 0; x < n; ++x) {
    const std::vector<char> small = generate(gens_of(inner, x));
    bool inside = true;
    for (std::size_t i = 0; i < small.size() && inside; ++i) inside = !small[i] || big[i];
    if (inside) return true;
  }
  return false;
}

/// Z-orbit lengths of the underlying permutation, as a classical zeta.
inline ClassicalZeta classical_of(const Permutation& sigma) {
  ClassicalZeta z;
  std::vector<char> seen(sigma.size(), 0);
  for (std::size_t x = 0; x < sigma.size(); ++x) {
    if (seen[x]) continue;
    int len = 0;
    for (std::size_t y = x; !seen[y]; y = sigma[y]) {
      seen[y] = 1;
      ++len;
    }
    z.add_exponent(len, 1);
  }
  return z;
}

/// Classical Lefschetz numbers L(sigma^m), m = 1..count.
inline std::vector<BigInt> fixed_point_counts(const Permutation& sigma, int count) {
  std::vector<BigInt> out;
  Permutation power(sigma.size());
  std::iota(power.begin(), power.end(), 0);
  for (int m = 1; m <= count; ++m) {
    for (int& x : power) x = sigma[x];
    long long fixed = 0;
    for (std::size_t x = 0; x < power.size(); ++x) fixed += power[x] == static_cast<int>(x);
    out.push_back(fixed);
  }
  return out;
}

/// A discrete model for the elementary formula: all isotropy groups
/// conjugate, no sigma^m (0 < m < m0) preserving a G-orbit, g0 sigma^m0 = id.
struct ElementaryModel {
  GPermutation p;
  int m0;
  Subgroup h;
  Element g0;
  BigInt orbits;  ///< chi(X/G)
};

inline bool preserves_no_orbit_below(const GPermutation& p, int m0) {
  const GSet& x = p.gset();
  for (int m = 1; m < m0; ++m) {
    const GPermutation pm = p.power(m);
    for (int y = 0; y < p.points(); ++y) {
      for (const auto& orbit : x.orbits()) {
        const bool in = std::find(orbit.begin(), orbit.end(), y) != orbit.end();
        const bool image_in = std::find(orbit.begin(), orbit.end(), pm.sigma()[y]) != orbit.end();
        if (in && image_in) return false;
      }
    }
  }
  return true;
}

/// Unions of one or two realized copies of triples with m <= m_max, kept
/// when they satisfy the hypotheses for some g0 (found by search).
inline std::vector<ElementaryModel> elementary_models(const GroupRef& group, int m_max) {
  const FiniteGroup& g = group->group();
  std::vector<ElementaryModel> out;
  const auto triples = all_triples(*group, m_max);
  for (const auto& t : triples) {
    for (const auto& u : triples) {
      if (u.subgroup_class != t.subgroup_class || u.m != t.m || u.alpha < t.alpha) continue;
      for (int copies = 1; copies <= (u.alpha == t.alpha ? 2 : 1); ++copies) {
        GPermutation p = realize(group, t);
        if (copies == 2 || u.alpha != t.alpha) p = disjoint_union(p, realize(group, u));
        const GPermutation top = p.power(t.m);
        for (Element g0 = 0; g0 < g.order(); ++g0) {
          bool identity = true;
          for (int y = 0; y < p.points() && identity; ++y) identity = p.gset().act(g0, top.sigma()[y]) == y;
          if (!identity) continue;
          if (!preserves_no_orbit_below(p, t.m)) break;
          out.push_back({p, t.m, p.gset().stabilizer(0), g0,
                         BigInt(static_cast<long long>(p.gset().orbits().size()))});
          break;
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Regular complexes.

/// Cell data in the layout GComplex expects, with per-generator images.
struct ComplexSpec {
  std::vector<std::vector<std::vector<int>>> faces;
  std::vector<std::vector<Permutation>> action;  // [generator][dim]
};

inline GComplex make_complex(const GroupRef& group, const ComplexSpec& s) {
  return GComplex(group, s.faces, s.action);
}

/// Cycle graph on n vertices; vertex i, edge i = {i, i+1}. Each vertex map
/// (in `vertex_maps`, one per group generator) must be a dihedral symmetry.
inline ComplexSpec polygon(int n, const std::vector<Permutation>& vertex_maps) {
  ComplexSpec s;
  s.faces.resize(2);
  s.faces[0].assign(n, {});
  for (int i = 0; i < n; ++i) s.faces[1].push_back({i, (i + 1) % n});
  auto edge_index = [n](int a, int b) {
    if ((a + 1) % n == b) return a;
    return b;
  };
  for (const auto& v : vertex_maps) {
    Permutation e(n);
    for (int i = 0; i < n; ++i) e[i] = edge_index(v[i], v[(i + 1) % n]);
    s.action.push_back({v, e});
  }
  return s;
}

/// Barycentric subdivision of the simplicial complex spanned by `top`
/// (maximal simplices as vertex lists), with generators acting on vertices.
/// d-cells are chains s_0 < ... < s_d of simplices; faces drop one entry.
/// Every simplicial action becomes regular after subdivision.
inline ComplexSpec barycentric(const std::vector<std::vector<int>>& top,
                               const std::vector<Permutation>& vertex_maps) {
  std::set<std::vector<int>> simplices;
  for (const auto& t : top) {
    const int k = static_cast<int>(t.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) {
        if (mask >> i & 1) s.push_back(t[i]);
      }
      std::sort(s.begin(), s.end());
      simplices.insert(s);
    }
  }
  std::vector<std::vector<int>> list(simplices.begin(), simplices.end());
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < list.size(); ++i) id[list[i]] = static_cast<int>(i);
  auto proper_face = [&](int a, int b) {
    return list[a].size() < list[b].size() &&
           std::includes(list[b].begin(), list[b].end(), list[a].begin(), list[a].end());
  };
  // chains by dimension
  std::vector<std::vector<std::vector<int>>> chains(1);
  for (std::size_t i = 0; i < list.size(); ++i) chains[0].push_back({static_cast<int>(i)});
  while (true) {
    std::vector<std::vector<int>> longer;
    for (const auto& c : chains.back()) {
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (proper_face(c.back(), static_cast<int>(i))) {
          auto d = c;
          d.push_back(static_cast<int>(i));
          longer.push_back(d);
        }
      }
    }
    if (longer.empty()) break;
    std::sort(longer.begin(), longer.end());
    chains.push_back(std::move(longer));
  }
  std::vector<std::map<std::vector<int>, int>> chain_id(chains.size());
  for (std::size_t d = 0; d < chains.size(); ++d) {
    for (std::size_t i = 0; i < chains[d].size(); ++i) chain_id[d][chains[d][i]] = static_cast<int>(i);
  }
  ComplexSpec s;
  s.faces.resize(chains.size());
  for (std::size_t d = 0; d < chains.size(); ++d) {
    for (const auto& c : chains[d]) {
      std::vector<int> f;
      if (d > 0) {
        for (std::size_t drop = 0; drop < c.size(); ++drop) {
          auto shorter = c;
          shorter.erase(shorter.begin() + static_cast<long>(drop));
          f.push_back(chain_id[d - 1].at(shorter));
        }
      }
      s.faces[d].push_back(f);
    }
  }
  for (const auto& v : vertex_maps) {
    std::vector<int> simplex_image(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::vector<int> img;
      for (int x : list[i]) img.push_back(v[x]);
      std::sort(img.begin(), img.end());
      simplex_image[i] = id.at(img);
    }
    std::vector<Permutation> per_dim;
    for (std::size_t d = 0; d < chains.size(); ++d) {
      Permutation p;
      for (const auto& c : chains[d]) {
        std::vector<int> img;
        for (int x : c) img.push_back(simplex_image[x]);
        p.push_back(chain_id[d].at(img));
      }
      per_dim.push_back(p);
    }
    s.action.push_back(per_dim);
  }
  return s;
}

/// Images of a vertex map on all cells of barycentric(top, ...), in the same
/// layout as one generator's action.
inline std::vector<Permutation> barycentric_map(const std::vector<std::vector<int>>& top,
                                                const Permutation& vertex_map) {
  return barycentric(top, {vertex_map}).action[0];
}

/// `copies` disjoint copies of a complex; the group acts on each copy.
/// Returns the spec and the cellular map shifting copy i to copy i+1,
/// composed on the last copy with `twist` (a per-dimension map of one copy
/// commuting with the action).
inline std::pair<ComplexSpec, std::vector<Permutation>> cyclic_copies(
    const ComplexSpec& base, int copies, const std::vector<Permutation>& twist) {
  ComplexSpec s;
  const std::size_t dims = base.faces.size();
  s.faces.resize(dims);
  for (std::size_t d = 0; d < dims; ++d) {
    const int below = d == 0 ? 0 : static_cast<int>(base.faces[d - 1].size());
    for (int k = 0; k < copies; ++k) {
      for (const auto& f : base.faces[d]) {
        std::vector<int> shifted;
        for (int x : f) shifted.push_back(x + k * below);
        s.faces[d].push_back(shifted);
      }
    }
  }
  for (const auto& gen : base.action) {
    std::vector<Permutation> per_dim;
    for (std::size_t d = 0; d < dims; ++d) {
      const int n = static_cast<int>(base.faces[d].size());
      Permutation p;
      for (int k = 0; k < copies; ++k) {
        for (int x : gen[d]) p.push_back(x + k * n);
      }
      per_dim.push_back(p);
    }
    s.action.push_back(per_dim);
  }
  std::vector<Permutation> sigma;
  for (std::size_t d = 0; d < dims; ++d) {
    const int n = static_cast<int>(base.faces[d].size());
    Permutation p(n * copies);
    for (int k = 0; k < copies; ++k) {
      for (int x = 0; x < n; ++x) {
        p[k * n + x] = k + 1 < copies ? (k + 1) * n + x : twist[d][x];
      }
    }
    sigma.push_back(p);
  }
  return {s, sigma};
}

/// Identity cell maps of a complex.
inline std::vector<Permutation> identity_maps(const ComplexSpec& s) {
  std::vector<Permutation> out;
  for (const auto& dim : s.faces) {
    Permutation p(dim.size());
    std::iota(p.begin(), p.end(), 0);
    out.push_back(p);
  }
  return out;
}

inline Permutation rotation(int n, int k) {
  Permutation p(n);
  for (int v = 0; v < n; ++v) p[v] = ((v + k) % n + n) % n;
  return p;
}

// v -> c - v
inline Permutation reflection(int n, int c) {
  Permutation p(n);
  for (int v = 0; v < n; ++v) p[v] = ((c - v) % n + n) % n;
  return p;
}

inline std::vector<std::vector<int>> cycle_edges(int n) {
  std::vector<std::vector<int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return e;
}

inline const std::vector<std::vector<int>> tetrahedron = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

inline ComplexSpec points(int n, const std::vector<Permutation>& maps) {
  ComplexSpec s;
  s.faces = {std::vector<std::vector<int>>(n)};
  for (const auto& m : maps) s.action.push_back({m});
  return s;
}

struct ComplexCase {
  std::string name;
  GroupRef group;
  ComplexSpec spec;
};

/// Regular complexes with hand-checked symmetry groups.
inline std::vector<ComplexCase> complex_corpus() {
  const GroupRef trivial = analyze(cyclic_group(1));
  const GroupRef c2 = analyze(cyclic_group(2));
  const GroupRef c3 = analyze(cyclic_group(3));
  const GroupRef c4 = analyze(cyclic_group(4));
  const GroupRef v4 = analyze(direct_product(cyclic_group(2), cyclic_group(2)));
  const GroupRef s3 = analyze(symmetric_group(3));
  const GroupRef d4 = analyze(dihedral_group(4));
  return {
      {"fixed vertex", s3, points(1, {{0}, {0}})},
      {"free orbit", c3, points(3, {{1, 2, 0}})},
      {"square, diagonal reflection", c2, polygon(4, {reflection(4, 0)})},
      {"square, 180 rotation", c2, polygon(4, {rotation(4, 2)})},
      {"square, C4", c4, polygon(4, {rotation(4, 1)})},
      {"square, trivial", trivial, polygon(4, {})},
      {"subdivided square, D4", d4, barycentric(cycle_edges(4), {rotation(4, 1), reflection(4, 0)})},
      {"subdivided square, edge reflection", c2, barycentric(cycle_edges(4), {reflection(4, 1)})},
      {"octagon, D4", d4, polygon(8, {rotation(8, 2), reflection(8, 0)})},
      {"hexagon, S3", s3, polygon(6, {reflection(6, 0), rotation(6, 2)})},
      {"subdivided triangle boundary, S3", s3, barycentric(cycle_edges(3), {{1, 0, 2}, {1, 2, 0}})},
      {"subdivided 2-simplex, S3", s3, barycentric({{0, 1, 2}}, {{1, 0, 2}, {1, 2, 0}})},
      {"subdivided tetrahedron boundary, C2xC2", v4, barycentric(tetrahedron, {{1, 0, 3, 2}, {2, 3, 0, 1}})},
  };
}

struct MapCase {
  std::string name;
  GroupRef group;
  ComplexSpec spec;
  std::vector<Permutation> sigma;
};

/// Complexes with jointly regular cellular maps.
inline std::vector<MapCase> map_corpus() {
  const GroupRef trivial = analyze(cyclic_group(1));
  const GroupRef c2 = analyze(cyclic_group(2));
  const GroupRef v4 = analyze(direct_product(cyclic_group(2), cyclic_group(2)));
  const GroupRef s3 = analyze(symmetric_group(3));
  const GroupRef d4 = analyze(dihedral_group(4));
  std::vector<MapCase> cases;
  auto add = [&](std::string name, const GroupRef& g, ComplexSpec s, std::vector<Permutation> sigma) {
    cases.push_back({std::move(name), g, std::move(s), std::move(sigma)});
  };
  add("square quarter turn", trivial, polygon(4, {}), polygon(4, {rotation(4, 1)}).action[0]);
  add("C2 square quarter turn", c2, polygon(4, {rotation(4, 2)}), polygon(4, {rotation(4, 1)}).action[0]);
  add("subdivided square edge reflection", trivial, barycentric(cycle_edges(4), {}),
      barycentric_map(cycle_edges(4), reflection(4, 1)));
  add("C2 subdivided square half turn", c2, barycentric(cycle_edges(4), {reflection(4, 0)}),
      barycentric_map(cycle_edges(4), rotation(4, 2)));
  add("C2 subdivided square quarter turn", c2, barycentric(cycle_edges(4), {rotation(4, 2)}),
      barycentric_map(cycle_edges(4), rotation(4, 1)));
  add("C2xC2 tetrahedron", v4, barycentric(tetrahedron, {{1, 0, 3, 2}, {2, 3, 0, 1}}),
      barycentric_map(tetrahedron, {1, 0, 3, 2}));
  add("trivial tetrahedron 3-cycle", trivial, barycentric(tetrahedron, {}),
      barycentric_map(tetrahedron, {1, 2, 0, 3}));
  const ComplexSpec triangle = barycentric(cycle_edges(3), {{1, 0, 2}, {1, 2, 0}});
  add("S3 triangle identity", s3, triangle, identity_maps(triangle));
  {
    auto [spec, sigma] = cyclic_copies(triangle, 3, identity_maps(triangle));
    add("S3 triangle copies", s3, spec, sigma);
  }
  {
    const ComplexSpec octagon = polygon(8, {rotation(8, 2), reflection(8, 0)});
    auto [spec, sigma] = cyclic_copies(octagon, 2, polygon(8, {rotation(8, 4)}).action[0]);
    add("D4 octagon copies, twisted", d4, spec, sigma);
  }
  {
    const ComplexSpec hexagon = barycentric(cycle_edges(6), {reflection(6, 0), rotation(6, 2)});
    auto [spec, sigma] = cyclic_copies(hexagon, 2, barycentric_map(cycle_edges(6), rotation(6, 3)));
    add("S3 subdivided hexagon copies, half turn", s3, spec, sigma);
  }
  {
    const ComplexSpec square = barycentric(cycle_edges(4), {rotation(4, 1), reflection(4, 0)});
    add("D4 subdivided square, central sigma", d4, square, barycentric_map(cycle_edges(4), rotation(4, 2)));
  }
  return cases;
}

}  // namespace testing_support
