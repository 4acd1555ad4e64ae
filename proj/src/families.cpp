#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "eqzeta/error.hpp"
#include "eqzeta/group.hpp"

namespace eqzeta {

namespace {

void check_order(long long order, const GroupLimits& limits) {
  if (order > limits.max_order) {
    throw ValidationError("group order " + std::to_string(order) + " exceeds the bound " +
                          std::to_string(limits.max_order));
  }
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) r[x] = p[q[x]];
  return r;
}

// Index lookup for permutations; packs small degrees into one word.
class PermutationIndex {
 public:
  explicit PermutationIndex(const std::vector<Permutation>& elements) {
    packed_ = !elements.empty() && elements.front().size() <= 16;
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (packed_) {
        small_.emplace(pack(elements[i]), static_cast<int>(i));
      } else {
        large_.emplace(elements[i], static_cast<int>(i));
      }
    }
  }
  [[nodiscard]] int find(const Permutation& p) const {
    if (packed_) {
      auto it = small_.find(pack(p));
      return it == small_.end() ? -1 : it->second;
    }
    auto it = large_.find(p);
    return it == large_.end() ? -1 : it->second;
  }

 private:
  static std::uint64_t pack(const Permutation& p) {
    std::uint64_t key = 0;
    for (int x : p) key = (key << 4) | static_cast<std::uint64_t>(x);
    return key;
  }
  bool packed_ = true;
  std::unordered_map<std::uint64_t, int> small_;
  std::map<Permutation, int> large_;
};

FiniteGroup from_sorted_permutations(const std::vector<Permutation>& elements,
                                     const std::vector<Permutation>& gens, GroupLimits limits) {
  PermutationIndex index(elements);
  const int n = static_cast<int>(elements.size());
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = index.find(compose(elements[a], elements[b]));
  }
  std::vector<Element> generators;
  for (const auto& g : gens) generators.push_back(index.find(g));
  return FiniteGroup(std::move(table), std::move(generators), {}, limits);
}

}  // namespace

FiniteGroup cyclic_group(int n, GroupLimits limits) {
  if (n < 1) throw ValidationError("cyclic group needs n >= 1");
  check_order(n, limits);
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  return FiniteGroup(std::move(table), std::move(gens), {}, limits);
}

FiniteGroup dihedral_group(int n, GroupLimits limits) {
  if (n < 1) throw ValidationError("dihedral group needs n >= 1");
  check_order(2LL * n, limits);
  // i < n is r^i, n + i is s r^i; s r^a = r^-a s.
  auto product = [n](int x, int y) {
    const bool xs = x >= n, ys = y >= n;
    const int a = x % n, b = y % n;
    if (!xs && !ys) return (a + b) % n;
    if (!xs && ys) return n + ((b - a) % n + n) % n;
    if (xs && !ys) return n + (a + b) % n;
    return ((b - a) % n + n) % n;
  };
  std::vector<std::vector<Element>> table(2 * n, std::vector<Element>(2 * n));
  for (int x = 0; x < 2 * n; ++x) {
    for (int y = 0; y < 2 * n; ++y) table[x][y] = product(x, y);
  }
  std::vector<Element> gens;
  if (n > 1) gens.push_back(1);
  gens.push_back(n);
  return FiniteGroup(std::move(table), std::move(gens), {}, limits);
}

FiniteGroup symmetric_group(int n, GroupLimits limits) {
  if (n < 1) throw ValidationError("symmetric group needs n >= 1");
  long long order = 1;
  for (int k = 2; k <= n; ++k) {
    order *= k;
    check_order(order, limits);
  }
  std::vector<Permutation> elements;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    elements.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<Permutation> gens;
  if (n >= 2) {
    Permutation swap(n);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    gens.push_back(swap);
  }
  if (n >= 3) {
    Permutation cycle(n);
    for (int x = 0; x < n; ++x) cycle[x] = (x + 1) % n;
    gens.push_back(cycle);
  }
  return from_sorted_permutations(elements, gens, limits);
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b, GroupLimits limits) {
  const int na = a.order(), nb = b.order();
  check_order(static_cast<long long>(na) * nb, limits);
  const int n = na * nb;
  std::vector<std::vector<Element>> table(n, std::vector<Element>(n));
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    }
  }
  std::vector<Element> gens;
  for (Element g : a.generators()) gens.push_back(g * nb + b.identity());
  for (Element g : b.generators()) gens.push_back(a.identity() * nb + g);
  return FiniteGroup(std::move(table), std::move(gens), {}, limits);
}

FiniteGroup permutation_group(int degree, const std::vector<Permutation>& gens,
                              GroupLimits limits) {
  if (degree < 1) throw ValidationError("permutation degree must be positive");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    std::vector<char> seen(degree, 0);
    bool ok = static_cast<int>(g.size()) == degree;
    for (int x : g) {
      if (!ok) break;
      if (x < 0 || x >= degree || seen[x]) ok = false;
      else seen[x] = 1;
    }
    if (!ok) {
      throw ValidationError("generator " + std::to_string(i) + " is not a bijection of " +
                            std::to_string(degree) + " points");
    }
  }
  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<Permutation, int> seen{{id, 0}};
  std::vector<Permutation> queue{id};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = compose(queue[i], g);
      if (seen.emplace(next, 0).second) {
        queue.push_back(std::move(next));
        check_order(static_cast<long long>(queue.size()), limits);
      }
    }
  }
  std::vector<Permutation> elements;
  elements.reserve(seen.size());
  for (const auto& [perm, unused] : seen) elements.push_back(perm);
  return from_sorted_permutations(elements, gens, limits);
}

}  // namespace eqzeta
