#include "eqzeta/gcomplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "eqzeta/error.hpp"
#include "eqzeta/gperm.hpp"

namespace eqzeta {

namespace {

constexpr long long kMaxCells = 10000;
constexpr long long kMaxPeriod = 100000;

std::vector<int> mapped_sorted(const std::vector<int>& cells, const Permutation& p) {
  std::vector<int> out;
  out.reserve(cells.size());
  for (int c : cells) out.push_back(p[c]);
  std::sort(out.begin(), out.end());
  return out;
}

std::string cell_name(int d, int c) { return std::to_string(d) + "-cell " + std::to_string(c); }

GPermutation dimension_permutation(const GComplex& k, const GCellularMap& sigma, int d) {
  return GPermutation(k.group(), k.action(d), sigma.on(d));
}

}  // namespace

GComplex::GComplex(GroupRef group, std::vector<std::vector<std::vector<int>>> faces,
                   const std::vector<std::vector<Permutation>>& generator_images)
    : group_(std::move(group)), faces_(std::move(faces)) {
  const FiniteGroup& g = group_->group();
  if (faces_.empty()) throw ValidationError("complex has no dimensions");
  if (total_cells() > kMaxCells) {
    throw ValidationError("complex has more than " + std::to_string(kMaxCells) + " cells");
  }
  for (int c = 0; c < cells(0); ++c) {
    if (!faces_[0][c].empty()) throw ValidationError("0-cells cannot have faces");
  }
  for (int d = 1; d <= dimension(); ++d) {
    for (int c = 0; c < cells(d); ++c) {
      auto& f = faces_[d][c];
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
        throw ValidationError(cell_name(d, c) + " lists a face twice");
      }
      for (int x : f) {
        if (x < 0 || x >= cells(d - 1)) {
          throw ValidationError(cell_name(d, c) + " has a face index out of range");
        }
      }
    }
  }

  const auto& gens = g.generators();
  if (generator_images.size() != gens.size()) {
    throw ValidationError("expected cell actions for " + std::to_string(gens.size()) +
                          " generators, got " + std::to_string(generator_images.size()));
  }
  for (int d = 0; d <= dimension(); ++d) {
    std::vector<Permutation> per_generator;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      if (static_cast<int>(generator_images[i].size()) != dimension() + 1) {
        throw ValidationError("generator " + std::to_string(i) +
                              " must give one image array per dimension");
      }
      per_generator.push_back(generator_images[i][d]);
    }
    action_.push_back(GSet::from_generators(g, cells(d), per_generator));
  }

  for (int d = 1; d <= dimension(); ++d) {
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Permutation& down = action_[d - 1].of(gens[i]);
      for (int c = 0; c < cells(d); ++c) {
        if (mapped_sorted(faces_[d][c], down) != faces_[d][action_[d].act(gens[i], c)]) {
          throw ValidationError("generator " + std::to_string(i) +
                                " does not respect the faces of " + cell_name(d, c));
        }
      }
    }
    for (int a = 0; a < g.order(); ++a) {
      for (int c = 0; c < cells(d); ++c) {
        if (action_[d].act(a, c) != c) continue;
        for (int f : faces_[d][c]) {
          if (action_[d - 1].act(a, f) != f) {
            throw ValidationError("not regular: " + g.label(a) + " fixes " + cell_name(d, c) +
                                  " but moves its face " + std::to_string(f));
          }
        }
      }
    }
  }
}

long long GComplex::total_cells() const {
  long long total = 0;
  for (const auto& dim : faces_) total += static_cast<long long>(dim.size());
  return total;
}

GCellularMap::GCellularMap(const GComplex& complex, std::vector<Permutation> images)
    : images_(std::move(images)) {
  const FiniteGroup& g = complex.group()->group();
  if (static_cast<int>(images_.size()) != complex.dimension() + 1) {
    throw ValidationError("cellular map needs one image array per dimension");
  }
  for (int d = 0; d <= complex.dimension(); ++d) {
    const Permutation& p = images_[d];
    const int n = complex.cells(d);
    std::vector<char> seen(n, 0);
    if (static_cast<int>(p.size()) != n) {
      throw ValidationError("cellular map has wrong length in dimension " + std::to_string(d));
    }
    for (int x : p) {
      if (x < 0 || x >= n || seen[x]) {
        throw ValidationError("cellular map is not a bijection in dimension " + std::to_string(d));
      }
      seen[x] = 1;
    }
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      const Element s = g.generators()[i];
      for (int c = 0; c < n; ++c) {
        if (p[complex.action(d).act(s, c)] != complex.action(d).act(s, p[c])) {
          throw ValidationError("cellular map does not commute with generator " +
                                std::to_string(i) + " at " + cell_name(d, c));
        }
      }
    }
    if (d > 0) {
      for (int c = 0; c < n; ++c) {
        if (mapped_sorted(complex.faces(d, c), images_[d - 1]) != complex.faces(d, p[c])) {
          throw ValidationError("cellular map does not respect the faces of " + cell_name(d, c));
        }
      }
    }
    std::vector<char> visited(n, 0);
    for (int c = 0; c < n; ++c) {
      if (visited[c]) continue;
      long long len = 0;
      for (int x = c; !visited[x]; x = p[x]) {
        visited[x] = 1;
        ++len;
      }
      period_ = std::lcm(period_, len);
      if (period_ > kMaxPeriod) throw ValidationError("cellular map period is too large");
    }
  }

  // Joint regularity of g sigma^m.
  std::vector<Permutation> power(images_.size());
  for (int d = 0; d <= complex.dimension(); ++d) {
    power[d].resize(complex.cells(d));
    std::iota(power[d].begin(), power[d].end(), 0);
  }
  for (long long m = 1; m <= period_; ++m) {
    for (int d = 0; d <= complex.dimension(); ++d) {
      for (int& x : power[d]) x = images_[d][x];
    }
    for (int d = 1; d <= complex.dimension(); ++d) {
      for (int a = 0; a < g.order(); ++a) {
        for (int c = 0; c < complex.cells(d); ++c) {
          if (complex.action(d).act(a, power[d][c]) != c) continue;
          for (int f : complex.faces(d, c)) {
            if (complex.action(d - 1).act(a, power[d - 1][f]) != f) {
              throw ValidationError("not jointly regular: " + g.label(a) + " sigma^" +
                                    std::to_string(m) + " fixes " + cell_name(d, c) +
                                    " but moves its face " + std::to_string(f));
            }
          }
        }
      }
    }
  }
}

BurnsideElement chi_G_cellwise(const GComplex& k) {
  BurnsideElement out(k.group());
  for (int d = 0; d <= k.dimension(); ++d) {
    const BurnsideElement layer = class_of_gset(k.group(), k.action(d));
    if (d % 2 == 0) {
      out += layer;
    } else {
      out -= layer;
    }
  }
  return out;
}

namespace {

// Stabilizer class of every cell, per dimension.
std::vector<std::vector<int>> cell_classes(const GComplex& k) {
  std::vector<std::vector<int>> out(k.dimension() + 1);
  std::map<Subgroup, int> cache;
  for (int d = 0; d <= k.dimension(); ++d) {
    for (int c = 0; c < k.cells(d); ++c) {
      Subgroup s = k.action(d).stabilizer(c);
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, k.group()->locate(s).class_id).first;
      out[d].push_back(it->second);
    }
  }
  return out;
}

}  // namespace

BurnsideElement chi_G_strata(const GComplex& k) {
  const auto classes = cell_classes(k);
  const int nclasses = k.group()->classes().size();
  std::vector<BigInt> chi(nclasses, 0);
  const auto& gens = k.group()->group().generators();
  for (int stratum = 0; stratum < nclasses; ++stratum) {
    for (int d = 0; d <= k.dimension(); ++d) {
      // Orbits of G on the d-cells of this stratum.
      std::vector<char> seen(k.cells(d), 0);
      long long orbits = 0;
      for (int c = 0; c < k.cells(d); ++c) {
        if (seen[c] || classes[d][c] != stratum) continue;
        ++orbits;
        std::vector<int> queue{c};
        seen[c] = 1;
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (Element s : gens) {
            const int y = k.action(d).act(s, queue[i]);
            if (!seen[y]) {
              seen[y] = 1;
              queue.push_back(y);
            }
          }
        }
      }
      chi[stratum] += d % 2 == 0 ? orbits : -orbits;
    }
  }
  BurnsideElement out(k.group());
  for (int c = 0; c < nclasses; ++c) out.add_term(c, chi[c]);
  return out;
}

BurnsideElement chi_G_strata_weighted(const GComplex& k) {
  const auto classes = cell_classes(k);
  const int nclasses = k.group()->classes().size();
  std::vector<BigInt> chi(nclasses, 0);
  for (int d = 0; d <= k.dimension(); ++d) {
    for (int cls : classes[d]) chi[cls] += d % 2 == 0 ? 1 : -1;
  }
  BurnsideElement out(k.group());
  for (int c = 0; c < nclasses; ++c) {
    const BigInt scaled = chi[c] * k.group()->representative(c).order();
    if (scaled % k.group()->group().order() != 0) {
      throw std::logic_error("stratum Euler characteristic not divisible by the orbit size");
    }
    out.add_term(c, scaled / k.group()->group().order());
  }
  return out;
}

long long euler_characteristic(const GComplex& k) {
  long long chi = 0;
  for (int d = 0; d <= k.dimension(); ++d) chi += d % 2 == 0 ? k.cells(d) : -k.cells(d);
  return chi;
}

ZGRingElement brute_zeta(const GComplex& k, const GCellularMap& sigma) {
  ZGRingElement out(k.group());
  for (int d = 0; d <= k.dimension(); ++d) {
    const ZGRingElement layer = classify(dimension_permutation(k, sigma, d));
    if (d % 2 == 0) {
      out += layer;
    } else {
      out -= layer;
    }
  }
  return out;
}

LefschetzTable lefschetz_table(const GComplex& k, const GCellularMap& sigma, int m_max) {
  std::vector<GPermutation> layers;
  for (int d = 0; d <= k.dimension(); ++d) layers.push_back(dimension_permutation(k, sigma, d));
  if (m_max == 0) {
    long long l = 1;
    for (const auto& p : layers) l = std::lcm(l, period_lcm(p));
    m_max = static_cast<int>(l);
  }
  LefschetzTable out(k.group(), m_max);
  for (int d = 0; d <= k.dimension(); ++d) {
    const LefschetzTable layer = lefschetz_table(layers[d], m_max);
    if (d % 2 == 0) {
      out += layer;
    } else {
      out -= layer;
    }
  }
  return out;
}

}  // namespace eqzeta
