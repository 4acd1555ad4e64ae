// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "eqzeta/error.hpp"
#include "eqzeta/io.hpp"
#include "support.hpp"

using namespace eqzeta;
using namespace testing_support;
namespace io = eqzeta::io;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Result {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

// Random G-permutations of the suite, half built from coset spaces, half
// from realized triples; fixed seed.
std::vector<GPermutation> suite_permutations(int per_group) {
  std::mt19937 rng(2024);
  std::vector<GPermutation> out;
  for (const auto& [name, group] : suite_groups()) {
    for (int i = 0; i < per_group; ++i) {
      out.push_back(i % 2 ? random_gperm(group, 24, rng) : random_realized_gperm(group, 24, rng));
    }
  }
  return out;
}

Result oracle_equivalence() {
  Result r;
  const auto start = Clock::now();
  const auto perms = suite_permutations(30);
  for (const auto& p : perms) {
    r.require(p.points() <= 24, "permutation too large");
    r.require(zeta_from_lefschetz(lefschetz_table(p)) == classify(p), "solver disagrees with classify");
  }
  const double t = seconds_since(start);
  r.require(perms.size() >= 200, "fewer than 200 permutations");
  r.require(t < 60, "took " + std::to_string(t) + " s");
  if (r.ok) r.detail = std::to_string(perms.size()) + " permutations in " + std::to_string(t) + " s";
  return r;
}

Result round_trip() {
  Result r;
  int count = 0;
  for (const auto& [name, group] : suite_groups()) {
    for (const auto& t : all_triples(*group, 6)) {
      r.require(classify(realize(group, t)) == ZGRingElement::basis(group, t), name + ": round trip failed");
      ++count;
    }
  }
  if (r.ok) r.detail = std::to_string(count) + " triples";
  return r;
}

Result containment() {
  Result r;
  long long pairs = 0;
  for (const auto& [name, group] : suite_groups()) {
    const auto triples = all_triples(*group, 6);
    for (const auto& a : triples) {
      for (const auto& b : triples) {
        r.require(zg_contains(*group, a, b) == brute_contains(*group, a, b), name + ": containment mismatch");
        ++pairs;
      }
    }
  }
  if (r.ok) r.detail = std::to_string(pairs) + " pairs";
  return r;
}

Result homomorphisms() {
  Result r;
  std::mt19937 rng(7);
  int pairs = 0;
  for (const auto& [name, group] : suite_groups()) {
    for (int i = 0; i < 20; ++i) {
      const ZGRingElement a = random_element(group, 6, 3, rng);
      const ZGRingElement b = random_element(group, 6, 3, rng);
      r.require(forget_to_classical(zg_mul(a, b)) ==
                    cartesian_product(forget_to_classical(a), forget_to_classical(b)),
                name + ": forget is not multiplicative");
      ++pairs;
    }
  }
  const auto perms = suite_permutations(30);
  for (const auto& p : perms) {
    r.require(degree(forget_to_classical(classify(p))) == p.points(), "degree differs from point count");
  }
  if (r.ok) r.detail = std::to_string(pairs) + " pairs, " + std::to_string(perms.size()) + " permutations";
  return r;
}

Result euler_consistency() {
  Result r;
  const auto corpus = complex_corpus();
  for (const auto& c : corpus) {
    const GComplex k = make_complex(c.group, c.spec);
    r.require(chi_G_cellwise(k) == chi_G_strata(k), c.name + ": cellwise and strata differ");
  }
  r.require(corpus.size() >= 10, "corpus too small");
  const GroupRef c2 = analyze(cyclic_group(2));
  const GComplex square = make_complex(c2, polygon(4, {reflection(4, 0)}));
  r.require(chi_G_cellwise(square) == BigInt(2) * BurnsideElement::one(c2) - BurnsideElement::basis(c2, 0),
            "square diagonal reflection");
  if (r.ok) r.detail = std::to_string(corpus.size()) + " complexes";
  return r;
}

Result moebius() {
  Result r;
  int count = 0;
  auto check = [&](const Permutation& sigma) {
    const int len = std::max<int>(1, static_cast<int>(sigma.size()));
    try {
      r.require(classical_from_lefschetz(fixed_point_counts(sigma, len)) == classical_of(sigma),
                "reconstruction differs");
    } catch (const InconsistentData& e) {
      r.require(false, e.what());
    }
    ++count;
  };
  for (const auto& p : suite_permutations(30)) check(p.sigma());
  std::mt19937 rng(19);
  for (int i = 0; i < 200; ++i) check(random_permutation(std::uniform_int_distribution<int>(1, 30)(rng), rng));
  if (r.ok) r.detail = std::to_string(count) + " sequences";
  return r;
}

Result desk_checks() {
  Result r;
  const auto start = Clock::now();
  const std::filesystem::path dir = EQZETA_FIXTURES;
  auto zeta_of_file = [&](const std::string& file) {
    const io::Document doc = io::read_document(dir / file);
    return io::zeta_of(doc, io::group_of(doc, {}).ref);
  };
  const GroupRef trivial = analyze(cyclic_group(1));
  const ZGRingElement x2 = ZGRingElement::basis(trivial, {0, 2, 0});
  const ZGRingElement st = sebastiani_thom(x2, x2);
  r.require(st.is_zero(), "st([m=2],[m=2]) is not 0");
  r.require(forget_to_classical(st).is_one(), "classical image is not 1");
  r.require(zeta_of_file("milnor_x2y2.json").coefficients() == st.coefficients(), "x^2+y^2 strata file");

  const GroupRef c2 = analyze(cyclic_group(2));
  const ZGRingElement model = classify(GPermutation::from_generators(c2, 2, {{1, 0}}, {1, 0}));
  const ZGRingElement strata = zeta_of_file("milnor_x2.json");
  r.require(strata.coefficients() == model.coefficients(), "x^2 strata file differs from the model");
  r.require(forget_to_classical(strata) == ClassicalZeta::factor(2), "x^2 does not forget to (1-t^2)");
  const double t = seconds_since(start);
  r.require(t < 1, "took " + std::to_string(t) + " s");
  if (r.ok) r.detail = std::to_string(t) + " s";
  return r;
}

Result elementary() {
  Result r;
  int count = 0;
  for (const auto& [name, group] : suite_groups()) {
    const auto models = elementary_models(group, 6);
    r.require(!models.empty(), name + ": no models");
    for (const auto& m : models) {
      r.require(elementary_zeta(group, m.orbits, m.m0, m.h, m.g0) == zeta_from_lefschetz(lefschetz_table(m.p)),
                name + ": elementary formula disagrees");
      ++count;
    }
  }
  if (r.ok) r.detail = std::to_string(count) + " models";
  return r;
}

Result unions_and_products() {
  Result r;
  std::mt19937 rng(23);
  int pairs = 0;
  for (const auto& [name, group] : suite_groups()) {
    for (int i = 0; i < 16; ++i) {
      const GPermutation a = i % 2 ? random_gperm(group, 10, rng) : random_realized_gperm(group, 10, rng);
      const GPermutation b = random_gperm(group, 10, rng);
      r.require(classify(disjoint_union(a, b)) == classify(a) + classify(b), name + ": union");
      r.require(classify(cartesian_product(a, b)) == zg_mul(classify(a), classify(b)), name + ": product");
      ++pairs;
    }
  }
  if (r.ok) r.detail = std::to_string(pairs) + " pairs";
  return r;
}

struct Run {
  int status;
  std::string output;
};

Run run(const std::string& args) {
  const std::string command = std::string("\"") + EQZETA_CLI + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Result cli_determinism() {
  Result r;
  const std::string f = std::string(EQZETA_FIXTURES) + "/";
  struct Case {
    std::string args;
    int status;
    std::string expected;  // exact output when non-empty
  };
  const std::string swap = "1 * [ZxG / (H=1, m=1, a=g1)]\n(1-t^2)\n";
  const std::vector<Case> cases{
      {"subgroups " + f + "trivial.json", 0, ""},
      {"subgroups " + f + "s3.json", 0, ""},
      {"subgroups " + f + "s3_gens.json", 0, ""},
      {"subgroups " + f + "d4.json", 0, ""},
      {"--format structured subgroups " + f + "klein.json", 0, ""},
      {"marks " + f + "s3.json", 0, ""},
      {"marks " + f + "c2.json", 0, "G/e: 2 0\nG/G: 1 1\n"},
      {"--format structured marks " + f + "d4.json", 0, ""},
      {"chi " + f + "square_diagonal.json", 0, "2*[G/G] - 1*[G/e]\nchi = 0\n"},
      {"chi " + f + "square_quarter_turn.json", 0, ""},
      {"chi " + f + "square_edge_flip.json", 1, ""},
      {"classify " + f + "c2_swap.json", 0, swap},
      {"classify " + f + "d4_gperm.json", 0, ""},
      {"classify " + f + "square_quarter_turn.json", 0, "0\n1\n"},
      {"--format structured classify " + f + "c2_swap.json", 0, ""},
      {"classify " + f + "c2_bad_sigma.json", 1, ""},
      {"classify " + f + "milnor_x2.json", 1, ""},
      {"lefschetz " + f + "c2_swap.json", 0, ""},
      {"lefschetz --m-max 6 " + f + "d4_gperm.json", 0, ""},
      {"--format structured lefschetz " + f + "square_quarter_turn.json", 0, ""},
      {"zeta-solve " + f + "s3_lefschetz.json", 0, ""},
      {"zeta-solve " + f + "lefschetz_bad.json", 1, ""},
      {"st " + f + "trivial_m2.json " + f + "trivial_m2.json", 0, "0\n1\n"},
      {"st " + f + "c2_swap.json " + f + "trivial_m2.json", 1, ""},
      {"acampo " + f + "milnor_x2.json", 0, swap},
      {"acampo " + f + "milnor_x2y2.json", 0, "0\n1\n"},
      {"acampo " + f + "milnor_x3.json", 0, ""},
      {"acampo " + f + "strata_bad_n.json", 1, ""},
      {"forget " + f + "zero.json", 0, "1\n"},
      {"forget " + f + "d4_gperm.json", 0, ""},
      {"mul " + f + "c2_swap.json " + f + "milnor_x2.json", 0, ""},
      {"add " + f + "c2_swap.json " + f + "zero.json", 0, swap},
      {"--format structured add " + f + "c2_swap.json " + f + "milnor_x2.json", 0, ""},
      {"classify " + f + "does_not_exist.json", 1, ""},
      {"--max-order 3 subgroups " + f + "s3.json", 1, ""},
      {"bogus " + f + "c2.json", 2, ""},
      {"", 2, ""},
      {"classify", 2, ""},
      {"--format xml classify " + f + "c2_swap.json", 2, ""},
      {"st " + f + "c2_swap.json", 2, ""},
  };
  for (const auto& c : cases) {
    const Run first = run(c.args);
    const Run second = run(c.args);
    r.require(first.output == second.output && first.status == second.status, "nondeterministic: " + c.args);
    r.require(first.status == c.status,
              "exit " + std::to_string(first.status) + " (expected " + std::to_string(c.status) + "): " + c.args);
    if (!c.expected.empty()) r.require(first.output == c.expected, "unexpected output: " + c.args);
  }
  if (r.ok) r.detail = std::to_string(cases.size()) + " invocations";
  return r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"oracle equivalence of the Lefschetz solver", oracle_equivalence},
      {"classify inverts realize", round_trip},
      {"containment criterion against the quotient model", containment},
      {"forgetful homomorphism and degree", homomorphisms},
      {"cellwise and stratified equivariant Euler characteristics", euler_consistency},
      {"Moebius inversion of fixed-point counts", moebius},
      {"Sebastiani-Thom and A'Campo desk checks", desk_checks},
      {"elementary formula", elementary},
      {"disjoint unions and Cartesian products", unions_and_products},
      {"CLI determinism and exit codes", cli_determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r.ok = false;
      r.detail = std::string("exception: ") + e.what();
    }
    all = all && r.ok;
    std::cout << (r.ok ? "PASS" : "FAIL") << ' ' << i + 1 << ": " << criteria[i].first << " (" << r.detail
              << ")" << std::endl;
  }
  return all ? 0 : 1;
}
