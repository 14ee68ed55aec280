#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "valuta/enumerate.hpp"
#include "valuta/families.hpp"
#include "valuta/isomorphism.hpp"

using namespace valuta;

namespace {

std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("relabelings are isomorphic") {
  const Matroid t24 = realize(MatroidDescriptor::minimal(2, 4));
  std::mt19937_64 rng(5);
  for (int it = 0; it < 50; ++it) {
    const Matroid r = relabel(t24, random_perm(4, rng));
    CHECK(is_isomorphic(t24, r));
    CHECK(canonical_form(t24) == canonical_form(r));
  }
}

TEST_CASE("different loop counts are never isomorphic") {
  const Matroid a =
      uniform_matroid(1, 2).direct_sum(uniform_matroid(1, 2));
  const Matroid b = uniform_matroid(0, 1)
                        .direct_sum(uniform_matroid(1, 2))
                        .direct_sum(uniform_matroid(1, 1));
  CHECK_FALSE(is_isomorphic(a, b));
  CHECK(canonical_form(a) != canonical_form(b));
}

TEST_CASE("canonical form is stable across 100 random relabelings") {
  std::mt19937_64 rng(41);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Matroid m = random_matroid(6, 3, RandomKind::sparse_paving, seed);
    const CanonicalForm reference = canonical_form(m);
    for (int it = 0; it < 100; ++it)
      CHECK(canonical_form(relabel(m, random_perm(6, rng))) == reference);
  }
  const Matroid chain = random_matroid(7, 3, RandomKind::relaxation_chain, 9);
  const CanonicalForm reference = canonical_form(chain);
  for (int it = 0; it < 100; ++it)
    CHECK(canonical_form(relabel(chain, random_perm(7, rng))) == reference);
}

TEST_CASE("canonical keys separate the seven classes of M_{4,2}") {
  const auto classes = enumerate_matroids(4, 2, true);
  REQUIRE(classes.size() == 7);
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      CHECK(canonical_form(classes[i]) != canonical_form(classes[j]));
      CHECK_FALSE(is_isomorphic(classes[i], classes[j]));
    }
}

TEST_CASE("isomorphism agrees with canonical-form equality") {
  std::mt19937_64 rng(43);
  std::vector<Matroid> pool;
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    pool.push_back(random_matroid(6, 3, RandomKind::graphic, seed));
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    pool.push_back(random_matroid(6, 3, RandomKind::sparse_paving, seed));
  for (const auto& a : pool)
    for (const auto& b : pool)
      CHECK(is_isomorphic(a, b) ==
            (canonical_form(a) == canonical_form(b)));
}

TEST_CASE("isomorphism requires matching ground set and rank") {
  CHECK_FALSE(is_isomorphic(uniform_matroid(1, 3), uniform_matroid(2, 3)));
  CHECK_FALSE(is_isomorphic(uniform_matroid(1, 3), uniform_matroid(1, 4)));
}
