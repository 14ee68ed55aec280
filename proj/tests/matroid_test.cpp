#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "valuta/families.hpp"
#include "valuta/isomorphism.hpp"
#include "valuta/matroid.hpp"

using namespace valuta;

namespace {

Matroid u(int k, int n) { return uniform_matroid(k, n); }

Matroid sum2(const Matroid& a, const Matroid& b) { return a.direct_sum(b); }

/// Test-side exchange-axiom oracle, written independently of the library's
/// validation path (set-based instead of mask-membership-based).
bool exchange_oracle(int n, const std::vector<Mask>& bases) {
  (void)n;
  std::set<Mask> all(bases.begin(), bases.end());
  for (Mask b1 : all)
    for (Mask b2 : all)
      for (int e = 0; e < 32; ++e) {
        if (!((b1 >> e) & 1) || ((b2 >> e) & 1)) continue;
        bool found = false;
        for (int f = 0; f < 32 && !found; ++f) {
          if (!((b2 >> f) & 1) || ((b1 >> f) & 1)) continue;
          if (all.count((b1 & ~(Mask{1} << e)) | (Mask{1} << f))) found = true;
        }
        if (!found) return false;
      }
  return true;
}

/// Brute-force cyclic flats: closure-closed sets whose restriction has no
/// coloop, straight from the definitions.
std::vector<std::pair<Mask, int>> cyclic_flats_oracle(const Matroid& m) {
  std::vector<std::pair<Mask, int>> out;
  for (Mask a = 0; a <= m.ground(); ++a) {
    const int r = m.rank_of(a);
    bool flat = true;
    for (int e = 1; e <= m.size() && flat; ++e)
      if (!(a & bit_of(e)) && m.rank_of(a | bit_of(e)) == r) flat = false;
    bool cyclic = true;
    for (int e = 1; e <= m.size() && cyclic; ++e)
      if ((a & bit_of(e)) && m.rank_of(a & ~bit_of(e)) != r) cyclic = false;
    if (flat && cyclic) out.emplace_back(a, r);
    if (a == m.ground()) break;
  }
  std::sort(out.begin(), out.end(), [](auto& p, auto& q) {
    return p.second != q.second ? p.second < q.second : p.first < q.first;
  });
  return out;
}

}  // namespace

TEST_CASE("from_bases accepts the 2-sets of [4] without {3,4}") {
  // All 2-subsets except {3,4}; passes the brute-force exchange oracle and
  // is the minimal matroid T_{2,4}.
  const std::vector<Mask> bases = {mask_of({1, 2}), mask_of({1, 3}),
                                   mask_of({1, 4}), mask_of({2, 3}),
                                   mask_of({2, 4})};
  REQUIRE(exchange_oracle(4, bases));
  const Matroid m = Matroid::from_bases(4, bases);
  CHECK(m.rank() == 2);
  CHECK(m.bases().size() == 5);
  CHECK(is_isomorphic(m, realize(MatroidDescriptor::minimal(2, 4))));
}

TEST_CASE("from_bases handles the empty matroid") {
  const Matroid m = Matroid::from_bases(0, {0});
  CHECK(m.size() == 0);
  CHECK(m.rank() == 0);
  CHECK(m.bases() == std::vector<Mask>{0});
}

TEST_CASE("from_bases verdict equals the brute-force oracle") {
  // {1,2},{3,4},{1,3}: B1={1,2}, e=1 has no exchange partner into {3,4}.
  const std::vector<Mask> bad = {mask_of({1, 2}), mask_of({3, 4}),
                                 mask_of({1, 3})};
  REQUIRE_FALSE(exchange_oracle(4, bad));
  CHECK_THROWS_AS(Matroid::from_bases(4, bad), ExchangeViolation);

  // Random subsets of the 2-sets of [4]: library verdict == oracle verdict.
  const auto ksets = k_subsets(4, 2);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 200; ++it) {
    std::vector<Mask> candidate;
    for (Mask s : ksets)
      if (rng() & 1) candidate.push_back(s);
    if (candidate.empty()) continue;
    const bool oracle = exchange_oracle(4, candidate);
    if (oracle)
      CHECK_NOTHROW(Matroid::from_bases(4, candidate));
    else
      CHECK_THROWS_AS(Matroid::from_bases(4, candidate), ExchangeViolation);
  }
}

TEST_CASE("from_bases rejects empty and mixed-cardinality input") {
  CHECK_THROWS_AS(Matroid::from_bases(3, {}), EmptyBases);
  CHECK_THROWS_AS(Matroid::from_bases(3, {mask_of({1}), mask_of({1, 2})}),
                  MixedCardinality);
  CHECK_THROWS_AS(Matroid::from_bases(2, {mask_of({3})}), InvalidArgument);
}

TEST_CASE("rank examples") {
  CHECK(u(2, 4).rank_of(mask_of({1, 2, 3})) == 2);
  const Matroid loops_coloops = sum2(u(0, 2), u(2, 2));
  CHECK(loops_coloops.rank_of(mask_of({1, 2})) == 0);
  const Matroid t24 = realize(MatroidDescriptor::minimal(2, 4));
  CHECK(t24.rank_of(mask_of({3, 4})) == 1);  // the parallel pair
}

TEST_CASE("rank is monotone and submodular") {
  std::mt19937_64 rng(17);
  const Matroid m = random_matroid(7, 3, RandomKind::relaxation_chain, 5);
  for (int it = 0; it < 300; ++it) {
    const Mask a = static_cast<Mask>(rng()) & m.ground();
    const Mask b = static_cast<Mask>(rng()) & m.ground();
    CHECK(m.rank_of(a) <= m.rank_of(a | b));
    CHECK(m.rank_of(a | b) + m.rank_of(a & b) <=
          m.rank_of(a) + m.rank_of(b));
  }
}

TEST_CASE("dual examples and involution") {
  CHECK(is_isomorphic(sum2(u(1, 3), u(1, 1)).dual(), sum2(u(2, 3), u(0, 1))));
  CHECK(u(2, 4).dual() == u(2, 4));
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Matroid m = random_matroid(6, 3, RandomKind::sparse_paving, seed);
    CHECK(m.dual().dual() == m);
  }
}

TEST_CASE("dual rank identity") {
  const Matroid m = sum2(u(1, 2), realize(MatroidDescriptor::minimal(2, 4)));
  const Matroid d = m.dual();
  for (Mask a = 0; a <= m.ground(); ++a) {
    CHECK(d.rank_of(a) ==
          popcount(a) - m.rank() + m.rank_of(m.ground() & ~a));
    if (a == m.ground()) break;
  }
}

TEST_CASE("minor examples") {
  CHECK(is_isomorphic(u(2, 4).contract_delete(mask_of({3}), 0), u(1, 3)));
  const Matroid m = sum2(u(1, 2), u(1, 2));
  CHECK(m.contract_delete(0, 0) == m);
  // Contracting element 1 of U_{1,2}+U_{1,2} leaves a loop and a parallel
  // pair: bases {2} and {3} after relabeling.
  const Matroid minor = m.contract_delete(mask_of({1}), 0);
  CHECK(minor.size() == 3);
  CHECK(minor.bases() == std::vector<Mask>{mask_of({2}), mask_of({3})});
  CHECK(is_isomorphic(minor, sum2(u(0, 1), u(1, 2))));
  CHECK_THROWS_AS(m.contract_delete(mask_of({1}), mask_of({1, 3})),
                  OverlappingSets);
}

TEST_CASE("minors compose") {
  const Matroid m = realize(MatroidDescriptor::cuspidal(1, 3, 3, 7));
  // Contract {1}, delete {5}, then contract {2 (old 3)}, delete {1 (old 2)}.
  const Matroid two_step = m.contract_delete(mask_of({1}), mask_of({5}))
                               .contract_delete(mask_of({2}), mask_of({1}));
  const Matroid one_step =
      m.contract_delete(mask_of({1, 3}), mask_of({2, 5}));
  CHECK(two_step == one_step);
}

TEST_CASE("direct sum examples") {
  const Matroid a = sum2(u(1, 1), u(0, 1));
  CHECK(a.size() == 2);
  CHECK(a.bases() == std::vector<Mask>{mask_of({1})});

  const Matroid b = sum2(u(1, 2), u(1, 2));
  CHECK(b.bases() == std::vector<Mask>{mask_of({1, 3}), mask_of({2, 3}),
                                       mask_of({1, 4}), mask_of({2, 4})});

  const Matroid c = realize(MatroidDescriptor::minimal(2, 4));
  CHECK(sum2(c, b).bases().size() == c.bases().size() * b.bases().size());
}

TEST_CASE("cyclic flats match the brute-force oracle") {
  const Matroid m = sum2(u(1, 2), u(1, 2));
  const std::vector<std::pair<Mask, int>> expected = {
      {0, 0}, {mask_of({1, 2}), 1}, {mask_of({3, 4}), 1},
      {mask_of({1, 2, 3, 4}), 2}};
  CHECK(m.cyclic_flats() == expected);
  CHECK(m.cyclic_flats() == cyclic_flats_oracle(m));

  CHECK(u(2, 4).cyclic_flats() ==
        std::vector<std::pair<Mask, int>>{{0, 0}, {mask_of({1, 2, 3, 4}), 2}});

  const Matroid t24 = realize(MatroidDescriptor::minimal(2, 4));
  CHECK(t24.cyclic_flats() ==
        std::vector<std::pair<Mask, int>>{
            {0, 0}, {mask_of({3, 4}), 1}, {mask_of({1, 2, 3, 4}), 2}});

  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Matroid r = random_matroid(6, 3, RandomKind::relaxation_chain, seed);
    CHECK(r.cyclic_flats() == cyclic_flats_oracle(r));
  }
}

TEST_CASE("loops, coloops, connectivity") {
  const Matroid m = sum2(sum2(u(0, 1), u(1, 2)), u(1, 1));
  CHECK(m.loops() == mask_of({1}));
  CHECK(m.coloops() == mask_of({4}));
  CHECK(m.components() == 3);
  CHECK_FALSE(m.is_connected());
  CHECK(realize(MatroidDescriptor::minimal(2, 4)).is_connected());
  CHECK(u(1, 1).is_connected());
  CHECK(u(0, 1).is_connected());
  CHECK(u(0, 0).components() == 0);
}

TEST_CASE("structural predicates") {
  CHECK(u(2, 4).is_uniform());
  CHECK(u(2, 4).is_sparse_paving());
  CHECK(u(2, 4).is_simple());
  const Matroid t24 = realize(MatroidDescriptor::minimal(2, 4));
  CHECK_FALSE(t24.is_uniform());
  CHECK(t24.is_sparse_paving());
  CHECK_FALSE(t24.is_simple());  // parallel pair
  const Matroid with_loop = sum2(u(0, 1), u(2, 3));
  CHECK_FALSE(with_loop.is_paving());
  CHECK_FALSE(with_loop.is_simple());
  CHECK(u(0, 2).is_sparse_paving());
  CHECK(u(3, 3).is_sparse_paving());
}
