#include <catch2/catch_amalgamated.hpp>

#include "valuta/decomposition.hpp"
#include "valuta/enumerate.hpp"
#include "valuta/io.hpp"

using namespace valuta;
using D = MatroidDescriptor;

namespace {

std::vector<Matroid> m42_all() {
  return enumerate_matroids(4, 2, true);
}

std::map<std::string, long> term_map(const Decomposition& d) {
  std::map<std::string, long> out;
  for (const auto& [desc, c] : d.terms) out[to_string(desc)] = c;
  return out;
}

}  // namespace

TEST_CASE("T-rank and G-rank of M_{4,2}") {
  const auto classes = m42_all();
  REQUIRE(classes.size() == 7);
  CHECK(invariant_rank(classes, WhichInvariant::tutte) == 5);
  CHECK(invariant_rank(classes, WhichInvariant::ginv) == 6);
  CHECK(invariant_rank({classes.front()}, WhichInvariant::tutte) == 1);
  CHECK(invariant_rank({}, WhichInvariant::tutte) == 0);
}

TEST_CASE("invariant_rank rejects mixed strata") {
  CHECK_THROWS_AS(
      invariant_rank({uniform_matroid(2, 4), uniform_matroid(2, 5)},
                     WhichInvariant::tutte),
      MixedStratum);
}

TEST_CASE("solve against the ordered cuspidal Tutte vectors") {
  // Generators in the order U_{2,4}, L_{1,2,1,4}, L_{1,2,2,4}, L_{2,2,2,4},
  // L_{2,2,3,4}; target T(U_{1,2}+U_{1,2}) has coefficients (-1,0,2,0,0).
  const int n = 4, k = 2;
  std::vector<std::vector<mpq_class>> gens;
  for (const auto& d :
       {D::uniform(2, 4), D::cuspidal(1, 2, 1, 4), D::cuspidal(1, 2, 2, 4),
        D::cuspidal(2, 2, 2, 4), D::cuspidal(2, 2, 3, 4)})
    gens.push_back(tutte_vector(tutte(realize(d)), n, k));
  const Matroid target =
      uniform_matroid(1, 2).direct_sum(uniform_matroid(1, 2));
  const auto sol = solve_in_span(gens, tutte_vector(tutte(target), n, k));
  REQUIRE(sol.has_value());
  CHECK(sol->coefficients == std::vector<mpq_class>{-1, 0, 2, 0, 0});
  CHECK(sol->is_integral);
  CHECK(sol->is_unique);

  // The constant polynomial violates the s=0 Brylawski relation satisfied by
  // every generator, so it lies outside the span.
  CHECK_FALSE(
      solve_in_span(gens, tutte_vector(BivarPoly::one(), n, k)).has_value());
}

TEST_CASE("decompose examples in the cuspidal basis") {
  const Decomposition d1 = decompose(
      uniform_matroid(1, 2).direct_sum(uniform_matroid(1, 2)),
      BasisKind::cuspidal);
  CHECK(term_map(d1) ==
        std::map<std::string, long>{{"cuspidal:1,2,2,4", 2},
                                    {"uniform:2,4", -1}});

  const Decomposition d2 = decompose(uniform_matroid(2, 4),
                                     BasisKind::cuspidal);
  CHECK(term_map(d2) == std::map<std::string, long>{{"uniform:2,4", 1}});

  const Decomposition d3 = decompose(uniform_matroid(0, 1)
                                         .direct_sum(uniform_matroid(1, 2))
                                         .direct_sum(uniform_matroid(1, 1)),
                                     BasisKind::cuspidal);
  CHECK(term_map(d3) ==
        std::map<std::string, long>{{"cuspidal:2,2,3,4", 1},
                                    {"cuspidal:1,2,1,4", 1},
                                    {"cuspidal:1,2,2,4", -2},
                                    {"uniform:2,4", 1}});
}

TEST_CASE("decompositions re-expand exactly") {
  for (const auto& m : m42_all())
    for (BasisKind kind : {BasisKind::cuspidal, BasisKind::class_t}) {
      const Decomposition d = decompose(m, kind);
      CHECK(expand(d) == tutte(m));
    }
  for (std::uint64_t seed = 21; seed <= 26; ++seed) {
    const Matroid m = random_matroid(8, 3, RandomKind::sparse_paving, seed);
    for (BasisKind kind : {BasisKind::cuspidal, BasisKind::class_t})
      CHECK(expand(decompose(m, kind)) == tutte(m));
  }
}

TEST_CASE("the class_U basis genuinely fails integrality on T_{2,4}") {
  // Relation (3) of the rank-2 stratum on 4 elements forces the coefficient
  // of T(U_{2,4}) to be 1/2 when expressing T(T_{2,4}) over the class-U
  // family, so the decomposition contract reports a theorem violation.
  CHECK_THROWS_AS(decompose(realize(D::minimal(2, 4)), BasisKind::class_u),
                  TheoremViolation);
  // Matroids inside the family itself decompose trivially.
  CHECK(term_map(decompose(uniform_matroid(2, 4), BasisKind::class_u)) ==
        std::map<std::string, long>{{"uniform:2,4", 1}});
}

TEST_CASE("non-split matroids still decompose integrally (Theorem B)") {
  // U_{0,1} + U_{1,2} + U_{1,1} + U_{0,1} at (5,2) is not elementary split.
  const Matroid m = uniform_matroid(0, 1)
                        .direct_sum(uniform_matroid(1, 2))
                        .direct_sum(uniform_matroid(1, 1))
                        .direct_sum(uniform_matroid(0, 1));
  REQUIRE_FALSE(classify(m).elementary_split);
  const Decomposition d = decompose(m, BasisKind::cuspidal);
  CHECK(expand(d) == tutte(m));
  for (const auto& [desc, c] : d.terms) CHECK(c != 0);
}

TEST_CASE("rank tables") {
  const RankTable t1 = rank_table(RankFamily::all, {{4, 2}},
                                  WhichInvariant::tutte);
  REQUIRE(t1.rows.size() == 1);
  CHECK(t1.rows.front().t_rank == 5);

  const RankTable t2 = rank_table(RankFamily::all, {{5, 2}},
                                  WhichInvariant::ginv);
  CHECK(t2.rows.front().g_rank == 10);  // C(5,2)

  const RankTable t3 = rank_table(RankFamily::class_n, {{6, 2}},
                                  WhichInvariant::tutte);
  CHECK(t3.rows.front().t_rank == 5);  // min{k+3, n-k+3}

  // (4,2) is the degenerate class-N stratum: relation (1) ties the
  // generating set, so its T-rank is 4, one below min{k+3, n-k+3}.
  const RankTable t4 = rank_table(RankFamily::class_n, {{4, 2}},
                                  WhichInvariant::tutte);
  CHECK(t4.rows.front().t_rank == 4);

  const RankTable t5 = rank_table(RankFamily::simple, {{5, 3}}, std::nullopt);
  CHECK(t5.rows.front().t_rank == (3 - 2) * (5 - 3) + 1);
  CHECK(t5.rows.front().t_rank <= t5.rows.front().g_rank);
}

TEST_CASE("t_rank never exceeds g_rank") {
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto rows =
          rank_table(RankFamily::all, {{n, k}}, std::nullopt).rows;
      CHECK(*rows.front().t_rank <= *rows.front().g_rank);
    }
}

TEST_CASE("family rank identities at a spot-check stratum") {
  for (RankFamily fam :
       {RankFamily::cuspidal, RankFamily::class_u, RankFamily::class_t}) {
    const auto rows = rank_table(fam, {{6, 3}}, std::nullopt).rows;
    CHECK(*rows.front().t_rank == 10);
    CHECK(*rows.front().g_rank == 10);
  }
}
