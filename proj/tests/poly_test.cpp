#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "valuta/poly.hpp"

using namespace valuta;

namespace {

BivarPoly poly(const std::vector<std::tuple<int, int, long>>& terms) {
  BivarPoly p;
  for (const auto& [i, j, c] : terms) p += BivarPoly::monomial(i, j, c);
  return p;
}

BivarPoly random_poly(std::mt19937_64& rng) {
  BivarPoly p;
  const int terms = 1 + static_cast<int>(rng() % 6);
  for (int t = 0; t < terms; ++t)
    p += BivarPoly::monomial(rng() % 5, rng() % 5,
                             static_cast<long>(rng() % 9) - 4);
  return p;
}

}  // namespace

TEST_CASE("shift by (+1,+1) matches the hand expansion") {
  // (x+1)^2 + (x+1)(y+1) + (y+1)^2 + (x+1) + (y+1)
  const BivarPoly p =
      poly({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 1}, {0, 1, 1}});
  const BivarPoly expected =
      poly({{2, 0, 1}, {1, 1, 1}, {0, 2, 1}, {1, 0, 4}, {0, 1, 4}, {0, 0, 5}});
  CHECK(p.shifted(1, 1) == expected);
}

TEST_CASE("shift round trip is the identity") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 200; ++it) {
    const BivarPoly p = random_poly(rng);
    CHECK(p.shifted(1, 1).shifted(-1, -1) == p);
    CHECK(p.shifted(-2, 3).shifted(2, -3) == p);
  }
}

TEST_CASE("adding the negation gives zero") {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    const BivarPoly p = random_poly(rng);
    CHECK((p + p.scaled(-1)).is_zero());
  }
}

TEST_CASE("multiplication distributes over addition") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    const BivarPoly a = random_poly(rng), b = random_poly(rng),
                    c = random_poly(rng);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("evaluation is exact at integer points") {
  const BivarPoly u24 = poly({{2, 0, 1}, {0, 2, 1}, {1, 0, 2}, {0, 1, 2}});
  CHECK(u24.evaluate(1, 1) == 6);  // number of bases of U_{2,4}
  CHECK(u24.evaluate(2, 2) == 16);
  CHECK(u24.evaluate(-1, 3) == mpz_class(1 + 9 - 2 + 6));
}

TEST_CASE("coefficient access and degree bounds") {
  const BivarPoly p = poly({{3, 1, 5}, {0, 2, -2}});
  CHECK(p.coeff(3, 1) == 5);
  CHECK(p.coeff(1, 1) == 0);
  CHECK(p.max_x_degree() == 3);
  CHECK(p.max_y_degree() == 2);
}

TEST_CASE("(x-1)^c and (y-1)^d expansions") {
  CHECK(x_minus_one_pow(0) == BivarPoly::one());
  CHECK(x_minus_one_pow(2) == poly({{2, 0, 1}, {1, 0, -2}, {0, 0, 1}}));
  CHECK(y_minus_one_pow(3) ==
        poly({{0, 3, 1}, {0, 2, -3}, {0, 1, 3}, {0, 0, -1}}));
}
