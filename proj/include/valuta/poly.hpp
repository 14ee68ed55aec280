#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "valuta/common.hpp"

namespace valuta {

/// Monomial order used everywhere a polynomial is serialized or vectorized:
/// graded-lexicographic descending on (i+j, i).
struct MonomialOrder {
  bool operator()(const std::pair<int, int>& a,
                  const std::pair<int, int>& b) const {
    const int da = a.first + a.second, db = b.first + b.second;
    if (da != db) return da > db;
    return a.first > b.first;
  }
};

/// Sparse exact-integer polynomial in x and y.  No zero coefficients are
/// stored; all arithmetic is exact (GMP integers).
class BivarPoly {
 public:
  using Terms = std::map<std::pair<int, int>, mpz_class, MonomialOrder>;

  BivarPoly() = default;

  static BivarPoly zero() { return BivarPoly(); }
  static BivarPoly constant(mpz_class c) { return monomial(0, 0, std::move(c)); }
  static BivarPoly one() { return constant(1); }
  static BivarPoly x() { return monomial(1, 0, 1); }
  static BivarPoly y() { return monomial(0, 1, 1); }

  static BivarPoly monomial(int i, int j, mpz_class c) {
    BivarPoly p;
    if (c != 0) p.terms_[{i, j}] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpz_class coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? mpz_class(0) : it->second;
  }

  int max_x_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.first);
    return d;
  }
  int max_y_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.second);
    return d;
  }

  BivarPoly& operator+=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, c);
    return *this;
  }
  BivarPoly& operator-=(const BivarPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m.first, m.second, -c);
    return *this;
  }
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }

  BivarPoly scaled(const mpz_class& s) const {
    BivarPoly out;
    if (s == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_[m] = c * s;
    return out;
  }

  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
    BivarPoly out;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_)
        out.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    return out;
  }

  mpz_class evaluate(const mpz_class& x0, const mpz_class& y0) const {
    mpz_class total = 0;
    for (const auto& [m, c] : terms_) {
      mpz_class t = c;
      for (int i = 0; i < m.first; ++i) t *= x0;
      for (int j = 0; j < m.second; ++j) t *= y0;
      total += t;
    }
    return total;
  }

  /// Substitutes x -> x+a, y -> y+b via binomial expansion.
  BivarPoly shifted(long a, long b) const {
    BivarPoly out;
    const mpz_class za(a), zb(b);
    for (const auto& [m, c] : terms_) {
      std::vector<mpz_class> pa(m.first + 1), pb(m.second + 1);
      pa[0] = 1;
      for (int t = 1; t <= m.first; ++t) pa[t] = pa[t - 1] * za;
      pb[0] = 1;
      for (int t = 1; t <= m.second; ++t) pb[t] = pb[t - 1] * zb;
      for (int p = 0; p <= m.first; ++p)
        for (int q = 0; q <= m.second; ++q)
          out.add_term(p, q,
                       c * binom(m.first, p) * pa[m.first - p] *
                           binom(m.second, q) * pb[m.second - q]);
    }
    return out;
  }

  bool operator==(const BivarPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

 private:
  void add_term(int i, int j, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(i, j), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// (x-1)^c and (y-1)^d, the building blocks of corank-nullity sums.
inline BivarPoly x_minus_one_pow(int c) {
  BivarPoly p;
  for (int t = 0; t <= c; ++t)
    p += BivarPoly::monomial(t, 0, mpz_class(binom(c, t)) *
                                       ((c - t) % 2 == 0 ? 1 : -1));
  return p;
}

inline BivarPoly y_minus_one_pow(int d) {
  BivarPoly p;
  for (int t = 0; t <= d; ++t)
    p += BivarPoly::monomial(0, t, mpz_class(binom(d, t)) *
                                       ((d - t) % 2 == 0 ? 1 : -1));
  return p;
}

}  // namespace valuta
