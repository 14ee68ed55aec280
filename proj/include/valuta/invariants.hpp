#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "valuta/matroid.hpp"
#include "valuta/poly.hpp"

namespace valuta {

inline constexpr int kTutteMaxN = 14;
inline constexpr int kGInvariantMaxN = 12;

/// T_M(x,y) = sum over A of (x-1)^(k-rk A) (y-1)^(|A|-rk A), computed by a
/// single 2^n pass that buckets subsets by (corank, nullity).
inline BivarPoly tutte(const Matroid& m) {
  const int n = m.size(), k = m.rank();
  if (n > kTutteMaxN)
    throw SizeCapExceeded("invariants",
                          "tutte capped at n=" + std::to_string(kTutteMaxN));
  const auto& rank = m.rank_table();
  std::vector<std::vector<long>> count(
      k + 1, std::vector<long>(n - k + 1, 0));
  const Mask full = m.ground();
  for (Mask a = 0;; ++a) {
    const int r = rank[a];
    count[k - r][popcount(a) - r]++;
    if (a == full) break;
  }
  BivarPoly t;
  for (int c = 0; c <= k; ++c)
    for (int d = 0; d <= n - k; ++d)
      if (count[c][d] != 0)
        t += (x_minus_one_pow(c) * y_minus_one_pow(d))
                 .scaled(mpz_class(count[c][d]));
  return t;
}

/// Independent deletion-contraction oracle; must agree with tutte().
inline BivarPoly tutte_dc(const Matroid& m) {
  if (m.size() > kTutteMaxN)
    throw SizeCapExceeded("invariants", "tutte_dc capped at n=" +
                                            std::to_string(kTutteMaxN));
  if (m.size() == 0) return BivarPoly::one();
  const Mask e = 1;  // first element
  const bool in_some = (m.loops() & e) == 0;
  const bool in_all = (m.coloops() & e) != 0;
  if (!in_some) return BivarPoly::y() * tutte_dc(m.contract_delete(0, e));
  if (in_all) return BivarPoly::x() * tutte_dc(m.contract_delete(e, 0));
  return tutte_dc(m.contract_delete(0, e)) + tutte_dc(m.contract_delete(e, 0));
}

/// Coefficients of Derksen's G-invariant: coeffs[s] counts the permutations
/// whose prefix rank-increment sequence equals s.  Keys encode s_1..s_n
/// MSB-first (bit n-i holds s_i), so descending key order = descending
/// bitstring order.
struct GInvariantVector {
  int n = 0;
  int k = 0;
  std::map<Mask, long long, std::greater<Mask>> coeffs;

  GInvariantVector& operator+=(const GInvariantVector& o) {
    for (const auto& [s, c] : o.coeffs) add(s, c);
    return *this;
  }
  GInvariantVector& operator-=(const GInvariantVector& o) {
    for (const auto& [s, c] : o.coeffs) add(s, -c);
    return *this;
  }
  friend GInvariantVector operator+(GInvariantVector a,
                                    const GInvariantVector& b) {
    return a += b;
  }
  friend GInvariantVector operator-(GInvariantVector a,
                                    const GInvariantVector& b) {
    return a -= b;
  }
  GInvariantVector scaled(long long f) const {
    GInvariantVector out{n, k, {}};
    if (f == 0) return out;
    for (const auto& [s, c] : coeffs) out.coeffs[s] = c * f;
    return out;
  }
  bool operator==(const GInvariantVector& o) const {
    return n == o.n && k == o.k && coeffs == o.coeffs;
  }
  bool operator!=(const GInvariantVector& o) const { return !(*this == o); }

  void add(Mask s, long long c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }

  static std::string sequence_string(Mask s, int n) {
    std::string out(n, '0');
    for (int i = 0; i < n; ++i)
      if ((s >> (n - 1 - i)) & 1) out[i] = '1';
    return out;
  }
};

/// Chain-counting DP: for each candidate 0/1 sequence s of weight k, count
/// the maximal flags whose rank increments equal s.  h_{i+1}(S u e) adds
/// h_i(S) whenever rk(S u e) - rk(S) = s_{i+1}; the answer is h_n(E).
/// Avoids the n! flag enumeration at a cost of C(n,k) * n * 2^(n-1).
inline GInvariantVector g_invariant(const Matroid& m) {
  const int n = m.size(), k = m.rank();
  if (n > kGInvariantMaxN)
    throw SizeCapExceeded("invariants", "g_invariant capped at n=" +
                                            std::to_string(kGInvariantMaxN));
  const auto& rank = m.rank_table();
  const auto layers = subsets_by_popcount(n);
  GInvariantVector g{n, k, {}};
  std::vector<long long> h(std::size_t{1} << n, 0);
  const Mask full = m.ground();
  for (Mask seq : k_subsets(n, k)) {
    h[0] = 1;
    for (int i = 0; i < n; ++i) {
      const int want = (seq >> (n - 1 - i)) & 1;
      for (Mask s : layers[i]) {
        const long long hs = h[s];
        if (hs == 0) continue;
        const int rs = rank[s];
        for (Mask rest = full & ~s; rest;) {
          Mask e = rest & -rest;
          rest &= rest - 1;
          if (rank[s | e] - rs == want) h[s | e] += hs;
        }
      }
    }
    if (h[full] != 0) g.coeffs[seq] = h[full];
    std::fill(h.begin(), h.end(), 0);
  }
  long long total = 0;
  for (const auto& [s, c] : g.coeffs) total += c;
  if (total != factorial(n))
    throw InternalInconsistency("invariants",
                                "G-invariant coefficients do not sum to n!");
  return g;
}

/// The n Brylawski relations: for 0 <= s < n,
///   sum_{i<=s} sum_{j<=s-i} (-1)^j C(s-i, j) a_ij = 0.
inline bool brylawski_check(const BivarPoly& p, int n) {
  for (int s = 0; s < n; ++s) {
    mpz_class acc = 0;
    for (int i = 0; i <= s; ++i)
      for (int j = 0; j <= s - i; ++j) {
        const mpz_class a = p.coeff(i, j);
        if (a == 0) continue;
        acc += a * binom(s - i, j) * (j % 2 == 0 ? 1 : -1);
      }
    if (acc != 0) return false;
  }
  return true;
}

/// Merino-Welsh inequality T(2,0) T(0,2) >= T(1,1)^2, exact.
inline bool merino_welsh_check(const Matroid& m) {
  if (m.loops() != 0 || m.coloops() != 0)
    throw HasLoopOrColoop("invariants",
                          "Merino-Welsh check needs a loopless and "
                          "coloopless matroid");
  const BivarPoly t = tutte(m);
  const mpz_class a = t.evaluate(2, 0), b = t.evaluate(0, 2),
                  c = t.evaluate(1, 1);
  return a * b >= c * c;
}

}  // namespace valuta
