#pragma once

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "valuta/common.hpp"
#include "valuta/errors.hpp"

namespace valuta {

/// A matroid given by its ground-set size and its set of bases, each basis a
/// characteristic bitmask over {1..n}.  The basis list is the single source
/// of truth; every rank query is answered from it.  Values are immutable
/// after construction.
class Matroid {
 public:
  /// Validating constructor: checks nonemptiness, uniform cardinality and the
  /// basis-exchange axiom, in that order.
  static Matroid from_bases(int n, std::vector<Mask> bases) {
    Matroid m = from_bases_unchecked(n, std::move(bases));
    m.validate_exchange();
    return m;
  }

  /// Constructor for callers that already guarantee the exchange axiom
  /// (duals, minors, direct sums, relaxations, enumeration output).
  static Matroid from_bases_unchecked(int n, std::vector<Mask> bases) {
    if (n < 0 || n > kMaxGroundSet)
      throw SizeCapExceeded("matroid-core",
                            "ground-set size " + std::to_string(n) +
                                " outside supported range 0.." +
                                std::to_string(kMaxGroundSet));
    if (bases.empty()) throw EmptyBases("matroid-core", "no bases given");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const Mask full = full_mask(n);
    for (Mask b : bases)
      if (b & ~full)
        throw InvalidArgument("matroid-core",
                              "basis mask uses elements beyond n=" +
                                  std::to_string(n));
    const int k = popcount(bases.front());
    for (Mask b : bases)
      if (popcount(b) != k)
        throw MixedCardinality("matroid-core",
                               "bases of different cardinalities");
    return Matroid(n, k, std::move(bases));
  }

  int size() const { return n_; }  // |E|
  int rank() const { return k_; }  // rank of the whole matroid
  const std::vector<Mask>& bases() const { return bases_; }
  Mask ground() const { return full_mask(n_); }

  bool is_basis(Mask b) const {
    return std::binary_search(bases_.begin(), bases_.end(), b);
  }

  /// rank(A) = max over bases B of |B n A|.
  int rank_of(Mask a) const {
    if (n_ <= kRankTableMaxN) return rank_table()[a];
    int best = 0;
    for (Mask b : bases_) best = std::max(best, popcount(b & a));
    return best;
  }

  /// Subset ranks memoized once per matroid in a 2^n table.
  const std::vector<std::uint8_t>& rank_table() const {
    if (n_ > kRankTableMaxN)
      throw SizeCapExceeded("matroid-core",
                            "rank table infeasible for n=" +
                                std::to_string(n_));
    std::call_once(cache_->once, [this] { build_rank_table(); });
    return cache_->table;
  }

  Mask loops() const {
    Mask in_some = 0;
    for (Mask b : bases_) in_some |= b;
    return ground() & ~in_some;
  }

  Mask coloops() const {
    Mask in_all = ground();
    for (Mask b : bases_) in_all &= b;
    return in_all;
  }

  bool is_uniform() const {
    return static_cast<long long>(bases_.size()) == binom(n_, k_);
  }

  /// Bases of the dual are the complements of the bases.
  Matroid dual() const {
    std::vector<Mask> co;
    co.reserve(bases_.size());
    const Mask full = ground();
    for (Mask b : bases_) co.push_back(full & ~b);
    return from_bases_unchecked(n_, std::move(co));
  }

  /// Minor M/X\Y on the relabeled ground set 1..(n-|X|-|Y|).  A fixed maximal
  /// independent subset of X is chosen greedily in ascending label order, so
  /// the result is deterministic.
  Matroid contract_delete(Mask contract, Mask erase) const {
    const Mask full = ground();
    if ((contract & erase) != 0)
      throw OverlappingSets("matroid-core",
                            "contraction and deletion sets overlap");
    if ((contract & ~full) || (erase & ~full))
      throw InvalidArgument("matroid-core", "minor sets beyond ground set");
    // Greedy maximal independent subset of X.
    Mask bx = 0;
    for (Mask rest = contract; rest;) {
      Mask e = rest & -rest;
      rest &= rest - 1;
      if (rank_of(bx | e) > popcount(bx)) bx |= e;
    }
    const int rx = popcount(bx);  // = rank_of(contract)
    const Mask kept = full & ~contract & ~erase;
    const int minor_rank = rank_of(full & ~erase) - rx;
    // Relabeling: i-th lowest kept element -> new label i.
    std::vector<int> new_bit(n_, -1);
    {
      int next = 0;
      for (int i = 0; i < n_; ++i)
        if (kept & (Mask{1} << i)) new_bit[i] = next++;
    }
    std::vector<Mask> minor_bases;
    // S is a basis of the minor iff |S| = minor_rank and S u B_X independent.
    for (Mask s = kept;; s = (s - 1) & kept) {
      if (popcount(s) == minor_rank &&
          rank_of(s | bx) == minor_rank + rx) {
        Mask img = 0;
        for (Mask rest = s; rest;) {
          int b = std::countr_zero(rest);
          rest &= rest - 1;
          img |= Mask{1} << new_bit[b];
        }
        minor_bases.push_back(img);
      }
      if (s == 0) break;
    }
    return from_bases_unchecked(popcount(kept), std::move(minor_bases));
  }

  /// Direct sum; the second summand's labels are shifted by n.
  Matroid direct_sum(const Matroid& other) const {
    std::vector<Mask> sum;
    sum.reserve(bases_.size() * other.bases_.size());
    for (Mask b : bases_)
      for (Mask c : other.bases_) sum.push_back(b | (c << n_));
    return from_bases_unchecked(n_ + other.n_, std::move(sum));
  }

  Mask closure(Mask a) const {
    const int r = rank_of(a);
    Mask cl = a;
    for (Mask rest = ground() & ~a; rest;) {
      Mask e = rest & -rest;
      rest &= rest - 1;
      if (rank_of(a | e) == r) cl |= e;
    }
    return cl;
  }

  bool is_flat(Mask a) const { return closure(a) == a; }

  /// Flats F such that M|F has no coloop, i.e. rank(F\e) = rank(F) for all
  /// e in F.  Sorted by (rank, mask).
  std::vector<std::pair<Mask, int>> cyclic_flats() const {
    rank_table();  // build once; the scan below is rank-query heavy
    std::vector<std::pair<Mask, int>> out;
    const Mask full = ground();
    for (Mask a = 0;; ++a) {
      const int r = rank_of(a);
      bool ok = true;
      for (Mask rest = full & ~a; ok && rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        if (rank_of(a | e) == r) ok = false;  // not closed
      }
      for (Mask rest = a; ok && rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        if (rank_of(a & ~e) != r) ok = false;  // e is a coloop of M|A
      }
      if (ok) out.emplace_back(a, r);
      if (a == full) break;
    }
    std::sort(out.begin(), out.end(),
              [](const std::pair<Mask, int>& p, const std::pair<Mask, int>& q) {
                return p.second != q.second ? p.second < q.second
                                            : p.first < q.first;
              });
    return out;
  }

  /// Connected components: elements are joined when a circuit contains both.
  int components() const {
    if (n_ == 0) return 0;
    rank_table();
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const Mask full = ground();
    for (Mask s = 1; s <= full; ++s) {
      const int pc = popcount(s);
      if (rank_of(s) != pc - 1) continue;
      bool circuit = true;
      for (Mask rest = s; circuit && rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        if (rank_of(s & ~e) != pc - 1) circuit = false;
      }
      if (!circuit) continue;
      const int first = std::countr_zero(s);
      for (Mask rest = s & (s - 1); rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        parent[find(b)] = find(first);
      }
    }
    int count = 0;
    for (int i = 0; i < n_; ++i)
      if (find(i) == i) ++count;
    return count;
  }

  bool is_connected() const { return components() == 1; }

  /// Paving: no circuit of size < k, i.e. every (k-1)-set is independent.
  bool is_paving() const {
    if (k_ == 0) return true;
    for (Mask s : k_subsets(n_, k_ - 1))
      if (rank_of(s) != k_ - 1) return false;
    return true;
  }

  /// Sparse paving: every k-set is a basis or a circuit-hyperplane.
  bool is_sparse_paving() const {
    if (!is_paving()) return false;
    for (Mask s : k_subsets(n_, k_)) {
      if (is_basis(s)) continue;
      // Given paving, a dependent k-set is a circuit; it must also be closed.
      for (Mask rest = ground() & ~s; rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        if (rank_of(s | e) == k_ - 1) return false;
      }
    }
    return true;
  }

  /// Simple: no loops, no parallel pairs.
  bool is_simple() const {
    for (int e = 1; e <= n_; ++e)
      if (rank_of(bit_of(e)) != 1) return false;
    for (int e = 1; e <= n_; ++e)
      for (int f = e + 1; f <= n_; ++f)
        if (rank_of(bit_of(e) | bit_of(f)) != 2) return false;
    return true;
  }

  bool operator==(const Matroid& other) const {
    return n_ == other.n_ && bases_ == other.bases_;
  }
  bool operator!=(const Matroid& other) const { return !(*this == other); }

 private:
  static constexpr int kRankTableMaxN = 20;

  struct RankCache {
    std::once_flag once;
    std::vector<std::uint8_t> table;
  };

  Matroid(int n, int k, std::vector<Mask> bases)
      : n_(n), k_(k), bases_(std::move(bases)),
        cache_(std::make_shared<RankCache>()) {}

  void validate_exchange() const {
    for (Mask b1 : bases_) {
      for (Mask b2 : bases_) {
        if (b1 == b2) continue;
        for (Mask rest = b1 & ~b2; rest;) {
          Mask e = rest & -rest;
          rest &= rest - 1;
          bool found = false;
          for (Mask cand = b2 & ~b1; cand;) {
            Mask f = cand & -cand;
            cand &= cand - 1;
            if (is_basis((b1 & ~e) | f)) {
              found = true;
              break;
            }
          }
          if (!found)
            throw ExchangeViolation(
                "matroid-core",
                "exchange axiom fails for B1=" + std::to_string(b1) +
                    " B2=" + std::to_string(b2) +
                    " e=" + std::to_string(std::countr_zero(e) + 1),
                b1, b2, std::countr_zero(e) + 1);
        }
      }
    }
  }

  void build_rank_table() const {
    const std::size_t size = std::size_t{1} << n_;
    // Mark independent sets by downward closure from the bases, then
    // rank(A) = |A| if A independent, else max over e of rank(A \ e).
    std::vector<bool> indep(size, false);
    for (Mask b : bases_) indep[b] = true;
    for (std::size_t s = size; s-- > 0;) {
      if (!indep[s]) continue;
      for (Mask rest = static_cast<Mask>(s); rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        indep[s & ~e] = true;
      }
    }
    std::vector<std::uint8_t> table(size, 0);
    for (std::size_t a = 0; a < size; ++a) {
      if (indep[a]) {
        table[a] = static_cast<std::uint8_t>(popcount(static_cast<Mask>(a)));
        continue;
      }
      std::uint8_t best = 0;
      for (Mask rest = static_cast<Mask>(a); rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        best = std::max(best, table[a & ~e]);
      }
      table[a] = best;
    }
    cache_->table = std::move(table);
  }

  int n_;
  int k_;
  std::vector<Mask> bases_;
  std::shared_ptr<RankCache> cache_;
};

/// Uniform matroid U_{k,n}: every k-set is a basis.
inline Matroid uniform_matroid(int k, int n) {
  if (k < 0 || k > n)
    throw InadmissibleParameters(
        "matroid-core", "uniform matroid needs 0 <= k <= n, got k=" +
                            std::to_string(k) + " n=" + std::to_string(n));
  return Matroid::from_bases_unchecked(n, k_subsets(n, k));
}

}  // namespace valuta
