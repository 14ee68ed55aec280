#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "valuta/isomorphism.hpp"
#include "valuta/matroid.hpp"

namespace valuta {

namespace detail {

/// Exchange-axiom check on a candidate subset of the k-set universe.
/// `selected` indexes into `ksets`; membership is a bit test on `chosen`.
inline bool candidate_is_matroid(const std::vector<Mask>& ksets,
                                 const std::vector<int>& index_of_mask,
                                 std::uint64_t chosen,
                                 const std::vector<int>& selected) {
  for (int i : selected) {
    for (int j : selected) {
      if (i == j) continue;
      const Mask b1 = ksets[i], b2 = ksets[j];
      for (Mask rest = b1 & ~b2; rest;) {
        Mask e = rest & -rest;
        rest &= rest - 1;
        bool found = false;
        for (Mask cand = b2 & ~b1; cand;) {
          Mask f = cand & -cand;
          cand &= cand - 1;
          const int t = index_of_mask[(b1 & ~e) | f];
          if (t >= 0 && (chosen >> t) & 1) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

}  // namespace detail

inline constexpr int kEnumerateMaxN = 6;
inline constexpr int kEnumerateForcedMaxN = 7;
inline constexpr int kEnumerateMaxKsets = 22;

/// All matroids of rank k on {1..n}: every subset of the C(n,k) k-sets that
/// satisfies the exchange axiom.  With up_to_iso, one representative per
/// isomorphism class (deduplicated by canonical form), in first-seen order.
/// The exhaustive scan is 2^C(n,k) candidates, hence the hard caps.
inline std::vector<Matroid> enumerate_matroids(int n, int k, bool up_to_iso,
                                               bool force_cap_override = false) {
  if (n < 0 || k < 0 || k > n)
    throw InvalidArgument("matroid-core", "need 0 <= k <= n");
  const int cap = force_cap_override ? kEnumerateForcedMaxN : kEnumerateMaxN;
  if (n > cap)
    throw SizeCapExceeded("matroid-core",
                          "exhaustive enumeration capped at n=" +
                              std::to_string(cap));
  if (binom(n, k) > kEnumerateMaxKsets)
    throw SizeCapExceeded("matroid-core",
                          "2^C(n,k) candidate scan infeasible for (n,k)=(" +
                              std::to_string(n) + "," + std::to_string(k) +
                              ")");
  const auto ksets = k_subsets(n, k);
  const int m = static_cast<int>(ksets.size());
  std::vector<int> index_of_mask(std::size_t{1} << n, -1);
  for (int i = 0; i < m; ++i) index_of_mask[ksets[i]] = i;

  std::vector<Matroid> labeled;
  std::vector<int> selected;
  for (std::uint64_t chosen = 1; chosen < (std::uint64_t{1} << m); ++chosen) {
    selected.clear();
    for (int i = 0; i < m; ++i)
      if ((chosen >> i) & 1) selected.push_back(i);
    if (!detail::candidate_is_matroid(ksets, index_of_mask, chosen, selected))
      continue;
    std::vector<Mask> bases;
    bases.reserve(selected.size());
    for (int i : selected) bases.push_back(ksets[i]);
    labeled.push_back(Matroid::from_bases_unchecked(n, std::move(bases)));
  }
  if (!up_to_iso) return labeled;
  return dedup_by_canonical_form(labeled);
}

enum class RandomKind { sparse_paving, graphic, relaxation_chain };

inline std::string to_string(RandomKind kind) {
  switch (kind) {
    case RandomKind::sparse_paving: return "sparse_paving";
    case RandomKind::graphic: return "graphic";
    case RandomKind::relaxation_chain: return "relaxation_chain";
  }
  return "?";
}

namespace detail {

inline Matroid random_sparse_paving(int n, int k, std::mt19937_64& rng) {
  if (k < 2 || k > n - 2)
    throw InfeasibleParameters("matroid-core",
                               "sparse_paving needs 2 <= k <= n-2");
  auto ksets = k_subsets(n, k);
  std::shuffle(ksets.begin(), ksets.end(), rng);
  // Pairwise-far k-sets (|S n T| <= k-2) become circuit-hyperplanes of the
  // matroid obtained by removing them from U_{k,n}.
  std::vector<Mask> removed;
  for (Mask s : ksets) {
    if ((rng() & 1) == 0) continue;
    bool far = true;
    for (Mask t : removed)
      if (popcount(s & t) > k - 2) {
        far = false;
        break;
      }
    if (far) removed.push_back(s);
  }
  std::sort(removed.begin(), removed.end());
  std::vector<Mask> bases;
  for (Mask s : k_subsets(n, k))
    if (!std::binary_search(removed.begin(), removed.end(), s))
      bases.push_back(s);
  return Matroid::from_bases(n, std::move(bases));
}

inline Matroid random_graphic(int n, int k, std::mt19937_64& rng) {
  if (k < 0 || k > n)
    throw InfeasibleParameters("matroid-core", "graphic needs 0 <= k <= n");
  // Connected multigraph on k+1 vertices with n edges: a random tree plus
  // n-k extra edges (parallels and self-loops allowed).
  const int v = k + 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < v; ++i) {
    int j = static_cast<int>(rng() % i);
    edges.emplace_back(j, i);
  }
  for (int extra = 0; extra < n - k; ++extra) {
    int x = static_cast<int>(rng() % v);
    int y = static_cast<int>(rng() % v);
    edges.emplace_back(x, y);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  // Bases = k-edge acyclic subsets (spanning trees of the multigraph).
  std::vector<Mask> bases;
  std::vector<int> parent(v);
  for (Mask s : k_subsets(n, k)) {
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool acyclic = true;
    for (Mask rest = s; acyclic && rest;) {
      int idx = std::countr_zero(rest);
      rest &= rest - 1;
      int a = find(edges[idx].first), b = find(edges[idx].second);
      if (a == b)
        acyclic = false;
      else
        parent[a] = b;
    }
    if (acyclic) bases.push_back(s);
  }
  return Matroid::from_bases(n, std::move(bases));
}

}  // namespace detail

// random_matroid itself is defined in families.hpp: the relaxation_chain
// kind needs the stressed-subset machinery living there.

}  // namespace valuta
