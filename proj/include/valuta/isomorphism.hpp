#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "valuta/matroid.hpp"

namespace valuta {

/// Lexicographically minimal serialization of the basis set over relabelings;
/// equal keys iff the matroids are isomorphic.
struct CanonicalForm {
  std::string key;
  bool operator==(const CanonicalForm& o) const { return key == o.key; }
  bool operator!=(const CanonicalForm& o) const { return key != o.key; }
  bool operator<(const CanonicalForm& o) const { return key < o.key; }
};

/// Applies a permutation to the ground set; perm[i] is the 0-based new
/// position of old element i+1.
inline Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  std::vector<Mask> bases;
  bases.reserve(m.bases().size());
  for (Mask b : m.bases()) {
    Mask img = 0;
    for (Mask rest = b; rest;) {
      int old = std::countr_zero(rest);
      rest &= rest - 1;
      img |= Mask{1} << perm[old];
    }
    bases.push_back(img);
  }
  return Matroid::from_bases_unchecked(m.size(), std::move(bases));
}

namespace detail {

/// Relabeling-invariant element signature: basis degree refined one round by
/// the degree profiles of the incident bases.  Elements with different
/// signatures can never be exchanged by an isomorphism.
inline std::vector<std::vector<int>> element_signatures(const Matroid& m) {
  const int n = m.size();
  std::vector<int> deg(n, 0);
  for (Mask b : m.bases())
    for (Mask rest = b; rest;) {
      deg[std::countr_zero(rest)]++;
      rest &= rest - 1;
    }
  std::vector<std::vector<int>> basis_profile(m.bases().size());
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    for (Mask rest = m.bases()[i]; rest;) {
      basis_profile[i].push_back(deg[std::countr_zero(rest)]);
      rest &= rest - 1;
    }
    std::sort(basis_profile[i].begin(), basis_profile[i].end());
  }
  std::vector<std::vector<int>> sig(n);
  for (int e = 0; e < n; ++e) {
    std::vector<std::vector<int>> incident;
    for (std::size_t i = 0; i < m.bases().size(); ++i)
      if (m.bases()[i] & (Mask{1} << e)) incident.push_back(basis_profile[i]);
    std::sort(incident.begin(), incident.end());
    sig[e].push_back(deg[e]);
    for (const auto& p : incident) {
      sig[e].push_back(-1);  // separator
      sig[e].insert(sig[e].end(), p.begin(), p.end());
    }
  }
  return sig;
}

/// Elements grouped by signature; classes ordered by signature value, which is
/// itself invariant under relabeling.
inline std::vector<std::vector<int>> signature_classes(const Matroid& m) {
  auto sig = element_signatures(m);
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int e = 0; e < m.size(); ++e) groups[sig[e]].push_back(e);
  std::vector<std::vector<int>> classes;
  for (auto& [key, elems] : groups) classes.push_back(elems);
  return classes;
}

inline std::string serialize_key(int n, int k, const std::vector<Mask>& bases) {
  std::string s = "n=" + std::to_string(n) + ";k=" + std::to_string(k) + ";";
  for (std::size_t i = 0; i < bases.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(bases[i]);
  }
  return s;
}

inline std::vector<Mask> relabeled_bases(const Matroid& m,
                                         const std::vector<int>& perm) {
  std::vector<Mask> out;
  out.reserve(m.bases().size());
  for (Mask b : m.bases()) {
    Mask img = 0;
    for (Mask rest = b; rest;) {
      img |= Mask{1} << perm[std::countr_zero(rest)];
      rest &= rest - 1;
    }
    out.push_back(img);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline constexpr long long kMaxCanonicalPerms = 2'000'000;

}  // namespace detail

/// Canonical form: minimum serialization over all relabelings that respect
/// the signature classes.  Restricting to class-respecting permutations keeps
/// the key relabeling-invariant while pruning the n! search.
inline CanonicalForm canonical_form(const Matroid& m) {
  const int n = m.size();
  // All permutations fix a uniform matroid's basis list.
  if (m.is_uniform())
    return CanonicalForm{detail::serialize_key(n, m.rank(), m.bases())};
  auto classes = detail::signature_classes(m);
  long long total = 1;
  for (const auto& c : classes) {
    total *= factorial(static_cast<int>(c.size()));
    if (total > detail::kMaxCanonicalPerms)
      throw SizeCapExceeded("matroid-core",
                            "canonical form search too large at n=" +
                                std::to_string(n));
  }
  // Labels are handed out class by class, in class order.
  std::vector<int> offset(classes.size());
  {
    int next = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      offset[c] = next;
      next += static_cast<int>(classes[c].size());
    }
  }
  std::vector<std::vector<int>> orders;
  for (auto& c : classes) orders.push_back(c);  // each starts sorted
  std::vector<int> perm(n);
  std::vector<Mask> best;
  bool have_best = false;
  while (true) {
    for (std::size_t c = 0; c < classes.size(); ++c)
      for (std::size_t i = 0; i < orders[c].size(); ++i)
        perm[orders[c][i]] = offset[c] + static_cast<int>(i);
    auto bases = detail::relabeled_bases(m, perm);
    if (!have_best || bases < best) {
      best = std::move(bases);
      have_best = true;
    }
    // Odometer over per-class permutations.
    std::size_t c = 0;
    while (c < orders.size() &&
           !std::next_permutation(orders[c].begin(), orders[c].end()))
      ++c;
    if (c == orders.size()) break;
  }
  return CanonicalForm{detail::serialize_key(n, m.rank(), best)};
}

/// True iff some permutation of {1..n} maps bases(a) onto bases(b).
/// Backtracking search over signature-class-respecting assignments, pruned at
/// every level by comparing the basis traces of the mapped prefixes.
inline bool is_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank() ||
      a.bases().size() != b.bases().size())
    return false;
  if (a.bases() == b.bases()) return true;
  const int n = a.size();
  auto sig_a = detail::element_signatures(a);
  auto sig_b = detail::element_signatures(b);
  std::map<std::vector<int>, std::pair<std::vector<int>, std::vector<int>>>
      classes;
  for (int e = 0; e < n; ++e) classes[sig_a[e]].first.push_back(e);
  for (int e = 0; e < n; ++e) classes[sig_b[e]].second.push_back(e);
  std::vector<int> order_a;  // a's elements, class by class
  std::vector<std::vector<int>> cand_b;
  for (auto& [key, pair] : classes) {
    if (pair.first.size() != pair.second.size()) return false;
    for (std::size_t i = 0; i < pair.first.size(); ++i) {
      order_a.push_back(pair.first[i]);
      cand_b.push_back(pair.second);
    }
  }
  std::vector<int> map_ab(n, -1);
  std::vector<bool> used_b(n, false);

  auto trace_equal = [&](int depth) {
    Mask used_mask_b = 0;
    for (int e = 0; e < n; ++e)
      if (used_b[e]) used_mask_b |= Mask{1} << e;
    std::vector<Mask> ta, tb;
    ta.reserve(a.bases().size());
    tb.reserve(b.bases().size());
    for (Mask bs : a.bases()) {
      Mask img = 0;
      for (int d = 0; d < depth; ++d) {
        int e = order_a[d];
        if (bs & (Mask{1} << e)) img |= Mask{1} << map_ab[e];
      }
      ta.push_back(img);
    }
    for (Mask bs : b.bases()) tb.push_back(bs & used_mask_b);
    std::sort(ta.begin(), ta.end());
    std::sort(tb.begin(), tb.end());
    return ta == tb;
  };

  std::function<bool(int)> dfs = [&](int depth) -> bool {
    if (depth == n) return true;
    const int e = order_a[depth];
    for (int f : cand_b[depth]) {
      if (used_b[f]) continue;
      map_ab[e] = f;
      used_b[f] = true;
      if (trace_equal(depth + 1) && dfs(depth + 1)) return true;
      used_b[f] = false;
      map_ab[e] = -1;
    }
    return false;
  };
  return dfs(0);
}

/// Deduplicates a list of matroids by isomorphism, keeping first occurrences.
inline std::vector<Matroid> dedup_by_canonical_form(
    const std::vector<Matroid>& list) {
  std::map<std::string, std::size_t> seen;
  std::vector<Matroid> out;
  for (const auto& m : list) {
    auto key = canonical_form(m).key;
    if (seen.emplace(key, out.size()).second) out.push_back(m);
  }
  return out;
}

}  // namespace valuta
