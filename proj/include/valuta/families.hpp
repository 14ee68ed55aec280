#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "valuta/enumerate.hpp"
#include "valuta/invariants.hpp"
#include "valuta/isomorphism.hpp"
#include "valuta/matroid.hpp"
#include "valuta/poly.hpp"

namespace valuta {

inline constexpr int kStressedMaxN = 12;
inline constexpr int kClassifyMaxN = 12;

// ---------------------------------------------------------------------------
// Symbolic constructors
// ---------------------------------------------------------------------------

/// Symbolic constructor term naming canonical family members:
/// uniform(k,n), cuspidal(r,k,h,n), minimal(k,n) and direct sums thereof.
struct MatroidDescriptor {
  enum class Kind { uniform, cuspidal, minimal, sum };

  Kind kind = Kind::uniform;
  int r = 0, k = 0, h = 0, n = 0;
  std::vector<MatroidDescriptor> parts;  // sum only

  static MatroidDescriptor uniform(int k, int n) {
    MatroidDescriptor d;
    d.kind = Kind::uniform;
    d.k = k;
    d.n = n;
    return d;
  }
  static MatroidDescriptor cuspidal(int r, int k, int h, int n) {
    MatroidDescriptor d;
    d.kind = Kind::cuspidal;
    d.r = r;
    d.k = k;
    d.h = h;
    d.n = n;
    return d;
  }
  static MatroidDescriptor minimal(int k, int n) {
    MatroidDescriptor d;
    d.kind = Kind::minimal;
    d.k = k;
    d.n = n;
    return d;
  }
  static MatroidDescriptor sum(std::vector<MatroidDescriptor> parts) {
    MatroidDescriptor d;
    d.kind = Kind::sum;
    d.parts = std::move(parts);
    return d;
  }

  std::tuple<int, int, int, int, int> sort_key() const {
    return {static_cast<int>(kind), k, n, r, h};
  }
  bool operator==(const MatroidDescriptor& o) const {
    if (kind != o.kind || r != o.r || k != o.k || h != o.h || n != o.n)
      return false;
    return parts == o.parts;
  }

  /// Flattened, merged, sorted form: nested sums are inlined, loop blocks and
  /// coloop blocks are merged, trivially-uniform terms are renamed uniform.
  MatroidDescriptor canonicalized() const {
    if (kind == Kind::minimal) {
      // T_{1,n} = U_{1,n}; T_{k,k+1} = U_{k,k+1}.
      if (k == 1 || n == k + 1) return uniform(k, n);
      return *this;
    }
    if (kind == Kind::cuspidal) {
      if (r == 0 || h - r == n - k) return uniform(k, n);
      return *this;
    }
    if (kind != Kind::sum) return *this;
    std::vector<MatroidDescriptor> flat;
    for (const auto& p : parts) {
      auto c = p.canonicalized();
      if (c.kind == Kind::sum)
        flat.insert(flat.end(), c.parts.begin(), c.parts.end());
      else
        flat.push_back(c);
    }
    int loop_count = 0, coloop_count = 0;
    std::vector<MatroidDescriptor> rest;
    for (const auto& p : flat) {
      if (p.kind == Kind::uniform && p.n == 0) continue;  // empty summand
      if (p.kind == Kind::uniform && p.k == 0)
        loop_count += p.n;
      else if (p.kind == Kind::uniform && p.k == p.n)
        coloop_count += p.n;
      else
        rest.push_back(p);
    }
    std::sort(rest.begin(), rest.end(),
              [](const MatroidDescriptor& a, const MatroidDescriptor& b) {
                return a.sort_key() < b.sort_key();
              });
    std::vector<MatroidDescriptor> out;
    if (loop_count > 0) out.push_back(uniform(0, loop_count));
    out.insert(out.end(), rest.begin(), rest.end());
    if (coloop_count > 0) out.push_back(uniform(coloop_count, coloop_count));
    if (out.empty()) return uniform(0, 0);
    if (out.size() == 1) return out.front();
    return sum(std::move(out));
  }

  int total_size() const {
    if (kind != Kind::sum) return n;
    int total = 0;
    for (const auto& p : parts) total += p.total_size();
    return total;
  }
  int total_rank() const {
    switch (kind) {
      case Kind::uniform:
      case Kind::cuspidal:
      case Kind::minimal:
        return k;
      case Kind::sum: {
        int total = 0;
        for (const auto& p : parts) total += p.total_rank();
        return total;
      }
    }
    return 0;
  }
};

/// Concrete matroid on {1..n} named by a descriptor.
inline Matroid realize(const MatroidDescriptor& d) {
  using Kind = MatroidDescriptor::Kind;
  switch (d.kind) {
    case Kind::uniform:
      return uniform_matroid(d.k, d.n);
    case Kind::cuspidal: {
      // Bases: k-sets meeting {1..h} in at least r elements.  Admissible
      // ranges follow the family grid: 0 <= r <= h, 0 <= k-r <= n-h.
      if (d.r < 0 || d.r > d.h || d.h > d.n || d.k < d.r ||
          d.k - d.r > d.n - d.h)
        throw InadmissibleParameters(
            "families", "cuspidal(r,k,h,n) needs 0 <= r <= h and "
                        "0 <= k-r <= n-h");
      const Mask head = full_mask(d.h);
      std::vector<Mask> bases;
      for (Mask b : k_subsets(d.n, d.k))
        if (popcount(b & head) >= d.r) bases.push_back(b);
      return Matroid::from_bases_unchecked(d.n, std::move(bases));
    }
    case Kind::minimal:
      // T_{k,n} = Lambda_{k-1,k,k,n}.
      if (d.k < 1 || d.k > d.n - 1)
        throw InadmissibleParameters("families",
                                     "minimal(k,n) needs 1 <= k <= n-1");
      return realize(MatroidDescriptor::cuspidal(d.k - 1, d.k, d.k, d.n));
    case Kind::sum: {
      Matroid acc = uniform_matroid(0, 0);
      for (const auto& p : d.parts) acc = acc.direct_sum(realize(p));
      return acc;
    }
  }
  throw InvalidArgument("families", "unknown descriptor kind");
}

// ---------------------------------------------------------------------------
// Stressed subsets, cusps, relaxations
// ---------------------------------------------------------------------------

struct StressedEntry {
  Mask subset = 0;
  int rank = 0;
  int size = 0;
  std::vector<Mask> cusp;  // k-sets S with |S n A| >= rank + 1
};

struct StressedReport {
  std::vector<StressedEntry> entries;            // all stressed subsets
  std::map<std::pair<int, int>, int> lambda;     // (r,h) -> #nonempty cusps
};

namespace detail {

/// Both M|A and M/A uniform?
inline bool is_stressed(const Matroid& m, Mask a,
                        const std::vector<std::uint8_t>& rank) {
  const int r = rank[a];
  // M|A uniform: every r-subset of A has rank r.
  for (Mask s = a;; s = (s - 1) & a) {
    if (popcount(s) == r && rank[s] != r) return false;
    if (s == 0) break;
  }
  // M/A uniform: every (k - r)-subset of the complement spans with A.
  const int need = m.rank() - r;
  const Mask comp = m.ground() & ~a;
  for (Mask s = comp;; s = (s - 1) & comp) {
    if (popcount(s) == need && rank[s | a] != m.rank()) return false;
    if (s == 0) break;
  }
  return true;
}

inline std::vector<Mask> cusp_of(const Matroid& m, Mask a, int r) {
  std::vector<Mask> cusp;
  // Feasibility first: some k-set must fit r+1 elements inside A and the
  // rest outside.
  const int h = popcount(a), k = m.rank(), n = m.size();
  const int lo = std::max(r + 1, k - (n - h));
  if (lo > std::min(k, h)) return cusp;
  for (Mask s : k_subsets(n, k))
    if (popcount(s & a) >= r + 1) cusp.push_back(s);
  return cusp;
}

}  // namespace detail

/// Every stressed subset with its cusp, plus the lambda-profile counting the
/// nonempty-cusp ones by (rank, size).  Entries sorted by (size, mask).
inline StressedReport stressed_report(const Matroid& m) {
  if (m.size() > kStressedMaxN)
    throw SizeCapExceeded("families", "stressed subset scan capped at n=" +
                                          std::to_string(kStressedMaxN));
  const auto& rank = m.rank_table();
  StressedReport report;
  const Mask full = m.ground();
  for (Mask a = 0;; ++a) {
    if (detail::is_stressed(m, a, rank)) {
      StressedEntry entry;
      entry.subset = a;
      entry.rank = rank[a];
      entry.size = popcount(a);
      entry.cusp = detail::cusp_of(m, a, entry.rank);
      if (!entry.cusp.empty())
        report.lambda[{entry.rank, entry.size}]++;
      report.entries.push_back(std::move(entry));
    }
    if (a == full) break;
  }
  std::sort(report.entries.begin(), report.entries.end(),
            [](const StressedEntry& x, const StressedEntry& y) {
              return x.size != y.size ? x.size < y.size : x.subset < y.subset;
            });
  return report;
}

/// Relaxation: bases(result) = bases(M) u cusp_M(A); A must be stressed with
/// a nonempty cusp.
inline Matroid relax(const Matroid& m, Mask a) {
  if (m.size() > kStressedMaxN)
    throw SizeCapExceeded("families", "relax capped at n=" +
                                          std::to_string(kStressedMaxN));
  const auto& rank = m.rank_table();
  if (!detail::is_stressed(m, a, rank))
    throw NotStressed("families",
                      "subset " + std::to_string(a) + " is not stressed");
  auto cusp = detail::cusp_of(m, a, rank[a]);
  if (cusp.empty())
    throw EmptyCusp("families",
                    "subset " + std::to_string(a) + " has an empty cusp");
  std::vector<Mask> bases = m.bases();
  bases.insert(bases.end(), cusp.begin(), cusp.end());
  return Matroid::from_bases_unchecked(m.size(), std::move(bases));
}

/// Relaxes stressed subsets with nonempty cusp, in ascending (size, mask)
/// order, re-scanning until none remain.
inline Matroid relax_all(const Matroid& m) {
  Matroid current = m;
  while (true) {
    auto report = stressed_report(current);
    std::vector<Mask> todo;
    for (const auto& e : report.entries)
      if (!e.cusp.empty()) todo.push_back(e.subset);
    if (todo.empty()) return current;
    for (Mask a : todo) current = relax(current, a);
  }
}

// ---------------------------------------------------------------------------
// Random matroids (the relaxation_chain kind needs relax())
// ---------------------------------------------------------------------------

inline Matroid random_relaxation_chain(int n, int k, std::mt19937_64& rng) {
  if (k < 0 || k > n)
    throw InfeasibleParameters("matroid-core",
                               "relaxation_chain needs 0 <= k <= n");
  // Random partition matroid: direct sum of uniforms totalling (n, k).
  std::vector<MatroidDescriptor> blocks;
  int n_left = n, k_left = k;
  while (n_left > 0) {
    const int s = 1 + static_cast<int>(rng() % n_left);
    const int r_min = std::max(0, k_left - (n_left - s));
    const int r_max = std::min(s, k_left);
    const int r = r_min + static_cast<int>(rng() % (r_max - r_min + 1));
    blocks.push_back(MatroidDescriptor::uniform(r, s));
    n_left -= s;
    k_left -= r;
  }
  Matroid current =
      n == 0 ? uniform_matroid(0, 0)
             : realize(MatroidDescriptor::sum(std::move(blocks)));
  const int steps = static_cast<int>(rng() % (n + 1));
  for (int step = 0; step < steps; ++step) {
    auto report = stressed_report(current);
    std::vector<Mask> candidates;
    for (const auto& e : report.entries)
      if (!e.cusp.empty()) candidates.push_back(e.subset);
    if (candidates.empty()) break;
    current = relax(current, candidates[rng() % candidates.size()]);
  }
  return current;
}

/// Deterministic pseudo-random matroid for a fixed (n, k, kind, seed).
inline Matroid random_matroid(int n, int k, RandomKind kind,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  switch (kind) {
    case RandomKind::sparse_paving:
      return detail::random_sparse_paving(n, k, rng);
    case RandomKind::graphic:
      return detail::random_graphic(n, k, rng);
    case RandomKind::relaxation_chain:
      return random_relaxation_chain(n, k, rng);
  }
  throw InvalidArgument("matroid-core", "unknown random kind");
}

// ---------------------------------------------------------------------------
// Classification
// ---------------------------------------------------------------------------

/// The (contract, delete) embedding of a found minor.
struct MinorWitness {
  Mask contract = 0;
  Mask erase = 0;
};

/// Searches all (X, Y) with |X|+|Y| = n_M - n_N and rk(X) = k_M - k_N for a
/// minor isomorphic to N.  Restricting X to independent sets of that rank is
/// complete: every minor has such a normal form.
inline std::optional<MinorWitness> find_minor_iso(const Matroid& m,
                                                  const Matroid& target) {
  const int nd = m.size() - target.size();
  const int kd = m.rank() - target.rank();
  if (nd < 0 || kd < 0 || kd > nd) return std::nullopt;
  if (m.size() > kClassifyMaxN)
    throw SizeCapExceeded("families", "minor search capped at n=" +
                                          std::to_string(kClassifyMaxN));
  for (Mask x : k_subsets(m.size(), kd)) {
    if (m.rank_of(x) != kd) continue;  // X independent of the right rank
    const Mask rest = m.ground() & ~x;
    for (Mask y = rest;; y = (y - 1) & rest) {
      if (popcount(y) == nd - kd) {
        Matroid minor = m.contract_delete(x, y);
        if (is_isomorphic(minor, target)) return MinorWitness{x, y};
      }
      if (y == 0) break;
    }
  }
  return std::nullopt;
}

inline bool has_minor_iso(const Matroid& m, const Matroid& target) {
  return find_minor_iso(m, target).has_value();
}

namespace detail {

inline const Matroid& minor_u01_u12_u11() {
  static const Matroid m = realize(MatroidDescriptor::sum(
      {MatroidDescriptor::uniform(0, 1), MatroidDescriptor::uniform(1, 2),
       MatroidDescriptor::uniform(1, 1)}));
  return m;
}
inline const Matroid& minor_u11_u13() {
  static const Matroid m = realize(MatroidDescriptor::sum(
      {MatroidDescriptor::uniform(1, 1), MatroidDescriptor::uniform(1, 3)}));
  return m;
}
inline const Matroid& minor_u01_u23() {
  static const Matroid m = realize(MatroidDescriptor::sum(
      {MatroidDescriptor::uniform(0, 1), MatroidDescriptor::uniform(2, 3)}));
  return m;
}
inline const Matroid& minor_t24() {
  static const Matroid m = realize(MatroidDescriptor::minimal(2, 4));
  return m;
}
inline const Matroid& minor_u12_u12() {
  static const Matroid m = realize(MatroidDescriptor::sum(
      {MatroidDescriptor::uniform(1, 2), MatroidDescriptor::uniform(1, 2)}));
  return m;
}
inline const Matroid& minor_u24() {
  static const Matroid m = uniform_matroid(2, 4);
  return m;
}

}  // namespace detail

/// Theorem 2.1 route (iv): proper cyclic flats pairwise incomparable.
inline bool proper_cyclic_flats_form_clutter(const Matroid& m) {
  auto flats = m.cyclic_flats();
  std::vector<Mask> proper;
  for (const auto& [f, r] : flats)
    if (f != 0 && f != m.ground()) proper.push_back(f);
  for (std::size_t i = 0; i < proper.size(); ++i)
    for (std::size_t j = i + 1; j < proper.size(); ++j) {
      const Mask a = proper[i], b = proper[j];
      if ((a & b) == a || (a & b) == b) return false;  // comparable pair
    }
  return true;
}

/// Schubert test: the lattice of cyclic flats is a chain.
inline bool cyclic_flats_form_chain(const Matroid& m) {
  auto flats = m.cyclic_flats();
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = i + 1; j < flats.size(); ++j) {
      const Mask a = flats[i].first, b = flats[j].first;
      if ((a & b) != a && (a & b) != b) return false;  // incomparable pair
    }
  return true;
}

/// Membership report for the four classes plus the structural predicates the
/// characterizations rest on.  The elementary-split answer is cross-checked
/// through all three equivalent tests; a mismatch is a fatal internal error.
struct ClassReport {
  int n = 0, k = 0;
  bool elementary_split = false;
  bool class_n = false;
  bool class_u = false;  // uniform with additional loops and coloops
  bool class_t = false;  // graphic Schubert
  bool schubert = false;
  bool sparse_paving = false;
  bool paving = false;
  bool connected = false;
  /// For each false excluded-minor test, one found embedding.
  std::map<std::string, MinorWitness> witnesses;
};

inline ClassReport classify(const Matroid& m) {
  if (m.size() > kClassifyMaxN)
    throw SizeCapExceeded("families", "classify capped at n=" +
                                          std::to_string(kClassifyMaxN));
  ClassReport report;
  report.n = m.size();
  report.k = m.rank();

  const auto es_witness = find_minor_iso(m, detail::minor_u01_u12_u11());
  const bool es_by_minor = !es_witness.has_value();
  const bool es_by_relax = relax_all(m).is_uniform();
  const bool es_by_clutter = proper_cyclic_flats_form_clutter(m);
  if (es_by_minor != es_by_relax || es_by_minor != es_by_clutter)
    throw InternalInconsistency(
        "families",
        "elementary-split tests disagree: minor=" +
            std::to_string(es_by_minor) +
            " relax=" + std::to_string(es_by_relax) +
            " clutter=" + std::to_string(es_by_clutter));
  report.elementary_split = es_by_minor;
  if (es_witness) report.witnesses["elementary_split"] = *es_witness;

  const auto n_witness1 = find_minor_iso(m, detail::minor_u11_u13());
  const auto n_witness2 =
      n_witness1 ? std::nullopt : find_minor_iso(m, detail::minor_u01_u23());
  report.class_n = !n_witness1 && !n_witness2;
  if (n_witness1) report.witnesses["class_N"] = *n_witness1;
  if (n_witness2) report.witnesses["class_N"] = *n_witness2;

  const auto u_witness1 = find_minor_iso(m, detail::minor_t24());
  const auto u_witness2 =
      u_witness1 ? std::nullopt : find_minor_iso(m, detail::minor_u12_u12());
  report.class_u = !u_witness1 && !u_witness2;
  if (u_witness1) report.witnesses["class_U"] = *u_witness1;
  if (u_witness2) report.witnesses["class_U"] = *u_witness2;

  const auto t_witness1 = find_minor_iso(m, detail::minor_u24());
  const auto t_witness2 =
      t_witness1 ? std::nullopt : find_minor_iso(m, detail::minor_u12_u12());
  report.class_t = !t_witness1 && !t_witness2;
  if (t_witness1) report.witnesses["class_T"] = *t_witness1;
  if (t_witness2) report.witnesses["class_T"] = *t_witness2;

  report.schubert = cyclic_flats_form_chain(m);
  report.sparse_paving = m.is_sparse_paving();
  report.paving = m.is_paving();
  report.connected = m.is_connected();
  return report;
}

// ---------------------------------------------------------------------------
// Family generators
// ---------------------------------------------------------------------------

enum class FamilyKind { cuspidal, class_u, class_t, class_n_disconnected };

inline std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::cuspidal: return "cuspidal";
    case FamilyKind::class_u: return "class_U";
    case FamilyKind::class_t: return "class_T";
    case FamilyKind::class_n_disconnected: return "class_N_disconnected";
  }
  return "?";
}

/// Canonical generator lists.  The cuspidal, class_U and class_T lists have
/// exactly k(n-k)+1 members once deduplicated by isomorphism.
inline std::vector<MatroidDescriptor> family(FamilyKind kind, int n, int k) {
  if (k < 0 || k > n)
    throw InvalidArgument("families", "need 0 <= k <= n");
  using D = MatroidDescriptor;
  std::vector<D> list;
  switch (kind) {
    case FamilyKind::cuspidal: {
      list.push_back(D::uniform(k, n));
      for (int r = 1; r <= k; ++r)
        for (int h = r; h <= r + n - k - 1; ++h)
          list.push_back(D::cuspidal(r, k, h, n));
      break;
    }
    case FamilyKind::class_u: {
      for (int l = 0; l < k; ++l)
        for (int mloops = 0; mloops < n - k; ++mloops)
          list.push_back(D::sum({D::uniform(0, mloops),
                                 D::uniform(k - l, n - l - mloops),
                                 D::uniform(l, l)}));
      list.push_back(D::sum({D::uniform(0, n - k), D::uniform(k, k)}));
      break;
    }
    case FamilyKind::class_t: {
      for (int l = 0; l < k; ++l)
        for (int mloops = 0; mloops < n - k; ++mloops)
          list.push_back(D::sum({D::uniform(0, mloops),
                                 D::minimal(k - l, n - l - mloops),
                                 D::uniform(l, l)}));
      list.push_back(D::sum({D::uniform(0, n - k), D::uniform(k, k)}));
      break;
    }
    case FamilyKind::class_n_disconnected: {
      for (int l = 0; l <= std::min(k, n - k); ++l) {
        std::vector<D> parts;
        parts.push_back(D::uniform(0, n - k - l));
        for (int i = 0; i < l; ++i) parts.push_back(D::uniform(1, 2));
        parts.push_back(D::uniform(k - l, k - l));
        list.push_back(D::sum(std::move(parts)));
      }
      // The rank-1 and corank-1 members with a large uniform block.
      if (k == 1)
        for (int l = 3; l <= n - 1; ++l)
          list.push_back(D::sum({D::uniform(0, n - l), D::uniform(1, l)}));
      if (k == n - 1)
        for (int l = 3; l <= n - 1; ++l)
          list.push_back(D::sum(
              {D::uniform(l - 1, l), D::uniform(n - l, n - l)}));
      break;
    }
  }
  for (auto& d : list) d = d.canonicalized();
  // Deduplicate by isomorphism of the realized matroids.
  std::vector<D> out;
  std::vector<std::string> seen;
  for (const auto& d : list) {
    const auto key = canonical_form(realize(d)).key;
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      out.push_back(d);
    }
  }
  return out;
}

/// Shape side of the graphic-Schubert characterization: after stripping loops
/// and coloops, the rest is a minimal matroid (or empty).
inline bool matches_graphic_schubert_shape(const Matroid& m) {
  const Matroid core = m.contract_delete(m.coloops(), m.loops());
  if (core.size() == 0) return true;
  const int k = core.rank(), n = core.size();
  if (k < 1 || k > n - 1) return false;  // loopless+coloopless needs both
  return is_isomorphic(core, realize(MatroidDescriptor::minimal(k, n)));
}

// ---------------------------------------------------------------------------
// Closed-form Tutte polynomials
// ---------------------------------------------------------------------------

/// T_{Lambda_{r,k,h,n}}(x+1, y+1) as the double sum over intersections with
/// {1..h}; with m = n-k+r-h the monomial x^r y^m has coefficient exactly 1.
inline BivarPoly cuspidal_shifted_tutte(int r, int k, int h, int n) {
  if (r < 0 || r > h || h > n || k < r || k - r > n - h)
    throw InadmissibleParameters("families", "cuspidal parameters");
  const int m = n - k + r - h;
  BivarPoly p;
  for (int j = 0; j <= r; ++j) {
    const mpz_class hj(binom(h, j));
    for (int i = 0; i <= m - 1; ++i)
      p += BivarPoly::monomial(r - j, m - i, hj * binom(n - h, i));
    for (int i = 0; i <= k - r; ++i)
      p += BivarPoly::monomial(k - i - j, 0, hj * binom(n - h, i));
  }
  for (int j = r + 1; j <= h; ++j) {
    const mpz_class hj(binom(h, j));
    for (int i = 0; i <= k - j; ++i)
      p += BivarPoly::monomial(k - i - j, 0, hj * binom(n - h, i));
    for (int i = std::max(0, k - j + 1); i <= n - h; ++i)
      p += BivarPoly::monomial(0, i + j - k, hj * binom(n - h, i));
  }
  return p;
}

namespace detail {

/// T(U_{0,m} + U_{a,b} + U_{l,l}) with 0 < a < b (proper middle block).
inline BivarPoly tutte_u_member(int loops, int a, int b, int coloops) {
  const int k = a + coloops;
  const int n = loops + b + coloops;
  const int l = coloops, m = loops;
  BivarPoly p;
  for (int i = l + 1; i <= k; ++i)
    p += BivarPoly::monomial(i, m,
                             mpz_class(binom(n - m - i - 1, n - m - k - 1)));
  for (int i = m + 1; i <= n - k; ++i)
    p += BivarPoly::monomial(l, i,
                             mpz_class(binom(n - l - i - 1, k - l - 1)));
  return p;
}

/// T(T_{k,n}) = T(U_{k-1,k}) T(U_{1,n-k}) + x + y - xy.
inline BivarPoly tutte_minimal(int k, int n) {
  if (k < 1 || k > n - 1)
    throw InadmissibleParameters("families", "minimal(k,n) needs 1<=k<=n-1");
  BivarPoly left = BivarPoly::y();
  for (int i = 1; i <= k - 1; ++i) left += BivarPoly::monomial(i, 0, 1);
  BivarPoly right = BivarPoly::x();
  for (int i = 1; i <= n - k - 1; ++i) right += BivarPoly::monomial(0, i, 1);
  return left * right + BivarPoly::x() + BivarPoly::y() -
         BivarPoly::monomial(1, 1, 1);
}

/// T(U_{0,m} + T_{a,b} + U_{l,l}) = x^l y^m T(T_{a,b}).
inline BivarPoly tutte_t_member(int loops, int a, int b, int coloops) {
  return BivarPoly::monomial(coloops, loops, 1) * tutte_minimal(a, b);
}

}  // namespace detail

/// Closed-form Tutte polynomial for the supported descriptor shapes: uniform,
/// cuspidal, minimal, and class-U / class-T sum members.
inline BivarPoly closed_form_tutte(const MatroidDescriptor& d) {
  using Kind = MatroidDescriptor::Kind;
  const MatroidDescriptor c = d.canonicalized();
  switch (c.kind) {
    case Kind::uniform: {
      if (c.k < 0 || c.k > c.n)
        throw InadmissibleParameters("families", "uniform parameters");
      if (c.k == 0 || c.k == c.n)
        return BivarPoly::monomial(c.k, c.n - c.k, 1);
      return detail::tutte_u_member(0, c.k, c.n, 0);
    }
    case Kind::cuspidal:
      return cuspidal_shifted_tutte(c.r, c.k, c.h, c.n).shifted(-1, -1);
    case Kind::minimal:
      return detail::tutte_minimal(c.k, c.n);
    case Kind::sum: {
      // After canonicalization: [loops block]? [middle]? [coloops block]?
      int loops = 0, coloops = 0;
      std::vector<MatroidDescriptor> middle;
      for (const auto& p : c.parts) {
        if (p.kind == Kind::uniform && p.k == 0)
          loops = p.n;
        else if (p.kind == Kind::uniform && p.k == p.n)
          coloops = p.n;
        else
          middle.push_back(p);
      }
      if (middle.empty())
        return BivarPoly::monomial(coloops, loops, 1);
      if (middle.size() > 1)
        throw UnsupportedShape("families",
                               "no closed form for this descriptor shape");
      const auto& mid = middle.front();
      if (mid.kind == Kind::uniform)
        return detail::tutte_u_member(loops, mid.k, mid.n, coloops);
      if (mid.kind == Kind::minimal)
        return detail::tutte_t_member(loops, mid.k, mid.n, coloops);
      throw UnsupportedShape("families",
                             "no closed form for this descriptor shape");
    }
  }
  throw UnsupportedShape("families", "no closed form for this descriptor");
}

// ---------------------------------------------------------------------------
// G-invariant via the split decomposition
// ---------------------------------------------------------------------------

/// G(M) for elementary split M, computed from the lambda-profile and the
/// G-invariants of uniform and cuspidal matroids only:
///   G(M) = G(U_{k,n})
///        - sum_{r,h} lambda_{r,h} (G(Lambda_{r,k,h,n})
///                                  - G(U_{k-r,n-h} + U_{r,h})).
inline GInvariantVector g_split(const Matroid& m) {
  if (!classify(m).elementary_split)
    throw NotElementarySplit("families",
                             "g_split needs an elementary split matroid");
  const int n = m.size(), k = m.rank();
  const auto report = stressed_report(m);
  GInvariantVector g = g_invariant(uniform_matroid(k, n));
  for (const auto& [rh, count] : report.lambda) {
    const auto [r, h] = rh;
    const auto lambda_term =
        g_invariant(realize(MatroidDescriptor::cuspidal(r, k, h, n)));
    const auto sum_term = g_invariant(realize(MatroidDescriptor::sum(
        {MatroidDescriptor::uniform(k - r, n - h),
         MatroidDescriptor::uniform(r, h)})));
    g -= (lambda_term - sum_term).scaled(count);
  }
  return g;
}

}  // namespace valuta
