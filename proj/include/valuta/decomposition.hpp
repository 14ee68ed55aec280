#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valuta/families.hpp"
#include "valuta/invariants.hpp"
#include "valuta/linalg.hpp"

namespace valuta {

enum class WhichInvariant { tutte, ginv };

inline std::string to_string(WhichInvariant w) {
  return w == WhichInvariant::tutte ? "tutte" : "ginv";
}

/// Tutte coefficient vector over the (k+1) x (n-k+1) monomial box, entries in
/// graded-lex descending order.
inline std::vector<mpq_class> tutte_vector(const BivarPoly& p, int n, int k) {
  std::vector<std::pair<int, int>> monomials;
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= n - k; ++j) monomials.emplace_back(i, j);
  std::sort(monomials.begin(), monomials.end(), MonomialOrder{});
  std::vector<mpq_class> v;
  v.reserve(monomials.size());
  for (const auto& [i, j] : monomials) v.emplace_back(p.coeff(i, j));
  if (p.max_x_degree() > k || p.max_y_degree() > n - k)
    throw DimensionMismatch("decomposition",
                            "polynomial exceeds the (k, n-k) degree box");
  return v;
}

/// G coefficient vector over the C(n,k) weight-k sequences, descending by
/// bitstring.
inline std::vector<mpq_class> ginv_vector(const GInvariantVector& g) {
  auto keys = k_subsets(g.n, g.k);
  std::sort(keys.rbegin(), keys.rend());
  std::vector<mpq_class> v;
  v.reserve(keys.size());
  for (Mask s : keys) {
    auto it = g.coeffs.find(s);
    v.emplace_back(static_cast<long>(it == g.coeffs.end() ? 0 : it->second));
  }
  return v;
}

inline std::vector<mpq_class> invariant_vector(const Matroid& m,
                                               WhichInvariant which) {
  if (which == WhichInvariant::tutte)
    return tutte_vector(tutte(m), m.size(), m.rank());
  return ginv_vector(g_invariant(m));
}

/// f-rank of a family: rank of the integer span of the invariant's values.
inline int invariant_rank(const std::vector<Matroid>& matroids,
                          WhichInvariant which) {
  if (matroids.empty()) return 0;
  const int n = matroids.front().size(), k = matroids.front().rank();
  for (const auto& m : matroids)
    if (m.size() != n || m.rank() != k)
      throw MixedStratum("decomposition",
                         "matroids must share ground-set size and rank");
  std::vector<std::vector<mpq_class>> rows;
  rows.reserve(matroids.size());
  for (const auto& m : matroids) rows.push_back(invariant_vector(m, which));
  return exact_rank(ExactMatrix::from_rows(rows));
}

enum class BasisKind { cuspidal, class_u, class_t };

inline std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::cuspidal: return "cuspidal";
    case BasisKind::class_u: return "class_U";
    case BasisKind::class_t: return "class_T";
  }
  return "?";
}

inline FamilyKind family_of(BasisKind kind) {
  switch (kind) {
    case BasisKind::cuspidal: return FamilyKind::cuspidal;
    case BasisKind::class_u: return FamilyKind::class_u;
    case BasisKind::class_t: return FamilyKind::class_t;
  }
  throw InvalidArgument("decomposition", "unknown basis kind");
}

/// T(M) written in a family basis: integer coefficient per member, zero
/// coefficients omitted, members in deterministic family() order.
struct Decomposition {
  BasisKind basis = BasisKind::cuspidal;
  int n = 0, k = 0;
  std::vector<std::pair<MatroidDescriptor, long>> terms;
};

/// Unique integer decomposition of T(M) over the chosen family.  Failure of
/// existence, uniqueness or integrality contradicts the decomposition
/// theorems, so it is reported as an internal error rather than a result.
inline Decomposition decompose(const Matroid& m, BasisKind kind) {
  const int n = m.size(), k = m.rank();
  const auto members = family(family_of(kind), n, k);
  std::vector<std::vector<mpq_class>> generators;
  generators.reserve(members.size());
  for (const auto& d : members)
    generators.push_back(tutte_vector(tutte(realize(d)), n, k));
  const auto target = tutte_vector(tutte(m), n, k);
  const auto solution = solve_in_span(generators, target);
  if (!solution)
    throw TheoremViolation("decomposition",
                           "Tutte polynomial outside the " + to_string(kind) +
                               " span at (n,k)=(" + std::to_string(n) + "," +
                               std::to_string(k) + ")");
  if (!solution->is_unique)
    throw TheoremViolation("decomposition",
                           to_string(kind) + " basis is linearly dependent");
  if (!solution->is_integral)
    throw TheoremViolation("decomposition",
                           "non-integral coefficients in the " +
                               to_string(kind) + " basis");
  Decomposition out;
  out.basis = kind;
  out.n = n;
  out.k = k;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const mpq_class& c = solution->coefficients[i];
    if (c == 0) continue;
    if (!c.get_num().fits_slong_p())
      throw TheoremViolation("decomposition", "coefficient overflow");
    out.terms.emplace_back(members[i], c.get_num().get_si());
  }
  return out;
}

/// Re-expands a decomposition; used to verify round trips.
inline BivarPoly expand(const Decomposition& d) {
  BivarPoly p;
  for (const auto& [desc, coeff] : d.terms)
    p += tutte(realize(desc)).scaled(mpz_class(coeff));
  return p;
}

enum class RankFamily {
  all,               // full enumeration (n <= 6)
  split,             // elementary split members of the enumeration
  simple,            // simple members of the enumeration
  cuspidal,
  class_u,
  class_t,
  class_n,           // generating set: disconnected members + U + Lambda_1
};

inline std::string to_string(RankFamily f) {
  switch (f) {
    case RankFamily::all: return "all";
    case RankFamily::split: return "split";
    case RankFamily::simple: return "simple";
    case RankFamily::cuspidal: return "cuspidal";
    case RankFamily::class_u: return "class-u";
    case RankFamily::class_t: return "class-t";
    case RankFamily::class_n: return "class-n";
  }
  return "?";
}

/// Resolves a rank-table family to a finite generating list for one stratum.
inline std::vector<Matroid> rank_family_members(RankFamily fam, int n, int k) {
  switch (fam) {
    case RankFamily::all:
      return enumerate_matroids(n, k, /*up_to_iso=*/true);
    case RankFamily::split: {
      std::vector<Matroid> out;
      for (const auto& m : enumerate_matroids(n, k, true))
        if (classify(m).elementary_split) out.push_back(m);
      return out;
    }
    case RankFamily::simple: {
      std::vector<Matroid> out;
      for (const auto& m : enumerate_matroids(n, k, true))
        if (m.is_simple()) out.push_back(m);
      return out;
    }
    case RankFamily::cuspidal:
    case RankFamily::class_u:
    case RankFamily::class_t: {
      const FamilyKind kind = fam == RankFamily::cuspidal ? FamilyKind::cuspidal
                              : fam == RankFamily::class_u
                                  ? FamilyKind::class_u
                                  : FamilyKind::class_t;
      std::vector<Matroid> out;
      for (const auto& d : family(kind, n, k)) out.push_back(realize(d));
      return out;
    }
    case RankFamily::class_n: {
      if (k < 2 || k > n - 2)
        throw InvalidArgument(
            "decomposition",
            "class-n generating set is defined for 2 <= k <= n-2");
      std::vector<Matroid> out;
      for (const auto& d : family(FamilyKind::class_n_disconnected, n, k))
        out.push_back(realize(d));
      out.push_back(uniform_matroid(k, n));
      out.push_back(realize(MatroidDescriptor::cuspidal(1, k, n - k, n)));
      return out;
    }
  }
  throw InvalidArgument("decomposition", "unknown rank family");
}

struct RankTableRow {
  std::string family;
  int n = 0, k = 0;
  std::optional<int> t_rank;
  std::optional<int> g_rank;
};

struct RankTable {
  std::vector<RankTableRow> rows;
};

/// Exact invariant ranks per stratum.  `which` empty means both invariants.
inline RankTable rank_table(RankFamily fam,
                            const std::vector<std::pair<int, int>>& strata,
                            std::optional<WhichInvariant> which) {
  RankTable table;
  for (const auto& [n, k] : strata) {
    const auto members = rank_family_members(fam, n, k);
    RankTableRow row;
    row.family = to_string(fam);
    row.n = n;
    row.k = k;
    if (!which || *which == WhichInvariant::tutte)
      row.t_rank = invariant_rank(members, WhichInvariant::tutte);
    if (!which || *which == WhichInvariant::ginv)
      row.g_rank = invariant_rank(members, WhichInvariant::ginv);
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace valuta
