#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "valuta/errors.hpp"

namespace valuta {

/// Dense matrix of exact rationals.
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

  static ExactMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    if (rows.empty()) return ExactMatrix(0, 0);
    ExactMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols_)
        throw DimensionMismatch("exact-algebra", "ragged rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m.at(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  mpq_class& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const {
    return a_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<mpq_class> a_;
};

namespace detail {

/// Clears denominators row by row (a nonzero row scaling, which preserves
/// rank and solution sets of row-encoded equation systems).
inline std::vector<std::vector<mpz_class>> integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(),
                                           std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm_den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m.at(r, c);
      v.canonicalize();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
              v.get_den().get_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpq_class v = m.at(r, c);
      v.canonicalize();
      rows[r][c] = v.get_num() * (lcm_den / v.get_den());
    }
  }
  return rows;
}

/// Fraction-free (Bareiss) forward elimination in place.  Returns the pivot
/// positions (row, col); columns are processed left to right, so the result
/// is a row echelon form whose non-pivot tail rows are identically zero on
/// the first `lead_cols` columns.
inline std::vector<std::pair<std::size_t, std::size_t>> bareiss_echelon(
    std::vector<std::vector<mpz_class>>& a, std::size_t lead_cols) {
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a.front().size();
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < lead_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        // Bareiss guarantees exact divisibility by the previous pivot.
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Rank over the rationals, exact.
inline int exact_rank(const ExactMatrix& m) {
  auto rows = detail::integer_rows(m);
  auto pivots = detail::bareiss_echelon(rows, m.cols());
  return static_cast<int>(pivots.size());
}

/// Solution of generators * c = target.
struct SpanSolution {
  std::vector<mpq_class> coefficients;  // one per generator
  bool is_integral = false;             // all denominators 1 after reduction
  bool is_unique = false;               // generators linearly independent
};

/// Expresses `target` in the rational span of `generators` (each a coefficient
/// vector).  Returns nullopt when the target is outside the span.  When the
/// generators are dependent, free coefficients are set to zero.
inline std::optional<SpanSolution> solve_in_span(
    const std::vector<std::vector<mpq_class>>& generators,
    const std::vector<mpq_class>& target) {
  const std::size_t s = generators.size();
  const std::size_t dim = target.size();
  for (const auto& g : generators)
    if (g.size() != dim)
      throw DimensionMismatch("exact-algebra",
                              "generator/target dimensions differ");
  // Augmented system: rows are coordinates, columns are generators | target.
  ExactMatrix aug(dim, s + 1);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t j = 0; j < s; ++j) aug.at(r, j) = generators[j][r];
    aug.at(r, s) = target[r];
  }
  auto rows = detail::integer_rows(aug);
  auto pivots = detail::bareiss_echelon(rows, s);
  // Rows below the last pivot are zero on the generator columns; a nonzero
  // augmented entry there means the system is inconsistent.
  for (std::size_t r = pivots.size(); r < dim; ++r)
    if (rows[r][s] != 0) return std::nullopt;

  SpanSolution sol;
  sol.coefficients.assign(s, mpq_class(0));
  for (std::size_t idx = pivots.size(); idx-- > 0;) {
    const auto [pr, pc] = pivots[idx];
    mpq_class rhs(rows[pr][s]);
    for (std::size_t j = pc + 1; j < s; ++j)
      if (rows[pr][j] != 0)
        rhs -= mpq_class(rows[pr][j]) * sol.coefficients[j];
    rhs /= mpq_class(rows[pr][pc]);
    rhs.canonicalize();
    sol.coefficients[pc] = rhs;
  }
  sol.is_unique = pivots.size() == s;
  sol.is_integral = true;
  for (auto& c : sol.coefficients) {
    c.canonicalize();
    if (c.get_den() != 1) sol.is_integral = false;
  }
  // The solution must reproduce the target exactly.
  for (std::size_t r = 0; r < dim; ++r) {
    mpq_class acc(0);
    for (std::size_t j = 0; j < s; ++j)
      acc += sol.coefficients[j] * generators[j][r];
    if (acc != target[r])
      throw InternalInconsistency("exact-algebra",
                                  "span solution failed verification");
  }
  return sol;
}

}  // namespace valuta
