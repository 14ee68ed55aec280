#pragma once

#include <bit>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "valuta/errors.hpp"

namespace valuta {

/// Subset of the ground set {1..n}: element i maps to bit i-1.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 24;

inline int popcount(Mask m) { return std::popcount(m); }

inline Mask bit_of(int element_1based) {
  return Mask{1} << (element_1based - 1);
}

inline Mask full_mask(int n) {
  return n == 0 ? 0 : (Mask{1} << n) - 1;
}

/// Elements of a mask as ascending 1-based labels.
inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

inline Mask mask_of(const std::vector<int>& elements_1based) {
  Mask m = 0;
  for (int e : elements_1based) m |= bit_of(e);
  return m;
}

/// Binomial coefficient; exact for the sizes this library works at.
inline long binom(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0;
  static const std::vector<std::vector<long>> table = [] {
    constexpr int kMax = 64;
    std::vector<std::vector<long>> t(kMax + 1);
    for (int i = 0; i <= kMax; ++i) {
      t[i].resize(i + 1);
      t[i][0] = t[i][i] = 1;
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return table[n][k];
}

inline long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

/// All k-element subsets of {1..n} as masks, ascending.
inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  if (k < 0 || k > n) return out;
  out.reserve(static_cast<std::size_t>(binom(n, k)));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Mask m = full_mask(k);
  Mask limit = Mask{1} << n;
  while (m < limit) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    Mask c = m & -m;
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

/// Masks over {1..n} grouped by popcount; layers[i] lists all i-element sets.
inline std::vector<std::vector<Mask>> subsets_by_popcount(int n) {
  std::vector<std::vector<Mask>> layers(n + 1);
  for (int i = 0; i <= n; ++i)
    layers[i].reserve(static_cast<std::size_t>(binom(n, i)));
  for (Mask m = 0; m < (Mask{1} << n); ++m) layers[popcount(m)].push_back(m);
  return layers;
}

/// Runs f(0..count-1), split across at most `threads` workers.  Results must
/// be written to caller-owned slots indexed by i so output stays deterministic.
template <class F>
void parallel_for(std::size_t count, unsigned threads, F&& f) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(threads, count));
  std::vector<std::thread> pool;
  std::mutex err_mutex;
  std::exception_ptr first_error;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace valuta
