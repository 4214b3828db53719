#pragma once

// Independent reference computations used only by the tests. Nothing here
// shares code with the library routines it checks.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

// Determinant by Gaussian elimination over Q with partial pivot search.
inline mpq_class rational_determinant(std::vector<std::vector<mpq_class>> a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  return det;
}

// Evaluates a constant-first coefficient list at x with plain powers.
inline mpz_class evaluate_naive(const std::vector<mpz_class>& coeffs, const mpz_class& x) {
  mpz_class sum = 0;
  mpz_class power = 1;
  for (const auto& c : coeffs) {
    sum += c * power;
    power *= x;
  }
  return sum;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle

namespace oracle {

// Free reduction by repeated left-to-right scans that delete the first
// cancelling pair, until a scan finds none. Quadratic but obviously right.
// Letters are signed generator indices.
inline std::vector<int> naive_free_reduce(std::vector<int> w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace oracle
