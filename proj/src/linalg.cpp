#include "skeinlab/linalg.hpp"

#include <algorithm>

namespace skeinlab {
namespace linalg {

int signature(RMatrix m) {
  const size_t n = m.size();
  int sig = 0;
  size_t k = 0;
  while (k < n) {
    if (m[k][k] == 0) {
      // Find j > k with m[j][j] != 0 and swap it in, or use the hyperbolic
      // pair trick for an off-diagonal pivot.
      size_t piv = k;
      for (size_t j = k + 1; j < n; ++j)
        if (m[j][j] != 0) {
          piv = j;
          break;
        }
      if (piv != k) {
        std::swap(m[k], m[piv]);
        for (size_t r = 0; r < n; ++r) std::swap(m[r][k], m[r][piv]);
      } else {
        size_t j = k + 1;
        while (j < n && m[k][j] == 0) ++j;
        if (j == n) {
          ++k;  // zero row/column: contributes nothing
          continue;
        }
        // Row/col addition makes the diagonal entry 2*m[k][j] != 0.
        for (size_t c = 0; c < n; ++c) m[k][c] += m[j][c];
        for (size_t r = 0; r < n; ++r) m[r][k] += m[r][j];
      }
      continue;
    }
    Rational d = m[k][k];
    sig += d > 0 ? 1 : -1;
    for (size_t r = k + 1; r < n; ++r) {
      if (m[r][k] == 0) continue;
      Rational f = m[r][k] / d;
      for (size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
    for (size_t c = k + 1; c < n; ++c) {
      if (m[k][c] == 0) continue;
      Rational f = m[k][c] / d;
      for (size_t r = k; r < n; ++r) m[r][c] -= f * m[r][k];
    }
    ++k;
  }
  return sig;
}

IMatrix integer_kernel(const IMatrix& m, int cols) {
  // Row-reduce over Q while tracking a basis, then clear denominators.
  const size_t rows = m.size();
  RMatrix a(rows, std::vector<Rational>(static_cast<size_t>(cols)));
  for (size_t r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][static_cast<size_t>(c)] = Rational(m[r][static_cast<size_t>(c)]);

  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    size_t piv = rank;
    while (piv < rows && a[piv][static_cast<size_t>(c)] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[rank], a[piv]);
    Rational d = a[rank][static_cast<size_t>(c)];
    for (int cc = 0; cc < cols; ++cc) a[rank][static_cast<size_t>(cc)] /= d;
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][static_cast<size_t>(c)] == 0) continue;
      Rational f = a[r][static_cast<size_t>(c)];
      for (int cc = 0; cc < cols; ++cc) a[r][static_cast<size_t>(cc)] -= f * a[rank][static_cast<size_t>(cc)];
    }
    pivot_col.push_back(c);
    ++rank;
  }

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;

  IMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < rank; ++r)
      v[static_cast<size_t>(pivot_col[r])] = -a[r][static_cast<size_t>(free)];
    // Clear denominators and divide by content.
    Int lcm = 1;
    for (const auto& x : v)
      lcm = boost::multiprecision::lcm(lcm, Int(boost::multiprecision::denominator(x)));
    std::vector<Int> iv(static_cast<size_t>(cols));
    Int g = 0;
    for (int c = 0; c < cols; ++c) {
      Rational scaled = v[static_cast<size_t>(c)] * Rational(lcm);
      iv[static_cast<size_t>(c)] = Int(boost::multiprecision::numerator(scaled));
      g = boost::multiprecision::gcd(g, iv[static_cast<size_t>(c)]);
    }
    if (g > 1)
      for (auto& x : iv) x /= g;
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace linalg
}  // namespace skeinlab
