// oracles.hpp -- slow, independent reference implementations used only by
// the test suite.  Each oracle recomputes a quantity from first principles
// (Pascal recursion, hook formulas, breadth-first orbit search) so that the
// library's faster algorithms are checked against genuinely different code.
#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hilb2/numeric.hpp"

namespace oracles {

using hilb2::Int;

/// Binomial coefficient by the Pascal recursion, memoised row by row.
inline Int pascal(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<Int> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<Int> next(i + 1, 1);
    for (long j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

/// Dimension of the irreducible GL_r representation with partition highest
/// weight, by the hook content formula: prod (r + content) / prod hooks.
inline Int hook_content_dim(const std::vector<long>& shape, long r) {
  if (static_cast<long>(shape.size()) > r) return 0;
  Int num = 1, den = 1;
  const long rows = static_cast<long>(shape.size());
  for (long i = 0; i < rows; ++i) {
    for (long j = 0; j < shape[i]; ++j) {
      num *= r + j - i;
      long arm = shape[i] - j - 1;
      long leg = 0;
      for (long ii = i + 1; ii < rows && shape[ii] > j; ++ii) ++leg;
      den *= arm + leg + 1;
    }
  }
  assert(num % den == 0);
  return num / den;
}

/// Number of standard Young tableaux of the rows x cols rectangle, by the
/// hook length formula.  Equals the degree of Gr(rows, rows + cols) in its
/// Pluecker embedding.
inline Int rect_syt_count(long rows, long cols) {
  Int num = hilb2::factorial(rows * cols);
  Int den = 1;
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j) den *= (rows - i) + (cols - j) - 1;
  assert(num % den == 0);
  return num / den;
}

/// One Pieri step inside a rows x cols box: multiply a linear combination of
/// box partitions by the special class of degree p (add a horizontal strip
/// of p boxes, drop results leaving the box).
using BoxClass = std::map<std::vector<long>, Int>;

inline BoxClass pieri_step(const BoxClass& cls, long p, long rows, long cols) {
  BoxClass out;
  for (const auto& [lam, coef] : cls) {
    std::vector<long> padded(rows, 0);
    for (std::size_t i = 0; i < lam.size(); ++i) padded[i] = lam[i];
    // Enumerate mu with mu_i >= lam_i >= mu_{i+1}, |mu| = |lam| + p.
    std::vector<long> mu(rows, 0);
    auto rec = [&](auto&& self, long row, long remaining) -> void {
      if (row == rows) {
        if (remaining != 0) return;
        std::vector<long> trimmed(mu.begin(), mu.end());
        while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
        out[trimmed] += coef;
        return;
      }
      const long lo = padded[row];
      long hi = (row == 0) ? cols : std::min(cols, padded[row - 1]);
      for (long v = lo; v <= std::min(hi, lo + remaining); ++v) {
        mu[row] = v;
        self(self, row + 1, remaining - (v - lo));
      }
      mu[row] = 0;
    };
    rec(rec, 0, p);
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  return out;
}

/// Result of a breadth-first straightening search in a Weyl group orbit.
struct OrbitResult {
  bool singular = false;
  long length = -1;
  std::vector<long long> dominant;  // doubled coordinates
};

/// Straighten a doubled A_{n-1} vector by searching the permutation orbit:
/// distance from v to the strictly decreasing chamber representative.
inline OrbitResult orbit_straighten_a(const std::vector<long long>& v) {
  const std::size_t n = v.size();
  {
    std::set<long long> seen(v.begin(), v.end());
    if (seen.size() != n) return {true, -1, {}};
  }
  std::map<std::vector<long long>, long> dist;
  std::deque<std::vector<long long>> queue;
  dist[v] = 0;
  queue.push_back(v);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const long d = dist[cur];
    if (std::is_sorted(cur.rbegin(), cur.rend())) return {false, d, cur};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
  }
  throw std::logic_error("orbit search exhausted without dominant element");
}

/// Straighten a doubled D_n vector by searching the orbit of the adjacent
/// transpositions plus the negate-and-swap of the last two coordinates.
/// Singular means the orbit misses the open dominant chamber.
inline OrbitResult orbit_straighten_d(const std::vector<long long>& v) {
  const std::size_t n = v.size();
  auto strictly_dominant = [n](const std::vector<long long>& w) {
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (w[i] <= w[i + 1]) return false;
    return w[n - 2] + w[n - 1] > 0;
  };
  std::map<std::vector<long long>, long> dist;
  std::deque<std::vector<long long>> queue;
  dist[v] = 0;
  queue.push_back(v);
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    const long d = dist[cur];
    if (strictly_dominant(cur)) return {false, d, cur};
    for (std::size_t i = 0; i + 1 < n; ++i) {
      auto next = cur;
      std::swap(next[i], next[i + 1]);
      if (dist.emplace(next, d + 1).second) queue.push_back(next);
    }
    auto next = cur;
    next[n - 2] = -cur[n - 1];
    next[n - 1] = -cur[n - 2];
    if (dist.emplace(next, d + 1).second) queue.push_back(next);
  }
  return {true, -1, {}};  // whole orbit explored, no interior point
}

/// Fourth finite difference of h at 0..4; for a degree-4 Hilbert polynomial
/// this equals 4! times the leading coefficient, i.e. the degree.
inline Int degree_from_values(const std::vector<Int>& h) {
  assert(h.size() >= 5);
  std::vector<Int> d(h.begin(), h.begin() + 5);
  for (int step = 0; step < 4; ++step)
    for (std::size_t i = 0; i + step < 4; ++i) d[i] = d[i + 1] - d[i];
  return d[0];
}

}  // namespace oracles
