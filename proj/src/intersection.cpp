// intersection.cpp -- exact intersection theory (see intersection.hpp).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include "hilb2/intersection.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <iterator>
#include <map>

#include "hilb2/bott.hpp"
#include "hilb2/errors.hpp"

namespace hilb2::intersect {

// ---------------------------------------------------------------------------
// Partitions

namespace {

Partition normalized(Partition p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) throw InvalidInput("partition must be weakly decreasing");
  }
  if (!p.empty() && p.back() < 0) throw InvalidInput("partition parts must be >= 0");
  return p;
}

long part(const Partition& p, std::size_t i) {
  return i < p.size() ? p[i] : 0;
}

long weight_of(const Partition& p) {
  long w = 0;
  for (long x : p) w += x;
  return w;
}

bool contains(const Partition& outer, const Partition& inner) {
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (part(outer, i) < inner[i]) return false;
  }
  return true;
}

bool fits_box(const Partition& p, int rows, int cols) {
  return static_cast<int>(p.size()) <= rows && part(p, 0) <= cols;
}

/// All partitions of total size `size` inside a rows x cols box.
void partitions_in_box(int rows, int cols, long size,
                       const std::function<void(const Partition&)>& fn) {
  Partition cur;
  std::function<void(int, long, long)> rec = [&](int row, long remaining,
                                                 long maxpart) {
    if (remaining == 0) {
      fn(cur);
      return;
    }
    if (row == rows) return;
    for (long v = std::min<long>(maxpart, remaining); v >= 1; --v) {
      cur.push_back(v);
      rec(row + 1, remaining - v, v);
      cur.pop_back();
    }
  };
  rec(0, size, cols);
}

/// Number of Littlewood-Richardson skew tableaux of shape nu/lambda and
/// content mu: fill the skew cells in reading order (each row right to
/// left, top to bottom) so that rows weakly increase left to right, columns
/// strictly increase, and the running content stays a lattice word.
Int lr_coefficient(const Partition& nu, const Partition& lambda,
                   const Partition& mu) {
  if (!contains(nu, lambda)) return 0;
  if (weight_of(nu) != weight_of(lambda) + weight_of(mu)) return 0;
  const int rows = static_cast<int>(nu.size());
  // Cells in reading order.
  struct CellRef { int row; long col; };
  std::vector<CellRef> order;
  for (int r = 0; r < rows; ++r) {
    for (long col = nu[r] - 1; col >= part(lambda, r); --col) {
      order.push_back({r, col});
    }
  }
  // filled[r][c - lambda_r] = label (1-based); 0 = empty.
  std::vector<std::vector<int>> filled(rows);
  for (int r = 0; r < rows; ++r) {
    filled[r].assign(nu[r] - part(lambda, r), 0);
  }
  auto label_at = [&](int r, long col) -> int {
    if (r < 0 || r >= rows) return 0;
    if (col < part(lambda, r) || col >= nu[r]) return 0;
    return filled[r][col - part(lambda, r)];
  };
  std::vector<long> count(mu.size() + 1, 0);
  Int total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == order.size()) {
      total += 1;
      return;
    }
    const auto [r, col] = order[pos];
    for (int label = 1; label <= static_cast<int>(mu.size()); ++label) {
      if (count[label] >= part(mu, label - 1)) continue;
      // Lattice condition in reading order.
      if (label > 1 && count[label - 1] <= count[label]) continue;
      // Row weakly increasing: against the right neighbour (already filled).
      const int right = label_at(r, col + 1);
      if (right != 0 && label > right) continue;
      // Column strictly increasing: against the cell above (already filled
      // when it is a skew cell; cells of lambda impose no constraint).
      if (r > 0 && col < part(lambda, r - 1)) {
        // above cell is in lambda: fine
      } else if (r > 0) {
        const int above = label_at(r - 1, col);
        if (above == 0 || label <= above) continue;
      }
      filled[r][col - part(lambda, r)] = label;
      ++count[label];
      rec(pos + 1);
      --count[label];
      filled[r][col - part(lambda, r)] = 0;
    }
  };
  rec(0);
  return total;
}

}  // namespace

Partition conjugate(const Partition& p) {
  Partition out;
  if (p.empty()) return out;
  for (long col = 0; col < p[0]; ++col) {
    long cnt = 0;
    for (long row : p) {
      if (row > col) ++cnt;
    }
    out.push_back(cnt);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Schubert classes

Int SchubertClass::coeff(const Partition& p) const {
  auto it = coeffs.find(normalized(p));
  return it == coeffs.end() ? Int(0) : it->second;
}

SchubertClass schubert(int k, int n, const Partition& p) {
  if (k < 1 || n <= k) throw InvalidInput("Gr(k, n) requires 0 < k < n");
  SchubertClass out;
  out.k = k;
  out.n = n;
  const Partition q = normalized(p);
  if (fits_box(q, k, n - k)) out.coeffs[q] = 1;
  return out;
}

namespace {

void check_same_space(const SchubertClass& a, const SchubertClass& b) {
  if (a.k != b.k || a.n != b.n) {
    throw InvalidInput("Schubert classes live on different Grassmannians");
  }
}

}  // namespace

SchubertClass sc_add(const SchubertClass& a, const SchubertClass& b) {
  check_same_space(a, b);
  SchubertClass out = a;
  for (const auto& [p, c] : b.coeffs) {
    out.coeffs[p] += c;
    if (out.coeffs[p] == 0) out.coeffs.erase(p);
  }
  return out;
}

SchubertClass sc_scale(const Int& c, const SchubertClass& a) {
  SchubertClass out;
  out.k = a.k;
  out.n = a.n;
  if (c == 0) return out;
  for (const auto& [p, v] : a.coeffs) out.coeffs[p] = c * v;
  return out;
}

SchubertClass lr_multiply(const SchubertClass& a, const SchubertClass& b) {
  check_same_space(a, b);
  SchubertClass out;
  out.k = a.k;
  out.n = a.n;
  const int rows = a.k, cols = a.n - a.k;
  for (const auto& [la, ca] : a.coeffs) {
    for (const auto& [mu, cb] : b.coeffs) {
      const long size = weight_of(la) + weight_of(mu);
      if (size > static_cast<long>(rows) * cols) continue;
      partitions_in_box(rows, cols, size, [&](const Partition& nu) {
        const Int c = lr_coefficient(nu, la, mu);
        if (c == 0) return;
        out.coeffs[nu] += ca * cb * c;
        if (out.coeffs[nu] == 0) out.coeffs.erase(nu);
      });
    }
  }
  return out;
}

Int sc_integrate(const SchubertClass& a) {
  Partition box(a.k, a.n - a.k);
  return a.coeff(box);
}

Int grassmannian_degree(int k, int n) {
  if (k < 1 || n <= k) throw InvalidInput("Gr(k, n) requires 0 < k < n");
  const long dim = static_cast<long>(k) * (n - k);
  if (dim > 24) throw InvalidInput("grassmannian_degree limited to dimension 24");
  SchubertClass acc = schubert(k, n, {});
  const SchubertClass sigma1 = schubert(k, n, {1});
  for (long i = 0; i < dim; ++i) acc = lr_multiply(acc, sigma1);
  return sc_integrate(acc);
}

// ---------------------------------------------------------------------------
// Even quadric cohomology ring

QuadricClass qc_zero(int m) {
  if (m < 2 || m > 4) throw InvalidInput("quadric ring supports m in {2, 3, 4}");
  QuadricClass q;
  q.m = m;
  q.low.assign(m, 0);
  q.high.assign(m, 0);
  return q;
}

QuadricClass qc_h_power(int m, int j) {
  QuadricClass q = qc_zero(m);
  if (j < 0 || j > 2 * m) throw InvalidInput("h power out of range");
  if (j < m) {
    q.low[j] = 1;
  } else if (j == m) {
    q.mid_a = 1;
    q.mid_b = 1;
  } else {
    q.high[j - m - 1] = 2;  // h^{m+t} = 2 [P^{m-t}]
  }
  return q;
}

QuadricClass qc_ruling_a(int m) {
  QuadricClass q = qc_zero(m);
  q.mid_a = 1;
  return q;
}

QuadricClass qc_ruling_b(int m) {
  QuadricClass q = qc_zero(m);
  q.mid_b = 1;
  return q;
}

QuadricClass qc_add(const QuadricClass& x, const QuadricClass& y) {
  if (x.m != y.m) throw InvalidInput("quadric classes of different dimension");
  QuadricClass q = x;
  for (int i = 0; i < q.m; ++i) {
    q.low[i] += y.low[i];
    q.high[i] += y.high[i];
  }
  q.mid_a += y.mid_a;
  q.mid_b += y.mid_b;
  return q;
}

QuadricClass qc_scale(const Rat& c, const QuadricClass& x) {
  QuadricClass q = x;
  for (int i = 0; i < q.m; ++i) {
    q.low[i] *= c;
    q.high[i] *= c;
  }
  q.mid_a *= c;
  q.mid_b *= c;
  return q;
}

QuadricClass qc_multiply(const QuadricClass& x, const QuadricClass& y) {
  if (x.m != y.m) throw InvalidInput("quadric classes of different dimension");
  const int m = x.m;
  QuadricClass out = qc_zero(m);
  auto add_high = [&](int gen_deg, const Rat& c) {
    // gen_deg = j means the degree-(m+j) generator [P^{m-j}].
    if (gen_deg >= 1 && gen_deg <= m) out.high[gen_deg - 1] += c;
  };
  // low x low
  for (int i = 0; i < m; ++i) {
    if (x.low[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (y.low[j] == 0) continue;
      const int s = i + j;
      const Rat c = x.low[i] * y.low[j];
      if (s < m) {
        out.low[s] += c;
      } else if (s == m) {
        out.mid_a += c;
        out.mid_b += c;
      } else if (s <= 2 * m) {
        add_high(s - m, 2 * c);
      }
    }
  }
  // low x mid and mid x low: h^i a = h^i b = [P^{m-i}].
  for (int i = 1; i < m; ++i) {
    add_high(i, x.low[i] * (y.mid_a + y.mid_b));
    add_high(i, y.low[i] * (x.mid_a + x.mid_b));
  }
  out.mid_a += x.low[0] * y.mid_a + y.low[0] * x.mid_a;
  out.mid_b += x.low[0] * y.mid_b + y.low[0] * x.mid_b;
  // low x high and high x low.
  for (int i = 0; i < m; ++i) {
    for (int j = 1; j <= m; ++j) {
      const int s = i + j;
      if (s > m) continue;
      add_high(s, x.low[i] * y.high[j - 1] + y.low[i] * x.high[j - 1]);
    }
  }
  // mid x mid.
  const Rat paa = x.mid_a * y.mid_a + x.mid_b * y.mid_b;  // a^2- and b^2-terms
  const Rat pab = x.mid_a * y.mid_b + x.mid_b * y.mid_a;  // cross terms
  if (m % 2 == 0) {
    add_high(m, paa);  // a^2 = b^2 = pt, ab = 0
  } else {
    add_high(m, pab);  // a^2 = b^2 = 0, ab = pt
  }
  return out;
}

Rat qc_integrate_rat(const QuadricClass& x) { return x.high[x.m - 1]; }

Int qc_integrate(const QuadricClass& x) {
  const Rat v = qc_integrate_rat(x);
  if (boost::multiprecision::denominator(v) != 1) {
    throw NonIntegral("integral of quadric class is fractional: " +
                      boost::multiprecision::numerator(v).str() + "/" +
                      boost::multiprecision::denominator(v).str());
  }
  return boost::multiprecision::numerator(v);
}

// ---------------------------------------------------------------------------
// h-power series on a quadric

Rat HSeries::at(int j) const {
  return (j >= 0 && j < static_cast<int>(coeff.size())) ? coeff[j] : Rat(0);
}

HSeries hs_constant(int m, const Rat& c) {
  HSeries s;
  s.m = m;
  s.coeff.assign(2 * m + 1, 0);
  s.coeff[0] = c;
  return s;
}

HSeries hs_h_linear(int m, const Rat& c0, const Rat& c1) {
  HSeries s = hs_constant(m, c0);
  if (2 * m >= 1) s.coeff[1] = c1;
  return s;
}

HSeries hs_add(const HSeries& x, const HSeries& y) {
  if (x.m != y.m) throw InvalidInput("series of different dimension");
  HSeries s = x;
  for (std::size_t i = 0; i < s.coeff.size(); ++i) s.coeff[i] += y.coeff[i];
  return s;
}

HSeries hs_multiply(const HSeries& x, const HSeries& y) {
  if (x.m != y.m) throw InvalidInput("series of different dimension");
  HSeries s = hs_constant(x.m, 0);
  const int top = 2 * x.m;
  for (int i = 0; i <= top; ++i) {
    if (x.coeff[i] == 0) continue;
    for (int j = 0; i + j <= top; ++j) {
      if (y.coeff[j] == 0) continue;
      s.coeff[i + j] += x.coeff[i] * y.coeff[j];
    }
  }
  return s;
}

HSeries hs_scale(const Rat& c, const HSeries& x) {
  HSeries s = x;
  for (auto& v : s.coeff) v *= c;
  return s;
}

HSeries hs_invert(const HSeries& x) {
  if (x.coeff[0] == 0) throw InvalidInput("series with zero constant term");
  HSeries inv = hs_constant(x.m, Rat(1) / x.coeff[0]);
  const int top = 2 * x.m;
  for (int d = 1; d <= top; ++d) {
    Rat acc = 0;
    for (int j = 1; j <= d; ++j) acc += x.coeff[j] * inv.coeff[d - j];
    inv.coeff[d] = -acc / x.coeff[0];
  }
  return inv;
}

HSeries hs_exp_h(int m, const Rat& c) {
  HSeries s = hs_constant(m, 1);
  Rat term = 1;
  for (int j = 1; j <= 2 * m; ++j) {
    term *= c;
    term /= j;
    s.coeff[j] = term;
  }
  return s;
}

QuadricClass hs_to_quadric_class(const HSeries& x) {
  QuadricClass q = qc_zero(x.m);
  for (int j = 0; j < x.m; ++j) q.low[j] = x.at(j);
  q.mid_a = x.at(x.m);
  q.mid_b = x.at(x.m);
  for (int j = 1; j <= x.m; ++j) q.high[j - 1] = 2 * x.at(x.m + j);
  return q;
}

// ---------------------------------------------------------------------------
// Chern classes of Schur bundles by the splitting principle

namespace {

/// Sparse polynomial in the k u-variables and (n-k) q-variables, truncated
/// in total degree.
using Mono = std::vector<int>;
using Poly = std::map<Mono, Rat>;

long mono_degree(const Mono& m) {
  long d = 0;
  for (int e : m) d += e;
  return d;
}

Poly poly_mul(const Poly& a, const Poly& b, long maxdeg) {
  Poly out;
  for (const auto& [ma, ca] : a) {
    const long da = mono_degree(ma);
    for (const auto& [mb, cb] : b) {
      if (da + mono_degree(mb) > maxdeg) continue;
      Mono m = ma;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
      out[m] += ca * cb;
      if (out[m] == 0) out.erase(m);
    }
  }
  return out;
}

/// Monomial expansion of the Schur polynomial s_pat in `nvars` variables,
/// placed at variable offset `off` of a width-`width` exponent vector:
/// sum over semistandard tableaux of shape pat with entries in 1..nvars.
Poly schur_monomials(const Partition& pat, int nvars, int off, int width) {
  Poly out;
  if (weight_of(pat) == 0) {
    out[Mono(width, 0)] = 1;
    return out;
  }
  if (static_cast<int>(pat.size()) > nvars) return out;  // zero polynomial
  // DFS over rows; row r entries weakly increase and exceed the entry above.
  const int rows = static_cast<int>(pat.size());
  std::vector<std::vector<int>> tab(rows);
  for (int r = 0; r < rows; ++r) tab[r].assign(pat[r], 0);
  std::function<void(int, long)> rec = [&](int r, long c) {
    if (r == rows) {
      Mono m(width, 0);
      for (const auto& row : tab) {
        for (int entry : row) m[off + entry - 1] += 1;
      }
      out[m] += 1;
      return;
    }
    if (c == pat[r]) {
      rec(r + 1, 0);
      return;
    }
    const int above = (r > 0 && c < pat[r - 1]) ? tab[r - 1][c] : 0;
    const int left = (c > 0) ? tab[r][c - 1] : 1;
    for (int v = std::max(above + 1, left); v <= nvars; ++v) {
      tab[r][c] = v;
      rec(r, c + 1);
    }
    tab[r][c] = 0;
  };
  rec(0, 0);
  return out;
}

/// Weights (contents) of the Schur functor applied to a rank-`nvars`
/// block: one content vector per semistandard tableau.
std::vector<std::vector<int>> schur_weights(const Partition& pat, int nvars) {
  std::vector<std::vector<int>> out;
  const Poly p = schur_monomials(pat, nvars, 0, nvars);
  for (const auto& [m, c] : p) {
    long copies = static_cast<long>(boost::multiprecision::numerator(c));
    for (long i = 0; i < copies; ++i) out.push_back(m);
  }
  return out;
}

/// Decompose a bidegree-homogeneous, block-symmetric polynomial into the
/// bi-Schur basis s_lambda(u) s_mu(q) by leading-monomial subtraction.
std::map<std::pair<Partition, Partition>, Rat> bi_schur_decompose(
    Poly p, int k, int nk) {
  std::map<std::pair<Partition, Partition>, Rat> out;
  const int width = k + nk;
  while (!p.empty()) {
    // Lexicographically largest monomial; for a block-symmetric polynomial
    // its exponents are sorted within each block.
    const auto it = std::prev(p.end());
    const Mono lead = it->first;
    const Rat c = it->second;
    Partition lambda(lead.begin(), lead.begin() + k);
    Partition mu(lead.begin() + k, lead.end());
    assert(std::is_sorted(lambda.rbegin(), lambda.rend()));
    assert(std::is_sorted(mu.rbegin(), mu.rend()));
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    const Poly su = schur_monomials(lambda, k, 0, width);
    const Poly sq = schur_monomials(mu, nk, k, width);
    const Poly prod = poly_mul(su, sq, mono_degree(lead));
    for (const auto& [m, v] : prod) {
      p[m] -= c * v;
      if (p[m] == 0) p.erase(m);
    }
    out[{lambda, mu}] += c;
  }
  return out;
}

}  // namespace

GrChern chern_schur_bundle(int k, int n, const Partition& pattern, Side side,
                           long twist) {
  if (k < 1 || n <= k) throw InvalidInput("Gr(k, n) requires 0 < k < n");
  const int nk = n - k;
  const int width = k + nk;
  const long dim = static_cast<long>(k) * nk;
  const Partition pat = normalized(pattern);

  // Chern roots: one linear form per Schur weight, shifted by the twist
  // line (whose root is t (u_1 + ... + u_k) = c_1 of O(t)).
  const int block = side == Side::QuotDual ? nk : k;
  const int off = side == Side::QuotDual ? k : 0;
  Poly total;
  total[Mono(width, 0)] = 1;
  for (const auto& w : schur_weights(pat, block)) {
    // 1 + root
    Poly factor;
    factor[Mono(width, 0)] = 1;
    for (int i = 0; i < block; ++i) {
      if (w[i] == 0) continue;
      Mono m(width, 0);
      m[off + i] = 1;
      factor[m] += w[i];
    }
    for (int i = 0; i < k; ++i) {
      if (twist == 0) break;
      Mono m(width, 0);
      m[i] = 1;
      factor[m] += twist;
    }
    total = poly_mul(total, factor, dim);
  }

  // Split by degree, then express each piece in Schubert classes.
  GrChern out;
  out.k = k;
  out.n = n;
  out.graded.assign(dim + 1, {});
  out.graded[0][{}] = 1;
  std::vector<Poly> by_degree(dim + 1);
  for (const auto& [m, c] : total) {
    const long d = mono_degree(m);
    if (d >= 1) by_degree[d][m] = c;
  }
  for (long d = 1; d <= dim; ++d) {
    if (by_degree[d].empty()) continue;
    const auto terms = bi_schur_decompose(std::move(by_degree[d]), k, nk);
    for (const auto& [lm, c] : terms) {
      const auto& [lambda, mu] = lm;
      // s_mu(q-roots) = (-1)^{|mu|} s_{mu'}(u-roots); then multiply in the
      // u-alphabet and truncate to the box.
      if (part(lambda, 0) > nk) continue;  // every product lands outside
      const Partition muc = conjugate(mu);
      if (static_cast<int>(muc.size()) > k) continue;  // zero in k variables
      const Rat sign = (weight_of(mu) % 2 == 0) ? Rat(1) : Rat(-1);
      const SchubertClass prod =
          lr_multiply(schubert(k, n, lambda), schubert(k, n, muc));
      for (const auto& [nu, cc] : prod.coeffs) {
        Rat& slot = out.graded[d][nu];
        slot += c * sign * cc;
        if (slot == 0) out.graded[d].erase(nu);
      }
    }
  }
  return out;
}

HSeries hs_chern_inverse(const HSeries& total_chern) {
  return hs_invert(total_chern);
}

// ---------------------------------------------------------------------------
// Porteous classes

QuadricClass porteous_class_genus7() {
  const SpinorChern sp = spinor_chern_via_hrr();
  // c(O^8 - S) = 1 / c(S); only c_1..c_3 of S matter mod h^4.
  HSeries cs = hs_constant(4, 1);
  cs.coeff[1] = Rat(sp.c1);
  cs.coeff[2] = Rat(sp.c2);
  cs.coeff[3] = Rat(sp.c3);
  const HSeries inv = hs_invert(cs);
  std::vector<HSeries> c = {hs_constant(4, 1), hs_constant(4, 0),
                            hs_constant(4, 0), hs_constant(4, 0)};
  for (int j = 1; j <= 3; ++j) {
    c[j].coeff[j] = inv.at(j);
  }
  const HSeries det = hs_add(hs_multiply(c[2], c[2]),
                             hs_scale(-1, hs_multiply(c[1], c[3])));
  return hs_to_quadric_class(det);
}

Int porteous_degree_genus7() {
  const QuadricClass cls = porteous_class_genus7();
  return qc_integrate(qc_multiply(cls, qc_h_power(4, 4)));
}

SchubertClass porteous_class_genus8() {
  // c(O^6 - M) with M the second wedge of the dual quotient on Gr(2, 6).
  const GrChern cm = chern_schur_bundle(2, 6, {1, 1}, Side::QuotDual, 0);
  // Invert the total Chern class degree by degree (only degrees <= 3 are
  // needed; compute to degree 4 for the determinant).
  std::vector<SchubertClass> cv(5, schubert(2, 6, {}));
  std::vector<SchubertClass> inv(5, schubert(2, 6, {}));
  auto to_class = [&](const std::map<Partition, Rat>& m) {
    SchubertClass out;
    out.k = 2;
    out.n = 6;
    for (const auto& [p, c] : m) {
      if (boost::multiprecision::denominator(c) != 1) {
        throw NonIntegral("Chern class of an actual bundle must be integral");
      }
      out.coeffs[p] = boost::multiprecision::numerator(c);
    }
    return out;
  };
  for (int d = 1; d <= 4; ++d) {
    cv[d] = d < static_cast<int>(cm.graded.size())
                ? to_class(cm.graded[d])
                : SchubertClass{2, 6, {}};
    // inv_d = -(sum_{j=1..d} c_j inv_{d-j})
    SchubertClass acc;
    acc.k = 2;
    acc.n = 6;
    for (int j = 1; j <= d; ++j) {
      acc = sc_add(acc, lr_multiply(cv[j], inv[d - j]));
    }
    inv[d] = sc_scale(-1, acc);
  }
  return sc_add(lr_multiply(inv[2], inv[2]),
                sc_scale(-1, lr_multiply(inv[1], inv[3])));
}

Int porteous_degree_genus8() {
  SchubertClass cls = porteous_class_genus8();
  const SchubertClass sigma1 = schubert(2, 6, {1});
  for (int i = 0; i < 4; ++i) cls = lr_multiply(cls, sigma1);
  return sc_integrate(cls);
}

Int porteous_corank0_is_one() {
  // The expected class of the corank-0 locus is an empty determinant.
  return 1;
}

HSeries first_degeneracy_class_genus7() {
  const SpinorChern sp = spinor_chern_via_hrr();
  return hs_h_linear(4, 0, Rat(-sp.c1));  // c_1(O^8 - S) = -c_1(S)
}

SchubertClass first_degeneracy_class_genus8() {
  const GrChern cm = chern_schur_bundle(2, 6, {1, 1}, Side::QuotDual, 0);
  SchubertClass out;
  out.k = 2;
  out.n = 6;
  for (const auto& [p, c] : cm.graded[1]) {
    out.coeffs[p] = -rat_to_int(c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Todd classes and Riemann-Roch

HSeries todd_quadric(int m) {
  if (m < 2 || m > 6) throw InvalidInput("todd_quadric supports 2 <= m <= 6");
  // T(x) = x / (1 - e^{-x}); S(x) = (1 - e^{-x}) / x = sum (-x)^i / (i+1)!.
  const int top = 2 * m;
  auto s_series = [&](const Rat& scale) {
    HSeries s = hs_constant(m, 0);
    Rat pow = 1;  // scale^i
    Int fact = 1;
    for (int i = 0; i <= top; ++i) {
      if (i > 0) pow *= -scale;
      if (i > 0) fact *= i + 1;
      else fact = 1;
      s.coeff[i] = pow / Rat(fact);
    }
    return s;
  };
  const HSeries t1 = hs_invert(s_series(1));
  HSeries td = hs_constant(m, 1);
  for (int i = 0; i < 2 * m + 2; ++i) td = hs_multiply(td, t1);
  td = hs_multiply(td, s_series(2));
  return td;
}

Rat hrr_euler(const HSeries& ch, const HSeries& todd) {
  const HSeries p = hs_multiply(ch, todd);
  return 2 * p.at(2 * p.m);  // integral of h^{2m} is 2
}

SpinorChern spinor_chern_via_hrr() {
  const int m = 4;
  const HSeries td = todd_quadric(m);
  const bott::Ambient q8 = bott::Ambient::quadric(m);

  // chi(S(t)) = sum_j ch_{2j}(T) * B_j(t) with T = S(1/2), whose Chern
  // character is even, and B_j(t) = integral of h^{2j} e^{(t-1/2)h} td.
  auto b_coef = [&](long t, int j) {
    const HSeries base = hs_multiply(hs_exp_h(m, Rat(2 * t - 1) / 2), td);
    return 2 * base.at(2 * m - 2 * j);
  };
  // 4x4 system in ch_2, ch_4, ch_6, ch_8 of T.
  std::vector<std::vector<Rat>> a(4, std::vector<Rat>(5, 0));
  for (long t = 0; t <= 3; ++t) {
    const Int chi = bott::euler_characteristic(bott::spinor(q8, t));
    for (int j = 1; j <= 4; ++j) a[t][j - 1] = b_coef(t, j);
    a[t][4] = Rat(chi) - 8 * b_coef(t, 0);
  }
  // Gaussian elimination.
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) throw InconsistentHRR("singular Riemann-Roch system");
    std::swap(a[col], a[pivot]);
    for (int row = 0; row < 4; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rat f = a[row][col] / a[col][col];
      for (int c2 = col; c2 <= 4; ++c2) a[row][c2] -= f * a[col][c2];
    }
  }
  HSeries chT = hs_constant(m, 8);
  for (int j = 1; j <= 4; ++j) chT.coeff[2 * j] = a[j - 1][4] / a[j - 1][j - 1];
  const HSeries chS = hs_multiply(chT, hs_exp_h(m, Rat(-1) / 2));

  SpinorChern out;
  out.ch.assign(chS.coeff.begin(), chS.coeff.end());
  const Rat ch1 = chS.at(1), ch2 = chS.at(2), ch3 = chS.at(3);
  // Newton inversion: c1 = ch1; c2 = (c1^2 - 2 ch2)/2;
  // c3 = (6 ch3 - c1^3 + 3 c1 c2) / 3 ... derived from
  // ch2 = (c1^2 - 2c2)/2 and ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6.
  const Rat c1 = ch1;
  const Rat c2 = (c1 * c1 - 2 * ch2) / 2;
  const Rat c3 = (6 * ch3 - c1 * c1 * c1 + 3 * c1 * c2) / 3;
  for (const Rat& v : {c1, c2, c3}) {
    if (boost::multiprecision::denominator(v) != 1) {
      throw InconsistentHRR("spinor Chern classes came out fractional");
    }
  }
  out.c1 = boost::multiprecision::numerator(c1);
  out.c2 = boost::multiprecision::numerator(c2);
  out.c3 = boost::multiprecision::numerator(c3);
  if (out.c1 != -4) {
    throw InconsistentHRR("spinor c1 must be -4h, got " + out.c1.str());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree formulas for quadric rank strata

Int harris_tu_sigma_degree(long g) {
  if (g < 6) throw InvalidInput("symmetroid degree requires g >= 6");
  Rat prod = 1;
  for (long k = 0; k <= 2; ++k) {
    const Rat num(binomial(Int(2 * g - 5), g - 2 * k));
    const Rat den(binomial(Int(2 * g - 5), 2 * k));
    prod *= num / den;
  }
  if (boost::multiprecision::denominator(prod) != 1) {
    throw NonIntegral("symmetroid degree product is fractional at g = " +
                      std::to_string(g));
  }
  return boost::multiprecision::numerator(prod);
}

Int deg_y0(long g) {
  if (g < 5) throw InvalidInput("vertex stratum degree requires g >= 5");
  return factorial(2 * g - 9) / factorial(g - 5);
}

Int deg_y_top(long g) {
  if (g < 6 || g % 2 != 0) {
    throw InvalidInput("maximal isotropic stratum requires even g >= 6");
  }
  const long h = g / 2;
  const Int num = 12 * factorial(2 * g - 8);
  const Int den =
      factorial(h - 2) * factorial(h - 1) * factorial(h) * factorial(h + 1);
  assert(num % den == 0);
  return num / den;
}

SigmaDecomposition sigma_decomposition(long g) {
  SigmaDecomposition out;
  out.g = g;
  out.total = harris_tu_sigma_degree(g);
  out.y0 = deg_y0(g);
  out.y_top = (g % 2 == 0) ? deg_y_top(g) : Int(0);
  out.residual = out.total - out.y0 - out.y_top;
  if (out.residual < 0) {
    throw MathInconsistency("stratum degrees exceed the total at g = " +
                            std::to_string(g));
  }
  return out;
}

}  // namespace hilb2::intersect
