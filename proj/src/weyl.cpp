// weyl.cpp -- Weyl-group combinatorics (see weyl.hpp).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include "hilb2/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <set>
#include <sstream>

#include "hilb2/errors.hpp"

namespace hilb2::weyl {

Weight make_weight(System s, std::vector<long long> twice_entries) {
  if (twice_entries.empty()) throw InvalidInput("weight needs rank >= 1");
  const long long parity = ((twice_entries[0] % 2) + 2) % 2;
  for (long long t : twice_entries) {
    if (((t % 2) + 2) % 2 != parity) {
      throw InvalidInput(
          "weight entries must be uniformly integral or uniformly "
          "half-integral");
    }
  }
  Weight w;
  w.system = s;
  w.rank = static_cast<int>(twice_entries.size());
  w.twice = std::move(twice_entries);
  return w;
}

Weight make_weight_int(System s, std::vector<long long> entries) {
  for (auto& e : entries) e *= 2;
  return make_weight(s, std::move(entries));
}

Weight rho(System s, int rank) {
  if (rank < 1) throw InvalidInput("rho needs rank >= 1");
  std::vector<long long> t(rank);
  // Both normalizations are strictly decreasing to 0: (n-1, ..., 1, 0).
  for (int i = 0; i < rank; ++i) t[i] = rank - 1 - i;
  return make_weight_int(s, std::move(t));
}

bool is_dominant(const Weight& w) {
  const int n = w.rank;
  for (int i = 0; i + 1 < n; ++i) {
    if (w.twice[i] < w.twice[i + 1]) return false;
  }
  if (w.system == System::TypeD && n >= 2) {
    if (w.twice[n - 2] < std::abs(w.twice[n - 1])) return false;
  }
  return true;
}

namespace {

bool is_singular(System s, const std::vector<long long>& v) {
  std::multiset<long long> seen;
  for (long long x : v) seen.insert(s == System::TypeD ? std::abs(x) : x);
  for (auto it = seen.begin(); it != seen.end();) {
    auto next = std::next(it);
    if (next != seen.end() && *next == *it) return true;
    it = next;
  }
  return false;
}

}  // namespace

Straightened dotted_straighten(const Weight& lambda) {
  const int n = lambda.rank;
  const Weight r = rho(lambda.system, n);
  std::vector<long long> v(n);
  for (int i = 0; i < n; ++i) v[i] = lambda.twice[i] + r.twice[i];

  Straightened out;
  if (is_singular(lambda.system, v)) {
    out.singular = true;
    return out;
  }
  // Apply the first simple reflection with negative pairing until dominant.
  // Each step reduces the number of inversions of the remaining word, so
  // the loop terminates in at most |W| steps.
  long steps = 0;
  const long guard = 4L * n * n * n + 64;
  for (;;) {
    bool moved = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (v[i] < v[i + 1]) {
        std::swap(v[i], v[i + 1]);
        ++steps;
        moved = true;
        break;
      }
    }
    if (!moved && lambda.system == System::TypeD && n >= 2 &&
        v[n - 2] + v[n - 1] < 0) {
      const long long a = v[n - 2], b = v[n - 1];
      v[n - 2] = -b;
      v[n - 1] = -a;
      ++steps;
      moved = true;
    }
    if (!moved) break;
    if (steps > guard) {
      throw MathInconsistency("straightening failed to terminate");
    }
  }
  out.length = steps;
  std::vector<long long> dom(n);
  for (int i = 0; i < n; ++i) dom[i] = v[i] - r.twice[i];
  out.dominant = make_weight(lambda.system, std::move(dom));
  assert(is_dominant(out.dominant));
  return out;
}

Int weyl_dimension(const Weight& mu) {
  if (!is_dominant(mu)) {
    throw NotDominant("weyl_dimension requires a dominant weight: " +
                      to_string(mu));
  }
  const int n = mu.rank;
  const Weight r = rho(mu.system, n);
  Int num = 1, den = 1;
  if (mu.system == System::TypeA) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        num *= Int(mu.twice[i] - mu.twice[j]) + 2 * (j - i);
        den *= Int(2) * (j - i);
      }
    }
  } else {
    // Type D: products of a_i^2 - a_j^2 over doubled a = 2(mu + rho); the
    // doubling cancels between numerator and denominator.
    std::vector<Int> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = Int(mu.twice[i] + r.twice[i]);
      b[i] = Int(r.twice[i]);
    }
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        num *= a[i] * a[i] - a[j] * a[j];
        den *= b[i] * b[i] - b[j] * b[j];
      }
    }
  }
  assert(den != 0 && num % den == 0);
  return num / den;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << (w.system == System::TypeA ? "A" : "D") << w.rank << "(";
  for (int i = 0; i < w.rank; ++i) {
    if (i) os << ",";
    if (w.twice[i] % 2 == 0) {
      os << w.twice[i] / 2;
    } else {
      os << w.twice[i] << "/2";
    }
  }
  os << ")";
  return os.str();
}

}  // namespace hilb2::weyl
