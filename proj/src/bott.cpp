// bott.cpp -- Borel-Weil-Bott cohomology (see bott.hpp).
//
// Part of hilb2.  SPDX-License-Identifier: MIT
#include "hilb2/bott.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include <json.hpp>

#include "hilb2/errors.hpp"

namespace hilb2::bott {

using nlohmann::json;

Ambient Ambient::gr(int k, int n) {
  if (k < 1 || n <= k) throw InvalidInput("Gr(k, n) requires 0 < k < n");
  Ambient a;
  a.kind = Kind::Grassmannian;
  a.k = k;
  a.n = n;
  return a;
}

Ambient Ambient::quadric(int m) {
  if (m < 2) throw InvalidInput("even quadric Q^{2m} requires m >= 2");
  Ambient a;
  a.kind = Kind::EvenQuadric;
  a.m = m;
  return a;
}

int Ambient::dim() const {
  return kind == Kind::Grassmannian ? k * (n - k) : 2 * m;
}

std::string Ambient::name() const {
  std::ostringstream os;
  if (kind == Kind::Grassmannian) {
    os << "Gr(" << k << "," << n << ")";
  } else {
    os << "Q^" << 2 * m;
  }
  return os.str();
}

namespace {

void check_pattern(const std::vector<long>& p, int max_len, const char* what) {
  if (static_cast<int>(p.size()) > max_len) {
    throw InvalidInput(std::string(what) + ": pattern longer than bundle rank");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (p[i] < p[i + 1]) {
      throw InvalidInput(std::string(what) + ": pattern must be weakly decreasing");
    }
  }
}

}  // namespace

HomogBundle line_bundle(const Ambient& a, long twist, const Int& mult) {
  Summand s;
  if (a.kind == Ambient::Kind::Grassmannian) {
    s.descriptor = GrPattern{};
  } else {
    s.descriptor = weyl::make_weight_int(
        weyl::System::TypeD, std::vector<long long>(a.m + 1, 0));
  }
  s.twist = twist;
  s.mult = mult;
  return HomogBundle{a, {std::move(s)}};
}

HomogBundle schur_quot_dual(const Ambient& a, std::vector<long> pattern,
                            long twist, const Int& mult) {
  if (a.kind != Ambient::Kind::Grassmannian) {
    throw InvalidInput("schur_quot_dual needs a Grassmannian ambient");
  }
  check_pattern(pattern, a.n - a.k, "quotient pattern");
  Summand s;
  s.descriptor = GrPattern{std::move(pattern), {}};
  s.twist = twist;
  s.mult = mult;
  return HomogBundle{a, {std::move(s)}};
}

HomogBundle schur_sub_dual(const Ambient& a, std::vector<long> pattern,
                           long twist, const Int& mult) {
  if (a.kind != Ambient::Kind::Grassmannian) {
    throw InvalidInput("schur_sub_dual needs a Grassmannian ambient");
  }
  check_pattern(pattern, a.k, "subbundle pattern");
  Summand s;
  s.descriptor = GrPattern{{}, std::move(pattern)};
  s.twist = twist;
  s.mult = mult;
  return HomogBundle{a, {std::move(s)}};
}

HomogBundle quadric_bundle(const Ambient& a, std::vector<long long> twice_weight,
                           long twist, const Int& mult) {
  if (a.kind != Ambient::Kind::EvenQuadric) {
    throw InvalidInput("quadric_bundle needs an even quadric ambient");
  }
  if (static_cast<int>(twice_weight.size()) != a.m + 1) {
    throw InvalidInput("quadric weight needs m + 1 coordinates");
  }
  Summand s;
  s.descriptor = weyl::make_weight(weyl::System::TypeD, std::move(twice_weight));
  s.twist = twist;
  s.mult = mult;
  to_weight(a, s);  // validate Levi dominance eagerly
  return HomogBundle{a, {std::move(s)}};
}

HomogBundle spinor(const Ambient& a, long twist, const Int& mult) {
  if (a.kind != Ambient::Kind::EvenQuadric) {
    throw InvalidInput("spinor bundle lives on an even quadric");
  }
  // S(twist) has weight (twist - 1/2, 1/2, ..., 1/2, -1/2).
  std::vector<long long> tw(a.m + 1, 1);
  tw[0] = 2LL * twist - 1;
  tw[a.m] = -1;
  Summand s;
  s.descriptor = weyl::make_weight(weyl::System::TypeD, std::move(tw));
  s.twist = 0;  // already folded into the weight
  s.mult = mult;
  return HomogBundle{a, {std::move(s)}};
}

HomogBundle direct_sum(const HomogBundle& a, const HomogBundle& b) {
  if (a.ambient.kind != b.ambient.kind || a.ambient.k != b.ambient.k ||
      a.ambient.n != b.ambient.n || a.ambient.m != b.ambient.m) {
    throw InvalidInput("direct sum needs a common ambient");
  }
  HomogBundle out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
  return out;
}

Int CohomologyTable::at(int degree) const {
  auto it = h.find(degree);
  return it == h.end() ? Int(0) : it->second;
}

std::string to_json(const CohomologyTable& t) {
  json j;
  j["cohomology"] = json::object();
  for (const auto& [deg, dim] : t.h) {
    j["cohomology"][std::to_string(deg)] = dim.str();
  }
  return j.dump();
}

CohomologyTable cohomology_table_from_json(const std::string& text) {
  const json j = json::parse(text);
  CohomologyTable t;
  for (const auto& [key, val] : j.at("cohomology").items()) {
    t.h[std::stoi(key)] = Int(val.get<std::string>());
  }
  return t;
}

weyl::Weight to_weight(const Ambient& a, const Summand& s) {
  if (a.kind == Ambient::Kind::Grassmannian) {
    const auto& p = std::get<GrPattern>(s.descriptor);
    check_pattern(p.quot_dual, a.n - a.k, "quotient pattern");
    check_pattern(p.sub_dual, a.k, "subbundle pattern");
    // GL(n) weight: the U^dual block (twisted) first, the Q^dual block after.
    std::vector<long long> w(a.n, 0);
    for (int i = 0; i < a.k; ++i) {
      const long beta = i < static_cast<int>(p.sub_dual.size()) ? p.sub_dual[i] : 0;
      w[i] = beta + s.twist;
    }
    for (int i = 0; i < a.n - a.k; ++i) {
      const long alpha =
          i < static_cast<int>(p.quot_dual.size()) ? p.quot_dual[i] : 0;
      w[a.k + i] = alpha;
    }
    return weyl::make_weight_int(weyl::System::TypeA, std::move(w));
  }
  const auto& lam = std::get<weyl::Weight>(s.descriptor);
  if (lam.rank != a.m + 1) {
    throw InvalidInput("quadric weight rank mismatch");
  }
  // Levi dominance of the last m coordinates.
  for (int i = 1; i + 1 < lam.rank; ++i) {
    if (lam.twice[i] < lam.twice[i + 1]) {
      throw InvalidInput("quadric weight not Levi-dominant");
    }
  }
  if (lam.rank >= 3 &&
      lam.twice[lam.rank - 2] < std::abs(lam.twice[lam.rank - 1])) {
    throw InvalidInput("quadric weight not Levi-dominant");
  }
  std::vector<long long> w = lam.twice;
  w[0] += 2LL * s.twist;
  return weyl::make_weight(weyl::System::TypeD, std::move(w));
}

Int summand_rank(const Ambient& a, const Summand& s) {
  Int r = 1;
  if (a.kind == Ambient::Kind::Grassmannian) {
    const auto& p = std::get<GrPattern>(s.descriptor);
    auto block_dim = [](const std::vector<long>& pat, int rank) {
      std::vector<long long> w(rank, 0);
      for (int i = 0; i < static_cast<int>(pat.size()); ++i) w[i] = pat[i];
      return weyl::weyl_dimension(
          weyl::make_weight_int(weyl::System::TypeA, std::move(w)));
    };
    r = block_dim(p.quot_dual, a.n - a.k) * block_dim(p.sub_dual, a.k);
  } else {
    // Fiber representation of the Levi D_m part (the GL(1) coordinate does
    // not change the dimension).
    const auto& lam = std::get<weyl::Weight>(s.descriptor);
    std::vector<long long> levi(lam.twice.begin() + 1, lam.twice.end());
    r = weyl::weyl_dimension(weyl::make_weight(weyl::System::TypeD, std::move(levi)));
  }
  return r * s.mult;
}

Int bundle_rank(const HomogBundle& b) {
  Int r = 0;
  for (const auto& s : b.summands) r += summand_rank(b.ambient, s);
  return r;
}

CohomologyTable cohomology(const HomogBundle& b) {
  CohomologyTable out;
  for (const auto& s : b.summands) {
    const weyl::Weight w = to_weight(b.ambient, s);
    const weyl::Straightened st = weyl::dotted_straighten(w);
    if (st.singular) continue;
    // Bott: a regular summand contributes in exactly one degree, and the
    // straightening length is bounded by the ambient dimension because the
    // blocks of a dominant pattern stay internally sorted.
    assert(st.length >= 0 && st.length <= b.ambient.dim());
    const Int dim = weyl::weyl_dimension(st.dominant) * s.mult;
    if (dim == 0) continue;
    out.h[static_cast<int>(st.length)] += dim;
  }
  // Drop zero entries (possible only via zero multiplicities).
  for (auto it = out.h.begin(); it != out.h.end();) {
    it = it->second == 0 ? out.h.erase(it) : std::next(it);
  }
  return out;
}

Int euler_characteristic(const HomogBundle& b) {
  Int chi = 0;
  for (const auto& [deg, dim] : cohomology(b).h) {
    chi += (deg % 2 == 0) ? dim : -dim;
  }
  return chi;
}

Int global_sections_dim(const HomogBundle& b) { return cohomology(b).at(0); }

}  // namespace hilb2::bott
