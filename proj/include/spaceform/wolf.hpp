// Groups presented by the classical type-II parameters (m, n, r, k, l):
//   A^m = B^n = 1,  B A B^-1 = A^r,  R^2 = B^{n/2},  R A R^-1 = A^l,
//   R B R^-1 = B^k.
// Multiplication is derived mechanically on normal forms A^i B^j R^e and the
// assembled table is fully validated; inconsistent parameters surface as
// validation failures rather than silently collapsing the group.

#ifndef SPACEFORM_WOLF_HPP_
#define SPACEFORM_WOLF_HPP_

#include "recognition.hpp"

namespace spaceform {

struct WolfTypeIIParams {
  int m = 1, n = 2;   // n even
  int r = 1;          // coprime to m, reduced mod m
  int k = 1, l = 1;   // reduced mod n and mod m

  static WolfTypeIIParams make(int m, int n, int r, int k, int l) {
    if (m < 1 || n < 1) fail("BadParameter", "m and n must be positive");
    if (n % 2 != 0) fail("BadParameter", "n must be even (R^2 = B^{n/2} must parse)");
    auto reduce = [](int v, int mod) {
      v %= mod;
      return v < 0 ? v + mod : v;
    };
    WolfTypeIIParams p;
    p.m = m;
    p.n = n;
    p.r = reduce(r, m);
    p.k = reduce(k, n);
    p.l = reduce(l, m);
    if (std::gcd(p.r == 0 ? m : p.r, m) != 1)
      fail("BadParameter", "r must be coprime to m (conjugation must be an automorphism)");
    return p;
  }
};

// The group on normal forms A^i B^j R^e (id = e*m*n + j*m + i), of order 2mn.
inline Group build_wolf_II(const WolfTypeIIParams& p) {
  const int m = p.m, n = p.n, total = 2 * m * n;
  auto id_of = [&](int i, int j, int e) { return e * m * n + j * m + i; };
  // powers of r mod m, for pushing B past A
  std::vector<long long> rpow(n, 1 % std::max(m, 1));
  for (int j = 1; j < n; ++j) rpow[j] = rpow[j - 1] * p.r % m;
  std::vector<int> flat((size_t)total * total);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int j1 = 0; j1 < n; ++j1)
      for (int i1 = 0; i1 < m; ++i1)
        for (int e2 = 0; e2 < 2; ++e2)
          for (int j2 = 0; j2 < n; ++j2)
            for (int i2 = 0; i2 < m; ++i2) {
              // (A^i1 B^j1 R^e1)(A^i2 B^j2 R^e2): R moves left over A and B,
              // then B^j1 moves right over A^i2.
              long long i2r = i2, j2r = j2;
              if (e1 == 1) {
                i2r = i2r * p.l % m;  // R A R^-1 = A^l
                j2r = j2r * p.k % n;  // R B R^-1 = B^k
              }
              long long i = (i1 + i2r * rpow[j1]) % m;  // B^j1 A = A^{r^j1} B^j1
              long long j = j1 + j2r;
              int e = e1 + e2;
              if (e == 2) {
                j += n / 2;  // R^2 = B^{n/2}
                e = 0;
              }
              flat[(size_t)id_of(i1, j1, e1) * total + id_of(i2, j2, e2)] =
                  id_of((int)i, (int)(j % n), e);
            }
  try {
    return group_from_table(flat, total);
  } catch (const Error& err) {
    fail("InconsistentPresentation",
         std::string("parameters do not present a group of order 2mn: ") + err.what());
  }
}

// The classical duplication demonstration: six parameter tuples presenting
// one and the same group of order 120.
struct DuplicationReport {
  std::vector<WolfTypeIIParams> params;
  std::vector<Group> groups;
  bool all_pairwise_isomorphic = true;
  std::vector<SpaceFormTuple> tuples;
  bool all_tuples_equal = true;
  SpaceFormTuple shared;
};

inline DuplicationReport duplication_report() {
  DuplicationReport rep;
  int raw[6][5] = {{3, 20, -1, -1, 1},  {3, 20, -1, -1, -1}, {5, 12, -1, -1, 1},
                   {5, 12, -1, -1, -1}, {15, 4, -1, -1, 4},  {15, 4, -1, -1, 11}};
  for (auto& q : raw)
    rep.params.push_back(WolfTypeIIParams::make(q[0], q[1], q[2], q[3], q[4]));
  for (const auto& p : rep.params) rep.groups.push_back(build_wolf_II(p));
  for (size_t i = 0; i < rep.groups.size(); ++i)
    for (size_t j = i + 1; j < rep.groups.size(); ++j)
      if (!is_isomorphic(rep.groups[i], rep.groups[j]))
        rep.all_pairwise_isomorphic = false;
  for (const auto& g : rep.groups) {
    ClassificationResult c = classify(g);
    if (!c.accepted()) fail("InternalConsistency", "duplication group failed to classify");
    rep.tuples.push_back(*c.tuple);
  }
  rep.shared = rep.tuples[0];
  for (const auto& t : rep.tuples)
    if (!(t == rep.shared)) rep.all_tuples_equal = false;
  return rep;
}

}  // namespace spaceform

#endif  // SPACEFORM_WOLF_HPP_
