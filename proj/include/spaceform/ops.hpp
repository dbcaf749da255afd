// Subgroup calculus on Cayley-table groups: Sylow theory, odd core,
// characteristic subgroups, quotients, and the two extension constructions
// used to assemble the classified groups.

#ifndef SPACEFORM_OPS_HPP_
#define SPACEFORM_OPS_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "group.hpp"

namespace spaceform {

inline bool is_normal(const Group& g, const SubgroupRef& s) {
  for (int x = 0; x < g.order(); ++x)
    for (int m : s.elements)
      if (!s.contains(g.conjugate(x, m))) return false;
  return true;
}

// <S^G>: smallest normal subgroup containing the given elements.
inline SubgroupRef normal_closure(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0}, work;
  in[0] = 1;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  };
  for (int x : gens) add(x);
  size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    for (int c = 0; c < g.order(); ++c) add(g.conjugate(c, x));
    std::vector<int> snapshot = members;
    for (int y : snapshot) add(g.mul(x, y));
  }
  std::sort(members.begin(), members.end());
  return SubgroupRef{g, std::move(members)};
}

inline SubgroupRef derived_subgroup(const Group& g) {
  std::vector<int> comms;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      comms.push_back(g.mul(g.mul(g.inverse(x), g.inverse(y)), g.mul(x, y)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_generated(g, comms);
}

inline SubgroupRef centralizer(const Group& g, const SubgroupRef& s) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int m : s.elements)
      if (g.mul(x, m) != g.mul(m, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return SubgroupRef{g, std::move(out)};
}

inline SubgroupRef center(const Group& g) { return centralizer(g, whole_group(g)); }

inline SubgroupRef normalizer(const Group& g, const SubgroupRef& s) {
  std::vector<int> out;
  for (int x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (int m : s.elements)
      if (!s.contains(g.conjugate(x, m))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return SubgroupRef{g, std::move(out)};
}

// Sylow p-subgroup by normalizer ascent from a cyclic p-subgroup.
// Ties are broken by least element id, so the result is deterministic.
inline SubgroupRef sylow_subgroup(const Group& g, int p) {
  if (p < 2) fail("BadParameter", "p must be prime");
  int pk = 1, n = g.order();
  while (n % p == 0) {
    n /= p;
    pk *= p;
  }
  if (pk == 1) return trivial_subgroup(g);

  auto is_p_power = [&](int k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  int seed = -1;
  for (int i = 1; i < g.order() && seed < 0; ++i)
    if (g.element_order(i) == p) seed = i;
  SubgroupRef cur = subgroup_generated(g, {seed});
  while (cur.order() < pk) {
    SubgroupRef nm = normalizer(g, cur);
    int pick = -1;
    for (int y : nm.elements) {
      if (cur.contains(y) || !is_p_power(g.element_order(y))) continue;
      std::vector<int> gens = cur.elements;
      gens.push_back(y);
      SubgroupRef bigger = subgroup_generated(g, gens);
      if (bigger.order() == cur.order() * p) {
        pick = y;
        cur = std::move(bigger);
        break;
      }
    }
    if (pick < 0)
      fail("InternalConsistency", "Sylow ascent stalled");  // cannot happen
  }
  return cur;
}

// O(G): the unique maximal odd-order normal subgroup, computed as the join of
// the normal closures of odd-order elements whose closure has odd order.
inline SubgroupRef odd_core(const Group& g) {
  std::vector<int> cls = conjugacy_class_ids(g);
  std::vector<char> cls_seen(g.order(), 0);
  std::vector<int> gens;
  for (int x = 1; x < g.order(); ++x) {
    if (g.element_order(x) % 2 == 0 || cls_seen[cls[x]]) continue;
    cls_seen[cls[x]] = 1;
    SubgroupRef nc = normal_closure(g, {x});
    if (nc.order() % 2 == 1) gens.push_back(x);
  }
  SubgroupRef core = normal_closure(g, gens);
  if (core.order() % 2 == 0)
    fail("InternalConsistency", "odd core came out even");
  return core;
}

// Quotient G/N with cosets numbered by least member, plus the projection.
inline std::pair<Group, GroupHom> quotient_group(const Group& g, const SubgroupRef& n) {
  if (!is_normal(g, n)) fail("NotNormal", "subgroup is not normal");
  int size = g.order();
  std::vector<int> coset_min(size, -1);
  for (int x = 0; x < size; ++x) {
    if (coset_min[x] >= 0) continue;
    int least = x;
    std::vector<int> coset;
    for (int m : n.elements) coset.push_back(g.mul(x, m));
    for (int y : coset) least = std::min(least, y);
    for (int y : coset) coset_min[y] = least;
  }
  std::vector<int> reps;
  for (int x = 0; x < size; ++x)
    if (coset_min[x] == x) reps.push_back(x);
  std::sort(reps.begin(), reps.end());
  int q = (int)reps.size();
  std::vector<int> rep_index(size, -1);
  for (int i = 0; i < q; ++i) rep_index[reps[i]] = i;
  std::vector<int> flat((size_t)q * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      flat[(size_t)i * q + j] = rep_index[coset_min[g.mul(reps[i], reps[j])]];
  Group quot = group_from_table(flat, q);
  std::vector<int> images(size);
  for (int x = 0; x < size; ++x) images[x] = rep_index[coset_min[x]];
  return {quot, make_hom(g, quot, std::move(images))};
}

// An automorphism given as the image list of every element.
using Automorphism = std::vector<int>;

inline bool is_automorphism(const Group& g, const Automorphism& a) {
  if ((int)a.size() != g.order()) return false;
  std::vector<char> hit(g.order(), 0);
  for (int v : a) {
    if (v < 0 || v >= g.order() || hit[v]) return false;
    hit[v] = 1;
  }
  if (a[0] != 0) return false;
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      if (a[g.mul(x, y)] != g.mul(a[x], a[y])) return false;
  return true;
}

inline Automorphism inner_automorphism(const Group& g, int c) {
  Automorphism a(g.order());
  for (int x = 0; x < g.order(); ++x) a[x] = g.conjugate(c, x);
  return a;
}

inline Automorphism compose(const Automorphism& f, const Automorphism& s) {
  Automorphism r(s.size());
  for (size_t i = 0; i < s.size(); ++i) r[i] = f[s[i]];
  return r;
}

// N : H.  `action` maps each H-id to an automorphism of N and must be a
// homomorphism H -> Aut(N).  Element (n, h) gets id h*|N| + n, so numbering
// is lexicographic in (h, n) and the identity lands at 0.
inline Group semidirect_product(const Group& n, const Group& h,
                                const std::vector<Automorphism>& action) {
  if ((int)action.size() != h.order())
    fail("NotAnAction", "need one automorphism per element of the acting group");
  for (int t = 0; t < h.order(); ++t)
    if (!is_automorphism(n, action[t]))
      fail("NotAnAutomorphism", "action of element " + std::to_string(t) +
                                    " is not an automorphism");
  for (int s = 0; s < h.order(); ++s)
    for (int t = 0; t < h.order(); ++t)
      if (action[h.mul(s, t)] != compose(action[s], action[t]))
        fail("NotAnAction", "action is not a homomorphism at (" + std::to_string(s) +
                                "," + std::to_string(t) + ")");
  int nn = n.order(), hh = h.order(), total = nn * hh;
  std::vector<int> flat((size_t)total * total);
  for (int h1 = 0; h1 < hh; ++h1)
    for (int n1 = 0; n1 < nn; ++n1)
      for (int h2 = 0; h2 < hh; ++h2)
        for (int n2 = 0; n2 < nn; ++n2) {
          int np = n.mul(n1, action[h1][n2]);
          int hp = h.mul(h1, h2);
          flat[(size_t)(h1 * nn + n1) * total + (h2 * nn + n2)] = hp * nn + np;
        }
  return group_from_table(flat, total);
}

inline std::vector<Automorphism> trivial_action(const Group& n, const Group& h) {
  Automorphism id(n.order());
  std::iota(id.begin(), id.end(), 0);
  return std::vector<Automorphism>(h.order(), id);
}

// N x H with the same (h, n) numbering as semidirect_product.
inline Group direct_product(const Group& n, const Group& h) {
  return semidirect_product(n, h, trivial_action(n, h));
}

// Adjoins an element phi with phi^2 = z and phi k phi^-1 = alpha(k); phi has
// order 4.  Preconditions (each reported): z a central involution,
// alpha(z) = z, alpha^2 = id, and alpha an automorphism.
// Ids: (k, eps) -> eps*|K| + k.
inline Group adjoin_order4(const Group& k, const Automorphism& alpha, int z) {
  if (!is_automorphism(k, alpha))
    fail("PreconditionViolated", "alpha is not an automorphism");
  if (z < 0 || z >= k.order()) fail("PreconditionViolated", "z out of range");
  if (k.element_order(z) != 2)
    fail("PreconditionViolated", "z must be an involution");
  for (int x = 0; x < k.order(); ++x)
    if (k.mul(z, x) != k.mul(x, z))
      fail("PreconditionViolated", "z is not central");
  if (alpha[z] != z) fail("PreconditionViolated", "alpha must fix z");
  for (int x = 0; x < k.order(); ++x)
    if (alpha[alpha[x]] != x)
      fail("PreconditionViolated", "alpha must square to the identity");
  int kk = k.order(), total = 2 * kk;
  std::vector<int> flat((size_t)total * total);
  auto id_of = [&](int x, int e) { return e * kk + x; };
  for (int e1 = 0; e1 < 2; ++e1)
    for (int k1 = 0; k1 < kk; ++k1)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int k2 = 0; k2 < kk; ++k2) {
          int x = e1 ? k.mul(k1, alpha[k2]) : k.mul(k1, k2);
          if (e1 && e2) x = k.mul(x, z);
          flat[(size_t)id_of(k1, e1) * total + id_of(k2, e2)] = id_of(x, (e1 + e2) % 2);
        }
  return group_from_table(flat, total);
}

// --- 2-group shapes ---------------------------------------------------------

enum class TwoGroupShape { cyclic, quaternionic, other };

inline const char* to_string(TwoGroupShape s) {
  switch (s) {
    case TwoGroupShape::cyclic: return "cyclic";
    case TwoGroupShape::quaternionic: return "quaternionic";
    default: return "other";
  }
}

// Quaternionic means |G| = 2^m >= 8 with a cyclic index-2 subgroup <x> and an
// element y outside it with y^2 the involution of <x> and y inverting <x>.
inline TwoGroupShape shape_of_2group(const Group& g) {
  int n = g.order();
  for (int m = n; m > 1; m /= 2)
    if (m % 2 != 0) fail("BadParameter", "group order is not a power of 2");
  for (int i = 0; i < n; ++i)
    if (g.element_order(i) == n) return TwoGroupShape::cyclic;
  if (n < 8) return TwoGroupShape::other;
  for (int x = 0; x < n; ++x) {
    if (g.element_order(x) != n / 2) continue;
    int invol = g.power(x, n / 4);  // the involution of <x>
    SubgroupRef cx = subgroup_generated(g, {x});
    for (int y = 0; y < n; ++y) {
      if (cx.contains(y)) continue;
      if (g.mul(y, y) == invol && g.conjugate(y, x) == g.inverse(x))
        return TwoGroupShape::quaternionic;
    }
    return TwoGroupShape::other;  // all index-2 cyclic subgroups are equivalent here
  }
  return TwoGroupShape::other;
}

// Checks the order-4n presentation <x,y | x^{2n}=1, y x y^-1 = x^-1, y^2 = x^n>
// by witness search.  Covers Z/4 (n=1) and the quaternion groups (n a power of 2).
inline bool is_binary_dihedral(const Group& g) {
  int m = g.order();
  if (m % 4 != 0) return false;
  int n = m / 4;
  for (int x = 0; x < m; ++x) {
    if (g.element_order(x) != 2 * n) continue;
    SubgroupRef cx = subgroup_generated(g, {x});
    int xn = g.power(x, n);
    for (int y = 0; y < m; ++y) {
      if (cx.contains(y)) continue;
      if (g.mul(y, y) == xn && g.conjugate(y, x) == g.inverse(x)) return true;
    }
  }
  return false;
}

// --- class equation solver --------------------------------------------------

// Half-orders of the maximal cyclic subgroups and half the group order for a
// group partitioned by maximal cyclic subgroups sharing only the center:
// 1/c1 + 1/c2 + 1/c3 = 1 + 2/g, exact over the rationals.
struct ClassEquationSolution {
  int c1, c2, c3;
  int g;
};

inline bool class_equation_holds(const ClassEquationSolution& s) {
  // multiply out: g*(c2 c3 + c1 c3 + c1 c2) == c1 c2 c3 * (g + 2)
  long long c1 = s.c1, c2 = s.c2, c3 = s.c3, g = s.g;
  return g * (c2 * c3 + c1 * c3 + c1 * c2) == c1 * c2 * c3 * (g + 2);
}

// Exact rational search.  The c_i are ordered so that c_i is divisible by the
// i-th smallest prime in play; in particular c_1 is even and c_i is at least
// the i-th prime (2, 3, 5).
inline std::vector<ClassEquationSolution> solve_class_equation(int max_g) {
  if (max_g < 2) fail("BadParameter", "max_g must be at least 2");
  std::vector<ClassEquationSolution> out;
  // The sum must exceed 1, which bounds each loop: 3/c1 > 1, then
  // 1/c2 + 1/c3 > 1 - 1/c1 gives 2/c2 > (c1-1)/c1, and finally
  // 1/c3 > 1 - 1/c1 - 1/c2.  All comparisons in exact integer arithmetic.
  for (int c1 = 2; 3 > c1; c1 += 2) {
    for (int c2 = std::max(c1, 3); 2LL * c1 > (long long)c2 * (c1 - 1); ++c2) {
      for (int c3 = std::max(c2, 5); ; ++c3) {
        long long den = (long long)c1 * c2 * c3;
        long long num = (long long)c2 * c3 + (long long)c1 * c3 +
                        (long long)c1 * c2 - den;  // (sum - 1) * c1*c2*c3
        if (num <= 0) break;  // sum <= 1, and it only shrinks as c3 grows
        if ((2 * den) % num == 0) {
          long long g = 2 * den / num;
          if (g >= 2 && g <= max_g) {
            ClassEquationSolution s{c1, c2, c3, (int)g};
            if (!class_equation_holds(s))
              fail("InternalConsistency", "class equation identity failed");
            out.push_back(s);
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.c1, a.c2, a.c3, a.g) < std::tie(b.c1, b.c2, b.c3, b.g);
  });
  return out;
}

}  // namespace spaceform

#endif  // SPACEFORM_OPS_HPP_
