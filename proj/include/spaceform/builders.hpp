// Constructors for the named groups (cyclic, quaternion, binary dihedral,
// SL(2,3), SL(2,5)), the tuple-driven group builder, and the irredundant
// tuple enumerator.
//
// Every construction numbers elements canonically (identity 0, lexicographic
// on structured coordinates), so identical inputs give byte-identical tables.

#ifndef SPACEFORM_BUILDERS_HPP_
#define SPACEFORM_BUILDERS_HPP_

#include "iso.hpp"
#include "tuple.hpp"

namespace spaceform {

inline Group cyclic(int n) {
  if (n < 1) fail("BadParameter", "cyclic group order must be positive");
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[(size_t)i * n + j] = (i + j) % n;
  return group_from_table(flat, n);
}

// <x, y | x^{2n} = 1, y x y^-1 = x^-1, y^2 = x^n> of order 4n.
// Element x^i y^e gets id e*2n + i.
inline Group binary_dihedral(int order4n) {
  if (order4n < 4 || order4n % 4 != 0)
    fail("BadParameter", "binary dihedral order must be a positive multiple of 4");
  int n = order4n / 4, m = 2 * n;
  auto id_of = [&](int i, int e) { return e * m + i; };
  std::vector<int> flat((size_t)order4n * order4n);
  for (int e1 = 0; e1 < 2; ++e1)
    for (int i = 0; i < m; ++i)
      for (int e2 = 0; e2 < 2; ++e2)
        for (int j = 0; j < m; ++j) {
          int i2 = e1 ? (i - j + m) % m : (i + j) % m;  // y x^j = x^-j y
          if (e1 && e2) i2 = (i2 + n) % m;              // y^2 = x^n
          flat[(size_t)id_of(i, e1) * order4n + id_of(j, e2)] = id_of(i2, (e1 + e2) % 2);
        }
  return group_from_table(flat, order4n);
}

inline Group quaternion(int t) {
  if (t < 8 || !is_power_of(t, 2))
    fail("BadParameter", "quaternion group order must be a power of 2, at least 8");
  return binary_dihedral(t);
}

// SL(2,p) for small p: matrices (a,b,c,d) with ad-bc = 1, identity first and
// the rest in lexicographic order.
inline Group special_linear_2(int p) {
  std::vector<std::array<int, 4>> mats;
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int d = 0; d < p; ++d)
          if ((a * d - b * c) % p == (1 % p) || ((a * d - b * c) % p + p) % p == 1 % p)
            mats.push_back({a, b, c, d});
  std::array<int, 4> ident{1, 0, 0, 1};
  std::stable_partition(mats.begin(), mats.end(),
                        [&](const auto& m) { return m == ident; });
  std::map<std::array<int, 4>, int> index;
  for (int i = 0; i < (int)mats.size(); ++i) index[mats[i]] = i;
  int n = (int)mats.size();
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto &x = mats[i], &y = mats[j];
      std::array<int, 4> z{(x[0] * y[0] + x[1] * y[2]) % p, (x[0] * y[1] + x[1] * y[3]) % p,
                           (x[2] * y[0] + x[3] * y[2]) % p, (x[2] * y[1] + x[3] * y[3]) % p};
      flat[(size_t)i * n + j] = index.at(z);
    }
  return group_from_table(flat, n);
}

inline Group sl2_3() { return special_linear_2(3); }
inline Group sl2_5() { return special_linear_2(5); }

// --- structured groups -------------------------------------------------------

// A built group together with its tuple and the witness subgroups realizing
// the structure (A, B, and whichever of T, Q8, Theta, Phi, 2A5 exist).
struct StructuredGroup {
  Group group;
  SpaceFormTuple tuple;
  std::vector<std::pair<std::string, std::vector<int>>> witnesses;

  bool has_witness(const std::string& name) const {
    for (const auto& [k, v] : witnesses)
      if (k == name) return true;
    return false;
  }
  SubgroupRef witness(const std::string& name) const {
    for (const auto& [k, v] : witnesses)
      if (k == name) return make_subgroup(group, v);
    fail("BadParameter", "no witness named " + name);
  }
};

// Searches for an order-2 automorphism that is not inner and satisfies the
// given predicate; deterministic least-image-first.  For abelian groups the
// inner automorphisms are trivial, so e.g. inversion qualifies.
inline Automorphism find_outer_involution(
    const Group& g,
    const std::function<bool(const Automorphism&)>& constraint = {}) {
  auto inn = inner_automorphisms(g);
  Automorphism found;
  detail::search_isomorphisms(g, g, [&](const Automorphism& a) {
    for (int x = 0; x < g.order(); ++x)
      if (a[a[x]] != x) return false;
    if (a == inner_automorphism(g, 0)) return false;  // identity map
    if (inn.count(a)) return false;
    if (constraint && !constraint(a)) return false;
    found = a;
    return true;
  });
  if (found.empty())
    fail("NotFound", "no outer involution satisfies the constraints");
  return found;
}

namespace detail {

inline int least_generator(const UnitSubgroup& s) {
  if (s.modulus == 1) return 0;
  for (int r : s.residues)
    if (residue_order(r, s.modulus) == s.order()) return r;
  fail("InternalConsistency", "subgroup is not cyclic");
}

// elements of order dividing m; the unique subgroup of order m when m and
// |s|/m are coprime
inline UnitSubgroup subgroup_of_order(const UnitSubgroup& s, int m) {
  if (s.modulus == 1) return s;
  std::vector<int> res;
  for (int r : s.residues)
    if (m % residue_order(r, s.modulus) == 0) res.push_back(r);
  if ((int)res.size() != m)
    fail("InternalConsistency", "expected a unique subgroup of order " + std::to_string(m));
  UnitSubgroup out;
  out.modulus = s.modulus;
  out.residues = std::move(res);
  return out;
}

inline int unit_mul(int a, int u, int v) {
  if (a == 1) return 0;
  return (int)((long long)u * v % a);
}

inline int unit_pow(int a, int u, long long e) {
  if (a == 1) return 0;
  long long r = 1, base = u % a;
  e %= residue_order(u, a);
  while (e > 0) {
    if (e & 1) r = r * base % a;
    base = base * base % a;
    e >>= 1;
  }
  return (int)r;
}

inline Automorphism power_map(int a, int u) {
  if (a == 1) return {0};
  Automorphism m(a);
  for (int x = 0; x < a; ++x) m[x] = (int)((long long)u * x % a);
  return m;
}

// automorphism of Q8 (in binary_dihedral(8) numbering) from generator images
inline Automorphism q8_automorphism_from_images(const Group& q8, int img_x, int img_y) {
  Automorphism m(8, -1);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < 4; ++i) {
      int v = 0;
      for (int k = 0; k < i; ++k) v = q8.mul(v, img_x);
      if (e) v = q8.mul(v, img_y);
      m[e * 4 + i] = v;
    }
  if (!is_automorphism(q8, m))
    fail("InternalConsistency", "generator images do not define an automorphism of Q8");
  return m;
}

}  // namespace detail

// Builds the group described by a valid tuple, with witnesses.
inline StructuredGroup build_tuple(const SpaceFormTuple& tu) {
  {
    auto violations = validate_tuple(tu);
    if (!violations.empty()) {
      std::string msg = "invalid tuple " + format_tuple(tu) + ":";
      for (const auto& s : violations) msg += " " + s + ";";
      fail("InvalidTuple", msg);
    }
  }
  const int a = tu.a, b = tu.b;
  int bbar = tuple_bbar(tu);
  Group A = cyclic(a), B = cyclic(b);
  UnitSubgroup bsub = detail::subgroup_of_order(tu.gbar, bbar);
  int u = detail::least_generator(bsub);  // B's generator acts by the u-th power map

  StructuredGroup out;
  out.tuple = tu;
  auto wit = [&](const std::string& name, std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    out.witnesses.emplace_back(name, std::move(ids));
  };

  switch (tu.type) {
    case TupleType::I: {
      int t = tu.t, tbar = tuple_tbar(tu);
      Group T = cyclic(t);
      UnitSubgroup tsub = detail::subgroup_of_order(tu.gbar, tbar);
      int v = detail::least_generator(tsub);
      Group H = direct_product(B, T);  // (jb, jt) -> jt*b + jb
      std::vector<Automorphism> action(H.order());
      for (int jt = 0; jt < t; ++jt)
        for (int jb = 0; jb < b; ++jb)
          action[jt * b + jb] = detail::power_map(
              a, detail::unit_mul(a, detail::unit_pow(a, u, jb), detail::unit_pow(a, v, jt)));
      out.group = semidirect_product(A, H, action);
      std::vector<int> wa, wb, wt;
      for (int x = 0; x < a; ++x) wa.push_back(x);
      for (int jb = 0; jb < b; ++jb) wb.push_back(jb * a);
      for (int jt = 0; jt < t; ++jt) wt.push_back(jt * b * a);
      wit("A", wa);
      wit("B", wb);
      wit("T", wt);
      break;
    }
    case TupleType::II: {
      int t = tu.t;
      Group T = quaternion(t);  // (i, e) -> e*(t/2) + i
      UnitSubgroup tpart = two_part_subgroup(tu.gbar);
      // images of x and y in (Z/a)*: lexicographically least pair generating
      // the 2-part of Gbar, with x forced onto the 2-part of Gbar0 when t > 8
      int ux = -1, uy = -1;
      std::optional<int> forced_ux;
      if (t >= 16) {
        UnitSubgroup p0 = two_part_subgroup(*tu.gbar0);
        forced_ux = p0.order() == 2 ? p0.residues.back() : p0.identity();
      }
      for (int cx : tpart.residues) {
        if (forced_ux && cx != *forced_ux) continue;
        for (int cy : tpart.residues) {
          if (generated_unit_subgroup(a, {cx, cy}).order() == tpart.order()) {
            ux = cx;
            uy = cy;
            break;
          }
        }
        if (ux >= 0) break;
      }
      if (ux < 0) fail("InternalConsistency", "no surjection onto the 2-part of Gbar");
      int half = t / 2;
      Group H = direct_product(B, T);  // (jb, kt) -> kt*b + jb
      std::vector<Automorphism> action(H.order());
      for (int e = 0; e < 2; ++e)
        for (int i = 0; i < half; ++i)
          for (int jb = 0; jb < b; ++jb) {
            int w = detail::unit_mul(a, detail::unit_pow(a, ux, i),
                                     detail::unit_pow(a, uy, e));
            action[(e * half + i) * b + jb] =
                detail::power_map(a, detail::unit_mul(a, detail::unit_pow(a, u, jb), w));
          }
      out.group = semidirect_product(A, H, action);
      std::vector<int> wa, wb, wt;
      for (int x = 0; x < a; ++x) wa.push_back(x);
      for (int jb = 0; jb < b; ++jb) wb.push_back(jb * a);
      for (int kt = 0; kt < t; ++kt) wt.push_back(kt * b * a);
      wit("A", wa);
      wit("B", wb);
      wit("T", wt);
      break;
    }
    case TupleType::III:
    case TupleType::IV: {
      int theta = tu.theta;
      int thetabar = tu.type == TupleType::III ? tuple_thetabar(tu) : 1;
      Group Q8 = quaternion(8);
      // sigma: the 3-cycle x -> y -> xy of the three order-4 axes
      Automorphism sigma = detail::q8_automorphism_from_images(Q8, /*x->*/ 4, /*y->*/ 5);
      Group Theta = cyclic(theta);
      UnitSubgroup thsub = detail::subgroup_of_order(tu.gbar, thetabar);
      int w = detail::least_generator(thsub);
      Group N = direct_product(Q8, A);   // (q, xa) -> xa*8 + q
      Group H = direct_product(B, Theta);  // (jb, jt) -> jt*b + jb
      std::vector<Automorphism> action(H.order());
      for (int jt = 0; jt < theta; ++jt)
        for (int jb = 0; jb < b; ++jb) {
          Automorphism s(N.order());
          Automorphism qmap(8);
          std::iota(qmap.begin(), qmap.end(), 0);
          for (int k = 0; k < jt % 3; ++k) qmap = compose(sigma, qmap);
          int e = detail::unit_mul(a, detail::unit_pow(a, u, jb),
                                   detail::unit_pow(a, w, jt));
          for (int xa = 0; xa < a; ++xa)
            for (int q = 0; q < 8; ++q)
              s[xa * 8 + q] = (a == 1 ? 0 : (int)((long long)e * xa % a)) * 8 + qmap[q];
          action[jt * b + jb] = std::move(s);
        }
      Group J = semidirect_product(N, H, action);
      std::vector<int> wq, wa, wb, wth;
      for (int q = 0; q < 8; ++q) wq.push_back(q);
      for (int xa = 0; xa < a; ++xa) wa.push_back(xa * 8);
      for (int jb = 0; jb < b; ++jb) wb.push_back(jb * 8 * a);
      for (int jt = 0; jt < theta; ++jt) wth.push_back(jt * b * 8 * a);
      if (tu.type == TupleType::III) {
        out.group = J;
        wit("Q8", wq);
        wit("A", wa);
        wit("B", wb);
        wit("Theta", wth);
        break;
      }
      // type IV: adjoin phi inverting Theta, acting on Q8 by an involution
      // that inverts sigma exactly (least such in Aut(Q8)), and on A by the
      // involution of Gbar if any
      Automorphism sigma_inv = compose(sigma, sigma);
      Automorphism tau;
      for (const Automorphism& cand : all_automorphisms(Q8)) {
        bool involutive = true;
        for (int q = 0; q < 8 && involutive; ++q)
          if (cand[cand[q]] != q) involutive = false;
        if (!involutive) continue;
        if (compose(cand, compose(sigma, cand)) == sigma_inv) {
          tau = cand;
          break;
        }
      }
      if (tau.empty())
        fail("InternalConsistency", "no involution of Q8 inverts the 3-cycle");
      UnitSubgroup tpart = two_part_subgroup(tu.gbar);
      int w2 = tpart.order() == 2 ? tpart.residues.back() : tpart.identity();
      Automorphism alpha(J.order());
      for (int jt = 0; jt < theta; ++jt)
        for (int jb = 0; jb < b; ++jb)
          for (int xa = 0; xa < a; ++xa)
            for (int q = 0; q < 8; ++q) {
              int id = (jt * b + jb) * 8 * a + xa * 8 + q;
              int xa2 = a == 1 ? 0 : (int)((long long)w2 * xa % a);
              int jt2 = (theta - jt) % theta;
              alpha[id] = (jt2 * b + jb) * 8 * a + xa2 * 8 + tau[q];
            }
      int z = 2;  // x^2 in Q8 coordinates, the central involution
      out.group = adjoin_order4(J, alpha, z);
      int nj = J.order();
      wit("Q8", wq);
      wit("A", wa);
      wit("B", wb);
      wit("Theta", wth);
      wit("Phi", {0, z, nj, nj + z});
      break;
    }
    case TupleType::V:
    case TupleType::VI: {
      Group F = sl2_5();
      std::vector<Automorphism> baction(b);
      for (int jb = 0; jb < b; ++jb)
        baction[jb] = detail::power_map(a, detail::unit_pow(a, u, jb));
      Group AB = semidirect_product(A, B, baction);  // (xa, jb) -> jb*a + xa
      Group K = direct_product(AB, F);               // (nab, qf) -> qf*|AB| + nab
      int nab = AB.order();
      std::vector<int> w5, wa, wb;
      for (int qf = 0; qf < 120; ++qf) w5.push_back(qf * nab);
      for (int xa = 0; xa < a; ++xa) wa.push_back(xa);
      for (int jb = 0; jb < b; ++jb) wb.push_back(jb * a);
      if (tu.type == TupleType::V) {
        out.group = K;
        wit("2A5", w5);
        wit("A", wa);
        wit("B", wb);
        break;
      }
      // type VI: adjoin phi acting on 2A5 by an outer involution, on A by the
      // involution of Gbar if any, fixing B
      Automorphism alpha5 = find_outer_involution(F);
      UnitSubgroup tpart = two_part_subgroup(tu.gbar);
      int w2 = tpart.order() == 2 ? tpart.residues.back() : tpart.identity();
      int z5 = -1;
      for (int qf = 1; qf < 120; ++qf)
        if (F.element_order(qf) == 2) z5 = qf;
      Automorphism alpha(K.order());
      for (int qf = 0; qf < 120; ++qf)
        for (int jb = 0; jb < b; ++jb)
          for (int xa = 0; xa < a; ++xa) {
            int xa2 = a == 1 ? 0 : (int)((long long)w2 * xa % a);
            alpha[qf * nab + jb * a + xa] = alpha5[qf] * nab + jb * a + xa2;
          }
      int z = z5 * nab;
      out.group = adjoin_order4(K, alpha, z);
      wit("2A5", w5);
      wit("A", wa);
      wit("B", wb);
      wit("Phi", {0, z, K.order(), K.order() + z});
      break;
    }
  }

  // witness sanity: orders match the tuple, A is normal, key relations hold
  auto check = [&](bool ok, const std::string& what) {
    if (!ok) fail("InternalConsistency", "witness check failed: " + what);
  };
  check(out.group.order() == tu.g, "group order equals g");
  SubgroupRef wA = out.witness("A"), wB = out.witness("B");
  check(wA.order() == tu.a && wB.order() == tu.b, "|A| = a and |B| = b");
  check(is_normal(out.group, wA), "A is normal");
  if (out.has_witness("T")) {
    SubgroupRef wT = out.witness("T");
    check(wT.order() == tu.t, "|T| = t");
    if (tu.type == TupleType::I && tu.t > 1) {
      int invol = -1;
      for (int x : wT.elements)
        if (out.group.element_order(x) == 2) invol = x;
      check(invol >= 0, "T has an involution");
      for (int x : wA.elements)
        check(out.group.conjugate(invol, x) == x, "T's involution fixes A pointwise");
    }
  }
  if (out.has_witness("Theta"))
    check(out.witness("Theta").order() == tu.theta, "|Theta| = theta");
  if (out.has_witness("Q8")) check(out.witness("Q8").order() == 8, "|Q8| = 8");
  if (out.has_witness("2A5")) check(out.witness("2A5").order() == 120, "|2A5| = 120");
  if (out.has_witness("Phi")) {
    SubgroupRef wP = out.witness("Phi");
    check(wP.order() == 4, "|Phi| = 4");
    for (int x : wB.elements)
      for (int y : wP.elements)
        check(out.group.mul(x, y) == out.group.mul(y, x), "Phi centralizes B");
  }
  return out;
}

// --- irredundant enumeration --------------------------------------------------

namespace detail {

inline void gen_b_values(const std::vector<int>& primes, size_t idx, long long cur,
                         long long bound, std::vector<int>& out) {
  if (idx == primes.size()) {
    out.push_back((int)cur);
    return;
  }
  for (long long v = cur * primes[idx]; v <= bound; v *= primes[idx])
    gen_b_values(primes, idx + 1, v, bound, out);
}

// all b with b = bbar * (nontrivial powers of each prime of bbar), b <= bound
inline std::vector<int> b_values(int bbar, long long bound) {
  std::vector<int> out;
  if (bbar > bound) return out;
  auto primes = prime_factors(bbar);
  gen_b_values(primes, 0, bbar, bound, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// Every valid tuple with g <= max_order, each exactly once, sorted by
// (g, type, a, Gbar, Gbar0, b, t, theta).
inline std::vector<SpaceFormTuple> enumerate_tuples(int max_order) {
  if (max_order < 1) fail("BadParameter", "max_order must be positive");
  std::vector<SpaceFormTuple> out;
  auto push = [&](SpaceFormTuple tu) { out.push_back(std::move(tu)); };

  for (int a = 1; a <= max_order; a += 2) {
    UnitGroup units = unit_group(a);
    std::vector<UnitSubgroup> subs = all_subgroups(units);
    // types I and II
    for (const auto& gb : subs) {
      if (admissible(gb, TupleType::I, a)) {
        GbarProfile p = profile(gb);
        int bbar = p.odd_part_order, tbar = p.two_part_order;
        for (int b : detail::b_values(bbar, max_order / a)) {
          for (long long t = 1; (long long)a * b * t <= max_order; t *= 2) {
            if (tbar != 1 && t <= tbar) continue;
            SpaceFormTuple tu;
            tu.type = TupleType::I;
            tu.a = a;
            tu.gbar = gb;
            tu.b = b;
            tu.t = (int)t;
            tu.g = (int)((long long)a * b * t);
            push(tu);
          }
        }
      }
      if (admissible(gb, TupleType::II, a)) {
        GbarProfile p = profile(gb);
        int bbar = p.odd_part_order, tbar = p.two_part_order;
        UnitSubgroup odd = odd_part_subgroup(gb);
        for (int b : detail::b_values(bbar, max_order / (8LL * a))) {
          for (long long t = 8; (long long)a * b * t <= max_order; t *= 2) {
            SpaceFormTuple tu;
            tu.type = TupleType::II;
            tu.a = a;
            tu.gbar = gb;
            tu.b = b;
            tu.t = (int)t;
            tu.g = (int)((long long)a * b * t);
            if (t == 8) {
              push(tu);
              continue;
            }
            // enumerate the admissible Gbar0
            std::vector<UnitSubgroup> choices;
            if (tbar == 4) {
              UnitSubgroup tpart = two_part_subgroup(gb);
              for (int r : tpart.residues)
                if (r != tpart.identity()) {
                  std::vector<int> gens = odd.residues;
                  gens.push_back(r);
                  choices.push_back(a == 1 ? trivial_unit_subgroup(1)
                                           : generated_unit_subgroup(a, gens));
                }
            } else if (tbar == 2) {
              choices.push_back(gb);
              choices.push_back(odd);
            } else {
              choices.push_back(gb);
            }
            for (auto& g0 : choices) {
              tu.gbar0 = g0;
              push(tu);
            }
          }
        }
      }
    }
  }
  // types III and IV
  for (int a = 1; 24LL * a <= max_order; ++a) {
    if (std::gcd(a, 6) != 1) continue;
    UnitGroup units = unit_group(a);
    for (const auto& gb : all_subgroups(units)) {
      if (admissible(gb, TupleType::III, a)) {
        GbarProfile p = profile(gb);
        int thetabar = p.three_part_order, bbar = p.order / thetabar;
        for (int b : detail::b_values(bbar, max_order / (24LL * a)))
          for (long long th = 3; 8LL * a * b * th <= max_order; th *= 3) {
            if (th <= thetabar) continue;
            SpaceFormTuple tu;
            tu.type = TupleType::III;
            tu.a = a;
            tu.gbar = gb;
            tu.b = b;
            tu.theta = (int)th;
            tu.g = (int)(8LL * a * b * th);
            push(tu);
          }
      }
      if (48LL * a <= max_order && admissible(gb, TupleType::IV, a)) {
        GbarProfile p = profile(gb);
        int bbar = p.odd_part_order;
        for (int b : detail::b_values(bbar, max_order / (48LL * a)))
          for (long long th = 3; 16LL * a * b * th <= max_order; th *= 3) {
            SpaceFormTuple tu;
            tu.type = TupleType::IV;
            tu.a = a;
            tu.gbar = gb;
            tu.b = b;
            tu.theta = (int)th;
            tu.g = (int)(16LL * a * b * th);
            push(tu);
          }
      }
    }
  }
  // types V and VI
  for (int a = 1; 120LL * a <= max_order; ++a) {
    if (std::gcd(a, 30) != 1) continue;
    UnitGroup units = unit_group(a);
    for (const auto& gb : all_subgroups(units)) {
      if (admissible(gb, TupleType::V, a)) {
        int bbar = profile(gb).odd_part_order;
        for (int b : detail::b_values(bbar, max_order / (120LL * a))) {
          SpaceFormTuple tu;
          tu.type = TupleType::V;
          tu.a = a;
          tu.gbar = gb;
          tu.b = b;
          tu.g = (int)(120LL * a * b);
          push(tu);
        }
      }
      if (240LL * a <= max_order && admissible(gb, TupleType::VI, a)) {
        int bbar = profile(gb).odd_part_order;
        for (int b : detail::b_values(bbar, max_order / (240LL * a))) {
          SpaceFormTuple tu;
          tu.type = TupleType::VI;
          tu.a = a;
          tu.gbar = gb;
          tu.b = b;
          tu.g = (int)(240LL * a * b);
          push(tu);
        }
      }
    }
  }

  for (const auto& tu : out)
    if (!tuple_valid(tu))
      fail("InternalConsistency", "enumerated an invalid tuple: " + format_tuple(tu));
  std::sort(out.begin(), out.end(), [](const SpaceFormTuple& x, const SpaceFormTuple& y) {
    auto key = [](const SpaceFormTuple& tu) {
      return std::make_tuple(tu.g, (int)tu.type, tu.a, tu.gbar.residues,
                             tu.gbar0 ? tu.gbar0->residues : std::vector<int>{}, tu.b,
                             tu.t, tu.theta);
    };
    return key(x) < key(y);
  });
  return out;
}

}  // namespace spaceform

#endif  // SPACEFORM_BUILDERS_HPP_
