// Classification of an arbitrary finite group: necessary-condition tests,
// the metacyclic decomposition, and the full pipeline that either extracts
// the canonical invariant tuple or rejects with a machine-readable reason
// and witness elements.

#ifndef SPACEFORM_RECOGNITION_HPP_
#define SPACEFORM_RECOGNITION_HPP_

#include "builders.hpp"

namespace spaceform {

struct Rejection {
  std::string code;    // multiple_involutions | noncyclic_pq | noncyclic_odd_sylow |
                       // bad_2_sylow | quotient_shape | structure_conditions
  std::string detail;
  std::vector<int> witnesses;
};

struct ClassificationResult {
  std::optional<SpaceFormTuple> tuple;
  std::vector<std::pair<std::string, std::vector<int>>> witnesses;
  std::optional<Rejection> rejection;

  bool accepted() const { return tuple.has_value(); }
};

namespace detail {

// closure that gives up once it exceeds `cap` elements
inline std::optional<std::vector<int>> closure_capped(const Group& g,
                                                      const std::vector<int>& gens,
                                                      int cap) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0}, work;
  in[0] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    std::vector<int> snapshot = members;
    for (int y : snapshot)
      for (int z : {g.mul(x, y), g.mul(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push_back(z);
          if ((int)members.size() > cap) return std::nullopt;
        }
      }
  }
  std::sort(members.begin(), members.end());
  return members;
}

inline std::vector<int> intersect_sorted(const std::vector<int>& a,
                                         const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline const Group& ref_sl2_3() {
  static const Group g = sl2_3();
  return g;
}
inline const Group& ref_sl2_5() {
  static const Group g = sl2_5();
  return g;
}

inline bool subgroup_is_cyclic(const Group& g, const SubgroupRef& s) {
  for (int x : s.elements)
    if (g.element_order(x) == s.order()) return true;
  return s.order() == 1;
}

}  // namespace detail

// Necessary conditions for a free action, checked in order: at most one
// involution; every subgroup of order pq (p, q prime) cyclic, via commuting
// prime-order pairs and a Cauchy-pair scan; odd Sylow subgroups cyclic;
// Sylow 2-subgroup cyclic or quaternionic.  First failure wins.
inline std::optional<Rejection> necessary_conditions(const Group& g) {
  std::vector<int> involutions;
  for (int x = 1; x < g.order(); ++x)
    if (g.element_order(x) == 2) involutions.push_back(x);
  if (involutions.size() > 1) {
    std::string ids;
    for (int x : involutions) ids += (ids.empty() ? "" : ", ") + std::to_string(x);
    return Rejection{"multiple_involutions",
                     std::to_string(involutions.size()) + " involutions: ids " + ids,
                     involutions};
  }

  std::vector<int> primes;
  for (int x = 1; x < g.order(); ++x) {
    int k = g.element_order(x);
    if (prime_factors(k).size() == 1 && prime_factors(k)[0] == k) primes.push_back(x);
  }
  for (size_t i = 0; i < primes.size(); ++i)
    for (size_t j = i + 1; j < primes.size(); ++j) {
      int x = primes[i], y = primes[j];
      int p = g.element_order(x), q = g.element_order(y);
      bool commute = g.mul(x, y) == g.mul(y, x);
      if (commute && p == q) {
        SubgroupRef cx = subgroup_generated(g, {x});
        if (!cx.contains(y))
          return Rejection{"noncyclic_pq",
                           "noncyclic subgroup of order " + std::to_string(p * q) +
                               ": generated by ids " + std::to_string(x) + ", " +
                               std::to_string(y),
                           {x, y}};
      } else if (!commute && p != q) {
        auto closed = detail::closure_capped(g, {x, y}, p * q);
        if (closed && (int)closed->size() == p * q)
          return Rejection{"noncyclic_pq",
                           "noncyclic subgroup of order " + std::to_string(p * q) +
                               ": generated by ids " + std::to_string(x) + ", " +
                               std::to_string(y),
                           {x, y}};
      }
    }

  for (int p : prime_factors(g.order())) {
    SubgroupRef syl = sylow_subgroup(g, p);
    if (p == 2) {
      auto [s2, ids] = subgroup_group(syl);
      TwoGroupShape shape = shape_of_2group(s2);
      if (shape == TwoGroupShape::other)
        return Rejection{"bad_2_sylow",
                         "Sylow 2-subgroup of order " + std::to_string(syl.order()) +
                             " is neither cyclic nor quaternionic",
                         syl.elements};
    } else if (!detail::subgroup_is_cyclic(g, syl)) {
      return Rejection{"noncyclic_odd_sylow",
                       "Sylow " + std::to_string(p) + "-subgroup of order " +
                           std::to_string(syl.order()) + " is not cyclic",
                       syl.elements};
    }
  }
  return std::nullopt;
}

// --- metacyclic decomposition -------------------------------------------------

// H = A : B with A, H/A cyclic of coprime orders and every nontrivial Sylow
// subgroup of B acting nontrivially on A.  A is generated by H' and the
// central Sylow subgroups; B is the least cyclic complement.
struct MetacyclicDecomposition {
  SubgroupRef A;
  SubgroupRef B;
  std::vector<std::pair<int, int>> action;  // (B element id, power-map exponent on A)
};

inline MetacyclicDecomposition metacyclic_decompose(const Group& h) {
  for (int p : prime_factors(h.order()))
    if (!detail::subgroup_is_cyclic(h, sylow_subgroup(h, p)))
      fail("NonCyclicSylow", "Sylow " + std::to_string(p) + "-subgroup is not cyclic");

  SubgroupRef zc = center(h);
  std::vector<int> gens = derived_subgroup(h).elements;
  for (int p : prime_factors(h.order())) {
    SubgroupRef syl = sylow_subgroup(h, p);
    bool central = true;
    for (int x : syl.elements)
      if (!zc.contains(x)) {
        central = false;
        break;
      }
    if (central) gens.insert(gens.end(), syl.elements.begin(), syl.elements.end());
  }
  SubgroupRef A = subgroup_generated(h, gens);
  int index = h.order() / A.order();
  SubgroupRef B = trivial_subgroup(h);
  if (index > 1) {
    bool found = false;
    for (int x = 1; x < h.order() && !found; ++x) {
      if (h.element_order(x) != index) continue;
      SubgroupRef cand = subgroup_generated(h, {x});
      if (detail::intersect_sorted(cand.elements, A.elements).size() == 1) {
        B = cand;
        found = true;
      }
    }
    if (!found) fail("InternalConsistency", "no cyclic complement found");
  }

  MetacyclicDecomposition out{A, B, {}};
  int a = A.order();
  if (a == 1) {
    for (int x : B.elements) out.action.emplace_back(x, 0);
    return out;
  }
  int gen = -1;
  for (int x : A.elements)
    if (h.element_order(x) == a) {
      gen = x;
      break;
    }
  std::vector<int> exp_of(h.order(), -1);
  int cur = 0;
  for (int e = 0; e < a; ++e) {
    exp_of[cur] = e;
    cur = h.mul(cur, gen);
  }
  for (int x : B.elements) {
    int img = h.conjugate(x, gen);
    if (exp_of[img] < 0) fail("InternalConsistency", "A is not normal");
    out.action.emplace_back(x, exp_of[img]);
  }
  return out;
}

// same decomposition computed inside a subgroup, with ids in parent coordinates
inline MetacyclicDecomposition metacyclic_decompose(const SubgroupRef& s) {
  auto [h, back] = subgroup_group(s);
  MetacyclicDecomposition inner = metacyclic_decompose(h);
  auto lift = [&](const SubgroupRef& sub) {
    std::vector<int> ids;
    for (int x : sub.elements) ids.push_back(back[x]);
    std::sort(ids.begin(), ids.end());
    return SubgroupRef{s.parent, std::move(ids)};
  };
  MetacyclicDecomposition out{lift(inner.A), lift(inner.B), {}};
  for (auto [x, e] : inner.action) out.action.emplace_back(back[x], e);
  return out;
}

// --- the classification pipeline ----------------------------------------------

struct ClassifyOptions {
  bool paranoid = false;  // rebuild from the tuple and confirm isomorphism
  int iso_cap = 1024;
};

namespace detail {

// last term of the derived series
inline SubgroupRef perfect_core(const Group& g) {
  SubgroupRef cur = whole_group(g);
  for (;;) {
    auto [sub, back] = subgroup_group(cur);
    SubgroupRef der = derived_subgroup(sub);
    if (der.order() == cur.order()) return cur;
    std::vector<int> ids;
    for (int x : der.elements) ids.push_back(back[x]);
    std::sort(ids.begin(), ids.end());
    cur = SubgroupRef{g, std::move(ids)};
  }
}

// every subgroup of `within` isomorphic to Q8, as sorted id lists
inline std::vector<std::vector<int>> q8_subgroups(const Group& g,
                                                  const SubgroupRef& within) {
  std::vector<int> fours;
  for (int x : within.elements)
    if (g.element_order(x) == 4) fours.push_back(x);
  std::set<std::vector<int>> seen;
  for (size_t i = 0; i < fours.size(); ++i)
    for (size_t j = i + 1; j < fours.size(); ++j) {
      auto closed = closure_capped(g, {fours[i], fours[j]}, 8);
      if (!closed || closed->size() != 8) continue;
      SubgroupRef s{g, *closed};
      auto [grp, back] = subgroup_group(s);
      if (shape_of_2group(grp) == TwoGroupShape::quaternionic) seen.insert(*closed);
    }
  return {seen.begin(), seen.end()};
}

// image of conjugation on the cyclic normal subgroup A inside (Z/a)*
inline UnitSubgroup conjugation_image(const Group& g, const SubgroupRef& A,
                                      const std::vector<int>& over) {
  int a = A.order();
  if (a == 1) return trivial_unit_subgroup(1);
  int gen = -1;
  for (int x : A.elements)
    if (g.element_order(x) == a) {
      gen = x;
      break;
    }
  if (gen < 0) fail("InternalConsistency", "A is not cyclic");
  std::vector<int> exp_of(g.order(), -1);
  int cur = 0;
  for (int e = 0; e < a; ++e) {
    exp_of[cur] = e;
    cur = g.mul(cur, gen);
  }
  std::set<int> residues;
  for (int x : over) {
    int img = g.conjugate(x, gen);
    if (exp_of[img] < 0) fail("InternalConsistency", "A is not normal");
    residues.insert(exp_of[img]);
  }
  return unit_subgroup(a, std::vector<int>(residues.begin(), residues.end()));
}

}  // namespace detail

inline ClassificationResult classify(const Group& g, const ClassifyOptions& opts = {}) {
  ClassificationResult res;
  if (auto rej = necessary_conditions(g)) {
    res.rejection = rej;
    return res;
  }

  SubgroupRef K = odd_core(g);
  auto [Q, pi] = quotient_group(g, K);
  auto reject = [&](const std::string& code, const std::string& detail) {
    res.rejection = Rejection{code, detail, {}};
    return res;
  };

  TupleType type;
  if (is_power_of(Q.order(), 2)) {
    TwoGroupShape shape = shape_of_2group(Q);
    if (shape == TwoGroupShape::cyclic)
      type = TupleType::I;
    else if (shape == TwoGroupShape::quaternionic)
      type = TupleType::II;
    else
      return reject("quotient_shape", "G/O(G) is a 2-group of unrecognized shape");
  } else if (Q.order() == 24 && is_isomorphic(Q, detail::ref_sl2_3())) {
    type = TupleType::III;
  } else if (Q.order() == 48) {
    SubgroupRef qder = derived_subgroup(Q);
    bool found = false;
    for (const auto& ids : detail::q8_subgroups(Q, sylow_subgroup(Q, 2))) {
      SubgroupRef s{Q, ids};
      bool inside = true;
      for (int x : ids)
        if (!qder.contains(x)) inside = false;
      if (inside && is_normal(Q, s)) found = true;
    }
    if (!found)
      return reject("quotient_shape",
                    "G/O(G) has order 48 but no normal quaternion subgroup of order 8 "
                    "inside its commutator subgroup");
    type = TupleType::IV;
  } else if (Q.order() == 120 && is_isomorphic(Q, detail::ref_sl2_5())) {
    type = TupleType::V;
  } else if (Q.order() == 240) {
    SubgroupRef core = detail::perfect_core(Q);
    if (core.order() != 120)
      return reject("quotient_shape", "G/O(G) has order 240 but no perfect subgroup "
                                      "of order 120");
    auto [cg, back] = subgroup_group(core);
    if (!is_isomorphic(cg, detail::ref_sl2_5()))
      return reject("quotient_shape", "G/O(G) has order 240 but its perfect core is "
                                      "not the binary icosahedral group");
    type = TupleType::VI;
  } else {
    return reject("quotient_shape", "G/O(G) has order " + std::to_string(Q.order()) +
                                        ", which is not a recognized quotient shape");
  }

  // extract A (and friends) per type
  MetacyclicDecomposition dec{trivial_subgroup(g), trivial_subgroup(g), {}};
  std::vector<int> j_ids;        // types III/IV
  SubgroupRef q8n{g, {0}};       // types III/IV: the normal Q8
  SubgroupRef f2a5{g, {0}};      // types V/VI: the normal 2A5
  switch (type) {
    case TupleType::I:
    case TupleType::II:
      dec = metacyclic_decompose(K);
      break;
    case TupleType::V:
    case TupleType::VI: {
      f2a5 = detail::perfect_core(g);
      if (f2a5.order() != 120)
        return reject("structure_conditions", "perfect core has order " +
                                                  std::to_string(f2a5.order()) +
                                                  ", expected 120");
      SubgroupRef cent = centralizer(g, f2a5);
      std::vector<int> gens = f2a5.elements;
      gens.insert(gens.end(), cent.elements.begin(), cent.elements.end());
      SubgroupRef i_sub = subgroup_generated(g, gens);
      auto [ig, back] = subgroup_group(i_sub);
      SubgroupRef oi = odd_core(ig);
      std::vector<int> oi_ids;
      for (int x : oi.elements) oi_ids.push_back(back[x]);
      std::sort(oi_ids.begin(), oi_ids.end());
      dec = metacyclic_decompose(SubgroupRef{g, oi_ids});
      break;
    }
    case TupleType::III:
    case TupleType::IV: {
      auto q8s = detail::q8_subgroups(g, sylow_subgroup(g, 2));
      std::vector<std::vector<int>> normal_q8;
      for (const auto& ids : q8s)
        if (is_normal(g, SubgroupRef{g, ids})) normal_q8.push_back(ids);
      if (normal_q8.size() != 1)
        return reject("structure_conditions",
                      "expected exactly one normal quaternion subgroup of order 8, found " +
                          std::to_string(normal_q8.size()));
      q8n = SubgroupRef{g, normal_q8[0]};
      // the three cyclic order-4 subgroups of Q8; J = elements permuting them evenly
      std::vector<std::vector<int>> axes;
      for (int x : q8n.elements)
        if (g.element_order(x) == 4) {
          auto s = subgroup_generated(g, {x}).elements;
          if (std::find(axes.begin(), axes.end(), s) == axes.end()) axes.push_back(s);
        }
      if (axes.size() != 3)
        fail("InternalConsistency", "Q8 must have three cyclic order-4 subgroups");
      bool saw_3cycle = false;
      for (int x = 0; x < g.order(); ++x) {
        int perm[3];
        for (int i = 0; i < 3; ++i) {
          std::vector<int> img;
          for (int m : axes[i]) img.push_back(g.conjugate(x, m));
          std::sort(img.begin(), img.end());
          auto it = std::find(axes.begin(), axes.end(), img);
          if (it == axes.end())
            fail("InternalConsistency", "conjugation does not permute the axes");
          perm[i] = (int)(it - axes.begin());
        }
        int fixed = 0;
        for (int i = 0; i < 3; ++i)
          if (perm[i] == i) ++fixed;
        bool even = fixed == 3 || fixed == 0;  // identity or 3-cycle
        if (fixed == 0) saw_3cycle = true;
        if (even) j_ids.push_back(x);
      }
      if (!saw_3cycle)
        return reject("structure_conditions",
                      "no element induces a 3-cycle on the order-4 subgroups of Q8");
      SubgroupRef J{g, j_ids};
      std::vector<int> i_gens;
      for (int x : j_ids)
        if (g.element_order(x) % 3 != 0) i_gens.push_back(x);
      SubgroupRef i_sub = subgroup_generated(g, i_gens);
      if (i_sub.order() % 3 == 0)
        return reject("structure_conditions",
                      "the 3'-core of J has order divisible by 3");
      auto [ig, back] = subgroup_group(i_sub);
      SubgroupRef oi = odd_core(ig);
      std::vector<int> oi_ids;
      for (int x : oi.elements) oi_ids.push_back(back[x]);
      std::sort(oi_ids.begin(), oi_ids.end());
      dec = metacyclic_decompose(SubgroupRef{g, oi_ids});
      break;
    }
  }

  SubgroupRef A = dec.A, B = dec.B;
  int a = A.order(), b = B.order();
  std::vector<int> everyone(g.order());
  std::iota(everyone.begin(), everyone.end(), 0);
  UnitSubgroup gbar = detail::conjugation_image(g, A, everyone);

  SpaceFormTuple tu;
  tu.type = type;
  tu.g = g.order();
  tu.a = a;
  tu.gbar = gbar;
  tu.b = b;
  long long rest = g.order();
  switch (type) {
    case TupleType::I:
    case TupleType::II: rest /= (long long)a * b; tu.t = (int)rest; break;
    case TupleType::III: rest /= 8LL * a * b; tu.theta = (int)rest; break;
    case TupleType::IV: rest /= 16LL * a * b; tu.theta = (int)rest; break;
    default: break;
  }

  // type II with 16 | g: the unique index-2 subgroup with cyclic Sylow
  // 2-subgroups, recorded through its conjugation image
  if (type == TupleType::II && tu.g % 16 == 0) {
    std::vector<int> m_gens = derived_subgroup(g).elements;
    for (int x = 0; x < g.order(); ++x) m_gens.push_back(g.mul(x, x));
    SubgroupRef M = subgroup_generated(g, m_gens);
    auto [qm, pim] = quotient_group(g, M);
    // coordinates of the elementary abelian quotient over a greedy basis
    int r = 0;
    std::vector<int> coords(qm.order(), -1);
    coords[0] = 0;
    for (int x = 1; x < qm.order(); ++x) {
      if (coords[x] >= 0) continue;
      std::vector<std::pair<int, int>> have;
      for (int v = 0; v < qm.order(); ++v)
        if (coords[v] >= 0) have.emplace_back(v, coords[v]);
      for (auto [v, c] : have) coords[qm.mul(v, x)] = c | (1 << r);
      ++r;
    }
    std::vector<SubgroupRef> candidates;
    for (int mask = 1; mask < (1 << r); ++mask) {
      std::vector<int> ids;
      for (int x = 0; x < g.order(); ++x)
        if (__builtin_popcount(coords[pim(x)] & mask) % 2 == 0) ids.push_back(x);
      SubgroupRef s{g, ids};
      auto [sg, back] = subgroup_group(s);
      if (detail::subgroup_is_cyclic(sg, sylow_subgroup(sg, 2))) candidates.push_back(s);
    }
    if (candidates.size() != 1)
      fail("InternalConsistency",
           "expected exactly one index-2 subgroup with cyclic Sylow 2-subgroups, found " +
               std::to_string(candidates.size()));
    tu.gbar0 = detail::conjugation_image(g, A, candidates[0].elements);
  }

  if (auto violations = validate_tuple(tu); !violations.empty()) {
    std::string msg = "recovered tuple " + format_tuple(tu) + " violates:";
    for (const auto& s : violations) msg += " " + s + ";";
    return reject("structure_conditions", msg);
  }

  res.tuple = tu;
  res.witnesses.emplace_back("A", A.elements);
  res.witnesses.emplace_back("B", B.elements);
  if (type == TupleType::I || type == TupleType::II)
    res.witnesses.emplace_back("T", sylow_subgroup(g, 2).elements);
  if (type == TupleType::III || type == TupleType::IV) {
    res.witnesses.emplace_back("Q8", q8n.elements);
    SubgroupRef nb = normalizer(g, B);
    std::vector<int> njb = detail::intersect_sorted(nb.elements, j_ids);
    auto [njg, back] = subgroup_group(SubgroupRef{g, njb});
    SubgroupRef syl3 = sylow_subgroup(njg, 3);
    std::vector<int> theta_ids;
    for (int x : syl3.elements) theta_ids.push_back(back[x]);
    std::sort(theta_ids.begin(), theta_ids.end());
    res.witnesses.emplace_back("Theta", theta_ids);
  }
  if (type == TupleType::V || type == TupleType::VI)
    res.witnesses.emplace_back("2A5", f2a5.elements);
  if (type == TupleType::IV || type == TupleType::VI) {
    // least 4-element outside J (resp. outside I = 2A5 x centralizer part)
    // normalizing B
    SubgroupRef inside = type == TupleType::IV
                             ? SubgroupRef{g, j_ids}
                             : [&] {
                                 SubgroupRef cent = centralizer(g, f2a5);
                                 std::vector<int> gens = f2a5.elements;
                                 gens.insert(gens.end(), cent.elements.begin(),
                                             cent.elements.end());
                                 return subgroup_generated(g, gens);
                               }();
    SubgroupRef nb = normalizer(g, B);
    for (int x = 0; x < g.order(); ++x) {
      if (g.element_order(x) != 4 || inside.contains(x) || !nb.contains(x)) continue;
      res.witnesses.emplace_back("Phi", subgroup_generated(g, {x}).elements);
      break;
    }
  }

  if (opts.paranoid) {
    StructuredGroup rebuilt = build_tuple(tu);
    if (!is_isomorphic(g, rebuilt.group, opts.iso_cap))
      fail("InternalConsistency",
           "paranoid rebuild is not isomorphic to the classified group");
  }
  return res;
}

// The decisive invariant comparison: two classified groups are isomorphic
// exactly when these components agree.
inline bool invariants_equal(const SpaceFormTuple& t1, const SpaceFormTuple& t2) {
  if (t1.type != t2.type || t1.g != t2.g || t1.a != t2.a) return false;
  if (!(t1.gbar == t2.gbar)) return false;
  if (t1.gbar0.has_value() != t2.gbar0.has_value()) return false;
  if (t1.gbar0 && !(*t1.gbar0 == *t2.gbar0)) return false;
  return true;
}

}  // namespace spaceform

#endif  // SPACEFORM_RECOGNITION_HPP_
