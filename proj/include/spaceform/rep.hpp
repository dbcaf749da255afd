// Free real representations: quaternionic models for the binary polyhedral
// and binary dihedral groups, induction to the whole group, and numerical
// certification that no nontrivial element fixes a nonzero vector.

#ifndef SPACEFORM_REP_HPP_
#define SPACEFORM_REP_HPP_

#include <cmath>
#include <iomanip>
#include <random>

#include "recognition.hpp"

namespace spaceform {

// --- small dense matrices -----------------------------------------------------

struct Mat {
  int n = 0;
  std::vector<double> a;

  Mat() = default;
  explicit Mat(int size) : n(size), a((size_t)size * size, 0.0) {}
  double& at(int i, int j) { return a[(size_t)i * n + j]; }
  double at(int i, int j) const { return a[(size_t)i * n + j]; }

  static Mat identity(int size) {
    Mat m(size);
    for (int i = 0; i < size; ++i) m.at(i, i) = 1.0;
    return m;
  }
  Mat operator*(const Mat& o) const {
    Mat r(n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        double v = at(i, k);
        if (v == 0.0) continue;
        for (int j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }
  double trace() const {
    double t = 0;
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

inline double max_abs_diff(const Mat& x, const Mat& y) {
  double d = 0;
  for (size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

inline double orthogonality_defect(const Mat& m) {
  Mat t(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j) t.at(i, j) = m.at(j, i);
  return max_abs_diff(t * m, Mat::identity(m.n));
}

// --- quaternions ---------------------------------------------------------------

struct Quat {
  double w = 0, x = 0, y = 0, z = 0;
};

inline Quat quat_mul(const Quat& p, const Quat& q) {
  return Quat{p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
              p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
              p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
              p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

inline double quat_norm2(const Quat& q) {
  return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
}

inline double quat_dist2(const Quat& p, const Quat& q) {
  return (p.w - q.w) * (p.w - q.w) + (p.x - q.x) * (p.x - q.x) +
         (p.y - q.y) * (p.y - q.y) + (p.z - q.z) * (p.z - q.z);
}

// v -> q v on coordinates (w, x, y, z); orthogonal when |q| = 1
inline Mat left_mult_matrix(const Quat& q) {
  Mat m(4);
  double v[4][4] = {{q.w, -q.x, -q.y, -q.z},
                    {q.x, q.w, -q.z, q.y},
                    {q.y, q.z, q.w, -q.x},
                    {q.z, -q.y, q.x, q.w}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = v[i][j];
  return m;
}

// v -> v q
inline Mat right_mult_matrix(const Quat& q) {
  Mat m(4);
  double v[4][4] = {{q.w, -q.x, -q.y, -q.z},
                    {q.x, q.w, q.z, -q.y},
                    {q.y, -q.z, q.w, q.x},
                    {q.z, q.y, -q.x, q.w}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = v[i][j];
  return m;
}

// --- unit-quaternion models -----------------------------------------------------

// the 24 Hurwitz units: 8 axis units and 16 with all coordinates +-1/2
inline std::vector<Quat> hurwitz_units() {
  std::vector<Quat> out;
  for (int i = 0; i < 4; ++i)
    for (double s : {1.0, -1.0}) {
      Quat q;
      (&q.w)[i] = s;
      out.push_back(q);
    }
  for (double w : {0.5, -0.5})
    for (double x : {0.5, -0.5})
      for (double y : {0.5, -0.5})
        for (double z : {0.5, -0.5}) out.push_back(Quat{w, x, y, z});
  return out;
}

// the 120 icosians: Hurwitz units plus the even coordinate permutations of
// (+-tau, +-1, +-1/tau, 0)/2, tau the golden ratio
inline std::vector<Quat> icosians() {
  std::vector<Quat> out = hurwitz_units();
  const double tau = (1.0 + std::sqrt(5.0)) / 2.0;
  const double vals[3] = {tau / 2.0, 0.5, (tau - 1.0) / 2.0};  // 1/tau = tau - 1
  int perms[4] = {0, 1, 2, 3};
  std::vector<std::array<int, 4>> even;
  std::sort(perms, perms + 4);
  do {
    int inv = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perms[i] > perms[j]) ++inv;
    if (inv % 2 == 0) even.push_back({perms[0], perms[1], perms[2], perms[3]});
  } while (std::next_permutation(perms, perms + 4));
  for (const auto& pm : even)
    for (int signs = 0; signs < 8; ++signs) {
      double coords[4] = {0, 0, 0, 0};
      for (int k = 0; k < 3; ++k)
        coords[pm[k]] = (signs >> k & 1) ? -vals[k] : vals[k];
      out.push_back(Quat{coords[0], coords[1], coords[2], coords[3]});
    }
  return out;
}

// Builds the abstract group of a finite set of unit quaternions by rounding
// each product to the nearest listed unit.  Returns the group (identity
// renumbered to 0, the rest kept in list order) together with the element
// map and the rounding margin.
struct UnitGroupModel {
  Group group;
  std::vector<Quat> units;  // indexed by group element id
  double margin = 0;        // largest distance from a product to its rounding
};

inline UnitGroupModel group_from_units(std::vector<Quat> units, double tol = 1e-9) {
  int n = (int)units.size();
  int ident = -1;
  for (int i = 0; i < n; ++i)
    if (quat_dist2(units[i], Quat{1, 0, 0, 0}) < 1e-18) ident = i;
  if (ident < 0) fail("ClosureFailed", "unit list lacks the identity");
  std::swap(units[0], units[ident]);
  std::vector<int> flat((size_t)n * n);
  double margin = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Quat p = quat_mul(units[i], units[j]);
      int best = -1;
      double bd = 1e300;
      for (int k = 0; k < n; ++k) {
        double d = quat_dist2(p, units[k]);
        if (d < bd) {
          bd = d;
          best = k;
        }
      }
      if (bd > tol * tol)
        fail("ClosureFailed", "product strays " + std::to_string(std::sqrt(bd)) +
                                  " from every listed unit");
      margin = std::max(margin, std::sqrt(bd));
      flat[(size_t)i * n + j] = best;
    }
  return UnitGroupModel{group_from_table(flat, n), std::move(units), margin};
}

// x -> e^{i pi / n}, y -> j, extended over the x^i y^e numbering
inline std::vector<Quat> binary_dihedral_embedding(int order4n) {
  if (order4n < 4 || order4n % 4 != 0)
    fail("BadParameter", "binary dihedral order must be a multiple of 4");
  int n = order4n / 4, m = 2 * n;
  Quat qx{std::cos(M_PI / n), std::sin(M_PI / n), 0, 0};
  Quat qy{0, 0, 1, 0};
  std::vector<Quat> out(order4n);
  for (int e = 0; e < 2; ++e)
    for (int i = 0; i < m; ++i) {
      Quat v{1, 0, 0, 0};
      for (int k = 0; k < i; ++k) v = quat_mul(v, qx);
      if (e) v = quat_mul(v, qy);
      out[e * m + i] = v;
    }
  return out;
}

// embedding of any group isomorphic to the binary tetrahedral (24) or binary
// icosahedral (120) group, found through the isomorphism search
inline std::vector<Quat> polyhedral_embedding(const Group& g) {
  UnitGroupModel model;
  if (g.order() == 24)
    model = group_from_units(hurwitz_units());
  else if (g.order() == 120)
    model = group_from_units(icosians());
  else
    fail("BadParameter", "no quaternionic model for order " + std::to_string(g.order()));
  auto hom = is_isomorphic(g, model.group);
  if (!hom) fail("NotFound", "group is not isomorphic to the quaternionic model");
  std::vector<Quat> out(g.order());
  for (int x = 0; x < g.order(); ++x) out[x] = model.units[hom->images[x]];
  return out;
}

// largest deviation of q[i]q[j] from q[i*j]; a faithfulness measure
inline double embedding_margin(const Group& g, const std::vector<Quat>& q) {
  double m = 0;
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < g.order(); ++j)
      m = std::max(m, std::sqrt(quat_dist2(quat_mul(q[i], q[j]), q[g.mul(i, j)])));
  return m;
}

// --- real representations -------------------------------------------------------

struct RealRep {
  Group group;
  int dim = 0;
  std::vector<Mat> matrices;  // indexed by element id
  double tol = 1e-8;

  const Mat& of(int x) const { return matrices[x]; }
};

// Validates orthogonality, the homomorphism property (all pairs up to order
// 256, a fixed-seed sample above), and that the identity matrix is exact.
inline RealRep make_rep(const Group& g, std::vector<Mat> mats, double tol = 1e-8) {
  if ((int)mats.size() != g.order()) fail("BadParameter", "one matrix per element");
  int dim = mats[0].n;
  for (const Mat& m : mats)
    if (m.n != dim) fail("BadParameter", "inconsistent dimensions");
  if (max_abs_diff(mats[0], Mat::identity(dim)) != 0.0)
    fail("BadParameter", "identity must map to the exact identity matrix");
  for (int x = 0; x < g.order(); ++x)
    if (orthogonality_defect(mats[x]) > tol)
      fail("BadParameter", "matrix of element " + std::to_string(x) +
                               " is not orthogonal within tol");
  auto check_pair = [&](int x, int y) {
    if (max_abs_diff(mats[g.mul(x, y)], mats[x] * mats[y]) > tol)
      fail("BadParameter", "homomorphism defect at (" + std::to_string(x) + "," +
                               std::to_string(y) + ")");
  };
  if (g.order() <= 256) {
    for (int x = 0; x < g.order(); ++x)
      for (int y = 0; y < g.order(); ++y) check_pair(x, y);
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    for (int k = 0; k < 4096; ++k) check_pair(pick(rng), pick(rng));
  }
  return RealRep{g, dim, std::move(mats), tol};
}

// --- the prime-generated core ----------------------------------------------------

enum class CoreKind { cyclic, binary_tetrahedral_times_cyclic, binary_icosahedral_times_cyclic };

struct PrimeCore {
  SubgroupRef h;             // <all prime-order elements>, normal in G
  CoreKind kind;
  SubgroupRef binary_factor; // trivial for the cyclic kind
  SubgroupRef cyclic_factor; // the coprime cyclic complement (or h itself)
};

// H := <elements of prime order> together with its recognized shape:
// cyclic, or a binary polyhedral factor times a coprime cyclic group.
inline PrimeCore prime_generated_core(const StructuredGroup& s) {
  const Group& g = s.group;
  std::vector<int> gens;
  for (int x = 1; x < g.order(); ++x) {
    int k = g.element_order(x);
    auto pf = prime_factors(k);
    if (pf.size() == 1 && pf[0] == k) gens.push_back(x);
  }
  SubgroupRef h = subgroup_generated(g, gens);

  auto smooth_part = [&](const std::vector<int>& primes) {
    std::vector<int> sel;
    for (int x : h.elements) {
      int k = g.element_order(x);
      for (int p : primes)
        while (k % p == 0) k /= p;
      if (k == 1) sel.push_back(x);
    }
    return subgroup_generated(g, sel);
  };
  auto coprime_part = [&](const std::vector<int>& primes) {
    std::vector<int> sel;
    for (int x : h.elements) {
      int k = g.element_order(x);
      bool ok = true;
      for (int p : primes)
        if (k % p == 0) ok = false;
      if (ok) sel.push_back(x);
    }
    return subgroup_generated(g, sel);
  };
  auto is_cyclic = [&](const SubgroupRef& sub) {
    for (int x : sub.elements)
      if (g.element_order(x) == sub.order()) return true;
    return sub.order() == 1;
  };

  bool expect_cyclic = s.tuple.type == TupleType::I || s.tuple.type == TupleType::II ||
                       ((s.tuple.type == TupleType::III || s.tuple.type == TupleType::IV) &&
                        s.tuple.theta > 3);
  if (expect_cyclic) {
    if (!is_cyclic(h))
      fail("UnexpectedShape", "prime-generated core should be cyclic here");
    return PrimeCore{h, CoreKind::cyclic, trivial_subgroup(g), h};
  }
  if (s.tuple.type == TupleType::III || s.tuple.type == TupleType::IV) {
    SubgroupRef d = smooth_part({2, 3}), c = coprime_part({2, 3});
    if (d.order() != 24 || !is_cyclic(c) ||
        (long long)d.order() * c.order() != h.order())
      fail("UnexpectedShape", "prime-generated core is not 2A4 x coprime cyclic");
    return PrimeCore{h, CoreKind::binary_tetrahedral_times_cyclic, d, c};
  }
  SubgroupRef d = smooth_part({2, 3, 5}), c = coprime_part({2, 3, 5});
  if (d.order() != 120 || !is_cyclic(c) ||
      (long long)d.order() * c.order() != h.order())
    fail("UnexpectedShape", "prime-generated core is not 2A5 x coprime cyclic");
  return PrimeCore{h, CoreKind::binary_icosahedral_times_cyclic, d, c};
}

namespace detail {

inline Mat rotation2(double angle) {
  Mat m(2);
  m.at(0, 0) = std::cos(angle);
  m.at(0, 1) = -std::sin(angle);
  m.at(1, 0) = std::sin(angle);
  m.at(1, 1) = std::cos(angle);
  return m;
}

}  // namespace detail

// The free representation of the prime-generated core: rotations for cyclic
// cores, left quaternion multiplication for the binary polyhedral factor with
// the cyclic factor acting by right multiplication in span(1, i).
inline RealRep free_rep_core(const StructuredGroup& s, const PrimeCore& core) {
  auto [h, back] = subgroup_group(core.h);
  int m = h.order();
  if (core.kind == CoreKind::cyclic) {
    if (m == 1) {
      return make_rep(h, {Mat::identity(1)});
    }
    if (m == 2) {
      Mat sign = Mat::identity(1);
      sign.at(0, 0) = -1;
      return make_rep(h, {Mat::identity(1), sign});
    }
    int gen = -1;
    for (int x = 0; x < m; ++x)
      if (h.element_order(x) == m) {
        gen = x;
        break;
      }
    std::vector<int> exp_of(m, -1);
    int cur = 0;
    for (int e = 0; e < m; ++e) {
      exp_of[cur] = e;
      cur = h.mul(cur, gen);
    }
    std::vector<Mat> mats(m);
    mats[0] = Mat::identity(2);
    for (int x = 1; x < m; ++x)
      mats[x] = detail::rotation2(2.0 * M_PI * exp_of[x] / m);
    return make_rep(h, std::move(mats));
  }

  // binary polyhedral factor D times coprime cyclic C, acting on H = R^4
  std::vector<int> pos(s.group.order(), -1);
  for (int i = 0; i < m; ++i) pos[core.h.elements[i]] = i;
  std::vector<int> dloc, cloc;
  for (int x : core.binary_factor.elements) dloc.push_back(pos[x]);
  for (int x : core.cyclic_factor.elements) cloc.push_back(pos[x]);
  auto [dg, dback] = subgroup_group(SubgroupRef{h, dloc});
  std::vector<Quat> dquat = polyhedral_embedding(dg);
  int csize = (int)cloc.size();
  int cgen = 0;
  for (int x : cloc)
    if (h.element_order(x) == csize) {
      cgen = x;
      break;
    }
  std::vector<int> cexp(m, -1);
  {
    int cur = 0;
    for (int e = 0; e < csize; ++e) {
      cexp[cur] = e;
      cur = h.mul(cur, cgen);
    }
  }
  std::vector<int> dpos(m, -1);
  for (int i = 0; i < (int)dloc.size(); ++i) dpos[dloc[i]] = i;
  std::vector<Mat> mats(m);
  for (int x = 0; x < m; ++x) {
    // unique factorization x = d * c with d in D, c in C
    int found_d = -1, found_c = -1;
    for (int c : cloc) {
      int d = h.mul(x, h.inverse(c));
      if (dpos[d] >= 0) {
        found_d = dpos[d];
        found_c = cexp[c];
        break;
      }
    }
    if (found_d < 0) fail("InternalConsistency", "core element fails to factor as d*c");
    double angle = 2.0 * M_PI * found_c / csize;
    Quat qc{std::cos(angle), std::sin(angle), 0, 0};
    mats[x] = left_mult_matrix(dquat[found_d]) * right_mult_matrix(qc);
  }
  mats[0] = Mat::identity(4);
  return make_rep(h, std::move(mats));
}

// --- induction and certification ---------------------------------------------

// least element of each left coset gH, sorted
inline std::vector<int> canonical_transversal(const Group& g, const SubgroupRef& h) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (int m : h.elements) seen[g.mul(x, m)] = 1;
  }
  return reps;
}

// Induced representation: dim [G:H] * dim(V), block-permutation structure with
// block (i, j) = rho(r_i^-1 g r_j) whenever that element lies in H.
inline RealRep induce_rep(const RealRep& rep, const Group& g, const SubgroupRef& h,
                          const std::vector<int>& coset_reps) {
  if (rep.group.order() != h.order())
    fail("BadParameter", "representation does not match the subgroup");
  int index = g.order() / h.order();
  if ((int)coset_reps.size() != index)
    fail("BadTransversal", "need exactly one representative per coset");
  std::vector<int> coset_of(g.order(), -1);
  for (int i = 0; i < index; ++i) {
    int r = coset_reps[i];
    for (int m : h.elements) {
      int x = g.mul(r, m);
      if (coset_of[x] >= 0) fail("BadTransversal", "cosets overlap");
      coset_of[x] = i;
    }
  }
  std::vector<int> hpos(g.order(), -1);
  for (int i = 0; i < h.order(); ++i) hpos[h.elements[i]] = i;

  int d = rep.dim, dim = index * d;
  std::vector<Mat> mats(g.order());
  for (int x = 0; x < g.order(); ++x) {
    Mat w(dim);
    for (int j = 0; j < index; ++j) {
      int t = g.mul(x, coset_reps[j]);
      int i = coset_of[t];
      int y = g.mul(g.inverse(coset_reps[i]), t);  // r_i^-1 x r_j, inside H
      if (hpos[y] < 0) fail("InternalConsistency", "coset bookkeeping failed");
      const Mat& block = rep.of(hpos[y]);
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) w.at(i * d + r, j * d + c) = block.at(r, c);
    }
    mats[x] = std::move(w);
  }
  return make_rep(g, std::move(mats), rep.tol);
}

// --- freeness certificate -------------------------------------------------------

enum class FreenessVerdict { free, not_free, inconclusive };

inline const char* to_string(FreenessVerdict v) {
  switch (v) {
    case FreenessVerdict::free: return "free";
    case FreenessVerdict::not_free: return "not_free";
    default: return "inconclusive";
  }
}

struct FreenessCertificate {
  double max_fixed_trace = 0;
  std::vector<std::pair<int, double>> per_element;  // (element id, fixed-space trace)
  FreenessVerdict verdict = FreenessVerdict::free;
};

// For each nontrivial g of order k the fixed-space dimension equals
// trace((1/k) sum_j rho(g^j)), a nonnegative integer up to roundoff.
inline FreenessCertificate verify_free(const RealRep& rep) {
  const Group& g = rep.group;
  FreenessCertificate cert;
  for (int x = 1; x < g.order(); ++x) {
    int k = g.element_order(x);
    double sum = 0;
    int cur = 0;
    for (int j = 0; j < k; ++j) {
      sum += rep.of(cur).trace();
      cur = g.mul(cur, x);
    }
    double fixed = sum / k;
    cert.per_element.emplace_back(x, fixed);
    cert.max_fixed_trace = std::max(cert.max_fixed_trace, fixed);
  }
  if (g.order() == 1 || cert.max_fixed_trace < rep.tol)
    cert.verdict = FreenessVerdict::free;
  else if (cert.max_fixed_trace > 1.0 - rep.tol)
    cert.verdict = FreenessVerdict::not_free;
  else
    cert.verdict = FreenessVerdict::inconclusive;
  return cert;
}

// The indirect route: a representation induced from a free representation of
// the prime-generated core is free, because every nontrivial element has a
// prime-order power inside the core.  Certifies by checking the restriction.
inline FreenessCertificate certify_free_via_core(const RealRep& induced,
                                                 const SubgroupRef& h) {
  std::vector<Mat> restr;
  for (int x : h.elements) restr.push_back(induced.of(x));
  auto [hg, back] = subgroup_group(h);
  RealRep sub = make_rep(hg, std::move(restr), induced.tol);
  return verify_free(sub);
}

// full pipeline: core representation, induction along canonical cosets
inline std::pair<RealRep, FreenessCertificate> free_representation(
    const StructuredGroup& s, double tol = 1e-8) {
  PrimeCore core = prime_generated_core(s);
  RealRep v = free_rep_core(s, core);
  v.tol = tol;
  RealRep w = induce_rep(v, s.group, core.h, canonical_transversal(s.group, core.h));
  return {w, verify_free(w)};
}

}  // namespace spaceform

#endif  // SPACEFORM_REP_HPP_
