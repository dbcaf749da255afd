// Brute-force oracles for the tests.  These deliberately take different
// routes than the library so that agreement is meaningful.

#ifndef SPACEFORM_TESTS_ORACLES_HPP_
#define SPACEFORM_TESTS_ORACLES_HPP_

#include <spaceform/rep.hpp>
#include <spaceform/spaceform.hpp>

namespace oracle {

using spaceform::Group;
using spaceform::Mat;
using spaceform::Quat;
using spaceform::RealRep;
using spaceform::UnitGroup;

// Cayley table of the permutation group generated by `gens` (images of
// 0..m-1).  Elements are sorted lexicographically, which puts the identity
// first, so ids are stable and the identity is 0.
inline Group perm_group(const std::vector<std::vector<int>>& gens) {
  size_t m = gens.at(0).size();
  std::vector<int> ident(m);
  std::iota(ident.begin(), ident.end(), 0);
  std::set<std::vector<int>> elems{ident};
  std::vector<std::vector<int>> work{ident};
  auto compose = [&](const std::vector<int>& p, const std::vector<int>& q) {
    std::vector<int> r(m);
    for (size_t i = 0; i < m; ++i) r[i] = p[q[i]];
    return r;
  };
  while (!work.empty()) {
    auto p = work.back();
    work.pop_back();
    for (const auto& gen : gens) {
      auto q = compose(gen, p);
      if (elems.insert(q).second) work.push_back(q);
    }
  }
  std::vector<std::vector<int>> sorted(elems.begin(), elems.end());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < (int)sorted.size(); ++i) index[sorted[i]] = i;
  int n = (int)sorted.size();
  std::vector<int> flat((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[(size_t)i * n + j] = index.at(compose(sorted[i], sorted[j]));
  return spaceform::group_from_table(flat, n);
}

// every normal subgroup, as the join-closure of single-element normal closures
inline std::vector<std::vector<int>> all_normal_subgroups(const Group& g) {
  std::set<std::vector<int>> out{{0}};
  std::vector<std::vector<int>> work;
  for (int x = 1; x < g.order(); ++x) {
    auto nc = spaceform::normal_closure(g, {x}).elements;
    if (out.insert(nc).second) work.push_back(nc);
  }
  std::vector<std::vector<int>> known(out.begin(), out.end());
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (const auto& t : std::vector<std::vector<int>>(out.begin(), out.end())) {
      std::vector<int> both = s;
      both.insert(both.end(), t.begin(), t.end());
      auto join = spaceform::subgroup_generated(g, both).elements;
      if (out.insert(join).second) work.push_back(join);
    }
  }
  return {out.begin(), out.end()};
}

// every subgroup (small groups only): grow known subgroups one element at a time
inline std::vector<std::vector<int>> all_subgroups_of(const Group& g) {
  std::set<std::vector<int>> out{{0}};
  std::vector<std::vector<int>> work{{0}};
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<int> gens = s;
      gens.push_back(x);
      auto bigger = spaceform::subgroup_generated(g, gens).elements;
      if (out.insert(bigger).second) work.push_back(bigger);
    }
  }
  return {out.begin(), out.end()};
}

inline long long totient(long long n) {
  long long result = n;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  if (n > 1) result -= result / n;
  return result;
}

// subgroup lattice of an abelian unit group as the join-closure of its
// cyclic subgroups (a different route than the library's one-step extensions)
inline std::vector<std::vector<int>> unit_subgroups_via_joins(const UnitGroup& u) {
  auto close = [&](std::vector<int> gens) {
    std::set<int> got{u.identity()};
    for (int r : gens) got.insert(r);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(got.begin(), got.end());
      for (int x : cur)
        for (int y : cur)
          if (got.insert(u.mul(x, y)).second) grew = true;
    }
    return std::vector<int>(got.begin(), got.end());
  };
  std::set<std::vector<int>> out;
  out.insert(close({}));
  for (int r : u.residues) out.insert(close({r}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(out.begin(), out.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> both = cur[i];
        both.insert(both.end(), cur[j].begin(), cur[j].end());
        if (out.insert(close(both)).second) grew = true;
      }
  }
  return {out.begin(), out.end()};
}

// dimension of { X : X M_g = M_g X for all g }, by Gaussian elimination over
// the constraints from a generating set
inline int commutant_dimension(const RealRep& rep) {
  const Group& g = rep.group;
  int d = rep.dim, vars = d * d;
  std::vector<std::vector<double>> rows;
  for (int gen : spaceform::generating_sequence(g)) {
    const Mat& m = rep.of(gen);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        std::vector<double> row(vars, 0.0);
        // (M X - X M)_{ij} = sum_k M_ik X_kj - X_ik M_kj
        for (int k = 0; k < d; ++k) {
          row[k * d + j] += m.at(i, k);
          row[i * d + k] -= m.at(k, j);
        }
        rows.push_back(std::move(row));
      }
  }
  int rank = 0;
  for (int col = 0; col < vars && rank < (int)rows.size(); ++col) {
    int pivot = -1;
    double best = 1e-9;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (std::abs(rows[r][col]) > best) {
        best = std::abs(rows[r][col]);
        pivot = r;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank) continue;
      double f = rows[r][col] / rows[rank][col];
      if (f == 0.0) continue;
      for (int c = col; c < vars; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return vars - rank;
}

// SO(3) image of a unit quaternion
inline Mat rotation_matrix(const Quat& q) {
  Mat r(3);
  double w = q.w, x = q.x, y = q.y, z = q.z;
  double v[3][3] = {{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
                    {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
                    {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) = v[i][j];
  return r;
}

// --- named fixture groups -----------------------------------------------------

inline Group symmetric_3() { return perm_group({{1, 0, 2}, {1, 2, 0}}); }
inline Group dihedral_8() { return perm_group({{1, 2, 3, 0}, {2, 1, 0, 3}}); }
inline Group klein_4() { return perm_group({{1, 0, 3, 2}, {2, 3, 0, 1}}); }
inline Group alternating_4() { return perm_group({{1, 2, 0, 3}, {1, 0, 3, 2}}); }
inline Group symmetric_4() { return perm_group({{1, 2, 3, 0}, {1, 0, 2, 3}}); }
inline Group alternating_5() {
  return perm_group({{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
}
inline Group elementary_9() {
  return perm_group({{1, 2, 0, 3, 4, 5}, {0, 1, 2, 4, 5, 3}});
}
inline Group frobenius_21() {
  // 7:3, the nonabelian group of order 21: i -> i+1 and i -> 2i mod 7
  return perm_group({{1, 2, 3, 4, 5, 6, 0}, {0, 2, 4, 6, 1, 3, 5}});
}

}  // namespace oracle

#endif  // SPACEFORM_TESTS_ORACLES_HPP_
