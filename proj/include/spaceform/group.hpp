// Finite groups as validated Cayley tables.
//
// A Group is an immutable multiplication table over element ids 0..n-1 with
// the identity fixed at id 0.  Construction validates the full set of group
// axioms, so every Group in circulation is genuinely a group.  Copies share
// the underlying table and are cheap.

#ifndef SPACEFORM_GROUP_HPP_
#define SPACEFORM_GROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spaceform {

// Single error type; `kind` carries the machine-readable error name
// (NotAssociative, NotLatinSquare, TooLarge, ...).
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& msg) {
  throw Error(kind, msg);
}

class Group {
public:
  Group() = default;  // empty handle; any use other than assignment is invalid

  // |G|
  int order() const { return d_->n; }
  // product of elements i*j
  int mul(int i, int j) const { return d_->table[(size_t)i * d_->n + j]; }
  int inverse(int i) const { return d_->inverse[i]; }
  int element_order(int i) const { return d_->order[i]; }
  int conjugate(int g, int x) const {  // g x g^-1
    return mul(mul(g, x), inverse(g));
  }
  int power(int x, long long e) const {
    int k = element_order(x);
    e %= k;
    if (e < 0) e += k;
    int r = 0;
    for (long long i = 0; i < e; ++i) r = mul(r, x);
    return r;
  }
  bool valid() const { return d_ != nullptr; }
  bool same_table(const Group& o) const { return d_ == o.d_; }
  const std::vector<int>& element_orders() const { return d_->order; }

  friend Group group_from_table(const std::vector<int>& flat, int n);

private:
  struct Data {
    int n = 0;
    std::vector<int> table;    // n*n, row-major
    std::vector<int> inverse;  // n
    std::vector<int> order;    // n
  };
  std::shared_ptr<const Data> d_;
};

// Validates and wraps an n x n table (flattened row-major).
// Check order: shape/range, identity row+column, associativity, Latin
// property, inverses.  Errors: NotLatinSquare, WrongIdentity, NotAssociative.
inline Group group_from_table(const std::vector<int>& flat, int n) {
  if (n < 1 || (size_t)flat.size() != (size_t)n * n)
    fail("NotLatinSquare", "table is not a square of positive size");
  for (int v : flat)
    if (v < 0 || v >= n)
      fail("NotLatinSquare", "entry " + std::to_string(v) + " out of range 0.." +
                                 std::to_string(n - 1));
  auto at = [&](int i, int j) { return flat[(size_t)i * n + j]; };
  for (int j = 0; j < n; ++j) {
    if (at(0, j) != j)
      fail("WrongIdentity", "row 0 is not the identity at column " + std::to_string(j));
    if (at(j, 0) != j)
      fail("WrongIdentity", "column 0 is not the identity at row " + std::to_string(j));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int ij = at(i, j);
      for (int k = 0; k < n; ++k)
        if (at(ij, k) != at(i, at(j, k)))
          fail("NotAssociative", "(" + std::to_string(i) + "*" + std::to_string(j) +
                                     ")*" + std::to_string(k) + " != " +
                                     std::to_string(i) + "*(" + std::to_string(j) +
                                     "*" + std::to_string(k) + ")");
    }
  std::vector<char> seen(n);
  for (int i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int j = 0; j < n; ++j) {
      if (seen[at(i, j)])
        fail("NotLatinSquare", "row " + std::to_string(i) + " repeats entry " +
                                   std::to_string(at(i, j)));
      seen[at(i, j)] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int i = 0; i < n; ++i) {
      if (seen[at(i, j)])
        fail("NotLatinSquare", "column " + std::to_string(j) + " repeats entry " +
                                   std::to_string(at(i, j)));
      seen[at(i, j)] = 1;
    }
  }

  auto d = std::make_shared<Group::Data>();
  d->n = n;
  d->table = flat;
  d->inverse.assign(n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (at(i, j) == 0) {
        // two-sided by associativity + identity; checked all the same
        if (at(j, i) != 0)
          fail("NotLatinSquare", "one-sided inverse at " + std::to_string(i));
        d->inverse[i] = j;
      }
  d->order.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    int x = i, k = 1;
    while (x != 0) {
      x = at(x, i);
      ++k;
    }
    d->order[i] = k;
  }
  Group g;
  g.d_ = std::move(d);
  return g;
}

inline Group group_from_table(const std::vector<std::vector<int>>& rows) {
  int n = (int)rows.size();
  std::vector<int> flat;
  flat.reserve((size_t)n * n);
  for (const auto& r : rows) {
    if ((int)r.size() != n)
      fail("NotLatinSquare", "table is not square");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return group_from_table(flat, n);
}

// A subgroup of a parent group, stored as a sorted id list.
// The handle shares the parent's table, so a SubgroupRef never dangles.
struct SubgroupRef {
  Group parent;
  std::vector<int> elements;  // sorted, contains 0

  int order() const { return (int)elements.size(); }
  bool contains(int id) const {
    return std::binary_search(elements.begin(), elements.end(), id);
  }
  bool operator==(const SubgroupRef& o) const { return elements == o.elements; }
};

// Validates closure, membership of the identity and Lagrange, then wraps.
inline SubgroupRef make_subgroup(const Group& g, std::vector<int> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.empty() || ids[0] != 0)
    fail("NotASubgroup", "subgroup must contain the identity");
  std::vector<char> in(g.order(), 0);
  for (int x : ids) in[x] = 1;
  for (int x : ids)
    for (int y : ids)
      if (!in[g.mul(x, y)])
        fail("NotASubgroup", "set is not closed under multiplication");
  if (g.order() % (int)ids.size() != 0)
    fail("NotASubgroup", "Lagrange violation");  // unreachable once closed
  return SubgroupRef{g, std::move(ids)};
}

// Smallest subgroup containing `gens`; deterministic sorted output.
inline SubgroupRef subgroup_generated(const Group& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> members{0};
  in[0] = 1;
  std::vector<int> work;
  for (int x : gens) {
    if (x < 0 || x >= g.order()) fail("BadParameter", "generator id out of range");
    if (!in[x]) {
      in[x] = 1;
      members.push_back(x);
      work.push_back(x);
    }
  }
  // close under products; inverses come for free in a finite group
  size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    std::vector<int> snapshot = members;
    for (int y : snapshot) {
      for (int z : {g.mul(x, y), g.mul(y, x)}) {
        if (!in[z]) {
          in[z] = 1;
          members.push_back(z);
          work.push_back(z);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return SubgroupRef{g, std::move(members)};
}

inline SubgroupRef trivial_subgroup(const Group& g) {
  return SubgroupRef{g, {0}};
}

inline SubgroupRef whole_group(const Group& g) {
  std::vector<int> ids(g.order());
  std::iota(ids.begin(), ids.end(), 0);
  return SubgroupRef{g, std::move(ids)};
}

// A homomorphism between groups, as the image list of every source element.
struct GroupHom {
  Group source;
  Group target;
  std::vector<int> images;

  int operator()(int x) const { return images[x]; }
};

inline GroupHom make_hom(const Group& src, const Group& dst, std::vector<int> images,
                         bool check = true) {
  if ((int)images.size() != src.order())
    fail("BadParameter", "image list has wrong length");
  if (check) {
    if (images[0] != 0) fail("NotAHomomorphism", "identity must map to identity");
    for (int x = 0; x < src.order(); ++x)
      for (int y = 0; y < src.order(); ++y)
        if (images[src.mul(x, y)] != dst.mul(images[x], images[y]))
          fail("NotAHomomorphism", "multiplicativity fails at (" + std::to_string(x) +
                                       "," + std::to_string(y) + ")");
  }
  return GroupHom{src, dst, std::move(images)};
}

// Conjugacy classes, each sorted, listed by least member.
inline std::vector<std::vector<int>> conjugacy_classes(const Group& g) {
  int n = g.order();
  std::vector<int> cls(n, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (cls[i] >= 0) continue;
    std::vector<int> c;
    for (int x = 0; x < n; ++x) {
      int y = g.conjugate(x, i);
      if (cls[y] < 0) {
        cls[y] = (int)out.size();
        c.push_back(y);
      }
    }
    std::sort(c.begin(), c.end());
    out.push_back(std::move(c));
  }
  return out;
}

// class index per element id
inline std::vector<int> conjugacy_class_ids(const Group& g) {
  auto classes = conjugacy_classes(g);
  std::vector<int> id(g.order());
  for (int c = 0; c < (int)classes.size(); ++c)
    for (int x : classes[c]) id[x] = c;
  return id;
}

// Extracts a subgroup as a standalone Group.  Elements are renumbered by their
// sorted position, which keeps the identity at 0.  Returns the group and the
// map from new ids back to parent ids (= S.elements).
inline std::pair<Group, std::vector<int>> subgroup_group(const SubgroupRef& s) {
  const Group& g = s.parent;
  int m = (int)s.elements.size();
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[s.elements[i]] = i;
  std::vector<int> flat((size_t)m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = g.mul(s.elements[i], s.elements[j]);
      if (pos[p] < 0) fail("NotASubgroup", "set is not closed");
      flat[(size_t)i * m + j] = pos[p];
    }
  return {group_from_table(flat, m), s.elements};
}

// --- Cayley-table text format ---------------------------------------------
// Line 1: n.  Then n lines of n space-separated ids; row i col j = i*j.
// Strict: any deviation reports line and column.

inline Group parse_table_text(std::istream& is) {
  auto bad = [](int line, int col, const std::string& what) {
    fail("ParseError", "line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": " + what);
  };
  std::string header;
  if (!std::getline(is, header)) bad(1, 1, "missing group order");
  int n = 0;
  {
    std::istringstream hs(header);
    if (!(hs >> n) || n < 1) bad(1, 1, "expected a positive group order");
    std::string extra;
    if (hs >> extra) bad(1, 2, "trailing tokens after group order");
  }
  std::vector<int> flat;
  flat.reserve((size_t)n * n);
  for (int i = 0; i < n; ++i) {
    std::string row;
    if (!std::getline(is, row)) bad(2 + i, 1, "missing table row");
    std::istringstream rs(row);
    for (int j = 0; j < n; ++j) {
      int v;
      if (!(rs >> v)) bad(2 + i, j + 1, "expected an integer");
      if (v < 0 || v >= n) bad(2 + i, j + 1, "entry out of range");
      flat.push_back(v);
    }
    std::string extra;
    if (rs >> extra) bad(2 + i, n + 1, "trailing tokens");
  }
  std::string extra_line;
  while (std::getline(is, extra_line))
    if (!extra_line.empty()) bad(n + 2, 1, "trailing content after table");
  return group_from_table(flat, n);
}

inline Group parse_table_text(const std::string& text) {
  std::istringstream is(text);
  return parse_table_text(is);
}

inline std::string format_table_text(const Group& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (int i = 0; i < g.order(); ++i) {
    for (int j = 0; j < g.order(); ++j) {
      if (j) os << ' ';
      os << g.mul(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace spaceform

#endif  // SPACEFORM_GROUP_HPP_
