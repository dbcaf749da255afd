// Brute-force isomorphism machinery: invariant fingerprints for fast
// rejection, then backtracking over images of a greedy minimal generating
// sequence with partial-homomorphism closure.  Everything is deterministic:
// candidates are tried in increasing element id.

#ifndef SPACEFORM_ISO_HPP_
#define SPACEFORM_ISO_HPP_

#include <functional>
#include <optional>
#include <set>

#include "ops.hpp"

namespace spaceform {

// per-element invariant label: (order, class size, class size of x^2, of x^3)
struct ElementLabel {
  int order, cs, cs2, cs3;
  bool operator==(const ElementLabel&) const = default;
  auto operator<=>(const ElementLabel&) const = default;
};

inline std::vector<ElementLabel> element_labels(const Group& g) {
  auto cls = conjugacy_class_ids(g);
  auto classes = conjugacy_classes(g);
  std::vector<int> cs(g.order());
  for (int x = 0; x < g.order(); ++x) cs[x] = (int)classes[cls[x]].size();
  std::vector<ElementLabel> out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    int x2 = g.mul(x, x), x3 = g.mul(x2, x);
    out[x] = {g.element_order(x), cs[x], cs[x2], cs[x3]};
  }
  return out;
}

// order-insensitive invariants of the whole group
struct GroupFingerprint {
  int order;
  int center_order;
  int derived_order;
  std::vector<ElementLabel> sorted_labels;
  bool operator==(const GroupFingerprint&) const = default;
};

inline GroupFingerprint fingerprint(const Group& g) {
  GroupFingerprint f;
  f.order = g.order();
  f.center_order = center(g).order();
  f.derived_order = derived_subgroup(g).order();
  f.sorted_labels = element_labels(g);
  std::sort(f.sorted_labels.begin(), f.sorted_labels.end());
  return f;
}

// Greedy minimal generating sequence: repeatedly adjoin the least element
// outside the closure so far.
inline std::vector<int> generating_sequence(const Group& g) {
  std::vector<int> gens;
  SubgroupRef cur = trivial_subgroup(g);
  while (cur.order() < g.order()) {
    int pick = -1;
    for (int x = 1; x < g.order(); ++x)
      if (!cur.contains(x)) {
        pick = x;
        break;
      }
    gens.push_back(pick);
    std::vector<int> base = cur.elements;
    base.push_back(pick);
    cur = subgroup_generated(g, base);
  }
  return gens;
}

namespace detail {

// Closes a partial map (generator -> image) into a homomorphism on the
// generated subgroup.  Returns false on any multiplicativity or injectivity
// conflict.  On success `img` covers exactly the generated subgroup.
inline bool close_partial_map(const Group& g, const Group& h,
                              const std::vector<std::pair<int, int>>& pairs,
                              std::vector<int>& img) {
  img.assign(g.order(), -1);
  std::vector<int> pre(h.order(), -1);
  std::vector<int> known, work;
  auto assign = [&](int x, int y) {
    if (img[x] != -1) return img[x] == y;
    if (pre[y] != -1) return false;
    img[x] = y;
    pre[y] = x;
    known.push_back(x);
    work.push_back(x);
    return true;
  };
  if (!assign(0, 0)) return false;
  for (auto [x, y] : pairs)
    if (!assign(x, y)) return false;
  size_t head = 0;
  while (head < work.size()) {
    int x = work[head++];
    std::vector<int> snapshot = known;
    for (int y : snapshot) {
      if (!assign(g.mul(x, y), h.mul(img[x], img[y]))) return false;
      if (!assign(g.mul(y, x), h.mul(img[y], img[x]))) return false;
    }
  }
  return true;
}

// Enumerates every isomorphism G -> H in lexicographic order of the image
// tuple of G's generating sequence.  Stops early when `sink` returns true.
inline bool search_isomorphisms(const Group& g, const Group& h,
                                const std::function<bool(const std::vector<int>&)>& sink) {
  if (g.order() != h.order()) return false;
  auto lg = element_labels(g), lh = element_labels(h);
  {
    auto sg = lg, sh = lh;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return false;
  }
  std::vector<int> gens = generating_sequence(g);
  std::vector<std::vector<int>> cand(gens.size());
  for (size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < h.order(); ++y)
      if (lh[y] == lg[gens[i]]) cand[i].push_back(y);

  std::vector<std::pair<int, int>> assigned;
  std::vector<int> img;
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == gens.size()) {
      if (!close_partial_map(g, h, assigned, img)) return false;
      for (int x = 0; x < g.order(); ++x)
        if (img[x] < 0) fail("InternalConsistency", "generators failed to generate");
      return sink(img);
    }
    for (int y : cand[depth]) {
      assigned.emplace_back(gens[depth], y);
      if (close_partial_map(g, h, assigned, img) && rec(depth + 1)) return true;
      assigned.pop_back();
    }
    return false;
  };
  return rec(0);
}

}  // namespace detail

// Explicit isomorphism or definitively none.  Throws TooLarge when the orders
// agree but exceed the cap; callers should then compare classification tuples.
inline std::optional<GroupHom> is_isomorphic(const Group& g, const Group& h,
                                             int cap = 1024) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > cap)
    fail("TooLarge", "both groups exceed the isomorphism search cap " +
                         std::to_string(cap));
  std::optional<GroupHom> out;
  detail::search_isomorphisms(g, h, [&](const std::vector<int>& img) {
    out = make_hom(g, h, img, /*check=*/false);
    return true;
  });
  return out;
}

inline GroupHom invert_hom(const GroupHom& f) {
  std::vector<int> inv(f.target.order(), -1);
  for (int x = 0; x < f.source.order(); ++x) inv[f.images[x]] = x;
  for (int v : inv)
    if (v < 0) fail("BadParameter", "homomorphism is not bijective");
  return GroupHom{f.target, f.source, std::move(inv)};
}

// All automorphisms, in lexicographic order of generator images.
inline std::vector<Automorphism> all_automorphisms(const Group& g) {
  std::vector<Automorphism> out;
  detail::search_isomorphisms(g, g, [&](const std::vector<int>& img) {
    out.push_back(img);
    return false;  // keep enumerating
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::set<Automorphism> inner_automorphisms(const Group& g) {
  std::set<Automorphism> inn;
  for (int c = 0; c < g.order(); ++c) inn.insert(inner_automorphism(g, c));
  return inn;
}

}  // namespace spaceform

#endif  // SPACEFORM_ISO_HPP_
