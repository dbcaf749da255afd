// The unit group (Z/a)* as a residue set, its subgroup lattice, and the
// per-type structural predicates on subgroups used by the tuple validator.

#ifndef SPACEFORM_RESIDUES_HPP_
#define SPACEFORM_RESIDUES_HPP_

#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "group.hpp"

namespace spaceform {

// Residues are stored as plain integers mod a.  The special modulus a = 1 is
// a first-class value: its unit group is {0}, the residue 0 standing for the
// identity (0 == 1 mod 1).
struct UnitGroup {
  int modulus = 1;
  std::vector<int> residues;  // sorted

  int identity() const { return modulus == 1 ? 0 : 1; }
  int mul(int u, int v) const { return (int)((long long)u * v % modulus); }
  int order() const { return (int)residues.size(); }
};

inline UnitGroup unit_group(int a) {
  if (a < 1) fail("BadParameter", "modulus must be positive");
  UnitGroup u;
  u.modulus = a;
  if (a == 1) {
    u.residues = {0};
    return u;
  }
  for (int r = 1; r < a; ++r)
    if (std::gcd(r, a) == 1) u.residues.push_back(r);
  return u;
}

struct UnitSubgroup {
  int modulus = 1;
  std::vector<int> residues;  // sorted, contains the identity residue

  int identity() const { return modulus == 1 ? 0 : 1; }
  int order() const { return (int)residues.size(); }
  bool contains(int r) const {
    return std::binary_search(residues.begin(), residues.end(), r);
  }
  bool is_subgroup_of(const UnitSubgroup& o) const {
    if (modulus != o.modulus) return false;
    for (int r : residues)
      if (!o.contains(r)) return false;
    return true;
  }
  bool operator==(const UnitSubgroup& o) const {
    return modulus == o.modulus && residues == o.residues;
  }
  bool operator<(const UnitSubgroup& o) const {
    return std::tie(modulus, residues) < std::tie(o.modulus, o.residues);
  }
};

inline int residue_order(int r, int a) {
  if (a == 1) return 1;
  int k = 1;
  long long x = r % a;
  while (x != 1) {
    x = x * r % a;
    ++k;
    if (k > a) fail("BadParameter", "not a unit");
  }
  return k;
}

inline UnitSubgroup unit_subgroup(int a, std::vector<int> residues) {
  UnitSubgroup s;
  s.modulus = a;
  if (a == 1) {
    s.residues = {0};
    return s;
  }
  for (int& r : residues) {
    r %= a;
    if (r < 0) r += a;
    if (std::gcd(r, a) != 1) fail("BadParameter", "residue is not a unit");
  }
  residues.push_back(1);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
  // must be multiplicatively closed
  for (int u : residues)
    for (int v : residues)
      if (!std::binary_search(residues.begin(), residues.end(),
                              (int)((long long)u * v % a)))
        fail("BadParameter", "residue set is not closed under multiplication");
  s.residues = std::move(residues);
  return s;
}

inline UnitSubgroup trivial_unit_subgroup(int a) {
  return a == 1 ? UnitSubgroup{1, {0}} : UnitSubgroup{a, {1}};
}

// closure of a residue set that is not known to be closed
inline UnitSubgroup generated_unit_subgroup(int a, const std::vector<int>& gens) {
  if (a == 1) return UnitSubgroup{1, {0}};
  std::set<int> got{1};
  std::vector<int> work(gens);
  for (int& r : work) {
    r %= a;
    if (r < 0) r += a;
    if (std::gcd(r, a) != 1) fail("BadParameter", "generator is not a unit");
    got.insert(r);
  }
  work.assign(got.begin(), got.end());
  while (!work.empty()) {
    int u = work.back();
    work.pop_back();
    for (int v : std::vector<int>(got.begin(), got.end())) {
      int w = (int)((long long)u * v % a);
      if (got.insert(w).second) work.push_back(w);
    }
  }
  UnitSubgroup s;
  s.modulus = a;
  s.residues.assign(got.begin(), got.end());
  return s;
}

// Every subgroup of (Z/a)*, each exactly once, sorted by (order, residues).
// Computed by growing known subgroups one generator at a time, deduplicating.
// The extension of a subgroup S by a residue r is the product set S * <r>,
// which is already a subgroup since the group is abelian.
inline std::vector<UnitSubgroup> all_subgroups(const UnitGroup& u, int cap = 10000) {
  if (u.order() > cap) fail("TooLarge", "unit group exceeds enumeration cap");
  int a = u.modulus;
  if (a == 1) return {trivial_unit_subgroup(1)};

  std::map<int, std::vector<int>> powers;  // r -> <r>
  for (int r : u.residues) {
    std::vector<int> cyc;
    long long x = 1;
    do {
      cyc.push_back((int)x);
      x = x * r % a;
    } while (x != 1);
    powers[r] = std::move(cyc);
  }
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work{{1}};
  std::vector<UnitSubgroup> out;
  seen.insert(work[0]);
  std::vector<char> mark(a, 0);
  while (!work.empty()) {
    std::vector<int> s = std::move(work.back());
    work.pop_back();
    out.push_back(UnitSubgroup{a, s});
    for (int r : u.residues) {
      if (std::binary_search(s.begin(), s.end(), r)) continue;
      std::vector<int> prod;
      for (int x : s)
        for (int y : powers[r]) {
          int z = (int)((long long)x * y % a);
          if (!mark[z]) {
            mark[z] = 1;
            prod.push_back(z);
          }
        }
      for (int z : prod) mark[z] = 0;
      std::sort(prod.begin(), prod.end());
      if (seen.insert(prod).second) work.push_back(std::move(prod));
    }
  }
  std::sort(out.begin(), out.end(), [](const UnitSubgroup& a_, const UnitSubgroup& b_) {
    if (a_.residues.size() != b_.residues.size())
      return a_.residues.size() < b_.residues.size();
    return a_.residues < b_.residues;
  });
  return out;
}

// --- structural profile -----------------------------------------------------

enum class TwoPartShape { trivial, z2, z2xz2, z4, other };

inline const char* to_string(TwoPartShape s) {
  switch (s) {
    case TwoPartShape::trivial: return "1";
    case TwoPartShape::z2: return "Z/2";
    case TwoPartShape::z2xz2: return "Z/2xZ/2";
    case TwoPartShape::z4: return "Z/4";
    default: return "other";
  }
}

// Decomposition of an abelian unit subgroup by prime parts, as consumed by the
// per-type admissibility rules.
struct GbarProfile {
  int order = 1;
  int odd_part_order = 1;     // bbar for the 2-power-complement reading
  int two_part_order = 1;
  TwoPartShape two_part = TwoPartShape::trivial;
  int three_part_order = 1;   // thetabar candidate
  bool is_cyclic = true;
  bool three_part_cyclic = true;
  bool odd_part_cyclic = true;
  bool prime_to_3_part_cyclic = true;
  bool prime_to_a = true, prime_to_2a = true, prime_to_6a = true, prime_to_30a = true;
};

inline int subgroup_exponent_part(const UnitSubgroup& s, int p) {
  // order of the p-part = number of elements of p-power order
  int count = 0;
  for (int r : s.residues) {
    int k = s.modulus == 1 ? 1 : residue_order(r, s.modulus);
    while (k % p == 0) k /= p;
    if (k == 1) ++count;
  }
  return count;
}

inline GbarProfile profile(const UnitSubgroup& s) {
  GbarProfile p;
  p.order = s.order();
  if (s.modulus == 1 || p.order == 1) {
    // everything stays at the defaults
  } else {
    p.two_part_order = subgroup_exponent_part(s, 2);
    p.three_part_order = subgroup_exponent_part(s, 3);
    p.odd_part_order = p.order / p.two_part_order;
    int max_order = 1, max_2_order = 1, max_3_order = 1, max_odd = 1, max_p3 = 1;
    for (int r : s.residues) {
      int k = residue_order(r, s.modulus);
      max_order = std::max(max_order, k);
      int k2 = k, k3 = k;
      while (k2 % 2 == 0) k2 /= 2;
      while (k3 % 3 == 0) k3 /= 3;
      if (k2 == 1) max_2_order = std::max(max_2_order, k);
      if (k3 == 1) max_3_order = std::max(max_3_order, k);
      if (k % 2 == 1) max_odd = std::max(max_odd, k);
      if (k % 3 != 0) max_p3 = std::max(max_p3, k);
    }
    p.is_cyclic = max_order == p.order;
    p.odd_part_cyclic = max_odd == p.odd_part_order;
    p.three_part_cyclic = max_3_order == p.three_part_order;
    p.prime_to_3_part_cyclic = max_p3 * p.three_part_order == p.order;
    switch (p.two_part_order) {
      case 1: p.two_part = TwoPartShape::trivial; break;
      case 2: p.two_part = TwoPartShape::z2; break;
      case 4: p.two_part = max_2_order == 4 ? TwoPartShape::z4 : TwoPartShape::z2xz2; break;
      default: p.two_part = TwoPartShape::other; break;
    }
  }
  int a = s.modulus;
  p.prime_to_a = std::gcd(p.order, a) == 1;
  p.prime_to_2a = std::gcd(p.order, 2 * a) == 1;
  p.prime_to_6a = std::gcd(p.order, 6 * a) == 1;
  p.prime_to_30a = std::gcd(p.order, 30 * a) == 1;
  return p;
}

// --- per-type admissibility --------------------------------------------------

enum class TupleType { I = 1, II, III, IV, V, VI };

inline const char* to_string(TupleType t) {
  switch (t) {
    case TupleType::I: return "I";
    case TupleType::II: return "II";
    case TupleType::III: return "III";
    case TupleType::IV: return "IV";
    case TupleType::V: return "V";
    default: return "VI";
  }
}

inline std::optional<TupleType> tuple_type_from_string(const std::string& s) {
  if (s == "I") return TupleType::I;
  if (s == "II") return TupleType::II;
  if (s == "III") return TupleType::III;
  if (s == "IV") return TupleType::IV;
  if (s == "V") return TupleType::V;
  if (s == "VI") return TupleType::VI;
  return std::nullopt;
}

struct Admissibility {
  bool ok = true;
  std::string reason;  // violated clause when !ok
  explicit operator bool() const { return ok; }
};

inline Admissibility admissible(const UnitSubgroup& hbar, TupleType type, int a) {
  if (hbar.modulus != a) return {false, "subgroup modulus differs from a"};
  GbarProfile p = profile(hbar);
  switch (type) {
    case TupleType::I:
      if (!p.is_cyclic) return {false, "type I requires Gbar cyclic"};
      if (!p.prime_to_a) return {false, "type I requires |Gbar| prime to a"};
      return {};
    case TupleType::II:
      if (!p.odd_part_cyclic)
        return {false, "type II requires the odd part of Gbar cyclic"};
      if (std::gcd(p.odd_part_order, 2 * a) != 1)
        return {false, "type II requires the odd part of Gbar of order prime to 2a"};
      if (p.two_part != TwoPartShape::trivial && p.two_part != TwoPartShape::z2 &&
          p.two_part != TwoPartShape::z2xz2)
        return {false,
                "type II requires the 2-part of Gbar elementary abelian of rank <= 2"};
      return {};
    case TupleType::III: {
      if (!p.three_part_cyclic)
        return {false, "type III requires the 3-part of Gbar cyclic"};
      if (!p.prime_to_3_part_cyclic)
        return {false, "type III requires Gbar = 3-group x cyclic prime to 6a"};
      int rest = p.order / p.three_part_order;
      if (std::gcd(rest, 6 * a) != 1)
        return {false, "type III requires the non-3-part of Gbar of order prime to 6a"};
      return {};
    }
    case TupleType::IV:
      if (p.three_part_order != 1)
        return {false, "type IV requires Gbar of order prime to 3"};
      if (!p.odd_part_cyclic)
        return {false, "type IV requires the odd part of Gbar cyclic"};
      if (std::gcd(p.odd_part_order, 6 * a) != 1)
        return {false, "type IV requires the odd part of Gbar of order prime to 6a"};
      if (p.two_part != TwoPartShape::trivial && p.two_part != TwoPartShape::z2)
        return {false, "type IV requires the 2-part of Gbar of order 1 or 2"};
      return {};
    case TupleType::V:
      if (!p.is_cyclic) return {false, "type V requires Gbar cyclic"};
      if (std::gcd(p.order, 30 * a) != 1)
        return {false, "type V requires |Gbar| prime to 30a"};
      return {};
    case TupleType::VI:
      if (!p.odd_part_cyclic)
        return {false, "type VI requires the odd part of Gbar cyclic"};
      if (std::gcd(p.odd_part_order, 30 * a) != 1)
        return {false, "type VI requires the odd part of Gbar of order prime to 30a"};
      if (p.two_part != TwoPartShape::trivial && p.two_part != TwoPartShape::z2)
        return {false, "type VI requires the 2-part of Gbar of order 1 or 2"};
      return {};
  }
  return {false, "unknown type"};
}

// --- serialization -----------------------------------------------------------
// Canonical form "a=15;[1,4,11,14]": set equality iff string equality.

inline std::string to_string(const UnitSubgroup& s) {
  std::ostringstream os;
  os << "a=" << s.modulus << ";[";
  for (size_t i = 0; i < s.residues.size(); ++i) {
    if (i) os << ',';
    os << s.residues[i];
  }
  os << ']';
  return os.str();
}

inline std::vector<int> parse_residue_list(const std::string& body) {
  // body is the text between '[' and ']'
  std::vector<int> out;
  if (body.empty()) return out;
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) fail("ParseError", "bad residue '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

inline UnitSubgroup parse_unit_subgroup(const std::string& text) {
  if (text.rfind("a=", 0) != 0) fail("ParseError", "expected 'a=' prefix");
  size_t semi = text.find(';');
  if (semi == std::string::npos) fail("ParseError", "expected ';' after modulus");
  int a = std::stoi(text.substr(2, semi - 2));
  std::string rest = text.substr(semi + 1);
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']')
    fail("ParseError", "expected bracketed residue list");
  auto residues = parse_residue_list(rest.substr(1, rest.size() - 2));
  if (a == 1) return trivial_unit_subgroup(1);
  return unit_subgroup(a, residues);
}

}  // namespace spaceform

#endif  // SPACEFORM_RESIDUES_HPP_
