// The canonical invariant tuple describing a group that acts freely and
// isometrically on a sphere: a type I..VI, the orders g and a, a subgroup
// Gbar of (Z/a)*, in one case a second subgroup Gbar0, and the auxiliary
// parameters b and t (types I, II) or theta (types III, IV).
//
// validate_tuple checks the full per-type constraint set; violations are
// returned as data, not thrown.

#ifndef SPACEFORM_TUPLE_HPP_
#define SPACEFORM_TUPLE_HPP_

#include "residues.hpp"

namespace spaceform {

struct SpaceFormTuple {
  TupleType type = TupleType::I;
  int g = 1;
  int a = 1;
  UnitSubgroup gbar = trivial_unit_subgroup(1);
  std::optional<UnitSubgroup> gbar0;  // type II with 16 | g only
  int b = 1;
  int t = 1;      // power of 2; meaningful for types I and II
  int theta = 1;  // power of 3; meaningful for types III and IV

  bool operator==(const SpaceFormTuple& o) const {
    return type == o.type && g == o.g && a == o.a && gbar == o.gbar &&
           gbar0 == o.gbar0 && b == o.b && t == o.t && theta == o.theta;
  }
};

inline bool is_power_of(int n, int p) {
  if (n < 1) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int p = 2; (long long)p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline int valuation(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

// odd-order residues of a unit subgroup; a subgroup since the group is abelian
inline UnitSubgroup odd_part_subgroup(const UnitSubgroup& s) {
  if (s.modulus == 1) return s;
  std::vector<int> odd;
  for (int r : s.residues)
    if (residue_order(r, s.modulus) % 2 == 1) odd.push_back(r);
  UnitSubgroup out;
  out.modulus = s.modulus;
  out.residues = std::move(odd);
  return out;
}

// 2-power-order residues of a unit subgroup
inline UnitSubgroup two_part_subgroup(const UnitSubgroup& s) {
  if (s.modulus == 1) return s;
  std::vector<int> two;
  for (int r : s.residues)
    if (is_power_of(residue_order(r, s.modulus), 2)) two.push_back(r);
  UnitSubgroup out;
  out.modulus = s.modulus;
  out.residues = std::move(two);
  return out;
}

// bbar per type: the odd part of |Gbar| for types I/II/IV/V/VI, and the
// non-3-part for type III.
inline int tuple_bbar(const SpaceFormTuple& tu) {
  GbarProfile p = profile(tu.gbar);
  if (tu.type == TupleType::III) return p.order / p.three_part_order;
  return p.odd_part_order;
}

inline int tuple_tbar(const SpaceFormTuple& tu) { return profile(tu.gbar).two_part_order; }
inline int tuple_thetabar(const SpaceFormTuple& tu) {
  return profile(tu.gbar).three_part_order;
}

// b must be bbar times nontrivial powers of every prime dividing bbar
inline bool b_rule_holds(int b, int bbar) {
  if (bbar == 1) return b == 1;
  auto pb = prime_factors(b), pbb = prime_factors(bbar);
  if (pb != pbb) return false;
  for (int p : pbb)
    if (valuation(b, p) < valuation(bbar, p) + 1) return false;
  return true;
}

inline std::vector<std::string> validate_tuple(const SpaceFormTuple& tu) {
  std::vector<std::string> v;
  auto bad = [&](const std::string& s) { v.push_back(s); };
  if (tu.g < 1 || tu.a < 1 || tu.b < 1 || tu.t < 1 || tu.theta < 1) {
    bad("parameters must be positive");
    return v;
  }
  if (tu.gbar.modulus != tu.a) {
    bad("Gbar modulus must equal a");
    return v;
  }
  bool type12 = tu.type == TupleType::I || tu.type == TupleType::II;
  bool type34 = tu.type == TupleType::III || tu.type == TupleType::IV;

  // a parity and coprimality
  if (type12 && tu.a % 2 == 0) bad("a must be odd");
  if (type34 && std::gcd(tu.a, 6) != 1) bad("a must be prime to 6");
  if (!type12 && !type34 && std::gcd(tu.a, 30) != 1) bad("a must be prime to 30");

  // Gbar shape
  if (Admissibility adm = admissible(tu.gbar, tu.type, tu.a); !adm.ok) bad(adm.reason);

  // b rule
  int bbar = tuple_bbar(tu);
  if (!b_rule_holds(tu.b, bbar))
    bad("b must be bbar times nontrivial powers of exactly the primes dividing bbar");

  // t / theta rules and unused-parameter hygiene
  int tbar = tuple_tbar(tu), thetabar = tuple_thetabar(tu);
  if (type12) {
    if (tu.theta != 1) bad("theta is not a parameter of types I and II");
    if (!is_power_of(tu.t, 2)) bad("t must be a power of 2");
  } else {
    if (tu.t != 1) bad("t is not a parameter of types III..VI");
  }
  switch (tu.type) {
    case TupleType::I:
      if (tbar != 1 && tu.t <= tbar) bad("t must exceed tbar");
      if (tu.gbar0) bad("Gbar0 is only defined for type II");
      break;
    case TupleType::II: {
      if (tu.t < 8) bad("t must be a quaternionic order, at least 8");
      if (tu.t == 8 && tu.gbar0) bad("Gbar0 must not be specified when t = 8");
      if (tu.t >= 16) {
        if (!tu.gbar0) {
          bad("Gbar0 must be specified when 16 divides g");
        } else {
          const UnitSubgroup& g0 = *tu.gbar0;
          if (g0.modulus != tu.a || !g0.is_subgroup_of(tu.gbar)) {
            bad("Gbar0 must be a subgroup of Gbar");
          } else {
            if (!odd_part_subgroup(tu.gbar).is_subgroup_of(g0))
              bad("Gbar0 must contain the odd part of Gbar");
            int index = tu.gbar.order() / g0.order();
            if (tbar == 4 && index != 2)
              bad("Gbar0 must have index 2 in Gbar when tbar = 4");
            if (tbar != 4 && index > 2) bad("Gbar0 must have index at most 2 in Gbar");
          }
        }
      }
      break;
    }
    case TupleType::III:
      if (!is_power_of(tu.theta, 3)) bad("theta must be a power of 3");
      if (tu.theta <= thetabar) bad("theta must exceed thetabar");
      if (tu.gbar0) bad("Gbar0 is only defined for type II");
      break;
    case TupleType::IV:
      if (!is_power_of(tu.theta, 3) || tu.theta < 3)
        bad("theta must be a nontrivial power of 3");
      if (tu.gbar0) bad("Gbar0 is only defined for type II");
      break;
    case TupleType::V:
    case TupleType::VI:
      if (tu.theta != 1) bad("theta is not a parameter of types V and VI");
      if (tu.gbar0) bad("Gbar0 is only defined for type II");
      break;
  }

  // order formula
  long long expect = 0;
  switch (tu.type) {
    case TupleType::I:
    case TupleType::II: expect = (long long)tu.a * tu.b * tu.t; break;
    case TupleType::III: expect = 8LL * tu.a * tu.b * tu.theta; break;
    case TupleType::IV: expect = 16LL * tu.a * tu.b * tu.theta; break;
    case TupleType::V: expect = 120LL * tu.a * tu.b; break;
    case TupleType::VI: expect = 240LL * tu.a * tu.b; break;
  }
  if (expect != tu.g) bad("g must equal the per-type product of the parameters");
  return v;
}

inline bool tuple_valid(const SpaceFormTuple& tu) { return validate_tuple(tu).empty(); }

// --- canonical text form -----------------------------------------------------
// "TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8", with Gbar0 directly after
// Gbar when present, and theta in place of t for types III/IV.  For a = 1 the
// residue lists are printed empty.

inline std::string residues_for_text(const UnitSubgroup& s) {
  if (s.modulus == 1) return "";
  std::string out;
  for (size_t i = 0; i < s.residues.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.residues[i]);
  }
  return out;
}

inline std::string format_tuple(const SpaceFormTuple& tu) {
  std::ostringstream os;
  os << "TYPE=" << to_string(tu.type) << ";g=" << tu.g << ";a=" << tu.a << ";Gbar=["
     << residues_for_text(tu.gbar) << ']';
  if (tu.gbar0) os << ";Gbar0=[" << residues_for_text(*tu.gbar0) << ']';
  os << ";b=" << tu.b;
  if (tu.type == TupleType::I || tu.type == TupleType::II) os << ";t=" << tu.t;
  if (tu.type == TupleType::III || tu.type == TupleType::IV) os << ";theta=" << tu.theta;
  return os.str();
}

inline SpaceFormTuple parse_tuple(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, ';')) parts.push_back(cur);
  size_t at = 0;
  auto next = [&](const std::string& key) -> std::string {
    if (at >= parts.size())
      fail("ParseError", "tuple field '" + key + "' is missing");
    const std::string& p = parts[at];
    if (p.rfind(key + "=", 0) != 0)
      fail("ParseError", "expected tuple field '" + key + "', found '" + p + "'");
    ++at;
    return p.substr(key.size() + 1);
  };
  auto as_int = [](const std::string& key, const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(s, &pos);
    } catch (const std::exception&) {
      fail("ParseError", "tuple field '" + key + "' is not an integer");
    }
    if (pos != s.size() || v < 1)
      fail("ParseError", "tuple field '" + key + "' must be a positive integer");
    return v;
  };
  auto as_residues = [](const std::string& key, const std::string& s) {
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
      fail("ParseError", "tuple field '" + key + "' must be a bracketed list");
    return parse_residue_list(s.substr(1, s.size() - 2));
  };

  SpaceFormTuple tu;
  auto type = tuple_type_from_string(next("TYPE"));
  if (!type) fail("ParseError", "tuple field 'TYPE' must be one of I..VI");
  tu.type = *type;
  tu.g = as_int("g", next("g"));
  tu.a = as_int("a", next("a"));
  auto gbar_res = as_residues("Gbar", next("Gbar"));
  if (tu.a == 1 && !gbar_res.empty() && gbar_res != std::vector<int>{0})
    fail("ParseError", "tuple field 'Gbar' must be empty when a = 1");
  tu.gbar = tu.a == 1 ? trivial_unit_subgroup(1) : unit_subgroup(tu.a, gbar_res);
  if (at < parts.size() && parts[at].rfind("Gbar0=", 0) == 0) {
    auto g0 = as_residues("Gbar0", next("Gbar0"));
    tu.gbar0 = tu.a == 1 ? trivial_unit_subgroup(1) : unit_subgroup(tu.a, g0);
  }
  tu.b = as_int("b", next("b"));
  if (tu.type == TupleType::I || tu.type == TupleType::II)
    tu.t = as_int("t", next("t"));
  if (tu.type == TupleType::III || tu.type == TupleType::IV)
    tu.theta = as_int("theta", next("theta"));
  if (at != parts.size())
    fail("ParseError", "unexpected tuple field '" + parts[at] + "'");
  return tu;
}

}  // namespace spaceform

#endif  // SPACEFORM_TUPLE_HPP_
