#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace spaceform;

TEST_CASE("named groups") {
  Group q8 = quaternion(8);
  int invol = 0;
  for (int x = 1; x < 8; ++x)
    if (q8.element_order(x) == 2) ++invol;
  REQUIRE(invol == 1);

  REQUIRE(sl2_3().order() == 24);
  REQUIRE(derived_subgroup(sl2_3()).order() == 8);
  REQUIRE(sl2_5().order() == 120);
  REQUIRE(derived_subgroup(sl2_5()).order() == 120);
  REQUIRE(center(sl2_5()).order() == 2);

  std::vector<Automorphism> act{{0, 1, 2}, {0, 2, 1}, {0, 1, 2}, {0, 2, 1}};
  Group dic = semidirect_product(cyclic(3), cyclic(4), act);
  REQUIRE(is_isomorphic(binary_dihedral(12), dic).has_value());

  try {
    quaternion(12);
    FAIL("expected BadParameter");
  } catch (const Error& e) {
    REQUIRE(e.kind() == "BadParameter");
  }
  try {
    binary_dihedral(10);
    FAIL("expected BadParameter");
  } catch (const Error& e) {
    REQUIRE(e.kind() == "BadParameter");
  }
}

TEST_CASE("validate_tuple: accepted and rejected shapes") {
  SpaceFormTuple ok;
  ok.type = TupleType::I;
  ok.a = 3;
  ok.gbar = unit_subgroup(3, {1, 2});
  ok.b = 1;
  ok.t = 4;
  ok.g = 12;
  REQUIRE(validate_tuple(ok).empty());

  // t = tbar would present the dihedral group; rejected
  SpaceFormTuple s3 = ok;
  s3.t = 2;
  s3.g = 6;
  auto v1 = validate_tuple(s3);
  REQUIRE_FALSE(v1.empty());
  REQUIRE(v1[0].find("t must exceed tbar") != std::string::npos);

  // theta must exceed thetabar (3-part of Gbar realized mod 7)
  SpaceFormTuple t3;
  t3.type = TupleType::III;
  t3.a = 7;
  t3.gbar = unit_subgroup(7, {1, 2, 4});
  t3.b = 1;
  t3.theta = 3;
  t3.g = 8 * 7 * 1 * 3;
  bool theta_violation = false;
  for (const auto& s : validate_tuple(t3))
    if (s.find("theta must exceed thetabar") != std::string::npos) theta_violation = true;
  REQUIRE(theta_violation);
  t3.theta = 9;
  t3.g = 8 * 7 * 9;
  REQUIRE(validate_tuple(t3).empty());

  // b rule: primes of b must be exactly the primes of bbar, with room to spare
  SpaceFormTuple bb;
  bb.type = TupleType::I;
  bb.a = 7;
  bb.gbar = unit_subgroup(7, {1, 2, 4});  // bbar = 3
  bb.b = 3;                               // needs at least 9
  bb.t = 1;
  bb.g = 21;
  bool b_violation = false;
  for (const auto& s : validate_tuple(bb))
    if (s.find("b must be bbar") != std::string::npos) b_violation = true;
  REQUIRE(b_violation);
  bb.b = 9;
  bb.g = 63;
  REQUIRE(validate_tuple(bb).empty());
  bb.b = 15;
  bb.g = 105;
  REQUIRE_FALSE(validate_tuple(bb).empty());  // 5 does not divide bbar

  // Gbar0 rules
  SpaceFormTuple q16;
  q16.type = TupleType::II;
  q16.a = 1;
  q16.gbar = trivial_unit_subgroup(1);
  q16.b = 1;
  q16.t = 16;
  q16.g = 16;
  REQUIRE_FALSE(validate_tuple(q16).empty());  // Gbar0 missing
  q16.gbar0 = trivial_unit_subgroup(1);
  REQUIRE(validate_tuple(q16).empty());

  SpaceFormTuple g48;
  g48.type = TupleType::II;
  g48.a = 3;
  g48.gbar = unit_subgroup(3, {1, 2});
  g48.b = 1;
  g48.t = 16;
  g48.g = 48;
  g48.gbar0 = unit_subgroup(3, {1, 2});
  REQUIRE(validate_tuple(g48).empty());
  g48.gbar0 = trivial_unit_subgroup(3);
  REQUIRE(validate_tuple(g48).empty());
  g48.t = 8;
  g48.g = 24;
  REQUIRE_FALSE(validate_tuple(g48).empty());  // Gbar0 forbidden at t = 8

  // the hypothetical quaternionic group with a faithful order-4 image:
  // Gbar = all of (Z/5)* is cyclic of order 4, which type II forbids
  SpaceFormTuple fake;
  fake.type = TupleType::II;
  fake.a = 5;
  fake.gbar = unit_subgroup(5, {1, 2, 3, 4});
  fake.b = 1;
  fake.t = 8;
  fake.g = 40;
  bool shape_violation = false;
  for (const auto& s : validate_tuple(fake))
    if (s.find("2-part of Gbar") != std::string::npos) shape_violation = true;
  REQUIRE(shape_violation);
}

TEST_CASE("build_tuple: known identifications") {
  SpaceFormTuple t5 = parse_tuple("TYPE=V;g=120;a=1;Gbar=[];b=1");
  REQUIRE(is_isomorphic(build_tuple(t5).group, sl2_5()).has_value());

  SpaceFormTuple t3 = parse_tuple("TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3");
  REQUIRE(is_isomorphic(build_tuple(t3).group, sl2_3()).has_value());

  SpaceFormTuple t4 = parse_tuple("TYPE=IV;g=48;a=1;Gbar=[];b=1;theta=3");
  StructuredGroup oct = build_tuple(t4);
  REQUIRE(oct.group.order() == 48);
  int invol = 0;
  for (int x = 1; x < 48; ++x)
    if (oct.group.element_order(x) == 2) ++invol;
  REQUIRE(invol == 1);

  try {
    build_tuple(parse_tuple("TYPE=I;g=6;a=3;Gbar=[1,2];b=1;t=2"));
    FAIL("expected InvalidTuple");
  } catch (const Error& e) {
    REQUIRE(e.kind() == "InvalidTuple");
  }
}

TEST_CASE("build_tuple is deterministic and honors the order formula") {
  for (const auto& tu : enumerate_tuples(64)) {
    StructuredGroup a = build_tuple(tu), b = build_tuple(tu);
    REQUIRE(a.group.order() == tu.g);
    REQUIRE(format_table_text(a.group) == format_table_text(b.group));
  }
}

TEST_CASE("built groups satisfy the free-action necessary conditions") {
  for (const auto& tu : enumerate_tuples(72)) {
    StructuredGroup s = build_tuple(tu);
    const Group& g = s.group;
    int invol = 0;
    for (int x = 1; x < g.order(); ++x)
      if (g.element_order(x) == 2) ++invol;
    REQUIRE(invol <= 1);
    REQUIRE_FALSE(necessary_conditions(g).has_value());
  }
}

TEST_CASE("witnesses match the tuple") {
  StructuredGroup s =
      build_tuple(parse_tuple("TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8"));
  REQUIRE(s.witness("A").order() == 15);
  REQUIRE(s.witness("B").order() == 1);
  REQUIRE(s.witness("T").order() == 8);
  REQUIRE(is_normal(s.group, s.witness("A")));
  auto [tg, ids] = subgroup_group(s.witness("T"));
  REQUIRE(shape_of_2group(tg) == TwoGroupShape::quaternionic);

  StructuredGroup s6 = build_tuple(parse_tuple("TYPE=VI;g=240;a=1;Gbar=[];b=1"));
  REQUIRE(s6.witness("2A5").order() == 120);
  REQUIRE(s6.witness("Phi").order() == 4);
  auto [fg, fids] = subgroup_group(s6.witness("2A5"));
  REQUIRE(is_isomorphic(fg, sl2_5()).has_value());
}

TEST_CASE("enumerate_tuples: frozen small counts") {
  auto e1 = enumerate_tuples(1);
  REQUIRE(e1.size() == 1);
  REQUIRE(format_tuple(e1[0]) == "TYPE=I;g=1;a=1;Gbar=[];b=1;t=1");

  // orders 1..8: one cyclic group per order plus the quaternion group
  auto e8 = enumerate_tuples(8);
  REQUIRE(e8.size() == 9);
  int order8 = 0;
  for (const auto& t : e8)
    if (t.g == 8) ++order8;
  REQUIRE(order8 == 2);

  // order 12: the cyclic and the dicyclic group, nothing else
  auto e12 = enumerate_tuples(12);
  std::vector<std::string> at12;
  for (const auto& t : e12)
    if (t.g == 12) at12.push_back(format_tuple(t));
  REQUIRE(at12 == std::vector<std::string>{"TYPE=I;g=12;a=3;Gbar=[1];b=1;t=4",
                                           "TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4"});

  // output is sorted and unique
  auto e100 = enumerate_tuples(100);
  for (size_t i = 1; i < e100.size(); ++i) {
    REQUIRE_FALSE(e100[i] == e100[i - 1]);
    REQUIRE(e100[i - 1].g <= e100[i].g);
  }

  // every order-8 2-group appears correctly: of the five groups of order 8,
  // exactly Z/8 and Q8 pass the necessary conditions
  std::vector<Group> order8_groups{cyclic(8), quaternion(8), oracle::dihedral_8(),
                                   direct_product(cyclic(4), cyclic(2)),
                                   direct_product(direct_product(cyclic(2), cyclic(2)),
                                                  cyclic(2))};
  int passing = 0;
  for (const Group& g : order8_groups)
    if (!necessary_conditions(g)) ++passing;
  REQUIRE(passing == 2);
}

TEST_CASE("enumerate bound interacts with the b rule") {
  // smallest type-I group with b > 1 is 7:9 of order 63
  auto e = enumerate_tuples(126);
  bool found63 = false, found126 = false;
  for (const auto& t : e) {
    if (t.g == 63 && t.b == 9) found63 = true;
    if (t.g == 126 && t.b == 9 && t.t == 2) found126 = true;
    REQUIRE(t.g <= 126);
  }
  REQUIRE(found63);
  REQUIRE(found126);
}
