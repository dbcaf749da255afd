#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace spaceform;

TEST_CASE("necessary conditions: the negative corpus") {
  auto code_of = [](const Group& g) {
    auto r = necessary_conditions(g);
    return r ? r->code : std::string("pass");
  };
  REQUIRE(code_of(oracle::symmetric_3()) == "multiple_involutions");
  REQUIRE(code_of(oracle::dihedral_8()) == "multiple_involutions");
  REQUIRE(code_of(oracle::klein_4()) == "multiple_involutions");
  REQUIRE(code_of(oracle::alternating_4()) == "multiple_involutions");
  REQUIRE(code_of(oracle::symmetric_4()) == "multiple_involutions");
  REQUIRE(code_of(oracle::alternating_5()) == "multiple_involutions");
  REQUIRE(code_of(oracle::elementary_9()) == "noncyclic_pq");
  REQUIRE(code_of(oracle::frobenius_21()) == "noncyclic_pq");
  REQUIRE(code_of(sl2_5()) == "pass");
  REQUIRE(code_of(quaternion(8)) == "pass");

  auto s3rej = necessary_conditions(oracle::symmetric_3());
  REQUIRE(s3rej->witnesses.size() == 3);  // the three involutions
  auto f21rej = necessary_conditions(oracle::frobenius_21());
  REQUIRE(f21rej->detail.find("order 21") != std::string::npos);
  auto e9rej = necessary_conditions(oracle::elementary_9());
  REQUIRE(e9rej->detail.find("order 9") != std::string::npos);
}

TEST_CASE("metacyclic decomposition: examples") {
  Group z15 = cyclic(15);
  MetacyclicDecomposition d1 = metacyclic_decompose(z15);
  REQUIRE(d1.A.order() == 15);
  REQUIRE(d1.B.order() == 1);

  Group f21 = oracle::frobenius_21();
  MetacyclicDecomposition d2 = metacyclic_decompose(f21);
  REQUIRE(d2.A.order() == 7);
  REQUIRE(d2.B.order() == 3);
  // the exponent of the nontrivial B elements is a cube root of 1 mod 7
  for (auto [x, e] : d2.action)
    if (x != 0) REQUIRE((e == 2 || e == 4));

  // 7:3 x Z/5: the central Sylow 5 joins the derived subgroup
  Group h = direct_product(f21, cyclic(5));
  MetacyclicDecomposition d3 = metacyclic_decompose(h);
  REQUIRE(d3.A.order() == 35);
  REQUIRE(d3.B.order() == 3);

  try {
    metacyclic_decompose(oracle::klein_4());
    FAIL("expected NonCyclicSylow");
  } catch (const Error& e) {
    REQUIRE(e.kind() == "NonCyclicSylow");
  }
}

TEST_CASE("metacyclic decomposition is the unique one with the two properties") {
  // exhaustively over every odd-order group with cyclic Sylow subgroups that
  // shows up in the enumerated corpus, plus handmade Frobenius fixtures
  std::vector<Group> corpus;
  for (const auto& tu : enumerate_tuples(200))
    if (tu.g % 2 == 1) corpus.push_back(build_tuple(tu).group);
  corpus.push_back(oracle::frobenius_21());
  corpus.push_back(direct_product(oracle::frobenius_21(), cyclic(5)));

  for (const Group& h : corpus) {
    if (h.order() > 200) continue;
    MetacyclicDecomposition dec = metacyclic_decompose(h);
    int hits = 0;
    for (const auto& ids : oracle::all_normal_subgroups(h)) {
      SubgroupRef cand{h, ids};
      bool cyclic_a = false;
      for (int x : ids)
        if (h.element_order(x) == (int)ids.size()) cyclic_a = true;
      if (ids.size() == 1) cyclic_a = true;
      if (!cyclic_a) continue;
      int index = h.order() / (int)ids.size();
      if (std::gcd(index, (int)ids.size()) != 1) continue;
      auto [q, pi] = quotient_group(h, cand);
      bool cyclic_q = false;
      for (int x = 0; x < q.order(); ++x)
        if (q.element_order(x) == q.order()) cyclic_q = true;
      if (!cyclic_q) continue;
      // every nontrivial Sylow subgroup of H/A must act nontrivially on A;
      // it is enough to test one element whose image generates that Sylow
      bool all_act = true;
      for (int p : prime_factors(index)) {
        int ppart = 1;
        for (int v = 0; v < valuation(index, p); ++v) ppart *= p;
        bool acts = false;
        for (int x = 0; x < h.order(); ++x) {
          if (q.element_order(pi(x)) != ppart) continue;
          for (int m : ids)
            if (h.conjugate(x, m) != m) acts = true;
          break;
        }
        if (!acts) all_act = false;
      }
      if (!all_act) continue;
      ++hits;
      REQUIRE(ids == dec.A.elements);
    }
    REQUIRE(hits == 1);
  }
}

TEST_CASE("classification: canonical examples") {
  auto tuple_of = [](const Group& g) {
    ClassificationResult c = classify(g);
    REQUIRE(c.accepted());
    return format_tuple(*c.tuple);
  };
  REQUIRE(tuple_of(quaternion(8)) == "TYPE=II;g=8;a=1;Gbar=[];b=1;t=8");
  REQUIRE(tuple_of(sl2_3()) == "TYPE=III;g=24;a=1;Gbar=[];b=1;theta=3");
  REQUIRE(tuple_of(sl2_5()) == "TYPE=V;g=120;a=1;Gbar=[];b=1");
  REQUIRE(tuple_of(binary_dihedral(12)) == "TYPE=I;g=12;a=3;Gbar=[1,2];b=1;t=4");
  REQUIRE(tuple_of(quaternion(16)) == "TYPE=II;g=16;a=1;Gbar=[];Gbar0=[];b=1;t=16");
  REQUIRE(tuple_of(cyclic(12)) == "TYPE=I;g=12;a=3;Gbar=[1];b=1;t=4");

  // the (3x5):Q8 group: the three classes of 4-elements invert the 3-part
  // (residue 11), the 5-part (residue 4), or both (residue 14)
  StructuredGroup wolf =
      build_tuple(parse_tuple("TYPE=II;g=120;a=15;Gbar=[1,4,11,14];b=1;t=8"));
  ClassificationResult c = classify(wolf.group);
  REQUIRE(c.accepted());
  REQUIRE(c.tuple->a == 15);
  // CRT oracle for the expected residues
  auto crt = [](int mod3, int mod5) {
    for (int r = 0; r < 15; ++r)
      if (r % 3 == (mod3 + 3) % 3 && r % 5 == (mod5 + 5) % 5) return r;
    return -1;
  };
  std::vector<int> expected{1, crt(1, -1), crt(-1, 1), crt(-1, -1)};
  std::sort(expected.begin(), expected.end());
  REQUIRE(c.tuple->gbar.residues == expected);

  ClassificationResult bad = classify(direct_product(cyclic(2), cyclic(4)));
  REQUIRE_FALSE(bad.accepted());
  REQUIRE(bad.rejection->code == "multiple_involutions");
}

TEST_CASE("classification witnesses are structural") {
  StructuredGroup s = build_tuple(parse_tuple("TYPE=IV;g=48;a=1;Gbar=[];b=1;theta=3"));
  ClassificationResult c = classify(s.group);
  REQUIRE(c.accepted());
  std::map<std::string, std::vector<int>> w(c.witnesses.begin(), c.witnesses.end());
  REQUIRE(w.count("A"));
  REQUIRE(w.count("Q8"));
  REQUIRE(w.at("Q8").size() == 8);
  REQUIRE(is_normal(s.group, SubgroupRef{s.group, w.at("Q8")}));
  REQUIRE(w.count("Theta"));
  REQUIRE(w.at("Theta").size() == 3);
  REQUIRE(w.count("Phi"));
  REQUIRE(w.at("Phi").size() == 4);

  StructuredGroup s6 = build_tuple(parse_tuple("TYPE=VI;g=240;a=1;Gbar=[];b=1"));
  ClassificationResult c6 = classify(s6.group);
  REQUIRE(c6.accepted());
  std::map<std::string, std::vector<int>> w6(c6.witnesses.begin(), c6.witnesses.end());
  REQUIRE(w6.at("2A5").size() == 120);
  REQUIRE(is_normal(s6.group, SubgroupRef{s6.group, w6.at("2A5")}));
  REQUIRE(w6.count("Phi"));
}

TEST_CASE("round trip identity on every tuple up to order 120") {
  for (const auto& tu : enumerate_tuples(120)) {
    StructuredGroup s = build_tuple(tu);
    ClassificationResult c = classify(s.group);
    REQUIRE(c.accepted());
    REQUIRE(*c.tuple == tu);
    // A is normal and matches a
    std::map<std::string, std::vector<int>> w(c.witnesses.begin(), c.witnesses.end());
    REQUIRE((int)w.at("A").size() == tu.a);
    REQUIRE(is_normal(s.group, SubgroupRef{s.group, w.at("A")}));
  }
}

TEST_CASE("paranoid classification rebuilds and compares") {
  ClassifyOptions opts;
  opts.paranoid = true;
  for (const auto& tu : enumerate_tuples(48)) {
    ClassificationResult c = classify(build_tuple(tu).group, opts);
    REQUIRE(c.accepted());
  }
}

TEST_CASE("invariants_equal decides isomorphism of classified groups") {
  ClassificationResult cq8 = classify(quaternion(8));
  ClassificationResult cz8 = classify(cyclic(8));
  REQUIRE_FALSE(invariants_equal(*cq8.tuple, *cz8.tuple));  // types differ
  REQUIRE(invariants_equal(*cq8.tuple, *classify(binary_dihedral(8)).tuple));

  // agreement with the brute-force oracle on all pairs of equal order <= 72
  auto tuples = enumerate_tuples(72);
  std::vector<Group> groups;
  for (const auto& tu : tuples) groups.push_back(build_tuple(tu).group);
  for (size_t i = 0; i < tuples.size(); ++i)
    for (size_t j = i + 1; j < tuples.size(); ++j) {
      if (tuples[i].g != tuples[j].g) continue;
      bool by_invariants = invariants_equal(tuples[i], tuples[j]);
      bool by_oracle = is_isomorphic(groups[i], groups[j]).has_value();
      REQUIRE(by_invariants == by_oracle);
    }
}

TEST_CASE("two type II tuples differing only in Gbar0 give different groups") {
  SpaceFormTuple t1 = parse_tuple("TYPE=II;g=48;a=3;Gbar=[1,2];Gbar0=[1,2];b=1;t=16");
  SpaceFormTuple t2 = parse_tuple("TYPE=II;g=48;a=3;Gbar=[1,2];Gbar0=[1];b=1;t=16");
  REQUIRE(validate_tuple(t1).empty());
  REQUIRE(validate_tuple(t2).empty());
  REQUIRE_FALSE(invariants_equal(t1, t2));
  Group g1 = build_tuple(t1).group, g2 = build_tuple(t2).group;
  REQUIRE_FALSE(is_isomorphic(g1, g2).has_value());
  ClassificationResult c1 = classify(g1), c2 = classify(g2);
  REQUIRE(*c1.tuple == t1);
  REQUIRE(*c2.tuple == t2);
}
