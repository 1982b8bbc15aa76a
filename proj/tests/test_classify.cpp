#include <catch2/catch_amalgamated.hpp>

#include "amsg/classify.hpp"
#include "oracles.hpp"

using amsg::DivisorChain;
using amsg::Int;
using amsg::MinimalSystemCase;

TEST_CASE("divisor chain validation") {
  CHECK_NOTHROW(amsg::divisor_chain({6, 2, 1}));
  CHECK_THROWS_AS(amsg::divisor_chain({6, 4, 1}), amsg::input_error);  // 4 | 6 fails
  CHECK_THROWS_AS(amsg::divisor_chain({6, 2}), amsg::input_error);     // must end at 1
  CHECK_THROWS_AS(amsg::divisor_chain({6}), amsg::input_error);
  CHECK_THROWS_AS(amsg::divisor_chain({1, 1}), amsg::input_error);
}

TEST_CASE("divisor chains of small degrees") {
  const auto c6 = amsg::divisor_chains(6);
  REQUIRE(c6.size() == 3);
  CHECK(c6[0].e == std::vector<Int>{6, 1});
  CHECK(c6[1].e == std::vector<Int>{6, 2, 1});
  CHECK(c6[2].e == std::vector<Int>{6, 3, 1});

  CHECK(amsg::divisor_chains(7).size() == 1);
  CHECK(amsg::divisor_chains(12).size() == 8);
  CHECK_THROWS_AS(amsg::divisor_chains(1), amsg::input_error);
  CHECK_THROWS_AS(amsg::divisor_chains(0), amsg::input_error);
}

TEST_CASE("chain counts follow the ordered-factorization recurrence") {
  for (Int n = 2; n <= 48; ++n) {
    const auto chains = amsg::divisor_chains(n);
    CHECK(Int(chains.size()) == test_oracle::chain_count(n));
    // lexicographic emission order, all valid
    for (size_t i = 0; i < chains.size(); ++i) {
      CHECK_NOTHROW(amsg::divisor_chain(chains[i].e));
      if (i > 0) CHECK(chains[i - 1].e < chains[i].e);
    }
  }
}

TEST_CASE("build_extremal on the worked instances") {
  const auto e1 = amsg::build_extremal(amsg::divisor_chain({6, 2, 1}));
  CHECK(e1.generators == std::vector<Int>{6, 4, 17});
  CHECK(e1.conductor == 20);

  const auto e2 = amsg::build_extremal(amsg::divisor_chain({4, 2, 1}));
  CHECK(e2.generators == std::vector<Int>{4, 2, 7});
  CHECK(e2.conductor == 6);

  for (Int n : {2, 3, 5, 9, 14}) {
    const auto e = amsg::build_extremal(amsg::divisor_chain({n, 1}));
    CHECK(e.generators == std::vector<Int>{n, n - 1});
    CHECK(e.conductor == (n - 1) * (n - 2));
  }
}

TEST_CASE("enumeration of AM sequences") {
  const auto s2 = amsg::enumerate_am_sequences(2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].terms == std::vector<Int>{2, 1});

  const auto s4 = amsg::enumerate_am_sequences(4);
  REQUIRE(s4.size() == 4);
  CHECK(s4[0].terms == std::vector<Int>{4, 1});
  CHECK(s4[1].terms == std::vector<Int>{4, 2, 5});
  CHECK(s4[2].terms == std::vector<Int>{4, 2, 7});
  CHECK(s4[3].terms == std::vector<Int>{4, 3});
  const Int conductors4[] = {0, 4, 6, 6};
  for (size_t i = 0; i < 4; ++i)
    CHECK(amsg::conductor_formula(s4[i]) == conductors4[i]);

  const auto s6 = amsg::enumerate_am_sequences(6);
  CHECK(s6.size() == 15);
  auto has = [&](std::vector<Int> t) {
    for (const auto& s : s6)
      if (s.terms == t) return true;
    return false;
  };
  CHECK(has({6, 2, 17}));
  CHECK(has({6, 5}));
  CHECK(has({6, 4, 17}));

  CHECK_THROWS_AS(amsg::enumerate_am_sequences(1), amsg::input_error);
}

TEST_CASE("enumeration counts per degree are stable") {
  const std::pair<Int, size_t> expected[] = {{2, 1}, {3, 2},  {4, 4},
                                             {5, 4}, {6, 15}, {7, 6},
                                             {8, 32}, {9, 24}, {10, 62},
                                             {11, 10}, {12, 236}};
  for (const auto& [n, count] : expected)
    CHECK(amsg::enumerate_am_sequences(n).size() == count);
}

TEST_CASE("enumeration is sorted and every sequence passes the conditions") {
  for (Int n : {4, 6, 9, 10}) {
    const auto seqs = amsg::enumerate_am_sequences(n);
    for (size_t i = 0; i < seqs.size(); ++i) {
      CHECK(amsg::check_conditions(seqs[i]).is_am);
      if (i > 0) CHECK(seqs[i - 1].terms < seqs[i].terms);
    }
  }
}

TEST_CASE("classification of degree 6") {
  const auto records = amsg::classify_extremal(6);
  REQUIRE(records.size() == 3);

  CHECK(records[0].extremal.chain.e == std::vector<Int>{6, 1});
  CHECK(records[0].minimal_system == std::vector<Int>{5, 6});
  CHECK(records[0].epsilon == std::vector<Int>{5, 1});
  CHECK(records[0].am21_case == MinimalSystemCase::degree_is_beta1);
  CHECK(records[0].nprime == 5);
  CHECK(records[0].am11_ok);

  CHECK(records[1].extremal.chain.e == std::vector<Int>{6, 2, 1});
  CHECK(records[1].minimal_system == std::vector<Int>{4, 6, 17});
  CHECK(records[1].epsilon == std::vector<Int>{4, 2, 1});
  CHECK(records[1].am21_case == MinimalSystemCase::degree_is_beta1);
  CHECK(records[1].nprime == 4);
  CHECK(records[1].am11_ok);

  CHECK(records[2].extremal.chain.e == std::vector<Int>{6, 3, 1});
  CHECK(records[2].minimal_system == std::vector<Int>{3, 11});
  CHECK(records[2].epsilon == std::vector<Int>{3, 1});
  CHECK(records[2].am21_case == MinimalSystemCase::degree_is_twice_beta0);
  CHECK(records[2].nprime == 3);
  CHECK(records[2].am11_ok);
}

TEST_CASE("classification of degree 5") {
  const auto records = amsg::classify_extremal(5);
  REQUIRE(records.size() == 1);
  CHECK(records[0].minimal_system == std::vector<Int>{4, 5});
  CHECK(records[0].am21_case == MinimalSystemCase::degree_is_beta1);
}

TEST_CASE("case pattern regenerates; printed pattern diverges on (6,2,1)") {
  const auto records = amsg::classify_extremal(6);
  const auto& r = records[1];  // chain (6,2,1)
  CHECK(r.case_generators == std::vector<Int>{6, 4, 17});
  CHECK(r.case_regenerates);
  // the printed interior term n^2/eps_1 - eps_1 = 16 breaks the set:
  // {6,4,16} has gcd 2 and generates no numerical semigroup
  CHECK(r.literal_generators == std::vector<Int>{6, 4, 16});
  CHECK(r.literal_differs);
  CHECK_FALSE(r.literal_regenerates);

  // the two-term chains have no interior term to disagree on
  CHECK_FALSE(records[0].literal_differs);
  CHECK(records[0].literal_regenerates);
}

TEST_CASE("2beta0 case drops the degree from the pattern") {
  const auto records = amsg::classify_extremal(6);
  const auto& r = records[2];  // chain (6,3,1), minimal system (3,11)
  CHECK(r.case_generators == std::vector<Int>{3, 11});
  CHECK(r.case_regenerates);
}

TEST_CASE("extremal family matches the enumerated extremal subset") {
  for (Int n : {2, 3, 4, 5, 6, 7, 8}) {
    const auto v = amsg::verify_extremal_classification(n);
    CHECK(v.ok);
    CHECK(v.chain_count == test_oracle::chain_count(n));
    CHECK(v.extremal_sequence_count == v.chain_count);
  }
}
