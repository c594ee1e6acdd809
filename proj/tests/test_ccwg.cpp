#include <random>

#include "doctest.h"
#include "mdrep/catalog.hpp"
#include "mdrep/ccwg.hpp"
#include "mdrep/presentations.hpp"

using namespace mdrep;

TEST_CASE("letter counts") {
  CHECK(f_of(parse_word("1121"), 2)[1] == 1);
  CHECK(f_of(parse_word("2111"), 3) == Composition{3, 1, 0});
  CHECK(f_of(parse_word("1111"), 3) == Composition{4, 0, 0});
}

TEST_CASE("order by first difference") {
  CHECK(compare({5, 3, 1, 0, 4}, {5, 3, 2, 0, 3}) == Order::greater);
  CHECK(compare({2, 1}, {2, 1}) == Order::equal);
  CHECK(compare({4, 0, 0}, {3, 1, 0}) == Order::less);
  CHECK(compare({1, 1}, {2, 1}) == Order::incomparable);
  auto cs = compositions(3, 4);
  REQUIRE(cs.size() >= 3);
  CHECK(cs[0] == Composition{4, 0, 0});
  CHECK(cs[1] == Composition{3, 1, 0});
  CHECK(cs[2] == Composition{3, 0, 1});
}

TEST_CASE("first-difference order equals the first-instance order") {
  for (int N = 1; N <= 3; ++N)
    for (int n = 1; n <= 5; ++n) {
      auto cs = compositions(N, n);
      for (const auto& a : cs)
        for (const auto& b : cs) CHECK(compare(a, b) == compare_by_first_instance(a, b));
    }
}

TEST_CASE("orbit representatives") {
  CHECK(word_str(orbit_rep({5, 3, 1, 0, 4})) == "5555322211111");
  CHECK(word_str(orbit_rep({3, 0, 0})) == "111");
  CHECK(word_str(orbit_rep({0, 0, 3})) == "333");
  // The representative is the revlex first instance.
  for (const auto& c : compositions(3, 4)) {
    std::size_t k = 0;
    while (f_of(word_of(k, 3, 4), 3) != c) ++k;
    CHECK(word_of(k, 3, 4) == orbit_rep(c));
  }
}

TEST_CASE("displayed CCwg patterns") {
  // 1 = CC entry, 2 = glue entry, 0 = empty.
  std::vector<std::vector<int>> p4 = {{1, 2, 2, 2}, {0, 1, 1, 2}, {0, 1, 1, 2}, {0, 0, 0, 1}};
  std::vector<std::vector<int>> p9 = {
      {1, 2, 2, 2, 2, 2, 2, 2, 2}, {0, 1, 2, 1, 2, 2, 2, 2, 2}, {0, 0, 1, 0, 2, 2, 1, 2, 2},
      {0, 1, 2, 1, 2, 2, 2, 2, 2}, {0, 0, 0, 0, 1, 2, 0, 2, 2}, {0, 0, 0, 0, 0, 1, 0, 1, 2},
      {0, 0, 1, 0, 2, 2, 1, 2, 2}, {0, 0, 0, 0, 0, 1, 0, 1, 2}, {0, 0, 0, 0, 0, 0, 0, 0, 1}};
  for (auto [N, pat] : {std::pair{2, p4}, std::pair{3, p9}}) {
    const GlueMask& g = glue_mask(N, 2);
    ExactMatrix M = ExactMatrix::words(N, 2, 2);
    for (std::size_t r = 0; r < pat.size(); ++r)
      for (std::size_t c = 0; c < pat.size(); ++c) {
        if (pat[r][c] == 1) CHECK(g.at(r, c) == Position::cc);
        if (pat[r][c] == 2) CHECK(g.at(r, c) == Position::glue);
        if (g.at(r, c) == Position::forbidden) CHECK(pat[r][c] == 0);
        if (pat[r][c]) M(r, c) = RatFunc(1);
      }
    CHECK(is_ccwg(M));
  }
}

TEST_CASE("forbidden entries and shapes") {
  ExactMatrix M = identity_words(2, 2);
  M(3, 0) = RatFunc(1);
  CHECK_FALSE(is_ccwg(M));
  CHECK_FALSE(is_ccwg(make_involutive_braid("anti-slash")));
  ExactMatrix Z = ExactMatrix::words(2, 1, 2);
  CHECK(is_ccwg(Z));
  Z(0, 0) = RatFunc(1);
  CHECK_FALSE(is_ccwg(Z));
}

TEST_CASE("projections of the orange example") {
  ExactMatrix M = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"a", "b", "c", "d"}, {"0", "f", "g", "h"}, {"0", "k", "l", "m"}, {"0", "0", "0", "r"}});
  ExactMatrix K = project_K(M), G = project_glue(M);
  CHECK(K + G == M);
  CHECK(project_K(K) == K);
  CHECK(G == from_rows(2, std::vector<std::vector<std::string>>{
                              {"0", "b", "c", "d"}, {"0", "0", "0", "h"}, {"0", "0", "0", "m"}, {"0", "0", "0", "0"}}));
  ExactMatrix D = from_rows(2, std::vector<std::vector<std::string>>{{"al", "be"}, {"0", "ga"}});
  ExactMatrix DD = kron(D, D);
  CHECK(is_ccwg(DD));
  CHECK(project_glue(DD) == from_rows(2, std::vector<std::vector<std::string>>{{"0", "al*be", "be*al", "be^2"},
                                                                                {"0", "0", "0", "be*ga"},
                                                                                {"0", "0", "0", "ga*be"},
                                                                                {"0", "0", "0", "0"}}));
}

TEST_CASE("closure on random CCwg matrices") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int t = 0; t < 10; ++t) {
    const GlueMask& g = glue_mask(2, 2);
    auto rand_ccwg = [&] {
      ExactMatrix M = ExactMatrix::words(2, 2, 2);
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          if (g.at(r, c) != Position::forbidden) M(r, c) = RatFunc(dist(rng));
      return M;
    };
    CHECK(check_closure(rand_ccwg(), rand_ccwg()).ok());
  }
  CHECK(check_closure(identity_words(2, 2), identity_words(2, 2)).ok());
  CHECK_THROWS_AS(check_closure(make_involutive_braid("anti-slash"), identity_words(2, 2)), std::invalid_argument);
}

TEST_CASE("glue nilpotency") {
  auto r = glue_nilpotency(2, 2);
  CHECK(r.chain_length == 3);
  CHECK(r.power_vanishes);
  CHECK(r.power_below_nonzero);
  CHECK(r.samples_vanish);
  CHECK(glue_nilpotency(1, 4).chain_length == 1);
  auto r3 = glue_nilpotency(3, 2);
  CHECK(r3.chain_length == 6);
  CHECK(r3.power_vanishes);
  CHECK(r3.samples_vanish);
}

TEST_CASE("split lemma") {
  auto a = split_lemma_check(2, 1, 1);
  CHECK(a.pairs == 16);
  CHECK(a.ok());
  CHECK(split_lemma_check(3, 2, 2).ok());
  CHECK(split_lemma_check(2, 3, 2).ok());
  CHECK_THROWS_AS(split_lemma_check(10, 3, 3), std::out_of_range);
}

TEST_CASE("Kronecker glue lemma at CC positions") {
  ExactMatrix L = from_rows(2, std::vector<std::vector<std::string>>{{"a", "b"}, {"0", "c"}});
  ExactMatrix M = from_rows(2, std::vector<std::vector<std::string>>{{"d", "e"}, {"0", "h"}});
  ExactMatrix LM = kron(L, M);
  ExactMatrix KK = kron(project_K(L), project_K(M));
  const GlueMask& g = glue_mask(2, 2);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c)
      if (g.at(r, c) == Position::cc) CHECK(LM(r, c) == KK(r, c));
}

TEST_CASE("glue-patterned MD pairs project to CC MD pairs") {
  std::vector<std::pair<std::string, Params>> cases = {
      {"case2", {}},
      {"case3", {}},
      {"case4-pm1", {{"p", 1}, {"sign", 1}}},
      {"case4-pm1", {{"p", -1}, {"sign", -1}}},
      {"case5", {{"sign", 1}}},
  };
  for (const auto& [id, prm] : cases) {
    CAPTURE(id);
    RepPair pair = make_md_pair(id, prm);
    auto k = k_pair(pair);
    REQUIRE(k.has_value());
    CHECK(all_zero(verify(*k, RelationSet::MixedDoubles, 3)));
  }
  CHECK_FALSE(k_pair(make_md_pair("case6a", {{"eps", 1}})).has_value());
}
