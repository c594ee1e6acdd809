#include <algorithm>
#include <random>

#include "doctest.h"
#include "mdrep/catalog.hpp"
#include "mdrep/mdd.hpp"
#include "mdrep/presentations.hpp"

using namespace mdrep;

namespace {

GroupElement random_element(std::mt19937_64& rng, int n) {
  GroupElement g = GroupElement::identity(n);
  std::uniform_int_distribution<long> e(-3, 3);
  for (auto& a : g.X) a = e(rng);
  std::shuffle(g.w.begin(), g.w.end(), rng);
  return g;
}

GenWord random_word(std::mt19937_64& rng, int n, int len) {
  GenWord w;
  std::uniform_int_distribution<int> idx(1, n - 1), kind(0, 1), sgn(0, 1);
  for (int k = 0; k < len; ++k) w.push_back({kind(rng) ? 'r' : 's', idx(rng), 0, sgn(rng) ? 1L : -1L});
  return w;
}

RepPair case2_pair() { return make_md_pair("case2", {{"p", 2}, {"q", parse_ratfunc("-1/3")}}); }

}  // namespace

TEST_CASE("normal form multiplication examples") {
  auto x12 = GroupElement::x(3, 1, 2);
  CHECK(multiply(x12, x12) == GroupElement::x(3, 1, 2, 2));
  auto s1 = GroupElement::sigma(3, 1);
  CHECK(multiply(multiply(s1, x12), s1) == GroupElement::x(3, 1, 2, -1));
  auto w = multiply(s1, GroupElement::sigma(3, 2));
  CHECK(multiply(multiply(w, x12), inverse(w)) == GroupElement::x(3, 2, 3));
  CHECK(GroupElement::x(3, 2, 1) == GroupElement::x(3, 1, 2, -1));
  CHECK_THROWS_AS(multiply(x12, GroupElement::identity(4)), std::invalid_argument);
}

TEST_CASE("group axioms and the action property") {
  std::mt19937_64 rng(7);
  for (int n = 2; n <= 5; ++n)
    for (int t = 0; t < 30; ++t) {
      auto a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
      CHECK(multiply(a, inverse(a)).is_identity());
      CHECK(multiply(inverse(a), a).is_identity());
      CHECK(multiply(a, GroupElement::identity(n)) == a);
      CHECK(psi(perm_compose(a.w, b.w), c.X) == psi(a.w, psi(b.w, c.X)));
    }
}

TEST_CASE("conjugation moves x_ij to x_w(i)w(j)") {
  std::mt19937_64 rng(11);
  const int n = 5;
  for (int t = 0; t < 20; ++t) {
    GroupElement w = GroupElement::identity(n);
    std::shuffle(w.w.begin(), w.w.end(), rng);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        auto c = multiply(multiply(w, GroupElement::x(n, i, j)), inverse(w));
        CHECK(c == GroupElement::x(n, w.w[i - 1], w.w[j - 1]));
      }
  }
}

TEST_CASE("phi on generators") {
  CHECK(genword_str(babeda_to_md(GroupElement::sigma(3, 1))) == "s1");
  CHECK(genword_str(babeda_to_md(GroupElement::x(3, 1, 2))) == "r1 s1");
  CHECK(genword_str(babeda_to_md(GroupElement::x(3, 2, 3))) == "r2 s2");
  CHECK(genword_str(babeda_to_md(GroupElement::x(3, 1, 3))) == "s2 r1 s1 s2");
  CHECK(genword_str(babeda_to_md(GroupElement::x(4, 1, 4))) == "s3 s2 r1 s1 s2 s3");
}

TEST_CASE("phi-hat kills every MD relation word") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& [id, w] : md_relation_words(n)) {
      CAPTURE(id);
      CHECK(babeda_from_md(w, n).is_identity());
    }
  for (int n = 3; n <= 5; ++n)
    for (int i = 1; i + 2 <= n; ++i) {
      GenWord w = {{'s', i, 0, 1}, {'r', i + 1, 0, 1}, {'r', i, 0, 1}, {'s', i + 1, 0, 1}, {'r', i, 0, 1}, {'r', i + 1, 0, 1}};
      CHECK(babeda_from_md(w, n).is_identity());
    }
  CHECK(babeda_from_md(parse_genword("r1 r1"), 2).is_identity());
  CHECK(babeda_from_md(parse_genword("r1 s1"), 2) == GroupElement::x(2, 1, 2));
}

TEST_CASE("round trip on seeded random elements") {
  std::mt19937_64 rng(20240611);
  for (int k = 0; k < 100; ++k) {
    int n = 2 + k % 4;
    auto g = random_element(rng, n);
    CAPTURE(g.str());
    CHECK(babeda_from_md(babeda_to_md(g), n) == g);
  }
}

TEST_CASE("word parser") {
  auto w = parse_genword("s1 r2 s1^-1 x12^3 sigma2");
  REQUIRE(w.size() == 5);
  CHECK(w[2].e == -1);
  CHECK(w[3].kind == 'x');
  CHECK(w[3].e == 3);
  CHECK(w[4].kind == 'c');
  CHECK_THROWS_AS(parse_genword("q1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_genword("s1^x"), std::invalid_argument);
  CHECK_THROWS_AS(babeda_from_md(parse_genword("s3"), 3), std::out_of_range);
}

TEST_CASE("automorphisms preserve the relation set") {
  const int n = 4;
  auto rels = md_relation_words(n);
  RepPair pair = case2_pair();
  for (const auto& [id, w] : rels) {
    CAPTURE(id);
    CHECK(babeda_from_md(reverse_indices(w, n), n).is_identity());
    RepPair swapped{pair.S, pair.R, {}, {}, "swap"};
    CHECK(evaluate_in_rep(swap_sr(w), swapped, n) == identity_words(2, n));
  }
}

TEST_CASE("evaluation in a representation") {
  // The a-glue section names the S glue p and the R glue q, so X has p - q at (11,22).
  RepPair pair = make_md_pair("case2", {{"p", parse_ratfunc("-1/3")}, {"q", 2}});
  ExactMatrix X = evaluate_in_rep(GroupElement::x(2, 1, 2), pair, 2);
  ExactMatrix expect = identity_words(2, 2);
  expect(0, 3) = parse_ratfunc("2 + 1/3");
  CHECK(X == expect);
  CHECK(X == pair.R * pair.S);
  CHECK(evaluate_in_rep(GroupElement::identity(3), pair, 3) == identity_words(2, 3));

  ExactMatrix x13 = evaluate_in_rep(GroupElement::x(3, 1, 3), pair, 3);
  ExactMatrix x23 = evaluate_in_rep(GroupElement::x(3, 2, 3), pair, 3);
  CHECK(x13 * x23 == x23 * x13);

  RepPair bad{make_involutive_braid("a-glue", {{"p", 1}}), parse_ratfunc("2") * identity_words(2, 2), {}, {}, "bad"};
  CHECK_THROWS_AS(evaluate_in_rep(GroupElement::identity(3), bad, 3), std::invalid_argument);
}

TEST_CASE("word and normal form agree in a representation") {
  RepPair pair = case2_pair();
  std::mt19937_64 rng(99);
  for (int n = 3; n <= 4; ++n)
    for (int t = 0; t < 10; ++t) {
      GenWord w = random_word(rng, n, 8);
      CAPTURE(genword_str(w));
      ExactMatrix direct = evaluate_in_rep(w, pair, n, false);
      ExactMatrix via = evaluate_in_rep(babeda_from_md(w, n), pair, n, false);
      CHECK(direct == via);
    }
}

TEST_CASE("far generators commute in the image") {
  RepPair pair = make_md_pair("case6a", {{"eps", -1}, {"t", 3}});
  const int n = 4;
  for (char a : {'r', 's'})
    for (char b : {'r', 's'}) {
      ExactMatrix A = evaluate_in_rep(GenWord{{a, 1, 0, 1}}, pair, n, false);
      ExactMatrix B = evaluate_in_rep(GenWord{{b, 3, 0, 1}}, pair, n, false);
      CHECK(A * B == B * A);
    }
}

TEST_CASE("det of x_jk images is a sign") {
  for (const auto& id : {"case2", "case3", "case6a", "case6c", "case7-flip"}) {
    CAPTURE(id);
    Params prm;
    if (std::string(id).rfind("case6", 0) == 0) prm = {{"eps", 1}, {"t", 2}};
    RepPair pair = make_md_pair(id, prm);
    for (int j = 1; j <= 3; ++j)
      for (int k = j + 1; k <= 3; ++k) {
        RatFunc d = determinant(evaluate_in_rep(GroupElement::x(3, j, k), pair, 3));
        CHECK((d == RatFunc(1) || d == RatFunc(-1)));
      }
  }
}

TEST_CASE("determinant") {
  ExactMatrix M = from_rows(2, std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});
  CHECK(determinant(M) == parse_ratfunc("a*d - b*c"));
}
