#include "doctest.h"
#include "mdrep/catalog.hpp"
#include "mdrep/presentations.hpp"

using namespace mdrep;

namespace {

RatFunc P(const std::string& s) { return parse_ratfunc(s); }

std::vector<Params> case_params(const std::string& id) {
  if (id == "case1") return {{{"sign", 1}}, {{"sign", -1}}};
  if (id == "case3-wangian") return {{{"sign", 1}}, {{"sign", -1}}};
  if (id == "case4" || id == "case5" || id == "case5-m1" || id == "case7-slash") return {{{"sign", 1}}, {{"sign", -1}}};
  if (id == "case4-pm1") return {{{"p", 1}, {"sign", 1}}, {{"p", -1}, {"sign", -1}}};
  if (id == "case6a" || id == "case6b" || id == "case6c") return {{{"eps", 1}}, {{"eps", -1}}};
  return {{}};
}

}  // namespace

TEST_CASE("relation sets") {
  auto md = instantiate(RelationSet::MixedDoubles, 3);
  auto lb = instantiate(RelationSet::LoopBraid, 3);
  CHECK(md.size() == lb.size() + 2);
  CHECK(instantiate(RelationSet::Braid, 4).size() == 2 + 1);
  CHECK(std::is_sorted(md.begin(), md.end(), [](auto& a, auto& b) { return a.id < b.id; }));
}

TEST_CASE("trivial pair satisfies everything") {
  RepPair p{identity_words(2, 2), identity_words(2, 2), {}, {}, "id"};
  CHECK(all_zero(verify(p, RelationSet::MixedDoubles, 3)));
  CHECK(anomaly(p, "SSS").is_zero());
  CHECK_THROWS(anomaly(p, "XYZ"));
}

TEST_CASE("every classification case passes the mixed doubles relations at n=3 and n=4") {
  for (const auto& id : md_case_ids())
    for (const auto& prm : case_params(id)) {
      CAPTURE(id);
      RepPair p = make_md_pair(id, prm);
      CHECK(all_zero(verify(p, RelationSet::MixedDoubles, 3)));
      CHECK(all_zero(verify(p, RelationSet::MixedDoubles, 4)));
    }
}

TEST_CASE("symmetries preserve validity") {
  for (const auto& id : {"case2", "case3", "case5-m1", "case6b"}) {
    RepPair p = make_md_pair(id, id == std::string("case5-m1") ? Params{{"sign", -1}}
                                                               : id == std::string("case6b") ? Params{{"eps", 1}} : Params{});
    for (auto k : {TransformKind::swap_rs, TransformKind::transpose, TransformKind::global_sign, TransformKind::antidiagonal}) {
      RepPair q = apply_transform({k, {}}, p);
      CHECK(all_zero(verify(q, RelationSet::MixedDoubles, 3)));
      RepPair back = apply_transform(inverse(Transform{k, {}}), q);
      CHECK(back.R == p.R);
      CHECK(back.S == p.S);
    }
    ExactMatrix A = from_rows(2, std::vector<std::vector<std::string>>{{"2", "1"}, {"1", "1"}});
    RepPair q = apply_transform({TransformKind::local_conj, A}, p);
    CHECK(all_zero(verify(q, RelationSet::MixedDoubles, 3)));
    RepPair back = apply_transform(inverse(Transform{TransformKind::local_conj, A}), q);
    CHECK(back.R == p.R);
    CHECK(back.S == p.S);
  }
}

TEST_CASE("involutive braid families") {
  ExactMatrix fg = make_involutive_braid("f-glue");
  CHECK(fg(0, 1) == P("-p"));
  CHECK(fg(0, 3) == P("p*q"));
  CHECK(make_involutive_braid("f-glue", {{"p", 0}, {"q", 0}}) == make_involutive_braid("fa-slash", {{"q", 1}, {"sign", 1}}));
  ExactMatrix as = make_involutive_braid("anti-slash");
  CHECK(as.at({1, 1}, {2, 2}) == RatFunc(1));
  CHECK(as.at({2, 2}, {1, 1}) == RatFunc(1));
  CHECK_THROWS(make_involutive_braid("fa-slash", {{"q", 1}}));
  auto names = known_coincidences(make_involutive_braid("f-glue", {{"p", 0}, {"q", 0}}));
  REQUIRE(names.size() >= 3);
  CHECK(names[0] == "flip");
}

TEST_CASE("manji matrices") {
  CHECK(make_manji(1, 1, 0, 0, 0) == manji_basis("P", 1));
  ExactMatrix R = make_manji(1, P("a"), P("b"), P("c"), P("d"));
  RepPair p{R, R, {}, {}, "manji"};
  CHECK(anomaly(p, "RRR").is_zero());
  // The case-6(c) matrix with eps = 1 is R_-(a,b,b,-d) with a = d+1, a(a-1) = b^2.
  RepPair c = make_md_pair("case6c", {{"eps", 1}});
  RatFunc r = c.S(0, 0) * RatFunc(-1), y = c.S(0, 1);
  RatFunc a = -r, d = -r - RatFunc(1);
  CHECK((a - d - RatFunc(1)).is_zero());
  CHECK((a * (a - RatFunc(1)) - y * y).is_zero());
  CHECK(make_manji(-1, a, y, y, -d) == c.S);
}

TEST_CASE("a-glue SRR anomaly against the generic ansatz") {
  std::vector<std::string> names = {"a", "b", "c", "d", "e", "f", "g", "h", "j", "k", "l", "m", "n", "s", "t", "r"};
  std::vector<std::vector<RatFunc>> rows(4);
  for (int i = 0; i < 16; ++i) rows[i / 4].push_back(RatFunc::var(names[i]));
  RepPair p{make_involutive_braid("a-glue"), from_rows(2, rows), {}, {}, "ansatz"};
  ExactMatrix A = anomaly(p, "SRR");
  CHECK(A(0, 1) == P("-(e+j)*p"));
  CHECK(A(0, 3) == P("(a-f-k)*p"));
  CHECK(A(1, 1) == P("n*p"));
  CHECK(A(4, 3) == P("-2*b"));
  CHECK(A(3, 7) == P("(t-s)*p"));
}

TEST_CASE("slash matrices with equal off-diagonal entries are braided but not involutive") {
  // R_f(p) itself squares to I; the non-involutive variant has p at both slash positions.
  CHECK(R_f(P("p")) * R_f(P("p")) == identity_words(2, 2));
  ExactMatrix D = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"1", "0", "0", "0"}, {"0", "0", "p", "0"}, {"0", "p", "0", "0"}, {"0", "0", "0", "1"}});
  RepPair p{D, D, {}, {}, "D"};
  CHECK(all_zero(verify(p, RelationSet::Braid, 3)));
  auto reps = verify(p, RelationSet::MixedDoubles, 3);
  CHECK_FALSE(all_zero(reps));
  for (const auto& r : reps)
    if (!r.is_zero) CHECK((r.relation.substr(0, 2) == "rr" || r.relation.substr(0, 2) == "ss"));
  RepPair one{R_f(1), R_f(1), {}, {}, "Rf1"};
  CHECK(all_zero(verify(one, RelationSet::MixedDoubles, 3)));
}

TEST_CASE("r-s symmetry and transpose symmetry of verification") {
  RepPair bad{make_involutive_braid("anti-slash"), make_involutive_braid("a-glue"), {}, {}, "bad"};
  CHECK_FALSE(all_zero(verify(bad, RelationSet::MixedDoubles, 3)));
  CHECK_FALSE(all_zero(verify(apply_transform({TransformKind::swap_rs, {}}, bad), RelationSet::MixedDoubles, 3)));
  CHECK_FALSE(all_zero(verify(apply_transform({TransformKind::transpose, {}}, bad), RelationSet::MixedDoubles, 3)));
}

TEST_CASE("case constraints and conic points") {
  CHECK_THROWS_AS(make_md_pair("case2", {{"p", 0}}), constraint_violation);
  CHECK_THROWS_AS(make_md_pair("case6a", {{"eps", -1}, {"z", 1}, {"x", 1}}), constraint_violation);
  RepPair p = make_md_pair("case6a", {{"eps", -1}, {"z", 1}, {"x", 0}});
  CHECK(known_coincidences(p.S).front() == "flip");
  CHECK_THROWS(make_md_pair("case4"));
  // The middle sign of the p = +-1 subcase is tied to p whenever the glue is nonzero.
  CHECK_NOTHROW(make_md_pair("case4-pm1", {{"p", 1}, {"sign", 1}}));
  CHECK_NOTHROW(make_md_pair("case4-pm1", {{"p", -1}, {"sign", -1}}));
  CHECK_THROWS_AS(make_md_pair("case4-pm1", {{"p", 1}, {"sign", -1}}), constraint_violation);
  CHECK_THROWS_AS(make_md_pair("case4-pm1", {{"p", -1}, {"sign", 1}}), constraint_violation);
  CHECK_NOTHROW(make_md_pair("case4-pm1", {{"p", 1}, {"sign", -1}, {"s", 0}}));
  RepPair w = make_md_pair("case3-wangian", {{"sign", 1}});
  CHECK(w.S == w.R);
}

TEST_CASE("non-local and local conjugations") {
  ExactMatrix x = kron(flip_2x2(), flip_2x2());
  CHECK(x * R_f(P("p")) * x == R_f(P("1/p")));
  ExactMatrix v = nonlocal_v();
  RepPair vf = apply_transform({TransformKind::nonlocal_conj, v}, RepPair{R_f(P("p")), R_f(P("p")), {}, {}, "Rf"});
  CHECK(all_zero(verify(RepPair{vf.R, vf.R, {}, {}, ""}, RelationSet::Braid, 3)));
  ExactMatrix va = v * R_a(P("p")) * v;
  CHECK_FALSE(all_zero(verify(RepPair{va, va, {}, {}, ""}, RelationSet::Braid, 3)));
  ExactMatrix hI = from_rows(2, std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "0"}});
  RepPair lc = apply_transform({TransformKind::local_conj, hI}, RepPair{R_f(P("p")), R_f(P("p")), {}, {}, "Rf"});
  CHECK(lc.R == R_f(P("1/p")));
}

TEST_CASE("W-conjugation") {
  CHECK(w_conjugation_check().holds());
  auto one = w_conjugation_check(RatFunc(1));
  CHECK(one.holds());
  CHECK(w_conjugation_check(RatFunc(3)).holds());
}

TEST_CASE("DS equivalence") {
  RepPair p = make_md_pair("case6a", {{"eps", -1}});
  CHECK(check_ds_equivalence(identity_words(2, 1), p).commutes);
  auto sym = check_ds_equivalence(from_rows(2, std::vector<std::vector<std::string>>{{"u", "w"}, {"w", "u"}}), p);
  CHECK(sym.commutes);
  RepPair as{make_involutive_braid("anti-slash"), make_involutive_braid("anti-slash"), {}, {}, "as"};
  CHECK_FALSE(check_ds_equivalence(from_rows(2, std::vector<std::vector<std::string>>{{"1", "0"}, {"0", "2"}}), as).commutes);
  auto rep = ds_commutant_symmetric_family(p);
  CHECK(rep.exact());
}
