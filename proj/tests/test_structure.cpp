#include <set>

#include "doctest.h"
#include "mdrep/catalog.hpp"
#include "mdrep/structure.hpp"

using namespace mdrep;

namespace {

Constraints nonzero(std::initializer_list<const char*> exprs) {
  Constraints cs;
  for (const char* e : exprs) cs.add(parse_ratfunc(e).num());
  return cs;
}

RepPair fglue() {
  RepPair p = make_md_pair("case3");
  p.constraints.merge(nonzero({"q-s", "s"}));
  return p;
}

RepPair aglue() {
  RepPair p = make_md_pair("case2");
  p.constraints.merge(nonzero({"p-q"}));
  return p;
}

RepPair antislash() {
  RepPair p = make_md_pair("case6a", {{"eps", RatFunc(-1)}});
  p.constraints.merge(nonzero({"t"}));
  return p;
}

// The linear family sum_v v * F_v split into one matrix per parameter.
std::vector<ExactMatrix> family_members(const ExactMatrix& F, const std::vector<std::string>& vars) {
  std::vector<ExactMatrix> out;
  for (const auto& v : vars) {
    std::map<std::string, RatFunc> sub;
    for (const auto& w : vars) sub[w] = RatFunc(w == v ? 1 : 0);
    out.push_back(substitute(F, sub));
  }
  return out;
}

// The displayed form spans exactly the commutant: every member commutes and the members are independent.
void check_form(const ExactMatrix& F, const std::vector<std::string>& vars, const std::vector<ExactMatrix>& gens,
                const CommutantBasis& C, const Constraints& cs) {
  auto members = family_members(F, vars);
  ExactMatrix stack(members.size(), F.rows() * F.cols());
  for (std::size_t k = 0; k < members.size(); ++k) {
    CHECK(commutes_with_all(members[k], gens));
    for (std::size_t i = 0; i < F.rows(); ++i)
      for (std::size_t j = 0; j < F.cols(); ++j) stack(k, i * F.cols() + j) = members[k](i, j);
  }
  CHECK(rank(stack, cs) == C.dim());
  CHECK(members.size() == C.dim());
}

ExactMatrix matrix_of(const std::vector<std::vector<std::string>>& rows) { return from_rows(2, rows); }

void check_projectors(const DecompositionReport& rep, const std::vector<ExactMatrix>& gens) {
  ExactMatrix sum(rep.dim, rep.dim);
  for (const auto& s : rep.summands) {
    ExactMatrix P = s.projector();
    CHECK(P * P == P);
    CHECK(commutes_with_all(P, gens));
    sum = sum + P;
  }
  CHECK(sum == ExactMatrix::identity(rep.dim));
}

std::multiset<std::size_t> as_set(const std::vector<std::size_t>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("commutant of the identity") {
  for (std::size_t d : {1u, 2u, 4u}) CHECK(commutant({ExactMatrix::identity(d)}, {}).dim() == d * d);
}

TEST_CASE("commutant rejects mismatched shapes") {
  CHECK_THROWS_AS(commutant({ExactMatrix::identity(2), ExactMatrix::identity(3)}, {}), std::invalid_argument);
}

TEST_CASE("f-glue commutant at level 3") {
  RepPair p = fglue();
  auto gens = generator_images(p, 3);
  auto C = commutant(gens, p.constraints);
  CHECK(C.dim() == 6);
  for (const auto& B : C.basis) CHECK(commutes_with_all(B, gens));
  ExactMatrix F = matrix_of({{"f", "e", "e", "a", "e", "a", "a", "b"},
                             {"0", "f", "0", "c", "0", "c", "c-e", "d"},
                             {"0", "0", "f", "c", "0", "c-e", "c", "d"},
                             {"0", "0", "0", "f", "0", "0", "0", "e"},
                             {"0", "0", "0", "c-e", "f", "c", "c", "d"},
                             {"0", "0", "0", "0", "0", "f", "0", "e"},
                             {"0", "0", "0", "0", "0", "0", "f", "e"},
                             {"0", "0", "0", "0", "0", "0", "0", "f"}});
  check_form(F, {"a", "b", "c", "d", "e", "f"}, gens, C, p.constraints);
}

TEST_CASE("f-glue commutant needs q != s declared") {
  RepPair p = make_md_pair("case3");
  CHECK_THROWS_AS(commutant(generator_images(p, 3), p.constraints), branch_ambiguity);
}

TEST_CASE("f-glue idempotents: entry certificate") {
  RepPair p = fglue();
  auto C = commutant(generator_images(p, 3), p.constraints);
  auto res = find_idempotents(C, p.constraints);
  CHECK(res.status == IdempotentStatus::indecomposable);
  CHECK(res.trace_form_rank == 1);
  REQUIRE(res.certificate.has_value());
  CHECK(res.certificate->row == 4);
  CHECK(res.certificate->col == 3);
}

TEST_CASE("f-glue is indecomposable at levels 3 and 4") {
  for (int n : {3, 4}) {
    RepPair p = fglue();
    auto C = commutant(generator_images(p, n), p.constraints);
    CHECK(entry_certificate(C).has_value());
    auto rep = decompose(p, n);
    REQUIRE(rep.summands.size() == 1);
    CHECK(rep.summands[0].status == IdempotentStatus::indecomposable);
    CHECK_FALSE(rep.summands[0].irreducible);
  }
}

TEST_CASE("a-glue commutant at level 3") {
  RepPair p = aglue();
  auto gens = generator_images(p, 3);
  auto C = commutant(gens, p.constraints);
  CHECK(C.dim() == 4);
  ExactMatrix F = matrix_of({{"a", "c", "c", "0", "c", "0", "0", "0"},
                             {"0", "b", "0", "-d", "0", "-d", "0", "0"},
                             {"0", "0", "b", "d", "0", "0", "-d", "0"},
                             {"0", "0", "0", "a", "0", "0", "0", "c"},
                             {"0", "0", "0", "0", "b", "d", "d", "0"},
                             {"0", "0", "0", "0", "0", "a", "0", "-c"},
                             {"0", "0", "0", "0", "0", "0", "a", "c"},
                             {"0", "0", "0", "0", "0", "0", "0", "b"}});
  check_form(F, {"a", "b", "c", "d"}, gens, C, p.constraints);
  auto res = find_idempotents(C, p.constraints);
  REQUIRE(res.status == IdempotentStatus::split);
  REQUIRE(res.idempotents.size() == 2);
  for (const auto& E : res.idempotents) {
    CHECK(E * E == E);
    CHECK(rank(E, p.constraints) == 4);
  }
  CHECK(res.idempotents[0] + res.idempotents[1] == ExactMatrix::identity(8));
}

TEST_CASE("a-glue splits into two halves") {
  for (int n : {3, 4}) {
    RepPair p = aglue();
    auto rep = decompose(p, n);
    CHECK(rep.dims() == std::vector<std::size_t>{std::size_t(1) << (n - 1), std::size_t(1) << (n - 1)});
    CHECK(rep.complete());
    for (const auto& s : rep.summands) CHECK_FALSE(s.irreducible);
    check_projectors(rep, generator_images(p, n));
  }
}

TEST_CASE("a-glue radical layers at level 3") {
  RepPair p = aglue();
  auto rep = decompose(p, 3);
  Assignment at{{"p", Cyclo(Rational(2))}, {"q", Cyclo(Rational(5))}};
  std::set<std::vector<std::vector<long>>> seen;
  for (const auto& s : rep.summands) {
    std::vector<NumMatrix> g;
    for (const auto& m : s.gens) g.push_back(evaluate(m, at));
    std::vector<std::vector<long>> content;
    for (const auto& L : radical_layers(g, {{0}, {0, 1}})) content.push_back(sym3_content(L));
    seen.insert(content);
  }
  // Multiplicities of (3), (2,1), (1^3), top layer first.
  CHECK(seen.count({{0, 1, 1}, {1, 0, 0}}) == 1);
  CHECK(seen.count({{0, 0, 1}, {1, 1, 0}}) == 1);
}

TEST_CASE("sym3 content of small layers") {
  CHECK(sym3_content({1, {Cyclo(1), Cyclo(1)}}) == std::vector<long>{1, 0, 0});
  CHECK(sym3_content({1, {Cyclo(-1), Cyclo(1)}}) == std::vector<long>{0, 0, 1});
  CHECK(sym3_content({2, {Cyclo(0), Cyclo(-1)}}) == std::vector<long>{0, 1, 0});
  CHECK(sym3_content({3, {Cyclo(1), Cyclo(0)}}) == std::vector<long>{1, 1, 0});
}

TEST_CASE("antislash commutant and the matrix Y") {
  RepPair p = antislash();
  auto gens = generator_images(p, 3);
  auto C = commutant(gens, p.constraints);
  CHECK(C.dim() == 6);
  ExactMatrix F = matrix_of({{"a", "b", "b", "a+d-f", "b", "a+d-f", "a+d-f", "b+c-e"},
                             {"e", "f", "d", "e", "d", "e", "c", "d"},
                             {"e", "d", "f", "e", "d", "c", "e", "d"},
                             {"a+d-f", "b", "b", "a", "b+c-e", "a+d-f", "a+d-f", "b"},
                             {"e", "d", "d", "c", "f", "e", "e", "d"},
                             {"a+d-f", "b", "b+c-e", "a+d-f", "b", "a", "a+d-f", "b"},
                             {"a+d-f", "b+c-e", "b", "a+d-f", "b", "a+d-f", "a", "b"},
                             {"c", "d", "d", "e", "d", "e", "e", "f"}});
  check_form(F, {"a", "b", "c", "d", "e", "f"}, gens, C, p.constraints);
  ExactMatrix Y = matrix_of({{"1", "0", "0", "1", "0", "1", "1", "-2"},
                             {"1", "1", "1", "1", "1", "1", "-1", "1"},
                             {"1", "1", "1", "1", "1", "-1", "1", "1"},
                             {"1", "0", "0", "1", "-2", "1", "1", "0"},
                             {"1", "1", "1", "-1", "1", "1", "1", "1"},
                             {"1", "0", "-2", "1", "0", "1", "1", "0"},
                             {"1", "-2", "0", "1", "0", "1", "1", "0"},
                             {"-1", "1", "1", "1", "1", "1", "1", "1"}});
  CHECK(commutes_with_all(Y, gens));
  UPoly cp;
  for (const auto& c : charpoly_exact(Y)) cp.push_back(c.constant_value());
  CHECK(upoly_roots(cp).size() == 4);
}

TEST_CASE("antislash decomposes into irreducibles 1,1,3,3") {
  RepPair p = antislash();
  auto rep = decompose(p, 3);
  CHECK(as_set(rep.dims()) == std::multiset<std::size_t>{1, 1, 3, 3});
  check_projectors(rep, generator_images(p, 3));
  // With z = -1/(t^2-1) and x = -t/(t^2-1), lambda = -2z+1+2x = (t-1)/(t+1).
  RatFunc lam = parse_ratfunc("(t-1)/(t+1)");
  std::vector<RatFunc> want = {-RatFunc(1), RatFunc(1) + lam + lam.inv(), -(RatFunc(1) + lam + lam.inv()), RatFunc(1)};
  for (const auto& s : rep.summands) {
    CHECK(s.irreducible);
    if (s.dim() == 3) CHECK(s.x_charpoly == want);
  }
}

TEST_CASE("trivial pair splits into lines") {
  RepPair p{ExactMatrix::identity(4), ExactMatrix::identity(4), {}, {}, "trivial"};
  p.R.set_shape(2, 2, 2);
  p.S.set_shape(2, 2, 2);
  auto rep = decompose(p, 3);
  CHECK(rep.dims() == std::vector<std::size_t>(8, 1));
}

TEST_CASE("trichotomy") {
  Assignment pq{{"p", Cyclo(Rational(2))}, {"q", Cyclo(Rational(5))}};
  CHECK(x_trichotomy(make_md_pair("case2"), pq).cls == XClass::non_semisimple);
  auto c5 = make_md_pair("case5", {{"sign", RatFunc(1)}});
  auto t = x_trichotomy(c5, {{"p", Cyclo(Rational(2))}, {"s", Cyclo(Rational(3))}});
  CHECK(t.cls == XClass::infinite_semisimple);
  CHECK(t.diagonalizable);
  for (int sign : {1, -1}) {
    auto w = make_md_pair("case3-wangian", {{"sign", RatFunc(sign)}});
    auto tw = x_trichotomy(w, pq);
    CHECK(tw.cls == XClass::finite);
    CHECK(tw.order == (sign == 1 ? 1 : 2));
  }
  CHECK(to_string(XClass::non_semisimple) == "c");
}

TEST_CASE("algebra dims of the a-glue summands") {
  Assignment at{{"p", Cyclo(Rational(2))}, {"q", Cyclo(Rational(5))}};
  auto dims_at = [&](int n) {
    std::vector<AlgebraDims> out;
    for (const auto& s : decompose(aglue(), n).summands) {
      std::vector<NumMatrix> g;
      for (const auto& m : s.gens) g.push_back(evaluate(m, at));
      out.push_back(algebra_dims(g));
    }
    return out;
  };
  for (const auto& d : dims_at(3)) {
    CHECK(d.algebra == 9);
    CHECK(d.radical == 3);
    CHECK(d.center == 3);
    REQUIRE(d.simple_dims.has_value());
    CHECK(as_set(*d.simple_dims) == std::multiset<std::size_t>{2, 1, 1});
  }
  auto d4 = dims_at(4);
  std::multiset<std::size_t> algebras;
  for (const auto& d : d4) {
    CHECK(d.semisimple == 20);
    CHECK(d.algebra - d.radical == 20);
    algebras.insert(d.algebra);
  }
  CHECK(algebras == std::multiset<std::size_t>{33, 35});
}

TEST_CASE("algebra dims of the identity") {
  auto d = algebra_dims(std::vector<NumMatrix>{NumMatrix::identity(3)});
  CHECK(d.algebra == 1);
  CHECK(d.radical == 0);
  CHECK(d.semisimple == 1);
  CHECK(d.center == 1);
}

TEST_CASE("semisimple quotient dims follow Pascal rows") {
  CHECK(as_set(semisimple_quotient_dims(make_md_pair("case2"), 4, nonzero({"p-q"}))) ==
        std::multiset<std::size_t>{1, 1, 3, 3, 3, 3, 1, 1});
  CHECK(as_set(semisimple_quotient_dims(make_md_pair("case2"), 2, nonzero({"p-q"}))) ==
        std::multiset<std::size_t>{1, 1, 1, 1});
  CHECK_THROWS_AS(semisimple_quotient_dims(make_md_pair("case6a", {{"eps", RatFunc(-1)}}), 3, nonzero({"t"})),
                  std::invalid_argument);
}

TEST_CASE("generic point avoids constraint zeros and coincidences") {
  Constraints cs = nonzero({"p-q", "p+q-1"});
  for (std::uint64_t seed = 1; seed < 20; ++seed) {
    auto at = generic_point({"p", "q"}, cs, seed);
    Cyclo p = at.at("p"), q = at.at("q");
    CHECK(p != q);
    CHECK(p != -q);
    CHECK(!(p * q).is_one());
    CHECK(!(p + q - Cyclo(1)).is_zero());
  }
}
