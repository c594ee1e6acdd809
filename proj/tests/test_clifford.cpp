#include <set>

#include "doctest.h"
#include "mdrep/clifford.hpp"
#include "mdrep/structure.hpp"

using namespace mdrep;

namespace {

ExactMatrix rows(const std::vector<std::vector<RatFunc>>& r) {
  ExactMatrix M(r.size(), r[0].size());
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r[i].size(); ++j) M(i, j) = r[i][j];
  return M;
}

ExactMatrix diag(const std::vector<RatFunc>& v) {
  ExactMatrix M(v.size(), v.size());
  for (std::size_t i = 0; i < v.size(); ++i) M(i, i) = v[i];
  return M;
}

Perm cycle(int n, std::vector<int> c) {
  Perm w = perm_identity(n);
  for (std::size_t k = 0; k < c.size(); ++k) w[c[k] - 1] = c[(k + 1) % c.size()];
  return w;
}

std::vector<ExactMatrix> s3_data(const InducedRep& r) {
  return {r.x_image(1, 2), r.x_image(1, 3), r.x_image(2, 3), r.perm_image(cycle(3, {1, 2})), r.perm_image(cycle(3, {2, 3}))};
}

const RatFunc a = RatFunc::var("a");
const RatFunc w = RatFunc(Cyclo::zeta(3));

}  // namespace

TEST_CASE("stabilizers of the example characters") {
  auto c3 = orbit_and_stabilizer(parse_character(3, "a,a^-1,a"));
  CHECK(c3.subgroup == closure({cycle(3, {1, 2, 3})}, 3));
  CHECK(c3.index() == 2);
  CHECK(subgroup_name(c3.subgroup) == "C3");
  CHECK(orbit_and_stabilizer(parse_character(3, "1,1,1")).subgroup.size() == 6);
  for (const char* s : {"a,a,1", "a,a,-1"}) {
    auto sd = orbit_and_stabilizer(parse_character(3, s));
    CHECK(sd.subgroup == closure({cycle(3, {2, 3})}, 3));
    CHECK(sd.index() == 3);
  }
  auto sd = orbit_and_stabilizer(parse_character(4, "a,b,c,d,e,f"));
  CHECK(sd.subgroup.size() == 1);
  CHECK(sd.transversal.size() == 24);
  Character big;
  big.n = 7;
  big.values.assign(21, RatFunc(1));
  CHECK_THROWS_AS(orbit_and_stabilizer(big), std::out_of_range);
}

TEST_CASE("transversal is lex-least and covers the cosets") {
  auto sd = orbit_and_stabilizer(parse_character(3, "a,a^-1,a"));
  REQUIRE(sd.transversal.size() == 2);
  CHECK(sd.transversal[0] == perm_identity(3));
  CHECK(sd.transversal[1] == cycle(3, {2, 3}));
  CHECK(sd.transversal.size() * sd.subgroup.size() == 6);
}

TEST_CASE("character parsing") {
  auto chi = parse_character(3, "a,a^-1,a");
  CHECK(chi.at(1, 3) == a.inv());
  CHECK(chi.at(3, 1) == a);
  CHECK(chi.constraints.allows((a - RatFunc(1)).num()));
  CHECK_THROWS_AS(parse_character(3, "a,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_character(2, "0"), std::invalid_argument);
}

TEST_CASE("rank 2: dihedral representation") {
  auto chi = parse_character(2, "v");
  auto sd = orbit_and_stabilizer(chi);
  auto rep = induce(chi, find_irrep(sd.subgroup, 2, "trivial"));
  RatFunc v = RatFunc::var("v");
  CHECK(rep.x_image(1, 2) == diag({v, v.inv()}));
  CHECK(rep.sigma[0] == rows({{0, 1}, {1, 0}}));
  CHECK(is_irreducible(rep));
  CHECK(commutant_dim(rep) == 1);
}

TEST_CASE("rank 3: the two-dimensional family") {
  auto chi = parse_character(3, "a,a^-1,a");
  auto sd = orbit_and_stabilizer(chi);
  for (int i = 0; i < 3; ++i) {
    CAPTURE(i);
    std::vector<ExactMatrix> shown = {diag({a, a.inv()}), diag({a.inv(), a}), diag({a, a.inv()}), rows({{0, 1}, {1, 0}}),
                                      rows({{0, w.pow(i)}, {w.pow(-i), 0}})};
    const char* names[] = {"trivial", "omega^1", "omega^2"};
    auto mine = induce(chi, find_irrep(sd.subgroup, 3, names[(3 - i) % 3]));
    CHECK(mine.dim() == 2);
    auto wit = monomial_witness(s3_data(mine), shown);
    REQUIRE(wit.has_value());
    CHECK(wit->perm == std::vector<int>{0, 1});
    if (i != 0) CHECK_FALSE(monomial_witness(s3_data(induce(chi, find_irrep(sd.subgroup, 3, names[i]))), shown).has_value());
    CHECK(commutant_dim(mine) == 1);
    CHECK(is_irreducible(mine));
  }
}

TEST_CASE("rank 3: the three-dimensional family") {
  for (int pm : {1, -1})
    for (const char* eps : {"trivial", "sign"}) {
      CAPTURE(pm);
      CAPTURE(eps);
      auto chi = parse_character(3, pm == 1 ? "a,a,1" : "a,a,-1");
      auto sd = orbit_and_stabilizer(chi);
      auto rep = induce(chi, find_irrep(sd.subgroup, 3, eps));
      RatFunc th(std::string(eps) == "sign" ? -1 : 1), s(pm);
      std::vector<ExactMatrix> shown = {diag({a, a.inv(), s}), diag({a, s, a.inv()}), diag({s, a, a.inv()}),
                                        rows({{0, 1, 0}, {1, 0, 0}, {0, 0, th}}),
                                        th * rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}})};
      CHECK(monomial_witness(s3_data(rep), shown).has_value());
      CHECK(is_irreducible(rep));
      CHECK(commutant_dim(rep) == 1);
    }
}

TEST_CASE("restriction to the abelian part is the orbit of the character") {
  for (const char* s : {"a,a^-1,a", "a,a,1", "a,b,c"}) {
    auto chi = parse_character(3, s);
    auto sd = orbit_and_stabilizer(chi);
    auto rep = induce(chi, stabilizer_irreps(sd.subgroup, 3, 1).at(0));
    CHECK(rep.dim() == sd.index() * rep.tau_dim);
    std::set<std::vector<std::string>> orbit;
    for (std::size_t k = 0; k < sd.transversal.size(); ++k) {
      Character t = act(sd.transversal[k], chi);
      std::vector<std::string> got, want;
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) {
          got.push_back(rep.x_image(i, j)(k, k).str());
          want.push_back(t.at(i, j).str());
        }
      CHECK(got == want);
      orbit.insert(want);
    }
    CHECK(orbit.size() == sd.index());
  }
}

TEST_CASE("conjugate data give monomially equivalent representations") {
  auto chi = parse_character(3, "a,a^-1,a");
  auto sd = orbit_and_stabilizer(chi);
  Perm h = cycle(3, {1, 2});
  StabIrrep tau = find_irrep(sd.subgroup, 3, "omega^1");
  Character chih = act(h, chi);
  StabIrrep tauh = tau;
  for (auto& g : tauh.gens) g = perm_compose(perm_compose(h, g), perm_inverse(h));
  auto r1 = induce(chi, tau), r2 = induce(chih, tauh);
  CHECK(monomial_witness(r1.generators(), r2.generators()).has_value());
}

TEST_CASE("induced representations satisfy the mixed double relations") {
  auto chi = parse_character(3, "a,a,-1");
  auto rep = induce(chi, find_irrep(orbit_and_stabilizer(chi).subgroup, 3, "sign"));
  auto imgs = rep.md_images();
  for (const auto& [id, word] : md_relation_words(3)) {
    CAPTURE(id);
    ExactMatrix M = ExactMatrix::identity(rep.dim());
    for (const auto& l : word) {
      REQUIRE((l.kind == 's' || l.kind == 'r'));
      if (l.e % 2 != 0) M = M * imgs.at((l.kind == 'r' ? 0 : 2) + l.i - 1);
    }
    CHECK(M == ExactMatrix::identity(rep.dim()));
  }
  for (const auto& X : rep.x) CHECK((determinant(X) == RatFunc(1) || determinant(X) == RatFunc(-1)));
}

TEST_CASE("tau must be a homomorphism") {
  auto sd = orbit_and_stabilizer(parse_character(3, "a,a^-1,a"));
  StabIrrep bad{"bad", {cycle(3, {1, 2, 3})}, {diag({RatFunc(-1)})}};
  CHECK_THROWS_AS(extend(bad, sd.subgroup), std::invalid_argument);
  CHECK_THROWS_AS(induce(parse_character(3, "a,a^-1,a"), bad), std::invalid_argument);
  CHECK_THROWS_AS(find_irrep(sd.subgroup, 3, "std"), std::invalid_argument);
}

TEST_CASE("irreducibility checks") {
  CHECK_FALSE(is_irreducible(std::vector<ExactMatrix>{diag({RatFunc(1), RatFunc(-1)})}));
  CHECK(is_irreducible(std::vector<ExactMatrix>{rows({{0, 1}, {1, 0}}), diag({RatFunc(1), RatFunc(-1)})}));
}

TEST_CASE("2-transitive stabilizers force constant characters") {
  auto A4 = closure({cycle(4, {1, 2, 3}), cycle(4, {2, 3, 4})}, 4);
  REQUIRE(A4.size() == 12);
  auto chars = invariant_characters(A4, 4);
  CHECK(chars.size() == 2);
  for (const auto& c : chars)
    for (const auto& v : c.values) CHECK(v == c.values[0]);
}

TEST_CASE("stabilizer irrep table") {
  auto S4 = symmetric_group(4);
  std::multiset<std::size_t> dims;
  for (const auto& t : stabilizer_irreps(S4, 4)) dims.insert(t.dim());
  CHECK(dims == std::multiset<std::size_t>{1, 1, 2, 3, 3});
  auto S3 = symmetric_group(3);
  std::size_t sum = 0;
  for (const auto& t : stabilizer_irreps(S3, 3)) sum += t.dim() * t.dim();
  CHECK(sum == 6);
}

TEST_CASE("small-dimension classification") {
  for (int n : {2, 3, 4}) {
    auto r = classify_small_dims(n, 1);
    CHECK(r.families() == 0);
    CHECK(r.isolated() == 4);
  }
  auto r32 = classify_small_dims(3, 2);
  CHECK(r32.families() == 1);
  for (const auto& e : r32.entries) {
    if (e.parametric) {
      CHECK(e.stabilizer == "C3");
      CHECK(e.taus.size() == 3);
    } else {
      CHECK(e.limit_of.has_value());
    }
  }
  auto r42 = classify_small_dims(4, 2);
  CHECK(r42.families() == 0);
  CHECK(r42.isolated() == 2);
  auto r33 = classify_small_dims(3, 3);
  CHECK(r33.isolated() == 0);
  std::size_t members = 0;
  for (const auto& e : r33.entries) {
    CHECK(e.stabilizer == "C2");
    members += e.taus.size();
  }
  CHECK(members == 4);
  CHECK_THROWS_AS(classify_small_dims(5, 2), std::out_of_range);
  CHECK_THROWS_AS(classify_small_dims(3, 4), std::out_of_range);
}
