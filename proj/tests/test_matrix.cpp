#include "doctest.h"
#include "mdrep/json_io.hpp"
#include "mdrep/matrix.hpp"

using namespace mdrep;

namespace {

ExactMatrix h() { return from_rows(2, std::vector<std::vector<std::string>>{{"0", "1"}, {"1", "0"}}); }

ExactMatrix Rf(const std::string& p) {
  return from_rows(2, std::vector<std::vector<std::string>>{
                          {"1", "0", "0", "0"}, {"0", "0", p, "0"}, {"0", "1/(" + p + ")", "0", "0"}, {"0", "0", "0", "1"}});
}

ExactMatrix generic(int N, int level, const std::string& name) {
  ExactMatrix M = ExactMatrix::words(N, level, level);
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      M(i, j) = RatFunc::var(name + std::to_string(i) + "_" + std::to_string(j));
  return M;
}

}  // namespace

TEST_CASE("word indexing is revlex") {
  CHECK(word_str(word_of(1, 2, 2)) == "21");
  CHECK(word_str(word_of(2, 2, 2)) == "12");
  CHECK(index_of(parse_word("221"), 2) == 3);
}

TEST_CASE("kron of the flip with itself is the antidiagonal permutation") {
  ExactMatrix x = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"0", "0", "0", "1"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}, {"1", "0", "0", "0"}});
  CHECK(kron(h(), h()) == x);
  CHECK(kron(identity_words(2, 1), identity_words(2, 1)) == identity_words(2, 2));
}

TEST_CASE("kron reads the leading letters with the first factor") {
  ExactMatrix A = generic(2, 1, "a"), B = generic(2, 1, "b");
  ExactMatrix K = kron(A, B);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Word w = word_of(i, 2, 2), v = word_of(j, 2, 2);
      CHECK(K(i, j) == A.at({w[0]}, {v[0]}) * B.at({w[1]}, {v[1]}));
    }
}

TEST_CASE("block-diagonal flip pair") {
  ExactMatrix v = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"0", "1", "0", "0"}, {"1", "0", "0", "0"}, {"0", "0", "0", "1"}, {"0", "0", "1", "0"}});
  // The displayed block-diagonal matrix is the flip on the leading letter.
  CHECK(kron(h(), identity_words(2, 1)) == v);
  ExactMatrix conj = v * Rf("p") * v;
  ExactMatrix expect = from_rows(2, std::vector<std::vector<std::string>>{
                                        {"0", "0", "0", "p"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"1/p", "0", "0", "0"}});
  CHECK(conj == expect);
  ExactMatrix x = kron(h(), h());
  CHECK(x * Rf("p") * x == Rf("1/p"));
}

TEST_CASE("embedding permutes the right letters") {
  ExactMatrix P = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"1", "0", "0", "0"}, {"0", "0", "1", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}});
  ExactMatrix E = embed_at(P, 2, 3);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) {
      Word w = word_of(i, 2, 3), v = word_of(j, 2, 3);
      Word sw = {v[0], v[2], v[1]};
      CHECK(E(i, j) == RatFunc(w == sw ? 1 : 0));
    }
  ExactMatrix R = generic(2, 2, "r");
  CHECK(embed_at(R, 1, 2) == R);
  CHECK_THROWS_AS(embed_at(R, 3, 3), std::out_of_range);
  CHECK_THROWS_AS(embed_at(R, 0, 3), std::out_of_range);
}

TEST_CASE("embedding is functorial and far slots commute") {
  ExactMatrix M = generic(2, 2, "m"), Mp = generic(2, 2, "n");
  CHECK(embed_at(M, 1, 3) * embed_at(Mp, 1, 3) == embed_at(M * Mp, 1, 3));
  CHECK(embed_at(M, 1, 4) * embed_at(Mp, 3, 4) == embed_at(Mp, 3, 4) * embed_at(M, 1, 4));
}

TEST_CASE("mixed-product law") {
  ExactMatrix A = generic(2, 1, "a"), B = generic(2, 2, "b"), C = generic(2, 1, "c"), D = generic(2, 2, "d");
  CHECK(kron(A, B) * kron(C, D) == kron(A * C, B * D));
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace(identity_words(2, 2)).empty());
  ExactMatrix Z(3, 3);
  CHECK(nullspace(Z).size() == 3);
  ExactMatrix A = from_rows(2, std::vector<std::vector<std::string>>{
                                   {"p", "1", "0", "q"}, {"0", "p", "1", "0"}, {"p", "1+p", "1", "q"}, {"0", "0", "0", "0"}});
  Constraints cs{Poly::var("p")};
  auto ns = nullspace(A, cs);
  CHECK(rank(A, cs) + ns.size() == 4);
  for (auto& v : ns) {
    ExactMatrix col(4, 1);
    for (int i = 0; i < 4; ++i) col(i, 0) = v[i];
    CHECK((A * col).is_zero());
  }
}

TEST_CASE("undecidable pivots raise a branch ambiguity") {
  ExactMatrix A = from_rows(2, std::vector<std::vector<std::string>>{{"p-1", "0"}, {"0", "0"}});
  CHECK_THROWS_AS(nullspace(A), branch_ambiguity);
  Constraints cs{Poly::var("p") - Poly(1)};
  CHECK(nullspace(A, cs).size() == 1);
  try {
    nullspace(A);
  } catch (const branch_ambiguity& e) {
    CHECK(e.polynomial() == "p-1");
  }
}

TEST_CASE("eigen data") {
  auto I = evaluate(identity_words(2, 2), {});
  auto ed = eigen_data(I);
  REQUIRE(ed.eigen.size() == 1);
  CHECK(ed.eigen[0].algebraic == 4);
  CHECK(ed.diagonalizable);
  auto J = evaluate(from_rows(2, std::vector<std::vector<std::string>>{
                                    {"1", "1", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "1", "0"}, {"0", "0", "0", "1"}}),
                    {});
  auto ej = eigen_data(J);
  CHECK_FALSE(ej.diagonalizable);
  CHECK(ej.eigen[0].algebraic == 4);
  CHECK(ej.eigen[0].geometric == 3);
  auto C3 = evaluate(from_rows(2, std::vector<std::vector<std::string>>{
                                     {"0", "0", "1", "0"}, {"1", "0", "0", "0"}, {"0", "1", "0", "0"}, {"0", "0", "0", "1"}}),
                     {});
  auto ec = eigen_data(C3);
  int total = 0;
  for (auto& e : ec.eigen) total += e.algebraic;
  CHECK(total == 4);
  CHECK(ec.eigen.size() == 3);
  CHECK(ec.diagonalizable);
}

TEST_CASE("matrix JSON round trip") {
  ExactMatrix R = Rf("p");
  json j = to_json(R);
  CHECK(j["N"] == 2);
  CHECK(j["entries"].size() == 4);
  CHECK(j["entries"][1][0] == "21");
  CHECK(matrix_from_json(j) == R);
}
