#pragma once

#include <map>
#include <string>
#include <vector>

#include "mdrep/matrix.hpp"

namespace mdrep {

// Supplied parameters violate a family's side conditions.
class constraint_violation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Params = std::map<std::string, RatFunc>;

// "p=2,q=1/3,eps=-1" -> values; a bare name "p" maps to the parameter itself.
Params parse_params(const std::string& text);

struct FamilyInfo {
  std::string id;
  std::string kind;  // involutive-braid | md-case | manji
  std::vector<std::string> params;
  std::vector<std::string> signs;  // required explicit +-1 arguments
  std::string description;
};

std::vector<FamilyInfo> catalog_list();

// Families: trivial, f-glue(p,q), a-glue(p), fa-slash(q,sign), anti-slash.
ExactMatrix make_involutive_braid(const std::string& family, const Params& params = {});

// The 4x4 basis matrices and R_sign(a,b,c,d) = aP + dA + cN + bN'.
ExactMatrix manji_basis(const std::string& kind, int sign);
ExactMatrix make_manji(int sign, const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d);

// Classification cases. Missing continuous parameters stay symbolic; sign
// arguments (sign, eps) must be given. Construction re-verifies MixedDoubles at n=3.
RepPair make_md_pair(const std::string& case_id, const Params& params = {});
std::vector<std::string> md_case_ids();

// Transforms.
enum class TransformKind { local_conj, transpose, global_sign, swap_rs, antidiagonal, nonlocal_conj };
struct Transform {
  TransformKind kind;
  ExactMatrix matrix;  // A (2x2) for local_conj, U (4x4) for nonlocal_conj
};
RepPair apply_transform(const Transform& t, const RepPair& pair);
Transform inverse(const Transform& t);
ExactMatrix inverse_exact(const ExactMatrix& M, Constraints* cs = nullptr);

struct DsResult {
  bool commutes = false;
  RepPair derived;
};
DsResult check_ds_equivalence(const ExactMatrix& A, const RepPair& pair);

// Certificate that A (x) A commutes with R and S exactly when A = [[x,y],[y,x]]
// (for invertible A): the family commutes symbolically and (a11-a22)det(A),
// (a12-a21)det(A) lie in the ideal of commutation equations.
struct DsCommutantReport {
  bool family_commutes = false;
  bool diagonal_forced = false;   // (a11-a22) det in ideal
  bool offdiag_forced = false;    // (a12-a21) det in ideal
  std::size_t equations = 0;
  bool exact() const { return family_commutes && diagonal_forced && offdiag_forced; }
};
DsCommutantReport ds_commutant_symmetric_family(const RepPair& pair);

struct WConjugationReport {
  bool R_conjugate = false;
  bool S_conjugate = false;
  bool conic = false;
  bool holds() const { return R_conjugate && S_conjugate && conic; }
};
// Symbolic in lambda, or at lambda = value when given.
WConjugationReport w_conjugation_check(const std::optional<RatFunc>& lambda = std::nullopt);

// Named catalog points that coincide with M.
std::vector<std::string> known_coincidences(const ExactMatrix& M);

// Non-local example matrices.
ExactMatrix flip_2x2();
ExactMatrix nonlocal_v();
ExactMatrix R_f(const RatFunc& p);
ExactMatrix R_a(const RatFunc& p);

}  // namespace mdrep
