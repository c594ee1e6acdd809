#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdrep/matrix.hpp"
#include "mdrep/sparse.hpp"

namespace mdrep {

// R_1..R_{n-1} followed by S_1..S_{n-1} at level n.
std::vector<ExactMatrix> generator_images(const RepPair& pair, int n);
std::vector<NumMatrix> generator_images(const RepPair& pair, int n, const Assignment& at);

// Random rational point avoiding the constraints, {0, 1, -1}, and coincidences
// p = q, p = -q, p q = 1 among the variables.
Assignment generic_point(const std::vector<std::string>& vars, const Constraints& cs, std::uint64_t seed = 1);

struct CommutantBasis {
  std::vector<ExactMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};
CommutantBasis commutant(const std::vector<ExactMatrix>& gens, const Constraints& cs = {});
std::vector<NumMatrix> commutant(const std::vector<NumMatrix>& gens);
bool commutes_with_all(const ExactMatrix& T, const std::vector<ExactMatrix>& gens);

// Generic element T = sum u_k B_k has constant diagonal alpha and a single nonzero
// entry gamma below the diagonal; (T^2 - T) is alpha^2 - alpha on the diagonal and
// (2 alpha - 1) gamma at gamma's position, so T in {0, I} whenever T^2 = T.
struct EntryCertificate {
  std::size_t row = 0, col = 0;
  RatFunc alpha, gamma;
};
std::optional<EntryCertificate> entry_certificate(const CommutantBasis& C);

enum class IdempotentStatus { split, indecomposable, undecided };
std::string to_string(IdempotentStatus s);

struct IdempotentResult {
  IdempotentStatus status = IdempotentStatus::undecided;
  std::vector<ExactMatrix> idempotents;  // complete orthogonal family summing to I when split
  std::size_t trace_form_rank = 0;       // dimension of the commutant modulo its radical
  std::optional<EntryCertificate> certificate;
  std::string note;
};
IdempotentResult find_idempotents(const CommutantBasis& C, const Constraints& cs = {});

// Burnside: the generated algebra is the full matrix algebra (generic parameters).
std::size_t algebra_dim(const std::vector<ExactMatrix>& gens, std::size_t bound = 4096);
bool is_irreducible(const std::vector<ExactMatrix>& gens);

struct Summand {
  ExactMatrix basis;   // d x k
  ExactMatrix coords;  // k x d, coords * basis = I
  std::vector<ExactMatrix> gens;
  IdempotentStatus status = IdempotentStatus::undecided;
  std::optional<EntryCertificate> certificate;
  bool irreducible = false;
  std::vector<RatFunc> x_charpoly;  // of R_1 S_1 on the summand
  std::size_t dim() const { return basis.cols(); }
  ExactMatrix projector() const { return basis * coords; }
};

struct DecompositionReport {
  int n = 0;
  std::size_t dim = 0;
  std::size_t commutant_dim = 0;
  std::vector<Summand> summands;
  bool complete() const;
  std::vector<std::size_t> dims() const;
};

struct DecomposeOptions {
  Constraints extra;
  int max_depth = 32;
  bool check_irreducible = true;
};
DecompositionReport decompose(const RepPair& pair, int n, const DecomposeOptions& opt = {});
// gens must list R_1..R_{n-1} then S_1..S_{n-1} for the X data to be meaningful.
DecompositionReport decompose_gens(const std::vector<ExactMatrix>& gens, int n, const Constraints& cs,
                                   const DecomposeOptions& opt = {});

enum class XClass { finite, infinite_semisimple, non_semisimple };
std::string to_string(XClass c);
struct Trichotomy {
  XClass cls = XClass::finite;
  bool diagonalizable = false;
  std::optional<long> order;  // multiplicative order when found within the bound
  std::size_t bound = 0;
};
Trichotomy x_trichotomy(const RepPair& pair, const Assignment& at, std::size_t bound = 1000);

struct AlgebraDims {
  std::size_t algebra = 0, radical = 0, semisimple = 0, center = 0;
  std::size_t one_dim_simples = 0;
  std::optional<std::vector<std::size_t>> simple_dims;  // matrix sizes of the simple components
};
AlgebraDims algebra_dims(const std::vector<NumMatrix>& gens, std::size_t bound = 4096);
AlgebraDims algebra_dims(const RepPair& pair, int n, const Assignment& at, std::size_t bound = 4096);

// Radical series V > JV > J^2 V > ... of a module given by numeric generator images.
struct Layer {
  std::size_t dim = 0;
  std::vector<Cyclo> traces;  // trace of each requested word on the layer
};
std::vector<Layer> radical_layers(const std::vector<NumMatrix>& gens, const std::vector<std::vector<int>>& words);
// Multiplicities of (3), (2,1), (1^3) in a layer from traces of e, s1, s1 s2.
std::vector<long> sym3_content(const Layer& layer);

// Irreducible factor dimensions, via the glue projection K for glue-patterned pairs
// or directly for Wangian pairs (S = +-R).
std::vector<std::size_t> semisimple_quotient_dims(const RepPair& pair, int n, const Constraints& extra = {});

// Restriction of square matrices to the invariant subspace spanned by the columns of B.
ExactMatrix restrict_to(const ExactMatrix& M, const ExactMatrix& B, const ExactMatrix& coords);

}  // namespace mdrep
