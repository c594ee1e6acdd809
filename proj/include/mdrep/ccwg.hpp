#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mdrep/matrix.hpp"

namespace mdrep {

using Composition = std::vector<int>;

Composition f_of(const Word& w, int N);
std::string composition_str(const Composition& c);

enum class Order { less, equal, greater, incomparable };
// First difference from the left decides; the larger entry is the smaller composition.
Order compare(const Composition& a, const Composition& b);
// Definitional order: position of the first revlex instance.
Order compare_by_first_instance(const Composition& a, const Composition& b);

Word orbit_rep(const Composition& c);
std::vector<Composition> compositions(int N, int n);  // in increasing order

enum class Position { cc, glue, forbidden };

class GlueMask {
 public:
  GlueMask(int N, int n);
  int N() const { return N_; }
  int n() const { return n_; }
  std::size_t size() const { return dim_; }
  Position at(std::size_t row, std::size_t col) const { return pos_[row * dim_ + col]; }

 private:
  int N_, n_;
  std::size_t dim_;
  std::vector<Position> pos_;
};

// Cached per (N, n).
const GlueMask& glue_mask(int N, int n);

bool is_ccwg(const ExactMatrix& M);
ExactMatrix project_K(const ExactMatrix& M);
ExactMatrix project_glue(const ExactMatrix& M);

struct ClosureReport {
  bool product_ccwg = false;
  bool kron_ccwg = false;
  bool K_multiplicative = false;
  bool ok() const { return product_ccwg && kron_ccwg && K_multiplicative; }
};
ClosureReport check_closure(const ExactMatrix& A, const ExactMatrix& B);

struct NilpotencyReport {
  int chain_length = 0;           // longest chain in the order
  bool power_vanishes = false;    // all-ones glue matrix to the chain length
  bool power_below_nonzero = false;  // one power less is nonzero (sharpness)
  bool samples_vanish = false;    // random glue products of chain length
};
NilpotencyReport glue_nilpotency(int N, int n, std::uint64_t seed = 1, int samples = 5);

struct SplitLemmaReport {
  std::size_t pairs = 0;
  bool clause_I = true, clause_II = true, clause_III = true;
  bool ok() const { return clause_I && clause_II && clause_III; }
};
SplitLemmaReport split_lemma_check(int N, int n, int m, std::size_t bound = 100000);

// Pair projected by K, when both matrices are CCwg.
std::optional<RepPair> k_pair(const RepPair& pair);

}  // namespace mdrep
