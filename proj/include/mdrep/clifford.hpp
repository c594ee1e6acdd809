#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mdrep/matrix.hpp"
#include "mdrep/mdd.hpp"

namespace mdrep {

// Character of the abelian normal subgroup: values on x_ij, i<j, in lexicographic pair order.
struct Character {
  int n = 0;
  std::vector<RatFunc> values;
  Constraints constraints;

  RatFunc at(int i, int j) const;  // x_ji takes the inverse value
  std::string str() const;
};

// "a,a^-1,a" at rank n. Each parameter p gets p, p-1, p+1 declared non-vanishing.
Character parse_character(int n, const std::string& text);
// (g.chi)(x) = chi(g^-1 x g).
Character act(const Perm& g, const Character& chi);
bool same_values(const Character& a, const Character& b);

struct StabilizerData {
  std::vector<Perm> subgroup;     // sorted
  std::vector<Perm> generators;   // greedy generating set
  std::vector<Perm> transversal;  // lex-least left coset representatives, identity first
  std::size_t index() const { return transversal.size(); }
};

StabilizerData orbit_and_stabilizer(const Character& chi, int max_n = 6);
std::vector<Perm> symmetric_group(int n);
std::vector<Perm> closure(const std::vector<Perm>& gens, int n);
std::vector<Perm> generating_set(const std::vector<Perm>& H);
std::string subgroup_name(const std::vector<Perm>& H);

// Irrep of a stabilizer given on generators; homomorphism property checked on extension.
struct StabIrrep {
  std::string name;
  std::vector<Perm> gens;
  std::vector<ExactMatrix> images;
  std::size_t dim() const { return images.empty() ? 1 : images[0].rows(); }
};

// Images of every element of H; throws invalid_argument when tau is not a homomorphism.
std::map<Perm, ExactMatrix> extend(const StabIrrep& tau, const std::vector<Perm>& H);
// Built-in table: all linear characters of H, and for H = Sigma_n the irreps std, std*sign
// (and the 2-dim irrep of Sigma_4), up to max_dim.
std::vector<StabIrrep> stabilizer_irreps(const std::vector<Perm>& H, int n, std::size_t max_dim = 3);
// Table lookup by name (e.g. "trivial", "sign", "omega^1", "std").
StabIrrep find_irrep(const std::vector<Perm>& H, int n, const std::string& name);

struct InducedRep {
  int n = 0;
  std::vector<ExactMatrix> x;      // images of x_ij, i<j, lexicographic
  std::vector<ExactMatrix> sigma;  // images of sigma_1..sigma_{n-1}
  std::vector<Perm> transversal;
  std::size_t tau_dim = 1;
  Constraints constraints;
  std::vector<Perm> subgroup;
  std::map<Perm, ExactMatrix> tau_images;

  std::size_t dim() const { return x.empty() ? sigma.at(0).rows() : x[0].rows(); }
  const ExactMatrix& x_image(int i, int j) const;  // i<j
  ExactMatrix perm_image(const Perm& w) const;
  std::vector<ExactMatrix> generators() const;  // all x_ij then all sigma_i
  std::vector<ExactMatrix> md_images() const;  // R_i = x_{i,i+1} sigma_i, S_i = sigma_i
};

InducedRep induce(const Character& chi, const StabIrrep& tau);
// Relations of Z^(n choose 2) x| Sigma_n on the images.
bool verify_md_prime(const InducedRep& rep);
bool is_irreducible(const InducedRep& rep);
std::size_t commutant_dim(const InducedRep& rep);

// B_k = D P A_k P^-1 D^-1 with P sending basis vector i to perm[i] and D = diag(scale).
struct MonomialWitness {
  std::vector<int> perm;
  std::vector<RatFunc> scale;
};
std::optional<MonomialWitness> monomial_witness(const std::vector<ExactMatrix>& A, const std::vector<ExactMatrix>& B);

// Characters fixed by H: a parameter per pair of mutually inverse orbits on ordered pairs,
// a sign per self-inverse orbit.
std::vector<Character> invariant_characters(const std::vector<Perm>& H, int n);

struct FamilyEntry {
  std::string stabilizer;  // subgroup name
  std::vector<Perm> subgroup;
  std::size_t index = 1;
  Character chi;
  std::vector<std::string> taus;  // one member per tau
  bool parametric = false;
  std::optional<std::string> limit_of;  // family whose specialization recovers these members
  std::string label() const;
};

struct SmallDimReport {
  int n = 0;
  std::size_t d = 0;
  std::vector<FamilyEntry> entries;
  std::size_t families() const;
  std::size_t isolated() const;  // members of non-parametric entries
};

SmallDimReport classify_small_dims(int n, std::size_t d);

}  // namespace mdrep
