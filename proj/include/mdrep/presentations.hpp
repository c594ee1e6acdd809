#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mdrep/json_io.hpp"
#include "mdrep/matrix.hpp"

namespace mdrep {

enum class RelationSet { Sym, Braid, VirtualBraid, LoopBraid, MixedDoubles };

RelationSet parse_relation_set(const std::string& name);
std::string to_string(RelationSet r);

// Generator letter r_i or s_i.
struct Gen {
  char g;
  int i;
};

struct Relation {
  std::string id;
  std::vector<Gen> lhs, rhs;  // products read left to right
};

// Instances of the relation set at level n, sorted by id.
std::vector<Relation> instantiate(RelationSet set, int n);

struct Witness {
  Word row, col;
  RatFunc value;
};

struct AnomalyReport {
  std::string relation;
  int n = 0;
  ExactMatrix residual;
  bool is_zero = true;
  std::optional<Witness> witness;
};

std::vector<AnomalyReport> verify(const RepPair& pair, RelationSet set, int n);
bool all_zero(const std::vector<AnomalyReport>& reports);

// Named residual at level n: RRR, SSS, SRR, SSR, RRS, RSS, RR, SS.
ExactMatrix anomaly(const RepPair& pair, const std::string& kind, int n = 3);
std::vector<std::string> anomaly_kinds();

json to_json(const AnomalyReport& r);

}  // namespace mdrep
