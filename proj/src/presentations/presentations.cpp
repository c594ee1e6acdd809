#include "mdrep/presentations.hpp"

#include <algorithm>
#include <map>

namespace mdrep {

RelationSet parse_relation_set(const std::string& name) {
  static const std::map<std::string, RelationSet> names = {{"Sym", RelationSet::Sym},
                                                           {"Braid", RelationSet::Braid},
                                                           {"VirtualBraid", RelationSet::VirtualBraid},
                                                           {"LoopBraid", RelationSet::LoopBraid},
                                                           {"MixedDoubles", RelationSet::MixedDoubles}};
  auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown relation set '" + name + "'");
  return it->second;
}

std::string to_string(RelationSet r) {
  switch (r) {
    case RelationSet::Sym:
      return "Sym";
    case RelationSet::Braid:
      return "Braid";
    case RelationSet::VirtualBraid:
      return "VirtualBraid";
    case RelationSet::LoopBraid:
      return "LoopBraid";
    case RelationSet::MixedDoubles:
      return "MixedDoubles";
  }
  return "";
}

namespace {

Gen r(int i) { return {'r', i}; }
Gen s(int i) { return {'s', i}; }

struct Want {
  bool rrr = false, sss = false, rrs = false, rss = false, ss = false, rr = false;
  bool far_rr = false, far_ss = false, far_mixed = false;
};

Want wanted(RelationSet set) {
  Want w;
  switch (set) {
    case RelationSet::Sym:
      w.sss = w.ss = w.far_ss = true;
      break;
    case RelationSet::Braid:
      w.rrr = w.far_rr = true;
      break;
    case RelationSet::MixedDoubles:
      w.rr = true;
      [[fallthrough]];
    case RelationSet::LoopBraid:
      w.rrs = true;
      [[fallthrough]];
    case RelationSet::VirtualBraid:
      w.rrr = w.rss = w.sss = w.ss = true;
      w.far_rr = w.far_ss = w.far_mixed = true;
      break;
  }
  return w;
}

}  // namespace

std::vector<Relation> instantiate(RelationSet set, int n) {
  if (n < 2) throw std::invalid_argument("relations need level n >= 2");
  Want w = wanted(set);
  std::vector<Relation> out;
  auto id = [](const std::string& k, int i) { return k + "_" + std::to_string(i); };
  for (int i = 1; i + 1 <= n - 1; ++i) {
    if (w.rrr) out.push_back({id("rrr", i), {r(i), r(i + 1), r(i)}, {r(i + 1), r(i), r(i + 1)}});
    if (w.sss) out.push_back({id("sss", i), {s(i), s(i + 1), s(i)}, {s(i + 1), s(i), s(i + 1)}});
    if (w.rrs) out.push_back({id("rrs", i), {r(i), r(i + 1), s(i)}, {s(i + 1), r(i), r(i + 1)}});
    if (w.rss) out.push_back({id("rss", i), {r(i), s(i + 1), s(i)}, {s(i + 1), s(i), r(i + 1)}});
  }
  for (int i = 1; i <= n - 1; ++i) {
    if (w.ss) out.push_back({id("ss", i), {s(i), s(i)}, {}});
    if (w.rr) out.push_back({id("rr", i), {r(i), r(i)}, {}});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      std::string sfx = "_" + std::to_string(i) + "_" + std::to_string(j);
      if (w.far_rr) out.push_back({"far_rr" + sfx, {r(i), r(j)}, {r(j), r(i)}});
      if (w.far_ss) out.push_back({"far_ss" + sfx, {s(i), s(j)}, {s(j), s(i)}});
      if (w.far_mixed) {
        out.push_back({"far_rs" + sfx, {r(i), s(j)}, {s(j), r(i)}});
        out.push_back({"far_sr" + sfx, {s(i), r(j)}, {r(j), s(i)}});
      }
    }
  std::sort(out.begin(), out.end(), [](const Relation& a, const Relation& b) { return a.id < b.id; });
  return out;
}

namespace {

void check_pair(const RepPair& p) {
  if (!p.R.is_square() || !p.S.is_square() || p.R.rows() != p.S.rows())
    throw std::invalid_argument("R and S must be square of equal size");
  if (!p.R.has_shape() || p.R.rows_level() != 2 || !p.S.has_shape() || p.S.rows_level() != 2 || p.R.N() != p.S.N())
    throw std::invalid_argument("R and S must act on two letters over the same alphabet");
}

class Images {
 public:
  Images(const RepPair& p, int n) : p_(p), n_(n) {}
  const ExactMatrix& get(Gen g) {
    auto key = std::make_pair(g.g, g.i);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    return cache_[key] = embed_at(g.g == 'r' ? p_.R : p_.S, g.i, n_);
  }
  ExactMatrix product(const std::vector<Gen>& w) {
    if (w.empty()) return identity_words(p_.R.N(), n_);
    ExactMatrix m = get(w[0]);
    for (std::size_t k = 1; k < w.size(); ++k) m = m * get(w[k]);
    return m;
  }

 private:
  const RepPair& p_;
  int n_;
  std::map<std::pair<char, int>, ExactMatrix> cache_;
};

AnomalyReport report(const std::string& id, int n, ExactMatrix res) {
  AnomalyReport a;
  a.relation = id;
  a.n = n;
  for (std::size_t i = 0; i < res.rows() && a.is_zero; ++i)
    for (std::size_t j = 0; j < res.cols(); ++j)
      if (!res(i, j).is_zero()) {
        a.is_zero = false;
        a.witness = Witness{word_of(i, res.N(), n), word_of(j, res.N(), n), res(i, j)};
        break;
      }
  a.residual = std::move(res);
  return a;
}

}  // namespace

std::vector<AnomalyReport> verify(const RepPair& pair, RelationSet set, int n) {
  check_pair(pair);
  Images im(pair, n);
  std::vector<AnomalyReport> out;
  for (const auto& rel : instantiate(set, n)) out.push_back(report(rel.id, n, im.product(rel.lhs) - im.product(rel.rhs)));
  return out;
}

bool all_zero(const std::vector<AnomalyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const AnomalyReport& a) { return a.is_zero; });
}

std::vector<std::string> anomaly_kinds() { return {"RR", "RRR", "RRS", "RSS", "SRR", "SS", "SSR", "SSS"}; }

ExactMatrix anomaly(const RepPair& pair, const std::string& kind, int n) {
  check_pair(pair);
  if (n < 3) throw std::invalid_argument("anomalies live at level n >= 3");
  Images im(pair, n);
  auto d = [&](std::vector<Gen> a, std::vector<Gen> b) { return im.product(a) - im.product(b); };
  if (kind == "RRR") return d({r(1), r(2), r(1)}, {r(2), r(1), r(2)});
  if (kind == "SSS") return d({s(1), s(2), s(1)}, {s(2), s(1), s(2)});
  if (kind == "SRR") return d({s(1), r(2), r(1)}, {r(2), r(1), s(2)});
  if (kind == "SSR") return d({s(1), s(2), r(1)}, {r(2), s(1), s(2)});
  if (kind == "RRS") return d({r(1), r(2), s(1)}, {s(2), r(1), r(2)});
  if (kind == "RSS") return d({r(1), s(2), s(1)}, {s(2), s(1), r(2)});
  if (kind == "RR") return d({r(1), r(1)}, {});
  if (kind == "SS") return d({s(1), s(1)}, {});
  throw std::invalid_argument("unknown anomaly kind '" + kind + "'");
}

json to_json(const AnomalyReport& r) {
  json w = nullptr;
  if (r.witness) w = json{{"row", word_str(r.witness->row)}, {"col", word_str(r.witness->col)}, {"value", to_json(r.witness->value)}};
  return json{{"relation", r.relation}, {"ok", r.is_zero}, {"witness", w}};
}

}  // namespace mdrep
