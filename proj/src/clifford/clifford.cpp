#include "mdrep/clifford.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "mdrep/structure.hpp"

namespace mdrep {

namespace {

int npairs(int n) { return n * (n - 1) / 2; }

int image(const Perm& w, int i) { return w[i - 1]; }

int perm_order(const Perm& w) {
  Perm id = perm_identity(static_cast<int>(w.size())), p = w;
  int k = 1;
  while (p != id) {
    p = perm_compose(w, p);
    ++k;
  }
  return k;
}

int perm_sign(const Perm& w) { return perm_length(w) % 2 == 0 ? 1 : -1; }

bool contains(const std::vector<Perm>& sorted, const Perm& w) { return std::binary_search(sorted.begin(), sorted.end(), w); }

ExactMatrix scalar_matrix(std::size_t d, const RatFunc& c) {
  ExactMatrix M(d, d);
  for (std::size_t i = 0; i < d; ++i) M(i, i) = c;
  return M;
}

// Sum-zero part of the permutation representation, basis e_k - e_n.
ExactMatrix std_matrix(const Perm& w) {
  const int n = static_cast<int>(w.size());
  ExactMatrix M(n - 1, n - 1);
  for (int k = 1; k < n; ++k)
    for (int j = 1; j < n; ++j) {
      long c = (image(w, k) == j ? 1 : 0) - (image(w, n) == j ? 1 : 0);
      if (c != 0) M(j - 1, k - 1) = RatFunc(c);
    }
  return M;
}

// Sigma_4 -> Sigma_3 through the action on the pair partitions {12|34}, {13|24}, {14|23}.
Perm partition_action(const Perm& w) {
  Perm pi(3);
  for (int m = 0; m < 3; ++m) {
    int a = image(w, 1), b = image(w, m + 2);
    if (a > b) std::swap(a, b);
    int partner;
    if (a == 1) {
      partner = b;
    } else {
      partner = 10 - 1 - a - b;  // 1+2+3+4 = 10
    }
    pi[m] = partner - 1;
  }
  return pi;
}

Cyclo root_power(int m, int k) {
  if (m == 1) return Cyclo(1);
  if (m == 2) return Cyclo(k % 2 == 0 ? 1 : -1);
  if (m == 3 || m == 4 || m == 6) return Cyclo::zeta(m).pow(k);
  throw std::invalid_argument("character values of order " + std::to_string(m) + " are outside the scalar tower");
}

}  // namespace

RatFunc Character::at(int i, int j) const {
  if (i < j) return values.at(pair_index(n, i, j));
  return values.at(pair_index(n, j, i)).inv();
}

std::string Character::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < values.size(); ++k) s += (k ? ", " : "") + values[k].str();
  return s + ")";
}

Character parse_character(int n, const std::string& text) {
  if (n < 2) throw std::invalid_argument("rank must be at least 2");
  Character chi;
  chi.n = n;
  std::stringstream ss(text);
  std::string tok;
  std::set<std::string> vars;
  while (std::getline(ss, tok, ',')) {
    RatFunc v = parse_ratfunc(tok);
    if (v.is_zero()) throw std::invalid_argument("character values must be nonzero");
    for (const auto& x : v.variables()) vars.insert(x);
    chi.values.push_back(v);
  }
  if (static_cast<int>(chi.values.size()) != npairs(n))
    throw std::invalid_argument("expected " + std::to_string(npairs(n)) + " character values");
  for (const auto& x : vars) {
    RatFunc p = RatFunc::var(x);
    chi.constraints.add(p.num());
    chi.constraints.add((p - RatFunc(1)).num());
    chi.constraints.add((p + RatFunc(1)).num());
  }
  return chi;
}

Character act(const Perm& g, const Character& chi) {
  Character out = chi;
  Perm gi = perm_inverse(g);
  for (int i = 1; i <= chi.n; ++i)
    for (int j = i + 1; j <= chi.n; ++j) out.values[pair_index(chi.n, i, j)] = chi.at(image(gi, i), image(gi, j));
  return out;
}

bool same_values(const Character& a, const Character& b) { return a.n == b.n && a.values == b.values; }

std::vector<Perm> symmetric_group(int n) {
  std::vector<Perm> out;
  Perm w = perm_identity(n);
  do out.push_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, int n) {
  std::set<Perm> seen{perm_identity(n)};
  std::deque<Perm> queue{perm_identity(n)};
  while (!queue.empty()) {
    Perm h = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm p = perm_compose(g, h);
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> generating_set(const std::vector<Perm>& H) {
  if (H.empty()) throw std::invalid_argument("empty subgroup");
  const int n = static_cast<int>(H[0].size());
  std::vector<Perm> gens;
  std::vector<Perm> cur = closure(gens, n);
  for (const auto& h : H)
    if (!contains(cur, h)) {
      gens.push_back(h);
      cur = closure(gens, n);
    }
  return gens;
}

std::string subgroup_name(const std::vector<Perm>& H) {
  const std::size_t k = H.size();
  const int n = H.empty() ? 0 : static_cast<int>(H[0].size());
  int max_order = 1;
  for (const auto& h : H) max_order = std::max(max_order, perm_order(h));
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  if (k == fact && n >= 2) return "S" + std::to_string(n);
  if (k == 1) return "1";
  if (static_cast<std::size_t>(max_order) == k) return "C" + std::to_string(k);
  if (k == 4) return "V4";
  if (k == 6) return "S3";
  if (k == 8) return "D4";
  if (k == 12) return "A4";
  return "order " + std::to_string(k);
}

StabilizerData orbit_and_stabilizer(const Character& chi, int max_n) {
  if (chi.n > max_n) throw std::out_of_range("rank exceeds the enumeration bound");
  StabilizerData sd;
  std::vector<Perm> G = symmetric_group(chi.n);
  for (const auto& w : G)
    if (same_values(act(w, chi), chi)) sd.subgroup.push_back(w);
  std::set<Perm> covered;
  for (const auto& w : G) {
    if (covered.count(w)) continue;
    sd.transversal.push_back(w);
    for (const auto& h : sd.subgroup) covered.insert(perm_compose(w, h));
  }
  sd.generators = generating_set(sd.subgroup);
  return sd;
}

std::map<Perm, ExactMatrix> extend(const StabIrrep& tau, const std::vector<Perm>& H) {
  if (H.empty()) throw std::invalid_argument("empty subgroup");
  const int n = static_cast<int>(H[0].size());
  const std::size_t d = tau.dim();
  if (tau.gens.size() != tau.images.size()) throw std::invalid_argument("generator and image counts differ");
  for (const auto& g : tau.gens)
    if (!contains(H, g)) throw std::invalid_argument("tau generator outside the stabilizer");
  std::map<Perm, ExactMatrix> img;
  img.emplace(perm_identity(n), ExactMatrix::identity(d));
  std::deque<Perm> queue{perm_identity(n)};
  while (!queue.empty()) {
    Perm h = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < tau.gens.size(); ++k) {
      Perm p = perm_compose(tau.gens[k], h);
      ExactMatrix M = tau.images[k] * img.at(h);
      auto it = img.find(p);
      if (it == img.end()) {
        img.emplace(p, M);
        queue.push_back(p);
      } else if (it->second != M) {
        throw std::invalid_argument("tau '" + tau.name + "' is not a homomorphism");
      }
    }
  }
  if (img.size() != H.size()) throw std::invalid_argument("tau generators do not generate the stabilizer");
  return img;
}

std::vector<StabIrrep> stabilizer_irreps(const std::vector<Perm>& H, int n, std::size_t max_dim) {
  std::vector<StabIrrep> out;
  std::vector<Perm> gens = generating_set(H);
  std::vector<int> orders;
  for (const auto& g : gens) orders.push_back(perm_order(g));
  // Linear characters: every root-of-unity assignment on generators that extends.
  std::optional<Perm> three_cycle;
  if (H.size() == 3)
    for (const auto& h : H) {
      std::vector<int> moved;
      for (int i = 1; i <= n; ++i)
        if (image(h, i) != i) moved.push_back(i);
      if (moved.size() == 3 && image(h, moved[0]) == moved[1]) three_cycle = h;
    }
  std::vector<int> k(gens.size(), 0);
  while (true) {
    StabIrrep t;
    t.gens = gens;
    for (std::size_t i = 0; i < gens.size(); ++i) t.images.push_back(scalar_matrix(1, RatFunc(root_power(orders[i], k[i]))));
    try {
      auto ext = extend(t, H);
      bool trivial = true, sign = true;
      for (const auto& [h, M] : ext) {
        if (!M(0, 0).is_one()) trivial = false;
        if (M(0, 0) != RatFunc(perm_sign(h))) sign = false;
      }
      if (trivial) {
        t.name = "trivial";
      } else if (sign) {
        t.name = "sign";
      } else if (three_cycle) {
        Cyclo v = ext.at(*three_cycle)(0, 0).constant_value();
        t.name = v == Cyclo::zeta(3) ? "omega^1" : "omega^2";
      } else {
        t.name = "chi[";
        for (std::size_t i = 0; i < gens.size(); ++i) t.name += (i ? "," : "") + t.images[i](0, 0).str();
        t.name += "]";
      }
      out.push_back(std::move(t));
    } catch (const std::invalid_argument&) {
    }
    std::size_t i = 0;
    while (i < k.size() && ++k[i] == orders[i]) k[i++] = 0;
    if (i == k.size()) break;
  }
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  if (H.size() == fact && n >= 3) {
    auto add = [&](const std::string& name, const std::function<ExactMatrix(const Perm&)>& f) {
      StabIrrep t;
      t.name = name;
      t.gens = gens;
      for (const auto& g : gens) t.images.push_back(f(g));
      if (t.dim() <= max_dim) out.push_back(std::move(t));
    };
    if (n == 4) add("2d", [](const Perm& w) { return std_matrix(partition_action(w)); });
    add("std", [](const Perm& w) { return std_matrix(w); });
    if (n >= 4) add("std*sign", [](const Perm& w) { return RatFunc(perm_sign(w)) * std_matrix(w); });
  }
  return out;
}

StabIrrep find_irrep(const std::vector<Perm>& H, int n, const std::string& name) {
  std::string key = name == "omega^0" ? "trivial" : name;
  for (auto& t : stabilizer_irreps(H, n, 64))
    if (t.name == key) return t;
  throw std::invalid_argument("no stabilizer irrep named '" + name + "'");
}

const ExactMatrix& InducedRep::x_image(int i, int j) const { return x.at(pair_index(n, i, j)); }

ExactMatrix InducedRep::perm_image(const Perm& w) const {
  const std::size_t T = transversal.size(), d = tau_dim;
  ExactMatrix M(T * d, T * d);
  for (std::size_t a = 0; a < T; ++a) {
    Perm wt = perm_compose(w, transversal[a]);
    bool found = false;
    for (std::size_t b = 0; b < T && !found; ++b) {
      Perm h = perm_compose(perm_inverse(transversal[b]), wt);
      auto it = tau_images.find(h);
      if (it == tau_images.end()) continue;
      found = true;
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) M(b * d + r, a * d + c) = it->second(r, c);
    }
    if (!found) throw std::logic_error("transversal does not cover the coset");
  }
  return M;
}

std::vector<ExactMatrix> InducedRep::generators() const {
  std::vector<ExactMatrix> g = x;
  g.insert(g.end(), sigma.begin(), sigma.end());
  return g;
}

std::vector<ExactMatrix> InducedRep::md_images() const {
  std::vector<ExactMatrix> out;
  for (int i = 1; i < n; ++i) out.push_back(x_image(i, i + 1) * sigma[i - 1]);
  for (int i = 1; i < n; ++i) out.push_back(sigma[i - 1]);
  return out;
}

InducedRep induce(const Character& chi, const StabIrrep& tau) {
  StabilizerData sd = orbit_and_stabilizer(chi);
  InducedRep rep;
  rep.n = chi.n;
  rep.transversal = sd.transversal;
  rep.tau_dim = tau.dim();
  rep.constraints = chi.constraints;
  rep.subgroup = sd.subgroup;
  rep.tau_images = extend(tau, sd.subgroup);
  const std::size_t T = sd.transversal.size(), d = tau.dim();
  for (int i = 1; i <= chi.n; ++i)
    for (int j = i + 1; j <= chi.n; ++j) {
      ExactMatrix X(T * d, T * d);
      for (std::size_t a = 0; a < T; ++a) {
        Perm ti = perm_inverse(sd.transversal[a]);
        RatFunc v = chi.at(image(ti, i), image(ti, j));
        for (std::size_t r = 0; r < d; ++r) X(a * d + r, a * d + r) = v;
      }
      rep.x.push_back(std::move(X));
    }
  for (int i = 1; i < chi.n; ++i) rep.sigma.push_back(rep.perm_image(transposition(chi.n, i, i + 1)));
  if (!verify_md_prime(rep)) throw std::logic_error("induced matrices fail the group relations");
  return rep;
}

bool verify_md_prime(const InducedRep& rep) {
  const int n = rep.n;
  const std::size_t D = rep.dim();
  const ExactMatrix I = ExactMatrix::identity(D);
  for (const auto& X : rep.x)
    for (std::size_t a = 0; a < D; ++a)
      for (std::size_t b = 0; b < D; ++b)
        if ((a == b) == X(a, b).is_zero()) return false;
  for (std::size_t p = 0; p < rep.x.size(); ++p)
    for (std::size_t q = p + 1; q < rep.x.size(); ++q)
      if (rep.x[p] * rep.x[q] != rep.x[q] * rep.x[p]) return false;
  for (int i = 1; i < n; ++i) {
    const ExactMatrix& s = rep.sigma[i - 1];
    if (s * s != I) return false;
    for (int j = i + 1; j < n; ++j) {
      const ExactMatrix& t = rep.sigma[j - 1];
      if (j == i + 1 ? s * t * s != t * s * t : s * t != t * s) return false;
    }
    Perm w = transposition(n, i, i + 1);
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) {
        ExactMatrix C = s * rep.x_image(a, b) * s;
        int u = image(w, a), v = image(w, b);
        ExactMatrix want = rep.x_image(std::min(u, v), std::max(u, v));
        if (u > v ? C * want != I : C != want) return false;
      }
  }
  return true;
}

bool is_irreducible(const InducedRep& rep) { return is_irreducible(rep.generators()); }

std::size_t commutant_dim(const InducedRep& rep) { return commutant(rep.generators(), rep.constraints).dim(); }

std::optional<MonomialWitness> monomial_witness(const std::vector<ExactMatrix>& A, const std::vector<ExactMatrix>& B) {
  if (A.size() != B.size() || A.empty()) throw std::invalid_argument("matrix lists must be nonempty and of equal length");
  const std::size_t d = A[0].rows();
  for (std::size_t k = 0; k < A.size(); ++k)
    if (A[k].rows() != d || A[k].cols() != d || B[k].rows() != d || B[k].cols() != d)
      throw std::invalid_argument("matrices must be square of equal size");
  if (d > 8) throw std::out_of_range("monomial search limited to dimension 8");
  std::vector<int> perm(d);
  for (std::size_t i = 0; i < d; ++i) perm[i] = static_cast<int>(i);
  do {
    // A'_k(perm[i], perm[j]) = A_k(i, j)
    std::vector<int> inv(d);
    for (std::size_t i = 0; i < d; ++i) inv[perm[i]] = static_cast<int>(i);
    auto Ap = [&](std::size_t k, std::size_t p, std::size_t q) -> const RatFunc& { return A[k](inv[p], inv[q]); };
    bool ok = true;
    for (std::size_t k = 0; k < A.size() && ok; ++k)
      for (std::size_t p = 0; p < d && ok; ++p)
        for (std::size_t q = 0; q < d && ok; ++q) {
          const RatFunc& a = Ap(k, p, q);
          const RatFunc& b = B[k](p, q);
          if (a.is_zero() != b.is_zero() || (p == q && a != b)) ok = false;
        }
    if (!ok) continue;
    std::vector<std::optional<RatFunc>> s(d);
    for (std::size_t root = 0; root < d && ok; ++root) {
      if (s[root]) continue;
      s[root] = RatFunc(1);
      std::deque<std::size_t> queue{root};
      while (!queue.empty() && ok) {
        std::size_t p = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < A.size() && ok; ++k)
          for (std::size_t q = 0; q < d && ok; ++q) {
            if (q == p) continue;
            // B(p,q) = s_p A'(p,q) / s_q and B(q,p) = s_q A'(q,p) / s_p
            std::optional<RatFunc> sq;
            if (!Ap(k, p, q).is_zero()) sq = *s[p] * Ap(k, p, q) / B[k](p, q);
            else if (!Ap(k, q, p).is_zero()) sq = *s[p] * B[k](q, p) / Ap(k, q, p);
            if (!sq) continue;
            if (!s[q]) {
              s[q] = sq;
              queue.push_back(q);
            } else if (*s[q] != *sq) {
              ok = false;
            }
          }
      }
    }
    if (!ok) continue;
    for (std::size_t k = 0; k < A.size() && ok; ++k)
      for (std::size_t p = 0; p < d && ok; ++p)
        for (std::size_t q = 0; q < d && ok; ++q)
          if (B[k](p, q) != *s[p] * Ap(k, p, q) / *s[q]) ok = false;
    if (!ok) continue;
    MonomialWitness w;
    w.perm = perm;
    for (auto& x : s) w.scale.push_back(*x);
    return w;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::vector<Character> invariant_characters(const std::vector<Perm>& H, int n) {
  // Orbits of H on ordered pairs, numbered by first appearance in lexicographic order.
  std::map<std::pair<int, int>, int> orbit;
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j || orbit.count({i, j})) continue;
      for (const auto& h : H) orbit[{image(h, i), image(h, j)}] = count;
      ++count;
    }
  std::vector<int> kind(count, 0);  // 0 unset, 1 self-inverse, 2 parameter, 3 inverse of a parameter
  std::vector<int> param(count, -1), sign_slot(count, -1);
  int nparams = 0, nsigns = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      int o = orbit[{i, j}], r = orbit[{j, i}];
      if (kind[o]) continue;
      if (o == r) {
        kind[o] = 1;
        sign_slot[o] = nsigns++;
      } else {
        kind[o] = 2;
        kind[r] = 3;
        param[o] = param[r] = nparams++;
      }
    }
  std::vector<RatFunc> pv;
  Constraints cs;
  for (int p = 0; p < nparams; ++p) {
    RatFunc v = RatFunc::var(std::string(1, static_cast<char>('a' + p)));
    cs.add(v.num());
    cs.add((v - RatFunc(1)).num());
    cs.add((v + RatFunc(1)).num());
    for (const auto& u : pv) {
      cs.add((v - u).num());
      cs.add((v * u - RatFunc(1)).num());
    }
    pv.push_back(v);
  }
  std::vector<Character> out;
  for (long mask = 0; mask < (1L << nsigns); ++mask) {
    Character chi;
    chi.n = n;
    chi.constraints = cs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        int o = orbit[{i, j}];
        if (kind[o] == 1) chi.values.push_back(RatFunc((mask >> sign_slot[o]) & 1 ? -1 : 1));
        else if (kind[o] == 2) chi.values.push_back(pv[param[o]]);
        else chi.values.push_back(pv[param[o]].inv());
      }
    out.push_back(std::move(chi));
  }
  return out;
}

std::string FamilyEntry::label() const { return stabilizer + chi.str(); }

std::size_t SmallDimReport::families() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const FamilyEntry& e) { return e.parametric; }));
}

std::size_t SmallDimReport::isolated() const {
  std::size_t k = 0;
  for (const auto& e : entries)
    if (!e.parametric) k += e.taus.size();
  return k;
}

namespace {

std::vector<std::vector<Perm>> subgroup_classes(int n) {
  std::vector<Perm> G = symmetric_group(n);
  std::set<std::vector<Perm>> subs;
  for (const auto& g : G)
    for (const auto& h : G) subs.insert(closure({g, h}, n));
  std::set<std::vector<Perm>> reps;
  for (const auto& H : subs) {
    std::vector<Perm> best = H;
    for (const auto& g : G) {
      std::vector<Perm> c;
      for (const auto& h : H) c.push_back(perm_compose(perm_compose(g, h), perm_inverse(g)));
      std::sort(c.begin(), c.end());
      best = std::min(best, c);
    }
    reps.insert(best);
  }
  std::vector<std::vector<Perm>> out(reps.begin(), reps.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return out;
}

bool is_parametric(const Character& chi) {
  return std::any_of(chi.values.begin(), chi.values.end(), [](const RatFunc& v) { return !v.is_constant(); });
}

// Members of an isolated entry recovered by inducing in stages from a family specialised at a = +-1.
bool recovered_by(const FamilyEntry& iso, const FamilyEntry& fam, int n) {
  for (const auto& k : fam.subgroup)
    if (!contains(iso.subgroup, k)) return false;
  std::vector<std::string> vars;
  for (const auto& v : fam.chi.values)
    for (const auto& x : v.variables())
      if (std::find(vars.begin(), vars.end(), x) == vars.end()) vars.push_back(x);
  bool chi_ok = false;
  for (long mask = 0; mask < (1L << vars.size()) && !chi_ok; ++mask) {
    std::map<std::string, RatFunc> sub;
    for (std::size_t i = 0; i < vars.size(); ++i) sub[vars[i]] = RatFunc((mask >> i) & 1 ? -1 : 1);
    std::vector<RatFunc> vals;
    for (const auto& v : fam.chi.values) vals.push_back(v.substitute(sub));
    chi_ok = vals == iso.chi.values;
  }
  if (!chi_ok) return false;
  const std::size_t ratio = iso.subgroup.size() / fam.subgroup.size();
  for (const auto& tname : iso.taus) {
    StabIrrep ti = find_irrep(iso.subgroup, n, tname);
    auto ei = extend(ti, iso.subgroup);
    bool found = false;
    for (const auto& fname : fam.taus) {
      StabIrrep tf = find_irrep(fam.subgroup, n, fname);
      if (ti.dim() != ratio * tf.dim() || tf.dim() != 1) continue;
      auto ef = extend(tf, fam.subgroup);
      RatFunc ip;
      for (const auto& k : fam.subgroup) {
        RatFunc tr;
        for (std::size_t r = 0; r < ti.dim(); ++r) tr += ei.at(k)(r, r);
        ip += tr * ef.at(k)(0, 0).inv();
      }
      if (!ip.is_zero()) found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

SmallDimReport classify_small_dims(int n, std::size_t d) {
  if (n < 2 || n > 4 || d < 1 || d > 3) throw std::out_of_range("classification implemented for 2 <= n <= 4, d <= 3");
  SmallDimReport rep;
  rep.n = n;
  rep.d = d;
  std::size_t fact = 1;
  for (int i = 2; i <= n; ++i) fact *= static_cast<std::size_t>(i);
  for (const auto& H : subgroup_classes(n)) {
    const std::size_t k = fact / H.size();
    if (d % k != 0) continue;
    std::vector<StabIrrep> taus;
    for (auto& t : stabilizer_irreps(H, n, d / k))
      if (t.dim() == d / k) taus.push_back(t);
    if (taus.empty()) continue;
    std::vector<Character> seen;
    for (const auto& chi : invariant_characters(H, n)) {
      if (orbit_and_stabilizer(chi).subgroup != H) continue;
      bool dup = false;
      for (const auto& g : symmetric_group(n))
        for (const auto& s : seen)
          if (same_values(act(g, chi), s)) dup = true;
      if (dup) continue;
      seen.push_back(chi);
      FamilyEntry e;
      e.stabilizer = subgroup_name(H);
      e.subgroup = H;
      e.index = k;
      e.chi = chi;
      e.parametric = is_parametric(chi);
      for (const auto& t : taus) {
        InducedRep r = induce(chi, t);
        if (r.dim() != d || !is_irreducible(r)) throw std::logic_error("induced representation is not an irreducible of the expected dimension");
        e.taus.push_back(t.name);
      }
      rep.entries.push_back(std::move(e));
    }
  }
  for (auto& e : rep.entries) {
    if (e.parametric) continue;
    for (const auto& f : rep.entries)
      if (f.parametric && recovered_by(e, f, n)) e.limit_of = f.label();
  }
  return rep;
}

}  // namespace mdrep
