#include "mdrep/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <random>
#include <set>

#include "mdrep/ccwg.hpp"

namespace mdrep {

std::vector<ExactMatrix> generator_images(const RepPair& pair, int n) {
  if (n < 2) throw std::invalid_argument("level must be at least 2");
  std::vector<ExactMatrix> g;
  for (int i = 1; i < n; ++i) g.push_back(embed_at(pair.R, i, n));
  for (int i = 1; i < n; ++i) g.push_back(embed_at(pair.S, i, n));
  return g;
}

std::vector<NumMatrix> generator_images(const RepPair& pair, int n, const Assignment& at) {
  std::vector<NumMatrix> out;
  for (const auto& g : generator_images(pair, n)) out.push_back(evaluate(g, at));
  return out;
}

Assignment generic_point(const std::vector<std::string>& vars, const Constraints& cs, std::uint64_t seed) {
  static const std::vector<std::pair<long, long>> pool = {{2, 1},  {3, 1},  {5, 1},  {-2, 1}, {-3, 1}, {1, 2},  {-1, 3},
                                                          {2, 3},  {7, 1},  {-5, 2}, {3, 4},  {-4, 5}, {11, 1}, {5, 7},
                                                          {-7, 3}, {13, 2}, {4, 9},  {-9, 4}, {17, 1}, {6, 11}};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    Assignment at;
    std::vector<Rational> vals;
    for (const auto& v : vars) {
      auto [a, b] = pool[pick(rng)];
      Rational q(a, b);
      q.canonicalize();
      at[v] = Cyclo(q);
      vals.push_back(q);
    }
    bool ok = true;
    for (std::size_t i = 0; i < vals.size() && ok; ++i)
      for (std::size_t j = i + 1; j < vals.size() && ok; ++j)
        if (vals[i] == vals[j] || vals[i] == -vals[j] || vals[i] * vals[j] == 1) ok = false;
    if (!ok) continue;
    try {
      cs.check_point(at);
    } catch (const rejected_point&) {
      continue;
    }
    return at;
  }
  throw std::runtime_error("no admissible sample point found");
}

namespace {

template <class T>
SparseVec<T> vec_of(const Mat<T>& M) {
  SparseVec<T> v;
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero()) v[i * M.cols() + j] = M(i, j);
  return v;
}

template <class T>
Mat<T> mat_of(const SparseVec<T>& v, std::size_t d) {
  Mat<T> M(d, d);
  for (const auto& [k, a] : v) M(k / d, k % d) = a;
  return M;
}

template <class T>
T trace_product(const Mat<T>& A, const Mat<T>& B) {
  T s(0);
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (!A(i, j).is_zero() && !B(j, i).is_zero()) s += A(i, j) * B(j, i);
  return s;
}

template <class T, class P>
std::vector<Mat<T>> commutant_impl(const std::vector<Mat<T>>& gens, P pol) {
  if (gens.empty()) throw std::invalid_argument("commutant of an empty set");
  const std::size_t d = gens[0].rows();
  for (const auto& g : gens)
    if (g.rows() != d || g.cols() != d) throw std::invalid_argument("generators must be square of equal size");
  Echelon<T, P> ech(d * d, pol);
  for (const auto& M : gens) {
    std::vector<std::vector<std::pair<std::size_t, T>>> row(d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b)
        if (!M(a, b).is_zero()) row[a].emplace_back(b, M(a, b));
    for (std::size_t a = 0; a < d; ++a) {
      std::vector<SparseVec<T>> eq(d);
      // (T M)(a,b) = sum_c T(a,c) M(c,b)
      for (std::size_t c = 0; c < d; ++c)
        for (const auto& [b, m] : row[c]) eq[b][a * d + c] += m;
      // (M T)(a,b) = sum_c M(a,c) T(c,b)
      for (const auto& [c, m] : row[a])
        for (std::size_t b = 0; b < d; ++b) eq[b][c * d + b] -= m;
      for (auto& e : eq) {
        for (auto it = e.begin(); it != e.end();) it = it->second.is_zero() ? e.erase(it) : std::next(it);
        if (!e.empty()) ech.add(std::move(e));
      }
    }
  }
  std::vector<Mat<T>> out;
  for (const auto& v : ech.kernel()) {
    Mat<T> B = mat_of(v, d);
    if (gens[0].has_shape()) B.set_shape(gens[0].N(), gens[0].rows_level(), gens[0].cols_level());
    out.push_back(std::move(B));
  }
  return out;
}

}  // namespace

CommutantBasis commutant(const std::vector<ExactMatrix>& gens, const Constraints& cs) {
  return {commutant_impl(gens, SymbolicPivots{&cs})};
}

std::vector<NumMatrix> commutant(const std::vector<NumMatrix>& gens) { return commutant_impl(gens, NumericPivots{}); }

bool commutes_with_all(const ExactMatrix& T, const std::vector<ExactMatrix>& gens) {
  for (const auto& g : gens)
    if (T * g != g * T) return false;
  return true;
}

std::optional<EntryCertificate> entry_certificate(const CommutantBasis& C) {
  if (C.dim() == 0) return std::nullopt;
  const std::size_t d = C.basis[0].rows();
  ExactMatrix T(d, d);
  for (std::size_t k = 0; k < C.dim(); ++k) T = T + RatFunc::var("_u" + std::to_string(k + 1)) * C.basis[k];
  RatFunc alpha = T(0, 0);
  for (std::size_t i = 1; i < d; ++i)
    if (T(i, i) != alpha) return std::nullopt;
  std::optional<std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!T(i, j).is_zero()) {
        if (pos) return std::nullopt;
        pos = std::make_pair(i, j);
      }
  ExactMatrix Q = T * T - T;
  if (Q(0, 0) != alpha * alpha - alpha) return std::nullopt;
  EntryCertificate cert;
  cert.alpha = alpha;
  if (pos) {
    RatFunc gamma = T(pos->first, pos->second);
    if (Q(pos->first, pos->second) != (RatFunc(2) * alpha - RatFunc(1)) * gamma) return std::nullopt;
    cert.row = pos->first;
    cert.col = pos->second;
    cert.gamma = gamma;
  }
  return cert;
}

std::string to_string(IdempotentStatus s) {
  switch (s) {
    case IdempotentStatus::split:
      return "split";
    case IdempotentStatus::indecomposable:
      return "indecomposable";
    default:
      return "undecided";
  }
}

namespace {

// Inverse of a modulo m (coprime).
UPoly upoly_inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = upoly_divmod(a, m).second, s0 = {}, s1 = {Cyclo(1)};
  while (!upoly_trim(r1).empty()) {
    auto [q, r] = upoly_divmod(r0, r1);
    r0 = r1;
    r1 = r;
    UPoly s = upoly_sub(s0, upoly_mul(q, s1));
    s0 = s1;
    s1 = s;
  }
  r0 = upoly_trim(r0);
  if (r0.size() != 1) throw std::logic_error("polynomials are not coprime");
  Cyclo c = r0[0].inv();
  for (auto& x : s0) x *= c;
  return upoly_trim(s0);
}

ExactMatrix eval_poly(const UPoly& p, const ExactMatrix& T) {
  const std::size_t d = T.rows();
  ExactMatrix R(d, d);
  for (std::size_t k = p.size(); k-- > 0;) {
    R = R * T;
    for (std::size_t i = 0; i < d; ++i) R(i, i) += RatFunc(p[k]);
  }
  return R;
}

// Complete family of generalized-eigenspace projectors of T, when its
// characteristic polynomial is constant and splits in the tower.
std::optional<std::vector<ExactMatrix>> eigen_projectors(const ExactMatrix& T) {
  std::vector<RatFunc> cp = charpoly_exact(T);
  UPoly u;
  for (const auto& c : cp) {
    if (!c.is_constant()) return std::nullopt;
    u.push_back(c.constant_value());
  }
  std::vector<std::pair<Cyclo, int>> roots;
  try {
    roots = upoly_roots(u);
  } catch (const unsupported_spectrum&) {
    return std::nullopt;
  }
  if (roots.size() < 2) return std::nullopt;
  std::vector<UPoly> f;
  for (const auto& [lam, m] : roots) {
    UPoly lin = {-lam, Cyclo(1)}, p = {Cyclo(1)};
    for (int k = 0; k < m; ++k) p = upoly_mul(p, lin);
    f.push_back(p);
  }
  std::vector<ExactMatrix> out;
  for (std::size_t j = 0; j < f.size(); ++j) {
    UPoly others = {Cyclo(1)};
    for (std::size_t l = 0; l < f.size(); ++l)
      if (l != j) others = upoly_mul(others, f[l]);
    UPoly e = upoly_divmod(upoly_mul(others, upoly_inverse_mod(others, f[j])), u).second;
    out.push_back(eval_poly(e, T));
  }
  return out;
}

}  // namespace

IdempotentResult find_idempotents(const CommutantBasis& C, const Constraints& cs) {
  IdempotentResult res;
  const std::size_t k = C.dim();
  if (k == 0) throw std::invalid_argument("empty commutant basis");
  ExactMatrix G(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) G(i, j) = G(j, i) = trace_product(C.basis[i], C.basis[j]);
  res.trace_form_rank = rank(G, cs);
  if (res.trace_form_rank <= 1) {
    res.status = IdempotentStatus::indecomposable;
    res.certificate = entry_certificate(C);
    res.note = res.certificate ? "constant diagonal with a single sub-diagonal entry"
                               : "commutant is local: trace form has rank 1";
    return res;
  }
  std::vector<ExactMatrix> candidates = C.basis;
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<int> w(-3, 3);
  for (int t = 0; t < 8; ++t) {
    ExactMatrix T = C.basis[0];
    T = RatFunc(w(rng)) * T;
    for (std::size_t i = 1; i < k; ++i) T = T + RatFunc(w(rng)) * C.basis[i];
    candidates.push_back(T);
  }
  std::optional<std::vector<ExactMatrix>> best;
  for (const auto& T : candidates) {
    auto ps = eigen_projectors(T);
    if (ps && (!best || ps->size() > best->size())) best = ps;
    if (best && best->size() >= res.trace_form_rank) break;
  }
  if (!best) {
    res.note = "no commutant element with a split constant spectrum";
    return res;
  }
  res.status = IdempotentStatus::split;
  res.idempotents = std::move(*best);
  res.note = "generalized eigenspaces of a commutant element";
  return res;
}

std::size_t algebra_dim(const std::vector<ExactMatrix>& gens, std::size_t bound) {
  if (gens.empty()) throw std::invalid_argument("no generators");
  const std::size_t d = gens[0].rows();
  Echelon<RatFunc, GenericPivots> ech(d * d, GenericPivots{});
  std::deque<ExactMatrix> queue;
  ExactMatrix I = ExactMatrix::identity(d);
  ech.add(vec_of(I));
  queue.push_back(I);
  while (!queue.empty() && ech.rank() < d * d) {
    ExactMatrix E = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      ExactMatrix P = E * g;
      if (ech.add(vec_of(P))) queue.push_back(P);
      if (ech.rank() > bound) throw std::out_of_range("algebra closure exceeds the bound");
    }
  }
  return ech.rank();
}

bool is_irreducible(const std::vector<ExactMatrix>& gens) {
  const std::size_t d = gens.at(0).rows();
  return algebra_dim(gens) == d * d;
}

ExactMatrix restrict_to(const ExactMatrix& M, const ExactMatrix& B, const ExactMatrix& coords) { return coords * M * B; }

bool DecompositionReport::complete() const {
  return std::all_of(summands.begin(), summands.end(),
                     [](const Summand& s) { return s.status == IdempotentStatus::indecomposable; });
}

std::vector<std::size_t> DecompositionReport::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : summands) d.push_back(s.dim());
  return d;
}

namespace {

// Column basis of the image of a projector P and coordinates Y with C Y = P, Y C = I.
std::pair<ExactMatrix, ExactMatrix> image_basis(const ExactMatrix& P) {
  const std::size_t d = P.rows();
  Rref<RatFunc> rp = rref(P, GenericPivots{});
  const std::size_t k = rp.rank();
  ExactMatrix C(d, k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < d; ++i) C(i, j) = P(i, rp.pivots[j]);
  Rref<RatFunc> rt = rref(C.transpose(), GenericPivots{});
  ExactMatrix CJ(k, k), PJ(k, d);
  for (std::size_t a = 0; a < k; ++a) {
    std::size_t row = rt.pivots[a];
    for (std::size_t j = 0; j < k; ++j) CJ(a, j) = C(row, j);
    for (std::size_t j = 0; j < d; ++j) PJ(a, j) = P(row, j);
  }
  auto inv = inverse(CJ, GenericPivots{});
  if (!inv) throw std::logic_error("singular coordinate block");
  return {C, *inv * PJ};
}

}  // namespace

DecompositionReport decompose_gens(const std::vector<ExactMatrix>& gens, int n, const Constraints& cs,
                                   const DecomposeOptions& opt) {
  DecompositionReport rep;
  rep.n = n;
  rep.dim = gens.at(0).rows();
  struct Node {
    ExactMatrix B, L;
    std::vector<ExactMatrix> g;
    int depth;
  };
  std::vector<Node> stack;
  stack.push_back({ExactMatrix::identity(rep.dim), ExactMatrix::identity(rep.dim), gens, 0});
  bool first = true;
  std::vector<Summand> done;
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    const std::size_t k = node.B.cols();
    Summand s;
    s.basis = node.B;
    s.coords = node.L;
    s.gens = node.g;
    CommutantBasis C = commutant(node.g, cs);
    if (first) {
      rep.commutant_dim = C.dim();
      first = false;
    }
    IdempotentResult ir;
    if (C.dim() == 1) {
      ir.status = IdempotentStatus::indecomposable;
    } else if (node.depth < opt.max_depth) {
      ir = find_idempotents(C, cs);
    }
    if (ir.status == IdempotentStatus::split) {
      std::vector<Node> kids;
      for (const auto& P : ir.idempotents) {
        auto [Cb, Y] = image_basis(P);
        Node kid;
        kid.B = node.B * Cb;
        kid.L = Y * node.L;
        for (const auto& g : node.g) kid.g.push_back(Y * g * Cb);
        kid.depth = node.depth + 1;
        kids.push_back(std::move(kid));
      }
      for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(std::move(*it));
      continue;
    }
    s.status = ir.status;
    s.certificate = ir.certificate;
    if (opt.check_irreducible) s.irreducible = k == 1 || is_irreducible(node.g);
    if (n >= 2 && node.g.size() >= static_cast<std::size_t>(2 * (n - 1)))
      s.x_charpoly = charpoly_exact(node.g[0] * node.g[n - 1]);
    done.push_back(std::move(s));
  }
  rep.summands = std::move(done);
  return rep;
}

DecompositionReport decompose(const RepPair& pair, int n, const DecomposeOptions& opt) {
  Constraints cs = pair.constraints;
  cs.merge(opt.extra);
  return decompose_gens(generator_images(pair, n), n, cs, opt);
}

std::string to_string(XClass c) {
  switch (c) {
    case XClass::finite:
      return "a";
    case XClass::infinite_semisimple:
      return "b";
    default:
      return "c";
  }
}

Trichotomy x_trichotomy(const RepPair& pair, const Assignment& at, std::size_t bound) {
  NumMatrix X = evaluate(pair.R * pair.S, at);
  Trichotomy t;
  t.bound = bound;
  t.diagonalizable = is_diagonalizable(X);
  if (!t.diagonalizable) {
    t.cls = XClass::non_semisimple;
    return t;
  }
  NumMatrix I = NumMatrix::identity(X.rows()), P = X;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (P == I) {
      t.order = static_cast<long>(k);
      break;
    }
    P = P * X;
  }
  t.cls = t.order ? XClass::finite : XClass::infinite_semisimple;
  return t;
}

namespace {

std::vector<NumMatrix> algebra_basis(const std::vector<NumMatrix>& gens, std::size_t bound) {
  const std::size_t d = gens.at(0).rows();
  Echelon<Cyclo, NumericPivots> ech(d * d, NumericPivots{});
  std::vector<NumMatrix> basis;
  std::deque<NumMatrix> queue;
  NumMatrix I = NumMatrix::identity(d);
  ech.add(vec_of(I));
  basis.push_back(I);
  queue.push_back(I);
  while (!queue.empty()) {
    NumMatrix E = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      NumMatrix P = E * g;
      if (ech.add(vec_of(P))) {
        basis.push_back(P);
        queue.push_back(P);
        if (basis.size() > bound) throw std::out_of_range("algebra closure exceeds the bound");
      }
    }
  }
  return basis;
}

// Radical elements: kernel of the trace form on the algebra basis.
std::vector<NumMatrix> radical_basis(const std::vector<NumMatrix>& A) {
  const std::size_t k = A.size(), d = A[0].rows();
  NumMatrix G(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) G(i, j) = G(j, i) = trace_product(A[i], A[j]);
  std::vector<NumMatrix> J;
  for (const auto& c : nullspace(G)) {
    NumMatrix M(d, d);
    for (std::size_t i = 0; i < k; ++i)
      if (!c[i].is_zero()) M = M + c[i] * A[i];
    J.push_back(M);
  }
  return J;
}

std::size_t ideal_dim(std::vector<NumMatrix> seeds, const std::vector<NumMatrix>& gens) {
  const std::size_t d = gens.at(0).rows();
  Echelon<Cyclo, NumericPivots> ech(d * d, NumericPivots{});
  std::deque<NumMatrix> queue;
  for (auto& s : seeds)
    if (ech.add(vec_of(s))) queue.push_back(s);
  while (!queue.empty()) {
    NumMatrix E = queue.front();
    queue.pop_front();
    for (const auto& g : gens)
      for (NumMatrix P : {NumMatrix(E * g), NumMatrix(g * E)})
        if (ech.add(vec_of(P))) queue.push_back(P);
  }
  return ech.rank();
}

}  // namespace

AlgebraDims algebra_dims(const std::vector<NumMatrix>& gens, std::size_t bound) {
  AlgebraDims r;
  std::vector<NumMatrix> A = algebra_basis(gens, bound);
  const std::size_t k = A.size();
  r.algebra = k;
  std::vector<NumMatrix> J = radical_basis(A);
  r.radical = J.size();
  r.semisimple = k - r.radical;
  // Center of A/J: sum c_i A_i with tr([sum c_i A_i, g] A_j) = 0 for all g, j.
  NumMatrix E(gens.size() * k, k);
  for (std::size_t gi = 0; gi < gens.size(); ++gi)
    for (std::size_t j = 0; j < k; ++j) {
      NumMatrix D = gens[gi] * A[j] - A[j] * gens[gi];
      for (std::size_t i = 0; i < k; ++i) E(gi * k + j, i) = trace_product(A[i], D);
    }
  r.center = (k - rank(E)) - r.radical;
  std::vector<NumMatrix> seeds = J;
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) seeds.push_back(gens[a] * gens[b] - gens[b] * gens[a]);
  r.one_dim_simples = k - ideal_dim(seeds, gens);
  // Matrix sizes of the remaining components, when the square-sum split is unique.
  const std::size_t m = r.center - r.one_dim_simples;
  const std::size_t target = r.semisimple - r.one_dim_simples;
  std::vector<std::vector<std::size_t>> sols;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t, std::size_t)> rec = [&](std::size_t left, std::size_t rem, std::size_t maxd) {
    if (left == 0) {
      if (rem == 0) sols.push_back(cur);
      return;
    }
    for (std::size_t dd = std::min(maxd, rem); dd >= 2; --dd) {
      if (dd * dd > rem) continue;
      cur.push_back(dd);
      rec(left - 1, rem - dd * dd, dd);
      cur.pop_back();
      if (sols.size() > 1) return;
    }
  };
  rec(m, target, 64);
  if (sols.size() == 1) {
    std::vector<std::size_t> dims = sols[0];
    for (std::size_t i = 0; i < r.one_dim_simples; ++i) dims.push_back(1);
    r.simple_dims = dims;
  }
  return r;
}

AlgebraDims algebra_dims(const RepPair& pair, int n, const Assignment& at, std::size_t bound) {
  return algebra_dims(generator_images(pair, n, at), bound);
}

namespace {

// Basis (columns) of a subspace and a coordinate map on it.
struct Subspace {
  std::vector<std::vector<Cyclo>> vecs;
  std::vector<std::size_t> rows;  // rows where the basis block is invertible
  NumMatrix inv;                  // inverse of that block
};

Subspace make_subspace(std::vector<std::vector<Cyclo>> vecs, std::size_t d) {
  Subspace s;
  s.vecs = std::move(vecs);
  const std::size_t m = s.vecs.size();
  if (m == 0) return s;
  NumMatrix Bt(m, d);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) Bt(i, j) = s.vecs[i][j];
  Rref<Cyclo> rt = rref(Bt, NumericPivots{});
  s.rows = rt.pivots;
  NumMatrix blk(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t j = 0; j < m; ++j) blk(a, j) = s.vecs[j][s.rows[a]];
  s.inv = inverse(blk, NumericPivots{}).value();
  return s;
}

Cyclo trace_on(const NumMatrix& g, const Subspace& s) {
  Cyclo t(0);
  const std::size_t m = s.vecs.size();
  for (std::size_t i = 0; i < m; ++i) {
    // coordinate i of g v_i
    for (std::size_t a = 0; a < m; ++a) {
      if (s.inv(i, a).is_zero()) continue;
      Cyclo comp(0);
      std::size_t row = s.rows[a];
      for (std::size_t j = 0; j < g.cols(); ++j)
        if (!g(row, j).is_zero() && !s.vecs[i][j].is_zero()) comp += g(row, j) * s.vecs[i][j];
      t += s.inv(i, a) * comp;
    }
  }
  return t;
}

}  // namespace

std::vector<Layer> radical_layers(const std::vector<NumMatrix>& gens, const std::vector<std::vector<int>>& words) {
  const std::size_t d = gens.at(0).rows();
  std::vector<NumMatrix> A = algebra_basis(gens, 4096);
  std::vector<NumMatrix> J = radical_basis(A);
  std::vector<NumMatrix> wm;
  for (const auto& w : words) {
    NumMatrix M = NumMatrix::identity(d);
    for (int g : w) M = M * gens.at(g);
    wm.push_back(M);
  }
  std::vector<Subspace> chain;
  std::vector<std::vector<Cyclo>> cur;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Cyclo> e(d);
    e[i] = Cyclo(1);
    cur.push_back(e);
  }
  while (!cur.empty()) {
    chain.push_back(make_subspace(cur, d));
    Echelon<Cyclo, NumericPivots> ech(d, NumericPivots{});
    std::vector<std::vector<Cyclo>> next;
    for (const auto& j : J)
      for (const auto& v : cur) {
        std::vector<Cyclo> w(d);
        SparseVec<Cyclo> sv;
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b)
            if (!j(a, b).is_zero() && !v[b].is_zero()) w[a] += j(a, b) * v[b];
          if (!w[a].is_zero()) sv[a] = w[a];
        }
        if (ech.add(sv)) next.push_back(w);
      }
    cur = std::move(next);
  }
  std::vector<Layer> out;
  for (std::size_t k = 0; k < chain.size(); ++k) {
    Layer L;
    std::size_t below = k + 1 < chain.size() ? chain[k + 1].vecs.size() : 0;
    L.dim = chain[k].vecs.size() - below;
    for (const auto& M : wm) {
      Cyclo t = trace_on(M, chain[k]);
      if (k + 1 < chain.size()) t -= trace_on(M, chain[k + 1]);
      L.traces.push_back(t);
    }
    out.push_back(L);
  }
  return out;
}

std::vector<long> sym3_content(const Layer& layer) {
  if (layer.traces.size() < 2) throw std::invalid_argument("need traces of s1 and s1 s2");
  Rational te(static_cast<long>(layer.dim)), ts = layer.traces[0].a(), tc = layer.traces[1].a();
  const long chi[3][3] = {{1, 1, 1}, {2, 0, -1}, {1, -1, 1}};
  std::vector<long> m;
  for (const auto& c : chi) {
    Rational v = (te * c[0] + 3 * ts * c[1] + 2 * tc * c[2]) / 6;
    v.canonicalize();
    if (v.get_den() != 1) throw std::runtime_error("layer is not a symmetric group module");
    m.push_back(v.get_num().get_si());
  }
  return m;
}

std::vector<std::size_t> semisimple_quotient_dims(const RepPair& pair, int n, const Constraints& extra) {
  RepPair work = pair;
  bool wangian = pair.S == pair.R || pair.S == -pair.R;
  if (!wangian) {
    auto k = k_pair(pair);
    if (!k) throw std::invalid_argument("pair is neither glue-patterned nor Wangian");
    work = *k;
  }
  DecomposeOptions opt;
  opt.extra = extra;
  DecompositionReport rep = decompose(work, n, opt);
  std::vector<std::size_t> dims;
  for (const auto& s : rep.summands) {
    if (s.status != IdempotentStatus::indecomposable || !s.irreducible)
      throw std::runtime_error("projected representation did not split into irreducibles");
    dims.push_back(s.dim());
  }
  return dims;
}

}  // namespace mdrep
