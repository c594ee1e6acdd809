#include "mdrep/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mdrep/presentations.hpp"

namespace mdrep {

namespace {

using Rows = std::vector<std::vector<RatFunc>>;

RatFunc V(const std::string& s) { return RatFunc::var(s); }

ExactMatrix M4(const Rows& rows) { return from_rows(2, rows); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t"), e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

// Accepts only the declared keys.
class Args {
 public:
  Args(const Params& p, std::vector<std::string> allowed) : p_(p) {
    for (const auto& [k, v] : p)
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw std::invalid_argument("unexpected parameter '" + k + "'");
  }
  bool has(const std::string& k) const { return p_.count(k) > 0; }
  RatFunc get(const std::string& k) const {
    auto it = p_.find(k);
    return it == p_.end() ? V(k) : it->second;
  }
  int sign(const std::string& k) const {
    auto it = p_.find(k);
    if (it == p_.end()) throw std::invalid_argument("sign argument '" + k + "' must be given explicitly (+1 or -1)");
    const RatFunc& v = it->second;
    if (v == RatFunc(1)) return 1;
    if (v == RatFunc(-1)) return -1;
    throw std::invalid_argument("sign argument '" + k + "' must be +1 or -1, got " + v.str());
  }

 private:
  const Params& p_;
};

void require_nonzero(Constraints& cs, const RatFunc& e, const std::string& what) {
  if (e.is_zero()) throw constraint_violation("side condition " + what + " != 0 violated");
  if (!e.num().is_constant()) cs.add(e.num());
  if (!e.den().is_constant()) cs.add(e.den());
}

void add_denominators(Constraints& cs, const ExactMatrix& M) {
  for (const auto& x : M.data())
    if (!x.den().is_constant()) cs.add(x.den());
}

std::vector<std::string> collect_params(const RepPair& p) {
  std::set<std::string> s;
  for (auto& v : variables(p.R)) s.insert(v);
  for (auto& v : variables(p.S)) s.insert(v);
  return {s.begin(), s.end()};
}

RepPair finish(ExactMatrix R, ExactMatrix S, Constraints cs, const std::string& label) {
  RepPair p{std::move(R), std::move(S), {}, std::move(cs), label};
  add_denominators(p.constraints, p.R);
  add_denominators(p.constraints, p.S);
  p.params = collect_params(p);
  for (const auto& rep : verify(p, RelationSet::MixedDoubles, 3))
    if (!rep.is_zero)
      throw constraint_violation(label + ": relation " + rep.relation + " fails at (" + word_str(rep.witness->row) + "," +
                                 word_str(rep.witness->col) + ") with residual " + rep.witness->value.str());
  return p;
}

ExactMatrix trivial4() { return identity_words(2, 2); }

ExactMatrix fglue(const RatFunc& p, const RatFunc& q) {
  return M4({{1, -p, p, p * q}, {0, 0, 1, q}, {0, 1, 0, -q}, {0, 0, 0, 1}});
}

ExactMatrix aglue(const RatFunc& p) { return M4({{1, 0, 0, p}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}); }

ExactMatrix slash(const RatFunc& q, int sign) {
  return M4({{1, 0, 0, 0}, {0, 0, q, 0}, {0, q.inv(), 0, 0}, {0, 0, 0, sign}});
}

ExactMatrix antislash() { return M4({{0, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 0}}); }

ExactMatrix flip4() { return slash(1, 1); }

ExactMatrix case6a(const RatFunc& z, const RatFunc& x, int eps) {
  RatFunc w = RatFunc(-eps) - z;
  return M4({{z, -x, x, w}, {x, w, z, -x}, {-x, z, w, x}, {w, x, -x, z}});
}

ExactMatrix case6b(const RatFunc& r, const RatFunc& y, int eps) {
  RatFunc u = RatFunc(eps) - y;
  return M4({{r, u, y, -r}, {y, -r, r, u}, {u, r, -r, y}, {-r, y, u, r}});
}

ExactMatrix case6c(const RatFunc& r, const RatFunc& y, int eps) {
  RatFunc w = -r - RatFunc(eps), v = r + RatFunc(eps);
  return M4({{-r, y, y, w}, {-y, v, r, -y}, {-y, r, v, -y}, {w, y, y, -r}});
}

void conic_check(const RatFunc& value, const std::string& what) {
  if (!value.is_zero()) throw constraint_violation("conic constraint " + what + " not satisfied (residual " + value.str() + ")");
}

RepPair swap_pair(RepPair p, const std::string& label) {
  std::swap(p.R, p.S);
  p.label = label;
  for (const auto& rep : verify(p, RelationSet::MixedDoubles, 3))
    if (!rep.is_zero) throw constraint_violation(label + ": relation " + rep.relation + " fails after swap");
  return p;
}

}  // namespace

Params parse_params(const std::string& text) {
  Params out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      out[item] = V(item);
      continue;
    }
    std::string k = trim(item.substr(0, eq));
    if (k.empty()) throw std::invalid_argument("empty parameter name in '" + item + "'");
    out[k] = parse_ratfunc(item.substr(eq + 1));
  }
  return out;
}

std::vector<FamilyInfo> catalog_list() {
  return {
      {"trivial", "involutive-braid", {}, {}, "identity"},
      {"f-glue", "involutive-braid", {"p", "q"}, {}, "first row (1,-p,p,pq)"},
      {"a-glue", "involutive-braid", {"p"}, {}, "a-type with glue p at (11,22)"},
      {"fa-slash", "involutive-braid", {"q"}, {"sign"}, "slash q, 1/q with corner sign"},
      {"anti-slash", "involutive-braid", {}, {}, "permutation 11<->22"},
      {"manji", "manji", {"a", "b", "c", "d"}, {"sign"}, "aP + dA + cN + bN'"},
      {"case1", "md-case", {}, {"sign"}, "R = I, S = sign I"},
      {"case2", "md-case", {"p", "q"}, {}, "R a-glue(p), S a-glue(q), p != 0"},
      {"case3-wangian", "md-case", {"p", "q"}, {"sign"}, "R f-glue(p,q), S = sign R, q != 0, p != -q"},
      {"case3", "md-case", {"q", "s"}, {}, "R f-glue(-q,q), S f-glue(-s,s), q != 0"},
      {"case4", "md-case", {"p", "s"}, {"sign"}, "R a-slash(p), S slash(s,sign), p^2 != 1"},
      {"case4-pm1", "md-case", {"s"}, {"p", "sign"}, "R a-slash(p), p = +-1, S with glue s and middle sign"},
      {"case5", "md-case", {"p", "s"}, {"sign"}, "R f-slash(p), S slash(s,sign), p != 1"},
      {"case5-m1", "md-case", {"s"}, {"sign"}, "R f-slash(-1), S antidiagonal with corners s, 1/s"},
      {"case6a", "md-case", {"t", "z", "x"}, {"eps"}, "R anti-slash, x^2 = z^2 + eps z (slope t or explicit point)"},
      {"case6b", "md-case", {"t", "r", "y"}, {"eps"}, "R anti-slash, 2r^2 - 2y^2 + 2 eps y - 1 = 0"},
      {"case6c", "md-case", {"t", "r", "y"}, {"eps"}, "R anti-slash, r^2 - y^2 + eps r = 0"},
      {"case7-flip", "md-case", {}, {}, "R = S = flip"},
      {"case7-antislash", "md-case", {}, {}, "R flip, S anti-slash (swap of case6a at z=1, x=0, eps=-1)"},
      {"case7-slash", "md-case", {"p"}, {"sign"}, "R flip, S slash(p,sign) (swap of case5 / case4)"},
      {"case7-fglue", "md-case", {"q"}, {}, "R flip, S f-glue(-q,q) (swap of case3 at s=0)"},
  };
}

std::vector<std::string> md_case_ids() {
  std::vector<std::string> ids;
  for (const auto& f : catalog_list())
    if (f.kind == "md-case") ids.push_back(f.id);
  return ids;
}

ExactMatrix make_involutive_braid(const std::string& family, const Params& params) {
  ExactMatrix R;
  if (family == "trivial") {
    Args a(params, {});
    R = trivial4();
  } else if (family == "f-glue") {
    Args a(params, {"p", "q"});
    R = fglue(a.get("p"), a.get("q"));
  } else if (family == "a-glue") {
    Args a(params, {"p"});
    R = aglue(a.get("p"));
  } else if (family == "fa-slash") {
    Args a(params, {"q", "sign"});
    if (a.get("q").is_zero()) throw constraint_violation("fa-slash needs q != 0");
    R = slash(a.get("q"), a.sign("sign"));
  } else if (family == "anti-slash") {
    Args a(params, {});
    R = antislash();
  } else {
    throw std::invalid_argument("unknown involutive braid family '" + family + "'");
  }
  RepPair check{R, R, {}, {}, family};
  if (!all_zero(verify(check, RelationSet::Braid, 3))) throw std::logic_error(family + ": Yang-Baxter residual nonzero");
  if (!(R * R == identity_words(2, 2))) throw std::logic_error(family + ": not involutive");
  return R;
}

ExactMatrix manji_basis(const std::string& kind, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("manji sign must be +1 or -1");
  RatFunc e(sign);
  if (kind == "P") return M4({{1, 0, 0, 0}, {0, 0, e, 0}, {0, e, 0, 0}, {0, 0, 0, 1}});
  if (kind == "A") return M4({{0, 0, 0, e}, {0, 1, 0, 0}, {0, 0, 1, 0}, {e, 0, 0, 0}});
  if (kind == "N") return M4({{0, 0, 1, 0}, {e, 0, 0, 0}, {0, 0, 0, e}, {0, 1, 0, 0}});
  if (kind == "N'") return M4({{0, 1, 0, 0}, {0, 0, 0, e}, {e, 0, 0, 0}, {0, 0, 1, 0}});
  throw std::invalid_argument("unknown manji basis '" + kind + "' (P, A, N, N')");
}

ExactMatrix make_manji(int sign, const RatFunc& a, const RatFunc& b, const RatFunc& c, const RatFunc& d) {
  return a * manji_basis("P", sign) + d * manji_basis("A", sign) + c * manji_basis("N", sign) + b * manji_basis("N'", sign);
}

RepPair make_md_pair(const std::string& id, const Params& params) {
  Constraints cs;
  if (id == "case1") {
    Args a(params, {"sign"});
    return finish(trivial4(), RatFunc(a.sign("sign")) * trivial4(), cs, id);
  }
  if (id == "case2") {
    Args a(params, {"p", "q"});
    require_nonzero(cs, a.get("p"), "p");
    return finish(aglue(a.get("p")), aglue(a.get("q")), cs, id);
  }
  if (id == "case3-wangian") {
    Args a(params, {"p", "q", "sign"});
    RatFunc p = a.get("p"), q = a.get("q");
    require_nonzero(cs, q, "q");
    require_nonzero(cs, p + q, "p+q");
    ExactMatrix R = fglue(p, q);
    return finish(R, RatFunc(a.sign("sign")) * R, cs, id);
  }
  if (id == "case3") {
    Args a(params, {"q", "s"});
    RatFunc q = a.get("q"), s = a.get("s");
    require_nonzero(cs, q, "q");
    return finish(fglue(-q, q), fglue(-s, s), cs, id);
  }
  if (id == "case4") {
    Args a(params, {"p", "s", "sign"});
    RatFunc p = a.get("p"), s = a.get("s");
    require_nonzero(cs, p, "p");
    require_nonzero(cs, p - RatFunc(1), "p-1");
    require_nonzero(cs, p + RatFunc(1), "p+1");
    require_nonzero(cs, s, "s");
    return finish(slash(p, -1), slash(s, a.sign("sign")), cs, id);
  }
  if (id == "case4-pm1") {
    Args a(params, {"p", "s", "sign"});
    int p = a.sign("p"), m = a.sign("sign");
    RatFunc s = a.get("s");
    ExactMatrix S = M4({{1, 0, 0, s}, {0, 0, m, 0}, {0, m, 0, 0}, {0, 0, 0, -1}});
    return finish(slash(p, -1), S, cs, id);
  }
  if (id == "case5") {
    Args a(params, {"p", "s", "sign"});
    RatFunc p = a.get("p"), s = a.get("s");
    require_nonzero(cs, p, "p");
    require_nonzero(cs, p - RatFunc(1), "p-1");
    require_nonzero(cs, s, "s");
    return finish(slash(p, 1), slash(s, a.sign("sign")), cs, id);
  }
  if (id == "case5-m1") {
    Args a(params, {"s", "sign"});
    RatFunc s = a.get("s");
    int m = a.sign("sign");
    require_nonzero(cs, s, "s");
    ExactMatrix S = M4({{0, 0, 0, s}, {0, m, 0, 0}, {0, 0, m, 0}, {s.inv(), 0, 0, 0}});
    return finish(slash(-1, 1), S, cs, id);
  }
  if (id == "case6a" || id == "case6b" || id == "case6c") {
    Args a(params, {"eps", "t", "z", "x", "r", "y"});
    int eps = a.sign("eps");
    RatFunc e(eps), t = a.get("t");
    RatFunc d = t * t - RatFunc(1);
    if (id == "case6a") {
      RatFunc z, x;
      if (a.has("z") || a.has("x")) {
        z = a.get("z");
        x = a.get("x");
        conic_check(x * x - z * z - e * z, "x^2 = z^2 + eps z");
      } else {
        require_nonzero(cs, t - RatFunc(1), "t-1");
        require_nonzero(cs, t + RatFunc(1), "t+1");
        z = e / d;
        x = e * t / d;
      }
      return finish(antislash(), case6a(z, x, eps), cs, id);
    }
    if (id == "case6b") {
      RatFunc r, y;
      if (a.has("r") || a.has("y")) {
        r = a.get("r");
        y = a.get("y");
        conic_check(RatFunc(2) * r * r - RatFunc(2) * y * y + RatFunc(2) * e * y - RatFunc(1), "2r^2 - 2y^2 + 2 eps y - 1 = 0");
      } else {
        require_nonzero(cs, t - RatFunc(1), "t-1");
        require_nonzero(cs, t + RatFunc(1), "t+1");
        y = e / RatFunc(2) - t / d;
        r = RatFunc(Cyclo(Rational(1, 2))) - t * t / d;
      }
      return finish(antislash(), case6b(r, y, eps), cs, id);
    }
    RatFunc r, y;
    if (a.has("r") || a.has("y")) {
      r = a.get("r");
      y = a.get("y");
      conic_check(r * r - y * y + e * r, "r^2 - y^2 + eps r = 0");
    } else {
      require_nonzero(cs, t - RatFunc(1), "t-1");
      require_nonzero(cs, t + RatFunc(1), "t+1");
      r = e / d;
      y = e * t / d;
    }
    return finish(antislash(), case6c(r, y, eps), cs, id);
  }
  if (id == "case7-flip") {
    Args a(params, {});
    return finish(flip4(), flip4(), cs, id);
  }
  if (id == "case7-antislash") {
    Args a(params, {});
    return swap_pair(make_md_pair("case6a", {{"eps", RatFunc(-1)}, {"z", RatFunc(1)}, {"x", RatFunc(0)}}), id);
  }
  if (id == "case7-slash") {
    Args a(params, {"p", "sign"});
    int m = a.sign("sign");
    Params base{{"p", a.get("p")}, {"s", RatFunc(1)}, {"sign", RatFunc(1)}};
    return swap_pair(make_md_pair(m == 1 ? "case5" : "case4", base), id);
  }
  if (id == "case7-fglue") {
    Args a(params, {"q"});
    return swap_pair(make_md_pair("case3", {{"q", a.get("q")}, {"s", RatFunc(0)}}), id);
  }
  throw std::invalid_argument("unknown classification case '" + id + "'");
}

// ---------------------------------------------------------------------------

namespace {

ExactMatrix with_shape(ExactMatrix M, const ExactMatrix& like) {
  M.set_shape(like.N(), like.rows_level(), like.cols_level());
  return M;
}

}  // namespace

ExactMatrix inverse_exact(const ExactMatrix& M, Constraints* cs) {
  if (!M.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  std::optional<ExactMatrix> inv;
  if (M.rows() == 2) {
    RatFunc det = M(0, 0) * M(1, 1) - M(0, 1) * M(1, 0);
    if (det.is_zero()) throw std::invalid_argument("singular transform matrix");
    if (cs && !det.num().is_constant()) cs->add(det.num());
    RatFunc di = det.inv();
    ExactMatrix r(2, 2);
    r(0, 0) = M(1, 1) * di;
    r(0, 1) = -M(0, 1) * di;
    r(1, 0) = -M(1, 0) * di;
    r(1, 1) = M(0, 0) * di;
    inv = r;
  } else {
    inv = inverse(M, GenericPivots{});
    if (!inv) throw std::invalid_argument("singular transform matrix");
  }
  return M.has_shape() ? with_shape(*inv, M) : *inv;
}

RepPair apply_transform(const Transform& t, const RepPair& pair) {
  RepPair out = pair;
  switch (t.kind) {
    case TransformKind::local_conj: {
      if (t.matrix.rows() != 2 || t.matrix.cols() != 2) throw std::invalid_argument("local_conj needs a 2x2 matrix");
      ExactMatrix A = t.matrix;
      if (!A.has_shape()) A.set_shape(2, 1, 1);
      ExactMatrix Ai = inverse_exact(A, &out.constraints);
      ExactMatrix AA = kron(A, A), AAi = kron(Ai, Ai);
      out.R = AA * pair.R * AAi;
      out.S = AA * pair.S * AAi;
      break;
    }
    case TransformKind::nonlocal_conj: {
      if (t.matrix.rows() != 4 || t.matrix.cols() != 4) throw std::invalid_argument("nonlocal_conj needs a 4x4 matrix");
      ExactMatrix U = t.matrix;
      if (!U.has_shape()) U.set_shape(2, 2, 2);
      ExactMatrix Ui = inverse_exact(U, &out.constraints);
      out.R = U * pair.R * Ui;
      out.S = U * pair.S * Ui;
      break;
    }
    case TransformKind::transpose:
      out.R = pair.R.transpose();
      out.S = pair.S.transpose();
      break;
    case TransformKind::global_sign:
      out.R = -pair.R;
      out.S = -pair.S;
      break;
    case TransformKind::swap_rs:
      std::swap(out.R, out.S);
      break;
    case TransformKind::antidiagonal: {
      ExactMatrix J = kron(flip_2x2(), flip_2x2());
      out.R = J * pair.R.transpose() * J;
      out.S = J * pair.S.transpose() * J;
      break;
    }
  }
  return out;
}

Transform inverse(const Transform& t) {
  switch (t.kind) {
    case TransformKind::local_conj:
    case TransformKind::nonlocal_conj:
      return {t.kind, inverse_exact(t.matrix)};
    default:
      return t;
  }
}

DsResult check_ds_equivalence(const ExactMatrix& A0, const RepPair& pair) {
  ExactMatrix A = A0;
  if (!A.has_shape()) A.set_shape(2, 1, 1);
  ExactMatrix Ai = inverse_exact(A);
  ExactMatrix AA = kron(A, A);
  DsResult r;
  r.commutes = AA * pair.R == pair.R * AA && AA * pair.S == pair.S * AA;
  ExactMatrix I = identity_words(2, 1);
  ExactMatrix L = kron(A, I), Li = kron(Ai, I);
  r.derived = pair;
  r.derived.R = L * pair.R * Li;
  r.derived.S = L * pair.S * Li;
  r.derived.label = pair.label + "+DS";
  return r;
}

namespace {

const std::vector<std::string> kAvars = {"a11", "a12", "a21", "a22"};

using AKey = std::array<int, 4>;

// Split p into coefficients (polynomials in the remaining variables) of monomials in a11..a22.
std::map<AKey, Poly> split_a(const Poly& p) {
  std::map<AKey, Poly> out;
  const auto& vars = p.vars();
  std::vector<int> slot(vars.size(), -1);
  for (std::size_t k = 0; k < vars.size(); ++k)
    for (int j = 0; j < 4; ++j)
      if (vars[k] == kAvars[j]) slot[k] = j;
  VarList vl = std::make_shared<const std::vector<std::string>>(vars);
  for (const auto& [m, c] : p.terms()) {
    AKey key{0, 0, 0, 0};
    Mono rest = m;
    for (std::size_t k = 0; k < vars.size(); ++k)
      if (slot[k] >= 0) {
        key[slot[k]] = m.e[k];
        rest.deg = static_cast<std::uint16_t>(rest.deg - m.e[k]);
        rest.e[k] = 0;
      }
    out[key] = out[key] + Poly(vl, {{rest, c}});
  }
  return out;
}

std::vector<AKey> monomials_of_degree(int d) {
  std::vector<AKey> out;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j)
      for (int k = 0; i + j + k <= d; ++k) out.push_back({i, j, k, d - i - j - k});
  return out;
}

// Is target in the ideal generated by homogeneous quadrics eqs, with linear cofactors?
bool in_ideal_linear_cofactors(const std::vector<Poly>& eqs, const Poly& target) {
  auto monos = monomials_of_degree(3);
  std::map<AKey, std::size_t> row;
  for (std::size_t i = 0; i < monos.size(); ++i) row[monos[i]] = i;
  std::size_t ncols = eqs.size() * 4 + 1;
  ExactMatrix A(monos.size(), ncols);
  for (std::size_t e = 0; e < eqs.size(); ++e)
    for (const auto& [key, coef] : split_a(eqs[e]))
      for (int k = 0; k < 4; ++k) {
        AKey m = key;
        ++m[k];
        A(row.at(m), e * 4 + k) = A(row.at(m), e * 4 + k) + RatFunc(coef);
      }
  for (const auto& [key, coef] : split_a(target)) A(row.at(key), ncols - 1) = RatFunc(coef);
  Rref<RatFunc> R = rref(A, GenericPivots{});
  return std::find(R.pivots.begin(), R.pivots.end(), ncols - 1) == R.pivots.end();
}

}  // namespace

DsCommutantReport ds_commutant_symmetric_family(const RepPair& pair) {
  for (const auto& v : pair.params)
    if (std::find(kAvars.begin(), kAvars.end(), v) != kAvars.end())
      throw std::invalid_argument("parameter name clashes with the DS ansatz variables a11..a22");
  ExactMatrix A = from_rows(2, Rows{{V("a11"), V("a12")}, {V("a21"), V("a22")}});
  ExactMatrix AA = kron(A, A);
  std::vector<Poly> eqs;
  for (const ExactMatrix* M : {&pair.R, &pair.S}) {
    ExactMatrix E = AA * *M - *M * AA;
    for (const auto& x : E.data()) {
      if (x.is_zero()) continue;
      Poly n = x.num().monic();
      if (std::find(eqs.begin(), eqs.end(), n) == eqs.end()) eqs.push_back(n);
    }
  }
  DsCommutantReport rep;
  rep.equations = eqs.size();
  std::map<std::string, RatFunc> sym{{"a11", V("ds_x")}, {"a22", V("ds_x")}, {"a12", V("ds_y")}, {"a21", V("ds_y")}};
  rep.family_commutes = true;
  for (const auto& e : eqs)
    if (!e.substitute(sym).is_zero()) rep.family_commutes = false;
  Poly a11 = Poly::var("a11"), a12 = Poly::var("a12"), a21 = Poly::var("a21"), a22 = Poly::var("a22");
  Poly det = a11 * a22 - a12 * a21;
  rep.diagonal_forced = in_ideal_linear_cofactors(eqs, (a11 - a22) * det);
  rep.offdiag_forced = in_ideal_linear_cofactors(eqs, (a12 - a21) * det);
  return rep;
}

WConjugationReport w_conjugation_check(const std::optional<RatFunc>& lam) {
  RatFunc l = lam ? *lam : V("lambda");
  if (l.is_zero()) throw std::invalid_argument("lambda must be nonzero");
  ExactMatrix H1 = from_rows(2, Rows{{1, 1}, {1, -1}}), H2 = from_rows(2, Rows{{1, -1}, {1, 1}});
  ExactMatrix W = kron(H1, H2), Wi = inverse_exact(W);
  RatFunc z = -(l * l - RatFunc(2) * l + RatFunc(1)) / (RatFunc(4) * l);
  RatFunc x = (l * l - RatFunc(1)) / (RatFunc(4) * l);
  ExactMatrix Rp = flip4(), Sp = slash(l, 1);
  ExactMatrix R = antislash(), S = case6a(z, x, -1);
  WConjugationReport rep;
  rep.R_conjugate = W * Rp * Wi == R;
  rep.S_conjugate = W * Sp * Wi == S;
  rep.conic = (x * x - z * z + z).is_zero();
  return rep;
}

std::vector<std::string> known_coincidences(const ExactMatrix& M) {
  std::vector<std::string> out;
  if (M.rows() != 4 || M.cols() != 4) return out;
  auto same = [&](const ExactMatrix& X) {
    for (std::size_t i = 0; i < 16; ++i)
      if (M.data()[i] != X.data()[i]) return false;
    return true;
  };
  if (same(trivial4())) out.push_back("trivial");
  if (same(antislash())) out.push_back("anti-slash");
  RatFunc p = -M(0, 1), q = M(1, 3);
  if (same(fglue(p, q))) out.push_back("f-glue(p=" + p.str() + ",q=" + q.str() + ")");
  if (same(aglue(M(0, 3)))) out.push_back("a-glue(p=" + M(0, 3).str() + ")");
  if (!M(1, 2).is_zero())
    for (int s : {1, -1})
      if (same(slash(M(1, 2), s))) out.push_back("fa-slash(q=" + M(1, 2).str() + ",sign=" + std::to_string(s) + ")");
  if (same(flip4())) out.insert(out.begin(), "flip");
  return out;
}

ExactMatrix flip_2x2() { return from_rows(2, Rows{{0, 1}, {1, 0}}); }

ExactMatrix nonlocal_v() { return M4({{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}); }

ExactMatrix R_f(const RatFunc& p) { return slash(p, 1); }

ExactMatrix R_a(const RatFunc& p) { return slash(p, -1); }

}  // namespace mdrep
