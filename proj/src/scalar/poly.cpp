#include <algorithm>
#include <cstring>
#include <sstream>

#include "mdrep/scalar.hpp"

namespace mdrep {

namespace {

const VarList& empty_vars() {
  static const VarList e = std::make_shared<const std::vector<std::string>>();
  return e;
}

// Strict grlex "greater", variable 0 most significant.
bool mono_greater(const Mono& x, const Mono& y) {
  if (x.deg != y.deg) return x.deg > y.deg;
  return std::memcmp(x.e.data(), y.e.data(), kMaxVars) > 0;
}

bool mono_equal(const Mono& x, const Mono& y) {
  return x.deg == y.deg && std::memcmp(x.e.data(), y.e.data(), kMaxVars) == 0;
}

Mono mono_mul(const Mono& x, const Mono& y) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(x.e[i]) + y.e[i];
    if (s > 255) throw std::overflow_error("polynomial degree exceeds 255 in one variable");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  r.deg = static_cast<std::uint16_t>(x.deg + y.deg);
  return r;
}

bool mono_divides(const Mono& d, const Mono& x) {
  for (int i = 0; i < kMaxVars; ++i)
    if (d.e[i] > x.e[i]) return false;
  return true;
}

Mono mono_div(const Mono& x, const Mono& d) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(x.e[i] - d.e[i]);
  r.deg = static_cast<std::uint16_t>(x.deg - d.deg);
  return r;
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

VarList union_vars(const VarList& a, const VarList& b) {
  if (same_vars(a, b)) return a;
  if (a->empty()) return b;
  if (b->empty()) return a;
  std::vector<std::string> u;
  std::set_union(a->begin(), a->end(), b->begin(), b->end(), std::back_inserter(u));
  if (u.size() > static_cast<std::size_t>(kMaxVars))
    throw std::length_error("more than " + std::to_string(kMaxVars) + " parameters in one expression");
  if (u == *a) return a;
  if (u == *b) return b;
  return std::make_shared<const std::vector<std::string>>(std::move(u));
}

void sort_and_combine(std::vector<Poly::Term>& ts) {
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return mono_greater(x.first, y.first); });
  std::vector<Poly::Term> out;
  out.reserve(ts.size());
  for (auto& t : ts) {
    if (!out.empty() && mono_equal(out.back().first, t.first)) {
      out.back().second += t.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!t.second.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  ts.swap(out);
}

}  // namespace

Poly::Poly() : vars_(empty_vars()) {}

Poly::Poly(const Cyclo& c) : vars_(empty_vars()) {
  if (!c.is_zero()) terms_.emplace_back(Mono{}, c);
}

Poly::Poly(VarList vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

Poly Poly::var(const std::string& name) {
  Mono m;
  m.e[0] = 1;
  m.deg = 1;
  return Poly(std::make_shared<const std::vector<std::string>>(std::vector<std::string>{name}), {{m, Cyclo(1)}});
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.deg == 0); }

Cyclo Poly::constant_value() const {
  if (terms_.empty()) return Cyclo();
  if (!is_constant()) throw std::logic_error("constant_value of non-constant polynomial");
  return terms_[0].second;
}

int Poly::degree_in(const std::string& v) const {
  auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
  if (it == vars_->end() || *it != v) return terms_.empty() ? -1 : 0;
  std::size_t k = it - vars_->begin();
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.first.e[k]);
  return d;
}

Poly Poly::over(const VarList& target) const {
  if (same_vars(vars_, target)) return Poly(target, terms_);
  std::vector<int> map(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = std::lower_bound(target->begin(), target->end(), (*vars_)[i]);
    map[i] = static_cast<int>(it - target->begin());
  }
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m;
    m.deg = t.first.deg;
    for (std::size_t i = 0; i < vars_->size(); ++i) m.e[map[i]] = t.first.e[i];
    ts.emplace_back(m, t.second);
  }
  // Relative order of variables is preserved, so grlex order is preserved.
  return Poly(target, std::move(ts));
}

Poly Poly::compacted() const {
  if (vars_->empty()) return *this;
  std::array<bool, kMaxVars> used{};
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if (t.first.e[i]) used[i] = true;
  std::vector<std::string> keep;
  std::vector<int> idx;
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if (used[i]) {
      keep.push_back((*vars_)[i]);
      idx.push_back(static_cast<int>(i));
    }
  if (keep.size() == vars_->size()) return *this;
  VarList nv = keep.empty() ? empty_vars() : std::make_shared<const std::vector<std::string>>(std::move(keep));
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const auto& t : terms_) {
    Mono m;
    m.deg = t.first.deg;
    for (std::size_t j = 0; j < idx.size(); ++j) m.e[j] = t.first.e[idx[j]];
    ts.emplace_back(m, t.second);
  }
  return Poly(nv, std::move(ts));
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly operator+(const Poly& x, const Poly& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  VarList v = union_vars(x.vars_, y.vars_);
  Poly a = x.over(v), b = y.over(v);
  std::vector<Poly::Term> out;
  out.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && mono_greater(a.terms_[i].first, b.terms_[j].first))) {
      out.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || mono_greater(b.terms_[j].first, a.terms_[i].first)) {
      out.push_back(b.terms_[j++]);
    } else {
      Cyclo c = a.terms_[i].second + b.terms_[j].second;
      if (!c.is_zero()) out.emplace_back(a.terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return Poly(v, std::move(out)).compacted();
}

Poly operator-(const Poly& x, const Poly& y) { return x + (-y); }

Poly operator*(const Poly& x, const Cyclo& c) {
  if (c.is_zero() || x.is_zero()) return Poly();
  Poly r = x;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return Poly();
  if (y.is_constant()) return x * y.terms_[0].second;
  if (x.is_constant()) return y * x.terms_[0].second;
  VarList v = union_vars(x.vars_, y.vars_);
  Poly a = x.over(v), b = y.over(v);
  std::vector<Poly::Term> ts;
  ts.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) ts.emplace_back(mono_mul(s.first, t.first), s.second * t.second);
  sort_and_combine(ts);
  return Poly(v, std::move(ts)).compacted();
}

bool operator==(const Poly& x, const Poly& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  if (x.terms_.empty()) return true;
  if (!same_vars(x.vars_, y.vars_)) return false;
  for (std::size_t i = 0; i < x.terms_.size(); ++i) {
    if (!mono_equal(x.terms_[i].first, y.terms_[i].first)) return false;
    if (x.terms_[i].second != y.terms_[i].second) return false;
  }
  return true;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

Poly Poly::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return *this * lc().inv();
}

std::vector<Poly> Poly::coefficients_in(const std::string& v) const {
  auto it = std::lower_bound(vars_->begin(), vars_->end(), v);
  if (it == vars_->end() || *it != v) return {*this};
  std::size_t k = it - vars_->begin();
  int d = degree_in(v);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (const auto& t : terms_) {
    Mono m = t.first;
    unsigned ek = m.e[k];
    m.e[k] = 0;
    m.deg = static_cast<std::uint16_t>(m.deg - ek);
    buckets[ek].emplace_back(m, t.second);
  }
  std::vector<Poly> out;
  out.reserve(d + 1);
  for (auto& b : buckets) {
    sort_and_combine(b);
    out.push_back(Poly(vars_, std::move(b)).compacted());
  }
  return out;
}

Poly Poly::from_coefficients(const std::string& v, const std::vector<Poly>& cs) {
  Poly x = Poly::var(v), r;
  for (std::size_t i = cs.size(); i-- > 0;) r = r * x + cs[i];
  return r;
}

Cyclo Poly::evaluate(const Assignment& at) const {
  std::vector<const Cyclo*> vals(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = at.find((*vars_)[i]);
    if (it == at.end()) throw std::invalid_argument("no value for parameter " + (*vars_)[i]);
    vals[i] = &it->second;
  }
  Cyclo acc;
  for (const auto& t : terms_) {
    Cyclo m = t.second;
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if (t.first.e[i]) m *= vals[i]->pow(t.first.e[i]);
    acc += m;
  }
  return acc;
}

RatFunc Poly::substitute(const std::map<std::string, RatFunc>& sub) const {
  std::vector<RatFunc> vals(vars_->size());
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    auto it = sub.find((*vars_)[i]);
    vals[i] = it == sub.end() ? RatFunc::var((*vars_)[i]) : it->second;
  }
  RatFunc acc;
  for (const auto& t : terms_) {
    RatFunc m(t.second);
    for (std::size_t i = 0; i < vars_->size(); ++i)
      if (t.first.e[i]) m *= vals[i].pow(t.first.e[i]);
    acc += m;
  }
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool compound = !c.is_rational();
    bool neg = c.is_rational() && sgn(c.a()) < 0;
    if (!first) os << (neg ? "-" : "+");
    else if (neg) os << "-";
    first = false;
    Cyclo mag = neg ? -c : c;
    std::string ms = mag.str();
    if (compound) ms = "(" + cs + ")";
    bool unit = mag.is_one();
    if (!unit || m.deg == 0) os << ms;
    bool need_star = !unit;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      if (!m.e[i]) continue;
      if (need_star) os << "*";
      os << (*vars_)[i];
      if (m.e[i] > 1) os << "^" << int(m.e[i]);
      need_star = true;
    }
  }
  return os.str();
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw unsatisfiable_error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.is_constant()) return a * b.constant_value().inv();
  if (a.total_degree() < b.total_degree()) return std::nullopt;
  for (const auto& v : b.vars())
    if (a.degree_in(v) < b.degree_in(v)) return std::nullopt;
  VarList vars = std::make_shared<const std::vector<std::string>>(
      [&] {
        std::vector<std::string> u;
        std::set_union(a.vars().begin(), a.vars().end(), b.vars().begin(), b.vars().end(), std::back_inserter(u));
        return u;
      }());
  Poly r = a.over(vars), d = b.over(vars);
  const Mono& lm = d.terms().front().first;
  Cyclo lcinv = d.lc().inv();
  std::vector<Poly::Term> q;
  while (!r.is_zero()) {
    r = r.over(vars);
    const auto& lt = r.terms().front();
    if (!mono_divides(lm, lt.first)) return std::nullopt;
    Poly::Term t{mono_div(lt.first, lm), lt.second * lcinv};
    q.push_back(t);
    r = r - Poly(vars, {t}) * d;
  }
  return Poly(vars, std::move(q)).compacted();
}

namespace {

Poly content_in(const Poly& p, const std::string& v) {
  auto cs = p.coefficients_in(v);
  Poly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return Poly(1);
  }
  return g;
}

// Pseudo-remainder of a by b as polynomials in v.
Poly prem(Poly a, const Poly& b, const std::string& v) {
  int db = b.degree_in(v);
  auto bc = b.coefficients_in(v);
  const Poly& lb = bc.back();
  Poly x = Poly::var(v);
  int da;
  while (!a.is_zero() && (da = a.degree_in(v)) >= db) {
    auto ac = a.coefficients_in(v);
    a = a * lb - ac.back() * x.pow(static_cast<unsigned>(da - db)) * b;
  }
  return a;
}

Poly primitive_part(const Poly& p, const std::string& v) {
  Poly c = content_in(p, v);
  if (c.is_constant()) return p.monic();
  return divide_exact(p, c).value().monic();
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.size() >= b.size()) {
    if (divide_exact(a, b)) return b.monic();
  } else if (divide_exact(b, a)) {
    return a.monic();
  }
  // Variables present in only one argument divide out through its content.
  for (const auto& v : a.vars())
    if (b.degree_in(v) <= 0) return gcd(content_in(a, v), b);
  for (const auto& v : b.vars())
    if (a.degree_in(v) <= 0) return gcd(a, content_in(b, v));
  // Main variable: the one with least combined degree.
  std::string x;
  int best = 1 << 30;
  for (const auto& v : a.vars()) {
    int d = a.degree_in(v) + b.degree_in(v);
    if (d < best) {
      best = d;
      x = v;
    }
  }
  Poly ca = content_in(a, x), cb = content_in(b, x);
  Poly g = gcd(ca, cb);
  Poly p = ca.is_constant() ? a : divide_exact(a, ca).value();
  Poly q = cb.is_constant() ? b : divide_exact(b, cb).value();
  if (p.degree_in(x) < q.degree_in(x)) std::swap(p, q);
  while (true) {
    Poly r = prem(p, q, x);
    if (r.is_zero()) break;
    if (r.degree_in(x) <= 0) {
      q = Poly(1);
      break;
    }
    p = q;
    q = primitive_part(r, x);
  }
  return (g * primitive_part(q, x)).monic();
}

}  // namespace mdrep
