#include "mdrep/json_io.hpp"

namespace mdrep {

json to_json(const Cyclo& c) {
  if (c.is_rational()) return json{{"q", c.a().get_str()}};
  return json{{"cyc", {{"m", c.order()}, {"coeffs", {c.a().get_str(), c.b().get_str()}}}}};
}

Cyclo cyclo_from_json(const json& j) {
  if (j.is_number_integer()) return Cyclo(j.get<long>());
  if (j.is_string()) return Cyclo::parse(j.get<std::string>());
  if (j.contains("q")) return Cyclo::parse(j.at("q").get<std::string>());
  const json& c = j.at("cyc");
  int m = c.at("m").get<int>();
  const json& cs = c.at("coeffs");
  // coefficients of 1, z, z^2, ... reduced through the tower
  Cyclo r, z = Cyclo::zeta(m), pw(1);
  for (const auto& x : cs) {
    r += pw * Cyclo::parse(x.get<std::string>());
    pw *= z;
  }
  return r;
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& [m, c] : p.terms()) {
    json mono = json::object();
    for (std::size_t k = 0; k < p.vars().size(); ++k)
      if (m.e[k]) mono[p.vars()[k]] = m.e[k];
    a.push_back(json::array({to_json(c), mono}));
  }
  return a;
}

namespace {

Poly poly_from_json(const json& a) {
  Poly p;
  for (const auto& t : a) {
    Poly term(cyclo_from_json(t.at(0)));
    for (const auto& [v, e] : t.at(1).items()) term = term * Poly::var(v).pow(e.get<unsigned>());
    p = p + term;
  }
  return p;
}

}  // namespace

json to_json(const RatFunc& f) { return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

RatFunc ratfunc_from_json(const json& j) {
  if (j.is_string()) return parse_ratfunc(j.get<std::string>());
  if (j.is_number_integer()) return RatFunc(j.get<long>());
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const ExactMatrix& M) {
  if (!M.has_shape()) {
    json rows = json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(to_json(M(i, j)));
      rows.push_back(row);
    }
    return json{{"rows", rows}};
  }
  json entries = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j)
      if (!M(i, j).is_zero())
        entries.push_back(json::array({word_str(word_of(i, M.N(), M.rows_level())),
                                       word_str(word_of(j, M.N(), M.cols_level())), to_json(M(i, j))}));
  return json{{"N", M.N()}, {"rows_level", M.rows_level()}, {"cols_level", M.cols_level()}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
  if (j.contains("rows")) {
    const auto& rows = j.at("rows");
    ExactMatrix M(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != M.cols()) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t c = 0; c < M.cols(); ++c) M(r, c) = ratfunc_from_json(rows[r][c]);
    }
    return M;
  }
  int N = j.at("N").get<int>();
  ExactMatrix M = ExactMatrix::words(N, j.at("rows_level").get<int>(), j.at("cols_level").get<int>());
  for (const auto& e : j.at("entries")) {
    Word w = parse_word(e.at(0).get<std::string>()), v = parse_word(e.at(1).get<std::string>());
    if (static_cast<int>(w.size()) != M.rows_level() || static_cast<int>(v.size()) != M.cols_level())
      throw std::invalid_argument("entry word length does not match the level");
    M(index_of(w, N), index_of(v, N)) = ratfunc_from_json(e.at(2));
  }
  return M;
}

}  // namespace mdrep
