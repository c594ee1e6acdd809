// Command-line front end: verify, catalog, analyze, irreps, ccwg, mdd.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mdrep/catalog.hpp"
#include "mdrep/ccwg.hpp"
#include "mdrep/clifford.hpp"
#include "mdrep/json_io.hpp"
#include "mdrep/mdd.hpp"
#include "mdrep/presentations.hpp"
#include "mdrep/structure.hpp"

using namespace mdrep;

namespace {

constexpr int kOk = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;
constexpr const char* kCacheEnv = "MDREP_CACHE_DIR";

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

json text_matrix(const ExactMatrix& M) {
  json rows = json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < M.cols(); ++j) row.push_back(M(i, j).str());
    rows.push_back(row);
  }
  json j{{"rows", rows}};
  if (M.has_shape()) {
    j["N"] = M.N();
    j["rows_level"] = M.rows_level();
    j["cols_level"] = M.cols_level();
  }
  return j;
}

json params_json(const Params& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v.str();
  return j;
}

json constraints_json(const Constraints& cs) {
  json j = json::array();
  for (const auto& p : cs.polys()) j.push_back(p.str());
  return j;
}

ExactMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw usage_error(path + ": " + e.what());
  }
  ExactMatrix M = matrix_from_json(j);
  if (!M.has_shape()) {
    int N = j.value("N", 2);
    int r = 0, c = 0;
    while (ipow(N, r) < M.rows()) ++r;
    while (ipow(N, c) < M.cols()) ++c;
    if (ipow(N, r) != M.rows() || ipow(N, c) != M.cols()) throw usage_error(path + ": size is not a power of N");
    M.set_shape(N, r, c);
  }
  return M;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && !v.empty() && v.front().is_primitive())) {
        os << prefix << k << ":\n";
        render_text(v, prefix + "  ", os);
      } else {
        os << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        os << prefix << "-\n";
        render_text(v, prefix + "  ", os);
      } else {
        os << prefix << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else {
    os << prefix << j.dump() << "\n";
  }
}

void emit(const json& report, const Options& opt) {
  std::ostringstream os;
  if (opt.format == "text")
    render_text(report, "", os);
  else
    os << report.dump(2) << "\n";
  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream f(opt.out);
    if (!f) throw usage_error("cannot write " + opt.out);
    f << os.str();
  }
}

// FNV-1a, stable across platforms, for cache file names.
std::string config_key(const json& config) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : config.dump()) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::optional<json> cache_lookup(const json& config) {
  const char* dir = std::getenv(kCacheEnv);
  if (!dir || !*dir) return std::nullopt;
  std::ifstream in(std::filesystem::path(dir) / (config_key(config) + ".json"));
  if (!in) return std::nullopt;
  json j;
  try {
    in >> j;
  } catch (const json::exception&) {
    return std::nullopt;
  }
  if (j.value("config", json()) != config) return std::nullopt;
  return j;
}

void cache_store(const json& config, const json& report) {
  const char* dir = std::getenv(kCacheEnv);
  if (!dir || !*dir) return;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  std::ofstream out(std::filesystem::path(dir) / (config_key(config) + ".json"));
  if (out) out << report.dump(2) << "\n";
}

// Short names for the structure examples, with the branch conditions they need.
struct CaseSpec {
  std::string id;
  Params params;
  Constraints extra;
};

CaseSpec resolve_case(const std::string& name, const Params& given) {
  CaseSpec s{name, given, {}};
  auto nz = [&](const char* e) {
    RatFunc v = parse_ratfunc(e).substitute(std::map<std::string, RatFunc>(given.begin(), given.end()));
    if (v.is_zero()) throw usage_error(std::string(e) + " must not vanish for '" + name + "'");
    if (!v.is_constant()) s.extra.add(v.num());
  };
  if (name == "a-glue") {
    s.id = "case2";
    nz("p-q");
  } else if (name == "f-glue") {
    s.id = "case3";
    nz("q-s");
    nz("s");
  } else if (name == "antislash") {
    s.id = "case6a";
    if (!s.params.count("eps")) s.params["eps"] = RatFunc(-1);
    if (!s.params.count("z") && !s.params.count("x")) nz("t");
  }
  auto ids = md_case_ids();
  if (std::find(ids.begin(), ids.end(), s.id) == ids.end()) throw usage_error("unknown case '" + name + "'");
  return s;
}

RepPair build_case(const CaseSpec& s) {
  RepPair p = make_md_pair(s.id, s.params);
  p.constraints.merge(s.extra);
  return p;
}

json provenance(const std::string& command, const std::string& case_name, const Params& params, const Options& opt) {
  return json{{"command", command}, {"case", case_name}, {"params", params_json(params)}, {"seed", opt.seed}};
}

int cmd_verify(const std::string& case_name, const std::string& params_text, const std::string& r_path, const std::string& s_path,
               int n, const std::string& relations, const Options& opt) {
  RepPair pair;
  Params params = parse_params(params_text);
  if (!case_name.empty()) {
    if (!r_path.empty() || !s_path.empty()) throw usage_error("give either --case or --R/--S");
    pair = build_case(resolve_case(case_name, params));
  } else {
    if (r_path.empty() || s_path.empty()) throw usage_error("need --case or both --R and --S");
    pair = RepPair{read_matrix(r_path), read_matrix(s_path), {}, {}, "files"};
    if (pair.R.rows() != pair.S.rows() || pair.R.N() != pair.S.N()) throw usage_error("R and S have different shapes");
  }
  RelationSet set;
  try {
    set = parse_relation_set(relations);
  } catch (const std::exception& e) {
    throw usage_error(e.what());
  }
  auto reports = verify(pair, set, n);
  json rel = json::array();
  for (const auto& r : reports) {
    json w = nullptr;
    if (r.witness) w = json{{"row", word_str(r.witness->row)}, {"col", word_str(r.witness->col)}, {"value", r.witness->value.str()}};
    rel.push_back(json{{"relation", r.relation}, {"ok", r.is_zero}, {"witness", w}});
  }
  bool ok = all_zero(reports);
  json report = provenance("verify", case_name.empty() ? r_path + "," + s_path : case_name, params, opt);
  report["n"] = n;
  report["relations"] = to_string(set);
  report["constraints"] = constraints_json(pair.constraints);
  report["all_zero"] = ok;
  report["reports"] = rel;
  emit(report, opt);
  return ok ? kOk : kMathFailure;
}

int cmd_catalog_list(const Options& opt) {
  json fam = json::array();
  for (const auto& f : catalog_list())
    fam.push_back(json{{"id", f.id}, {"kind", f.kind}, {"params", f.params}, {"signs", f.signs}, {"description", f.description}});
  emit(json{{"command", "catalog list"}, {"families", fam}}, opt);
  return kOk;
}

int cmd_catalog_make(const std::string& family, const std::string& params_text, const Options& opt) {
  Params params = parse_params(params_text);
  json report = provenance("catalog make", family, params, opt);
  const FamilyInfo* info = nullptr;
  auto all = catalog_list();
  for (const auto& f : all)
    if (f.id == family) info = &f;
  if (!info) {
    RepPair p = build_case(resolve_case(family, params));
    report["R"] = text_matrix(p.R);
    report["S"] = text_matrix(p.S);
    report["constraints"] = constraints_json(p.constraints);
  } else if (info->kind == "md-case") {
    RepPair p = make_md_pair(family, params);
    report["R"] = text_matrix(p.R);
    report["S"] = text_matrix(p.S);
    report["constraints"] = constraints_json(p.constraints);
  } else if (info->kind == "manji") {
    auto get = [&](const char* k) { return params.count(k) ? params.at(k) : RatFunc::var(k); };
    if (!params.count("sign")) throw usage_error("manji needs sign=+1 or sign=-1");
    int sign = params.at("sign") == RatFunc(1) ? 1 : params.at("sign") == RatFunc(-1) ? -1 : 0;
    if (sign == 0) throw usage_error("manji sign must be +1 or -1");
    report["R"] = text_matrix(make_manji(sign, get("a"), get("b"), get("c"), get("d")));
  } else {
    report["R"] = text_matrix(make_involutive_braid(family, params));
  }
  emit(report, opt);
  return kOk;
}

json summand_json(const Summand& s) {
  json cp = json::array();
  for (const auto& c : s.x_charpoly) cp.push_back(c.str());
  json j{{"dim", s.dim()}, {"status", to_string(s.status)}, {"irreducible", s.irreducible}, {"x_charpoly", cp}};
  if (s.certificate)
    j["certificate"] = json{{"row", s.certificate->row}, {"col", s.certificate->col}, {"alpha", s.certificate->alpha.str()},
                            {"gamma", s.certificate->gamma.str()}};
  return j;
}

int cmd_analyze(const std::string& case_name, const std::string& at_text, int n, const Options& opt) {
  Params at = parse_params(at_text);
  CaseSpec spec = resolve_case(case_name, at);
  json config = provenance("analyze", case_name, at, opt);
  config["n"] = n;
  if (auto hit = cache_lookup(config)) {
    emit(hit->at("report"), opt);
    return kOk;
  }
  RepPair pair = build_case(spec);
  DecomposeOptions dopt;
  dopt.extra = spec.extra;
  auto rep = decompose(pair, n, dopt);
  json summands = json::array();
  for (const auto& s : rep.summands) summands.push_back(summand_json(s));
  json report = config;
  report["dim"] = rep.dim;
  report["commutant_dim"] = rep.commutant_dim;
  report["complete"] = rep.complete();
  report["summands"] = rep.dims();
  report["details"] = summands;
  std::vector<std::string> free;
  for (const auto& v : pair.params)
    if (!at.count(v)) free.push_back(v);
  Assignment point = generic_point(free, pair.constraints, opt.seed);
  for (const auto& [k, v] : at)
    if (v.is_constant()) point[k] = v.constant_value();
  auto tri = x_trichotomy(pair, point);
  json pt = json::object();
  for (const auto& [k, v] : point) pt[k] = v.str();
  report["trichotomy"] = json{{"class", to_string(tri.cls)}, {"diagonalizable", tri.diagonalizable}, {"order", tri.order ? json(*tri.order) : json(nullptr)},
                              {"at", pt}};
  cache_store(config, json{{"config", config}, {"report", report}});
  emit(report, opt);
  return rep.complete() ? kOk : kMathFailure;
}

json perm_list_json(const std::vector<Perm>& ps) {
  json j = json::array();
  for (const auto& p : ps) j.push_back(perm_str(p));
  return j;
}

int cmd_irreps(int n, std::size_t dims, const std::string& chi_text, const std::string& tau_name, const Options& opt) {
  json report{{"command", "irreps"}, {"n", n}, {"seed", opt.seed}};
  if (chi_text.empty()) {
    if (dims == 0) throw usage_error("need --dims or --char");
    SmallDimReport r;
    try {
      r = classify_small_dims(n, dims);
    } catch (const std::out_of_range& e) {
      throw usage_error(e.what());
    }
    json entries = json::array();
    for (const auto& e : r.entries) {
      json j{{"label", e.label()}, {"stabilizer", e.stabilizer}, {"index", e.index}, {"character", e.chi.str()}, {"taus", e.taus},
             {"parametric", e.parametric}};
      j["limit_of"] = e.limit_of ? json(*e.limit_of) : json(nullptr);
      entries.push_back(j);
    }
    report["dims"] = dims;
    report["families"] = r.families();
    report["isolated"] = r.isolated();
    report["entries"] = entries;
    emit(report, opt);
    return kOk;
  }
  Character chi;
  StabilizerData sd;
  try {
    chi = parse_character(n, chi_text);
    sd = orbit_and_stabilizer(chi);
  } catch (const std::exception& e) {
    throw usage_error(e.what());
  }
  std::string name = tau_name.empty() ? "trivial" : tau_name;
  StabIrrep tau;
  try {
    tau = find_irrep(sd.subgroup, n, name);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  auto rep = induce(chi, tau);
  json xs = json::array(), sig = json::array();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) xs.push_back(json{{"pair", std::to_string(i) + std::to_string(j)}, {"matrix", text_matrix(rep.x_image(i, j))}});
  for (const auto& s : rep.sigma) sig.push_back(text_matrix(s));
  bool relations = verify_md_prime(rep);
  std::size_t comm = commutant_dim(rep);
  report["character"] = chi.str();
  report["stabilizer"] = subgroup_name(sd.subgroup);
  report["stabilizer_order"] = sd.subgroup.size();
  report["transversal"] = perm_list_json(sd.transversal);
  report["tau"] = name;
  report["dim"] = rep.dim();
  report["dim_formula"] = std::to_string(sd.index()) + " * " + std::to_string(tau.dim());
  report["relations_hold"] = relations;
  report["commutant_dim"] = comm;
  report["irreducible"] = comm == 1;
  report["x"] = xs;
  report["sigma"] = sig;
  emit(report, opt);
  return relations && comm == 1 ? kOk : kMathFailure;
}

std::string compact(const Composition& c) {
  std::string s;
  for (int a : c) {
    if (a > 9) return composition_str(c);
    s += std::to_string(a);
  }
  return s;
}

int cmd_ccwg_order(int N, int n, const Options& opt) {
  if (N < 1 || n < 0) throw usage_error("need N >= 1 and n >= 0");
  json order = json::array();
  for (const auto& c : compositions(N, n))
    order.push_back(json{{"composition", compact(c)}, {"first_instance", word_str(orbit_rep(c))}});
  emit(json{{"command", "ccwg order"}, {"N", N}, {"n", n}, {"order", order}}, opt);
  return kOk;
}

int cmd_ccwg_check(const std::string& path, const Options& opt) {
  ExactMatrix M = read_matrix(path);
  bool ok = is_ccwg(M);
  emit(json{{"command", "ccwg check"}, {"matrix", path}, {"ccwg", ok}}, opt);
  return ok ? kOk : kMathFailure;
}

int cmd_ccwg_project(const std::string& path, const std::string& part, const Options& opt) {
  if (part != "cc" && part != "glue") throw usage_error("--part must be cc or glue");
  ExactMatrix M = read_matrix(path);
  ExactMatrix P = part == "cc" ? project_K(M) : project_glue(M);
  emit(json{{"command", "ccwg project"}, {"matrix", path}, {"part", part}, {"result", text_matrix(P)}}, opt);
  return kOk;
}

int cmd_mdd(const std::string& word_text, int n, const std::string& case_name, const std::string& params_text, const Options& opt) {
  GenWord w;
  try {
    w = parse_genword(word_text);
  } catch (const std::exception& e) {
    throw usage_error(e.what());
  }
  GroupElement g = babeda_from_md(w, n);
  Params params = parse_params(params_text);
  json report = provenance("mdd", case_name, params, opt);
  report["n"] = n;
  report["word"] = genword_str(w);
  report["normal_form"] = g.str();
  report["x_exponents"] = g.X;
  report["permutation"] = perm_str(g.w);
  report["md_word"] = genword_str(babeda_to_md(g));
  report["is_identity"] = g.is_identity();
  if (!case_name.empty()) report["image"] = text_matrix(evaluate_in_rep(w, build_case(resolve_case(case_name, params)), n));
  emit(report, opt);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed double representations: verification and analysis"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--seed", opt.seed, "seed for sampled points")->capture_default_str();
  app.add_option("--out", opt.out, "write the report to a file");
  app.add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string case_name, params, r_path, s_path, relations = "MixedDoubles", at, chi, tau, word, part = "cc", path, family;
  int n = 3, N = 2;
  std::size_t dims = 0;

  auto* verify_cmd = app.add_subcommand("verify", "check a relation set on a pair");
  verify_cmd->add_option("--case", case_name, "catalog case id or alias");
  verify_cmd->add_option("--params", params, "parameter values, e.g. p=2,sign=1");
  verify_cmd->add_option("--R", r_path, "R matrix file");
  verify_cmd->add_option("--S", s_path, "S matrix file");
  verify_cmd->add_option("--n", n, "level")->capture_default_str();
  verify_cmd->add_option("--relations", relations, "Sym, Braid, VirtualBraid, LoopBraid or MixedDoubles")->capture_default_str();

  auto* catalog_cmd = app.add_subcommand("catalog", "catalog families");
  catalog_cmd->require_subcommand(1);
  auto* list_cmd = catalog_cmd->add_subcommand("list", "list families and cases");
  auto* make_cmd = catalog_cmd->add_subcommand("make", "build a family member or case pair");
  make_cmd->add_option("--family", family, "family or case id")->required();
  make_cmd->add_option("--params", params, "parameter values");

  auto* analyze_cmd = app.add_subcommand("analyze", "decompose a case representation");
  analyze_cmd->add_option("--case", case_name, "case id or alias (a-glue, f-glue, antislash)")->required();
  analyze_cmd->add_option("--n", n, "level")->capture_default_str();
  analyze_cmd->add_option("--at", at, "parameter values");

  auto* irreps_cmd = app.add_subcommand("irreps", "induced representations of the abelian extension");
  irreps_cmd->add_option("--n", n, "rank")->capture_default_str();
  irreps_cmd->add_option("--dims", dims, "classify representations of this dimension");
  irreps_cmd->add_option("--char", chi, "character values on x_ij, lexicographic");
  irreps_cmd->add_option("--tau", tau, "stabilizer irrep name");

  auto* ccwg_cmd = app.add_subcommand("ccwg", "charge conservation with glue");
  ccwg_cmd->require_subcommand(1);
  auto* order_cmd = ccwg_cmd->add_subcommand("order", "compositions in increasing order");
  order_cmd->add_option("--N", N, "alphabet size")->capture_default_str();
  order_cmd->add_option("--n", n, "word length")->capture_default_str();
  auto* check_cmd = ccwg_cmd->add_subcommand("check", "test the CCwg pattern");
  check_cmd->add_option("matrix", path, "matrix file")->required();
  auto* project_cmd = ccwg_cmd->add_subcommand("project", "CC or glue part");
  project_cmd->add_option("matrix", path, "matrix file")->required();
  project_cmd->add_option("--part", part, "cc or glue")->capture_default_str();

  auto* mdd_cmd = app.add_subcommand("mdd", "normal form of a word");
  mdd_cmd->add_option("--word", word, "word such as \"s1 r2 r1^-1\"")->required();
  mdd_cmd->add_option("--n", n, "rank")->capture_default_str();
  mdd_cmd->add_option("--case", case_name, "evaluate in this case representation");
  mdd_cmd->add_option("--params", params, "parameter values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*verify_cmd) return cmd_verify(case_name, params, r_path, s_path, n, relations, opt);
    if (*list_cmd) return cmd_catalog_list(opt);
    if (*make_cmd) return cmd_catalog_make(family, params, opt);
    if (*analyze_cmd) return cmd_analyze(case_name, at, n, opt);
    if (*irreps_cmd) return cmd_irreps(n, dims, chi, tau, opt);
    if (*order_cmd) return cmd_ccwg_order(N, n, opt);
    if (*check_cmd) return cmd_ccwg_check(path, opt);
    if (*project_cmd) return cmd_ccwg_project(path, part, opt);
    if (*mdd_cmd) return cmd_mdd(word, n, case_name, params, opt);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const rejected_point& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kMathFailure;
  }
  return kUsage;
}
