#include "cli.hpp"

#include <future>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "kmloop/loopgroup.hpp"

namespace kmloop::cli {
namespace {

using Json = nlohmann::ordered_json;

/// Largest fixed-point basis (dim g times the number of degrees) a run may request.
constexpr long kMaxBasisElements = 5000;
constexpr int kGroupTrials = 200;
constexpr int kBaseChangeTrials = 100;

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string type;
  int r = 0;
  std::string galois_case;
  bool all = false;
  int window = 2;
  std::string format = "text";
  std::uint64_t seed = 0;
  std::vector<std::string> checks;
  bool group_checks = false;
};

struct Target {
  AffineType type;
  std::optional<GaloisCase> galois_case;
};

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> names = {"lie", "group", "dual", "base-change"};
  return names;
}

std::vector<Target> resolve(const Config& cfg) {
  if (cfg.window < 1) throw ConfigError("window must be at least 1");
  for (const auto& c : cfg.checks)
    if (std::find(known_checks().begin(), known_checks().end(), c) == known_checks().end())
      throw ConfigError("unknown check '" + c + "'; known: lie, group, dual, base-change");
  std::optional<GaloisCase> gc;
  if (!cfg.galois_case.empty()) {
    try {
      gc = galois_case_from_string(cfg.galois_case);
    } catch (const std::exception&) {
      throw ConfigError("unknown case '" + cfg.galois_case + "'; known: I, II, IIIa, IIIb");
    }
  }
  std::vector<Target> out;
  if (cfg.all) {
    if (!cfg.type.empty()) throw ConfigError("--all and --type are exclusive");
    if (gc) throw ConfigError("--case needs a single --type");
    for (const auto& t : affine_type_registry()) out.push_back({t, std::nullopt});
  } else {
    if (cfg.type.empty()) throw ConfigError("give --type (with --r) or --all; valid families: " + affine_family_list());
    try {
      AffineType t = parse_affine_type(cfg.type);
      if (cfg.type.find("^(") == std::string::npos && cfg.r > 0) t = lookup_affine_type(t.finite, cfg.r);
      if (cfg.type.find("^(") != std::string::npos && cfg.r > 0 && cfg.r != t.r)
        throw ConfigError("--r " + std::to_string(cfg.r) + " contradicts " + cfg.type);
      out.push_back({t, gc});
    } catch (const TypeError& e) {
      throw ConfigError(e.what());
    }
  }
  for (const auto& t : out) {
    const long dim = RootSystem(t.type.finite).size() + t.type.finite.rank;
    if (dim * (2L * cfg.window * t.type.r + 1) > kMaxBasisElements)
      throw ResourceError(t.type.name() + " with -d " + std::to_string(cfg.window) + " needs " +
                          std::to_string(dim * (2L * cfg.window * t.type.r + 1)) + " basis elements (cap " +
                          std::to_string(kMaxBasisElements) + "); use a smaller -d");
  }
  return out;
}

GaloisSetup make_setup(const Target& t) {
  try {
    return GaloisSetup::make(t.type, t.galois_case);
  } catch (const SetupMismatch& e) {
    throw ConfigError(e.what());
  }
}

bool wants(const Config& cfg, const std::string& name) {
  return std::find(cfg.checks.begin(), cfg.checks.end(), name) != cfg.checks.end();
}

bool is_base_change_type(const AffineType& t) { return t.finite.letter == Letter::D && t.finite.rank == 4 && t.r == 3; }

Report verify_one(const Target& t, const Config& cfg) {
  const GaloisSetup s = make_setup(t);
  const bool explicit_checks = !cfg.checks.empty();
  const bool group_default = t.type.finite.letter != Letter::E || cfg.group_checks;
  const bool lie = !explicit_checks || wants(cfg, "lie");
  const bool group = explicit_checks ? wants(cfg, "group") : group_default;
  const bool dual = explicit_checks ? wants(cfg, "dual") : group_default;
  const bool base = wants(cfg, "base-change") && is_base_change_type(t.type);

  Report rep;
  rep.type = s.type.name();
  rep.galois_case = to_string(s.galois_case());
  rep.r = s.r();
  rep.window = cfg.window;
  if (lie) rep.append(verify_lie_level(s, cfg.window));
  if (group) rep.append(verify_group_level(s, cfg.seed, kGroupTrials));
  if (dual) rep.append(dual_numbers_check(s, cfg.window));
  if (base) rep.append(base_change_check(cfg.window, cfg.seed, kBaseChangeTrials));
  return rep;
}

void print_text(const Report& rep, std::ostream& out) {
  out << rep.type << "  case " << rep.galois_case << "  r=" << rep.r << "  d=" << rep.window << "\n";
  std::vector<std::string> order;
  std::map<std::string, std::pair<int, int>> tally;
  std::map<std::string, const Check*> first_fail;
  for (const auto& c : rep.checks) {
    if (!tally.count(c.name)) order.push_back(c.name);
    auto& [pass, total] = tally[c.name];
    ++total;
    if (c.pass) {
      ++pass;
    } else if (!first_fail.count(c.name)) {
      first_fail[c.name] = &c;
    }
  }
  for (const auto& name : order) {
    const auto [pass, total] = tally[name];
    out << "  " << (pass == total ? "PASS" : "FAIL") << "  " << std::left << std::setw(44) << name << std::right << pass << "/"
        << total;
    if (auto it = first_fail.find(name); it != first_fail.end()) {
      out << "  first failure: " << it->second->instance;
      if (!it->second->witness.empty()) out << " (" << it->second->witness << ")";
    }
    out << "\n";
  }
  out << "  total " << rep.passed() << "/" << rep.checks.size() << " passed\n";
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<Target> targets = resolve(cfg);
  if (wants(cfg, "base-change") && !cfg.all && !is_base_change_type(targets.front().type))
    throw ConfigError("the base-change check applies to D4^(3) only");
  for (const auto& t : targets) make_setup(t);

  std::vector<std::future<Report>> jobs;
  for (const auto& t : targets) jobs.push_back(std::async(std::launch::async, verify_one, t, cfg));
  std::vector<Report> reports;
  for (auto& j : jobs) reports.push_back(j.get());

  bool ok = true;
  for (const auto& r : reports) ok = ok && r.all_pass();
  if (cfg.format == "json") {
    if (!cfg.all) {
      out << reports.front().to_json().dump(2) << "\n";
    } else {
      Json j;
      j["reports"] = Json::array();
      int passed = 0, total = 0;
      for (const auto& r : reports) {
        j["reports"].push_back(r.to_json());
        passed += r.passed();
        total += static_cast<int>(r.checks.size());
      }
      j["summary"] = {{"types", reports.size()}, {"total", total}, {"passed", passed}, {"failed", total - passed}};
      out << j.dump(2) << "\n";
    }
  } else {
    for (const auto& r : reports) print_text(r, out);
    if (cfg.all) out << (ok ? "all types pass" : "some checks failed") << "\n";
  }
  return ok ? kPass : kCheckFailed;
}

std::string matrix_string(const Eigen::MatrixXi& a) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < a.cols(); ++j) s += (j ? "," : "") + std::to_string(a(i, j));
    s += "]";
  }
  return s + "]";
}

int cmd_gcm(const Config& cfg, std::ostream& out) {
  std::vector<Target> targets = resolve(cfg);
  Json all = Json::array();
  bool ok = true;
  for (const auto& t : targets) {
    const GaloisSetup s = make_setup(t);
    AffineGenerators g = affine_generators(s);
    Eigen::MatrixXi a = affine_gcm_from_generators(s.basis(), g);
    const std::string detected = identify_affine_type(a).value_or("unknown");
    const bool affine = is_affine_gcm(a);
    ok = ok && affine && gcm_isomorphic(a, reference_affine_gcm(s.type));
    Json j;
    j["type"] = s.type.name();
    j["case"] = to_string(s.galois_case());
    j["family"] = s.type.family;
    j["detected"] = detected;
    j["nodes"] = Json::array();
    for (int i = 0; i < g.size(); ++i) {
      Json orbit = Json::array();
      if (i > 0)
        for (int n : g.orbits[static_cast<std::size_t>(i - 1)]) orbit.push_back(n + 1);
      j["nodes"].push_back({{"node", i}, {"orbit", orbit}});
    }
    j["gcm"] = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index k = 0; k < a.cols(); ++k) row.push_back(a(i, k));
      j["gcm"].push_back(row);
    }
    Json labels = Json::array();
    if (affine) {
      Eigen::VectorXi c = dual_kac_labels(a);
      for (Eigen::Index i = 0; i < c.size(); ++i) labels.push_back(c(i));
    }
    j["dual_kac_labels"] = labels;
    if (cfg.format == "json") {
      all.push_back(j);
      continue;
    }
    out << "type: " << s.type.name() << "  case " << to_string(s.galois_case()) << "\n";
    out << "nodes: 0 affine";
    for (int i = 1; i < g.size(); ++i) {
      out << "; " << i << " orbit {";
      const auto& o = g.orbits[static_cast<std::size_t>(i - 1)];
      for (std::size_t k = 0; k < o.size(); ++k) out << (k ? "," : "") << o[k] + 1;
      out << "}";
    }
    out << "\ngcm: " << matrix_string(a) << "\n";
    out << "family: " << s.type.family << "\ndetected: " << detected << "\n";
    if (affine) out << "dual labels: " << labels.dump() << "\n";
  }
  if (cfg.format == "json") out << (cfg.all ? all.dump(2) : all.front().dump(2)) << "\n";
  return ok ? kPass : kCheckFailed;
}

int cmd_basis(const Config& cfg, std::ostream& out) {
  std::vector<Target> targets = resolve(cfg);
  Json all = Json::array();
  for (const auto& t : targets) {
    const GaloisSetup s = make_setup(t);
    FixedPointBasis b = fixed_point_basis(s, cfg.window);
    const auto counts = b.counts();
    Json j;
    j["type"] = s.type.name();
    j["case"] = to_string(s.galois_case());
    j["r"] = s.r();
    j["window"] = cfg.window;
    j["total"] = b.elements.size();
    j["counts"] = Json::object();
    j["basis"] = Json::object();
    for (const auto& [k, n] : counts) {
      j["counts"][std::to_string(k)] = n;
      Json elems = Json::array();
      for (const auto& x : b.at_degree(k)) elems.push_back(render(s.basis(), x, s.r()));
      j["basis"][std::to_string(k)] = elems;
    }
    if (cfg.format == "json") {
      all.push_back(j);
      continue;
    }
    out << s.type.name() << "  case " << to_string(s.galois_case()) << "  r=" << s.r() << "  d=" << cfg.window << "  "
        << b.elements.size() << " elements\n";
    for (const auto& [k, n] : counts) {
      out << "degree " << k << "/" << s.r() << ": " << n << "\n";
      for (const auto& x : b.at_degree(k)) out << "  " << render(s.basis(), x, s.r()) << "\n";
    }
  }
  if (cfg.format == "json") out << (cfg.all ? all.dump(2) : all.front().dump(2)) << "\n";
  return kPass;
}

void add_options(CLI::App* sub, Config& cfg) {
  sub->add_option("--type", cfg.type, "finite type such as A2 or D4, or a full name such as A2^(2)");
  sub->add_option("--r", cfg.r, "order of the diagram automorphism (default 1)")->check(CLI::Range(1, 3));
  sub->add_option("--case", cfg.galois_case, "Galois case: I, II, IIIa or IIIb (default I, II, IIIb by r)");
  sub->add_flag("--all", cfg.all, "run every one of the sixteen affine families");
  sub->add_option("--window,-d", cfg.window, "degree window d: exponents k/r with |k| <= d r")->capture_default_str();
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks for twisted loop algebras and groups of affine Kac-Moody type"};
  app.require_subcommand(1);
  Config cfg;
  CLI::App* gcm = app.add_subcommand("gcm", "affine GCM read off from the generators");
  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  CLI::App* basis = app.add_subcommand("basis", "Gamma-fixed basis by degree");
  for (CLI::App* sub : {gcm, verify, basis}) add_options(sub, cfg);
  verify->add_option("--check", cfg.checks, "checks to run: lie, group, dual, base-change")->delimiter(',');
  verify->add_flag("--group-checks", cfg.group_checks, "enable group-level checks for E types");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kBadConfig;
  }

  try {
    if (*gcm) return cmd_gcm(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    return cmd_basis(cfg, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return kBadConfig;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceCap;
  }
}

}  // namespace kmloop::cli
