#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "nesto/families.hpp"
#include "nesto/identities.hpp"
#include "nesto/invariants.hpp"
#include "nesto/parallel.hpp"
#include "nesto/serialize.hpp"

namespace nesto::cli {

namespace {

using nlohmann::json;

constexpr int kDefaultOrder = 8;
constexpr int kMaxOrder = 12;
constexpr int kMaxIdentityOrder = 10;
constexpr int kMaxScanBound = 9;
constexpr int kMaxClassNodes = 6;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  int order = kDefaultOrder;
  KeyMode memo = KeyMode::Labels;
  unsigned jobs = 1;
};

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw UsageError("config key '" + key + "' needs an integer, got '" + value + "'");
  }
}

// key=value lines; '#' starts a comment.
Settings load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  Settings s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "order") {
      s.order = parse_int(key, value);
    } else if (key == "jobs") {
      s.jobs = static_cast<unsigned>(std::max(0, parse_int(key, value)));
    } else if (key == "memo") {
      if (value == "labels")
        s.memo = KeyMode::Labels;
      else if (value == "isomorphism")
        s.memo = KeyMode::Isomorphism;
      else
        throw UsageError("config key 'memo' must be 'labels' or 'isomorphism'");
    } else {
      throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (s.order < 1 || s.order > kMaxOrder)
    throw UsageError("truncation order must be in 1.." + std::to_string(kMaxOrder));
  return s;
}

std::string join_integers(const std::vector<Integer>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + v[i].get_str();
  return out;
}

std::string join_rationals(const std::vector<Rational>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ";" : "") + to_string(v[i]);
  return out;
}

std::string edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += (out.empty() ? "" : ";") + std::to_string(u) + "-" + std::to_string(v);
  return out;
}

std::vector<FamilyId> families_for(const std::string& name) {
  if (name == "all") {
    std::vector<FamilyId> out;
    for (const auto& f : all_families()) out.push_back(f.id);
    return out;
  }
  if (auto id = parse_family(name)) return {*id};
  throw UsageError("unknown family '" + name + "'");
}

// Indices (k, l) of a family with k + l <= bound, in (k + l, k) order.
std::vector<std::pair<int, int>> family_indices(FamilyId id, int bound) {
  std::vector<std::pair<int, int>> out;
  for (int d = 0; d <= bound; ++d)
    for (int k = 0; k <= d; ++k)
      if (family(id).contains(k, d - k)) out.emplace_back(k, d - k);
  return out;
}

int cmd_invariants(const Settings& settings, const std::string& spec, const std::string& format, std::ostream& out) {
  Graph g;
  try {
    g = parse_graph_spec(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (g.node_count() < 1) throw UsageError("graph needs at least one node");
  if (g.node_count() > kMaxGraphNodes)
    throw UsageError("graph has more than " + std::to_string(kMaxGraphNodes) + " nodes");

  RingCalculator calc(settings.memo);
  const BuildingSet b = building_set_from_graph(g);
  const Poly2 f = calc.fpoly(b);
  const int dim = homogeneous_degree(f);
  const auto fvec = fvector_of(f, dim);
  const Poly2 h = subst_h(f);
  const bool symmetric = is_symmetric(h);
  std::optional<GalPolyResult> gal;
  if (symmetric) gal = gal_check_poly(h, dim);
  const Integer facets = dim >= 1 ? fvec[static_cast<std::size_t>(dim - 1)] : Integer(0);

  if (format == "csv") {
    out << "graph,nodes,dimension,building_sets,facets,fvector,hpoly,gamma,gal\n";
    out << '"' << spec << "\"," << g.node_count() << ',' << dim << ',' << b.size() << ',' << facets << ','
        << join_integers(fvec) << ",\"" << to_string(h) << "\"," << (gal ? join_rationals(gal->gamma.gammas) : "")
        << ',' << (gal && gal->passed() ? "pass" : "fail") << '\n';
    return kSuccess;
  }
  json fj = json::array();
  for (const auto& v : fvec) fj.push_back(json::parse(v.get_str()));
  json j = {
      {"graph", {{"spec", spec}, {"nodes", g.node_count()}, {"edges", g.edges().size()}}},
      {"dimension", dim},
      {"building_set_size", b.size()},
      {"facets", json::parse(facets.get_str())},
      {"fvector", fj},
      {"fpoly", poly_to_json(f)},
      {"hpoly", poly_to_json(h)},
      {"dehn_sommerville", symmetric},
      {"gamma", gal ? gamma_to_json(gal->gamma) : json(nullptr)},
      {"gal", gal && gal->passed()},
  };
  out << j.dump(2) << '\n';
  return kSuccess;
}

int cmd_verify(const Settings& settings, const std::string& family_name, std::optional<int> max_order,
               const std::string& format, std::ostream& out, std::ostream& err) {
  const auto ids = families_for(family_name);
  const int bound = max_order.value_or(settings.order);
  if (bound < 1 || bound > settings.order)
    throw UsageError("--max-order must be in 1.." + std::to_string(settings.order) + " (the truncation order)");

  RingCalculator calc(settings.memo);
  json reports = json::array();
  std::ostringstream csv;
  csv << "family,k,l,dimension,match\n";
  bool all_ok = true;
  for (FamilyId id : ids) {
    const Series2 series = family_f(id, settings.order);
    const auto indices = family_indices(id, bound);
    std::vector<Poly2> from_recursion(indices.size());
    parallel_for(indices.size(), settings.jobs, [&](std::size_t i) {
      from_recursion[i] = calc.fpoly(family(id).graph(indices[i].first, indices[i].second));
    });
    json mismatches = json::array();
    for (std::size_t i = 0; i < indices.size(); ++i) {
      const auto [k, l] = indices[i];
      const Poly2 from_series = coeff_normalized(series, id, k, l);
      const bool match = from_series == from_recursion[i];
      csv << family(id).name << ',' << k << ',' << l << ',' << family(id).dim(k, l) << ','
          << (match ? "true" : "false") << '\n';
      if (!match) {
        all_ok = false;
        mismatches.push_back({{"index", {k, l}},
                              {"series", poly_to_json(from_series)},
                              {"recursion", poly_to_json(from_recursion[i])}});
        err << family(id).name << " mismatch at (" << k << "," << l << "): series " << from_series << ", recursion "
            << from_recursion[i] << '\n';
      }
    }
    reports.push_back({{"family", family(id).name},
                       {"order", settings.order},
                       {"max_order", bound},
                       {"checked", indices.size()},
                       {"mismatches", mismatches}});
  }
  if (format == "csv")
    out << csv.str();
  else
    out << json({{"passed", all_ok}, {"families", reports}}).dump(2) << '\n';
  return all_ok ? kSuccess : kCheckFailed;
}

int cmd_identities(int order, bool inject_fault, std::ostream& out, std::ostream& err) {
  if (order < 2 || order > kMaxIdentityOrder)
    throw UsageError("--order must be in 2.." + std::to_string(kMaxIdentityOrder));
  SeriesBundle bundle = make_bundle(order);
  if (inject_fault) {
    // Drop the t-term of the x^2 coefficient of Pe_f.
    Poly2 c = bundle.pe_f.coeff(2, 0);
    Poly2 damaged;
    for (const auto& [e, v] : c.terms())
      if (e.t_deg == 0) damaged.add_term(v, e);
    bundle.pe_f.set_coeff(2, 0, damaged);
  }
  const auto results = run_identities(bundle);
  json items = json::array();
  bool all_ok = true;
  for (const auto& r : results) {
    json item = {{"name", r.name}, {"statement", r.statement}, {"compared_degree", r.compared_degree},
                 {"passed", r.passed()}};
    if (r.failure) {
      all_ok = false;
      item["failure"] = {{"index", {r.failure->k, r.failure->l}},
                         {"lhs", poly_to_json(r.failure->lhs)},
                         {"rhs", poly_to_json(r.failure->rhs)},
                         {"difference", poly_to_json(r.failure->difference)}};
      err << r.name << " failed at x^" << r.failure->k << " y^" << r.failure->l << ": lhs - rhs = "
          << r.failure->difference << '\n';
    }
    items.push_back(item);
  }
  out << json({{"order", order}, {"passed", all_ok}, {"identities", items}}).dump(2) << '\n';
  return all_ok ? kSuccess : kCheckFailed;
}

int scan_families(const std::string& family_name, int bound, const std::string& format,
                  std::ostream& out, std::ostream& err) {
  const auto ids = families_for(family_name);
  std::ostringstream csv;
  csv << "family,k,l,dimension,gamma\n";
  json reports = json::array();
  bool all_ok = true;
  for (FamilyId id : ids) {
    const Series2 h = family_h(id, bound);
    const GalReport report = gal_check_series(h, id);
    const auto indices = family_indices(id, bound);
    for (const auto& [k, l] : indices) {
      const Poly2 c = coeff_normalized(h, id, k, l);
      std::string gamma;
      if (!c.is_zero() && is_symmetric(c) && is_homogeneous_of(c, family(id).dim(k, l)))
        gamma = join_rationals(gamma_extract(c, family(id).dim(k, l)).gammas);
      csv << family(id).name << ',' << k << ',' << l << ',' << family(id).dim(k, l) << ',' << gamma << '\n';
    }
    for (const auto& v : report.violations)
      err << family(id).name << " (" << v.k << "," << v.l << ") " << v.condition << ": " << v.witness << '\n';
    all_ok = all_ok && report.passed();
    json r = report_to_json(report);
    r["family"] = family(id).name;
    reports.push_back(r);
  }
  if (format == "json")
    out << json({{"passed", all_ok}, {"bound", bound}, {"reports", reports}}).dump(2) << '\n';
  else
    out << csv.str();
  return all_ok ? kSuccess : kCheckFailed;
}

int scan_graph_class(const Settings& settings, const std::string& graph_class, int nodes, const std::string& format,
                     std::ostream& out, std::ostream& err) {
  if (graph_class != "connected") throw UsageError("unknown graph class '" + graph_class + "' (supported: connected)");
  if (nodes < 1 || nodes > kMaxClassNodes)
    throw UsageError("--nodes must be in 1.." + std::to_string(kMaxClassNodes));
  const auto graphs = connected_graph_classes(nodes);
  RingCalculator calc(settings.memo);
  std::vector<Poly2> hpolys(graphs.size());
  parallel_for(graphs.size(), settings.jobs,
               [&](std::size_t i) { hpolys[i] = subst_h(calc.fpoly(graphs[i])); });

  std::ostringstream csv;
  csv << "class,nodes,edges,dimension,gamma\n";
  GalReport report;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    ++report.checked;
    const int dim = nodes - 1;
    std::string gamma;
    if (!is_symmetric(hpolys[i])) {
      report.violations.push_back({static_cast<int>(i), 0, "symmetry", to_string(hpolys[i])});
    } else {
      const GalPolyResult gal = gal_check_poly(hpolys[i], dim);
      gamma = join_rationals(gal.gamma.gammas);
      if (!gal.passed())
        report.violations.push_back({static_cast<int>(i), 0, "gamma-nonnegativity",
                                     "gamma_" + std::to_string(*gal.first_negative) + " = " +
                                         to_string(gal.gamma.gammas[*gal.first_negative])});
    }
    csv << i << ',' << nodes << ",\"" << edge_list(graphs[i]) << "\"," << dim << ',' << gamma << '\n';
  }
  for (const auto& v : report.violations)
    err << "class " << v.k << " (" << edge_list(graphs[static_cast<std::size_t>(v.k)]) << ") " << v.condition << ": "
        << v.witness << '\n';
  if (format == "json") {
    json r = report_to_json(report);
    r["graph_class"] = graph_class;
    r["nodes"] = nodes;
    out << r.dump(2) << '\n';
  } else {
    out << csv.str();
  }
  return report.passed() ? kSuccess : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Face, h- and gamma-polynomials of graphical nestohedra"};
  app.name("nesto");
  app.require_subcommand(1);

  std::string config_path;
  std::optional<unsigned> jobs;
  bool iso_memo = false;
  app.add_option("--config", config_path, "key=value file (order, memo, jobs)");
  app.add_option("--jobs", jobs, "worker threads for scans (0 = all cores)");
  app.add_flag("--iso-memo", iso_memo, "memoize up to isomorphism (ground sets of at most 8 elements)");

  std::string format = "json";
  auto* invariants = app.add_subcommand("invariants", "f-vector, h-polynomial and gamma-vector of one graph");
  invariants->fallthrough();
  std::string graph_spec;
  invariants->add_option("--graph", graph_spec, "graph spec, e.g. bipartite:2,2")->required();
  invariants->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* verify = app.add_subcommand("verify", "recursion versus closed-form series, coefficient by coefficient");
  verify->fallthrough();
  std::string verify_family;
  std::optional<int> max_order;
  verify->add_option("--family", verify_family, "pe, st, starmarked, nabla-because, because-because or all")
      ->required();
  verify->add_option("--max-order", max_order, "largest k + l to check (at most the truncation order)");
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

  auto* identities = app.add_subcommand("identities", "differential identities of the generating series");
  identities->fallthrough();
  int identity_order = kDefaultOrder;
  bool inject_fault = false;
  identities->add_option("--order", identity_order, "truncation order (2..10)");
  identities->add_flag("--inject-fault", inject_fault, "corrupt Pe_f before checking (self-test)");

  auto* gal_scan = app.add_subcommand("gal-scan", "gamma-nonnegativity over a family or a graph class");
  gal_scan->fallthrough();
  std::string scan_family;
  std::string graph_class;
  std::optional<int> bound;
  std::optional<int> nodes;
  std::string scan_format = "csv";
  auto* fam_opt = gal_scan->add_option("--family", scan_family, "family name or all");
  auto* class_opt = gal_scan->add_option("--graph-class", graph_class, "graph class (connected)");
  fam_opt->excludes(class_opt);
  gal_scan->add_option("--bound", bound, "largest k + l for family scans (1..9)");
  gal_scan->add_option("--nodes", nodes, "node count for graph-class scans (1..6)");
  gal_scan->add_option("--format", scan_format)->check(CLI::IsMember({"json", "csv"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Settings settings = config_path.empty() ? Settings{} : load_config(config_path);
    if (jobs) settings.jobs = *jobs;
    if (iso_memo) settings.memo = KeyMode::Isomorphism;

    if (invariants->parsed()) return cmd_invariants(settings, graph_spec, format, out);
    if (verify->parsed()) return cmd_verify(settings, verify_family, max_order, format, out, err);
    if (identities->parsed()) return cmd_identities(identity_order, inject_fault, out, err);
    if (gal_scan->parsed()) {
      if (!scan_family.empty()) {
        if (!bound) throw UsageError("--family scans need --bound");
        if (*bound < 1 || *bound > kMaxScanBound)
          throw UsageError("--bound must be in 1.." + std::to_string(kMaxScanBound));
        return scan_families(scan_family, *bound, scan_format, out, err);
      }
      if (!graph_class.empty()) {
        if (!nodes) throw UsageError("--graph-class scans need --nodes");
        return scan_graph_class(settings, graph_class, *nodes, scan_format, out, err);
      }
      if (bound && (*bound < 1 || *bound > kMaxScanBound))
        throw UsageError("--bound must be in 1.." + std::to_string(kMaxScanBound));
      throw UsageError("gal-scan needs --family or --graph-class");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace nesto::cli
