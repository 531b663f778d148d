// Copyright 2026 The psgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cli/circuit.hpp"
#include "psgraph/classes/catalogue.hpp"
#include "psgraph/errors.hpp"
#include "psgraph/explorer/explorer.hpp"
#include "psgraph/scheme/rules.hpp"
#include "psgraph/scheme/simulate.hpp"

namespace psgraph::cli {
namespace {

namespace fs = std::filesystem;

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw FileError("cannot write '" + path + "'");
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + '"';
}

struct Globals {
  std::uint64_t seed = kDefaultSeed;
  std::size_t jobs = 1;
  std::string format = "text";
  std::size_t max_order = Catalogue::kMaxOrder;

  bool csv() const { return format == "csv"; }
};

// --catalogue, then $PSGRAPH_CATALOGUE_DIR/cat<n>.txt, then a fresh build.
Catalogue resolve_catalogue(const std::string& path, std::size_t n, const Globals& g) {
  if (n > g.max_order) {
    throw GuardExceeded("order " + std::to_string(n) + " exceeds --max-order " +
                        std::to_string(g.max_order));
  }
  std::string source = path;
  if (source.empty()) {
    if (const char* dir = std::getenv("PSGRAPH_CATALOGUE_DIR"); dir && *dir) {
      const fs::path candidate = fs::path(dir) / ("cat" + std::to_string(n) + ".txt");
      if (fs::exists(candidate)) source = candidate.string();
    }
  }
  if (source.empty()) return build_catalogue(n);
  Catalogue c = parse_catalogue(read_file(source));
  if (c.order() != n) {
    throw InvalidArgument("catalogue '" + source + "' has order " + std::to_string(c.order()) +
                          ", need " + std::to_string(n));
  }
  return c;
}

int cmd_catalogue(std::size_t n, const std::string& out_path, const Globals& g,
                  std::ostream& out) {
  if (n > g.max_order) {
    throw GuardExceeded("order " + std::to_string(n) + " exceeds --max-order " +
                        std::to_string(g.max_order));
  }
  const Catalogue c = build_catalogue(n);
  std::string text;
  if (g.csv()) {
    text = "class_id,representative,members,diameter\n";
    for (const ClassRecord& r : c.classes()) {
      text += std::to_string(r.class_id) + ',' + quoted(r.representative.to_string()) + ',' +
              std::to_string(r.member_count) + ',' + std::to_string(r.orbit_diameter) + '\n';
    }
  } else {
    text = render_catalogue(c);
  }
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "catalogue n=" << n << " classes=" << c.classes().size()
        << " max_diameter=" << max_orbit_diameter(c) << " -> " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& graph, const std::string& cat_path, const Globals& g,
                 std::ostream& out) {
  const Graph target = Graph::parse(graph);
  const Catalogue c = resolve_catalogue(cat_path, target.order(), g);
  const std::size_t id = classify(c, target);
  const ClassRecord& r = c.record(id);
  if (g.csv()) {
    out << "graph,class_id,representative,members,diameter\n"
        << quoted(target.to_string()) << ',' << id << ',' << quoted(r.representative.to_string())
        << ',' << r.member_count << ',' << r.orbit_diameter << '\n';
  } else {
    out << "class " << id << "\nrepresentative " << r.representative.to_string() << "\nmembers "
        << r.member_count << "\ndiameter " << r.orbit_diameter << '\n';
  }
  return kExitOk;
}

Verdict rule_verdict(const Scheme& s, const std::string& rule) {
  s.validate();
  if (rule == "full") return full_verdict(s);
  if (rule == "gate-cycles") return check_gate_cycles(s);
  if (rule == "paths") return check_paths_rule(s);
  if (rule == "parity") return check_source_cycle_parity(s);
  if (rule == "nondegenerate") return check_nondegenerate(s);
  return degenerate_oracle(s);
}

int cmd_check(const std::string& path, const std::string& rule, const Globals& g,
              std::ostream& out) {
  const Scheme s = Scheme::parse(read_file(path));
  const Verdict v = rule_verdict(s, rule);
  if (g.csv()) {
    out << "result,rule,detail\n";
    if (v.witnesses.empty()) out << to_string(v.result) << ",,\n";
    for (const Witness& w : v.witnesses) {
      out << to_string(v.result) << ',' << quoted(w.rule) << ',' << quoted(w.detail) << '\n';
    }
  } else {
    out << render(v);
  }
  return v.fails() ? kExitNegative : kExitOk;
}

void print_fock(const FockVector& s, const Globals& g, std::ostream& out) {
  if (!g.csv()) {
    out << s.to_string();
    return;
  }
  out << "occupation,re,im\n";
  for (const auto& [occ, a] : s.terms()) {
    for (auto k : occ) out << static_cast<int>(k);
    out << ',' << num(a.real()) << ',' << num(a.imag()) << '\n';
  }
}

int cmd_simulate(const std::string& path, bool scheme, const Globals& g, std::ostream& out) {
  const std::string text = read_file(path);
  if (scheme) {
    const Scheme s = Scheme::parse(text);
    const SchemeSimulation sim = simulate_scheme(s);
    if (g.csv()) {
      out << "intended,probability,nominal_probability,fidelity\n"
          << quoted(intended_graph(s).to_string()) << ',' << num(sim.probability) << ','
          << num(sim.nominal_probability) << ',' << num(sim.fidelity) << '\n';
    } else {
      out << "intended " << intended_graph(s).to_string() << "\nprobability "
          << num(sim.probability) << "\nnominal_probability " << num(sim.nominal_probability)
          << "\nfidelity " << num(sim.fidelity) << '\n';
    }
    return kExitOk;
  }
  const CircuitRun r = run_circuit(Circuit::parse(text));
  print_fock(r.output, g, out);
  if (!g.csv()) out << "squared_norm " << num(r.squared_norm) << '\n';
  return kExitOk;
}

struct ExploreArgs {
  std::string resource;
  std::string catalogue;
  double d = 5.0 / 6.0;
  std::size_t min_iterations = ExplorerOptions{}.min_iterations;
  std::size_t max_iterations = ExplorerOptions{}.max_iterations;
  std::string out;
};

int cmd_explore(const ExploreArgs& a, const Globals& g, std::ostream& out) {
  const Resource r = Resource::parse(a.resource);
  const Catalogue c = resolve_catalogue(a.catalogue, r.order(), g);
  ExplorerOptions o;
  o.d = a.d;
  o.seed = g.seed;
  o.jobs = g.jobs;
  o.min_iterations = a.min_iterations;
  o.max_iterations = a.max_iterations;
  const ExplorationReport report = find_accessible_classes(r, c, o);

  std::string text;
  if (g.csv()) {
    text = "class_id,probability,recipe\n";
    for (const auto& [id, recipe] : report.recipes) {
      text += std::to_string(id) + ',' + num(recipe.probability()) + ',' +
              quoted(recipe.to_string()) + '\n';
    }
  } else {
    text = render_report(report);
  }
  if (a.out.empty()) {
    if (g.csv()) out << "# seed " << report.seed << '\n';
    out << text;
  } else {
    write_file(a.out, text);
    out << "explore resource=" << r.to_string() << " seed=" << report.seed
        << " iterations=" << report.iterations << " classes=" << report.recipes.size() << '/'
        << c.classes().size() << " converged=" << (report.converged ? "yes" : "no") << " -> "
        << a.out << '\n';
  }
  return kExitOk;
}

int cmd_recipe(const std::string& graph, const std::string& report_path, std::size_t class_id,
               const Globals& g, std::ostream& out) {
  if (!report_path.empty()) {
    const ExplorationReport report = parse_report(read_file(report_path));
    const auto it = report.recipes.find(class_id);
    if (it == report.recipes.end()) {
      throw InvalidArgument("class " + std::to_string(class_id) + " is not in '" + report_path +
                            "'");
    }
    out << "resource " << report.resource.to_string() << "\nrecipe " << it->second.to_string()
        << "\nprobability " << num(it->second.probability()) << '\n';
    return kExitOk;
  }
  const Graph target = Graph::parse(graph);
  if (target.order() > g.max_order) {
    throw GuardExceeded("order " + std::to_string(target.order()) + " exceeds --max-order " +
                        std::to_string(g.max_order));
  }
  const Recipe recipe = tree_recipe(target);
  const Resource resource = tree_resource(target.order());
  const Verdict v = full_verdict(recipe_scheme(recipe, resource));
  if (g.csv()) {
    out << "resource,recipe,probability,verdict\n"
        << quoted(resource.to_string()) << ',' << quoted(recipe.to_string()) << ','
        << num(recipe.probability()) << ',' << to_string(v.result) << '\n';
  } else {
    out << "resource " << resource.to_string() << "\nrecipe " << recipe.to_string()
        << "\nprobability " << num(recipe.probability()) << "\nverdict " << to_string(v.result)
        << '\n';
  }
  return kExitOk;
}

struct ReportArgs {
  std::vector<std::string> files;
  bool verify = false;
  bool compare = false;
  bool run = false;
  std::size_t max_n = 7;
  std::size_t max_iterations = ExplorerOptions{}.max_iterations;
  std::string catalogue_dir;
};

int cmd_report(const ReportArgs& a, const Globals& g, std::ostream& out) {
  std::map<std::string, ExplorationReport> reports;
  for (const std::string& f : a.files) {
    ExplorationReport r = parse_report(read_file(f));
    reports[r.resource.to_string()] = std::move(r);
  }

  if (a.verify) {
    std::size_t problems = 0;
    for (const auto& [name, r] : reports) {
      const Catalogue c = resolve_catalogue("", r.resource.order(), g);
      const auto found = verify_report(r, c);
      out << name << ": " << r.recipes.size() << " recipes, " << found.size() << " problem(s)\n";
      for (const std::string& p : found) out << "  " << p << '\n';
      problems += found.size();
    }
    if (!a.compare) return problems ? kExitNegative : kExitOk;
  }
  if (!a.compare) {
    for (const auto& [name, r] : reports) {
      out << name << ": seed " << r.seed << ", " << r.iterations << " iterations, "
          << r.recipes.size() << " classes, converged " << (r.converged ? "yes" : "no") << '\n';
    }
    return kExitOk;
  }

  if (a.run) {
    out << (g.csv() ? "# seed " : "seed ") << g.seed << '\n';
    std::map<std::size_t, Catalogue> catalogues;
    for (const Table1Row& row : table1_rows()) {
      if (row.n > a.max_n || reports.count(row.resource)) continue;
      if (!catalogues.count(row.n)) catalogues.emplace(row.n, resolve_catalogue("", row.n, g));
      ExplorerOptions o;
      o.seed = g.seed;
      o.jobs = g.jobs;
      o.max_iterations = a.max_iterations;
      reports[row.resource] =
          find_accessible_classes(Resource::parse(row.resource), catalogues.at(row.n), o);
    }
  }

  if (g.csv()) {
    out << "n,resource,published,found,classes,acceptance,status\n";
  } else {
    char head[128];
    std::snprintf(head, sizeof head, "%-3s %-22s %9s %6s %7s %4s  %s\n", "n", "resource",
                  "published", "found", "classes", "acc", "status");
    out << head;
  }
  for (const Table1Row& row : table1_rows()) {
    const auto it = reports.find(row.resource);
    const std::string found = it == reports.end() ? "-" : std::to_string(it->second.recipes.size());
    std::string status = "not run";
    if (it != reports.end()) {
      status = it->second.recipes.size() == row.accessible ? "match" : "differs";
    }
    if (g.csv()) {
      out << row.n << ',' << row.resource << ',' << row.accessible << ',' << found << ','
          << row.classes << ',' << (row.acceptance ? "yes" : "no") << ',' << status << '\n';
    } else {
      char line[160];
      std::snprintf(line, sizeof line, "%-3zu %-22s %9zu %6s %7zu %4s  %s\n", row.n,
                    row.resource.c_str(), row.accessible, found.c_str(), row.classes,
                    row.acceptance ? "yes" : "", status.c_str());
      out << line;
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph-state classes and postselected linear-optical schemes", "psgraph"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for randomised commands")->capture_default_str();
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1, 256))
      ->capture_default_str();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();
  app.add_option("--max-order", g.max_order, "Largest graph order accepted")
      ->check(CLI::Range(static_cast<std::size_t>(Catalogue::kMinOrder), Catalogue::kMaxOrder))
      ->capture_default_str();

  std::function<int()> action;

  auto* catalogue = app.add_subcommand("catalogue", "Build the class catalogue of one order");
  std::size_t cat_n = 0;
  std::string cat_out;
  catalogue->add_option("--n", cat_n, "Graph order")->required()
      ->check(CLI::Range(static_cast<std::size_t>(Catalogue::kMinOrder), Catalogue::kMaxOrder));
  catalogue->add_option("--out", cat_out, "Output file (stdout when absent)");
  catalogue->callback([&] { action = [&] { return cmd_catalogue(cat_n, cat_out, g, out); }; });

  auto* classify_cmd = app.add_subcommand("classify", "Class id of a connected graph");
  std::string cls_graph, cls_cat;
  classify_cmd->add_option("--graph", cls_graph, "Graph as n;i-j,...")->required();
  classify_cmd->add_option("--catalogue", cls_cat, "Catalogue file");
  classify_cmd->callback([&] { action = [&] { return cmd_classify(cls_graph, cls_cat, g, out); }; });

  auto* check = app.add_subcommand("check", "Postselection verdict for a scheme file");
  std::string check_file, check_rule = "full";
  check->add_option("file", check_file, "Scheme file")->required();
  check->add_option("--rule", check_rule, "Single rule to apply")
      ->check(CLI::IsMember({"full", "gate-cycles", "paths", "parity", "nondegenerate", "oracle"}))
      ->capture_default_str();
  check->callback([&] { action = [&] { return cmd_check(check_file, check_rule, g, out); }; });

  auto* simulate = app.add_subcommand("simulate", "Fock simulation of a circuit or scheme file");
  std::string sim_file;
  bool sim_scheme = false;
  simulate->add_option("file", sim_file, "Circuit file")->required();
  simulate->add_flag("--scheme", sim_scheme, "Treat the file as a scheme");
  simulate->callback([&] { action = [&] { return cmd_simulate(sim_file, sim_scheme, g, out); }; });

  auto* explore = app.add_subcommand("explore", "Monte-Carlo search for accessible classes");
  ExploreArgs ex;
  explore->add_option("--resource", ex.resource, "e.g. 2xND-EPP,1xSINGLE")->required();
  explore->add_option("--catalogue", ex.catalogue, "Catalogue file");
  explore->add_option("--d", ex.d, "Convergence parameter in (0,1)")->capture_default_str();
  explore->add_option("--min-iterations", ex.min_iterations)->capture_default_str();
  explore->add_option("--max-iterations", ex.max_iterations)->capture_default_str();
  explore->add_option("--out", ex.out, "Report file (stdout when absent)");
  explore->callback([&] { action = [&] { return cmd_explore(ex, g, out); }; });

  auto* recipe = app.add_subcommand("recipe", "Recipe for a tree, or one class from a report");
  std::string rec_graph, rec_report;
  std::size_t rec_class = 0;
  auto* rec_graph_opt = recipe->add_option("--graph", rec_graph, "Tree as n;i-j,...");
  auto* rec_report_opt = recipe->add_option("--report", rec_report, "Exploration report");
  rec_graph_opt->excludes(rec_report_opt);
  recipe->add_option("--class", rec_class, "Class id (with --report)")->needs(rec_report_opt);
  recipe->callback([&] {
    if (rec_graph.empty() && rec_report.empty()) {
      throw CLI::RequiredError("recipe needs --graph or --report");
    }
    action = [&] { return cmd_recipe(rec_graph, rec_report, rec_class, g, out); };
  });

  auto* report = app.add_subcommand("report", "Summarise, verify or compare exploration reports");
  ReportArgs rep;
  report->add_option("files", rep.files, "Report files");
  report->add_flag("--verify", rep.verify, "Replay every recipe");
  report->add_flag("--compare-table1", rep.compare, "Counts beside the published table");
  report->add_flag("--run", rep.run, "Explore table rows that have no report");
  report->add_option("--max-n", rep.max_n, "Largest order explored with --run")
      ->capture_default_str();
  report->add_option("--max-iterations", rep.max_iterations)->capture_default_str();
  report->callback([&] { action = [&] { return cmd_report(rep, g, out); }; });

  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a.rfind("-", 0) == 0) {
      if (a.find('=') == std::string::npos && a != "--help" && a != "-h") ++k;
      continue;
    }
    if (app.get_subcommand_no_throw(a) == nullptr) {
      err << "unknown subcommand '" << a << "'\n";
      return kExitError;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    return action();
  } catch (const FileError& e) {
    err << "file error: " << e.what() << '\n';
  } catch (const GuardExceeded& e) {
    err << "guard exceeded: " << e.what() << '\n';
  } catch (const ModellingError& e) {
    err << "modelling error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "format error: " << e.what() << '\n';
  } catch (const InvalidArgument& e) {
    err << "invalid argument: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace psgraph::cli
