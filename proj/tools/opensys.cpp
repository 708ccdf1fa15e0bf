#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opensys/acceptance.hpp"
#include "opensys/blackbox.hpp"
#include "opensys/dsl.hpp"
#include "opensys/error.hpp"
#include "opensys/laws.hpp"
#include "opensys/serialize.hpp"
#include "opensys/solver.hpp"

namespace {

using namespace opensys;
using json = nlohmann::ordered_json;

enum Exit { Ok = 0, Usage = 1, Parse = 2, Math = 3, LawFailure = 4 };

struct UsageError : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OpenSystem load_system(const std::string& file, const std::string& name) {
  NetworkDocument doc = parse_document(read_file(file));
  if (!doc.find_network(name) && !doc.find_composition(name)) {
    throw UsageError("no network or composition named '" + name + "' in " + file);
  }
  return evaluate(doc, name);
}

// "name=value" with an exact rational value.
std::pair<std::size_t, Rational> assignment(const ConstraintRelation& r, const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos) throw FormatError("expected name=value, got '" + text + "'");
  std::string name = text.substr(0, eq);
  auto k = r.find_variable(name);
  if (!k) throw UsageError("relation has no variable '" + name + "'");
  try {
    return {*k, parse_rational(text.substr(eq + 1))};
  } catch (const InvalidValue& e) {
    throw FormatError(e.what());
  }
}

json named(const ConstraintRelation& r, const std::vector<double>& values) {
  json out = json::object();
  for (std::size_t k = 0; k < values.size(); ++k) out[r.variable_name(k)] = values[k];
  return out;
}

json named(const ConstraintRelation& r, const std::vector<Rational>& values) {
  json out = json::object();
  for (std::size_t k = 0; k < values.size(); ++k) out[r.variable_name(k)] = to_string(values[k]);
  return out;
}

int cmd_compose(const std::string& file, const std::string& name, const std::string& format) {
  OpenSystem sys = load_system(file, name);
  if (format == "json") {
    std::cout << to_json(sys).dump(2) << "\n";
  } else {
    std::cout << to_text(sys);
  }
  return Ok;
}

int cmd_blackbox(const std::string& file, const std::string& name, const std::string& convention,
                 const std::string& format) {
  ConstraintRelation r = black_box(load_system(file, name));
  if (convention == "bp") r = to_outflow_convention(r);
  if (format == "json") {
    std::cout << to_json(r).dump(2) << "\n";
  } else {
    std::cout << to_text(r);
  }
  return Ok;
}

int cmd_solve(const std::string& file, const std::vector<std::string>& fixes, const std::vector<std::string>& guesses,
              bool allow_negative) {
  ConstraintRelation r = relation_from_json_text(read_file(file));
  std::map<std::size_t, Rational> fixed;
  for (const auto& f : fixes) fixed.insert(assignment(r, f));
  SolveOptions options;
  options.require_nonnegative_concentrations = !allow_negative;
  if (!guesses.empty()) {
    std::vector<double> seed(r.variable_count(), 1.0);
    for (const auto& g : guesses) {
      auto [k, v] = assignment(r, g);
      seed[k] = v.get_d();
    }
    options.seeds.push_back(std::move(seed));
  }
  SolveResult result = solve_steady_states(r, fixed, options);
  json out;
  out["exact"] = result.exact;
  if (result.exact) {
    out["particular"] = named(r, result.particular);
    json directions = json::array();
    for (const auto& b : result.basis) directions.push_back(named(r, b));
    out["directions"] = directions;
  }
  json witnesses = json::array();
  for (const auto& w : result.witnesses) witnesses.push_back(named(r, w.values));
  out["witnesses"] = witnesses;
  out["residual"] = result.best_residual;
  std::cout << out.dump(2) << "\n";
  return Ok;
}

int cmd_check_laws(std::size_t size, std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : run_law_suite({size, seed})) {
    if (r.passed()) {
      std::cout << "ok   " << r.name << " (" << r.cases << " cases)\n";
    } else {
      ok = false;
      std::cout << "FAIL " << r.name << " (" << r.failures << " of " << r.cases << " cases)\n"
                << "     counterexample: " << r.counterexample << "\n";
    }
  }
  std::cout << (ok ? "all laws hold" : "law failures found") << "\n";
  return ok ? Ok : LawFailure;
}

int cmd_selftest(const std::string& data_dir, std::uint64_t seed) {
  bool ok = true;
  for (const auto& r : run_acceptance(data_dir, seed)) {
    std::cout << format(r) << std::endl;
    ok = ok && r.passed;
  }
  return ok ? Ok : LawFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compose open reaction networks and compute their steady-state black boxes."};
  app.require_subcommand(1);

  std::string file, name, format = "text", convention = "native", data_dir = OPENSYS_DATA_DIR;
  std::vector<std::string> fixes, guesses;
  bool allow_negative = false;
  std::size_t size = 2;
  std::uint64_t seed = 1;

  auto* compose = app.add_subcommand("compose", "Print the open system named by a network or composition.");
  compose->add_option("file", file, "Network document")->required();
  compose->add_option("name", name, "Network or composition name")->required();
  compose->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* blackbox = app.add_subcommand("blackbox", "Print the steady-state relation of an open system.");
  blackbox->add_option("file", file, "Network document")->required();
  blackbox->add_option("name", name, "Network or composition name")->required();
  blackbox->add_option("--convention", convention, "Flow sign convention")
      ->check(CLI::IsMember({"native", "bp"}));
  blackbox->add_option("--out", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* solve = app.add_subcommand("solve", "Find steady states of a relation with some variables fixed.");
  solve->add_option("relation", file, "Relation JSON as written by blackbox --out json")->required();
  solve->add_option("--fix", fixes, "Fixed variable, name=value")->allow_extra_args();
  solve->add_option("--guess", guesses, "Starting value, name=value (others start at 1)")->allow_extra_args();
  solve->add_flag("--allow-negative", allow_negative, "Keep steady states with negative concentrations");

  auto* laws = app.add_subcommand("check-laws", "Run the law checks and report counterexamples.");
  laws->add_option("--size", size, "Size bound for the checks")->check(CLI::Range(1, 3));
  laws->add_option("--seed", seed, "Random seed");

  auto* selftest = app.add_subcommand("selftest", "Run the acceptance checks.");
  selftest->add_option("--data", data_dir, "Directory holding decay.net and intro.net");
  selftest->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? Ok : Usage;
  }

  try {
    if (*compose) return cmd_compose(file, name, format);
    if (*blackbox) {
      if (!blackbox->count("--out")) format = "json";
      return cmd_blackbox(file, name, convention, format);
    }
    if (*solve) return cmd_solve(file, fixes, guesses, allow_negative);
    if (*laws) return cmd_check_laws(size, seed);
    if (*selftest) return cmd_selftest(data_dir, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return Parse;
  } catch (const FormatError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return Parse;
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Math;
  }
  return Usage;
}
