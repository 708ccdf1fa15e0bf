#include "opensys/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "opensys/blackbox.hpp"
#include "opensys/dsl.hpp"
#include "opensys/error.hpp"
#include "opensys/laws.hpp"
#include "opensys/serialize.hpp"
#include "opensys/solver.hpp"

namespace opensys {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from_reports(const std::vector<LawReport>& reports) {
  Outcome out{true, ""};
  std::size_t cases = 0;
  for (const auto& r : reports) {
    cases += r.cases;
    if (!r.passed() && out.passed) {
      out.passed = false;
      out.detail = r.name + ": " + std::to_string(r.failures) + " failures, first at " + r.counterexample;
    }
  }
  if (out.passed) out.detail = std::to_string(cases) + " cases, 0 failures";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

OpenSystem load(const std::string& path, const std::string& name) {
  return evaluate(parse_document(read_file(path)), name);
}

Polynomial var(const ConstraintRelation& r, const std::string& name) {
  return Polynomial::variable(r.variable_count(), *r.find_variable(name));
}

// The chain A + B -> 2 C, C -> D at unit rates, three inputs and
// one output.
Outcome intro_witness(const std::string& data_dir) {
  ConstraintRelation r = black_box(load(data_dir + "/intro.net", "main"));
  // Balance at A: -cA cB = I_a1 + I_a2; at B: -cA cB = I_b; at C: 2 cA cB - cC = 0;
  // at D: cC = O_d. With cA = cB = 1 this gives cC = 2, I_b = -1, O_d = 2,
  // and I_a1 = I_a2 = -1/2 after splitting the inflow at A evenly.
  const std::map<std::string, Rational> witness = {
      {"cL.a1", 1},           {"cL.a2", 1},           {"cL.b", 1},  {"fL.a1", Rational(-1, 2)},
      {"fL.a2", Rational(-1, 2)}, {"fL.b", -1},        {"cR.d", 2},  {"fR.d", 2},
      {"z.A", 1},             {"z.B", 1},             {"z.C", 2},   {"z.D", 2}};
  if (r.variable_count() != witness.size()) {
    return {false, "expected 12 variables, black box has " + std::to_string(r.variable_count())};
  }
  std::vector<Rational> point(r.variable_count());
  for (const auto& [name, value] : witness) {
    auto k = r.find_variable(name);
    if (!k) return {false, "black box has no variable " + name};
    point[*k] = value;
  }
  const std::size_t nb = r.boundary_variable_count();
  std::span<const Rational> all(point);
  Membership m = is_member(r, all.first(nb), all.subspan(nb));
  if (m != Membership::Member) return {false, "hand witness is " + std::string(to_string(m))};

  // Solve with the boundary concentrations and one inflow fixed, from a
  // perturbed seed.
  std::map<std::size_t, Rational> fixed;
  for (const char* name : {"cL.a1", "cL.a2", "cL.b", "cR.d", "fL.a1"}) fixed[*r.find_variable(name)] = witness.at(name);
  SolveOptions options;
  std::vector<double> seed(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) seed[k] = point[k].get_d() + (k % 2 ? 0.07 : -0.05);
  options.seeds = {seed};
  SolveResult solved = solve_steady_states(r, fixed, options);
  if (solved.witnesses.empty()) return {false, "solver returned no witness"};
  double worst = 0.0;
  for (std::size_t k = 0; k < point.size(); ++k) {
    worst = std::max(worst, std::abs(solved.witnesses.front().values[k] - point[k].get_d()));
  }
  std::ostringstream os;
  os << "Member; solver reproduces the witness with max deviation " << std::scientific << std::setprecision(2) << worst;
  return {worst <= 1e-9, os.str()};
}

Outcome decay_regression(const std::string& data_dir) {
  OpenSystem sys = load(data_dir + "/decay.net", "main");
  ConstraintRelation native = black_box(sys);
  if (native.left().size() != 1 || native.right().size() != 1 || native.internal().size() != 1) {
    return {false, "expected one input, one output and one internal"};
  }
  const ConstraintRelation& r = native;
  Polynomial c = var(r, "cL.x"), c2 = var(r, "cR.y"), i = var(r, "fL.x"), o = var(r, "fR.y"), z = var(r, "z.A");
  ConstraintRelation expected(r.left(), r.right(), r.internal(), {c - z, c2 - z, -z - i - o}, {},
                              {VariableKind::Concentration});
  if (!(native == expected)) return {false, "native relation differs:\n" + to_text(native)};
  if (!(black_box_via_decorations(sys).is_linear() && same_linear_relation(black_box_via_decorations(sys), native))) {
    return {false, "decoration route disagrees"};
  }
  ConstraintRelation bp = to_outflow_convention(native);
  ConstraintRelation expected_bp(r.left(), r.right(), r.internal(), {c - z, c2 - z, -z + i - o}, {},
                                 {VariableKind::Concentration});
  if (!(bp == expected_bp)) return {false, "bp relation differs:\n" + to_text(bp)};
  if (!(to_outflow_convention(bp) == native)) return {false, "flipping bp back does not give the native relation"};
  if (!(relation_from_json(to_json(native)) == native)) return {false, "JSON round trip changes the relation"};
  return {true, "native {c = c' = z, -z = I + O}, bp {-z + I - O = 0}"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& data_dir, std::uint64_t seed) {
  std::vector<CriterionResult> out;
  auto run = [&](int id, std::string title, double budget, const std::function<Outcome()>& body) {
    CriterionResult c;
    c.id = id;
    c.title = std::move(title);
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.passed = o.passed;
    c.detail = o.detail;
    if (budget > 0 && c.seconds >= budget) {
      c.passed = false;
      c.detail += "; over the " + std::to_string(static_cast<int>(budget)) + " s budget";
    }
    out.push_back(std::move(c));
  };

  run(1, "Frobenius axioms in Cospan(FinSet), |X| <= 3", 5.0,
      [] { return from_reports({check_frobenius_cospans(3), check_hypergraph_coherence(2)}); });
  run(2, "epi-mono factorisation and mono pushout stability, sizes <= 3", 0,
      [] { return from_reports({check_factorisation(3), check_mono_pushout_stability(3), check_pushout_commutes(3)}); });
  run(3, "corelation composition oracle, 500 random pairs per system", 0, [&] {
    RandomObjects gen(seed);
    std::vector<LawReport> reports;
    for (FactSys s : {FactSys::EpiMono, FactSys::AllIso, FactSys::IsoAll}) {
      reports.push_back(check_corelation_compose(s, 3, 4, 500, gen));
    }
    return from_reports(reports);
  });
  run(4, "Kan oracle: decorated corelations vs Lan elements", 0, [&] {
    RandomObjects gen(seed + 1);
    return from_reports({check_kan_oracle_exhaustive(2), check_kan_oracle_random(3, 200, gen),
                         check_kan_morphisms_exhaustive(2), check_kan_morphisms_random(3, 200, gen)});
  });
  run(5, "D is a functor, species <= 3", 0, [] { return from_reports({check_dynam_functoriality(3)}); });
  run(6, "linear relation laws over the generator closure, depth 3", 10.0, [&] {
    RandomObjects gen(seed + 2);
    return from_reports({check_relation_frobenius(), check_frobenius_relations_of_cospans(3),
                         check_relation_terms(3, 100, gen), check_frob_of_cospan_functor(3, 200, gen)});
  });
  run(7, "alpha naturality: exact linear, sampled degree 2", 0, [&] {
    RandomObjects gen(seed + 3);
    return from_reports({check_alpha_naturality_linear(3, 2, 200, gen), check_alpha_naturality_sampled(20, 50, 1e-9, gen)});
  });
  run(8, "black box preserves composition", 0, [&] {
    RandomObjects gen(seed + 4);
    return from_reports({check_blackbox_linear(100, gen), check_blackbox_mass_action(20, 25, 1e-9, gen)});
  });
  run(9, "intro network: hand witness is a member and is recovered by the solver", 0,
      [&] { return intro_witness(data_dir); });
  run(10, "decay regression", 0, [&] { return decay_regression(data_dir); });
  return out;
}

std::string format(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.title << " (" << r.detail << ", "
     << std::fixed << std::setprecision(2) << r.seconds << " s)";
  return os.str();
}

}  // namespace opensys
