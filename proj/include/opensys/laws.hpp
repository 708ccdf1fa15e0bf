#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "opensys/cospan.hpp"
#include "opensys/random.hpp"

namespace opensys {

struct LawReport {
  explicit LawReport(std::string law = {}) : name(std::move(law)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// Description of the first failing case.
  std::string counterexample;

  bool passed() const { return failures == 0; }
  void record(bool ok, const std::string& what);
  /// As record, building the description only on the first failure.
  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++cases;
    if (!ok && failures++ == 0) counterexample = describe();
  }
  void merge(const LawReport& other);
};

// Finite sets.
LawReport check_pushout_commutes(std::size_t max_size);
/// Exactly one mediating map into every commuting cocone of size <= max_target.
LawReport check_pushout_universal(std::size_t max_size, std::size_t max_target);
/// Epi-mono outputs, and the unique diagonal for every commuting square.
LawReport check_factorisation(std::size_t max_size);
/// Monos are stable under pushout; coequalizers are epi.
LawReport check_mono_pushout_stability(std::size_t max_size);
LawReport check_coequalizer_epi(std::size_t max_size);

// Cospans and corelations.
LawReport check_cospan_category(std::size_t exhaustive_size, std::size_t random_size, std::size_t random_cases,
                                RandomObjects& gen);
LawReport check_frobenius_cospans(std::size_t max_size);
LawReport check_hypergraph_coherence(std::size_t max_size);
/// corelation_compose against cospan_compose followed by the E-part.
LawReport check_corelation_compose(FactSys system, std::size_t max_foot, std::size_t max_apex, std::size_t cases,
                                   RandomObjects& gen);

// Decorated corelations.
LawReport check_graph_decorated_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen);
LawReport check_dynam_decorated_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen);
/// The hypergraph functor of (id, double_edges) on the graph instance.
LawReport check_decdata_functor(std::size_t max_size, std::size_t cases, RandomObjects& gen);

// Left Kan extension.
LawReport check_lan_functor_laws(std::size_t max_size, std::size_t cases, RandomObjects& gen);
/// Decorated-corelation composition against Lan-element composition, over
/// every corelation with feet and apex <= max_size and decorations of at
/// most one edge.
LawReport check_kan_oracle_exhaustive(std::size_t max_size);
LawReport check_kan_oracle_random(std::size_t size, std::size_t cases, RandomObjects& gen);
/// apply_decdata_morphism against kan_on_morphism.
LawReport check_kan_morphisms_exhaustive(std::size_t max_size);
LawReport check_kan_morphisms_random(std::size_t size, std::size_t cases, RandomObjects& gen);

// Polynomial fields.
LawReport check_polynomial_ring(std::size_t cases, RandomObjects& gen);
/// D(id) = id and D(g f) = D(g) D(f) for all maps between sets of size <=
/// max_species and all fields of at most two unit monomials of degree <= 2.
LawReport check_dynam_functoriality(std::size_t max_species);
LawReport check_laxator_naturality(std::size_t max_size, std::size_t cases, RandomObjects& gen);

// Relations.
LawReport check_relation_frobenius();
/// Unit laws and frob_of_cospan agreement for every term built from at most
/// `depth` generators of {mu, eta, delta, epsilon, id, swap}; associativity
/// and interchange over generators; `deep_cases` random terms nested
/// `depth` deep.
LawReport check_relation_terms(std::size_t depth, std::size_t deep_cases, RandomObjects& gen);
LawReport check_frob_of_cospan_functor(std::size_t max_size, std::size_t cases, RandomObjects& gen);
LawReport check_frobenius_relations_of_cospans(std::size_t max_size);

// Black box.
/// Frob(f) Gr(v) = Gr(f_* v f^*) for linear v: every coefficient matrix in
/// {-2..2} for |X| <= exhaustive_size, `random_cases` matrices above that,
/// all f with |X|, |Y| <= max_size.
LawReport check_alpha_naturality_linear(std::size_t max_size, std::size_t exhaustive_size, std::size_t random_cases,
                                        RandomObjects& gen);
LawReport check_alpha_naturality_sampled(std::size_t fields, std::size_t points, double tolerance,
                                         RandomObjects& gen);
LawReport check_blackbox_linear(std::size_t cases, RandomObjects& gen);
LawReport check_blackbox_mass_action(std::size_t cases, std::size_t samples, double tolerance, RandomObjects& gen);
/// Both black-box routes agree; identities, tensors and Frobenius lifts are
/// preserved.
LawReport check_blackbox_structure(std::size_t max_size, std::size_t cases, RandomObjects& gen);
/// Every solver witness is a member.
LawReport check_solver_witnesses(std::size_t cases, RandomObjects& gen);

struct LawSuiteOptions {
  std::size_t size = 2;
  std::uint64_t seed = 1;
};

/// Every law at the given size bound (sizes above 3 are clamped where the
/// check is exhaustive).
std::vector<LawReport> run_law_suite(const LawSuiteOptions& options);

}  // namespace opensys
