#pragma once

// Independent reference implementations the engine is checked against.
// Everything here is deliberately naive: fixpoint loops, exhaustive
// enumeration, plain recursion. None of it shares code with the engine
// paths it verifies.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "satis/fragment.hpp"
#include "satis/map_model.hpp"
#include "satis/rdf.hpp"
#include "satis/registry.hpp"
#include "satis/sparql.hpp"

namespace satis::testing {

/// Subclass-transitivity and type-propagation fixpoint: repeat both rules
/// until nothing changes. Reflexive subclass conclusions are skipped, as
/// the engine never materializes them.
rdf::Graph naive_closure(const rdf::Graph& g);

/// Breadth-first reachability over explicit rdfs:subClassOf edges,
/// reflexive.
bool naive_is_subclass(const rdf::Graph& g, const rdf::Term& sub, const rdf::Term& sup);

/// Exhaustive pattern matching: tries every triple of the graph against
/// the pattern.
std::vector<rdf::Bindings> naive_match(const rdf::Graph& g, const rdf::Triple& pattern,
                                       const rdf::Bindings& seed);

/// Exhaustive select evaluation: enumerates every assignment of graph
/// triples to patterns, keeps the consistent ones, applies the filters,
/// projects, deduplicates and sorts.
std::vector<rdf::Bindings> naive_select(const sparql::Query& q, const rdf::Graph& data,
                                        const rdf::Graph& ontology);

/// All simple start-to-stop section sequences by plain recursion.
std::vector<std::vector<Section>> naive_paths(const Map& m);

/// Brute-force goal resolution used against the render engine: explores
/// every fragment whose signature covers the goal (matching re-implemented
/// here), evaluates operational bodies with naive_select and recurses into
/// intentional bodies up to `depth`, cutting structurally repeated goals
/// on the stack. nullopt means no proof; an empty set is a proof that
/// needs no services.
std::optional<std::set<std::string>> naive_render_proof(
    const Section& goal, int depth, std::vector<Section>& stack,
    const std::vector<const Fragment*>& fragments, const rdf::Graph& service_data,
    const rdf::Graph& ontology);

/// Convenience wrapper: the proven service set, empty when unproven.
std::set<std::string> naive_render_services(const Section& goal, int depth,
                                            const std::vector<const Fragment*>& fragments,
                                            const rdf::Graph& service_data,
                                            const rdf::Graph& ontology);

}  // namespace satis::testing
