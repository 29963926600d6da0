#pragma once

// Seeded random generators for property tests. Everything draws from small
// pools so joins, subsumption chains and matches actually happen.

#include <random>
#include <string>
#include <vector>

#include "satis/map_model.hpp"
#include "satis/rdf.hpp"
#include "satis/sparql.hpp"

namespace satis::testing {

using Rng = std::mt19937;

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(Rng& rng, double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

/// "http://test.example/ns#<stem><k>" pools.
std::vector<rdf::Term> iri_pool(const std::string& stem, int count);

/// Random graph over small IRI pools; `with_literals` adds label-style
/// literal objects, `with_blanks` blank subjects/objects.
rdf::Graph random_graph(Rng& rng, int max_triples, bool with_literals = false,
                        bool with_blanks = false);

/// Random subclass graph (possibly cyclic) over `classes` classes, plus
/// rdf:type statements for instances.
rdf::Graph random_class_graph(Rng& rng, int classes, int max_triples);

/// Random acyclic subclass forest over `classes` classes (edges only go
/// from higher index to lower, so it is a DAG).
rdf::Graph random_class_dag(Rng& rng, int classes);

/// Random select query with up to `max_patterns` patterns and
/// `max_filters` filters, with every filter variable pattern-bound.
/// Constants come from the same pools as random_graph / random_class_dag.
sparql::Query random_select_query(Rng& rng, int max_patterns, int max_filters);

/// Random valid acyclic map with at most `max_sections` sections.
Map random_map(Rng& rng, int max_sections);

/// Random intention over the domain pools (possibly wildcarded, with
/// parameters).
Intention random_intention(Rng& rng, bool allow_wildcards);

/// Random section with an ordinary concrete target.
Section random_section(Rng& rng);

}  // namespace satis::testing
