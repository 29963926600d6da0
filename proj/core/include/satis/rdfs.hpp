#pragma once

#include "satis/rdf.hpp"

namespace satis::rdf {

/// Returns `g` plus every triple derivable by subclass transitivity and by
/// type propagation along rdfs:subClassOf. Reflexive subclass edges are not
/// materialized; is_subclass handles reflexivity.
Graph rdfs_closure(const Graph& g);

/// Reflexive-transitive subsumption: true iff sub == sup or sup is
/// reachable from sub over rdfs:subClassOf edges. Works on open and closed
/// graphs alike; IRIs absent from `g` are classes with no superclasses.
bool is_subclass(const Graph& g, const Term& sub, const Term& sup);

}  // namespace satis::rdf
