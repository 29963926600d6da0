#pragma once

#include "satis/map_model.hpp"
#include "satis/rdf.hpp"

namespace satis {

/// Emits a section as map-ontology triples: a map:Section node with
/// hasSource / hasTarget / hasStrategy, intentions with hasVerb /
/// hasObject (wildcards as map:anyVerb / map:anyObject) and parameters as
/// hasParameter nodes. Anonymous strategies omit hasManner.
rdf::Graph section_to_rdf(const Section& s);

/// Reads a map:Section node back. Accepts any IRI whose local name is
/// anyVerb / anyObject (case-insensitive) as the wildcard, so datasets may
/// keep the wildcards in their own namespace. Throws
/// Error(MalformedSection) listing what is missing.
Section rdf_to_section(const rdf::Graph& g, const rdf::Term& node);

/// A map as a map:Map node with rdfs:label and hasSection links; section
/// nodes share intention nodes.
rdf::Graph map_to_rdf(const Map& m);

Map rdf_to_map(const rdf::Graph& g, const rdf::Term& node);

/// Subjects typed map:Map / map:Section, in term order.
std::vector<rdf::Term> find_map_nodes(const rdf::Graph& g);
std::vector<rdf::Term> find_section_nodes(const rdf::Graph& g);

}  // namespace satis
