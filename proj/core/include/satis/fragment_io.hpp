#pragma once

#include <string_view>
#include <vector>

#include "satis/fragment.hpp"
#include "satis/rdf.hpp"

namespace satis {

/// Concept-name resolution context for the fragment DSL: bare names
/// resolve against the ontology by unique local name, prefixed names
/// through `prefixes`, and <...> IRIs stand as written.
struct NameContext {
  const rdf::Graph* ontology = nullptr;
  rdf::PrefixMap prefixes;

  /// Resolves a concept name to an IRI. Throws Error(UnknownConcept) for
  /// unknown or ambiguous bare names and Error(UnknownPrefix).
  std::string resolve(std::string_view name) const;
};

/// Parses a line-oriented fragment file:
///
///   fragment <id>
///     kind: operational | intentional
///     author: <text>            # optional
///     created: <text>           # optional
///     signature:
///       source: start | intention(<Verb>|*, <Object>|*)
///       target: intention(<Verb>, <Object>[, <role>=<Concept>...])
///       strategy: <Manner> | anonymous
///     body:
///       query: << ... >>                                    # operational
///       map: section <id>: <src> -> <tgt> via <Manner|anonymous>
///
/// Several fragment blocks may share one file. Throws Error(Syntax) with
/// line positions, plus resolution errors from NameContext.
std::vector<Fragment> parse_fragment_dsl(std::string_view text, const NameContext& ctx);

/// Reads satis:Fragment nodes: satis:id, satis:kind, satis:hasSignature
/// (a map:Section node), and satis:bodyQuery (query text literal) or
/// satis:bodyMap (a map:Map node).
std::vector<Fragment> fragments_from_rdf(const rdf::Graph& g);

}  // namespace satis
