#pragma once

#include <string>
#include <string_view>

#include "satis/rdf.hpp"

namespace satis::rdf {

/// Parses the supported Turtle subset: @prefix directives, statements with
/// `;` and `,` abbreviations, the `a` keyword, <iri> references, prefixed
/// names, blank nodes (_:label) and plain string literals. `#` starts a
/// comment. Throws Error(Syntax, line, column) on malformed input and
/// Error(UnknownPrefix) when a prefixed name uses an undeclared prefix.
/// `base_prefixes` seeds the prefix table; @prefix directives override it.
Graph parse_turtle(std::string_view text, const PrefixMap& base_prefixes = {});

/// Emits @prefix directives in alphabetical order, then one statement per
/// line in graph order. IRIs are compacted through the graph's prefixes
/// whenever the remainder is a valid local name; rdf:type prints as `a`.
std::string serialize_turtle(const Graph& g);

/// Compacts `iri` through `prefixes` (longest namespace wins) or falls
/// back to the <iri> form.
std::string compact_iri(const std::string& iri, const PrefixMap& prefixes);

}  // namespace satis::rdf
