#pragma once

#include <string>
#include <vector>

#include "satis/fragment.hpp"
#include "satis/fragment_io.hpp"
#include "satis/registry.hpp"

namespace satis {

struct LoadOptions {
  std::vector<std::string> ontology_files;
  std::vector<std::string> service_files;
  std::vector<std::string> fragment_files;  // .frag (DSL) or .ttl (RDF)
};

/// A fully loaded snapshot: closed ontology, ingested registry and fragment
/// catalog. Any problem during loading lands in `diagnostics`
/// (file:line:column: message); commands must not run on a workspace with
/// diagnostics.
struct Workspace {
  rdf::Graph ontology;      // closed under subclass entailment
  rdf::Graph ontology_raw;  // as loaded
  Registry registry;
  Catalog catalog;
  rdf::PrefixMap prefixes;  // union of all file prefixes
  std::size_t service_triples = 0;
  std::vector<std::string> diagnostics;

  static Workspace load(const LoadOptions& options);

  bool ok() const { return diagnostics.empty(); }

  /// Resolves a concept name (bare local name, prefixed name or <iri>)
  /// against the loaded ontology.
  std::string resolve_concept(const std::string& name) const;
};

/// Reads a whole file; throws Error(Io).
std::string read_file(const std::string& path);

}  // namespace satis
