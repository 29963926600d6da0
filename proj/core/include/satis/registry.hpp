#pragma once

#include <optional>
#include <string>
#include <vector>

#include "satis/rdf.hpp"

namespace satis {

/// Profile view of one service: identity plus the domain concepts it
/// consumes and produces.
struct ServiceDescription {
  std::string iri;
  std::vector<std::string> inputs;   // concept IRIs, sorted
  std::vector<std::string> outputs;  // concept IRIs, sorted
  std::optional<std::string> label;

  bool operator==(const ServiceDescription&) const = default;
};

struct IngestIssue {
  ErrorKind kind = ErrorKind::UnknownConcept;
  std::string service;
  std::string message;

  bool operator==(const IngestIssue&) const = default;
};

/// Validated service descriptions plus the canonical data graph queries run
/// against. The data graph is rebuilt from the descriptions, so it holds
/// exactly the hasInput / hasOutput / label / type triples they imply.
class Registry {
 public:
  Registry() = default;

  /// Scans `g` for subjects carrying process:hasInput / process:hasOutput
  /// triples (or typed process:Service) and validates each against the
  /// ontology. A service referencing an undeclared concept is rejected as
  /// an issue; the rest of the batch is unaffected.
  static Registry ingest(const rdf::Graph& g, const rdf::Graph& ontology);

  const std::vector<ServiceDescription>& services() const { return services_; }
  const rdf::Graph& data() const { return data_; }
  const std::vector<IngestIssue>& issues() const { return issues_; }

  const ServiceDescription* find(const std::string& iri) const;

  /// Snapshot without the named service; all its triples are gone,
  /// everything else is untouched. Throws Error(NotFound).
  Registry without(const std::string& service_iri) const;

  bool operator==(const Registry& other) const {
    return services_ == other.services_ && data_ == other.data_;
  }

 private:
  void rebuild_data();

  std::vector<ServiceDescription> services_;  // sorted by iri
  rdf::Graph data_;
  std::vector<IngestIssue> issues_;
};

/// True when the ontology mentions `iri` at all (as a subject or object).
bool ontology_declares(const rdf::Graph& ontology, const std::string& iri);

}  // namespace satis
