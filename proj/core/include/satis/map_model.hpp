#pragma once

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "satis/rdf.hpp"

namespace satis {

/// A domain concept IRI or the open wildcard (anyVerb / anyObject).
class ConceptRef {
 public:
  ConceptRef() = default;

  static ConceptRef any() { return ConceptRef(); }
  static ConceptRef of(std::string iri) {
    ConceptRef r;
    r.iri_ = std::move(iri);
    return r;
  }

  bool is_wildcard() const { return iri_.empty(); }
  const std::string& iri() const { return iri_; }

  auto operator<=>(const ConceptRef&) const = default;

 private:
  std::string iri_;  // empty means wildcard
};

enum class IntentionKind { Ordinary, Start, Stop };

struct Parameter {
  std::string role;
  std::string concept_iri;

  auto operator<=>(const Parameter&) const = default;
};

/// A goal statement: a verb applied to an object, optionally qualified by
/// named parameters. Start and Stop are the two special process endpoints;
/// they carry wildcards and no parameters. Identity is structural.
struct Intention {
  IntentionKind kind = IntentionKind::Ordinary;
  ConceptRef verb;
  ConceptRef object;
  std::vector<Parameter> parameters;  // kept sorted and deduplicated

  static Intention start() { return {IntentionKind::Start, {}, {}, {}}; }
  static Intention stop() { return {IntentionKind::Stop, {}, {}, {}}; }
  static Intention of(std::string verb_iri, std::string object_iri,
                      std::vector<Parameter> params = {});

  bool is_start() const { return kind == IntentionKind::Start; }
  bool is_stop() const { return kind == IntentionKind::Stop; }

  auto operator<=>(const Intention&) const = default;
};

struct Strategy {
  std::optional<std::string> manner;

  static Strategy anonymous() { return {}; }
  static Strategy by(std::string manner_iri) { return {std::move(manner_iri)}; }

  bool is_anonymous() const { return !manner.has_value(); }

  auto operator<=>(const Strategy&) const = default;
};

/// One map edge: source intention, target intention and the strategy that
/// moves between them. A target is never Start; a source is never Stop.
struct Section {
  Intention source;
  Intention target;
  Strategy strategy;

  auto operator<=>(const Section&) const = default;
};

/// A process map: a set of sections over shared intentions, with one Start
/// and one Stop node and every intention on a Start-to-Stop path.
struct Map {
  std::string name;
  std::set<Section> sections;

  bool operator==(const Map&) const = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks the map invariants; one violation entry per problem found. A
/// directed cycle is reported as a violation because path extraction and
/// rule compilation require acyclic maps.
ValidationReport validate_map(const Map& m);

/// Every simple Start-to-Stop path as an ordered section sequence, in
/// deterministic order. Throws Error(CyclicMap) when the section graph has
/// a directed cycle.
std::vector<std::vector<Section>> paths(const Map& m);

/// Wildcard-and-subsumption matching: `general` matches `specific` iff the
/// verb is wildcard or equal, the object is wildcard or subsumes
/// specific's object, and every parameter of `general` appears in
/// `specific` with the same role and a subsumed-or-equal concept.
bool intention_matches(const Intention& general, const Intention& specific,
                       const rdf::Graph& ontology);

std::string to_string(const Intention& i);
std::string to_string(const Strategy& s);
/// "source -[manner]-> target" (manner `anon` when anonymous).
std::string to_string(const Section& s);

}  // namespace satis
