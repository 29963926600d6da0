#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "satis/map_model.hpp"
#include "satis/rdf.hpp"
#include "satis/sparql.hpp"

namespace satis {

enum class FragmentKind { Operational, Intentional };

std::string_view to_string(FragmentKind kind);

struct Provenance {
  std::string author;
  std::string created;  // opaque; never machine-generated

  bool operator==(const Provenance&) const = default;
};

/// A reusable unit of search know-how. The signature (a section) says when
/// the fragment applies; the body says how to proceed: a service query for
/// operational fragments, a refinement map for intentional ones.
struct Fragment {
  std::string id;
  FragmentKind kind = FragmentKind::Operational;
  Section signature;
  std::variant<sparql::Query, Map> body;
  Provenance provenance;

  const sparql::Query& query() const { return std::get<sparql::Query>(body); }
  const Map& body_map() const { return std::get<Map>(body); }

  bool operator==(const Fragment&) const = default;
};

/// True iff the fragment's signature covers the goal: the target matches
/// (wildcard/subsumption semantics), the source is the open start context
/// or matches the goal's source, and the strategies agree (an anonymous
/// strategy on either side matches anything).
bool signature_matches(const Fragment& f, const Section& goal, const rdf::Graph& ontology);

/// Id-indexed fragment store with a (target verb, target object) index.
class Catalog {
 public:
  /// Validates and stores a fragment. Throws Error(DuplicateId),
  /// Error(InvalidSignature) for wildcard or non-ordinary targets and
  /// invalid bodies, Error(CyclicMap) for cyclic intentional bodies, and
  /// Error(UnknownConcept) for concepts the ontology does not declare.
  void add(Fragment f, const rdf::Graph& ontology);

  const Fragment* find(const std::string& id) const;
  std::size_t size() const { return fragments_.size(); }
  bool empty() const { return fragments_.empty(); }

  /// Fragments in id order.
  std::vector<const Fragment*> all() const;

  /// All fragments whose signature matches the goal, most specific first:
  /// source+strategy, then strategy only, then source only, then target
  /// only; ties break by id.
  std::vector<const Fragment*> matching(const Section& goal, const rdf::Graph& ontology) const;

  /// Flat view of the target index for consistency checks.
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> index_entries() const;

 private:
  std::map<std::string, Fragment> fragments_;
  // (target verb iri, target object iri) -> fragment ids
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> target_index_;
};

/// Compiles a fragment to backward-chaining rules rendered as construct
/// queries: the template asserts that the signature section is achieved by
/// the body's results, the where clause is the operational body query or,
/// per start-to-stop path of an intentional body, one achievement premise
/// per path section (one rule per path). Every returned string parses back
/// through parse_query. `extra_prefixes` only compacts the output; body
/// prefixes win on collision. Throws Error(CyclicMap) for cyclic bodies.
std::vector<std::string> compile_to_rule(const Fragment& f,
                                         const rdf::PrefixMap& extra_prefixes = {});

/// File name for an exported rule: "<id>.<pathIndex>.rq".
std::string rule_filename(const Fragment& f, std::size_t path_index);

}  // namespace satis
