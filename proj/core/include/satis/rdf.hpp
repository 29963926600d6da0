#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "satis/error.hpp"

namespace satis::rdf {

enum class TermKind { Iri, Blank, Literal, Variable };

/// One RDF node. `text` carries the full IRI, the blank-node label, the
/// literal value or the variable name depending on `kind`. Variables are
/// only legal inside patterns; a Graph never stores them.
struct Term {
  TermKind kind = TermKind::Iri;
  std::string text;

  static Term iri(std::string value) { return {TermKind::Iri, std::move(value)}; }
  static Term blank(std::string label) { return {TermKind::Blank, std::move(label)}; }
  static Term literal(std::string value) { return {TermKind::Literal, std::move(value)}; }
  static Term variable(std::string name) { return {TermKind::Variable, std::move(name)}; }

  bool is_iri() const { return kind == TermKind::Iri; }
  bool is_blank() const { return kind == TermKind::Blank; }
  bool is_literal() const { return kind == TermKind::Literal; }
  bool is_variable() const { return kind == TermKind::Variable; }

  /// Serialized form: <iri>, _:label, "literal" (escaped) or ?name.
  std::string lexical() const;

  auto operator<=>(const Term&) const = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  bool ground() const {
    return !subject.is_variable() && !predicate.is_variable() && !object.is_variable();
  }

  auto operator<=>(const Triple&) const = default;
};

/// Variable name -> term. Ordered so that collections of bindings compare
/// and iterate deterministically.
using Bindings = std::map<std::string, Term>;

/// Prefix name -> namespace IRI.
using PrefixMap = std::map<std::string, std::string>;

/// Replaces variables bound in `b`; unbound variables are left in place.
Triple substitute(const Triple& pattern, const Bindings& b);

/// Escapes a literal value for serialization (\\, \", \n, \t, \r).
std::string escape_literal(std::string_view value);

/// In-memory triple set with set semantics and a deterministic iteration
/// order (subject, predicate, object). Prefixes are presentation metadata
/// and do not participate in equality.
class Graph {
 public:
  /// Throws VariableInData if `t` contains a variable. Duplicate inserts
  /// are no-ops.
  void insert(Triple t);

  /// Inserts every triple of `other`. Blank labels already used by this
  /// graph denote different nodes, so colliding labels from `other` are
  /// renamed to fresh ones (label_2, label_3, ...). Prefixes are merged;
  /// existing entries win.
  void merge(const Graph& other);

  bool contains(const Triple& t) const { return triples_.count(t) > 0; }
  std::size_t size() const { return triples_.size(); }
  bool empty() const { return triples_.empty(); }

  const std::set<Triple>& triples() const { return triples_; }
  auto begin() const { return triples_.begin(); }
  auto end() const { return triples_.end(); }

  void add_prefix(std::string name, std::string iri);
  const PrefixMap& prefixes() const { return prefixes_; }

  /// Objects o with (s, p, o) in the graph, in term order.
  std::vector<Term> objects(const Term& s, const Term& p) const;
  /// First object for (s, p, ?) or nullopt.
  std::optional<Term> object(const Term& s, const Term& p) const;
  /// Subjects s with (s, p, o) in the graph, in term order.
  std::vector<Term> subjects(const Term& p, const Term& o) const;

  /// Every extension of `seed` under which `pattern` instantiates to a
  /// triple of this graph. A repeated variable must unify with itself.
  std::vector<Bindings> match(const Triple& pattern, const Bindings& seed = {}) const;

  bool operator==(const Graph& other) const { return triples_ == other.triples_; }

 private:
  std::set<Triple> triples_;
  PrefixMap prefixes_;
};

/// Namespace IRIs used across the engine.
namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
/// The map ontology: intentional process vocabulary.
inline constexpr std::string_view map = "http://satis.example/map#";
/// Engine vocabulary (fragments, rule heads).
inline constexpr std::string_view satis = "http://satis.example/ns#";
/// Service profile vocabulary (hasInput / hasOutput).
inline constexpr std::string_view process = "http://satis.example/process#";
}  // namespace ns

namespace vocab {
const Term& rdf_type();
const Term& rdfs_subclass_of();
const Term& rdfs_label();
const Term& rdfs_class();

const Term& map_map();
const Term& map_section();
const Term& map_intention();
const Term& map_start();
const Term& map_stop();
const Term& map_strategy();
const Term& map_has_section();
const Term& map_has_source();
const Term& map_has_target();
const Term& map_has_strategy();
const Term& map_has_verb();
const Term& map_has_object();
const Term& map_has_manner();
const Term& map_has_parameter();
const Term& map_has_role();
const Term& map_has_concept();
const Term& map_any_verb();
const Term& map_any_object();

const Term& satis_fragment();
const Term& satis_id();
const Term& satis_author();
const Term& satis_created();
const Term& satis_kind();
const Term& satis_has_signature();
const Term& satis_body_query();
const Term& satis_body_map();
const Term& satis_achieved_by();

const Term& process_service();
const Term& process_has_input();
const Term& process_has_output();
}  // namespace vocab

/// Local name of an IRI: the part after the last '#' or '/'.
std::string_view local_name(std::string_view iri);

}  // namespace satis::rdf
