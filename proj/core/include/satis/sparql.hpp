#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "satis/rdf.hpp"

namespace satis::sparql {

enum class QueryForm { Select, Construct };

/// Filter operators: `=` is term equality, `=:` requires an IRI equal to
/// the constant, `<=:` is reflexive-transitive subsumption against the
/// ontology graph.
enum class FilterOp { Equal, IriEqual, SubclassOf };

std::string_view to_string(FilterOp op);

struct Filter {
  std::string variable;
  FilterOp op = FilterOp::Equal;
  rdf::Term constant;

  bool operator==(const Filter&) const = default;
};

/// A where-clause element: a triple pattern or a filter.
using PatternElement = std::variant<rdf::Triple, Filter>;

struct Query {
  QueryForm form = QueryForm::Select;
  std::vector<std::string> projection;            // Select
  std::vector<rdf::Triple> construct_template;    // Construct
  rdf::PrefixMap prefixes;
  std::vector<PatternElement> where;

  bool operator==(const Query&) const = default;
};

/// Evaluation result. `rows` is populated for Select (deduplicated, sorted);
/// `graph` for Construct.
struct ResultSet {
  std::vector<rdf::Bindings> rows;
  rdf::Graph graph;

  bool operator==(const ResultSet&) const = default;
};

/// Parses the query subset: `prefix` declarations, `select ?v...` or
/// `construct { ... }`, `where { ... }` with triple patterns (trailing `.`
/// optional) and `filter(?v OP constant)`. Keywords are case-insensitive.
/// Throws Error(Syntax | UnknownPrefix | UnboundFilterVariable).
Query parse_query(std::string_view text);

/// Emits a query that parse_query reads back to a structurally equal value.
std::string serialize_query(const Query& q);

/// Basic graph pattern join over `data`; `ontology` backs `<=:` filters.
/// Filters on literal bindings throw Error(TypeMismatch). Construct
/// instantiates the template once per solution; template blank nodes are
/// freshened per solution.
ResultSet evaluate(const Query& q, const rdf::Graph& data, const rdf::Graph& ontology);

}  // namespace satis::sparql
