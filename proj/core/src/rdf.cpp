#include "satis/rdf.hpp"

#include <algorithm>

namespace satis::rdf {

std::string escape_literal(std::string_view value) {
  std::string out;
  out.reserve(value.size());
  for (char c : value) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::lexical() const {
  switch (kind) {
    case TermKind::Iri: return "<" + text + ">";
    case TermKind::Blank: return "_:" + text;
    case TermKind::Literal: return "\"" + escape_literal(text) + "\"";
    case TermKind::Variable: return "?" + text;
  }
  return text;
}

Triple substitute(const Triple& pattern, const Bindings& b) {
  auto sub = [&b](const Term& t) {
    if (t.is_variable()) {
      auto it = b.find(t.text);
      if (it != b.end()) return it->second;
    }
    return t;
  };
  return {sub(pattern.subject), sub(pattern.predicate), sub(pattern.object)};
}

void Graph::insert(Triple t) {
  if (!t.ground()) {
    throw Error(ErrorKind::VariableInData,
                "cannot store a triple containing a variable: " + t.subject.lexical() + " " +
                    t.predicate.lexical() + " " + t.object.lexical());
  }
  triples_.insert(std::move(t));
}

void Graph::merge(const Graph& other) {
  // Blank labels are scoped to their source graph; a label collision does
  // not mean node identity. Rename the incoming label deterministically.
  std::set<std::string> mine;
  for (const Triple& t : triples_) {
    if (t.subject.is_blank()) mine.insert(t.subject.text);
    if (t.object.is_blank()) mine.insert(t.object.text);
  }
  std::set<std::string> theirs;
  for (const Triple& t : other.triples_) {
    if (t.subject.is_blank()) theirs.insert(t.subject.text);
    if (t.object.is_blank()) theirs.insert(t.object.text);
  }
  std::map<std::string, std::string> rename;
  for (const std::string& label : theirs) {
    if (!mine.count(label)) continue;
    for (int i = 2;; ++i) {
      std::string fresh = label + "_" + std::to_string(i);
      if (!mine.count(fresh) && !theirs.count(fresh)) {
        rename[label] = fresh;
        mine.insert(fresh);
        break;
      }
    }
  }
  auto mapped = [&rename](const Term& t) {
    if (t.is_blank()) {
      auto it = rename.find(t.text);
      if (it != rename.end()) return Term::blank(it->second);
    }
    return t;
  };
  for (const Triple& t : other.triples_) {
    triples_.insert({mapped(t.subject), mapped(t.predicate), mapped(t.object)});
  }
  for (const auto& [name, iri] : other.prefixes_) {
    prefixes_.emplace(name, iri);
  }
}

void Graph::add_prefix(std::string name, std::string iri) {
  prefixes_[std::move(name)] = std::move(iri);
}

std::vector<Term> Graph::objects(const Term& s, const Term& p) const {
  std::vector<Term> out;
  for (const Triple& t : triples_) {
    if (t.subject == s && t.predicate == p) out.push_back(t.object);
  }
  return out;
}

std::optional<Term> Graph::object(const Term& s, const Term& p) const {
  for (const Triple& t : triples_) {
    if (t.subject == s && t.predicate == p) return t.object;
  }
  return std::nullopt;
}

std::vector<Term> Graph::subjects(const Term& p, const Term& o) const {
  std::vector<Term> out;
  for (const Triple& t : triples_) {
    if (t.predicate == p && t.object == o) out.push_back(t.subject);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

bool unify(const Term& pattern, const Term& data, Bindings& b) {
  if (!pattern.is_variable()) return pattern == data;
  auto [it, inserted] = b.emplace(pattern.text, data);
  return inserted || it->second == data;
}

}  // namespace

std::vector<Bindings> Graph::match(const Triple& pattern, const Bindings& seed) const {
  Triple p = substitute(pattern, seed);
  std::vector<Bindings> out;
  for (const Triple& t : triples_) {
    Bindings b = seed;
    if (unify(p.subject, t.subject, b) && unify(p.predicate, t.predicate, b) &&
        unify(p.object, t.object, b)) {
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::string_view local_name(std::string_view iri) {
  auto pos = iri.find_last_of("#/");
  if (pos == std::string_view::npos) return iri;
  return iri.substr(pos + 1);
}

namespace vocab {

namespace {
Term make(std::string_view ns_iri, std::string_view local) {
  return Term::iri(std::string(ns_iri) + std::string(local));
}
}  // namespace

#define SATIS_VOCAB(fn, ns_iri, local)            \
  const Term& fn() {                              \
    static const Term t = make(ns_iri, local);    \
    return t;                                     \
  }

SATIS_VOCAB(rdf_type, ns::rdf, "type")
SATIS_VOCAB(rdfs_subclass_of, ns::rdfs, "subClassOf")
SATIS_VOCAB(rdfs_label, ns::rdfs, "label")
SATIS_VOCAB(rdfs_class, ns::rdfs, "Class")

SATIS_VOCAB(map_map, ns::map, "Map")
SATIS_VOCAB(map_section, ns::map, "Section")
SATIS_VOCAB(map_intention, ns::map, "Intention")
SATIS_VOCAB(map_start, ns::map, "Start")
SATIS_VOCAB(map_stop, ns::map, "Stop")
SATIS_VOCAB(map_strategy, ns::map, "Strategy")
SATIS_VOCAB(map_has_section, ns::map, "hasSection")
SATIS_VOCAB(map_has_source, ns::map, "hasSource")
SATIS_VOCAB(map_has_target, ns::map, "hasTarget")
SATIS_VOCAB(map_has_strategy, ns::map, "hasStrategy")
SATIS_VOCAB(map_has_verb, ns::map, "hasVerb")
SATIS_VOCAB(map_has_object, ns::map, "hasObject")
SATIS_VOCAB(map_has_manner, ns::map, "hasManner")
SATIS_VOCAB(map_has_parameter, ns::map, "hasParameter")
SATIS_VOCAB(map_has_role, ns::map, "hasRole")
SATIS_VOCAB(map_has_concept, ns::map, "hasConcept")
SATIS_VOCAB(map_any_verb, ns::map, "anyVerb")
SATIS_VOCAB(map_any_object, ns::map, "anyObject")

SATIS_VOCAB(satis_fragment, ns::satis, "Fragment")
SATIS_VOCAB(satis_id, ns::satis, "id")
SATIS_VOCAB(satis_author, ns::satis, "author")
SATIS_VOCAB(satis_created, ns::satis, "created")
SATIS_VOCAB(satis_kind, ns::satis, "kind")
SATIS_VOCAB(satis_has_signature, ns::satis, "hasSignature")
SATIS_VOCAB(satis_body_query, ns::satis, "bodyQuery")
SATIS_VOCAB(satis_body_map, ns::satis, "bodyMap")
SATIS_VOCAB(satis_achieved_by, ns::satis, "achievedBy")

SATIS_VOCAB(process_service, ns::process, "Service")
SATIS_VOCAB(process_has_input, ns::process, "hasInput")
SATIS_VOCAB(process_has_output, ns::process, "hasOutput")

#undef SATIS_VOCAB

}  // namespace vocab

}  // namespace satis::rdf
