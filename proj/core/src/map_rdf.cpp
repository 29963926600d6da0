#include "satis/map_rdf.hpp"

#include <algorithm>
#include <cctype>

namespace satis {

namespace {

using rdf::Term;
namespace vocab = rdf::vocab;

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

bool is_any_verb(const Term& t) {
  return t.is_iri() && lower(rdf::local_name(t.text)) == "anyverb";
}
bool is_any_object(const Term& t) {
  return t.is_iri() && lower(rdf::local_name(t.text)) == "anyobject";
}

const Term& kind_type(IntentionKind kind) {
  switch (kind) {
    case IntentionKind::Start: return vocab::map_start();
    case IntentionKind::Stop: return vocab::map_stop();
    case IntentionKind::Ordinary: break;
  }
  return vocab::map_intention();
}

void emit_intention(rdf::Graph& g, const Term& node, const Intention& i,
                    const std::string& param_prefix) {
  g.insert({node, vocab::rdf_type(), kind_type(i.kind)});
  g.insert({node, vocab::map_has_verb(),
            i.verb.is_wildcard() ? vocab::map_any_verb() : Term::iri(i.verb.iri())});
  g.insert({node, vocab::map_has_object(),
            i.object.is_wildcard() ? vocab::map_any_object() : Term::iri(i.object.iri())});
  std::size_t n = 0;
  for (const Parameter& p : i.parameters) {
    Term pnode = Term::blank(param_prefix + std::to_string(n++));
    g.insert({node, vocab::map_has_parameter(), pnode});
    g.insert({pnode, vocab::map_has_role(), Term::literal(p.role)});
    g.insert({pnode, vocab::map_has_concept(), Term::iri(p.concept_iri)});
  }
}

void emit_section(rdf::Graph& g, const Term& node, const Section& s, const Term& source_node,
                  const Term& target_node, const Term& strategy_node) {
  g.insert({node, vocab::rdf_type(), vocab::map_section()});
  g.insert({node, vocab::map_has_source(), source_node});
  g.insert({node, vocab::map_has_target(), target_node});
  g.insert({node, vocab::map_has_strategy(), strategy_node});
  g.insert({strategy_node, vocab::rdf_type(), vocab::map_strategy()});
  if (!s.strategy.is_anonymous()) {
    g.insert({strategy_node, vocab::map_has_manner(), Term::iri(*s.strategy.manner)});
  }
}

Intention read_intention(const rdf::Graph& g, const Term& node, std::vector<std::string>& missing,
                         const std::string& what) {
  Intention i;
  auto type = g.object(node, vocab::rdf_type());
  if (type == vocab::map_start()) {
    i.kind = IntentionKind::Start;
  } else if (type == vocab::map_stop()) {
    i.kind = IntentionKind::Stop;
  } else {
    i.kind = IntentionKind::Ordinary;
  }

  auto verb = g.object(node, vocab::map_has_verb());
  auto object = g.object(node, vocab::map_has_object());
  bool endpoint = i.kind != IntentionKind::Ordinary;
  if (!verb && !endpoint) missing.push_back(what + " map:hasVerb");
  if (!object && !endpoint) missing.push_back(what + " map:hasObject");

  if (verb && !is_any_verb(*verb)) {
    if (!verb->is_iri()) missing.push_back(what + " verb must be an IRI");
    else i.verb = ConceptRef::of(verb->text);
  }
  if (object && !is_any_object(*object)) {
    if (!object->is_iri()) missing.push_back(what + " object must be an IRI");
    else i.object = ConceptRef::of(object->text);
  }

  for (const Term& pnode : g.objects(node, vocab::map_has_parameter())) {
    auto role = g.object(pnode, vocab::map_has_role());
    auto concept_term = g.object(pnode, vocab::map_has_concept());
    if (!role || !role->is_literal()) {
      missing.push_back(what + " parameter map:hasRole");
      continue;
    }
    if (!concept_term || !concept_term->is_iri()) {
      missing.push_back(what + " parameter map:hasConcept");
      continue;
    }
    i.parameters.push_back({role->text, concept_term->text});
  }
  std::sort(i.parameters.begin(), i.parameters.end());
  i.parameters.erase(std::unique(i.parameters.begin(), i.parameters.end()), i.parameters.end());

  if (endpoint && (!i.verb.is_wildcard() || !i.object.is_wildcard() || !i.parameters.empty())) {
    missing.push_back(what + " start/stop intentions carry wildcards and no parameters");
  }
  return i;
}

}  // namespace

rdf::Graph section_to_rdf(const Section& s) {
  rdf::Graph g;
  g.add_prefix("map", std::string(rdf::ns::map));
  Term sec = Term::blank("sec");
  Term src = Term::blank("src");
  Term tgt = Term::blank("tgt");
  Term str = Term::blank("str");
  emit_intention(g, src, s.source, "srcp");
  emit_intention(g, tgt, s.target, "tgtp");
  emit_section(g, sec, s, src, tgt, str);
  return g;
}

Section rdf_to_section(const rdf::Graph& g, const Term& node) {
  std::vector<std::string> missing;
  auto source_node = g.object(node, vocab::map_has_source());
  auto target_node = g.object(node, vocab::map_has_target());
  if (!source_node) missing.push_back("map:hasSource");
  if (!target_node) missing.push_back("map:hasTarget");

  Section s;
  if (source_node) s.source = read_intention(g, *source_node, missing, "source");
  if (target_node) s.target = read_intention(g, *target_node, missing, "target");

  if (auto strategy_node = g.object(node, vocab::map_has_strategy())) {
    if (auto manner = g.object(*strategy_node, vocab::map_has_manner())) {
      if (manner->is_iri()) s.strategy = Strategy::by(manner->text);
      else missing.push_back("map:hasManner must be an IRI");
    }
  }

  if (missing.empty()) {
    if (s.target.is_start()) missing.push_back("target must not be the start intention");
    if (s.source.is_stop()) missing.push_back("source must not be the stop intention");
  }
  if (!missing.empty()) {
    std::string msg = "section " + node.lexical() + " is malformed:";
    for (const std::string& m : missing) msg += " " + m + ";";
    msg.pop_back();
    throw Error(ErrorKind::MalformedSection, msg);
  }
  return s;
}

rdf::Graph map_to_rdf(const Map& m) {
  rdf::Graph g;
  g.add_prefix("map", std::string(rdf::ns::map));
  g.add_prefix("rdfs", std::string(rdf::ns::rdfs));
  Term map_node = Term::blank("map");
  g.insert({map_node, vocab::rdf_type(), vocab::map_map()});
  g.insert({map_node, vocab::rdfs_label(), Term::literal(m.name)});

  // Structurally equal intentions share one node.
  std::map<Intention, Term> intention_nodes;
  std::size_t next_intention = 0;
  auto node_for = [&](const Intention& i) {
    auto it = intention_nodes.find(i);
    if (it != intention_nodes.end()) return it->second;
    Term node = Term::blank("int" + std::to_string(next_intention));
    emit_intention(g, node, i, "int" + std::to_string(next_intention) + "p");
    ++next_intention;
    intention_nodes.emplace(i, node);
    return node;
  };

  std::size_t n = 0;
  for (const Section& s : m.sections) {
    Term sec = Term::blank("sec" + std::to_string(n));
    Term str = Term::blank("str" + std::to_string(n));
    ++n;
    emit_section(g, sec, s, node_for(s.source), node_for(s.target), str);
    g.insert({map_node, vocab::map_has_section(), sec});
  }
  return g;
}

Map rdf_to_map(const rdf::Graph& g, const Term& node) {
  Map m;
  if (auto label = g.object(node, vocab::rdfs_label()); label && label->is_literal()) {
    m.name = label->text;
  }
  for (const Term& sec : g.objects(node, vocab::map_has_section())) {
    m.sections.insert(rdf_to_section(g, sec));
  }
  return m;
}

std::vector<rdf::Term> find_map_nodes(const rdf::Graph& g) {
  return g.subjects(vocab::rdf_type(), vocab::map_map());
}

std::vector<rdf::Term> find_section_nodes(const rdf::Graph& g) {
  return g.subjects(vocab::rdf_type(), vocab::map_section());
}

}  // namespace satis
