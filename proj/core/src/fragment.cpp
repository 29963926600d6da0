#include "satis/fragment.hpp"

#include <algorithm>

#include "satis/rdfs.hpp"
#include "satis/registry.hpp"

namespace satis {

namespace {
using rdf::Term;
namespace vocab = rdf::vocab;
}  // namespace

std::string_view to_string(FragmentKind kind) {
  return kind == FragmentKind::Operational ? "operational" : "intentional";
}

bool signature_matches(const Fragment& f, const Section& goal, const rdf::Graph& ontology) {
  if (!intention_matches(f.signature.target, goal.target, ontology)) return false;
  if (!f.signature.source.is_start() &&
      !intention_matches(f.signature.source, goal.source, ontology)) {
    return false;
  }
  if (!f.signature.strategy.is_anonymous() && !goal.strategy.is_anonymous() &&
      f.signature.strategy != goal.strategy) {
    return false;
  }
  return true;
}

namespace {

/// Specificity rank: 0 source+strategy, 1 strategy only, 2 source only,
/// 3 target only.
int specificity(const Fragment& f) {
  bool has_source = !f.signature.source.is_start();
  bool has_strategy = !f.signature.strategy.is_anonymous();
  if (has_source && has_strategy) return 0;
  if (has_strategy) return 1;
  if (has_source) return 2;
  return 3;
}

void check_concept(const rdf::Graph& ontology, const std::string& iri, const std::string& what) {
  if (!ontology_declares(ontology, iri)) {
    throw Error(ErrorKind::UnknownConcept, what + " not declared in the ontology: " + iri);
  }
}

void check_intention_concepts(const rdf::Graph& ontology, const Intention& i,
                              const std::string& what) {
  if (!i.verb.is_wildcard()) check_concept(ontology, i.verb.iri(), what + " verb");
  if (!i.object.is_wildcard()) check_concept(ontology, i.object.iri(), what + " object");
  for (const Parameter& p : i.parameters) {
    check_concept(ontology, p.concept_iri, what + " parameter " + p.role);
  }
}

void check_section_concepts(const rdf::Graph& ontology, const Section& s,
                            const std::string& what) {
  check_intention_concepts(ontology, s.source, what + " source");
  check_intention_concepts(ontology, s.target, what + " target");
  if (!s.strategy.is_anonymous()) check_concept(ontology, *s.strategy.manner, what + " manner");
}

}  // namespace

void Catalog::add(Fragment f, const rdf::Graph& ontology) {
  if (fragments_.count(f.id)) {
    throw Error(ErrorKind::DuplicateId, "fragment id already in the catalog: " + f.id);
  }
  const Intention& target = f.signature.target;
  if (target.kind != IntentionKind::Ordinary || target.verb.is_wildcard() ||
      target.object.is_wildcard()) {
    throw Error(ErrorKind::InvalidSignature,
                "fragment " + f.id + ": signature target must be an ordinary intention with a "
                "concrete verb and object");
  }
  check_section_concepts(ontology, f.signature, "fragment " + f.id + " signature");

  if (f.kind == FragmentKind::Operational) {
    if (!std::holds_alternative<sparql::Query>(f.body)) {
      throw Error(ErrorKind::InvalidSignature,
                  "fragment " + f.id + ": operational body must be a query");
    }
    const sparql::Query& q = f.query();
    if (q.form != sparql::QueryForm::Select || q.projection.size() != 1) {
      throw Error(ErrorKind::InvalidSignature,
                  "fragment " + f.id +
                      ": operational body must be a select query projecting exactly one variable");
    }
    for (const sparql::PatternElement& el : q.where) {
      if (const auto* filter = std::get_if<sparql::Filter>(&el)) {
        check_concept(ontology, filter->constant.text,
                      "fragment " + f.id + " filter constant");
      }
    }
  } else {
    if (!std::holds_alternative<Map>(f.body)) {
      throw Error(ErrorKind::InvalidSignature,
                  "fragment " + f.id + ": intentional body must be a map");
    }
    const Map& body = f.body_map();
    ValidationReport report = validate_map(body);
    if (!report.ok()) {
      bool cyclic = std::any_of(report.violations.begin(), report.violations.end(),
                                [](const std::string& v) { return v.find("cyclic") != std::string::npos; });
      std::string msg = "fragment " + f.id + ": intentional body map is invalid:";
      for (const std::string& v : report.violations) msg += " " + v + ";";
      msg.pop_back();
      throw Error(cyclic ? ErrorKind::CyclicMap : ErrorKind::InvalidSignature, msg);
    }
    for (const Section& s : body.sections) {
      check_section_concepts(ontology, s, "fragment " + f.id + " body section");
    }
  }

  target_index_[{target.verb.iri(), target.object.iri()}].push_back(f.id);
  fragments_.emplace(f.id, std::move(f));
}

const Fragment* Catalog::find(const std::string& id) const {
  auto it = fragments_.find(id);
  return it == fragments_.end() ? nullptr : &it->second;
}

std::vector<const Fragment*> Catalog::all() const {
  std::vector<const Fragment*> out;
  out.reserve(fragments_.size());
  for (const auto& [id, f] : fragments_) out.push_back(&f);
  return out;
}

std::vector<const Fragment*> Catalog::matching(const Section& goal,
                                               const rdf::Graph& ontology) const {
  // Candidate ids through the target index when the goal target is
  // concrete: a fragment can only match if its target object subsumes the
  // goal object and its verb equals the goal verb.
  std::vector<const Fragment*> candidates;
  const Intention& target = goal.target;
  if (target.kind == IntentionKind::Ordinary && !target.verb.is_wildcard() &&
      !target.object.is_wildcard()) {
    std::set<std::string> ids;
    Term object = Term::iri(target.object.iri());
    std::set<Term> concepts{object};
    for (const rdf::Triple& t : ontology) {
      if (t.predicate == vocab::rdfs_subclass_of() && t.subject == object) {
        concepts.insert(t.object);
      }
    }
    // is_subclass covers transitive edges; walk the full reachable set.
    std::vector<Term> frontier(concepts.begin(), concepts.end());
    while (!frontier.empty()) {
      Term cur = frontier.back();
      frontier.pop_back();
      for (const rdf::Triple& t : ontology) {
        if (t.predicate == vocab::rdfs_subclass_of() && t.subject == cur &&
            concepts.insert(t.object).second) {
          frontier.push_back(t.object);
        }
      }
    }
    for (const Term& c : concepts) {
      auto it = target_index_.find({target.verb.iri(), c.text});
      if (it == target_index_.end()) continue;
      for (const std::string& id : it->second) ids.insert(id);
    }
    for (const std::string& id : ids) candidates.push_back(&fragments_.at(id));
  } else {
    candidates = all();
  }

  std::vector<const Fragment*> out;
  for (const Fragment* f : candidates) {
    if (signature_matches(*f, goal, ontology)) out.push_back(f);
  }
  std::stable_sort(out.begin(), out.end(), [](const Fragment* a, const Fragment* b) {
    int ra = specificity(*a);
    int rb = specificity(*b);
    if (ra != rb) return ra < rb;
    return a->id < b->id;
  });
  return out;
}

std::vector<std::pair<std::pair<std::string, std::string>, std::string>>
Catalog::index_entries() const {
  std::vector<std::pair<std::pair<std::string, std::string>, std::string>> out;
  for (const auto& [key, ids] : target_index_) {
    for (const std::string& id : ids) out.push_back({key, id});
  }
  return out;
}

namespace {

/// Head triples describing the signature section, rooted at _:goal.
void emit_head(const Section& sig, std::vector<rdf::Triple>& tmpl) {
  Term goal = Term::blank("goal");
  tmpl.push_back({goal, vocab::rdf_type(), vocab::map_section()});
  auto emit_intention = [&tmpl](const Term& node, const Intention& i, const std::string& pfx) {
    tmpl.push_back({node, vocab::map_has_verb(),
                    i.verb.is_wildcard() ? vocab::map_any_verb() : Term::iri(i.verb.iri())});
    tmpl.push_back({node, vocab::map_has_object(),
                    i.object.is_wildcard() ? vocab::map_any_object() : Term::iri(i.object.iri())});
    std::size_t n = 0;
    for (const Parameter& p : i.parameters) {
      Term pnode = Term::blank(pfx + "p" + std::to_string(n++));
      tmpl.push_back({node, vocab::map_has_parameter(), pnode});
      tmpl.push_back({pnode, vocab::map_has_role(), Term::literal(p.role)});
      tmpl.push_back({pnode, vocab::map_has_concept(), Term::iri(p.concept_iri)});
    }
  };
  if (!sig.source.is_start()) {
    Term src = Term::blank("gsrc");
    tmpl.push_back({goal, vocab::map_has_source(), src});
    emit_intention(src, sig.source, "gsrc");
  }
  Term tgt = Term::blank("gtgt");
  tmpl.push_back({goal, vocab::map_has_target(), tgt});
  emit_intention(tgt, sig.target, "gtgt");
  if (!sig.strategy.is_anonymous()) {
    Term str = Term::blank("gstr");
    tmpl.push_back({goal, vocab::map_has_strategy(), str});
    tmpl.push_back({str, vocab::map_has_manner(), Term::iri(*sig.strategy.manner)});
  }
}

rdf::PrefixMap rule_prefixes(const rdf::PrefixMap& base, const rdf::PrefixMap& extra) {
  rdf::PrefixMap out = base;
  for (const auto& [name, iri] : extra) out.emplace(name, iri);
  out.emplace("map", std::string(rdf::ns::map));
  out.emplace("satis", std::string(rdf::ns::satis));
  return out;
}

}  // namespace

std::vector<std::string> compile_to_rule(const Fragment& f, const rdf::PrefixMap& extra_prefixes) {
  std::vector<std::string> rules;
  Term goal = Term::blank("goal");

  if (f.kind == FragmentKind::Operational) {
    sparql::Query rule;
    rule.form = sparql::QueryForm::Construct;
    rule.prefixes = rule_prefixes(f.query().prefixes, extra_prefixes);
    emit_head(f.signature, rule.construct_template);
    rule.construct_template.push_back(
        {goal, vocab::satis_achieved_by(), rdf::Term::variable(f.query().projection.at(0))});
    rule.where = f.query().where;
    rules.push_back(serialize_query(rule));
    return rules;
  }

  for (const std::vector<Section>& path : paths(f.body_map())) {
    sparql::Query rule;
    rule.form = sparql::QueryForm::Construct;
    rule.prefixes = rule_prefixes({}, extra_prefixes);
    emit_head(f.signature, rule.construct_template);

    std::size_t n = 0;
    for (const Section& s : path) {
      std::string k = std::to_string(n++);
      Term sec = rdf::Term::variable("sec" + k);
      Term tgt = rdf::Term::variable("tgt" + k);
      Term result = rdf::Term::variable("r" + k);
      rule.where.emplace_back(rdf::Triple{sec, vocab::map_has_target(), tgt});
      rule.where.emplace_back(rdf::Triple{
          tgt, vocab::map_has_verb(),
          s.target.verb.is_wildcard() ? vocab::map_any_verb() : Term::iri(s.target.verb.iri())});
      rule.where.emplace_back(rdf::Triple{tgt, vocab::map_has_object(),
                                          s.target.object.is_wildcard()
                                              ? vocab::map_any_object()
                                              : Term::iri(s.target.object.iri())});
      std::size_t pn = 0;
      for (const Parameter& p : s.target.parameters) {
        Term pnode = rdf::Term::variable("tgt" + k + "p" + std::to_string(pn++));
        rule.where.emplace_back(rdf::Triple{tgt, vocab::map_has_parameter(), pnode});
        rule.where.emplace_back(rdf::Triple{pnode, vocab::map_has_role(), Term::literal(p.role)});
        rule.where.emplace_back(
            rdf::Triple{pnode, vocab::map_has_concept(), Term::iri(p.concept_iri)});
      }
      if (!s.strategy.is_anonymous()) {
        Term str = rdf::Term::variable("str" + k);
        rule.where.emplace_back(rdf::Triple{sec, vocab::map_has_strategy(), str});
        rule.where.emplace_back(
            rdf::Triple{str, vocab::map_has_manner(), Term::iri(*s.strategy.manner)});
      }
      rule.where.emplace_back(rdf::Triple{sec, vocab::satis_achieved_by(), result});
      rule.construct_template.push_back({goal, vocab::satis_achieved_by(), result});
    }
    rules.push_back(serialize_query(rule));
  }
  return rules;
}

std::string rule_filename(const Fragment& f, std::size_t path_index) {
  return f.id + "." + std::to_string(path_index) + ".rq";
}

}  // namespace satis
