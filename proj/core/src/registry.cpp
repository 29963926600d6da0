#include "satis/registry.hpp"

#include <algorithm>
#include <set>

namespace satis {

namespace {
using rdf::Term;
namespace vocab = rdf::vocab;
}  // namespace

bool ontology_declares(const rdf::Graph& ontology, const std::string& iri) {
  Term t = Term::iri(iri);
  for (const rdf::Triple& triple : ontology) {
    if (triple.subject == t || triple.object == t) return true;
  }
  return false;
}

Registry Registry::ingest(const rdf::Graph& g, const rdf::Graph& ontology) {
  Registry reg;

  std::set<Term> candidates;
  for (const rdf::Triple& t : g) {
    if (t.predicate == vocab::process_has_input() || t.predicate == vocab::process_has_output()) {
      candidates.insert(t.subject);
    }
    if (t.predicate == vocab::rdf_type() && t.object == vocab::process_service()) {
      candidates.insert(t.subject);
    }
  }

  for (const Term& svc : candidates) {
    if (!svc.is_iri()) {
      reg.issues_.push_back({ErrorKind::UnknownConcept, svc.lexical(),
                             "service subject must be an IRI"});
      continue;
    }
    ServiceDescription desc;
    desc.iri = svc.text;

    bool ok = true;
    auto read_concepts = [&](const Term& predicate, std::vector<std::string>& out) {
      for (const Term& c : g.objects(svc, predicate)) {
        if (!c.is_iri()) {
          reg.issues_.push_back({ErrorKind::UnknownConcept, svc.text,
                                 "concept must be an IRI, got " + c.lexical()});
          ok = false;
          continue;
        }
        if (!ontology_declares(ontology, c.text)) {
          reg.issues_.push_back({ErrorKind::UnknownConcept, svc.text,
                                 "concept not declared in the ontology: " + c.text});
          ok = false;
          continue;
        }
        out.push_back(c.text);
      }
      std::sort(out.begin(), out.end());
    };
    read_concepts(vocab::process_has_input(), desc.inputs);
    read_concepts(vocab::process_has_output(), desc.outputs);

    if (ok && desc.inputs.empty() && desc.outputs.empty()) {
      reg.issues_.push_back({ErrorKind::EmptyProfile, svc.text,
                             "service declares neither inputs nor outputs"});
      continue;
    }
    if (!ok) continue;

    if (auto label = g.object(svc, vocab::rdfs_label()); label && label->is_literal()) {
      desc.label = label->text;
    }
    reg.services_.push_back(std::move(desc));
  }

  std::sort(reg.services_.begin(), reg.services_.end(),
            [](const ServiceDescription& a, const ServiceDescription& b) { return a.iri < b.iri; });
  reg.rebuild_data();
  return reg;
}

void Registry::rebuild_data() {
  data_ = rdf::Graph();
  data_.add_prefix("process", std::string(rdf::ns::process));
  data_.add_prefix("rdfs", std::string(rdf::ns::rdfs));
  for (const ServiceDescription& desc : services_) {
    Term svc = Term::iri(desc.iri);
    data_.insert({svc, vocab::rdf_type(), vocab::process_service()});
    for (const std::string& c : desc.inputs) {
      data_.insert({svc, vocab::process_has_input(), Term::iri(c)});
    }
    for (const std::string& c : desc.outputs) {
      data_.insert({svc, vocab::process_has_output(), Term::iri(c)});
    }
    if (desc.label) {
      data_.insert({svc, vocab::rdfs_label(), Term::literal(*desc.label)});
    }
  }
}

const ServiceDescription* Registry::find(const std::string& iri) const {
  for (const ServiceDescription& d : services_) {
    if (d.iri == iri) return &d;
  }
  return nullptr;
}

Registry Registry::without(const std::string& service_iri) const {
  if (!find(service_iri)) {
    throw Error(ErrorKind::NotFound, "no such service: " + service_iri);
  }
  Registry out = *this;
  std::erase_if(out.services_,
                [&](const ServiceDescription& d) { return d.iri == service_iri; });
  out.rebuild_data();
  return out;
}

}  // namespace satis
