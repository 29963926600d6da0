#include "support/oracles.hpp"

#include <algorithm>
#include <deque>

namespace satis::testing {

namespace {
using rdf::Term;
using rdf::Triple;
namespace vocab = rdf::vocab;
}  // namespace

rdf::Graph naive_closure(const rdf::Graph& g) {
  rdf::Graph out = g;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Triple> fresh;
    for (const Triple& a : out) {
      if (a.predicate == vocab::rdfs_subclass_of()) {
        for (const Triple& b : out) {
          if (b.predicate == vocab::rdfs_subclass_of() && b.subject == a.object &&
              a.subject != b.object) {
            fresh.push_back({a.subject, vocab::rdfs_subclass_of(), b.object});
          }
        }
      }
      if (a.predicate == vocab::rdf_type()) {
        for (const Triple& b : out) {
          if (b.predicate == vocab::rdfs_subclass_of() && b.subject == a.object &&
              a.object != b.object) {
            fresh.push_back({a.subject, vocab::rdf_type(), b.object});
          }
        }
      }
    }
    for (const Triple& t : fresh) {
      if (!out.contains(t)) {
        out.insert(t);
        changed = true;
      }
    }
  }
  return out;
}

bool naive_is_subclass(const rdf::Graph& g, const Term& sub, const Term& sup) {
  if (sub == sup) return true;
  std::set<Term> seen{sub};
  std::deque<Term> queue{sub};
  while (!queue.empty()) {
    Term cur = queue.front();
    queue.pop_front();
    for (const Triple& t : g) {
      if (t.predicate == vocab::rdfs_subclass_of() && t.subject == cur) {
        if (t.object == sup) return true;
        if (seen.insert(t.object).second) queue.push_back(t.object);
      }
    }
  }
  return false;
}

namespace {

bool term_fits(const Term& pattern, const Term& data, rdf::Bindings& b) {
  if (!pattern.is_variable()) return pattern == data;
  auto it = b.find(pattern.text);
  if (it != b.end()) return it->second == data;
  b.emplace(pattern.text, data);
  return true;
}

bool triple_fits(const Triple& pattern, const Triple& data, rdf::Bindings& b) {
  return term_fits(pattern.subject, data.subject, b) &&
         term_fits(pattern.predicate, data.predicate, b) &&
         term_fits(pattern.object, data.object, b);
}

Term blank_as_var(const Term& t) {
  if (t.is_blank()) return Term::variable("_:" + t.text);
  return t;
}

}  // namespace

std::vector<rdf::Bindings> naive_match(const rdf::Graph& g, const Triple& pattern,
                                       const rdf::Bindings& seed) {
  std::vector<rdf::Bindings> out;
  for (const Triple& t : g) {
    rdf::Bindings b = seed;
    if (triple_fits(pattern, t, b)) out.push_back(std::move(b));
  }
  return out;
}

std::vector<rdf::Bindings> naive_select(const sparql::Query& q, const rdf::Graph& data,
                                        const rdf::Graph& ontology) {
  std::vector<Triple> patterns;
  std::vector<sparql::Filter> filters;
  for (const sparql::PatternElement& el : q.where) {
    if (const auto* t = std::get_if<Triple>(&el)) {
      patterns.push_back({blank_as_var(t->subject), blank_as_var(t->predicate),
                          blank_as_var(t->object)});
    } else {
      filters.push_back(std::get<sparql::Filter>(el));
    }
  }

  std::vector<Triple> all(data.begin(), data.end());
  std::set<rdf::Bindings> solutions;

  // Assign each pattern a graph triple; every combination is tried.
  std::vector<std::size_t> choice(patterns.size(), 0);
  auto consistent = [&]() -> std::optional<rdf::Bindings> {
    rdf::Bindings b;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (!triple_fits(patterns[i], all[choice[i]], b)) return std::nullopt;
    }
    return b;
  };

  if (patterns.empty()) return {};
  if (all.empty()) return {};

  while (true) {
    if (auto b = consistent()) {
      bool pass = true;
      for (const sparql::Filter& f : filters) {
        auto it = b->find(f.variable);
        if (it == b->end()) {
          pass = false;
          break;
        }
        const Term& value = it->second;
        if (value.is_literal()) {
          throw Error(ErrorKind::TypeMismatch, "filter on literal binding");
        }
        switch (f.op) {
          case sparql::FilterOp::Equal: pass = value == f.constant; break;
          case sparql::FilterOp::IriEqual: pass = value.is_iri() && value == f.constant; break;
          case sparql::FilterOp::SubclassOf:
            pass = value.is_iri() && naive_is_subclass(ontology, value, f.constant);
            break;
        }
        if (!pass) break;
      }
      if (pass) {
        rdf::Bindings projected;
        for (const std::string& v : q.projection) {
          auto it = b->find(v);
          if (it != b->end()) projected.emplace(*it);
        }
        solutions.insert(std::move(projected));
      }
    }
    // next combination
    std::size_t i = 0;
    while (i < choice.size()) {
      if (++choice[i] < all.size()) break;
      choice[i] = 0;
      ++i;
    }
    if (i == choice.size()) break;
  }
  return {solutions.begin(), solutions.end()};
}

namespace {

void walk_paths(const Map& m, const Intention& at, std::set<Intention>& visited,
                std::vector<Section>& current, std::vector<std::vector<Section>>& out) {
  if (at.is_stop()) {
    out.push_back(current);
    return;
  }
  for (const Section& s : m.sections) {
    if (!(s.source == at)) continue;
    if (visited.count(s.target)) continue;
    visited.insert(s.target);
    current.push_back(s);
    walk_paths(m, s.target, visited, current, out);
    current.pop_back();
    visited.erase(s.target);
  }
}

bool oracle_intention_covers(const Intention& general, const Intention& specific,
                             const rdf::Graph& ontology) {
  if (!general.verb.is_wildcard() && general.verb != specific.verb) return false;
  if (!general.object.is_wildcard()) {
    if (specific.object.is_wildcard()) return false;
    if (!naive_is_subclass(ontology, Term::iri(specific.object.iri()),
                           Term::iri(general.object.iri()))) {
      return false;
    }
  }
  for (const Parameter& p : general.parameters) {
    bool found = false;
    for (const Parameter& s : specific.parameters) {
      if (s.role == p.role && naive_is_subclass(ontology, Term::iri(s.concept_iri),
                                                Term::iri(p.concept_iri))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool oracle_signature_covers(const Fragment& f, const Section& goal, const rdf::Graph& ontology) {
  if (!oracle_intention_covers(f.signature.target, goal.target, ontology)) return false;
  if (!f.signature.source.is_start() &&
      !oracle_intention_covers(f.signature.source, goal.source, ontology)) {
    return false;
  }
  if (!f.signature.strategy.is_anonymous() && !goal.strategy.is_anonymous() &&
      !(f.signature.strategy == goal.strategy)) {
    return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<Section>> naive_paths(const Map& m) {
  std::vector<std::vector<Section>> out;
  std::vector<Section> current;
  std::set<Intention> visited{Intention::start()};
  walk_paths(m, Intention::start(), visited, current, out);
  return out;
}

std::optional<std::set<std::string>> naive_render_proof(
    const Section& goal, int depth, std::vector<Section>& stack,
    const std::vector<const Fragment*>& fragments, const rdf::Graph& service_data,
    const rdf::Graph& ontology) {
  if (depth <= 0) return std::nullopt;
  if (std::find(stack.begin(), stack.end(), goal) != stack.end()) return std::nullopt;

  bool proven = false;
  std::set<std::string> services;
  stack.push_back(goal);
  for (const Fragment* f : fragments) {
    if (!oracle_signature_covers(*f, goal, ontology)) continue;
    if (f->kind == FragmentKind::Operational) {
      std::vector<rdf::Bindings> rows = naive_select(f->query(), service_data, ontology);
      if (!rows.empty()) {
        proven = true;
        for (const rdf::Bindings& row : rows) {
          auto it = row.find(f->query().projection.at(0));
          if (it != row.end() && it->second.is_iri()) services.insert(it->second.text);
        }
      }
      continue;
    }
    for (const std::vector<Section>& path : naive_paths(f->body_map())) {
      bool all_ok = true;
      std::set<std::string> path_services;
      for (const Section& section : path) {
        if (section.target.is_stop()) continue;
        auto sub = naive_render_proof(section, depth - 1, stack, fragments, service_data,
                                      ontology);
        if (!sub) {
          all_ok = false;
          break;
        }
        path_services.insert(sub->begin(), sub->end());
      }
      if (all_ok) {
        proven = true;
        services.insert(path_services.begin(), path_services.end());
      }
    }
  }
  stack.pop_back();
  if (!proven) return std::nullopt;
  return services;
}

std::set<std::string> naive_render_services(const Section& goal, int depth,
                                            const std::vector<const Fragment*>& fragments,
                                            const rdf::Graph& service_data,
                                            const rdf::Graph& ontology) {
  std::vector<Section> stack;
  auto proof = naive_render_proof(goal, depth, stack, fragments, service_data, ontology);
  return proof ? *proof : std::set<std::string>{};
}

}  // namespace satis::testing
