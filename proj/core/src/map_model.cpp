#include "satis/map_model.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "satis/rdfs.hpp"

namespace satis {

Intention Intention::of(std::string verb_iri, std::string object_iri,
                        std::vector<Parameter> params) {
  Intention i;
  i.kind = IntentionKind::Ordinary;
  i.verb = ConceptRef::of(std::move(verb_iri));
  i.object = ConceptRef::of(std::move(object_iri));
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  i.parameters = std::move(params);
  return i;
}

namespace {

std::string concept_str(const ConceptRef& c) { return c.is_wildcard() ? "*" : c.iri(); }

std::vector<Intention> all_intentions(const Map& m) {
  std::set<Intention> seen;
  for (const Section& s : m.sections) {
    seen.insert(s.source);
    seen.insert(s.target);
  }
  return {seen.begin(), seen.end()};
}

using Adjacency = std::map<Intention, std::vector<const Section*>>;

Adjacency forward_edges(const Map& m) {
  Adjacency adj;
  for (const Section& s : m.sections) {
    adj[s.source].push_back(&s);
  }
  return adj;
}

std::set<Intention> reach(const Map& m, const Intention& from, bool forward) {
  std::set<Intention> seen{from};
  std::deque<Intention> queue{from};
  while (!queue.empty()) {
    Intention cur = queue.front();
    queue.pop_front();
    for (const Section& s : m.sections) {
      const Intention& a = forward ? s.source : s.target;
      const Intention& b = forward ? s.target : s.source;
      if (a == cur && seen.insert(b).second) queue.push_back(b);
    }
  }
  return seen;
}

/// Returns an intention on a directed cycle, if any.
std::optional<Intention> find_cycle(const Map& m) {
  Adjacency adj = forward_edges(m);
  std::map<Intention, int> color;  // 0 new, 1 on stack, 2 done
  std::optional<Intention> hit;

  auto visit = [&](auto&& self, const Intention& node) -> bool {
    color[node] = 1;
    auto it = adj.find(node);
    if (it != adj.end()) {
      for (const Section* s : it->second) {
        int c = color[s->target];
        if (c == 1) {
          hit = s->target;
          return true;
        }
        if (c == 0 && self(self, s->target)) return true;
      }
    }
    color[node] = 2;
    return false;
  };

  for (const Intention& i : all_intentions(m)) {
    if (color[i] == 0 && visit(visit, i)) return hit;
  }
  return std::nullopt;
}

}  // namespace

ValidationReport validate_map(const Map& m) {
  ValidationReport report;
  for (const Section& s : m.sections) {
    if (s.target.is_start()) {
      report.violations.push_back("section targets the start intention: " + to_string(s));
    }
    if (s.source.is_stop()) {
      report.violations.push_back("section originates at the stop intention: " + to_string(s));
    }
  }

  bool has_start = false;
  bool has_stop = false;
  for (const Section& s : m.sections) {
    has_start = has_start || s.source.is_start() || s.target.is_start();
    has_stop = has_stop || s.source.is_stop() || s.target.is_stop();
  }
  if (!has_start) report.violations.push_back("map has no start intention");
  if (!has_stop) report.violations.push_back("map has no stop intention");

  if (has_start && has_stop) {
    std::set<Intention> from_start = reach(m, Intention::start(), true);
    std::set<Intention> to_stop = reach(m, Intention::stop(), false);
    for (const Intention& i : all_intentions(m)) {
      if (!from_start.count(i)) {
        report.violations.push_back("intention unreachable from start: " + to_string(i));
      }
      if (!to_stop.count(i)) {
        report.violations.push_back("intention cannot reach stop: " + to_string(i));
      }
    }
  }

  if (auto node = find_cycle(m)) {
    report.violations.push_back("section graph is cyclic (through " + to_string(*node) + ")");
  }
  return report;
}

std::vector<std::vector<Section>> paths(const Map& m) {
  if (auto node = find_cycle(m)) {
    throw Error(ErrorKind::CyclicMap, "map has a directed cycle through " + to_string(*node));
  }
  Adjacency adj = forward_edges(m);
  std::vector<std::vector<Section>> out;
  std::vector<Section> current;

  auto walk = [&](auto&& self, const Intention& node) -> void {
    if (node.is_stop()) {
      out.push_back(current);
      return;
    }
    auto it = adj.find(node);
    if (it == adj.end()) return;  // dead end, not a path
    for (const Section* s : it->second) {
      current.push_back(*s);
      self(self, s->target);
      current.pop_back();
    }
  };
  walk(walk, Intention::start());
  return out;
}

bool intention_matches(const Intention& general, const Intention& specific,
                       const rdf::Graph& ontology) {
  if (!general.verb.is_wildcard() && general.verb != specific.verb) return false;
  if (!general.object.is_wildcard()) {
    if (specific.object.is_wildcard()) return false;
    if (!rdf::is_subclass(ontology, rdf::Term::iri(specific.object.iri()),
                          rdf::Term::iri(general.object.iri()))) {
      return false;
    }
  }
  for (const Parameter& p : general.parameters) {
    bool found = false;
    for (const Parameter& q : specific.parameters) {
      if (q.role == p.role &&
          rdf::is_subclass(ontology, rdf::Term::iri(q.concept_iri),
                           rdf::Term::iri(p.concept_iri))) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string to_string(const Intention& i) {
  if (i.is_start()) return "start";
  if (i.is_stop()) return "stop";
  std::string out = "(" + concept_str(i.verb) + ", " + concept_str(i.object);
  if (!i.parameters.empty()) {
    out += ";";
    for (const Parameter& p : i.parameters) {
      out += " " + p.role + "=" + p.concept_iri;
    }
  }
  return out + ")";
}

std::string to_string(const Strategy& s) { return s.is_anonymous() ? "anon" : *s.manner; }

std::string to_string(const Section& s) {
  return to_string(s.source) + " -[" + to_string(s.strategy) + "]-> " + to_string(s.target);
}

}  // namespace satis
