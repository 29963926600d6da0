#include "satis/rdfs.hpp"

#include <deque>

namespace satis::rdf {

namespace {

using Adjacency = std::map<Term, std::set<Term>>;

Adjacency subclass_edges(const Graph& g) {
  Adjacency up;
  for (const Triple& t : g) {
    if (t.predicate == vocab::rdfs_subclass_of()) up[t.subject].insert(t.object);
  }
  return up;
}

std::set<Term> reachable(const Adjacency& up, const Term& from) {
  std::set<Term> seen;
  std::deque<Term> queue{from};
  while (!queue.empty()) {
    Term cur = queue.front();
    queue.pop_front();
    auto it = up.find(cur);
    if (it == up.end()) continue;
    for (const Term& next : it->second) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

}  // namespace

Graph rdfs_closure(const Graph& g) {
  Graph out = g;
  Adjacency up = subclass_edges(g);

  std::map<Term, std::set<Term>> supers;
  for (const auto& [cls, _] : up) {
    supers[cls] = reachable(up, cls);
  }

  for (const auto& [cls, reach] : supers) {
    for (const Term& sup : reach) {
      if (sup != cls) out.insert({cls, vocab::rdfs_subclass_of(), sup});
    }
  }
  for (const Triple& t : g) {
    if (t.predicate != vocab::rdf_type()) continue;
    auto it = supers.find(t.object);
    if (it == supers.end()) continue;
    for (const Term& sup : it->second) {
      if (sup != t.object) out.insert({t.subject, vocab::rdf_type(), sup});
    }
  }
  return out;
}

bool is_subclass(const Graph& g, const Term& sub, const Term& sup) {
  if (sub == sup) return true;
  Adjacency up = subclass_edges(g);
  return reachable(up, sub).count(sup) > 0;
}

}  // namespace satis::rdf
