#include "satis/workspace.hpp"

#include <fstream>
#include <sstream>

#include "satis/rdfs.hpp"
#include "satis/turtle.hpp"

namespace satis {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

namespace {

std::string position(const Error& e) {
  if (e.line() <= 0) return "";
  return std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": ";
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Workspace Workspace::load(const LoadOptions& options) {
  Workspace ws;
  ws.prefixes["rdf"] = std::string(rdf::ns::rdf);
  ws.prefixes["rdfs"] = std::string(rdf::ns::rdfs);
  ws.prefixes["map"] = std::string(rdf::ns::map);
  ws.prefixes["satis"] = std::string(rdf::ns::satis);
  ws.prefixes["process"] = std::string(rdf::ns::process);

  auto report = [&ws](const std::string& file, const Error& e) {
    ws.diagnostics.push_back(file + ":" + position(e) + std::string(to_string(e.kind())) + ": " +
                             e.what());
  };

  for (const std::string& file : options.ontology_files) {
    try {
      rdf::Graph g = rdf::parse_turtle(read_file(file), ws.prefixes);
      for (const auto& [name, iri] : g.prefixes()) ws.prefixes.emplace(name, iri);
      ws.ontology_raw.merge(g);
    } catch (const Error& e) {
      report(file, e);
    }
  }
  ws.ontology = rdf::rdfs_closure(ws.ontology_raw);

  rdf::Graph service_graph;
  for (const std::string& file : options.service_files) {
    try {
      rdf::Graph g = rdf::parse_turtle(read_file(file), ws.prefixes);
      for (const auto& [name, iri] : g.prefixes()) ws.prefixes.emplace(name, iri);
      service_graph.merge(g);
    } catch (const Error& e) {
      report(file, e);
    }
  }
  ws.service_triples = service_graph.size();
  ws.registry = Registry::ingest(service_graph, ws.ontology);
  for (const IngestIssue& issue : ws.registry.issues()) {
    ws.diagnostics.push_back("service " + issue.service + ": " +
                             std::string(to_string(issue.kind)) + ": " + issue.message);
  }

  for (const std::string& file : options.fragment_files) {
    try {
      std::vector<Fragment> fragments;
      if (ends_with(file, ".frag")) {
        NameContext ctx{&ws.ontology, ws.prefixes};
        fragments = parse_fragment_dsl(read_file(file), ctx);
      } else {
        rdf::Graph g = rdf::parse_turtle(read_file(file), ws.prefixes);
        fragments = fragments_from_rdf(g);
      }
      for (Fragment& f : fragments) {
        try {
          ws.catalog.add(std::move(f), ws.ontology);
        } catch (const Error& e) {
          report(file, e);
        }
      }
    } catch (const Error& e) {
      report(file, e);
    }
  }
  return ws;
}

std::string Workspace::resolve_concept(const std::string& name) const {
  NameContext ctx{&ontology, prefixes};
  return ctx.resolve(name);
}

}  // namespace satis
