#include <benchmark/benchmark.h>

#include <string>

#include "satis/render.hpp"
#include "satis/rdfs.hpp"
#include "satis/turtle.hpp"

namespace {

using namespace satis;

constexpr const char* kNs = "http://bench.example/ns#";

rdf::Graph bench_ontology(int verbs) {
  rdf::Graph g;
  for (int i = 0; i < verbs; ++i) {
    g.insert({rdf::Term::iri(kNs + ("V" + std::to_string(i))), rdf::vocab::rdf_type(),
              rdf::vocab::map_any_verb()});
  }
  g.insert({rdf::Term::iri(std::string(kNs) + "Obj"), rdf::vocab::rdf_type(),
            rdf::vocab::rdfs_class()});
  return g;
}

/// A chain of intentional fragments, each refining into the next verb, with
/// an operational fragment at the bottom.
void bench_catalog(Catalog& catalog, Registry& registry, rdf::Graph& ontology, int levels) {
  ontology = rdf::rdfs_closure(bench_ontology(levels + 1));

  rdf::Graph services = rdf::parse_turtle(
      "@prefix svc: <http://bench.example/svc#> .\n"
      "@prefix process: <http://satis.example/process#> .\n"
      "svc:S process:hasInput <" + std::string(kNs) + "Obj> .\n");
  registry = Registry::ingest(services, ontology);

  auto intent = [&](int level) {
    return Intention::of(kNs + ("V" + std::to_string(level)), std::string(kNs) + "Obj");
  };
  for (int level = 0; level < levels; ++level) {
    Fragment f;
    f.id = "level" + std::to_string(level);
    f.kind = FragmentKind::Intentional;
    f.signature = {Intention::start(), intent(level), Strategy::anonymous()};
    Map m;
    m.name = f.id;
    m.sections.insert({Intention::start(), intent(level + 1), Strategy::anonymous()});
    m.sections.insert({intent(level + 1), Intention::stop(), Strategy::anonymous()});
    f.body = m;
    catalog.add(std::move(f), ontology);
  }
  Fragment leaf;
  leaf.id = "leaf";
  leaf.kind = FragmentKind::Operational;
  leaf.signature = {Intention::start(), intent(levels), Strategy::anonymous()};
  leaf.body = sparql::parse_query(
      "prefix process: <http://satis.example/process#>\n"
      "select ?service where { ?service process:hasInput ?r1 }\n");
  catalog.add(std::move(leaf), ontology);
}

void BM_RenderChain(benchmark::State& state) {
  Catalog catalog;
  Registry registry;
  rdf::Graph ontology;
  bench_catalog(catalog, registry, ontology, static_cast<int>(state.range(0)));

  RenderRequest req;
  req.goal = {Intention::start(),
              Intention::of(std::string(kNs) + "V0", std::string(kNs) + "Obj"),
              Strategy::anonymous()};
  req.max_depth = static_cast<int>(state.range(0)) + 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(render(req, catalog, registry, ontology));
  }
}
BENCHMARK(BM_RenderChain)->Arg(2)->Arg(8)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
