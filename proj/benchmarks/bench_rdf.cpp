#include <benchmark/benchmark.h>

#include <string>

#include "satis/rdfs.hpp"
#include "satis/sparql.hpp"
#include "satis/turtle.hpp"

namespace {

using namespace satis;

std::string chain_ontology(int classes) {
  std::string text = "@prefix t: <http://bench.example/ns#> .\n"
                     "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  for (int i = 1; i < classes; ++i) {
    text += "t:C" + std::to_string(i) + " rdfs:subClassOf t:C" + std::to_string(i - 1) + " .\n";
  }
  return text;
}

std::string service_graph(int services) {
  std::string text = "@prefix svc: <http://bench.example/svc#> .\n"
                     "@prefix process: <http://satis.example/process#> .\n"
                     "@prefix t: <http://bench.example/ns#> .\n";
  for (int i = 0; i < services; ++i) {
    std::string s = "svc:S" + std::to_string(i);
    text += s + " process:hasInput t:C0 .\n";
    text += s + " process:hasOutput t:C" + std::to_string(i % 16) + " .\n";
  }
  return text;
}

void BM_TurtleParse(benchmark::State& state) {
  std::string text = service_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdf::parse_turtle(text));
  }
}
BENCHMARK(BM_TurtleParse)->Arg(64)->Arg(256)->Arg(1024);

void BM_RdfsClosure(benchmark::State& state) {
  rdf::Graph g = rdf::parse_turtle(chain_ontology(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rdf::rdfs_closure(g));
  }
}
BENCHMARK(BM_RdfsClosure)->Arg(16)->Arg(64)->Arg(128);

void BM_Evaluate(benchmark::State& state) {
  rdf::Graph data = rdf::parse_turtle(service_graph(static_cast<int>(state.range(0))));
  rdf::Graph ontology = rdf::rdfs_closure(rdf::parse_turtle(chain_ontology(16)));
  sparql::Query q = sparql::parse_query(
      "prefix t: <http://bench.example/ns#>\n"
      "prefix process: <http://satis.example/process#>\n"
      "select ?service where {\n"
      "  ?service process:hasInput ?r1\n"
      "  filter(?r1 =: t:C0)\n"
      "  ?service process:hasOutput ?r2\n"
      "  filter(?r2 <=: t:C4)\n"
      "}\n");
  for (auto _ : state) {
    benchmark::DoNotOptimize(sparql::evaluate(q, data, ontology));
  }
}
BENCHMARK(BM_Evaluate)->Arg(16)->Arg(64)->Arg(256);

}  // namespace
