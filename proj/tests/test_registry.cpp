#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "satis/rdfs.hpp"
#include "satis/registry.hpp"
#include "satis/turtle.hpp"
#include "satis/workspace.hpp"

using namespace satis;
using rdf::Term;

namespace {

rdf::Graph fixture_ontology() {
  return rdf::rdfs_closure(
      rdf::parse_turtle(read_file(std::string(SATIS_FIXTURE_DIR) + "/ontology.ttl")));
}

rdf::Graph fixture_services() {
  return rdf::parse_turtle(read_file(std::string(SATIS_FIXTURE_DIR) + "/services.ttl"));
}

const std::string kSvc = "http://satis.example/svc#";
const std::string kDom = "http://satis.example/dom#";

}  // namespace

TEST_CASE("ingest reads the debias service description") {
  Registry reg = Registry::ingest(fixture_services(), fixture_ontology());
  CHECK(reg.issues().empty());
  REQUIRE(reg.services().size() == 1);
  const ServiceDescription& d = reg.services()[0];
  CHECK(d.iri == kSvc + "DebiasSvc");
  CHECK(d.inputs == std::vector<std::string>{kDom + "Image"});
  CHECK(d.outputs ==
        std::vector<std::string>{kDom + "BiasField", kDom + "DebiasedImage"});
  CHECK(d.label == "Image debias service");

  // The canonical data graph carries exactly the profile triples.
  CHECK(reg.data().contains({Term::iri(d.iri), rdf::vocab::process_has_input(),
                             Term::iri(kDom + "Image")}));
  CHECK(reg.data().size() == 5);
}

TEST_CASE("ingest of an empty graph is empty") {
  Registry reg = Registry::ingest(rdf::Graph{}, fixture_ontology());
  CHECK(reg.services().empty());
  CHECK(reg.data().empty());
  CHECK(reg.issues().empty());
}

TEST_CASE("ingest rejects per service, not per batch") {
  rdf::Graph g = fixture_services();
  g.merge(rdf::parse_turtle(
      "@prefix svc: <http://satis.example/svc#> .\n"
      "@prefix process: <http://satis.example/process#> .\n"
      "@prefix dom: <http://satis.example/dom#> .\n"
      "svc:BrokenSvc process:hasInput dom:Foo .\n"));
  Registry reg = Registry::ingest(g, fixture_ontology());
  REQUIRE(reg.services().size() == 1);
  CHECK(reg.services()[0].iri == kSvc + "DebiasSvc");
  REQUIRE(reg.issues().size() == 1);
  CHECK(reg.issues()[0].kind == ErrorKind::UnknownConcept);
  CHECK(reg.issues()[0].service == kSvc + "BrokenSvc");
}

TEST_CASE("ingest flags services with an empty profile") {
  rdf::Graph g = rdf::parse_turtle(
      "@prefix svc: <http://satis.example/svc#> .\n"
      "@prefix process: <http://satis.example/process#> .\n"
      "svc:GhostSvc a process:Service .\n");
  Registry reg = Registry::ingest(g, fixture_ontology());
  CHECK(reg.services().empty());
  REQUIRE(reg.issues().size() == 1);
  CHECK(reg.issues()[0].kind == ErrorKind::EmptyProfile);
}

TEST_CASE("ingest is idempotent") {
  Registry a = Registry::ingest(fixture_services(), fixture_ontology());
  Registry b = Registry::ingest(fixture_services(), fixture_ontology());
  CHECK(a == b);
}

TEST_CASE("without removes exactly one service") {
  rdf::Graph g = fixture_services();
  g.merge(rdf::parse_turtle(read_file(std::string(SATIS_FIXTURE_DIR) + "/services-new.ttl")));
  Registry reg = Registry::ingest(g, fixture_ontology());
  REQUIRE(reg.services().size() == 2);

  Registry smaller = reg.without(kSvc + "DebiasSvc");
  REQUIRE(smaller.services().size() == 1);
  CHECK(smaller.services()[0].iri == kSvc + "NewDebiasSvc");
  for (const rdf::Triple& t : smaller.data()) {
    CHECK(t.subject != Term::iri(kSvc + "DebiasSvc"));
  }

  SUBCASE("removing an unknown service throws NotFound") {
    try {
      reg.without(kSvc + "NoSuchSvc");
      FAIL("expected NotFound");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotFound);
    }
  }
  SUBCASE("remove then re-ingest restores the original registry") {
    Registry again = Registry::ingest(g, fixture_ontology());
    CHECK(again == reg);
  }
}
