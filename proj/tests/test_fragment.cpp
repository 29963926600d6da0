#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "satis/fragment.hpp"
#include "satis/fragment_io.hpp"
#include "satis/rdfs.hpp"
#include "satis/turtle.hpp"
#include "satis/workspace.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace satis;
using rdf::Term;

namespace {

const std::string kDom = "http://satis.example/dom#";

rdf::Graph fixture_ontology() {
  return rdf::rdfs_closure(
      rdf::parse_turtle(read_file(std::string(SATIS_FIXTURE_DIR) + "/ontology.ttl")));
}

std::vector<Fragment> fixture_fragments(const std::string& file, const rdf::Graph& ontology) {
  NameContext ctx{&ontology, {{"dom", kDom}}};
  return parse_fragment_dsl(read_file(std::string(SATIS_FIXTURE_DIR) + "/" + file), ctx);
}

Section debias_goal() {
  return {Intention::start(), Intention::of(kDom + "Homogenise", kDom + "Image"),
          Strategy::by(kDom + "Debiasing")};
}

}  // namespace

TEST_CASE("fragment DSL parses the debias fragment") {
  rdf::Graph ontology = fixture_ontology();
  std::vector<Fragment> fragments = fixture_fragments("debias.frag", ontology);
  REQUIRE(fragments.size() == 1);
  const Fragment& f = fragments[0];
  CHECK(f.id == "debias");
  CHECK(f.kind == FragmentKind::Operational);
  CHECK(f.provenance.author == "service-designer");
  CHECK(f.signature == debias_goal());
  CHECK(f.query().projection == std::vector<std::string>{"service"});
  CHECK(f.query().where.size() == 6);
}

TEST_CASE("fragment DSL parses the preprocessing catalog") {
  rdf::Graph ontology = fixture_ontology();
  std::vector<Fragment> fragments = fixture_fragments("preprocess.frag", ontology);
  REQUIRE(fragments.size() == 5);
  CHECK(fragments[0].id == "preprocess");
  CHECK(fragments[0].kind == FragmentKind::Intentional);
  CHECK(fragments[0].body_map().sections.size() == 6);
  CHECK(validate_map(fragments[0].body_map()).ok());
}

TEST_CASE("fragment DSL resolution errors") {
  rdf::Graph ontology = fixture_ontology();
  NameContext ctx{&ontology, {}};
  SUBCASE("unknown bare name") {
    try {
      parse_fragment_dsl(
          "fragment broken\n  kind: operational\n  signature:\n"
          "    target: intention(Homogenise, Sprocket)\n",
          ctx);
      FAIL("expected UnknownConcept");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownConcept);
    }
  }
  SUBCASE("unknown prefix") {
    try {
      parse_fragment_dsl(
          "fragment broken\n  kind: operational\n  signature:\n"
          "    target: intention(x:Homogenise, Image)\n",
          ctx);
      FAIL("expected UnknownPrefix");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownPrefix);
    }
  }
  SUBCASE("missing target") {
    try {
      parse_fragment_dsl("fragment broken\n  kind: operational\n", ctx);
      FAIL("expected Syntax");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Syntax);
    }
  }
}

TEST_CASE("name resolution flags ambiguous bare names") {
  rdf::Graph ontology = rdf::parse_turtle(
      "@prefix a: <http://a.example/ns#> .\n"
      "@prefix b: <http://b.example/ns#> .\n"
      "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
      "a:Image a rdfs:Class .\n"
      "b:Image a rdfs:Class .\n");
  NameContext ctx{&ontology, {}};
  try {
    ctx.resolve("Image");
    FAIL("expected an ambiguity error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownConcept);
    CHECK(std::string(e.what()).find("ambiguous") != std::string::npos);
  }
  CHECK(ctx.resolve("<http://a.example/ns#Image>") == "http://a.example/ns#Image");
}

TEST_CASE("fragments load from RDF for parity with the DSL") {
  rdf::Graph ontology = fixture_ontology();
  rdf::Graph g =
      rdf::parse_turtle(read_file(std::string(SATIS_FIXTURE_DIR) + "/debias-fragment.ttl"));
  std::vector<Fragment> fragments = fragments_from_rdf(g);
  REQUIRE(fragments.size() == 1);
  const Fragment& rdf_fragment = fragments[0];
  CHECK(rdf_fragment.id == "debias-rdf");

  Fragment dsl_fragment = fixture_fragments("debias.frag", ontology).at(0);
  CHECK(rdf_fragment.signature == dsl_fragment.signature);
  CHECK(rdf_fragment.kind == dsl_fragment.kind);
  CHECK(rdf_fragment.query() == dsl_fragment.query());
}

TEST_CASE("catalog accepts the fixture fragments") {
  rdf::Graph ontology = fixture_ontology();
  Catalog catalog;
  for (Fragment& f : fixture_fragments("debias.frag", ontology)) {
    catalog.add(std::move(f), ontology);
  }
  for (Fragment& f : fixture_fragments("preprocess.frag", ontology)) {
    catalog.add(std::move(f), ontology);
  }
  CHECK(catalog.size() == 6);
  CHECK(catalog.find("debias") != nullptr);

  // Index rows mirror the stored fragments.
  auto entries = catalog.index_entries();
  CHECK(entries.size() == catalog.size());
  for (const auto& [key, id] : entries) {
    const Fragment* f = catalog.find(id);
    REQUIRE(f != nullptr);
    CHECK(f->signature.target.verb.iri() == key.first);
    CHECK(f->signature.target.object.iri() == key.second);
  }
}

TEST_CASE("catalog rejects invalid fragments") {
  rdf::Graph ontology = fixture_ontology();
  Catalog catalog;
  Fragment debias = fixture_fragments("debias.frag", ontology).at(0);
  catalog.add(debias, ontology);

  SUBCASE("duplicate id") {
    try {
      catalog.add(debias, ontology);
      FAIL("expected DuplicateId");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DuplicateId);
    }
  }
  SUBCASE("wildcard target verb") {
    Fragment f = debias;
    f.id = "wild";
    f.signature.target.verb = ConceptRef::any();
    try {
      catalog.add(f, ontology);
      FAIL("expected InvalidSignature");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidSignature);
    }
  }
  SUBCASE("undeclared concept") {
    Fragment f = debias;
    f.id = "alien";
    f.signature.target.object = ConceptRef::of(kDom + "Sprocket");
    try {
      catalog.add(f, ontology);
      FAIL("expected UnknownConcept");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownConcept);
    }
  }
  SUBCASE("operational body must project exactly one variable") {
    Fragment f = debias;
    f.id = "twocol";
    sparql::Query q = f.query();
    q.projection.push_back("r1");
    f.body = q;
    try {
      catalog.add(f, ontology);
      FAIL("expected InvalidSignature");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidSignature);
    }
  }
  SUBCASE("cyclic intentional body") {
    Fragment f;
    f.id = "cyclic";
    f.kind = FragmentKind::Intentional;
    f.signature = debias.signature;
    Map m;
    m.name = "cyclic";
    Intention a = Intention::of(kDom + "Homogenise", kDom + "Image");
    Intention b = Intention::of(kDom + "Reference", kDom + "Image");
    m.sections.insert({Intention::start(), a, Strategy::anonymous()});
    m.sections.insert({a, b, Strategy::anonymous()});
    m.sections.insert({b, a, Strategy::by(kDom + "Rotation")});
    m.sections.insert({b, Intention::stop(), Strategy::anonymous()});
    f.body = m;
    try {
      catalog.add(f, ontology);
      FAIL("expected CyclicMap");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::CyclicMap);
    }
  }
}

TEST_CASE("signature matching on the debias fragment") {
  rdf::Graph ontology = fixture_ontology();
  Fragment debias = fixture_fragments("debias.frag", ontology).at(0);

  CHECK(signature_matches(debias, debias_goal(), ontology));

  Section wrong_manner = debias_goal();
  wrong_manner.strategy = Strategy::by(kDom + "Denoising");
  CHECK_FALSE(signature_matches(debias, wrong_manner, ontology));

  Section subclass_goal = debias_goal();
  subclass_goal.target = Intention::of(kDom + "Homogenise", kDom + "MRImage");
  CHECK(signature_matches(debias, subclass_goal, ontology));

  Section anon_goal = debias_goal();
  anon_goal.strategy = Strategy::anonymous();
  CHECK(signature_matches(debias, anon_goal, ontology));
}

TEST_CASE("find_matching orders by specificity") {
  rdf::Graph ontology = fixture_ontology();
  Catalog catalog;
  Fragment debias = fixture_fragments("debias.frag", ontology).at(0);

  Fragment loose = debias;
  loose.id = "debias-any";
  loose.signature.strategy = Strategy::anonymous();

  Fragment sourced = debias;
  sourced.id = "debias-sourced";
  sourced.signature.source = Intention::of(kDom + "Preprocess", kDom + "Image");

  catalog.add(loose, ontology);
  catalog.add(debias, ontology);
  catalog.add(sourced, ontology);

  auto matches = catalog.matching(debias_goal(), ontology);
  REQUIRE(matches.size() == 2);  // sourced requires a non-start source
  CHECK(matches[0]->id == "debias");      // strategy beats target-only
  CHECK(matches[1]->id == "debias-any");

  Section sourced_goal = debias_goal();
  sourced_goal.source = Intention::of(kDom + "Preprocess", kDom + "Image");
  auto sourced_matches = catalog.matching(sourced_goal, ontology);
  REQUIRE(sourced_matches.size() == 3);
  CHECK(sourced_matches[0]->id == "debias-sourced");  // source+strategy first

  SUBCASE("empty catalog matches nothing") {
    Catalog empty;
    CHECK(empty.matching(debias_goal(), ontology).empty());
  }
  SUBCASE("matching results satisfy signature_matches") {
    for (const Fragment* f : sourced_matches) {
      CHECK(signature_matches(*f, sourced_goal, ontology));
    }
  }
}

TEST_CASE("widening a signature never shrinks the matched goals") {
  testing::Rng rng(11001);
  rdf::Graph ontology = testing::random_class_dag(rng, 6);
  for (int round = 0; round < 200; ++round) {
    Fragment f;
    f.id = "f";
    f.kind = FragmentKind::Operational;
    f.signature = testing::random_section(rng);
    Fragment wider = f;
    if (testing::chance(rng, 0.5)) {
      wider.signature.strategy = Strategy::anonymous();
    } else {
      wider.signature.source = Intention::start();
    }
    Section goal = testing::random_section(rng);
    if (signature_matches(f, goal, ontology)) {
      REQUIRE(signature_matches(wider, goal, ontology));
    }
  }
}

TEST_CASE("compile_to_rule emits one concrete rule for the debias fragment") {
  rdf::Graph ontology = fixture_ontology();
  Fragment debias = fixture_fragments("debias.frag", ontology).at(0);
  std::vector<std::string> rules = compile_to_rule(debias);
  REQUIRE(rules.size() == 1);

  sparql::Query rule = sparql::parse_query(rules[0]);
  CHECK(rule.form == sparql::QueryForm::Construct);
  // The body keeps the three profile patterns plus the filters.
  int input_patterns = 0;
  int output_patterns = 0;
  for (const sparql::PatternElement& el : rule.where) {
    if (const auto* t = std::get_if<rdf::Triple>(&el)) {
      if (t->predicate == rdf::vocab::process_has_input()) ++input_patterns;
      if (t->predicate == rdf::vocab::process_has_output()) ++output_patterns;
    }
  }
  CHECK(input_patterns == 1);
  CHECK(output_patterns == 2);
  // The head concludes achievement of the goal by the projected service.
  bool achieved = false;
  for (const rdf::Triple& t : rule.construct_template) {
    achieved = achieved || (t.predicate == rdf::vocab::satis_achieved_by() &&
                            t.object == Term::variable("service"));
  }
  CHECK(achieved);
  CHECK(rule_filename(debias, 0) == "debias.0.rq");
}

TEST_CASE("compile_to_rule emits one abstract rule per body path") {
  rdf::Graph ontology = fixture_ontology();
  Fragment preprocess = fixture_fragments("preprocess.frag", ontology).at(0);
  std::vector<std::string> rules = compile_to_rule(preprocess);
  CHECK(rules.size() == testing::naive_paths(preprocess.body_map()).size());
  CHECK(rules.size() == 6);

  for (const std::string& text : rules) {
    sparql::Query rule = sparql::parse_query(text);
    // One achievement premise per path section, mirrored in the head.
    int premises = 0;
    for (const sparql::PatternElement& el : rule.where) {
      if (const auto* t = std::get_if<rdf::Triple>(&el)) {
        if (t->predicate == rdf::vocab::satis_achieved_by()) ++premises;
      }
    }
    CHECK(premises == 3);
    int conclusions = 0;
    for (const rdf::Triple& t : rule.construct_template) {
      if (t.predicate == rdf::vocab::satis_achieved_by()) ++conclusions;
    }
    CHECK(conclusions == premises);
  }
}

TEST_CASE("a two-section path yields two achievement premises") {
  rdf::Graph ontology = fixture_ontology();
  Fragment f;
  f.id = "twostep";
  f.kind = FragmentKind::Intentional;
  f.signature = {Intention::start(), Intention::of(kDom + "Preprocess", kDom + "Image"),
                 Strategy::anonymous()};
  Map m;
  m.name = "twostep";
  Intention mid = Intention::of(kDom + "Homogenise", kDom + "Image");
  m.sections.insert({Intention::start(), mid, Strategy::anonymous()});
  m.sections.insert({mid, Intention::stop(), Strategy::anonymous()});
  f.body = m;

  std::vector<std::string> rules = compile_to_rule(f);
  REQUIRE(rules.size() == 1);
  sparql::Query rule = sparql::parse_query(rules[0]);
  int premises = 0;
  for (const sparql::PatternElement& el : rule.where) {
    if (const auto* t = std::get_if<rdf::Triple>(&el)) {
      if (t->predicate == rdf::vocab::satis_achieved_by()) ++premises;
    }
  }
  CHECK(premises == 2);
}

TEST_CASE("compiled rules re-parse for random fragments") {
  testing::Rng rng(11002);
  for (int round = 0; round < 50; ++round) {
    Fragment f;
    f.id = "gen";
    if (testing::chance(rng, 0.5)) {
      f.kind = FragmentKind::Operational;
      f.signature = testing::random_section(rng);
      f.body = testing::random_select_query(rng, 3, 2);
      sparql::Query& q = std::get<sparql::Query>(f.body);
      q.projection.resize(1);
    } else {
      f.kind = FragmentKind::Intentional;
      f.signature = testing::random_section(rng);
      f.body = testing::random_map(rng, 6);
    }
    std::vector<std::string> rules = compile_to_rule(f);
    if (f.kind == FragmentKind::Intentional) {
      REQUIRE(rules.size() == paths(f.body_map()).size());
    } else {
      REQUIRE(rules.size() == 1);
    }
    for (const std::string& text : rules) {
      sparql::Query rule = sparql::parse_query(text);
      REQUIRE(rule.form == sparql::QueryForm::Construct);
      REQUIRE(sparql::parse_query(sparql::serialize_query(rule)) == rule);
    }
  }
}
