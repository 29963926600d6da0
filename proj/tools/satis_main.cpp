#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "satis/fragment_io.hpp"
#include "satis/map_rdf.hpp"
#include "satis/render.hpp"
#include "satis/turtle.hpp"
#include "satis/workspace.hpp"

namespace {

constexpr int kExitError = 2;

struct WorkspaceArgs {
  std::vector<std::string> ontology;
  std::vector<std::string> services;
  std::vector<std::string> fragments;

  void attach(CLI::App* cmd) {
    cmd->add_option("--ontology", ontology, "Domain ontology files (.ttl)");
    cmd->add_option("--services", services, "Service description files (.ttl)");
    cmd->add_option("--fragments", fragments, "Fragment files (.frag or .ttl)");
  }

  satis::Workspace load() const {
    return satis::Workspace::load({ontology, services, fragments});
  }
};

/// Loads and insists on a clean workspace; diagnostics go to stderr.
bool require_ok(const satis::Workspace& ws) {
  for (const std::string& d : ws.diagnostics) std::cerr << d << "\n";
  return ws.ok();
}

int default_depth() {
  if (const char* env = std::getenv("SATIS_DEPTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    std::cerr << "ignoring invalid SATIS_DEPTH value: " << env << "\n";
  }
  return 16;
}

int run_load(const WorkspaceArgs& args) {
  satis::Workspace ws = args.load();
  bool ok = require_ok(ws);
  std::size_t operational = 0;
  std::size_t intentional = 0;
  for (const satis::Fragment* f : ws.catalog.all()) {
    (f->kind == satis::FragmentKind::Operational ? operational : intentional)++;
  }
  std::cout << "ontology-triples: " << ws.ontology_raw.size() << "\n";
  std::cout << "ontology-closure-triples: " << ws.ontology.size() << "\n";
  std::cout << "services: " << ws.registry.services().size() << "\n";
  std::cout << "service-triples: " << ws.registry.data().size() << "\n";
  std::cout << "fragments: " << ws.catalog.size() << "\n";
  std::cout << "operational-fragments: " << operational << "\n";
  std::cout << "intentional-fragments: " << intentional << "\n";
  return ok ? 0 : kExitError;
}

int run_validate(const std::string& map_file, const WorkspaceArgs& args) {
  std::vector<std::pair<std::string, satis::Map>> maps;
  try {
    if (map_file.ends_with(".frag")) {
      satis::Workspace ws = args.load();
      if (!require_ok(ws)) return kExitError;
      satis::NameContext ctx{&ws.ontology, ws.prefixes};
      for (satis::Fragment& f : satis::parse_fragment_dsl(satis::read_file(map_file), ctx)) {
        if (f.kind == satis::FragmentKind::Intentional) {
          maps.emplace_back(f.id, f.body_map());
        }
      }
      if (maps.empty()) {
        std::cerr << map_file << ": no intentional fragment with a map body\n";
        return kExitError;
      }
    } else {
      satis::rdf::Graph g = satis::rdf::parse_turtle(satis::read_file(map_file));
      std::vector<satis::rdf::Term> nodes = satis::find_map_nodes(g);
      if (nodes.empty()) {
        std::cerr << map_file << ": no map:Map node found\n";
        return kExitError;
      }
      for (const satis::rdf::Term& node : nodes) {
        satis::Map m = satis::rdf_to_map(g, node);
        maps.emplace_back(m.name.empty() ? node.lexical() : m.name, m);
      }
    }
  } catch (const satis::Error& e) {
    std::cerr << map_file << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }

  std::size_t total = 0;
  for (const auto& [name, m] : maps) {
    satis::ValidationReport report = satis::validate_map(m);
    for (const std::string& v : report.violations) {
      std::cout << name << ": " << v << "\n";
    }
    total += report.violations.size();
  }
  std::cout << "# violations: " << total << "\n";
  return total == 0 ? 0 : kExitError;
}

int run_fragments(const WorkspaceArgs& args, const std::string& verb, const std::string& object) {
  satis::Workspace ws = args.load();
  if (!require_ok(ws)) return kExitError;

  satis::Intention filter;  // wildcards where unspecified
  try {
    if (!verb.empty()) filter.verb = satis::ConceptRef::of(ws.resolve_concept(verb));
    if (!object.empty()) filter.object = satis::ConceptRef::of(ws.resolve_concept(object));
  } catch (const satis::Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }

  std::size_t shown = 0;
  for (const satis::Fragment* f : ws.catalog.all()) {
    if (!satis::intention_matches(filter, f->signature.target, ws.ontology)) continue;
    std::cout << f->id << "\t" << to_string(f->kind) << "\t" << to_string(f->signature) << "\n";
    ++shown;
  }
  std::cout << "# fragments: " << shown << "\n";
  return 0;
}

struct RenderArgs {
  std::string verb;
  std::string object;
  std::string strategy;
  std::string source_verb;
  std::string source_object;
  int depth = 0;
  std::string trace_file;
  bool explain_tree = false;
};

int run_render(const WorkspaceArgs& args, const RenderArgs& r) {
  satis::Workspace ws = args.load();
  if (!require_ok(ws)) return kExitError;

  satis::RenderRequest request;
  request.max_depth = r.depth > 0 ? r.depth : default_depth();
  try {
    request.goal.target =
        satis::Intention::of(ws.resolve_concept(r.verb), ws.resolve_concept(r.object));
    if (!r.strategy.empty()) {
      request.goal.strategy = satis::Strategy::by(ws.resolve_concept(r.strategy));
    }
    if (!r.source_verb.empty() || !r.source_object.empty()) {
      satis::Intention source;
      if (!r.source_verb.empty()) {
        source.verb = satis::ConceptRef::of(ws.resolve_concept(r.source_verb));
      }
      if (!r.source_object.empty()) {
        source.object = satis::ConceptRef::of(ws.resolve_concept(r.source_object));
      }
      request.goal.source = source;
    } else {
      request.goal.source = satis::Intention::start();
    }
  } catch (const satis::Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }

  satis::RenderReport report;
  try {
    report = satis::render(request, ws.catalog, ws.registry, ws.ontology);
  } catch (const satis::Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }

  for (const std::string& s : report.services) std::cout << s << "\n";
  std::cout << "# services: " << report.services.size() << "\n";

  if (r.explain_tree) std::cerr << satis::explain(report);
  if (!r.trace_file.empty()) {
    std::ofstream out(r.trace_file, std::ios::binary);
    if (!out) {
      std::cerr << "io error: cannot write trace file: " << r.trace_file << "\n";
      return kExitError;
    }
    out << satis::machine_report(report);
  }
  return 0;
}

int run_export_rules(const WorkspaceArgs& args, const std::string& out_dir) {
  satis::Workspace ws = args.load();
  if (!require_ok(ws)) return kExitError;

  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "io error: cannot create directory: " << out_dir << "\n";
    return kExitError;
  }

  std::size_t written = 0;
  for (const satis::Fragment* f : ws.catalog.all()) {
    std::vector<std::string> rules;
    try {
      rules = satis::compile_to_rule(*f);
    } catch (const satis::Error& e) {
      std::cerr << "fragment " << f->id << ": " << to_string(e.kind()) << ": " << e.what()
                << "\n";
      return kExitError;
    }
    for (std::size_t i = 0; i < rules.size(); ++i) {
      std::string name = satis::rule_filename(*f, i);
      std::ofstream out(std::filesystem::path(out_dir) / name, std::ios::binary);
      if (!out) {
        std::cerr << "io error: cannot write rule file: " << name << "\n";
        return kExitError;
      }
      out << rules[i];
      std::cout << name << "\n";
      ++written;
    }
  }
  std::cout << "# rules: " << written << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SATIS: goal-driven service discovery over a semantic memory"};
  app.require_subcommand(1);

  WorkspaceArgs load_args;
  CLI::App* load_cmd = app.add_subcommand("load", "Parse and validate a workspace, print counts");
  load_args.attach(load_cmd);

  std::string map_file;
  WorkspaceArgs validate_args;
  CLI::App* validate_cmd = app.add_subcommand("validate", "Validate a map file");
  validate_cmd->add_option("--map", map_file, "Map file (.ttl with a map:Map node, or .frag)")
      ->required();
  validate_args.attach(validate_cmd);

  WorkspaceArgs fragments_args;
  std::string filter_verb;
  std::string filter_object;
  CLI::App* fragments_cmd = app.add_subcommand("fragments", "List catalog fragments");
  fragments_args.attach(fragments_cmd);
  fragments_cmd->add_option("--verb", filter_verb, "Filter by target verb");
  fragments_cmd->add_option("--object", filter_object, "Filter by target object (subsumption)");

  WorkspaceArgs render_args;
  RenderArgs render_opts;
  CLI::App* render_cmd = app.add_subcommand("render", "Resolve a goal to service descriptions");
  render_args.attach(render_cmd);
  render_cmd->add_option("--verb", render_opts.verb, "Goal verb")->required();
  render_cmd->add_option("--object", render_opts.object, "Goal object")->required();
  render_cmd->add_option("--strategy", render_opts.strategy, "Goal strategy manner");
  render_cmd->add_option("--source-verb", render_opts.source_verb, "Goal source verb");
  render_cmd->add_option("--source-object", render_opts.source_object, "Goal source object");
  render_cmd->add_option("--depth", render_opts.depth, "Proof depth limit (default 16)");
  render_cmd->add_option("--trace", render_opts.trace_file, "Write the machine trace here");
  render_cmd->add_flag("--explain", render_opts.explain_tree, "Print the proof tree to stderr");

  WorkspaceArgs export_args;
  std::string out_dir;
  CLI::App* export_cmd = app.add_subcommand("export-rules", "Compile fragments to rule files");
  export_args.attach(export_cmd);
  export_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (load_cmd->parsed()) return run_load(load_args);
    if (validate_cmd->parsed()) return run_validate(map_file, validate_args);
    if (fragments_cmd->parsed()) return run_fragments(fragments_args, filter_verb, filter_object);
    if (render_cmd->parsed()) return run_render(render_args, render_opts);
    if (export_cmd->parsed()) return run_export_rules(export_args, out_dir);
  } catch (const satis::Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
