#include "satis/render.hpp"

#include <algorithm>

namespace satis {

bool SectionProof::succeeded() const {
  if (trivially_complete) return true;
  return std::any_of(alternatives.begin(), alternatives.end(),
                     [](const ProofNode& n) { return n.succeeded(); });
}

bool ProofNode::succeeded() const {
  if (std::holds_alternative<OperationalLeaf>(detail)) return true;
  if (const auto* branch = std::get_if<IntentionalBranch>(&detail)) {
    return std::all_of(branch->sections.begin(), branch->sections.end(),
                       [](const SectionProof& s) { return s.succeeded(); });
  }
  return false;
}

void ProofNode::collect_services(std::set<std::string>& out) const {
  if (!succeeded()) return;
  if (const auto* leaf = std::get_if<OperationalLeaf>(&detail)) {
    out.insert(leaf->services.begin(), leaf->services.end());
    return;
  }
  if (const auto* branch = std::get_if<IntentionalBranch>(&detail)) {
    for (const SectionProof& sp : branch->sections) {
      for (const ProofNode& alt : sp.alternatives) alt.collect_services(out);
    }
  }
}

std::vector<ProofNode> prove_section(const Section& goal, int depth, std::vector<Section>& stack,
                                     const Catalog& catalog, const Registry& registry,
                                     const rdf::Graph& ontology, Diagnostics& diag) {
  std::vector<ProofNode> out;
  if (depth <= 0) {
    ++diag.depth_limit_hits;
    out.push_back({goal, "", FailureNode{"depth limit"}});
    return out;
  }
  if (std::find(stack.begin(), stack.end(), goal) != stack.end()) {
    ++diag.cycles_cut;
    out.push_back({goal, "", FailureNode{"cycle"}});
    return out;
  }

  std::vector<const Fragment*> fragments = catalog.matching(goal, ontology);
  if (fragments.empty()) {
    diag.unmatched_goals.push_back(to_string(goal));
    out.push_back({goal, "", FailureNode{"no matching fragments"}});
    return out;
  }

  stack.push_back(goal);
  for (const Fragment* f : fragments) {
    if (f->kind == FragmentKind::Operational) {
      ProofNode node{goal, f->id, FailureNode{}};
      try {
        // Evaluate with every pattern variable projected so the trace
        // keeps the full bindings, then read the service column.
        const std::string& svc_var = f->query().projection.at(0);
        sparql::Query full = f->query();
        full.projection.clear();
        for (const sparql::PatternElement& el : full.where) {
          if (const auto* t = std::get_if<rdf::Triple>(&el)) {
            for (const rdf::Term* term : {&t->subject, &t->predicate, &t->object}) {
              if (term->is_variable()) full.projection.push_back(term->text);
            }
          }
        }
        std::sort(full.projection.begin(), full.projection.end());
        full.projection.erase(std::unique(full.projection.begin(), full.projection.end()),
                              full.projection.end());
        OperationalLeaf leaf;
        leaf.rows = sparql::evaluate(full, registry.data(), ontology).rows;
        if (leaf.rows.empty()) {
          node.detail = FailureNode{"query returned no rows"};
        } else {
          std::set<std::string> services;
          for (const rdf::Bindings& row : leaf.rows) {
            auto it = row.find(svc_var);
            if (it != row.end() && it->second.is_iri()) services.insert(it->second.text);
          }
          leaf.services.assign(services.begin(), services.end());
          node.detail = std::move(leaf);
        }
      } catch (const Error& e) {
        node.detail = FailureNode{std::string(to_string(e.kind())) + ": " + e.what()};
      }
      out.push_back(std::move(node));
      continue;
    }

    // Intentional: one branch per start-to-stop path of the body map.
    std::vector<std::vector<Section>> body_paths;
    try {
      body_paths = paths(f->body_map());
    } catch (const Error& e) {
      out.push_back({goal, f->id, FailureNode{std::string(to_string(e.kind())) + ": " + e.what()}});
      continue;
    }
    std::size_t path_index = 0;
    for (const std::vector<Section>& path : body_paths) {
      IntentionalBranch branch;
      branch.path_index = path_index++;
      for (const Section& section : path) {
        SectionProof sp;
        sp.section = section;
        if (section.target.is_stop()) {
          // Reaching stop terminates the path; nothing to operationalise.
          sp.trivially_complete = true;
        } else {
          sp.alternatives =
              prove_section(section, depth - 1, stack, catalog, registry, ontology, diag);
        }
        branch.sections.push_back(std::move(sp));
      }
      out.push_back({goal, f->id, std::move(branch)});
    }
  }
  stack.pop_back();
  return out;
}

RenderReport render(const RenderRequest& req, const Catalog& catalog, const Registry& registry,
                    const rdf::Graph& ontology) {
  const Intention& target = req.goal.target;
  if (target.kind != IntentionKind::Ordinary || target.verb.is_wildcard() ||
      target.object.is_wildcard()) {
    throw Error(ErrorKind::InvalidGoal,
                "goal target must be an ordinary intention with a concrete verb and object");
  }

  RenderReport report;
  report.goal = req.goal;
  std::vector<Section> stack;
  report.proofs =
      prove_section(req.goal, req.max_depth, stack, catalog, registry, ontology,
                    report.diagnostics);

  std::set<std::string> services;
  for (const ProofNode& node : report.proofs) node.collect_services(services);
  report.services.assign(services.begin(), services.end());

  std::sort(report.diagnostics.unmatched_goals.begin(), report.diagnostics.unmatched_goals.end());
  report.diagnostics.unmatched_goals.erase(
      std::unique(report.diagnostics.unmatched_goals.begin(),
                  report.diagnostics.unmatched_goals.end()),
      report.diagnostics.unmatched_goals.end());
  return report;
}

namespace {

std::string indent(int depth) { return std::string(static_cast<std::size_t>(depth) * 2, ' '); }

std::string row_to_string(const rdf::Bindings& row) {
  std::string out;
  for (const auto& [name, term] : row) {
    if (!out.empty()) out += " ";
    out += "?" + name + "=" + (term.is_iri() ? term.text : term.lexical());
  }
  return out;
}

void explain_node(const ProofNode& node, int depth, std::string& out);

void explain_section_proof(const SectionProof& sp, int depth, std::string& out) {
  out += indent(depth) + "section " + to_string(sp.section);
  if (sp.trivially_complete) {
    out += ": complete (stop)\n";
    return;
  }
  out += sp.succeeded() ? ": ok\n" : ": failed\n";
  for (const ProofNode& alt : sp.alternatives) explain_node(alt, depth + 1, out);
}

void explain_node(const ProofNode& node, int depth, std::string& out) {
  if (const auto* failure = std::get_if<FailureNode>(&node.detail)) {
    if (node.fragment_id.empty()) {
      out += indent(depth) + failure->reason + "\n";
    } else {
      out += indent(depth) + "fragment " + node.fragment_id + ": failed: " + failure->reason +
             "\n";
    }
    return;
  }
  if (const auto* leaf = std::get_if<OperationalLeaf>(&node.detail)) {
    out += indent(depth) + "fragment " + node.fragment_id + " [operational]: " +
           std::to_string(leaf->rows.size()) + (leaf->rows.size() == 1 ? " row\n" : " rows\n");
    for (const rdf::Bindings& row : leaf->rows) {
      out += indent(depth + 1) + row_to_string(row) + "\n";
    }
    return;
  }
  const auto& branch = std::get<IntentionalBranch>(node.detail);
  out += indent(depth) + "fragment " + node.fragment_id + " [intentional] path " +
         std::to_string(branch.path_index) + (node.succeeded() ? ": ok\n" : ": failed\n");
  for (const SectionProof& sp : branch.sections) explain_section_proof(sp, depth + 1, out);
}

}  // namespace

std::string explain(const RenderReport& report) {
  std::string out = "goal: " + to_string(report.goal) + "\n";
  for (const ProofNode& node : report.proofs) explain_node(node, 0, out);
  out += "services (" + std::to_string(report.services.size()) + ")";
  if (report.services.empty()) {
    out += ": none\n";
  } else {
    out += ":";
    for (const std::string& s : report.services) out += " " + s;
    out += "\n";
  }
  if (report.diagnostics.depth_limit_hits || report.diagnostics.cycles_cut ||
      !report.diagnostics.unmatched_goals.empty()) {
    out += "diagnostics: depth-limit=" + std::to_string(report.diagnostics.depth_limit_hits) +
           " cycles=" + std::to_string(report.diagnostics.cycles_cut) +
           " unmatched=" + std::to_string(report.diagnostics.unmatched_goals.size()) + "\n";
  }
  return out;
}

namespace {

void machine_node(const ProofNode& node, const std::string& path, std::string& out);

void machine_section_proof(const SectionProof& sp, const std::string& path, std::string& out) {
  out += "node " + path + ": kind=section status=" + (sp.succeeded() ? "ok" : "failed");
  if (sp.trivially_complete) out += " note=stop";
  out += " section=" + to_string(sp.section) + "\n";
  std::size_t i = 0;
  for (const ProofNode& alt : sp.alternatives) {
    machine_node(alt, path + "." + std::to_string(i++), out);
  }
}

void machine_node(const ProofNode& node, const std::string& path, std::string& out) {
  if (const auto* failure = std::get_if<FailureNode>(&node.detail)) {
    out += "node " + path + ":";
    if (!node.fragment_id.empty()) out += " fragment=" + node.fragment_id;
    out += " kind=failure reason=\"" + failure->reason + "\" section=" + to_string(node.section) +
           "\n";
    return;
  }
  if (const auto* leaf = std::get_if<OperationalLeaf>(&node.detail)) {
    out += "node " + path + ": fragment=" + node.fragment_id +
           " kind=operational status=ok rows=" + std::to_string(leaf->rows.size()) +
           " section=" + to_string(node.section) + "\n";
    std::size_t r = 0;
    for (const rdf::Bindings& row : leaf->rows) {
      out += "node " + path + " row " + std::to_string(r++) + ": ";
      std::string fields;
      for (const auto& [name, term] : row) {
        if (!fields.empty()) fields += " ";
        fields += name + "=" + (term.is_iri() ? term.text : term.lexical());
      }
      out += fields + "\n";
    }
    for (const std::string& s : leaf->services) {
      out += "node " + path + " service: " + s + "\n";
    }
    return;
  }
  const auto& branch = std::get<IntentionalBranch>(node.detail);
  out += "node " + path + ": fragment=" + node.fragment_id + " kind=intentional path=" +
         std::to_string(branch.path_index) +
         " status=" + (node.succeeded() ? "ok" : "failed") +
         " section=" + to_string(node.section) + "\n";
  std::size_t i = 0;
  for (const SectionProof& sp : branch.sections) {
    machine_section_proof(sp, path + "." + std::to_string(i++), out);
  }
}

}  // namespace

std::string machine_report(const RenderReport& report) {
  std::string out = "satis-trace 1\n";
  out += "goal: " + to_string(report.goal) + "\n";
  out += "services: " + std::to_string(report.services.size()) + "\n";
  for (const std::string& s : report.services) out += "service: " + s + "\n";
  out += "diagnostics: depth-limit=" + std::to_string(report.diagnostics.depth_limit_hits) +
         " cycles=" + std::to_string(report.diagnostics.cycles_cut) +
         " unmatched=" + std::to_string(report.diagnostics.unmatched_goals.size()) + "\n";
  for (const std::string& goal : report.diagnostics.unmatched_goals) {
    out += "unmatched: " + goal + "\n";
  }
  out += "proofs: " + std::to_string(report.proofs.size()) + "\n";
  std::size_t i = 0;
  for (const ProofNode& node : report.proofs) {
    machine_node(node, std::to_string(i++), out);
  }
  return out;
}

}  // namespace satis
