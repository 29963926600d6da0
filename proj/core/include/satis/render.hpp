#pragma once

#include <string>
#include <variant>
#include <vector>

#include "satis/fragment.hpp"
#include "satis/registry.hpp"

namespace satis {

struct RenderRequest {
  Section goal;        // source defaults to start, strategy to anonymous
  int max_depth = 16;  // intentional refinement levels allowed
};

struct ProofNode;

/// Proof state of one path section: the alternatives found for it, or a
/// trivially complete marker for sections that target the stop intention
/// (reaching stop needs no services).
struct SectionProof {
  Section section;
  std::vector<ProofNode> alternatives;
  bool trivially_complete = false;

  bool succeeded() const;
};

/// A matching operational fragment whose body query produced rows. `rows`
/// keeps the full solution bindings for traceability; `services` is the
/// projected service column.
struct OperationalLeaf {
  std::vector<rdf::Bindings> rows;
  std::vector<std::string> services;  // sorted, deduplicated
};

/// One start-to-stop path of a matching intentional fragment's body map,
/// with one SectionProof per path section.
struct IntentionalBranch {
  std::size_t path_index = 0;
  std::vector<SectionProof> sections;
};

struct FailureNode {
  std::string reason;
};

/// One proof attempt for a goal section: which fragment was applied and
/// what came of it. Intentional fragments produce one node per body path.
struct ProofNode {
  Section section;
  std::string fragment_id;  // empty when no fragment applies
  std::variant<OperationalLeaf, IntentionalBranch, FailureNode> detail;

  bool succeeded() const;
  void collect_services(std::set<std::string>& out) const;
};

struct Diagnostics {
  int depth_limit_hits = 0;
  int cycles_cut = 0;
  std::vector<std::string> unmatched_goals;  // deduplicated, sorted
};

struct RenderReport {
  Section goal;
  std::vector<ProofNode> proofs;
  std::vector<std::string> services;  // union over successful proofs, sorted
  Diagnostics diagnostics;
};

/// Backward-chaining proof search: explores every matching fragment (not
/// first-match), every body path, and aggregates services from successful
/// proofs. Failed branches stay in the report for traceability. Cycles are
/// cut by a stack occurs-check on structurally equal goals; depth 0 stops
/// recursion. Pure: identical inputs give identical reports. Throws
/// Error(InvalidGoal) when the goal target is wildcarded or not ordinary.
RenderReport render(const RenderRequest& req, const Catalog& catalog, const Registry& registry,
                    const rdf::Graph& ontology);

/// One proof node per matching fragment (per body path for intentional
/// fragments). `stack` holds the goals currently being proved.
std::vector<ProofNode> prove_section(const Section& goal, int depth,
                                     std::vector<Section>& stack, const Catalog& catalog,
                                     const Registry& registry, const rdf::Graph& ontology,
                                     Diagnostics& diag);

/// Human-readable indented proof tree; stable formatting.
std::string explain(const RenderReport& report);

/// Machine-readable line format (see README for the field layout).
std::string machine_report(const RenderReport& report);

}  // namespace satis
