#include <algorithm>
#include <set>

#include "satis/rdfs.hpp"
#include "satis/sparql.hpp"

namespace satis::sparql {

namespace {

// Blank nodes in a where clause behave as variables that cannot be
// projected. Rewrite them onto reserved "_:" variable names.
rdf::Term as_pattern_term(const rdf::Term& t) {
  if (t.is_blank()) return rdf::Term::variable("_:" + t.text);
  return t;
}

rdf::Triple as_pattern(const rdf::Triple& t) {
  return {as_pattern_term(t.subject), as_pattern_term(t.predicate), as_pattern_term(t.object)};
}

int bound_positions(const rdf::Triple& t, const std::set<std::string>& bound) {
  int n = 0;
  for (const rdf::Term* term : {&t.subject, &t.predicate, &t.object}) {
    if (!term->is_variable() || bound.count(term->text)) ++n;
  }
  return n;
}

void collect_vars(const rdf::Triple& t, std::set<std::string>& vars) {
  for (const rdf::Term* term : {&t.subject, &t.predicate, &t.object}) {
    if (term->is_variable()) vars.insert(term->text);
  }
}

bool passes(const Filter& f, const rdf::Term& value, const rdf::Graph& ontology) {
  if (value.is_literal()) {
    throw Error(ErrorKind::TypeMismatch,
                "filter on ?" + f.variable + " applies to IRIs, got literal \"" + value.text +
                    "\"");
  }
  switch (f.op) {
    case FilterOp::Equal: return value == f.constant;
    case FilterOp::IriEqual: return value.is_iri() && value == f.constant;
    case FilterOp::SubclassOf:
      return value.is_iri() && rdf::is_subclass(ontology, value, f.constant);
  }
  return false;
}

}  // namespace

ResultSet evaluate(const Query& q, const rdf::Graph& data, const rdf::Graph& ontology) {
  struct Step {
    const rdf::Triple* pattern = nullptr;  // null for filters
    const Filter* filter = nullptr;
  };

  std::vector<rdf::Triple> patterns;
  std::vector<const Filter*> filters;
  patterns.reserve(q.where.size());
  for (const PatternElement& el : q.where) {
    if (const auto* t = std::get_if<rdf::Triple>(&el)) {
      patterns.push_back(as_pattern(*t));
    } else {
      filters.push_back(&std::get<Filter>(el));
    }
  }

  // Order: most-bound pattern first, filters as soon as their variable is
  // bound. Result semantics are order independent; this is just the plan.
  std::vector<Step> plan;
  std::set<std::string> bound;
  std::vector<bool> pattern_done(patterns.size(), false);
  std::vector<bool> filter_done(filters.size(), false);
  auto schedule_filters = [&] {
    for (std::size_t i = 0; i < filters.size(); ++i) {
      if (!filter_done[i] && bound.count(filters[i]->variable)) {
        plan.push_back({nullptr, filters[i]});
        filter_done[i] = true;
      }
    }
  };
  for (std::size_t n = 0; n < patterns.size(); ++n) {
    schedule_filters();
    std::size_t best = patterns.size();
    int best_score = -1;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (pattern_done[i]) continue;
      int score = bound_positions(patterns[i], bound);
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    plan.push_back({&patterns[best], nullptr});
    pattern_done[best] = true;
    collect_vars(patterns[best], bound);
  }
  schedule_filters();
  for (std::size_t i = 0; i < filters.size(); ++i) {
    if (!filter_done[i]) {
      throw Error(ErrorKind::UnboundFilterVariable,
                  "filter variable ?" + filters[i]->variable + " is never bound");
    }
  }

  std::vector<rdf::Bindings> rows{rdf::Bindings{}};
  for (const Step& step : plan) {
    std::vector<rdf::Bindings> next;
    if (step.pattern) {
      for (const rdf::Bindings& row : rows) {
        for (rdf::Bindings& extended : data.match(*step.pattern, row)) {
          next.push_back(std::move(extended));
        }
      }
    } else {
      for (const rdf::Bindings& row : rows) {
        if (passes(*step.filter, row.at(step.filter->variable), ontology)) {
          next.push_back(row);
        }
      }
    }
    rows = std::move(next);
    if (rows.empty()) break;
  }

  ResultSet result;
  if (q.form == QueryForm::Select) {
    std::set<rdf::Bindings> projected;
    for (const rdf::Bindings& row : rows) {
      rdf::Bindings out;
      for (const std::string& v : q.projection) {
        auto it = row.find(v);
        if (it != row.end()) out.emplace(*it);
      }
      projected.insert(std::move(out));
    }
    result.rows.assign(projected.begin(), projected.end());
  } else {
    std::set<rdf::Bindings> solutions(rows.begin(), rows.end());
    result.graph = rdf::Graph();
    for (const auto& [name, iri] : q.prefixes) result.graph.add_prefix(name, iri);

    // Distinct template blank labels, in first-appearance order.
    std::vector<std::string> blanks;
    for (const rdf::Triple& t : q.construct_template) {
      for (const rdf::Term* term : {&t.subject, &t.predicate, &t.object}) {
        if (term->is_blank() && std::find(blanks.begin(), blanks.end(), term->text) == blanks.end()) {
          blanks.push_back(term->text);
        }
      }
    }

    std::size_t solution_index = 0;
    for (const rdf::Bindings& row : solutions) {
      auto instantiate = [&](const rdf::Term& t) -> std::optional<rdf::Term> {
        if (t.is_variable()) {
          auto it = row.find(t.text);
          if (it == row.end()) return std::nullopt;
          return it->second;
        }
        if (t.is_blank()) {
          auto pos = std::find(blanks.begin(), blanks.end(), t.text) - blanks.begin();
          return rdf::Term::blank("b" + std::to_string(pos) + "_" +
                                  std::to_string(solution_index));
        }
        return t;
      };
      for (const rdf::Triple& t : q.construct_template) {
        auto s = instantiate(t.subject);
        auto p = instantiate(t.predicate);
        auto o = instantiate(t.object);
        if (s && p && o) result.graph.insert({*s, *p, *o});
      }
      ++solution_index;
    }
  }
  return result;
}

}  // namespace satis::sparql
