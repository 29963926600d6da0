#include "satis/fragment_io.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "satis/map_rdf.hpp"

namespace satis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::string_view strip_comment(std::string_view line) {
  // '#' starts a comment unless inside a <...> IRI.
  bool in_iri = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '<') in_iri = true;
    if (line[i] == '>') in_iri = false;
    if (line[i] == '#' && !in_iri) return line.substr(0, i);
  }
  return line;
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw Error(ErrorKind::Syntax, message, line, 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t depth = 0;
  std::size_t begin = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(trim(s.substr(begin, i - begin)));
      begin = i + 1;
    }
  }
  out.push_back(trim(s.substr(begin)));
  return out;
}

}  // namespace

std::string NameContext::resolve(std::string_view name) const {
  std::string n{trim(name)};
  if (n.empty()) throw Error(ErrorKind::UnknownConcept, "empty concept name");
  if (n.front() == '<' && n.back() == '>') {
    std::string iri = n.substr(1, n.size() - 2);
    if (iri.find(':') == std::string::npos) {
      throw Error(ErrorKind::UnknownConcept, "IRI is not absolute: " + n);
    }
    return iri;
  }
  if (auto colon = n.find(':'); colon != std::string::npos) {
    std::string prefix = n.substr(0, colon);
    auto it = prefixes.find(prefix);
    if (it == prefixes.end()) {
      throw Error(ErrorKind::UnknownPrefix, "unknown prefix '" + prefix + "'");
    }
    return it->second + n.substr(colon + 1);
  }
  // Bare name: unique local-name lookup over everything the ontology mentions.
  if (!ontology) throw Error(ErrorKind::UnknownConcept, "no ontology to resolve '" + n + "'");
  std::set<std::string> hits;
  for (const rdf::Triple& t : *ontology) {
    for (const rdf::Term* term : {&t.subject, &t.object}) {
      if (term->is_iri() && rdf::local_name(term->text) == n) hits.insert(term->text);
    }
  }
  if (hits.empty()) {
    throw Error(ErrorKind::UnknownConcept, "concept not declared in the ontology: " + n);
  }
  if (hits.size() > 1) {
    std::string msg = "concept name '" + n + "' is ambiguous:";
    for (const std::string& iri : hits) msg += " " + iri;
    throw Error(ErrorKind::UnknownConcept, msg);
  }
  return *hits.begin();
}

namespace {

class DslParser {
 public:
  DslParser(std::string_view text, const NameContext& ctx) : ctx_(ctx) {
    std::size_t begin = 0;
    while (begin <= text.size()) {
      std::size_t end = text.find('\n', begin);
      if (end == std::string_view::npos) end = text.size();
      lines_.push_back(text.substr(begin, end - begin));
      begin = end + 1;
      if (end == text.size()) break;
    }
  }

  std::vector<Fragment> run() {
    std::vector<Fragment> out;
    while (!at_end()) {
      std::string_view line = current();
      if (line.empty()) {
        advance();
        continue;
      }
      if (!line.starts_with("fragment")) {
        fail(line_number(), "expected 'fragment <id>', got '" + std::string(line) + "'");
      }
      out.push_back(parse_fragment());
    }
    return out;
  }

 private:
  bool at_end() const { return index_ >= lines_.size(); }
  int line_number() const { return static_cast<int>(index_) + 1; }
  std::string_view current() const { return trim(strip_comment(lines_[index_])); }
  void advance() { ++index_; }

  Intention parse_intention(std::string_view text, int line) {
    text = trim(text);
    if (text == "start") return Intention::start();
    if (text == "stop") return Intention::stop();
    if (!text.starts_with("intention(") || !text.ends_with(")")) {
      fail(line, "expected start, stop or intention(...), got '" + std::string(text) + "'");
    }
    std::string_view inner = text.substr(10, text.size() - 11);
    std::vector<std::string_view> parts = split(inner, ',');
    if (parts.size() < 2) fail(line, "intention(...) needs a verb and an object");

    Intention i;
    i.kind = IntentionKind::Ordinary;
    if (parts[0] != "*") i.verb = ConceptRef::of(ctx_.resolve(parts[0]));
    if (parts[1] != "*") i.object = ConceptRef::of(ctx_.resolve(parts[1]));
    for (std::size_t k = 2; k < parts.size(); ++k) {
      auto eq = parts[k].find('=');
      if (eq == std::string_view::npos) {
        fail(line, "intention parameter must be <role>=<Concept>");
      }
      Parameter p;
      p.role = std::string(trim(parts[k].substr(0, eq)));
      p.concept_iri = ctx_.resolve(parts[k].substr(eq + 1));
      if (p.role.empty()) fail(line, "intention parameter role is empty");
      i.parameters.push_back(std::move(p));
    }
    std::sort(i.parameters.begin(), i.parameters.end());
    i.parameters.erase(std::unique(i.parameters.begin(), i.parameters.end()),
                       i.parameters.end());
    return i;
  }

  Section parse_section_line(std::string_view text, int line) {
    // <src> -> <tgt> via <Manner|anonymous>
    auto arrow = text.find("->");
    if (arrow == std::string_view::npos) fail(line, "section needs '<src> -> <tgt>'");
    auto via = text.rfind(" via ");
    if (via == std::string_view::npos || via < arrow) {
      fail(line, "section needs 'via <Manner|anonymous>'");
    }
    Section s;
    s.source = parse_intention(text.substr(0, arrow), line);
    s.target = parse_intention(text.substr(arrow + 2, via - arrow - 2), line);
    std::string_view manner = trim(text.substr(via + 5));
    if (manner != "anonymous") s.strategy = Strategy::by(ctx_.resolve(manner));
    return s;
  }

  std::string parse_query_block(std::string_view first, int line) {
    auto open = first.find("<<");
    if (open == std::string_view::npos) fail(line, "query body must start with '<<'");
    std::string text{first.substr(open + 2)};
    while (true) {
      auto close = text.find(">>");
      if (close != std::string_view::npos) {
        text.resize(close);
        return text;
      }
      advance();
      if (at_end()) fail(line, "unterminated '<<' query block");
      text += "\n";
      text += lines_[index_];
    }
  }

  Fragment parse_fragment() {
    int start_line = line_number();
    std::string_view head = current();
    std::string id{trim(head.substr(8))};
    if (id.empty()) fail(start_line, "fragment id is missing");
    for (char c : id) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') {
        fail(start_line, "fragment id may only use letters, digits, '_' and '-'");
      }
    }
    advance();

    Fragment f;
    f.id = id;
    bool have_kind = false;
    bool have_target = false;
    f.signature.source = Intention::start();
    std::optional<sparql::Query> query;
    Map body_map;
    body_map.name = id + "-body";
    bool have_sections = false;

    while (!at_end()) {
      std::string_view line = current();
      int ln = line_number();
      if (line.empty() || line == "signature:" || line == "body:") {
        advance();
        continue;
      }
      if (line.starts_with("fragment")) break;

      if (line.starts_with("kind:")) {
        std::string_view v = trim(line.substr(5));
        if (v == "operational") f.kind = FragmentKind::Operational;
        else if (v == "intentional") f.kind = FragmentKind::Intentional;
        else fail(ln, "kind must be operational or intentional");
        have_kind = true;
      } else if (line.starts_with("author:")) {
        f.provenance.author = std::string(trim(line.substr(7)));
      } else if (line.starts_with("created:")) {
        f.provenance.created = std::string(trim(line.substr(8)));
      } else if (line.starts_with("source:")) {
        f.signature.source = parse_intention(line.substr(7), ln);
      } else if (line.starts_with("target:")) {
        f.signature.target = parse_intention(line.substr(7), ln);
        have_target = true;
      } else if (line.starts_with("strategy:")) {
        std::string_view v = trim(line.substr(9));
        if (v != "anonymous") f.signature.strategy = Strategy::by(ctx_.resolve(v));
      } else if (line.starts_with("query:")) {
        query = sparql::parse_query(parse_query_block(line.substr(6), ln));
      } else if (line.starts_with("map:") || line.starts_with("section ")) {
        std::string_view rest = line.starts_with("map:") ? trim(line.substr(4)) : line;
        if (rest.empty()) {
          advance();
          continue;
        }
        if (!rest.starts_with("section ")) fail(ln, "expected 'section <id>: ...'");
        auto colon = rest.find(':');
        if (colon == std::string_view::npos) fail(ln, "expected ':' after section id");
        body_map.sections.insert(parse_section_line(trim(rest.substr(colon + 1)), ln));
        have_sections = true;
      } else {
        fail(ln, "unrecognized line '" + std::string(line) + "'");
      }
      advance();
    }

    if (!have_kind) fail(start_line, "fragment " + id + " is missing 'kind:'");
    if (!have_target) fail(start_line, "fragment " + id + " is missing 'target:'");
    if (f.kind == FragmentKind::Operational) {
      if (!query) fail(start_line, "operational fragment " + id + " is missing 'query:'");
      f.body = std::move(*query);
    } else {
      if (!have_sections) {
        fail(start_line, "intentional fragment " + id + " has no map sections");
      }
      f.body = std::move(body_map);
    }
    return f;
  }

  const NameContext& ctx_;
  std::vector<std::string_view> lines_;
  std::size_t index_ = 0;
};

}  // namespace

std::vector<Fragment> parse_fragment_dsl(std::string_view text, const NameContext& ctx) {
  return DslParser(text, ctx).run();
}

std::vector<Fragment> fragments_from_rdf(const rdf::Graph& g) {
  namespace vocab = rdf::vocab;
  std::vector<Fragment> out;
  for (const rdf::Term& node : g.subjects(vocab::rdf_type(), vocab::satis_fragment())) {
    Fragment f;
    auto id = g.object(node, vocab::satis_id());
    if (!id || !id->is_literal() || id->text.empty()) {
      throw Error(ErrorKind::MalformedSection,
                  "fragment node " + node.lexical() + " is missing a satis:id literal");
    }
    f.id = id->text;

    auto kind = g.object(node, vocab::satis_kind());
    if (!kind || !kind->is_literal() ||
        (kind->text != "operational" && kind->text != "intentional")) {
      throw Error(ErrorKind::MalformedSection,
                  "fragment " + f.id + " needs satis:kind \"operational\" or \"intentional\"");
    }
    f.kind = kind->text == "operational" ? FragmentKind::Operational : FragmentKind::Intentional;

    auto sig = g.object(node, vocab::satis_has_signature());
    if (!sig) {
      throw Error(ErrorKind::MalformedSection,
                  "fragment " + f.id + " is missing satis:hasSignature");
    }
    f.signature = rdf_to_section(g, *sig);

    if (auto author = g.object(node, vocab::satis_author()); author && author->is_literal()) {
      f.provenance.author = author->text;
    }
    if (auto created = g.object(node, vocab::satis_created()); created && created->is_literal()) {
      f.provenance.created = created->text;
    }

    if (f.kind == FragmentKind::Operational) {
      auto text = g.object(node, vocab::satis_body_query());
      if (!text || !text->is_literal()) {
        throw Error(ErrorKind::MalformedSection,
                    "operational fragment " + f.id + " is missing a satis:bodyQuery literal");
      }
      f.body = sparql::parse_query(text->text);
    } else {
      auto map_node = g.object(node, vocab::satis_body_map());
      if (!map_node) {
        throw Error(ErrorKind::MalformedSection,
                    "intentional fragment " + f.id + " is missing satis:bodyMap");
      }
      Map m = rdf_to_map(g, *map_node);
      if (m.name.empty()) m.name = f.id + "-body";
      f.body = std::move(m);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace satis
