#include "satis/turtle.hpp"

#include <cctype>

namespace satis::rdf {

namespace {

bool name_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}
bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool valid_local_name(std::string_view s) {
  if (s.empty()) return true;  // `pfx:` names the namespace itself
  if (!name_start(s.front())) return false;
  for (char c : s) {
    if (!name_char(c)) return false;
  }
  return true;
}

struct Token {
  enum Kind { End, Dot, Semicolon, Comma, A, IriRef, PName, Blank, String, AtName } kind = End;
  std::string text;    // iri / prefix / label / value / directive name
  std::string local;   // local part of a PName
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (eof()) return tok;

    char c = peek();
    switch (c) {
      case '.': get(); tok.kind = Token::Dot; return tok;
      case ';': get(); tok.kind = Token::Semicolon; return tok;
      case ',': get(); tok.kind = Token::Comma; return tok;
      case '<': return lex_iri(tok);
      case '"': return lex_string(tok);
      case '@': {
        get();
        tok.kind = Token::AtName;
        tok.text = lex_bare_name(tok);
        return tok;
      }
      default: break;
    }
    if (c == '_' && peek(1) == ':') {
      get();
      get();
      tok.kind = Token::Blank;
      tok.text = lex_bare_name(tok);
      if (tok.text.empty()) fail(tok, "blank node label expected after '_:'");
      return tok;
    }
    if (name_start(c) || c == ':') return lex_pname(tok);
    fail(tok, std::string("unexpected character '") + c + "'");
    return tok;  // unreachable
  }

 private:
  bool eof() const { return pos_ >= src_.size(); }
  char peek(std::size_t off = 0) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }
  char get() {
    char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_space() {
    while (!eof()) {
      char c = peek();
      if (c == '#') {
        while (!eof() && peek() != '\n') get();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw Error(ErrorKind::Syntax, message, at.line, at.column);
  }

  std::string lex_bare_name(const Token&) {
    std::string out;
    while (!eof() && name_char(peek())) out += get();
    return out;
  }

  Token lex_iri(Token tok) {
    get();  // '<'
    tok.kind = Token::IriRef;
    while (true) {
      if (eof()) fail(tok, "unterminated IRI reference");
      char c = get();
      if (c == '>') break;
      if (c == '\n' || c == ' ' || c == '\t') fail(tok, "whitespace inside IRI reference");
      tok.text += c;
    }
    return tok;
  }

  Token lex_string(Token tok) {
    get();  // '"'
    tok.kind = Token::String;
    while (true) {
      if (eof()) fail(tok, "unterminated string literal");
      char c = get();
      if (c == '"') break;
      if (c == '\n') fail(tok, "newline inside string literal (use \\n)");
      if (c == '\\') {
        if (eof()) fail(tok, "unterminated escape sequence");
        char e = get();
        switch (e) {
          case 'n': tok.text += '\n'; break;
          case 't': tok.text += '\t'; break;
          case 'r': tok.text += '\r'; break;
          case '"': tok.text += '"'; break;
          case '\\': tok.text += '\\'; break;
          default: fail(tok, std::string("invalid escape sequence '\\") + e + "'");
        }
      } else {
        tok.text += c;
      }
    }
    return tok;
  }

  Token lex_pname(Token tok) {
    std::string first;
    while (!eof() && name_char(peek())) first += get();
    if (peek() != ':') {
      if (first == "a") {
        tok.kind = Token::A;
        return tok;
      }
      fail(tok, "expected ':' in prefixed name after '" + first + "'");
    }
    get();  // ':'
    tok.kind = Token::PName;
    tok.text = first;
    while (!eof() && name_char(peek())) tok.local += get();
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, const PrefixMap& base_prefixes)
      : lexer_(text), prefixes_(base_prefixes) {}

  Graph run() {
    Graph g;
    for (const auto& [name, iri] : prefixes_) g.add_prefix(name, iri);
    Token tok = lexer_.next();
    while (tok.kind != Token::End) {
      if (tok.kind == Token::AtName) {
        parse_directive(tok, g);
      } else {
        parse_statement(tok, g);
      }
      tok = lexer_.next();
    }
    return g;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw Error(ErrorKind::Syntax, message, at.line, at.column);
  }

  Term expand(const Token& tok) {
    auto it = prefixes_.find(tok.text);
    if (it == prefixes_.end()) {
      throw Error(ErrorKind::UnknownPrefix, "unknown prefix '" + tok.text + "'", tok.line,
                  tok.column);
    }
    return Term::iri(it->second + tok.local);
  }

  Term check_absolute(Term t, const Token& tok) {
    if (t.text.find(':') == std::string::npos) {
      fail(tok, "IRI is not absolute: <" + t.text + ">");
    }
    return t;
  }

  void parse_directive(const Token& at, Graph& g) {
    if (at.text != "prefix") fail(at, "unknown directive '@" + at.text + "'");
    Token name = lexer_.next();
    if (name.kind != Token::PName || !name.local.empty()) {
      fail(name, "prefix name expected after @prefix");
    }
    Token iri = lexer_.next();
    if (iri.kind != Token::IriRef) fail(iri, "namespace IRI expected after prefix name");
    Token dot = lexer_.next();
    if (dot.kind != Token::Dot) fail(dot, "'.' expected after @prefix directive");
    prefixes_[name.text] = iri.text;
    g.add_prefix(name.text, iri.text);
  }

  Term parse_subject(const Token& tok) {
    switch (tok.kind) {
      case Token::IriRef: return check_absolute(Term::iri(tok.text), tok);
      case Token::PName: return check_absolute(expand(tok), tok);
      case Token::Blank: return Term::blank(tok.text);
      default: fail(tok, "subject expected (IRI, prefixed name or blank node)");
    }
  }

  Term parse_predicate(const Token& tok) {
    switch (tok.kind) {
      case Token::A: return vocab::rdf_type();
      case Token::IriRef: return check_absolute(Term::iri(tok.text), tok);
      case Token::PName: return check_absolute(expand(tok), tok);
      default: fail(tok, "predicate expected (IRI, prefixed name or 'a')");
    }
  }

  Term parse_object(const Token& tok) {
    switch (tok.kind) {
      case Token::IriRef: return check_absolute(Term::iri(tok.text), tok);
      case Token::PName: return check_absolute(expand(tok), tok);
      case Token::Blank: return Term::blank(tok.text);
      case Token::String: return Term::literal(tok.text);
      default: fail(tok, "object expected (IRI, prefixed name, blank node or string)");
    }
  }

  void parse_statement(Token first, Graph& g) {
    Term subject = parse_subject(first);
    while (true) {
      Token ptok = lexer_.next();
      if (ptok.kind == Token::Dot) return;  // tolerate `;` before `.`
      Term predicate = parse_predicate(ptok);
      while (true) {
        Term object = parse_object(lexer_.next());
        g.insert({subject, predicate, object});
        Token sep = lexer_.next();
        if (sep.kind == Token::Comma) continue;
        if (sep.kind == Token::Semicolon) break;
        if (sep.kind == Token::Dot) return;
        fail(sep, "expected '.', ';' or ',' after object");
      }
    }
  }

  Lexer lexer_;
  PrefixMap prefixes_;
};

}  // namespace

Graph parse_turtle(std::string_view text, const PrefixMap& base_prefixes) {
  return Parser(text, base_prefixes).run();
}

std::string compact_iri(const std::string& iri, const PrefixMap& prefixes) {
  const std::string* best_ns = nullptr;
  const std::string* best_name = nullptr;
  for (const auto& [name, ns_iri] : prefixes) {
    if (ns_iri.empty() || iri.size() < ns_iri.size()) continue;
    if (iri.compare(0, ns_iri.size(), ns_iri) != 0) continue;
    if (!valid_local_name(std::string_view(iri).substr(ns_iri.size()))) continue;
    if (!best_ns || ns_iri.size() > best_ns->size()) {
      best_ns = &ns_iri;
      best_name = &name;
    }
  }
  if (!best_ns) return "<" + iri + ">";
  return *best_name + ":" + iri.substr(best_ns->size());
}

namespace {

std::string render_term(const Term& t, const PrefixMap& prefixes, bool predicate_position) {
  if (t.is_iri()) {
    if (predicate_position && t == vocab::rdf_type()) return "a";
    return compact_iri(t.text, prefixes);
  }
  return t.lexical();
}

}  // namespace

std::string serialize_turtle(const Graph& g) {
  std::string out;
  for (const auto& [name, iri] : g.prefixes()) {
    out += "@prefix " + name + ": <" + iri + "> .\n";
  }
  if (!g.prefixes().empty() && !g.empty()) out += "\n";
  for (const Triple& t : g) {
    out += render_term(t.subject, g.prefixes(), false);
    out += " ";
    out += render_term(t.predicate, g.prefixes(), true);
    out += " ";
    out += render_term(t.object, g.prefixes(), false);
    out += " .\n";
  }
  return out;
}

}  // namespace satis::rdf
