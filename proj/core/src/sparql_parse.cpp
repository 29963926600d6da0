#include <cctype>
#include <set>

#include "satis/sparql.hpp"
#include "satis/turtle.hpp"

namespace satis::sparql {

namespace {

bool name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

struct Token {
  enum Kind {
    End, Dot, LBrace, RBrace, LParen, RParen,
    Keyword,   // text = lowercased keyword or bare name
    A,         // the literal `a` (kept distinct from keywords)
    IriRef, PName, Blank, String, Var,
    OpEqual, OpIriEqual, OpSubclass,
  } kind = End;
  std::string text;
  std::string local;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    if (pending_) {
      Token t = *pending_;
      pending_.reset();
      return t;
    }
    return scan();
  }

  void push_back(Token t) { pending_ = std::move(t); }

 private:
  Token scan() {
    skip_space();
    Token tok;
    tok.line = line_;
    tok.column = column_;
    if (eof()) return tok;

    char c = peek();
    switch (c) {
      case '.': get(); tok.kind = Token::Dot; return tok;
      case '{': get(); tok.kind = Token::LBrace; return tok;
      case '}': get(); tok.kind = Token::RBrace; return tok;
      case '(': get(); tok.kind = Token::LParen; return tok;
      case ')': get(); tok.kind = Token::RParen; return tok;
      case '"': return lex_string(tok);
      case '?': {
        get();
        tok.kind = Token::Var;
        while (!eof() && name_char(peek())) tok.text += get();
        if (tok.text.empty()) fail(tok, "variable name expected after '?'");
        return tok;
      }
      case '=': {
        get();
        if (peek() == ':') {
          get();
          tok.kind = Token::OpIriEqual;
        } else {
          tok.kind = Token::OpEqual;
        }
        return tok;
      }
      case '<': {
        if (peek(1) == '=') {
          get();
          get();
          if (peek() != ':') fail(tok, "expected ':' after '<='");
          get();
          tok.kind = Token::OpSubclass;
          return tok;
        }
        return lex_iri(tok);
      }
      default: break;
    }
    if (c == '_' && peek(1) == ':') {
      get();
      get();
      tok.kind = Token::Blank;
      while (!eof() && name_char(peek())) tok.text += get();
      if (tok.text.empty()) fail(tok, "blank node label expected after '_:'");
      return tok;
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':') {
      return lex_name(tok);
    }
    fail(tok, std::string("unexpected character '") + c + "'");
    return tok;  // unreachable
  }

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

  Token lex_name(Token tok) {
    std::string first;
    while (!eof() && name_char(peek())) first += get();
    if (peek() == ':') {
      get();
      tok.kind = Token::PName;
      tok.text = first;
      while (!eof() && name_char(peek())) tok.local += get();
      return tok;
    }
    if (first == "a") {
      tok.kind = Token::A;
      return tok;
    }
    tok.kind = Token::Keyword;
    tok.text = lower(first);
    return tok;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  std::optional<Token> pending_;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  Query run() {
    Query q;
    Token tok = lexer_.next();
    while (tok.kind == Token::Keyword && tok.text == "prefix") {
      parse_prefix(q);
      tok = lexer_.next();
    }
    if (tok.kind == Token::Keyword && tok.text == "select") {
      q.form = QueryForm::Select;
      tok = lexer_.next();
      while (tok.kind == Token::Var) {
        q.projection.push_back(tok.text);
        tok = lexer_.next();
      }
      if (q.projection.empty()) fail(tok, "select needs at least one variable");
    } else if (tok.kind == Token::Keyword && tok.text == "construct") {
      q.form = QueryForm::Construct;
      Token brace = lexer_.next();
      if (brace.kind != Token::LBrace) fail(brace, "'{' expected after construct");
      parse_template(q);
      tok = lexer_.next();
    } else {
      fail(tok, "'select' or 'construct' expected");
    }
    if (!(tok.kind == Token::Keyword && tok.text == "where")) {
      fail(tok, "'where' expected");
    }
    Token brace = lexer_.next();
    if (brace.kind != Token::LBrace) fail(brace, "'{' expected after where");
    parse_where(q);
    Token end = lexer_.next();
    if (end.kind != Token::End) fail(end, "trailing input after query");
    validate(q, end);
    return q;
  }

 private:
  [[noreturn]] void fail(const Token& at, const std::string& message) {
    throw Error(ErrorKind::Syntax, message, at.line, at.column);
  }

  rdf::Term expand(const Token& tok) {
    auto it = prefixes_.find(tok.text);
    if (it == prefixes_.end()) {
      throw Error(ErrorKind::UnknownPrefix, "unknown prefix '" + tok.text + "'", tok.line,
                  tok.column);
    }
    return rdf::Term::iri(it->second + tok.local);
  }

  void parse_prefix(Query& q) {
    Token name = lexer_.next();
    if (name.kind != Token::PName || !name.local.empty()) {
      fail(name, "prefix name expected after 'prefix'");
    }
    Token iri = lexer_.next();
    if (iri.kind != Token::IriRef) fail(iri, "namespace IRI expected after prefix name");
    prefixes_[name.text] = iri.text;
    q.prefixes[name.text] = iri.text;
  }

  rdf::Term parse_term(const Token& tok, bool predicate_position) {
    switch (tok.kind) {
      case Token::Var: return rdf::Term::variable(tok.text);
      case Token::IriRef: return rdf::Term::iri(tok.text);
      case Token::PName: return expand(tok);
      case Token::A:
        if (!predicate_position) fail(tok, "'a' is only valid as a predicate");
        return rdf::vocab::rdf_type();
      case Token::Blank:
        if (predicate_position) fail(tok, "blank node is not a valid predicate");
        return rdf::Term::blank(tok.text);
      case Token::String:
        if (predicate_position) fail(tok, "literal is not a valid predicate");
        return rdf::Term::literal(tok.text);
      default: fail(tok, "term expected");
    }
  }

  rdf::Triple parse_triple(Token first) {
    rdf::Triple t;
    t.subject = parse_term(first, false);
    t.predicate = parse_term(lexer_.next(), true);
    t.object = parse_term(lexer_.next(), false);
    Token tail = lexer_.next();
    if (tail.kind != Token::Dot) lexer_.push_back(std::move(tail));
    return t;
  }

  void parse_template(Query& q) {
    while (true) {
      Token tok = lexer_.next();
      if (tok.kind == Token::RBrace) break;
      if (tok.kind == Token::End) fail(tok, "unterminated construct template");
      q.construct_template.push_back(parse_triple(std::move(tok)));
    }
    if (q.construct_template.empty()) {
      Token dummy;
      fail(dummy, "construct template is empty");
    }
  }

  void parse_filter(Query& q) {
    Token open = lexer_.next();
    if (open.kind != Token::LParen) fail(open, "'(' expected after filter");
    Token var = lexer_.next();
    if (var.kind != Token::Var) fail(var, "filter variable expected");
    Token op = lexer_.next();
    Filter f;
    f.variable = var.text;
    switch (op.kind) {
      case Token::OpEqual: f.op = FilterOp::Equal; break;
      case Token::OpIriEqual: f.op = FilterOp::IriEqual; break;
      case Token::OpSubclass: f.op = FilterOp::SubclassOf; break;
      default: fail(op, "filter operator expected (=, =: or <=:)");
    }
    Token value = lexer_.next();
    if (value.kind == Token::IriRef) {
      f.constant = rdf::Term::iri(value.text);
    } else if (value.kind == Token::PName) {
      f.constant = expand(value);
    } else {
      fail(value, "filter constant must be an IRI");
    }
    Token close = lexer_.next();
    if (close.kind != Token::RParen) fail(close, "')' expected after filter");
    q.where.emplace_back(std::move(f));
  }

  void parse_where(Query& q) {
    while (true) {
      Token tok = lexer_.next();
      if (tok.kind == Token::RBrace) break;
      if (tok.kind == Token::End) fail(tok, "unterminated where clause");
      if (tok.kind == Token::Keyword && tok.text == "filter") {
        filter_positions_.push_back(tok);
        parse_filter(q);
      } else {
        q.where.emplace_back(parse_triple(std::move(tok)));
      }
    }
  }

  void validate(const Query& q, const Token& end) {
    bool has_pattern = false;
    std::set<std::string> bound;
    for (const PatternElement& el : q.where) {
      if (const auto* t = std::get_if<rdf::Triple>(&el)) {
        has_pattern = true;
        for (const rdf::Term* term : {&t->subject, &t->predicate, &t->object}) {
          if (term->is_variable()) bound.insert(term->text);
          if (term->is_blank()) bound.insert("_:" + term->text);
        }
      }
    }
    if (!has_pattern) fail(end, "where clause has no triple pattern");

    std::size_t filter_index = 0;
    for (const PatternElement& el : q.where) {
      if (const auto* f = std::get_if<Filter>(&el)) {
        const Token& at = filter_positions_.at(filter_index++);
        if (!bound.count(f->variable)) {
          throw Error(ErrorKind::UnboundFilterVariable,
                      "filter variable ?" + f->variable + " is not bound by any triple pattern",
                      at.line, at.column);
        }
      }
    }
    for (const std::string& v : q.projection) {
      if (!bound.count(v)) fail(end, "projected variable ?" + v + " does not occur in where");
    }
    for (const rdf::Triple& t : q.construct_template) {
      for (const rdf::Term* term : {&t.subject, &t.predicate, &t.object}) {
        if (term->is_variable() && !bound.count(term->text)) {
          fail(end, "template variable ?" + term->text + " does not occur in where");
        }
      }
    }
  }

  Lexer lexer_;
  rdf::PrefixMap prefixes_;
  std::vector<Token> filter_positions_;
};

}  // namespace

std::string_view to_string(FilterOp op) {
  switch (op) {
    case FilterOp::Equal: return "=";
    case FilterOp::IriEqual: return "=:";
    case FilterOp::SubclassOf: return "<=:";
  }
  return "=";
}

Query parse_query(std::string_view text) { return Parser(text).run(); }

namespace {

std::string render_term(const rdf::Term& t, const rdf::PrefixMap& prefixes,
                        bool predicate_position) {
  if (t.is_iri()) {
    if (predicate_position && t == rdf::vocab::rdf_type()) return "a";
    return rdf::compact_iri(t.text, prefixes);
  }
  return t.lexical();
}

std::string render_triple(const rdf::Triple& t, const rdf::PrefixMap& prefixes) {
  return render_term(t.subject, prefixes, false) + " " + render_term(t.predicate, prefixes, true) +
         " " + render_term(t.object, prefixes, false);
}

}  // namespace

std::string serialize_query(const Query& q) {
  std::string out;
  for (const auto& [name, iri] : q.prefixes) {
    out += "prefix " + name + ": <" + iri + ">\n";
  }
  if (q.form == QueryForm::Select) {
    out += "select";
    for (const std::string& v : q.projection) out += " ?" + v;
    out += "\n";
  } else {
    out += "construct\n{\n";
    for (const rdf::Triple& t : q.construct_template) {
      out += "  " + render_triple(t, q.prefixes) + "\n";
    }
    out += "}\n";
  }
  out += "where\n{\n";
  for (const PatternElement& el : q.where) {
    if (const auto* t = std::get_if<rdf::Triple>(&el)) {
      out += "  " + render_triple(*t, q.prefixes) + "\n";
    } else {
      const Filter& f = std::get<Filter>(el);
      out += "  filter(?" + f.variable + " " + std::string(to_string(f.op)) + " " +
             render_term(f.constant, q.prefixes, false) + ")\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace satis::sparql
