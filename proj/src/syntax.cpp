#include "poim/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>

#include "poim/error.hpp"
#include "poim/fresh_supply.hpp"

namespace poim {

namespace {

enum class TokenType {
  PrefixedName,  // :name
  Iri,           // <...>
  Literal,       // "..."
  Blank,         // _:label
  Variable,      // ?label
  Word,          // CONSTRUCT, SELECT, WHERE, PREFIX, @prefix
  Colon,         // bare ':' in prefix declarations
  Dot,
  LBrace,
  RBrace,
  End,
};

struct Token {
  TokenType type;
  std::string text;  // label, IRI, literal value or keyword
  SourceSpan span;
};

std::string describe(const Token& token) {
  switch (token.type) {
    case TokenType::PrefixedName: return "':" + token.text + "'";
    case TokenType::Iri: return "'<" + token.text + ">'";
    case TokenType::Literal: return "literal";
    case TokenType::Blank: return "'_:" + token.text + "'";
    case TokenType::Variable: return "'?" + token.text + "'";
    case TokenType::Word: return "'" + token.text + "'";
    case TokenType::Colon: return "':'";
    case TokenType::Dot: return "'.'";
    case TokenType::LBrace: return "'{'";
    case TokenType::RBrace: return "'}'";
    case TokenType::End: return "end of input";
  }
  return "token";
}

bool isNameChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-';
}

bool isVariableChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skipBlankAndComments();
    SourceSpan span = here();
    if (atEnd()) return {TokenType::End, "", span};
    char c = peek();
    switch (c) {
      case '.': advance(); return {TokenType::Dot, ".", span};
      case '{': advance(); return {TokenType::LBrace, "{", span};
      case '}': advance(); return {TokenType::RBrace, "}", span};
      case '<': return readIri(span);
      case '"': return readLiteral(span);
      case '?': {
        advance();
        std::string name = readWhile(isVariableChar);
        if (name.empty()) fail(span, "expected a variable name after '?'");
        return {TokenType::Variable, std::move(name), span};
      }
      case ':': {
        advance();
        std::string name = readWhile(isNameChar);
        if (name.empty()) return {TokenType::Colon, ":", span};
        return {TokenType::PrefixedName, std::move(name), span};
      }
      case '@': {
        advance();
        std::string word = readWhile(isNameChar);
        if (word != "prefix") fail(span, "unknown directive '@" + word + "'");
        return {TokenType::Word, "@prefix", span};
      }
      default: break;
    }
    if (c == '_' && peek(1) == ':') {
      advance();
      advance();
      std::string label = readWhile(isNameChar);
      if (label.empty()) fail(span, "expected a blank label after '_:'");
      return {TokenType::Blank, std::move(label), span};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      return {TokenType::Word, readWhile(isNameChar), span};
    }
    fail(span, std::string("unexpected character '") + c + "'");
  }

 private:
  [[noreturn]] static void fail(SourceSpan span, const std::string& message) {
    throw ParseError(ErrorCode::Syntax, span, message);
  }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  SourceSpan here() const { return {line_, column_, pos_}; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skipBlankAndComments() {
    while (!atEnd()) {
      char c = peek();
      if (c == '#') {
        while (!atEnd() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  template <typename Pred>
  std::string readWhile(Pred pred) {
    std::string out;
    while (!atEnd() && pred(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  Token readIri(SourceSpan span) {
    advance();
    std::string iri;
    while (true) {
      if (atEnd()) fail(span, "unterminated IRI");
      char c = peek();
      if (c == '>') break;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"') {
        fail(here(), "character not allowed in an IRI");
      }
      iri += c;
      advance();
    }
    advance();
    if (iri.empty()) fail(span, "empty IRI");
    return {TokenType::Iri, std::move(iri), span};
  }

  Token readLiteral(SourceSpan span) {
    advance();
    std::string value;
    while (true) {
      if (atEnd()) fail(span, "unterminated literal");
      char c = peek();
      if (c == '"') break;
      if (c == '\\') {
        SourceSpan escape = here();
        advance();
        if (atEnd()) fail(span, "unterminated literal");
        switch (peek()) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          default: fail(escape, "unsupported escape sequence");
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    advance();
    return {TokenType::Literal, std::move(value), span};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

bool keywordIs(const Token& token, std::string_view keyword) {
  if (token.type != TokenType::Word || token.text.size() != keyword.size()) {
    return false;
  }
  return std::equal(token.text.begin(), token.text.end(), keyword.begin(),
                    [](char a, char b) {
                      return std::toupper(static_cast<unsigned char>(a)) ==
                             std::toupper(static_cast<unsigned char>(b));
                    });
}

class Parser {
 public:
  Parser(std::string_view text, bool allowVariables)
      : lexer_(text), allowVariables_(allowVariables) {
    current_ = lexer_.next();
  }

  Graph document() {
    Graph graph = triples();
    expect(TokenType::End, "end of input");
    return graph;
  }

  Query query() {
    while (prefixDeclaration()) {
    }
    if (keywordIs(current_, "CONSTRUCT")) {
      advance();
      ConstructQuery q;
      q.templ = group();
      expectKeyword("WHERE");
      q.pattern = group();
      expect(TokenType::End, "end of input");
      return q;
    }
    if (keywordIs(current_, "SELECT")) {
      advance();
      std::vector<Term> projection;
      std::vector<SourceSpan> spans;
      while (current_.type == TokenType::Variable) {
        projection.push_back(Term::variable(current_.text));
        spans.push_back(current_.span);
        advance();
      }
      if (projection.empty()) fail("at least one projected variable");
      expectKeyword("WHERE");
      Graph pattern = group();
      expect(TokenType::End, "end of input");
      return validatedSelect(std::move(pattern), std::move(projection), spans);
    }
    fail("'CONSTRUCT' or 'SELECT'");
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw ParseError(ErrorCode::Syntax, current_.span,
                     "expected " + expected + ", found " + describe(current_));
  }

  void advance() { current_ = lexer_.next(); }

  void expect(TokenType type, const std::string& what) {
    if (current_.type != type) fail(what);
    advance();
  }

  void expectKeyword(std::string_view keyword) {
    if (!keywordIs(current_, keyword)) fail("'" + std::string(keyword) + "'");
    advance();
  }

  Graph group() {
    expect(TokenType::LBrace, "'{'");
    Graph graph = triples();
    expect(TokenType::RBrace, "'}'");
    return graph;
  }

  bool startsTerm() const {
    switch (current_.type) {
      case TokenType::PrefixedName:
      case TokenType::Iri:
      case TokenType::Literal:
      case TokenType::Blank:
      case TokenType::Variable:
        return true;
      default:
        return false;
    }
  }

  // Parses `@prefix : <iri> .` or `PREFIX : <iri>` if present.
  bool prefixDeclaration() {
    bool turtle = keywordIs(current_, "@prefix");
    if (!turtle && !keywordIs(current_, "PREFIX")) return false;
    advance();
    expect(TokenType::Colon, "':' (only the default prefix is supported)");
    if (current_.type != TokenType::Iri) fail("an IRI");
    prefix_ = current_.text;
    advance();
    if (turtle && current_.type == TokenType::Dot) advance();
    return true;
  }

  Graph triples() {
    Graph graph;
    bool separated = true;
    while (true) {
      if (prefixDeclaration()) {
        separated = true;
        continue;
      }
      if (!startsTerm()) break;
      if (!separated) fail("'.' between triples");
      Term s = term();
      Term p = term();
      Term o = term();
      graph.insert({std::move(s), std::move(p), std::move(o)});
      separated = current_.type == TokenType::Dot;
      if (separated) advance();
    }
    return graph;
  }

  Term term() {
    Token token = current_;
    switch (token.type) {
      case TokenType::PrefixedName:
        advance();
        return Term::iri(prefix_ ? *prefix_ + token.text : ":" + token.text);
      case TokenType::Iri:
        advance();
        return Term::iri(token.text);
      case TokenType::Literal:
        advance();
        return Term::literal(token.text);
      case TokenType::Blank:
        if (token.text.starts_with(kFreshPrefix)) {
          throw ParseError(ErrorCode::ReservedBlankPrefix, token.span,
                           "blank labels starting with '" +
                               std::string(kFreshPrefix) + "' are reserved");
        }
        advance();
        return Term::blank(token.text);
      case TokenType::Variable:
        if (!allowVariables_) {
          throw ParseError(ErrorCode::VariableInData, token.span,
                           "variable ?" + token.text +
                               " is not allowed in a data graph");
        }
        advance();
        return Term::variable(token.text);
      default:
        fail("a term");
    }
  }

  static SelectQuery validatedSelect(Graph pattern,
                                     std::vector<Term> projection,
                                     const std::vector<SourceSpan>& spans) {
    try {
      return SelectQuery::make(std::move(pattern), projection);
    } catch (const Error& e) {
      // Point at the offending variable.
      std::size_t index = 0;
      std::set<Term> seen;
      auto vars = variablesOf(pattern);
      for (; index < projection.size(); ++index) {
        if (!seen.insert(projection[index]).second) break;
        if (e.code() == ErrorCode::ProjectionNotInPattern &&
            !vars.contains(projection[index])) {
          break;
        }
      }
      throw ParseError(e.code(), spans[std::min(index, spans.size() - 1)],
                       e.what());
    }
  }

  Lexer lexer_;
  Token current_;
  bool allowVariables_;
  std::optional<std::string> prefix_;
};

}  // namespace

Graph parseData(std::string_view text) {
  return Parser(text, /*allowVariables=*/false).document();
}

Graph parsePattern(std::string_view text) {
  return Parser(text, /*allowVariables=*/true).document();
}

Query parseQuery(std::string_view text) {
  return Parser(text, /*allowVariables=*/true).query();
}

std::string serializeGraph(const Graph& graph, bool canonicalBlanks) {
  AttributeMap relabel;
  if (canonicalBlanks) {
    std::size_t next = 0;
    for (const auto& [s, p, o] : graph) {
      for (const Term* term : {&s, &p, &o}) {
        if (term->isBlank() && !relabel.contains(*term)) {
          relabel.emplace(*term, Term::blank("b" + std::to_string(++next)));
        }
      }
    }
  }
  std::string out;
  for (const auto& triple : graph) {
    if (!out.empty()) out += " .\n";
    const Triple t = applyMap(relabel, triple);
    out += t.subject.toString();
    out += ' ';
    out += t.predicate.toString();
    out += ' ';
    out += t.object.toString();
  }
  return out;
}

}  // namespace poim
