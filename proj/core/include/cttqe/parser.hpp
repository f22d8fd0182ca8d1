#ifndef CTTQE_PARSER_HPP
#define CTTQE_PARSER_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cttqe/expr.hpp"
#include "cttqe/theory.hpp"

namespace cttqe {

enum class Tok {
  Ident, Num,
  LParen, RParen, LBrack, RBrack, LBrace, RBrace,
  Colon, Dot, Comma, Pipe, Underscore, Caret,
  Backslash, Arrow, Assign,
  Equals, AndOp, OrOp, ImpOp, Tilde, Plus, Star,
  QuoteOpen,  // '[
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
  std::size_t offset = 0;  // byte offset into the lexed string
};

/// Tokenise a string. `#` starts a comment running to end of line.
/// Throws ParseError on unknown characters.
std::vector<Token> lex(const std::string& text, const std::string& filename = "<input>",
                       std::size_t start_line = 1, std::size_t start_col = 1);

/// Recursive-descent parser for the surface syntax. Bare names resolve to
/// theory constants (or injected let-bindings); ascribed atoms `name:type`
/// denote variables unless name is a declared constant of that exact type.
/// Quasiquotations are expanded on sight; the result is always a plain
/// expression.
class Parser {
 public:
  explicit Parser(const Theory& theory) : theory_(&theory) {}

  /// Macro-level binding: subsequent bare occurrences of `name` splice e.
  void bind(const std::string& name, Expr e) { bindings_[name] = std::move(e); }
  void unbind(const std::string& name) { bindings_.erase(name); }

  Expr expr(const std::string& text, const std::string& filename = "<input>",
            std::size_t line = 1, std::size_t column = 1) const;

  /// Parse a single expression from a token stream starting at pos;
  /// advances pos past the expression. Used by the file-format loaders.
  Expr expr_at(const std::vector<Token>& toks, std::size_t& pos) const;

  const Theory& theory() const { return *theory_; }

 private:
  const Theory* theory_;
  std::map<std::string, Expr> bindings_;
};

Type parse_type(const std::string& text, const std::string& filename = "<input>",
                std::size_t line = 1, std::size_t column = 1);

/// Parse a type from a token stream starting at pos.
Type parse_type_at(const std::vector<Token>& toks, std::size_t& pos);

/// Convenience: parse with the standard theory.
Expr parse_expr(const std::string& text);

}  // namespace cttqe

#endif
