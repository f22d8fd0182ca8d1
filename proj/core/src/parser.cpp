#include "cttqe/parser.hpp"

#include <cctype>
#include <memory>

#include "cttqe/constants.hpp"
#include "cttqe/quasiquote.hpp"

namespace cttqe {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool ident_cont(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

}  // namespace

std::vector<Token> lex(const std::string& text, const std::string& filename,
                       std::size_t start_line, std::size_t start_col) {
  std::vector<Token> out;
  std::size_t line = start_line, col = start_col;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto push = [&](Tok k, std::size_t begin, std::size_t len, std::size_t bl, std::size_t bc) {
    Token t;
    t.kind = k;
    t.text = text.substr(begin, len);
    t.span = SourceSpan{filename, bl, bc, len};
    t.offset = begin;
    out.push_back(std::move(t));
  };

  while (i < n) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    std::size_t bl = line, bc = col, begin = i;
    auto two = [&](char a, char b) { return c == a && i + 1 < n && text[i + 1] == b; };

    if (two('-', '>')) { push(Tok::Arrow, begin, 2, bl, bc); i += 2; col += 2; continue; }
    if (two(':', '=')) { push(Tok::Assign, begin, 2, bl, bc); i += 2; col += 2; continue; }
    if (two('=', '>')) { push(Tok::ImpOp, begin, 2, bl, bc); i += 2; col += 2; continue; }
    if (two('/', '\\')) { push(Tok::AndOp, begin, 2, bl, bc); i += 2; col += 2; continue; }
    if (two('\\', '/')) { push(Tok::OrOp, begin, 2, bl, bc); i += 2; col += 2; continue; }
    if (two('\'', '[')) { push(Tok::QuoteOpen, begin, 2, bl, bc); i += 2; col += 2; continue; }

    switch (c) {
      case '(': push(Tok::LParen, begin, 1, bl, bc); ++i; ++col; continue;
      case ')': push(Tok::RParen, begin, 1, bl, bc); ++i; ++col; continue;
      case '[': push(Tok::LBrack, begin, 1, bl, bc); ++i; ++col; continue;
      case ']': push(Tok::RBrack, begin, 1, bl, bc); ++i; ++col; continue;
      case '{': push(Tok::LBrace, begin, 1, bl, bc); ++i; ++col; continue;
      case '}': push(Tok::RBrace, begin, 1, bl, bc); ++i; ++col; continue;
      case ':': push(Tok::Colon, begin, 1, bl, bc); ++i; ++col; continue;
      case '.': push(Tok::Dot, begin, 1, bl, bc); ++i; ++col; continue;
      case ',': push(Tok::Comma, begin, 1, bl, bc); ++i; ++col; continue;
      case '|': push(Tok::Pipe, begin, 1, bl, bc); ++i; ++col; continue;
      case '_': push(Tok::Underscore, begin, 1, bl, bc); ++i; ++col; continue;
      case '^': push(Tok::Caret, begin, 1, bl, bc); ++i; ++col; continue;
      case '\\': push(Tok::Backslash, begin, 1, bl, bc); ++i; ++col; continue;
      case '=': push(Tok::Equals, begin, 1, bl, bc); ++i; ++col; continue;
      case '~': push(Tok::Tilde, begin, 1, bl, bc); ++i; ++col; continue;
      case '+': push(Tok::Plus, begin, 1, bl, bc); ++i; ++col; continue;
      case '*': push(Tok::Star, begin, 1, bl, bc); ++i; ++col; continue;
      default: break;
    }

    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      push(Tok::Num, begin, j - begin, bl, bc);
      col += j - i;
      i = j;
      continue;
    }

    if (ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        if (ident_cont(text[j])) { ++j; continue; }
        // '-' stays in the identifier unless it begins an arrow or ends it.
        if (text[j] == '-' && j + 1 < n && text[j + 1] != '>' && ident_cont(text[j + 1])) {
          j += 2;
          continue;
        }
        break;
      }
      push(Tok::Ident, begin, j - begin, bl, bc);
      col += j - i;
      i = j;
      continue;
    }

    throw Error(Errc::ParseError, std::string("unexpected character '") + c + "'",
                SourceSpan{filename, bl, bc, 1});
  }
  Token end;
  end.kind = Tok::End;
  end.span = SourceSpan{filename, line, col, 0};
  end.offset = n;
  out.push_back(std::move(end));
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Concrete syntax tree. Sugar is kept structural here and elaborated below.
// ---------------------------------------------------------------------------

struct Cst;
using CP = std::shared_ptr<const Cst>;

struct Cst {
  enum class K { Bare, Ascribed, Family, Num, App, Abs, AbsHole, Quote, Eval, Hole, Bin, Not, Quant, Pow };
  K k;
  SourceSpan span;
  std::string name;  // Bare/Ascribed/Family name, Bin op, Quant/Abs binder
  Type ty;           // Ascribed/Family index/binder type/Eval target
  std::uint64_t num = 0;
  CP a, b;
  bool exists = false;
  int holes = 0;
};

CP mk(Cst&& c) { return std::make_shared<const Cst>(std::move(c)); }

int holes_of(const CP& c) { return c ? c->holes : 0; }

struct P {
  const std::vector<Token>& t;
  std::size_t pos = 0;
  int quote_depth = 0;

  const Token& cur() const { return t[pos]; }
  const Token& peek(std::size_t k = 1) const {
    return t[pos + k < t.size() ? pos + k : t.size() - 1];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::ParseError, msg, cur().span);
  }
  Token expect(Tok k, const char* what) {
    if (cur().kind != k) fail(std::string("expected ") + what);
    return t[pos++];
  }

  Type type_atom() {
    if (cur().kind == Tok::LParen) {
      ++pos;
      Type ty = type_full();
      expect(Tok::RParen, "')'");
      return ty;
    }
    if (cur().kind == Tok::Ident) {
      const std::string& s = cur().text;
      if (s == "i") { ++pos; return Type::iota(); }
      if (s == "o") { ++pos; return Type::omicron(); }
      if (s == "eps") { ++pos; return Type::epsilon(); }
    }
    fail("expected a type (i, o, eps or parenthesized)");
  }

  Type type_full() {
    Type left = type_atom();
    if (cur().kind == Tok::Arrow) {
      ++pos;
      return Type::fun(left, type_full());
    }
    return left;
  }

  bool atom_starts() const {
    switch (cur().kind) {
      case Tok::Num:
      case Tok::LParen:
      case Tok::QuoteOpen:
      case Tok::LBrack:
        return true;
      case Tok::Ident:
        return cur().text != "forall" && cur().text != "exists";
      case Tok::Comma:
        return peek().kind == Tok::LParen;
      default:
        return false;
    }
  }

  CP atom() {
    const Token& tok = cur();
    switch (tok.kind) {
      case Tok::LParen: {
        ++pos;
        CP e = expr(0);
        expect(Tok::RParen, "')'");
        return e;
      }
      case Tok::QuoteOpen: {
        ++pos;
        ++quote_depth;
        CP body = expr(0);
        --quote_depth;
        expect(Tok::RBrack, "']' closing the quotation");
        Cst c{Cst::K::Quote, tok.span};
        c.a = body;
        c.holes = holes_of(body);
        return mk(std::move(c));
      }
      case Tok::LBrack: {
        if (quote_depth > 0)
          throw Error(Errc::QuoteNotEvalFree, "evaluation is not allowed inside a quotation",
                      tok.span);
        ++pos;
        expect(Tok::LBrack, "'[[' opening an evaluation");
        CP body = expr(0);
        expect(Tok::RBrack, "']]' closing the evaluation");
        expect(Tok::RBrack, "']]' closing the evaluation");
        expect(Tok::Underscore, "'_' and the evaluation type");
        Type target = type_atom();
        Cst c{Cst::K::Eval, tok.span};
        c.a = body;
        c.ty = target;
        c.holes = holes_of(body);
        return mk(std::move(c));
      }
      case Tok::Comma: {
        if (quote_depth == 0)
          throw Error(Errc::HoleOutsideQuote, "antiquotation outside a quotation", tok.span);
        ++pos;
        expect(Tok::LParen, "'(' after ','");
        int saved = quote_depth;
        quote_depth = 0;
        CP inner = expr(0);
        quote_depth = saved;
        expect(Tok::RParen, "')' closing the antiquotation");
        Cst c{Cst::K::Hole, tok.span};
        c.a = inner;
        c.holes = 1;
        return mk(std::move(c));
      }
      case Tok::Num: {
        ++pos;
        Cst c{Cst::K::Num, tok.span};
        c.num = std::stoull(tok.text);
        return mk(std::move(c));
      }
      case Tok::Ident: {
        ++pos;
        // family index: name^type
        if (cur().kind == Tok::Caret) {
          const Token& after = peek();
          bool type_next = after.kind == Tok::LParen ||
                           (after.kind == Tok::Ident &&
                            (after.text == "i" || after.text == "o" || after.text == "eps"));
          if (type_next) {
            ++pos;
            Type idx = type_atom();
            Cst c{Cst::K::Family, tok.span};
            c.name = tok.text;
            c.ty = idx;
            return mk(std::move(c));
          }
        }
        if (cur().kind == Tok::Colon) {
          ++pos;
          Type ty = type_atom();
          Cst c{Cst::K::Ascribed, tok.span};
          c.name = tok.text;
          c.ty = ty;
          return mk(std::move(c));
        }
        Cst c{Cst::K::Bare, tok.span};
        c.name = tok.text;
        return mk(std::move(c));
      }
      default:
        fail("expected an expression");
    }
  }

  CP application() {
    CP head = atom();
    while (atom_starts()) {
      CP arg = atom();
      Cst c{Cst::K::App, head->span};
      c.holes = holes_of(head) + holes_of(arg);
      c.a = head;
      c.b = arg;
      head = mk(std::move(c));
    }
    return head;
  }

  CP prefix() {
    const Token& tok = cur();
    if (tok.kind == Tok::Backslash) {
      ++pos;
      if (cur().kind == Tok::Comma) {
        if (quote_depth == 0)
          throw Error(Errc::HoleOutsideQuote, "hole binder outside a quotation", cur().span);
        SourceSpan hspan = cur().span;
        ++pos;
        expect(Tok::LParen, "'(' after ','");
        int saved = quote_depth;
        quote_depth = 0;
        CP inner = expr(0);
        quote_depth = saved;
        expect(Tok::RParen, "')' closing the antiquotation");
        Cst hole{Cst::K::Hole, hspan};
        hole.a = inner;
        hole.holes = 1;
        CP h = mk(std::move(hole));
        expect(Tok::Dot, "'.' after the binder");
        CP body = expr(0);
        Cst c{Cst::K::AbsHole, tok.span};
        c.holes = 1 + holes_of(body);
        c.a = h;
        c.b = body;
        return mk(std::move(c));
      }
      Token name = expect(Tok::Ident, "a binder name");
      expect(Tok::Colon, "':' and the binder type");
      Type ty = type_atom();
      expect(Tok::Dot, "'.' after the binder");
      CP body = expr(0);
      Cst c{Cst::K::Abs, tok.span};
      c.name = name.text;
      c.ty = ty;
      c.holes = holes_of(body);
      c.b = body;
      return mk(std::move(c));
    }
    if (tok.kind == Tok::Ident && (tok.text == "forall" || tok.text == "exists")) {
      ++pos;
      Token name = expect(Tok::Ident, "a binder name");
      expect(Tok::Colon, "':' and the binder type");
      Type ty = type_atom();
      expect(Tok::Dot, "'.' after the binder");
      CP body = expr(0);
      Cst c{Cst::K::Quant, tok.span};
      c.name = name.text;
      c.ty = ty;
      c.exists = tok.text == "exists";
      c.holes = holes_of(body);
      c.b = body;
      return mk(std::move(c));
    }
    if (tok.kind == Tok::Tilde) {
      ++pos;
      CP operand = prefix_operand();
      Cst c{Cst::K::Not, tok.span};
      c.holes = holes_of(operand);
      c.a = operand;
      return mk(std::move(c));
    }
    return application();
  }

  CP prefix_operand() {
    if (cur().kind == Tok::Tilde) {
      const Token& tok = cur();
      ++pos;
      CP operand = prefix_operand();
      Cst c{Cst::K::Not, tok.span};
      c.holes = holes_of(operand);
      c.a = operand;
      return mk(std::move(c));
    }
    return application();
  }

  struct OpInfo {
    const char* name;
    int prec;
    bool right;
  };

  const OpInfo* binop() const {
    static const OpInfo imp{"=>", 10, true};
    static const OpInfo orop{"\\/", 20, false};
    static const OpInfo andop{"/\\", 30, false};
    static const OpInfo eqop{"=", 40, false};
    static const OpInfo plus{"+", 50, false};
    static const OpInfo star{"*", 60, false};
    switch (cur().kind) {
      case Tok::ImpOp: return &imp;
      case Tok::OrOp: return &orop;
      case Tok::AndOp: return &andop;
      case Tok::Equals: return &eqop;
      case Tok::Plus: return &plus;
      case Tok::Star: return &star;
      default: return nullptr;
    }
  }

  CP expr(int min_prec) {
    CP lhs = prefix();
    for (;;) {
      if (cur().kind == Tok::Caret && 70 >= min_prec) {
        SourceSpan span = cur().span;
        ++pos;
        Token num = expect(Tok::Num, "a literal exponent");
        Cst c{Cst::K::Pow, span};
        c.num = std::stoull(num.text);
        c.holes = holes_of(lhs);
        c.a = lhs;
        lhs = mk(std::move(c));
        continue;
      }
      const OpInfo* op = binop();
      if (!op || op->prec < min_prec) break;
      SourceSpan span = cur().span;
      ++pos;
      CP rhs = expr(op->right ? op->prec : op->prec + 1);
      Cst c{Cst::K::Bin, span};
      c.name = op->name;
      c.holes = holes_of(lhs) + holes_of(rhs);
      c.a = lhs;
      c.b = rhs;
      lhs = mk(std::move(c));
    }
    return lhs;
  }
};

// ---------------------------------------------------------------------------
// Elaboration
// ---------------------------------------------------------------------------

struct Ctx {
  const Theory* th;
  const std::map<std::string, Expr>* bindings;
};

Expr elab_expr(const CP& c, const Ctx& ctx);
QuasiExpr elab_quasi(const CP& c, const Ctx& ctx);

template <typename F>
auto with_span(const SourceSpan& span, F&& f) {
  try {
    return f();
  } catch (Error& e) {
    if (e.span()) throw;
    throw Error(e.code(), e.what(), span);
  }
}

Var binder_var(const CP& c, const Ctx& ctx) {
  if (ctx.th->has(c->name))
    throw Error(Errc::ParseError, "binder '" + c->name + "' collides with a constant", c->span);
  return Var{c->name, c->ty};
}

Const family_const(const CP& c, const Ctx& ctx) {
  const ConstantDef* d = ctx.th->find(c->name);
  if (!d || !d->family)
    throw Error(Errc::ParseError, "'" + c->name + "' is not a type-indexed family", c->span);
  if (c->name == "eq") return consts::eq(c->ty);
  if (c->name == "is-expr") return consts::is_expr(c->ty);
  throw Error(Errc::ParseError, "unknown family '" + c->name + "'", c->span);
}

Expr atom_expr(const CP& c, const Ctx& ctx) {
  switch (c->k) {
    case Cst::K::Bare: {
      auto it = ctx.bindings->find(c->name);
      if (it != ctx.bindings->end()) return it->second;
      if (auto k = ctx.th->resolve(c->name)) return Expr::constant(*k, c->span);
      if (ctx.th->has(c->name))
        throw Error(Errc::ParseError,
                    "'" + c->name + "' is a type-indexed family; write " + c->name + "^<type>",
                    c->span);
      throw Error(Errc::ParseError,
                  "unknown constant '" + c->name + "' (variables need a type ascription: " +
                      c->name + ":<type>)",
                  c->span);
    }
    case Cst::K::Ascribed: {
      auto k = with_span(c->span, [&] { return ctx.th->resolve_ascribed(c->name, c->ty); });
      if (k) return Expr::constant(*k, c->span);
      return Expr::var(Var{c->name, c->ty}, c->span);
    }
    case Cst::K::Family: return Expr::constant(family_const(c, ctx), c->span);
    case Cst::K::Num: return Expr::constant(consts::numeral(c->num), c->span);
    default: break;
  }
  throw Error(Errc::ParseError, "unexpected atom", c->span);
}

Expr binary_const(const std::string& op, const Type& eq_index) {
  if (op == "=") return Expr::constant(consts::eq(eq_index));
  if (op == "/\\") return Expr::constant(consts::and_c());
  if (op == "\\/") return Expr::constant(consts::or_c());
  if (op == "=>") return Expr::constant(consts::imp_c());
  if (op == "+") return Expr::constant(consts::plus());
  if (op == "*") return Expr::constant(consts::times());
  throw Error(Errc::ParseError, "unknown operator " + op);
}

Expr elab_expr(const CP& c, const Ctx& ctx) {
  switch (c->k) {
    case Cst::K::Bare:
    case Cst::K::Ascribed:
    case Cst::K::Family:
    case Cst::K::Num: return atom_expr(c, ctx);
    case Cst::K::App:
      return Expr::app(elab_expr(c->a, ctx), elab_expr(c->b, ctx), c->span);
    case Cst::K::Abs:
      return Expr::abs(binder_var(c, ctx), elab_expr(c->b, ctx), c->span);
    case Cst::K::AbsHole:
      throw Error(Errc::HoleOutsideQuote, "hole binder outside a quotation", c->span);
    case Cst::K::Quote: {
      if (c->holes == 0) return Expr::quote(elab_expr(c->a, ctx), c->span);
      return with_span(c->span, [&] { return expand(elab_quasi(c->a, ctx)); });
    }
    case Cst::K::Eval:
      return Expr::eval(elab_expr(c->a, ctx), c->ty, c->span);
    case Cst::K::Hole:
      throw Error(Errc::HoleOutsideQuote, "antiquotation outside a quotation", c->span);
    case Cst::K::Bin: {
      Expr l = elab_expr(c->a, ctx);
      Expr r = elab_expr(c->b, ctx);
      Expr op = binary_const(c->name, l.type());
      return with_span(c->span, [&] { return Expr::app(Expr::app(op, l), r, c->span); });
    }
    case Cst::K::Not:
      return with_span(c->span, [&] {
        return Expr::app(Expr::constant(consts::not_c()), elab_expr(c->a, ctx), c->span);
      });
    case Cst::K::Quant: {
      Var x = binder_var(c, ctx);
      Expr body = elab_expr(c->b, ctx);
      Expr tt = Expr::constant(consts::t_c());
      return with_span(c->span, [&] {
        Expr all = Expr::app_n(Expr::constant(consts::eq(Type::fun(x.ty, body.type()))),
                               {Expr::abs(x, tt), Expr::abs(x, body)});
        if (!c->exists) return all;
        // exists x.A  ~~>  ~(forall x.~A)
        Expr not_body = Expr::app(Expr::constant(consts::not_c()), body);
        Expr inner = Expr::app_n(Expr::constant(consts::eq(Type::fun(x.ty, Type::omicron()))),
                                 {Expr::abs(x, tt), Expr::abs(x, not_body)});
        return Expr::app(Expr::constant(consts::not_c()), inner);
      });
    }
    case Cst::K::Pow: {
      Expr base = elab_expr(c->a, ctx);
      if (c->num == 0) return Expr::constant(consts::numeral(1), c->span);
      Expr out = base;
      for (std::uint64_t k = 1; k < c->num; ++k)
        out = with_span(c->span, [&] {
          return Expr::app_n(Expr::constant(consts::times()), {base, out});
        });
      return out;
    }
  }
  throw Error(Errc::ParseError, "unreachable", c->span);
}

QuasiExpr quasi_binary(const std::string& op, const CP& c, const Ctx& ctx) {
  QuasiExpr l = elab_quasi(c->a, ctx);
  QuasiExpr r = elab_quasi(c->b, ctx);
  Const k{"", Type::iota(), std::nullopt};
  if (op == "=") {
    // The equality type comes from a hole-free operand.
    if (c->a->holes == 0)
      k = consts::eq(elab_expr(c->a, ctx).type());
    else if (c->b->holes == 0)
      k = consts::eq(elab_expr(c->b, ctx).type());
    else
      throw Error(Errc::ParseError,
                  "cannot infer the equality type: both operands contain antiquotations",
                  c->span);
  } else if (op == "/\\") {
    k = consts::and_c();
  } else if (op == "\\/") {
    k = consts::or_c();
  } else if (op == "=>") {
    k = consts::imp_c();
  } else if (op == "+") {
    k = consts::plus();
  } else if (op == "*") {
    k = consts::times();
  } else {
    throw Error(Errc::ParseError, "unknown operator " + op, c->span);
  }
  return QuasiExpr::app(QuasiExpr::app(QuasiExpr::constant(k), l), r);
}

QuasiExpr elab_quasi(const CP& c, const Ctx& ctx) {
  switch (c->k) {
    case Cst::K::Bare: {
      auto it = ctx.bindings->find(c->name);
      if (it != ctx.bindings->end())
        return with_span(c->span, [&] { return embed(it->second); });
      Expr a = atom_expr(c, ctx);
      return QuasiExpr::constant(a.as_const());
    }
    case Cst::K::Ascribed: {
      Expr a = atom_expr(c, ctx);
      if (a.is_const()) return QuasiExpr::constant(a.as_const());
      return QuasiExpr::var(a.as_var());
    }
    case Cst::K::Family:
    case Cst::K::Num: return QuasiExpr::constant(atom_expr(c, ctx).as_const());
    case Cst::K::App:
      return QuasiExpr::app(elab_quasi(c->a, ctx), elab_quasi(c->b, ctx));
    case Cst::K::Abs:
      return QuasiExpr::abs(binder_var(c, ctx), elab_quasi(c->b, ctx));
    case Cst::K::AbsHole: {
      QuasiExpr hole = QuasiExpr::hole(elab_expr(c->a->a, ctx), c->a->span);
      return QuasiExpr::abs_hole(std::move(hole), elab_quasi(c->b, ctx));
    }
    case Cst::K::Quote:
      return QuasiExpr::quote(elab_quasi(c->a, ctx));
    case Cst::K::Eval:
      throw Error(Errc::QuoteNotEvalFree, "evaluation is not allowed inside a quotation", c->span);
    case Cst::K::Hole:
      return QuasiExpr::hole(elab_expr(c->a, ctx), c->span);
    case Cst::K::Bin: return quasi_binary(c->name, c, ctx);
    case Cst::K::Not:
      return QuasiExpr::app(QuasiExpr::constant(consts::not_c()), elab_quasi(c->a, ctx));
    case Cst::K::Quant: {
      Var x = binder_var(c, ctx);
      QuasiExpr body = elab_quasi(c->b, ctx);
      QuasiExpr tt = QuasiExpr::constant(consts::t_c());
      Const eqk = consts::eq(Type::fun(x.ty, Type::omicron()));
      QuasiExpr all = QuasiExpr::app(
          QuasiExpr::app(QuasiExpr::constant(eqk), QuasiExpr::abs(x, tt)),
          QuasiExpr::abs(x, c->exists
                                ? QuasiExpr::app(QuasiExpr::constant(consts::not_c()), body)
                                : body));
      if (!c->exists) return all;
      return QuasiExpr::app(QuasiExpr::constant(consts::not_c()), all);
    }
    case Cst::K::Pow: {
      if (c->num == 0) return QuasiExpr::constant(consts::numeral(1));
      QuasiExpr base = elab_quasi(c->a, ctx);
      QuasiExpr out = base;
      for (std::uint64_t k = 1; k < c->num; ++k)
        out = QuasiExpr::app(QuasiExpr::app(QuasiExpr::constant(consts::times()), base), out);
      return out;
    }
  }
  throw Error(Errc::ParseError, "unreachable", c->span);
}

}  // namespace

Expr Parser::expr(const std::string& text, const std::string& filename, std::size_t line,
                  std::size_t column) const {
  std::vector<Token> toks = lex(text, filename, line, column);
  P p{toks};
  CP cst = p.expr(0);
  if (p.cur().kind != Tok::End)
    throw Error(Errc::ParseError, "unexpected trailing input", p.cur().span);
  Ctx ctx{theory_, &bindings_};
  return elab_expr(cst, ctx);
}

Expr Parser::expr_at(const std::vector<Token>& toks, std::size_t& pos) const {
  P p{toks, pos};
  CP cst = p.expr(0);
  pos = p.pos;
  Ctx ctx{theory_, &bindings_};
  return elab_expr(cst, ctx);
}

Type parse_type(const std::string& text, const std::string& filename, std::size_t line,
                std::size_t column) {
  std::vector<Token> toks = lex(text, filename, line, column);
  P p{toks};
  Type ty = p.type_full();
  if (p.cur().kind != Tok::End)
    throw Error(Errc::ParseError, "unexpected trailing input", p.cur().span);
  return ty;
}

Type parse_type_at(const std::vector<Token>& toks, std::size_t& pos) {
  P p{toks, pos};
  Type ty = p.type_full();
  pos = p.pos;
  return ty;
}

Expr parse_expr(const std::string& text) { return Parser(standard_theory()).expr(text); }

}  // namespace cttqe
