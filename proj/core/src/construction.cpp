#include "cttqe/construction.hpp"

#include <algorithm>

#include "cttqe/constants.hpp"

namespace cttqe {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Construction Construction::quoted_var(Var v) {
  Node n;
  n.kind = ConstructionKind::QuotedVar;
  n.hash = mix(0xC1u, v.hash());
  n.v = std::move(v);
  Construction c;
  c.node_ = std::make_shared<const Node>(std::move(n));
  return c;
}

Construction Construction::quoted_const(Const con) {
  Node n;
  n.kind = ConstructionKind::QuotedConst;
  n.hash = mix(0xC2u, con.hash());
  n.c = std::move(con);
  Construction c;
  c.node_ = std::make_shared<const Node>(std::move(n));
  return c;
}

Construction Construction::app(Construction a, Construction b) {
  Node n;
  n.kind = ConstructionKind::App;
  n.hash = mix(mix(0xC3u, a.hash()), b.hash());
  n.depth = 1 + std::max(a.depth(), b.depth());
  n.a = std::move(a);
  n.b = std::move(b);
  Construction c;
  c.node_ = std::make_shared<const Node>(std::move(n));
  return c;
}

Construction Construction::abs(Construction a, Construction b) {
  Node n;
  n.kind = ConstructionKind::Abs;
  n.hash = mix(mix(0xC4u, a.hash()), b.hash());
  n.depth = 1 + std::max(a.depth(), b.depth());
  n.a = std::move(a);
  n.b = std::move(b);
  Construction c;
  c.node_ = std::make_shared<const Node>(std::move(n));
  return c;
}

Construction Construction::quo(Construction a) {
  Node n;
  n.kind = ConstructionKind::Quo;
  n.hash = mix(0xC5u, a.hash());
  n.depth = 1 + a.depth();
  n.a = std::move(a);
  Construction c;
  c.node_ = std::make_shared<const Node>(std::move(n));
  return c;
}

bool Construction::operator==(const Construction& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind || x.hash != y.hash) return false;
  switch (x.kind) {
    case ConstructionKind::QuotedVar: return x.v == y.v;
    case ConstructionKind::QuotedConst: return x.c == y.c;
    case ConstructionKind::App:
    case ConstructionKind::Abs: return x.a == y.a && x.b == y.b;
    case ConstructionKind::Quo: return x.a == y.a;
  }
  return false;
}

Construction encode(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return Construction::quoted_var(e.as_var());
    case ExprKind::Const: return Construction::quoted_const(e.as_const());
    case ExprKind::App: return Construction::app(encode(e.fun()), encode(e.arg()));
    case ExprKind::Abs:
      return Construction::abs(Construction::quoted_var(e.binder()), encode(e.body()));
    case ExprKind::Quote: return Construction::quo(encode(e.body()));
    case ExprKind::Eval:
      throw Error(Errc::NotEvalFree, "cannot encode an expression containing an evaluation");
  }
  throw Error(Errc::NotEvalFree, "unreachable");
}

namespace {

Properness improper(std::string reason, std::vector<int> path) {
  Properness p;
  p.proper = false;
  p.reason = std::move(reason);
  p.path = std::move(path);
  return p;
}

Properness classify_at(const Construction& c, std::vector<int>& path) {
  switch (c.kind()) {
    case ConstructionKind::QuotedVar: {
      Properness p;
      p.proper = true;
      p.decoded = Expr::var(c.var());
      p.ty = p.decoded.type();
      return p;
    }
    case ConstructionKind::QuotedConst: {
      Properness p;
      p.proper = true;
      p.decoded = Expr::constant(c.con());
      p.ty = p.decoded.type();
      return p;
    }
    case ConstructionKind::App: {
      path.push_back(0);
      Properness f = classify_at(c.a(), path);
      if (!f.proper) return f;
      path.back() = 1;
      Properness a = classify_at(c.b(), path);
      if (!a.proper) return a;
      path.pop_back();
      if (!f.ty.is_fun())
        return improper("app: operator does not decode to a function", path);
      if (f.ty.domain() != a.ty)
        return improper("app: operand type " + a.ty.to_string() +
                            " does not match operator domain " + f.ty.domain().to_string(),
                        path);
      Properness p;
      p.proper = true;
      p.decoded = Expr::app(f.decoded, a.decoded);
      p.ty = p.decoded.type();
      return p;
    }
    case ConstructionKind::Abs: {
      if (c.a().kind() != ConstructionKind::QuotedVar) {
        path.push_back(0);
        return improper("abs: first argument is not a quoted variable", path);
      }
      path.push_back(1);
      Properness b = classify_at(c.b(), path);
      if (!b.proper) return b;
      path.pop_back();
      Properness p;
      p.proper = true;
      p.decoded = Expr::abs(c.a().var(), b.decoded);
      p.ty = p.decoded.type();
      return p;
    }
    case ConstructionKind::Quo: {
      path.push_back(0);
      Properness b = classify_at(c.a(), path);
      if (!b.proper) return b;
      path.pop_back();
      Properness p;
      p.proper = true;
      p.decoded = Expr::quote(b.decoded);
      p.ty = p.decoded.type();
      return p;
    }
  }
  return improper("unreachable", path);
}

}  // namespace

Properness classify(const Construction& c) {
  std::vector<int> path;
  return classify_at(c, path);
}

Expr decode(const Construction& c) {
  Properness p = classify(c);
  if (!p.proper) {
    std::string where;
    for (int i : p.path) where += "." + std::to_string(i);
    throw Error(Errc::ImproperConstruction, p.reason + " (at root" + where + ")");
  }
  return p.decoded;
}

Expr as_expr(const Construction& c) {
  switch (c.kind()) {
    case ConstructionKind::QuotedVar: return Expr::quote(Expr::var(c.var()));
    case ConstructionKind::QuotedConst: return Expr::quote(Expr::constant(c.con()));
    case ConstructionKind::App:
      return Expr::app_n(Expr::constant(consts::app_c()), {as_expr(c.a()), as_expr(c.b())});
    case ConstructionKind::Abs:
      return Expr::app_n(Expr::constant(consts::abs_c()), {as_expr(c.a()), as_expr(c.b())});
    case ConstructionKind::Quo:
      return Expr::app(Expr::constant(consts::quo_c()), as_expr(c.a()));
  }
  throw Error(Errc::NotAConstructionLiteral, "unreachable");
}

namespace {

bool is_syntax_constructor(const Expr& e, const Const& which) {
  return e.is_const() && e.as_const() == which;
}

}  // namespace

Construction from_expr(const Expr& e) {
  if (e.is_quote()) {
    const Expr& b = e.body();
    if (b.is_var()) return Construction::quoted_var(b.as_var());
    if (b.is_const()) return Construction::quoted_const(b.as_const());
    throw Error(Errc::NotAConstructionLiteral,
                "quotation of a non-atom is not a construction literal");
  }
  if (e.is_app()) {
    const Expr& f = e.fun();
    if (f.is_app() && is_syntax_constructor(f.fun(), consts::app_c()))
      return Construction::app(from_expr(f.arg()), from_expr(e.arg()));
    if (f.is_app() && is_syntax_constructor(f.fun(), consts::abs_c()))
      return Construction::abs(from_expr(f.arg()), from_expr(e.arg()));
    if (is_syntax_constructor(f, consts::quo_c())) return Construction::quo(from_expr(e.arg()));
  }
  throw Error(Errc::NotAConstructionLiteral,
              "expression is not a construction literal");
}

std::optional<Construction> literal_value(const Expr& e) {
  if (e.is_quote()) return encode(e.body());
  if (e.is_app()) {
    const Expr& f = e.fun();
    if (f.is_app() && is_syntax_constructor(f.fun(), consts::app_c())) {
      auto a = literal_value(f.arg());
      auto b = literal_value(e.arg());
      if (a && b) return Construction::app(std::move(*a), std::move(*b));
      return std::nullopt;
    }
    if (f.is_app() && is_syntax_constructor(f.fun(), consts::abs_c())) {
      auto a = literal_value(f.arg());
      auto b = literal_value(e.arg());
      if (a && b) return Construction::abs(std::move(*a), std::move(*b));
      return std::nullopt;
    }
    if (is_syntax_constructor(f, consts::quo_c())) {
      auto a = literal_value(e.arg());
      if (a) return Construction::quo(std::move(*a));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace cttqe
