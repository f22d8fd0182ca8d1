#include "cttqe/quasiquote.hpp"

#include "cttqe/constants.hpp"

namespace cttqe {

QuasiExpr QuasiExpr::hole(Expr e, std::optional<SourceSpan> span) {
  Node n;
  n.kind = QuasiKind::Hole;
  n.hole = std::move(e);
  n.holes = 1;
  n.span = std::move(span);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::var(Var v) {
  Node n;
  n.kind = QuasiKind::Var;
  n.v = std::move(v);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::constant(Const c) {
  Node n;
  n.kind = QuasiKind::Const;
  n.c = std::move(c);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::app(QuasiExpr m, QuasiExpr nq) {
  Node n;
  n.kind = QuasiKind::App;
  n.holes = m.hole_count() + nq.hole_count();
  n.a = std::move(m);
  n.b = std::move(nq);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::abs(Var binder, QuasiExpr body) {
  Node n;
  n.kind = QuasiKind::AbsVar;
  n.v = std::move(binder);
  n.holes = body.hole_count();
  n.b = std::move(body);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::abs_hole(QuasiExpr hole, QuasiExpr body) {
  if (hole.kind() != QuasiKind::Hole)
    throw Error(Errc::HoleNotEpsilon, "binder of a hole abstraction must be an antiquotation");
  Node n;
  n.kind = QuasiKind::AbsHole;
  n.holes = hole.hole_count() + body.hole_count();
  n.a = std::move(hole);
  n.b = std::move(body);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr QuasiExpr::quote(QuasiExpr m) {
  Node n;
  n.kind = QuasiKind::Quote;
  n.holes = m.hole_count();
  n.a = std::move(m);
  QuasiExpr q;
  q.node_ = std::make_shared<const Node>(std::move(n));
  return q;
}

QuasiExpr embed(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return QuasiExpr::var(e.as_var());
    case ExprKind::Const: return QuasiExpr::constant(e.as_const());
    case ExprKind::App: return QuasiExpr::app(embed(e.fun()), embed(e.arg()));
    case ExprKind::Abs: return QuasiExpr::abs(e.binder(), embed(e.body()));
    case ExprKind::Quote: return QuasiExpr::quote(embed(e.body()));
    case ExprKind::Eval:
      throw Error(Errc::NotEvalFree, "evaluations do not embed into quasi-expressions");
  }
  throw Error(Errc::NotEvalFree, "unreachable");
}

namespace {

Expr checked_hole(const QuasiExpr& h) {
  const Expr& e = h.hole_expr();
  if (!e.type().is_epsilon()) {
    std::string msg = "antiquotation hole has type " + e.type().to_string() + ", expected eps";
    if (h.span()) throw Error(Errc::HoleNotEpsilon, msg, *h.span());
    throw Error(Errc::HoleNotEpsilon, msg);
  }
  return e;
}

}  // namespace

Expr expand(const QuasiExpr& m) {
  switch (m.kind()) {
    case QuasiKind::Hole: return checked_hole(m);
    case QuasiKind::Var: return Expr::quote(Expr::var(m.var_sym()));
    case QuasiKind::Const: return Expr::quote(Expr::constant(m.const_sym()));
    case QuasiKind::App:
      return Expr::app_n(Expr::constant(consts::app_c()), {expand(m.a()), expand(m.b())});
    case QuasiKind::AbsVar:
      return Expr::app_n(Expr::constant(consts::abs_c()),
                         {Expr::quote(Expr::var(m.var_sym())), expand(m.b())});
    case QuasiKind::AbsHole:
      return Expr::app_n(Expr::constant(consts::abs_c()), {checked_hole(m.a()), expand(m.b())});
    case QuasiKind::Quote:
      return Expr::app(Expr::constant(consts::quo_c()), expand(m.a()));
  }
  throw Error(Errc::HoleNotEpsilon, "unreachable");
}

}  // namespace cttqe
