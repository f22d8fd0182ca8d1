#include "cttqe/expr.hpp"

#include <algorithm>
#include <unordered_set>

namespace cttqe {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_string(const std::string& s) { return std::hash<std::string>{}(s); }

}  // namespace

std::size_t Var::hash() const { return mix(mix(0xA1u, hash_string(name)), ty.hash()); }

std::size_t Const::hash() const {
  std::size_t h = mix(mix(0xB2u, hash_string(name)), ty.hash());
  if (family_index) h = mix(h, family_index->hash());
  return h;
}

const char* free_status_name(FreeStatus s) {
  switch (s) {
    case FreeStatus::Free: return "Free";
    case FreeStatus::NotFree: return "NotFree";
    case FreeStatus::Unknown: return "Unknown";
  }
  return "?";
}

Expr Expr::var(Var v, std::optional<SourceSpan> span) {
  Node n;
  n.kind = ExprKind::Var;
  n.ty = v.ty;
  n.name = std::move(v.name);
  n.hash = mix(0x01u, Var{n.name, n.ty}.hash());
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::constant(Const c, std::optional<SourceSpan> span) {
  Node n;
  n.kind = ExprKind::Const;
  n.ty = c.ty;
  n.name = std::move(c.name);
  n.family_index = std::move(c.family_index);
  n.hash = mix(0x02u, Const{n.name, n.ty, n.family_index}.hash());
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::app(Expr fun, Expr arg, std::optional<SourceSpan> span) {
  const Type& ft = fun.type();
  if (!ft.is_fun() || ft.domain() != arg.type()) {
    std::string msg = "cannot apply operator of type " + ft.to_string() +
                      " to operand of type " + arg.type().to_string();
    if (span) throw Error(Errc::TypeMismatch, msg, *span);
    throw Error(Errc::TypeMismatch, msg);
  }
  Node n;
  n.kind = ExprKind::App;
  n.ty = ft.codomain();
  n.hash = mix(mix(0x03u, fun.hash()), arg.hash());
  n.a = std::move(fun);
  n.b = std::move(arg);
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::app_n(Expr fun, std::initializer_list<Expr> args) {
  Expr out = std::move(fun);
  for (const Expr& a : args) out = app(out, a);
  return out;
}

Expr Expr::abs(Var binder, Expr body, std::optional<SourceSpan> span) {
  Node n;
  n.kind = ExprKind::Abs;
  n.ty = Type::fun(binder.ty, body.type());
  n.name = std::move(binder.name);
  n.binder_ty = binder.ty;
  n.hash = mix(mix(mix(0x04u, hash_string(n.name)), n.binder_ty.hash()), body.hash());
  n.a = std::move(body);
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::quote(Expr body, std::optional<SourceSpan> span) {
  if (!is_eval_free(body)) {
    std::string msg = "quotation body contains an evaluation";
    if (span) throw Error(Errc::QuoteNotEvalFree, msg, *span);
    throw Error(Errc::QuoteNotEvalFree, msg);
  }
  Node n;
  n.kind = ExprKind::Quote;
  n.ty = Type::epsilon();
  n.hash = mix(0x05u, body.hash());
  n.a = std::move(body);
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Expr Expr::eval(Expr arg, Type target, std::optional<SourceSpan> span) {
  if (!arg.type().is_epsilon()) {
    std::string msg = "evaluation argument has type " + arg.type().to_string() + ", expected eps";
    if (span) throw Error(Errc::EvalArgNotEpsilon, msg, *span);
    throw Error(Errc::EvalArgNotEpsilon, msg);
  }
  Node n;
  n.kind = ExprKind::Eval;
  n.ty = std::move(target);
  n.hash = mix(mix(0x06u, arg.hash()), n.ty.hash());
  n.a = std::move(arg);
  n.span = std::move(span);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

Var Expr::as_var() const {
  if (kind() == ExprKind::Var) return Var{node_->name, node_->ty};
  return binder();
}

Const Expr::as_const() const { return Const{node_->name, node_->ty, node_->family_index}; }

Var Expr::binder() const { return Var{node_->name, node_->binder_ty}; }

Expr Expr::with_span(SourceSpan s) const {
  Node n = *node_;
  n.span = std::move(s);
  Expr e;
  e.node_ = std::make_shared<const Node>(std::move(n));
  return e;
}

bool Expr::operator==(const Expr& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const Node& x = *node_;
  const Node& y = *other.node_;
  if (x.kind != y.kind || x.hash != y.hash) return false;
  switch (x.kind) {
    case ExprKind::Var: return x.name == y.name && x.ty == y.ty;
    case ExprKind::Const:
      return x.name == y.name && x.ty == y.ty &&
             x.family_index.has_value() == y.family_index.has_value() &&
             (!x.family_index || *x.family_index == *y.family_index);
    case ExprKind::App: return x.a == y.a && x.b == y.b;
    case ExprKind::Abs: return x.name == y.name && x.binder_ty == y.binder_ty && x.a == y.a;
    case ExprKind::Quote: return x.a == y.a;
    case ExprKind::Eval: return x.ty == y.ty && x.a == y.a;
  }
  return false;
}

std::size_t Expr::size() const {
  switch (kind()) {
    case ExprKind::Var:
    case ExprKind::Const: return 1;
    case ExprKind::App: return 1 + fun().size() + arg().size();
    case ExprKind::Abs:
    case ExprKind::Quote: return 1 + body().size();
    case ExprKind::Eval: return 1 + eval_arg().size();
  }
  return 1;
}

bool is_eval_free(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const: return true;
    case ExprKind::App: return is_eval_free(e.fun()) && is_eval_free(e.arg());
    case ExprKind::Abs: return is_eval_free(e.body());
    // A quotation body is eval-free by construction.
    case ExprKind::Quote: return true;
    case ExprKind::Eval: return false;
  }
  return false;
}

bool occurs_anywhere(const Var& x, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return e.as_var() == x;
    case ExprKind::Const: return false;
    case ExprKind::App: return occurs_anywhere(x, e.fun()) || occurs_anywhere(x, e.arg());
    case ExprKind::Abs: return e.binder() == x || occurs_anywhere(x, e.body());
    case ExprKind::Quote: return occurs_anywhere(x, e.body());
    case ExprKind::Eval: return occurs_anywhere(x, e.eval_arg());
  }
  return false;
}

namespace {

FreeStatus join(FreeStatus a, FreeStatus b) {
  if (a == FreeStatus::Free || b == FreeStatus::Free) return FreeStatus::Free;
  if (a == FreeStatus::Unknown || b == FreeStatus::Unknown) return FreeStatus::Unknown;
  return FreeStatus::NotFree;
}

}  // namespace

FreeStatus free_status(const Var& x, const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var:
      return e.as_var() == x ? FreeStatus::Free : FreeStatus::NotFree;
    case ExprKind::Const: return FreeStatus::NotFree;
    case ExprKind::App: return join(free_status(x, e.fun()), free_status(x, e.arg()));
    case ExprKind::Abs:
      if (e.binder() == x) return FreeStatus::NotFree;
      return free_status(x, e.body());
    case ExprKind::Quote:
      // Quotations bind nothing and contain no free variables.
      return FreeStatus::NotFree;
    case ExprKind::Eval:
      // Freeness under an evaluation is a semantic notion; any occurrence
      // of x in the argument, quoted or not, cannot be discharged here.
      return occurs_anywhere(x, e.eval_arg()) ? FreeStatus::Unknown : FreeStatus::NotFree;
  }
  return FreeStatus::Unknown;
}

namespace {

// Unbound variables occurring anywhere under an evaluation, quoted or not.
void collect_vars_under(const Expr& e, std::vector<Var>& order,
                        std::unordered_set<std::size_t>& seen,
                        const std::vector<Var>& bound) {
  switch (e.kind()) {
    case ExprKind::Var: {
      Var v = e.as_var();
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
      if (seen.insert(v.hash()).second) order.push_back(std::move(v));
      return;
    }
    case ExprKind::Const: return;
    case ExprKind::App:
      collect_vars_under(e.fun(), order, seen, bound);
      collect_vars_under(e.arg(), order, seen, bound);
      return;
    case ExprKind::Abs:
      collect_vars_under(e.body(), order, seen, bound);
      return;
    case ExprKind::Quote:
      collect_vars_under(e.body(), order, seen, bound);
      return;
    case ExprKind::Eval:
      collect_vars_under(e.eval_arg(), order, seen, bound);
      return;
  }
}

void collect_statuses(const Expr& e, std::vector<Var>& order,
                      std::unordered_set<std::size_t>& seen,
                      const std::vector<Var>& bound) {
  switch (e.kind()) {
    case ExprKind::Var: {
      Var v = e.as_var();
      if (std::find(bound.begin(), bound.end(), v) != bound.end()) return;
      if (seen.insert(v.hash()).second) order.push_back(std::move(v));
      return;
    }
    case ExprKind::Const: return;
    case ExprKind::App:
      collect_statuses(e.fun(), order, seen, bound);
      collect_statuses(e.arg(), order, seen, bound);
      return;
    case ExprKind::Abs: {
      std::vector<Var> inner = bound;
      inner.push_back(e.binder());
      collect_statuses(e.body(), order, seen, inner);
      return;
    }
    case ExprKind::Quote: return;
    case ExprKind::Eval:
      // Everything occurring under the evaluation may matter semantically.
      collect_vars_under(e.eval_arg(), order, seen, bound);
      return;
  }
}

}  // namespace

std::vector<Var> possibly_free_vars(const Expr& e) {
  std::vector<Var> order;
  std::unordered_set<std::size_t> seen;
  collect_statuses(e, order, seen, {});
  return order;
}

void collect_names(const Expr& e, std::vector<std::string>& out) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const: out.push_back(e.name()); return;
    case ExprKind::App:
      collect_names(e.fun(), out);
      collect_names(e.arg(), out);
      return;
    case ExprKind::Abs:
      out.push_back(e.binder().name);
      collect_names(e.body(), out);
      return;
    case ExprKind::Quote: collect_names(e.body(), out); return;
    case ExprKind::Eval: collect_names(e.eval_arg(), out); return;
  }
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::TypeMismatch: return "TypeMismatch";
    case Errc::QuoteNotEvalFree: return "QuoteNotEvalFree";
    case Errc::EvalArgNotEpsilon: return "EvalArgNotEpsilon";
    case Errc::NotEvalFree: return "NotEvalFree";
    case Errc::ImproperConstruction: return "ImproperConstruction";
    case Errc::NotAConstructionLiteral: return "NotAConstructionLiteral";
    case Errc::HoleNotEpsilon: return "HoleNotEpsilon";
    case Errc::HoleOutsideQuote: return "HoleOutsideQuote";
    case Errc::NotDefined: return "NotDefined";
    case Errc::MissingConstant: return "MissingConstant";
    case Errc::NotAPolynomial: return "NotAPolynomial";
    case Errc::NotAVariable: return "NotAVariable";
    case Errc::SubstitutionBlocked: return "SubstitutionBlocked";
    case Errc::FuelExhausted: return "FuelExhausted";
    case Errc::UnsupportedEquality: return "UnsupportedEquality";
    case Errc::ParseError: return "ParseError";
    case Errc::IllTyped: return "IllTyped";
    case Errc::HypothesisFailed: return "HypothesisFailed";
    case Errc::MismatchAfterRewrite: return "MismatchAfterRewrite";
    case Errc::InstantiationBlocked: return "InstantiationBlocked";
    case Errc::BadModel: return "BadModel";
    case Errc::BadTheory: return "BadTheory";
  }
  return "Error";
}

}  // namespace cttqe
