#include "cttqe/builtins.hpp"

#include "cttqe/constants.hpp"
#include "cttqe/rewrite.hpp"

namespace cttqe {

std::optional<std::pair<Expr, Expr>> match_binary(const Expr& e, const char* const_name) {
  if (!e.is_app() || !e.fun().is_app() || !e.fun().fun().is_const()) return std::nullopt;
  Const c = e.fun().fun().as_const();
  if (c.family_index || c.name != const_name) return std::nullopt;
  return std::make_pair(e.fun().arg(), e.arg());
}

std::optional<std::pair<Var, Expr>> match_forall(const Expr& e) {
  auto eq = match_binary(e, "eq");
  if (!eq) return std::nullopt;
  const Expr& lhs = eq->first;
  const Expr& rhs = eq->second;
  if (!lhs.is_abs() || !rhs.is_abs()) return std::nullopt;
  if (lhs.binder() != rhs.binder()) return std::nullopt;
  if (!(lhs.body().is_const() && lhs.body().as_const() == consts::t_c())) return std::nullopt;
  return std::make_pair(rhs.binder(), rhs.body());
}

std::optional<Expr> match_not(const Expr& e) {
  if (e.is_app() && e.fun().is_const() && e.fun().as_const() == consts::not_c()) return e.arg();
  return std::nullopt;
}

std::optional<std::pair<Var, Expr>> match_exists(const Expr& e) {
  auto n = match_not(e);
  if (!n) return std::nullopt;
  auto all = match_forall(*n);
  if (!all) return std::nullopt;
  auto inner = match_not(all->second);
  if (!inner) return std::nullopt;
  return std::make_pair(all->first, *inner);
}

namespace {

bool poly_expr(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return e.type().is_iota();
    case ExprKind::Const: return consts::numeral_value(e.as_const()).has_value();
    case ExprKind::App: {
      if (auto p = match_binary(e, "plus")) return poly_expr(p->first) && poly_expr(p->second);
      if (auto p = match_binary(e, "times")) return poly_expr(p->first) && poly_expr(p->second);
      return false;
    }
    default: return false;
  }
}

bool peano_term(const Expr& e) {
  switch (e.kind()) {
    case ExprKind::Var: return e.type().is_iota();
    case ExprKind::Const: {
      auto n = consts::numeral_value(e.as_const());
      return n.has_value() && *n == 0;
    }
    case ExprKind::App: {
      if (e.fun().is_const() && e.fun().as_const() == consts::succ())
        return peano_term(e.arg());
      if (auto p = match_binary(e, "plus")) return peano_term(p->first) && peano_term(p->second);
      if (auto p = match_binary(e, "times")) return peano_term(p->first) && peano_term(p->second);
      return false;
    }
    default: return false;
  }
}

bool peano_formula(const Expr& e) {
  if (auto q = match_forall(e)) return q->first.ty.is_iota() && peano_formula(q->second);
  if (auto q = match_exists(e)) return q->first.ty.is_iota() && peano_formula(q->second);
  if (auto n = match_not(e)) return peano_formula(*n);
  for (const char* op : {"and", "or", "imp"})
    if (auto p = match_binary(e, op)) return peano_formula(p->first) && peano_formula(p->second);
  if (auto p = match_binary(e, "eq"))
    return p->first.type().is_iota() && peano_term(p->first) && peano_term(p->second);
  return false;
}

}  // namespace

bool is_poly(const Construction& c) {
  Properness p = classify(c);
  return p.proper && p.ty.is_iota() && poly_expr(p.decoded);
}

bool is_peano(const Construction& c) {
  Properness p = classify(c);
  return p.proper && p.ty.is_omicron() && peano_formula(p.decoded);
}

namespace {

Expr numeral_expr(std::uint64_t n) { return Expr::constant(consts::numeral(n)); }

std::optional<std::uint64_t> numeral_of(const Expr& e) {
  if (!e.is_const()) return std::nullopt;
  return consts::numeral_value(e.as_const());
}

bool is_zero(const Expr& e) {
  auto n = numeral_of(e);
  return n && *n == 0;
}
bool is_one(const Expr& e) {
  auto n = numeral_of(e);
  return n && *n == 1;
}

Expr times_expr(const Expr& a, const Expr& b) {
  return Expr::app_n(Expr::constant(consts::times()), {a, b});
}
Expr plus_expr(const Expr& a, const Expr& b) {
  return Expr::app_n(Expr::constant(consts::plus()), {a, b});
}

Expr simp_times(const Expr& a, const Expr& b) {
  if (is_zero(a) || is_zero(b)) return numeral_expr(0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  auto na = numeral_of(a), nb = numeral_of(b);
  if (na && nb) return numeral_expr(*na * *nb);
  return times_expr(a, b);
}

Expr simp_plus(const Expr& a, const Expr& b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  return plus_expr(a, b);
}

// Matches right-nested powers u * (u * (... * u)) as produced by the ^n
// surface sugar. Returns the base and the exponent (>= 2).
std::optional<std::pair<Expr, std::uint64_t>> match_power(const Expr& e) {
  auto p = match_binary(e, "times");
  if (!p) return std::nullopt;
  const Expr& base = p->first;
  if (p->second == base) return std::make_pair(base, std::uint64_t{2});
  auto inner = match_power(p->second);
  if (inner && inner->first == base) return std::make_pair(base, inner->second + 1);
  return std::nullopt;
}

Expr power_expr(const Expr& base, std::uint64_t n) {
  if (n == 0) return numeral_expr(1);
  Expr out = base;
  for (std::uint64_t k = 1; k < n; ++k) out = times_expr(base, out);
  return out;
}

Expr diff(const Expr& e, const Var& x) {
  switch (e.kind()) {
    case ExprKind::Const: return numeral_expr(0);
    case ExprKind::Var: return e.as_var() == x ? numeral_expr(1) : numeral_expr(0);
    case ExprKind::App: {
      if (auto p = match_binary(e, "plus"))
        return simp_plus(diff(p->first, x), diff(p->second, x));
      if (auto p = match_binary(e, "times")) {
        if (auto pw = match_power(e)) {
          const Expr& u = pw->first;
          std::uint64_t n = pw->second;
          return simp_times(simp_times(numeral_expr(n), power_expr(u, n - 1)), diff(u, x));
        }
        return simp_plus(simp_times(diff(p->first, x), p->second),
                         simp_times(p->first, diff(p->second, x)));
      }
      break;
    }
    default: break;
  }
  throw Error(Errc::NotAPolynomial, "not a polynomial subterm");
}

}  // namespace

Construction poly_diff(const Construction& v, const Construction& x) {
  if (x.kind() != ConstructionKind::QuotedVar || !x.var().ty.is_iota())
    throw Error(Errc::NotAVariable,
                "differentiation variable must be a quoted variable of type i");
  if (!is_poly(v))
    throw Error(Errc::NotAPolynomial, "argument does not represent a polynomial");
  Expr body = decode(v);
  return encode(diff(body, x.var()));
}

namespace {

Expr truth_expr(bool b) {
  return Expr::constant(b ? consts::t_c() : consts::f_c());
}

}  // namespace

std::optional<Expr> builtin_step(const Expr& e, const Theory& th) {
  // unary applications: head constant + one argument
  if (e.is_app() && e.fun().is_const()) {
    Const h = e.fun().as_const();
    if (!th.is_builtin(h)) return std::nullopt;
    auto a = literal_value(e.arg());
    if (!a) return std::nullopt;
    if (h.name == "is-var")
      return truth_expr(a->kind() == ConstructionKind::QuotedVar);
    if (h.name == "is-con")
      return truth_expr(a->kind() == ConstructionKind::QuotedConst);
    if (h.name == "is-expr" && h.family_index) {
      Properness p = classify(*a);
      return truth_expr(p.proper && p.ty == *h.family_index);
    }
    if (h.name == "is-poly") return truth_expr(is_poly(*a));
    if (h.name == "is-peano") return truth_expr(is_peano(*a));
    return std::nullopt;
  }
  // binary applications
  if (e.is_app() && e.fun().is_app() && e.fun().fun().is_const()) {
    Const h = e.fun().fun().as_const();
    if (!th.is_builtin(h)) return std::nullopt;
    auto a = literal_value(e.fun().arg());
    auto b = literal_value(e.arg());
    if (!a || !b) return std::nullopt;
    if (h.name == "eq" && h.ty.domain().is_epsilon()) return truth_expr(*a == *b);
    if (h.name == "is-free-in") {
      if (a->kind() != ConstructionKind::QuotedVar) return std::nullopt;
      FreeStatus s = is_free_in(*a, *b);
      if (s == FreeStatus::Unknown) return std::nullopt;
      return truth_expr(s == FreeStatus::Free);
    }
    if (h.name == "poly-diff") {
      if (!is_poly(*a) || b->kind() != ConstructionKind::QuotedVar || !b->var().ty.is_iota())
        return std::nullopt;
      return as_expr(poly_diff(*a, *b));
    }
  }
  return std::nullopt;
}

}  // namespace cttqe
