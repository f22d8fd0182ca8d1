#include "cttqe/rewrite.hpp"

#include <algorithm>

#include "cttqe/builtins.hpp"
#include "cttqe/constants.hpp"

namespace cttqe {

namespace {
constexpr std::uint64_t kSideConditionFuel = 4096;
}

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::Beta: return "beta";
    case RuleId::Disquote: return "disquote";
    case RuleId::QuoteNorm: return "quotenorm";
    case RuleId::EvalBeta: return "evalbeta";
    case RuleId::BuiltinFold: return "fold";
    case RuleId::DefUnfold: return "unfold";
  }
  return "?";
}

std::optional<RuleId> rule_from_name(const std::string& name) {
  for (RuleId r : {RuleId::Beta, RuleId::Disquote, RuleId::QuoteNorm, RuleId::EvalBeta,
                   RuleId::BuiltinFold, RuleId::DefUnfold})
    if (name == rule_name(r)) return r;
  return std::nullopt;
}

std::string path_to_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out = "root";
  for (int i : path) out += "." + std::to_string(i);
  return out;
}

namespace {

Var fresh_var(const Var& base, const Expr& a, const Expr& b) {
  std::vector<std::string> used;
  collect_names(a, used);
  collect_names(b, used);
  for (std::uint64_t n = 1;; ++n) {
    std::string candidate = base.name + std::to_string(n);
    if (std::find(used.begin(), used.end(), candidate) == used.end())
      return Var{candidate, base.ty};
  }
}

Expr subst(const Expr& e, const Var& x, const Expr& a) {
  switch (e.kind()) {
    case ExprKind::Var: return e.as_var() == x ? a : e;
    case ExprKind::Const: return e;
    case ExprKind::App: return Expr::app(subst(e.fun(), x, a), subst(e.arg(), x, a));
    case ExprKind::Abs: {
      Var y = e.binder();
      if (y == x) return e;
      if (free_status(x, e.body()) == FreeStatus::NotFree) return e;
      Expr body = e.body();
      if (free_status(y, a) != FreeStatus::NotFree) {
        Var y2 = fresh_var(y, body, a);
        body = subst(body, y, Expr::var(y2));
        y = y2;
      }
      return Expr::abs(y, subst(body, x, a));
    }
    case ExprKind::Quote: return e;
    case ExprKind::Eval: {
      if (!occurs_anywhere(x, e.eval_arg())) return e;
      throw Error(Errc::SubstitutionBlocked,
                  "occurrence of " + x.name + " under an evaluation cannot be discharged");
    }
  }
  return e;
}

}  // namespace

Expr substitute(const Expr& body, const Var& x, const Expr& replacement) {
  if (replacement.type() != x.ty)
    throw Error(Errc::TypeMismatch, "substituting a value of type " +
                                        replacement.type().to_string() + " for " + x.name + ":" +
                                        x.ty.to_string());
  return subst(body, x, replacement);
}

FreeStatus is_free_in(const Construction& quoted_var, const Construction& c) {
  if (quoted_var.kind() != ConstructionKind::QuotedVar)
    throw Error(Errc::NotAVariable, "first argument must be a quoted variable");
  Properness p = classify(c);
  if (p.proper) return free_status(quoted_var.var(), p.decoded);

  struct Occurs {
    const Var* x;
    bool run(const Construction& k) const {
      switch (k.kind()) {
        case ConstructionKind::QuotedVar: return k.var() == *x;
        case ConstructionKind::QuotedConst: return false;
        case ConstructionKind::App:
        case ConstructionKind::Abs: return run(k.a()) || run(k.b());
        case ConstructionKind::Quo: return run(k.a());
      }
      return false;
    }
  };
  if (!Occurs{&quoted_var.var()}.run(c)) return FreeStatus::NotFree;
  return FreeStatus::Unknown;
}

namespace {

// Single reduction at this exact node, or nullopt.
std::optional<std::pair<Expr, RuleId>> node_step(const Expr& e, const Theory& th) {
  switch (e.kind()) {
    case ExprKind::Eval: {
      if (auto lv = literal_value(e.eval_arg())) {
        Properness p = classify(*lv);
        if (p.proper && p.ty == e.eval_target())
          return std::make_pair(p.decoded, RuleId::Disquote);
      }
      return std::nullopt;
    }
    case ExprKind::App: {
      if (e.fun().is_abs()) {
        Var x = e.fun().binder();
        const Expr& body = e.fun().body();
        const Expr& arg = e.arg();
        try {
          return std::make_pair(substitute(body, x, arg), RuleId::Beta);
        } catch (const Error& err) {
          if (err.code() != Errc::SubstitutionBlocked) throw;
        }
        // Substitution is blocked: push the redex through the structure.
        if (body.is_eval()) {
          // (\x.[[B]]_b) A = [[ (\x.B) A ]]_b, provided the folded argument
          // represents a b-typed expression with no free x.
          Expr candidate = Expr::app(Expr::abs(x, body.eval_arg()), arg);
          try {
            RewriteReport folded = normalize(candidate, th, kSideConditionFuel);
            if (auto lv = literal_value(folded.result)) {
              Properness p = classify(*lv);
              if (p.proper && p.ty == body.eval_target() &&
                  is_free_in(Construction::quoted_var(x), *lv) == FreeStatus::NotFree)
                return std::make_pair(Expr::eval(candidate, body.eval_target()),
                                      RuleId::EvalBeta);
            }
          } catch (const Error&) {
            // side conditions not dischargeable, the rule does not fire
          }
          return std::nullopt;
        }
        if (body.is_app()) {
          Expr left = Expr::app(Expr::abs(x, body.fun()), arg);
          Expr right = Expr::app(Expr::abs(x, body.arg()), arg);
          return std::make_pair(Expr::app(left, right), RuleId::Beta);
        }
        if (body.is_abs()) {
          Var y = body.binder();
          Expr inner = body.body();
          if (free_status(y, arg) != FreeStatus::NotFree) {
            Var y2 = fresh_var(y, inner, arg);
            try {
              inner = subst(inner, y, Expr::var(y2));
            } catch (const Error& err) {
              if (err.code() != Errc::SubstitutionBlocked) throw;
              return std::nullopt;
            }
            y = y2;
          }
          return std::make_pair(Expr::abs(y, Expr::app(Expr::abs(x, inner), arg)),
                                RuleId::Beta);
        }
        return std::nullopt;
      }
      if (auto folded = builtin_step(e, th)) {
        if (*folded != e) return std::make_pair(*folded, RuleId::BuiltinFold);
      }
      return std::nullopt;
    }
    case ExprKind::Const: {
      Const c = e.as_const();
      if (th.is_defined(c)) return std::make_pair(th.unfold(c), RuleId::DefUnfold);
      return std::nullopt;
    }
    case ExprKind::Quote: {
      if (!e.body().is_atom())
        return std::make_pair(as_expr(encode(e.body())), RuleId::QuoteNorm);
      return std::nullopt;
    }
    default: return std::nullopt;
  }
}

std::optional<StepResult> step_rec(const Expr& e, const Theory& th) {
  if (auto ns = node_step(e, th)) {
    StepResult out;
    out.result = ns->first;
    out.step.rule = ns->second;
    return out;
  }
  auto descend = [&](const Expr& child, int index,
                     auto rebuild) -> std::optional<StepResult> {
    auto sub = step_rec(child, th);
    if (!sub) return std::nullopt;
    StepResult out;
    out.result = rebuild(sub->result);
    out.step.rule = sub->step.rule;
    out.step.path.push_back(index);
    out.step.path.insert(out.step.path.end(), sub->step.path.begin(), sub->step.path.end());
    return out;
  };
  switch (e.kind()) {
    case ExprKind::App: {
      if (auto r = descend(e.fun(), 0, [&](const Expr& f) { return Expr::app(f, e.arg()); }))
        return r;
      return descend(e.arg(), 1, [&](const Expr& a) { return Expr::app(e.fun(), a); });
    }
    case ExprKind::Abs:
      return descend(e.body(), 0,
                     [&](const Expr& b) { return Expr::abs(e.binder(), b); });
    case ExprKind::Eval:
      return descend(e.eval_arg(), 0,
                     [&](const Expr& a) { return Expr::eval(a, e.eval_target()); });
    // No rewriting under quotations: their value is pure syntax.
    case ExprKind::Quote:
    default:
      return std::nullopt;
  }
}

}  // namespace

std::optional<StepResult> step(const Expr& e, const Theory& th) { return step_rec(e, th); }

RewriteReport normalize(const Expr& e, const Theory& th, std::uint64_t fuel) {
  RewriteReport report;
  Expr cur = e;
  for (;;) {
    auto s = step_rec(cur, th);
    if (!s) break;
    if (report.fuel_used >= fuel)
      throw Error(Errc::FuelExhausted,
                  "normalization exceeded " + std::to_string(fuel) + " steps");
    cur = s->result;
    report.steps.push_back(std::move(s->step));
    ++report.fuel_used;
  }
  report.result = std::move(cur);
  return report;
}

Expr apply_rule_at(const Expr& e, RuleId rule, const std::vector<int>& path, const Theory& th) {
  if (path.empty()) {
    auto ns = node_step(e, th);
    if (!ns || ns->second != rule)
      throw Error(Errc::MismatchAfterRewrite,
                  std::string("rule ") + rule_name(rule) + " does not fire at this subterm");
    return ns->first;
  }
  std::vector<int> rest(path.begin() + 1, path.end());
  switch (e.kind()) {
    case ExprKind::App:
      if (path.front() == 0) return Expr::app(apply_rule_at(e.fun(), rule, rest, th), e.arg());
      if (path.front() == 1) return Expr::app(e.fun(), apply_rule_at(e.arg(), rule, rest, th));
      break;
    case ExprKind::Abs:
      if (path.front() == 0)
        return Expr::abs(e.binder(), apply_rule_at(e.body(), rule, rest, th));
      break;
    case ExprKind::Eval:
      if (path.front() == 0)
        return Expr::eval(apply_rule_at(e.eval_arg(), rule, rest, th), e.eval_target());
      break;
    default: break;
  }
  throw Error(Errc::MismatchAfterRewrite, "invalid step path " + path_to_string(path));
}

}  // namespace cttqe
