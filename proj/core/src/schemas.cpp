#include "cttqe/schemas.hpp"

#include "cttqe/builtins.hpp"
#include "cttqe/parser.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/rewrite.hpp"

namespace cttqe {

namespace {

void require(const Theory& th, const char* name) {
  if (!th.has(name))
    throw Error(Errc::MissingConstant, std::string("theory lacks constant '") + name + "'");
}

}  // namespace

Schemas schema_constants(const Theory& th) {
  for (const char* c : {"is-expr", "is-var", "is-poly", "is-peano", "poly-diff", "deriv", "S"})
    require(th, c);
  Parser p(th);
  Schemas s;
  s.lem = p.expr(
      "forall x:eps . is-expr^o x:eps => [[ x:eps ]]_o \\/ ~ [[ x:eps ]]_o");
  s.lem_quasi = p.expr(
      "forall x:eps . is-expr^o x:eps => [[ '[ ,(x:eps) \\/ ~ ,(x:eps) ] ]]_o");
  s.induction = p.expr(
      "forall f:eps . (is-expr^(i->o) f:eps /\\ is-peano f:eps) => "
      "(([[ f:eps ]]_(i->o) 0 /\\ (forall x:i . [[ f:eps ]]_(i->o) x:i => [[ f:eps ]]_(i->o) "
      "(S x:i))) => (forall x:i . [[ f:eps ]]_(i->o) x:i))");
  s.meaning_poly_diff = p.expr(
      "forall u:eps . forall v:eps . (is-var u:eps /\\ is-expr^i u:eps /\\ is-poly v:eps) => "
      "(deriv [[ abs u:eps v:eps ]]_(i->i) = [[ abs u:eps (poly-diff v:eps u:eps) ]]_(i->i))");
  return s;
}

namespace {

struct SchemaSubst {
  std::vector<std::pair<Var, Expr>> active;  // var -> literal expression
  const Theory* th;
  std::uint64_t fuel;

  bool any_occurs(const Expr& e) const {
    for (const auto& [v, lit] : active)
      if (occurs_anywhere(v, e)) return true;
    return false;
  }

  Expr run(const Expr& e) {
    switch (e.kind()) {
      case ExprKind::Var: {
        Var v = e.as_var();
        for (const auto& [x, lit] : active)
          if (x == v) return lit;
        return e;
      }
      case ExprKind::Const: return e;
      case ExprKind::App: return Expr::app(run(e.fun()), run(e.arg()));
      case ExprKind::Abs: {
        Var y = e.binder();
        std::vector<std::pair<Var, Expr>> saved = active;
        active.erase(std::remove_if(active.begin(), active.end(),
                                    [&](const auto& kv) { return kv.first == y; }),
                     active.end());
        Expr body = run(e.body());
        active = std::move(saved);
        return Expr::abs(y, body);
      }
      case ExprKind::Quote: return e;
      case ExprKind::Eval: {
        if (!any_occurs(e.eval_arg())) return e;
        Expr arg = run(e.eval_arg());
        // The substituted argument must denote a fixed construction whose
        // decoded expression is free of every instantiated variable.
        Expr folded;
        try {
          folded = normalize(arg, *th, fuel).result;
        } catch (const Error& err) {
          throw Error(Errc::InstantiationBlocked,
                      std::string("evaluation argument does not reduce: ") + err.what());
        }
        auto lv = literal_value(folded);
        if (!lv)
          throw Error(Errc::InstantiationBlocked,
                      "evaluation argument does not fold to a construction literal: " +
                          print_expr(folded));
        for (const auto& [x, lit] : active) {
          if (is_free_in(Construction::quoted_var(x), *lv) != FreeStatus::NotFree)
            throw Error(Errc::InstantiationBlocked,
                        "instantiated variable " + x.name +
                            " may be free in the represented expression");
        }
        return Expr::eval(arg, e.eval_target());
      }
    }
    return e;
  }
};

}  // namespace

namespace {

// Proper witnesses read back as quotations, the form derivations write.
Expr witness_expr(const Construction& w) {
  Properness p = classify(w);
  if (p.proper) return Expr::quote(p.decoded);
  return as_expr(w);
}

}  // namespace

Expr instantiate_schema(const Expr& formula, const std::vector<Construction>& witnesses,
                        const Theory& th, std::uint64_t fuel) {
  Expr body = formula;
  std::vector<std::pair<Var, Expr>> map;
  for (const Construction& w : witnesses) {
    auto all = match_forall(body);
    if (!all)
      throw Error(Errc::InstantiationBlocked,
                  "formula has fewer universal quantifiers than witnesses");
    map.emplace_back(all->first, witness_expr(w));
    body = all->second;
  }
  SchemaSubst s{std::move(map), &th, fuel};
  return s.run(body);
}

namespace {

void conjuncts_of(const Expr& e, std::vector<Expr>& out) {
  if (auto p = match_binary(e, "and")) {
    conjuncts_of(p->first, out);
    conjuncts_of(p->second, out);
    return;
  }
  out.push_back(e);
}

}  // namespace

Expr instantiate_discharging(const Expr& formula, const std::vector<Construction>& witnesses,
                             const Theory& th, std::uint64_t fuel) {
  Expr inst = instantiate_schema(formula, witnesses, th, fuel);
  auto imp = match_binary(inst, "imp");
  if (!imp) return inst;
  std::vector<Expr> hyps;
  conjuncts_of(imp->first, hyps);
  Expr truth_nf = normalize(Expr::constant(consts::t_c()), th, fuel).result;
  for (const Expr& h : hyps) {
    Expr nf = normalize(h, th, fuel).result;
    if (nf != truth_nf)
      throw Error(Errc::HypothesisFailed, "hypothesis does not hold: " + print_expr(h));
  }
  return imp->second;
}

}  // namespace cttqe
