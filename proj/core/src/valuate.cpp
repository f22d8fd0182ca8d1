#include "cttqe/valuate.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "cttqe/builtins.hpp"

namespace cttqe {

namespace {

Value truth(bool b) { return Value::truth(b); }

void spend_fuel(EvalCtx& ctx) {
  if (ctx.state->fuel == 0)
    throw Error(Errc::FuelExhausted, "valuation step bound exceeded");
  --ctx.state->fuel;
}

Value eq_value(const Type& alpha, EvalCtx ctx) {
  Type rest = Type::fun(alpha, Type::omicron());
  return Value::func(alpha, rest, [alpha, ctx](const Value& a) mutable {
    return Value::func(alpha, Type::omicron(), [alpha, ctx, a](const Value& b) mutable {
      return truth(values_equal(a, b, alpha, ctx));
    });
  });
}

Value unary_eps(Type cod, std::function<Value(const Construction&)> f) {
  return Value::func(Type::epsilon(), std::move(cod),
                     [f = std::move(f)](const Value& a) { return f(a.construction()); });
}

Value binary_eps(Type cod, std::function<Value(const Construction&, const Construction&)> f) {
  Type eps = Type::epsilon();
  return Value::func(eps, Type::fun(eps, cod),
                     [cod, f = std::move(f)](const Value& a) {
                       Construction ca = a.construction();
                       return Value::func(Type::epsilon(), cod, [f, ca](const Value& b) {
                         return f(ca, b.construction());
                       });
                     });
}

// Interpretations fixed by the model conditions. Returns nullopt for
// non-logical constants.
std::optional<Value> logical_value(const Const& c, EvalCtx& ctx) {
  const Type eps = Type::epsilon();
  if (c.name == "eq" && !c.family_index) return eq_value(c.ty.domain(), ctx);
  if (c.name == "is-var")
    return unary_eps(Type::omicron(), [](const Construction& a) {
      return truth(a.kind() == ConstructionKind::QuotedVar);
    });
  if (c.name == "is-con")
    return unary_eps(Type::omicron(), [](const Construction& a) {
      return truth(a.kind() == ConstructionKind::QuotedConst);
    });
  if (c.name == "app")
    return binary_eps(eps, [](const Construction& a, const Construction& b) {
      return Value::constr(Construction::app(a, b));
    });
  if (c.name == "abs")
    return binary_eps(eps, [](const Construction& a, const Construction& b) {
      return Value::constr(Construction::abs(a, b));
    });
  if (c.name == "quo")
    return unary_eps(eps, [](const Construction& a) {
      return Value::constr(Construction::quo(a));
    });
  if (c.name == "is-expr" && c.family_index) {
    Type idx = *c.family_index;
    return unary_eps(Type::omicron(), [idx](const Construction& a) {
      Properness p = classify(a);
      return truth(p.proper && p.ty == idx);
    });
  }
  if (c.name == "is-free-in")
    return binary_eps(Type::omicron(), [](const Construction& a, const Construction& b) {
      if (a.kind() != ConstructionKind::QuotedVar) return truth(false);
      Properness p = classify(b);
      if (!p.proper) return truth(false);
      return truth(free_status(a.var(), p.decoded) == FreeStatus::Free);
    });
  return std::nullopt;
}

// Arithmetic hints over the finite individual domain.
std::optional<Value> arithmetic_value(const Const& c, const Model& m) {
  const std::uint64_t n = m.iota_size;
  if (auto k = consts::numeral_value(c)) return Value::individual(*k % n);
  if (c.name == "S" && c.ty == Type::fun(Type::iota(), Type::iota()))
    return Value::func(Type::iota(), Type::iota(), [n](const Value& a) {
      return Value::individual((a.index() + 1) % n);
    });
  if (c.name == "plus" || c.name == "times") {
    bool add = c.name == "plus";
    Type i = Type::iota();
    return Value::func(i, Type::fun(i, i), [n, add, i](const Value& a) {
      std::uint64_t x = a.index();
      return Value::func(i, i, [n, add, x](const Value& b) {
        std::uint64_t y = b.index();
        return Value::individual(add ? (x + y) % n : (x * y) % n);
      });
    });
  }
  return std::nullopt;
}

std::optional<Value> computational_value(const Const& c, const Model& m) {
  if (c.name == "is-poly")
    return unary_eps(Type::omicron(), [](const Construction& a) { return truth(is_poly(a)); });
  if (c.name == "is-peano")
    return unary_eps(Type::omicron(), [](const Construction& a) { return truth(is_peano(a)); });
  if (c.name == "poly-diff") {
    const Model* mp = &m;
    return binary_eps(Type::epsilon(), [mp](const Construction& a, const Construction& b) {
      if (is_poly(a) && b.kind() == ConstructionKind::QuotedVar && b.var().ty.is_iota())
        return Value::constr(poly_diff(a, b));
      return mp->default_value(Type::epsilon());
    });
  }
  return std::nullopt;
}

Value const_value(const Const& c, EvalCtx& ctx) {
  if (auto v = logical_value(c, ctx)) return *v;

  auto cached = ctx.state->const_cache.find(c);
  if (cached != ctx.state->const_cache.end()) return cached->second;

  const Model& m = *ctx.model;
  auto user = m.interpretation.find(c);
  if (user != m.interpretation.end()) return user->second;

  Value out;
  if (m.theory->is_defined(c)) {
    Assignment empty(m);
    out = valuate_ctx(m.theory->unfold(c), empty, ctx);
  } else if (auto v = computational_value(c, m)) {
    out = *v;
  } else if (auto v = arithmetic_value(c, m)) {
    out = *v;
  } else {
    out = m.default_value(c.ty);
  }
  ctx.state->const_cache.emplace(c, out);
  return out;
}

}  // namespace

Value valuate_ctx(const Expr& e, const Assignment& phi, EvalCtx& ctx) {
  spend_fuel(ctx);
  switch (e.kind()) {
    case ExprKind::Var: return phi.get(e.as_var());
    case ExprKind::Const: return const_value(e.as_const(), ctx);
    case ExprKind::App: {
      Value f = valuate_ctx(e.fun(), phi, ctx);
      Value a = valuate_ctx(e.arg(), phi, ctx);
      return f.apply(a);
    }
    case ExprKind::Abs: {
      Var x = e.binder();
      Expr body = e.body();
      EvalCtx inner = ctx;  // shares state
      return Value::func(x.ty, body.type(), [body, x, phi, inner](const Value& d) mutable {
        Assignment ext = phi.set(x, d);
        return valuate_ctx(body, ext, inner);
      });
    }
    case ExprKind::Quote: return Value::constr(encode(e.body()));
    case ExprKind::Eval: {
      Value v = valuate_ctx(e.eval_arg(), phi, ctx);
      Properness p = classify(v.construction());
      if (p.proper && p.ty == e.eval_target()) return valuate_ctx(p.decoded, phi, ctx);
      return ctx.model->default_value(e.eval_target());
    }
  }
  throw Error(Errc::FuelExhausted, "unreachable");
}

Value valuate(const Expr& e, const Model& m, const Assignment& phi) {
  EvalCtx ctx = EvalCtx::fresh(m);
  return valuate_ctx(e, phi, ctx);
}

bool values_equal(const Value& a, const Value& b, const Type& ty, EvalCtx& ctx) {
  switch (ty.kind()) {
    case TypeKind::Iota: return a.index() == b.index();
    case TypeKind::Omicron: return a.truth_value() == b.truth_value();
    case TypeKind::Epsilon: return a.construction() == b.construction();
    case TypeKind::Fun: {
      if (a.same_closure(b)) return true;
      auto dom = enumerate_domain(ty.domain(), ctx);
      if (!dom)
        throw Error(Errc::UnsupportedEquality,
                    "cannot compare functions over domain " + ty.domain().to_string());
      Type cod = ty.codomain();
      for (const Value& d : *dom) {
        spend_fuel(ctx);
        if (!values_equal(a.apply(d), b.apply(d), cod, ctx)) return false;
      }
      return true;
    }
  }
  return false;
}

std::vector<Construction> enumerate_constructions(const std::vector<Expr>& atoms,
                                                  std::size_t depth) {
  std::vector<Construction> all;
  std::unordered_set<std::size_t> seen;
  auto add = [&](Construction c) {
    // hash collisions only cost a linear confirm
    if (!seen.insert(c.hash()).second) {
      for (const Construction& u : all)
        if (u == c) return;
    }
    all.push_back(std::move(c));
  };
  for (const Expr& a : atoms) {
    if (a.is_var()) add(Construction::quoted_var(a.as_var()));
    else if (a.is_const()) add(Construction::quoted_const(a.as_const()));
  }
  for (std::size_t d = 1; d < depth; ++d) {
    const std::size_t upto = all.size();
    for (std::size_t i = 0; i < upto; ++i) {
      add(Construction::quo(all[i]));
      for (std::size_t j = 0; j < upto; ++j) {
        add(Construction::app(all[i], all[j]));
        add(Construction::abs(all[i], all[j]));
      }
    }
  }
  return all;
}

std::optional<std::vector<Value>> enumerate_domain(const Type& ty, EvalCtx& ctx,
                                                   std::size_t limit) {
  switch (ty.kind()) {
    case TypeKind::Iota: {
      std::vector<Value> out;
      for (std::uint64_t k = 0; k < ctx.model->iota_size; ++k)
        out.push_back(Value::individual(k));
      return out;
    }
    case TypeKind::Omicron: {
      std::vector<Value> out{Value::truth(false), Value::truth(true)};
      return out;
    }
    case TypeKind::Epsilon: {
      if (!ctx.model->epsilon_depth) return std::nullopt;
      ctx.state->used_bounded_epsilon = true;
      std::vector<Expr> atoms = ctx.model->syntax_atoms;
      if (atoms.empty()) {
        atoms.push_back(Expr::var(Var{"x", Type::iota()}));
        atoms.push_back(Expr::constant(consts::undef()));
      }
      std::vector<Construction> cs = enumerate_constructions(atoms, *ctx.model->epsilon_depth);
      if (cs.size() > limit)
        throw Error(Errc::UnsupportedEquality,
                    "bounded eps enumeration exceeds limit (" + std::to_string(cs.size()) + ")");
      std::vector<Value> out;
      out.reserve(cs.size());
      for (Construction& c : cs) out.push_back(Value::constr(std::move(c)));
      return out;
    }
    case TypeKind::Fun: {
      auto dom = enumerate_domain(ty.domain(), ctx, limit);
      auto cod = enumerate_domain(ty.codomain(), ctx, limit);
      if (!dom || !cod) return std::nullopt;
      const std::size_t nd = dom->size(), nc = cod->size();
      double total = 1;
      for (std::size_t k = 0; k < nd; ++k) {
        total *= static_cast<double>(nc);
        if (total > static_cast<double>(limit)) return std::nullopt;
      }
      auto keys = std::make_shared<const std::vector<Value>>(std::move(*dom));
      auto vals = std::make_shared<const std::vector<Value>>(std::move(*cod));
      std::vector<Value> out;
      Type dty = ty.domain(), cty = ty.codomain();
      std::size_t count = static_cast<std::size_t>(total);
      EvalCtx cctx = ctx;
      for (std::size_t t = 0; t < count; ++t) {
        auto table = std::make_shared<std::vector<std::size_t>>();
        std::size_t rem = t;
        for (std::size_t k = 0; k < nd; ++k) {
          table->push_back(rem % nc);
          rem /= nc;
        }
        out.push_back(Value::func(dty, cty, [keys, vals, table, dty, cctx](const Value& arg) mutable {
          for (std::size_t k = 0; k < keys->size(); ++k)
            if (values_equal(arg, (*keys)[k], dty, cctx)) return (*vals)[(*table)[k]];
          return (*vals)[0];
        }));
      }
      return out;
    }
  }
  return std::nullopt;
}

void collect_syntax_atoms(const Expr& e, std::vector<Expr>& out) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const: {
      for (const Expr& a : out)
        if (a == e) return;
      out.push_back(e);
      return;
    }
    case ExprKind::App:
      collect_syntax_atoms(e.fun(), out);
      collect_syntax_atoms(e.arg(), out);
      return;
    case ExprKind::Abs:
      collect_syntax_atoms(Expr::var(e.binder()), out);
      collect_syntax_atoms(e.body(), out);
      return;
    case ExprKind::Quote: collect_syntax_atoms(e.body(), out); return;
    case ExprKind::Eval: collect_syntax_atoms(e.eval_arg(), out); return;
  }
}

namespace {

void collect_quote_encodings(const Expr& e, std::vector<Construction>& out) {
  switch (e.kind()) {
    case ExprKind::Var:
    case ExprKind::Const: return;
    case ExprKind::App:
      collect_quote_encodings(e.fun(), out);
      collect_quote_encodings(e.arg(), out);
      return;
    case ExprKind::Abs: collect_quote_encodings(e.body(), out); return;
    case ExprKind::Quote: out.push_back(encode(e.body())); return;
    case ExprKind::Eval: collect_quote_encodings(e.eval_arg(), out); return;
  }
}

}  // namespace

Verdict check_valid(const Expr& formula, const Model& m, const Sampler& s) {
  if (!formula.type().is_omicron())
    throw Error(Errc::IllTyped, "validity is defined for formulas (type o)");

  Model m2 = m;
  m2.epsilon_depth = s.epsilon_depth;
  collect_syntax_atoms(formula, m2.syntax_atoms);

  Verdict verdict;
  std::vector<Var> vars = possibly_free_vars(formula);
  std::mt19937_64 rng(s.seed);

  // Candidate values per variable.
  std::vector<std::vector<Value>> candidates;
  bool exhaustive = true;
  EvalCtx probe = EvalCtx::fresh(m2);
  for (const Var& x : vars) {
    std::vector<Value> cand;
    bool var_exhaustive = false;
    try {
      if (auto dom = enumerate_domain(x.ty, probe, 2048)) {
        cand = std::move(*dom);
        var_exhaustive = !x.ty.mentions_epsilon();
      }
    } catch (const Error&) {
      // fall through to sampling
    }
    if (x.ty.is_epsilon()) {
      // targeted proper constructions from the formula's quotations
      std::vector<Construction> targeted;
      collect_quote_encodings(formula, targeted);
      for (Construction& c : targeted) {
        bool seen = false;
        for (const Value& v : cand)
          if (v.construction() == c) { seen = true; break; }
        if (!seen) cand.push_back(Value::constr(std::move(c)));
      }
      var_exhaustive = false;
    }
    if (cand.empty()) {
      // sampled fallback: defaults plus constant functions to sampled values
      cand.push_back(m2.default_value(x.ty));
      if (x.ty.is_fun()) {
        EvalCtx cctx = EvalCtx::fresh(m2);
        if (auto codc = enumerate_domain(x.ty.codomain(), cctx, 64)) {
          for (std::size_t k = 0; k < codc->size() && k < s.samples_per_fun_var; ++k) {
            Value v = (*codc)[k];
            cand.push_back(Value::func(x.ty.domain(), x.ty.codomain(),
                                       [v](const Value&) { return v; }));
          }
        }
      }
      var_exhaustive = false;
    }
    exhaustive = exhaustive && var_exhaustive;
    candidates.push_back(std::move(cand));
  }
  verdict.approximate = !exhaustive && !vars.empty();

  // Assignment tuples: exhaustive product when small, sampled otherwise.
  double total = 1;
  for (const auto& c : candidates) total *= static_cast<double>(c.size());
  std::size_t checked = 0;
  bool sampled = total > static_cast<double>(s.max_assignments);
  if (sampled) verdict.approximate = true;

  auto run_one = [&](const std::vector<std::size_t>& pick) -> bool {
    Assignment phi(m2);
    for (std::size_t k = 0; k < vars.size(); ++k)
      phi = phi.set(vars[k], candidates[k][pick[k]]);
    EvalCtx ctx = EvalCtx::fresh(m2);
    Value v = valuate_ctx(formula, phi, ctx);
    if (ctx.state->used_bounded_epsilon) verdict.approximate = true;
    ++checked;
    if (!v.truth_value()) {
      for (std::size_t k = 0; k < vars.size(); ++k)
        verdict.counterexample.emplace_back(vars[k], candidates[k][pick[k]]);
      return false;
    }
    return true;
  };

  if (vars.empty()) {
    EvalCtx ctx = EvalCtx::fresh(m2);
    Value v = valuate_ctx(formula, Assignment(m2), ctx);
    if (ctx.state->used_bounded_epsilon) verdict.approximate = true;
    verdict.samples = 1;
    verdict.holds = v.truth_value();
    return verdict;
  }

  if (!sampled) {
    std::vector<std::size_t> pick(vars.size(), 0);
    for (;;) {
      if (!run_one(pick)) {
        verdict.holds = false;
        verdict.samples = checked;
        return verdict;
      }
      std::size_t k = 0;
      for (; k < pick.size(); ++k) {
        if (++pick[k] < candidates[k].size()) break;
        pick[k] = 0;
      }
      if (k == pick.size()) break;
    }
  } else {
    for (std::size_t t = 0; t < s.max_assignments; ++t) {
      std::vector<std::size_t> pick;
      for (const auto& c : candidates)
        pick.push_back(std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng));
      if (!run_one(pick)) {
        verdict.holds = false;
        verdict.samples = checked;
        return verdict;
      }
    }
  }
  verdict.holds = true;
  verdict.samples = checked;
  return verdict;
}

}  // namespace cttqe
