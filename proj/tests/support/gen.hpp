#ifndef CTTQE_TESTS_GEN_HPP
#define CTTQE_TESTS_GEN_HPP

// Deterministic random generators shared by the unit and acceptance suites.

#include <random>
#include <string>
#include <vector>

#include "cttqe/constants.hpp"
#include "cttqe/construction.hpp"
#include "cttqe/expr.hpp"
#include "cttqe/model.hpp"
#include "cttqe/valuate.hpp"

namespace testgen {

using namespace cttqe;

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
  }
  bool chance(double p) { return std::uniform_real_distribution<double>(0, 1)(eng) < p; }
  std::uint64_t up_to(std::uint64_t n) {
    return std::uniform_int_distribution<std::uint64_t>(0, n)(eng);
  }
};

struct AtomPool {
  std::vector<Var> vars;
  std::vector<Const> consts;

  std::vector<const Var*> vars_of(const Type& ty) const {
    std::vector<const Var*> out;
    for (const Var& v : vars)
      if (v.ty == ty) out.push_back(&v);
    return out;
  }
  std::vector<const Const*> consts_of(const Type& ty) const {
    std::vector<const Const*> out;
    for (const Const& c : consts)
      if (c.ty == ty) out.push_back(&c);
    return out;
  }
};

// Eight variables over the three base types and a couple of function types,
// plus primitive constants that no rewrite rule touches. Terms built from
// these are normal forms.
inline AtomPool corpus_pool() {
  AtomPool p;
  Type i = Type::iota(), o = Type::omicron(), e = Type::epsilon();
  p.vars = {
      Var{"x", i}, Var{"y", i}, Var{"p", o}, Var{"q", o},
      Var{"u", e}, Var{"w", e}, Var{"f", Type::fun(i, i)}, Var{"g", Type::fun(i, o)},
      Var{"h", Type::fun(o, o)}, Var{"r", Type::fun(e, o)},
  };
  p.consts = {consts::numeral(0), consts::numeral(1), consts::numeral(2),
              consts::succ(), consts::plus(), consts::times(), consts::deriv()};
  return p;
}

inline std::string type_var_name(const Type&, Rng& rng) {
  // stable-ish fabricated names, never colliding with theory constants
  static const char* names[] = {"v", "m", "n", "k"};
  return std::string(names[rng.pick(4)]) + std::to_string(rng.pick(3));
}

inline Type gen_type(Rng& rng, int depth) {
  if (depth <= 0 || rng.chance(0.55)) {
    switch (rng.pick(3)) {
      case 0: return Type::iota();
      case 1: return Type::omicron();
      default: return Type::epsilon();
    }
  }
  return Type::fun(gen_type(rng, depth - 1), gen_type(rng, depth - 1));
}

inline Construction gen_construction(Rng& rng, const AtomPool& pool, int depth) {
  if (depth <= 1 || rng.chance(0.3)) {
    if (rng.chance(0.6) && !pool.vars.empty())
      return Construction::quoted_var(pool.vars[rng.pick(pool.vars.size())]);
    return Construction::quoted_const(pool.consts[rng.pick(pool.consts.size())]);
  }
  switch (rng.pick(3)) {
    case 0:
      return Construction::app(gen_construction(rng, pool, depth - 1),
                               gen_construction(rng, pool, depth - 1));
    case 1:
      return Construction::abs(gen_construction(rng, pool, depth - 1),
                               gen_construction(rng, pool, depth - 1));
    default: return Construction::quo(gen_construction(rng, pool, depth - 1));
  }
}

// Eval-free expression of the requested type. With normal=true the result
// is also a normal form: neutral application spines, no defined or
// foldable constants, quotations of atoms or literal spines only.
inline Expr gen_eval_free(Rng& rng, const AtomPool& pool, int depth, const Type& want,
                          bool normal = true);

inline Expr gen_atom(Rng& rng, const AtomPool& pool, const Type& want) {
  auto vs = pool.vars_of(want);
  auto cs = pool.consts_of(want);
  if (!vs.empty() && (cs.empty() || rng.chance(0.7)))
    return Expr::var(*vs[rng.pick(vs.size())]);
  if (!cs.empty()) return Expr::constant(*cs[rng.pick(cs.size())]);
  return Expr::var(Var{type_var_name(want, rng), want});
}

inline Expr gen_neutral_app(Rng& rng, const AtomPool& pool, int depth, const Type& want,
                            bool normal) {
  // head atom of type a1 -> ... -> ak -> want applied to generated args
  std::size_t k = 1 + rng.pick(2);
  std::vector<Type> arg_types;
  Type head_ty = want;
  for (std::size_t j = 0; j < k; ++j) {
    Type a = gen_type(rng, 1);
    arg_types.push_back(a);
    head_ty = Type::fun(a, head_ty);
  }
  Expr head = gen_atom(rng, pool, head_ty);
  if (normal && head.is_const()) {
    // primitive pool constants never have these shapes, but keep the intent
    head = Expr::var(Var{type_var_name(head_ty, rng), head_ty});
  }
  Expr out = head;
  for (std::size_t j = k; j > 0; --j)
    out = Expr::app(out, gen_eval_free(rng, pool, depth - 1, arg_types[j - 1], normal));
  return out;
}

inline Expr gen_eval_free(Rng& rng, const AtomPool& pool, int depth, const Type& want,
                          bool normal) {
  if (depth <= 1) return gen_atom(rng, pool, want);
  switch (want.kind()) {
    case TypeKind::Fun: {
      if (rng.chance(0.65)) {
        Var binder{type_var_name(want.domain(), rng), want.domain()};
        if (rng.chance(0.3)) {
          auto vs = pool.vars_of(want.domain());
          if (!vs.empty()) binder = *vs[rng.pick(vs.size())];
        }
        return Expr::abs(binder, gen_eval_free(rng, pool, depth - 1, want.codomain(), normal));
      }
      if (rng.chance(0.5)) return gen_neutral_app(rng, pool, depth, want, normal);
      return gen_atom(rng, pool, want);
    }
    case TypeKind::Epsilon: {
      double roll = std::uniform_real_distribution<double>(0, 1)(rng.eng);
      if (roll < 0.35) {
        // quotation; in normal mode only atoms stay quoted
        if (normal) return Expr::quote(gen_atom(rng, pool, gen_type(rng, 1)));
        return Expr::quote(gen_eval_free(rng, pool, depth - 1, gen_type(rng, 1), false));
      }
      if (roll < 0.6) return as_expr(gen_construction(rng, pool, depth - 1));
      if (roll < 0.8) return gen_neutral_app(rng, pool, depth, want, normal);
      return gen_atom(rng, pool, want);
    }
    default: {
      if (rng.chance(0.5)) return gen_neutral_app(rng, pool, depth, want, normal);
      if (!normal && rng.chance(0.35)) {
        // deliberate beta redex
        Type at = gen_type(rng, 1);
        Var binder{type_var_name(at, rng), at};
        Expr body = gen_eval_free(rng, pool, depth - 1, want, false);
        return Expr::app(Expr::abs(binder, body), gen_eval_free(rng, pool, depth - 1, at, false));
      }
      return gen_atom(rng, pool, want);
    }
  }
}

inline Expr gen_any_eval_free(Rng& rng, const AtomPool& pool, int depth, bool normal = true) {
  return gen_eval_free(rng, pool, depth, gen_type(rng, 2), normal);
}

// Polynomial in x (and occasionally y) with the + / * / literal-power
// grammar, degree kept small enough for the finite-difference oracle.
inline Expr gen_poly(Rng& rng, int depth, const Var& x) {
  if (depth <= 1) {
    switch (rng.pick(3)) {
      case 0: return Expr::constant(consts::numeral(rng.up_to(5)));
      case 1: return Expr::var(x);
      default: return Expr::var(Var{"y", Type::iota()});
    }
  }
  switch (rng.pick(4)) {
    case 0:
      return Expr::app_n(Expr::constant(consts::plus()),
                         {gen_poly(rng, depth - 1, x), gen_poly(rng, depth - 1, x)});
    case 1:
      return Expr::app_n(Expr::constant(consts::times()),
                         {gen_poly(rng, depth - 1, x), gen_poly(rng, depth - 1, x)});
    case 2: {
      // literal power of a smaller polynomial, right-nested products
      Expr base = gen_poly(rng, depth - 1, x);
      std::uint64_t n = 2 + rng.pick(2);
      Expr out = base;
      for (std::uint64_t k = 1; k < n; ++k)
        out = Expr::app_n(Expr::constant(consts::times()), {base, out});
      return out;
    }
    default: return gen_poly(rng, 1, x);
  }
}

inline Value gen_value(Rng& rng, const Type& ty, const Model& m, const AtomPool& pool) {
  switch (ty.kind()) {
    case TypeKind::Iota: return Value::individual(rng.pick(m.iota_size));
    case TypeKind::Omicron: return Value::truth(rng.chance(0.5));
    case TypeKind::Epsilon: return Value::constr(gen_construction(rng, pool, 1 + rng.pick(3)));
    case TypeKind::Fun: {
      // constant functions and a few switch-on-argument tables
      Value dflt = gen_value(rng, ty.codomain(), m, pool);
      if (rng.chance(0.6) || ty.domain().mentions_epsilon()) {
        return Value::func(ty.domain(), ty.codomain(), [dflt](const Value&) { return dflt; });
      }
      Value other = gen_value(rng, ty.codomain(), m, pool);
      Type dom = ty.domain();
      const Model* mp = &m;
      return Value::func(dom, ty.codomain(), [dflt, other, dom, mp](const Value& a) {
        EvalCtx ctx = EvalCtx::fresh(*mp);
        Value first = [&] {
          if (dom.is_iota()) return Value::individual(0);
          if (dom.is_omicron()) return Value::truth(false);
          return mp->default_value(dom);
        }();
        return values_equal(a, first, dom, ctx) ? dflt : other;
      });
    }
  }
  return Value::truth(false);
}

inline Assignment gen_assignment(Rng& rng, const Model& m, const std::vector<Var>& vars,
                                 const AtomPool& pool) {
  Assignment phi(m);
  for (const Var& v : vars) phi = phi.set(v, gen_value(rng, v.ty, m, pool));
  return phi;
}

// Equality of two values observed through base-type contexts: direct at
// base types, pointwise over small enumerable domains, sampled application
// points where eps makes the domain infinite.
inline bool observably_equal(const Value& a, const Value& b, const Type& ty, const Model& m,
                             Rng& rng, const AtomPool& pool, int samples = 8) {
  if (!ty.is_fun()) {
    EvalCtx ctx = EvalCtx::fresh(m);
    return values_equal(a, b, ty, ctx);
  }
  EvalCtx ctx = EvalCtx::fresh(m);
  std::optional<std::vector<Value>> dom;
  try {
    dom = enumerate_domain(ty.domain(), ctx, 64);
  } catch (const Error&) {
    dom = std::nullopt;
  }
  if (dom) {
    for (const Value& d : *dom)
      if (!observably_equal(a.apply(d), b.apply(d), ty.codomain(), m, rng, pool, samples))
        return false;
    return true;
  }
  for (int k = 0; k < samples; ++k) {
    Value d = gen_value(rng, ty.domain(), m, pool);
    if (!observably_equal(a.apply(d), b.apply(d), ty.codomain(), m, rng, pool, samples))
      return false;
  }
  return true;
}

}  // namespace testgen

#endif
