#include <doctest.h>

#include "cttqe/constants.hpp"
#include "cttqe/expr.hpp"
#include "support/gen.hpp"

using namespace cttqe;

namespace {
const Type ti = Type::iota();
const Type to = Type::omicron();
const Type te = Type::epsilon();
}  // namespace

TEST_CASE("type grammar: structural equality and right association") {
  CHECK(Type::fun(ti, Type::fun(ti, to)) == Type::fun_n({ti, ti}, to));
  CHECK(Type::fun(ti, to) != Type::fun(to, ti));
  CHECK(Type::fun(Type::fun(ti, ti), to).to_string() == "(i->i)->o");
  CHECK(Type::fun(ti, Type::fun(ti, to)).to_string() == "i->i->o");
  CHECK(te.mentions_epsilon());
  CHECK(Type::fun(ti, te).mentions_epsilon());
  CHECK_FALSE(Type::fun(ti, to).mentions_epsilon());
}

TEST_CASE("formation rules assign the expected types") {
  Expr x = Expr::var("x", ti);
  CHECK(type_of(x) == ti);

  Expr id = Expr::abs(Var{"x", ti}, x);
  CHECK(type_of(id) == Type::fun(ti, ti));

  Expr a = Expr::var("a", to);
  Expr ev = Expr::eval(Expr::quote(a), to);
  CHECK(type_of(ev) == to);

  CHECK(type_of(Expr::quote(x)) == te);
}

TEST_CASE("ill-formed nodes are rejected eagerly") {
  Expr x = Expr::var("x", ti);
  CHECK_THROWS_AS(Expr::app(x, x), Error);
  try {
    Expr::app(x, x);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TypeMismatch);
  }

  Expr ev = Expr::eval(Expr::var("u", te), ti);
  try {
    Expr::quote(ev);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::QuoteNotEvalFree);
  }

  try {
    Expr::eval(x, ti);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EvalArgNotEpsilon);
  }
}

TEST_CASE("typed symbols: same name at different types are distinct") {
  Expr xi = Expr::var("x", ti);
  Expr xo = Expr::var("x", to);
  CHECK(xi != xo);
  CHECK(free_status(Var{"x", ti}, xo) == FreeStatus::NotFree);
  CHECK(free_status(Var{"x", ti}, xi) == FreeStatus::Free);
}

TEST_CASE("eval-freeness") {
  Expr x = Expr::var("x", ti);
  CHECK(is_eval_free(x));
  CHECK(is_eval_free(Expr::quote(x)));
  Expr a = Expr::var("a", to);
  CHECK_FALSE(is_eval_free(Expr::eval(Expr::quote(a), to)));
  CHECK_FALSE(is_eval_free(Expr::abs(Var{"u", te}, Expr::eval(Expr::var("u", te), to))));
}

TEST_CASE("free status: quotations bind nothing and contain no free variables") {
  // x + 3 under a quotation
  Var x{"x", ti};
  Expr plus_x_3 = Expr::app_n(Expr::constant(consts::plus()),
                              {Expr::var(x), Expr::constant(consts::numeral(3))});
  Expr quoted = Expr::quote(plus_x_3);
  CHECK(free_status(x, quoted) == FreeStatus::NotFree);

  // the same occurrence under an evaluation is semantically live
  Expr ev = Expr::eval(quoted, ti);
  CHECK(free_status(x, ev) == FreeStatus::Unknown);

  // a free occurrence outside an evaluation dominates
  Expr both = Expr::app_n(Expr::constant(consts::plus()), {Expr::var(x), ev});
  CHECK(free_status(x, both) == FreeStatus::Free);

  // no occurrence at all under the evaluation is discharged
  Expr other = Expr::eval(Expr::var("y", te), ti);
  CHECK(free_status(x, other) == FreeStatus::NotFree);
}

TEST_CASE("binders hide their variable") {
  Var x{"x", ti};
  CHECK(free_status(x, Expr::abs(x, Expr::var(x))) == FreeStatus::NotFree);
  Var y{"y", ti};
  CHECK(free_status(x, Expr::abs(y, Expr::var(x))) == FreeStatus::Free);
}

TEST_CASE("property: generated expressions are stable and never Unknown when eval-free") {
  testgen::Rng rng(0xA11CE);
  testgen::AtomPool pool = testgen::corpus_pool();
  for (int k = 0; k < 500; ++k) {
    Expr e = testgen::gen_any_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(4)), false);
    CHECK(is_eval_free(e));
    // reconstruction reproduces the same tree and type
    Expr again = e;
    CHECK(again == e);
    CHECK(type_of(again) == type_of(e));
    for (const Var& v : pool.vars) {
      FreeStatus s = free_status(v, e);
      CHECK(s != FreeStatus::Unknown);
    }
    // quotations never contribute free occurrences
    Expr q = Expr::quote(e);
    for (const Var& v : pool.vars) CHECK(free_status(v, q) == FreeStatus::NotFree);
  }
}
