#include <doctest.h>

#include "cttqe/builtins.hpp"
#include "cttqe/parser.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/rewrite.hpp"
#include "cttqe/valuate.hpp"
#include "support/gen.hpp"

using namespace cttqe;

namespace {
const Theory& th = standard_theory();
Parser parser(th);
const Type ti = Type::iota();
}  // namespace

TEST_CASE("substitution basics") {
  Var x{"x", ti};
  Expr a = parser.expr("1 + 2");
  CHECK(substitute(Expr::var(x), x, a) == a);

  // quotation bodies are never entered
  Expr q = parser.expr("'[ x:i + 3 ]");
  CHECK(substitute(q, x, a) == q);

  // no syntactic occurrence under the evaluation: unchanged
  Expr ev = parser.expr("[[ y:eps ]]_i");
  CHECK(substitute(ev, x, a) == ev);

  // occurrence under an evaluation: blocked
  try {
    substitute(parser.expr("[[ '[ x:i + 3 ] ]]_i"), x, a);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SubstitutionBlocked);
  }

  CHECK_THROWS_AS(substitute(Expr::var(x), x, parser.expr("p:o")), Error);
}

TEST_CASE("substitution renames on capture with numeric suffixes") {
  // (\y:i . x + y)[x := y]  must rename the binder
  Var x{"x", ti}, y{"y", ti};
  Expr body = Expr::abs(y, Expr::app_n(Expr::constant(consts::plus()),
                                       {Expr::var(x), Expr::var(y)}));
  Expr out = substitute(body, x, Expr::var(y));
  REQUIRE(out.is_abs());
  CHECK(out.binder().name == "y1");
  CHECK(out.body() == Expr::app_n(Expr::constant(consts::plus()),
                                  {Expr::var(y), Expr::var(Var{"y1", ti})}));
  // and the fresh name avoids everything in sight
  Expr body2 = Expr::abs(y, Expr::app_n(Expr::constant(consts::plus()),
                                        {Expr::var(x), Expr::var(Var{"y1", ti})}));
  Expr out2 = substitute(body2, x, Expr::var(y));
  CHECK(out2.binder().name == "y2");
}

TEST_CASE("step: the three quotation laws") {
  // disquotation on a quote argument
  Expr a = parser.expr("p:o /\\ q:o");
  auto s1 = step(Expr::eval(Expr::quote(a), Type::omicron()), th);
  REQUIRE(s1.has_value());
  CHECK(s1->step.rule == RuleId::Disquote);
  CHECK(s1->result == a);

  // quote normalization on a non-atom body
  Expr q = Expr::quote(parser.expr("\\x:i . x:i"));
  auto s2 = step(q, th);
  REQUIRE(s2.has_value());
  CHECK(s2->step.rule == RuleId::QuoteNorm);
  CHECK(s2->result == as_expr(encode(parser.expr("\\x:i . x:i"))));

  // quoted atoms are already normal
  CHECK_FALSE(step(parser.expr("'[ x:i ]"), th).has_value());

  // plain beta
  auto s3 = step(parser.expr("(\\x:o . x:o) T"), th);
  REQUIRE(s3.has_value());
  CHECK(s3->step.rule == RuleId::Beta);
  CHECK(s3->result == Expr::constant(consts::t_c()));

  // disquotation through a folded literal spine
  Expr spine = parser.expr("[[ app '[ f:(i->i) ] '[ x:i ] ]]_i");
  auto s4 = step(spine, th);
  REQUIRE(s4.has_value());
  CHECK(s4->step.rule == RuleId::Disquote);
  CHECK(s4->result == parser.expr("f:(i->i) x:i"));

  // mistyped disquotation is stuck
  CHECK_FALSE(step(parser.expr("[[ '[ x:i ] ]]_o"), th).has_value());
}

TEST_CASE("eval-beta fires exactly when the side conditions are provable") {
  // the folded argument represents an i-typed expression with no free x
  Expr good = parser.expr("(\\x:eps . [[ app '[ f:(i->i) ] x:eps ]]_i) '[ 0 ]");
  auto s = step(good, th);
  REQUIRE(s.has_value());
  CHECK(s->step.rule == RuleId::EvalBeta);
  CHECK(normalize(good, th).result == parser.expr("f:(i->i) 0"));

  // a quoted variable of a different type is not the bound one: still fires
  Expr harmless = parser.expr("(\\x:eps . [[ x:eps ]]_i) '[ x:i ]");
  auto sh = step(harmless, th);
  REQUIRE(sh.has_value());
  CHECK(sh->step.rule == RuleId::EvalBeta);
  CHECK(normalize(harmless, th).result == parser.expr("x:i"));

  // the bound variable free in the represented expression: must not fire
  Expr trap = parser.expr("(\\x:eps . [[ x:eps ]]_eps) '[ x:eps ]");
  auto s2 = step(trap, th);
  if (s2) CHECK(s2->step.rule != RuleId::EvalBeta);

  // improper after folding: must not fire
  Expr improper = parser.expr("(\\x:eps . [[ app x:eps x:eps ]]_i) '[ x:i ]");
  auto s3 = step(improper, th);
  if (s3) CHECK(s3->step.rule != RuleId::EvalBeta);
}

TEST_CASE("eval-beta conservativity: x is gone from the decoded right side") {
  Expr good = parser.expr("(\\x:eps . [[ app '[ f:(i->i) ] x:eps ]]_i) '[ 0 ]");
  auto s = step(good, th);
  REQUIRE(s.has_value());
  REQUIRE(s->step.rule == RuleId::EvalBeta);
  // the produced evaluation argument folds to a literal with no free x
  REQUIRE(s->result.is_eval());
  Expr folded = normalize(s->result.eval_arg(), th).result;
  auto lv = literal_value(folded);
  REQUIRE(lv.has_value());
  CHECK(is_free_in(Construction::quoted_var(Var{"x", Type::epsilon()}), *lv) ==
        FreeStatus::NotFree);
}

TEST_CASE("blocked redexes distribute structurally") {
  // substitution into the body is blocked, the redex pushes inward and the
  // evaluations are eliminated pointwise
  Expr e = parser.expr(
      "(\\x:eps . [[ x:eps ]]_o /\\ ~ [[ x:eps ]]_o) '[ p:o ]");
  Expr nf = normalize(e, th, 100000).result;
  Expr direct = normalize(parser.expr("p:o /\\ ~p:o"), th, 100000).result;
  CHECK(nf == direct);
}

TEST_CASE("normalize: worked examples") {
  // building an implication's construction
  Expr mi = parser.expr("make-implication '[ A:o ] '[ B:o ]");
  Expr nf = normalize(mi, th).result;
  auto lv = literal_value(nf);
  REQUIRE(lv.has_value());
  CHECK(*lv == encode(parser.expr("A:o => B:o")));

  // using it: the evaluation disquotes to the implication itself
  Expr used = Expr::eval(mi, Type::omicron());
  RewriteReport r = normalize(used, th);
  Expr after_disquote;
  Expr cur = used;
  for (const Step& st : r.steps) {
    cur = apply_rule_at(cur, st.rule, st.path, th);
    if (st.rule == RuleId::Disquote) {
      after_disquote = cur;
      break;
    }
  }
  REQUIRE_FALSE(after_disquote.is_null());
  CHECK(after_disquote == parser.expr("A:o => B:o"));

  // fuel exhaustion
  CHECK_THROWS_AS(normalize(parser.expr("make-implication '[ A:o ] '[ B:o ]"), th, 1), Error);
}

TEST_CASE("normalize replays from its step trace") {
  testgen::Rng rng(0x7E57);
  testgen::AtomPool pool = testgen::corpus_pool();
  for (int k = 0; k < 200; ++k) {
    Expr e = testgen::gen_any_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(4)), false);
    RewriteReport r = normalize(e, th, 4096);
    Expr cur = e;
    for (const Step& st : r.steps) cur = apply_rule_at(cur, st.rule, st.path, th);
    CHECK(cur == r.result);
    // the result is a normal form
    CHECK_FALSE(step(r.result, th).has_value());
  }
}

TEST_CASE("disquotation totality on generated eval-free normal forms") {
  testgen::Rng rng(0x7E58);
  testgen::AtomPool pool = testgen::corpus_pool();
  for (int k = 0; k < 800; ++k) {
    Expr e = testgen::gen_any_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(4)), true);
    RewriteReport r = normalize(Expr::eval(Expr::quote(e), type_of(e)), th, 4096);
    CHECK(r.result == e);
    // and quote normalization agrees with the encoding
    CHECK(normalize(Expr::quote(e), th, 4096).result == as_expr(encode(e)));
  }
}

TEST_CASE("substitution safety: quote bodies survive, binders stay capture-free") {
  testgen::Rng rng(0x7E59);
  testgen::AtomPool pool = testgen::corpus_pool();
  Var x{"x", ti};
  for (int k = 0; k < 300; ++k) {
    Expr body = testgen::gen_any_eval_free(rng, pool, 3, true);
    Expr repl = testgen::gen_eval_free(rng, pool, 2, ti, true);
    if (free_status(x, repl) != FreeStatus::NotFree) continue;
    Expr out;
    try {
      out = substitute(body, x, repl);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::SubstitutionBlocked);
      continue;
    }
    CHECK(free_status(x, out) == FreeStatus::NotFree);
  }
}

TEST_CASE("is-free-in on constructions") {
  Var x{"x", ti};
  Construction qx = Construction::quoted_var(x);
  CHECK(is_free_in(qx, encode(parser.expr("\\x:i . x:i"))) == FreeStatus::NotFree);
  CHECK(is_free_in(qx, encode(parser.expr("x:i + 1"))) == FreeStatus::Free);
  // improper construction mentioning x: undecided
  Construction improper = Construction::app(qx, qx);
  CHECK(is_free_in(qx, improper) == FreeStatus::Unknown);
  // improper but x-free: decidedly not free
  Construction other = Construction::app(Construction::quoted_var(Var{"y", ti}),
                                         Construction::quoted_var(Var{"y", ti}));
  CHECK(is_free_in(qx, other) == FreeStatus::NotFree);
  CHECK_THROWS_AS(is_free_in(improper, qx), Error);
}
