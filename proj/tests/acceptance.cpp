// Acceptance suite: one pass/fail line per criterion, exit nonzero if any
// criterion fails. Run it directly or through ctest (-R acceptance).

#include <array>
#include <chrono>
#include <sys/wait.h>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "cttqe/builtins.hpp"
#include "cttqe/parser.hpp"
#include "cttqe/quasiquote.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/rewrite.hpp"
#include "cttqe/schemas.hpp"
#include "cttqe/trace.hpp"
#include "cttqe/valuate.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"

using namespace cttqe;
using Clock = std::chrono::steady_clock;

namespace {

const Theory& th = standard_theory();

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

struct Corpus {
  std::vector<Expr> normal;  // normal-form eval-free expressions
  std::vector<Expr> extra;   // eval-free with redexes, nested quotes, defined constants
};

const Corpus& corpus() {
  static const Corpus c = [] {
    Corpus out;
    testgen::Rng rng(0xACCE97);
    testgen::AtomPool pool = testgen::corpus_pool();
    std::unordered_map<std::size_t, std::vector<Expr>> seen;
    auto fill = [&](std::vector<Expr>& into, std::size_t want, bool normal) {
      std::size_t attempts = 0;
      while (into.size() < want && attempts < want * 20) {
        ++attempts;
        Expr e = testgen::gen_any_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(6)), normal);
        auto& bucket = seen[e.hash()];
        bool dup = false;
        for (const Expr& u : bucket) dup = dup || u == e;
        if (dup) continue;
        bucket.push_back(e);
        into.push_back(std::move(e));
      }
    };
    fill(out.normal, 10000, true);
    fill(out.extra, 2000, false);
    return out;
  }();
  return c;
}

// --------------------------------------------------------------------------

bool criterion1(std::string& detail) {
  Clock::time_point t0 = Clock::now();
  const Corpus& c = corpus();
  std::unordered_map<Construction, const Expr*, ConstructionHash> images;
  std::size_t distinct_inputs = 0, distinct_images = 0;
  auto run = [&](const std::vector<Expr>& batch) {
    for (const Expr& e : batch) {
      Construction enc = encode(e);
      if (decode(enc) != e) return false;
      auto [it, fresh] = images.emplace(enc, &e);
      if (fresh) {
        ++distinct_images;
        ++distinct_inputs;
      } else if (*it->second != e) {
        return false;  // injectivity broken
      }
    }
    return true;
  };
  bool ok = run(c.normal) && run(c.extra);
  double ms = ms_since(t0);
  std::ostringstream os;
  os << (c.normal.size() + c.extra.size()) << " expressions, " << distinct_images
     << " distinct images, " << ms << " ms";
  detail = os.str();
  return ok && distinct_inputs == distinct_images && ms < 10000.0;
}

bool criterion2(std::string& detail) {
  const Corpus& c = corpus();
  // syntactic half: disquotation is the exact identity on normal forms
  for (const Expr& e : c.normal) {
    RewriteReport r = normalize(Expr::eval(Expr::quote(e), type_of(e)), th, 4096);
    if (r.result != e) {
      detail = "normalize(eval(quote(e))) differs for: " + print_expr(e);
      return false;
    }
  }
  // semantic half: valuation identity over sampled assignments
  testgen::Rng rng(0xC2C2);
  testgen::AtomPool pool = testgen::corpus_pool();
  Model m;
  m.iota_size = 2;
  std::size_t cases = 0;
  for (std::size_t k = 0; k < c.normal.size() && cases < 1000; k += 9, ++cases) {
    const Expr& e = c.normal[k];
    Expr dq = Expr::eval(Expr::quote(e), type_of(e));
    std::vector<Var> vars = possibly_free_vars(e);
    for (int j = 0; j < 100; ++j) {
      Assignment phi = testgen::gen_assignment(rng, m, vars, pool);
      Value a = valuate(dq, m, phi);
      Value b = valuate(e, m, phi);
      if (!testgen::observably_equal(a, b, type_of(e), m, rng, pool, 4)) {
        detail = "valuation differs for: " + print_expr(e);
        return false;
      }
    }
  }
  detail = std::to_string(c.normal.size()) + " exact normalizations, " +
           std::to_string(cases) + " x 100 valuation checks";
  return cases >= 1000;
}

bool criterion3(std::string& detail) {
  const Corpus& c = corpus();
  std::size_t n = 0;
  auto run = [&](const std::vector<Expr>& batch) {
    for (const Expr& e : batch) {
      if (normalize(Expr::quote(e), th, 4096).result != as_expr(encode(e))) {
        detail = "quote normalization differs for: " + print_expr(e);
        return false;
      }
      ++n;
    }
    return true;
  };
  bool ok = run(c.normal) && run(c.extra);
  detail = std::to_string(n) + " expressions";
  return ok;
}

bool criterion4(std::string& detail) {
  const Corpus& c = corpus();
  std::size_t n = 0;
  auto run = [&](const std::vector<Expr>& batch) {
    for (const Expr& e : batch) {
      if (expand(embed(e)) != as_expr(encode(e))) {
        detail = "expansion differs for: " + print_expr(e);
        return false;
      }
      ++n;
    }
    return true;
  };
  if (!run(c.normal) || !run(c.extra)) return false;

  // the worked negated-conjunction example with a quoted formula in the hole
  testgen::Rng rng(0x42AA);
  testgen::AtomPool pool = testgen::corpus_pool();
  Parser p(th);
  for (int k = 0; k < 20; ++k) {
    Expr cf = testgen::gen_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(3)),
                                     Type::omicron(), true);
    Expr a = Expr::var("A", Type::omicron());
    QuasiExpr m = QuasiExpr::app(
        QuasiExpr::constant(consts::not_c()),
        QuasiExpr::app(QuasiExpr::app(QuasiExpr::constant(consts::and_c()), embed(a)),
                       QuasiExpr::hole(Expr::quote(cf))));
    Expr want = Expr::app(
        Expr::constant(consts::not_c()),
        Expr::app_n(Expr::constant(consts::and_c()), {a, cf}));
    if (normalize(expand(m), th, 4096).result != as_expr(encode(want))) {
      detail = "worked example differs for hole: " + print_expr(cf);
      return false;
    }
  }
  detail = std::to_string(n) + " zero-hole expansions, 20 worked holes";
  return true;
}

bool criterion5(std::string& detail) {
  testgen::Rng rng(0x5555);
  testgen::AtomPool pool = testgen::corpus_pool();
  Model m;
  m.iota_size = 2;
  for (int k = 0; k < 1000; ++k) {
    Construction c = testgen::gen_construction(rng, pool, 1 + static_cast<int>(rng.pick(5)));
    Expr lit = as_expr(c);
    for (int j = 0; j < 50; ++j) {
      Assignment phi =
          testgen::gen_assignment(rng, m, {pool.vars[rng.pick(pool.vars.size())]}, pool);
      Value v = valuate(lit, m, phi);
      if (v.kind() != Value::Kind::Constr || v.construction() != c) {
        detail = "literal does not valuate to itself: " + print_expr(lit);
        return false;
      }
    }
  }
  detail = "1000 literals x 50 assignments";
  return true;
}

bool criterion6(std::string& detail) {
  // the CLI run, timed
  const char* cli = std::getenv("CTTQE_CLI");
  if (!cli) {
    detail = "CTTQE_CLI not set";
    return false;
  }
  Clock::time_point t0 = Clock::now();
  std::string cmd = std::string(cli) + " demo polydiff 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    detail = "cannot spawn the CLI";
    return false;
  }
  std::string outtext;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) outtext.append(buf.data(), n);
  int status = pclose(pipe);
  double ms = ms_since(t0);
  bool exit_ok = WIFEXITED(status) && WEXITSTATUS(status) == 0;
  std::size_t end = outtext.find_last_not_of('\n');
  std::size_t begin = end == std::string::npos ? 0 : outtext.rfind('\n', end);
  std::string last =
      end == std::string::npos
          ? std::string()
          : outtext.substr(begin == std::string::npos ? 0 : begin + 1,
                           end - (begin == std::string::npos ? 0 : begin + 1) + 1);
  if (!exit_ok || last != "\\x:i . 2 * x:i" || ms >= 1000.0) {
    detail = "demo exit/output/time: " + std::to_string(WEXITSTATUS(status)) + " / '" + last +
             "' / " + std::to_string(ms) + " ms";
    return false;
  }

  // corrupting any single step is rejected at that step
  Parser p(th);
  const char* chain =
      "1: deriv (\\x:i . x:i ^ 2)\n"
      "2: sym disquote | deriv [[ '[ \\x:i . x:i ^ 2 ] ]]_(i->i)\n"
      "3: quotenorm | deriv [[ abs '[ x:i ] '[ x:i ^ 2 ] ]]_(i->i)\n"
      "4: meaning poly-diff u := '[ x:i ], v := '[ x:i ^ 2 ] | "
      "[[ abs '[ x:i ] (poly-diff '[ x:i ^ 2 ] '[ x:i ]) ]]_(i->i)\n"
      "5: fold | [[ abs '[ x:i ] '[ 2 * x:i ] ]]_(i->i)\n"
      "6: sym quotenorm | [[ '[ \\x:i . 2 * x:i ] ]]_(i->i)\n"
      "7: disquote | \\x:i . 2 * x:i\n";
  EqTrace good = parse_trace(chain, p);
  if (!check_trace(good, th).verified) {
    detail = "the chain itself does not verify";
    return false;
  }
  Expr decoy = p.expr("deriv (\\x:i . 3 * x:i + 1)");
  for (std::size_t i = 0; i < good.steps.size(); ++i) {
    EqTrace bad = good;
    bad.steps[i].expr = decoy;
    TraceReport rep = check_trace(bad, th);
    if (rep.verified || rep.failed_step != i + 2) {
      detail = "corruption of step " + std::to_string(i + 2) + " not localized";
      return false;
    }
  }
  std::ostringstream os;
  os << "demo in " << ms << " ms, 6 corruptions localized";
  detail = os.str();
  return true;
}

bool criterion7(std::string& detail) {
  testgen::Rng rng(0x7777);
  testgen::AtomPool pool = testgen::corpus_pool();
  Parser p(th);
  // construction building: make-implication equals the encoding
  for (int k = 0; k < 20; ++k) {
    Expr a = testgen::gen_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(2)),
                                    Type::omicron(), true);
    Expr b = testgen::gen_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(2)),
                                    Type::omicron(), true);
    Expr built = Expr::app_n(Expr::constant(consts::make_implication()),
                             {Expr::quote(a), Expr::quote(b)});
    auto lv = literal_value(normalize(built, th, 4096).result);
    Expr want = Expr::app_n(Expr::constant(consts::imp_c()), {a, b});
    if (!lv || *lv != encode(want)) {
      detail = "make-implication image differs for: " + print_expr(want);
      return false;
    }
  }
  // is-app decided semantically with quantifier depth 3
  Var x{"x", Type::iota()};
  Var q{"p", Type::omicron()};
  std::vector<Construction> apps, atoms;
  for (int k = 0; k < 10; ++k) {
    Construction l = k % 2 == 0 ? Construction::quoted_var(x)
                                : Construction::quoted_const(consts::numeral(k));
    Construction r = k % 3 == 0 ? Construction::quoted_var(q) : Construction::quoted_var(x);
    apps.push_back(Construction::app(l, r));
    atoms.push_back(k % 2 == 0 ? Construction::quoted_var(x)
                               : Construction::quoted_const(consts::numeral(k)));
  }
  for (int k = 0; k < 10; ++k) {
    for (bool positive : {true, false}) {
      const Construction& c = positive ? apps[k] : atoms[k];
      Expr formula = Expr::app(Expr::constant(consts::is_app_c()), as_expr(c));
      Model m;
      m.iota_size = 2;
      m.epsilon_depth = 3;
      collect_syntax_atoms(formula, m.syntax_atoms);
      Value v = valuate(formula, m, Assignment(m));
      if (v.truth_value() != positive) {
        detail = std::string("is-app wrong on ") + print_construction(c);
        return false;
      }
    }
  }
  detail = "20 implications, 10+10 is-app decisions at depth 3";
  return true;
}

bool criterion8(std::string& detail) {
  testgen::Rng rng(0x8888);
  testgen::AtomPool pool = testgen::corpus_pool();
  Parser p(th);
  Schemas s = schema_constants(th);
  std::uint64_t fuel = 1u << 20;
  for (int k = 0; k < 20; ++k) {
    Expr cf = testgen::gen_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(3)),
                                     Type::omicron(), true);
    Expr inst = instantiate_discharging(s.lem, {encode(cf)}, th, fuel);
    Expr target = Expr::app_n(Expr::constant(consts::or_c()),
                              {cf, Expr::app(Expr::constant(consts::not_c()), cf)});
    if (normalize(inst, th, fuel).result != normalize(target, th, fuel).result) {
      detail = "LEM instance differs for: " + print_expr(cf);
      return false;
    }
  }
  if (type_of(s.induction) != Type::omicron()) {
    detail = "induction schema does not typecheck at o";
    return false;
  }
  const char* positives[] = {
      "forall x:i . S x:i = S x:i",
      "forall x:i . x:i + 0 = x:i",
      "exists x:i . x:i * x:i = 0",
      "0 = 0 /\\ S 0 = S 0",
      "~(0 = S 0)",
      "forall x:i . forall y:i . x:i + y:i = y:i + x:i",
      "forall x:i . 0 = 0 => S x:i = S x:i",
      "0 + 0 = 0 \\/ 0 = S 0",
      "forall x:i . exists y:i . y:i = S x:i",
      "S (S 0) = S (S 0)",
  };
  const char* negatives[] = {
      "forall f:(i->o) . f:(i->o) 0",
      "2 = 2",
      "forall x:eps . x:eps = x:eps",
      "p:o",
      "deriv (\\x:i . x:i) = \\x:i . x:i",
      "forall x:i . g:(i->o) x:i",
      "x:i = x:i /\\ p:o",
      "S 0 = 0 => p:o",
      "forall x:o . x:o = x:o",
      "T",
  };
  for (const char* text : positives) {
    Expr e = p.expr(text);
    if (!is_peano(encode(e)) || !oracles::peano_formula_oracle(e)) {
      detail = std::string("positive sample rejected: ") + text;
      return false;
    }
  }
  for (const char* text : negatives) {
    Expr e = p.expr(text);
    if (is_peano(encode(e)) || oracles::peano_formula_oracle(e)) {
      detail = std::string("negative sample accepted: ") + text;
      return false;
    }
  }
  detail = "20 LEM instances, 10+10 is-peano samples against the oracle";
  return true;
}

bool criterion9(std::string& detail) {
  testgen::Rng rng(0x9999);
  testgen::AtomPool pool = testgen::corpus_pool();
  std::array<Model, 3> models;
  for (std::size_t i = 0; i < 3; ++i) {
    models[i].iota_size = i + 1;
    models[i].epsilon_depth = 2;
    models[i].syntax_atoms = {Expr::var(Var{"x", Type::iota()})};
  }

  auto check_pair = [&](const Expr& before, const Expr& after, const Model& m) {
    std::vector<Var> vars = possibly_free_vars(before);
    for (const Var& v : possibly_free_vars(after)) {
      bool seen = false;
      for (const Var& u : vars) seen = seen || u == v;
      if (!seen) vars.push_back(v);
    }
    for (int j = 0; j < 3; ++j) {
      Assignment phi = testgen::gen_assignment(rng, m, vars, pool);
      Value a = valuate(before, m, phi);
      Value b = valuate(after, m, phi);
      if (!testgen::observably_equal(a, b, type_of(before), m, rng, pool, 4)) return false;
    }
    return true;
  };

  auto audit = [&](RuleId rule, auto make_redex, std::size_t count,
                   std::string& why) -> bool {
    std::size_t done = 0, attempts = 0;
    while (done < count && attempts < count * 40) {
      ++attempts;
      Expr redex = make_redex();
      if (redex.is_null()) continue;
      auto s = step(redex, th);
      if (!s || !s->step.path.empty() || s->step.rule != rule) continue;
      const Model& m = models[done % 3];
      if (!check_pair(redex, s->result, m)) {
        why = std::string(rule_name(rule)) + " unsound on: " + print_expr(redex);
        return false;
      }
      ++done;
    }
    if (done < count) {
      why = std::string("generated only ") + std::to_string(done) + " " + rule_name(rule) +
            " redexes";
      return false;
    }
    return true;
  };

  std::string why;

  // Beta: direct substitutions plus blocked redexes that distribute
  bool ok = audit(
      RuleId::Beta,
      [&]() -> Expr {
        if (rng.chance(0.25)) {
          // blocked body: an evaluation of the bound variable inside a
          // conjunction forces the structural schema
          Var x{"s", Type::epsilon()};
          Expr body = Expr::app_n(
              Expr::constant(consts::and_c()),
              {Expr::eval(Expr::var(x), Type::omicron()), Expr::var(Var{"p", Type::omicron()})});
          Expr arg = testgen::gen_eval_free(rng, pool, 2, Type::epsilon(), true);
          return Expr::app(Expr::abs(x, body), arg);
        }
        Type at = testgen::gen_type(rng, 1);
        Var x{"a0", at};
        Expr body = testgen::gen_eval_free(rng, pool, 2 + static_cast<int>(rng.pick(2)),
                                           testgen::gen_type(rng, 1), true);
        if (rng.chance(0.5)) body = Expr::var(x);  // identity case
        Expr arg = testgen::gen_eval_free(rng, pool, 2, at, true);
        return Expr::app(Expr::abs(x, body), arg);
      },
      1000, why);

  ok = ok && audit(
                 RuleId::Disquote,
                 [&]() -> Expr {
                   if (rng.chance(0.5)) {
                     Expr e = testgen::gen_any_eval_free(rng, pool,
                                                         2 + static_cast<int>(rng.pick(3)), true);
                     return Expr::eval(Expr::quote(e), type_of(e));
                   }
                   Construction c =
                       testgen::gen_construction(rng, pool, 1 + static_cast<int>(rng.pick(3)));
                   Properness pr = classify(c);
                   if (!pr.proper) return Expr();
                   return Expr::eval(as_expr(c), pr.ty);
                 },
                 1000, why);

  ok = ok && audit(
                 RuleId::QuoteNorm,
                 [&]() -> Expr {
                   Expr e = testgen::gen_any_eval_free(rng, pool,
                                                       2 + static_cast<int>(rng.pick(3)), true);
                   if (e.is_atom()) return Expr();
                   return Expr::quote(e);
                 },
                 1000, why);

  ok = ok && audit(
                 RuleId::EvalBeta,
                 [&]() -> Expr {
                   Var x{"s", Type::epsilon()};
                   if (rng.chance(0.5)) {
                     // (\s. [[ app 'g s ]]_cod) lit
                     Type at = testgen::gen_type(rng, 1);
                     Type ct = testgen::gen_type(rng, 1);
                     Expr g = Expr::var(Var{"g9", Type::fun(at, ct)});
                     Expr argexp = testgen::gen_eval_free(rng, pool, 2, at, true);
                     Expr body = Expr::eval(
                         Expr::app_n(Expr::constant(consts::app_c()),
                                     {Expr::quote(g), Expr::var(x)}),
                         ct);
                     return Expr::app(Expr::abs(x, body),
                                      as_expr(encode(argexp)));
                   }
                   // (\s. [[ s ]]_t) lit with the bound variable absent
                   Expr e = testgen::gen_any_eval_free(rng, pool,
                                                       2 + static_cast<int>(rng.pick(2)), true);
                   Expr body = Expr::eval(Expr::var(x), type_of(e));
                   return Expr::app(Expr::abs(x, body), as_expr(encode(e)));
                 },
                 1000, why);

  ok = ok && audit(
                 RuleId::BuiltinFold,
                 [&]() -> Expr {
                   Construction c =
                       testgen::gen_construction(rng, pool, 1 + static_cast<int>(rng.pick(3)));
                   Expr lit = as_expr(c);
                   switch (rng.pick(6)) {
                     case 0: return Expr::app(Expr::constant(consts::is_var()), lit);
                     case 1: return Expr::app(Expr::constant(consts::is_con()), lit);
                     case 2:
                       return Expr::app(Expr::constant(consts::is_expr(testgen::gen_type(rng, 1))),
                                        lit);
                     case 3: {
                       Construction d = rng.chance(0.5)
                                            ? c
                                            : testgen::gen_construction(
                                                  rng, pool, 1 + static_cast<int>(rng.pick(3)));
                       return Expr::app_n(Expr::constant(consts::eq(Type::epsilon())),
                                          {lit, as_expr(d)});
                     }
                     case 4: return Expr::app(Expr::constant(consts::is_poly_c()), lit);
                     default: {
                       Var x{"x", Type::iota()};
                       Expr poly = testgen::gen_poly(rng, 1 + static_cast<int>(rng.pick(3)), x);
                       return Expr::app_n(
                           Expr::constant(consts::poly_diff_c()),
                           {as_expr(encode(poly)), as_expr(Construction::quoted_var(x))});
                     }
                   }
                 },
                 1000, why);

  ok = ok && audit(
                 RuleId::DefUnfold,
                 [&]() -> Expr {
                   static const std::vector<Const> defined = [] {
                     std::vector<Const> out;
                     for (const ConstantDef& d : th.defs())
                       if (d.kind == ConstKind::Defined)
                         out.push_back(Const{d.name, d.ty, std::nullopt});
                     return out;
                   }();
                   return Expr::constant(defined[rng.pick(defined.size())]);
                 },
                 1000, why);

  detail = ok ? "6 rules x 1000 redexes x 3 assignments, iota 1..3" : why;
  return ok;
}

bool criterion10(std::string& detail) {
  Var x{"x", Type::iota()};
  Construction bad = Construction::app(Construction::quoted_var(x), Construction::quoted_var(x));
  if (classify(bad).proper) {
    detail = "the mismatched application classifies as proper";
    return false;
  }
  std::vector<Expr> atoms = {Expr::var(x), Expr::var(Var{"f", Type::fun(Type::iota(), Type::iota())})};
  std::vector<Construction> all = enumerate_constructions(atoms, 3);
  std::vector<Expr> exprs = oracles::all_eval_free(atoms, 3);
  std::unordered_map<Construction, Expr, ConstructionHash> oracle;
  for (const Expr& e : exprs) oracle.emplace(encode(e), e);
  std::size_t proper = 0;
  for (const Construction& c : all) {
    Properness pr = classify(c);
    auto it = oracle.find(c);
    if (pr.proper != (it != oracle.end())) {
      detail = "census disagrees at: " + print_construction(c);
      return false;
    }
    if (pr.proper) {
      ++proper;
      if (it->second != pr.decoded) {
        detail = "decode differs at: " + print_construction(c);
        return false;
      }
    }
  }
  detail = std::to_string(all.size()) + " constructions, " + std::to_string(proper) +
           " proper, oracle agrees";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) setenv("CTTQE_CLI", argv[1], 1);
  struct Entry {
    int id;
    const char* title;
    bool (*fn)(std::string&);
  };
  const Entry entries[] = {
      {1, "encode/decode round-trip and injectivity", criterion1},
      {2, "law of disquotation, exact and semantic", criterion2},
      {3, "law of quotation via normalization", criterion3},
      {4, "quasiquote coherence", criterion4},
      {5, "construction literals valuate to themselves", criterion5},
      {6, "differentiation chain demo and corruption locality", criterion6},
      {7, "make-implication and is-app demos", criterion7},
      {8, "excluded middle and induction schema", criterion8},
      {9, "rewrite soundness audit", criterion9},
      {10, "improperness census against the oracle", criterion10},
  };
  bool all = true;
  for (const Entry& e : entries) {
    Clock::time_point t0 = Clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = e.fn(detail);
    } catch (const std::exception& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    double ms = ms_since(t0);
    std::printf("criterion %2d %s  %s (%s; %.0f ms)\n", e.id, ok ? "PASS" : "FAIL", e.title,
                detail.c_str(), ms);
    std::fflush(stdout);
    all = all && ok;
  }
  return all ? 0 : 1;
}
