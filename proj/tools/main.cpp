// cttqe command-line driver: parse/typecheck, encode/decode, normalize,
// evaluate under a model, validity checking, trace verification, demos and
// a small REPL.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cttqe/builtins.hpp"
#include "cttqe/model.hpp"
#include "cttqe/parser.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/rewrite.hpp"
#include "cttqe/schemas.hpp"
#include "cttqe/trace.hpp"
#include "cttqe/valuate.hpp"

using namespace cttqe;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::uint64_t default_fuel() {
  if (const char* env = std::getenv("CTTQE_FUEL")) {
    try {
      return std::stoull(env);
    } catch (...) {
      // fall through to the default
    }
  }
  return 10000;
}

struct Output {
  bool as_json = false;
  json doc;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  void line(const std::string& s) {
    if (!as_json) std::cout << s << "\n";
  }
  void result(const std::string& s) {
    if (as_json)
      doc["result"] = s;
    else
      std::cout << s << "\n";
  }
  void finish(const std::string& command) {
    if (!as_json) return;
    doc["command"] = command;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    doc["timings"] = {{"total_ms", ms}};
    std::cout << doc.dump(2) << "\n";
  }
};

json steps_json(const std::vector<Step>& steps) {
  json arr = json::array();
  for (const Step& s : steps)
    arr.push_back({{"rule", rule_name(s.rule)}, {"path", path_to_string(s.path)}});
  return arr;
}

int run_normalize(const Theory& th, Output& out, const std::string& text, std::uint64_t fuel,
                  bool show_steps) {
  Parser p(th);
  Expr e = p.expr(text);
  RewriteReport report = normalize(e, th, fuel);
  if (show_steps) {
    Expr cur = e;
    for (const Step& s : report.steps) {
      cur = apply_rule_at(cur, s.rule, s.path, th);
      out.line(std::string("  [") + rule_name(s.rule) + " at " + path_to_string(s.path) + "] " +
               print_expr(cur));
    }
  }
  out.result(print_expr(report.result));
  if (out.as_json) out.doc["steps"] = steps_json(report.steps);
  return kOk;
}

int run_check(const Theory& th, Output& out, const std::string& path) {
  std::string text = read_file(path);
  auto ends_with = [&](const char* suffix) {
    std::string s(suffix);
    return path.size() >= s.size() && path.compare(path.size() - s.size(), s.size(), s) == 0;
  };
  if (ends_with(".cttqe")) {
    Theory loaded = load_theory(text, th, path);
    out.result("theory ok: " + std::to_string(loaded.defs().size()) + " constants");
    return kOk;
  }
  if (ends_with(".trace")) {
    Parser p(th);
    EqTrace t = parse_trace(text, p, path);
    TraceReport rep = check_trace(t, th, default_fuel());
    if (rep.verified) {
      out.result("trace verified: " + std::to_string(t.steps.size()) + " steps");
      return kOk;
    }
    out.result("trace failed at step " + std::to_string(rep.failed_step) + ": " + rep.reason);
    return kFail;
  }
  if (ends_with(".model")) {
    Model m = load_model(text, th, path);
    out.result("model ok: iota_size " + std::to_string(m.iota_size) + ", " +
               std::to_string(m.interpretation.size()) + " interpreted constants");
    return kOk;
  }
  throw Error(Errc::ParseError, "unknown file kind (expect .cttqe, .trace or .model): " + path);
}

int run_eval(const Theory& th, Output& out, const std::string& text,
             const std::string& model_path, const std::vector<std::string>& assigns) {
  Model m = load_model(read_file(model_path), th, model_path);
  Parser p(th);
  Expr e = p.expr(text);
  Assignment phi(m);
  for (const std::string& a : assigns) {
    auto [var, value] = parse_assignment(a, m);
    phi = phi.set(var, value);
  }
  Value v = valuate(e, m, phi);
  out.result(print_value(v));
  return kOk;
}

int run_valid(const Theory& th, Output& out, const std::string& text,
              const std::string& model_path, std::size_t depth) {
  Model m = load_model(read_file(model_path), th, model_path);
  Parser p(th);
  Expr e = p.expr(text);
  Sampler s;
  s.epsilon_depth = depth;
  Verdict v = check_valid(e, m, s);
  if (v.holds) {
    std::string note = v.approximate ? " (approximate)" : " (exhaustive)";
    out.result("holds on " + std::to_string(v.samples) + " assignments" + note);
    return kOk;
  }
  out.result("fails");
  for (const auto& [var, value] : v.counterexample)
    out.line("  " + var.name + ":" + var.ty.to_string() + " = " + print_value(value));
  return kFail;
}

int run_trace(const Theory& th, Output& out, const std::string& path) {
  Parser p(th);
  EqTrace t = parse_trace(read_file(path), p, path);
  out.line("1: " + print_expr(t.start));
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    out.line(std::to_string(i + 2) + ": " + t.steps[i].just.to_string() + " | " +
             print_expr(t.steps[i].expr));
  TraceReport rep = check_trace(t, th, default_fuel());
  if (rep.verified) {
    out.result("verified");
    return kOk;
  }
  out.result("failed at step " + std::to_string(rep.failed_step) + ": " + rep.reason);
  return kFail;
}

const char* kPolyDiffTrace =
    "1: deriv (\\x:i . x:i ^ 2)\n"
    "2: sym disquote | deriv [[ '[ \\x:i . x:i ^ 2 ] ]]_(i->i)\n"
    "3: quotenorm | deriv [[ abs '[ x:i ] '[ x:i ^ 2 ] ]]_(i->i)\n"
    "4: meaning poly-diff u := '[ x:i ], v := '[ x:i ^ 2 ] | "
    "[[ abs '[ x:i ] (poly-diff '[ x:i ^ 2 ] '[ x:i ]) ]]_(i->i)\n"
    "5: fold | [[ abs '[ x:i ] '[ 2 * x:i ] ]]_(i->i)\n"
    "6: sym quotenorm | [[ '[ \\x:i . 2 * x:i ] ]]_(i->i)\n"
    "7: disquote | \\x:i . 2 * x:i\n";

int demo_polydiff(const Theory& th, Output& out) {
  Parser p(th);
  EqTrace t = parse_trace(kPolyDiffTrace, p, "<polydiff>");
  out.line("1: " + print_expr(t.start));
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    out.line(std::to_string(i + 2) + ": " + t.steps[i].just.to_string() + " | " +
             print_expr(t.steps[i].expr));
  TraceReport rep = check_trace(t, th, default_fuel());
  if (!rep.verified) {
    out.result("failed at step " + std::to_string(rep.failed_step) + ": " + rep.reason);
    return kFail;
  }
  out.line("all 6 step equalities verified");
  out.result(print_expr(t.steps.back().expr));
  return kOk;
}

int demo_lem(const Theory& th, Output& out) {
  Parser p(th);
  Schemas s = schema_constants(th);
  out.line("law of excluded middle:");
  out.line("  " + print_expr(s.lem));
  out.line("quasiquotation form:");
  out.line("  " + print_expr(s.lem_quasi));
  Expr sample = p.expr("p:o => q:o");
  out.line("instantiating at '[ " + print_expr(sample) + " ]");
  Expr inst = instantiate_discharging(s.lem, {encode(sample)}, th);
  out.line("  instance: " + print_expr(inst));
  Expr target = Expr::app_n(Expr::constant(consts::or_c()),
                            {sample, Expr::app(Expr::constant(consts::not_c()), sample)});
  std::uint64_t fuel = 1u << 20;
  bool same = normalize(inst, th, fuel).result == normalize(target, th, fuel).result;
  if (!same) {
    out.result("instance does not normalize to the disjunction");
    return kFail;
  }
  out.result(print_expr(target));
  return kOk;
}

int demo_make_implication(const Theory& th, Output& out) {
  Parser p(th);
  Expr built = p.expr("make-implication '[ p:o ] '[ q:o ]");
  RewriteReport r = normalize(built, th, default_fuel());
  out.line("make-implication '[ p:o ] '[ q:o ]");
  out.line("  normalizes to: " + print_expr(r.result));
  auto lit = literal_value(r.result);
  Expr imp = p.expr("p:o => q:o");
  if (!lit || *lit != encode(imp)) {
    out.result("construction does not match the implication's syntax tree");
    return kFail;
  }
  out.line("  equals the encoding of: " + print_expr(imp));

  Expr used = Expr::eval(built, Type::omicron());
  RewriteReport ru = normalize(used, th, default_fuel());
  // the disquoted implication appears right after the disquote step
  Expr cur = used;
  for (const Step& st : ru.steps) {
    cur = apply_rule_at(cur, st.rule, st.path, th);
    if (st.rule == RuleId::Disquote) break;
  }
  out.line("evaluating it: [[ make-implication '[ p:o ] '[ q:o ] ]]_o");
  out.line("  disquotes to: " + print_expr(cur));

  Model m;
  m.epsilon_depth = 3;
  Expr on_app_formula = Expr::app(Expr::constant(consts::is_app_c()), r.result);
  Expr on_atom_formula = p.expr("is-app '[ p:o ]");
  Model m_app = m, m_atom = m;
  collect_syntax_atoms(on_app_formula, m_app.syntax_atoms);
  collect_syntax_atoms(on_atom_formula, m_atom.syntax_atoms);
  Value on_app = valuate(on_app_formula, m_app, Assignment(m_app));
  Value on_atom = valuate(on_atom_formula, m_atom, Assignment(m_atom));
  out.line(std::string("is-app on the built construction: ") + print_value(on_app));
  out.line(std::string("is-app on a quoted atom: ") + print_value(on_atom));
  bool ok = on_app.truth_value() && !on_atom.truth_value();
  out.result(ok ? "ok" : "is-app check failed");
  return ok ? kOk : kFail;
}

int demo_induction(const Theory& th, Output& out) {
  Parser p(th);
  Schemas s = schema_constants(th);
  out.line("first-order induction schema:");
  out.line("  " + print_expr(s.induction));
  out.line("  typechecks at: " + s.induction.type().to_string());
  struct Sample {
    const char* text;
    bool expected;
  };
  const Sample samples[] = {
      {"forall x:i . S x:i = S x:i", true},
      {"forall x:i . exists y:i . y:i = S x:i", true},
      {"0 = 0", true},
      {"forall x:i . x:i + 0 = x:i", true},
      {"forall f:(i->o) . f:(i->o) 0", false},
      {"forall x:i . 2 = x:i", false},
      {"forall x:eps . x:eps = x:eps", false},
  };
  bool all = true;
  for (const Sample& smp : samples) {
    bool got = is_peano(encode(p.expr(smp.text)));
    all = all && got == smp.expected;
    out.line(std::string("  is-peano ") + (got ? "true " : "false") + "  " + smp.text +
             (got == smp.expected ? "" : "   [MISMATCH]"));
  }
  out.result(all ? "ok" : "is-peano disagrees with the expected classification");
  return all ? kOk : kFail;
}

int run_repl(Theory th) {
  std::cout << "cttqe repl. Commands: :t EXPR, :n EXPR, :e EXPR, let NAME = EXPR, :q\n";
  Parser p(th);
  std::string line;
  while (std::cout << "> " << std::flush, std::getline(std::cin, line)) {
    try {
      std::string s = line;
      auto pos = s.find_first_not_of(" \t");
      if (pos == std::string::npos) continue;
      s = s.substr(pos);
      if (s == ":q" || s == ":quit") break;
      if (s.rfind("let ", 0) == 0) {
        auto eq = s.find('=');
        if (eq == std::string::npos) {
          std::cout << "expected: let NAME = EXPR\n";
          continue;
        }
        std::string name = s.substr(4, eq - 4);
        name.erase(name.find_last_not_of(" \t") + 1);
        Expr e = p.expr(s.substr(eq + 1), "<repl>");
        p.bind(name, e);
        std::cout << name << " = " << print_expr(e) << "\n";
        continue;
      }
      if (s.rfind(":t ", 0) == 0) {
        std::cout << p.expr(s.substr(3), "<repl>").type().to_string() << "\n";
        continue;
      }
      if (s.rfind(":e ", 0) == 0) {
        Expr e = p.expr(s.substr(3), "<repl>");
        std::cout << print_expr(as_expr(encode(e))) << "\n";
        continue;
      }
      if (s.rfind(":n ", 0) == 0) s = s.substr(3);
      Expr e = p.expr(s, "<repl>");
      std::cout << print_expr(normalize(e, th, default_fuel()).result) << "\n";
    } catch (const Error& err) {
      std::cout << "error: " << err.what() << "\n";
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cttqe: a typed lambda calculus kernel with quotation and evaluation"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> theory_files;
  bool as_json = false;
  app.add_option("--theory", theory_files, "additional theory files (.cttqe)");
  app.add_flag("--json", as_json, "machine-readable output");

  std::string arg_expr, arg_file, arg_model;
  std::vector<std::string> arg_assigns;
  std::uint64_t fuel = default_fuel();
  bool show_steps = false;
  std::size_t depth = 3;

  CLI::App* c_check = app.add_subcommand("check", "validate a theory, trace or model file");
  c_check->add_option("file", arg_file)->required();

  CLI::App* c_typeof = app.add_subcommand("typeof", "print the type of an expression");
  c_typeof->add_option("expr", arg_expr)->required();

  CLI::App* c_encode = app.add_subcommand("encode", "print the syntax-tree construction");
  c_encode->add_option("expr", arg_expr)->required();

  CLI::App* c_decode = app.add_subcommand("decode", "decode a construction literal");
  c_decode->add_option("expr", arg_expr)->required();

  CLI::App* c_norm = app.add_subcommand("normalize", "rewrite to normal form");
  c_norm->add_option("expr", arg_expr)->required();
  c_norm->add_option("--fuel", fuel, "step bound");
  c_norm->add_flag("--steps", show_steps, "print each rewrite step");

  CLI::App* c_eval = app.add_subcommand("eval", "valuate under a model");
  c_eval->add_option("expr", arg_expr)->required();
  c_eval->add_option("--model", arg_model, "model file")->required();
  c_eval->add_option("--assign", arg_assigns, "variable assignment name:type=value");

  CLI::App* c_valid = app.add_subcommand("valid", "check validity over assignments");
  c_valid->add_option("expr", arg_expr)->required();
  c_valid->add_option("--model", arg_model, "model file")->required();
  c_valid->add_option("--depth", depth, "construction enumeration depth");

  CLI::App* c_trace = app.add_subcommand("trace", "check an equational derivation file");
  c_trace->add_option("file", arg_file)->required();

  std::string demo_name;
  CLI::App* c_demo = app.add_subcommand("demo", "run a worked example");
  c_demo->add_option("name", demo_name, "lem | make-implication | induction | polydiff")
      ->required();

  CLI::App* c_repl = app.add_subcommand("repl", "interactive session");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  Output out;
  out.as_json = as_json;
  std::string command;

  try {
    Theory th = standard_theory();
    for (const std::string& f : theory_files) th = load_theory(read_file(f), th, f);

    int code = kOk;
    if (c_check->parsed()) {
      command = "check";
      code = run_check(th, out, arg_file);
    } else if (c_typeof->parsed()) {
      command = "typeof";
      out.result(Parser(th).expr(arg_expr).type().to_string());
    } else if (c_encode->parsed()) {
      command = "encode";
      Expr e = Parser(th).expr(arg_expr);
      out.result(print_expr(as_expr(encode(e))));
    } else if (c_decode->parsed()) {
      command = "decode";
      Expr e = Parser(th).expr(arg_expr);
      auto lv = literal_value(e);
      if (!lv)
        throw Error(Errc::NotAConstructionLiteral,
                    "expression does not denote a fixed construction");
      out.result(print_expr(decode(*lv)));
    } else if (c_norm->parsed()) {
      command = "normalize";
      code = run_normalize(th, out, arg_expr, fuel, show_steps);
    } else if (c_eval->parsed()) {
      command = "eval";
      code = run_eval(th, out, arg_expr, arg_model, arg_assigns);
    } else if (c_valid->parsed()) {
      command = "valid";
      code = run_valid(th, out, arg_expr, arg_model, depth);
    } else if (c_trace->parsed()) {
      command = "trace";
      code = run_trace(th, out, arg_file);
    } else if (c_demo->parsed()) {
      command = "demo " + demo_name;
      if (demo_name == "polydiff") code = demo_polydiff(th, out);
      else if (demo_name == "lem") code = demo_lem(th, out);
      else if (demo_name == "make-implication") code = demo_make_implication(th, out);
      else if (demo_name == "induction") code = demo_induction(th, out);
      else throw Error(Errc::ParseError, "unknown demo: " + demo_name);
    } else if (c_repl->parsed()) {
      return run_repl(th);
    }
    out.finish(command);
    return code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case Errc::ParseError:
      case Errc::TypeMismatch:
      case Errc::QuoteNotEvalFree:
      case Errc::EvalArgNotEpsilon:
      case Errc::HoleOutsideQuote:
      case Errc::HoleNotEpsilon:
      case Errc::NotEvalFree:
      case Errc::BadTheory:
      case Errc::BadModel:
        return kUsage;
      default:
        return kFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
}
