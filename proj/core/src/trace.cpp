#include "cttqe/trace.hpp"

#include <sstream>

#include "cttqe/builtins.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/schemas.hpp"

namespace cttqe {

std::string Justification::to_string() const {
  switch (kind) {
    case JustKind::Rewrite: return rule_name(rule);
    case JustKind::Symmetric: return std::string("sym ") + rule_name(rule);
    case JustKind::DefUnfold: return "unfold " + unfold_name;
    case JustKind::MeaningFormula: {
      std::string out = "meaning " + schema_name;
      bool first = true;
      for (const auto& [n, e] : instantiations) {
        out += first ? " " : ", ";
        out += n + " := " + print_expr(e);
        first = false;
      }
      return out;
    }
  }
  return "?";
}

namespace {

// Smallest single subtree pair containing every difference. Quotations are
// opaque: a difference inside a quotation designates the quotations
// themselves, since nothing rewrites under a quote.
void designated_diff(const Expr& a, const Expr& b, Expr& outa, Expr& outb) {
  if (a.kind() == b.kind()) {
    switch (a.kind()) {
      case ExprKind::App: {
        bool fun_eq = a.fun() == b.fun();
        bool arg_eq = a.arg() == b.arg();
        if (fun_eq && !arg_eq) return designated_diff(a.arg(), b.arg(), outa, outb);
        if (!fun_eq && arg_eq) return designated_diff(a.fun(), b.fun(), outa, outb);
        break;
      }
      case ExprKind::Abs:
        if (a.binder() == b.binder())
          return designated_diff(a.body(), b.body(), outa, outb);
        break;
      case ExprKind::Eval:
        if (a.eval_target() == b.eval_target())
          return designated_diff(a.eval_arg(), b.eval_arg(), outa, outb);
        break;
      default: break;
    }
  }
  outa = a;
  outb = b;
}

std::string step_reason(const Expr& lhs, const Expr& rhs) {
  return "sides do not agree: " + print_expr(lhs) + "  vs  " + print_expr(rhs);
}

// Expand every occurrence of the named defined constant once.
Expr unfold_all(const Expr& e, const std::string& name, const Theory& th, bool& touched) {
  switch (e.kind()) {
    case ExprKind::Const: {
      Const c = e.as_const();
      if (c.name == name && th.is_defined(c)) {
        touched = true;
        return th.unfold(c);
      }
      return e;
    }
    case ExprKind::Var: return e;
    case ExprKind::App:
      return Expr::app(unfold_all(e.fun(), name, th, touched),
                       unfold_all(e.arg(), name, th, touched));
    case ExprKind::Abs:
      return Expr::abs(e.binder(), unfold_all(e.body(), name, th, touched));
    case ExprKind::Quote: return e;
    case ExprKind::Eval:
      return Expr::eval(unfold_all(e.eval_arg(), name, th, touched), e.eval_target());
  }
  return e;
}

bool verify_rewrite(const Expr& prev, const Expr& next, const Theory& th, std::uint64_t fuel,
                    std::string& reason) {
  if (prev == next) return true;
  Expr l, r;
  designated_diff(prev, next, l, r);
  try {
    Expr ln = normalize(l, th, fuel).result;
    Expr rn = normalize(r, th, fuel).result;
    if (ln == rn) return true;
    // The local difference may only be discharged by its context, e.g. a
    // redex against its contractum under the surrounding application.
    if (normalize(prev, th, fuel).result == normalize(next, th, fuel).result) return true;
    reason = step_reason(ln, rn);
  } catch (const Error& e) {
    reason = e.what();
  }
  return false;
}

bool verify_unfold(const Expr& prev, const Expr& next, const std::string& name,
                   const Theory& th, std::string& reason) {
  bool touched = false;
  Expr l = unfold_all(prev, name, th, touched);
  Expr r = unfold_all(next, name, th, touched);
  if (!touched) {
    reason = "'" + name + "' does not occur on either side";
    return false;
  }
  if (l == r) return true;
  reason = "definitional expansion of '" + name + "' does not equate the sides";
  return false;
}

bool verify_meaning(const Expr& prev, const Expr& next, const Justification& j,
                    const Theory& th, std::uint64_t fuel, std::string& reason) {
  if (j.schema_name != "poly-diff") {
    reason = "unknown meaning formula '" + j.schema_name + "'";
    return false;
  }
  Schemas s = schema_constants(th);
  const Expr& schema = s.meaning_poly_diff;

  // Order witnesses by the schema's own quantifier prefix.
  std::vector<Construction> witnesses;
  Expr body = schema;
  for (std::size_t k = 0; k < j.instantiations.size(); ++k) {
    auto all = match_forall(body);
    if (!all) {
      reason = "too many instantiations for the schema";
      return false;
    }
    const Var& binder = all->first;
    bool found = false;
    for (const auto& [n, e] : j.instantiations) {
      if (n != binder.name) continue;
      auto lv = literal_value(e);
      if (!lv) {
        reason = "instantiation for " + n + " is not a construction literal";
        return false;
      }
      witnesses.push_back(std::move(*lv));
      found = true;
      break;
    }
    if (!found) {
      reason = "missing instantiation for schema variable " + binder.name;
      return false;
    }
    body = all->second;
  }

  Expr equation;
  try {
    equation = instantiate_discharging(schema, witnesses, th, fuel);
  } catch (const Error& e) {
    reason = e.what();
    return false;
  }
  auto eq = match_binary(equation, "eq");
  if (!eq) {
    reason = "schema instance is not an equation";
    return false;
  }
  auto same = [&](const Expr& a, const Expr& b) {
    if (a == b) return true;
    std::string ignored;
    return verify_rewrite(a, b, th, fuel, ignored);
  };
  if ((same(prev, eq->first) && same(next, eq->second)) ||
      (same(prev, eq->second) && same(next, eq->first)))
    return true;
  reason = "instantiated equation does not match the step: " + print_expr(equation);
  return false;
}

}  // namespace

TraceReport check_trace(const EqTrace& t, const Theory& th, std::uint64_t fuel) {
  TraceReport report;
  const Type& ty = t.start.type();
  Expr prev = t.start;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& st = t.steps[i];
    report.failed_step = i + 2;  // 1-based line of the step under scrutiny
    if (st.expr.type() != ty) {
      report.reason = "line has type " + st.expr.type().to_string() + ", trace is at " +
                      ty.to_string();
      return report;
    }
    std::string reason;
    bool ok = false;
    switch (st.just.kind) {
      case JustKind::Rewrite:
      case JustKind::Symmetric:
        ok = verify_rewrite(prev, st.expr, th, fuel, reason);
        break;
      case JustKind::DefUnfold:
        ok = verify_unfold(prev, st.expr, st.just.unfold_name, th, reason);
        break;
      case JustKind::MeaningFormula:
        ok = verify_meaning(prev, st.expr, st.just, th, fuel, reason);
        break;
    }
    if (!ok) {
      report.reason = reason;
      return report;
    }
    prev = st.expr;
  }
  report.verified = true;
  report.failed_step = 0;
  return report;
}

EqTrace parse_trace(const std::string& text, const Parser& parser, const std::string& filename) {
  EqTrace trace;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::size_t expected = 1;
  bool have_start = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = line;
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (s[a] == '#') continue;

    std::vector<Token> toks = lex(line, filename, lineno, 1);
    std::size_t pos = 0;
    if (toks[pos].kind != Tok::Num)
      throw Error(Errc::ParseError, "trace lines start with their number", toks[pos].span);
    if (std::stoull(toks[pos].text) != expected)
      throw Error(Errc::ParseError,
                  "expected line number " + std::to_string(expected), toks[pos].span);
    ++pos;
    if (toks[pos].kind != Tok::Colon)
      throw Error(Errc::ParseError, "expected ':' after the line number", toks[pos].span);
    ++pos;

    if (!have_start) {
      trace.start = parser.expr_at(toks, pos);
      if (toks[pos].kind != Tok::End)
        throw Error(Errc::ParseError, "trailing input after the start expression",
                    toks[pos].span);
      have_start = true;
      ++expected;
      continue;
    }

    Justification j;
    if (toks[pos].kind != Tok::Ident)
      throw Error(Errc::ParseError, "expected a justification tag", toks[pos].span);
    std::string tag = toks[pos].text;
    ++pos;
    bool sym = false;
    if (tag == "sym") {
      sym = true;
      if (toks[pos].kind != Tok::Ident)
        throw Error(Errc::ParseError, "expected a rule after 'sym'", toks[pos].span);
      tag = toks[pos].text;
      ++pos;
    }
    if (auto r = rule_from_name(tag)) {
      if (tag == "unfold") {
        if (toks[pos].kind != Tok::Ident)
          throw Error(Errc::ParseError, "expected a constant name after 'unfold'",
                      toks[pos].span);
        j.kind = JustKind::DefUnfold;
        j.unfold_name = toks[pos].text;
        ++pos;
      } else {
        j.kind = sym ? JustKind::Symmetric : JustKind::Rewrite;
        j.rule = *r;
      }
    } else if (tag == "meaning") {
      j.kind = JustKind::MeaningFormula;
      if (toks[pos].kind != Tok::Ident)
        throw Error(Errc::ParseError, "expected a schema name after 'meaning'", toks[pos].span);
      j.schema_name = toks[pos].text;
      ++pos;
      while (toks[pos].kind == Tok::Ident) {
        std::string var = toks[pos].text;
        ++pos;
        if (toks[pos].kind != Tok::Assign)
          throw Error(Errc::ParseError, "expected ':=' in an instantiation", toks[pos].span);
        ++pos;
        Expr witness = parser.expr_at(toks, pos);
        j.instantiations.emplace_back(std::move(var), std::move(witness));
        if (toks[pos].kind == Tok::Comma) {
          ++pos;
          continue;
        }
        break;
      }
    } else {
      throw Error(Errc::ParseError, "unknown justification '" + tag + "'", toks[pos].span);
    }

    if (toks[pos].kind != Tok::Pipe)
      throw Error(Errc::ParseError, "expected '|' before the step expression", toks[pos].span);
    ++pos;
    Expr e = parser.expr_at(toks, pos);
    if (toks[pos].kind != Tok::End)
      throw Error(Errc::ParseError, "trailing input after the step expression", toks[pos].span);
    trace.steps.push_back(TraceStep{std::move(j), std::move(e)});
    ++expected;
  }
  if (!have_start)
    throw Error(Errc::ParseError, "empty trace", SourceSpan{filename, 1, 1, 0});
  return trace;
}

}  // namespace cttqe
