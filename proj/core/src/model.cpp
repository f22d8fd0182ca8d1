#include "cttqe/model.hpp"

#include <sstream>

#include "cttqe/parser.hpp"
#include "cttqe/printer.hpp"
#include "cttqe/valuate.hpp"

namespace cttqe {

Value Model::default_value(const Type& ty) const {
  switch (ty.kind()) {
    case TypeKind::Omicron: return Value::truth(false);
    case TypeKind::Iota: return Value::individual(0);
    case TypeKind::Epsilon:
      return Value::constr(Construction::quoted_const(consts::undef()));
    case TypeKind::Fun: {
      Value d = default_value(ty.codomain());
      return Value::func(ty.domain(), ty.codomain(), [d](const Value&) { return d; });
    }
  }
  return Value::truth(false);
}

namespace {

bool is_logical_name(const std::string& name) {
  static const char* fixed[] = {"eq",      "is-var",  "is-con",    "app",     "abs",
                                "quo",     "is-expr", "is-free-in"};
  for (const char* f : fixed)
    if (name == f) return true;
  return false;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct ValueParser {
  const std::vector<Token>& toks;
  std::size_t pos;
  const Model& model;
  const Parser& parser;

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::BadModel, msg, toks[pos].span);
  }

  Value parse(const Type& ty) {
    const Token& t = toks[pos];
    switch (ty.kind()) {
      case TypeKind::Omicron: {
        if (t.kind == Tok::Ident && t.text == "true") { ++pos; return Value::truth(true); }
        if (t.kind == Tok::Ident && t.text == "false") { ++pos; return Value::truth(false); }
        fail("expected true or false");
      }
      case TypeKind::Iota: {
        if (t.kind != Tok::Num) fail("expected an individual index");
        std::uint64_t idx = std::stoull(t.text);
        if (idx >= model.iota_size)
          fail("individual index " + t.text + " out of range (iota_size = " +
               std::to_string(model.iota_size) + ")");
        ++pos;
        return Value::individual(idx);
      }
      case TypeKind::Epsilon: {
        Expr e = parser.expr_at(toks, pos);
        auto lv = literal_value(e);
        if (!lv)
          throw Error(Errc::BadModel, "eps values must be construction literals", t.span);
        return Value::constr(std::move(*lv));
      }
      case TypeKind::Fun: {
        if (t.kind != Tok::LBrace) fail("expected a { key -> value, ... } table");
        ++pos;
        auto entries = std::make_shared<std::vector<std::pair<Value, Value>>>();
        if (toks[pos].kind != Tok::RBrace) {
          for (;;) {
            Value k = parse(ty.domain());
            if (toks[pos].kind != Tok::Arrow) fail("expected '->' in table entry");
            ++pos;
            Value v = parse(ty.codomain());
            entries->emplace_back(std::move(k), std::move(v));
            if (toks[pos].kind == Tok::Comma) { ++pos; continue; }
            break;
          }
        }
        if (toks[pos].kind != Tok::RBrace) fail("expected '}' closing the table");
        ++pos;
        const Model* m = &model;
        Type dom = ty.domain(), cod = ty.codomain();
        return Value::func(dom, cod, [entries, m, dom, cod](const Value& arg) {
          EvalCtx ctx = EvalCtx::fresh(*m);
          for (const auto& [k, v] : *entries)
            if (values_equal(arg, k, dom, ctx)) return v;
          return m->default_value(cod);
        });
      }
    }
    fail("unsupported value type");
  }
};

}  // namespace

Model load_model(const std::string& text, const Theory& theory, const std::string& filename) {
  Model m;
  m.theory = &theory;
  Parser parser(theory);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool saw_iota = false;
  std::vector<std::pair<std::string, std::string>> pending;  // name, value text
  std::vector<std::size_t> pending_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    SourceSpan span{filename, lineno, 1, s.size()};
    if (s.rfind("iota_size", 0) == 0) {
      std::string rest = trim(s.substr(9));
      try {
        m.iota_size = std::stoull(rest);
      } catch (...) {
        throw Error(Errc::BadModel, "iota_size expects a positive integer", span);
      }
      if (m.iota_size == 0) throw Error(Errc::BadModel, "iota_size must be positive", span);
      saw_iota = true;
      continue;
    }
    if (s.rfind("const ", 0) == 0) {
      std::size_t eq = s.find('=');
      if (eq == std::string::npos)
        throw Error(Errc::BadModel, "expected 'const name = value'", span);
      pending.emplace_back(trim(s.substr(6, eq - 6)), s.substr(eq + 1));
      pending_lines.push_back(lineno);
      continue;
    }
    throw Error(Errc::BadModel, "expected 'iota_size' or 'const' line", span);
  }
  if (!saw_iota)
    throw Error(Errc::BadModel, "model file must set iota_size",
                SourceSpan{filename, 1, 1, 0});

  for (std::size_t k = 0; k < pending.size(); ++k) {
    const auto& [name, vtext] = pending[k];
    SourceSpan span{filename, pending_lines[k], 1, name.size()};
    const ConstantDef* d = theory.find(name);
    if (!d || consts::is_numeral_name(name))
      throw Error(Errc::BadModel, "unknown constant '" + name + "'", span);
    if (is_logical_name(name))
      throw Error(Errc::BadModel, "logical constant '" + name + "' has a fixed interpretation",
                  span);
    if (d->kind != ConstKind::Primitive)
      throw Error(Errc::BadModel,
                  "'" + name + "' is " +
                      (d->kind == ConstKind::Defined ? std::string("defined")
                                                     : std::string("computational")) +
                      "; its interpretation is fixed",
                  span);
    std::vector<Token> toks = lex(vtext, filename, pending_lines[k], 1);
    ValueParser vp{toks, 0, m, parser};
    Value v = vp.parse(d->ty);
    if (toks[vp.pos].kind != Tok::End)
      throw Error(Errc::BadModel, "trailing input after value", toks[vp.pos].span);
    m.interpretation.emplace(Const{d->name, d->ty, std::nullopt}, std::move(v));
    m.syntax_atoms.push_back(Expr::constant(Const{d->name, d->ty, std::nullopt}));
  }
  return m;
}

std::pair<Var, Value> parse_assignment(const std::string& text, const Model& m) {
  std::vector<Token> toks = lex(text, "<assign>");
  std::size_t pos = 0;
  if (toks[pos].kind != Tok::Ident)
    throw Error(Errc::BadModel, "expected 'name:type = value'", toks[pos].span);
  std::string name = toks[pos].text;
  ++pos;
  if (toks[pos].kind != Tok::Colon)
    throw Error(Errc::BadModel, "expected ':' and the variable type", toks[pos].span);
  ++pos;
  Type ty = parse_type_at(toks, pos);
  if (toks[pos].kind != Tok::Equals)
    throw Error(Errc::BadModel, "expected '=' and the value", toks[pos].span);
  ++pos;
  if (m.theory->has(name))
    throw Error(Errc::BadModel, "'" + name + "' names a constant, not a variable",
                toks[0].span);
  Parser parser(*m.theory);
  ValueParser vp{toks, pos, m, parser};
  Value v = vp.parse(ty);
  if (toks[vp.pos].kind != Tok::End)
    throw Error(Errc::BadModel, "trailing input after value", toks[vp.pos].span);
  return {Var{name, ty}, std::move(v)};
}

std::string print_value(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Individual: return std::to_string(v.index());
    case Value::Kind::Truth: return v.truth_value() ? "true" : "false";
    case Value::Kind::Constr: return print_construction(v.construction());
    case Value::Kind::Func:
      return "<fn " + v.domain().to_string() + "->" + v.codomain().to_string() + ">";
  }
  return "?";
}

}  // namespace cttqe
