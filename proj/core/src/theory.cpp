#include "cttqe/theory.hpp"

#include <sstream>

#include "cttqe/parser.hpp"

namespace cttqe {

namespace {

bool matches_def(const ConstantDef& d, const Const& c) {
  if (d.name != c.name) return false;
  if (d.family) {
    if (d.name == "eq") {
      // a -> a -> o for some a
      const Type& t = c.ty;
      return t.is_fun() && t.codomain().is_fun() && t.codomain().codomain().is_omicron() &&
             t.domain() == t.codomain().domain() && !c.family_index;
    }
    if (d.name == "is-expr")
      return c.family_index.has_value() && c.ty == Type::fun(Type::epsilon(), Type::omicron());
    return false;
  }
  return c.ty == d.ty && !c.family_index;
}

}  // namespace

void Theory::insert(ConstantDef def) {
  if (consts::is_numeral_name(def.name))
    throw Error(Errc::BadTheory, "'" + def.name + "': numerals are reserved constants");
  auto it = index_.find(def.name);
  if (it != index_.end())
    throw Error(Errc::BadTheory, "constant '" + def.name + "' declared twice");
  index_[def.name] = order_.size();
  order_.push_back(std::move(def));
}

void Theory::check_body_closed(const Const& c, const Expr& body) const {
  auto free = possibly_free_vars(body);
  if (!free.empty())
    throw Error(Errc::BadTheory, "definiens of '" + c.name + "' is not closed (free variable '" +
                                     free.front().name + "')");
  struct Walk {
    const Theory* th;
    const std::string* self;
    void run(const Expr& e) const {
      switch (e.kind()) {
        case ExprKind::Const: {
          Const k = e.as_const();
          if (k.name == *self || !th->contains(k))
            throw Error(Errc::BadTheory, "definiens of '" + *self +
                                             "' references undeclared constant '" + k.name + "'");
          return;
        }
        case ExprKind::Var: return;
        case ExprKind::App:
          run(e.fun());
          run(e.arg());
          return;
        case ExprKind::Abs: run(e.body()); return;
        case ExprKind::Quote: run(e.body()); return;
        case ExprKind::Eval: run(e.eval_arg()); return;
      }
    }
  };
  Walk{this, &c.name}.run(body);
}

void Theory::declare_primitive(const Const& c, std::string doc) {
  ConstantDef d;
  d.name = c.name;
  d.kind = ConstKind::Primitive;
  d.ty = c.ty;
  d.doc = std::move(doc);
  insert(std::move(d));
}

void Theory::define(const Const& c, Expr body, std::string doc) {
  if (body.type() != c.ty)
    throw Error(Errc::BadTheory, "definiens of '" + c.name + "' has type " +
                                     body.type().to_string() + ", declared " + c.ty.to_string());
  check_body_closed(c, body);
  ConstantDef d;
  d.name = c.name;
  d.kind = ConstKind::Defined;
  d.ty = c.ty;
  d.body = std::move(body);
  d.doc = std::move(doc);
  insert(std::move(d));
}

void Theory::declare_builtin(const Const& c, std::string rule, std::string doc) {
  ConstantDef d;
  d.name = c.name;
  d.kind = ConstKind::Builtin;
  d.ty = c.ty;
  d.builtin_rule = std::move(rule);
  d.doc = std::move(doc);
  insert(std::move(d));
}

void Theory::declare_family(const std::string& name, ConstKind kind, std::string builtin_rule,
                            std::string doc) {
  ConstantDef d;
  d.name = name;
  d.kind = kind;
  d.family = true;
  d.builtin_rule = std::move(builtin_rule);
  d.doc = std::move(doc);
  insert(std::move(d));
}

bool Theory::has(const std::string& name) const {
  return index_.count(name) > 0 || consts::is_numeral_name(name);
}

const ConstantDef* Theory::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return nullptr;
  return &order_[it->second];
}

std::optional<Const> Theory::resolve(const std::string& name) const {
  if (consts::is_numeral_name(name)) return Const{name, Type::iota(), std::nullopt};
  const ConstantDef* d = find(name);
  if (!d || d->family) return std::nullopt;
  return Const{d->name, d->ty, std::nullopt};
}

std::optional<Const> Theory::resolve_ascribed(const std::string& name, const Type& ty) const {
  if (consts::is_numeral_name(name)) {
    if (!ty.is_iota())
      throw Error(Errc::TypeMismatch,
                  "numeral '" + name + "' has type i, ascribed " + ty.to_string());
    return Const{name, Type::iota(), std::nullopt};
  }
  const ConstantDef* d = find(name);
  if (!d) return std::nullopt;
  if (d->family) {
    if (d->name == "eq") {
      Const c{d->name, ty, std::nullopt};
      if (matches_def(*d, c)) return c;
      throw Error(Errc::TypeMismatch, "'eq' must be ascribed a type of the form a->a->o");
    }
    throw Error(Errc::TypeMismatch,
                "'" + name + "' is a type-indexed family; write " + name + "^<type>");
  }
  if (d->ty != ty)
    throw Error(Errc::TypeMismatch, "constant '" + name + "' has type " + d->ty.to_string() +
                                        ", ascribed " + ty.to_string());
  return Const{d->name, d->ty, std::nullopt};
}

bool Theory::contains(const Const& c) const {
  if (consts::is_numeral_name(c.name)) return c.ty.is_iota() && !c.family_index;
  const ConstantDef* d = find(c.name);
  return d && matches_def(*d, c);
}

bool Theory::is_defined(const Const& c) const {
  const ConstantDef* d = find(c.name);
  return d && d->kind == ConstKind::Defined && matches_def(*d, c);
}

bool Theory::is_builtin(const Const& c) const {
  const ConstantDef* d = find(c.name);
  return d && d->kind == ConstKind::Builtin && matches_def(*d, c);
}

Expr Theory::unfold(const Const& c) const {
  const ConstantDef* d = find(c.name);
  if (!d || d->kind != ConstKind::Defined || !matches_def(*d, c))
    throw Error(Errc::NotDefined, "'" + c.name + "' has no definition");
  return d->body;
}

namespace {

Expr eqn(const Expr& l, const Expr& r) {
  return Expr::app_n(Expr::constant(consts::eq(l.type())), {l, r});
}

Expr forall_of(const Var& x, const Expr& body) {
  Expr t = Expr::constant(consts::t_c());
  return eqn(Expr::abs(x, t), Expr::abs(x, body));
}

Expr not_of(const Expr& a) { return Expr::app(Expr::constant(consts::not_c()), a); }

Expr exists_of(const Var& x, const Expr& body) { return not_of(forall_of(x, not_of(body))); }

Theory build_standard() {
  using namespace consts;
  Theory th;

  const Type o = Type::omicron();
  const Type i = Type::iota();
  const Type e = Type::epsilon();

  // Table of logical constants.
  th.declare_family("eq", ConstKind::Builtin, "eq-literal",
                    "equality at each type; surface infix =");
  th.declare_builtin(is_var(), "is-var", "tests whether a construction is a quoted variable");
  th.declare_builtin(is_con(), "is-con", "tests whether a construction is a quoted constant");
  th.declare_primitive(app_c(), "syntax constructor for applications");
  th.declare_primitive(abs_c(), "syntax constructor for abstractions");
  th.declare_primitive(quo_c(), "syntax constructor for quotations");
  th.declare_family("is-expr", ConstKind::Builtin, "is-expr",
                    "tests whether a construction represents an expression of the index type");
  th.declare_builtin(is_free_in(), "is-free-in",
                     "freeness of a quoted variable in a represented expression");

  // Defined propositional constants.
  Expr eq_o3 = Expr::constant(eq(o));
  th.define(t_c(), eqn(eq_o3, eq_o3), "truth");

  Var xo{"x", o}, yo{"y", o};
  th.define(f_c(), eqn(Expr::abs(xo, Expr::constant(t_c())), Expr::abs(xo, Expr::var(xo))),
            "falsehood");

  Var g{"g", Type::fun_n({o, o}, o)};
  Expr tt = Expr::constant(t_c());
  th.define(and_c(),
            Expr::abs(xo, Expr::abs(yo, eqn(Expr::abs(g, Expr::app_n(Expr::var(g), {tt, tt})),
                                            Expr::abs(g, Expr::app_n(Expr::var(g),
                                                                     {Expr::var(xo), Expr::var(yo)}))))),
            "conjunction; surface infix /\\");

  th.define(imp_c(),
            Expr::abs(xo, Expr::abs(yo, eqn(Expr::var(xo),
                                            Expr::app_n(Expr::constant(and_c()),
                                                        {Expr::var(xo), Expr::var(yo)})))),
            "implication; surface infix =>");

  th.define(not_c(), Expr::app(Expr::constant(eq(o)), Expr::constant(f_c())),
            "negation; surface prefix ~");

  th.define(or_c(),
            Expr::abs(xo, Expr::abs(yo, not_of(Expr::app_n(
                                            Expr::constant(and_c()),
                                            {not_of(Expr::var(xo)), not_of(Expr::var(yo))})))),
            "disjunction; surface infix \\/");

  // Arithmetic signature. Numerals are an implicit family.
  th.declare_primitive(succ(), "successor");
  th.declare_primitive(plus(), "addition; surface infix +");
  th.declare_primitive(times(), "multiplication; surface infix *");
  th.declare_primitive(deriv(), "derivative operator on unary functions; uninterpreted");
  th.declare_primitive(undef(), "reserved; quoted as the default eps value");

  // Worked-example constants.
  Var xe{"x", e}, ye{"y", e}, ze{"z", e};
  Expr appc = Expr::constant(app_c());
  th.define(make_implication(),
            Expr::abs(xe, Expr::abs(ye, Expr::app_n(appc, {Expr::app_n(appc,
                                                                       {Expr::quote(Expr::constant(imp_c())),
                                                                        Expr::var(xe)}),
                                                           Expr::var(ye)}))),
            "builds the construction of an implication from the constructions of its parts");

  th.define(is_app_c(),
            Expr::abs(xe, exists_of(ye, exists_of(ze, eqn(Expr::var(xe),
                                                          Expr::app_n(appc, {Expr::var(ye),
                                                                             Expr::var(ze)}))))),
            "tests whether a construction is built with app");

  th.declare_builtin(poly_diff_c(), "poly-diff",
                     "syntactic differentiation of polynomial constructions");
  th.declare_builtin(is_poly_c(), "is-poly", "polynomial syntax recogniser");
  th.declare_builtin(is_peano_c(), "is-peano", "first-order arithmetic formula recogniser");

  (void)i;
  return th;
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

const Theory& standard_theory() {
  static const Theory th = build_standard();
  return th;
}

Theory load_theory(const std::string& text, const Theory& base, const std::string& filename) {
  Theory th = base;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    SourceSpan span{filename, lineno, 1, s.size()};
    if (s.rfind("const ", 0) == 0) {
      std::size_t colon = s.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::BadTheory, "expected 'const name : type'", span);
      std::string name = trim(s.substr(6, colon - 6));
      Type ty = parse_type(s.substr(colon + 1), filename, lineno, colon + 2);
      if (name.empty()) throw Error(Errc::BadTheory, "missing constant name", span);
      th.declare_primitive(Const{name, ty, std::nullopt});
      continue;
    }
    if (s.rfind("def ", 0) == 0) {
      std::size_t assign = s.find(":=");
      if (assign == std::string::npos)
        throw Error(Errc::BadTheory, "expected 'def name : type := expr'", span);
      std::string head = s.substr(4, assign - 4);
      std::size_t colon = head.find(':');
      if (colon == std::string::npos)
        throw Error(Errc::BadTheory, "expected 'def name : type := expr'", span);
      std::string name = trim(head.substr(0, colon));
      Type ty = parse_type(head.substr(colon + 1), filename, lineno, 4 + colon + 2);
      Expr body = Parser(th).expr(s.substr(assign + 2), filename, lineno, assign + 3);
      th.define(Const{name, ty, std::nullopt}, std::move(body));
      continue;
    }
    throw Error(Errc::BadTheory, "expected 'const' or 'def' declaration", span);
  }
  return th;
}

}  // namespace cttqe
