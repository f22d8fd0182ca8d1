#include "cttqe/printer.hpp"

#include <optional>

#include "cttqe/constants.hpp"

namespace cttqe {

namespace {

// Precedence levels, higher binds tighter. Binders and their bodies sit at
// zero and extend as far right as possible.
constexpr int kBinder = 0;
constexpr int kImp = 10;
constexpr int kOr = 20;
constexpr int kAnd = 30;
constexpr int kEq = 40;
constexpr int kPlus = 50;
constexpr int kStar = 60;
constexpr int kNot = 90;
constexpr int kApp = 100;
constexpr int kAtom = 200;

struct Binary {
  const char* op;
  int prec;
};

std::optional<Binary> binary_head(const Expr& e) {
  if (!e.is_app() || !e.fun().is_app() || !e.fun().fun().is_const()) return std::nullopt;
  Const c = e.fun().fun().as_const();
  if (c.family_index) return std::nullopt;
  if (c.name == "eq") return Binary{"=", kEq};
  if (c.name == "and") return Binary{"/\\", kAnd};
  if (c.name == "or") return Binary{"\\/", kOr};
  if (c.name == "imp") return Binary{"=>", kImp};
  if (c.name == "plus") return Binary{"+", kPlus};
  if (c.name == "times") return Binary{"*", kStar};
  return std::nullopt;
}

// forall x:t. B  is  (\x:t.T) = (\x:t.B)  with the same binder on both sides.
std::optional<std::pair<Var, Expr>> forall_pattern(const Expr& e) {
  auto bin = binary_head(e);
  if (!bin || std::string(bin->op) != "=") return std::nullopt;
  const Expr& lhs = e.fun().arg();
  const Expr& rhs = e.arg();
  if (!lhs.is_abs() || !rhs.is_abs()) return std::nullopt;
  if (lhs.binder() != rhs.binder()) return std::nullopt;
  if (!(lhs.body().is_const() && lhs.body().as_const() == consts::t_c())) return std::nullopt;
  return std::make_pair(rhs.binder(), rhs.body());
}

bool is_not_app(const Expr& e) {
  return e.is_app() && e.fun().is_const() && e.fun().as_const() == consts::not_c();
}

std::optional<std::pair<Var, Expr>> exists_pattern(const Expr& e) {
  if (!is_not_app(e)) return std::nullopt;
  auto all = forall_pattern(e.arg());
  if (!all) return std::nullopt;
  if (!is_not_app(all->second)) return std::nullopt;
  return std::make_pair(all->first, all->second.arg());
}

void print(const Expr& e, int min_prec, std::string& out);

template <typename F>
void wrap_if(bool need, std::string& out, F&& body) {
  if (need) {
    out += "(";
    body();
    out += ")";
  } else {
    body();
  }
}

std::string atom_name(const Const& c) {
  if (c.family_index) {
    Type idx = *c.family_index;
    std::string i = idx.is_fun() ? "(" + print_type(idx) + ")" : print_type(idx);
    return c.name + "^" + i;
  }
  if (c.name == "eq") {
    Type idx = c.ty.domain();
    std::string i = idx.is_fun() ? "(" + print_type(idx) + ")" : print_type(idx);
    return "eq^" + i;
  }
  return c.name;
}

void print(const Expr& e, int min_prec, std::string& out) {
  switch (e.kind()) {
    case ExprKind::Var:
      out += e.name() + ":";
      out += e.type().is_fun() ? "(" + print_type(e.type()) + ")" : print_type(e.type());
      return;
    case ExprKind::Const:
      out += atom_name(e.as_const());
      return;
    case ExprKind::Quote: {
      out += "'[ ";
      print(e.body(), kBinder, out);
      out += " ]";
      return;
    }
    case ExprKind::Eval: {
      out += "[[ ";
      print(e.eval_arg(), kBinder, out);
      out += " ]]_";
      const Type& t = e.eval_target();
      out += t.is_fun() ? "(" + print_type(t) + ")" : print_type(t);
      return;
    }
    case ExprKind::Abs: {
      wrap_if(kBinder < min_prec, out, [&] {
        Var b = e.binder();
        out += "\\" + b.name + ":";
        out += b.ty.is_fun() ? "(" + print_type(b.ty) + ")" : print_type(b.ty);
        out += " . ";
        print(e.body(), kBinder, out);
      });
      return;
    }
    case ExprKind::App: {
      if (auto q = forall_pattern(e)) {
        wrap_if(kBinder < min_prec, out, [&] {
          out += "forall " + q->first.name + ":";
          out += q->first.ty.is_fun() ? "(" + print_type(q->first.ty) + ")"
                                      : print_type(q->first.ty);
          out += " . ";
          print(q->second, kBinder, out);
        });
        return;
      }
      if (auto q = exists_pattern(e)) {
        wrap_if(kBinder < min_prec, out, [&] {
          out += "exists " + q->first.name + ":";
          out += q->first.ty.is_fun() ? "(" + print_type(q->first.ty) + ")"
                                      : print_type(q->first.ty);
          out += " . ";
          print(q->second, kBinder, out);
        });
        return;
      }
      if (auto bin = binary_head(e)) {
        wrap_if(bin->prec < min_prec, out, [&] {
          // Left-associative: the left child prints at the operator level,
          // the right child one tighter. => is right-associative.
          bool right_assoc = std::string(bin->op) == "=>";
          print(e.fun().arg(), right_assoc ? bin->prec + 1 : bin->prec, out);
          out += " ";
          out += bin->op;
          out += " ";
          print(e.arg(), right_assoc ? bin->prec : bin->prec + 1, out);
        });
        return;
      }
      if (is_not_app(e)) {
        wrap_if(kNot < min_prec, out, [&] {
          out += "~";
          print(e.arg(), kNot, out);
        });
        return;
      }
      wrap_if(kApp < min_prec, out, [&] {
        print(e.fun(), kApp, out);
        out += " ";
        print(e.arg(), kApp + 1, out);
      });
      return;
    }
  }
}

}  // namespace

std::string print_type(const Type& t) { return t.to_string(); }

std::string print_expr(const Expr& e) {
  std::string out;
  print(e, kBinder, out);
  return out;
}

std::string print_construction(const Construction& c) { return print_expr(as_expr(c)); }

}  // namespace cttqe
