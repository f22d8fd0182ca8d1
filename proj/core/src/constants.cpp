#include "cttqe/constants.hpp"

namespace cttqe::consts {

namespace {

const Type& ti() {
  static const Type t = Type::iota();
  return t;
}
const Type& to() {
  static const Type t = Type::omicron();
  return t;
}
const Type& te() {
  static const Type t = Type::epsilon();
  return t;
}

Type bin(const Type& a, const Type& b, const Type& c) { return Type::fun(a, Type::fun(b, c)); }

}  // namespace

Const eq(const Type& alpha) { return Const{"eq", bin(alpha, alpha, to()), std::nullopt}; }
Const is_var() { return Const{"is-var", Type::fun(te(), to()), std::nullopt}; }
Const is_con() { return Const{"is-con", Type::fun(te(), to()), std::nullopt}; }
Const app_c() { return Const{"app", bin(te(), te(), te()), std::nullopt}; }
Const abs_c() { return Const{"abs", bin(te(), te(), te()), std::nullopt}; }
Const quo_c() { return Const{"quo", Type::fun(te(), te()), std::nullopt}; }
Const is_expr(const Type& alpha) { return Const{"is-expr", Type::fun(te(), to()), alpha}; }
Const is_free_in() { return Const{"is-free-in", bin(te(), te(), to()), std::nullopt}; }

Const t_c() { return Const{"T", to(), std::nullopt}; }
Const f_c() { return Const{"F", to(), std::nullopt}; }
Const and_c() { return Const{"and", bin(to(), to(), to()), std::nullopt}; }
Const imp_c() { return Const{"imp", bin(to(), to(), to()), std::nullopt}; }
Const not_c() { return Const{"not", Type::fun(to(), to()), std::nullopt}; }
Const or_c() { return Const{"or", bin(to(), to(), to()), std::nullopt}; }

Const numeral(std::uint64_t n) { return Const{std::to_string(n), ti(), std::nullopt}; }
Const succ() { return Const{"S", Type::fun(ti(), ti()), std::nullopt}; }
Const plus() { return Const{"plus", bin(ti(), ti(), ti()), std::nullopt}; }
Const times() { return Const{"times", bin(ti(), ti(), ti()), std::nullopt}; }
Const deriv() {
  Type f = Type::fun(ti(), ti());
  return Const{"deriv", Type::fun(f, f), std::nullopt};
}
Const poly_diff_c() { return Const{"poly-diff", bin(te(), te(), te()), std::nullopt}; }
Const is_poly_c() { return Const{"is-poly", Type::fun(te(), to()), std::nullopt}; }
Const is_peano_c() { return Const{"is-peano", Type::fun(te(), to()), std::nullopt}; }
Const make_implication() { return Const{"make-implication", bin(te(), te(), te()), std::nullopt}; }
Const is_app_c() { return Const{"is-app", Type::fun(te(), to()), std::nullopt}; }

Const undef() { return Const{"undef", ti(), std::nullopt}; }

bool is_numeral_name(const std::string& name) {
  if (name.empty()) return false;
  for (char ch : name)
    if (ch < '0' || ch > '9') return false;
  return true;
}

std::optional<std::uint64_t> numeral_value(const Const& c) {
  if (!is_numeral_name(c.name) || !c.ty.is_iota()) return std::nullopt;
  return std::stoull(c.name);
}

}  // namespace cttqe::consts
