#ifndef CTTQE_CONSTANTS_HPP
#define CTTQE_CONSTANTS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "cttqe/expr.hpp"
#include "cttqe/type.hpp"

namespace cttqe::consts {

// Logical constants.
Const eq(const Type& alpha);      // eq^a : a->a->o, surface infix =
Const is_var();                   // is-var : eps->o
Const is_con();                   // is-con : eps->o
Const app_c();                    // app : eps->eps->eps
Const abs_c();                    // abs : eps->eps->eps
Const quo_c();                    // quo : eps->eps
Const is_expr(const Type& alpha); // is-expr^a : eps->o
Const is_free_in();               // is-free-in : eps->eps->o

// Defined constants (definitions live in the standard theory).
Const t_c();    // T : o
Const f_c();    // F : o
Const and_c();  // and : o->o->o, infix /\ in the surface syntax
Const imp_c();  // imp : o->o->o, infix => in the surface syntax
Const not_c();  // not : o->o, prefix ~ in the surface syntax
Const or_c();   // or : o->o->o, infix \/ in the surface syntax

// Arithmetic and the worked-example constants.
Const numeral(std::uint64_t n);  // 0, 1, 2, ... : i
Const succ();                    // S : i->i
Const plus();                    // plus : i->i->i, surface infix +
Const times();                   // times : i->i->i, surface infix *
Const deriv();                   // deriv : (i->i)->(i->i)
Const poly_diff_c();             // poly-diff : eps->eps->eps
Const is_poly_c();               // is-poly : eps->o
Const is_peano_c();              // is-peano : eps->o
Const make_implication();        // make-implication : eps->eps->eps
Const is_app_c();                // is-app : eps->o

// Reserved constant quoted as the default eps value.
Const undef();  // undef : i

/// True if the name denotes a decimal numeral.
bool is_numeral_name(const std::string& name);
std::optional<std::uint64_t> numeral_value(const Const& c);

}  // namespace cttqe::consts

#endif
