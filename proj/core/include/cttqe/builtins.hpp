#ifndef CTTQE_BUILTINS_HPP
#define CTTQE_BUILTINS_HPP

#include <optional>
#include <utility>

#include "cttqe/construction.hpp"
#include "cttqe/theory.hpp"

namespace cttqe {

// Pattern helpers over the desugared AST.
std::optional<std::pair<Var, Expr>> match_forall(const Expr& e);
std::optional<std::pair<Var, Expr>> match_exists(const Expr& e);
std::optional<Expr> match_not(const Expr& e);
/// (op-constant, lhs, rhs) for applications of a named binary constant.
std::optional<std::pair<Expr, Expr>> match_binary(const Expr& e, const char* const_name);

/// Polynomial syntax over the individuals: numerals, i-variables, plus,
/// times (literal-exponent powers arrive as nested products).
bool is_poly(const Construction& c);

/// First-order arithmetic formulas: equalities between {0, S, plus, times,
/// i-variable} terms, closed under not/and/or/imp and quantifiers over
/// i-variables only.
bool is_peano(const Construction& c);

/// Syntactic differentiation of a polynomial construction with respect to a
/// quoted i-variable, with 0/1 absorption and literal constant folding.
/// Throws NotAPolynomial / NotAVariable on bad inputs.
Construction poly_diff(const Construction& v, const Construction& x);

/// One computational reduction of an application of a Builtin constant to
/// construction-denoting arguments. Returns nullopt when the arguments are
/// not literals, when no rule applies, or when folding would not change
/// the expression.
std::optional<Expr> builtin_step(const Expr& e, const Theory& th);

}  // namespace cttqe

#endif
