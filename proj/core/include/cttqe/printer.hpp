#ifndef CTTQE_PRINTER_HPP
#define CTTQE_PRINTER_HPP

#include <string>

#include "cttqe/construction.hpp"
#include "cttqe/expr.hpp"

namespace cttqe {

/// Compact type rendering, suitable for ascriptions: i, o, eps, i->o,
/// (i->o)->eps.
std::string print_type(const Type& t);

/// Parseable rendering with minimal parenthesization. Quantifier and
/// connective sugar is reconstructed, so parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// Rendering of a construction as its expression embedding.
std::string print_construction(const Construction& c);

}  // namespace cttqe

#endif
