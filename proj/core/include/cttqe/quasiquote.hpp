#ifndef CTTQE_QUASIQUOTE_HPP
#define CTTQE_QUASIQUOTE_HPP

#include <memory>
#include <optional>

#include "cttqe/construction.hpp"
#include "cttqe/expr.hpp"

namespace cttqe {

enum class QuasiKind { Hole, Var, Const, App, AbsVar, AbsHole, Quote };

/// Expression grammar extended with antiquotation holes. Quasi-expressions
/// exist only between the parser and expansion; the kernel never stores
/// them.
class QuasiExpr {
 public:
  QuasiExpr() = default;

  static QuasiExpr hole(Expr e, std::optional<SourceSpan> span = {});
  static QuasiExpr var(Var v);
  static QuasiExpr constant(Const c);
  static QuasiExpr app(QuasiExpr m, QuasiExpr n);
  static QuasiExpr abs(Var binder, QuasiExpr body);
  static QuasiExpr abs_hole(QuasiExpr hole, QuasiExpr body);  // hole kind required
  static QuasiExpr quote(QuasiExpr m);

  QuasiKind kind() const;
  const Expr& hole_expr() const;  // Hole
  const Var& var_sym() const;
  const Const& const_sym() const;
  const QuasiExpr& a() const;  // App fun, AbsHole hole, Quote body
  const QuasiExpr& b() const;  // App arg, Abs* body
  const std::optional<SourceSpan>& span() const;

  std::size_t hole_count() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct QuasiExpr::Node {
  QuasiKind kind;
  Expr hole;
  Var v;
  Const c;
  QuasiExpr a, b;
  std::size_t holes = 0;
  std::optional<SourceSpan> span;
};

inline QuasiKind QuasiExpr::kind() const { return node_->kind; }
inline const Expr& QuasiExpr::hole_expr() const { return node_->hole; }
inline const Var& QuasiExpr::var_sym() const { return node_->v; }
inline const Const& QuasiExpr::const_sym() const { return node_->c; }
inline const QuasiExpr& QuasiExpr::a() const { return node_->a; }
inline const QuasiExpr& QuasiExpr::b() const { return node_->b; }
inline const std::optional<SourceSpan>& QuasiExpr::span() const { return node_->span; }
inline std::size_t QuasiExpr::hole_count() const { return node_->holes; }

/// Zero-hole embedding of an eval-free expression. Throws NotEvalFree.
QuasiExpr embed(const Expr& e);

/// The translation to a type-eps expression: holes pass through, atoms
/// become quoted atoms, applications and abstractions become applications
/// of app/abs, inner quotations become quo. Throws HoleNotEpsilon.
Expr expand(const QuasiExpr& m);

}  // namespace cttqe

#endif
