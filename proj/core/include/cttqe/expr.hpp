#ifndef CTTQE_EXPR_HPP
#define CTTQE_EXPR_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cttqe/error.hpp"
#include "cttqe/span.hpp"
#include "cttqe/type.hpp"

namespace cttqe {

/// A typed variable symbol. The same name at different types denotes
/// distinct variables.
struct Var {
  std::string name;
  Type ty;

  bool operator==(const Var& o) const { return name == o.name && ty == o.ty; }
  bool operator!=(const Var& o) const { return !(*this == o); }
  std::size_t hash() const;
};

/// A typed constant symbol. `family_index` distinguishes the members of the
/// is-expr family, whose type (eps->o) does not determine the index.
struct Const {
  std::string name;
  Type ty;
  std::optional<Type> family_index;

  bool operator==(const Const& o) const {
    if (name != o.name || ty != o.ty) return false;
    if (family_index.has_value() != o.family_index.has_value()) return false;
    return !family_index || *family_index == *o.family_index;
  }
  bool operator!=(const Const& o) const { return !(*this == o); }
  std::size_t hash() const;
};

enum class ExprKind { Var, Const, App, Abs, Quote, Eval };

enum class FreeStatus { Free, NotFree, Unknown };

const char* free_status_name(FreeStatus s);

/// Immutable, always well-typed expression tree. The smart constructors
/// reject ill-formed nodes eagerly, so every Expr value satisfies the
/// formation rules and carries its type.
class Expr {
 public:
  Expr() = default;

  static Expr var(Var v, std::optional<SourceSpan> span = {});
  static Expr var(std::string name, Type ty) { return var(Var{std::move(name), std::move(ty)}); }
  static Expr constant(Const c, std::optional<SourceSpan> span = {});
  static Expr constant(std::string name, Type ty) {
    return constant(Const{std::move(name), std::move(ty), std::nullopt});
  }
  /// Throws TypeMismatch unless fun : a->b and arg : a.
  static Expr app(Expr fun, Expr arg, std::optional<SourceSpan> span = {});
  /// Left-nested application f a1 a2 ... .
  static Expr app_n(Expr fun, std::initializer_list<Expr> args);
  static Expr abs(Var binder, Expr body, std::optional<SourceSpan> span = {});
  /// Throws QuoteNotEvalFree if body contains an evaluation.
  static Expr quote(Expr body, std::optional<SourceSpan> span = {});
  /// Throws EvalArgNotEpsilon unless arg : eps. The node has type `target`.
  static Expr eval(Expr arg, Type target, std::optional<SourceSpan> span = {});

  bool is_null() const { return node_ == nullptr; }

  ExprKind kind() const;
  const Type& type() const;

  // Var / Const accessors.
  const std::string& name() const;
  Var as_var() const;      // Var nodes and Abs binders
  Const as_const() const;  // Const nodes

  // Structure accessors.
  const Expr& fun() const;       // App
  const Expr& arg() const;       // App
  Var binder() const;            // Abs
  const Expr& body() const;      // Abs, Quote
  const Expr& eval_arg() const;  // Eval
  const Type& eval_target() const;

  const std::optional<SourceSpan>& span() const;
  Expr with_span(SourceSpan s) const;

  bool is_var() const { return kind() == ExprKind::Var; }
  bool is_const() const { return kind() == ExprKind::Const; }
  bool is_app() const { return kind() == ExprKind::App; }
  bool is_abs() const { return kind() == ExprKind::Abs; }
  bool is_quote() const { return kind() == ExprKind::Quote; }
  bool is_eval() const { return kind() == ExprKind::Eval; }
  bool is_atom() const { return is_var() || is_const(); }

  /// Structural equality; spans are ignored.
  bool operator==(const Expr& other) const;
  bool operator!=(const Expr& other) const { return !(*this == other); }

  std::size_t hash() const;

  /// Number of nodes.
  std::size_t size() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  ExprKind kind;
  Type ty;  // for Eval this is the target type
  std::string name;
  std::optional<Type> family_index;
  Type binder_ty;  // Abs only
  Expr a, b;
  std::size_t hash = 0;
  std::optional<SourceSpan> span;
};

inline ExprKind Expr::kind() const { return node_->kind; }
inline const Type& Expr::type() const { return node_->ty; }
inline const std::string& Expr::name() const { return node_->name; }
inline const Expr& Expr::fun() const { return node_->a; }
inline const Expr& Expr::arg() const { return node_->b; }
inline const Expr& Expr::body() const { return node_->a; }
inline const Expr& Expr::eval_arg() const { return node_->a; }
inline const Type& Expr::eval_target() const { return node_->ty; }
inline const std::optional<SourceSpan>& Expr::span() const { return node_->span; }
inline std::size_t Expr::hash() const { return node_->hash; }

struct ExprHash {
  std::size_t operator()(const Expr& e) const { return e.hash(); }
};
struct VarHash {
  std::size_t operator()(const Var& v) const { return v.hash(); }
};
struct ConstHash {
  std::size_t operator()(const Const& c) const { return c.hash(); }
};

/// The unique type assigned by the formation rules. Exprs are validated at
/// construction, so this is a cached lookup; it never fails on a live Expr.
inline const Type& type_of(const Expr& e) { return e.type(); }

/// True iff no evaluation node occurs anywhere in e.
bool is_eval_free(const Expr& e);

/// Tri-state freeness. On eval-free expressions this is the standard
/// syntactic notion and never returns Unknown. Quotations contribute
/// NotFree. An occurrence of x anywhere under an Eval node cannot be
/// discharged syntactically and yields Unknown, unless x also occurs free
/// outside an evaluation (Free dominates).
FreeStatus free_status(const Var& x, const Expr& e);

/// True if a Var node for x occurs anywhere in e, including inside
/// quotations and binder positions.
bool occurs_anywhere(const Var& x, const Expr& e);

/// All variables with status Free or Unknown, in first-occurrence order.
std::vector<Var> possibly_free_vars(const Expr& e);

/// Every name used by any atom or binder in e.
void collect_names(const Expr& e, std::vector<std::string>& out);

}  // namespace cttqe

#endif
