#ifndef CTTQE_CONSTRUCTION_HPP
#define CTTQE_CONSTRUCTION_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cttqe/expr.hpp"

namespace cttqe {

enum class ConstructionKind { QuotedVar, QuotedConst, App, Abs, Quo };

/// Inductive type of syntax-tree values: quoted atoms closed under the
/// three syntax constructors. Covers improper constructions too.
class Construction {
 public:
  Construction() = default;

  static Construction quoted_var(Var v);
  static Construction quoted_const(Const c);
  static Construction app(Construction a, Construction b);
  static Construction abs(Construction a, Construction b);
  static Construction quo(Construction a);

  bool is_null() const { return node_ == nullptr; }
  ConstructionKind kind() const;

  const Var& var() const;  // QuotedVar
  const Const& con() const;  // QuotedConst
  const Construction& a() const;
  const Construction& b() const;

  bool operator==(const Construction& other) const;
  bool operator!=(const Construction& other) const { return !(*this == other); }
  std::size_t hash() const;

  std::size_t depth() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct Construction::Node {
  ConstructionKind kind;
  Var v;
  Const c;
  Construction a, b;
  std::size_t hash = 0;
  std::size_t depth = 1;
};

inline ConstructionKind Construction::kind() const { return node_->kind; }
inline const Var& Construction::var() const { return node_->v; }
inline const Const& Construction::con() const { return node_->c; }
inline const Construction& Construction::a() const { return node_->a; }
inline const Construction& Construction::b() const { return node_->b; }
inline std::size_t Construction::hash() const { return node_->hash; }
inline std::size_t Construction::depth() const { return node_->depth; }

struct ConstructionHash {
  std::size_t operator()(const Construction& c) const { return c.hash(); }
};

/// Result of classifying a construction: either it represents the syntax
/// tree of an eval-free expression of some type, or it does not, with the
/// first failing node recorded as a path of child indices.
struct Properness {
  bool proper = false;
  Type ty;                 // proper only
  Expr decoded;            // proper only
  std::string reason;      // improper only
  std::vector<int> path;   // improper only, child indices from the root
};

/// Syntax-tree encoding of an eval-free expression. Throws NotEvalFree.
Construction encode(const Expr& e);

/// Inverse of encode on proper constructions. Throws ImproperConstruction.
Expr decode(const Construction& c);

/// Total classifier; decode-and-typecheck, not range search.
Properness classify(const Construction& c);

/// Embedding into type-eps expressions: quoted atoms become Quote nodes
/// and the constructors become applications of app/abs/quo.
Expr as_expr(const Construction& c);

/// Literal inverse of as_expr. Matches the construction grammar exactly;
/// throws NotAConstructionLiteral on anything else (for example a variable
/// of type eps, or a quotation of a non-atom).
Construction from_expr(const Expr& e);

/// Lenient recogniser for construction-denoting normal forms: accepts the
/// strict literal grammar and additionally quotations of arbitrary
/// eval-free bodies (their value is the encoding of the body). Returns
/// nullopt when e does not statically denote a fixed construction.
std::optional<Construction> literal_value(const Expr& e);

}  // namespace cttqe

#endif
