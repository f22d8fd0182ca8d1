#ifndef CTTQE_THEORY_HPP
#define CTTQE_THEORY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cttqe/constants.hpp"
#include "cttqe/expr.hpp"

namespace cttqe {

enum class ConstKind { Primitive, Defined, Builtin };

struct ConstantDef {
  std::string name;
  ConstKind kind = ConstKind::Primitive;
  bool family = false;  // type-indexed family (eq, is-expr, numerals)
  Type ty;              // meaningless for families
  Expr body;            // Defined only
  std::string builtin_rule;  // Builtin only
  std::string doc;
};

/// A constant signature: every constant the parser may resolve and every
/// definition the rewriter may unfold. Built once, then read-only.
class Theory {
 public:
  Theory() = default;

  void declare_primitive(const Const& c, std::string doc = "");
  void define(const Const& c, Expr body, std::string doc = "");
  void declare_builtin(const Const& c, std::string rule, std::string doc = "");
  void declare_family(const std::string& name, ConstKind kind, std::string builtin_rule,
                      std::string doc = "");

  bool has(const std::string& name) const;
  const ConstantDef* find(const std::string& name) const;

  /// Resolve a bare occurrence of `name`. Families that need an index
  /// (eq, is-expr) resolve to nullopt here; the parser handles their
  /// indexed surface forms.
  std::optional<Const> resolve(const std::string& name) const;

  /// Resolve an ascribed occurrence `name:ty`. Returns the constant when
  /// name is declared and the type matches, nullopt when the name is free
  /// for use as a variable. Throws TypeMismatch when a declared constant
  /// is ascribed a conflicting type.
  std::optional<Const> resolve_ascribed(const std::string& name, const Type& ty) const;

  /// True when c denotes a constant of this theory, families included.
  bool contains(const Const& c) const;

  bool is_defined(const Const& c) const;
  bool is_builtin(const Const& c) const;

  /// Definiens of a Defined constant. Throws NotDefined otherwise.
  Expr unfold(const Const& c) const;

  const std::vector<ConstantDef>& defs() const { return order_; }

 private:
  void insert(ConstantDef def);
  void check_body_closed(const Const& c, const Expr& body) const;

  std::map<std::string, std::size_t> index_;
  std::vector<ConstantDef> order_;
};

/// The built-in theory: the logical constants, the defined propositional
/// constants, numerals and the arithmetic signature, and the constants of
/// the worked examples with their computational rules.
const Theory& standard_theory();

/// Parse a theory file (`const name : type` and `def name : type := expr`
/// lines) on top of `base`. Throws BadTheory / ParseError.
Theory load_theory(const std::string& text, const Theory& base,
                   const std::string& filename = "<theory>");

}  // namespace cttqe

#endif
