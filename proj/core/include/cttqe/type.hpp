#ifndef CTTQE_TYPE_HPP
#define CTTQE_TYPE_HPP

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>

namespace cttqe {

enum class TypeKind { Iota, Omicron, Epsilon, Fun };

/// Immutable simple type: i | o | eps | a -> b.
/// Structural equality is the only equality on types.
class Type {
 public:
  Type() : Type(iota()) {}

  static Type iota();
  static Type omicron();
  static Type epsilon();
  static Type fun(Type domain, Type codomain);

  /// a -> b -> ... -> result, associating to the right.
  static Type fun_n(std::initializer_list<Type> domains, Type result);

  TypeKind kind() const { return node_->kind; }
  bool is_iota() const { return kind() == TypeKind::Iota; }
  bool is_omicron() const { return kind() == TypeKind::Omicron; }
  bool is_epsilon() const { return kind() == TypeKind::Epsilon; }
  bool is_fun() const { return kind() == TypeKind::Fun; }

  Type domain() const;    // Fun only
  Type codomain() const;  // Fun only

  /// True if eps occurs anywhere in the type.
  bool mentions_epsilon() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }

  std::size_t hash() const { return node_->hash; }

  /// Compact rendering: "i", "o", "eps", "i->o", "(i->o)->eps".
  std::string to_string() const;

 private:
  struct Node {
    TypeKind kind;
    std::shared_ptr<const Node> dom, cod;
    std::size_t hash;
  };

  explicit Type(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TypeHash {
  std::size_t operator()(const Type& t) const { return t.hash(); }
};

}  // namespace cttqe

#endif
