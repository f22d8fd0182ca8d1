#ifndef CTTQE_VALUE_HPP
#define CTTQE_VALUE_HPP

#include <cstdint>
#include <functional>
#include <memory>

#include "cttqe/construction.hpp"
#include "cttqe/type.hpp"

namespace cttqe {

/// Semantic domain element. Functions are intensional: a total map
/// represented by a closure, never an enumerated graph, so eps-domain
/// functions are representable.
class Value {
 public:
  enum class Kind { Individual, Truth, Constr, Func };

  using Fn = std::function<Value(const Value&)>;

  Value() = default;

  static Value individual(std::uint64_t index) {
    Value v;
    v.kind_ = Kind::Individual;
    v.index_ = index;
    return v;
  }
  static Value truth(bool b) {
    Value v;
    v.kind_ = Kind::Truth;
    v.truth_ = b;
    return v;
  }
  static Value constr(Construction c) {
    Value v;
    v.kind_ = Kind::Constr;
    v.constr_ = std::move(c);
    return v;
  }
  static Value func(Type dom, Type cod, Fn fn) {
    Value v;
    v.kind_ = Kind::Func;
    v.dom_ = std::move(dom);
    v.cod_ = std::move(cod);
    v.fn_ = std::make_shared<const Fn>(std::move(fn));
    return v;
  }

  Kind kind() const { return kind_; }
  bool is_truth() const { return kind_ == Kind::Truth; }
  bool is_func() const { return kind_ == Kind::Func; }

  std::uint64_t index() const { return index_; }
  bool truth_value() const { return truth_; }
  const Construction& construction() const { return constr_; }
  const Type& domain() const { return dom_; }
  const Type& codomain() const { return cod_; }

  Value apply(const Value& arg) const { return (*fn_)(arg); }

  /// Intensional identity shortcut for closures.
  bool same_closure(const Value& other) const {
    return kind_ == Kind::Func && other.kind_ == Kind::Func && fn_ == other.fn_;
  }

 private:
  Kind kind_ = Kind::Truth;
  std::uint64_t index_ = 0;
  bool truth_ = false;
  Construction constr_;
  Type dom_, cod_;
  std::shared_ptr<const Fn> fn_;
};

}  // namespace cttqe

#endif
