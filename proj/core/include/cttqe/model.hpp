#ifndef CTTQE_MODEL_HPP
#define CTTQE_MODEL_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cttqe/theory.hpp"
#include "cttqe/value.hpp"

namespace cttqe {

/// A standard model with a finite individual domain. Logical constants are
/// interpreted by fixed rules and cannot be overridden; primitive
/// non-logical constants may be given values, all others fall back to the
/// deterministic per-type default.
struct Model {
  const Theory* theory = &standard_theory();
  std::size_t iota_size = 2;
  std::unordered_map<Const, Value, ConstHash> interpretation;

  /// Depth bound for bounded enumeration of the construction domain when
  /// equality or quantification reaches an eps domain. Unset means such
  /// equalities raise UnsupportedEquality.
  std::optional<std::size_t> epsilon_depth;

  /// Atom pool seeding construction enumeration (Var and Const leaves).
  std::vector<Expr> syntax_atoms;

  /// Valuation step bound per top-level valuate call. Bounded quantifier
  /// enumeration over eps domains is quadratic in the enumeration size, so
  /// the default is generous.
  std::uint64_t fuel = 64'000'000;

  Value default_value(const Type& ty) const;
};

/// Total map from variables to values: a finite override over the model's
/// per-type defaults. Functional updates share structure with the source.
class Assignment {
 public:
  explicit Assignment(const Model& m) : model_(&m) {}

  Value get(const Var& x) const {
    if (overrides_) {
      auto it = overrides_->find(x);
      if (it != overrides_->end()) return it->second;
    }
    return model_->default_value(x.ty);
  }

  Assignment set(const Var& x, Value v) const {
    Assignment out(*model_);
    auto m = overrides_ ? std::make_shared<Map>(*overrides_) : std::make_shared<Map>();
    (*m)[x] = std::move(v);
    out.overrides_ = std::move(m);
    return out;
  }

  const Model& model() const { return *model_; }

 private:
  using Map = std::unordered_map<Var, Value, VarHash>;
  const Model* model_;
  std::shared_ptr<const Map> overrides_;
};

/// Parse a model description: an `iota_size N` line and `const name = value`
/// lines (individuals by index, truth values by true/false, functions by
/// finite `{ v -> v, ... }` tables, constructions by literal expressions).
Model load_model(const std::string& text, const Theory& theory,
                 const std::string& filename = "<model>");

/// Parse a single assignment binding `name:type = value` (CLI --assign).
std::pair<Var, Value> parse_assignment(const std::string& text, const Model& m);

std::string print_value(const Value& v);

}  // namespace cttqe

#endif
