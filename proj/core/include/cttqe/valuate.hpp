#ifndef CTTQE_VALUATE_HPP
#define CTTQE_VALUATE_HPP

#include <memory>
#include <optional>
#include <vector>

#include "cttqe/model.hpp"

namespace cttqe {

/// Mutable state shared by one top-level valuation and every closure it
/// creates: the fuel counter, the bounded-enumeration flag, and a cache for
/// defined-constant values.
struct EvalState {
  std::uint64_t fuel = 1'000'000;
  bool used_bounded_epsilon = false;
  std::unordered_map<Const, Value, ConstHash> const_cache;
};

struct EvalCtx {
  const Model* model;
  std::shared_ptr<EvalState> state;

  static EvalCtx fresh(const Model& m) {
    EvalCtx c{&m, std::make_shared<EvalState>()};
    c.state->fuel = m.fuel;
    return c;
  }
};

/// The valuation function. Pure given (e, phi) and the model; throws
/// FuelExhausted past the model's step bound and UnsupportedEquality when
/// an equality requires enumerating an eps domain without a depth bound.
Value valuate(const Expr& e, const Model& m, const Assignment& phi);
Value valuate_ctx(const Expr& e, const Assignment& phi, EvalCtx& ctx);

/// Equality of two values of type ty. Functions compare pointwise over the
/// enumerated domain.
bool values_equal(const Value& a, const Value& b, const Type& ty, EvalCtx& ctx);

/// All values of a type, when finitely enumerable under the context's
/// policy. eps enumerates boundedly when the model carries a depth bound.
std::optional<std::vector<Value>> enumerate_domain(const Type& ty, EvalCtx& ctx,
                                                   std::size_t limit = 65536);

/// All constructions of depth <= depth over the given atom leaves
/// (Var/Const expressions).
std::vector<Construction> enumerate_constructions(const std::vector<Expr>& atoms,
                                                  std::size_t depth);

/// Collect every distinct atom (Var or Const leaf) of e, quotations
/// included, preserving first-occurrence order. Used to seed construction
/// enumeration.
void collect_syntax_atoms(const Expr& e, std::vector<Expr>& out);

struct Sampler {
  std::size_t epsilon_depth = 3;
  std::size_t max_assignments = 4096;
  std::size_t samples_per_fun_var = 8;
  std::uint64_t seed = 0x5eed1e55ULL;
};

struct Verdict {
  bool holds = false;
  std::size_t samples = 0;
  bool approximate = false;
  std::vector<std::pair<Var, Value>> counterexample;
};

/// Validity check: exhaustive over assignments when every free variable
/// ranges over an enumerable domain, sampled (and marked approximate)
/// otherwise. eps-typed variables range over constructions up to the
/// sampler's depth bound plus the encodings of quoted subterms.
Verdict check_valid(const Expr& formula, const Model& m, const Sampler& s = {});

}  // namespace cttqe

#endif
