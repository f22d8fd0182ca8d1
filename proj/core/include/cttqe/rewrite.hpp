#ifndef CTTQE_REWRITE_HPP
#define CTTQE_REWRITE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cttqe/construction.hpp"
#include "cttqe/theory.hpp"

namespace cttqe {

enum class RuleId { Beta, Disquote, QuoteNorm, EvalBeta, BuiltinFold, DefUnfold };

const char* rule_name(RuleId r);
std::optional<RuleId> rule_from_name(const std::string& name);

/// One reduction: the rule applied and the path of child indices from the
/// root to the contracted subterm (App: 0 fun, 1 arg; Abs/Quote/Eval: 0).
struct Step {
  RuleId rule;
  std::vector<int> path;
};

struct StepResult {
  Expr result;
  Step step;
};

struct RewriteReport {
  Expr result;
  std::vector<Step> steps;
  std::uint64_t fuel_used = 0;
};

/// Capture-avoiding substitution of A for the free occurrences of x in B.
/// Quotation bodies are never entered; an occurrence of x anywhere under an
/// evaluation raises SubstitutionBlocked. Bound variables are renamed with
/// the smallest unused numeric suffix on capture.
Expr substitute(const Expr& body, const Var& x, const Expr& replacement);

/// Leftmost-outermost reduction step, or nullopt at normal form. Inside
/// evaluation arguments, folding runs before the disquotation and eval-beta
/// side conditions are tested.
std::optional<StepResult> step(const Expr& e, const Theory& th);

/// Iterated step. Throws FuelExhausted when more than `fuel` steps are
/// needed.
RewriteReport normalize(const Expr& e, const Theory& th, std::uint64_t fuel = 10000);

/// Reapply a recorded step: the rule must match what fires at that path.
Expr apply_rule_at(const Expr& e, RuleId rule, const std::vector<int>& path, const Theory& th);

/// Freeness of a quoted variable in the expression a construction
/// represents: decided on the decoded expression when proper, NotFree when
/// the variable's quotation occurs nowhere, Unknown otherwise.
FreeStatus is_free_in(const Construction& quoted_var, const Construction& c);

std::string path_to_string(const std::vector<int>& path);

}  // namespace cttqe

#endif
