#ifndef CTTQE_TRACE_HPP
#define CTTQE_TRACE_HPP

#include <string>
#include <vector>

#include "cttqe/parser.hpp"
#include "cttqe/rewrite.hpp"

namespace cttqe {

enum class JustKind { Rewrite, Symmetric, DefUnfold, MeaningFormula };

struct Justification {
  JustKind kind = JustKind::Rewrite;
  RuleId rule = RuleId::Beta;  // Rewrite / Symmetric
  std::string unfold_name;     // DefUnfold
  std::string schema_name;     // MeaningFormula
  std::vector<std::pair<std::string, Expr>> instantiations;
  std::string to_string() const;
};

struct TraceStep {
  Justification just;
  Expr expr;
};

/// A user-supplied equational derivation: a start expression and justified
/// steps, all at one type.
struct EqTrace {
  Expr start;
  std::vector<TraceStep> steps;
};

struct TraceReport {
  bool verified = false;
  std::size_t failed_step = 0;  // 1-based line number of the step that failed
  std::string reason;
};

/// Check a derivation step by step. Rewrite and Symmetric steps are
/// verified by normalize-equality of the designated differing subterms,
/// DefUnfold by definitional expansion, MeaningFormula by instantiating the
/// named schema, discharging its hypotheses by computation, and matching
/// the resulting equation against the step.
TraceReport check_trace(const EqTrace& t, const Theory& th, std::uint64_t fuel = 10000);

/// Parse the trace file format: numbered lines `N: expr` for the start and
/// `N: justification | expr` afterwards. Justification tags: beta,
/// disquote, quotenorm, evalbeta, fold, unfold NAME, sym TAG,
/// meaning NAME v := expr, ... .
EqTrace parse_trace(const std::string& text, const Parser& parser,
                    const std::string& filename = "<trace>");

}  // namespace cttqe

#endif
