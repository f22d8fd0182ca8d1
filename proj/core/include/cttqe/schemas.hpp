#ifndef CTTQE_SCHEMAS_HPP
#define CTTQE_SCHEMAS_HPP

#include <vector>

#include "cttqe/construction.hpp"
#include "cttqe/theory.hpp"

namespace cttqe {

/// The closed schema formulas: excluded middle in both the plain and the
/// quasiquotation form, the first-order induction schema, and the meaning
/// formula relating poly-diff to deriv.
struct Schemas {
  Expr lem;
  Expr lem_quasi;
  Expr induction;
  Expr meaning_poly_diff;
};

/// Builds the schema formulas over the given theory. Throws MissingConstant
/// when the arithmetic signature is absent.
Schemas schema_constants(const Theory& th);

/// Universal instantiation at construction literals. Strips one outermost
/// universal quantifier per witness and substitutes simultaneously,
/// descending into evaluation arguments. Soundness is proved by
/// computation: every evaluation argument that contained an instantiated
/// variable must fold to a literal whose decoded expression has none of the
/// instantiated variables free. Throws InstantiationBlocked otherwise.
Expr instantiate_schema(const Expr& formula, const std::vector<Construction>& witnesses,
                        const Theory& th, std::uint64_t fuel = 10000);

/// instantiate_schema, then discharges a leading hypothesis: when the
/// result is H => B and every /\-conjunct of H normalizes to truth, returns
/// B. Throws HypothesisFailed when a conjunct does not.
Expr instantiate_discharging(const Expr& formula, const std::vector<Construction>& witnesses,
                             const Theory& th, std::uint64_t fuel = 10000);

}  // namespace cttqe

#endif
