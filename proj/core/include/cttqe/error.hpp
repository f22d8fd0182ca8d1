#ifndef CTTQE_ERROR_HPP
#define CTTQE_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "cttqe/span.hpp"

namespace cttqe {

enum class Errc {
  TypeMismatch,
  QuoteNotEvalFree,
  EvalArgNotEpsilon,
  NotEvalFree,
  ImproperConstruction,
  NotAConstructionLiteral,
  HoleNotEpsilon,
  HoleOutsideQuote,
  NotDefined,
  MissingConstant,
  NotAPolynomial,
  NotAVariable,
  SubstitutionBlocked,
  FuelExhausted,
  UnsupportedEquality,
  ParseError,
  IllTyped,
  HypothesisFailed,
  MismatchAfterRewrite,
  InstantiationBlocked,
  BadModel,
  BadTheory,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}
  Error(Errc code, std::string message, SourceSpan span)
      : std::runtime_error(span.to_string() + ": " + errc_name(code) + ": " + message),
        code_(code),
        span_(std::move(span)) {}

  Errc code() const { return code_; }
  const std::optional<SourceSpan>& span() const { return span_; }

 private:
  Errc code_;
  std::optional<SourceSpan> span_;
};

}  // namespace cttqe

#endif
