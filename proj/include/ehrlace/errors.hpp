#pragma once

#include <stdexcept>
#include <string>

namespace ehrlace {

// Base class for all library errors. `code()` is the machine-readable
// reason string that the CLI puts into JSON payloads.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

struct DivisionError : Error {
  explicit DivisionError(const std::string& w) : Error("DivisionError", w) {}
};

struct DegenerateInput : Error {
  explicit DegenerateInput(const std::string& w) : Error("DegenerateInput", w) {}
};

struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& w) : Error("ConvergenceError", w) {}
};

struct ParamError : Error {
  explicit ParamError(const std::string& w) : Error("ParamError", w) {}
};

struct NotSymmetricError : Error {
  NotSymmetricError(const std::string& w, int coeff_index)
      : Error("NotSymmetric", w), index(coeff_index) {}
  int index;
};

struct DegreeError : Error {
  explicit DegreeError(const std::string& w) : Error("DegreeError", w) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error("PreconditionError", w) {}
};

struct PoleError : Error {
  explicit PoleError(const std::string& w) : Error("PoleError", w) {}
};

struct NoRelation : Error {
  explicit NoRelation(const std::string& w) : Error("NoRelation", w) {}
};

struct RankDeficient : Error {
  explicit RankDeficient(const std::string& w) : Error("RankDeficient", w) {}
};

struct NotPolynomialEhrhartForm : Error {
  explicit NotPolynomialEhrhartForm(const std::string& w)
      : Error("NotPolynomialEhrhartForm", w) {}
};

struct InterpolationMismatch : Error {
  explicit InterpolationMismatch(const std::string& w)
      : Error("InterpolationMismatch", w) {}
};

struct OverBudget : Error {
  explicit OverBudget(const std::string& w) : Error("OverBudget", w) {}
};

struct InternalError : Error {
  explicit InternalError(const std::string& w) : Error("InternalError", w) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error("UsageError", w) {}
};

}  // namespace ehrlace
