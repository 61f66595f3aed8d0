#ifndef SRDELTA_ERRORS_HPP
#define SRDELTA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace srdelta {

// Input-side failures: malformed files, violated preconditions, unsupported
// requests. Mapped to exit code 1 by the CLI.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Internal consistency failures: dual-route disagreement, a theorem check
// firing, a length that should be finite but is not. These always indicate a
// bug in this library, never bad input. Mapped to exit code 2 by the CLI.
class InternalBugError : public std::logic_error {
 public:
  explicit InternalBugError(const std::string& msg) : std::logic_error(msg) {}
};

struct EmptyInput : InputError {
  explicit EmptyInput(const std::string& m) : InputError("EmptyInput: " + m) {}
};

struct VertexOutOfRange : InputError {
  explicit VertexOutOfRange(const std::string& m)
      : InputError("VertexOutOfRange: " + m) {}
};

struct IsolatedVertexPolicyViolation : InputError {
  explicit IsolatedVertexPolicyViolation(const std::string& m)
      : InputError("IsolatedVertexPolicyViolation: " + m) {}
};

struct NonSquareFreeInput : InputError {
  explicit NonSquareFreeInput(const std::string& m)
      : InputError("NonSquareFreeInput: " + m) {}
};

struct ZeroOrUnitIdeal : InputError {
  explicit ZeroOrUnitIdeal(const std::string& m)
      : InputError("ZeroOrUnitIdeal: " + m) {}
};

struct UnsupportedField : InputError {
  explicit UnsupportedField(const std::string& m)
      : InputError("UnsupportedField: " + m) {}
};

struct NotAFace : InputError {
  explicit NotAFace(const std::string& m) : InputError("NotAFace: " + m) {}
};

struct NotPure : InputError {
  explicit NotPure(const std::string& m) : InputError("NotPure: " + m) {}
};

struct NotMixed : InputError {
  explicit NotMixed(const std::string& m) : InputError("NotMixed: " + m) {}
};

struct TooManyMonomials : InputError {
  explicit TooManyMonomials(const std::string& m)
      : InputError("TooManyMonomials: " + m) {}
};

struct MixedInputUnsupported : InputError {
  explicit MixedInputUnsupported(const std::string& m)
      : InputError("MixedInputUnsupported: " + m) {}
};

struct ParseError : InputError {
  ParseError(int line, const std::string& m)
      : InputError("ParseError: line " + std::to_string(line) + ": " + m) {}
};

struct NonFiniteLength : InternalBugError {
  explicit NonFiniteLength(const std::string& m)
      : InternalBugError("NonFiniteLength: " + m) {}
};

struct CrossValidationMismatch : InternalBugError {
  explicit CrossValidationMismatch(const std::string& m)
      : InternalBugError("CrossValidationMismatch: " + m) {}
};

struct InterpolationMismatch : InternalBugError {
  explicit InterpolationMismatch(const std::string& m)
      : InternalBugError("InterpolationMismatch: " + m) {}
};

struct TheoremViolation : InternalBugError {
  explicit TheoremViolation(const std::string& m)
      : InternalBugError("TheoremViolation: " + m) {}
};

}  // namespace srdelta

#endif  // SRDELTA_ERRORS_HPP
