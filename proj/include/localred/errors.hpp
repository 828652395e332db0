#pragma once

#include <stdexcept>
#include <string>

namespace localred {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PrecisionExhausted : public Error {
 public:
  explicit PrecisionExhausted(const std::string& what)
      : Error("precision exhausted: " + what) {}
};

class NonUnit : public Error {
 public:
  explicit NonUnit(const std::string& what) : Error("non-unit: " + what) {}
};

class DescriptorMismatch : public Error {
 public:
  explicit DescriptorMismatch(const std::string& what)
      : Error("descriptor mismatch: " + what) {}
};

class InvalidDescriptor : public Error {
 public:
  explicit InvalidDescriptor(const std::string& what)
      : Error("invalid descriptor: " + what) {}
};

class NotEisenstein : public Error {
 public:
  explicit NotEisenstein(const std::string& what)
      : Error("not Eisenstein: " + what) {}
};

class NotAGroup : public Error {
 public:
  explicit NotAGroup(const std::string& what) : Error("not a group: " + what) {}
};

class InconsistentGroup : public Error {
 public:
  explicit InconsistentGroup(const std::string& what)
      : Error("inconsistent group: " + what) {}
};

class NonIntegralResult : public Error {
 public:
  explicit NonIntegralResult(const std::string& what)
      : Error("non-integral result: " + what) {}
};

class ResidueFieldTooSmall : public Error {
 public:
  explicit ResidueFieldTooSmall(const std::string& what)
      : Error("residue field too small: " + what) {}
};

class NotSemiStableOverL : public Error {
 public:
  explicit NotSemiStableOverL(const std::string& what)
      : Error("not semi-stable over L: " + what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what)
      : Error("search budget exceeded: " + what) {}
};

class AssertionFailed : public Error {
 public:
  explicit AssertionFailed(const std::string& what)
      : Error("assertion failed: " + what) {}
};

class NotSupported : public Error {
 public:
  explicit NotSupported(const std::string& what)
      : Error("not supported: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace localred
