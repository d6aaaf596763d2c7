#pragma once

#include <stdexcept>
#include <string>

namespace ck {

enum class Err {
  BasisMismatch,
  NotARoot,
  NotReduced,
  NotNormalized,
  NotReducible,
  NotBalanced,
  OutOfRange,
  WrongBasis,
  WrongK,
  NotAdmissible,
  NotSimpleSystem,
  UnrecognizedDiagram,
  ZeroArea,
  ParseError,
};

const char* err_name(Err e);

class DomainError : public std::runtime_error {
 public:
  DomainError(Err code, const std::string& what)
      : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw DomainError(code, what); }

}  // namespace ck
