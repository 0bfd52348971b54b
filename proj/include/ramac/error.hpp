#ifndef RAMAC_ERROR_HPP
#define RAMAC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramac {

// Every failure mode the library can report, one code per contract error.
enum class Errc {
  DivisionByZero,
  FieldMismatch,
  ZeroElement,
  NonMonomialDivisor,
  ZeroRhs,
  NotFullyRamified,
  NonIncreasingUpperBreak,
  TowerMismatch,
  GaloisStabilityViolated,
  NonRepresentableInverse,
  DifferentMismatch,
  IdentityViolated,
  TraceIdealViolated,
  EulerIdentityViolated,
  CriterionViolated,
  InvalidClass,
  BadParameters,
  SamplerStarved,
  SyntaxError,
  UnknownVariable,
  SchemaError,
};

const char* errc_name(Errc c) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Parse failures carry the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(Errc code, const std::string& msg, std::size_t offset)
      : Error(code, msg + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Errc code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace ramac

#endif
