#pragma once

#include <stdexcept>
#include <string>

namespace phaseshift {

enum class ErrorCode {
  Domain,        // argument outside its admissible range
  Precondition,  // formula used outside the domain where it is valid
  Degenerate,    // result undefined (zero complex argument, empty region, zero norm)
  Pole,          // vanishing denominator
  Quadrature,    // integration failed to converge
  Usage,         // unknown names, malformed requests
  Parse,         // malformed configuration documents
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace phaseshift
