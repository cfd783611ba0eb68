#pragma once

#include <stdexcept>
#include <string>

namespace addchow {

// Base for all engine errors. `kind()` is a stable machine-readable tag
// (also used by the CLI to map errors to exit codes and JSON).
class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

#define ADDCHOW_ERROR(Name)                                                    \
    class Name : public Error {                                               \
      public:                                                                 \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}          \
    }

ADDCHOW_ERROR(ZeroFunction);
ADDCHOW_ERROR(DivisionByZero);
ADDCHOW_ERROR(UnsupportedFactorization);
ADDCHOW_ERROR(ZeroRadicand);
ADDCHOW_ERROR(InvalidParameter);
ADDCHOW_ERROR(FaceContainment);
ADDCHOW_ERROR(InadmissibleBoundaryPoint);
ADDCHOW_ERROR(ModulusViolation);
ADDCHOW_ERROR(NotOverXZero);

#undef ADDCHOW_ERROR

// Parse error with a source position.
class SyntaxError : public Error {
  public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error("SyntaxError", msg + " (at position " + std::to_string(pos) + ")"),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

  private:
    std::size_t pos_;
};

} // namespace addchow
