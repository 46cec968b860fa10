#ifndef A2CK_ERRORS_HPP
#define A2CK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace a2ck {

// Broad failure categories; the CLI maps them to exit codes.
enum class ErrorKind {
  syntax,       // malformed input text
  validation,   // well-formed input violating a mathematical contract
  consistency,  // internal cross-check failed: a bug, never a data problem
  usage,        // bad arguments, I/O failure, dimension mismatch
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

struct SyntaxError : Error {
  SyntaxError(std::size_t line, const std::string& what)
      : Error(ErrorKind::syntax,
              "line " + std::to_string(line) + ": " + what),
        line(line) {}
  std::size_t line;
};

struct UsageError : Error {
  explicit UsageError(const std::string& what)
      : Error(ErrorKind::usage, what) {}
};

struct ConsistencyFailure : Error {
  explicit ConsistencyFailure(const std::string& what)
      : Error(ErrorKind::consistency, what) {}
};

}  // namespace a2ck

#endif
