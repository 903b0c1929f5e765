#pragma once

#include <stdexcept>
#include <string>

namespace uptail {

// Raised by the edge-list reader. `kind` stays machine-readable so callers
// (and the CLI exit-code mapping) do not have to parse the message.
enum class ParseErrorKind {
    MalformedLine,
    IndexOutOfRange,
    DuplicateEdge,
    SelfLoop,
};

class ParseError : public std::runtime_error {
  public:
    ParseError(ParseErrorKind kind, int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          kind_(kind),
          line_(line) {}

    ParseErrorKind kind() const { return kind_; }
    int line() const { return line_; }

  private:
    ParseErrorKind kind_;
    int line_;
};

// A structural cap was exceeded (core size, homomorphism table, ...).
class CapExceeded : public std::runtime_error {
  public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// A constrained problem has no solution (unsaturable side of a bipartite
// witness, level equation with an identically-constant slice, ...).
class InfeasibleError : public std::runtime_error {
  public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace uptail
