#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lmu {

// Raised when an operation's input contract is violated (bad index,
// open term where a closed one is required, unknown builtin name, ...).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised by operations that have no way to report exhaustion in their
// result type (the demo runner); budgeted normalizers return a flag instead.
struct BudgetExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the surface-syntax parsers, with 1-based source coordinates.
struct ParseError : PreconditionError {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : PreconditionError(msg + " (line " + std::to_string(line_) + ", column " +
                          std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
};

// Step and size limits for a normalization run. Normalization stops
// with an "exhausted" flag once it would apply more than max_steps
// rewrite steps or once an intermediate term grows past max_term_size
// nodes. Both bounds are strictly positive.
struct Budget {
  std::int64_t max_steps;
  std::int64_t max_term_size;

  Budget(std::int64_t steps, std::int64_t size)
      : max_steps(steps), max_term_size(size) {
    if (steps <= 0 || size <= 0)
      throw PreconditionError("budget bounds must be strictly positive");
  }

  static Budget standard() { return Budget(10000, 100000); }
  static Budget fast() { return Budget(2000, 20000); }
  static Budget thorough() { return Budget(200000, 2000000); }
};

// Three-valued outcome of budgeted convertibility checking. Unknown is a
// first-class answer: it means a normalization budget ran out, never that
// the terms were proved different.
enum class Verdict { Equal, Distinct, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Equal: return "Equal";
    case Verdict::Distinct: return "Distinct";
    default: return "Unknown";
  }
}

}  // namespace lmu
