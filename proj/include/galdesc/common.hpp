#pragma once

#include <stdexcept>
#include <string>

namespace galdesc {

// Group elements are indices into a Cayley table, 0..order-1.
// Catalog groups and every group constructed by the engine place the
// identity at index 0; raw user tables may put it anywhere.
using Elem = int;

// Base class for all failures raised by the engine.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid input: malformed tables, maps that are not homomorphisms,
// preconditions that do not hold.
class ValidationError : public Error {
public:
  using Error::Error;
};

// A configured search budget was exceeded; the message names the bound.
class BudgetError : public Error {
public:
  using Error::Error;
};

// A statement that is a theorem over validated inputs failed to hold.
// This always indicates a bug in the engine, never bad input.
class TheoremViolation : public Error {
public:
  using Error::Error;
};

// Guardrails for the enumeration engines. Exceeding a budget raises
// BudgetError instead of silently truncating results.
struct SearchBudget {
  long long max_candidates = 10'000'000;  // generator-image tuples per search
  int max_total_order = 200;              // largest group the engine will build
};

}  // namespace galdesc
